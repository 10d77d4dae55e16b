#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace fmetric {

enum class GaugeKind { Log, NegReciprocal, Table };

/// A knot (t, f(t)) of a tabulated gauge.
struct Knot {
    double t;
    double value;
};

/// A gauge pair (f, alpha): a non-decreasing f on (0, inf) diverging to -inf
/// at 0+, together with a nonnegative shift alpha.
///
/// Table gauges interpolate linearly between knots and refuse to extrapolate.
/// Gauges are immutable values.
class Gauge {
public:
    static Gauge log(double alpha = 0.0);
    static Gauge neg_reciprocal(double alpha = 0.0);
    /// Knots must be strictly increasing in t, all t > 0, at least two knots.
    static Gauge table(std::vector<Knot> knots, double alpha = 0.0);

    GaugeKind kind() const noexcept { return kind_; }
    double alpha() const noexcept { return alpha_; }
    std::span<const Knot> knots() const noexcept { return knots_; }

    /// Same shape, different shift.
    Gauge with_alpha(double alpha) const;

    /// f(t). Throws DomainError for t <= 0 and OutOfRangeError for table
    /// probes outside the knot range.
    double operator()(double t) const;

    /// True for gauges known to be continuous on (0, inf).
    bool is_builtin() const noexcept { return kind_ != GaugeKind::Table; }

private:
    Gauge(GaugeKind kind, double alpha, std::vector<Knot> knots);

    GaugeKind kind_;
    double alpha_;
    std::vector<Knot> knots_;
};

const char* to_string(GaugeKind kind) noexcept;

double eval_gauge(const Gauge& g, double t);

/// Monotonicity report on a probe grid: every adjacent pair (s, t) with f(s) > f(t).
struct F1Report {
    bool pass = true;
    std::vector<std::pair<double, double>> witnesses;
};

F1Report check_F1(const Gauge& g, std::span<const double> grid);

/// One-sided divergence surrogate: f at the last schedule element falls below floor.
struct F2Report {
    bool pass = false;
    double attained = 0.0;
    double floor = 0.0;
    double probe = 0.0;
};

F2Report check_F2(const Gauge& g, std::span<const double> schedule, double floor);

inline constexpr double kDefaultMargin = 0x1p-20;
inline constexpr int kDefaultResolveBudget = 256;

/// Resolved threshold: f(t) < f(epsilon) - alpha for every 0 < t <= delta.
struct ToleranceQuery {
    double epsilon = 0.0;
    double delta = 0.0;
    double margin = kDefaultMargin;
    int evaluations = 0;
};

/// Finds delta <= epsilon by halving downward from epsilon until the shifted
/// sublevel set is reached, then bisecting the boundary to relative accuracy
/// `margin`. The returned delta always lies strictly inside the sublevel set.
ToleranceQuery delta_for_epsilon(const Gauge& g, double epsilon,
                                 int budget = kDefaultResolveBudget,
                                 double margin = kDefaultMargin);

}  // namespace fmetric
