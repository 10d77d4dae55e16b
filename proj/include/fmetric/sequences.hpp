#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fmetric/gauge.hpp"
#include "fmetric/space.hpp"

namespace fmetric {

/// Finite prefix of a sequence. Verdicts look only at indices >= tail_start
/// and compare against `tol` in place of the limit.
class SequenceSample {
public:
    /// tail_start defaults to half the sample length.
    SequenceSample(std::vector<Point> points, double tol,
                   std::optional<std::size_t> tail_start = std::nullopt);

    const std::vector<Point>& points() const noexcept { return points_; }
    std::size_t size() const noexcept { return points_.size(); }
    std::size_t tail_start() const noexcept { return tail_start_; }
    double tol() const noexcept { return tol_; }

    SequenceSample with_tol(double tol) const { return {points_, tol, tail_start_}; }

private:
    std::vector<Point> points_;
    std::size_t tail_start_ = 0;
    double tol_ = 0.0;
};

struct ConvergenceReport {
    bool pass = false;
    double max_deviation = 0.0;
    std::size_t worst_index = 0;
};

/// max over the tail of D(x_n, x) <= tol.
ConvergenceReport is_F_convergent_to(const FiniteSpace& s, const SequenceSample& seq,
                                     const Point& x);

struct CauchyReport {
    bool pass = false;
    double max_deviation = 0.0;
    std::size_t n = 0;
    std::size_t m = 0;
};

/// max over tail pairs of D(x_n, x_m) <= tol.
CauchyReport is_F_cauchy(const FiniteSpace& s, const SequenceSample& seq);

struct LimitUniquenessReport {
    bool pass = false;
    double distance = 0.0;
    /// Both candidates pass within tol although they differ: the sample
    /// tolerance is too loose for the space's separation.
    bool tolerance_clash = false;
    std::string message;
};

/// Throws PreconditionError when the sample does not converge to x or y.
LimitUniquenessReport assert_limit_unique(const FiniteSpace& s, const SequenceSample& seq,
                                          const Point& x, const Point& y);

struct ImplicationReport {
    bool pass = true;
    double delta = 0.0;
    double epsilon = 0.0;
    std::size_t pairs_checked = 0;
    std::optional<std::pair<std::size_t, std::size_t>> witness;
};

/// Whenever D(x_n, x) + D(x_m, x) < delta(eps) on the tail, D(x_n, x_m) < eps.
/// Throws PreconditionError when the sample does not converge to x.
ImplicationReport convergent_implies_cauchy(const FiniteSpace& s, const Gauge& g,
                                            const SequenceSample& seq, const Point& x,
                                            double eps);

struct StabilizationReport {
    bool pass = false;
    double max_deviation = 0.0;
    /// Earliest N with x_n = x_N for all n >= N; set only on pass.
    std::optional<std::size_t> index;
};

/// Tail pairwise distances all below threshold. When threshold does not
/// exceed the space's smallest positive distance this forces the tail to be constant.
StabilizationReport eventually_constant(const FiniteSpace& s, const SequenceSample& seq,
                                        double threshold);

}  // namespace fmetric
