#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fmetric/errors.hpp"
#include "fmetric/gauge.hpp"
#include "fmetric/space.hpp"

namespace fmetric {

/// A self-map with a distance on its points.
///
/// `sample` is the declared point set: every point of a finite space, or a
/// grid for real-interval problems. The contraction constant is estimated
/// over it unless `k` is supplied.
template <class P>
struct ContractionProblem {
    std::function<double(const P&, const P&)> distance;
    std::function<P(const P&)> map;
    std::vector<P> sample;
    /// True when `sample` is the whole space.
    bool exhaustive = false;
    /// Optional domain test; points outside raise DomainError.
    std::function<bool(const P&)> contains;
    std::optional<double> k;
    Gauge gauge = Gauge::log();
};

/// Problem on a finite space with the map given as a table of point indices.
ContractionProblem<std::size_t> finite_problem(const FiniteSpace& s, std::vector<std::size_t> table,
                                               const Gauge& g);

/// Problem on the real line (or an interval of it) with a user distance.
ContractionProblem<double> real_problem(std::function<double(double, double)> distance,
                                        std::function<double(double)> map,
                                        std::vector<double> grid, const Gauge& g,
                                        std::optional<std::pair<double, double>> domain = std::nullopt);

/// Evenly spaced grid including both ends.
std::vector<double> linspace(double lo, double hi, std::size_t count);

/// Slack on the contraction-decay check along a trace.
inline constexpr double kDecaySlack = 1e-12;

struct KEstimate {
    double k = 0.0;
    /// Exhaustive over a finite space, otherwise sampled on a grid.
    bool exhaustive = false;
    bool contraction = true;
    std::size_t pairs = 0;
};

template <class P>
KEstimate estimate_k(const ContractionProblem<P>& p) {
    if (p.sample.empty()) throw ArgumentError("estimate_k: empty sample");
    KEstimate e;
    e.exhaustive = p.exhaustive;
    for (std::size_t i = 0; i < p.sample.size(); ++i) {
        const P gi = p.map(p.sample[i]);
        for (std::size_t j = i + 1; j < p.sample.size(); ++j) {
            const double d = p.distance(p.sample[i], p.sample[j]);
            if (!(d > 0.0)) continue;
            ++e.pairs;
            e.k = std::max(e.k, p.distance(gi, p.map(p.sample[j])) / d);
        }
    }
    e.contraction = e.k < 1.0;
    return e;
}

/// Smallest N with k^N / (1 - k) * d0 < delta(eps). Zero when d0 = 0.
std::size_t iteration_bound(const Gauge& g, double k, double d0, double eps);
/// Same with delta already resolved.
std::size_t iteration_bound_for_delta(double k, double d0, double delta);

template <class P>
struct FixedPointReport {
    P x_star{};
    std::size_t iterations = 0;
    double residual = 0.0;
    std::size_t bound_N = 0;
    double k = 0.0;
    bool k_estimated = false;
    bool k_exhaustive = false;
    double delta = 0.0;
    double d0 = 0.0;
    /// Iterates x_0, ..., x_n when tracing was requested.
    std::vector<P> trace;
};

namespace detail {

template <class P>
void require_domain(const ContractionProblem<P>& p, const P& x) {
    if (p.contains && !p.contains(x)) {
        throw DomainError("map leaves the declared point set");
    }
}

template <class P>
std::pair<double, bool> certified_k(const ContractionProblem<P>& p, bool& exhaustive) {
    if (p.k) {
        exhaustive = false;
        return {*p.k, false};
    }
    const auto e = estimate_k(p);
    exhaustive = e.exhaustive;
    return {e.k, true};
}

}  // namespace detail

/// Picard iteration x_{n+1} = g(x_n), stopped by the certified a-priori
/// criterion: the tail sum bound D(x_n, x_{n+1}) / (1 - k) drops below
/// delta(eps), or the iteration count reaches bound_N.
template <class P>
FixedPointReport<P> solve_fixed_point(const ContractionProblem<P>& p, const P& x0, double eps,
                                      bool trace = false) {
    if (!(eps > 0.0)) throw ArgumentError("solve_fixed_point: eps must be > 0");
    detail::require_domain(p, x0);

    FixedPointReport<P> r;
    const auto [k, estimated] = detail::certified_k(p, r.k_exhaustive);
    r.k = k;
    r.k_estimated = estimated;
    if (!(k >= 0.0 && k < 1.0)) {
        throw CertificationError("contraction constant k = " + format_label(k) +
                                 " is not in [0, 1)");
    }

    P x = x0;
    P next = p.map(x);
    detail::require_domain(p, next);
    r.d0 = p.distance(x, next);
    if (trace) r.trace.push_back(x);
    if (r.d0 == 0.0) {
        r.x_star = x;
        return r;
    }

    r.delta = delta_for_epsilon(p.gauge, eps).delta;
    r.bound_N = iteration_bound_for_delta(k, r.d0, r.delta);

    double step = r.d0;
    for (std::size_t n = 0;; ++n) {
        if (step / (1.0 - k) < r.delta || n >= r.bound_N) {
            r.x_star = x;
            r.iterations = n;
            r.residual = step;
            return r;
        }
        x = next;
        next = p.map(x);
        detail::require_domain(p, next);
        if (trace) r.trace.push_back(x);
        const double prev = step;
        step = p.distance(x, next);
        if (step > k * prev + kDecaySlack) {
            throw CertificationError("observed step ratio " + format_label(step / prev) +
                                     " exceeds k = " + format_label(k) + " at iteration " +
                                     std::to_string(n + 1));
        }
    }
}

template <class P>
struct UniquenessVerdict {
    bool pass = false;
    double distance = 0.0;
    FixedPointReport<P> a;
    FixedPointReport<P> b;
};

/// Solves from two starts and checks the fixed points agree within 2 eps.
template <class P>
UniquenessVerdict<P> check_uniqueness(const ContractionProblem<P>& p, const P& x0a, const P& x0b,
                                      double eps) {
    UniquenessVerdict<P> v;
    v.a = solve_fixed_point(p, x0a, eps);
    v.b = solve_fixed_point(p, x0b, eps);
    v.distance = p.distance(v.a.x_star, v.b.x_star);
    v.pass = v.distance <= 2.0 * eps;
    return v;
}

template <class P>
struct BallInvarianceReport {
    std::optional<double> eps;
    double k = 0.0;
    double d0 = 0.0;
    /// g maps every declared point of the closed ball B(x0, eps) into it.
    bool invariance_verified = false;
    std::size_t points_checked = 0;
    std::optional<P> violation;
};

/// Smallest grid eps with f(k eps + D(x0, g(x0))) <= f(eps) - alpha, plus an
/// empirical check that g maps the declared points of the closed ball
/// B(x0, eps) into itself.
template <class P>
BallInvarianceReport<P> local_ball_invariance(const ContractionProblem<P>& p, const P& x0, double r,
                                              std::vector<double> eps_grid) {
    for (double e : eps_grid) {
        if (!(e > 0.0 && e < r)) {
            throw ArgumentError("local_ball_invariance: grid value " + format_label(e) +
                                " not in (0, r)");
        }
    }
    std::sort(eps_grid.begin(), eps_grid.end());

    BallInvarianceReport<P> rep;
    bool exhaustive = false;
    rep.k = detail::certified_k(p, exhaustive).first;
    rep.d0 = p.distance(x0, p.map(x0));
    const Gauge& g = p.gauge;
    for (double e : eps_grid) {
        if (g(rep.k * e + rep.d0) <= g(e) - g.alpha() + kGaugeSlack) {
            rep.eps = e;
            break;
        }
    }
    if (!rep.eps) return rep;

    rep.invariance_verified = true;
    const double e = *rep.eps;
    for (const P& x : p.sample) {
        if (p.distance(x0, x) > e) continue;
        ++rep.points_checked;
        if (p.distance(x0, p.map(x)) > e + 1e-12 * e) {
            rep.invariance_verified = false;
            rep.violation = x;
            break;
        }
    }
    return rep;
}

}  // namespace fmetric
