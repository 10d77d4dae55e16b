#include "fmetric/banach.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace fmetric {

ContractionProblem<std::size_t> finite_problem(const FiniteSpace& s, std::vector<std::size_t> table,
                                               const Gauge& g) {
    if (table.size() != s.size()) {
        throw ArgumentError("finite_problem: map table must have one entry per point");
    }
    const std::size_t n = s.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (table[i] >= n) {
            throw DomainError("map sends " + s.label(i) + " to index " + std::to_string(table[i]) +
                              " outside the space");
        }
    }
    ContractionProblem<std::size_t> p;
    p.gauge = g;
    p.exhaustive = true;
    for (std::size_t i = 0; i < n; ++i) p.sample.push_back(i);
    p.distance = [m = s.matrix()](std::size_t a, std::size_t b) { return m(a, b); };
    p.contains = [n](std::size_t a) { return a < n; };
    p.map = [table = std::move(table), n](std::size_t a) {
        if (a >= n) throw DomainError("map applied outside the space");
        return table[a];
    };
    return p;
}

ContractionProblem<double> real_problem(std::function<double(double, double)> distance,
                                        std::function<double(double)> map,
                                        std::vector<double> grid, const Gauge& g,
                                        std::optional<std::pair<double, double>> domain) {
    ContractionProblem<double> p;
    p.gauge = g;
    p.distance = [distance = std::move(distance)](double a, double b) { return distance(a, b); };
    p.map = [map = std::move(map)](double a) { return map(a); };
    p.sample = std::move(grid);
    p.exhaustive = false;
    if (domain) {
        p.contains = [lo = domain->first, hi = domain->second](double a) {
            return a >= lo && a <= hi;
        };
    } else {
        p.contains = [](double a) { return std::isfinite(a); };
    }
    return p;
}

std::vector<double> linspace(double lo, double hi, std::size_t count) {
    if (count < 2) throw ArgumentError("linspace: need at least two points");
    std::vector<double> out(count);
    for (std::size_t i = 0; i < count; ++i) {
        out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
    }
    out.back() = hi;
    return out;
}

std::size_t iteration_bound_for_delta(double k, double d0, double delta) {
    if (!(k >= 0.0 && k < 1.0)) throw ArgumentError("iteration_bound: k must lie in [0, 1)");
    if (!(d0 >= 0.0)) throw ArgumentError("iteration_bound: d0 must be >= 0");
    if (!(delta > 0.0)) throw ArgumentError("iteration_bound: delta must be > 0");
    if (d0 == 0.0) return 0;

    auto tail = [&](std::size_t n) {
        return std::pow(k, static_cast<double>(n)) / (1.0 - k) * d0;
    };
    if (tail(0) < delta) return 0;
    if (k == 0.0) return 1;
    // Start just below the analytic solution and walk up.
    const double est = std::log(delta * (1.0 - k) / d0) / std::log(k);
    std::size_t n = est > 2.0 ? static_cast<std::size_t>(est) - 1 : 0;
    while (n > 0 && tail(n - 1) < delta) --n;
    while (!(tail(n) < delta)) ++n;
    return n;
}

std::size_t iteration_bound(const Gauge& g, double k, double d0, double eps) {
    if (!(eps > 0.0)) throw ArgumentError("iteration_bound: eps must be > 0");
    if (d0 == 0.0) return 0;
    return iteration_bound_for_delta(k, d0, delta_for_epsilon(g, eps).delta);
}

}  // namespace fmetric
