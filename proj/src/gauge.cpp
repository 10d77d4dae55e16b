#include "fmetric/gauge.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fmetric/errors.hpp"

namespace fmetric {

Gauge::Gauge(GaugeKind kind, double alpha, std::vector<Knot> knots)
    : kind_(kind), alpha_(alpha), knots_(std::move(knots)) {
    if (!(alpha_ >= 0.0) || !std::isfinite(alpha_)) {
        throw ArgumentError("gauge alpha must be finite and >= 0, got " + std::to_string(alpha_));
    }
}

Gauge Gauge::log(double alpha) { return Gauge(GaugeKind::Log, alpha, {}); }

Gauge Gauge::neg_reciprocal(double alpha) { return Gauge(GaugeKind::NegReciprocal, alpha, {}); }

Gauge Gauge::table(std::vector<Knot> knots, double alpha) {
    if (knots.size() < 2) {
        throw ArgumentError("table gauge needs at least two knots");
    }
    for (std::size_t i = 0; i < knots.size(); ++i) {
        if (!(knots[i].t > 0.0) || !std::isfinite(knots[i].t)) {
            throw ArgumentError("table gauge knots must have finite t > 0");
        }
        if (std::isnan(knots[i].value)) {
            throw ArgumentError("table gauge value is NaN");
        }
        if (i > 0 && !(knots[i].t > knots[i - 1].t)) {
            throw ArgumentError("table gauge knots must be strictly increasing in t");
        }
    }
    return Gauge(GaugeKind::Table, alpha, std::move(knots));
}

Gauge Gauge::with_alpha(double alpha) const { return Gauge(kind_, alpha, knots_); }

double Gauge::operator()(double t) const {
    if (!(t > 0.0)) {
        throw DomainError("gauge evaluated at non-positive t = " + std::to_string(t));
    }
    switch (kind_) {
        case GaugeKind::Log:
            return std::log(t);
        case GaugeKind::NegReciprocal:
            return -1.0 / t;
        case GaugeKind::Table: {
            if (t < knots_.front().t || t > knots_.back().t) {
                throw OutOfRangeError("table gauge probed at t = " + std::to_string(t) +
                                      " outside [" + std::to_string(knots_.front().t) + ", " +
                                      std::to_string(knots_.back().t) + "]");
            }
            auto hi = std::lower_bound(knots_.begin(), knots_.end(), t,
                                       [](const Knot& k, double v) { return k.t < v; });
            if (hi->t == t) return hi->value;
            auto lo = hi - 1;
            const double w = (t - lo->t) / (hi->t - lo->t);
            return lo->value + w * (hi->value - lo->value);
        }
    }
    return 0.0;
}

const char* to_string(GaugeKind kind) noexcept {
    switch (kind) {
        case GaugeKind::Log: return "log";
        case GaugeKind::NegReciprocal: return "neg_reciprocal";
        case GaugeKind::Table: return "table";
    }
    return "unknown";
}

double eval_gauge(const Gauge& g, double t) { return g(t); }

F1Report check_F1(const Gauge& g, std::span<const double> grid) {
    if (grid.empty()) throw ArgumentError("check_F1: empty grid");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!(grid[i] > 0.0)) throw ArgumentError("check_F1: grid values must be positive");
        if (i > 0 && !(grid[i] > grid[i - 1])) {
            throw ArgumentError("check_F1: grid must be strictly increasing");
        }
    }
    F1Report report;
    double prev = g(grid[0]);
    for (std::size_t i = 1; i < grid.size(); ++i) {
        const double cur = g(grid[i]);
        if (prev > cur) report.witnesses.emplace_back(grid[i - 1], grid[i]);
        prev = cur;
    }
    report.pass = report.witnesses.empty();
    return report;
}

F2Report check_F2(const Gauge& g, std::span<const double> schedule, double floor) {
    if (schedule.size() < 2) throw ArgumentError("check_F2: schedule needs at least two values");
    for (std::size_t i = 0; i < schedule.size(); ++i) {
        if (!(schedule[i] > 0.0)) throw ArgumentError("check_F2: schedule values must be positive");
        if (i > 0 && !(schedule[i] < schedule[i - 1])) {
            throw ArgumentError("check_F2: schedule must be strictly decreasing");
        }
    }
    F2Report report;
    report.floor = floor;
    report.probe = schedule.back();
    report.attained = g(schedule.back());
    report.pass = report.attained < floor;
    return report;
}

ToleranceQuery delta_for_epsilon(const Gauge& g, double epsilon, int budget, double margin) {
    if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
        throw ArgumentError("delta_for_epsilon: epsilon must be finite and > 0");
    }
    if (budget < 1) throw ArgumentError("delta_for_epsilon: budget must be >= 1");
    if (!(margin > 0.0 && margin < 1.0)) {
        throw ArgumentError("delta_for_epsilon: margin must lie in (0, 1)");
    }

    ToleranceQuery q;
    q.epsilon = epsilon;
    q.margin = margin;

    const double target = g(epsilon) - g.alpha();
    auto below = [&](double t) {
        ++q.evaluations;
        try {
            return g(t) < target;
        } catch (const OutOfRangeError& e) {
            throw ResolutionError(std::string("delta_for_epsilon: sublevel not reached before ") +
                                  e.what());
        }
    };

    // f(eps) >= f(eps) - alpha, so eps itself is never inside the sublevel set.
    double hi = epsilon;
    double lo = 0.0;
    for (double t = epsilon / 2.0;; t /= 2.0) {
        if (q.evaluations >= budget || !(t > 0.0)) {
            throw ResolutionError("delta_for_epsilon: no delta found within budget of " +
                                  std::to_string(budget) + " evaluations");
        }
        if (below(t)) {
            lo = t;
            break;
        }
        hi = t;
    }
    while (hi - lo > margin * lo && q.evaluations < budget) {
        const double mid = lo + (hi - lo) / 2.0;
        if (mid <= lo || mid >= hi) break;
        if (below(mid)) lo = mid;
        else hi = mid;
    }
    q.delta = lo;
    return q;
}

}  // namespace fmetric
