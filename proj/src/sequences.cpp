#include "fmetric/sequences.hpp"

#include <cmath>

#include "fmetric/errors.hpp"

namespace fmetric {

namespace {

std::string num(double v) { return format_label(v); }

}  // namespace

SequenceSample::SequenceSample(std::vector<Point> points, double tol,
                               std::optional<std::size_t> tail_start)
    : points_(std::move(points)), tol_(tol) {
    if (points_.empty()) throw ArgumentError("sequence: empty sample");
    if (!(tol_ > 0.0)) throw ArgumentError("sequence: tol must be > 0");
    tail_start_ = tail_start.value_or(points_.size() / 2);
    if (tail_start_ >= points_.size()) {
        throw ArgumentError("sequence: tail_start " + std::to_string(tail_start_) +
                            " must be below the sample length " + std::to_string(points_.size()));
    }
}

ConvergenceReport is_F_convergent_to(const FiniteSpace& s, const SequenceSample& seq,
                                     const Point& x) {
    ConvergenceReport r;
    r.worst_index = seq.tail_start();
    for (std::size_t n = seq.tail_start(); n < seq.size(); ++n) {
        const double dev = s.distance(seq.points()[n], x);
        if (dev > r.max_deviation) {
            r.max_deviation = dev;
            r.worst_index = n;
        }
    }
    r.pass = r.max_deviation <= seq.tol();
    return r;
}

CauchyReport is_F_cauchy(const FiniteSpace& s, const SequenceSample& seq) {
    CauchyReport r;
    r.n = r.m = seq.tail_start();
    const auto& pts = seq.points();
    for (std::size_t n = seq.tail_start(); n < seq.size(); ++n) {
        for (std::size_t m = n + 1; m < seq.size(); ++m) {
            const double dev = s.distance(pts[n], pts[m]);
            if (dev > r.max_deviation) {
                r.max_deviation = dev;
                r.n = n;
                r.m = m;
            }
        }
    }
    r.pass = r.max_deviation <= seq.tol();
    return r;
}

LimitUniquenessReport assert_limit_unique(const FiniteSpace& s, const SequenceSample& seq,
                                          const Point& x, const Point& y) {
    for (const Point* cand : {&x, &y}) {
        const auto conv = is_F_convergent_to(s, seq, *cand);
        if (!conv.pass) {
            throw PreconditionError("sample is not convergent to " + s.describe(*cand) +
                                    ": tail deviation " + num(conv.max_deviation) + " > tol " +
                                    num(seq.tol()));
        }
    }
    LimitUniquenessReport r;
    r.distance = s.distance(x, y);
    r.pass = r.distance == 0.0;
    if (r.pass) {
        r.message = "limits coincide";
    } else {
        r.tolerance_clash = true;
        r.message = "tolerance clash: tol " + num(seq.tol()) + " admits both " + s.describe(x) +
                    " and " + s.describe(y) + " at distance " + num(r.distance);
    }
    return r;
}

ImplicationReport convergent_implies_cauchy(const FiniteSpace& s, const Gauge& g,
                                            const SequenceSample& seq, const Point& x,
                                            double eps) {
    const auto conv = is_F_convergent_to(s, seq, x);
    if (!conv.pass) {
        throw PreconditionError("sample is not convergent to " + s.describe(x) +
                                ": tail deviation " + num(conv.max_deviation));
    }
    ImplicationReport r;
    r.epsilon = eps;
    r.delta = delta_for_epsilon(g, eps).delta;

    const auto& pts = seq.points();
    std::vector<double> to_limit(seq.size());
    for (std::size_t n = seq.tail_start(); n < seq.size(); ++n) to_limit[n] = s.distance(pts[n], x);

    for (std::size_t n = seq.tail_start(); n < seq.size(); ++n) {
        for (std::size_t m = n + 1; m < seq.size(); ++m) {
            if (!(to_limit[n] + to_limit[m] < r.delta)) continue;
            ++r.pairs_checked;
            if (!(s.distance(pts[n], pts[m]) < eps)) {
                r.pass = false;
                r.witness = std::make_pair(n, m);
                return r;
            }
        }
    }
    return r;
}

StabilizationReport eventually_constant(const FiniteSpace& s, const SequenceSample& seq,
                                        double threshold) {
    if (!(threshold > 0.0)) throw ArgumentError("eventually_constant: threshold must be > 0");
    StabilizationReport r;
    const auto& pts = seq.points();
    for (std::size_t n = seq.tail_start(); n < seq.size(); ++n) {
        for (std::size_t m = n + 1; m < seq.size(); ++m) {
            r.max_deviation = std::max(r.max_deviation, s.distance(pts[n], pts[m]));
        }
    }
    r.pass = r.max_deviation < threshold;
    if (r.pass) {
        std::size_t idx = seq.size() - 1;
        while (idx > 0 && s.distance(pts[idx - 1], pts.back()) == 0.0) --idx;
        r.index = idx;
    }
    return r;
}

}  // namespace fmetric
