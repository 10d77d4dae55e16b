#include "fmetric/derive.hpp"

#include <cmath>
#include <string>

#include "fmetric/errors.hpp"

namespace fmetric {

MetricAxiomReport check_metric_axioms(const Matrix& d) {
    MetricAxiomReport r;
    const std::size_t n = d.size();
    for (std::size_t i = 0; i < n && r.identity_ok; ++i) {
        if (d(i, i) != 0.0) {
            r.identity_ok = false;
            r.identity_witness = PairWitness{i, i};
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (r.symmetry_ok && d(i, j) != d(j, i)) {
                r.symmetry_ok = false;
                r.symmetry_witness = PairWitness{i, j};
            }
            if (r.positivity_ok && !(d(i, j) > 0.0 && d(j, i) > 0.0)) {
                r.positivity_ok = false;
                r.positivity_witness = PairWitness{i, j};
            }
        }
    }
    for (std::size_t x = 0; x < n && r.triangle_ok; ++x) {
        for (std::size_t z = 0; z < n && r.triangle_ok; ++z) {
            for (std::size_t y = 0; y < n; ++y) {
                const double via = d(x, y) + d(y, z);
                if (d(x, z) > via + 1e-12 * via) {
                    r.triangle_ok = false;
                    r.triangle_witness = PairWitness{x, z};
                    r.triangle_via = y;
                    break;
                }
            }
        }
    }
    return r;
}

DerivedMetric derive_metric(const FiniteSpace& s) {
    DerivedMetric dm;
    dm.d = shortest_chain_infimum(s);
    dm.axioms = check_metric_axioms(dm.d);
    return dm;
}

FiniteSpace as_space(const FiniteSpace& s, const DerivedMetric& dm) {
    return FiniteSpace(s.labels(), dm.d);
}

SandwichReport check_sandwich(const FiniteSpace& s, const Gauge& g, const Matrix& d) {
    if (d.size() != s.size()) throw ArgumentError("check_sandwich: metric size mismatch");
    SandwichReport r;
    bool first = true;
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            if (!(s(i, j) > 0.0)) continue;
            const double fD = g(s(i, j));
            const double fd = g(d(i, j));
            if (r.lower_ok && fd > fD + kGaugeSlack) {
                r.lower_ok = false;
                r.lower_violation = PairWitness{i, j};
            }
            const double slack = fD - fd;
            const PairWitness w{i, j};
            if (first || slack > r.worst_slack ||
                (slack == r.worst_slack && label_pair_less(s, w, *r.witness))) {
                r.worst_slack = slack;
                r.witness = w;
                first = false;
            }
        }
    }
    r.upper_ok = first || r.worst_slack <= g.alpha() + kGaugeSlack;
    r.pass = r.lower_ok && r.upper_ok;
    return r;
}

D3Report boundedness_implies_D3(const FiniteSpace& s, const Gauge& g, const Matrix& d_ext) {
    require_d1_d2(s);
    if (d_ext.size() != s.size()) throw ArgumentError("boundedness_implies_D3: size mismatch");
    const auto axioms = check_metric_axioms(d_ext);
    if (!axioms.pass()) {
        throw MetricAxiomError("supplied matrix is not a metric");
    }
    const auto sandwich = check_sandwich(s, g, d_ext);
    if (!sandwich.pass) {
        const auto& w = sandwich.lower_ok ? *sandwich.witness : *sandwich.lower_violation;
        throw SandwichError("supplied metric does not sandwich D at (" + s.label(w.i) + "," +
                            s.label(w.j) + ")");
    }
    return check_D3(s, g);
}

}  // namespace fmetric
