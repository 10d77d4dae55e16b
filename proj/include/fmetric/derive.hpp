#pragma once

#include <optional>

#include "fmetric/gauge.hpp"
#include "fmetric/matrix.hpp"
#include "fmetric/space.hpp"

namespace fmetric {

struct MetricAxiomReport {
    bool identity_ok = true;
    bool symmetry_ok = true;
    bool triangle_ok = true;
    bool positivity_ok = true;
    std::optional<PairWitness> identity_witness;
    std::optional<PairWitness> symmetry_witness;
    std::optional<PairWitness> positivity_witness;
    /// (x, z) with d(x, z) > d(x, y) + d(y, z); y stored in `triangle_via`.
    std::optional<PairWitness> triangle_witness;
    std::size_t triangle_via = 0;
    bool pass() const noexcept { return identity_ok && symmetry_ok && triangle_ok && positivity_ok; }
};

/// Zero diagonal, symmetry, positivity off the diagonal and the triangle
/// inequality over all triples (relative slack 1e-12 for rounding).
MetricAxiomReport check_metric_axioms(const Matrix& d);

/// The chain-infimum metric of a space, with its axiom report.
struct DerivedMetric {
    Matrix d;
    MetricAxiomReport axioms;
};

DerivedMetric derive_metric(const FiniteSpace& s);

/// Views a derived metric as a space over the same labels.
FiniteSpace as_space(const FiniteSpace& s, const DerivedMetric& dm);

struct SandwichReport {
    bool pass = true;
    bool lower_ok = true;
    bool upper_ok = true;
    /// max over pairs of f(D) - f(d); must not exceed alpha.
    double worst_slack = 0.0;
    std::optional<PairWitness> witness;
    std::optional<PairWitness> lower_violation;
};

/// f(d) <= f(D) <= f(d) + alpha on every pair with D > 0.
SandwichReport check_sandwich(const FiniteSpace& s, const Gauge& g, const Matrix& d);
inline SandwichReport check_sandwich(const FiniteSpace& s, const Gauge& g, const DerivedMetric& dm) {
    return check_sandwich(s, g, dm.d);
}

/// Boundedness direction of the characterization: given a genuine metric
/// d_ext that sandwiches D under g, (D3) must hold. Throws MetricAxiomError
/// or SandwichError when the hypotheses fail; otherwise returns the (D3) verdict.
D3Report boundedness_implies_D3(const FiniteSpace& s, const Gauge& g, const Matrix& d_ext);

}  // namespace fmetric
