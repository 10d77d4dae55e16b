#pragma once

#include <string>

#include "json.hpp"

#include "fmetric/banach.hpp"
#include "fmetric/derive.hpp"
#include "fmetric/gauge.hpp"
#include "fmetric/sequences.hpp"
#include "fmetric/space.hpp"
#include "fmetric/topology.hpp"

namespace fmetric {

// JSON views of the library's reports. Points are rendered by label and
// subsets as sorted label lists.

nlohmann::json to_json(const Gauge& g);
nlohmann::json to_json(const F1Report& r);
nlohmann::json to_json(const F2Report& r);
nlohmann::json to_json(const ToleranceQuery& q);

nlohmann::json to_json(const FiniteSpace& s, const PairWitness& w);
nlohmann::json to_json(const FiniteSpace& s, const D1D2Report& r);
nlohmann::json to_json(const FiniteSpace& s, const D3Report& r);
nlohmann::json to_json(const FiniteSpace& s, const AlphaEstimate& a);
nlohmann::json to_json(const FiniteSpace& s, const ClassificationReport& r);
nlohmann::json to_json(const FiniteSpace& s, const MetricAxiomReport& r);
nlohmann::json to_json(const FiniteSpace& s, const DerivedMetric& dm);
nlohmann::json to_json(const FiniteSpace& s, const SandwichReport& r);
nlohmann::json to_json(const FiniteSpace& s, const SubsetMask& m);
nlohmann::json to_json(const FiniteSpace& s, const OpenReport& r);
nlohmann::json to_json(const FiniteSpace& s, const JalReport& r);
nlohmann::json to_json(const FiniteSpace& s, const CoverReport& r);
nlohmann::json to_json(const ConvergenceReport& r);
nlohmann::json to_json(const CauchyReport& r);
nlohmann::json to_json(const LimitUniquenessReport& r);
nlohmann::json to_json(const ImplicationReport& r);
nlohmann::json to_json(const StabilizationReport& r);
nlohmann::json to_json(const KEstimate& e);
nlohmann::json matrix_json(const Matrix& d);

/// Non-finite doubles are stored as the strings "inf", "-inf", "nan".
nlohmann::json number(double v);

template <class P, class Describe>
nlohmann::json to_json(const FixedPointReport<P>& r, Describe&& describe) {
    nlohmann::json j{{"x_star", describe(r.x_star)},
                     {"iterations", r.iterations},
                     {"residual", number(r.residual)},
                     {"bound_N", r.bound_N},
                     {"k", number(r.k)},
                     {"k_source", r.k_estimated ? (r.k_exhaustive ? "exhaustive" : "sampled")
                                                : "supplied"},
                     {"delta", number(r.delta)},
                     {"d0", number(r.d0)}};
    if (!r.trace.empty()) {
        auto t = nlohmann::json::array();
        for (const auto& p : r.trace) t.push_back(describe(p));
        j["trace"] = std::move(t);
    }
    return j;
}

/// Deterministic serialization: sorted keys, doubles with 17 significant digits.
std::string dump_report(const nlohmann::json& j, int indent = 2);

}  // namespace fmetric
