#include "fmetric/report.hpp"

#include <cmath>

#include "fmetric/io.hpp"

namespace fmetric {

using nlohmann::json;

json number(double v) {
    if (std::isfinite(v)) return v;
    return format_number(v);
}

json to_json(const Gauge& g) {
    json j{{"kind", to_string(g.kind())}, {"alpha", number(g.alpha())}};
    if (g.kind() == GaugeKind::Table) {
        auto t = json::array();
        for (const auto& k : g.knots()) t.push_back({number(k.t), number(k.value)});
        j["table"] = std::move(t);
    }
    return j;
}

json to_json(const F1Report& r) {
    auto w = json::array();
    for (auto [s, t] : r.witnesses) w.push_back({number(s), number(t)});
    return {{"pass", r.pass}, {"witnesses", std::move(w)}};
}

json to_json(const F2Report& r) {
    return {{"pass", r.pass},
            {"attained", number(r.attained)},
            {"floor", number(r.floor)},
            {"probe", number(r.probe)}};
}

json to_json(const ToleranceQuery& q) {
    return {{"epsilon", number(q.epsilon)},
            {"delta", number(q.delta)},
            {"margin", number(q.margin)},
            {"evaluations", q.evaluations}};
}

json to_json(const FiniteSpace& s, const PairWitness& w) {
    return json::array({s.label(w.i), s.label(w.j)});
}

namespace {

json pairs(const FiniteSpace& s, const std::vector<PairWitness>& ws) {
    auto a = json::array();
    for (const auto& w : ws) a.push_back(to_json(s, w));
    return a;
}

json optional_pair(const FiniteSpace& s, const std::optional<PairWitness>& w) {
    return w ? to_json(s, *w) : json(nullptr);
}

void dump(const json& j, int indent, int depth, std::string& out) {
    const auto newline = [&](int d) {
        if (indent < 0) return;
        out += '\n';
        out.append(static_cast<std::size_t>(indent * d), ' ');
    };
    switch (j.type()) {
        case json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += '{';
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ',';
                first = false;
                newline(depth + 1);
                out += json(it.key()).dump();
                out += indent < 0 ? ":" : ": ";
                dump(it.value(), indent, depth + 1, out);
            }
            newline(depth);
            out += '}';
            return;
        }
        case json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            out += '[';
            bool first = true;
            for (const auto& v : j) {
                if (!first) out += ',';
                first = false;
                newline(depth + 1);
                dump(v, indent, depth + 1, out);
            }
            newline(depth);
            out += ']';
            return;
        }
        case json::value_t::number_float: {
            const double v = j.get<double>();
            if (!std::isfinite(v)) {
                out += json(format_number(v)).dump();
                return;
            }
            std::string s = format_number(v);
            if (s.find_first_of(".eE") == std::string::npos) s += ".0";
            out += s;
            return;
        }
        default:
            out += j.dump();
    }
}

}  // namespace

json to_json(const FiniteSpace& s, const D1D2Report& r) {
    return {{"d1_ok", r.d1_ok},
            {"d2_ok", r.d2_ok},
            {"d1_violations", pairs(s, r.d1_violations)},
            {"d2_violations", pairs(s, r.d2_violations)}};
}

json to_json(const FiniteSpace& s, const D3Report& r) {
    return {{"pass", r.pass},
            {"alpha", number(r.alpha)},
            {"worst_gap", number(r.worst_gap)},
            {"witness", optional_pair(s, r.witness)}};
}

json to_json(const FiniteSpace& s, const AlphaEstimate& a) {
    return {{"value", number(a.value)}, {"witness", optional_pair(s, a.witness)}};
}

json to_json(const FiniteSpace& s, const ClassificationReport& r) {
    json j{{"d1_ok", r.axioms.d1_ok},
           {"d2_ok", r.axioms.d2_ok},
           {"d1_violations", pairs(s, r.axioms.d1_violations)},
           {"d2_violations", pairs(s, r.axioms.d2_violations)},
           {"min_alpha_log", to_json(s, r.min_alpha_log)},
           {"min_K_relaxed", number(r.min_K_relaxed)},
           {"relaxed_witness", optional_pair(s, r.relaxed_witness)},
           {"min_K_b", number(r.min_K_b)},
           {"metric", r.metric}};
    j["b_witness"] = r.b_witness ? json::array({s.label(r.b_witness->x), s.label(r.b_witness->y),
                                                s.label(r.b_witness->z)})
                                 : json(nullptr);
    return j;
}

json to_json(const FiniteSpace& s, const MetricAxiomReport& r) {
    json j{{"pass", r.pass()},
           {"identity_ok", r.identity_ok},
           {"symmetry_ok", r.symmetry_ok},
           {"positivity_ok", r.positivity_ok},
           {"triangle_ok", r.triangle_ok},
           {"identity_witness", optional_pair(s, r.identity_witness)},
           {"symmetry_witness", optional_pair(s, r.symmetry_witness)},
           {"positivity_witness", optional_pair(s, r.positivity_witness)}};
    j["triangle_witness"] =
        r.triangle_witness ? json::array({s.label(r.triangle_witness->i), s.label(r.triangle_via),
                                          s.label(r.triangle_witness->j)})
                           : json(nullptr);
    return j;
}

json matrix_json(const Matrix& d) {
    auto rows = json::array();
    for (std::size_t i = 0; i < d.size(); ++i) {
        auto row = json::array();
        for (double v : d.row(i)) row.push_back(number(v));
        rows.push_back(std::move(row));
    }
    return rows;
}

json to_json(const FiniteSpace& s, const DerivedMetric& dm) {
    return {{"labels", s.labels()}, {"d", matrix_json(dm.d)}, {"axioms", to_json(s, dm.axioms)}};
}

json to_json(const FiniteSpace& s, const SandwichReport& r) {
    return {{"pass", r.pass},
            {"lower_ok", r.lower_ok},
            {"upper_ok", r.upper_ok},
            {"worst_slack", number(r.worst_slack)},
            {"witness", optional_pair(s, r.witness)},
            {"lower_violation", optional_pair(s, r.lower_violation)}};
}

json to_json(const FiniteSpace& s, const SubsetMask& m) { return m.labels(s); }

json to_json(const FiniteSpace& s, const OpenReport& r) {
    auto radii = json::object();
    for (auto [i, radius] : r.witness_radii) radii[s.label(i)] = number(radius);
    return {{"open", r.open}, {"witness_radii", std::move(radii)}};
}

json to_json(const FiniteSpace& s, const JalReport& r) {
    return {{"pass", r.pass},
            {"tail_deviation", number(r.tail_deviation)},
            {"worst_gap", number(r.worst_gap)},
            {"worst_y", r.worst_y ? json(s.label(*r.worst_y)) : json(nullptr)}};
}

json to_json(const FiniteSpace& s, const CoverReport& r) {
    auto centers = json::array();
    for (auto c : r.centers) centers.push_back(s.label(c));
    return {{"radius", number(r.radius)},
            {"centers", std::move(centers)},
            {"covered", r.covered},
            {"rounds", r.rounds}};
}

json to_json(const ConvergenceReport& r) {
    return {{"pass", r.pass},
            {"max_deviation", number(r.max_deviation)},
            {"worst_index", r.worst_index}};
}

json to_json(const CauchyReport& r) {
    return {{"pass", r.pass},
            {"max_deviation", number(r.max_deviation)},
            {"witness", json::array({r.n, r.m})}};
}

json to_json(const LimitUniquenessReport& r) {
    return {{"pass", r.pass},
            {"distance", number(r.distance)},
            {"tolerance_clash", r.tolerance_clash},
            {"message", r.message}};
}

json to_json(const ImplicationReport& r) {
    return {{"pass", r.pass},
            {"delta", number(r.delta)},
            {"epsilon", number(r.epsilon)},
            {"pairs_checked", r.pairs_checked},
            {"witness", r.witness ? json::array({r.witness->first, r.witness->second})
                                  : json(nullptr)}};
}

json to_json(const StabilizationReport& r) {
    return {{"pass", r.pass},
            {"max_deviation", number(r.max_deviation)},
            {"index", r.index ? json(*r.index) : json(nullptr)}};
}

json to_json(const KEstimate& e) {
    return {{"k", number(e.k)},
            {"source", e.exhaustive ? "exhaustive" : "sampled"},
            {"contraction", e.contraction},
            {"pairs", e.pairs}};
}

std::string dump_report(const json& j, int indent) {
    std::string out;
    dump(j, indent, 0, out);
    if (indent >= 0) out += '\n';
    return out;
}

}  // namespace fmetric
