#include "fmetric/cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <optional>
#include <ostream>

#include "CLI11.hpp"

#include "fmetric/banach.hpp"
#include "fmetric/derive.hpp"
#include "fmetric/errors.hpp"
#include "fmetric/expr.hpp"
#include "fmetric/io.hpp"
#include "fmetric/report.hpp"
#include "fmetric/sequences.hpp"
#include "fmetric/space.hpp"
#include "fmetric/topology.hpp"

namespace fmetric::cli {

using nlohmann::json;

namespace {

enum class Command { Check, Classify, Derive, Topology, Sequence, Fixpoint, Net, Examples };

struct RunConfig {
    Command command = Command::Examples;
    std::string space;
    std::string gauge = "log";
    std::optional<double> alpha;
    std::string out;
    std::optional<long long> seed;

    // derive
    std::string csv_out;
    bool sandwich = false;

    // topology / net
    std::string mode;
    std::string center;
    double r = 0.0;
    bool closed = false;
    std::string subset;
    double tol = 0.0;
    std::string seq;
    std::string x;
    std::string y;

    // sequence
    double eps = 0.0;
    double threshold = 0.5;

    // fixpoint
    std::string map;
    std::string x0;
    std::optional<double> k;
    std::string grid;
    std::string domain;
    bool trace = false;
};

struct Outcome {
    json report;
    bool pass = true;
};

Gauge resolve_gauge(const RunConfig& c) {
    Gauge g = load_gauge(c.gauge);
    return c.alpha ? g.with_alpha(*c.alpha) : g;
}

json space_summary(const FiniteSpace& s) {
    return {{"kind", s.kind()}, {"points", s.size()}};
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto pos = text.find(',', start);
        std::string item = text.substr(start, pos == std::string::npos ? std::string::npos : pos - start);
        item.erase(0, item.find_first_not_of(" \t"));
        item.erase(item.find_last_not_of(" \t") + 1);
        if (!item.empty()) out.push_back(item);
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return out;
}

std::vector<double> split_numbers(const std::string& text, char sep, const char* flag) {
    std::vector<double> out;
    std::size_t start = 0;
    for (;;) {
        const auto pos = text.find(sep, start);
        const std::string item = text.substr(start, pos == std::string::npos ? std::string::npos : pos - start);
        try {
            std::size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw ArgumentError(std::string(flag) + ": '" + item + "' is not a number");
        }
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return out;
}

SubsetMask resolve_subset(const FiniteSpace& s, const std::string& subset) {
    if (subset.empty()) return SubsetMask(s.size(), true);
    return SubsetMask::from_labels(s, split_list(subset));
}

std::size_t require_index(const FiniteSpace& s, const std::string& label, const char* flag) {
    if (label.empty()) throw ArgumentError(std::string(flag) + " is required");
    const Point p = s.resolve(label);
    if (const auto* i = std::get_if<std::size_t>(&p)) return *i;
    throw UnknownLabelError(std::string(flag) + ": '" + label + "' is not a point of the space");
}

Point require_point(const FiniteSpace& s, const std::string& label, const char* flag) {
    if (label.empty()) throw ArgumentError(std::string(flag) + " is required");
    return s.resolve(label);
}

Outcome run_check(const RunConfig& c) {
    const FiniteSpace s = load_space(c.space);
    const Gauge g = resolve_gauge(c);
    Outcome o;
    const auto axioms = check_D1_D2(s);
    o.report = {{"command", "check"},
                {"space", space_summary(s)},
                {"gauge", to_json(g)},
                {"d1_d2", to_json(s, axioms)},
                {"d3", nullptr}};
    if (!axioms.pass()) {
        o.pass = false;
        return o;
    }
    const auto d3 = check_D3(s, g);
    o.report["d3"] = to_json(s, d3);
    o.pass = d3.pass;
    return o;
}

Outcome run_classify(const RunConfig& c) {
    const FiniteSpace s = load_space(c.space);
    const auto r = classify(s);
    return {{{"command", "classify"}, {"space", space_summary(s)}, {"report", to_json(s, r)}},
            r.axioms.pass()};
}

Outcome run_derive(const RunConfig& c) {
    const FiniteSpace s = load_space(c.space);
    const auto dm = derive_metric(s);
    Outcome o;
    o.report = {{"command", "derive"}, {"space", space_summary(s)}, {"derived", to_json(s, dm)}};
    o.pass = dm.axioms.pass();
    if (c.sandwich || c.alpha) {
        const Gauge g = resolve_gauge(c);
        const auto sw = check_sandwich(s, g, dm);
        o.report["gauge"] = to_json(g);
        o.report["sandwich"] = to_json(s, sw);
        o.pass = o.pass && sw.pass;
    }
    if (!c.csv_out.empty()) write_file(c.csv_out, matrix_to_csv(s, dm.d));
    return o;
}

Outcome run_topology(const RunConfig& c) {
    const FiniteSpace s = load_space(c.space);
    Outcome o;
    o.report = {{"command", "topology"}, {"mode", c.mode}, {"space", space_summary(s)}};
    if (c.mode == "ball") {
        const Ball b{require_index(s, c.center, "--center"), c.r, c.closed};
        o.report["ball"] = {{"center", s.label(b.center)}, {"radius", number(b.radius)}, {"closed", b.closed}};
        o.report["members"] = to_json(s, ball_members(s, b));
    } else if (c.mode == "open") {
        const auto r = is_F_open(s, resolve_subset(s, c.subset));
        o.report["result"] = to_json(s, r);
        o.pass = r.open;
    } else if (c.mode == "closure") {
        const auto m = resolve_subset(s, c.subset);
        o.report["subset"] = to_json(s, m);
        o.report["tol"] = number(c.tol);
        o.report["closure"] = to_json(s, closure_approx(s, m, c.tol));
    } else if (c.mode == "jal") {
        if (c.seq.empty()) throw ArgumentError("--seq is required for --mode jal");
        const auto seq = load_sequence(s, c.seq, c.tol);
        const auto r = check_JAL(s, seq, require_point(s, c.x, "--x"), c.tol);
        o.report["result"] = to_json(s, r);
        o.pass = r.pass;
    } else {
        throw ArgumentError("--mode must be one of ball, open, closure, jal");
    }
    return o;
}

Outcome run_sequence(const RunConfig& c) {
    const FiniteSpace s = load_space(c.space);
    if (c.seq.empty()) throw ArgumentError("--seq is required");
    const auto seq = load_sequence(s, c.seq, c.tol);
    Outcome o;
    o.report = {{"command", "sequence"},
                {"mode", c.mode},
                {"space", space_summary(s)},
                {"tail_start", seq.tail_start()},
                {"tol", number(seq.tol())}};
    if (c.mode == "convergent") {
        const auto r = is_F_convergent_to(s, seq, require_point(s, c.x, "--x"));
        o.report["result"] = to_json(r);
        o.pass = r.pass;
    } else if (c.mode == "cauchy") {
        const auto r = is_F_cauchy(s, seq);
        o.report["result"] = to_json(r);
        o.pass = r.pass;
    } else if (c.mode == "unique") {
        const auto r = assert_limit_unique(s, seq, require_point(s, c.x, "--x"),
                                           require_point(s, c.y, "--y"));
        o.report["result"] = to_json(r);
        o.pass = r.pass;
    } else if (c.mode == "implies-cauchy") {
        const Gauge g = resolve_gauge(c);
        const auto r = convergent_implies_cauchy(s, g, seq, require_point(s, c.x, "--x"), c.eps);
        o.report["gauge"] = to_json(g);
        o.report["result"] = to_json(r);
        o.pass = r.pass;
    } else if (c.mode == "constant") {
        const auto r = eventually_constant(s, seq, c.threshold);
        o.report["result"] = to_json(r);
        o.pass = r.pass;
    } else {
        throw ArgumentError("--mode must be one of convergent, cauchy, unique, implies-cauchy, constant");
    }
    return o;
}

Outcome run_net(const RunConfig& c) {
    const FiniteSpace s = load_space(c.space);
    const auto m = resolve_subset(s, c.subset);
    const auto r = greedy_net(s, m, c.r);
    return {{{"command", "net"}, {"space", space_summary(s)}, {"cover", to_json(s, r)}}, r.covered};
}

// A --space value names a finite space when it is shorthand, JSON or an
// existing file; anything else is read as a distance expression in x and y.
bool names_finite_space(const std::string& source) {
    if (source.empty()) return false;
    const auto first = source.find_first_not_of(" \t");
    if (first != std::string::npos && source[first] == '{') return true;
    for (const char* kind : {"hybrid:", "exp:", "square_grid:"}) {
        if (source.starts_with(kind)) return true;
    }
    std::error_code ec;
    return std::filesystem::is_regular_file(source, ec);
}

Outcome run_fixpoint(const RunConfig& c) {
    if (c.map.empty()) throw ArgumentError("--map is required");
    if (c.x0.empty()) throw ArgumentError("--x0 is required");
    const Expression map = Expression::parse(c.map);
    const Gauge g = resolve_gauge(c);
    Outcome o;
    o.report = {{"command", "fixpoint"}, {"map", c.map}, {"gauge", to_json(g)}, {"eps", number(c.eps)}};

    if (names_finite_space(c.space)) {
        const FiniteSpace s = load_space(c.space);
        std::vector<std::size_t> table;
        for (std::size_t i = 0; i < s.size(); ++i) {
            const double coord = s.parametric() ? s.coords()[i] : std::stod(s.label(i));
            const Point image = s.resolve(map(coord));
            const auto* idx = std::get_if<std::size_t>(&image);
            if (!idx) {
                throw DomainError("map sends " + s.label(i) + " to " + s.describe(image) +
                                  ", outside the declared point set");
            }
            table.push_back(*idx);
        }
        auto p = finite_problem(s, std::move(table), g);
        p.k = c.k;
        const std::size_t x0 = require_index(s, c.x0, "--x0");
        const auto r = solve_fixed_point(p, x0, c.eps, c.trace);
        o.report["space"] = space_summary(s);
        o.report["result"] = to_json(r, [&](std::size_t i) { return json(s.label(i)); });
        o.pass = r.residual <= c.eps;
        return o;
    }

    const std::string dist_text = c.space.empty() ? "abs(x-y)" : c.space;
    const Expression dist = Expression::parse(dist_text);
    double x0 = 0.0;
    try {
        x0 = std::stod(c.x0);
    } catch (const std::exception&) {
        throw ArgumentError("--x0: '" + c.x0 + "' is not a number");
    }
    std::vector<double> grid;
    if (c.grid.empty()) {
        const double half = std::max(10.0, 2.0 * std::abs(x0));
        grid = linspace(x0 - half, x0 + half, 201);
    } else {
        const auto g3 = split_numbers(c.grid, ':', "--grid");
        if (g3.size() != 3) throw ArgumentError("--grid expects lo:hi:count");
        grid = linspace(g3[0], g3[1], static_cast<std::size_t>(g3[2]));
    }
    std::optional<std::pair<double, double>> domain;
    if (!c.domain.empty()) {
        const auto d2 = split_numbers(c.domain, ':', "--domain");
        if (d2.size() != 2) throw ArgumentError("--domain expects lo:hi");
        domain = std::make_pair(d2[0], d2[1]);
    }
    auto p = real_problem([dist](double a, double b) { return a == b ? 0.0 : dist(a, b); },
                          [map](double a) { return map(a); }, std::move(grid), g, domain);
    p.k = c.k;
    const auto r = solve_fixed_point(p, x0, c.eps, c.trace);
    o.report["space"] = {{"kind", "real"}, {"distance", dist_text}};
    o.report["result"] = to_json(r, [](double v) { return number(v); });
    o.pass = r.residual <= c.eps;
    return o;
}

Outcome run_examples() {
    json gallery = examples_gallery();
    const bool pass = gallery["hybrid"]["pass"].get<bool>() && gallery["exp"]["pass"].get<bool>() &&
                      gallery["square_grid"]["pass"].get<bool>();
    return {{{"command", "examples"}, {"examples", std::move(gallery)}}, pass};
}

Outcome dispatch(const RunConfig& c) {
    switch (c.command) {
        case Command::Check: return run_check(c);
        case Command::Classify: return run_classify(c);
        case Command::Derive: return run_derive(c);
        case Command::Topology: return run_topology(c);
        case Command::Sequence: return run_sequence(c);
        case Command::Fixpoint: return run_fixpoint(c);
        case Command::Net: return run_net(c);
        case Command::Examples: return run_examples();
    }
    return {};
}

}  // namespace

json examples_gallery() {
    json out;

    {
        const FiniteSpace s = gen_hybrid(5);
        const Gauge g = Gauge::log(std::log(3.0));
        const auto d3 = check_D3(s, g);
        const auto cls = classify(s);
        out["hybrid"] = {{"space", "hybrid:5"},
                         {"gauge", to_json(g)},
                         {"d3", to_json(s, d3)},
                         {"min_alpha_log", to_json(s, cls.min_alpha_log)},
                         {"min_K_relaxed", number(cls.min_K_relaxed)},
                         {"D(1,3)", number(s(1, 3))},
                         {"D(1,2)+D(2,3)", number(s(1, 2) + s(2, 3))},
                         {"pass", d3.pass && std::abs(cls.min_alpha_log.value - std::log(3.0)) <= 1e-12}};
    }

    {
        const FiniteSpace s = gen_exp(4);
        const Gauge g = Gauge::neg_reciprocal(1.0);
        const auto d3 = check_D3(s, g);
        auto trend = json::array();
        bool increasing = true;
        double prev = 0.0;
        for (int n = 1; n <= 8; ++n) {
            const double k = classify(gen_exp(n)).min_K_relaxed;
            if (n > 1 && !(k > prev)) increasing = false;
            prev = k;
            trend.push_back({{"n", n}, {"min_K_relaxed", number(k)}});
        }
        out["exp"] = {{"space", "exp:4"},
                      {"gauge", to_json(g)},
                      {"d3", to_json(s, d3)},
                      {"relaxed_trend", std::move(trend)},
                      {"relaxed_strictly_increasing", increasing},
                      {"pass", d3.pass && increasing}};
    }

    {
        auto table = json::array();
        bool pass = true;
        for (int n : {2, 4, 8, 16, 32}) {
            const FiniteSpace s = gen_square_grid(n);
            const auto a = min_alpha(s, Gauge::log());
            const double expected = std::log(static_cast<double>(n));
            pass = pass && std::abs(a.value - expected) <= 1e-12 * expected;
            table.push_back({{"n", n},
                             {"min_alpha_log", number(a.value)},
                             {"ln_n", number(expected)},
                             {"witness", a.witness ? to_json(s, *a.witness) : json(nullptr)}});
        }
        out["square_grid"] = {{"min_alpha_table", std::move(table)}, {"pass", pass}};
    }
    return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Verify F-metric axioms, derive chain metrics and solve contractions"};
    app.require_subcommand(1);
    RunConfig c;

    auto common = [&](CLI::App* sub, bool needs_space) {
        auto* opt = sub->add_option("--space", c.space, "kind:n shorthand, JSON descriptor, or CSV/JSON file");
        if (needs_space) opt->required();
        sub->add_option("--out", c.out, "Write the JSON report to this path");
        sub->add_option("--seed", c.seed, "Reserved for randomized suites");
    };
    auto gauge = [&](CLI::App* sub) {
        sub->add_option("--gauge", c.gauge, "log, neg_reciprocal, JSON descriptor or file");
        sub->add_option("--alpha", c.alpha, "Gauge shift alpha (overrides the descriptor)");
    };

    auto* check = app.add_subcommand("check", "Verify (D1)-(D3) for a gauge");
    common(check, true);
    gauge(check);

    auto* cls = app.add_subcommand("classify", "Smallest alpha and relaxed/b-metric constants");
    common(cls, true);

    auto* derive = app.add_subcommand("derive", "Chain-infimum metric and sandwich check");
    common(derive, true);
    gauge(derive);
    derive->add_flag("--sandwich", c.sandwich, "Check the sandwich bound for the gauge");
    derive->add_option("--csv", c.csv_out, "Export the derived metric as CSV");

    auto* topo = app.add_subcommand("topology", "Balls, open sets, closures and the closed-ball condition");
    common(topo, true);
    topo->add_option("--mode", c.mode, "ball | open | closure | jal")->required();
    topo->add_option("--center", c.center, "Ball center label");
    topo->add_option("--r", c.r, "Ball radius");
    topo->add_flag("--closed", c.closed, "Closed ball");
    topo->add_option("--subset", c.subset, "Comma separated labels (default: all points)");
    topo->add_option("--tol", c.tol, "Closure / limsup tolerance");
    topo->add_option("--seq", c.seq, "Sequence JSON (inline or file)");
    topo->add_option("--x", c.x, "Limit point");

    auto* seqc = app.add_subcommand("sequence", "Convergence and Cauchy verdicts on sampled sequences");
    common(seqc, true);
    gauge(seqc);
    seqc->add_option("--mode", c.mode, "convergent | cauchy | unique | implies-cauchy | constant")->required();
    seqc->add_option("--seq", c.seq, "Sequence JSON (inline or file)")->required();
    seqc->add_option("--tol", c.tol, "Tolerance when the sequence omits one");
    seqc->add_option("--x", c.x, "Candidate limit");
    seqc->add_option("--y", c.y, "Second candidate limit");
    seqc->add_option("--eps", c.eps, "Cauchy epsilon");
    seqc->add_option("--threshold", c.threshold, "Stabilization threshold");

    auto* fix = app.add_subcommand("fixpoint", "Certified fixed-point iteration");
    common(fix, false);
    gauge(fix);
    fix->add_option("--map", c.map, "Map expression in x")->required();
    fix->add_option("--x0", c.x0, "Starting point")->required();
    fix->add_option("--eps", c.eps, "Target tolerance")->required();
    fix->add_option("--k", c.k, "Contraction constant (estimated when omitted)");
    fix->add_option("--grid", c.grid, "lo:hi:count sample grid for estimating k");
    fix->add_option("--domain", c.domain, "lo:hi declared interval");
    fix->add_flag("--trace", c.trace, "Include the iterate trace");

    auto* net = app.add_subcommand("net", "Greedy r-net cover");
    common(net, true);
    net->add_option("--r", c.r, "Ball radius")->required();
    net->add_option("--subset", c.subset, "Comma separated labels (default: all points)");

    auto* examples = app.add_subcommand("examples", "Reproduce the built-in example families");
    examples->add_option("--out", c.out, "Write the JSON report to this path");
    examples->add_option("--seed", c.seed, "Reserved for randomized suites");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kPass;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    }

    const std::pair<CLI::App*, Command> table[] = {
        {check, Command::Check},     {cls, Command::Classify},  {derive, Command::Derive},
        {topo, Command::Topology},   {seqc, Command::Sequence}, {fix, Command::Fixpoint},
        {net, Command::Net},         {examples, Command::Examples}};
    for (auto [sub, cmd] : table) {
        if (sub->parsed()) c.command = cmd;
    }

    try {
        const Outcome o = dispatch(c);
        const std::string text = dump_report(o.report);
        if (c.out.empty()) out << text;
        else write_file(c.out, text);
        return o.pass ? kPass : kFail;
    } catch (const Error& e) {
        err << dump_report(json{{"error", e.kind()}, {"message", e.what()}});
        return kUsage;
    } catch (const nlohmann::json::exception& e) {
        err << dump_report(json{{"error", "parse"}, {"message", e.what()}});
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << dump_report(json{{"error", "argument"}, {"message", e.what()}});
        return kUsage;
    }
}

}  // namespace fmetric::cli
