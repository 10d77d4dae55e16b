#include "fmetric/io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "fmetric/errors.hpp"

namespace fmetric {

using nlohmann::json;

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const auto pos = line.find(sep, start);
        out.push_back(trim(line.substr(start, pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

double parse_double(std::string_view field, std::size_t row) {
    double v = 0.0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    if (first != last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || field.empty()) {
        throw ParseError("csv: row " + std::to_string(row) + ": '" + std::string(field) +
                         "' is not a number");
    }
    return v;
}

int shorthand_n(const json& j) {
    if (!j.contains("n") || !j["n"].is_number_integer()) {
        throw ParseError("space descriptor needs an integer \"n\"");
    }
    return j["n"].get<int>();
}

json parse_json(std::string_view text, const std::string& origin) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(origin + ": " + e.what());
    }
}

bool looks_inline_json(std::string_view s) {
    s = trim(s);
    return !s.empty() && (s.front() == '{' || s.front() == '[');
}

Matrix matrix_from_rows(const json& rows) {
    if (!rows.is_array()) throw ParseError("matrix data must be an array of rows");
    const std::size_t n = rows.size();
    Matrix d(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!rows[i].is_array() || rows[i].size() != n) {
            throw ParseError("matrix is not square: row " + std::to_string(i) + " has " +
                             std::to_string(rows[i].is_array() ? rows[i].size() : 0) +
                             " entries, expected " + std::to_string(n));
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (!rows[i][j].is_number()) throw ParseError("matrix entries must be numbers");
            d(i, j) = rows[i][j].get<double>();
        }
    }
    return d;
}

std::vector<std::string> labels_or_default(const json& data, std::size_t n) {
    std::vector<std::string> labels;
    if (data.is_object() && data.contains("labels")) {
        for (const auto& l : data["labels"]) {
            labels.push_back(l.is_string() ? l.get<std::string>() : l.dump());
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    }
    return labels;
}

}  // namespace

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write '" + path + "'");
    out << content;
    if (!out) throw IoError("write failed for '" + path + "'");
}

FiniteSpace parse_space_csv(std::string_view text) {
    std::vector<std::string_view> lines;
    for (auto line : split(text, '\n')) {
        if (!line.empty()) lines.push_back(line);
    }
    if (lines.empty()) throw ParseError("csv: empty input");
    std::vector<std::string> labels;
    for (auto l : split(lines[0], ',')) labels.emplace_back(l);
    const std::size_t n = labels.size();
    if (lines.size() - 1 != n) {
        throw ParseError("csv: matrix is not square: " + std::to_string(n) + " labels but " +
                         std::to_string(lines.size() - 1) + " rows");
    }
    Matrix d(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto fields = split(lines[i + 1], ',');
        if (fields.size() != n) {
            throw ParseError("csv: matrix is not square: row " + std::to_string(i + 1) + " has " +
                             std::to_string(fields.size()) + " entries, expected " +
                             std::to_string(n));
        }
        for (std::size_t j = 0; j < n; ++j) d(i, j) = parse_double(fields[j], i + 1);
    }
    return FiniteSpace(std::move(labels), std::move(d));
}

FiniteSpace space_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
        throw ParseError("space descriptor needs a string \"kind\"");
    }
    const auto kind = j["kind"].get<std::string>();
    if (kind == "hybrid") return gen_hybrid(shorthand_n(j));
    if (kind == "exp") return gen_exp(shorthand_n(j));
    if (kind == "square_grid") return gen_square_grid(shorthand_n(j));
    if (!j.contains("data")) throw ParseError("space descriptor of kind " + kind + " needs \"data\"");
    const json& data = j["data"];
    if (kind == "matrix") {
        const json& rows = data.is_object() ? data.value("matrix", json()) : data;
        Matrix d = matrix_from_rows(rows);
        return FiniteSpace(labels_or_default(data, d.size()), std::move(d));
    }
    if (kind == "two_metric") {
        if (!data.is_object() || !data.contains("sigma")) {
            throw ParseError("two_metric data needs \"sigma\"");
        }
        const json& sigma = data["sigma"];
        const std::size_t n = sigma.size();
        std::vector<double> flat;
        flat.reserve(n * n * n);
        for (const auto& plane : sigma) {
            if (!plane.is_array() || plane.size() != n) throw ParseError("sigma must be n x n x n");
            for (const auto& row : plane) {
                if (!row.is_array() || row.size() != n) throw ParseError("sigma must be n x n x n");
                for (const auto& v : row) flat.push_back(v.get<double>());
            }
        }
        return from_two_metric(TwoMetricTable(labels_or_default(data, n), std::move(flat)));
    }
    throw ParseError("unknown space kind '" + kind + "'");
}

FiniteSpace load_space(std::string_view source) {
    source = trim(source);
    if (looks_inline_json(source)) return space_from_json(parse_json(source, "space descriptor"));
    const auto colon = source.find(':');
    if (colon != std::string_view::npos) {
        const auto kind = source.substr(0, colon);
        if (kind == "hybrid" || kind == "exp" || kind == "square_grid") {
            int n = 0;
            const auto digits = source.substr(colon + 1);
            auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
            if (ec != std::errc() || ptr != digits.data() + digits.size()) {
                throw ParseError("space shorthand '" + std::string(source) + "': bad size");
            }
            return space_from_json(json{{"kind", std::string(kind)}, {"n", n}});
        }
    }
    const std::string path(source);
    const std::string text = read_file(path);
    const bool is_json = path.ends_with(".json") || looks_inline_json(text);
    if (is_json) return space_from_json(parse_json(text, path));
    return parse_space_csv(text);
}

Gauge gauge_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind")) throw ParseError("gauge descriptor needs \"kind\"");
    const auto kind = j["kind"].get<std::string>();
    const double alpha = j.value("alpha", 0.0);
    if (kind == "log") return Gauge::log(alpha);
    if (kind == "neg_reciprocal") return Gauge::neg_reciprocal(alpha);
    if (kind == "table") {
        if (!j.contains("table") || !j["table"].is_array()) {
            throw ParseError("table gauge needs \"table\": [[t, f], ...]");
        }
        std::vector<Knot> knots;
        for (const auto& k : j["table"]) {
            if (!k.is_array() || k.size() != 2) throw ParseError("table gauge knots are [t, f] pairs");
            knots.push_back({k[0].get<double>(), k[1].get<double>()});
        }
        return Gauge::table(std::move(knots), alpha);
    }
    throw ParseError("unknown gauge kind '" + kind + "'");
}

Gauge load_gauge(std::string_view source) {
    source = trim(source);
    if (source == "log") return Gauge::log();
    if (source == "neg_reciprocal") return Gauge::neg_reciprocal();
    if (looks_inline_json(source)) return gauge_from_json(parse_json(source, "gauge descriptor"));
    const std::string path(source);
    return gauge_from_json(parse_json(read_file(path), path));
}

SequenceSample sequence_from_json(const FiniteSpace& s, const json& j, double default_tol) {
    const json& pts = j.is_object() ? j.value("points", json()) : j;
    if (!pts.is_array()) throw ParseError("sequence needs a \"points\" array");
    std::vector<Point> points;
    for (const auto& p : pts) {
        if (p.is_string()) points.push_back(s.resolve(p.get<std::string>()));
        else if (p.is_number()) points.push_back(s.resolve(p.get<double>()));
        else throw ParseError("sequence points are labels or coordinates");
    }
    double tol = default_tol;
    std::optional<std::size_t> tail;
    if (j.is_object()) {
        tol = j.value("tol", default_tol);
        if (j.contains("tail_start")) tail = j["tail_start"].get<std::size_t>();
    }
    return SequenceSample(std::move(points), tol, tail);
}

SequenceSample load_sequence(const FiniteSpace& s, std::string_view source, double default_tol) {
    source = trim(source);
    if (looks_inline_json(source)) {
        return sequence_from_json(s, parse_json(source, "sequence"), default_tol);
    }
    const std::string path(source);
    return sequence_from_json(s, parse_json(read_file(path), path), default_tol);
}

std::string matrix_to_csv(const FiniteSpace& s, const Matrix& d) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ',';
        out += s.label(i);
    }
    out += '\n';
    for (std::size_t i = 0; i < d.size(); ++i) {
        for (std::size_t j = 0; j < d.size(); ++j) {
            if (j) out += ',';
            out += format_number(d(i, j));
        }
        out += '\n';
    }
    return out;
}

}  // namespace fmetric
