#include "fmetric/space.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <set>
#include <utility>

#include "fmetric/errors.hpp"

namespace fmetric {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::optional<double> parse_number(std::string_view text) {
    double v = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    if (first != last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last) return std::nullopt;
    return v;
}

std::vector<std::string> integer_labels(int n) {
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) labels.push_back(std::to_string(i));
    return labels;
}

FiniteSpace generate(std::vector<std::string> labels, std::vector<double> coords, Kernel kernel,
                     std::string kind) {
    Matrix d(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i) {
        for (std::size_t j = 0; j < coords.size(); ++j) {
            d(i, j) = i == j ? 0.0 : kernel(coords[i], coords[j]);
        }
    }
    return FiniteSpace(std::move(labels), std::move(d), std::move(coords), std::move(kernel),
                       std::move(kind));
}

// Largest f(D) - f(d_sp) over unordered pairs, ties broken by label order.
struct Gap {
    double value = -kInf;
    std::optional<PairWitness> witness;
};

template <class Score>
Gap worst_pair(const FiniteSpace& s, Score&& score) {
    Gap gap;
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            const double v = score(i, j);
            const PairWitness w{i, j};
            if (!gap.witness || v > gap.value ||
                (v == gap.value && label_pair_less(s, w, *gap.witness))) {
                gap.value = v;
                gap.witness = w;
            }
        }
    }
    return gap;
}

}  // namespace

std::string format_label(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

FiniteSpace::FiniteSpace(std::vector<std::string> labels, Matrix d)
    : labels_(std::move(labels)), d_(std::move(d)) {
    if (labels_.size() != d_.size()) {
        throw ArgumentError("space: " + std::to_string(labels_.size()) + " labels for a " +
                            std::to_string(d_.size()) + "x" + std::to_string(d_.size()) +
                            " matrix");
    }
    if (labels_.empty()) throw ArgumentError("space: no points");
    std::set<std::string_view> seen;
    for (const auto& l : labels_) {
        if (!seen.insert(l).second) throw ArgumentError("space: duplicate label '" + l + "'");
    }
    for (std::size_t i = 0; i < d_.size(); ++i) {
        for (std::size_t j = 0; j < d_.size(); ++j) {
            const double v = d_(i, j);
            if (!(v >= 0.0) || !std::isfinite(v)) {
                throw ArgumentError("space: entry D(" + labels_[i] + "," + labels_[j] +
                                    ") = " + std::to_string(v) + " is not a finite nonnegative real");
            }
        }
    }
}

FiniteSpace::FiniteSpace(std::vector<std::string> labels, Matrix d, std::vector<double> coords,
                         Kernel kernel, std::string kind)
    : FiniteSpace(std::move(labels), std::move(d)) {
    if (coords.size() != labels_.size()) throw ArgumentError("space: coordinate count mismatch");
    coords_ = std::move(coords);
    kernel_ = std::move(kernel);
    kind_ = std::move(kind);
}

std::optional<std::size_t> FiniteSpace::find(std::string_view label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i] == label) return i;
    }
    return std::nullopt;
}

std::size_t FiniteSpace::index_of(std::string_view label) const {
    if (auto i = find(label)) return *i;
    throw UnknownLabelError("unknown point label '" + std::string(label) + "'");
}

Point FiniteSpace::resolve(std::string_view label) const {
    if (auto i = find(label)) return *i;
    if (auto v = parse_number(label)) return resolve(*v);
    throw UnknownLabelError("unknown point label '" + std::string(label) + "'");
}

Point FiniteSpace::resolve(double coordinate) const {
    auto close = [&](double c) {
        return std::abs(c - coordinate) <= 1e-12 * std::max(1.0, std::abs(coordinate));
    };
    if (parametric()) {
        for (std::size_t i = 0; i < coords_.size(); ++i) {
            if (close(coords_[i])) return i;
        }
        if (!std::isfinite(coordinate)) throw ArgumentError("non-finite coordinate");
        return coordinate;
    }
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (auto v = parse_number(labels_[i]); v && close(*v)) return i;
    }
    throw UnknownLabelError("no point with coordinate " + format_label(coordinate) +
                            " in a non-parametric space");
}

double FiniteSpace::coordinate(const Point& p) const {
    if (const auto* i = std::get_if<std::size_t>(&p)) {
        if (*i >= size()) throw UnknownLabelError("point index out of range");
        return coords_[*i];
    }
    return std::get<double>(p);
}

double FiniteSpace::distance(const Point& a, const Point& b) const {
    const auto* ia = std::get_if<std::size_t>(&a);
    const auto* ib = std::get_if<std::size_t>(&b);
    if (ia && ib) {
        if (*ia >= size() || *ib >= size()) throw UnknownLabelError("point index out of range");
        return d_(*ia, *ib);
    }
    if (!parametric()) {
        throw ArgumentError("coordinate points require a parametric space");
    }
    const double ca = coordinate(a);
    const double cb = coordinate(b);
    return ca == cb ? 0.0 : kernel_(ca, cb);
}

std::string FiniteSpace::describe(const Point& p) const {
    if (const auto* i = std::get_if<std::size_t>(&p)) return label(*i);
    return format_label(std::get<double>(p));
}

TwoMetricTable::TwoMetricTable(std::vector<std::string> labels, std::vector<double> sigma)
    : labels_(std::move(labels)), sigma_(std::move(sigma)) {
    const std::size_t n = labels_.size();
    if (sigma_.size() != n * n * n) {
        throw ArgumentError("two-metric table: expected " + std::to_string(n * n * n) +
                            " entries, got " + std::to_string(sigma_.size()));
    }
}

void TwoMetricTable::validate() const {
    const std::size_t n = size();
    auto name = [&](std::size_t a, std::size_t b, std::size_t c) {
        return "(" + labels_[a] + "," + labels_[b] + "," + labels_[c] + ")";
    };
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            for (std::size_t c = 0; c < n; ++c) {
                const double v = (*this)(a, b, c);
                if (!(v >= 0.0) || !std::isfinite(v)) {
                    throw ArgumentError("two-metric table: invalid value at " + name(a, b, c));
                }
                const bool coincide = a == b || b == c || a == c;
                if (coincide != (v == 0.0)) {
                    throw ArgumentError("two-metric table: zero pattern violated at " +
                                        name(a, b, c));
                }
                if (v != (*this)(b, a, c) || v != (*this)(a, c, b) || v != (*this)(c, b, a)) {
                    throw ArgumentError("two-metric table: not permutation invariant at " +
                                        name(a, b, c));
                }
            }
        }
    }
}

FiniteSpace gen_hybrid(int n) {
    if (n < 4) throw ArgumentError("gen_hybrid: n must be >= 4");
    std::vector<double> coords;
    for (int i = 0; i <= n; ++i) coords.push_back(i);
    auto kernel = [](double x, double y) {
        const bool inside = x >= 0 && x <= 3 && y >= 0 && y <= 3;
        return inside ? (x - y) * (x - y) : std::abs(x - y);
    };
    return generate(integer_labels(n), std::move(coords), kernel, "hybrid");
}

FiniteSpace gen_exp(int n) {
    if (n < 1) throw ArgumentError("gen_exp: n must be >= 1");
    std::vector<double> coords;
    for (int i = 0; i <= n; ++i) coords.push_back(i);
    auto kernel = [](double x, double y) { return x == y ? 0.0 : std::exp(std::abs(x - y)); };
    return generate(integer_labels(n), std::move(coords), kernel, "exp");
}

FiniteSpace gen_square_grid(int n) {
    if (n < 2) throw ArgumentError("gen_square_grid: n must be >= 2");
    std::vector<double> coords;
    std::vector<std::string> labels;
    for (int i = 0; i <= n; ++i) {
        coords.push_back(static_cast<double>(i) / n);
        labels.push_back(format_label(coords.back()));
    }
    auto kernel = [](double x, double y) { return (x - y) * (x - y); };
    return generate(std::move(labels), std::move(coords), kernel, "square_grid");
}

FiniteSpace from_two_metric(const TwoMetricTable& t) {
    t.validate();
    const std::size_t n = t.size();
    Matrix d(n);
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            double best = 0.0;
            for (std::size_t a = 0; a < n; ++a) best = std::max(best, t(a, x, y));
            d(x, y) = best;
        }
    }
    FiniteSpace s(t.labels(), std::move(d));
    return s;
}

bool label_pair_less(const FiniteSpace& s, PairWitness a, PairWitness b) {
    return std::pair<const std::string&, const std::string&>(s.label(a.i), s.label(a.j)) <
           std::pair<const std::string&, const std::string&>(s.label(b.i), s.label(b.j));
}

D1D2Report check_D1_D2(const FiniteSpace& s) {
    D1D2Report r;
    const std::size_t n = s.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double v = s(i, j);
            if ((i == j && v != 0.0) || (i != j && v == 0.0)) r.d1_violations.push_back({i, j});
            if (i < j && v != s(j, i)) r.d2_violations.push_back({i, j});
        }
    }
    r.d1_ok = r.d1_violations.empty();
    r.d2_ok = r.d2_violations.empty();
    return r;
}

void require_d1_d2(const FiniteSpace& s) {
    const auto r = check_D1_D2(s);
    if (r.pass()) return;
    const auto& w = r.d1_ok ? r.d2_violations.front() : r.d1_violations.front();
    throw PreconditionError(std::string(r.d1_ok ? "(D2)" : "(D1)") + " fails at (" +
                            s.label(w.i) + "," + s.label(w.j) + ")");
}

Matrix shortest_chain_infimum(const Matrix& d) {
    const std::size_t n = d.size();
    Matrix out(n, 0.0);
    std::vector<double> dist(n);
    std::vector<char> done(n);
    // Dense Dijkstra from every source. Rounded addition is monotone, so this
    // finds the exact minimum of left-to-right chain sums.
    for (std::size_t src = 0; src < n; ++src) {
        std::fill(dist.begin(), dist.end(), kInf);
        std::fill(done.begin(), done.end(), 0);
        dist[src] = 0.0;
        for (std::size_t round = 0; round < n; ++round) {
            std::size_t u = n;
            for (std::size_t v = 0; v < n; ++v) {
                if (!done[v] && (u == n || dist[v] < dist[u])) u = v;
            }
            done[u] = 1;
            for (std::size_t v = 0; v < n; ++v) {
                if (done[v]) continue;
                const double cand = dist[u] + d(u, v);
                if (cand < dist[v]) dist[v] = cand;
            }
        }
        for (std::size_t j = src + 1; j < n; ++j) {
            out(src, j) = dist[j];
            out(j, src) = dist[j];
        }
    }
    return out;
}

Matrix shortest_chain_infimum(const FiniteSpace& s) {
    require_d1_d2(s);
    return shortest_chain_infimum(s.matrix());
}

D3Report check_D3(const FiniteSpace& s, const Gauge& g, const Matrix& chain) {
    const Gap gap = worst_pair(s, [&](std::size_t i, std::size_t j) {
        return g(s(i, j)) - g(chain(i, j));
    });
    D3Report r;
    r.alpha = g.alpha();
    r.worst_gap = gap.value;
    r.witness = gap.witness;
    r.pass = !gap.witness || gap.value <= g.alpha() + kGaugeSlack;
    return r;
}

D3Report check_D3(const FiniteSpace& s, const Gauge& g) {
    return check_D3(s, g, shortest_chain_infimum(s));
}

AlphaEstimate min_alpha(const FiniteSpace& s, const Gauge& g) {
    const Matrix chain = shortest_chain_infimum(s);
    const Gap gap = worst_pair(s, [&](std::size_t i, std::size_t j) {
        return g(s(i, j)) - g(chain(i, j));
    });
    AlphaEstimate a;
    a.witness = gap.witness;
    a.value = gap.witness ? std::max(0.0, gap.value) : 0.0;
    return a;
}

ClassificationReport classify(const FiniteSpace& s) {
    ClassificationReport r;
    r.axioms = check_D1_D2(s);
    if (!r.axioms.pass()) return r;

    const Matrix chain = shortest_chain_infimum(s.matrix());
    const Gauge ln = Gauge::log();

    const Gap alpha = worst_pair(s, [&](std::size_t i, std::size_t j) {
        return ln(s(i, j)) - ln(chain(i, j));
    });
    if (alpha.witness) {
        r.min_alpha_log = {std::max(0.0, alpha.value), alpha.witness};
    }

    const Gap relaxed = worst_pair(s, [&](std::size_t i, std::size_t j) {
        return s(i, j) / chain(i, j);
    });
    if (relaxed.witness) {
        r.min_K_relaxed = std::max(1.0, relaxed.value);
        r.relaxed_witness = relaxed.witness;
    }

    const std::size_t n = s.size();
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = x + 1; y < n; ++y) {
            for (std::size_t z = 0; z < n; ++z) {
                if (z == x || z == y) continue;
                const double ratio = s(x, y) / (s(x, z) + s(z, y));
                if (ratio > r.min_K_b) {
                    r.min_K_b = ratio;
                    r.b_witness = TripleWitness{x, y, z};
                }
            }
        }
    }
    r.metric = r.min_K_relaxed <= 1.0 + 1e-12 && r.min_K_b <= 1.0 + 1e-12;
    return r;
}

}  // namespace fmetric
