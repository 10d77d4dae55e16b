#include "fmetric/topology.hpp"

#include <algorithm>
#include <limits>

#include "fmetric/errors.hpp"

namespace fmetric {

SubsetMask SubsetMask::from_indices(std::size_t n, const std::vector<std::size_t>& indices) {
    SubsetMask m(n);
    for (auto i : indices) {
        if (i >= n) throw ArgumentError("subset index out of range");
        m.insert(i);
    }
    return m;
}

SubsetMask SubsetMask::from_labels(const FiniteSpace& s, const std::vector<std::string>& labels) {
    SubsetMask m(s.size());
    for (const auto& l : labels) m.insert(s.index_of(l));
    return m;
}

std::size_t SubsetMask::count() const noexcept {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

bool SubsetMask::subset_of(const SubsetMask& other) const {
    if (other.size() != size()) throw ArgumentError("subset masks of different sizes");
    for (std::size_t i = 0; i < size(); ++i) {
        if (bits_[i] && !other.bits_[i]) return false;
    }
    return true;
}

SubsetMask SubsetMask::complement() const {
    SubsetMask c(size());
    for (std::size_t i = 0; i < size(); ++i) c.bits_[i] = !bits_[i];
    return c;
}

std::vector<std::size_t> SubsetMask::indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size(); ++i) {
        if (bits_[i]) out.push_back(i);
    }
    return out;
}

std::vector<std::string> SubsetMask::labels(const FiniteSpace& s) const {
    std::vector<std::string> out;
    for (auto i : indices()) out.push_back(s.label(i));
    return out;
}

namespace {

void require_mask(const FiniteSpace& s, const SubsetMask& m) {
    if (m.size() != s.size()) {
        throw ArgumentError("subset mask has " + std::to_string(m.size()) + " bits for a space of " +
                            std::to_string(s.size()) + " points");
    }
}

}  // namespace

SubsetMask ball_members(const FiniteSpace& s, const Ball& b) {
    if (b.center >= s.size()) throw UnknownLabelError("ball center out of range");
    if (!(b.radius > 0.0)) throw ArgumentError("ball radius must be > 0");
    SubsetMask m(s.size());
    for (std::size_t y = 0; y < s.size(); ++y) {
        const double d = s(b.center, y);
        if (b.closed ? d <= b.radius : d < b.radius) m.insert(y);
    }
    return m;
}

OpenReport is_F_open(const FiniteSpace& s, const SubsetMask& m) {
    require_mask(s, m);
    OpenReport r;
    for (auto x : m.indices()) {
        double radius = std::numeric_limits<double>::infinity();
        for (std::size_t y = 0; y < s.size(); ++y) {
            if (!m.contains(y)) radius = std::min(radius, s(x, y));
        }
        r.witness_radii.emplace_back(x, radius);
        if (!(radius > 0.0)) r.open = false;
    }
    return r;
}

SubsetMask closure_approx(const FiniteSpace& s, const SubsetMask& m, double tol) {
    require_mask(s, m);
    if (!(tol >= 0.0)) throw ArgumentError("closure tolerance must be >= 0");
    SubsetMask out(s.size());
    const auto members = m.indices();
    for (std::size_t x = 0; x < s.size(); ++x) {
        for (auto a : members) {
            if (s(x, a) <= tol) {
                out.insert(x);
                break;
            }
        }
    }
    return out;
}

JalReport check_JAL(const FiniteSpace& s, const SequenceSample& seq, const Point& x, double tol) {
    if (!(tol > 0.0)) throw ArgumentError("check_JAL: tol must be > 0");
    const auto conv = is_F_convergent_to(s, seq, x);
    if (!conv.pass) {
        throw PreconditionError("sample is not convergent to " + s.describe(x) +
                                ": tail deviation " + format_label(conv.max_deviation) +
                                " > tol " + format_label(seq.tol()));
    }
    JalReport r;
    r.tail_deviation = conv.max_deviation;
    bool first = true;
    for (std::size_t y = 0; y < s.size(); ++y) {
        double upper = 0.0;
        for (std::size_t n = seq.tail_start(); n < seq.size(); ++n) {
            upper = std::max(upper, s.distance(seq.points()[n], y));
        }
        const double gap = s.distance(x, y) - upper;
        if (first || gap > r.worst_gap) {
            r.worst_gap = gap;
            r.worst_y = y;
            first = false;
        }
    }
    r.pass = r.worst_gap <= tol;
    return r;
}

CoverReport greedy_net(const FiniteSpace& s, const SubsetMask& m, double r) {
    require_mask(s, m);
    if (m.empty()) throw ArgumentError("greedy_net: empty target subset");
    if (!(r > 0.0)) throw ArgumentError("greedy_net: radius must be > 0");
    CoverReport report;
    report.radius = r;
    SubsetMask covered(s.size());
    for (auto x : m.indices()) {
        if (covered.contains(x)) continue;
        report.centers.push_back(x);
        ++report.rounds;
        for (std::size_t y = 0; y < s.size(); ++y) {
            if (s(x, y) < r) covered.insert(y);
        }
    }
    report.covered = m.subset_of(covered);
    return report;
}

}  // namespace fmetric
