#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fmetric/gauge.hpp"
#include "fmetric/matrix.hpp"

namespace fmetric {

/// A point is either an index into a finite space or, for parametric spaces,
/// a real coordinate that need not be one of the sampled points.
using Point = std::variant<std::size_t, double>;

/// Distance formula on coordinates for the generated families.
using Kernel = std::function<double(double, double)>;

struct PairWitness {
    std::size_t i = 0;
    std::size_t j = 0;
    friend bool operator==(const PairWitness&, const PairWitness&) = default;
};

/// Labeled point set with a nonnegative square distance matrix.
///
/// Construction validates only shape and nonnegativity; the F-metric axioms
/// are checked by the free functions below. Parametric spaces additionally
/// carry coordinates and the generating kernel so sequences may visit
/// coordinates off the sampled grid.
class FiniteSpace {
public:
    FiniteSpace(std::vector<std::string> labels, Matrix d);
    FiniteSpace(std::vector<std::string> labels, Matrix d, std::vector<double> coords,
                Kernel kernel, std::string kind);

    std::size_t size() const noexcept { return labels_.size(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::string& label(std::size_t i) const { return labels_.at(i); }
    const Matrix& matrix() const noexcept { return d_; }
    const std::string& kind() const noexcept { return kind_; }

    double operator()(std::size_t i, std::size_t j) const noexcept { return d_(i, j); }

    std::optional<std::size_t> find(std::string_view label) const;
    /// Throws UnknownLabelError.
    std::size_t index_of(std::string_view label) const;

    bool parametric() const noexcept { return static_cast<bool>(kernel_); }
    const std::vector<double>& coords() const noexcept { return coords_; }

    /// Resolves a label, or for parametric spaces a numeric coordinate.
    /// Coordinates that coincide with a sampled point resolve to its index.
    Point resolve(std::string_view label) const;
    Point resolve(double coordinate) const;

    double distance(const Point& a, const Point& b) const;
    std::string describe(const Point& p) const;

private:
    double coordinate(const Point& p) const;

    std::vector<std::string> labels_;
    Matrix d_;
    std::vector<double> coords_;
    Kernel kernel_;
    std::string kind_ = "matrix";
};

/// Symmetric-under-permutation 3-index table sigma(a, b, c).
class TwoMetricTable {
public:
    TwoMetricTable(std::vector<std::string> labels, std::vector<double> sigma);

    std::size_t size() const noexcept { return labels_.size(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    double operator()(std::size_t a, std::size_t b, std::size_t c) const noexcept {
        const std::size_t n = labels_.size();
        return sigma_[(a * n + b) * n + c];
    }

    /// Throws ArgumentError naming the first triple that breaks the zero
    /// pattern or permutation invariance.
    void validate() const;

private:
    std::vector<std::string> labels_;
    std::vector<double> sigma_;
};

// Generators for the example families. Points are {0, ..., n} unless noted.

/// (x - y)^2 inside [0,3]^2, |x - y| elsewhere. n >= 4.
FiniteSpace gen_hybrid(int n);
/// exp(|x - y|) off the diagonal. n >= 1.
FiniteSpace gen_exp(int n);
/// Points {i/n : i = 0..n} with D = (x - y)^2. n >= 2.
FiniteSpace gen_square_grid(int n);
/// D(x, y) = max over a of sigma(a, x, y).
FiniteSpace from_two_metric(const TwoMetricTable& t);

/// Shortest decimal representation that round-trips.
std::string format_label(double v);

struct D1D2Report {
    bool d1_ok = true;
    bool d2_ok = true;
    /// Nonzero diagonal entries (i, i) and zero off-diagonal entries.
    std::vector<PairWitness> d1_violations;
    /// Pairs i < j with D(i, j) != D(j, i).
    std::vector<PairWitness> d2_violations;
    bool pass() const noexcept { return d1_ok && d2_ok; }
};

D1D2Report check_D1_D2(const FiniteSpace& s);

/// Throws PreconditionError when (D1)(D2) fail.
void require_d1_d2(const FiniteSpace& s);

/// Minimum chain sum between every pair, i.e. all-pairs shortest paths on the
/// complete weighted graph. Chain sums are accumulated from the lower-index
/// endpoint and mirrored, so the result is exactly symmetric.
Matrix shortest_chain_infimum(const FiniteSpace& s);
Matrix shortest_chain_infimum(const Matrix& d);

/// Absolute slack applied to gauge-value comparisons in verdicts.
inline constexpr double kGaugeSlack = 1e-12;

struct D3Report {
    bool pass = true;
    double alpha = 0.0;
    /// max over x != y of f(D) - f(d_sp); -inf on a single-point space.
    double worst_gap = 0.0;
    std::optional<PairWitness> witness;
};

D3Report check_D3(const FiniteSpace& s, const Gauge& g);
/// check_D3 against a precomputed shortest-chain matrix.
D3Report check_D3(const FiniteSpace& s, const Gauge& g, const Matrix& chain);

struct AlphaEstimate {
    double value = 0.0;
    std::optional<PairWitness> witness;
};

/// Smallest alpha making (f, alpha) witness (D3); the gauge's own alpha is ignored.
AlphaEstimate min_alpha(const FiniteSpace& s, const Gauge& g);

struct TripleWitness {
    std::size_t x = 0;
    std::size_t y = 0;
    std::size_t z = 0;
};

struct ClassificationReport {
    D1D2Report axioms;
    AlphaEstimate min_alpha_log;
    double min_K_relaxed = 1.0;
    std::optional<PairWitness> relaxed_witness;
    double min_K_b = 1.0;
    std::optional<TripleWitness> b_witness;
    bool metric = false;
};

ClassificationReport classify(const FiniteSpace& s);

/// Lexicographic comparison of two pairs by label.
bool label_pair_less(const FiniteSpace& s, PairWitness a, PairWitness b);

}  // namespace fmetric
