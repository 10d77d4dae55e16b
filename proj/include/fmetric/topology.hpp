#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fmetric/sequences.hpp"
#include "fmetric/space.hpp"

namespace fmetric {

/// Subset of a finite space's points.
class SubsetMask {
public:
    SubsetMask() = default;
    explicit SubsetMask(std::size_t n, bool fill = false) : bits_(n, fill) {}

    static SubsetMask from_indices(std::size_t n, const std::vector<std::size_t>& indices);
    static SubsetMask from_labels(const FiniteSpace& s, const std::vector<std::string>& labels);

    std::size_t size() const noexcept { return bits_.size(); }
    bool contains(std::size_t i) const { return bits_.at(i); }
    void insert(std::size_t i) { bits_.at(i) = true; }
    std::size_t count() const noexcept;
    bool empty() const noexcept { return count() == 0; }
    bool subset_of(const SubsetMask& other) const;
    SubsetMask complement() const;

    std::vector<std::size_t> indices() const;
    /// Labels in space order.
    std::vector<std::string> labels(const FiniteSpace& s) const;

    friend bool operator==(const SubsetMask&, const SubsetMask&) = default;

private:
    std::vector<bool> bits_;
};

struct Ball {
    std::size_t center = 0;
    double radius = 0.0;
    bool closed = false;
};

/// {y : D(center, y) < r} for open balls, <= r for closed ones.
SubsetMask ball_members(const FiniteSpace& s, const Ball& b);

struct OpenReport {
    bool open = true;
    /// (point, min distance to the complement); +inf when the complement is empty.
    std::vector<std::pair<std::size_t, double>> witness_radii;
};

OpenReport is_F_open(const FiniteSpace& s, const SubsetMask& m);

/// {x : min over a in m of D(x, a) <= tol}.
SubsetMask closure_approx(const FiniteSpace& s, const SubsetMask& m, double tol);

struct JalReport {
    bool pass = true;
    double tail_deviation = 0.0;
    /// max over y of D(x, y) - (max over the tail of D(x_n, y)).
    double worst_gap = 0.0;
    std::optional<std::size_t> worst_y;
};

/// Sampled closed-ball condition: D(x, y) <= max_tail D(x_n, y) + tol for every
/// y in the space. Throws PreconditionError when the sample does not converge
/// to x within its own tolerance.
JalReport check_JAL(const FiniteSpace& s, const SequenceSample& seq, const Point& x, double tol);

struct CoverReport {
    double radius = 0.0;
    std::vector<std::size_t> centers;
    bool covered = false;
    std::size_t rounds = 0;
};

/// Repeatedly takes the first uncovered point (in space order) as a new
/// center until the open balls of radius r cover m.
CoverReport greedy_net(const FiniteSpace& s, const SubsetMask& m, double r);

}  // namespace fmetric
