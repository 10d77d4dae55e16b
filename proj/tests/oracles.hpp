#pragma once

// Test-only oracles, deliberately independent of the library's algorithms.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "fmetric/space.hpp"

namespace fmetric::testing {

/// Minimum chain sum from x to y by exhaustive enumeration of every simple
/// chain, accumulated left to right from x.
inline double brute_force_chain(const Matrix& d, std::size_t x, std::size_t y) {
    const std::size_t n = d.size();
    double best = std::numeric_limits<double>::infinity();
    std::vector<char> used(n, 0);
    used[x] = 1;
    auto dfs = [&](auto&& self, std::size_t at, double sum) -> void {
        for (std::size_t next = 0; next < n; ++next) {
            if (used[next]) continue;
            const double s = sum + d(at, next);
            if (next == y) {
                best = std::min(best, s);
                continue;
            }
            used[next] = 1;
            self(self, next, s);
            used[next] = 0;
        }
    };
    if (x == y) return 0.0;
    dfs(dfs, x, 0.0);
    return best;
}

/// All-pairs brute force, chains accumulated from the lower index.
inline Matrix brute_force_chains(const Matrix& d) {
    Matrix out(d.size(), 0.0);
    for (std::size_t i = 0; i < d.size(); ++i) {
        for (std::size_t j = i + 1; j < d.size(); ++j) {
            out(i, j) = out(j, i) = brute_force_chain(d, i, j);
        }
    }
    return out;
}

/// Random symmetric space with zero diagonal and weights uniform in (0, hi].
inline FiniteSpace random_space(std::mt19937_64& rng, std::size_t n, double hi = 10.0) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    Matrix d(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            d(i, j) = d(j, i) = hi * (1.0 - u(rng));
        }
    }
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
    return FiniteSpace(std::move(labels), std::move(d));
}

/// Random space with integer weights in [1, hi]; all chain sums are exact.
inline FiniteSpace random_integer_space(std::mt19937_64& rng, std::size_t n, int hi = 10) {
    std::uniform_int_distribution<int> u(1, hi);
    Matrix d(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) d(i, j) = d(j, i) = u(rng);
    }
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("q" + std::to_string(i));
    return FiniteSpace(std::move(labels), std::move(d));
}

/// Points on the line with the usual metric |x - y|.
inline FiniteSpace random_line_space(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    std::vector<double> xs(n);
    for (auto& x : xs) x = u(rng);
    Matrix d(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) d(i, j) = i == j ? 0.0 : std::abs(xs[i] - xs[j]);
    }
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("l" + std::to_string(i));
    return FiniteSpace(std::move(labels), std::move(d));
}

}  // namespace fmetric::testing
