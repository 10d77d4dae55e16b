#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "fmetric/banach.hpp"
#include "fmetric/errors.hpp"

using namespace fmetric;

namespace {

double usual(double x, double y) { return std::abs(x - y); }

ContractionProblem<double> affine(double a, double b, const Gauge& g = Gauge::log(0.0)) {
    return real_problem(usual, [a, b](double x) { return a * x + b; }, linspace(-10, 10, 81), g);
}

}  // namespace

TEST(EstimateK, Examples) {
    std::vector<double> grid;
    for (int i = 0; i <= 32; ++i) grid.push_back(i / 32.0);

    const auto constant = real_problem(usual, [](double) { return 3.0; }, grid, Gauge::log());
    EXPECT_EQ(estimate_k(constant).k, 0.0);

    const auto half = real_problem(usual, [](double x) { return x / 2; }, grid, Gauge::log());
    const auto e = estimate_k(half);
    EXPECT_EQ(e.k, 0.5);
    EXPECT_TRUE(e.contraction);
    EXPECT_FALSE(e.exhaustive);

    const auto id = real_problem(usual, [](double x) { return x; }, grid, Gauge::log());
    const auto i = estimate_k(id);
    EXPECT_EQ(i.k, 1.0);
    EXPECT_FALSE(i.contraction);

    EXPECT_THROW(estimate_k(real_problem(usual, [](double x) { return x; }, {}, Gauge::log())),
                 ArgumentError);
}

TEST(IterationBound, Examples) {
    EXPECT_EQ(iteration_bound(Gauge::log(0.0), 0.5, 1.0, 1e-6), 21u);
    EXPECT_EQ(iteration_bound(Gauge::log(std::log(3.0)), 0.5, 1.0, 3e-6), 21u);
    EXPECT_EQ(iteration_bound(Gauge::neg_reciprocal(2.0), 0.5, 0.0, 1e-6), 0u);
}

TEST(IterationBound, IsTheSmallestSatisfyingCount) {
    std::mt19937_64 rng(71);
    std::uniform_real_distribution<double> ku(0.01, 0.99), lu(-12.0, 4.0);
    for (int trial = 0; trial < 500; ++trial) {
        const double k = ku(rng), d0 = std::exp(lu(rng)), delta = std::exp(lu(rng));
        const auto n = iteration_bound_for_delta(k, d0, delta);
        auto tail = [&](std::size_t m) { return std::pow(k, double(m)) / (1 - k) * d0; };
        EXPECT_LT(tail(n), delta);
        if (n > 0) EXPECT_GE(tail(n - 1), delta);
    }
}

TEST(IterationBound, ArgumentErrors) {
    EXPECT_THROW(iteration_bound(Gauge::log(), 1.0, 1.0, 1e-3), ArgumentError);
    EXPECT_THROW(iteration_bound(Gauge::log(), 0.5, -1.0, 1e-3), ArgumentError);
    EXPECT_THROW(iteration_bound(Gauge::log(), 0.5, 1.0, 0.0), ArgumentError);
}

TEST(SolveFixedPoint, Examples) {
    const auto r = solve_fixed_point(affine(0.5, 1.0), 0.0, 1e-8);
    EXPECT_NEAR(r.x_star, 2.0, 1e-8);
    EXPECT_LE(r.residual, 1e-8);
    EXPECT_LE(r.iterations, r.bound_N);

    const auto c = solve_fixed_point(affine(0.0, 3.0), -4.0, 1e-6);
    EXPECT_EQ(c.x_star, 3.0);
    EXPECT_EQ(c.iterations, 1u);

    const auto h = solve_fixed_point(affine(0.5, 0.0), 1.0, 1e-6);
    EXPECT_LE(std::abs(h.x_star), 1e-6);
    EXPECT_LE(h.iterations, 21u);
    EXPECT_LE(h.residual, 1e-6);
}

TEST(SolveFixedPoint, DegenerateStart) {
    const auto r = solve_fixed_point(affine(0.5, 1.0), 2.0, 1e-8, true);
    EXPECT_EQ(r.x_star, 2.0);
    EXPECT_EQ(r.iterations, 0u);
    EXPECT_EQ(r.bound_N, 0u);
    EXPECT_EQ(r.trace, std::vector<double>{2.0});
}

TEST(SolveFixedPoint, TraceIsDeterministic) {
    const auto a = solve_fixed_point(affine(-0.3, 0.7), 5.0, 1e-9, true);
    const auto b = solve_fixed_point(affine(-0.3, 0.7), 5.0, 1e-9, true);
    EXPECT_EQ(a.trace, b.trace);
    EXPECT_EQ(a.trace.size(), a.iterations + 1);
}

TEST(SolveFixedPoint, CertificationErrors) {
    EXPECT_THROW(solve_fixed_point(affine(1.0, 1.0), 0.0, 1e-6), CertificationError);

    auto lying = affine(0.9, 0.0);
    lying.k = 0.5;
    EXPECT_THROW(solve_fixed_point(lying, 1.0, 1e-6), CertificationError);

    auto supplied = affine(0.5, 0.0);
    supplied.k = 1.5;
    EXPECT_THROW(solve_fixed_point(supplied, 1.0, 1e-6), CertificationError);
}

TEST(SolveFixedPoint, DomainError) {
    const auto p = real_problem(usual, [](double x) { return x / 2 - 1; }, linspace(0, 1, 11),
                                Gauge::log(), std::make_pair(0.0, 1.0));
    EXPECT_THROW(solve_fixed_point(p, 0.5, 1e-6), fmetric::DomainError);
    EXPECT_THROW(solve_fixed_point(p, 2.0, 1e-6), fmetric::DomainError);
}

TEST(SolveFixedPoint, FiniteSpace) {
    // Points on a line at 0, 1, 3, 7; the map halves the distance to 0 along the chain.
    const std::vector<double> xs{0, 1, 3, 7};
    Matrix m(4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) m(i, j) = std::abs(xs[i] - xs[j]);
    const FiniteSpace s({"a", "b", "c", "d"}, m);
    const auto p = finite_problem(s, {0, 0, 1, 2}, Gauge::log(0.0));

    const auto k = estimate_k(p);
    EXPECT_EQ(k.k, 0.5);
    EXPECT_TRUE(k.exhaustive);

    const auto r = solve_fixed_point(p, std::size_t{3}, 0.5);
    EXPECT_EQ(r.x_star, 0u);
    EXPECT_EQ(r.iterations, 3u);
    EXPECT_TRUE(r.k_exhaustive);
    EXPECT_LE(r.iterations, r.bound_N);

    EXPECT_THROW(finite_problem(s, {0, 0}, Gauge::log()), ArgumentError);
    EXPECT_THROW(finite_problem(s, {0, 0, 9, 2}, Gauge::log()), fmetric::DomainError);
}

TEST(CheckUniqueness, Examples) {
    const auto a = check_uniqueness(affine(0.5, 1.0), 0.0, 10.0, 1e-8);
    EXPECT_TRUE(a.pass);
    EXPECT_NEAR(a.a.x_star, 2.0, 1e-8);
    EXPECT_NEAR(a.b.x_star, 2.0, 1e-8);

    const auto c = check_uniqueness(affine(0.0, -1.5), 4.0, 8.0, 1e-6);
    EXPECT_TRUE(c.pass);
    EXPECT_EQ(c.distance, 0.0);

    const auto h = check_uniqueness(affine(0.5, 0.0), 1.0, -1.0, 1e-6);
    EXPECT_TRUE(h.pass);
    EXPECT_LE(h.distance, 2e-6);
    EXPECT_EQ(h.a.x_star, -h.b.x_star);
}

TEST(LocalBallInvariance, Examples) {
    const auto p = affine(0.5, 1.0);
    const std::vector<double> grid{0.5, 1.0, 1.5, 2.0, 2.5};

    const auto fixed = local_ball_invariance(p, 2.0, 3.0, grid);
    ASSERT_TRUE(fixed.eps.has_value());
    EXPECT_EQ(*fixed.eps, 0.5);
    EXPECT_TRUE(fixed.invariance_verified);

    const auto r = local_ball_invariance(p, 0.0, 3.0, grid);
    ASSERT_TRUE(r.eps.has_value());
    EXPECT_EQ(*r.eps, 2.0);
    EXPECT_EQ(r.d0, 1.0);
    EXPECT_TRUE(r.invariance_verified);
    EXPECT_GT(r.points_checked, 0u);

    EXPECT_FALSE(local_ball_invariance(p, 0.0, 3.0, {0.5, 1.0, 1.5}).eps.has_value());
    EXPECT_THROW(local_ball_invariance(p, 0.0, 1.0, {0.5, 1.0}), ArgumentError);
}

TEST(LocalBallInvariance, ReportsViolations) {
    // k is supplied too small: (iv) is met but the ball is not mapped into itself.
    auto p = affine(0.9, 0.5);
    p.k = 0.1;
    const auto r = local_ball_invariance(p, 0.0, 3.0, {1.0});
    ASSERT_TRUE(r.eps.has_value());
    EXPECT_FALSE(r.invariance_verified);
    EXPECT_TRUE(r.violation.has_value());
}

TEST(BanachProperties, BoundDecayAndGaugeIndependence) {
    std::mt19937_64 rng(73);
    std::uniform_real_distribution<double> au(-0.95, 0.95), bu(-5, 5), xu(-10, 10), le(-10, -2);
    std::uniform_real_distribution<double> alpha_u(0.0, 2.0);
    for (int trial = 0; trial < 300; ++trial) {
        const double a = au(rng), b = bu(rng), x0 = xu(rng), eps = std::exp(le(rng));
        const auto ln = affine(a, b, Gauge::log(alpha_u(rng)));
        const auto nr = affine(a, b, Gauge::neg_reciprocal(alpha_u(rng)));

        const auto r1 = solve_fixed_point(ln, x0, eps, true);
        const auto r2 = solve_fixed_point(nr, x0, eps, true);
        for (const auto* r : {&r1, &r2}) {
            EXPECT_LE(r->iterations, r->bound_N);
            EXPECT_LE(r->residual, eps);
            EXPECT_LE(std::abs(r->x_star - b / (1 - a)), eps);
            const auto& t = r->trace;
            for (std::size_t n = 0; n + 2 < t.size(); ++n) {
                EXPECT_LE(std::abs(t[n + 2] - t[n + 1]), r->k * std::abs(t[n + 1] - t[n]) + kDecaySlack);
            }
        }
        EXPECT_LE(std::abs(r1.x_star - r2.x_star), 2 * eps);
        EXPECT_TRUE(check_uniqueness(ln, x0, -x0 + 1, eps).pass);
    }
}
