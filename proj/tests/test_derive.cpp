#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "fmetric/derive.hpp"
#include "fmetric/errors.hpp"
#include "oracles.hpp"

using namespace fmetric;

namespace {

constexpr double kE = std::numbers::e;

// Independent triangle scan for the derived-metric oracle.
bool triangle_holds(const Matrix& d) {
    for (std::size_t x = 0; x < d.size(); ++x)
        for (std::size_t y = 0; y < d.size(); ++y)
            for (std::size_t z = 0; z < d.size(); ++z)
                if (d(x, z) > (d(x, y) + d(y, z)) * (1 + 1e-12)) return false;
    return true;
}

}  // namespace

TEST(DeriveMetric, Examples) {
    const auto h = derive_metric(gen_hybrid(5));
    EXPECT_EQ(h.d(1, 3), 2.0);
    EXPECT_TRUE(h.axioms.pass());
    EXPECT_TRUE(triangle_holds(h.d));

    std::mt19937_64 rng(2);
    const auto line = fmetric::testing::random_line_space(rng, 6);
    const auto dl = derive_metric(line);
    for (std::size_t i = 0; i < line.size(); ++i)
        for (std::size_t j = 0; j < line.size(); ++j)
            EXPECT_NEAR(dl.d(i, j), line(i, j), 1e-12 * (1 + line(i, j)));

    EXPECT_NEAR(derive_metric(gen_exp(2)).d(0, 2), 2 * kE, 1e-12);
}

TEST(MetricAxioms, DetectsEachViolation) {
    Matrix d(3, 1.0);
    for (std::size_t i = 0; i < 3; ++i) d(i, i) = 0.0;
    EXPECT_TRUE(check_metric_axioms(d).pass());

    Matrix asym = d;
    asym(0, 1) = 2.0;
    EXPECT_FALSE(check_metric_axioms(asym).symmetry_ok);

    Matrix tri = d;
    tri(0, 2) = tri(2, 0) = 5.0;
    const auto r = check_metric_axioms(tri);
    EXPECT_FALSE(r.triangle_ok);
    EXPECT_EQ(r.triangle_via, 1u);

    Matrix diag = d;
    diag(1, 1) = 0.5;
    EXPECT_FALSE(check_metric_axioms(diag).identity_ok);

    Matrix zero = d;
    zero(0, 1) = zero(1, 0) = 0.0;
    EXPECT_FALSE(check_metric_axioms(zero).positivity_ok);
}

TEST(CheckSandwich, Examples) {
    const auto h = gen_hybrid(5);
    const auto r1 = check_sandwich(h, Gauge::log(std::log(3.0)), derive_metric(h));
    EXPECT_TRUE(r1.pass);
    EXPECT_NEAR(r1.worst_slack, std::log(3.0), 1e-12);
    EXPECT_EQ(*r1.witness, (PairWitness{0, 3}));

    const auto e2 = gen_exp(2);
    const auto r2 = check_sandwich(e2, Gauge::neg_reciprocal(1.0), derive_metric(e2));
    EXPECT_TRUE(r2.pass);
    EXPECT_NEAR(r2.worst_slack, 1 / (2 * kE) - 1 / (kE * kE), 1e-15);
    EXPECT_NEAR(r2.worst_slack, 0.0486, 1e-4);
    EXPECT_EQ(*r2.witness, (PairWitness{0, 2}));

    const auto r3 = check_sandwich(h, Gauge::log(0.0), derive_metric(h));
    EXPECT_FALSE(r3.pass);
    EXPECT_TRUE(r3.lower_ok);
}

TEST(CheckSandwich, LowerBoundViolation) {
    const auto h = gen_hybrid(5);
    Matrix big = derive_metric(h).d;
    for (std::size_t i = 0; i < big.size(); ++i)
        for (std::size_t j = 0; j < big.size(); ++j) big(i, j) *= 100.0;
    const auto r = check_sandwich(h, Gauge::log(10.0), big);
    EXPECT_FALSE(r.lower_ok);
    EXPECT_FALSE(r.pass);
}

TEST(BoundednessImpliesD3, Examples) {
    const auto h = gen_hybrid(5);
    EXPECT_TRUE(boundedness_implies_D3(h, Gauge::log(std::log(3.0)), derive_metric(h).d).pass);

    std::mt19937_64 rng(4);
    const auto line = fmetric::testing::random_line_space(rng, 5);
    EXPECT_TRUE(boundedness_implies_D3(line, Gauge::log(0.0), line.matrix()).pass);

    const auto e4 = gen_exp(4);
    EXPECT_TRUE(boundedness_implies_D3(e4, Gauge::neg_reciprocal(1.0), derive_metric(e4).d).pass);
}

TEST(BoundednessImpliesD3, DistinctPreconditionErrors) {
    const auto h = gen_hybrid(5);
    EXPECT_THROW(boundedness_implies_D3(h, Gauge::log(std::log(3.0)), h.matrix()), MetricAxiomError);
    EXPECT_THROW(boundedness_implies_D3(h, Gauge::log(0.1), derive_metric(h).d), SandwichError);
}

TEST(BoundednessImpliesD3, TableGaugeDirection) {
    // Continuous piecewise-linear stand-in for ln on the range of the space.
    std::vector<Knot> knots;
    for (double t = 0.5; t <= 40.0; t *= 1.25) knots.push_back({t, std::log(t)});
    const Gauge g = Gauge::table(knots, 1.2);
    const auto h = gen_hybrid(5);
    EXPECT_TRUE(boundedness_implies_D3(h, g, derive_metric(h).d).pass);
}

TEST(DeriveProperties, CharacterizationRoundTrip) {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> alpha_u(0.0, 3.0);
    std::vector<FiniteSpace> spaces{gen_hybrid(5), gen_hybrid(7), gen_exp(5), gen_square_grid(6)};
    for (int trial = 0; trial < 200; ++trial) {
        spaces.push_back(fmetric::testing::random_space(rng, 2 + trial % 7));
    }
    for (const auto& s : spaces) {
        const auto dm = derive_metric(s);
        for (const Gauge base : {Gauge::log(), Gauge::neg_reciprocal()}) {
            const Gauge g = base.with_alpha(alpha_u(rng));
            EXPECT_EQ(check_D3(s, g).pass, check_sandwich(s, g, dm).pass);
        }
    }
}

TEST(DeriveProperties, MinimalityForLog) {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 100; ++trial) {
        const auto s = fmetric::testing::random_space(rng, 2 + trial % 7);
        const auto slack = check_sandwich(s, Gauge::log(), derive_metric(s)).worst_slack;
        EXPECT_EQ(slack, min_alpha(s, Gauge::log()).value);
    }
}

TEST(DeriveProperties, Idempotence) {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 100; ++trial) {
        const auto s = fmetric::testing::random_integer_space(rng, 2 + trial % 7);
        const auto dm = derive_metric(s);
        EXPECT_EQ(derive_metric(as_space(s, dm)).d, dm.d);
    }
    for (int trial = 0; trial < 100; ++trial) {
        const auto s = fmetric::testing::random_space(rng, 2 + trial % 7);
        const auto dm = derive_metric(s);
        const auto again = derive_metric(as_space(s, dm)).d;
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = 0; j < s.size(); ++j)
                EXPECT_NEAR(again(i, j), dm.d(i, j), 1e-12 * dm.d(i, j));
    }
}
