#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "fmetric/errors.hpp"
#include "fmetric/gauge.hpp"

using namespace fmetric;

TEST(EvalGauge, Examples) {
    EXPECT_EQ(eval_gauge(Gauge::log(std::log(3.0)), 1.0), 0.0);
    EXPECT_EQ(eval_gauge(Gauge::neg_reciprocal(1.0), 1.0), -1.0);
    EXPECT_NEAR(eval_gauge(Gauge::log(), std::numbers::e), 1.0, 1e-15);
}

TEST(EvalGauge, DomainAndRangeErrors) {
    EXPECT_THROW(eval_gauge(Gauge::log(), 0.0), DomainError);
    EXPECT_THROW(eval_gauge(Gauge::neg_reciprocal(), -1.0), DomainError);
    const Gauge t = Gauge::table({{1.0, 0.0}, {2.0, 1.0}});
    EXPECT_THROW(t(0.5), OutOfRangeError);
    EXPECT_THROW(t(2.5), OutOfRangeError);
    EXPECT_DOUBLE_EQ(t(1.5), 0.5);
    EXPECT_DOUBLE_EQ(t(2.0), 1.0);
}

TEST(Gauge, RejectsBadParameters) {
    EXPECT_THROW(Gauge::log(-0.1), ArgumentError);
    EXPECT_THROW(Gauge::table({{1.0, 0.0}}), ArgumentError);
    EXPECT_THROW(Gauge::table({{2.0, 0.0}, {1.0, 1.0}}), ArgumentError);
    EXPECT_THROW(Gauge::table({{0.0, 0.0}, {1.0, 1.0}}), ArgumentError);
}

TEST(CheckF1, Examples) {
    const std::vector<double> g1{0.1, 1, 10};
    EXPECT_TRUE(check_F1(Gauge::log(), g1).pass);
    const std::vector<double> g2{0.5, 1, 2};
    EXPECT_TRUE(check_F1(Gauge::neg_reciprocal(), g2).pass);

    const std::vector<double> g3{1, 2};
    const auto r = check_F1(Gauge::table({{1, 5}, {2, 3}}), g3);
    EXPECT_FALSE(r.pass);
    ASSERT_EQ(r.witnesses.size(), 1u);
    EXPECT_EQ(r.witnesses[0].first, 1.0);
    EXPECT_EQ(r.witnesses[0].second, 2.0);
}

TEST(CheckF1, ArgumentErrors) {
    EXPECT_THROW(check_F1(Gauge::log(), std::vector<double>{}), ArgumentError);
    EXPECT_THROW(check_F1(Gauge::log(), std::vector<double>{2, 1}), ArgumentError);
    EXPECT_THROW(check_F1(Gauge::log(), std::vector<double>{-1, 1}), ArgumentError);
}

TEST(CheckF2, Examples) {
    const auto r1 = check_F2(Gauge::log(), std::vector<double>{1, 1e-2, 1e-8}, -10);
    EXPECT_TRUE(r1.pass);
    EXPECT_NEAR(r1.attained, -8.0 * std::log(10.0), 1e-12);

    const auto r2 = check_F2(Gauge::neg_reciprocal(), std::vector<double>{1, 1e-3}, -100);
    EXPECT_TRUE(r2.pass);
    EXPECT_NEAR(r2.attained, -1000.0, 1e-9);

    const Gauge flat = Gauge::table({{1e-6, 0.0}, {1.0, 0.0}});
    EXPECT_FALSE(check_F2(flat, std::vector<double>{1, 1e-6}, -1).pass);
}

TEST(CheckF2, NonDecreasingScheduleIsAnError) {
    EXPECT_THROW(check_F2(Gauge::log(), std::vector<double>{1e-3, 1}, -1), ArgumentError);
}

TEST(DeltaForEpsilon, Examples) {
    const auto q1 = delta_for_epsilon(Gauge::log(std::log(3.0)), 0.3);
    EXPECT_NEAR(q1.delta, 0.1, q1.margin * 0.3);
    const auto q2 = delta_for_epsilon(Gauge::neg_reciprocal(1.0), 0.5);
    EXPECT_NEAR(q2.delta, 1.0 / 3.0, q2.margin * 0.5);
    const auto q3 = delta_for_epsilon(Gauge::log(), 1e-4);
    EXPECT_NEAR(q3.delta, 1e-4, q3.margin * 1e-4);
    EXPECT_LT(q3.delta, 1e-4);
}

TEST(DeltaForEpsilon, FailsWhenSublevelIsOutsideTable) {
    const Gauge flat = Gauge::table({{1e-3, 0.0}, {1.0, 0.0}});
    EXPECT_THROW(delta_for_epsilon(flat, 0.5), ResolutionError);
    EXPECT_THROW(delta_for_epsilon(Gauge::log(100.0), 1.0, 8), ResolutionError);
}

TEST(DeltaForEpsilon, ArgumentErrors) {
    EXPECT_THROW(delta_for_epsilon(Gauge::log(), 0.0), ArgumentError);
    EXPECT_THROW(delta_for_epsilon(Gauge::log(), 1.0, 0), ArgumentError);
    EXPECT_THROW(delta_for_epsilon(Gauge::log(), 1.0, 10, 1.5), ArgumentError);
}

TEST(DeltaForEpsilon, TableGaugeMatchesInterpolation) {
    // f(t) = t - 1 on [0.01, 2]; sublevel f(t) < f(1) - 0.25 = -0.25 means t < 0.75.
    const Gauge t = Gauge::table({{0.01, -0.99}, {2.0, 1.0}}, 0.25);
    const auto q = delta_for_epsilon(t, 1.0);
    EXPECT_NEAR(q.delta, 0.75, q.margin);
    EXPECT_LT(t(q.delta * (1 - q.margin)), t(1.0) - 0.25);
}

// Properties over random gauges and tolerances.

TEST(GaugeProperties, BuiltinsAreMonotoneOnRandomGrids) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-8.0, 8.0);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<double> grid(20);
        for (auto& v : grid) v = std::exp(u(rng));
        std::sort(grid.begin(), grid.end());
        grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
        EXPECT_TRUE(check_F1(Gauge::log(), grid).pass);
        EXPECT_TRUE(check_F1(Gauge::neg_reciprocal(), grid).pass);
    }
}

TEST(GaugeProperties, ResolverSoundAndConsistentWithAnalyticInverse) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> log_eps(-12.0, 3.0);
    std::uniform_real_distribution<double> alpha_u(0.0, 4.0);
    for (int trial = 0; trial < 500; ++trial) {
        const double eps = std::exp(log_eps(rng));
        const double alpha = trial % 5 == 0 ? 0.0 : alpha_u(rng);

        const Gauge ln = Gauge::log(alpha);
        const auto q1 = delta_for_epsilon(ln, eps);
        EXPECT_LT(ln(q1.delta * (1 - q1.margin)), ln(eps) - alpha);
        EXPECT_LE(q1.delta, eps);
        EXPECT_LE(std::abs(q1.delta - eps * std::exp(-alpha)), q1.margin * eps);

        const Gauge nr = Gauge::neg_reciprocal(alpha);
        const auto q2 = delta_for_epsilon(nr, eps);
        EXPECT_LT(nr(q2.delta * (1 - q2.margin)), nr(eps) - alpha);
        EXPECT_LE(q2.delta, eps);
        EXPECT_LE(std::abs(q2.delta - eps / (1 + alpha * eps)), q2.margin * eps);
    }
}
