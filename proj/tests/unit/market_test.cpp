#include <gtest/gtest.h>

#include "condsup/market.hpp"
#include "generators.hpp"
#include "oracles.hpp"

namespace condsup {
namespace {

MarketModel one_period(std::vector<Rational> up_down, Rational spot) {
    std::size_t n = up_down.size();
    Filtration f(SampleSpace::uniform(n), {Partition::trivial(n), Partition::finest(n)});
    return MarketModel(f, {Vector::constant(n, spot), Vector(std::move(up_down))});
}

MarketModel two_period_tree() {
    Filtration f(SampleSpace::uniform(4),
                 {Partition::trivial(4), Partition(4, {{0, 1}, {2, 3}}), Partition::finest(4)});
    return MarketModel(f, {Vector::constant(4, 4), Vector{6, 6, 2, 2}, Vector{7, 5, 3, 1}});
}

TEST(MarketModelTest, RejectsNegativeOrNonAdaptedPrices) {
    Filtration f(SampleSpace::uniform(2), {Partition::trivial(2), Partition::finest(2)});
    EXPECT_THROW(MarketModel(f, {Vector{1, 1}, Vector{2, -1}}), ValidationError);
    EXPECT_THROW(MarketModel(f, {Vector{1, 2}, Vector{2, 1}}), ValidationError);
}

TEST(PortfolioTest, OnePeriodExample) {
    MarketModel m = one_period({8, 2}, 4);
    Strategy s(0, {Vector{1, 1}});
    EXPECT_EQ(portfolio_value(m, s, 0, Vector::zero(2)), (Vector{4, -2}));
    EXPECT_EQ(portfolio_value(m, Strategy::zero(m, 0), 0, Vector{3, 3}), (Vector{3, 3}));
    EXPECT_EQ(portfolio_value(m, Strategy::zero(m, 1), 1, Vector{8, 2}), (Vector{8, 2}));
}

TEST(PortfolioTest, RejectsBadInputs) {
    MarketModel m = one_period({8, 2}, 4);
    EXPECT_THROW(portfolio_value(m, Strategy(0, {Vector{1, 2}}), 0, Vector::zero(2)), ValidationError);
    EXPECT_THROW(portfolio_value(m, Strategy(0, {Vector{1, 1}}), 0, Vector{0, 1}), ValidationError);
    EXPECT_THROW(portfolio_value(m, Strategy(0, {}), 0, Vector::zero(2)), DomainError);
    EXPECT_THROW(portfolio_value(m, Strategy::zero(m, 0), 2, Vector::zero(2)), DomainError);
    EXPECT_THROW(portfolio_value(m, Strategy(0, {Vector{1}}), 0, Vector::zero(2)), DimensionError);
}

TEST(PortfolioTest, ConstantHoldingTelescopes) {
    testing::Rng rng(61);
    for (int i = 0; i < 100; ++i) {
        MarketModel m = testing::random_market(rng);
        Rational c = testing::random_rational(rng, 10);
        for (std::size_t t0 = 0; t0 <= m.horizon(); ++t0) {
            Strategy s(t0, std::vector<Vector>(m.horizon() - t0, Vector::constant(m.size(), c)));
            Vector p = testing::random_measurable(rng, m.partition(t0));
            EXPECT_EQ(portfolio_value(m, s, t0, p), p + c * (m.price(m.horizon()) - m.price(t0)));
        }
    }
}

TEST(PortfolioTest, LinearInStrategy) {
    testing::Rng rng(62);
    for (int i = 0; i < 100; ++i) {
        MarketModel m = testing::random_market(rng);
        Strategy a = testing::random_strategy(rng, m, 0);
        Strategy b = testing::random_strategy(rng, m, 0);
        std::vector<Vector> sum;
        for (std::size_t t = 0; t < m.horizon(); ++t) sum.push_back(a.holding(t) + b.holding(t));
        Vector zero = Vector::zero(m.size());
        EXPECT_EQ(portfolio_value(m, Strategy(0, sum), 0, zero),
                  portfolio_value(m, a, 0, zero) + portfolio_value(m, b, 0, zero));
    }
}

TEST(AipTest, BinomialHolds) {
    MarketModel m = one_period({6, 4}, 5);
    AipReport r = aip_check(m);
    EXPECT_TRUE(r.holds);
    EXPECT_TRUE(r.violations.empty());
    EXPECT_TRUE(aip_check_multiperiod(m).holds);
}

TEST(AipTest, ViolationProducesWitness) {
    MarketModel m = one_period({6, Rational(11, 2)}, 5);
    AipReport r = aip_check(m);
    ASSERT_FALSE(r.holds);
    ASSERT_EQ(r.violations.size(), 1u);
    EXPECT_EQ(r.violations[0].side, BoundSide::lower);
    EXPECT_EQ(r.violations[0].spot, Rational(5));
    EXPECT_EQ(r.violations[0].bound, Rational(11, 2));
    ASSERT_EQ(r.witnesses.size(), 1u);
    const ImmediateProfit& w = r.witnesses[0];
    EXPECT_EQ(w.price, Vector::constant(2, Rational(-1, 2)));
    Vector total = portfolio_value(m, w.strategy, 0, w.price);
    EXPECT_EQ(total, (Vector{Rational(1, 2), 0}));
    EXPECT_TRUE(is_nonnegative(total));
}

TEST(AipTest, UpperViolationShortsTheAsset) {
    MarketModel m = one_period({3, 2}, 5);
    AipReport r = aip_check(m);
    ASSERT_FALSE(r.holds);
    EXPECT_EQ(r.violations[0].side, BoundSide::upper);
    const ImmediateProfit& w = r.witnesses[0];
    EXPECT_EQ(w.price, Vector::constant(2, -2));
    EXPECT_EQ(w.strategy.holding(0), Vector::constant(2, -1));
    EXPECT_TRUE(is_nonnegative(portfolio_value(m, w.strategy, 0, w.price)));
}

TEST(AipTest, TwoPeriodTree) {
    MarketModel m = two_period_tree();
    EXPECT_TRUE(aip_check(m).holds);
    EXPECT_TRUE(aip_check_multiperiod(m).holds);
    EXPECT_TRUE(na_check(m).holds);
    EXPECT_TRUE(na_check(m).strictness_hypothesis);
}

TEST(AipTest, MultiperiodAgreesWithOneStep) {
    testing::Rng rng(63);
    int failing = 0;
    for (int i = 0; i < 400; ++i) {
        MarketModel m = testing::random_market(rng);
        bool one = aip_check(m).holds;
        EXPECT_EQ(one, aip_check_multiperiod(m).holds);
        failing += one ? 0 : 1;
    }
    EXPECT_GT(failing, 0);
}

TEST(AipTest, WitnessesAreImmediateProfits) {
    testing::Rng rng(64);
    for (int i = 0; i < 300; ++i) {
        MarketModel m = testing::random_market(rng);
        AipReport r = aip_check(m);
        EXPECT_EQ(r.witnesses.size(), r.violations.size());
        for (const auto& w : r.witnesses) {
            EXPECT_TRUE(m.partition(w.time).is_measurable(w.price));
            EXPECT_TRUE(leq(w.price, Vector::zero(m.size())));
            EXPECT_FALSE(is_zero(w.price));
            EXPECT_TRUE(is_nonnegative(portfolio_value(m, w.strategy, w.time, w.price)));
        }
    }
}

TEST(AipTest, NoStrategyReplicatesZeroBelowZeroUnderAip) {
    // Under AIP the cheapest F_t-measurable p with p + v_{t,T} ≥ 0 is
    // M_{F_t}(−v_{t,T}), which must be non-negative.
    testing::Rng rng(65);
    for (int i = 0; i < 300; ++i) {
        MarketModel m = testing::random_aip_market(rng);
        ASSERT_TRUE(aip_check(m).holds);
        for (std::size_t t = 0; t < m.horizon(); ++t) {
            Strategy s = testing::random_strategy(rng, m, t);
            Vector v = portfolio_value(m, s, t, Vector::zero(m.size()));
            EXPECT_TRUE(is_nonnegative(cond_sup(-v, m.system(t))));
        }
    }
}

TEST(NaTest, OneSidedMoveIsArbitrage) {
    MarketModel m = one_period({6, 5}, 5);
    EXPECT_TRUE(aip_check(m).holds);
    NaCheckReport r = na_check(m);
    EXPECT_FALSE(r.holds);
    EXPECT_FALSE(r.strictness_hypothesis);
    ASSERT_TRUE(r.fallback.has_value());
    ASSERT_TRUE(r.fallback->certificate.has_value());
    const auto& c = *r.fallback->certificate;
    EXPECT_EQ(c.terminal, (Vector{1, 0}));
    EXPECT_EQ(portfolio_value(m, c.strategy, c.time, Vector::zero(2)), c.terminal);
}

TEST(NaTest, StrictTreeHoldsAndFlatAtomsAreExempt) {
    EXPECT_TRUE(na_check(one_period({6, 5, 4}, 5)).holds);
    Filtration f(SampleSpace::uniform(4), {Partition(4, {{0, 1}, {2, 3}}), Partition::finest(4)});
    MarketModel m(f, {Vector{5, 5, 3, 3}, Vector{5, 5, 4, 2}});
    NaCheckReport r = na_check(m);
    EXPECT_TRUE(r.strictness_hypothesis);
    EXPECT_TRUE(r.holds);
    EXPECT_TRUE(arbitrage_bruteforce(m).holds);
}

TEST(NaTest, AgreesWithExhaustiveSearch) {
    testing::Rng rng(66);
    int checked = 0;
    for (int i = 0; i < 600; ++i) {
        MarketModel m = testing::random_market(rng, 6, 2);
        if (!oracle::exhaustive_feasible(m, 8)) continue;
        ++checked;
        bool na = na_check(m).holds;
        EXPECT_EQ(na, arbitrage_bruteforce(m).holds);
        EXPECT_EQ(na, !oracle::exhaustive_arbitrage(m, 8));
    }
    EXPECT_GT(checked, 100);
}

TEST(NaTest, NoArbitrageImpliesAip) {
    testing::Rng rng(67);
    for (int i = 0; i < 500; ++i) {
        MarketModel m = testing::random_market(rng);
        NaCheckReport r = na_check(m);
        if (r.holds) {
            EXPECT_TRUE(r.aip.holds);
        }
        if (r.strictness_hypothesis) {
            EXPECT_EQ(r.holds, r.aip.holds);
        }
        if (!r.holds && r.fallback && r.fallback->certificate) {
            const auto& c = *r.fallback->certificate;
            EXPECT_TRUE(is_nonnegative(c.terminal));
            EXPECT_FALSE(is_zero(c.terminal));
        }
    }
}

}  // namespace
}  // namespace condsup
