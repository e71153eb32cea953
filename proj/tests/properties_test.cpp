// Randomized algebraic properties of the series ring and of the builders.
#include <gtest/gtest.h>

#include <random>

#include <qseries/catalog.hpp>

using namespace qseries;

namespace
{

constexpr order_t kOrder = 64;
constexpr int kTrials = 1000;

class gen
{
public:
    explicit gen(std::uint64_t seed) : m_rng(seed) {}

    trunc_series series(order_t n, bool unit = false)
    {
        std::uniform_int_distribution<int> small(-9, 9);
        std::uniform_int_distribution<int> big_pick(0, 15);
        std::vector<bigint> c(n + 1);
        for (auto &x : c) {
            x = small(m_rng);
            if (big_pick(m_rng) == 0) {
                // Occasionally beyond 64 bits.
                x *= bigint("1000000000000000000000007");
            }
        }
        if (unit) {
            c[0] = std::bernoulli_distribution(0.5)(m_rng) ? 1 : -1;
        }
        return trunc_series(std::move(c));
    }

private:
    std::mt19937_64 m_rng;
};

} // namespace

TEST(RingAxioms, AssociativityDistributivityCommutativity)
{
    gen g(20261016);
    for (int t = 0; t < kTrials; ++t) {
        const auto s = g.series(kOrder), u = g.series(kOrder), v = g.series(kOrder);
        ASSERT_EQ(mul(s, mul(u, v)), mul(mul(s, u), v)) << t;
        ASSERT_EQ(mul(s, add(u, v)), add(mul(s, u), mul(s, v))) << t;
        ASSERT_EQ(mul(s, u), mul(u, s)) << t;
    }
}

TEST(RingAxioms, KaratsubaAgreesOnRandomInputs)
{
    gen g(7);
    for (int t = 0; t < 200; ++t) {
        const auto s = g.series(kOrder + t % 70), u = g.series(kOrder + t % 70);
        ASSERT_EQ(mul_karatsuba(s, u, 4), mul_schoolbook(s, u)) << t;
    }
}

TEST(RingAxioms, InvertUnitRoundTrip)
{
    gen g(11);
    for (int t = 0; t < 300; ++t) {
        const auto s = g.series(kOrder, true);
        const auto inv = invert_unit(s);
        ASSERT_EQ(mul(s, inv), one(kOrder)) << t;
        ASSERT_EQ(mul(inv, s), one(kOrder)) << t;
    }
}

TEST(RingAxioms, NegQIsAnInvolutiveHomomorphism)
{
    gen g(13);
    for (int t = 0; t < 300; ++t) {
        const auto s = g.series(kOrder), u = g.series(kOrder);
        ASSERT_EQ(subst_neg_q(subst_neg_q(s)), s);
        ASSERT_EQ(subst_neg_q(mul(s, u)), mul(subst_neg_q(s), subst_neg_q(u)));
        ASSERT_EQ(add(even_part(s), even_part(s)), add(s, subst_neg_q(s)));
    }
}

TEST(RingAxioms, TruncationCommutesWithProduct)
{
    gen g(17);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(kOrder));
    std::mt19937 rng(3);
    for (int t = 0; t < 300; ++t) {
        const auto s = g.series(kOrder), u = g.series(kOrder);
        const auto m = static_cast<order_t>(pick(rng));
        ASSERT_EQ(truncate(mul(s, u), m), mul(truncate(s, m), truncate(u, m)));
    }
}

TEST(Builders, PrefixStabilityAtNPlus17)
{
    for (order_t n : {0u, 5u, 30u, 64u}) {
        for (const auto &entry : series_catalog()) {
            ASSERT_EQ(truncate(entry.build(n + 17), n), entry.build(n)) << entry.name << " N=" << n;
        }
        ASSERT_EQ(truncate(pochhammer_inf(1, 1, sign::plus, n + 17), n), pochhammer_inf(1, 1, sign::plus, n));
        ASSERT_EQ(truncate(pochhammer_inf(2, 3, sign::minus, n + 17), n), pochhammer_inf(2, 3, sign::minus, n));
    }
}
