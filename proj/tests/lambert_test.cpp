#include <gtest/gtest.h>

#include <qseries/catalog.hpp>
#include <qseries/naive_oracle.hpp>

using namespace qseries;

namespace
{

trunc_series S(std::initializer_list<long long> c)
{
    return make_series(c);
}

} // namespace

TEST(LambertSingle, Examples)
{
    EXPECT_EQ(lambert_single(specs::odd_plus_lambert(), 4), S({0, 1, 0, 2, 0}));
    EXPECT_EQ(L_series(4), S({0, 0, 1, 2, 3}));

    auto late = specs::odd_plus_lambert();
    late.start = 10;
    EXPECT_EQ(lambert_single(late, 6), zero(6));
}

TEST(LambertSingle, SquaredDenominatorMatchesProductOfGeometrics)
{
    const order_t n = 50;
    const lambert_spec sq{.weight = {sign::minus, 2, 1}, .num_exp = {2, 1}, .den_sign = sign::minus,
                          .den_exp = {3, -1}, .den_pow = 2};
    auto expect = zero(n);
    for (std::int64_t k = 1; 2 * k + 1 <= static_cast<std::int64_t>(n); ++k) {
        const auto g = geometric(sign::minus, 3 * k - 1, n);
        const auto w = sq.weight(k);
        expect = add(expect, shift_up(scale(w, mul(g, g)), 2 * k + 1));
    }
    EXPECT_EQ(lambert_single(sq, n), expect);
}

TEST(LambertSingle, StartZero)
{
    // sum_{n>=0} q^{2n} / (1 - q^{n+1}) includes the n = 0 term 1/(1-q).
    const lambert_spec s{.num_exp = {2, 0}, .den_sign = sign::plus, .den_exp = {1, 1}, .start = 0};
    const auto r = lambert_single(s, 6);
    // 1/(1-q) + q^2/(1-q^2) + q^4/(1-q^3) + q^6/(1-q^4)
    EXPECT_EQ(r, S({1, 1, 2, 1, 3, 1, 3}));
}

TEST(LambertSingle, Validation)
{
    auto bad = specs::odd_plus_lambert();
    bad.num_exp = {0, 3};
    EXPECT_THROW(lambert_single(bad, 5), spec_invalid);
    bad = specs::odd_plus_lambert();
    bad.den_exp = {2, -2};
    EXPECT_THROW(lambert_single(bad, 5), spec_invalid);
    bad = specs::odd_plus_lambert();
    bad.den_pow = 3;
    EXPECT_THROW(lambert_single(bad, 5), spec_invalid);
    bad = specs::odd_plus_lambert();
    bad.num_exp = {1, -1};
    EXPECT_THROW(lambert_single(bad, 5), spec_invalid);
    bad.start = 0;
    bad.num_exp = {1, -1};
    EXPECT_THROW(lambert_single(bad, 5), spec_invalid);
}

TEST(DoubleLambert, Examples)
{
    EXPECT_EQ(Y_series(4), S({0, 0, 0, -1, 0}));
    EXPECT_EQ(Z_series(4), S({0, 0, 1, 0, 3}));
    EXPECT_EQ(X_series(2), S({0, 0, 0}));
}

TEST(DoubleLambert, Validation)
{
    // Exponent 2nk - k - n vanishes at (1, 1).
    auto bad = specs::skew_bilinear_sum();
    bad.num_exp = {2, -1, -1, 0};
    EXPECT_THROW(double_lambert(bad, 10), spec_invalid);

    // Not increasing in the outer index: 0*nm + 0*n + m.
    bad = specs::Z();
    bad.num_exp = {0, 0, 1, 0};
    EXPECT_THROW(double_lambert(bad, 10), spec_invalid);

    bad = specs::Z();
    bad.den1 = {sign::plus, 0, 1, -1};
    EXPECT_THROW(double_lambert(bad, 10), spec_invalid);

    bad = specs::Z();
    bad.start_outer = 0;
    EXPECT_THROW(double_lambert(bad, 10), spec_invalid);
}

TEST(Triangular, Examples)
{
    EXPECT_EQ(neg(triangular_sum(specs::Y_triangular(), 4)), S({0, 0, 0, -1, 0}));
    EXPECT_EQ(neg(triangular_sum(specs::Y_triangular(), 30)), Y_series(30));
    // Value from the long-division oracle.
    EXPECT_EQ(D_series(4), S({0, 0, 1, 2, 4}));
    EXPECT_EQ(D_series(4), naive::D(4));

    // Inner range n0..k-1 is empty whenever k <= 5 here, and every outer exponent is <= 5.
    auto empty = specs::D();
    empty.inner_start = 5;
    EXPECT_EQ(triangular_sum(empty, 5), zero(5));

    auto bad = specs::D();
    bad.inner.den_exp = {0, 0};
    EXPECT_THROW(triangular_sum(bad, 5), spec_invalid);
    bad = specs::D();
    bad.outer.num_exp = {0, 1};
    EXPECT_THROW(triangular_sum(bad, 5), spec_invalid);
}

TEST(NamedSeries, SpotValues)
{
    const auto z = Z_series(4), l = L_series(4);
    EXPECT_EQ(coeff(z, 3), 0);
    EXPECT_EQ(coeff(l, 3), 2);
    EXPECT_EQ(coeff(z, 2), 1);
    EXPECT_EQ(coeff(l, 2), 1);
    EXPECT_EQ(subst_neg_q(Z_series(6)), Z_series(6));
    EXPECT_EQ(subst_neg_q(Y_series(6)), neg(Y_series(6)));
}

TEST(NamedSeries, FrozenHeads)
{
    // Expanded independently to q^20 (plain-integer long division, outside this code base).
    const std::map<std::string, std::vector<int>> heads{
        {"Y", {0, 0, 0, -1, 0, -2, 0, -3, 0, -5, 0, -4, 0, -7, 0, -9, 0, -6, 0, -11, 0}},
        {"X", {0, 0, 0, -1, -2, -4, -4, -7, -8, -11, -12, -16, -14, -19, -20, -25, -26, -30, -28, -35, -32}},
        {"Z", {0, 0, 1, 0, 3, 0, 5, 0, 6, 0, 9, 0, 11, 0, 10, 0, 15, 0, 18, 0, 14}},
        {"A", {0, 0, 1, -1, 4, -3, 7, -5, 10, -8, 15, -10, 18, -13, 20, -17, 28, -18, 32, -23, 30}},
        {"N", {0, 0, 0, 0, -1, 0, -1, 0, -3, 0, -3, 0, -2, 0, -7, 0, -5, 0, -4, 0, -7}},
        {"D", {0, 0, 1, 2, 4, 4, 7, 8, 10, 11, 15, 12, 18, 20, 20, 22, 28, 22, 32, 30, 30}},
        {"L", {0, 0, 1, 2, 3, 3, 5, 6, 6, 8, 9, 6, 11, 14, 10, 14, 15, 10, 18, 18, 14}},
    };
    for (const auto &[name, head] : heads) {
        const auto s = lookup_series(name).build(20);
        for (std::size_t e = 0; e < head.size(); ++e) {
            EXPECT_EQ(s[e], head[e]) << name << " q^" << e;
        }
    }
}

TEST(NamedSeries, Valuations)
{
    const auto y = Y_series(30), z = Z_series(30), l = L_series(30);
    EXPECT_EQ(y.valuation(), 3u);
    EXPECT_EQ(y[3], -1);
    EXPECT_EQ(z.valuation(), 2u);
    EXPECT_EQ(z[2], 1);
    EXPECT_EQ(l.valuation(), 2u);
    EXPECT_EQ(l[2], 1);
}

TEST(NamedSeries, ClosedFormOfL)
{
    EXPECT_EQ(L_series(150), lambert_single(specs::L_squared_denominator(), 150));
}

TEST(NamedSeries, MatchNaiveOracle)
{
    for (const auto &[name, oracle] : naive::oracles()) {
        for (order_t n : {0u, 1u, 7u, 60u}) {
            EXPECT_EQ(lookup_series(name).build(n), oracle(n)) << name << " at order " << n;
        }
    }
}

TEST(NamedSeries, PrefixStability)
{
    for (const auto &entry : series_catalog()) {
        for (order_t n : {0u, 13u, 50u}) {
            EXPECT_EQ(truncate(entry.build(n + 17), n), entry.build(n)) << entry.name << " at " << n;
        }
    }
}

TEST(NamedSeries, CatalogLookup)
{
    EXPECT_THROW(lookup_series("W"), unknown_series);
    EXPECT_TRUE(lookup_series("Y").spec.has_value());
    EXPECT_FALSE(lookup_series("E").spec.has_value());
    EXPECT_EQ((*lookup_series("A").spec)["range"], "diagonal");
    EXPECT_EQ((*lookup_series("L_closed").spec)["den_pow"], 2);
}
