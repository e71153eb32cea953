#include <gtest/gtest.h>

#include <set>

#include <qseries/partitions.hpp>

using namespace qseries;

TEST(Partitions, PwCount)
{
    EXPECT_EQ(pw_count(0), 0);
    EXPECT_EQ(pw_count(1), 1);
    EXPECT_EQ(pw_count(2), 2);
    EXPECT_EQ(pw_count(3), 3);
}

TEST(Partitions, PwbarCount)
{
    EXPECT_EQ(pwbar_count(0), 0);
    EXPECT_EQ(pwbar_count(1), 1);
    EXPECT_EQ(pwbar_count(3), 4);
    EXPECT_EQ(pwbar_count(3) % 4, 0);
    // Hand-checked: (4-bar), (2-bar,2), (2,1-bar,1)x2, (3,1-bar) excluded since 3 >= 2, (1-bar,1,1,1).
    EXPECT_EQ(pwbar_count(4), 5);
}

TEST(Partitions, Filter)
{
    EXPECT_TRUE(accepts(partition_filter::odd_lt_twice_smallest, {3, 2}));
    EXPECT_FALSE(accepts(partition_filter::odd_lt_twice_smallest, {3, 1}));
    EXPECT_TRUE(accepts(partition_filter::odd_lt_twice_smallest, {4, 4, 1}));
    EXPECT_FALSE(accepts(partition_filter::odd_lt_twice_smallest, {}));
    EXPECT_EQ(distinct_parts({5, 5, 3, 1, 1}), 3);
}

TEST(Partitions, EnumerationIsCompleteAndCanonical)
{
    const auto p = partition_numbers(25);
    EXPECT_EQ(p[25], 1958);
    for (std::int64_t n = 1; n <= 25; ++n) {
        std::set<partition> seen;
        for_each_partition(n, [&](const partition &parts) {
            EXPECT_TRUE(std::is_sorted(parts.rbegin(), parts.rend()));
            std::int64_t sum = 0;
            for (auto x : parts) {
                sum += x;
            }
            EXPECT_EQ(sum, n);
            seen.insert(parts);
        });
        EXPECT_EQ(bigint(seen.size()), p[static_cast<std::size_t>(n)]) << n;
    }
}

TEST(Partitions, OrderingInvariants)
{
    const auto p = partition_numbers(40);
    for (std::int64_t n = 1; n <= 40; ++n) {
        const auto pw = pw_count(n);
        const auto pwb = pwbar_count(n);
        EXPECT_GE(pwb, pw) << n;
        EXPECT_LE(pw, p[static_cast<std::size_t>(n)]) << n;
        EXPECT_EQ((pwb - pw_single_part_count(n)) % 2, 0) << n;
    }
}

TEST(Partitions, FrozenValues)
{
    const std::vector<int> pwbar{1, 2, 4, 5, 10, 12, 20, 26, 41, 46, 76, 88, 130, 152, 224, 253, 370, 414, 588, 662};
    for (std::size_t n = 1; n <= pwbar.size(); ++n) {
        EXPECT_EQ(pwbar_count(static_cast<std::int64_t>(n)), pwbar[n - 1]) << n;
    }
}

TEST(Partitions, CongruenceScan)
{
    EXPECT_TRUE(congruence_scan(3, 4, 4, 59).all_pass());
    const auto r2 = congruence_scan(6, 8, 4, 62);
    EXPECT_TRUE(r2.all_pass());
    EXPECT_EQ(r2.entries.size(), 8u);

    const auto neg = congruence_scan(0, 1, 2, 10);
    EXPECT_FALSE(neg.all_pass());
    EXPECT_FALSE(neg.entries[1].pass); // pwbar(1) = 1

    EXPECT_THROW(congruence_scan(4, 4, 4, 10), std::invalid_argument);
    EXPECT_THROW(congruence_scan(0, 4, 1, 10), std::invalid_argument);

    const auto j = to_json(congruence_scan(3, 4, 4, 7));
    ASSERT_EQ(j.size(), 2u);
    EXPECT_EQ(j[0]["n"], 3);
    EXPECT_EQ(j[0]["value"], "4");
    EXPECT_EQ(j[0]["residue"], "0");
    EXPECT_EQ(j[1]["value"], "20");
    EXPECT_EQ(j[1]["pass"], true);
}

TEST(Partitions, OmegaCrosscheck)
{
    EXPECT_TRUE(pw_omega_crosscheck(1).pass);
    EXPECT_TRUE(pw_omega_crosscheck(3).pass);
    const auto r = pw_omega_crosscheck(40);
    EXPECT_TRUE(r.pass);
    EXPECT_FALSE(r.first_mismatch.has_value());
    EXPECT_EQ(r.entries.size(), 40u);
    EXPECT_THROW(pw_omega_crosscheck(0), std::invalid_argument);
}
