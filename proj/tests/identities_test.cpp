#include <gtest/gtest.h>

#include <set>

#include <qseries/identities.hpp>

using namespace qseries;

TEST(Registry, Contents)
{
    const auto &r = registry();
    EXPECT_EQ(r.size(), 22u);
    std::set<std::string> names;
    for (const auto &rec : r) {
        names.insert(rec.name);
        EXPECT_FALSE(rec.statement.empty());
    }
    EXPECT_EQ(names.size(), 22u);
    EXPECT_EQ(lookup_identity("id.main").mode, compare_mode::all_coeffs);
    EXPECT_EQ(lookup_identity("id.thm2").mode, compare_mode::even_coeffs_only);
    EXPECT_EQ(r.front().name, "id.step10");
    EXPECT_EQ(r.back().name, "id.final");
    EXPECT_THROW(lookup_identity("id.nope"), unknown_identity);
    EXPECT_THROW(verify("id.nope", 5), unknown_identity);
}

TEST(Verify, SingleIdentities)
{
    for (const char *name : {"id.main", "id.thm2", "id.aux4", "id.step23"}) {
        const auto rep = verify(name, 50);
        EXPECT_EQ(rep.status, verify_status::pass) << name;
        EXPECT_FALSE(rep.first_mismatch.has_value());
        EXPECT_EQ(rep.order, 50u);
        EXPECT_EQ(rep.identity, name);
    }
}

TEST(Verify, AllAtSmallOrders)
{
    for (order_t n : {0u, 1u, 30u}) {
        const auto reps = verify_all(n, 1);
        ASSERT_EQ(reps.size(), 22u);
        for (std::size_t i = 0; i < reps.size(); ++i) {
            EXPECT_EQ(reps[i].identity, registry()[i].name);
            EXPECT_EQ(reps[i].status, verify_status::pass) << reps[i].identity << " at " << n;
        }
    }
}

TEST(Verify, ThreadedOrderIsDeterministic)
{
    const auto serial = verify_all(40, 1);
    const auto threaded = verify_all(40, 4);
    ASSERT_EQ(serial.size(), threaded.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        EXPECT_EQ(serial[i].identity, threaded[i].identity);
        EXPECT_EQ(serial[i].status, threaded[i].status);
    }
}

TEST(Verify, CorruptedRecordFailsAtValuation)
{
    auto rec = lookup_identity("id.main");
    const auto original = rec.rhs;
    rec.rhs = [original](order_t n) { return scale(2, original(n)); };
    const auto rep = verify(rec, 30);
    EXPECT_EQ(rep.status, verify_status::fail);
    ASSERT_TRUE(rep.first_mismatch.has_value());
    EXPECT_EQ(rep.first_mismatch->exponent, 3u);
    EXPECT_EQ(rep.first_mismatch->lhs, -1);
    EXPECT_EQ(rep.first_mismatch->rhs, -2);
}

TEST(Verify, SymmetricInSides)
{
    for (const auto &rec : registry()) {
        auto swapped = rec;
        std::swap(swapped.lhs, swapped.rhs);
        EXPECT_EQ(verify(rec, 25).status, verify(swapped, 25).status) << rec.name;
    }
    auto bad = lookup_identity("id.final");
    bad.rhs = [](order_t n) { return add(Z_series(n), L_series(n)); };
    auto bad_swapped = bad;
    std::swap(bad_swapped.lhs, bad_swapped.rhs);
    const auto a = verify(bad, 20), b = verify(bad_swapped, 20);
    EXPECT_EQ(a.status, verify_status::fail);
    EXPECT_EQ(b.status, verify_status::fail);
    EXPECT_EQ(a.first_mismatch->exponent, b.first_mismatch->exponent);
}

TEST(Verify, EvenModeIsNotVacuous)
{
    const auto z = Z_series(10), l = L_series(10);
    EXPECT_EQ(z[3], 0);
    EXPECT_EQ(l[3], 2);
    EXPECT_TRUE(compare(z, l, compare_mode::all_coeffs).has_value());
    EXPECT_FALSE(compare(z, l, compare_mode::even_coeffs_only).has_value());

    // An even-exponent difference is caught.
    const auto bumped = add(l, monomial(bigint(1), 6, 10));
    const auto mm = compare(z, bumped, compare_mode::even_coeffs_only);
    ASSERT_TRUE(mm.has_value());
    EXPECT_EQ(mm->exponent, 6u);
}

TEST(Verify, ReportJsonSchema)
{
    auto rec = lookup_identity("id.step10");
    rec.rhs = [](order_t n) { return zero(n); };
    auto rep = verify(rec, 10);
    const auto j = to_json(rep);
    EXPECT_EQ(j["identity"], "id.step10");
    EXPECT_EQ(j["order"], 10);
    EXPECT_EQ(j["status"], "fail");
    EXPECT_EQ(j["first_mismatch"]["exponent"], 1);
    EXPECT_EQ(j["first_mismatch"]["lhs"], "1");
    EXPECT_EQ(j["first_mismatch"]["rhs"], "0");
    EXPECT_TRUE(j["elapsed_ms"].is_number_integer());

    const auto back = report_from_json(nlohmann::json::parse(j.dump()));
    EXPECT_EQ(back.identity, rep.identity);
    EXPECT_EQ(back.status, rep.status);
    EXPECT_EQ(back.first_mismatch, rep.first_mismatch);

    const auto pass = to_json(verify("id.step10", 10));
    EXPECT_TRUE(pass["first_mismatch"].is_null());
    EXPECT_EQ(pass["status"], "pass");
}
