#ifndef QSERIES_IDENTITIES_HPP
#define QSERIES_IDENTITIES_HPP

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <future>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include <qseries/catalog.hpp>
#include <qseries/lambert.hpp>
#include <qseries/products.hpp>
#include <qseries/series.hpp>

namespace qseries
{

enum class compare_mode {
    all_coeffs,
    // Only exponents 2, 4, 6, ... are compared.
    even_coeffs_only,
};

inline std::string to_string(compare_mode m)
{
    return m == compare_mode::all_coeffs ? "all_coeffs" : "even_coeffs_only";
}

struct identity_record {
    std::string name;
    series_builder lhs;
    series_builder rhs;
    compare_mode mode = compare_mode::all_coeffs;
    // Human-readable statement of the registered form.
    std::string statement;
};

struct mismatch {
    order_t exponent = 0;
    bigint lhs;
    bigint rhs;

    friend bool operator==(const mismatch &, const mismatch &) = default;
};

enum class verify_status { pass, fail };

struct verify_report {
    std::string identity;
    order_t order = 0;
    verify_status status = verify_status::pass;
    std::optional<mismatch> first_mismatch;
    std::int64_t elapsed_ms = 0;
};

namespace detail
{

inline trunc_series q_times(const trunc_series &s)
{
    return shift_up(s, 1);
}

// q * E(q)
inline trunc_series qE(order_t n)
{
    return q_times(E_series(n));
}

inline series_builder single(lambert_spec (*make)())
{
    return [make](order_t n) { return lambert_single(make(), n); };
}

inline series_builder dbl(double_lambert_spec (*make)())
{
    return [make](order_t n) { return double_lambert(make(), n); };
}

} // namespace detail

/// The registered identities, in a fixed order.
///
/// Forms with a factor 1/2 are doubled and forms with a factor q^{-1} are multiplied through
/// by q, so that both sides stay in the integer power-series ring.
inline const std::vector<identity_record> &registry()
{
    using detail::dbl;
    using detail::qE;
    using detail::single;
    using compare_mode::all_coeffs;
    using compare_mode::even_coeffs_only;

    static const std::vector<identity_record> records = [] {
        std::vector<identity_record> r;
        r.push_back({"id.step10", single(&specs::odd_plus_lambert), &detail::qE, all_coeffs,
                     "sum_{n>=1} q^n/(1+q^(2n-1)) = q E(q)"});
        r.push_back({"id.step11", single(&specs::odd_minus_alternating_lambert),
                     [](order_t n) { return neg(qE(n)); }, all_coeffs, "sum_{n>=1} (-q)^n/(1-q^(2n-1)) = -q E(q)"});
        r.push_back({"id.aab", &Y_series,
                     [](order_t n) { return neg(triangular_sum(specs::Y_triangular(), n)); }, all_coeffs,
                     "Y(q) = -sum_{k>=2} q^k/(1+q^(2k-1)) sum_{n=1}^{k-1} q^n/(1+q^n)"});
        r.push_back({"id.step1", &Y_series,
                     [](order_t n) { return add(neg(double_lambert(specs::split_rectangular_sum(), n)), A_series(n)); },
                     all_coeffs, "Y(q) = -sum_{k,n>=1} q^(k+n)/((1+q^n)(1+q^(2k-1))) + A(q)"});
        r.push_back({"id.step3", &A_series,
                     [](order_t n) { return add(neg(double_lambert(specs::split_bilinear_sum(), n)), Z_series(n)); },
                     all_coeffs, "A(q) = -sum_{k,n>=1} q^(2kn+k)/((1-q^(2n))(1+q^(2k-1))) + Z(q)"});
        r.push_back({"id.aux1", &Y_series,
                     [](order_t n) {
                         return Z_series(n) - double_lambert(specs::split_rectangular_sum(), n)
                                - double_lambert(specs::split_bilinear_sum(), n);
                     },
                     all_coeffs,
                     "Y(q) = -sum_{k,n>=1} q^(k+n)/((1+q^n)(1+q^(2k-1))) "
                     "- sum_{k,n>=1} q^(2kn+k)/((1-q^(2n))(1+q^(2k-1))) + Z(q)"});
        r.push_back({"id.znew", &Z_series, dbl(&specs::Z_tail_sum), all_coeffs,
                     "Z(q) = sum_{n>=1} q^n/(1+q^(2n-1)) sum_{k>=n} q^k/(1-q^(2k))"});
        r.push_back({"id.step6", &X_series, dbl(&specs::X_tail_sum), all_coeffs,
                     "X(q) = -sum_{n>=1} q^n/(1-q^n) sum_{k>=n+1} q^k/(1+q^(2k-1))"});
        r.push_back({"id.aux2x2", [](order_t n) { return scale(2, Z_series(n)); },
                     [](order_t n) {
                         return scale(2, double_lambert(specs::mixed_rectangular_sum(), n)) + X_series(n) + Y_series(n);
                     },
                     all_coeffs, "2 Z(q) = 2 sum_{k,n>=1} q^(k+n)/((1+q^(2n-1))(1-q^(2k))) + X(q) + Y(q)"});
        r.push_back({"id.main", &Y_series,
                     [](order_t n) { return neg(mul(qE(n), lambert_single(specs::even_plus_lambert(), n))); },
                     all_coeffs, "Y(q) = -q E(q) sum_{k>=1} q^(2k)/(1+q^(2k))"});
        r.push_back({"id.yodd",
                     [](order_t n) {
                         auto y = Y_series(n);
                         return add(y, subst_neg_q(y));
                     },
                     [](order_t n) { return zero(n); }, all_coeffs, "Y(q) + Y(-q) = 0"});
        r.push_back({"id.zeven", [](order_t n) { return subst_neg_q(Z_series(n)); }, &Z_series, all_coeffs,
                     "Z(-q) = Z(q)"});
        r.push_back({"id.aux3", [](order_t n) { return Y_series(n) + L_series(n); },
                     [](order_t n) {
                         return D_series(n) + Z_series(n) - mul(qE(n), lambert_single(specs::half_even_lambert(), n));
                     },
                     all_coeffs, "Y(q) + L(q) = D(q) + Z(q) - q E(q) sum_{n>=1} q^n/(1-q^(2n))"});
        r.push_back({"id.step15", &D_series, dbl(&specs::D_tail_sum), all_coeffs,
                     "D(q) = -sum_{k>=1} (-1)^k q^k/(1-q^(2k-1)) sum_{n>=k} q^(2n-1)/(1-q^(2n-1))"});
        r.push_back({"id.Lclosed", &L_series, single(&specs::L_squared_denominator), all_coeffs,
                     "L(q) = sum_{m>=1} (-1)^(m-1) q^(3m-1)/(1-q^(2m-1))^2"});
        r.push_back({"id.step19q", [](order_t n) { return detail::q_times(double_lambert(specs::skew_bilinear_sum(), n)); },
                     [](order_t n) { return neg(detail::q_times(L_series(n))) - N_series(n); }, all_coeffs,
                     "q sum_{n,k>=1} (-1)^k q^(2nk+k-n)/((1-q^(2k-1))(1+q^(2n-1))) = -q L(q) - N(q)"});
        r.push_back({"id.step22", &N_series,
                     [](order_t n) {
                         return mul(qE(n), lambert_single(specs::shifted_odd_minus_lambert(), n))
                                - detail::q_times(D_series(n));
                     },
                     all_coeffs, "N(q) = q E(q) sum_{k>=1} q^(2k)/(1-q^(2k-1)) - q D(q)"});
        r.push_back({"id.step20q", [](order_t n) { return detail::q_times(subst_neg_q(D_series(n))); },
                     [](order_t n) {
                         return mul(qE(n), lambert_single(specs::shifted_odd_plus_lambert(), n)) + N_series(n);
                     },
                     all_coeffs, "q D(-q) = q E(q) sum_{n>=1} q^(2n)/(1+q^(2n-1)) + N(q)"});
        r.push_back({"id.step23", dbl(&specs::skew_bilinear_sum),
                     [](order_t n) {
                         return D_series(n) - L_series(n)
                                - mul(E_series(n), lambert_single(specs::shifted_odd_minus_lambert(), n));
                     },
                     all_coeffs,
                     "sum_{n,k>=1} (-1)^k q^(2nk+k-n)/((1-q^(2k-1))(1+q^(2n-1))) "
                     "= D(q) - L(q) - E(q) sum_{k>=1} q^(2k)/(1-q^(2k-1))"});
        r.push_back({"id.aux4",
                     [](order_t n) {
                         auto d = D_series(n);
                         return add(d, subst_neg_q(d));
                     },
                     [](order_t n) { return scale(2, mul(E_series(n), lambert_single(specs::doubled_odd_lambert(), n))); },
                     all_coeffs, "D(q) + D(-q) = 2 E(q) sum_{n>=1} q^(2n)/(1-q^(4n-2))"});
        r.push_back({"id.thm2", &Z_series, &L_series, even_coeffs_only, "[q^(2r)] Z(q) = [q^(2r)] L(q) for r >= 1"});
        r.push_back({"id.final",
                     [](order_t n) {
                         auto l = L_series(n);
                         return add(l, subst_neg_q(l));
                     },
                     [](order_t n) { return scale(2, Z_series(n)); }, all_coeffs, "L(q) + L(-q) = 2 Z(q)"});
        return r;
    }();
    return records;
}

inline const identity_record &lookup_identity(const std::string &name)
{
    for (const auto &rec : registry()) {
        if (rec.name == name) {
            return rec;
        }
    }
    throw unknown_identity("unknown identity: " + name);
}

// First exponent where the two sides differ under the given mode.
inline std::optional<mismatch> compare(const trunc_series &lhs, const trunc_series &rhs, compare_mode mode)
{
    const order_t n = std::min(lhs.order(), rhs.order());
    const std::size_t first = mode == compare_mode::even_coeffs_only ? 2 : 0;
    const std::size_t step = mode == compare_mode::even_coeffs_only ? 2 : 1;
    for (std::size_t e = first; e <= n; e += step) {
        if (lhs[e] != rhs[e]) {
            return mismatch{e, lhs[e], rhs[e]};
        }
    }
    return std::nullopt;
}

inline verify_report verify(const identity_record &rec, order_t n)
{
    const auto t0 = std::chrono::steady_clock::now();
    const auto lhs = rec.lhs(n);
    const auto rhs = rec.rhs(n);
    verify_report rep;
    rep.identity = rec.name;
    rep.order = n;
    rep.first_mismatch = compare(lhs, rhs, rec.mode);
    rep.status = rep.first_mismatch ? verify_status::fail : verify_status::pass;
    rep.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

inline verify_report verify(const std::string &name, order_t n)
{
    return verify(lookup_identity(name), n);
}

/// Verifies every registered identity. Work may fan out over `threads` workers (0 picks the
/// hardware concurrency); reports always come back in registry order.
inline std::vector<verify_report> verify_all(order_t n, unsigned threads = 0)
{
    const auto &recs = registry();
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    std::vector<verify_report> out(recs.size());
    if (threads == 1) {
        for (std::size_t i = 0; i < recs.size(); ++i) {
            out[i] = verify(recs[i], n);
        }
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::future<void>> workers;
    for (unsigned t = 0; t < threads; ++t) {
        workers.push_back(std::async(std::launch::async, [&] {
            for (std::size_t i = next++; i < recs.size(); i = next++) {
                out[i] = verify(recs[i], n);
            }
        }));
    }
    for (auto &w : workers) {
        w.get();
    }
    return out;
}

inline std::string to_string(verify_status s)
{
    return s == verify_status::pass ? "pass" : "fail";
}

inline nlohmann::json to_json(const verify_report &r)
{
    nlohmann::json j{{"identity", r.identity},
                     {"order", r.order},
                     {"status", to_string(r.status)},
                     {"first_mismatch", nullptr},
                     {"elapsed_ms", r.elapsed_ms}};
    if (r.first_mismatch) {
        j["first_mismatch"] = {{"exponent", r.first_mismatch->exponent},
                               {"lhs", r.first_mismatch->lhs.str()},
                               {"rhs", r.first_mismatch->rhs.str()}};
    }
    return j;
}

inline verify_report report_from_json(const nlohmann::json &j)
{
    verify_report r;
    r.identity = j.at("identity").get<std::string>();
    r.order = j.at("order").get<order_t>();
    const auto status = j.at("status").get<std::string>();
    if (status != "pass" && status != "fail") {
        throw std::invalid_argument("report status must be pass or fail");
    }
    r.status = status == "pass" ? verify_status::pass : verify_status::fail;
    if (const auto &m = j.at("first_mismatch"); !m.is_null()) {
        r.first_mismatch = mismatch{m.at("exponent").get<order_t>(), bigint(m.at("lhs").get<std::string>()),
                                    bigint(m.at("rhs").get<std::string>())};
    }
    r.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
    return r;
}

} // namespace qseries

#endif
