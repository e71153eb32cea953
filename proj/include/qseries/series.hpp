#ifndef QSERIES_SERIES_HPP
#define QSERIES_SERIES_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include <qseries/errors.hpp>

namespace qseries
{

using bigint = boost::multiprecision::cpp_int;

// Truncation order: coefficients of q^0 .. q^order inclusive are stored.
using order_t = std::size_t;

// Exponents arrive signed so that negative powers of q can be rejected rather than wrapped.
using exponent_t = std::int64_t;

enum class sign : int { plus = 1, minus = -1 };

constexpr int to_int(sign s) noexcept
{
    return static_cast<int>(s);
}

constexpr sign operator*(sign a, sign b) noexcept
{
    return a == b ? sign::plus : sign::minus;
}

// s^j for a sign s.
constexpr sign sign_pow(sign s, std::int64_t j) noexcept
{
    return (s == sign::plus || j % 2 == 0) ? sign::plus : sign::minus;
}

inline constexpr std::size_t default_karatsuba_threshold = 64;

/// Formal power series in q truncated at a fixed order, with exact integer coefficients.
///
/// Values are immutable once built; every operation below returns a new series. Binary
/// operations on series of different orders return a result at the smaller order.
template <typename Int>
class basic_trunc_series
{
public:
    using coefficient_type = Int;

    explicit basic_trunc_series(order_t order) : m_coeffs(order + 1) {}

    // coeffs[e] is the coefficient of q^e; the order is coeffs.size() - 1.
    explicit basic_trunc_series(std::vector<Int> coeffs) : m_coeffs(std::move(coeffs))
    {
        if (m_coeffs.empty()) {
            throw std::invalid_argument("a truncated series needs at least the constant coefficient");
        }
    }

    order_t order() const noexcept
    {
        return m_coeffs.size() - 1;
    }

    std::span<const Int> coeffs() const noexcept
    {
        return m_coeffs;
    }

    // Unchecked access; see coeff() for the checked variant.
    const Int &operator[](std::size_t e) const noexcept
    {
        return m_coeffs[e];
    }

    const Int &coeff(exponent_t e) const
    {
        if (e < 0 || static_cast<std::uint64_t>(e) > order()) {
            throw order_exceeded("exponent " + std::to_string(e) + " outside truncation order "
                                 + std::to_string(order()));
        }
        return m_coeffs[static_cast<std::size_t>(e)];
    }

    bool is_zero() const
    {
        return std::all_of(m_coeffs.begin(), m_coeffs.end(), [](const Int &c) { return c == 0; });
    }

    // Smallest exponent carrying a nonzero coefficient, if any.
    std::optional<order_t> valuation() const
    {
        for (std::size_t e = 0; e < m_coeffs.size(); ++e) {
            if (m_coeffs[e] != 0) {
                return e;
            }
        }
        return std::nullopt;
    }

    std::vector<Int> release() &&
    {
        return std::move(m_coeffs);
    }

    friend bool operator==(const basic_trunc_series &, const basic_trunc_series &) = default;

private:
    std::vector<Int> m_coeffs;
};

using trunc_series = basic_trunc_series<bigint>;

template <typename Int = bigint>
basic_trunc_series<Int> zero(order_t n)
{
    return basic_trunc_series<Int>(n);
}

template <typename Int = bigint>
basic_trunc_series<Int> one(order_t n)
{
    std::vector<Int> c(n + 1);
    c[0] = 1;
    return basic_trunc_series<Int>(std::move(c));
}

template <typename Int = bigint>
basic_trunc_series<Int> monomial(const Int &c, exponent_t e, order_t n)
{
    if (e < 0) {
        throw invalid_exponent("negative powers of q are not representable");
    }
    std::vector<Int> v(n + 1);
    if (static_cast<std::uint64_t>(e) <= n) {
        v[static_cast<std::size_t>(e)] = c;
    }
    return basic_trunc_series<Int>(std::move(v));
}

template <typename Int>
basic_trunc_series<Int> truncate(const basic_trunc_series<Int> &s, order_t m)
{
    if (m > s.order()) {
        throw order_exceeded("cannot truncate a series of order " + std::to_string(s.order())
                             + " to larger order " + std::to_string(m));
    }
    auto c = s.coeffs();
    return basic_trunc_series<Int>(std::vector<Int>(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(m + 1)));
}

template <typename Int>
basic_trunc_series<Int> add(const basic_trunc_series<Int> &s, const basic_trunc_series<Int> &t)
{
    const order_t n = std::min(s.order(), t.order());
    std::vector<Int> r(n + 1);
    for (std::size_t e = 0; e <= n; ++e) {
        r[e] = s[e] + t[e];
    }
    return basic_trunc_series<Int>(std::move(r));
}

template <typename Int>
basic_trunc_series<Int> sub(const basic_trunc_series<Int> &s, const basic_trunc_series<Int> &t)
{
    const order_t n = std::min(s.order(), t.order());
    std::vector<Int> r(n + 1);
    for (std::size_t e = 0; e <= n; ++e) {
        r[e] = s[e] - t[e];
    }
    return basic_trunc_series<Int>(std::move(r));
}

template <typename Int>
basic_trunc_series<Int> neg(const basic_trunc_series<Int> &s)
{
    std::vector<Int> r(s.coeffs().begin(), s.coeffs().end());
    for (auto &c : r) {
        c = -c;
    }
    return basic_trunc_series<Int>(std::move(r));
}

template <typename Int>
basic_trunc_series<Int> scale(const Int &k, const basic_trunc_series<Int> &s)
{
    std::vector<Int> r(s.coeffs().begin(), s.coeffs().end());
    for (auto &c : r) {
        c *= k;
    }
    return basic_trunc_series<Int>(std::move(r));
}

template <typename Int>
basic_trunc_series<Int> scale(long long k, const basic_trunc_series<Int> &s)
{
    return scale(Int(k), s);
}

namespace detail
{

// out[i+j] += a[i]*b[j] for all i+j < out.size().
template <typename Int>
void schoolbook_accumulate(std::span<const Int> a, std::span<const Int> b, std::span<Int> out)
{
    for (std::size_t i = 0; i < a.size() && i < out.size(); ++i) {
        if (a[i] == 0) {
            continue;
        }
        const std::size_t lim = std::min(b.size(), out.size() - i);
        for (std::size_t j = 0; j < lim; ++j) {
            if (b[j] != 0) {
                out[i + j] += a[i] * b[j];
            }
        }
    }
}

// Full product of two equal-length blocks into out (size 2n-1), Karatsuba above threshold.
template <typename Int>
void karatsuba_full(std::span<const Int> a, std::span<const Int> b, std::span<Int> out, std::size_t threshold)
{
    const std::size_t n = a.size();
    if (n <= threshold || n < 2) {
        schoolbook_accumulate(a, b, out);
        return;
    }
    const std::size_t lo = n / 2;
    const std::size_t hi = n - lo;
    auto a0 = a.first(lo), a1 = a.subspan(lo);
    auto b0 = b.first(lo), b1 = b.subspan(lo);

    std::vector<Int> z0(2 * lo - 1), z2(2 * hi - 1), z1(2 * hi - 1);
    karatsuba_full<Int>(a0, b0, z0, threshold);
    karatsuba_full<Int>(a1, b1, z2, threshold);

    std::vector<Int> sa(a1.begin(), a1.end()), sb(b1.begin(), b1.end());
    for (std::size_t i = 0; i < lo; ++i) {
        sa[i] += a0[i];
        sb[i] += b0[i];
    }
    karatsuba_full<Int>(sa, sb, z1, threshold);
    for (std::size_t i = 0; i < z0.size(); ++i) {
        z1[i] -= z0[i];
    }
    for (std::size_t i = 0; i < z2.size(); ++i) {
        z1[i] -= z2[i];
    }

    for (std::size_t i = 0; i < z0.size(); ++i) {
        out[i] += z0[i];
    }
    for (std::size_t i = 0; i < z1.size(); ++i) {
        out[lo + i] += z1[i];
    }
    for (std::size_t i = 0; i < z2.size(); ++i) {
        out[2 * lo + i] += z2[i];
    }
}

} // namespace detail

template <typename Int>
basic_trunc_series<Int> mul_schoolbook(const basic_trunc_series<Int> &s, const basic_trunc_series<Int> &t)
{
    const order_t n = std::min(s.order(), t.order());
    std::vector<Int> r(n + 1);
    detail::schoolbook_accumulate<Int>(s.coeffs().first(n + 1), t.coeffs().first(n + 1), r);
    return basic_trunc_series<Int>(std::move(r));
}

template <typename Int>
basic_trunc_series<Int> mul_karatsuba(const basic_trunc_series<Int> &s, const basic_trunc_series<Int> &t,
                                      std::size_t threshold = default_karatsuba_threshold)
{
    const order_t n = std::min(s.order(), t.order());
    std::vector<Int> full(2 * n + 1);
    detail::karatsuba_full<Int>(s.coeffs().first(n + 1), t.coeffs().first(n + 1), full,
                                std::max<std::size_t>(threshold, 1));
    full.resize(n + 1);
    return basic_trunc_series<Int>(std::move(full));
}

/// Cauchy product truncated at the smaller of the two orders.
///
/// Switches to Karatsuba once the operands exceed `threshold` coefficients; both paths
/// produce identical results.
template <typename Int>
basic_trunc_series<Int> mul(const basic_trunc_series<Int> &s, const basic_trunc_series<Int> &t,
                            std::size_t threshold = default_karatsuba_threshold)
{
    if (std::min(s.order(), t.order()) + 1 > threshold) {
        return mul_karatsuba(s, t, threshold);
    }
    return mul_schoolbook(s, t);
}

template <typename Int>
basic_trunc_series<Int> shift_up(const basic_trunc_series<Int> &s, exponent_t k)
{
    if (k < 0) {
        throw invalid_exponent("shift by a negative power of q");
    }
    const order_t n = s.order();
    std::vector<Int> r(n + 1);
    if (static_cast<std::uint64_t>(k) <= n) {
        const auto kk = static_cast<std::size_t>(k);
        for (std::size_t e = kk; e <= n; ++e) {
            r[e] = s[e - kk];
        }
    }
    return basic_trunc_series<Int>(std::move(r));
}

// q -> -q.
template <typename Int>
basic_trunc_series<Int> subst_neg_q(const basic_trunc_series<Int> &s)
{
    std::vector<Int> r(s.coeffs().begin(), s.coeffs().end());
    for (std::size_t e = 1; e < r.size(); e += 2) {
        r[e] = -r[e];
    }
    return basic_trunc_series<Int>(std::move(r));
}

// q -> q^k. The result has order k*order(s) unless a smaller cap is given.
template <typename Int>
basic_trunc_series<Int> subst_q_pow(const basic_trunc_series<Int> &s, exponent_t k,
                                    std::optional<order_t> cap = std::nullopt)
{
    if (k < 1) {
        throw invalid_exponent("q -> q^k needs k >= 1");
    }
    const auto kk = static_cast<std::size_t>(k);
    const order_t n = cap.value_or(kk * s.order());
    std::vector<Int> r(n + 1);
    for (std::size_t e = 0; e <= s.order() && e * kk <= n; ++e) {
        r[e * kk] = s[e];
    }
    return basic_trunc_series<Int>(std::move(r));
}

/// Multiplicative inverse of a series whose constant term is +1 or -1.
template <typename Int>
basic_trunc_series<Int> invert_unit(const basic_trunc_series<Int> &s)
{
    const Int &c0 = s[0];
    if (c0 != 1 && c0 != -1) {
        throw not_a_unit("constant term must be +1 or -1 to invert over the integers");
    }
    const bool negative = (c0 == -1);
    const order_t n = s.order();
    std::vector<Int> r(n + 1);
    r[0] = c0;
    for (std::size_t e = 1; e <= n; ++e) {
        Int acc = 0;
        for (std::size_t j = 1; j <= e; ++j) {
            if (s[j] != 0) {
                acc += s[j] * r[e - j];
            }
        }
        // r[e] = -acc / c0
        r[e] = negative ? acc : Int(-acc);
    }
    return basic_trunc_series<Int>(std::move(r));
}

/// 1/(1 - s q^d) = sum_{j>=0} s^j q^{dj}.
template <typename Int = bigint>
basic_trunc_series<Int> geometric(sign s, exponent_t d, order_t n)
{
    if (d < 1) {
        throw invalid_exponent("geometric kernel needs a positive exponent");
    }
    std::vector<Int> r(n + 1);
    const auto dd = static_cast<std::size_t>(d);
    int v = 1;
    for (std::size_t e = 0; e <= n; e += dd) {
        r[e] = v;
        v *= to_int(s);
    }
    return basic_trunc_series<Int>(std::move(r));
}

// s * (1 - sgn q^d), computed in place in linear time.
template <typename Int>
basic_trunc_series<Int> mul_one_minus(const basic_trunc_series<Int> &s, sign sgn, exponent_t d)
{
    if (d < 1) {
        throw invalid_exponent("binomial factor needs a positive exponent");
    }
    std::vector<Int> r(s.coeffs().begin(), s.coeffs().end());
    const auto dd = static_cast<std::size_t>(d);
    for (std::size_t e = r.size(); e-- > dd;) {
        if (sgn == sign::plus) {
            r[e] -= r[e - dd];
        } else {
            r[e] += r[e - dd];
        }
    }
    return basic_trunc_series<Int>(std::move(r));
}

// s / (1 - sgn q^d), computed in place in linear time.
template <typename Int>
basic_trunc_series<Int> div_one_minus(const basic_trunc_series<Int> &s, sign sgn, exponent_t d)
{
    if (d < 1) {
        throw invalid_exponent("binomial factor needs a positive exponent");
    }
    std::vector<Int> r(s.coeffs().begin(), s.coeffs().end());
    const auto dd = static_cast<std::size_t>(d);
    for (std::size_t e = dd; e < r.size(); ++e) {
        if (sgn == sign::plus) {
            r[e] += r[e - dd];
        } else {
            r[e] -= r[e - dd];
        }
    }
    return basic_trunc_series<Int>(std::move(r));
}

template <typename Int>
const Int &coeff(const basic_trunc_series<Int> &s, exponent_t e)
{
    return s.coeff(e);
}

// Coefficientwise equality on exponents 0..m.
template <typename Int>
bool equals_upto(const basic_trunc_series<Int> &s, const basic_trunc_series<Int> &t, order_t m)
{
    if (m > s.order() || m > t.order()) {
        throw order_exceeded("comparison order " + std::to_string(m) + " exceeds an operand's order");
    }
    for (std::size_t e = 0; e <= m; ++e) {
        if (s[e] != t[e]) {
            return false;
        }
    }
    return true;
}

template <typename Int>
basic_trunc_series<Int> even_part(const basic_trunc_series<Int> &s)
{
    std::vector<Int> r(s.coeffs().begin(), s.coeffs().end());
    for (std::size_t e = 1; e < r.size(); e += 2) {
        r[e] = 0;
    }
    return basic_trunc_series<Int>(std::move(r));
}

template <typename Int>
basic_trunc_series<Int> odd_part(const basic_trunc_series<Int> &s)
{
    std::vector<Int> r(s.coeffs().begin(), s.coeffs().end());
    for (std::size_t e = 0; e < r.size(); e += 2) {
        r[e] = 0;
    }
    return basic_trunc_series<Int>(std::move(r));
}

template <typename Int>
basic_trunc_series<Int> operator+(const basic_trunc_series<Int> &s, const basic_trunc_series<Int> &t)
{
    return add(s, t);
}

template <typename Int>
basic_trunc_series<Int> operator-(const basic_trunc_series<Int> &s, const basic_trunc_series<Int> &t)
{
    return sub(s, t);
}

template <typename Int>
basic_trunc_series<Int> operator-(const basic_trunc_series<Int> &s)
{
    return neg(s);
}

template <typename Int>
basic_trunc_series<Int> operator*(const basic_trunc_series<Int> &s, const basic_trunc_series<Int> &t)
{
    return mul(s, t);
}

template <typename Int>
basic_trunc_series<Int> operator*(long long k, const basic_trunc_series<Int> &s)
{
    return scale(k, s);
}

// Convenience for tests and literals: series from small integer coefficients.
inline trunc_series make_series(std::initializer_list<long long> coeffs)
{
    std::vector<bigint> v;
    v.reserve(coeffs.size());
    for (auto c : coeffs) {
        v.emplace_back(c);
    }
    return trunc_series(std::move(v));
}

} // namespace qseries

#endif
