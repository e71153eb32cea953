#ifndef QSERIES_LAMBERT_HPP
#define QSERIES_LAMBERT_HPP

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include <qseries/series.hpp>

namespace qseries
{

// n -> slope*n + intercept
struct affine {
    std::int64_t slope = 1;
    std::int64_t intercept = 0;

    constexpr std::int64_t operator()(std::int64_t n) const noexcept
    {
        return slope * n + intercept;
    }

    friend bool operator==(const affine &, const affine &) = default;
};

// n -> sigma^n * (u*n + v)
struct weight_spec {
    sign sigma = sign::plus;
    std::int64_t u = 0;
    std::int64_t v = 1;

    constexpr std::int64_t operator()(std::int64_t n) const noexcept
    {
        return to_int(sign_pow(sigma, n)) * (u * n + v);
    }

    friend bool operator==(const weight_spec &, const weight_spec &) = default;
};

/// sum_{n >= start} weight(n) q^{num_exp(n)} / (1 - den_sign q^{den_exp(n)})^{den_pow}
struct lambert_spec {
    weight_spec weight;
    affine num_exp;
    sign den_sign = sign::plus;
    affine den_exp;
    int den_pow = 1;
    std::int64_t start = 1;

    friend bool operator==(const lambert_spec &, const lambert_spec &) = default;
};

// (n, m) -> A*n*m + B*n + C*m + D
struct bilinear {
    std::int64_t nm = 0;
    std::int64_t n = 0;
    std::int64_t m = 0;
    std::int64_t constant = 0;

    constexpr std::int64_t operator()(std::int64_t i, std::int64_t j) const noexcept
    {
        return nm * i * j + n * i + m * j + constant;
    }

    friend bool operator==(const bilinear &, const bilinear &) = default;
};

// 1 - s q^{outer*n + inner*m + constant}
struct double_denominator {
    sign s = sign::plus;
    std::int64_t outer = 0;
    std::int64_t inner = 0;
    std::int64_t constant = 0;

    constexpr std::int64_t exponent(std::int64_t i, std::int64_t j) const noexcept
    {
        return outer * i + inner * j + constant;
    }

    friend bool operator==(const double_denominator &, const double_denominator &) = default;
};

enum class inner_range {
    // m >= start_inner independently of n
    rectangular,
    // m >= n + inner_offset
    diagonal,
};

/// coefficient * sum_n sum_m sigma_outer^n sigma_inner^m q^{num_exp(n,m)} / ((1 - ...)(1 - ...))
///
/// The outer index is n, the inner index is m. The diagonal mode covers sums whose inner
/// index starts at the outer one, such as sum_k sum_{n >= k}.
struct double_lambert_spec {
    std::int64_t coefficient = 1;
    sign sign_outer = sign::plus;
    sign sign_inner = sign::plus;
    bilinear num_exp;
    double_denominator den1;
    double_denominator den2;
    std::int64_t start_outer = 1;
    std::int64_t start_inner = 1;
    inner_range range = inner_range::rectangular;
    std::int64_t inner_offset = 0;

    std::int64_t inner_start(std::int64_t n) const noexcept
    {
        if (range == inner_range::diagonal) {
            return std::max(start_inner, n + inner_offset);
        }
        return start_inner;
    }

    friend bool operator==(const double_lambert_spec &, const double_lambert_spec &) = default;
};

// weight(n) q^{num_exp(n)} / (1 - den_sign q^{den_exp(n)})
struct lambert_term {
    weight_spec weight;
    affine num_exp;
    sign den_sign = sign::plus;
    affine den_exp;

    friend bool operator==(const lambert_term &, const lambert_term &) = default;
};

/// sum_{k >= outer_start} outer(k) * sum_{n = inner_start}^{k-1} inner(n)
struct triangular_spec {
    lambert_term outer;
    std::int64_t outer_start = 1;
    lambert_term inner;
    std::int64_t inner_start = 1;

    friend bool operator==(const triangular_spec &, const triangular_spec &) = default;
};

// ---------------------------------------------------------------------------------------
// Validation

inline void validate(const lambert_spec &spec)
{
    if (spec.start < 0) {
        throw spec_invalid("summation start must be nonnegative");
    }
    if (spec.num_exp.slope < 1) {
        throw spec_invalid("numerator exponent must grow with the index");
    }
    if (spec.start == 0) {
        if (spec.num_exp(0) < 0) {
            throw spec_invalid("n = 0 term has a negative numerator exponent");
        }
        if (spec.num_exp(1) < 1) {
            throw spec_invalid("numerator exponent must be positive for n >= 1");
        }
    } else if (spec.num_exp(spec.start) < 1) {
        throw spec_invalid("numerator exponent must be positive for every summed index");
    }
    if (spec.den_exp.slope < 0 || spec.den_exp(spec.start) < 1) {
        throw spec_invalid("denominator exponent must be positive for every summed index");
    }
    if (spec.den_pow != 1 && spec.den_pow != 2) {
        throw spec_invalid("denominator power must be 1 or 2");
    }
}

// The numerator exponent must be at least 1 at the smallest index pair and strictly
// increasing in each index across the summation domain; both denominators likewise stay >= 1.
// Together these bound the enumeration and rule out negative powers of q.
inline void validate(const double_lambert_spec &spec)
{
    if (spec.start_outer < 1 || spec.start_inner < 1) {
        throw spec_invalid("double sum indices start at 1 or above");
    }
    const std::int64_t n0 = spec.start_outer;
    const std::int64_t m0 = spec.inner_start(n0);
    const auto &e = spec.num_exp;
    if (e.nm < 0) {
        throw spec_invalid("bilinear numerator coefficient must be nonnegative");
    }
    if (e.nm * m0 + e.n < 1 || e.nm * n0 + e.m < 1) {
        throw spec_invalid("numerator exponent is not increasing in both indices");
    }
    if (e(n0, m0) < 1) {
        throw spec_invalid("numerator exponent " + std::to_string(e(n0, m0)) + " at the first index pair");
    }
    for (const auto *d : {&spec.den1, &spec.den2}) {
        if (d->outer < 0 || d->inner < 0 || d->exponent(n0, m0) < 1) {
            throw spec_invalid("denominator exponent must be positive for every summed index pair");
        }
    }
}

inline void validate(const triangular_spec &spec)
{
    const auto &o = spec.outer;
    const auto &i = spec.inner;
    if (spec.outer_start < 1 || spec.inner_start < 0) {
        throw spec_invalid("triangular sum start indices out of range");
    }
    if (o.num_exp.slope < 1 || o.num_exp(spec.outer_start) < 1) {
        throw spec_invalid("outer numerator exponent must be positive and increasing");
    }
    if (o.den_exp.slope < 0 || o.den_exp(spec.outer_start) < 1) {
        throw spec_invalid("outer denominator exponent must be positive");
    }
    if (i.num_exp.slope < 0 || i.num_exp(spec.inner_start) < 0) {
        throw spec_invalid("inner numerator exponent must be nonnegative");
    }
    if (i.den_exp.slope < 0 || i.den_exp(spec.inner_start) < 1) {
        throw spec_invalid("inner denominator exponent must be positive");
    }
}

// ---------------------------------------------------------------------------------------
// Summators

namespace detail
{

inline bool within(std::int64_t e, order_t N) noexcept
{
    return e >= 0 && static_cast<std::uint64_t>(e) <= N;
}

// acc += c q^e / prod_i (1 - s_i q^{d_i}); scratch covers exponents e..N only.
inline void accumulate_term(std::vector<bigint> &acc, std::int64_t c, std::int64_t e,
                            std::initializer_list<std::pair<sign, std::int64_t>> dens)
{
    const auto N = acc.size() - 1;
    if (!within(e, N) || c == 0) {
        return;
    }
    const auto start = static_cast<std::size_t>(e);
    std::vector<bigint> scratch(N - start + 1);
    scratch[0] = c;
    for (const auto &[s, d] : dens) {
        const auto dd = static_cast<std::size_t>(d);
        for (std::size_t j = dd; j < scratch.size(); ++j) {
            if (s == sign::plus) {
                scratch[j] += scratch[j - dd];
            } else {
                scratch[j] -= scratch[j - dd];
            }
        }
    }
    for (std::size_t j = 0; j < scratch.size(); ++j) {
        acc[start + j] += scratch[j];
    }
}

// acc += c q^shift * p / (1 - s q^d), p given as coefficients 0..N.
inline void accumulate_product_term(std::vector<bigint> &acc, std::int64_t c, std::int64_t shift, sign s,
                                    std::int64_t d, const std::vector<bigint> &p)
{
    const auto N = acc.size() - 1;
    if (!within(shift, N) || c == 0) {
        return;
    }
    const auto start = static_cast<std::size_t>(shift);
    std::vector<bigint> scratch(N - start + 1);
    for (std::size_t j = 0; j < scratch.size(); ++j) {
        scratch[j] = p[j] * c;
    }
    const auto dd = static_cast<std::size_t>(d);
    for (std::size_t j = dd; j < scratch.size(); ++j) {
        if (s == sign::plus) {
            scratch[j] += scratch[j - dd];
        } else {
            scratch[j] -= scratch[j - dd];
        }
    }
    for (std::size_t j = 0; j < scratch.size(); ++j) {
        acc[start + j] += scratch[j];
    }
}

} // namespace detail

/// Exact truncated value of a single Lambert-type sum.
///
/// Terms are visited while the numerator exponent stays <= N. A squared denominator
/// expands as sum_j (j+1) s^j q^{dj}.
inline trunc_series lambert_single(const lambert_spec &spec, order_t N)
{
    validate(spec);
    std::vector<bigint> acc(N + 1);
    for (std::int64_t n = spec.start; detail::within(spec.num_exp(n), N); ++n) {
        const std::int64_t w = spec.weight(n);
        if (w == 0) {
            continue;
        }
        const auto e = static_cast<std::size_t>(spec.num_exp(n));
        const auto d = static_cast<std::size_t>(spec.den_exp(n));
        std::int64_t sj = 1;
        for (std::size_t j = 0; e + d * j <= N; ++j) {
            const std::int64_t mult = spec.den_pow == 2 ? static_cast<std::int64_t>(j + 1) : 1;
            acc[e + d * j] += bigint(w) * (sj * mult);
            sj *= to_int(spec.den_sign);
        }
    }
    return trunc_series(std::move(acc));
}

inline trunc_series double_lambert(const double_lambert_spec &spec, order_t N)
{
    validate(spec);
    std::vector<bigint> acc(N + 1);
    for (std::int64_t n = spec.start_outer;; ++n) {
        const std::int64_t m0 = spec.inner_start(n);
        if (!detail::within(spec.num_exp(n, m0), N)) {
            break;
        }
        const std::int64_t sn = to_int(sign_pow(spec.sign_outer, n)) * spec.coefficient;
        for (std::int64_t m = m0; detail::within(spec.num_exp(n, m), N); ++m) {
            const std::int64_t c = sn * to_int(sign_pow(spec.sign_inner, m));
            detail::accumulate_term(acc, c, spec.num_exp(n, m),
                                    {{spec.den1.s, spec.den1.exponent(n, m)}, {spec.den2.s, spec.den2.exponent(n, m)}});
        }
    }
    return trunc_series(std::move(acc));
}

inline trunc_series triangular_sum(const triangular_spec &spec, order_t N)
{
    validate(spec);
    const auto &o = spec.outer;
    const auto &in = spec.inner;
    std::vector<bigint> acc(N + 1);
    // Running inner partial sum over n = inner_start .. k-1.
    std::vector<bigint> partial(N + 1);
    std::int64_t next_inner = spec.inner_start;
    for (std::int64_t k = spec.outer_start; detail::within(o.num_exp(k), N); ++k) {
        for (; next_inner <= k - 1; ++next_inner) {
            detail::accumulate_term(partial, in.weight(next_inner), in.num_exp(next_inner),
                                    {{in.den_sign, in.den_exp(next_inner)}});
        }
        detail::accumulate_product_term(acc, o.weight(k), o.num_exp(k), o.den_sign, o.den_exp(k), partial);
    }
    return trunc_series(std::move(acc));
}

// ---------------------------------------------------------------------------------------
// JSON descriptions

inline std::string to_string(sign s)
{
    return s == sign::plus ? "+" : "-";
}

inline nlohmann::json to_json(const affine &a)
{
    return {{"slope", a.slope}, {"intercept", a.intercept}};
}

inline nlohmann::json to_json(const weight_spec &w)
{
    return {{"sigma", to_string(w.sigma)}, {"u", w.u}, {"v", w.v}};
}

inline nlohmann::json to_json(const lambert_spec &s)
{
    return {{"kind", "single"},        {"weight", to_json(s.weight)},   {"num_exp", to_json(s.num_exp)},
            {"den_sign", to_string(s.den_sign)}, {"den_exp", to_json(s.den_exp)}, {"den_pow", s.den_pow},
            {"start", s.start}};
}

inline nlohmann::json to_json(const double_denominator &d)
{
    return {{"sign", to_string(d.s)}, {"outer", d.outer}, {"inner", d.inner}, {"constant", d.constant}};
}

inline nlohmann::json to_json(const double_lambert_spec &s)
{
    return {{"kind", "double"},
            {"coefficient", s.coefficient},
            {"sign_outer", to_string(s.sign_outer)},
            {"sign_inner", to_string(s.sign_inner)},
            {"num_exp", {{"nm", s.num_exp.nm}, {"n", s.num_exp.n}, {"m", s.num_exp.m}, {"constant", s.num_exp.constant}}},
            {"den1", to_json(s.den1)},
            {"den2", to_json(s.den2)},
            {"start_outer", s.start_outer},
            {"start_inner", s.start_inner},
            {"range", s.range == inner_range::diagonal ? "diagonal" : "rectangular"},
            {"inner_offset", s.inner_offset}};
}

inline nlohmann::json to_json(const lambert_term &t)
{
    return {{"weight", to_json(t.weight)},
            {"num_exp", to_json(t.num_exp)},
            {"den_sign", to_string(t.den_sign)},
            {"den_exp", to_json(t.den_exp)}};
}

inline nlohmann::json to_json(const triangular_spec &s)
{
    return {{"kind", "triangular"},
            {"outer", to_json(s.outer)},
            {"outer_start", s.outer_start},
            {"inner", to_json(s.inner)},
            {"inner_start", s.inner_start}};
}

} // namespace qseries

#endif
