#ifndef QSERIES_PRODUCTS_HPP
#define QSERIES_PRODUCTS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <qseries/series.hpp>

namespace qseries
{

// One factor (s q^{offset}; q^{step})_inf raised to `power`.
struct eta_factor {
    std::int64_t offset = 1;
    std::int64_t step = 1;
    sign s = sign::plus;
    std::int64_t power = 1;

    friend bool operator==(const eta_factor &, const eta_factor &) = default;
};

struct eta_quotient_spec {
    std::vector<eta_factor> factors;
};

inline void validate(const eta_quotient_spec &spec)
{
    if (spec.factors.empty()) {
        throw spec_invalid("eta quotient needs at least one factor");
    }
    for (const auto &f : spec.factors) {
        if (f.offset < 1 || f.step < 1) {
            throw spec_invalid("eta factor offset and step must be positive");
        }
        if (f.power == 0) {
            throw spec_invalid("eta factor power must be nonzero");
        }
    }
}

namespace detail
{

inline void check_pochhammer_args(std::int64_t j0, std::int64_t b)
{
    if (j0 < 1 || b < 1) {
        throw invalid_exponent("q-Pochhammer offset and step must be positive");
    }
}

} // namespace detail

/// prod_{j=0}^{n-1} (1 - s q^{j0 + b j}) truncated at order N.
inline trunc_series pochhammer_finite(std::int64_t j0, std::int64_t b, sign s, std::int64_t n, order_t N)
{
    detail::check_pochhammer_args(j0, b);
    if (n < 0) {
        throw invalid_exponent("finite q-Pochhammer length must be nonnegative");
    }
    auto r = one(N);
    for (std::int64_t j = 0; j < n; ++j) {
        const std::int64_t e = j0 + b * j;
        if (static_cast<std::uint64_t>(e) > N) {
            break;
        }
        r = mul_one_minus(r, s, e);
    }
    return r;
}

/// (s q^{j0}; q^b)_inf truncated at order N.
///
/// Only factors 1 - s q^e with e <= N are multiplied in. A factor with e > N equals 1 modulo
/// q^{N+1}, so it cannot change any stored coefficient.
inline trunc_series pochhammer_inf(std::int64_t j0, std::int64_t b, sign s, order_t N)
{
    detail::check_pochhammer_args(j0, b);
    auto r = one(N);
    for (std::int64_t e = j0; static_cast<std::uint64_t>(e) <= N; e += b) {
        r = mul_one_minus(r, s, e);
    }
    return r;
}

// Repeated multiplication (exponents here are tiny).
inline trunc_series power(const trunc_series &base, std::int64_t p)
{
    auto r = one(base.order());
    for (std::int64_t i = 0; i < p; ++i) {
        r = mul(r, base);
    }
    return r;
}

inline trunc_series eta_quotient(const eta_quotient_spec &spec, order_t N)
{
    validate(spec);
    auto r = one(N);
    for (const auto &f : spec.factors) {
        if (f.power > 0) {
            // Multiply factor by factor: each (1 - s q^e) is a linear-time update.
            for (std::int64_t i = 0; i < f.power; ++i) {
                for (std::int64_t e = f.offset; static_cast<std::uint64_t>(e) <= N; e += f.step) {
                    r = mul_one_minus(r, f.s, e);
                }
            }
        } else {
            for (std::int64_t i = 0; i < -f.power; ++i) {
                for (std::int64_t e = f.offset; static_cast<std::uint64_t>(e) <= N; e += f.step) {
                    r = div_one_minus(r, f.s, e);
                }
            }
        }
    }
    return r;
}

// Same quotient, but negative powers go through invert_unit of the full product. Used to
// cross-check the linear-time division path above.
inline trunc_series eta_quotient_via_inverse(const eta_quotient_spec &spec, order_t N)
{
    validate(spec);
    auto num = one(N);
    auto den = one(N);
    for (const auto &f : spec.factors) {
        const auto p = pochhammer_inf(f.offset, f.step, f.s, N);
        if (f.power > 0) {
            num = mul(num, power(p, f.power));
        } else {
            den = mul(den, power(p, -f.power));
        }
    }
    return mul(num, invert_unit(den));
}

// (q^4;q^4)_inf^4 / (q^2;q^2)_inf^2
inline const eta_quotient_spec &E_spec()
{
    static const eta_quotient_spec spec{{{4, 4, sign::plus, 4}, {2, 2, sign::plus, -2}}};
    return spec;
}

inline trunc_series E_series(order_t N)
{
    return eta_quotient(E_spec(), N);
}

/// Third-order mock theta function omega(q) = sum_{n>=0} q^{2n^2+2n} / (q;q^2)_{n+1}^2.
inline trunc_series omega_series(order_t N)
{
    auto r = zero(N);
    for (std::int64_t n = 0;; ++n) {
        const std::int64_t e = 2 * n * n + 2 * n;
        if (static_cast<std::uint64_t>(e) > N) {
            break;
        }
        const auto inv = invert_unit(pochhammer_finite(1, 2, sign::plus, n + 1, N));
        r = add(r, shift_up(mul(inv, inv), e));
    }
    return r;
}

} // namespace qseries

#endif
