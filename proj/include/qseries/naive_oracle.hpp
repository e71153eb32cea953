#ifndef QSERIES_NAIVE_ORACLE_HPP
#define QSERIES_NAIVE_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <qseries/series.hpp>

// Brute-force reference values for the named Lambert-type series.
//
// Each rational term c q^e / prod (1 - s q^d) is expanded by multiplying out the denominator
// polynomial and long-dividing, on plain coefficient vectors. Index ranges are scanned as full
// rectangles with the summation conditions applied as filters. None of the spec types,
// summators or series operations are used here; only the result is wrapped in a trunc_series.
namespace qseries::naive
{

using poly = std::vector<bigint>;

struct factor {
    int s;
    std::int64_t d;
};

inline poly poly_mul(const poly &a, const poly &b, std::size_t n)
{
    poly r(n + 1);
    for (std::size_t i = 0; i < a.size() && i <= n; ++i) {
        for (std::size_t j = 0; j < b.size() && i + j <= n; ++j) {
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

// Power series quotient num/den to order n; den[0] must be 1.
inline poly long_divide(const poly &num, const poly &den, std::size_t n)
{
    poly q(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        bigint v = i < num.size() ? num[i] : bigint(0);
        for (std::size_t j = 1; j <= i && j < den.size(); ++j) {
            v -= den[j] * q[i - j];
        }
        q[i] = v;
    }
    return q;
}

inline poly rational_term(std::int64_t c, std::int64_t e, const std::vector<factor> &dens, std::size_t n)
{
    poly num(n + 1);
    if (e < 0) {
        throw std::logic_error("oracle term with a negative exponent");
    }
    if (static_cast<std::size_t>(e) <= n) {
        num[static_cast<std::size_t>(e)] = c;
    }
    poly den(n + 1);
    den[0] = 1;
    for (const auto &f : dens) {
        poly lin(n + 1);
        lin[0] = 1;
        if (static_cast<std::size_t>(f.d) <= n) {
            lin[static_cast<std::size_t>(f.d)] = -f.s;
        }
        den = poly_mul(den, lin, n);
    }
    return long_divide(num, den, n);
}

class accumulator
{
public:
    explicit accumulator(std::size_t n) : m_n(n), m_acc(n + 1) {}

    void add(std::int64_t c, std::int64_t e, const std::vector<factor> &dens)
    {
        if (e > static_cast<std::int64_t>(m_n) || c == 0) {
            return;
        }
        const auto t = rational_term(c, e, dens, m_n);
        for (std::size_t i = 0; i <= m_n; ++i) {
            m_acc[i] += t[i];
        }
    }

    trunc_series result() &&
    {
        return trunc_series(std::move(m_acc));
    }

private:
    std::size_t m_n;
    poly m_acc;
};

inline std::int64_t pm(std::int64_t k)
{
    return k % 2 == 0 ? 1 : -1;
}

// sum over (a, b) in [1, n+1]^2
inline void rect(std::size_t n, const std::function<void(std::int64_t, std::int64_t)> &f)
{
    const auto hi = static_cast<std::int64_t>(n) + 1;
    for (std::int64_t a = 1; a <= hi; ++a) {
        for (std::int64_t b = 1; b <= hi; ++b) {
            f(a, b);
        }
    }
}

inline void line(std::size_t n, const std::function<void(std::int64_t)> &f)
{
    for (std::int64_t a = 1; a <= static_cast<std::int64_t>(n) + 1; ++a) {
        f(a);
    }
}

inline trunc_series Y(std::size_t n)
{
    accumulator acc(n);
    rect(n, [&](std::int64_t i, std::int64_t m) { acc.add(pm(m), 2 * i * m + m, {{1, 2 * m - 1}, {-1, i}}); });
    return std::move(acc).result();
}

inline trunc_series X(std::size_t n)
{
    accumulator acc(n);
    rect(n, [&](std::int64_t k, std::int64_t i) { acc.add(pm(k), 2 * k * i + k, {{1, i}, {1, 2 * k - 1}}); });
    return std::move(acc).result();
}

inline trunc_series Z(std::size_t n)
{
    accumulator acc(n);
    rect(n, [&](std::int64_t k, std::int64_t i) { acc.add(1, 2 * k * i, {{-1, 2 * i - 1}, {1, 2 * k - 1}}); });
    return std::move(acc).result();
}

inline trunc_series A(std::size_t n)
{
    accumulator acc(n);
    rect(n, [&](std::int64_t k, std::int64_t i) {
        if (i >= k) {
            acc.add(1, k + i, {{-1, i}, {-1, 2 * k - 1}});
        }
    });
    return std::move(acc).result();
}

inline trunc_series N(std::size_t n)
{
    accumulator acc(n);
    rect(n, [&](std::int64_t k, std::int64_t i) {
        acc.add(pm(k), 2 * k * i + k + i, {{-1, 2 * i - 1}, {1, 2 * k - 1}});
    });
    return std::move(acc).result();
}

inline trunc_series D(std::size_t n)
{
    accumulator acc(n);
    rect(n, [&](std::int64_t k, std::int64_t i) {
        if (i <= k - 1) {
            acc.add(1, k, {{1, 2 * i}, {-1, 2 * k - 1}});
        }
    });
    return std::move(acc).result();
}

inline trunc_series L(std::size_t n)
{
    accumulator acc(n);
    line(n, [&](std::int64_t k) { acc.add(k - 1, k, {{-1, 2 * k - 1}}); });
    return std::move(acc).result();
}

inline trunc_series L_closed(std::size_t n)
{
    accumulator acc(n);
    line(n, [&](std::int64_t m) { acc.add(-pm(m), 3 * m - 1, {{1, 2 * m - 1}, {1, 2 * m - 1}}); });
    return std::move(acc).result();
}

// Single sums c(n) q^{e(n)} / (1 - s q^{d(n)}) written out one by one.
inline trunc_series single(std::size_t n, const std::function<std::int64_t(std::int64_t)> &c,
                           const std::function<std::int64_t(std::int64_t)> &e, int s,
                           const std::function<std::int64_t(std::int64_t)> &d)
{
    accumulator acc(n);
    line(n, [&](std::int64_t k) { acc.add(c(k), e(k), {{s, d(k)}}); });
    return std::move(acc).result();
}

inline trunc_series aab_inner(std::size_t n)
{
    accumulator acc(n);
    rect(n, [&](std::int64_t k, std::int64_t i) {
        if (k >= 2 && i <= k - 1) {
            acc.add(1, k + i, {{-1, 2 * k - 1}, {-1, i}});
        }
    });
    return std::move(acc).result();
}

/// Oracle values keyed by catalog name.
inline const std::map<std::string, std::function<trunc_series(std::size_t)>> &oracles()
{
    using fn = std::function<std::int64_t(std::int64_t)>;
    static const std::map<std::string, std::function<trunc_series(std::size_t)>> table = [] {
        std::map<std::string, std::function<trunc_series(std::size_t)>> t;
        const fn one = [](std::int64_t) { return std::int64_t{1}; };
        const fn ident = [](std::int64_t k) { return k; };
        const fn twice = [](std::int64_t k) { return 2 * k; };
        const fn odd = [](std::int64_t k) { return 2 * k - 1; };
        t["Y"] = &Y;
        t["X"] = &X;
        t["Z"] = &Z;
        t["A"] = &A;
        t["N"] = &N;
        t["D"] = &D;
        t["L"] = &L;
        t["L_closed"] = &L_closed;
        t["aab_inner"] = &aab_inner;
        t["step10_lhs"] = [=](std::size_t n) { return single(n, one, ident, -1, odd); };
        t["step11_lhs"] = [=](std::size_t n) { return single(n, pm, ident, 1, odd); };
        t["even_plus"] = [=](std::size_t n) { return single(n, one, twice, -1, twice); };
        t["half_even"] = [=](std::size_t n) { return single(n, one, ident, 1, twice); };
        t["shifted_odd_minus"] = [=](std::size_t n) { return single(n, one, twice, 1, odd); };
        t["shifted_odd_plus"] = [=](std::size_t n) { return single(n, one, twice, -1, odd); };
        t["doubled_odd"] = [=](std::size_t n) {
            return single(n, one, twice, 1, [](std::int64_t k) { return 4 * k - 2; });
        };
        t["split_rectangular"] = [](std::size_t n) {
            accumulator acc(n);
            rect(n, [&](std::int64_t k, std::int64_t i) { acc.add(1, k + i, {{-1, i}, {-1, 2 * k - 1}}); });
            return std::move(acc).result();
        };
        t["split_bilinear"] = [](std::size_t n) {
            accumulator acc(n);
            rect(n, [&](std::int64_t k, std::int64_t i) { acc.add(1, 2 * k * i + k, {{1, 2 * i}, {-1, 2 * k - 1}}); });
            return std::move(acc).result();
        };
        t["Z_tail"] = [](std::size_t n) {
            accumulator acc(n);
            rect(n, [&](std::int64_t i, std::int64_t k) {
                if (k >= i) {
                    acc.add(1, i + k, {{-1, 2 * i - 1}, {1, 2 * k}});
                }
            });
            return std::move(acc).result();
        };
        t["X_tail"] = [](std::size_t n) {
            accumulator acc(n);
            rect(n, [&](std::int64_t i, std::int64_t k) {
                if (k >= i + 1) {
                    acc.add(-1, i + k, {{1, i}, {-1, 2 * k - 1}});
                }
            });
            return std::move(acc).result();
        };
        t["mixed_rectangular"] = [](std::size_t n) {
            accumulator acc(n);
            rect(n, [&](std::int64_t k, std::int64_t i) { acc.add(1, k + i, {{-1, 2 * i - 1}, {1, 2 * k}}); });
            return std::move(acc).result();
        };
        t["D_tail"] = [](std::size_t n) {
            accumulator acc(n);
            rect(n, [&](std::int64_t k, std::int64_t i) {
                if (i >= k) {
                    acc.add(-pm(k), k + 2 * i - 1, {{1, 2 * k - 1}, {1, 2 * i - 1}});
                }
            });
            return std::move(acc).result();
        };
        t["skew_bilinear"] = [](std::size_t n) {
            accumulator acc(n);
            rect(n, [&](std::int64_t i, std::int64_t k) {
                acc.add(pm(k), 2 * i * k + k - i, {{1, 2 * k - 1}, {-1, 2 * i - 1}});
            });
            return std::move(acc).result();
        };
        return t;
    }();
    return table;
}

} // namespace qseries::naive

#endif
