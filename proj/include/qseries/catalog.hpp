#ifndef QSERIES_CATALOG_HPP
#define QSERIES_CATALOG_HPP

#include <functional>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include <json.hpp>

#include <qseries/lambert.hpp>
#include <qseries/products.hpp>
#include <qseries/series.hpp>

// Declarative instances of every named series. Index names in the comments follow the
// spec field order: the outer index comes first.
namespace qseries::specs
{

// Y(q) = sum_{n,m>=1} (-1)^m q^{2nm+m} / ((1 - q^{2m-1})(1 + q^n))
inline double_lambert_spec Y()
{
    return {.sign_inner = sign::minus,
            .num_exp = {2, 0, 1, 0},
            .den1 = {sign::plus, 0, 2, -1},
            .den2 = {sign::minus, 1, 0, 0}};
}

// X(q) = sum_{k,n>=1} (-1)^k q^{2kn+k} / ((1 - q^n)(1 - q^{2k-1}))
inline double_lambert_spec X()
{
    return {.sign_outer = sign::minus,
            .num_exp = {2, 1, 0, 0},
            .den1 = {sign::plus, 0, 1, 0},
            .den2 = {sign::plus, 2, 0, -1}};
}

// Z(q) = sum_{k,n>=1} q^{2kn} / ((1 + q^{2n-1})(1 - q^{2k-1}))
inline double_lambert_spec Z()
{
    return {.num_exp = {2, 0, 0, 0}, .den1 = {sign::minus, 0, 2, -1}, .den2 = {sign::plus, 2, 0, -1}};
}

// A(q) = sum_{k>=1} sum_{n>=k} q^{k+n} / ((1 + q^n)(1 + q^{2k-1}))
inline double_lambert_spec A()
{
    return {.num_exp = {0, 1, 1, 0},
            .den1 = {sign::minus, 0, 1, 0},
            .den2 = {sign::minus, 2, 0, -1},
            .range = inner_range::diagonal};
}

// N(q) = sum_{k,n>=1} (-1)^k q^{2kn+k+n} / ((1 + q^{2n-1})(1 - q^{2k-1}))
inline double_lambert_spec N()
{
    return {.sign_outer = sign::minus,
            .num_exp = {2, 1, 1, 0},
            .den1 = {sign::minus, 0, 2, -1},
            .den2 = {sign::plus, 2, 0, -1}};
}

// D(q) = sum_{k>=1} q^k/(1 + q^{2k-1}) sum_{n=1}^{k-1} 1/(1 - q^{2n})
inline triangular_spec D()
{
    return {.outer = {.weight = {}, .num_exp = {1, 0}, .den_sign = sign::minus, .den_exp = {2, -1}},
            .outer_start = 1,
            .inner = {.weight = {}, .num_exp = {0, 0}, .den_sign = sign::plus, .den_exp = {2, 0}},
            .inner_start = 1};
}

// L(q) = sum_{k>=1} (k-1) q^k / (1 + q^{2k-1}); the k = 1 term has weight zero.
inline lambert_spec L()
{
    return {.weight = {sign::plus, 1, -1}, .num_exp = {1, 0}, .den_sign = sign::minus, .den_exp = {2, -1}};
}

// L(q) = sum_{m>=1} (-1)^{m-1} q^{3m-1} / (1 - q^{2m-1})^2
inline lambert_spec L_squared_denominator()
{
    return {.weight = {sign::minus, 0, -1},
            .num_exp = {3, -1},
            .den_sign = sign::plus,
            .den_exp = {2, -1},
            .den_pow = 2};
}

// sum_{n>=1} q^n / (1 + q^{2n-1})
inline lambert_spec odd_plus_lambert()
{
    return {.num_exp = {1, 0}, .den_sign = sign::minus, .den_exp = {2, -1}};
}

// sum_{n>=1} (-q)^n / (1 - q^{2n-1})
inline lambert_spec odd_minus_alternating_lambert()
{
    return {.weight = {sign::minus, 0, 1}, .num_exp = {1, 0}, .den_sign = sign::plus, .den_exp = {2, -1}};
}

// sum_{k>=1} q^{2k} / (1 + q^{2k})
inline lambert_spec even_plus_lambert()
{
    return {.num_exp = {2, 0}, .den_sign = sign::minus, .den_exp = {2, 0}};
}

// sum_{n>=1} q^n / (1 - q^{2n})
inline lambert_spec half_even_lambert()
{
    return {.num_exp = {1, 0}, .den_sign = sign::plus, .den_exp = {2, 0}};
}

// sum_{k>=1} q^{2k} / (1 - q^{2k-1})
inline lambert_spec shifted_odd_minus_lambert()
{
    return {.num_exp = {2, 0}, .den_sign = sign::plus, .den_exp = {2, -1}};
}

// sum_{n>=1} q^{2n} / (1 + q^{2n-1})
inline lambert_spec shifted_odd_plus_lambert()
{
    return {.num_exp = {2, 0}, .den_sign = sign::minus, .den_exp = {2, -1}};
}

// sum_{n>=1} q^{2n} / (1 - q^{4n-2})
inline lambert_spec doubled_odd_lambert()
{
    return {.num_exp = {2, 0}, .den_sign = sign::plus, .den_exp = {4, -2}};
}

// sum_{k>=2} q^k/(1 + q^{2k-1}) sum_{n=1}^{k-1} q^n/(1 + q^n); Y(q) is its negative.
inline triangular_spec Y_triangular()
{
    return {.outer = {.weight = {}, .num_exp = {1, 0}, .den_sign = sign::minus, .den_exp = {2, -1}},
            .outer_start = 2,
            .inner = {.weight = {}, .num_exp = {1, 0}, .den_sign = sign::minus, .den_exp = {1, 0}},
            .inner_start = 1};
}

// sum_{k,n>=1} q^{k+n} / ((1 + q^n)(1 + q^{2k-1}))
inline double_lambert_spec split_rectangular_sum()
{
    return {.num_exp = {0, 1, 1, 0}, .den1 = {sign::minus, 0, 1, 0}, .den2 = {sign::minus, 2, 0, -1}};
}

// sum_{k,n>=1} q^{2kn+k} / ((1 - q^{2n})(1 + q^{2k-1}))
inline double_lambert_spec split_bilinear_sum()
{
    return {.num_exp = {2, 1, 0, 0}, .den1 = {sign::plus, 0, 2, 0}, .den2 = {sign::minus, 2, 0, -1}};
}

// sum_{n>=1} sum_{k>=n} q^{n+k} / ((1 + q^{2n-1})(1 - q^{2k}))
inline double_lambert_spec Z_tail_sum()
{
    return {.num_exp = {0, 1, 1, 0},
            .den1 = {sign::minus, 2, 0, -1},
            .den2 = {sign::plus, 0, 2, 0},
            .range = inner_range::diagonal};
}

// -sum_{n>=1} sum_{k>=n+1} q^{n+k} / ((1 - q^n)(1 + q^{2k-1}))
inline double_lambert_spec X_tail_sum()
{
    return {.coefficient = -1,
            .num_exp = {0, 1, 1, 0},
            .den1 = {sign::plus, 1, 0, 0},
            .den2 = {sign::minus, 0, 2, -1},
            .range = inner_range::diagonal,
            .inner_offset = 1};
}

// sum_{k,n>=1} q^{k+n} / ((1 + q^{2n-1})(1 - q^{2k}))
inline double_lambert_spec mixed_rectangular_sum()
{
    return {.num_exp = {0, 1, 1, 0}, .den1 = {sign::minus, 0, 2, -1}, .den2 = {sign::plus, 2, 0, 0}};
}

// -sum_{k>=1} sum_{n>=k} (-1)^k q^{k+2n-1} / ((1 - q^{2k-1})(1 - q^{2n-1}))
inline double_lambert_spec D_tail_sum()
{
    return {.coefficient = -1,
            .sign_outer = sign::minus,
            .num_exp = {0, 1, 2, -1},
            .den1 = {sign::plus, 2, 0, -1},
            .den2 = {sign::plus, 0, 2, -1},
            .range = inner_range::diagonal};
}

// sum_{n,k>=1} (-1)^k q^{2nk+k-n} / ((1 - q^{2k-1})(1 + q^{2n-1}))
inline double_lambert_spec skew_bilinear_sum()
{
    return {.sign_inner = sign::minus,
            .num_exp = {2, -1, 1, 0},
            .den1 = {sign::plus, 0, 2, -1},
            .den2 = {sign::minus, 2, 0, -1}};
}

} // namespace qseries::specs

namespace qseries
{

inline trunc_series Y_series(order_t n)
{
    return double_lambert(specs::Y(), n);
}

inline trunc_series X_series(order_t n)
{
    return double_lambert(specs::X(), n);
}

inline trunc_series Z_series(order_t n)
{
    return double_lambert(specs::Z(), n);
}

inline trunc_series A_series(order_t n)
{
    return double_lambert(specs::A(), n);
}

inline trunc_series N_series(order_t n)
{
    return double_lambert(specs::N(), n);
}

inline trunc_series D_series(order_t n)
{
    return triangular_sum(specs::D(), n);
}

inline trunc_series L_series(order_t n)
{
    return lambert_single(specs::L(), n);
}

using series_builder = std::function<trunc_series(order_t)>;

struct named_series {
    std::string name;
    std::string formula;
    series_builder build;
    // Declarative description when the series is a Lambert-type spec instance.
    std::optional<nlohmann::json> spec;
};

namespace detail
{

template <typename Spec>
named_series spec_entry(std::string name, std::string formula, Spec (*make)())
{
    auto spec = make();
    series_builder b;
    if constexpr (std::is_same_v<Spec, lambert_spec>) {
        b = [spec](order_t n) { return lambert_single(spec, n); };
    } else if constexpr (std::is_same_v<Spec, double_lambert_spec>) {
        b = [spec](order_t n) { return double_lambert(spec, n); };
    } else {
        b = [spec](order_t n) { return triangular_sum(spec, n); };
    }
    return {std::move(name), std::move(formula), std::move(b), to_json(spec)};
}

} // namespace detail

/// Every series the CLI can print, in a fixed order.
inline const std::vector<named_series> &series_catalog()
{
    using detail::spec_entry;
    static const std::vector<named_series> catalog = [] {
        std::vector<named_series> c;
        c.push_back(spec_entry("Y", "sum_{n,m>=1} (-1)^m q^(2nm+m) / ((1-q^(2m-1))(1+q^n))", &specs::Y));
        c.push_back(spec_entry("X", "sum_{k,n>=1} (-1)^k q^(2kn+k) / ((1-q^n)(1-q^(2k-1)))", &specs::X));
        c.push_back(spec_entry("Z", "sum_{k,n>=1} q^(2kn) / ((1+q^(2n-1))(1-q^(2k-1)))", &specs::Z));
        c.push_back(spec_entry("A", "sum_{k>=1} sum_{n>=k} q^(k+n) / ((1+q^n)(1+q^(2k-1)))", &specs::A));
        c.push_back(spec_entry("N", "sum_{k,n>=1} (-1)^k q^(2kn+k+n) / ((1+q^(2n-1))(1-q^(2k-1)))", &specs::N));
        c.push_back(spec_entry("D", "sum_{k>=1} sum_{n=1}^{k-1} q^k / ((1-q^(2n))(1+q^(2k-1)))", &specs::D));
        c.push_back(spec_entry("L", "sum_{k>=1} (k-1) q^k / (1+q^(2k-1))", &specs::L));
        c.push_back({"E", "(q^4;q^4)_inf^4 / (q^2;q^2)_inf^2", &E_series, std::nullopt});
        c.push_back({"omega", "sum_{n>=0} q^(2n^2+2n) / (q;q^2)_{n+1}^2", &omega_series, std::nullopt});
        c.push_back({"euler", "(q;q)_inf",
                     [](order_t n) { return pochhammer_inf(1, 1, sign::plus, n); }, std::nullopt});
        c.push_back(spec_entry("L_closed", "sum_{m>=1} (-1)^(m-1) q^(3m-1) / (1-q^(2m-1))^2",
                               &specs::L_squared_denominator));
        c.push_back(spec_entry("step10_lhs", "sum_{n>=1} q^n / (1+q^(2n-1))", &specs::odd_plus_lambert));
        c.push_back(spec_entry("step11_lhs", "sum_{n>=1} (-q)^n / (1-q^(2n-1))",
                               &specs::odd_minus_alternating_lambert));
        c.push_back(spec_entry("aab_inner", "sum_{k>=2} q^k/(1+q^(2k-1)) sum_{n=1}^{k-1} q^n/(1+q^n)",
                               &specs::Y_triangular));
        c.push_back(spec_entry("even_plus", "sum_{k>=1} q^(2k) / (1+q^(2k))", &specs::even_plus_lambert));
        c.push_back(spec_entry("half_even", "sum_{n>=1} q^n / (1-q^(2n))", &specs::half_even_lambert));
        c.push_back(spec_entry("shifted_odd_minus", "sum_{k>=1} q^(2k) / (1-q^(2k-1))",
                               &specs::shifted_odd_minus_lambert));
        c.push_back(spec_entry("shifted_odd_plus", "sum_{n>=1} q^(2n) / (1+q^(2n-1))",
                               &specs::shifted_odd_plus_lambert));
        c.push_back(spec_entry("doubled_odd", "sum_{n>=1} q^(2n) / (1-q^(4n-2))", &specs::doubled_odd_lambert));
        c.push_back(spec_entry("split_rectangular", "sum_{k,n>=1} q^(k+n) / ((1+q^n)(1+q^(2k-1)))",
                               &specs::split_rectangular_sum));
        c.push_back(spec_entry("split_bilinear", "sum_{k,n>=1} q^(2kn+k) / ((1-q^(2n))(1+q^(2k-1)))",
                               &specs::split_bilinear_sum));
        c.push_back(spec_entry("Z_tail", "sum_{n>=1} sum_{k>=n} q^(n+k) / ((1+q^(2n-1))(1-q^(2k)))",
                               &specs::Z_tail_sum));
        c.push_back(spec_entry("X_tail", "-sum_{n>=1} sum_{k>=n+1} q^(n+k) / ((1-q^n)(1+q^(2k-1)))",
                               &specs::X_tail_sum));
        c.push_back(spec_entry("mixed_rectangular", "sum_{k,n>=1} q^(k+n) / ((1+q^(2n-1))(1-q^(2k)))",
                               &specs::mixed_rectangular_sum));
        c.push_back(spec_entry("D_tail",
                               "-sum_{k>=1} sum_{n>=k} (-1)^k q^(k+2n-1) / ((1-q^(2k-1))(1-q^(2n-1)))",
                               &specs::D_tail_sum));
        c.push_back(spec_entry("skew_bilinear", "sum_{n,k>=1} (-1)^k q^(2nk+k-n) / ((1-q^(2k-1))(1+q^(2n-1)))",
                               &specs::skew_bilinear_sum));
        return c;
    }();
    return catalog;
}

inline const named_series &lookup_series(const std::string &name)
{
    for (const auto &s : series_catalog()) {
        if (s.name == name) {
            return s;
        }
    }
    throw unknown_series("unknown series: " + name);
}

} // namespace qseries

#endif
