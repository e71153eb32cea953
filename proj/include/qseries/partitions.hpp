#ifndef QSERIES_PARTITIONS_HPP
#define QSERIES_PARTITIONS_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include <qseries/products.hpp>
#include <qseries/series.hpp>

// Combinatorial oracles. Nothing here touches the series summators: counts come from
// explicit enumeration of partitions.
namespace qseries
{

enum class partition_filter {
    // Every odd part is less than twice the smallest part.
    odd_lt_twice_smallest,
};

// Parts in non-increasing order.
using partition = std::vector<std::int64_t>;

inline bool accepts(partition_filter f, const partition &parts)
{
    switch (f) {
    case partition_filter::odd_lt_twice_smallest: {
        if (parts.empty()) {
            return false;
        }
        const auto smallest = parts.back();
        for (auto p : parts) {
            if (p % 2 == 1 && p >= 2 * smallest) {
                return false;
            }
        }
        return true;
    }
    }
    return false;
}

inline std::int64_t distinct_parts(const partition &parts)
{
    std::int64_t d = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i == 0 || parts[i] != parts[i - 1]) {
            ++d;
        }
    }
    return d;
}

namespace detail
{

inline void enumerate(std::int64_t remaining, std::int64_t max_part, partition &cur,
                      const std::function<void(const partition &)> &visit)
{
    if (remaining == 0) {
        visit(cur);
        return;
    }
    for (std::int64_t p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        enumerate(remaining - p, p, cur, visit);
        cur.pop_back();
    }
}

} // namespace detail

// Calls visit on every partition of n (parts non-increasing). n = 0 yields nothing.
inline void for_each_partition(std::int64_t n, const std::function<void(const partition &)> &visit)
{
    if (n <= 0) {
        return;
    }
    partition cur;
    detail::enumerate(n, n, cur, visit);
}

/// Partitions of n in which every odd part is less than twice the smallest part.
/// pw_count(0) is 0.
inline bigint pw_count(std::int64_t n)
{
    bigint count = 0;
    for_each_partition(n, [&](const partition &p) {
        if (accepts(partition_filter::odd_lt_twice_smallest, p)) {
            ++count;
        }
    });
    return count;
}

/// Overpartition analogue of pw_count with the smallest part always overlined: each
/// qualifying partition with d distinct part sizes contributes 2^{d-1}.
inline bigint pwbar_count(std::int64_t n)
{
    bigint count = 0;
    for_each_partition(n, [&](const partition &p) {
        if (accepts(partition_filter::odd_lt_twice_smallest, p)) {
            count += bigint(1) << static_cast<unsigned>(distinct_parts(p) - 1);
        }
    });
    return count;
}

// Qualifying partitions of n with a single distinct part size.
inline bigint pw_single_part_count(std::int64_t n)
{
    bigint count = 0;
    for_each_partition(n, [&](const partition &p) {
        if (accepts(partition_filter::odd_lt_twice_smallest, p) && distinct_parts(p) == 1) {
            ++count;
        }
    });
    return count;
}

// Unrestricted p(n) by Euler's pentagonal recurrence.
inline std::vector<bigint> partition_numbers(std::int64_t upto)
{
    std::vector<bigint> p(static_cast<std::size_t>(std::max<std::int64_t>(upto, 0)) + 1);
    p[0] = 1;
    for (std::int64_t n = 1; n <= upto; ++n) {
        bigint acc = 0;
        for (std::int64_t k = 1;; ++k) {
            const std::int64_t g1 = k * (3 * k - 1) / 2;
            if (g1 > n) {
                break;
            }
            const bool plus = k % 2 == 1;
            const std::int64_t g2 = k * (3 * k + 1) / 2;
            bigint t = p[static_cast<std::size_t>(n - g1)];
            if (g2 <= n) {
                t += p[static_cast<std::size_t>(n - g2)];
            }
            acc += plus ? t : bigint(-t);
        }
        p[static_cast<std::size_t>(n)] = acc;
    }
    return p;
}

struct congruence_entry {
    std::int64_t n = 0;
    bigint value;
    bigint residue;
    bool pass = true;
};

struct congruence_report {
    std::int64_t residue = 0;
    std::int64_t modulus = 1;
    std::int64_t divisor = 2;
    std::int64_t max_n = 0;
    std::vector<congruence_entry> entries;

    bool all_pass() const
    {
        for (const auto &e : entries) {
            if (!e.pass) {
                return false;
            }
        }
        return true;
    }
};

/// Checks pwbar_count(k) = 0 (mod divisor) for every k <= max_n with k = residue (mod modulus).
inline congruence_report congruence_scan(std::int64_t residue, std::int64_t modulus, std::int64_t divisor,
                                         std::int64_t max_n)
{
    if (modulus < 1 || residue < 0 || residue >= modulus) {
        throw std::invalid_argument("residue must satisfy 0 <= r < M");
    }
    if (divisor < 2) {
        throw std::invalid_argument("divisor modulus must be at least 2");
    }
    congruence_report rep{residue, modulus, divisor, max_n, {}};
    for (std::int64_t k = residue; k <= max_n; k += modulus) {
        congruence_entry e;
        e.n = k;
        e.value = pwbar_count(k);
        e.residue = e.value % divisor;
        e.pass = e.residue == 0;
        rep.entries.push_back(std::move(e));
    }
    return rep;
}

inline nlohmann::json to_json(const congruence_report &r)
{
    auto arr = nlohmann::json::array();
    for (const auto &e : r.entries) {
        arr.push_back({{"n", e.n}, {"value", e.value.str()}, {"residue", e.residue.str()}, {"pass", e.pass}});
    }
    return arr;
}

struct crosscheck_entry {
    std::int64_t n = 0;
    bigint enumerated;
    bigint coefficient;
    bool pass = true;
};

struct crosscheck_report {
    std::int64_t max_n = 0;
    bool pass = true;
    std::optional<crosscheck_entry> first_mismatch;
    std::vector<crosscheck_entry> entries;
};

/// Compares pw_count(n) with the coefficient of q^n in q*omega(q) for 1 <= n <= max_n.
inline crosscheck_report pw_omega_crosscheck(std::int64_t max_n)
{
    if (max_n < 1) {
        throw std::invalid_argument("cross-check bound must be at least 1");
    }
    const auto series = shift_up(omega_series(static_cast<order_t>(max_n)), 1);
    crosscheck_report rep;
    rep.max_n = max_n;
    for (std::int64_t n = 1; n <= max_n; ++n) {
        const auto count = pw_count(n);
        const auto &c = series[static_cast<std::size_t>(n)];
        const bool ok = count == c;
        rep.entries.push_back({n, count, c, ok});
        if (!ok && rep.pass) {
            rep.pass = false;
            rep.first_mismatch = rep.entries.back();
        }
    }
    return rep;
}

inline nlohmann::json to_json(const crosscheck_report &r)
{
    auto arr = nlohmann::json::array();
    for (const auto &e : r.entries) {
        arr.push_back({{"n", e.n},
                       {"enumerated", e.enumerated.str()},
                       {"coefficient", e.coefficient.str()},
                       {"pass", e.pass}});
    }
    return arr;
}

} // namespace qseries

#endif
