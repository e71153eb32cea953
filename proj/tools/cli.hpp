#ifndef QSERIES_TOOLS_CLI_HPP
#define QSERIES_TOOLS_CLI_HPP

#include <cstdint>
#include <iomanip>
#include <map>
#include <stdexcept>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <qseries/qseries.hpp>

namespace qseries::cli
{

enum class exit_code : int { ok = 0, check_failed = 1, usage = 2 };

enum class output_format { table, json, csv };

struct cli_config {
    std::string command;
    order_t order = 100;
    std::optional<std::string> identity;
    std::optional<std::string> series;
    output_format format = output_format::table;
    bool show_spec = false;
    bool timings = false;
    unsigned threads = 0;
    // congruence
    std::string progression;
    std::int64_t divisor = 4;
    std::int64_t max_n = 60;
    // oracle
    std::string compare;
};

namespace detail
{

inline const std::map<std::string, output_format> &format_names()
{
    static const std::map<std::string, output_format> m{
        {"table", output_format::table}, {"json", output_format::json}, {"csv", output_format::csv}};
    return m;
}

struct usage_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline std::pair<std::int64_t, std::int64_t> parse_progression(const std::string &text)
{
    const auto comma = text.find(',');
    if (comma == std::string::npos) {
        throw usage_error("--progression expects M,r");
    }
    try {
        std::size_t used = 0;
        const auto m = std::stoll(text.substr(0, comma), &used);
        if (used != comma) {
            throw usage_error("--progression expects M,r");
        }
        const auto rest = text.substr(comma + 1);
        const auto r = std::stoll(rest, &used);
        if (used != rest.size()) {
            throw usage_error("--progression expects M,r");
        }
        if (m < 1 || r < 0 || r >= m) {
            throw usage_error("--progression needs M >= 1 and 0 <= r < M");
        }
        return {m, r};
    } catch (const std::logic_error &) {
        throw usage_error("--progression expects two integers M,r");
    }
}

inline void print_reports(const std::vector<verify_report> &reports, const cli_config &cfg, std::ostream &out)
{
    switch (cfg.format) {
    case output_format::json: {
        auto arr = nlohmann::json::array();
        for (auto r : reports) {
            if (!cfg.timings) {
                r.elapsed_ms = 0;
            }
            arr.push_back(to_json(r));
        }
        out << arr.dump(2) << '\n';
        break;
    }
    case output_format::csv:
        out << "identity,order,status,exponent,lhs,rhs" << (cfg.timings ? ",elapsed_ms" : "") << '\n';
        for (const auto &r : reports) {
            out << r.identity << ',' << r.order << ',' << to_string(r.status) << ',';
            if (r.first_mismatch) {
                out << r.first_mismatch->exponent << ',' << r.first_mismatch->lhs << ',' << r.first_mismatch->rhs;
            } else {
                out << ",,";
            }
            if (cfg.timings) {
                out << ',' << r.elapsed_ms;
            }
            out << '\n';
        }
        break;
    case output_format::table:
        for (const auto &r : reports) {
            out << std::left << std::setw(14) << r.identity << " order=" << r.order << "  " << to_string(r.status);
            if (r.first_mismatch) {
                out << "  first mismatch at q^" << r.first_mismatch->exponent << ": " << r.first_mismatch->lhs
                    << " vs " << r.first_mismatch->rhs;
            }
            if (cfg.timings) {
                out << "  " << r.elapsed_ms << " ms";
            }
            out << '\n';
        }
        break;
    }
}

inline exit_code run_verify(const cli_config &cfg, std::ostream &out, std::ostream &err)
{
    std::vector<verify_report> reports;
    if (cfg.identity) {
        reports.push_back(verify(lookup_identity(*cfg.identity), cfg.order));
    } else {
        reports = verify_all(cfg.order, cfg.threads);
    }
    print_reports(reports, cfg, out);
    bool ok = true;
    for (const auto &r : reports) {
        if (r.status == verify_status::fail) {
            ok = false;
            err << r.identity << " failed at order " << r.order << ": q^" << r.first_mismatch->exponent << " lhs "
                << r.first_mismatch->lhs << " rhs " << r.first_mismatch->rhs << '\n';
        }
    }
    return ok ? exit_code::ok : exit_code::check_failed;
}

inline exit_code run_coeffs(const cli_config &cfg, std::ostream &out)
{
    const auto &entry = lookup_series(*cfg.series);
    if (cfg.show_spec) {
        nlohmann::json j{{"series", entry.name}, {"formula", entry.formula}, {"spec", nullptr}};
        if (entry.spec) {
            j["spec"] = *entry.spec;
        }
        out << j.dump(2) << '\n';
        return exit_code::ok;
    }
    const auto s = entry.build(cfg.order);
    switch (cfg.format) {
    case output_format::json:
        out << series_to_json(s).dump() << '\n';
        break;
    case output_format::csv:
        out << "exponent,coefficient\n";
        for (std::size_t e = 0; e <= s.order(); ++e) {
            out << e << ',' << s[e] << '\n';
        }
        break;
    case output_format::table:
        out << entry.name << " = " << entry.formula << '\n';
        for (std::size_t e = 0; e <= s.order(); ++e) {
            out << "q^" << std::left << std::setw(6) << e << ' ' << s[e] << '\n';
        }
        break;
    }
    return exit_code::ok;
}

inline exit_code run_congruence(const cli_config &cfg, std::ostream &out, std::ostream &err)
{
    const auto [modulus, residue] = parse_progression(cfg.progression);
    if (cfg.divisor < 2) {
        throw usage_error("--mod must be at least 2");
    }
    const auto rep = congruence_scan(residue, modulus, cfg.divisor, cfg.max_n);
    switch (cfg.format) {
    case output_format::json:
        out << to_json(rep).dump(2) << '\n';
        break;
    case output_format::csv:
        out << "n,value,residue,pass\n";
        for (const auto &e : rep.entries) {
            out << e.n << ',' << e.value << ',' << e.residue << ',' << (e.pass ? "true" : "false") << '\n';
        }
        break;
    case output_format::table:
        out << "pwbar(" << modulus << "n+" << residue << ") mod " << cfg.divisor << ", n <= " << cfg.max_n << '\n';
        for (const auto &e : rep.entries) {
            out << std::left << std::setw(6) << e.n << std::setw(24) << e.value.str() << " residue " << e.residue
                << "  " << (e.pass ? "pass" : "FAIL") << '\n';
        }
        break;
    }
    for (const auto &e : rep.entries) {
        if (!e.pass) {
            err << "pwbar(" << e.n << ") = " << e.value << " is " << e.residue << " mod " << cfg.divisor << '\n';
        }
    }
    return rep.all_pass() ? exit_code::ok : exit_code::check_failed;
}

struct oracle_row {
    std::string name;
    bool pass;
    std::optional<mismatch> first;
};

inline exit_code run_oracle(const cli_config &cfg, std::ostream &out, std::ostream &err)
{
    if (cfg.max_n < 1) {
        throw usage_error("--max must be at least 1");
    }
    if (cfg.compare == "pw-omega") {
        const auto rep = pw_omega_crosscheck(cfg.max_n);
        switch (cfg.format) {
        case output_format::json:
            out << to_json(rep).dump(2) << '\n';
            break;
        case output_format::csv:
            out << "n,enumerated,coefficient,pass\n";
            for (const auto &e : rep.entries) {
                out << e.n << ',' << e.enumerated << ',' << e.coefficient << ',' << (e.pass ? "true" : "false") << '\n';
            }
            break;
        case output_format::table:
            for (const auto &e : rep.entries) {
                out << std::left << std::setw(6) << e.n << std::setw(16) << e.enumerated.str() << std::setw(16)
                    << e.coefficient.str() << (e.pass ? "pass" : "FAIL") << '\n';
            }
            break;
        }
        if (!rep.pass) {
            err << "pw_count(" << rep.first_mismatch->n << ") = " << rep.first_mismatch->enumerated
                << " but [q^n] q*omega = " << rep.first_mismatch->coefficient << '\n';
            return exit_code::check_failed;
        }
        return exit_code::ok;
    }
    if (cfg.compare != "lambert-naive") {
        throw usage_error("--compare must be pw-omega or lambert-naive");
    }
    const auto order = static_cast<order_t>(cfg.max_n);
    std::vector<oracle_row> rows;
    for (const auto &[name, oracle] : naive::oracles()) {
        const auto fast = lookup_series(name).build(order);
        const auto slow = oracle(order);
        const auto mm = compare(fast, slow, compare_mode::all_coeffs);
        rows.push_back({name, !mm.has_value(), mm});
    }
    bool ok = true;
    switch (cfg.format) {
    case output_format::json: {
        auto arr = nlohmann::json::array();
        for (const auto &r : rows) {
            arr.push_back({{"series", r.name}, {"order", order}, {"pass", r.pass}});
        }
        out << arr.dump(2) << '\n';
        break;
    }
    case output_format::csv:
        out << "series,order,pass\n";
        for (const auto &r : rows) {
            out << r.name << ',' << order << ',' << (r.pass ? "true" : "false") << '\n';
        }
        break;
    case output_format::table:
        for (const auto &r : rows) {
            out << std::left << std::setw(20) << r.name << " order=" << order << "  " << (r.pass ? "pass" : "FAIL")
                << '\n';
        }
        break;
    }
    for (const auto &r : rows) {
        if (!r.pass) {
            ok = false;
            err << r.name << " disagrees with the naive oracle at q^" << r.first->exponent << ": " << r.first->lhs
                << " vs " << r.first->rhs << '\n';
        }
    }
    return ok ? exit_code::ok : exit_code::check_failed;
}

inline exit_code run_list(const cli_config &cfg, std::ostream &out)
{
    const auto &recs = registry();
    switch (cfg.format) {
    case output_format::json: {
        auto arr = nlohmann::json::array();
        for (const auto &r : recs) {
            arr.push_back({{"identity", r.name}, {"mode", to_string(r.mode)}, {"statement", r.statement}});
        }
        out << arr.dump(2) << '\n';
        break;
    }
    case output_format::csv:
        out << "identity,mode,statement\n";
        for (const auto &r : recs) {
            out << r.name << ',' << to_string(r.mode) << ",\"" << r.statement << "\"\n";
        }
        break;
    case output_format::table:
        for (const auto &r : recs) {
            out << std::left << std::setw(14) << r.name << std::setw(18) << to_string(r.mode) << r.statement << '\n';
        }
        break;
    }
    return exit_code::ok;
}

} // namespace detail

/// Parses argv and runs one subcommand. Structured output goes to `out`, diagnostics to `err`.
inline int run(int argc, const char *const *argv, std::ostream &out = std::cout, std::ostream &err = std::cerr)
{
    cli_config cfg;
    CLI::App app{"Exact truncated q-series identity checker"};
    app.require_subcommand(1);

    std::string format = "table";
    auto add_format = [&](CLI::App *sub) {
        sub->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"table", "json", "csv"}))
            ->capture_default_str();
    };

    auto *verify_cmd = app.add_subcommand("verify", "Verify one or all registered identities");
    std::string identity;
    verify_cmd->add_option("--identity", identity, "Identity name (default: all)");
    verify_cmd->add_option("--order", cfg.order, "Truncation order")->capture_default_str();
    verify_cmd->add_option("--threads", cfg.threads, "Worker threads for verify-all (0 = hardware)");
    verify_cmd->add_flag("--timings", cfg.timings, "Report elapsed milliseconds");
    add_format(verify_cmd);

    auto *coeffs_cmd = app.add_subcommand("coeffs", "Print the coefficients of a named series");
    std::string series;
    coeffs_cmd->add_option("--series", series, "Series name")->required();
    coeffs_cmd->add_option("--order", cfg.order, "Truncation order")->capture_default_str();
    coeffs_cmd->add_flag("--show-spec", cfg.show_spec, "Print the declarative spec instead of coefficients");
    add_format(coeffs_cmd);

    auto *cong_cmd = app.add_subcommand("congruence", "Scan pwbar(Mn+r) modulo m by enumeration");
    cong_cmd->add_option("--progression", cfg.progression, "Arithmetic progression M,r")->required();
    cong_cmd->add_option("--mod", cfg.divisor, "Divisor modulus m")->capture_default_str();
    cong_cmd->add_option("--max", cfg.max_n, "Largest argument scanned")->capture_default_str();
    add_format(cong_cmd);

    auto *oracle_cmd = app.add_subcommand("oracle", "Run an independent oracle cross-check");
    oracle_cmd->add_option("--compare", cfg.compare, "pw-omega or lambert-naive")
        ->required()
        ->check(CLI::IsMember({"pw-omega", "lambert-naive"}));
    oracle_cmd->add_option("--max", cfg.max_n, "Bound / truncation order")->capture_default_str();
    add_format(oracle_cmd);

    auto *list_cmd = app.add_subcommand("list", "List the registered identities");
    add_format(list_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        (void)e;
        return static_cast<int>(exit_code::ok);
    } catch (const CLI::ParseError &e) {
        err << e.what() << '\n';
        return static_cast<int>(exit_code::usage);
    }

    cfg.format = detail::format_names().at(format);
    if (!identity.empty()) {
        cfg.identity = identity;
    }
    if (!series.empty()) {
        cfg.series = series;
    }

    try {
        // Names are resolved before any series is computed.
        if (cfg.identity) {
            (void)lookup_identity(*cfg.identity);
        }
        if (cfg.series) {
            (void)lookup_series(*cfg.series);
        }
        exit_code rc = exit_code::ok;
        if (verify_cmd->parsed()) {
            rc = detail::run_verify(cfg, out, err);
        } else if (coeffs_cmd->parsed()) {
            rc = detail::run_coeffs(cfg, out);
        } else if (cong_cmd->parsed()) {
            rc = detail::run_congruence(cfg, out, err);
        } else if (oracle_cmd->parsed()) {
            rc = detail::run_oracle(cfg, out, err);
        } else {
            rc = detail::run_list(cfg, out);
        }
        return static_cast<int>(rc);
    } catch (const unknown_identity &e) {
        err << e.what() << '\n';
    } catch (const unknown_series &e) {
        err << e.what() << '\n';
    } catch (const detail::usage_error &e) {
        err << e.what() << '\n';
    } catch (const std::invalid_argument &e) {
        err << e.what() << '\n';
    }
    return static_cast<int>(exit_code::usage);
}

} // namespace qseries::cli

#endif
