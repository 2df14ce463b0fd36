#pragma once

// Command-line front end. Every subcommand first builds its JSON report;
// text mode is a rendering of that same document.
//
// Exit codes: 0 success, 1 mathematical failure on valid input (limit
// undefined, irrational residue, genus <= 0), 2 usage or input error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "thetachi/thetachi.hpp"

namespace thetachi::cli {

constexpr int exit_ok = 0;
constexpr int exit_domain = 1;
constexpr int exit_usage = 2;

inline json read_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError(path + ": cannot open file");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_json_text(buf.str(), path);
}

namespace detail {

inline std::string join_ints(const json& arr) {
    std::string s;
    for (const auto& x : arr) {
        if (!s.empty())
            s += ", ";
        s += x.is_string() ? x.get<std::string>() : x.dump();
    }
    return "[" + s + "]";
}

inline std::string render_char(const json& c) { return char_product_from_json(c).str(); }

inline std::string render_series(const json& s) { return power_series_from_json(s).str(); }

inline void render_text(const std::string& command, const json& r, std::ostream& out) {
    if (command == "chi-spectral") {
        out << "N = " << r["N"] << ", n = " << r["n"] << "\n"
            << "genus = " << r["genus"] << "\n"
            << "chi(Theta) = " << r["chi_theta"].get<std::string>() << "\n"
            << "generic abelian variety (-1)^(g-1) g! = " << r["chi_theta_generic"].get<std::string>() << "\n";
    } else if (command == "chi-generic") {
        out << "genus = " << r["genus"] << "\n"
            << "chi(Theta) = " << r["chi_theta"].get<std::string>() << "\n";
    } else if (command == "euler") {
        out << "a = " << join_ints(r["a"]) << ", f = " << join_ints(r["f"]) << ", D = " << join_ints(r["D"]) << "\n"
            << "chi_q = " << render_char(r["q_euler"]) << "\n"
            << "chi = " << r["chi"].get<std::string>() << "\n";
    } else if (command == "char") {
        out << "ch(A0) = " << render_char(r["char_A0"]) << "\n";
        if (r.contains("series"))
            out << "series = " << render_series(r["series"]) << "\n";
    } else if (command == "verify-prop1") {
        out << "predicted = " << join_ints(r["predicted"]) << "\n"
            << "computed  = " << join_ints(r["computed"]) << "\n";
        if (r["verdict"] == "CONSISTENT")
            out << "verdict: CONSISTENT (consistent up to degree " << r["max_degree"].get<std::int64_t>() - 1
                << ", not a proof of regularity)\n";
        else
            out << "verdict: NOT_REGULAR (first mismatch in degree " << r["first_mismatch"] << ")\n";
    } else if (command == "gamma-eval") {
        out << "reduced = " << gamma_product_from_json(r["reduced"]).str() << "\n"
            << "value = " << r["value"].get<std::string>() << "\n";
    }
}

inline json error_json(const std::string& error, json detail) { return {{"error", error}, {"detail", std::move(detail)}}; }

} // namespace detail

/// Runs one invocation. args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Euler characteristics of theta divisors and graded-ring characters", "thetachi"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    bool as_json = false;
    app.add_flag("--json", as_json, "Emit one JSON document instead of text");

    std::int64_t big_n = 0, small_n = 0;
    auto* chi_spectral = app.add_subcommand("chi-spectral", "chi(Theta) for a non-singular spectral curve");
    chi_spectral->add_option("--N", big_n, "Degree in w (N >= 2)")->required();
    chi_spectral->add_option("--n", small_n, "Degree bound parameter (deg t_j <= nj - 1)")->required();

    std::int64_t genus_opt = 0;
    auto* chi_generic = app.add_subcommand("chi-generic", "chi(Theta) = (-1)^(g-1) g! for a generic abelian variety");
    chi_generic->add_option("--genus", genus_opt, "Genus g >= 1")->required();

    std::string degrees_path;
    auto* euler = app.add_subcommand("euler", "Euler characteristic from degree data");
    euler->add_option("--degrees", degrees_path, "Degrees file {\"a\":[...],\"f\":[...],\"D\":[...]}")->required();

    std::string char_degrees_path;
    std::optional<std::int64_t> expand_order;
    auto* chr = app.add_subcommand("char", "Character ch(A)/ch(F) of the quotient ring");
    chr->add_option("--degrees", char_degrees_path, "Degrees file {\"a\":[...],\"f\":[...]}")->required();
    chr->add_option("--expand", expand_order, "Also print the series below this order")
        ->expected(0, 1)
        ->default_str("12");

    std::string system_path;
    std::int64_t max_degree = 12;
    auto* prop1 = app.add_subcommand("verify-prop1", "Check quotient dimensions against ch(A)/ch(F)");
    prop1->add_option("--system", system_path, "System file")->required();
    prop1->add_option("--max-degree", max_degree, "Check degrees below this bound")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);

    std::string gamma_path;
    auto* gamma_eval = app.add_subcommand("gamma-eval", "Exact value of a product of Gamma values");
    gamma_eval->add_option("--spec", gamma_path, "Gamma product file")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_usage;
    }

    const CLI::App* sub = app.get_subcommands().front();
    const std::string command = sub->get_name();

    try {
        json result;
        if (sub == chi_spectral) {
            SpectralCurveParams params(big_n, small_n);
            result = {{"N", big_n},
                      {"n", small_n},
                      {"genus", params.genus()},
                      {"chi_theta", chi_theta_spectral(params).str()},
                      {"chi_theta_generic", chi_theta_generic(params.genus()).str()}};
        } else if (sub == chi_generic) {
            result = {{"genus", genus_opt}, {"chi_theta", chi_theta_generic(genus_opt).str()}};
        } else if (sub == euler) {
            const DegreeData d = degree_data_from_json(read_json_file(degrees_path));
            const CharProduct chi_q = q_euler(d.a, d.f, d.D);
            result = {{"a", d.a}, {"f", d.f}, {"D", d.D}, {"q_euler", to_json(chi_q)}, {"chi", limit_q1(chi_q).str()}};
        } else if (sub == chr) {
            const DegreeData d = degree_data_from_json(read_json_file(char_degrees_path));
            const CharProduct ch = char_A0(d.a, d.f);
            result = {{"a", d.a}, {"f", d.f}, {"char_A0", to_json(ch)}};
            if (expand_order) {
                if (*expand_order <= 0)
                    throw Error(ErrorKind::invalid_argument, "--expand must be positive");
                result["series"] = to_json(expand(ch, *expand_order));
            }
        } else if (sub == prop1) {
            const WeightedSystem sys = weighted_system_from_json(read_json_file(system_path));
            result = to_json(verify_prop1(sys, max_degree));
        } else if (sub == gamma_eval) {
            const GammaProduct p = gamma_product_from_json(read_json_file(gamma_path));
            const Rational value = eval_exact(p);
            result = {{"input", to_json(p)}, {"reduced", to_json(reduce(p))}, {"value", value.str()}};
        }

        if (as_json)
            out << result.dump() << "\n";
        else
            detail::render_text(command, result, out);
        return exit_ok;
    } catch (const InputError& e) {
        err << detail::error_json("invalid input", e.what()).dump() << "\n";
        return exit_usage;
    } catch (const IrrationalResidue& e) {
        err << detail::error_json(std::string(to_string(e.kind())), {{"reduced", to_json(e.residue())}}).dump()
            << "\n";
        return exit_domain;
    } catch (const Error& e) {
        err << detail::error_json(std::string(to_string(e.kind())), e.detail()).dump() << "\n";
        return e.kind() == ErrorKind::invalid_argument ? exit_usage : exit_domain;
    }
}

} // namespace thetachi::cli
