#pragma once

/**
 * @file json_io.hpp
 * @brief JSON encodings of the library's values and input-file schemas.
 *
 * Rationals and big integers are always written as strings ("p/q" or "p")
 * so that no precision is lost in third-party JSON readers.
 *
 * Input schemas:
 *   degrees file  {"a": [int...], "f": [int...], "D": [int...]}
 *   system file   {"weights": [int...],
 *                  "generators": [[{"coeff": "p/q", "exps": [int...]}...]...]}
 *   gamma file    {"prefactor": "p/q", "factors": [{"arg": "p/q", "exp": int}...]}
 */

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "thetachi/gamma_product.hpp"
#include "thetachi/graded_ring.hpp"
#include "thetachi/qchar.hpp"
#include "thetachi/rational.hpp"

namespace thetachi {

using nlohmann::json;

/// Malformed or schema-violating input. Distinct from Error, which signals
/// a mathematical failure on well-formed input.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses text, reporting syntax errors with 1-based line and column.
inline json parse_json_text(std::string_view text, std::string_view source = "input") {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        std::size_t line = 1, column = 1;
        const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        for (std::size_t i = 0; i < stop; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw InputError(std::string(source) + ": JSON syntax error at line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + e.what());
    }
}

namespace detail {

inline const json& require(const json& obj, const char* key, std::string_view where) {
    if (!obj.is_object())
        throw InputError(std::string(where) + ": expected a JSON object");
    auto it = obj.find(key);
    if (it == obj.end())
        throw InputError(std::string(where) + ": missing key \"" + key + "\"");
    return *it;
}

inline std::int64_t as_int(const json& v, std::string_view where) {
    if (!v.is_number_integer())
        throw InputError(std::string(where) + ": expected an integer, got " + v.dump());
    return v.get<std::int64_t>();
}

inline std::vector<int> as_int_list(const json& v, std::string_view where) {
    if (!v.is_array())
        throw InputError(std::string(where) + ": expected an array of integers");
    std::vector<int> out;
    for (const auto& x : v) {
        const std::int64_t i = as_int(x, where);
        if (i < INT32_MIN || i > INT32_MAX)
            throw InputError(std::string(where) + ": integer out of range");
        out.push_back(static_cast<int>(i));
    }
    return out;
}

} // namespace detail

inline json to_json(const Rational& r) { return r.str(); }

/// Accepts "p/q" strings and plain JSON integers.
inline Rational rational_from_json(const json& v, std::string_view where = "rational") {
    if (v.is_number_integer())
        return Rational(v.get<std::int64_t>());
    if (!v.is_string())
        throw InputError(std::string(where) + ": expected a rational string \"p/q\", got " + v.dump());
    try {
        return Rational::parse(v.get<std::string>());
    } catch (const Error& e) {
        throw InputError(std::string(where) + ": " + e.detail());
    }
}

inline json to_json(const CharProduct& x) {
    return {{"sign", x.sign()}, {"shift", x.shift()}, {"numer", x.numer_exps()}, {"denom", x.denom_exps()}};
}

inline CharProduct char_product_from_json(const json& v) {
    constexpr std::string_view where = "character";
    return CharProduct(static_cast<int>(detail::as_int(detail::require(v, "sign", where), where)),
                       detail::as_int(detail::require(v, "shift", where), where),
                       detail::as_int_list(detail::require(v, "numer", where), where),
                       detail::as_int_list(detail::require(v, "denom", where), where));
}

inline json to_json(const PowerSeries& s) {
    json coeffs = json::array();
    for (const auto& c : s.coeffs())
        coeffs.push_back(c.str());
    return {{"offset", s.offset()}, {"coeffs", coeffs}};
}

inline PowerSeries power_series_from_json(const json& v) {
    constexpr std::string_view where = "series";
    const json& coeffs = detail::require(v, "coeffs", where);
    if (!coeffs.is_array())
        throw InputError("series: \"coeffs\" must be an array");
    std::vector<BigInt> c;
    for (const auto& x : coeffs) {
        const Rational r = rational_from_json(x, where);
        if (!r.is_integer())
            throw InputError("series: coefficients must be integers");
        c.push_back(r.numerator());
    }
    return PowerSeries(detail::as_int(detail::require(v, "offset", where), where), std::move(c));
}

inline json to_json(const GammaProduct& p) {
    json factors = json::array();
    for (const auto& [arg, exp] : p.factors())
        factors.push_back({{"arg", arg.str()}, {"exp", exp}});
    return {{"prefactor", p.prefactor().str()}, {"factors", factors}};
}

inline GammaProduct gamma_product_from_json(const json& v) {
    constexpr std::string_view where = "gamma product";
    GammaProduct p(rational_from_json(detail::require(v, "prefactor", where), where));
    const json& factors = detail::require(v, "factors", where);
    if (!factors.is_array())
        throw InputError("gamma product: \"factors\" must be an array");
    for (const auto& f : factors) {
        const Rational arg = rational_from_json(detail::require(f, "arg", where), where);
        const std::int64_t exp = detail::as_int(detail::require(f, "exp", where), where);
        if (arg.sign() <= 0)
            throw InputError("gamma product: argument " + arg.str() + " is a pole of Gamma");
        p.mul_gamma(arg, exp);
    }
    return p;
}

struct DegreeData {
    std::vector<int> a;
    std::vector<int> f;
    std::vector<int> D;
};

/// "D" is optional (defaults to empty) so the same file feeds `char`.
inline DegreeData degree_data_from_json(const json& v) {
    constexpr std::string_view where = "degrees file";
    DegreeData out;
    out.a = detail::as_int_list(detail::require(v, "a", where), where);
    out.f = detail::as_int_list(detail::require(v, "f", where), where);
    if (v.contains("D"))
        out.D = detail::as_int_list(v.at("D"), where);
    return out;
}

inline json to_json(const WeightedSystem& sys) {
    json gens = json::array();
    for (const auto& g : sys.generators()) {
        json terms = json::array();
        for (const auto& [exps, c] : g.terms())
            terms.push_back({{"coeff", c.str()}, {"exps", exps}});
        gens.push_back(terms);
    }
    return {{"weights", sys.weights()}, {"generators", gens}};
}

inline WeightedSystem weighted_system_from_json(const json& v) {
    constexpr std::string_view where = "system file";
    std::vector<int> weights = detail::as_int_list(detail::require(v, "weights", where), where);
    const json& gens = detail::require(v, "generators", where);
    if (!gens.is_array())
        throw InputError("system file: \"generators\" must be an array");
    std::vector<Polynomial> polys;
    for (const auto& g : gens) {
        if (!g.is_array())
            throw InputError("system file: each generator must be an array of terms");
        Polynomial p(weights.size());
        for (const auto& term : g) {
            std::vector<int> exps = detail::as_int_list(detail::require(term, "exps", where), where);
            if (exps.size() != weights.size())
                throw InputError("system file: exponent vector " + json(exps).dump() + " does not match " +
                                 std::to_string(weights.size()) + " weights");
            p.add_term(std::move(exps), rational_from_json(detail::require(term, "coeff", where), where));
        }
        polys.push_back(std::move(p));
    }
    return WeightedSystem(std::move(weights), std::move(polys));
}

inline json to_json(const Prop1Report& r) {
    return {{"max_degree", r.max_degree},
            {"predicted", r.predicted},
            {"computed", r.computed},
            {"first_mismatch", r.first_mismatch ? json(*r.first_mismatch) : json(nullptr)},
            {"verdict", std::string(to_string(r.verdict))}};
}

inline Prop1Report prop1_report_from_json(const json& v) {
    constexpr std::string_view where = "report";
    Prop1Report r;
    r.max_degree = detail::as_int(detail::require(v, "max_degree", where), where);
    for (const auto& x : detail::require(v, "predicted", where))
        r.predicted.push_back(detail::as_int(x, where));
    for (const auto& x : detail::require(v, "computed", where))
        r.computed.push_back(detail::as_int(x, where));
    const json& fm = detail::require(v, "first_mismatch", where);
    if (!fm.is_null())
        r.first_mismatch = detail::as_int(fm, where);
    const json& verdict = detail::require(v, "verdict", where);
    if (verdict == "CONSISTENT")
        r.verdict = Prop1Verdict::consistent;
    else if (verdict == "NOT_REGULAR")
        r.verdict = Prop1Verdict::not_regular;
    else
        throw InputError("report: unknown verdict " + verdict.dump());
    return r;
}

} // namespace thetachi
