#pragma once

// JSON and CSV forms of the core value types.
//
// Polynomial JSON: {"vars": ["t","x"], "terms": [{"exp": [0,1], "coeff": "-3"}]}
// with terms in canonical order, exponents aligned with "vars", and
// coefficients as decimal strings of arbitrary precision.

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

#include "lagtori/certify.hpp"
#include "lagtori/errors.hpp"
#include "lagtori/laurent.hpp"

namespace lagtori {

inline nlohmann::ordered_json poly_to_json(const LaurentPoly& p) {
    nlohmann::ordered_json j;
    j["vars"] = p.variables();
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [m, c] : p.terms()) {
        nlohmann::ordered_json term;
        std::vector<std::int64_t> exps;
        exps.reserve(p.variables().size());
        for (const auto& v : p.variables()) exps.push_back(m.exponent(v));
        term["exp"] = exps;
        term["coeff"] = c.str();
        terms.push_back(std::move(term));
    }
    j["terms"] = std::move(terms);
    return j;
}

inline LaurentPoly poly_from_json(const nlohmann::json& j) {
    try {
        const auto& vars = j.at("vars");
        LaurentPoly p;
        for (const auto& v : vars) p = p.with_variable(v.get<std::string>());
        for (const auto& term : j.at("terms")) {
            const auto& exps = term.at("exp");
            if (exps.size() != vars.size())
                throw InputError("polynomial term has " + std::to_string(exps.size()) +
                                 " exponents for " + std::to_string(vars.size()) +
                                 " variables");
            Monomial::ExpList list;
            for (std::size_t i = 0; i < vars.size(); ++i) {
                std::int64_t e = exps[i].get<std::int64_t>();
                if (e != 0) list.emplace_back(vars[i].get<std::string>(), e);
            }
            p += LaurentPoly::term(Integer(term.at("coeff").get<std::string>()),
                                   Monomial(std::move(list)));
        }
        return p;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("bad polynomial JSON: ") + e.what());
    }
}

// CSV: one row per term, exponent columns named after the variables.
inline std::string poly_to_csv(const LaurentPoly& p) {
    std::string out;
    for (const auto& v : p.variables()) out += v + ",";
    out += "coeff\n";
    for (const auto& [m, c] : p.terms()) {
        for (const auto& v : p.variables()) out += std::to_string(m.exponent(v)) + ",";
        out += c.str() + "\n";
    }
    return out;
}

inline nlohmann::ordered_json certificate_to_json(const Certificate& c) {
    nlohmann::ordered_json j;
    j["p"] = c.params.p;
    j["q"] = c.params.q;
    j["terms_P"] = c.exact_terms_P;
    j["bound"] = c.bound;
    nlohmann::ordered_json survivors = nlohmann::ordered_json::array();
    for (const auto& [e, coeff] : c.survivors) {
        nlohmann::ordered_json pair = nlohmann::ordered_json::array();
        pair.push_back(e);
        // decimal string once past the int64 range
        if (coeff >= std::numeric_limits<std::int64_t>::min() &&
            coeff <= std::numeric_limits<std::int64_t>::max())
            pair.push_back(coeff.convert_to<std::int64_t>());
        else
            pair.push_back(coeff.str());
        survivors.push_back(std::move(pair));
    }
    j["survivors"] = std::move(survivors);
    if (c.cancellation_witness)
        j["first_cancel_n"] = c.cancellation_witness->n;
    else
        j["first_cancel_n"] = nullptr;
    j["verified"] = c.verified;
    return j;
}

inline std::string certificate_csv_header() { return "p,q,terms_P,bound,verified"; }

inline std::string certificate_csv_row(const Certificate& c) {
    return std::to_string(c.params.p) + "," + std::to_string(c.params.q) + "," +
           std::to_string(c.exact_terms_P) + "," + std::to_string(c.bound) + "," +
           (c.verified ? "true" : "false");
}

}  // namespace lagtori
