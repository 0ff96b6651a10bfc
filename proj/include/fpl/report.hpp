#pragma once

// Shared result/report structures with their JSON serialization. Rationals
// are always serialized as exact "p/q" strings.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fpl/rational.hpp"

namespace fpl {

struct ReconState {
    std::string coupling;  // state label (coupling serialization or similar)
    Rational lhs = 0;
    Rational rhs = 0;
    bool equal = false;
};

struct ReconciliationReport {
    std::string identity;
    int size = 0;
    std::vector<ReconState> states;
    bool pass = false;
    std::vector<std::string> notes;

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["identity"] = identity;
        j["size"] = size;
        j["states"] = nlohmann::json::array();
        for (const auto& s : states)
            j["states"].push_back({{"coupling", s.coupling},
                                   {"lhs", to_string(s.lhs)},
                                   {"rhs", to_string(s.rhs)},
                                   {"equal", s.equal}});
        j["pass"] = pass;
        if (!notes.empty()) j["notes"] = notes;
        return j;
    }
};

enum class FormulaStatus { Match, Mismatch, OracleUnavailable };

struct FormulaResult {
    std::string name;
    std::string args;
    Rational printed = 0;
    std::optional<Rational> oracle;
    FormulaStatus status = FormulaStatus::OracleUnavailable;
    std::optional<Rational> factor;  // oracle / printed when both nonzero

    static FormulaResult make(std::string name, std::string args, const Rational& printed,
                              std::optional<Rational> oracle) {
        FormulaResult r;
        r.name = std::move(name);
        r.args = std::move(args);
        r.printed = printed;
        r.oracle = oracle;
        if (!oracle) {
            r.status = FormulaStatus::OracleUnavailable;
        } else if (*oracle == printed) {
            r.status = FormulaStatus::Match;
        } else {
            r.status = FormulaStatus::Mismatch;
            if (printed != 0) r.factor = *oracle / printed;
        }
        return r;
    }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["name"] = name;
        j["args"] = args;
        j["printed"] = to_string(printed);
        j["oracle"] = oracle ? nlohmann::json(to_string(*oracle)) : nlohmann::json();
        switch (status) {
            case FormulaStatus::Match: j["status"] = "match"; break;
            case FormulaStatus::Mismatch: j["status"] = "mismatch"; break;
            case FormulaStatus::OracleUnavailable: j["status"] = "oracle-unavailable"; break;
        }
        if (factor) j["factor"] = to_string(*factor);
        return j;
    }
};

}  // namespace fpl
