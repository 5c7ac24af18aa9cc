#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "syzlab/error.hpp"
#include "syzlab/generators.hpp"
#include "syzlab/group.hpp"
#include "syzlab/representation.hpp"

namespace syzlab::workbench {

using json = nlohmann::json;

/// Malformed problem document; `field` is a dotted path like "rep.multiplicities[2]".
struct SchemaError : InputError {
    SchemaError(const std::string& field, const std::string& message)
        : InputError("schema error at " + field + ": " + message), field(field) {}
    std::string field;
};

/// {"conductor": N, "coeffs": [[num, den], ...]} (coefficients of zeta_N^0, zeta_N^1, ...),
/// a bare [num, den] pair, or an integer.
Cyclotomic decode_cyclotomic(const json& value, const std::string& field);
json encode_cyclotomic(const Cyclotomic& value);
json encode_rational(const Rational& value);

Matrix<Cyclotomic> decode_matrix(const json& value, const std::string& field);

struct Problem {
    /// The input document with every key sorted; hashed for the report header.
    json document;
    std::string group_label;
    std::shared_ptr<const FiniteGroup> group;
    std::optional<IrrepCatalog> catalog;
    std::optional<std::vector<int>> multiplicities;
    std::optional<Representation> rep;
    std::string task;
    std::optional<int> p;
    std::optional<int> p_max;
    std::optional<GeneratorMode> mode;
    /// Task-specific settings ("options" object), empty when absent.
    json options = json::object();
};

inline const std::vector<std::string>& known_tasks() {
    static const std::vector<std::string> tasks{"group",     "invariants", "noether", "syzygies",
                                                "bounds",    "universal",  "schur",   "chain"};
    return tasks;
}

Problem parse_problem(const std::string& text);

}  // namespace syzlab::workbench
