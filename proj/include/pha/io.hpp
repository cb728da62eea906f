#pragma once

#include "pha/action.hpp"

#include <json.hpp>

#include <optional>

namespace pha {

/// Deserialized problem input: a field plus whichever of algebra, Hopf
/// algebra, and action the file declares.
struct JobInput {
    FieldPtr field;
    std::optional<PoissonAlgebra> algebra;
    std::optional<FiniteHopf> hopf;
    std::optional<HopfAction> action;
    std::map<std::string, CycRat> params; // numeric specializations
};

JobInput parse_job(const nlohmann::json& j);
JobInput load_job(const std::string& path);

/// Serialization used by the CLI JSON output; algebra_from_json inverts it.
nlohmann::json algebra_to_json(const PoissonAlgebra& P);
PoissonAlgebra algebra_from_json(const nlohmann::json& j, FieldPtr field,
                                 const std::vector<std::string>& param_names);

} // namespace pha
