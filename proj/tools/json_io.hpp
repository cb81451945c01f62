#pragma once

#include "pbraid/closure.hpp"
#include "pbraid/desingularization.hpp"

#include <json.hpp>

namespace pbraid::cli {

/// {"strands": n, "terms": [{"key": "0|", "coeff": 1}, ...]}, keys ascending.
nlohmann::json to_json(const RingElement &e);
RingElement ring_from_json(const nlohmann::json &j);

/// [{"components": c, "doubled_linkings": [...], "weight": "p/q"}, ...]
nlohmann::json to_json(const LinkingProfile &p);
LinkingProfile profile_from_json(const nlohmann::json &j);

} // namespace pbraid::cli
