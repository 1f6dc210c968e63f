#pragma once

// Cech complexes from JSON:
//   {"opens": 3, "nerve": [[0,1],[0,2],[1,2]], "constant": 1}
// or with explicit sheaf data
//   {"nerve": [...], "dims": {"0": 1, "0,1": 1, ...},
//    "restrictions": {"0,1|0": [[1]], ...}}
// The nerve lists facets (or any generating set); it is closed downward.
// "opens" defaults to one more than the largest index. Restriction keys are
// "simplex|face"; matrix entries are integers, "p/q" strings or [re, im].

#include "kahler/cech.hpp"

#include <json.hpp>

#include <string>

namespace kahler::cli {

/// Throws std::invalid_argument on malformed documents.
CechComplex cech_from_json(const nlohmann::json& doc);
Nerve nerve_from_json(const nlohmann::json& doc);

GaussianRational scalar_from_json(const nlohmann::json& v);

}  // namespace kahler::cli
