#pragma once

#include <string>

#include <json.hpp>

#include "polyhecke/lattice.hpp"
#include "polyhecke/multipoly.hpp"
#include "polyhecke/polytope.hpp"
#include "polyhecke/unipoly.hpp"

namespace polyhecke {

// Rationals serialize as "num/den" strings (den omitted when 1); integers
// may also appear as JSON numbers on input.
Rat rat_from_json(const nlohmann::json& j);
nlohmann::json rat_to_json(const Rat& r);

// { "lattice": [[..]]  (optional, default identity), "vertices": [[..]] }
LatticePolytope polytope_from_json(const nlohmann::json& j);
nlohmann::json polytope_to_json(const LatticePolytope& p);

LatticePolytope polytope_from_file(const std::string& path);

// { "coeffs": ["c0", "c1", ...] }
nlohmann::json unipoly_to_json(const UniPoly& p);
UniPoly unipoly_from_json(const nlohmann::json& j);

nlohmann::json multipoly_to_json(const MultiPoly& p);
nlohmann::json fan_to_json(const LatticePolytope& p);
nlohmann::json lattice_to_json(const Lattice& l);

}  // namespace polyhecke
