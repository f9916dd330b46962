#pragma once

#include <string>

#include "polyhecke/polytope.hpp"

namespace polyhecke {

// [0,1]^n
LatticePolytope unit_cube(int n);
// conv{0, e_1, ..., e_n}
LatticePolytope standard_simplex(int n);
// Cartesian product with concatenated coordinates.
LatticePolytope product(const LatticePolytope& a, const LatticePolytope& b);
// Delta_2 x Delta_1, a nonsingular 3-polytope that is neither a cube nor a simplex.
LatticePolytope triangular_prism();
// conv{(0,0),(1,0),(1,2)}: simple but singular (one normal cone of index 2).
LatticePolytope singular_triangle();
// A non-simple 3-polytope (square pyramid), for error-path tests.
LatticePolytope square_pyramid();

// Parse "cube:3", "simplex:2", "prism", "singular-triangle".
LatticePolytope builtin_polytope(const std::string& spec);

}  // namespace polyhecke
