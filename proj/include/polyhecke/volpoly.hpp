#pragma once

#include "polyhecke/multipoly.hpp"
#include "polyhecke/polytope.hpp"

namespace polyhecke {

// Volume of P(h), the polytope with facet F translated by h_F
// (<x,u_F> + lambda_F + h_F >= 0), at a specific small rational h.
// Requires P simple; throws if the combinatorial type changes at this h.
Rat volume_at_offset(const LatticePolytope& p, const QVec& h);

// Vol P(h) as a polynomial in the facet variables (indexed by facet order).
// Simplices and coordinate-aligned products are handled in closed form, the
// generic path (n <= 3) by exact sampling and total-degree interpolation
// with a held-out consistency check.
//
// The sampling radius |h| <= 1/(4 max|lambda| + 4) is a heuristic for the
// stability of the combinatorial type; every sample additionally verifies
// the vertex-facet incidences directly and the grid shrinks on failure.
MultiPoly volume_polynomial(const LatticePolytope& p);

}  // namespace polyhecke
