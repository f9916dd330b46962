#pragma once

#include <utility>
#include <vector>

#include "polyhecke/lattice.hpp"
#include "polyhecke/polytope.hpp"
#include "polyhecke/unipoly.hpp"

namespace polyhecke {

struct EhrhartPolynomial {
    UniPoly poly;
    // the (t, count) pairs the polynomial was interpolated from
    std::vector<std::pair<long, Int>> support;
};

// Number of points of M in the dilate t*P.  Requires every vertex of P to
// lie in M (true for superlattices of the ambient lattice).
Int count_points(const LatticePolytope& p, const Lattice& m, long t);

// Interpolation of count_points at t = 0..n.
EhrhartPolynomial ehrhart(const LatticePolytope& p, const Lattice& m);
inline EhrhartPolynomial ehrhart(const LatticePolytope& p) { return ehrhart(p, p.ambient()); }

// E minus its leading term Vol(P) t^n.
UniPoly regularized(const EhrhartPolynomial& e, const LatticePolytope& p);

}  // namespace polyhecke
