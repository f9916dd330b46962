#pragma once

#include <vector>

#include "polyhecke/ehrhart.hpp"
#include "polyhecke/lattice.hpp"
#include "polyhecke/polytope.hpp"
#include "polyhecke/unipoly.hpp"

namespace polyhecke {

// T(p,k) E(P) = sum over the superlattices M in L_k of E(P_M).
struct HeckeResult {
    long p = 0;
    int k = 0;
    std::vector<UniPoly> per_lattice;  // ordered as enumerate_superlattices
    UniPoly aggregate;
};

HeckeResult hecke_ehrhart(const LatticePolytope& p, long prime, int k);

// sum over L_k of vol_l(P_M); equals nu_{n,k,l}(p) * vol_l(P).
Rat hecke_vol(const LatticePolytope& p, long prime, int k, int l);

// Both sides of the volume/index transformation law for one face and one
// superlattice, each computed independently; throws on mismatch.
struct PropAResult {
    int vol_exponent;    // dim(Mbar cap Vbar_f)
    int index_exponent;  // dim(Mbar cap Cbar_f) - r
    int r;
};
PropAResult prop_A_check(const LatticePolytope& p, int face_index, const Superlattice& m, long prime);

// T(p^2) E by direct enumeration of all coindex-p^2 superlattices.
struct HeckePSquared {
    std::size_t summands = 0;
    UniPoly aggregate;
};
HeckePSquared hecke_p_squared(const LatticePolytope& p, long prime);

// (1/#family) sum of regularized Ehrhart polynomials over the family.
UniPoly average_regularized(const LatticePolytope& p, const std::vector<Lattice>& family);

}  // namespace polyhecke
