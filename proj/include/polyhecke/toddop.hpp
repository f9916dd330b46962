#pragma once

#include <string>
#include <vector>

#include "polyhecke/cyclotomic.hpp"
#include "polyhecke/multipoly.hpp"
#include "polyhecke/polytope.hpp"
#include "polyhecke/rat.hpp"

namespace polyhecke {

// Degree-k coefficient of the series dx/(1 - a e^{-dx}); for a = 1 this is
// B_k/k!.  Computed by exact series division, so the classical closed forms
// can serve as an independent oracle.
Cyclo circle_coefficient(const Cyclo& a, int k);

// sum_{j=1..n-1} c(omega^j, k) = (n^k - 1)/k! B_k in Q(zeta_n), including
// the k = 1 case.  The left side is asserted rational before comparison.
bool distribution_check(int n, int k);

// theta_k(u) = (-1)^k k! c(exp(-2 pi i u), k); rational for u in (1/2)Z,
// real-subfield valued in general, returned as a cyclotomic number.
Cyclo theta(int k, const Rat& u);

// zeta(k, u) = -(2 pi i)^k/k! theta_k(u) for k > 1, checked numerically
// with symmetric partial sums (|m| < 10^4 plus integral tail) to 1e-9.
// The only floating-point computation in the library.
bool hurwitz_numeric_check(int k, const Rat& u);

// One term A(f,pi) d_f^pi of the degree-l Todd operator.
struct ToddTerm {
    int face_index;
    std::vector<std::pair<int, int>> partition;  // (facet index, positive part)
    Rat coefficient;                             // the Gamma-sum, asserted rational
    MultiPoly::Exponents derivative;             // exponent per facet variable
};

// All degree-l terms for a simple polytope; for every face of codimension
// <= l and every ordered partition of l over its facets, the coefficient is
// the Gamma-sum of circle-coefficient products.
std::vector<ToddTerm> todd_terms(const LatticePolytope& p, int l);

// c_{n-l} via the Todd operator applied to Vol P(h) at h = 0.
Rat kp_coefficient(const LatticePolytope& p, int l);
Rat kp_coefficient(const LatticePolytope& p, int l, const MultiPoly& volume_poly);

// Squarefree transformation law: for a nonsingular P and a face f of
// codimension l, sum over L_k of A(f_M, 1) Vol f_M / Ind sigma_{f_M} equals
// nu_{n,k,n-l}(p) Vol f / 2^l.  Returns both sides.
struct SquarefreeCheck {
    Rat lhs;
    Rat rhs;
    bool ok() const { return lhs == rhs; }
};
SquarefreeCheck theorem2_squarefree_check(const LatticePolytope& p, int face_index, long prime, int k);

// A(f_M, pi) for the face f of P viewed over the superlattice M (the
// Gamma-sum against the cone respanned by primitive vectors of M).
Rat todd_coefficient_over(const LatticePolytope& p, const Lattice& m, int face_index,
                          const std::vector<int>& parts);

// A(f_M, 1) restricted to the nonzero Gamma points (the Dedekind part).
Rat dedekind_part(const LatticePolytope& p, const Lattice& m, int face_index);

// Stratified summary of T(p,1) acting on an edge contribution of a 3-dim
// nonsingular polytope: the four strata of the projective plane of lines.
struct Table3Row {
    std::string name;
    long count = 0;
    Rat vol_ratio;      // Vol f_M / Vol f (constant on the stratum)
    Rat ind_ratio;      // Ind sigma_f / Ind sigma_{f_M}
    Rat coefficient_sum;  // sum of A(f_M, 1) over the stratum
};
struct Table3Report {
    std::vector<Table3Row> rows;
    Rat total;          // sum A Vol/Ind over all strata, divided by Vol f
    Rat expected;       // (p^2 + 2p)/4
    Rat dedekind_sum;   // sum of the Dedekind parts over the C_f stratum
    Rat dedekind_expected;  // (p-1)^2/4
    bool ok() const { return total == expected && dedekind_sum == dedekind_expected; }
};
Table3Report table3_report(const LatticePolytope& p, int edge_face, long prime);

}  // namespace polyhecke
