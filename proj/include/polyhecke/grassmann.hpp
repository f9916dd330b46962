#pragma once

#include <map>
#include <vector>

#include "polyhecke/fpspace.hpp"
#include "polyhecke/multipoly.hpp"
#include "polyhecke/rat.hpp"
#include "polyhecke/unipoly.hpp"

namespace polyhecke {

// G_{k,n}(p) = [n]!/([k]![n-k]!), the number of k-subspaces of F_p^n.
Int grassmannian_count(int k, int n, const Int& p);

// Gaussian binomial as a polynomial in its argument (via the Pascal-type
// recurrence [n k] = [n-1 k-1] + t^k [n-1 k]).
UniPoly gauss_binomial_poly(int k, int n);

// Every k-dimensional subspace of F_p^n exactly once, generated from
// reduced-echelon pivot patterns (Schubert cells).  Errors if p^n exceeds
// the brute-force budget.
std::vector<FiniteSubspace> enumerate_subspaces(int k, int n, long p);

// nu_{n,k,l}(p) = G_{k,n} + (p^l - 1) G_{k-1,n-1}.
Int nu_closed(int n, int k, int l, const Int& p);

// Direct evaluation of sum_W p^{dim(W cap U)} for a given l-subspace U
// (defaults to the standard coordinate subspace when omitted).
Int nu_bruteforce(int n, int k, int l, long p);
Int nu_bruteforce_with(int n, int k, long p, const FiniteSubspace& u);

// Count of pairs (W, v) with v in W cap U: the bundle-intersection oracle.
Int nu_bundle_oracle(int n, int k, int l, long p);

// Phi_{n,k,l}(t): the eigenvalue as a polynomial; coefficients are positive
// integers wherever nonzero.
UniPoly phi_polynomial(int n, int k, int l);

// Phi-hat_{n,k} over x_0..x_n at a given prime: monomial exponents are the
// flag-intersection dimension profiles, coefficients the Schubert cell
// sizes (pure p-powers).
MultiPoly schubert_phi_hat(int n, int k, long p);

// y_j = #{W : dim W = k, dim(W cap U) = j} for the standard l-subspace U.
std::vector<Int> strata_counts_Y(int n, int k, int l, long p);

struct StrataX {
    std::map<std::pair<int, int>, Int> counts;  // (i, j) -> #X_ij
    std::map<std::pair<int, int>, Int> m;       // (i, j) -> m_ij
};
// Classify all k-subspaces W by (dim W cap Vf, dim W cap Cf); m_ij counts
// members of X_ij containing a fixed j-subspace S_j of Cf.
StrataX strata_counts_X(int n, long p, int k, const FiniteSubspace& vf, const FiniteSubspace& cf);

}  // namespace polyhecke
