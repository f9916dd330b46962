#pragma once

#include <string>
#include <vector>

#include "polyhecke/fpspace.hpp"
#include "polyhecke/linalg.hpp"
#include "polyhecke/rat.hpp"

namespace polyhecke {

// Full-rank lattice in Q^n given by a rational basis matrix whose rows span
// it.  All lattices are expressed relative to the standard lattice Z^n.
class Lattice {
  public:
    explicit Lattice(QMat basis);
    static Lattice standard(int n);

    int dim() const { return (int)basis_.rows(); }
    const QMat& basis() const { return basis_; }
    const QMat& basis_inverse() const { return inv_; }

    // Coordinates of a point with respect to this basis (x = coords * basis).
    QVec coordinates(const QVec& point) const;
    bool contains(const QVec& point) const;
    bool contains(const Lattice& other) const;  // other subset of this

    // |det basis|: the covolume relative to Z^n.
    Rat covolume() const;
    // [this : sub] for sub a finite-index sublattice.
    Int index_of_sublattice(const Lattice& sub) const;

    // Canonical basis (Hermite form of the scaled integer matrix, divided
    // back); lattices are equal iff their canonical keys match.
    std::string canonical_key() const;

    bool operator==(const Lattice& o) const;

  private:
    QMat basis_;
    QMat inv_;
};

// A Hecke superlattice together with its upper-triangular coset matrix A;
// the lattice is spanned by the rows of p^{-1} A.
struct Superlattice {
    Lattice lattice;
    IMat coset_matrix;
};

struct SuperlatticeSet {
    long p = 0;
    int k = 0;
    std::vector<Superlattice> members;
};

// All lattices M with L subsetneq M subsetneq p^{-1}L and [M : L] = p^k,
// where L = Z^n; there are G_{k,n}(p) of them.  k = n is allowed and yields
// the single lattice p^{-1}L.
SuperlatticeSet enumerate_superlattices(int n, long p, int k);

// The subspace of F_p^n determined by L subset M subset p^{-1}L under the
// scaling isomorphism p^{-1}L/L = L/pL.
FiniteSubspace reduction_mod_p(const Lattice& M, const Lattice& L, long p);

// All superlattices M of Z^n with [M : Z^n] = p^e, each exactly once.
std::vector<Lattice> enumerate_coindex_superlattices(int n, long p, int e);

}  // namespace polyhecke
