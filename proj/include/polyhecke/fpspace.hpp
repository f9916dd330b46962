#pragma once

#include <string>
#include <vector>

#include "polyhecke/rat.hpp"

namespace polyhecke {

// Matrices over F_p on machine integers; p is prime and small (p < 2^15).
using FpVec = std::vector<long>;
using FpMat = std::vector<FpVec>;

long fp_inverse(long a, long p);
// Reduced row echelon form; returns rank.
int fp_rref(FpMat& m, long p);
int fp_rank(FpMat m, long p);

// Subspace of F_p^n in canonical reduced-echelon basis (dimension = #rows).
class FiniteSubspace {
  public:
    FiniteSubspace(long p, int n) : p_(p), n_(n) {}
    // Canonicalizes (row reduces, drops zero rows).
    FiniteSubspace(long p, int n, FpMat generators);

    long p() const { return p_; }
    int ambient_dim() const { return n_; }
    int dim() const { return (int)basis_.size(); }
    const FpMat& basis() const { return basis_; }

    bool contains(const FpVec& v) const;
    bool contains(const FiniteSubspace& other) const;
    int intersection_dim(const FiniteSubspace& other) const;
    FiniteSubspace sum(const FiniteSubspace& other) const;

    // All p^dim vectors of the subspace.
    std::vector<FpVec> all_vectors() const;

    bool operator==(const FiniteSubspace& o) const {
        return p_ == o.p_ && n_ == o.n_ && basis_ == o.basis_;
    }
    bool operator<(const FiniteSubspace& o) const { return basis_ < o.basis_; }

    std::string str() const;

  private:
    long p_;
    int n_;
    FpMat basis_;
};

}  // namespace polyhecke
