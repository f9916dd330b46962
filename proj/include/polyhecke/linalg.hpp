#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "polyhecke/rat.hpp"

namespace polyhecke {

// Dense rational matrix, row major.  Sizes here are tiny (n <= 4 plus a few
// dozen rows for interpolation systems), so everything is naive exact
// Gaussian elimination.
class QMat {
  public:
    QMat() : rows_(0), cols_(0) {}
    QMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}

    static QMat identity(std::size_t n);
    static QMat from_rows(const std::vector<QVec>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    QVec row(std::size_t i) const;
    std::vector<QVec> to_rows() const;

    QMat transpose() const;
    QMat operator*(const QMat& rhs) const;
    bool operator==(const QMat& rhs) const { return rows_ == rhs.rows_ && cols_ == rhs.cols_ && a_ == rhs.a_; }

    Rat det() const;                     // square only
    std::size_t rank() const;
    QMat rref() const;                   // reduced row echelon form
    std::optional<QMat> inverse() const;

    // Basis of the right kernel {x : A x = 0}, one vector per row of result.
    QMat right_kernel() const;

    std::string str() const;

  private:
    std::size_t rows_, cols_;
    std::vector<Rat> a_;
};

// Solve x * A = b for a row vector x (A square nonsingular).
QVec solve_left(const QMat& a, const QVec& b);
// Solve A x = b (A square nonsingular).
QVec solve_right(const QMat& a, const QVec& b);

Rat dot(const QVec& a, const QVec& b);
QVec sub(const QVec& a, const QVec& b);
QVec add(const QVec& a, const QVec& b);
QVec scale(const QVec& a, const Rat& c);

Rat dot_iq(const IVec& a, const QVec& b);
Int dot_ii(const IVec& a, const IVec& b);

QVec to_qvec(const IVec& v);
// Throws unless every entry is an integer.
IVec to_ivec(const QVec& v);

// Integer matrices (rows as lattice generators).
using IMat = std::vector<IVec>;

QMat imat_to_qmat(const IMat& m);
IMat qmat_to_imat(const QMat& m);

// Row-style Hermite normal form of an integer matrix of full row rank:
// H = U*A with U unimodular, H in row echelon form with positive pivots and
// entries above each pivot reduced into [0, pivot).  Unique, so it serves as
// the canonical form for the row span.
IMat hnf(const IMat& a);

// Basis of {y in Z^n : y * A = 0}.  The result is saturated (it is the
// kernel of a homomorphism to Z^m), one basis vector per row.
IMat integer_left_kernel(const IMat& a);

// Basis of the saturation Z^n cap span_Q(rows of a).
IMat saturate(const IMat& a);

// Divide out content, first nonzero entry made positive.
IVec primitive_vector(const QVec& v);

// Divide out content, orientation preserved (for ray directions).
IVec primitive_ray(const QVec& v);

Int imat_det(const IMat& a);  // square only

}  // namespace polyhecke
