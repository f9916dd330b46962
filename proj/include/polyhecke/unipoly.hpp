#pragma once

#include <string>
#include <utility>
#include <vector>

#include "polyhecke/rat.hpp"

namespace polyhecke {

// Univariate polynomial with rational coefficients, indexed by degree.
// Invariant: highest stored coefficient is nonzero (zero polynomial stores
// nothing and has degree -1).
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(QVec coeffs) : c_(std::move(coeffs)) { trim(); }
    UniPoly(std::initializer_list<Rat> coeffs) : c_(coeffs) { trim(); }

    static UniPoly constant(const Rat& v) { return UniPoly(QVec{v}); }
    static UniPoly monomial(const Rat& v, std::size_t deg);

    long degree() const { return (long)c_.size() - 1; }
    bool is_zero() const { return c_.empty(); }
    Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
    const QVec& coeffs() const { return c_; }

    Rat operator()(const Rat& x) const;  // Horner evaluation

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator-() const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator*(const Rat& s) const;
    bool operator==(const UniPoly& o) const { return c_ == o.c_; }

    // p(c*t): coefficient i scaled by c^i.
    UniPoly scale_arg(const Rat& c) const;
    // Drop the degree-n coefficient (used for the regularized polynomial).
    UniPoly drop_degree(std::size_t n) const;

    // Exact division; throws if the remainder is nonzero.
    UniPoly divide_exact(const UniPoly& divisor) const;
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;

    std::string str(const std::string& var = "t") const;

  private:
    void trim();
    QVec c_;
};

// Unique polynomial of degree < #points through the given (x, y) pairs.
// Exact Lagrange interpolation; throws on duplicate abscissae.
UniPoly interpolate(const std::vector<std::pair<Rat, Rat>>& points);

// Extended gcd over Q[x]: returns (g, u, v) with u*a + v*b = g, g monic
// (or zero when both inputs are zero).
struct PolyXgcd {
    UniPoly g, u, v;
};
PolyXgcd poly_xgcd(const UniPoly& a, const UniPoly& b);

}  // namespace polyhecke
