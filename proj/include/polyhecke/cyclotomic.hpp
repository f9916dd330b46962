#pragma once

#include <complex>
#include <string>

#include "polyhecke/rat.hpp"
#include "polyhecke/unipoly.hpp"

namespace polyhecke {

// Element of the cyclotomic field Q(zeta_m), stored as a polynomial in
// zeta_m of degree < phi(m), reduced modulo the m-th cyclotomic polynomial.
// Reduction against the actual cyclotomic polynomial (not x^m - 1) makes the
// representation canonical, so rationality tests are exact coefficient
// checks rather than numerical judgments.
//
// Binary operations between different conductors lift both operands to the
// lcm conductor first.
class Cyclo {
  public:
    Cyclo() : m_(1), rep_() {}
    Cyclo(const Rat& r) : m_(1), rep_{r} { normalize(); }
    Cyclo(long v) : Cyclo(Rat(v)) {}

    // zeta_m^e, canonically reduced.
    static Cyclo zeta_pow(long m, long e);
    static Cyclo zeta(long m) { return zeta_pow(m, 1); }
    // exp(2*pi*i*u) for rational u.
    static Cyclo root_of_unity(const Rat& u);

    long conductor() const { return m_; }

    bool is_zero() const { return rep_.is_zero(); }
    bool is_rational() const { return rep_.degree() <= 0; }
    // Throws unless the reduced form is constant.
    Rat as_rational() const;

    Cyclo operator+(const Cyclo& o) const;
    Cyclo operator-(const Cyclo& o) const;
    Cyclo operator-() const;
    Cyclo operator*(const Cyclo& o) const;
    Cyclo operator/(const Cyclo& o) const;
    Cyclo inverse() const;
    bool operator==(const Cyclo& o) const;
    bool operator!=(const Cyclo& o) const { return !(*this == o); }

    Cyclo& operator+=(const Cyclo& o) { return *this = *this + o; }
    Cyclo& operator-=(const Cyclo& o) { return *this = *this - o; }
    Cyclo& operator*=(const Cyclo& o) { return *this = *this * o; }

    // Image in Q(zeta_target); target must be a multiple of the conductor.
    Cyclo lift(long target) const;

    // Numerical embedding zeta_m -> exp(2*pi*i/m).  Used only by the
    // Hurwitz-zeta cross-check.
    std::complex<double> embed() const;

    std::string str() const;

    // The m-th cyclotomic polynomial (cached, thread safe).
    static const UniPoly& cyclotomic_polynomial(long m);

  private:
    Cyclo(long m, UniPoly rep) : m_(m), rep_(std::move(rep)) { normalize(); }
    void normalize();

    long m_;
    UniPoly rep_;
};

long euler_phi(long m);

}  // namespace polyhecke
