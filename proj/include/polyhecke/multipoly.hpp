#pragma once

#include <map>
#include <string>
#include <vector>

#include "polyhecke/rat.hpp"

namespace polyhecke {

// Sparse multivariate polynomial over a fixed number of variables.
// Keys are exponent vectors; zero coefficients are never stored.
class MultiPoly {
  public:
    using Exponents = std::vector<int>;

    explicit MultiPoly(std::size_t nvars = 0) : nvars_(nvars) {}

    static MultiPoly constant(std::size_t nvars, const Rat& v);
    static MultiPoly variable(std::size_t nvars, std::size_t index);

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, Rat>& terms() const { return terms_; }

    Rat coeff(const Exponents& e) const;
    Rat constant_term() const { return coeff(Exponents(nvars_, 0)); }
    int total_degree() const;

    void add_term(const Exponents& e, const Rat& c);

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const Rat& s) const;
    bool operator==(const MultiPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

    MultiPoly pow(unsigned e) const;
    MultiPoly derivative(std::size_t var) const;
    // Apply prod_i (d/dx_i)^{e_i}.
    MultiPoly derivative_multi(const Exponents& e) const;

    Rat eval(const QVec& point) const;

    // Embed into a polynomial ring with more variables, variable i of this
    // becoming variable map[i] of the result.
    MultiPoly embed(std::size_t new_nvars, const std::vector<std::size_t>& map) const;

    std::string str(const std::string& stem = "h") const;

  private:
    std::size_t nvars_;
    std::map<Exponents, Rat> terms_;
};

// All exponent vectors with given length and total degree <= max_total.
std::vector<MultiPoly::Exponents> exponents_up_to(std::size_t nvars, int max_total);

}  // namespace polyhecke
