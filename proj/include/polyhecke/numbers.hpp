#pragma once

#include "polyhecke/rat.hpp"

namespace polyhecke {

// Coefficients of x/(1 - e^{-x}) through degree `order` inclusive, i.e.
// B_j/j! in the convention with B_1 = +1/2.
QVec todd_series(unsigned order);

// Bernoulli number B_j, B_1 = +1/2 convention.
Rat bernoulli(unsigned j);

// [n] = (p^n - 1)/(p - 1).
Int gaussian_int(unsigned n, const Int& p);

// [n]! = prod_{i=1..n} [i].
Int gaussian_factorial(unsigned n, const Int& p);

bool is_prime(long p);

}  // namespace polyhecke
