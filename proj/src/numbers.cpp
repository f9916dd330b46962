#include "polyhecke/numbers.hpp"

#include <stdexcept>

namespace polyhecke {

QVec todd_series(unsigned order) {
    // (1 - e^{-x})/x = sum_{j>=0} (-1)^j x^j/(j+1)!, a unit power series;
    // invert it term by term.
    QVec d(order + 1);
    Rat fact(1);
    for (unsigned j = 0; j <= order; ++j) {
        fact *= Rat((long)j + 1);
        d[j] = rat((j % 2 == 0) ? 1 : -1, 1) / fact;
    }
    QVec t(order + 1, Rat(0));
    t[0] = 1;
    for (unsigned j = 1; j <= order; ++j) {
        Rat s(0);
        for (unsigned i = 1; i <= j; ++i) s += d[i] * t[j - i];
        t[j] = -s;
    }
    return t;
}

Rat bernoulli(unsigned j) {
    return todd_series(j)[j] * Rat(factorial(j));
}

Int gaussian_int(unsigned n, const Int& p) {
    return (int_pow(p, n) - 1) / (p - 1);
}

Int gaussian_factorial(unsigned n, const Int& p) {
    Int r(1);
    for (unsigned i = 1; i <= n; ++i) r *= gaussian_int(i, p);
    return r;
}

bool is_prime(long p) {
    if (p < 2) return false;
    Int z(p);
    return mpz_probab_prime_p(z.get_mpz_t(), 30) != 0;
}

}  // namespace polyhecke
