#include "polyhecke/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace polyhecke {

long euler_phi(long m) {
    if (m <= 0) throw std::invalid_argument("euler_phi of nonpositive argument");
    long result = m;
    long x = m;
    for (long p = 2; p * p <= x; ++p) {
        if (x % p) continue;
        result -= result / p;
        while (x % p == 0) x /= p;
    }
    if (x > 1) result -= result / x;
    return result;
}

const UniPoly& Cyclo::cyclotomic_polynomial(long m) {
    static std::map<long, UniPoly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d, computed recursively
    // below without recursion by filling divisors in increasing order.
    for (long d = 1; d <= m; ++d) {
        if (m % d || cache.count(d)) continue;
        QVec xm(static_cast<std::size_t>(d) + 1, Rat(0));
        xm[0] = -1;
        xm[(std::size_t)d] = 1;
        UniPoly q(std::move(xm));
        for (long e = 1; e < d; ++e)
            if (d % e == 0) q = q.divide_exact(cache.at(e));
        cache.emplace(d, q);
    }
    return cache.at(m);
}

void Cyclo::normalize() {
    if (m_ < 1) throw std::invalid_argument("conductor must be positive");
    const UniPoly& phi = cyclotomic_polynomial(m_);
    if (rep_.degree() >= phi.degree()) rep_ = rep_.divmod(phi).second;
}

Cyclo Cyclo::zeta_pow(long m, long e) {
    if (m < 1) throw std::invalid_argument("conductor must be positive");
    long r = e % m;
    if (r < 0) r += m;
    return Cyclo(m, UniPoly::monomial(Rat(1), (std::size_t)r));
}

Cyclo Cyclo::root_of_unity(const Rat& u) {
    Rat frac = u - Rat(floor_rat(u));
    Int den = frac.get_den();
    Int num = frac.get_num();
    if (!den.fits_slong_p()) throw std::invalid_argument("root of unity order too large");
    return zeta_pow(den.get_si(), num.get_si());
}

Rat Cyclo::as_rational() const {
    if (!is_rational()) throw std::domain_error("cyclotomic number is not rational: " + str());
    return rep_.coeff(0);
}

Cyclo Cyclo::lift(long target) const {
    if (target % m_) throw std::invalid_argument("lift target not a multiple of conductor");
    if (target == m_) return *this;
    long s = target / m_;
    // zeta_m^i -> zeta_target^{i*s}
    UniPoly out;
    for (long i = 0; i <= rep_.degree(); ++i) {
        Rat c = rep_.coeff((std::size_t)i);
        if (c == 0) continue;
        out = out + UniPoly::monomial(c, (std::size_t)(i * s));
    }
    return Cyclo(target, out);
}

static long lcm_long(long a, long b) { return a / std::gcd(a, b) * b; }

Cyclo Cyclo::operator+(const Cyclo& o) const {
    long m = lcm_long(m_, o.m_);
    return Cyclo(m, lift(m).rep_ + o.lift(m).rep_);
}

Cyclo Cyclo::operator-(const Cyclo& o) const {
    long m = lcm_long(m_, o.m_);
    return Cyclo(m, lift(m).rep_ - o.lift(m).rep_);
}

Cyclo Cyclo::operator-() const { return Cyclo(m_, -rep_); }

Cyclo Cyclo::operator*(const Cyclo& o) const {
    long m = lcm_long(m_, o.m_);
    return Cyclo(m, lift(m).rep_ * o.lift(m).rep_);
}

Cyclo Cyclo::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    // Phi_m is irreducible over Q, so gcd(rep, Phi_m) = 1 and the Bezout
    // coefficient of rep is the inverse.
    PolyXgcd x = poly_xgcd(rep_, cyclotomic_polynomial(m_));
    if (x.g.degree() != 0) throw std::logic_error("cyclotomic inverse: gcd not constant");
    return Cyclo(m_, x.u);
}

Cyclo Cyclo::operator/(const Cyclo& o) const { return *this * o.inverse(); }

bool Cyclo::operator==(const Cyclo& o) const {
    long m = lcm_long(m_, o.m_);
    return lift(m).rep_ == o.lift(m).rep_;
}

std::complex<double> Cyclo::embed() const {
    const double tau = 6.283185307179586476925286766559;
    std::complex<double> zeta = std::polar(1.0, tau / (double)m_);
    std::complex<double> acc(0.0, 0.0);
    for (long i = rep_.degree(); i >= 0; --i)
        acc = acc * zeta + std::complex<double>(rep_.coeff((std::size_t)i).get_d(), 0.0);
    return acc;
}

std::string Cyclo::str() const {
    if (is_rational()) return to_string(rep_.coeff(0));
    std::ostringstream os;
    os << rep_.str("zeta" + std::to_string(m_));
    return os.str();
}

}  // namespace polyhecke
