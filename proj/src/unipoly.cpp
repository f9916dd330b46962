#include "polyhecke/unipoly.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace polyhecke {

void UniPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::monomial(const Rat& v, std::size_t deg) {
    QVec c(deg + 1, Rat(0));
    c[deg] = v;
    return UniPoly(std::move(c));
}

Rat UniPoly::operator()(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    QVec r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator-() const {
    QVec r = c_;
    for (auto& x : r) x = -x;
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    QVec r(c_.size() + o.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator*(const Rat& s) const {
    QVec r = c_;
    for (auto& x : r) x *= s;
    return UniPoly(std::move(r));
}

UniPoly UniPoly::scale_arg(const Rat& c) const {
    QVec r = c_;
    Rat f(1);
    for (std::size_t i = 1; i < r.size(); ++i) {
        f *= c;
        r[i] *= f;
    }
    return UniPoly(std::move(r));
}

UniPoly UniPoly::drop_degree(std::size_t n) const {
    QVec r = c_;
    if (n < r.size()) r[n] = 0;
    return UniPoly(std::move(r));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("polynomial division by zero");
    QVec rem = c_;
    long dd = divisor.degree();
    QVec quot;
    if ((long)rem.size() - 1 >= dd) quot.assign(rem.size() - (std::size_t)dd, Rat(0));
    for (long d = (long)rem.size() - 1; d >= dd; --d) {
        if (rem[(std::size_t)d] == 0) continue;
        Rat f = rem[(std::size_t)d] / divisor.c_[(std::size_t)dd];
        quot[(std::size_t)(d - dd)] = f;
        for (long j = 0; j <= dd; ++j) rem[(std::size_t)(d - dd + j)] -= f * divisor.c_[(std::size_t)j];
    }
    return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly UniPoly::divide_exact(const UniPoly& divisor) const {
    auto [q, r] = divmod(divisor);
    if (!r.is_zero()) throw std::invalid_argument("inexact polynomial division");
    return q;
}

std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long d = degree(); d >= 0; --d) {
        Rat c = c_[(std::size_t)d];
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        Rat a = abs(c);
        if (a != 1 || d == 0) os << to_string(a);
        if (d > 0) {
            if (a != 1 && !is_integer(a)) os << "*";
            os << var;
            if (d > 1) os << "^" << d;
        }
        first = false;
    }
    return os.str();
}

UniPoly interpolate(const std::vector<std::pair<Rat, Rat>>& points) {
    std::set<Rat> seen;
    for (const auto& [x, y] : points) {
        (void)y;
        if (!seen.insert(x).second) throw std::invalid_argument("interpolate: duplicate abscissa " + to_string(x));
    }
    UniPoly result;
    for (std::size_t i = 0; i < points.size(); ++i) {
        UniPoly term = UniPoly::constant(points[i].second);
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (j == i) continue;
            Rat den = points[i].first - points[j].first;
            term = term * UniPoly({-points[j].first / den, Rat(1) / den});
        }
        result = result + term;
    }
    return result;
}

PolyXgcd poly_xgcd(const UniPoly& a, const UniPoly& b) {
    UniPoly r0 = a, r1 = b;
    UniPoly u0 = UniPoly::constant(1), u1;
    UniPoly v0, v1 = UniPoly::constant(1);
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        UniPoly u2 = u0 - q * u1;
        UniPoly v2 = v0 - q * v1;
        r0 = r1; r1 = r;
        u0 = u1; u1 = u2;
        v0 = v1; v1 = v2;
    }
    if (!r0.is_zero()) {
        Rat lead = r0.coeff((std::size_t)r0.degree());
        Rat inv = Rat(1) / lead;
        r0 = r0 * inv;
        u0 = u0 * inv;
        v0 = v0 * inv;
    }
    return {r0, u0, v0};
}

}  // namespace polyhecke
