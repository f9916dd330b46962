#include "polyhecke/multipoly.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace polyhecke {

MultiPoly MultiPoly::constant(std::size_t nvars, const Rat& v) {
    MultiPoly p(nvars);
    p.add_term(Exponents(nvars, 0), v);
    return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t index) {
    MultiPoly p(nvars);
    Exponents e(nvars, 0);
    e.at(index) = 1;
    p.add_term(e, Rat(1));
    return p;
}

Rat MultiPoly::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

int MultiPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int x : e) s += x;
        if (s > d) d = s;
    }
    return d;
}

void MultiPoly::add_term(const Exponents& e, const Rat& c) {
    if (e.size() != nvars_) throw std::invalid_argument("exponent vector length mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("variable set mismatch");
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("variable set mismatch");
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("variable set mismatch");
    MultiPoly r(nvars_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            Exponents e = e1;
            for (std::size_t i = 0; i < nvars_; ++i) e[i] += e2[i];
            r.add_term(e, c1 * c2);
        }
    return r;
}

MultiPoly MultiPoly::operator*(const Rat& s) const {
    MultiPoly r(nvars_);
    if (s == 0) return r;
    for (const auto& [e, c] : terms_) r.add_term(e, c * s);
    return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly r = MultiPoly::constant(nvars_, Rat(1));
    for (unsigned i = 0; i < e; ++i) r = r * (*this);
    return r;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponents d = e;
        d[var] -= 1;
        r.add_term(d, c * Rat(e[var]));
    }
    return r;
}

MultiPoly MultiPoly::derivative_multi(const Exponents& e) const {
    MultiPoly r = *this;
    for (std::size_t i = 0; i < e.size(); ++i)
        for (int k = 0; k < e[i]; ++k) r = r.derivative(i);
    return r;
}

Rat MultiPoly::eval(const QVec& point) const {
    if (point.size() != nvars_) throw std::invalid_argument("eval point size mismatch");
    Rat s(0);
    for (const auto& [e, c] : terms_) {
        Rat m = c;
        for (std::size_t i = 0; i < nvars_; ++i)
            for (int k = 0; k < e[i]; ++k) m *= point[i];
        s += m;
    }
    return s;
}

MultiPoly MultiPoly::embed(std::size_t new_nvars, const std::vector<std::size_t>& map) const {
    MultiPoly r(new_nvars);
    for (const auto& [e, c] : terms_) {
        Exponents ne(new_nvars, 0);
        for (std::size_t i = 0; i < nvars_; ++i) ne.at(map.at(i)) += e[i];
        r.add_term(ne, c);
    }
    return r;
}

std::string MultiPoly::str(const std::string& stem) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        Rat a = abs(c);
        bool all_zero = true;
        for (int x : e)
            if (x) all_zero = false;
        if (a != 1 || all_zero) os << to_string(a);
        bool need_star = (a != 1);
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (need_star) os << "*";
            os << stem << i;
            if (e[i] > 1) os << "^" << e[i];
            need_star = true;
        }
        first = false;
    }
    return os.str();
}

std::vector<MultiPoly::Exponents> exponents_up_to(std::size_t nvars, int max_total) {
    std::vector<MultiPoly::Exponents> out;
    MultiPoly::Exponents cur(nvars, 0);
    // odometer over exponent vectors with sum <= max_total
    std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int left) {
        if (pos == nvars) {
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[pos] = v;
            rec(pos + 1, left - v);
        }
        cur[pos] = 0;
    };
    rec(0, max_total);
    return out;
}

}  // namespace polyhecke
