#include "polyhecke/fpspace.hpp"

#include <sstream>
#include <stdexcept>

namespace polyhecke {

long fp_inverse(long a, long p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) throw std::domain_error("inverse of 0 mod p");
    long t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
        long q = r / nr;
        t -= q * nt; std::swap(t, nt);
        r -= q * nr; std::swap(r, nr);
    }
    if (t < 0) t += p;
    return t;
}

int fp_rref(FpMat& m, long p) {
    if (m.empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] % p == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        long inv = fp_inverse(m[r][c], p);
        for (std::size_t j = 0; j < cols; ++j) m[r][j] = (m[r][j] % p * inv % p + p) % p;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            long f = ((m[i][c] % p) + p) % p;
            if (f == 0) continue;
            for (std::size_t j = 0; j < cols; ++j)
                m[i][j] = ((m[i][j] - f * m[r][j]) % p + p) % p;
        }
        ++r;
    }
    for (auto& row : m)
        for (auto& x : row) x = ((x % p) + p) % p;
    return (int)r;
}

int fp_rank(FpMat m, long p) { return fp_rref(m, p); }

FiniteSubspace::FiniteSubspace(long p, int n, FpMat generators) : p_(p), n_(n) {
    int rank = fp_rref(generators, p);
    generators.resize((std::size_t)rank);
    basis_ = std::move(generators);
}

bool FiniteSubspace::contains(const FpVec& v) const {
    FpVec w = v;
    for (auto& x : w) x = ((x % p_) + p_) % p_;
    for (const auto& row : basis_) {
        std::size_t lead = 0;
        while (lead < row.size() && row[lead] == 0) ++lead;
        if (lead == row.size()) continue;
        long f = w[lead] % p_;
        if (f == 0) continue;
        for (std::size_t j = 0; j < w.size(); ++j) w[j] = ((w[j] - f * row[j]) % p_ + p_) % p_;
    }
    for (long x : w)
        if (x % p_ != 0) return false;
    return true;
}

bool FiniteSubspace::contains(const FiniteSubspace& other) const {
    for (const auto& row : other.basis_)
        if (!contains(row)) return false;
    return true;
}

FiniteSubspace FiniteSubspace::sum(const FiniteSubspace& other) const {
    FpMat gens = basis_;
    gens.insert(gens.end(), other.basis_.begin(), other.basis_.end());
    return FiniteSubspace(p_, n_, std::move(gens));
}

int FiniteSubspace::intersection_dim(const FiniteSubspace& other) const {
    return dim() + other.dim() - sum(other).dim();
}

std::vector<FpVec> FiniteSubspace::all_vectors() const {
    std::vector<FpVec> out;
    long count = 1;
    for (int i = 0; i < dim(); ++i) count *= p_;
    out.reserve((std::size_t)count);
    std::vector<long> coef((std::size_t)dim(), 0);
    for (long idx = 0; idx < count; ++idx) {
        long x = idx;
        for (auto& c : coef) {
            c = x % p_;
            x /= p_;
        }
        FpVec v((std::size_t)n_, 0);
        for (std::size_t i = 0; i < coef.size(); ++i)
            for (std::size_t j = 0; j < (std::size_t)n_; ++j)
                v[j] = (v[j] + coef[i] * basis_[i][j]) % p_;
        out.push_back(v);
    }
    return out;
}

std::string FiniteSubspace::str() const {
    std::ostringstream os;
    os << "<";
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        os << (i ? ", " : "") << "(";
        for (std::size_t j = 0; j < basis_[i].size(); ++j) os << (j ? "," : "") << basis_[i][j];
        os << ")";
    }
    os << ">";
    return os.str();
}

}  // namespace polyhecke
