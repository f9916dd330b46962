#include "polyhecke/grassmann.hpp"

#include <algorithm>
#include <stdexcept>

#include "polyhecke/numbers.hpp"

namespace polyhecke {

Int grassmannian_count(int k, int n, const Int& p) {
    if (k < 0 || k > n) return Int(0);
    return gaussian_factorial((unsigned)n, p) /
           (gaussian_factorial((unsigned)k, p) * gaussian_factorial((unsigned)(n - k), p));
}

UniPoly gauss_binomial_poly(int k, int n) {
    if (k < 0 || k > n) return UniPoly();
    if (k == 0 || k == n) return UniPoly::constant(Rat(1));
    // [n k] = [n-1 k-1] + t^k [n-1 k]
    return gauss_binomial_poly(k - 1, n - 1) +
           UniPoly::monomial(Rat(1), (std::size_t)k) * gauss_binomial_poly(k, n - 1);
}

std::vector<FiniteSubspace> enumerate_subspaces(int k, int n, long p) {
    // budget: brute force only for p^n within ~10^5
    double size = 1;
    for (int i = 0; i < n; ++i) size *= (double)p;
    if (size > 1e5)
        throw std::runtime_error("subspace enumeration budget exceeded: p^n > 10^5");
    if (k < 0 || k > n) return {};

    std::vector<FiniteSubspace> out;
    // pivot column patterns 0 <= c_1 < ... < c_k < n
    std::vector<int> piv((std::size_t)k);
    for (int i = 0; i < k; ++i) piv[(std::size_t)i] = i;
    auto emit_pattern = [&]() {
        // free entries: row i, column c > piv[i], c not a pivot column
        std::vector<std::pair<int, int>> free_pos;
        std::vector<bool> is_piv((std::size_t)n, false);
        for (int c : piv) is_piv[(std::size_t)c] = true;
        for (int i = 0; i < k; ++i)
            for (int c = piv[(std::size_t)i] + 1; c < n; ++c)
                if (!is_piv[(std::size_t)c]) free_pos.emplace_back(i, c);
        long combos = 1;
        for (std::size_t t = 0; t < free_pos.size(); ++t) combos *= p;
        for (long idx = 0; idx < combos; ++idx) {
            FpMat basis((std::size_t)k, FpVec((std::size_t)n, 0));
            for (int i = 0; i < k; ++i) basis[(std::size_t)i][(std::size_t)piv[(std::size_t)i]] = 1;
            long rem = idx;
            for (const auto& [i, c] : free_pos) {
                basis[(std::size_t)i][(std::size_t)c] = rem % p;
                rem /= p;
            }
            out.emplace_back(p, n, std::move(basis));
        }
    };
    if (k == 0) {
        out.emplace_back(p, n);
        return out;
    }
    while (true) {
        emit_pattern();
        int i = k;
        bool advanced = false;
        while (i-- > 0) {
            if (piv[(std::size_t)i] != i + n - k) {
                ++piv[(std::size_t)i];
                for (int j = i + 1; j < k; ++j) piv[(std::size_t)j] = piv[(std::size_t)(j - 1)] + 1;
                advanced = true;
                break;
            }
        }
        if (!advanced) break;
    }
    return out;
}

Int nu_closed(int n, int k, int l, const Int& p) {
    return grassmannian_count(k, n, p) +
           (int_pow(p, (unsigned long)l) - 1) * grassmannian_count(k - 1, n - 1, p);
}

static FiniteSubspace standard_subspace(int l, int n, long p) {
    FpMat gens;
    for (int i = 0; i < l; ++i) {
        FpVec e((std::size_t)n, 0);
        e[(std::size_t)i] = 1;
        gens.push_back(std::move(e));
    }
    return FiniteSubspace(p, n, std::move(gens));
}

Int nu_bruteforce_with(int n, int k, long p, const FiniteSubspace& u) {
    Int total(0);
    for (const auto& w : enumerate_subspaces(k, n, p))
        total += int_pow(Int(p), (unsigned long)w.intersection_dim(u));
    return total;
}

Int nu_bruteforce(int n, int k, int l, long p) {
    return nu_bruteforce_with(n, k, p, standard_subspace(l, n, p));
}

Int nu_bundle_oracle(int n, int k, int l, long p) {
    FiniteSubspace u = standard_subspace(l, n, p);
    auto uvecs = u.all_vectors();
    Int total(0);
    for (const auto& w : enumerate_subspaces(k, n, p))
        for (const auto& v : uvecs)
            if (w.contains(v)) total += 1;
    return total;
}

UniPoly phi_polynomial(int n, int k, int l) {
    UniPoly g1 = gauss_binomial_poly(k, n);
    UniPoly g2 = gauss_binomial_poly(k - 1, n - 1);
    UniPoly tl = UniPoly::monomial(Rat(1), (std::size_t)l) - UniPoly::constant(Rat(1));
    UniPoly phi = g1 + tl * g2;
    for (long d = 0; d <= phi.degree(); ++d) {
        Rat c = phi.coeff((std::size_t)d);
        if (!is_integer(c) || c < 0)
            throw std::logic_error("phi polynomial has a non-positive-integer coefficient");
    }
    return phi;
}

MultiPoly schubert_phi_hat(int n, int k, long p) {
    std::vector<FiniteSubspace> flag;
    for (int j = 0; j <= n; ++j) flag.push_back(standard_subspace(j, n, p));
    MultiPoly out((std::size_t)n + 1);
    for (const auto& w : enumerate_subspaces(k, n, p)) {
        MultiPoly::Exponents e((std::size_t)n + 1, 0);
        for (int j = 0; j <= n; ++j) e[(std::size_t)j] = w.intersection_dim(flag[(std::size_t)j]);
        out.add_term(e, Rat(1));
    }
    // the coefficients are Schubert cell sizes: pure p-powers
    for (const auto& [e, c] : out.terms()) {
        Int v = c.get_num();
        while (v % p == 0) v /= p;
        if (v != 1) throw std::logic_error("phi-hat coefficient is not a pure p-power");
    }
    return out;
}

std::vector<Int> strata_counts_Y(int n, int k, int l, long p) {
    FiniteSubspace u = standard_subspace(l, n, p);
    std::vector<Int> y((std::size_t)std::min(k, l) + 1, Int(0));
    for (const auto& w : enumerate_subspaces(k, n, p)) {
        int j = w.intersection_dim(u);
        if (j >= (int)y.size()) throw std::logic_error("intersection dimension out of range");
        y[(std::size_t)j] += 1;
    }
    return y;
}

StrataX strata_counts_X(int n, long p, int k, const FiniteSubspace& vf, const FiniteSubspace& cf) {
    StrataX out;
    auto subs = enumerate_subspaces(k, n, p);
    for (const auto& w : subs) {
        int i = w.intersection_dim(vf);
        int j = w.intersection_dim(cf);
        out.counts[{i, j}] += 1;
    }
    // m_ij with S_j = a fixed j-subspace of cf: take the span of the first j
    // basis vectors of cf (independence of the choice is a test invariant).
    for (const auto& [ij, cnt] : out.counts) {
        auto [i, j] = ij;
        FpMat gens(cf.basis().begin(), cf.basis().begin() + j);
        FiniteSubspace sj(p, n, std::move(gens));
        Int m(0);
        for (const auto& w : subs)
            if (w.intersection_dim(vf) == i && w.intersection_dim(cf) == j && w.contains(sj)) m += 1;
        out.m[{i, j}] = m;
    }
    return out;
}

}  // namespace polyhecke
