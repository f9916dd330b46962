#include "polyhecke/lattice.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "polyhecke/numbers.hpp"

namespace polyhecke {

Lattice::Lattice(QMat basis) : basis_(std::move(basis)) {
    if (basis_.rows() != basis_.cols() || basis_.rows() == 0)
        throw std::invalid_argument("lattice basis must be square and nonempty");
    auto inv = basis_.inverse();
    if (!inv) throw std::invalid_argument("lattice basis is singular");
    inv_ = *inv;
}

Lattice Lattice::standard(int n) { return Lattice(QMat::identity((std::size_t)n)); }

QVec Lattice::coordinates(const QVec& point) const {
    if (point.size() != basis_.rows()) throw std::invalid_argument("point dimension mismatch");
    // x = c * basis  =>  c = x * basis^{-1}
    QVec c(point.size(), Rat(0));
    for (std::size_t j = 0; j < point.size(); ++j)
        for (std::size_t i = 0; i < point.size(); ++i) c[j] += point[i] * inv_.at(i, j);
    return c;
}

bool Lattice::contains(const QVec& point) const {
    for (const Rat& c : coordinates(point))
        if (!is_integer(c)) return false;
    return true;
}

bool Lattice::contains(const Lattice& other) const {
    for (std::size_t i = 0; i < other.basis_.rows(); ++i)
        if (!contains(other.basis_.row(i))) return false;
    return true;
}

Rat Lattice::covolume() const { return abs(basis_.det()); }

Int Lattice::index_of_sublattice(const Lattice& sub) const {
    if (!contains(sub)) throw std::invalid_argument("not a sublattice");
    Rat idx = sub.covolume() / covolume();
    if (!is_integer(idx)) throw std::logic_error("sublattice index not integral");
    return idx.get_num();
}

std::string Lattice::canonical_key() const {
    // Scale to an integer matrix, take the Hermite form, divide back.
    Int lcm(1);
    for (std::size_t i = 0; i < basis_.rows(); ++i)
        for (std::size_t j = 0; j < basis_.cols(); ++j)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), basis_.at(i, j).get_den_mpz_t());
    IMat scaled(basis_.rows(), IVec(basis_.cols()));
    for (std::size_t i = 0; i < basis_.rows(); ++i)
        for (std::size_t j = 0; j < basis_.cols(); ++j) {
            Rat v = basis_.at(i, j) * Rat(lcm);
            scaled[i][j] = v.get_num();
        }
    IMat h = hnf(scaled);
    std::ostringstream os;
    for (const auto& row : h) {
        for (const auto& x : row) os << to_string(Rat(x, lcm)) << " ";
        os << ";";
    }
    return os.str();
}

bool Lattice::operator==(const Lattice& o) const { return canonical_key() == o.canonical_key(); }

SuperlatticeSet enumerate_superlattices(int n, long p, int k) {
    if (!is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
    if (k < 1 || k > n) throw std::invalid_argument("level k out of range");
    SuperlatticeSet out;
    out.p = p;
    out.k = k;

    // Diagonal patterns: e_i in {0,1}, exactly k zeros.  Free entries a_ij
    // in [0,p) sit at positions with e_i = 0, e_j = 1, i < j.
    std::vector<int> pattern((std::size_t)n, 0);
    std::fill(pattern.begin(), pattern.begin() + (std::size_t)k, 0);
    std::fill(pattern.begin() + (std::size_t)k, pattern.end(), 1);
    std::sort(pattern.begin(), pattern.end());
    // iterate over all permutations of the multiset {0^k, 1^(n-k)}
    do {
        std::vector<std::pair<int, int>> free_pos;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (pattern[(std::size_t)i] == 0 && pattern[(std::size_t)j] == 1)
                    free_pos.emplace_back(i, j);
        long combos = 1;
        for (std::size_t t = 0; t < free_pos.size(); ++t) combos *= p;
        for (long idx = 0; idx < combos; ++idx) {
            IMat a((std::size_t)n, IVec((std::size_t)n, Int(0)));
            for (int i = 0; i < n; ++i) a[(std::size_t)i][(std::size_t)i] = pattern[(std::size_t)i] ? p : 1;
            long rem = idx;
            for (const auto& [i, j] : free_pos) {
                a[(std::size_t)i][(std::size_t)j] = rem % p;
                rem /= p;
            }
            QMat basis((std::size_t)n, (std::size_t)n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) basis.at((std::size_t)i, (std::size_t)j) = rat(a[(std::size_t)i][(std::size_t)j], Int(p));
            out.members.push_back(Superlattice{Lattice(std::move(basis)), std::move(a)});
        }
    } while (std::next_permutation(pattern.begin(), pattern.end()));

    return out;
}

FiniteSubspace reduction_mod_p(const Lattice& M, const Lattice& L, long p) {
    int n = M.dim();
    if (L.dim() != n) throw std::invalid_argument("dimension mismatch");
    // Check L subset M subset p^{-1}L.
    if (!M.contains(L)) throw std::invalid_argument("M does not contain L");
    FpMat gens;
    for (int i = 0; i < n; ++i) {
        // Row of M in L-coordinates, scaled by p: must be integral.
        QVec row = L.coordinates(M.basis().row((std::size_t)i));
        FpVec fp_row((std::size_t)n);
        for (int j = 0; j < n; ++j) {
            Rat scaled = row[(std::size_t)j] * Rat(p);
            if (!is_integer(scaled))
                throw std::invalid_argument("M is not contained in p^{-1}L");
            Int rem = scaled.get_num() % p;
            if (rem < 0) rem += p;
            fp_row[(std::size_t)j] = rem.get_si();
        }
        gens.push_back(std::move(fp_row));
    }
    return FiniteSubspace(p, n, std::move(gens));
}

std::vector<Lattice> enumerate_coindex_superlattices(int n, long p, int e) {
    if (!is_prime(p)) throw std::invalid_argument("p is not prime");
    if (e < 1) throw std::invalid_argument("exponent must be >= 1");
    // Scaling M -> p^e M identifies superlattices of coindex p^e with
    // integer lattices K, p^e Z^n <= K <= Z^n, of index p^{e(n-1)}.
    // Enumerate Hermite-form matrices with p-power diagonal and filter by
    // the containment p^e Z^n <= K.
    std::vector<Lattice> out;
    Int pe = int_pow(Int(p), (unsigned long)e);

    // exponent tuples (a_1..a_n), sum = e*(n-1), each 0 <= a_i <= e
    std::vector<int> a((std::size_t)n, 0);
    long target = (long)e * (n - 1);
    std::function<void(int, long)> rec = [&](int pos, long left) {
        if (pos == n) {
            if (left != 0) return;
            // diag d_i = p^{a_i}; above-diagonal entries h_{ij} in [0, d_j)
            // at positions i < j.
            std::vector<Int> diag((std::size_t)n);
            for (int i = 0; i < n; ++i) diag[(std::size_t)i] = int_pow(Int(p), (unsigned long)a[(std::size_t)i]);
            std::vector<std::pair<int, int>> free_pos;
            Int combos(1);
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (diag[(std::size_t)j] > 1) {
                        free_pos.emplace_back(i, j);
                        combos *= diag[(std::size_t)j];
                    }
            if (!combos.fits_slong_p() || combos > 2000000)
                throw std::runtime_error("coindex enumeration budget exceeded");
            long total = combos.get_si();
            for (long idx = 0; idx < total; ++idx) {
                IMat h((std::size_t)n, IVec((std::size_t)n, Int(0)));
                for (int i = 0; i < n; ++i) h[(std::size_t)i][(std::size_t)i] = diag[(std::size_t)i];
                long rem = idx;
                for (const auto& [i, j] : free_pos) {
                    long dj = diag[(std::size_t)j].get_si();
                    h[(std::size_t)i][(std::size_t)j] = rem % dj;
                    rem /= dj;
                }
                // Containment p^e Z^n <= K: p^e * unit vectors integral in K.
                // Equivalently p^e * H^{-1} is an integer matrix.
                QMat hq = imat_to_qmat(h);
                auto hinv = hq.inverse();
                bool contains = true;
                for (std::size_t i = 0; i < hq.rows() && contains; ++i)
                    for (std::size_t j = 0; j < hq.cols() && contains; ++j)
                        if (!is_integer(hinv->at(i, j) * Rat(pe))) contains = false;
                if (!contains) continue;
                // Candidate h may not be in Hermite form when reduced
                // entries coincide; h is already Hermite by construction
                // (diagonal positive, entries above reduced mod diagonal).
                QMat basis((std::size_t)n, (std::size_t)n);
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        basis.at((std::size_t)i, (std::size_t)j) = rat(h[(std::size_t)i][(std::size_t)j], pe);
                out.emplace_back(std::move(basis));
            }
            return;
        }
        for (int v = 0; v <= e && v <= left; ++v) {
            a[(std::size_t)pos] = v;
            rec(pos + 1, left - v);
        }
    };
    rec(0, target);
    return out;
}

}  // namespace polyhecke
