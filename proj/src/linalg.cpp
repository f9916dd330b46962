#include "polyhecke/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace polyhecke {

QMat QMat::identity(std::size_t n) {
    QMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMat QMat::from_rows(const std::vector<QVec>& rows) {
    if (rows.empty()) return QMat(0, 0);
    QMat m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_) throw std::invalid_argument("ragged rows");
        for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

QVec QMat::row(std::size_t i) const {
    QVec r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
}

std::vector<QVec> QMat::to_rows() const {
    std::vector<QVec> r;
    r.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) r.push_back(row(i));
    return r;
}

QMat QMat::transpose() const {
    QMat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

QMat QMat::operator*(const QMat& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product shape mismatch");
    QMat r(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            if (at(i, k) == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) r.at(i, j) += at(i, k) * rhs.at(k, j);
        }
    return r;
}

Rat QMat::det() const {
    if (rows_ != cols_) throw std::invalid_argument("det of non-square matrix");
    QMat m = *this;
    Rat d(1);
    for (std::size_t c = 0; c < cols_; ++c) {
        std::size_t piv = c;
        while (piv < rows_ && m.at(piv, c) == 0) ++piv;
        if (piv == rows_) return Rat(0);
        if (piv != c) {
            for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(piv, j), m.at(c, j));
            d = -d;
        }
        d *= m.at(c, c);
        for (std::size_t i = c + 1; i < rows_; ++i) {
            if (m.at(i, c) == 0) continue;
            Rat f = m.at(i, c) / m.at(c, c);
            for (std::size_t j = c; j < cols_; ++j) m.at(i, j) -= f * m.at(c, j);
        }
    }
    return d;
}

QMat QMat::rref() const {
    QMat m = *this;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t piv = r;
        while (piv < rows_ && m.at(piv, c) == 0) ++piv;
        if (piv == rows_) continue;
        if (piv != r)
            for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(piv, j), m.at(r, j));
        Rat inv = m.at(r, c);
        for (std::size_t j = 0; j < cols_; ++j) m.at(r, j) /= inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            Rat f = m.at(i, c);
            for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        ++r;
    }
    return m;
}

std::size_t QMat::rank() const {
    QMat m = rref();
    std::size_t r = 0;
    for (std::size_t i = 0; i < rows_; ++i) {
        bool nonzero = false;
        for (std::size_t j = 0; j < cols_; ++j)
            if (m.at(i, j) != 0) { nonzero = true; break; }
        if (nonzero) ++r;
    }
    return r;
}

std::optional<QMat> QMat::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
    QMat aug(rows_, 2 * cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_ + i) = 1;
    }
    aug = aug.rref();
    for (std::size_t i = 0; i < rows_; ++i)
        if (aug.at(i, i) != 1) return std::nullopt;
    QMat inv(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
    return inv;
}

QMat QMat::right_kernel() const {
    QMat m = rref();
    std::vector<long> pivot_col_of_row(rows_, -1);
    std::vector<bool> is_pivot(cols_, false);
    std::size_t r = 0;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (m.at(i, j) != 0) {
                pivot_col_of_row[i] = (long)j;
                is_pivot[j] = true;
                break;
            }
        }
        if (pivot_col_of_row[i] >= 0) ++r;
    }
    std::vector<QVec> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        QVec v(cols_, Rat(0));
        v[free] = 1;
        for (std::size_t i = 0; i < rows_; ++i) {
            long pc = pivot_col_of_row[i];
            if (pc >= 0) v[(std::size_t)pc] = -m.at(i, free);
        }
        basis.push_back(v);
    }
    return QMat::from_rows(basis);
}

std::string QMat::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << to_string(at(i, j));
    }
    os << "]";
    return os.str();
}

QVec solve_right(const QMat& a, const QVec& b) {
    if (a.rows() != a.cols() || b.size() != a.rows()) throw std::invalid_argument("solve shape mismatch");
    std::size_t n = a.rows();
    QMat aug(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, n) = b[i];
    }
    aug = aug.rref();
    QVec x(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (aug.at(i, i) != 1) throw std::invalid_argument("singular system");
        x[i] = aug.at(i, n);
    }
    return x;
}

QVec solve_left(const QMat& a, const QVec& b) { return solve_right(a.transpose(), b); }

Rat dot(const QVec& a, const QVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot size mismatch");
    Rat s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

QVec sub(const QVec& a, const QVec& b) {
    QVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

QVec add(const QVec& a, const QVec& b) {
    QVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

QVec scale(const QVec& a, const Rat& c) {
    QVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
    return r;
}

Rat dot_iq(const IVec& a, const QVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot size mismatch");
    Rat s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
    return s;
}

Int dot_ii(const IVec& a, const IVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot size mismatch");
    Int s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

QVec to_qvec(const IVec& v) {
    QVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
    return r;
}

IVec to_ivec(const QVec& v) {
    IVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!is_integer(v[i])) throw std::invalid_argument("vector entry not an integer: " + to_string(v[i]));
        r[i] = v[i].get_num();
    }
    return r;
}

QMat imat_to_qmat(const IMat& m) {
    std::vector<QVec> rows;
    rows.reserve(m.size());
    for (const auto& r : m) rows.push_back(to_qvec(r));
    return QMat::from_rows(rows);
}

IMat qmat_to_imat(const QMat& m) {
    IMat r;
    r.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) r.push_back(to_ivec(m.row(i)));
    return r;
}

IMat hnf(const IMat& a_in) {
    IMat a = a_in;
    std::size_t rows = a.size();
    if (rows == 0) return a;
    std::size_t cols = a[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        // Clear column c below row r by gcd row operations.
        while (true) {
            std::size_t piv = rows;
            for (std::size_t i = r; i < rows; ++i) {
                if (a[i][c] == 0) continue;
                if (piv == rows || cmp(abs(a[i][c]), abs(a[piv][c])) < 0) piv = i;
            }
            if (piv == rows) break;  // column is zero below r
            std::swap(a[piv], a[r]);
            bool cleared = true;
            for (std::size_t i = r + 1; i < rows; ++i) {
                if (a[i][c] == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), a[i][c].get_mpz_t(), a[r][c].get_mpz_t());
                for (std::size_t j = 0; j < cols; ++j) a[i][j] -= q * a[r][j];
                if (a[i][c] != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (a[r][c] == 0) continue;
        if (a[r][c] < 0)
            for (std::size_t j = 0; j < cols; ++j) a[r][j] = -a[r][j];
        // Reduce entries above the pivot into [0, pivot).
        for (std::size_t i = 0; i < r; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), a[i][c].get_mpz_t(), a[r][c].get_mpz_t());
            if (q != 0)
                for (std::size_t j = 0; j < cols; ++j) a[i][j] -= q * a[r][j];
        }
        ++r;
    }
    a.resize(r);  // drop zero rows
    return a;
}

IMat integer_left_kernel(const IMat& a) {
    std::size_t rows = a.size();
    if (rows == 0) return {};
    std::size_t cols = a[0].size();
    // HNF of [A | I]; rows whose A-part vanished carry a kernel basis in the
    // identity part.  Row operations over Z preserve the relation, and the
    // kernel of an integer matrix is automatically saturated.
    IMat aug(rows, IVec(cols + rows, Int(0)));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) aug[i][j] = a[i][j];
        aug[i][cols + i] = 1;
    }
    IMat h = hnf(aug);
    IMat kernel;
    for (const auto& row : h) {
        bool zero = true;
        for (std::size_t j = 0; j < cols; ++j)
            if (row[j] != 0) { zero = false; break; }
        if (!zero) continue;
        kernel.emplace_back(row.begin() + (long)cols, row.end());
    }
    return hnf(kernel);
}

IMat saturate(const IMat& a) {
    if (a.empty()) return {};
    // Z^n cap span_Q(rows a) = left kernel of any integer matrix whose
    // columns span the orthogonal complement.
    QMat q = imat_to_qmat(a);
    QMat comp = q.right_kernel();  // rows span the complement of the row space? no: kernel of x -> a*x
    // right_kernel of q gives {x : q x = 0}: vectors orthogonal to all rows.
    if (comp.rows() == 0) {
        // full rank: saturation is all of Z^n
        IMat id;
        for (std::size_t i = 0; i < q.cols(); ++i) {
            IVec e(q.cols(), Int(0));
            e[i] = 1;
            id.push_back(e);
        }
        return id;
    }
    // Clear denominators columnwise to get integer constraint matrix.
    std::vector<QVec> cols;
    for (std::size_t i = 0; i < comp.rows(); ++i) cols.push_back(comp.row(i));
    IMat constraint(q.cols(), IVec(cols.size(), Int(0)));
    for (std::size_t k = 0; k < cols.size(); ++k) {
        Int lcm(1);
        for (const auto& x : cols[k]) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
        for (std::size_t j = 0; j < q.cols(); ++j) {
            Rat v = cols[k][j] * Rat(lcm);
            constraint[j][k] = v.get_num();
        }
    }
    return integer_left_kernel(constraint);
}

IVec primitive_vector(const QVec& v) {
    Int lcm(1);
    for (const auto& x : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
    IVec w(v.size());
    Int g(0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        Rat s = v[i] * Rat(lcm);
        w[i] = s.get_num();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), w[i].get_mpz_t());
    }
    if (g == 0) throw std::invalid_argument("primitive_vector of zero vector");
    int sign = 0;
    for (const auto& x : w)
        if (x != 0) { sign = sgn(x); break; }
    if (sign < 0) g = -g;
    for (auto& x : w) x /= g;
    return w;
}

IVec primitive_ray(const QVec& v) {
    Int lcm(1);
    for (const auto& x : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
    IVec w(v.size());
    Int g(0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        Rat s = v[i] * Rat(lcm);
        w[i] = s.get_num();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), w[i].get_mpz_t());
    }
    if (g == 0) throw std::invalid_argument("primitive_ray of zero vector");
    for (auto& x : w) x /= g;
    return w;
}

Int imat_det(const IMat& a) {
    Rat d = imat_to_qmat(a).det();
    return d.get_num();
}

}  // namespace polyhecke
