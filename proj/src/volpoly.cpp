#include "polyhecke/volpoly.hpp"

#include <algorithm>
#include <numeric>
#include <functional>
#include <random>
#include <set>
#include <stdexcept>

namespace polyhecke {

namespace {

// Vertices of P(h): each vertex of the simple polytope P is the solution of
// its n facet equalities with offsets shifted by h.
std::vector<QVec> vertices_at_offset(const LatticePolytope& p, const QVec& h) {
    int n = p.dim();
    std::vector<QVec> out;
    for (int vi : p.faces_of_dim(0)) {
        const Face& v = p.faces()[(std::size_t)vi];
        QMat a((std::size_t)n, (std::size_t)n);
        QVec b((std::size_t)n);
        for (int row = 0; row < n; ++row) {
            const Facet& f = p.facets()[(std::size_t)v.facet_ids[(std::size_t)row]];
            for (int col = 0; col < n; ++col) a.at((std::size_t)row, (std::size_t)col) = Rat(f.normal[(std::size_t)col]);
            b[(std::size_t)row] = -Rat(f.offset) - h[(std::size_t)v.facet_ids[(std::size_t)row]];
        }
        out.push_back(solve_right(a, b));
    }
    return out;
}

// Strict validity of every vertex against every non-defining facet; this
// pins the combinatorial type of P(h) for a simple polytope.
bool offset_type_stable(const LatticePolytope& p, const QVec& h, const std::vector<QVec>& verts) {
    auto vertex_faces = p.faces_of_dim(0);
    for (std::size_t i = 0; i < verts.size(); ++i) {
        const Face& v = p.faces()[(std::size_t)vertex_faces[i]];
        for (std::size_t fi = 0; fi < p.facets().size(); ++fi) {
            const Facet& f = p.facets()[fi];
            Rat val = dot_iq(f.normal, verts[i]) + Rat(f.offset) + h[fi];
            bool defining = std::find(v.facet_ids.begin(), v.facet_ids.end(), (int)fi) != v.facet_ids.end();
            if (defining ? val != 0 : val <= 0) return false;
        }
    }
    return true;
}

MultiPoly simplex_volume_polynomial(const LatticePolytope& p) {
    // Any simplex: P(h) is similar to P, so Vol P(h) = Vol P * c(h)^n with
    // c affine in h.  Solve <d,u_i> + lambda'_i + h_i = c * lambda'_i for
    // (c, d) after translating the centroid to the origin (lambda'_i > 0).
    int n = p.dim();
    std::size_t m = p.facets().size();
    QVec centroid((std::size_t)n, Rat(0));
    for (const auto& v : p.vertices())
        for (int j = 0; j < n; ++j) centroid[(std::size_t)j] += Rat(v[(std::size_t)j]);
    centroid = scale(centroid, rat(1, (long)p.vertices().size()));

    QVec lam(m);
    for (std::size_t i = 0; i < m; ++i)
        lam[i] = Rat(p.facets()[i].offset) + dot_iq(p.facets()[i].normal, centroid);

    QMat a(m, m);  // m = n + 1 for a simplex
    if (m != (std::size_t)n + 1) throw std::logic_error("simplex facet count");
    for (std::size_t i = 0; i < m; ++i) {
        a.at(i, 0) = lam[i];
        for (int j = 0; j < n; ++j) a.at(i, (std::size_t)j + 1) = -Rat(p.facets()[i].normal[(std::size_t)j]);
    }
    QVec gamma(m);
    for (std::size_t which = 0; which < m; ++which) {
        QVec b(m);
        for (std::size_t i = 0; i < m; ++i) b[i] = lam[i] + (i == which ? Rat(1) : Rat(0));
        QVec sol = solve_right(a, b);
        gamma[which] = sol[0] - 1;  // c(e_which) = 1 + gamma
    }
    MultiPoly c_of_h = MultiPoly::constant(m, Rat(1));
    for (std::size_t i = 0; i < m; ++i)
        c_of_h = c_of_h + MultiPoly::variable(m, i) * gamma[i];
    return c_of_h.pow((unsigned)n) * volume(p);
}

// Coordinate blocks: connected components of the facet-normal supports.
std::vector<int> coordinate_components(const LatticePolytope& p) {
    int n = p.dim();
    std::vector<int> comp((std::size_t)n);
    std::iota(comp.begin(), comp.end(), 0);
    std::function<int(int)> find = [&](int x) { return comp[(std::size_t)x] == x ? x : comp[(std::size_t)x] = find(comp[(std::size_t)x]); };
    for (const auto& f : p.facets()) {
        int first = -1;
        for (int j = 0; j < n; ++j) {
            if (f.normal[(std::size_t)j] == 0) continue;
            if (first < 0) first = j;
            else comp[(std::size_t)find(j)] = find(first);
        }
    }
    for (int j = 0; j < n; ++j) find(j);
    for (int j = 0; j < n; ++j) comp[(std::size_t)j] = find(j);
    return comp;
}

MultiPoly generic_volume_polynomial(const LatticePolytope& p);

MultiPoly volume_polynomial_dispatch(const LatticePolytope& p) {
    if (!p.is_simple()) throw std::invalid_argument("not simple");
    int n = p.dim();
    std::size_t m = p.facets().size();

    if (p.vertices().size() == (std::size_t)n + 1) return simplex_volume_polynomial(p);

    // coordinate-aligned product structure (only meaningful for the
    // standard ambient lattice, which is all this library constructs)
    std::vector<int> comp = coordinate_components(p);
    std::vector<int> roots;
    for (int j = 0; j < n; ++j)
        if (std::find(roots.begin(), roots.end(), comp[(std::size_t)j]) == roots.end()) roots.push_back(comp[(std::size_t)j]);
    if (roots.size() > 1) {
        MultiPoly result = MultiPoly::constant(m, Rat(1));
        std::size_t matched_vertices = 1;
        for (int root : roots) {
            std::vector<int> cols;
            for (int j = 0; j < n; ++j)
                if (comp[(std::size_t)j] == root) cols.push_back(j);
            // factor polytope: projection of the vertex set
            std::set<QVec> proj;
            for (const auto& v : p.vertices()) {
                QVec q;
                for (int j : cols) q.push_back(Rat(v[(std::size_t)j]));
                proj.insert(q);
            }
            std::vector<QVec> fverts(proj.begin(), proj.end());
            LatticePolytope factor = LatticePolytope::standard(fverts);
            matched_vertices *= factor.vertices().size();
            // map factor facets to facets of p by (projected normal, offset)
            std::vector<std::size_t> var_map(factor.facets().size());
            for (std::size_t ff = 0; ff < factor.facets().size(); ++ff) {
                bool matched = false;
                for (std::size_t pf = 0; pf < m && !matched; ++pf) {
                    const Facet& big = p.facets()[pf];
                    if (big.offset != factor.facets()[ff].offset) continue;
                    bool same = true;
                    std::size_t ci = 0;
                    for (int j = 0; j < n; ++j) {
                        Int expect(0);
                        if (ci < cols.size() && cols[ci] == j) {
                            expect = factor.facets()[ff].normal[ci];
                            ++ci;
                        }
                        if (big.normal[(std::size_t)j] != expect) { same = false; break; }
                    }
                    if (same) {
                        var_map[ff] = pf;
                        matched = true;
                    }
                }
                if (!matched) throw std::logic_error("product facet matching failed");
            }
            result = result * volume_polynomial_dispatch(factor).embed(m, var_map);
        }
        if (matched_vertices == p.vertices().size()) return result;
        // not a genuine product; fall through
    }

    if (n > 3)
        throw std::invalid_argument(
            "generic volume polynomial supported only for n <= 3 (closed forms cover simplices and products)");
    return generic_volume_polynomial(p);
}

MultiPoly generic_volume_polynomial(const LatticePolytope& p) {
    int n = p.dim();
    std::size_t m = p.facets().size();
    Int lam_max(0);
    for (const auto& f : p.facets()) { Int a = abs(f.offset); if (a > lam_max) lam_max = a; }
    Rat radius = rat(1, 1) / Rat(4 * lam_max + 4);

    auto exps = exponents_up_to(m, n);
    for (int attempt = 0; attempt < 3; ++attempt) {
        Rat eps = radius / Rat((long)std::max(n, 1)) / rat_pow(Rat(4), attempt + 1);
        bool stable = true;

        // samples on the principal lattice {eps * a : |a| <= n}
        std::vector<QVec> samples;
        std::vector<Rat> values;
        for (const auto& a : exps) {
            QVec h(m);
            for (std::size_t j = 0; j < m; ++j) h[j] = eps * Rat(a[j]);
            auto verts = vertices_at_offset(p, h);
            if (!offset_type_stable(p, h, verts)) { stable = false; break; }
            samples.push_back(h);
            values.push_back(volume_of_points(verts));
        }
        if (!stable) continue;

        // solve for the coefficients over monomials of total degree <= n
        std::size_t dim = exps.size();
        QMat aug(dim, dim + 1);
        for (std::size_t r = 0; r < dim; ++r) {
            for (std::size_t c = 0; c < dim; ++c) {
                Rat v(1);
                for (std::size_t j = 0; j < m; ++j)
                    for (int e = 0; e < exps[c][j]; ++e) v *= samples[r][j];
                aug.at(r, c) = v;
            }
            aug.at(r, dim) = values[r];
        }
        aug = aug.rref();
        MultiPoly poly(m);
        bool solved = true;
        for (std::size_t r = 0; r < dim; ++r) {
            if (aug.at(r, r) != 1) { solved = false; break; }
            poly.add_term(exps[r], aug.at(r, dim));
        }
        if (!solved) continue;

        // held-out consistency: off-grid rational points inside the radius
        std::mt19937 rng(12345);
        bool consistent = true;
        for (int trial = 0; trial < 5 && consistent; ++trial) {
            QVec h(m, Rat(0));
            int budget = 2 * n;
            for (std::size_t j = 0; j < m; ++j) {
                int cap = std::min(budget + 1, 4);
                int pick = cap >= 1 ? (int)(rng() % (unsigned)cap) : 0;
                h[j] = eps * rat(pick, 2);  // half-integer grid points
                budget -= pick;
            }
            auto verts = vertices_at_offset(p, h);
            if (!offset_type_stable(p, h, verts)) { consistent = false; break; }
            if (poly.eval(h) != volume_of_points(verts)) {
                throw std::runtime_error("volume polynomial interpolation inconsistent on held-out samples");
            }
        }
        if (!consistent) continue;
        return poly;
    }
    throw std::runtime_error("volume polynomial sampling failed: combinatorial type unstable at all grid sizes");
}

}  // namespace

Rat volume_at_offset(const LatticePolytope& p, const QVec& h) {
    if (!p.is_simple()) throw std::invalid_argument("not simple");
    if (h.size() != p.facets().size()) throw std::invalid_argument("offset size mismatch");
    auto verts = vertices_at_offset(p, h);
    if (!offset_type_stable(p, h, verts))
        throw std::runtime_error("offset changes the combinatorial type");
    return volume_of_points(verts);
}

MultiPoly volume_polynomial(const LatticePolytope& p) {
    MultiPoly poly = volume_polynomial_dispatch(p);
    if (poly.total_degree() != p.dim()) throw std::logic_error("volume polynomial degree mismatch");
    if (poly.constant_term() != volume(p)) throw std::logic_error("volume polynomial constant term mismatch");
    return poly;
}

}  // namespace polyhecke
