#include "polyhecke/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace polyhecke {

namespace {

// Coordinates of x in the row span of s (consistent overdetermined system).
QVec coords_in_rowspan(const IMat& s, const QVec& x) {
    std::size_t d = s.size(), n = x.size();
    QMat aug(n, d + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < d; ++j) aug.at(i, j) = Rat(s[j][i]);
        aug.at(i, d) = x[i];
    }
    aug = aug.rref();
    QVec w(d, Rat(0));
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t lead = 0;
        while (lead < d + 1 && aug.at(i, lead) == 0) ++lead;
        if (lead == d + 1) continue;  // zero row
        if (lead == d) throw std::invalid_argument("point not in row span");
        w[lead] = aug.at(i, d);
    }
    return w;
}

int affine_rank(const std::vector<QVec>& pts) {
    if (pts.size() <= 1) return 0;
    std::vector<QVec> diffs;
    for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(sub(pts[i], pts[0]));
    return (int)QMat::from_rows(diffs).rank();
}

std::vector<QVec> imat_rows_to_qvecs(const IMat& m) {
    std::vector<QVec> r;
    r.reserve(m.size());
    for (const auto& row : m) r.push_back(to_qvec(row));
    return r;
}

Int cone_index_impl(const Cone& c) {
    if (c.generators.empty()) return Int(1);
    IMat sat = saturate(c.generators);
    std::size_t d = sat.size();
    if (d != c.generators.size()) throw std::invalid_argument("cone generators not linearly independent");
    QMat g(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        QVec w = coords_in_rowspan(sat, to_qvec(c.generators[i]));
        for (std::size_t j = 0; j < d; ++j) g.at(i, j) = w[j];
    }
    Rat det = abs(g.det());
    if (!is_integer(det) || det == 0) throw std::logic_error("cone index not a positive integer");
    return det.get_num();
}

}  // namespace

std::vector<SiftedFacet> sift_facets(const std::vector<QVec>& points) {
    std::size_t npts = points.size();
    if (npts == 0) throw std::invalid_argument("sift_facets: no points");
    std::size_t d = points[0].size();
    if (affine_rank(points) != (int)d)
        throw std::invalid_argument("sift_facets: points not full-dimensional");

    if (d == 1) {
        Rat mn = points[0][0], mx = points[0][0];
        for (const auto& p : points) {
            mn = std::min(mn, p[0]);
            mx = std::max(mx, p[0]);
        }
        SiftedFacet lo{IVec{Int(1)}, -mn, {}}, hi{IVec{Int(-1)}, mx, {}};
        for (std::size_t i = 0; i < npts; ++i) {
            if (points[i][0] == mn) lo.on.push_back((int)i);
            if (points[i][0] == mx) hi.on.push_back((int)i);
        }
        return {lo, hi};
    }

    std::map<std::pair<IVec, Rat>, SiftedFacet> found;
    std::vector<std::size_t> comb(d);
    for (std::size_t i = 0; i < d; ++i) comb[i] = i;
    auto next_comb = [&]() -> bool {
        std::size_t i = d;
        while (i-- > 0) {
            if (comb[i] != i + npts - d) {
                ++comb[i];
                for (std::size_t j = i + 1; j < d; ++j) comb[j] = comb[j - 1] + 1;
                return true;
            }
        }
        return false;
    };
    do {
        std::vector<QVec> diffs;
        for (std::size_t i = 1; i < d; ++i) diffs.push_back(sub(points[comb[i]], points[comb[0]]));
        QMat dm = QMat::from_rows(diffs);
        if (dm.rank() != d - 1) continue;
        QMat ker = dm.right_kernel();
        if (ker.rows() != 1) continue;
        IVec u = primitive_vector(ker.row(0));
        Rat lam = -dot_iq(u, points[comb[0]]);
        bool pos = false, neg = false;
        for (const auto& p : points) {
            Rat v = dot_iq(u, p) + lam;
            if (v > 0) pos = true;
            if (v < 0) neg = true;
            if (pos && neg) break;
        }
        if (pos && neg) continue;  // not supporting
        if (neg) {
            for (auto& x : u) x = -x;
            lam = -lam;
        }
        auto key = std::make_pair(u, lam);
        if (found.count(key)) continue;
        SiftedFacet f{u, lam, {}};
        for (std::size_t i = 0; i < npts; ++i)
            if (dot_iq(u, points[i]) + lam == 0) f.on.push_back((int)i);
        found.emplace(std::move(key), std::move(f));
    } while (next_comb());

    std::vector<SiftedFacet> out;
    out.reserve(found.size());
    for (auto& [k, f] : found) out.push_back(std::move(f));
    return out;
}

Rat volume_of_points(const std::vector<QVec>& points) {
    std::size_t d = points[0].size();
    if (d == 0) throw std::invalid_argument("volume_of_points: zero-dimensional ambient");
    if (d == 1) {
        Rat mn = points[0][0], mx = points[0][0];
        for (const auto& p : points) {
            mn = std::min(mn, p[0]);
            mx = std::max(mx, p[0]);
        }
        return mx - mn;
    }
    auto facets = sift_facets(points);
    QVec c(d, Rat(0));
    for (const auto& p : points) c = add(c, p);
    c = scale(c, rat(1, (long)points.size()));

    // pyramid decomposition from the centroid; heights measured in units of
    // the primitive normal functional, so facet volumes w.r.t. the induced
    // lattices recombine to the Z^d-normalized volume
    Rat total(0);
    for (const auto& f : facets) {
        Rat height = dot_iq(f.normal, c) + f.offset;
        IMat constraint(d, IVec(1));
        for (std::size_t i = 0; i < d; ++i) constraint[i][0] = f.normal[i];
        IMat s = integer_left_kernel(constraint);
        const QVec& base = points[(std::size_t)f.on[0]];
        std::vector<QVec> sub_pts;
        for (int id : f.on) sub_pts.push_back(coords_in_rowspan(s, sub(points[(std::size_t)id], base)));
        total += height * volume_of_points(sub_pts);
    }
    return total / Rat((long)d);
}

LatticePolytope::LatticePolytope(const std::vector<QVec>& vertices, Lattice ambient)
    : ambient_(std::move(ambient)) {
    n_ = ambient_.dim();
    if (n_ > 6) throw std::invalid_argument("dimension exceeds the supported desk scale (n <= 6)");
    if (vertices.empty()) throw std::invalid_argument("polytope needs vertices");

    std::vector<QVec> coords;
    std::set<QVec> seen;
    for (const auto& v : vertices) {
        if ((int)v.size() != n_) throw std::invalid_argument("vertex dimension mismatch");
        QVec c = ambient_.coordinates(v);
        for (const auto& x : c)
            if (!is_integer(x)) throw std::invalid_argument("vertex not in the ambient lattice");
        if (seen.insert(c).second) coords.push_back(c);
    }
    if (affine_rank(coords) != n_) throw std::invalid_argument("polytope is not full-dimensional");

    auto sifted = sift_facets(coords);

    // keep only actual vertices: points whose containing facet normals span Q^n
    std::vector<int> new_id(coords.size(), -1);
    for (std::size_t i = 0; i < coords.size(); ++i) {
        IMat normals;
        for (const auto& f : sifted)
            if (std::binary_search(f.on.begin(), f.on.end(), (int)i)) normals.push_back(f.normal);
        if (normals.empty() || imat_to_qmat(normals).rank() != (std::size_t)n_) continue;
        new_id[i] = (int)verts_.size();
        verts_.push_back(to_ivec(coords[i]));
    }
    // original coordinates of kept vertices: x = c * basis
    for (const auto& vc : verts_) {
        QVec x((std::size_t)n_, Rat(0));
        for (int col = 0; col < n_; ++col)
            for (int i = 0; i < n_; ++i)
                x[(std::size_t)col] += Rat(vc[(std::size_t)i]) * ambient_.basis().at((std::size_t)i, (std::size_t)col);
        verts_orig_.push_back(std::move(x));
    }

    for (const auto& f : sifted) {
        Facet ft;
        ft.normal = f.normal;
        if (!is_integer(f.offset)) throw std::logic_error("non-integral facet offset for lattice polytope");
        ft.offset = f.offset.get_num();
        for (int old : f.on)
            if (new_id[(std::size_t)old] >= 0) ft.vertex_ids.push_back(new_id[(std::size_t)old]);
        std::sort(ft.vertex_ids.begin(), ft.vertex_ids.end());
        facets_.push_back(std::move(ft));
    }
    std::sort(facets_.begin(), facets_.end(),
              [](const Facet& a, const Facet& b) { return a.vertex_ids < b.vertex_ids; });

    // face lattice: close facet vertex sets under intersection
    std::set<std::vector<int>> sets;
    std::vector<int> all((std::size_t)verts_.size());
    for (std::size_t i = 0; i < verts_.size(); ++i) all[i] = (int)i;
    sets.insert(all);
    for (const auto& f : facets_) sets.insert(f.vertex_ids);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<int>> cur(sets.begin(), sets.end());
        for (std::size_t i = 0; i < cur.size(); ++i)
            for (std::size_t j = i + 1; j < cur.size(); ++j) {
                std::vector<int> inter;
                std::set_intersection(cur[i].begin(), cur[i].end(), cur[j].begin(), cur[j].end(),
                                      std::back_inserter(inter));
                if (!inter.empty() && sets.insert(inter).second) grew = true;
            }
    }
    for (const auto& vs : sets) {
        Face face;
        face.vertex_ids = vs;
        std::vector<QVec> pts;
        for (int id : vs) pts.push_back(to_qvec(verts_[(std::size_t)id]));
        face.dim = affine_rank(pts);
        for (std::size_t fi = 0; fi < facets_.size(); ++fi)
            if (std::includes(facets_[fi].vertex_ids.begin(), facets_[fi].vertex_ids.end(), vs.begin(), vs.end()))
                face.facet_ids.push_back((int)fi);
        faces_.push_back(std::move(face));
    }
    std::sort(faces_.begin(), faces_.end(), [](const Face& a, const Face& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        return a.vertex_ids < b.vertex_ids;
    });

    simple_ = true;
    for (const auto& f : faces_)
        if (f.dim == 0 && (int)f.facet_ids.size() != n_) simple_ = false;
}

std::vector<QVec> LatticePolytope::vertices_original() const { return verts_orig_; }

std::vector<int> LatticePolytope::faces_of_dim(int d) const {
    std::vector<int> out;
    for (std::size_t i = 0; i < faces_.size(); ++i)
        if (faces_[i].dim == d) out.push_back((int)i);
    return out;
}

int LatticePolytope::face_index_of_vertex_set(const std::vector<int>& vertex_ids) const {
    std::vector<int> key = vertex_ids;
    std::sort(key.begin(), key.end());
    for (std::size_t i = 0; i < faces_.size(); ++i)
        if (faces_[i].vertex_ids == key) return (int)i;
    throw std::invalid_argument("no face with the given vertex set");
}

int LatticePolytope::top_face() const {
    for (std::size_t i = 0; i < faces_.size(); ++i)
        if (faces_[i].dim == n_) return (int)i;
    throw std::logic_error("missing top face");
}

Cone LatticePolytope::normal_cone(int face_index) const {
    if (!simple_) throw std::invalid_argument("not simple");
    const Face& f = faces_.at((std::size_t)face_index);
    Cone c;
    for (int fi : f.facet_ids) c.generators.push_back(facets_[(std::size_t)fi].normal);
    if ((int)c.generators.size() != n_ - f.dim)
        throw std::logic_error("simple polytope face has wrong number of containing facets");
    c.index = cone_index_impl(c);
    return c;
}

Int cone_index(const Cone& c) { return cone_index_impl(c); }

Rat volume(const LatticePolytope& p) {
    return volume_of_points(imat_rows_to_qvecs(p.vertices()));
}

Rat face_volume(const LatticePolytope& p, int face_index) {
    const Face& f = p.faces().at((std::size_t)face_index);
    if (f.dim == 0) return Rat(1);
    std::vector<QVec> pts;
    for (int id : f.vertex_ids) pts.push_back(to_qvec(p.vertices()[(std::size_t)id]));
    if (f.dim == p.dim()) return volume_of_points(pts);
    std::vector<QVec> diffs;
    for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(sub(pts[i], pts[0]));
    IMat dirs;
    for (const auto& dvec : diffs) dirs.push_back(to_ivec(dvec));
    IMat s = saturate(dirs);
    std::vector<QVec> local;
    for (const auto& pt : pts) local.push_back(coords_in_rowspan(s, sub(pt, pts[0])));
    return volume_of_points(local);
}

Rat vol_l(const LatticePolytope& p, int l) {
    Rat total(0);
    for (int fi : p.faces_of_dim(l)) total += face_volume(p, fi);
    return total;
}

Fan normal_fan(const LatticePolytope& p) {
    if (!p.is_simple()) throw std::invalid_argument("not simple");
    Fan fan;
    for (std::size_t i = 0; i < p.faces().size(); ++i) fan.cones.push_back(p.normal_cone((int)i));
    return fan;
}

bool is_nonsingular(const LatticePolytope& p) {
    if (!p.is_simple()) return false;
    for (int vi : p.faces_of_dim(0))
        if (p.normal_cone(vi).index != 1) return false;
    return true;
}

std::vector<GammaPoint> parallelepiped_points(const Cone& c) {
    std::vector<GammaPoint> out;
    if (c.generators.empty()) {
        out.push_back(GammaPoint{IVec{}, QVec{}});
        return out;
    }
    std::size_t n = c.generators[0].size();
    IMat sat = saturate(c.generators);
    std::size_t d = sat.size();
    QMat g(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        QVec w = coords_in_rowspan(sat, to_qvec(c.generators[i]));
        for (std::size_t j = 0; j < d; ++j) g.at(i, j) = w[j];
    }
    auto ginv = g.inverse();
    if (!ginv) throw std::invalid_argument("cone generators not independent");
    std::vector<long> lo(d, 0), hi(d, 0);
    for (std::size_t j = 0; j < d; ++j) {
        Rat mn(0), mx(0);
        for (std::size_t i = 0; i < d; ++i) {
            if (g.at(i, j) > 0) mx += g.at(i, j);
            else mn += g.at(i, j);
        }
        lo[j] = (long)ceil_rat(mn).get_si();
        hi[j] = (long)floor_rat(mx).get_si();
    }
    std::vector<long> z = lo;
    while (true) {
        QVec rho(d, Rat(0));
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t i = 0; i < d; ++i) rho[j] += Rat(z[i]) * ginv->at(i, j);
        bool inside = true;
        for (const auto& r : rho)
            if (r < 0 || r >= 1) { inside = false; break; }
        if (inside) {
            IVec pt(n, Int(0));
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < n; ++j) pt[j] += Int(z[i]) * sat[i][j];
            out.push_back(GammaPoint{std::move(pt), std::move(rho)});
        }
        std::size_t j = 0;
        while (j < d && z[j] == hi[j]) {
            z[j] = lo[j];
            ++j;
        }
        if (j == d) break;
        ++z[j];
    }
    std::sort(out.begin(), out.end(), [](const GammaPoint& a, const GammaPoint& b) { return a.point < b.point; });
    if (Int((long)out.size()) != c.index)
        throw std::logic_error("parallelepiped point count does not equal the cone index");
    return out;
}

Cone normal_cone_over(const LatticePolytope& p, const Lattice& m, int face_index) {
    if (!p.is_simple()) throw std::invalid_argument("not simple");
    const Face& f = p.faces().at((std::size_t)face_index);
    Cone c;
    for (int fi : f.facet_ids) {
        QVec ray = m.coordinates(to_qvec(p.facets()[(std::size_t)fi].normal));
        c.generators.push_back(primitive_ray(ray));
    }
    c.index = cone_index_impl(c);
    return c;
}

LatticePolytope hecke_image(const LatticePolytope& p, const Lattice& m) {
    std::vector<QVec> new_coords;
    for (const auto& v : p.vertices_original()) new_coords.push_back(m.coordinates(v));
    for (const auto& c : new_coords)
        for (const auto& x : c)
            if (!is_integer(x)) throw std::invalid_argument("polytope vertex not in the target lattice");
    return LatticePolytope::standard(new_coords);
}

}  // namespace polyhecke
