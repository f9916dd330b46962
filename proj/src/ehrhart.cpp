#include "polyhecke/ehrhart.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <stdexcept>

namespace polyhecke {

namespace {

// caps chosen so every intermediate in the scan fits comfortably in int64:
// |normal * coordinate| <= 2^40 and |offset * t| <= 2^40, summed over at
// most a handful of terms
constexpr long long kCoordCap = 1LL << 20;
constexpr long long kOffsetCap = 1LL << 40;

long long checked_ll(const Int& v, long long cap, const char* what) {
    if (!v.fits_slong_p()) throw std::runtime_error(std::string("counting budget exceeded: ") + what);
    long long x = v.get_si();
    if (x >= cap || x <= -cap)
        throw std::runtime_error(std::string("counting budget exceeded: ") + what);
    return x;
}

// Count Z^n points of the dilate t*Q for an integer-vertex polytope Q given
// by facet data.  Enumerates the bounding box in all coordinates but one and
// solves each facet inequality exactly for the remaining coordinate, so the
// cost is governed by an (n-1)-dimensional box.
Int count_dilate(const IMat& verts, const std::vector<Facet>& facets, long t) {
    std::size_t n = verts[0].size();
    std::vector<long long> lo(n), hi(n);
    for (std::size_t j = 0; j < n; ++j) {
        Int mn = verts[0][j], mx = verts[0][j];
        for (const auto& v : verts) {
            mn = std::min(mn, v[j]);
            mx = std::max(mx, v[j]);
        }
        lo[j] = checked_ll(mn * t, kCoordCap, "box");
        hi[j] = checked_ll(mx * t, kCoordCap, "box");
    }
    // innermost = coordinate with the largest extent
    std::size_t inner = 0;
    for (std::size_t j = 1; j < n; ++j)
        if (hi[j] - lo[j] > hi[inner] - lo[inner]) inner = j;

    struct FacetLL {
        std::vector<long long> u;
        long long lam;
    };
    std::vector<FacetLL> fs;
    for (const auto& f : facets) {
        FacetLL g;
        for (std::size_t j = 0; j < n; ++j) g.u.push_back(checked_ll(f.normal[j], kCoordCap, "normal"));
        g.lam = checked_ll(f.offset * t, kOffsetCap, "offset");
        fs.push_back(std::move(g));
    }

    std::vector<long long> x(n);
    for (std::size_t j = 0; j < n; ++j) x[j] = lo[j];
    Int total(0);
    while (true) {
        // interval for x[inner] under all facet constraints
        long long ival_lo = lo[inner], ival_hi = hi[inner];
        bool empty = false;
        for (const auto& f : fs) {
            long long rest = f.lam;
            for (std::size_t j = 0; j < n; ++j)
                if (j != inner) rest += f.u[j] * x[j];
            long long a = f.u[inner];
            if (a == 0) {
                if (rest < 0) { empty = true; break; }
            } else if (a > 0) {
                // x >= -rest/a, rounded up
                long long q = -rest >= 0 ? (-rest + a - 1) / a : -((rest) / a);
                ival_lo = std::max(ival_lo, q);
            } else {
                // a < 0: x <= rest/(-a), rounded down
                long long b = -a;
                long long q = rest >= 0 ? rest / b : -((-rest + b - 1) / b);
                ival_hi = std::min(ival_hi, q);
            }
            if (ival_lo > ival_hi) { empty = true; break; }
        }
        if (!empty && ival_hi >= ival_lo) total += Int((long)(ival_hi - ival_lo + 1));

        // odometer over the outer coordinates
        std::size_t j = 0;
        while (j < n && (j == inner || x[j] == hi[j])) {
            if (j != inner) x[j] = lo[j];
            ++j;
        }
        if (j == n) break;
        ++x[j];
    }
    return total;
}

}  // namespace

Int count_points(const LatticePolytope& p, const Lattice& m, long t) {
    if (t < 0) throw std::invalid_argument("negative dilation");
    if (t == 0) return Int(1);

    if (m.basis() == p.ambient().basis())
        return count_dilate(p.vertices(), p.facets(), t);

    // re-express in M coordinates; the transformed vertices must be integral
    LatticePolytope image = hecke_image(p, m);
    return count_dilate(image.vertices(), image.facets(), t);
}

EhrhartPolynomial ehrhart(const LatticePolytope& p, const Lattice& m) {
    int n = p.dim();
    EhrhartPolynomial e;
    std::vector<std::pair<Rat, Rat>> pts;
    // build the image once so the facet derivation is shared across dilates
    const LatticePolytope* poly = &p;
    std::optional<LatticePolytope> image;
    if (!(m.basis() == p.ambient().basis())) {
        image.emplace(hecke_image(p, m));
        poly = &*image;
    }
    for (long t = 0; t <= n; ++t) {
        Int c = t == 0 ? Int(1) : count_points(*poly, poly->ambient(), t);
        e.support.emplace_back(t, c);
        pts.emplace_back(Rat((long)t), Rat(c));
    }
    e.poly = interpolate(pts);
    if (e.poly.degree() != n) throw std::logic_error("Ehrhart polynomial has unexpected degree");
    if (e.poly.coeff(0) != 1) throw std::logic_error("Ehrhart polynomial must have constant term 1");
    return e;
}

UniPoly regularized(const EhrhartPolynomial& e, const LatticePolytope& p) {
    return e.poly.drop_degree((std::size_t)p.dim());
}

}  // namespace polyhecke
