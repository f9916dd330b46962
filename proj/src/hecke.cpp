#include "polyhecke/hecke.hpp"

#include <sstream>
#include <stdexcept>

#include "polyhecke/grassmann.hpp"
#include "polyhecke/numbers.hpp"
#include "polyhecke/parallel.hpp"

namespace polyhecke {

namespace {

void check_budget(const LatticePolytope& p, long prime) {
    if (p.dim() > 4 || prime > 5)
        throw std::runtime_error("Hecke budget exceeded (supported: n <= 4, p <= 5)");
}

FiniteSubspace reduce_rational_span(const IMat& dirs, int n, long prime) {
    // reduction of a rational subspace: saturated integer basis mod p
    if (dirs.empty()) return FiniteSubspace(prime, n);
    IMat sat = saturate(dirs);
    FpMat gens;
    for (const auto& row : sat) {
        FpVec v((std::size_t)n);
        for (int j = 0; j < n; ++j) {
            Int r = row[(std::size_t)j] % prime;
            if (r < 0) r += prime;
            v[(std::size_t)j] = r.get_si();
        }
        gens.push_back(std::move(v));
    }
    return FiniteSubspace(prime, n, std::move(gens));
}

}  // namespace

HeckeResult hecke_ehrhart(const LatticePolytope& p, long prime, int k) {
    check_budget(p, prime);
    auto set = enumerate_superlattices(p.dim(), prime, k);
    HeckeResult out;
    out.p = prime;
    out.k = k;
    out.per_lattice.resize(set.members.size());
    parallel_for(set.members.size(), [&](std::size_t i) {
        LatticePolytope image = hecke_image(p, set.members[i].lattice);
        out.per_lattice[i] = ehrhart(image).poly;
    });
    for (const auto& poly : out.per_lattice) out.aggregate = out.aggregate + poly;
    return out;
}

Rat hecke_vol(const LatticePolytope& p, long prime, int k, int l) {
    check_budget(p, prime);
    auto set = enumerate_superlattices(p.dim(), prime, k);
    std::vector<Rat> parts(set.members.size());
    parallel_for(set.members.size(), [&](std::size_t i) {
        LatticePolytope image = hecke_image(p, set.members[i].lattice);
        parts[i] = vol_l(image, l);
    });
    Rat total(0);
    for (const auto& v : parts) total += v;
    return total;
}

PropAResult prop_A_check(const LatticePolytope& p, int face_index, const Superlattice& m, long prime) {
    int n = p.dim();
    const Face& f = p.faces().at((std::size_t)face_index);
    Lattice std_lattice = Lattice::standard(n);
    FiniteSubspace mbar = reduction_mod_p(m.lattice, std_lattice, prime);

    // right-hand side exponents from the mod-p picture
    IMat dirs;
    for (std::size_t i = 1; i < f.vertex_ids.size(); ++i) {
        IVec d(p.vertices()[(std::size_t)f.vertex_ids[i]]);
        const IVec& base = p.vertices()[(std::size_t)f.vertex_ids[0]];
        for (int j = 0; j < n; ++j) d[(std::size_t)j] -= base[(std::size_t)j];
        dirs.push_back(std::move(d));
    }
    FiniteSubspace vbar = reduce_rational_span(dirs, n, prime);

    Cone sigma = p.normal_cone(face_index);
    FiniteSubspace cbar = reduce_rational_span(sigma.generators, n, prime);
    int r = 0;
    for (const auto& gen : sigma.generators) {
        FiniteSubspace ray = reduce_rational_span(IMat{gen}, n, prime);
        if (mbar.contains(ray)) ++r;
    }
    int vol_exp = mbar.intersection_dim(vbar);
    int ind_exp = mbar.intersection_dim(cbar) - r;

    // left-hand side by direct recomputation over M
    LatticePolytope image = hecke_image(p, m.lattice);
    int image_face = image.face_index_of_vertex_set(f.vertex_ids);
    Rat vol_ratio = face_volume(image, image_face) / face_volume(p, face_index);
    Cone sigma_m = normal_cone_over(p, m.lattice, face_index);
    Rat ind_ratio = Rat(sigma_m.index) / Rat(sigma.index);

    Rat expected_vol = rat_pow(Rat(prime), vol_exp);
    Rat expected_ind = rat_pow(Rat(prime), ind_exp);
    if (vol_ratio != expected_vol || ind_ratio != expected_ind) {
        std::ostringstream os;
        os << "volume/index transformation mismatch: face {";
        for (int v : f.vertex_ids) os << v << " ";
        os << "}, lattice " << m.lattice.canonical_key() << ", vol ratio " << to_string(vol_ratio)
           << " vs p^" << vol_exp << ", index ratio " << to_string(ind_ratio) << " vs p^" << ind_exp;
        throw std::logic_error(os.str());
    }
    return PropAResult{vol_exp, ind_exp, r};
}

HeckePSquared hecke_p_squared(const LatticePolytope& p, long prime) {
    check_budget(p, prime);
    auto lattices = enumerate_coindex_superlattices(p.dim(), prime, 2);
    HeckePSquared out;
    out.summands = lattices.size();
    std::vector<UniPoly> parts(lattices.size());
    parallel_for(lattices.size(), [&](std::size_t i) {
        LatticePolytope image = hecke_image(p, lattices[i]);
        parts[i] = ehrhart(image).poly;
    });
    for (const auto& poly : parts) out.aggregate = out.aggregate + poly;
    return out;
}

UniPoly average_regularized(const LatticePolytope& p, const std::vector<Lattice>& family) {
    if (family.empty()) throw std::invalid_argument("empty lattice family");
    std::vector<UniPoly> parts(family.size());
    parallel_for(family.size(), [&](std::size_t i) {
        LatticePolytope image = hecke_image(p, family[i]);
        EhrhartPolynomial e = ehrhart(image);
        parts[i] = regularized(e, image);
    });
    UniPoly total;
    for (const auto& poly : parts) total = total + poly;
    return total * rat(1, (long)family.size());
}

}  // namespace polyhecke
