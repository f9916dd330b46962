#include "polyhecke/toddop.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "polyhecke/ehrhart.hpp"
#include "polyhecke/grassmann.hpp"
#include "polyhecke/numbers.hpp"
#include "polyhecke/volpoly.hpp"

namespace polyhecke {

namespace {

constexpr long kConductorCap = 60;

// Ordered partitions (compositions) of l into exactly c positive parts,
// lexicographic order.
std::vector<std::vector<int>> compositions(int l, int c) {
    std::vector<std::vector<int>> out;
    if (c == 0) {
        if (l == 0) out.push_back({});
        return out;
    }
    std::vector<int> cur((std::size_t)c);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == c - 1) {
            if (left >= 1) {
                cur[(std::size_t)pos] = left;
                out.push_back(cur);
            }
            return;
        }
        for (int v = 1; v <= left - (c - 1 - pos); ++v) {
            cur[(std::size_t)pos] = v;
            rec(pos + 1, left - v);
        }
    };
    rec(0, l);
    return out;
}

// A(f, pi) as the Gamma-sum over the half-open parallelepiped of the
// normal cone; parts are aligned with the cone generator order (= the
// face's containing-facet order).
Cyclo gamma_sum(const Cone& sigma, const std::vector<int>& parts) {
    if (sigma.generators.size() != parts.size())
        throw std::invalid_argument("partition length must match the cone generator count");
    auto gamma = parallelepiped_points(sigma);
    long conductor_lcm = 1;
    for (const auto& g : gamma)
        for (const auto& r : g.rho) {
            Int den = r.get_den();
            if (!den.fits_slong_p()) throw std::runtime_error("Gamma point denominator too large");
            conductor_lcm = std::lcm(conductor_lcm, den.get_si());
        }
    if (conductor_lcm > kConductorCap)
        throw std::runtime_error("cyclotomic conductor exceeds the supported bound");

    Cyclo total;
    for (const auto& g : gamma) {
        Cyclo prod(Rat(1));
        for (std::size_t i = 0; i < parts.size(); ++i) {
            Cyclo a = Cyclo::root_of_unity(g.rho[i]);
            prod *= circle_coefficient(a, parts[i]);
        }
        total += prod;
    }
    return total;
}

Rat gamma_sum_rational(const Cone& sigma, const std::vector<int>& parts) {
    Cyclo s = gamma_sum(sigma, parts);
    // full Gamma-sums are Galois stable, hence rational
    return s.as_rational();
}

}  // namespace

Cyclo circle_coefficient(const Cyclo& a, int k) {
    if (k < 0) throw std::invalid_argument("negative order");
    if (a == Cyclo(Rat(1))) {
        return Cyclo(todd_series((unsigned)k)[(std::size_t)k]);
    }
    if (k == 0) return Cyclo();
    // S(x) = 1 - a e^{-x} = (1-a) + sum_{j>=1} a (-1)^{j+1} x^j / j!
    // c(a,k) = [x^{k-1}] of 1/S.
    std::vector<Cyclo> s((std::size_t)k);
    s[0] = Cyclo(Rat(1)) - a;
    Rat fact(1);
    for (int j = 1; j < k; ++j) {
        fact *= Rat(j);
        Rat coef = (j % 2 == 1 ? Rat(1) : Rat(-1)) / fact;
        s[(std::size_t)j] = a * Cyclo(coef);
    }
    std::vector<Cyclo> t((std::size_t)k);
    Cyclo inv0 = s[0].inverse();
    t[0] = inv0;
    for (int j = 1; j < k; ++j) {
        Cyclo acc;
        for (int i = 1; i <= j; ++i) acc += s[(std::size_t)i] * t[(std::size_t)(j - i)];
        t[(std::size_t)j] = -(inv0 * acc);
    }
    return t[(std::size_t)(k - 1)];
}

bool distribution_check(int n, int k) {
    if (n < 2 || k < 1) throw std::invalid_argument("distribution check needs n >= 2, k >= 1");
    Cyclo lhs;
    for (int j = 1; j < n; ++j) lhs += circle_coefficient(Cyclo::zeta_pow(n, j), k);
    Rat lhs_rat = lhs.as_rational();  // asserted rational, no rounding
    Rat rhs = Rat(int_pow(Int(n), (unsigned long)k) - 1) / Rat(factorial((unsigned long)k)) * bernoulli((unsigned)k);
    return lhs_rat == rhs;
}

Cyclo theta(int k, const Rat& u) {
    Cyclo a = Cyclo::root_of_unity(-u);
    Cyclo c = circle_coefficient(a, k);
    Rat sign = (k % 2 == 0) ? Rat(1) : Rat(-1);
    return c * Cyclo(sign * Rat(factorial((unsigned long)k)));
}

bool hurwitz_numeric_check(int k, const Rat& u) {
    if (k < 2) throw std::invalid_argument("numeric check requires k >= 2");
    if (u <= 0 || u >= 1) throw std::invalid_argument("u must lie in (0,1)");
    const long C = 10000;
    double ud = u.get_d();
    double lhs = 0.0;
    for (long m = -(C - 1); m <= C - 1; ++m) {
        double base = (double)m + ud;
        double pw = 1.0;
        for (int i = 0; i < k; ++i) pw *= base;
        lhs += 1.0 / pw;
    }
    // integral tail beyond the symmetric window
    double tail_pos = std::pow((double)C - 0.5 + ud, 1.0 - (double)k) / ((double)k - 1.0);
    double tail_neg = ((k % 2 == 0) ? 1.0 : -1.0) *
                      std::pow((double)C - 0.5 - ud, 1.0 - (double)k) / ((double)k - 1.0);
    lhs += tail_pos + tail_neg;

    const double tau = 6.283185307179586476925286766559;
    std::complex<double> two_pi_i(0.0, tau);
    std::complex<double> factor(1.0, 0.0);
    for (int i = 0; i < k; ++i) factor *= two_pi_i;
    double kfact = 1.0;
    for (int i = 2; i <= k; ++i) kfact *= (double)i;
    std::complex<double> rhs = -factor / kfact * theta(k, u).embed();

    return std::abs(std::complex<double>(lhs, 0.0) - rhs) < 1e-9;
}

std::vector<ToddTerm> todd_terms(const LatticePolytope& p, int l) {
    if (!p.is_simple()) throw std::invalid_argument("not simple");
    if (l < 0 || l > p.dim()) throw std::invalid_argument("degree out of range");
    std::size_t m = p.facets().size();
    std::vector<ToddTerm> out;
    if (l == 0) {
        ToddTerm t;
        t.face_index = p.top_face();
        t.coefficient = Rat(1);
        t.derivative.assign(m, 0);
        out.push_back(std::move(t));
        return out;
    }
    for (std::size_t fi = 0; fi < p.faces().size(); ++fi) {
        const Face& f = p.faces()[fi];
        int codim = p.dim() - f.dim;
        if (codim < 1 || codim > l) continue;
        for (const auto& parts : compositions(l, codim)) {
            ToddTerm t;
            t.face_index = (int)fi;
            t.coefficient = gamma_sum_rational(p.normal_cone((int)fi), parts);
            t.derivative.assign(m, 0);
            for (std::size_t i = 0; i < parts.size(); ++i) {
                int facet = f.facet_ids[i];
                t.partition.emplace_back(facet, parts[i]);
                t.derivative[(std::size_t)facet] = parts[i];
            }
            out.push_back(std::move(t));
        }
    }
    return out;
}

Rat kp_coefficient(const LatticePolytope& p, int l, const MultiPoly& volume_poly) {
    Rat total(0);
    for (const auto& term : todd_terms(p, l))
        total += term.coefficient * volume_poly.derivative_multi(term.derivative).constant_term();
    return total;
}

Rat kp_coefficient(const LatticePolytope& p, int l) {
    return kp_coefficient(p, l, volume_polynomial(p));
}

SquarefreeCheck theorem2_squarefree_check(const LatticePolytope& p, int face_index, long prime, int k) {
    if (!is_nonsingular(p)) throw std::invalid_argument("squarefree transformation check requires a nonsingular polytope");
    int n = p.dim();
    const Face& f = p.faces().at((std::size_t)face_index);
    int l = n - f.dim;
    std::vector<int> ones((std::size_t)l, 1);

    Rat lhs(0);
    auto set = enumerate_superlattices(n, prime, k);
    for (const auto& member : set.members) {
        LatticePolytope image = hecke_image(p, member.lattice);
        int fi = image.face_index_of_vertex_set(f.vertex_ids);
        Cone sigma_m = normal_cone_over(p, member.lattice, face_index);
        Rat a = gamma_sum_rational(sigma_m, ones);
        lhs += a * face_volume(image, fi) / Rat(sigma_m.index);
    }
    Rat rhs = Rat(nu_closed(n, k, n - l, Int(prime))) * face_volume(p, face_index) /
              rat_pow(Rat(2), l);
    return SquarefreeCheck{lhs, rhs};
}

Rat todd_coefficient_over(const LatticePolytope& p, const Lattice& m, int face_index,
                          const std::vector<int>& parts) {
    return gamma_sum_rational(normal_cone_over(p, m, face_index), parts);
}

Rat dedekind_part(const LatticePolytope& p, const Lattice& m, int face_index) {
    const Face& f = p.faces().at((std::size_t)face_index);
    int codim = p.dim() - f.dim;
    std::vector<int> ones((std::size_t)codim, 1);
    return todd_coefficient_over(p, m, face_index, ones) - rat_pow(rat(1, 2), codim);
}

Table3Report table3_report(const LatticePolytope& p, int edge_face, long prime) {
    if (p.dim() != 3) throw std::invalid_argument("stratified report is for 3-dimensional polytopes");
    if (!is_nonsingular(p)) throw std::invalid_argument("stratified report requires a nonsingular polytope");
    const Face& f = p.faces().at((std::size_t)edge_face);
    if (f.dim != 1) throw std::invalid_argument("face must be an edge");

    Lattice std_lattice = Lattice::standard(3);
    // mod-p subspaces of the edge geometry
    IVec dir = p.vertices()[(std::size_t)f.vertex_ids[1]];
    for (int j = 0; j < 3; ++j) dir[(std::size_t)j] -= p.vertices()[(std::size_t)f.vertex_ids[0]][(std::size_t)j];
    IMat sat_dir = saturate(IMat{dir});
    auto to_fp = [&](const IMat& rows) {
        FpMat gens;
        for (const auto& row : rows) {
            FpVec v(3);
            for (int j = 0; j < 3; ++j) {
                Int r = row[(std::size_t)j] % prime;
                if (r < 0) r += prime;
                v[(std::size_t)j] = r.get_si();
            }
            gens.push_back(std::move(v));
        }
        return FiniteSubspace(prime, 3, std::move(gens));
    };
    FiniteSubspace vf = to_fp(sat_dir);
    Cone sigma = p.normal_cone(edge_face);
    FiniteSubspace cf = to_fp(saturate(sigma.generators));
    FiniteSubspace c1 = to_fp(saturate(IMat{sigma.generators[0]}));
    FiniteSubspace c2 = to_fp(saturate(IMat{sigma.generators[1]}));

    Table3Report report;
    report.rows.resize(4);
    report.rows[0].name = "Vf";
    report.rows[1].name = "C1,C2";
    report.rows[2].name = "Cf minus axes";
    report.rows[3].name = "generic";

    Rat total(0);
    Rat dedekind(0);
    auto set = enumerate_superlattices(3, prime, 1);
    for (const auto& member : set.members) {
        FiniteSubspace mbar = reduction_mod_p(member.lattice, std_lattice, prime);
        int stratum;
        if (mbar == vf) stratum = 0;
        else if (mbar == c1 || mbar == c2) stratum = 1;
        else if (cf.contains(mbar)) stratum = 2;
        else stratum = 3;

        LatticePolytope image = hecke_image(p, member.lattice);
        int fi = image.face_index_of_vertex_set(f.vertex_ids);
        Cone sigma_m = normal_cone_over(p, member.lattice, edge_face);
        Rat a = gamma_sum_rational(sigma_m, {1, 1});
        Rat vr = face_volume(image, fi) / face_volume(p, edge_face);
        Rat ir = Rat(sigma.index) / Rat(sigma_m.index);

        Table3Row& row = report.rows[(std::size_t)stratum];
        if (row.count == 0) {
            row.vol_ratio = vr;
            row.ind_ratio = ir;
        } else if (row.vol_ratio != vr || row.ind_ratio != ir) {
            throw std::logic_error("stratum is not homogeneous in volume/index ratios");
        }
        row.count += 1;
        row.coefficient_sum += a;
        total += a * vr * ir;
        if (stratum == 2) dedekind += a - rat(1, 4);
    }
    report.total = total;
    report.expected = Rat(prime * prime + 2 * prime) / Rat(4);
    report.dedekind_sum = dedekind;
    report.dedekind_expected = Rat((prime - 1) * (prime - 1)) / Rat(4);
    return report;
}

}  // namespace polyhecke
