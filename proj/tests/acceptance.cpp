// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Everything is exact arithmetic except the Hurwitz zeta cross-check.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "polyhecke/builtins.hpp"
#include "polyhecke/ehrhart.hpp"
#include "polyhecke/grassmann.hpp"
#include "polyhecke/hecke.hpp"
#include "polyhecke/numbers.hpp"
#include "polyhecke/toddop.hpp"
#include "polyhecke/volpoly.hpp"

using namespace polyhecke;

namespace {

int g_failures = 0;

void run_criterion(int number, const std::string& name, const std::function<bool(std::ostream&)>& body) {
    auto start = std::chrono::steady_clock::now();
    std::ostringstream detail;
    bool ok = false;
    std::string error;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        error = e.what();
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << number << ": " << name << "  ["
              << ms << " ms]";
    if (!ok) {
        ++g_failures;
        if (!error.empty()) std::cout << "  error: " << error;
        if (!detail.str().empty()) std::cout << "  detail: " << detail.str();
    }
    std::cout << std::endl;
}

// Frozen eigenvalue table for n = 4, coefficients ascending in p.
UniPoly eigenvalue_table_n4(int k, int l) {
    auto poly = [](std::vector<long> c) {
        QVec q;
        for (long x : c) q.push_back(Rat(x));
        return UniPoly(std::move(q));
    };
    if (k == 1) {
        switch (l) {
            case 4: return poly({0, 1, 1, 1, 1});
            case 3: return poly({0, 1, 1, 2});
            case 2: return poly({0, 1, 2, 1});
            case 1: return poly({0, 2, 1, 1});
            case 0: return poly({1, 1, 1, 1});
        }
    } else if (k == 2) {
        switch (l) {
            case 4: return poly({0, 0, 1, 1, 2, 1, 1});
            case 3: return poly({0, 0, 1, 2, 2, 1});
            case 2: return poly({0, 0, 2, 2, 2});
            case 1: return poly({0, 1, 2, 2, 1});
            case 0: return poly({1, 1, 2, 1, 1});
        }
    } else if (k == 3) {
        switch (l) {
            case 4: return poly({0, 0, 0, 1, 1, 1, 1});
            case 3: return poly({0, 0, 0, 2, 1, 1});
            case 2: return poly({0, 0, 1, 2, 1});
            case 1: return poly({0, 1, 1, 2});
            case 0: return poly({1, 1, 1, 1});
        }
    }
    throw std::invalid_argument("no table entry");
}

bool criterion1_table1(std::ostream& detail) {
    bool ok = true;
    for (const auto& p : {unit_cube(4), standard_simplex(4)}) {
        EhrhartPolynomial base = ehrhart(p);
        for (long prime : {2L, 3L})
            for (int k = 1; k <= 3; ++k) {
                HeckeResult r = hecke_ehrhart(p, prime, k);
                for (int l = 0; l <= 4; ++l) {
                    Rat cl = base.poly.coeff((std::size_t)l);
                    Rat ratio = r.aggregate.coeff((std::size_t)l) / cl;
                    if (ratio != eigenvalue_table_n4(k, l)(Rat(prime))) {
                        detail << "(p=" << prime << ",k=" << k << ",l=" << l << ") ";
                        ok = false;
                    }
                }
            }
    }
    return ok;
}

bool criterion2_independence(std::ostream& detail) {
    bool ok = true;
    std::vector<std::vector<LatticePolytope>> sets{
        {unit_cube(2), standard_simplex(2), singular_triangle()},
        {unit_cube(3), standard_simplex(3), triangular_prism()}};
    for (const auto& family : sets)
        for (const auto& p : family) {
            int n = p.dim();
            UniPoly e = ehrhart(p).poly;
            for (long prime : {2L, 3L, 5L})
                for (int k = 1; k <= n; ++k) {
                    HeckeResult r = hecke_ehrhart(p, prime, k);
                    for (int l = 0; l <= n; ++l) {
                        Rat cl = e.coeff((std::size_t)l);
                        if (cl == 0) continue;
                        if (r.aggregate.coeff((std::size_t)l) / cl != Rat(nu_closed(n, k, l, Int(prime)))) {
                            detail << "ratio (n=" << n << ",p=" << prime << ",k=" << k << ",l=" << l << ") ";
                            ok = false;
                        }
                    }
                    Rat g1 = Rat(grassmannian_count(k - 1, n - 1, Int(prime)));
                    Rat g2 = Rat(grassmannian_count(k, n, Int(prime)));
                    if (!(r.aggregate == e.scale_arg(Rat(prime)) * g1 + e * (g2 - g1))) {
                        detail << "counting identity (n=" << n << ",p=" << prime << ",k=" << k << ") ";
                        ok = false;
                    }
                }
        }
    return ok;
}

bool criterion3_nu_oracles(std::ostream& detail) {
    bool ok = true;
    for (long p : {2L, 3L})
        for (int n = 1; n <= 4; ++n)
            for (int k = 0; k <= n; ++k)
                for (int l = 0; l <= n; ++l) {
                    Int closed = nu_closed(n, k, l, Int(p));
                    if (closed != nu_bruteforce(n, k, l, p) || closed != nu_bundle_oracle(n, k, l, p)) {
                        detail << "oracle (n=" << n << ",k=" << k << ",l=" << l << ",p=" << p << ") ";
                        ok = false;
                    }
                    Rat dual = Rat(closed) / Rat(nu_closed(n, n - k, n - l, Int(p)));
                    if (dual != rat_pow(Rat(p), k + l - n)) {
                        detail << "duality (n=" << n << ",k=" << k << ",l=" << l << ",p=" << p << ") ";
                        ok = false;
                    }
                }
    for (int n = 1; n <= 4; ++n)
        for (int k = 0; k <= n; ++k)
            for (int l = 0; l <= n; ++l) {
                UniPoly phi = phi_polynomial(n, k, l);
                for (long d = 0; d <= phi.degree(); ++d) {
                    Rat c = phi.coeff((std::size_t)d);
                    if (!is_integer(c) || c < 0 || (c != 0 && c < 1)) {
                        detail << "positivity (n=" << n << ",k=" << k << ",l=" << l << ") ";
                        ok = false;
                    }
                }
                for (long p : {2L, 3L, 5L, 7L})
                    if (phi(Rat(p)) != Rat(nu_closed(n, k, l, Int(p)))) {
                        detail << "phi value (n=" << n << ",k=" << k << ",l=" << l << ",p=" << p << ") ";
                        ok = false;
                    }
            }
    return ok;
}

bool criterion4_volume_index_laws(std::ostream& detail) {
    bool ok = true;
    for (const auto& p : {unit_cube(3), triangular_prism(), standard_simplex(3)}) {
        for (long prime : {2L, 3L})
            for (int k = 1; k <= 3; ++k) {
                for (const auto& member : enumerate_superlattices(3, prime, k).members)
                    for (std::size_t fi = 0; fi < p.faces().size(); ++fi) {
                        try {
                            prop_A_check(p, (int)fi, member, prime);
                        } catch (const std::exception& e) {
                            detail << e.what() << " ";
                            ok = false;
                        }
                    }
                for (int l = 0; l <= 3; ++l)
                    if (hecke_vol(p, prime, k, l) != Rat(nu_closed(3, k, l, Int(prime))) * vol_l(p, l)) {
                        detail << "vol transform (p=" << prime << ",k=" << k << ",l=" << l << ") ";
                        ok = false;
                    }
            }
    }
    return ok;
}

bool criterion5_kp_coefficients(std::ostream& detail) {
    bool ok = true;
    std::vector<LatticePolytope> polys{standard_simplex(1), unit_cube(1), unit_cube(2),
                                       standard_simplex(2), unit_cube(3), standard_simplex(3),
                                       triangular_prism(), singular_triangle()};
    for (const auto& p : polys) {
        EhrhartPolynomial e = ehrhart(p);
        MultiPoly vp = volume_polynomial(p);
        for (int l = 0; l <= p.dim(); ++l)
            if (kp_coefficient(p, l, vp) != e.poly.coeff((std::size_t)(p.dim() - l))) {
                detail << "kp l=" << l << " ";
                ok = false;
            }
        // squarefree derivative identity and the translation relations
        for (std::size_t fi = 0; fi < p.faces().size(); ++fi) {
            MultiPoly d = vp;
            for (int facet : p.faces()[fi].facet_ids) d = d.derivative((std::size_t)facet);
            if (d.constant_term() != face_volume(p, (int)fi) / Rat(p.normal_cone((int)fi).index)) {
                detail << "lemma5.1 ";
                ok = false;
            }
        }
        for (int j = 0; j < p.dim(); ++j) {
            MultiPoly acc(p.facets().size());
            for (std::size_t fi = 0; fi < p.facets().size(); ++fi)
                acc = acc + vp.derivative(fi) * Rat(p.facets()[fi].normal[(std::size_t)j]);
            if (!acc.is_zero()) {
                detail << "annihilation ";
                ok = false;
            }
        }
    }
    return ok;
}

bool criterion6_worked_example(std::ostream& detail) {
    bool ok = true;
    auto cube = unit_cube(3);
    int edge = cube.faces_of_dim(1)[0];
    long p = 5;
    auto c1 = theorem2_squarefree_check(cube, edge, p, 1);
    if (!c1.ok() || c1.rhs != Rat(p * p + 2 * p) / 4 * face_volume(cube, edge)) {
        detail << "k=1 total ";
        ok = false;
    }
    auto c2 = theorem2_squarefree_check(cube, edge, p, 2);
    if (!c2.ok() || c2.rhs != Rat(2 * p * p + p) / 4 * face_volume(cube, edge)) {
        detail << "k=2 total ";
        ok = false;
    }
    Table3Report rep = table3_report(cube, edge, p);
    if (!rep.ok()) {
        detail << "table3 ";
        ok = false;
    }
    if (rep.dedekind_sum != Rat((p - 1) * (p - 1)) / 4) {
        detail << "dedekind ";
        ok = false;
    }
    // full per-stratum signatures: size, volume ratio, index ratio, and the
    // coefficient sums that the reconciled strata carry
    std::vector<long> expected_counts{1, 2, p - 1, p * p - 1};
    std::vector<Rat> expected_vol{Rat(p), Rat(1), Rat(1), Rat(1)};
    std::vector<Rat> expected_ind{Rat(1), Rat(1), rat(1, p), Rat(1)};
    std::vector<Rat> expected_sum{rat(1, 4), rat(1, 2), Rat(p * (p - 1)) / 4, Rat(p * p - 1) / 4};
    for (std::size_t i = 0; i < 4; ++i) {
        if (rep.rows[i].count != expected_counts[i] || rep.rows[i].vol_ratio != expected_vol[i] ||
            rep.rows[i].ind_ratio != expected_ind[i] || rep.rows[i].coefficient_sum != expected_sum[i]) {
            detail << "stratum " << i << " signature ";
            ok = false;
        }
    }
    return ok;
}

bool criterion7_distribution(std::ostream& detail) {
    bool ok = true;
    for (int n = 2; n <= 6; ++n)
        for (int k = 1; k <= 5; ++k)
            if (!distribution_check(n, k)) {
                detail << "crel (n=" << n << ",k=" << k << ") ";
                ok = false;
            }
    // squarefree identity for P = (Delta_1)^l
    for (int l = 1; l <= 3; ++l) {
        auto p = unit_cube(l);
        int vertex = p.faces_of_dim(0)[0];
        std::vector<int> ones((std::size_t)l, 1);
        for (long prime : {2L, 3L})
            for (int j = 1; j <= l; ++j) {
                Rat sum(0);
                for (const auto& member : enumerate_superlattices(l, prime, j).members) {
                    Cone sigma = normal_cone_over(p, member.lattice, vertex);
                    sum += todd_coefficient_over(p, member.lattice, vertex, ones) / Rat(sigma.index);
                }
                if (sum != Rat(grassmannian_count(j, l, Int(prime))) / rat_pow(Rat(2), l)) {
                    detail << "sqrfree (l=" << l << ",j=" << j << ",p=" << prime << ") ";
                    ok = false;
                }
            }
    }
    return ok;
}

bool criterion8_hurwitz(std::ostream& detail) {
    bool ok = true;
    std::vector<std::pair<int, Rat>> cases{{2, rat(1, 2)}, {2, rat(1, 4)}, {3, rat(1, 3)}, {4, rat(1, 3)}};
    for (const auto& [k, u] : cases)
        if (!hurwitz_numeric_check(k, u)) {
            detail << "(k=" << k << ",u=" << to_string(u) << ") ";
            ok = false;
        }
    return ok;
}

bool criterion9_averages(std::ostream& detail) {
    bool ok = true;
    // #M(p^2) and the Hecke algebra relation at small primes
    for (int n = 1; n <= 3; ++n)
        for (long prime : {2L, 3L}) {
            auto ms = enumerate_coindex_superlattices(n, prime, 2);
            if (Int((long)ms.size()) != grassmannian_count(2, n + 1, Int(prime))) {
                detail << "#M(p^2) (n=" << n << ",p=" << prime << ") ";
                ok = false;
            }
        }
    for (const auto& p : {standard_simplex(1), unit_cube(2), standard_simplex(2), unit_cube(3)}) {
        for (long prime : {2L, 3L}) {
            HeckePSquared direct = hecke_p_squared(p, prime);
            UniPoly composed;
            for (const auto& member : enumerate_superlattices(p.dim(), prime, 1).members)
                composed = composed + hecke_ehrhart(hecke_image(p, member.lattice), prime, 1).aggregate;
            UniPoly algebra = composed;
            if (p.dim() >= 2) algebra = algebra - hecke_ehrhart(p, prime, 2).aggregate * Rat(prime);
            if (!(direct.aggregate == algebra)) {
                detail << "algebra relation (n=" << p.dim() << ",p=" << prime << ") ";
                ok = false;
            }
        }
    }
    // asymptotics at p = 101 for the unit square
    auto sq = unit_cube(2);
    UniPoly e = ehrhart(sq).poly;
    long p = 101;
    Rat bound = rat(5, p);
    {
        std::vector<Lattice> family;
        for (auto& m : enumerate_superlattices(2, p, 1).members) family.push_back(m.lattice);
        UniPoly avg = average_regularized(sq, family);
        Rat lead = avg.coeff(1) / e.coeff(1);
        if (abs(lead - 2) > bound) {
            detail << "L_1 limit " << to_string(lead) << " ";
            ok = false;
        }
        if (avg.coeff(0) != 1) {
            detail << "L_1 constant term ";
            ok = false;
        }
    }
    {
        auto family = enumerate_coindex_superlattices(2, p, 2);
        UniPoly avg = average_regularized(sq, family);
        Rat lead = avg.coeff(1) / e.coeff(1);
        if (abs(lead - 3) > bound) {
            detail << "M(p^2) limit " << to_string(lead) << " ";
            ok = false;
        }
        if (avg.coeff(0) != 1) {
            detail << "M(p^2) constant term ";
            ok = false;
        }
    }
    return ok;
}

bool criterion10_ehrhart_sanity(std::ostream& detail) {
    bool ok = true;
    std::vector<LatticePolytope> polys{standard_simplex(1), unit_cube(2), standard_simplex(2),
                                       singular_triangle(), unit_cube(3), standard_simplex(3),
                                       triangular_prism(), unit_cube(4), standard_simplex(4)};
    for (const auto& p : polys) {
        int n = p.dim();
        EhrhartPolynomial e = ehrhart(p);
        if (e.poly.coeff(0) != 1 || e.poly.coeff((std::size_t)n) != volume(p) ||
            e.poly.coeff((std::size_t)(n - 1)) != vol_l(p, n - 1) / 2) {
            detail << "easy coefficients (n=" << n << ") ";
            ok = false;
        }
        for (long t = n + 1; t <= n + 2; ++t)
            if (e.poly(Rat(t)) != Rat(count_points(p, p.ambient(), t))) {
                detail << "out-of-sample (n=" << n << ",t=" << t << ") ";
                ok = false;
            }
    }
    return ok;
}

}  // namespace

int main() {
    run_criterion(1, "n=4 eigenvalue table reproduced by coefficient ratios (cube, simplex; p=2,3; k=1..3)",
                  criterion1_table1);
    run_criterion(2, "eigenvalue ratios independent of the polytope (n=2,3; p=2,3,5; incl. singular triangle)",
                  criterion2_independence);
    run_criterion(3, "nu triple-oracle agreement, duality, and Phi positivity", criterion3_nu_oracles);
    run_criterion(4, "volume/index transformation laws per superlattice and T(p,k)Vol_l = nu Vol_l",
                  criterion4_volume_index_laws);
    run_criterion(5, "Todd-operator coefficients equal Ehrhart coefficients (KP and Brion-Vergne)",
                  criterion5_kp_coefficients);
    run_criterion(6, "3-dim worked example: edge totals, Dedekind sum, four strata", criterion6_worked_example);
    run_criterion(7, "distribution relations: circle-coefficient sums and the squarefree identity",
                  criterion7_distribution);
    run_criterion(8, "Hurwitz zeta special values (numeric, 1e-9)", criterion8_hurwitz);
    run_criterion(9, "coindex-p^2 counts, Hecke algebra relation, and p=101 average limits",
                  criterion9_averages);
    run_criterion(10, "Ehrhart easy coefficients and out-of-sample polynomiality", criterion10_ehrhart_sanity);

    if (g_failures) {
        std::cout << g_failures << " criterion(s) failed" << std::endl;
        return 1;
    }
    std::cout << "all criteria passed" << std::endl;
    return 0;
}
