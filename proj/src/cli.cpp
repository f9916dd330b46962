#include "polyhecke/cli.hpp"

#include <iostream>
#include <random>

#include <CLI11.hpp>
#include <json.hpp>

#include "polyhecke/builtins.hpp"
#include "polyhecke/ehrhart.hpp"
#include "polyhecke/grassmann.hpp"
#include "polyhecke/hecke.hpp"
#include "polyhecke/json_io.hpp"
#include "polyhecke/numbers.hpp"
#include "polyhecke/toddop.hpp"
#include "polyhecke/volpoly.hpp"

namespace polyhecke::cli {

namespace {

using nlohmann::json;

struct CommonOpts {
    std::string polytope_file;
    std::string builtin;
    std::string format = "table";
    bool decimal = false;
    unsigned seed = 1;
};

LatticePolytope load_polytope(const CommonOpts& o) {
    if (!o.builtin.empty()) return builtin_polytope(o.builtin);
    if (!o.polytope_file.empty()) return polytope_from_file(o.polytope_file);
    throw std::invalid_argument("specify --polytope FILE or --builtin NAME");
}

void add_common(CLI::App* cmd, CommonOpts& o, bool with_polytope = true) {
    if (with_polytope) {
        cmd->add_option("--polytope", o.polytope_file, "polytope JSON file");
        cmd->add_option("--builtin", o.builtin, "builtin polytope (cube:N, simplex:N, prism, singular-triangle)");
    }
    cmd->add_option("--format", o.format, "output format: table or json")
        ->check(CLI::IsMember({"table", "json"}));
    cmd->add_flag("--decimal", o.decimal, "also render decimal approximations (display only)");
    cmd->add_option("--seed", o.seed, "seed for randomized re-checks");
}

std::string maybe_decimal(const Rat& r, bool decimal) {
    std::string s = to_string(r);
    if (decimal && !is_integer(r)) s += " (" + std::to_string(r.get_d()) + ")";
    return s;
}

int cmd_count(const CommonOpts& o, long t) {
    LatticePolytope p = load_polytope(o);
    Int c = count_points(p, p.ambient(), t);
    if (o.format == "json")
        std::cout << json{{"t", t}, {"count", to_string(c)}}.dump() << "\n";
    else
        std::cout << "#(" << t << "P cap L) = " << to_string(c) << "\n";
    return 0;
}

int cmd_ehrhart(const CommonOpts& o) {
    LatticePolytope p = load_polytope(o);
    EhrhartPolynomial e = ehrhart(p);
    if (o.format == "json") {
        json j = unipoly_to_json(e.poly);
        json support = json::array();
        for (const auto& [t, c] : e.support) support.push_back(json{{"t", t}, {"count", to_string(c)}});
        j["support"] = support;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << e.poly.str("t") << "\n";
    }
    return 0;
}

int cmd_hecke(const CommonOpts& o, long p, int k, bool check_theorem1, bool p_squared) {
    LatticePolytope poly = load_polytope(o);
    int n = poly.dim();
    HeckeResult r = hecke_ehrhart(poly, p, k);
    EhrhartPolynomial base = ehrhart(poly);
    int failures = 0;

    if (o.format == "json") {
        json per = json::array();
        for (const auto& q : r.per_lattice) per.push_back(unipoly_to_json(q));
        json j{{"p", p}, {"k", k}, {"aggregate", unipoly_to_json(r.aggregate)}, {"per_lattice", per}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "T(" << p << "," << k << ")E = " << r.aggregate.str("t") << "  ("
                  << r.per_lattice.size() << " superlattices)\n";
    }

    if (check_theorem1) {
        for (int l = 0; l <= n; ++l) {
            Rat cl = base.poly.coeff((std::size_t)l);
            if (cl == 0) continue;
            Rat ratio = r.aggregate.coeff((std::size_t)l) / cl;
            Rat nu = Rat(nu_closed(n, k, l, Int(p)));
            bool ok = ratio == nu;
            std::cout << "c_" << l << " ratio " << maybe_decimal(ratio, o.decimal) << " vs nu = "
                      << to_string(nu) << (ok ? "  ok" : "  MISMATCH") << "\n";
            if (!ok) ++failures;
        }
        // the counting identity in terms of E(pt) and E(t)
        UniPoly lhs = r.aggregate;
        Rat g1 = Rat(grassmannian_count(k - 1, n - 1, Int(p)));
        Rat g2 = Rat(grassmannian_count(k, n, Int(p)));
        UniPoly rhs = base.poly.scale_arg(Rat(p)) * g1 + base.poly * (g2 - g1);
        if (!(lhs == rhs)) {
            std::cout << "scaling identity MISMATCH\n";
            ++failures;
        }
    }

    if (p_squared) {
        HeckePSquared direct = hecke_p_squared(poly, p);
        HeckeResult tk2 = hecke_ehrhart(poly, p, std::min(2, n));
        UniPoly algebra;
        {
            auto set = enumerate_superlattices(n, p, 1);
            for (const auto& member : set.members) {
                LatticePolytope image = hecke_image(poly, member.lattice);
                algebra = algebra + hecke_ehrhart(image, p, 1).aggregate;
            }
            if (n >= 2) algebra = algebra - tk2.aggregate * Rat(p);
        }
        bool ok = direct.aggregate == algebra;
        std::cout << "T(p^2)E = " << direct.aggregate.str("t") << "  (" << direct.summands
                  << " superlattices)" << (ok ? "  ok" : "  MISMATCH vs Hecke algebra") << "\n";
        if (!ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}

int cmd_nu(const CommonOpts& o, int n, bool verify) {
    int failures = 0;
    if (o.format == "json") {
        json rows = json::array();
        for (int l = n; l >= 0; --l) {
            json row{{"l", l}};
            json cols = json::array();
            for (int k = 1; k < n; ++k)
                cols.push_back(json{{"k", k}, {"phi", phi_polynomial(n, k, l).str("p")}});
            row["eigenvalues"] = cols;
            rows.push_back(row);
        }
        std::cout << json{{"n", n}, {"rows", rows}}.dump() << "\n";
    } else {
        std::cout << "Hecke eigenvalues for n = " << n << "\n";
        for (int l = n; l >= 0; --l) {
            std::cout << "c_" << l << ":";
            for (int k = 1; k < n; ++k)
                std::cout << "  T(p," << k << "): " << phi_polynomial(n, k, l).str("p");
            std::cout << "\n";
        }
    }
    if (verify) {
        std::mt19937 rng(o.seed);
        for (long p : {2L, 3L}) {
            for (int k = 0; k <= n; ++k)
                for (int l = 0; l <= n; ++l) {
                    Int closed = nu_closed(n, k, l, Int(p));
                    Int brute = nu_bruteforce(n, k, l, p);
                    Int bundle = nu_bundle_oracle(n, k, l, p);
                    if (closed != brute || closed != bundle) {
                        std::cout << "triple-oracle MISMATCH at (n,k,l,p)=(" << n << "," << k << ","
                                  << l << "," << p << ")\n";
                        ++failures;
                    }
                    // independence of U: random l-subspaces
                    for (int trial = 0; trial < 2; ++trial) {
                        FpMat gens;
                        for (int i = 0; i < l; ++i) {
                            FpVec v((std::size_t)n);
                            for (auto& x : v) x = (long)(rng() % (unsigned long)p);
                            gens.push_back(v);
                        }
                        FiniteSubspace u(p, n, std::move(gens));
                        if (u.dim() != l) continue;
                        if (nu_bruteforce_with(n, k, p, u) != closed) {
                            std::cout << "independence-of-U MISMATCH\n";
                            ++failures;
                        }
                    }
                }
        }
        std::cout << (failures ? "verification FAILED\n" : "triple-oracle verification passed\n");
    }
    return failures == 0 ? 0 : 1;
}

int cmd_phi(const CommonOpts& o, int n, int k, int l, long p_hat) {
    UniPoly phi = phi_polynomial(n, k, l);
    if (o.format == "json") {
        json j{{"n", n}, {"k", k}, {"l", l}, {"phi", unipoly_to_json(phi)}, {"display", phi.str("p")}};
        if (p_hat > 0) j["phi_hat"] = multipoly_to_json(schubert_phi_hat(n, k, p_hat));
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "Phi_{" << n << "," << k << "," << l << "}(p) = " << phi.str("p") << "\n";
        if (p_hat > 0)
            std::cout << "Phi-hat_{" << n << "," << k << "} at p=" << p_hat << ": "
                      << schubert_phi_hat(n, k, p_hat).str("x") << "\n";
    }
    return 0;
}

int cmd_todd(const CommonOpts& o, int degree, bool check_kp, bool table3, long p) {
    LatticePolytope poly = load_polytope(o);
    int failures = 0;
    MultiPoly vp = volume_polynomial(poly);
    auto terms = todd_terms(poly, degree);
    if (o.format == "json") {
        json jt = json::array();
        for (const auto& t : terms) {
            json parts = json::array();
            for (const auto& [facet, part] : t.partition) parts.push_back(json{{"facet", facet}, {"part", part}});
            jt.push_back(json{{"face", t.face_index}, {"partition", parts}, {"coefficient", to_string(t.coefficient)}});
        }
        std::cout << json{{"degree", degree}, {"terms", jt}, {"normal_fan", fan_to_json(poly)}}.dump() << "\n";
    } else {
        std::cout << terms.size() << " Todd terms of degree " << degree << "\n";
    }

    if (check_kp) {
        EhrhartPolynomial e = ehrhart(poly);
        for (int l = 0; l <= poly.dim(); ++l) {
            Rat kp = kp_coefficient(poly, l, vp);
            Rat expect = e.poly.coeff((std::size_t)(poly.dim() - l));
            bool ok = kp == expect;
            std::cout << "c_" << (poly.dim() - l) << " = " << maybe_decimal(kp, o.decimal)
                      << (ok ? "  ok" : "  MISMATCH vs Ehrhart") << "\n";
            if (!ok) ++failures;
        }
    }

    if (table3) {
        int edge = poly.faces_of_dim(1).at(0);
        Table3Report rep = table3_report(poly, edge, p);
        std::cout << "stratum        #M   Vol ratio  Ind ratio  sum A\n";
        for (const auto& row : rep.rows) {
            std::cout << row.name;
            for (std::size_t pad = row.name.size(); pad < 15; ++pad) std::cout << ' ';
            std::cout << row.count << "    " << to_string(row.vol_ratio) << "        "
                      << to_string(row.ind_ratio) << "        " << to_string(row.coefficient_sum) << "\n";
        }
        std::cout << "total " << to_string(rep.total) << " expected " << to_string(rep.expected)
                  << "; Dedekind sum " << to_string(rep.dedekind_sum) << " expected "
                  << to_string(rep.dedekind_expected) << (rep.ok() ? "  ok" : "  MISMATCH") << "\n";
        if (!rep.ok()) ++failures;
    }
    return failures == 0 ? 0 : 1;
}

int cmd_dist(const CommonOpts& o, int max_n, int max_k) {
    int failures = 0;
    for (int n = 2; n <= max_n; ++n)
        for (int k = 1; k <= max_k; ++k) {
            bool ok = distribution_check(n, k);
            if (o.format == "table")
                std::cout << "n=" << n << " k=" << k << (ok ? "  ok" : "  FAILED") << "\n";
            if (!ok) ++failures;
        }
    if (o.format == "json") std::cout << json{{"failures", failures}}.dump() << "\n";
    return failures == 0 ? 0 : 1;
}

int cmd_avg(const CommonOpts& o, long p, const std::string& family) {
    LatticePolytope poly = load_polytope(o);
    int n = poly.dim();
    std::vector<Lattice> lattices;
    if (family == "l1") {
        for (auto& member : enumerate_superlattices(n, p, 1).members) lattices.push_back(member.lattice);
    } else if (family == "psquared") {
        lattices = enumerate_coindex_superlattices(n, p, 2);
    } else {
        throw std::invalid_argument("family must be l1 or psquared");
    }
    UniPoly avg = average_regularized(poly, lattices);
    if (o.format == "json")
        std::cout << json{{"p", p}, {"family", family}, {"family_size", lattices.size()},
                          {"average", unipoly_to_json(avg)}}.dump()
                  << "\n";
    else
        std::cout << "average regularized Ehrhart over " << lattices.size() << " lattices: "
                  << avg.str("t") << "\n";
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args) {
    CLI::App app{"Exact Hecke operators on Ehrhart polynomials of lattice polytopes"};
    app.require_subcommand(1);

    CommonOpts o_count, o_ehr, o_hecke, o_nu, o_phi, o_todd, o_dist, o_avg;
    long count_t = 1;
    long hecke_p = 2, todd_p = 5, avg_p = 101, phi_hat_p = 0;
    int hecke_k = 1, nu_n = 4, phi_n = 4, phi_k = 1, phi_l = 0, todd_degree = 1;
    int dist_max_n = 6, dist_max_k = 5;
    bool check_theorem1 = false, p_squared = false, nu_verify = false, check_kp = false, table3 = false;
    std::string avg_family = "l1";

    auto* count = app.add_subcommand("count", "count lattice points of a dilate");
    add_common(count, o_count);
    count->add_option("--t", count_t, "dilation factor")->required();

    auto* ehr = app.add_subcommand("ehrhart", "Ehrhart polynomial");
    add_common(ehr, o_ehr);

    auto* hecke = app.add_subcommand("hecke", "Hecke operator T(p,k) on the Ehrhart polynomial");
    add_common(hecke, o_hecke);
    hecke->add_option("--p", hecke_p, "prime")->required();
    hecke->add_option("--k", hecke_k, "level");
    hecke->add_flag("--check-theorem1", check_theorem1, "verify the eigenvalue ratios");
    hecke->add_flag("--p-squared", p_squared, "also compute T(p^2) directly and via the Hecke algebra");

    auto* nu = app.add_subcommand("nu", "eigenvalue table for dimension n");
    add_common(nu, o_nu, false);
    nu->add_option("--n", nu_n, "dimension");
    nu->add_flag("--verify", nu_verify, "run the triple-oracle verification at p = 2, 3");

    auto* phi = app.add_subcommand("phi", "positivity polynomial Phi_{n,k,l}");
    add_common(phi, o_phi, false);
    phi->add_option("--n", phi_n)->required();
    phi->add_option("--k", phi_k)->required();
    phi->add_option("--l", phi_l)->required();
    phi->add_option("--phi-hat-p", phi_hat_p, "also emit the Schubert expansion at this prime");

    auto* todd = app.add_subcommand("todd", "Todd operator terms and coefficient checks");
    add_common(todd, o_todd);
    todd->add_option("--degree", todd_degree, "homogeneous degree l");
    todd->add_flag("--check-kp", check_kp, "check c_{n-l} against the interpolated Ehrhart polynomial");
    todd->add_flag("--table3", table3, "stratified edge report (3-dim nonsingular polytopes)");
    todd->add_option("--p", todd_p, "prime for --table3");

    auto* dist = app.add_subcommand("dist", "circle-coefficient distribution relations");
    add_common(dist, o_dist, false);
    dist->add_option("--max-n", dist_max_n);
    dist->add_option("--max-k", dist_max_k);

    auto* avg = app.add_subcommand("avg", "average regularized Ehrhart polynomial over a family");
    add_common(avg, o_avg);
    avg->add_option("--p", avg_p, "prime");
    avg->add_option("--family", avg_family, "l1 or psquared");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (count->parsed()) return cmd_count(o_count, count_t);
        if (ehr->parsed()) return cmd_ehrhart(o_ehr);
        if (hecke->parsed()) return cmd_hecke(o_hecke, hecke_p, hecke_k, check_theorem1, p_squared);
        if (nu->parsed()) return cmd_nu(o_nu, nu_n, nu_verify);
        if (phi->parsed()) return cmd_phi(o_phi, phi_n, phi_k, phi_l, phi_hat_p);
        if (todd->parsed()) return cmd_todd(o_todd, todd_degree, check_kp, table3, todd_p);
        if (dist->parsed()) return cmd_dist(o_dist, dist_max_n, dist_max_k);
        if (avg->parsed()) return cmd_avg(o_avg, avg_p, avg_family);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace polyhecke::cli
