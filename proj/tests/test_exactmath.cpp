#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "polyhecke/cyclotomic.hpp"
#include "polyhecke/numbers.hpp"
#include "polyhecke/rat.hpp"
#include "polyhecke/unipoly.hpp"

using namespace polyhecke;

TEST_CASE("rational construction and serialization") {
    CHECK(rat(-4, 8) == rat(-1, 2));
    CHECK(to_string(rat(-1, 2)) == "-1/2");
    CHECK(to_string(rat(6, 3)) == "2");
    CHECK(rat_from_string("3/4") == rat(3, 4));
    CHECK(rat_from_string("-7") == rat(-7));
    CHECK_THROWS(rat_from_string("1/0/2"));
    CHECK(rat_from_string(to_string(rat(22, -7))) == rat(-22, 7));
    CHECK(floor_rat(rat(-3, 2)) == -2);
    CHECK(ceil_rat(rat(-3, 2)) == -1);
    CHECK(rat_pow(rat(2, 3), -2) == rat(9, 4));
}

TEST_CASE("bernoulli numbers in the B_1 = +1/2 convention") {
    CHECK(bernoulli(0) == 1);
    CHECK(bernoulli(1) == rat(1, 2));
    CHECK(bernoulli(2) == rat(1, 6));
    CHECK(bernoulli(4) == rat(-1, 30));
    CHECK(bernoulli(3) == 0);
    for (unsigned k = 2; k <= 10; ++k) CHECK(bernoulli(2 * k - 1) == 0);
    CHECK(bernoulli(12) == rat(-691, 2730));
}

TEST_CASE("gaussian integers [n]") {
    CHECK(gaussian_int(0, Int(5)) == 0);
    CHECK(gaussian_int(2, Int(2)) == 3);
    CHECK(gaussian_int(3, Int(3)) == 13);
    for (long p : {2L, 3L, 5L, 7L})
        for (unsigned n = 0; n <= 6; ++n)
            CHECK(gaussian_int(n, Int(p)) * (p - 1) + 1 == int_pow(Int(p), n));
}

TEST_CASE("interpolation is exact") {
    auto q = interpolate({{Rat(0), Rat(1)}, {Rat(1), Rat(4)}, {Rat(2), Rat(9)}});
    CHECK(q == UniPoly({Rat(1), Rat(2), Rat(1)}));

    auto c = interpolate({{Rat(0), Rat(1)}});
    CHECK(c == UniPoly::constant(Rat(1)));

    auto r = interpolate({{Rat(0), Rat(1)}, {Rat(1), Rat(3)}, {Rat(2), Rat(7)}, {Rat(3), Rat(13)}});
    CHECK(r == UniPoly({Rat(1), Rat(1), Rat(1)}));

    CHECK_THROWS(interpolate({{Rat(0), Rat(1)}, {Rat(0), Rat(2)}}));

    // exactness: re-evaluation reproduces the ordinates with no tolerance
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<std::pair<Rat, Rat>> pts;
        for (int i = 0; i < 5; ++i)
            pts.emplace_back(Rat((long)i) + rat((long)(rng() % 3), 7), rat((long)(rng() % 2000) - 1000, 1 + (long)(rng() % 9)));
        auto poly = interpolate(pts);
        for (const auto& [x, y] : pts) CHECK(poly(x) == y);
    }
}

TEST_CASE("polynomial arithmetic basics") {
    UniPoly f({Rat(1), Rat(2), Rat(1)});
    CHECK(f.str("t") == "t^2 + 2t + 1");
    CHECK(f(Rat(3)) == 16);
    CHECK(f.scale_arg(Rat(2)) == UniPoly({Rat(1), Rat(4), Rat(4)}));
    CHECK((f * f).degree() == 4);
    CHECK(f.drop_degree(2) == UniPoly({Rat(1), Rat(2)}));
    auto [q, r] = (f * f).divmod(f);
    CHECK(q == f);
    CHECK(r.is_zero());
}

TEST_CASE("cyclotomic powers reduce canonically") {
    CHECK(Cyclo::zeta_pow(2, 1) == Cyclo(Rat(-1)));
    CHECK(Cyclo::zeta_pow(4, 2) == Cyclo(Rat(-1)));
    CHECK(Cyclo::zeta_pow(3, 1) + Cyclo::zeta_pow(3, 2) == Cyclo(Rat(-1)));
    CHECK(Cyclo::zeta_pow(6, 6) == Cyclo(Rat(1)));
    CHECK(Cyclo::zeta_pow(5, 7) == Cyclo::zeta_pow(5, 2));
    CHECK(Cyclo::zeta_pow(12, 6) == Cyclo(Rat(-1)));
}

TEST_CASE("cyclotomic ring axioms on random triples") {
    std::mt19937 rng(11);
    auto random_elt = [&](long m) {
        Cyclo x;
        for (int i = 0; i < 3; ++i) {
            long num = (long)(rng() % 7) - 3;
            long e = (long)(rng() % (unsigned long)m);
            x += Cyclo(rat(num, 1 + (long)(rng() % 3))) * Cyclo::zeta_pow(m, e);
        }
        return x;
    };
    for (long m = 1; m <= 12; ++m) {
        for (int trial = 0; trial < 8; ++trial) {
            Cyclo a = random_elt(m), b = random_elt(m), c = random_elt(m);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            if (!a.is_zero()) CHECK(a * a.inverse() == Cyclo(Rat(1)));
        }
    }
}

TEST_CASE("mixed-conductor arithmetic") {
    // zeta_6 = -zeta_3^2
    CHECK(Cyclo::zeta_pow(6, 1) == -Cyclo::zeta_pow(3, 2));
    Cyclo i = Cyclo::zeta_pow(4, 1);
    Cyclo z3 = Cyclo::zeta_pow(3, 1);
    Cyclo prod = i * z3;  // a primitive 12th root
    CHECK(prod == Cyclo::zeta_pow(12, 3 + 4));
}

TEST_CASE("Galois-invariant sums reduce to constants") {
    for (long m : {3L, 4L, 5L, 7L, 8L, 9L, 12L}) {
        Cyclo full;
        for (long j = 1; j < m; ++j) full += Cyclo::zeta_pow(m, j);
        CHECK(full.is_rational());
        CHECK(full.as_rational() == -1);

        Cyclo squares;
        for (long j = 1; j < m; ++j) squares += Cyclo::zeta_pow(m, 2 * j);
        CHECK(squares.is_rational());
    }
    // a symmetric sum of inverses for prime m: sum 1/(1 - zeta^j) = (m-1)/2
    for (long m : {3L, 5L, 7L, 11L}) {
        Cyclo s;
        for (long j = 1; j < m; ++j)
            s += (Cyclo(Rat(1)) - Cyclo::zeta_pow(m, j)).inverse();
        CHECK(s.is_rational());
        CHECK(s.as_rational() == rat(m - 1, 2));
    }
    // a single primitive root is not rational
    CHECK(!Cyclo::zeta_pow(5, 1).is_rational());
    CHECK_THROWS(Cyclo::zeta_pow(5, 1).as_rational());
}

TEST_CASE("cyclotomic polynomial table") {
    CHECK(Cyclo::cyclotomic_polynomial(1) == UniPoly({Rat(-1), Rat(1)}));
    CHECK(Cyclo::cyclotomic_polynomial(2) == UniPoly({Rat(1), Rat(1)}));
    CHECK(Cyclo::cyclotomic_polynomial(6) == UniPoly({Rat(1), Rat(-1), Rat(1)}));
    CHECK(Cyclo::cyclotomic_polynomial(12).degree() == 4);
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(60) == 16);
}
