#include "w3/winf.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace w3::winf;
using w3::exact::Rational;

TEST_CASE("euler polynomial helpers") {
    // (D+1)^2 = D^2 + 2D + 1.
    DPoly dsq{Rational(0), Rational(0), Rational(1)};
    REQUIRE(dp_shift(dsq, Rational(1)) == DPoly{Rational(1), Rational(2), Rational(1)});
    // D(D-1)(D-2) = D^3 - 3D^2 + 2D.
    REQUIRE(dp_falling(3) == DPoly{Rational(0), Rational(2), Rational(-3), Rational(1)});
    REQUIRE(dp_falling(0) == DPoly{Rational(1)});
    REQUIRE(dp_eval(dsq, Rational(-3)) == Rational(9));
}

TEST_CASE("frozen bracket values") {
    DiffOp t1 = make_diffop(1, {Rational(1)});
    DiffOp tm1 = make_diffop(-1, {Rational(1)});
    DiffOp comm = bracket(t1, tm1);
    REQUIRE(comm.terms.empty()); // polynomial part cancels exactly
    REQUIRE(comm.central == Rational(1));

    DiffOp d = make_diffop(0, {Rational(0), Rational(1)});
    DiffOp dsq = make_diffop(0, {Rational(0), Rational(0), Rational(1)});
    REQUIRE(bracket(d, dsq).is_zero()); // grade-zero operators commute
}

TEST_CASE("cocycle values and structure") {
    DPoly one{Rational(1)};
    DPoly d{Rational(0), Rational(1)};
    REQUIRE(detail::pair_cocycle(2, one, -2, one) == Rational(2));
    REQUIRE(detail::pair_cocycle(1, d, -1, d) == Rational(0));
    REQUIRE(detail::pair_cocycle(2, one, -1, one) == Rational(0)); // grades must cancel
    REQUIRE(detail::pair_cocycle(0, d, 0, d) == Rational(0));      // grade zero contributes nothing

    std::mt19937_64 rng(11);
    for (int i = 0; i < 20; ++i) {
        DiffOp x = random_diffop(rng);
        DiffOp y = random_diffop(rng);
        REQUIRE(cocycle(x, y) == -cocycle(y, x));
        REQUIRE((bracket(x, y) + bracket(y, x)).is_zero());
        REQUIRE(bracket(x, x).is_zero());
    }
}

TEST_CASE("grading of the bracket") {
    std::mt19937_64 rng(5);
    for (int r = -3; r <= 3; ++r)
        for (int s = -3; s <= 3; ++s) {
            DPoly f(3), g(2);
            for (auto& c : f) c = random_rational(rng);
            for (auto& c : g) c = random_rational(rng);
            f[2] = Rational(1);
            g[1] = Rational(1);
            DiffOp comm = bracket(make_diffop(r, f), make_diffop(s, g));
            for (const auto& [grade, p] : comm.terms) REQUIRE(grade == r + s);
        }
}

TEST_CASE("a central charge -2 Virasoro sits inside") {
    // The operators -t^m D obey the Virasoro algebra whose central term is
    // -(m^3 - m)/6, i.e. (c/12)(m^3 - m) with c = -2.
    for (int m = -3; m <= 3; ++m)
        for (int n = -3; n <= 3; ++n) {
            DiffOp comm = bracket(basis_L(1, m), basis_L(1, n));
            DiffOp expected = Rational(m - n) * basis_L(1, m + n);
            if (m + n == 0) expected.central += Rational(-(m * m * m - m), 6);
            INFO("m=" << m << " n=" << n);
            REQUIRE(comm == expected);
        }
    DiffOp c22 = bracket(basis_L(1, 2), basis_L(1, -2));
    DiffOp expect22 = Rational(4) * basis_L(1, 0);
    expect22.central = Rational(-1);
    REQUIRE(c22 == expect22);
}

TEST_CASE("the two bases agree in low order and convert exactly") {
    for (int k = -2; k <= 2; ++k) {
        REQUIRE(basis_J(0, k) == basis_L(0, k));
        REQUIRE(basis_J(1, k) == basis_L(1, k));
    }
    // t^2 (d/dt)^2 at grade 0: D(D-1) = D^2 - D.
    BasisCoords expected{{{2, 0}, Rational(1)}, {{1, 0}, Rational(-1)}};
    REQUIRE(to_L_coords(basis_J(2, 0)) == expected);
    REQUIRE(from_L_coords(to_L_coords(basis_J(2, 0))) == basis_J(2, 0));

    std::mt19937_64 rng(3);
    for (int i = 0; i < 15; ++i) {
        DiffOp x = random_diffop(rng);
        x.central = Rational(0); // coordinates cover the non-central part
        REQUIRE(from_L_coords(to_L_coords(x)) == x);
        REQUIRE(from_J_coords(to_J_coords(x)) == x);
    }
    REQUIRE_THROWS_AS(basis_J(-1, 0), std::invalid_argument);
    REQUIRE_THROWS_AS(basis_L(-1, 0), std::invalid_argument);
}

TEST_CASE("reduction central charges") {
    REQUIRE(dsr_central_charge(3, Rational(-3, 2)) == Rational(-2));
    REQUIRE(dsr_central_charge(3, Rational(-7, 3)) == Rational(-2));
    REQUIRE(dsr_central_charge(3, Rational(-7, 2)) == Rational(110));
    REQUIRE_THROWS_AS(dsr_central_charge(3, Rational(-3)), std::invalid_argument);
    REQUIRE_THROWS_AS(dsr_central_charge(1, Rational(0)), std::invalid_argument);

    // c depends on k only through x + 1/x with x = k + n.
    std::mt19937_64 rng(17);
    for (int i = 0; i < 10; ++i) {
        Rational x = random_rational(rng);
        if (x.is_zero()) continue;
        for (long long n = 2; n <= 5; ++n) {
            Rational k = x - Rational(n);
            Rational kPartner = x.inverse() - Rational(n);
            REQUIRE(dsr_central_charge(n, k) == dsr_central_charge(n, kPartner));
        }
    }

    // Both boundary levels give c = -2 for every rank.
    for (long long n = 2; n <= 10; ++n) {
        Rational k1 = Rational(-n) + Rational(n, n - 1);
        Rational k2 = Rational(-n) + Rational(n - 1, n);
        REQUIRE(dsr_central_charge(n, k1) == Rational(-2));
        REQUIRE(dsr_central_charge(n, k2) == Rational(-2));
    }
}

TEST_CASE("module labels") {
    ModuleLabel zero = classify(Rational(0), Rational(0));
    REQUIRE(zero.t == Rational(0));
    REQUIRE(zero.w == Rational(0));
    ModuleLabel two = classify(Rational(2), Rational(1, 3));
    REQUIRE(two.t == Rational(1));
    REQUIRE(two.w == Rational(1));
    REQUIRE_THROWS_AS(classify(Rational(1), Rational(0)), std::invalid_argument);
    REQUIRE(classify(Rational(2), Rational(1, 3)) == two);
    REQUIRE_FALSE(classify(Rational(2), Rational(0)) == two);
    REQUIRE_FALSE(classify(Rational(-1), Rational(1, 3)) == two);
}

TEST_CASE("seeded random elements are reproducible") {
    std::mt19937_64 a(123), b(123), c(124);
    bool anyDifferent = false;
    for (int i = 0; i < 5; ++i) {
        DiffOp xa = random_diffop(a);
        DiffOp xb = random_diffop(b);
        if (!(xa == random_diffop(c))) anyDifferent = true;
        REQUIRE(xa == xb);
    }
    REQUIRE(anyDifferent);
}

TEST_CASE("antisymmetry and the cyclic identity hold on random samples") {
    JacobiReport rep = verify_jacobi(50, 7);
    REQUIRE(rep.samples == 50);
    REQUIRE(rep.antisymmetryFailures == 0);
    REQUIRE(rep.jacobiFailures == 0);
    REQUIRE(rep.ok());
}
