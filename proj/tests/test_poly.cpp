#include "w3/poly.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using w3::exact::Poly;
using w3::exact::Rational;
using w3::exact::Var;

namespace {

Poly t() { return Poly::variable(Var::t); }
Poly w() { return Poly::variable(Var::w); }
Poly a() { return Poly::variable(Var::alpha); }

Poly random_poly(std::mt19937_64& rng) {
    Poly p;
    int nTerms = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < nTerms; ++i) {
        Poly term(Rational(static_cast<long long>(rng() % 11) - 5));
        for (Var v : {Var::t, Var::w, Var::alpha}) {
            int e = static_cast<int>(rng() % 3);
            for (int j = 0; j < e; ++j) term *= Poly::variable(v);
        }
        p += term;
    }
    return p;
}

} // namespace

TEST_CASE("basic algebra") {
    Poly p = (t() + w()).pow(2);
    Poly expected = t() * t() + Rational(2) * (t() * w()) + w() * w();
    REQUIRE(p == expected);
    REQUIRE((p - expected).is_zero());
    REQUIRE(Poly(Rational(0)).is_zero());
    REQUIRE(Poly(Rational(5)).as_rational() == Rational(5));
    REQUIRE_THROWS_AS(t().as_rational(), std::domain_error);
    REQUIRE(t().degree(Var::t) == 1);
    REQUIRE((t() * t() * w()).degree(Var::t) == 2);
    REQUIRE((t() * t() * w()).degree(Var::alpha) == 0);
    REQUIRE_THROWS_AS(t().pow(-1), std::domain_error);
}

TEST_CASE("ring axioms on seeded random triples") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 30; ++i) {
        Poly x = random_poly(rng), y = random_poly(rng), z = random_poly(rng);
        REQUIRE(x + y == y + x);
        REQUIRE(x * y == y * x);
        REQUIRE((x + y) * z == x * z + y * z);
        REQUIRE((x * y) * z == x * (y * z));
        REQUIRE(x - x == Poly());
    }
}

TEST_CASE("substitution and evaluation") {
    Poly p = t() * t() + w();
    Poly q = p.substitute({{Var::t, a() + Poly(Rational(1))}});
    REQUIRE(q == a() * a() + Rational(2) * a() + Poly(Rational(1)) + w());
    REQUIRE(p.eval({{Var::t, Rational(2)}, {Var::w, Rational(3)}}) == Rational(7));
    REQUIRE_THROWS_AS(p.eval({{Var::t, Rational(2)}}), std::domain_error);

    // Composition: substituting the curve parametrization into the curve
    // generator must collapse to zero.
    Poly tAlpha = Rational(1, 2) * (a() * a() - a());
    Poly wAlpha = Rational(1, 6) * (a() * (a() - Poly(Rational(1))) * (Rational(2) * a() - Poly(Rational(1))));
    Poly f = w() * w() - Rational(8, 9) * t().pow(3) - Rational(1, 9) * t().pow(2);
    REQUIRE(f.substitute({{Var::t, tAlpha}, {Var::w, wAlpha}}).is_zero());
}

TEST_CASE("canonical text form") {
    Poly curve = w() * w() - Rational(8, 9) * t().pow(3) - Rational(1, 9) * t().pow(2);
    REQUIRE(curve.str() == "w^2 - 8/9*t^3 - 1/9*t^2");
    REQUIRE(Poly().str() == "0");
    REQUIRE(Poly(Rational(-3, 4)).str() == "-3/4");
    REQUIRE((w() * w() + Rational(12) * t() * t() + Rational(9, 2) * t()).str() ==
            "w^2 + 12*t^2 + 9/2*t");
    REQUIRE((-w()).str() == "-w");
    REQUIRE((Rational(4) * (t() * t()) + Rational(7, 2) * t()).str() == "4*t^2 + 7/2*t");
}
