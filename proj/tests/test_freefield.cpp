#include "w3/freefield.hpp"
#include "w3/zhu.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace w3::freefield;
using w3::core::Family;
using w3::exact::Poly;
using w3::exact::Rational;
using w3::exact::Var;

namespace {

Poly sym_alpha() { return Poly::variable(Var::alpha); }

BosonState vac0() { return BosonState::vacuum(Poly(0)); }

} // namespace

TEST_CASE("oscillator commutation relations") {
    BosonState v = BosonState::vacuum(sym_alpha());
    REQUIRE(j_apply(1, j_apply(-1, v)) == v);          // [j_1, j_{-1}] = 1
    REQUIRE(j_apply(1, j_apply(-2, v)).is_zero());     // modes of different magnitude commute
    REQUIRE(j_apply(2, j_apply(-2, v)) == Rational(2) * v);
    // Two copies of j_{-2}: contraction counts multiplicity.
    REQUIRE(j_apply(2, j_apply(-2, j_apply(-2, v))) == Rational(4) * j_apply(-2, v));
    REQUIRE(j_apply(0, v) == sym_alpha() * v);
    REQUIRE(j_apply(3, v).is_zero());
}

TEST_CASE("vacuum weights are the curve parametrization") {
    auto [t, w] = highest_weight(sym_alpha());
    Poly a = sym_alpha();
    REQUIRE(t == Rational(1, 2) * (a * a - a));
    REQUIRE(w == Rational(1, 6) * (a * (a - Poly(1)) * (Rational(2) * a - Poly(1))));
    // Rational evaluations agree with the abstract parametrization.
    for (int num = -6; num <= 6; ++num) {
        Rational alpha(num, 2);
        auto [tr, wr] = highest_weight(alpha);
        auto [tc, wc] = w3::zhu::weight_from_alpha(alpha);
        REQUIRE(tr == tc);
        REQUIRE(wr == wc);
    }
}

TEST_CASE("realized Virasoro structure on the Fock space") {
    BosonState v = BosonState::vacuum(sym_alpha());
    // L_{-1}|alpha> = alpha j_{-1}|alpha>.
    REQUIRE(boson_L(-1, v) == sym_alpha() * j_apply(-1, v));
    // Every oscillator word is an L_0 eigenvector of eigenvalue t + level.
    auto [t, w] = highest_weight(sym_alpha());
    for (int level = 0; level <= 4; ++level) {
        for (const auto& key : boson_basis(level)) {
            BosonState mono = boson_monomial(sym_alpha(), key);
            REQUIRE(boson_L(0, mono) == (t + Poly(Rational(level))) * mono);
        }
    }
}

TEST_CASE("boson basis enumerates partitions") {
    int expected[] = {1, 1, 2, 3, 5, 7, 11};
    for (int l = 0; l <= 6; ++l) REQUIRE(boson_basis(l).size() == static_cast<size_t>(expected[l]));
    auto b2 = boson_basis(2);
    REQUIRE(b2[0] == BosonKey{1, 1});
    REQUIRE(b2[1] == BosonKey{2});
}

TEST_CASE("charged fermion pair base cases") {
    FermionState vac = FermionState::vacuum();
    REQUIRE(c_apply(0, vac).is_zero());                 // no b(0) to contract
    REQUIRE(b_apply(1, vac).is_zero());
    REQUIRE(b_apply(1, b_apply(0, vac)).is_zero());     // still no c(-1)
    REQUIRE(b_apply(0, b_apply(0, vac)).is_zero());     // b(0)^2 = 0
    // {b(1), c(-1)} = 1 on the vacuum.
    REQUIRE(b_apply(1, c_apply(-1, vac)) == vac);
    REQUIRE(c_apply(1, b_apply(-1, vac)) == vac);
}

TEST_CASE("fermion anticommutation signs") {
    FermionState vac = FermionState::vacuum();
    REQUIRE(b_apply(-1, b_apply(-1, vac)).is_zero());
    REQUIRE((b_apply(-2, b_apply(-1, vac)) + b_apply(-1, b_apply(-2, vac))).is_zero());
    REQUIRE((c_apply(-2, c_apply(-1, vac)) + c_apply(-1, c_apply(-2, vac))).is_zero());
    // b and c creations anticommute across the block order.
    FermionState bc = b_apply(-1, c_apply(-1, vac));
    FermionState cb = c_apply(-1, b_apply(-1, vac));
    REQUIRE((bc + cb).is_zero());
    REQUIRE(bc == fermion_monomial({{1}, {1}}));
}

TEST_CASE("fermion charge and conformal weight") {
    FermionState vac = FermionState::vacuum();
    FermionState state = b_apply(-1, c_apply(-1, vac)); // level 2, charge 0
    REQUIRE(fermion_L(0, state) == Rational(2) * state);
    REQUIRE(fermion_j(0, state).is_zero());
    REQUIRE(fermion_j(0, b_apply(0, vac)) == b_apply(0, vac));
    REQUIRE(fermion_j(0, c_apply(-1, vac)) == Rational(-1) * c_apply(-1, vac));
    REQUIRE(fermion_L(0, c_apply(-1, vac)) == c_apply(-1, vac));
}

TEST_CASE("fermion graded dimensions count partitions at charge zero") {
    int expected[] = {1, 1, 2, 3, 5, 7, 11};
    for (int l = 0; l <= 6; ++l)
        REQUIRE(fermion_basis(l, 0).size() == static_cast<size_t>(expected[l]));
    // Shifted charge sectors.
    REQUIRE(fermion_basis(0, 1).size() == 1);  // b(0)|0>
    REQUIRE(fermion_basis(1, -1).size() == 1); // c(-1)|0>
    REQUIRE(fermion_basis(0, -1).empty());     // no level-0 negative charge
}

TEST_CASE("realized fermion modes preserve charge and shift level") {
    for (int charge = -1; charge <= 1; ++charge)
        for (int l = 0; l <= 3; ++l)
            for (const auto& key : fermion_basis(l, charge))
                for (int n = -2; n <= 2; ++n) {
                    FermionState img = fermion_L(n, fermion_monomial(key));
                    for (const auto& [k, c] : img.terms()) {
                        REQUIRE(fermion_level(k) == l - n);
                        REQUIRE(fermion_charge(k) == charge);
                    }
                    img = fermion_W(n, fermion_monomial(key));
                    for (const auto& [k, c] : img.terms()) {
                        REQUIRE(fermion_level(k) == l - n);
                        REQUIRE(fermion_charge(k) == charge);
                    }
                }
}

TEST_CASE("explicit truncation matches the intrinsic level bound") {
    BosonState v = boson_monomial(sym_alpha(), {2, 1}); // level 3
    REQUIRE(boson_L(-2, v, 3) == boson_L(-2, v));
    REQUIRE(boson_L(-2, v, 8) == boson_L(-2, v));
    REQUIRE(boson_W(1, v, 7) == boson_W(1, v));
    REQUIRE_THROWS_AS(boson_L(-2, v, 2), std::invalid_argument);
    FermionState f = fermion_monomial({{2}, {1}}); // level 3
    REQUIRE(fermion_W(-1, f, 3) == fermion_W(-1, f));
    REQUIRE(fermion_W(-1, f, 9) == fermion_W(-1, f));
    REQUIRE_THROWS_AS(fermion_j(0, f, 1), std::invalid_argument);
}

TEST_CASE("bosonization of the first oscillator") {
    REQUIRE(bosonize_word({1}) == fermion_monomial({{0}, {1}}));
    // j_{-1}^2 |0> lands at level 2 with charge 0.
    FermionState sq = bosonize_word({1, 1});
    REQUIRE_FALSE(sq.is_zero());
    for (const auto& [k, c] : sq.terms()) {
        REQUIRE(fermion_level(k) == 2);
        REQUIRE(fermion_charge(k) == 0);
    }
}

TEST_CASE("realized quadratic tail matches its module counterpart") {
    // Lambda_{-4}|0> = L_{-2}^2|0> - (3/5) L_{-4}|0>, realized.
    BosonState lhs = boson_lambda(-4, vac0());
    BosonState rhs = boson_L(-2, boson_L(-2, vac0())) - Rational(3, 5) * boson_L(-4, vac0());
    REQUIRE(lhs == rhs);
    REQUIRE(boson_lambda(-3, vac0()).is_zero());
}

TEST_CASE("realized generators close the full commutator table") {
    RelationReport rep = verify_w3_relations(3);
    REQUIRE(rep.pairsChecked == 147);
    REQUIRE(rep.failures == 0);
    REQUIRE(rep.ok());
}

TEST_CASE("charge-zero dictionary is a graded intertwining isomorphism") {
    BosonizationReport rep = verify_bosonization(3);
    REQUIRE(rep.bosonDims == std::vector<int>{1, 1, 2, 3});
    REQUIRE(rep.fermionDims == std::vector<int>{1, 1, 2, 3});
    REQUIRE(rep.dimsMatch);
    REQUIRE(rep.invertible);
    REQUIRE(rep.intertwines);
    REQUIRE(rep.ok());
}
