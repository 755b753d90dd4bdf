#include "w3/expr.hpp"
#include "w3/pbw.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <vector>

using namespace w3::core;
using w3::exact::Poly;
using w3::exact::Rational;
using w3::exact::Var;

namespace {

const W3Module& vac() {
    static const W3Module m = W3Module::vacuum(Rational(-2));
    return m;
}
const W3Module& verma() {
    static const W3Module m = W3Module::verma(Rational(-2));
    return m;
}

StateVector sv(const char* text, const W3Module& m) { return parse_vector(text, m); }

// Independent bipartition counter: partitions of `level` into L-parts >= lMin
// and Wt-parts >= wMin, counted by direct recursion over the W-part size.
int bipartition_count(int level, int lMin, int wMin) {
    auto countParts = [](auto&& self, int total, int minPart) -> int {
        if (total == 0) return 1;
        int acc = 0;
        for (int part = minPart; part <= total; ++part) acc += self(self, total - part, part);
        return acc;
    };
    int acc = 0;
    for (int wLevel = 0; wLevel <= level; ++wLevel)
        acc += countParts(countParts, wLevel, wMin) * countParts(countParts, level - wLevel, lMin);
    return acc;
}

} // namespace

TEST_CASE("vacuum base cases") {
    REQUIRE(apply_mode({Family::L, -1}, StateVector::vacuum(vac())).is_zero());
    REQUIRE(apply_mode({Family::L, 0}, StateVector::vacuum(vac())).is_zero());
    REQUIRE(apply_mode({Family::Wt, -2}, StateVector::vacuum(vac())).is_zero());
    REQUIRE(apply_mode({Family::L, -2}, StateVector::vacuum(vac())) == sv("L(-2)vac", vac()));
    REQUIRE(apply_mode({Family::Wt, -3}, StateVector::vacuum(vac())) == sv("Wt(-3)vac", vac()));
}

TEST_CASE("highest-weight base cases") {
    StateVector hw = StateVector::vacuum(verma());
    REQUIRE(apply_mode({Family::L, 1}, hw).is_zero());
    REQUIRE(apply_mode({Family::Wt, 2}, hw).is_zero());
    REQUIRE(apply_mode({Family::L, 0}, hw) == Poly::variable(Var::t) * hw);
    REQUIRE(apply_mode({Family::Wt, 0}, hw) == Poly::variable(Var::w) * hw);
    REQUIRE(apply_mode({Family::L, -1}, hw) == sv("L(-1)vac", verma()));
}

TEST_CASE("straightening against the vacuum") {
    // L_1 L_-2 |0> = 3 L_-1 |0> = 0.
    REQUIRE(apply_mode({Family::L, 1}, sv("L(-2)vac", vac())).is_zero());
    // L_2 L_-2 |0> = (4 L_0 - 1)|0> = -|0>.
    REQUIRE(apply_mode({Family::L, 2}, sv("L(-2)vac", vac())) ==
            Rational(-1) * StateVector::vacuum(vac()));
    // L_0 is the level grading.
    REQUIRE(apply_mode({Family::L, 0}, sv("L(-2)L(-4)vac", vac())) ==
            Rational(6) * sv("L(-2)L(-4)vac", vac()));
    REQUIRE(apply_mode({Family::L, 0}, sv("Wt(-3)Wt(-3)vac", vac())) ==
            Rational(6) * sv("Wt(-3)Wt(-3)vac", vac()));
    // Ordering: L_-4 L_-2 |0> straightens to L_-2 L_-4 |0> - 2 L_-6 |0>.
    REQUIRE(apply_mode({Family::L, -4}, sv("L(-2)vac", vac())) ==
            sv("L(-2)L(-4)vac - 2*L(-6)vac", vac()));
    REQUIRE(apply_mode({Family::L, -2}, sv("L(-4)vac", vac())) == sv("L(-2)L(-4)vac", vac()));
}

TEST_CASE("straightening in the highest-weight module") {
    StateVector hw = StateVector::vacuum(verma());
    Poly t = Poly::variable(Var::t);
    // L_1 L_-1 = 2 L_0 on the highest-weight vector.
    REQUIRE(apply_mode({Family::L, 1}, sv("L(-1)vac", verma())) == (Rational(2) * t) * hw);
    // Wt_1 Wt_-1 = -(3/10) L_0 + 4 Lambda_0 with Lambda_0 -> t^2 + t/5:
    // eigenvalue 4t^2 + t/2.
    REQUIRE(apply_mode({Family::Wt, 1}, sv("Wt(-1)vac", verma())) ==
            (Rational(4) * t * t + Rational(1, 2) * t) * hw);
}

TEST_CASE("quadratic tail examples") {
    REQUIRE(lambda_apply(0, StateVector::vacuum(vac())).is_zero());
    REQUIRE(lambda_apply(-3, StateVector::vacuum(vac())).is_zero());
    REQUIRE(lambda_apply(-4, StateVector::vacuum(vac())) ==
            sv("L(-2)L(-2)vac - 3/5*L(-4)vac", vac()));
    REQUIRE(lambda_apply(-5, StateVector::vacuum(vac())) ==
            sv("2*L(-2)L(-3)vac - 14/5*L(-5)vac", vac()));

    StateVector hw = StateVector::vacuum(verma());
    Poly t = Poly::variable(Var::t);
    REQUIRE(lambda_apply(0, hw) == (t * t + Rational(1, 5) * t) * hw);
    REQUIRE(lambda_apply(1, hw).is_zero());
}

TEST_CASE("graded dimensions and basis content") {
    std::vector<int> expected{1, 0, 1, 2, 3, 4, 8};
    for (int level = 0; level <= 6; ++level) {
        INFO("level " << level);
        REQUIRE(graded_basis(vac(), level).size() == static_cast<size_t>(expected[level]));
        REQUIRE(static_cast<int>(graded_basis(vac(), level).size()) ==
                bipartition_count(level, 2, 3));
        REQUIRE(static_cast<int>(graded_basis(verma(), level).size()) ==
                bipartition_count(level, 1, 1));
    }

    auto level5 = graded_basis(vac(), 5);
    std::vector<PBWMonomial> expected5{
        PBWMonomial{{}, {-5}},       // Wt(-5)
        PBWMonomial{{-5}, {}},       // L(-5)
        PBWMonomial{{-2}, {-3}},     // L(-2)Wt(-3)
        PBWMonomial{{-2, -3}, {}},   // L(-2)L(-3)
    };
    REQUIRE(level5 == expected5);
}

TEST_CASE("action consistency: commutator table vs straightening engine") {
    // [a, b] v computed from the table must equal a(b v) - b(a v) for every
    // basis vector. This ties the straightening recursion to the algebra.
    for (int la = 0; la <= 4; ++la)
        for (const auto& word : graded_basis(vac(), la)) {
            StateVector v = StateVector::monomial(vac(), word);
            for (int m = -3; m <= 3; ++m)
                for (int n = -3; n <= 3; ++n)
                    for (auto [fa, fb] : {std::pair{Family::L, Family::L},
                                          std::pair{Family::L, Family::Wt},
                                          std::pair{Family::Wt, Family::Wt}}) {
                        ModeSymbol a{fa, m}, b{fb, n};
                        StateVector lhs = apply_expr(commutator(a, b, vac().params), v);
                        StateVector rhs =
                            apply_mode(a, apply_mode(b, v)) - apply_mode(b, apply_mode(a, v));
                        INFO(mode_str(a) << " " << mode_str(b) << " on " << word_str(word));
                        REQUIRE(lhs == rhs);
                    }
        }
}

TEST_CASE("action consistency with symbolic weights") {
    for (int la = 0; la <= 3; ++la)
        for (const auto& word : graded_basis(verma(), la)) {
            StateVector v = StateVector::monomial(verma(), word);
            for (int m = -2; m <= 2; ++m)
                for (int n = -2; n <= 2; ++n)
                    for (auto [fa, fb] : {std::pair{Family::L, Family::L},
                                          std::pair{Family::L, Family::Wt},
                                          std::pair{Family::Wt, Family::Wt}}) {
                        ModeSymbol a{fa, m}, b{fb, n};
                        StateVector lhs = apply_expr(commutator(a, b, verma().params), v);
                        StateVector rhs =
                            apply_mode(a, apply_mode(b, v)) - apply_mode(b, apply_mode(a, v));
                        REQUIRE(lhs == rhs);
                    }
        }
}

TEST_CASE("modes shift the grading by their index") {
    for (int level = 0; level <= 5; ++level)
        for (const auto& word : graded_basis(vac(), level))
            for (int n = -2; n <= 2; ++n)
                for (Family f : {Family::L, Family::Wt}) {
                    StateVector img = apply_mode({f, n}, StateVector::monomial(vac(), word));
                    if (img.is_zero()) continue;
                    auto lvl = img.homogeneous_level();
                    REQUIRE(lvl.has_value());
                    REQUIRE(*lvl == level - n);
                }
}

TEST_CASE("weight evaluation") {
    StateVector hw = StateVector::vacuum(verma());
    StateVector v = apply_mode({Family::L, 1}, sv("L(-1)vac", verma())); // 2t |hw>
    REQUIRE(eval_weights(v, Rational(1, 2), Rational(0)) == Rational(1) * StateVector::vacuum(verma()));
    REQUIRE(eval_weights(v, Rational(0), Rational(7)).is_zero());
}

TEST_CASE("module mismatch is rejected") {
    StateVector a = sv("L(-2)vac", vac());
    StateVector b = sv("L(-2)vac", verma());
    REQUIRE_THROWS_AS(a + b, std::invalid_argument);
    StateVector zero(vac());
    REQUIRE((zero + b) == b); // a zero vector adopts the other module
}
