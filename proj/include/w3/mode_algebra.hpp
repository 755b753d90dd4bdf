#pragma once

#include "w3/rational.hpp"

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace w3::core {

using exact::Rational;

// Generator families of the rescaled algebra: Virasoro modes L_n and the
// weight-3 modes Wt_n. Wt absorbs the sqrt(6)/2 rescaling of the primary,
// so every structure constant below is rational.
enum class Family : int { L = 0, Wt = 1 };

inline const char* family_name(Family f) { return f == Family::L ? "L" : "Wt"; }

struct ModeSymbol {
    Family family;
    int index;

    friend auto operator<=>(const ModeSymbol&, const ModeSymbol&) = default;
};

inline std::string mode_str(const ModeSymbol& m) {
    return std::string(family_name(m.family)) + "(" + std::to_string(m.index) + ")";
}

/** Central charge plus the derived [Wt,Wt] coupling beta = 16/(22+5c). */
struct AlgebraParams {
    Rational c;
    Rational beta;

    static AlgebraParams for_central_charge(const Rational& c) {
        Rational d = Rational(22) + Rational(5) * c;
        if (d.is_zero()) throw std::domain_error("AlgebraParams: beta undefined at c = -22/5");
        return AlgebraParams{c, Rational(16) / d};
    }

    friend bool operator==(const AlgebraParams& a, const AlgebraParams& b) { return a.c == b.c; }
};

/**
 * A finite operator expression: a rational combination of single modes,
 * at most one quadratic term Lambda_p, and a central scalar. This is the
 * value type of every commutator in the algebra.
 */
struct OperatorExpr {
    std::vector<std::pair<Rational, ModeSymbol>> modes;
    Rational lambdaCoeff;
    int lambdaIndex = 0;
    Rational central;
};

/**
 * Commutator [a, b] of two generator modes.
 *
 *   [L_m, L_n]   = (m-n) L_{m+n} + (c/12)(m^3-m) delta_{m,-n}
 *   [L_m, Wt_n]  = (2m-n) Wt_{m+n}
 *   [Wt_m, Wt_n] = (3/2)(m-n)[(1/15)(m+n+3)(m+n+2) - (1/6)(m+2)(n+2)] L_{m+n}
 *                  + (3/2) beta (m-n) Lambda_{m+n}
 *                  + (c/240) m(m^2-1)(m^2-4) delta_{m,-n}
 *
 * The factor 3/2 on the [Wt,Wt] lines is the square of the weight-3
 * rescaling; the L and Lambda content is otherwise the standard quadratic
 * algebra.
 */
inline OperatorExpr commutator(const ModeSymbol& a, const ModeSymbol& b, const AlgebraParams& p) {
    const long long m = a.index, n = b.index;
    OperatorExpr out;
    auto add_mode = [&](Rational coeff, Family f, long long idx) {
        if (!coeff.is_zero()) out.modes.push_back({std::move(coeff), ModeSymbol{f, static_cast<int>(idx)}});
    };

    if (a.family == Family::L && b.family == Family::L) {
        add_mode(Rational(m - n), Family::L, m + n);
        if (m + n == 0) out.central = p.c * Rational(m * m * m - m, 12);
    } else if (a.family == Family::L && b.family == Family::Wt) {
        add_mode(Rational(2 * m - n), Family::Wt, m + n);
    } else if (a.family == Family::Wt && b.family == Family::L) {
        add_mode(Rational(-(2 * n - m)), Family::Wt, m + n);
    } else {
        Rational quad = Rational(1, 15) * Rational((m + n + 3) * (m + n + 2))
                      - Rational(1, 6) * Rational((m + 2) * (n + 2));
        add_mode(Rational(3, 2) * Rational(m - n) * quad, Family::L, m + n);
        out.lambdaCoeff = Rational(3, 2) * p.beta * Rational(m - n);
        out.lambdaIndex = static_cast<int>(m + n);
        if (m + n == 0)
            out.central = p.c * Rational(m * (m * m - 1) * (m * m - 4), 240);
    }
    return out;
}

} // namespace w3::core
