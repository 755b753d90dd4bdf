#pragma once

#include "w3/pbw.hpp"
#include "w3/singvec.hpp"

#include <map>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace w3::zhu {

using exact::Poly;
using exact::Rational;
using exact::Var;
using namespace w3::core;

/** A class in the associative quotient of the vacuum module: a polynomial
 *  in t (image of L_{-2}|0>) and w (image of Wt_{-3}|0>). */
using ZhuElement = Poly;

enum class Strategy : int { LeftmostPeel = 0, StarExpansion = 1 };

namespace detail {

using CacheKey = std::tuple<int, Rational, PBWMonomial>;

/**
 * Terminating rewriting of a canonical vacuum word to its class.
 *
 * LeftmostPeel peels the leftmost mode with closed-form class rules:
 *   [L_{-2} y]        = (t + wt y) [y]
 *   [L_{-n} y], n>=3  = (-1)^n ((n-1) t + wt y) [y]
 *   [Wt_{-3} y]       = w [y] - 2 [Wt_{-2} y] - [Wt_{-1} y]
 *   [Wt_{-n} y], n>=4 = -3 [Wt_{-n+1} y] - 3 [Wt_{-n+2} y] - [Wt_{-n+3} y]
 * where Wt_{-2}/Wt_{-1} images are computed exactly in the module.
 *
 * StarExpansion instead expands the product with the generator vector:
 *   [X_{-h} y] = x [y] - sum_{j=1}^{h} C(h,j) [X_{j-h} y]    (h = wt X)
 *   [X_{-k} y] = -sum_{j=1}^{h} C(h,j) [X_{j-k} y]           (k > h)
 * with every non-creation mode evaluated exactly. Both strategies
 * terminate because |index| + wt(rest) strictly decreases, and both must
 * agree — that agreement is the operational soundness check for treating
 * the quotient as a commutative polynomial image.
 */
class Reducer {
public:
    Reducer(W3Module m, Strategy s) : m_(std::move(m)), strat_(s) {}

    Poly reduce(const StateVector& v) {
        Poly out;
        for (const auto& [word, coeff] : v.terms()) out += coeff * word_class(word);
        return out;
    }

private:
    static std::map<CacheKey, Poly>& cache() {
        static thread_local std::map<CacheKey, Poly> c;
        return c;
    }

    Poly word_class(const PBWMonomial& word) {
        if (word.empty()) return Poly(1);
        CacheKey key{static_cast<int>(strat_), m_.params.c, word};
        if (auto it = cache().find(key); it != cache().end()) return it->second;
        ModeSymbol x = core::detail::front_mode(word);
        Poly result = left_mul(x, core::detail::drop_front(word));
        cache().emplace(std::move(key), result);
        return result;
    }

    // Class of X y for a canonical word y and any mode X.
    Poly left_mul(const ModeSymbol& x, const PBWMonomial& y) {
        return strat_ == Strategy::LeftmostPeel ? left_mul_peel(x, y) : left_mul_star(x, y);
    }

    Poly exact_image(const ModeSymbol& x, const PBWMonomial& y) {
        return reduce(apply_mode(x, StateVector::monomial(m_, y)));
    }

    Poly left_mul_peel(const ModeSymbol& x, const PBWMonomial& y) {
        Rational wtY(y.level());
        if (x.family == Family::L) {
            int n = -x.index;
            if (n == 2) return (Poly::variable(Var::t) + Poly(wtY)) * word_class(y);
            if (n >= 3) {
                Poly factor = Rational(n - 1) * Poly::variable(Var::t) + Poly(wtY);
                return (n % 2 == 0 ? factor : -factor) * word_class(y);
            }
            throw std::logic_error("left_mul_peel: unexpected L mode in canonical word");
        }
        int n = -x.index;
        if (n == 3)
            return Poly::variable(Var::w) * word_class(y) - Rational(2) * exact_image({Family::Wt, -2}, y) -
                   exact_image({Family::Wt, -1}, y);
        if (n >= 4)
            return Rational(-3) * left_mul_peel({Family::Wt, x.index + 1}, y) -
                   Rational(3) * left_mul_peel({Family::Wt, x.index + 2}, y) -
                   left_mul_peel({Family::Wt, x.index + 3}, y);
        return exact_image(x, y);
    }

    Poly left_mul_star(const ModeSymbol& x, const PBWMonomial& y) {
        int h = x.family == Family::L ? 2 : 3;
        int k = -x.index;
        if (k < h) return exact_image(x, y);
        Poly out;
        if (k == h) {
            Var gen = x.family == Family::L ? Var::t : Var::w;
            out = Poly::variable(gen) * word_class(y);
            for (int j = 1; j <= h; ++j) out -= exact::binomial(h, j) * exact_image({x.family, j - h}, y);
        } else {
            for (int j = 1; j <= h; ++j) out -= exact::binomial(h, j) * left_mul_star({x.family, j - k}, y);
        }
        return out;
    }

    W3Module m_;
    Strategy strat_;
};

} // namespace detail

inline ZhuElement reduce_to_poly(const StateVector& v, Strategy strategy = Strategy::LeftmostPeel) {
    if (v.module().kind != ModuleKind::Vacuum)
        throw std::invalid_argument("reduce_to_poly: vacuum-module vectors only");
    return detail::Reducer(v.module(), strategy).reduce(v);
}

/** Generator of the classification curve ideal: w^2 - (1/9) t^2 (8t + 1). */
inline Poly curve_generator() {
    Poly t = Poly::variable(Var::t), w = Poly::variable(Var::w);
    return w * w - Rational(8, 9) * (t * t * t) - Rational(1, 9) * (t * t);
}

struct CurveReport {
    Poly generator;
    Poly vsImage;
    Poly vspImage;
    bool matches = false;
};

/** Reduces the level-6 singular pair and compares with the curve ideal. */
inline CurveReport curve_report(const Rational& c = Rational(-2)) {
    W3Module vm = W3Module::vacuum(c);
    CurveReport rep;
    rep.generator = curve_generator();
    rep.vsImage = reduce_to_poly(singvec::vs_state(vm));
    rep.vspImage = reduce_to_poly(singvec::vsp_state(vm));
    rep.matches = rep.vsImage == rep.generator && rep.vspImage.is_zero();
    return rep;
}

/** Canonical representative modulo the curve ideal: w-degree at most 1. */
inline ZhuElement quotient_normal_form(ZhuElement p) {
    Poly wsq = Poly::variable(Var::w) * Poly::variable(Var::w);
    Poly replacement = wsq - curve_generator(); // (8/9) t^3 + (1/9) t^2
    while (p.degree(Var::w) >= 2) {
        Poly next;
        for (const auto& [mono, coeff] : p.terms()) {
            if (mono.e[static_cast<int>(Var::w)] >= 2) {
                exact::Monomial reduced = mono;
                reduced.e[static_cast<int>(Var::w)] -= 2;
                Poly rest;
                rest.add_term(reduced, coeff);
                next += rest * replacement;
            } else {
                next.add_term(mono, coeff);
            }
        }
        p = std::move(next);
    }
    return p;
}

/** Highest weight (t, w) of the parametrized family at alpha. */
inline std::pair<Poly, Poly> weight_from_alpha(const Poly& alpha) {
    Poly am1 = alpha - Poly(1);
    Poly t = Rational(1, 2) * (alpha * am1);
    Poly w = Rational(1, 6) * (alpha * am1 * (Rational(2) * alpha - Poly(1)));
    return {t, w};
}

inline std::pair<Rational, Rational> weight_from_alpha(const Rational& alpha) {
    auto [t, w] = weight_from_alpha(Poly(alpha));
    return {t.as_rational(), w.as_rational()};
}

/** The unique other parameter sharing the same t-weight. */
inline Rational iso_partner(const Rational& alpha) { return Rational(1) - alpha; }

} // namespace w3::zhu
