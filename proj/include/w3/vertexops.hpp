#pragma once

#include "w3/pbw.hpp"

#include <functional>
#include <stdexcept>
#include <utility>

namespace w3::core {

/**
 * A homogeneous field F(z) = sum_n F_n z^{-n-weight}, presented by the
 * action of its modes; F_n lowers level by n. Built compositionally so
 * that the field of any module vector can be reconstructed from the
 * generator fields.
 */
struct Field {
    int weight;
    std::function<StateVector(int, const StateVector&)> act;
};

inline Field identity_field(const W3Module& m) {
    return {0, [m](int n, const StateVector& v) { return n == 0 ? v : StateVector(m); }};
}

inline Field generator_field(Family f) {
    int h = f == Family::L ? 2 : 3;
    return {h, [f](int n, const StateVector& v) { return apply_mode({f, n}, v); }};
}

// Divided-power derivative: (d/dz)^j / j!. In modes,
// (d^(j)F)_m = (-1)^j C(m + weight + j - 1, j) F_m, of weight + j.
inline Field derived_field(Field f, int j) {
    if (j < 0) throw std::invalid_argument("derived_field: negative order");
    if (j == 0) return f;
    int h = f.weight;
    return {h + j, [f = std::move(f), j, h](int m, const StateVector& v) {
                Rational c = exact::binomial(static_cast<long long>(m) + h + j - 1, j);
                if (j % 2 != 0) c = -c;
                if (c.is_zero()) return StateVector(v.module());
                return c * f.act(m, v);
            }};
}

/**
 * Normal-ordered product :AB:. On a level-N vector the defining bilateral
 * sum truncates: (:AB:)_n = sum_{m=n-N}^{-hA} A_m B_{n-m}
 * + sum_{m=-hA+1}^{N} B_{n-m} A_m; omitted terms annihilate level N.
 */
inline Field nop_field(Field a, Field b) {
    int w = a.weight + b.weight;
    return {w, [a = std::move(a), b = std::move(b)](int n, const StateVector& v) {
                StateVector out(v.module());
                for (const auto& [word, coeff] : v.terms()) {
                    StateVector mono = StateVector::monomial(v.module(), word);
                    int N = word.level();
                    StateVector acc(v.module());
                    for (int m = n - N; m <= -a.weight; ++m) {
                        StateVector inner = b.act(n - m, mono);
                        if (!inner.is_zero()) acc += a.act(m, inner);
                    }
                    for (int m = -a.weight + 1; m <= N; ++m) {
                        StateVector inner = a.act(m, mono);
                        if (!inner.is_zero()) acc += b.act(n - m, inner);
                    }
                    out += coeff * acc;
                }
                return out;
            }};
}

/**
 * Field of the canonical word X^1_{-k_1} ... X^r_{-k_r}|0>, via
 * Y(X_{-k} u, z) = :(d^(k-h) X(z)) Y(u, z): with h the generator weight.
 * The resulting field's weight equals the word's level.
 */
inline Field field_of(const W3Module& m, const PBWMonomial& word) {
    if (word.empty()) return identity_field(m);
    ModeSymbol x = detail::front_mode(word);
    int h = x.family == Family::L ? 2 : 3;
    if (-x.index < h) throw std::invalid_argument("field_of: word is not a vacuum-module creation word");
    Field head = derived_field(generator_field(x.family), -x.index - h);
    return nop_field(std::move(head), field_of(m, detail::drop_front(word)));
}

namespace detail {

// resOp(a, b, shift): sum_j C(wt a, j) a_(j-1+shift) b, the residue of
// Y(a,z) (1+z)^{wt a} / z^{1-shift} applied to b. Field modes index by
// weight, a_(k) = F_{k - wt a + 1}, so a_(j-1+shift) = F.act(j - wt + shift).
inline StateVector res_op(const StateVector& a, const StateVector& b, int shift) {
    if (a.is_zero()) return StateVector(b.module());
    auto wt = a.homogeneous_level();
    if (!wt) throw std::invalid_argument("star/circ: left operand is not homogeneous");
    StateVector out(b.module());
    for (const auto& [word, coeff] : a.terms()) {
        Field f = field_of(a.module(), word);
        StateVector acc(b.module());
        for (int j = 0; j <= *wt; ++j) {
            StateVector piece = f.act(j - *wt + shift, b);
            if (!piece.is_zero()) acc += exact::binomial(*wt, j) * piece;
        }
        out += coeff * acc;
    }
    return out;
}

} // namespace detail

/** a * b = Res_z Y(a,z) (1+z)^{wt a} / z applied to b. */
inline StateVector star(const StateVector& a, const StateVector& b) {
    return detail::res_op(a, b, 0);
}

/** a o b = Res_z Y(a,z) (1+z)^{wt a} / z^2 applied to b; spans O(V). */
inline StateVector circ(const StateVector& a, const StateVector& b) {
    return detail::res_op(a, b, -1);
}

} // namespace w3::core
