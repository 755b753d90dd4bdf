#pragma once

#include "w3/mode_algebra.hpp"
#include "w3/poly.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace w3::core {

using exact::Poly;
using exact::Var;

/**
 * Canonical PBW word: all L modes left of all Wt modes, and inside each
 * block the index values decrease left to right (so L(-2)L(-4), not
 * L(-4)L(-2)). Words hold creation modes only; which indices count as
 * creation depends on the module (see W3Module).
 */
struct PBWMonomial {
    std::vector<int> lModes; // e.g. {-2, -4}
    std::vector<int> wModes; // e.g. {-3, -3}

    int level() const {
        long long s = 0;
        for (int i : lModes) s -= i;
        for (int i : wModes) s -= i;
        return static_cast<int>(s);
    }
    size_t length() const { return lModes.size() + wModes.size(); }
    bool empty() const { return lModes.empty() && wModes.empty(); }

    friend auto operator<=>(const PBWMonomial&, const PBWMonomial&) = default;
};

enum class ModuleKind : int { Vacuum = 0, Verma = 1 };

/**
 * Module tag carried by every state vector.
 *
 * Vacuum(c): highest-weight vector |0> killed by L_{>=-1} and Wt_{>=-2};
 * creation indices are L <= -2, Wt <= -3.
 * Verma(c): highest-weight vector killed by all positive modes, with
 * L_0 -> t and Wt_0 -> w acting by the symbolic weights; creation
 * indices are <= -1 for both families.
 */
struct W3Module {
    ModuleKind kind;
    AlgebraParams params;

    static W3Module vacuum(const Rational& c) { return {ModuleKind::Vacuum, AlgebraParams::for_central_charge(c)}; }
    static W3Module verma(const Rational& c) { return {ModuleKind::Verma, AlgebraParams::for_central_charge(c)}; }

    int creationMax(Family f) const {
        if (kind == ModuleKind::Verma) return -1;
        return f == Family::L ? -2 : -3;
    }
    bool isCreation(const ModeSymbol& s) const { return s.index <= creationMax(s.family); }

    friend bool operator==(const W3Module& a, const W3Module& b) {
        return a.kind == b.kind && a.params == b.params;
    }
};

/** Finite Q[t,w,alpha]-linear combination of canonical PBW words. */
class StateVector {
public:
    StateVector() = default;
    explicit StateVector(W3Module module) : module_(std::move(module)) {}

    static StateVector vacuum(const W3Module& m) {
        StateVector v(m);
        v.add_term(PBWMonomial{}, Poly(1));
        return v;
    }
    static StateVector monomial(const W3Module& m, PBWMonomial word, Poly coeff = Poly(1)) {
        StateVector v(m);
        v.add_term(std::move(word), std::move(coeff));
        return v;
    }

    const W3Module& module() const { return module_; }
    const std::map<PBWMonomial, Poly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(PBWMonomial word, Poly coeff) {
        if (coeff.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(std::move(word), std::move(coeff));
        if (!inserted) {
            it->second += coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    StateVector& operator+=(const StateVector& o) {
        adopt_or_check(o);
        for (const auto& [w, c] : o.terms_) add_term(w, c);
        return *this;
    }
    StateVector& operator-=(const StateVector& o) {
        adopt_or_check(o);
        for (const auto& [w, c] : o.terms_) add_term(w, -c);
        return *this;
    }
    friend StateVector operator+(StateVector a, const StateVector& b) { return a += b; }
    friend StateVector operator-(StateVector a, const StateVector& b) { return a -= b; }
    StateVector operator-() const {
        StateVector r(module_);
        for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
        return r;
    }
    friend StateVector operator*(const Poly& c, const StateVector& v) {
        StateVector r(v.module_);
        for (const auto& [w, vc] : v.terms_) r.add_term(w, c * vc);
        return r;
    }
    friend StateVector operator*(const Rational& c, const StateVector& v) { return Poly(c) * v; }

    friend bool operator==(const StateVector& a, const StateVector& b) {
        return a.module_ == b.module_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const StateVector& a, const StateVector& b) { return !(a == b); }

    // Level when homogeneous, nullopt otherwise. The empty vector is
    // homogeneous of every level; returns nullopt for it as well.
    std::optional<int> homogeneous_level() const {
        std::optional<int> lvl;
        for (const auto& [w, c] : terms_) {
            int l = w.level();
            if (lvl && *lvl != l) return std::nullopt;
            lvl = l;
        }
        return lvl;
    }

private:
    // A zero vector carries no information, so it adopts the other side's
    // module; otherwise mixing modules is a logic error.
    void adopt_or_check(const StateVector& o) {
        if (module_ == o.module_) return;
        if (terms_.empty()) module_ = o.module_;
        else if (!o.terms_.empty()) throw std::invalid_argument("StateVector: module mismatch");
    }

    W3Module module_{ModuleKind::Vacuum, AlgebraParams::for_central_charge(Rational(-2))};
    std::map<PBWMonomial, Poly> terms_;
};

StateVector apply_mode(const ModeSymbol& s, const StateVector& v);
StateVector lambda_apply(int m, const StateVector& v);

namespace detail {

inline ModeSymbol front_mode(const PBWMonomial& w) {
    if (!w.lModes.empty()) return {Family::L, w.lModes.front()};
    return {Family::Wt, w.wModes.front()};
}

inline PBWMonomial drop_front(PBWMonomial w) {
    if (!w.lModes.empty()) w.lModes.erase(w.lModes.begin());
    else w.wModes.erase(w.wModes.begin());
    return w;
}

inline bool prepend_ok(const W3Module& m, const ModeSymbol& s, const PBWMonomial& w) {
    if (!m.isCreation(s)) return false;
    if (s.family == Family::L)
        return w.lModes.empty() || s.index >= w.lModes.front();
    return w.lModes.empty() && (w.wModes.empty() || s.index >= w.wModes.front());
}

inline PBWMonomial prepend(const ModeSymbol& s, PBWMonomial w) {
    if (s.family == Family::L) w.lModes.insert(w.lModes.begin(), s.index);
    else w.wModes.insert(w.wModes.begin(), s.index);
    return w;
}

// Base case: one mode against the highest-weight vector.
inline StateVector apply_to_vacuum(const W3Module& m, const ModeSymbol& s) {
    StateVector zero(m);
    if (m.kind == ModuleKind::Vacuum) {
        if (s.index > m.creationMax(s.family)) return zero;
        return StateVector::monomial(m, prepend(s, PBWMonomial{}));
    }
    if (s.index >= 1) return zero;
    if (s.index == 0) {
        Var v = s.family == Family::L ? Var::t : Var::w;
        return Poly::variable(v) * StateVector::vacuum(m);
    }
    return StateVector::monomial(m, prepend(s, PBWMonomial{}));
}

struct ApplyKey {
    ModuleKind kind;
    Rational c;
    ModeSymbol mode;
    PBWMonomial word;

    friend bool operator<(const ApplyKey& a, const ApplyKey& b) {
        return std::tie(a.kind, a.c, a.mode, a.word) < std::tie(b.kind, b.c, b.mode, b.word);
    }
};

StateVector apply_expr(const OperatorExpr& e, const StateVector& v);

// Straightens s * word into canonical PBW form:
//   s g rest = g (s rest) + [s, g] rest.
// Recursion terminates because commutators shorten words, lower the count
// of Wt factors (the quadratic Lambda term trades Wt Wt for L L), or
// strictly reduce disorder, and annihilators die on the highest-weight
// vector. Memoized per (module, mode, word): mode application is linear,
// so coefficients never enter the key.
inline const StateVector& apply_to_word(const W3Module& m, const ModeSymbol& s, const PBWMonomial& word) {
    static thread_local std::map<ApplyKey, StateVector> cache;
    ApplyKey key{m.kind, m.params.c, s, word};
    if (auto it = cache.find(key); it != cache.end()) return it->second;

    StateVector result(m);
    if (word.empty()) {
        result = apply_to_vacuum(m, s);
    } else if (prepend_ok(m, s, word)) {
        result = StateVector::monomial(m, prepend(s, word));
    } else {
        ModeSymbol g = front_mode(word);
        PBWMonomial rest = drop_front(word);
        StateVector restVec = StateVector::monomial(m, rest);
        result = apply_mode(g, apply_to_word(m, s, rest));
        result += apply_expr(commutator(s, g, m.params), restVec);
    }
    return cache.emplace(std::move(key), std::move(result)).first->second;
}

inline StateVector apply_expr(const OperatorExpr& e, const StateVector& v) {
    StateVector out(v.module());
    for (const auto& [coeff, mode] : e.modes) out += coeff * apply_mode(mode, v);
    if (!e.lambdaCoeff.is_zero()) out += e.lambdaCoeff * lambda_apply(e.lambdaIndex, v);
    if (!e.central.is_zero()) out += e.central * v;
    return out;
}

} // namespace detail

/** Action of a single mode, extended linearly over the state's terms. */
inline StateVector apply_mode(const ModeSymbol& s, const StateVector& v) {
    StateVector out(v.module());
    for (const auto& [word, coeff] : v.terms())
        out += coeff * detail::apply_to_word(v.module(), s, word);
    return out;
}

inline StateVector apply_expr(const OperatorExpr& e, const StateVector& v) {
    return detail::apply_expr(e, v);
}

/**
 * Action of the quadratic field mode
 *   Lambda_m = sum_{n<=-2} L_n L_{m-n} + sum_{n>-2} L_{m-n} L_n
 *              - (3/10)(m+2)(m+3) L_m.
 * On a vector of level N only finitely many summands survive: the first
 * sum needs m-n <= N (the right factor would otherwise hit level < 0)
 * and the second needs n <= N. Applied term by term so mixed-level input
 * is handled with each word's own bound.
 */
inline StateVector lambda_apply(int m, const StateVector& v) {
    StateVector out(v.module());
    for (const auto& [word, coeff] : v.terms()) {
        StateVector mono = StateVector::monomial(v.module(), word);
        int N = word.level();
        StateVector acc(v.module());
        for (int n = m - N; n <= -2; ++n)
            acc += apply_mode({Family::L, n}, apply_mode({Family::L, m - n}, mono));
        for (int n = -1; n <= N; ++n)
            acc += apply_mode({Family::L, m - n}, apply_mode({Family::L, n}, mono));
        Rational corr = Rational(-3, 10) * Rational((m + 2)) * Rational((m + 3));
        acc += corr * apply_mode({Family::L, m}, mono);
        out += coeff * acc;
    }
    return out;
}

namespace detail {

inline void partitions_rec(int total, int minPart, std::vector<int>& current,
                           std::vector<std::vector<int>>& out) {
    if (total == 0) {
        out.push_back(current);
        return;
    }
    for (int part = minPart; part <= total; ++part) {
        current.push_back(part);
        partitions_rec(total - part, part, current, out);
        current.pop_back();
    }
}

// Partitions of `total` into parts >= minPart, parts listed ascending.
inline std::vector<std::vector<int>> partitions(int total, int minPart) {
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    partitions_rec(total, minPart, current, out);
    return out;
}

} // namespace detail

/**
 * All canonical PBW words of the given level, sorted. Level-n dimension
 * is the number of bi-partitions of n with L parts bounded below by the
 * module's creation threshold (2 for the vacuum quotient, 1 for Verma)
 * and Wt parts likewise (3 resp. 1).
 */
inline std::vector<PBWMonomial> graded_basis(const W3Module& m, int level) {
    if (level < 0) throw std::invalid_argument("graded_basis: negative level");
    int minL = -m.creationMax(Family::L);
    int minW = -m.creationMax(Family::Wt);
    std::vector<PBWMonomial> out;
    for (int lPart = 0; lPart <= level; ++lPart) {
        auto lps = detail::partitions(lPart, minL);
        auto wps = detail::partitions(level - lPart, minW);
        for (const auto& lp : lps)
            for (const auto& wp : wps) {
                PBWMonomial word;
                for (int part : lp) word.lModes.push_back(-part);
                for (int part : wp) word.wModes.push_back(-part);
                out.push_back(std::move(word));
            }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Substitute numeric weights into the coefficients (evaluation of a
// symbolic Verma computation at a concrete highest weight).
inline StateVector eval_weights(const StateVector& v, const Rational& t0, const Rational& w0) {
    std::map<Var, Poly> assign{{Var::t, Poly(t0)}, {Var::w, Poly(w0)}};
    StateVector out(v.module());
    for (const auto& [word, coeff] : v.terms()) out.add_term(word, coeff.substitute(assign));
    return out;
}

} // namespace w3::core
