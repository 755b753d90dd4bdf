#pragma once

#include "w3/matrix.hpp"
#include "w3/mode_algebra.hpp"
#include "w3/poly.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace w3::freefield {

using exact::Poly;
using exact::RatMatrix;
using exact::Rational;
using exact::Var;
using core::Family;

// ---------------------------------------------------------------------------
// Heisenberg Fock space. A state is a combination of oscillator words
// j_{-m_1} ... j_{-m_k} |alpha>, keyed by the creation magnitudes in
// descending order; the zero mode acts by the (possibly symbolic) alpha.
// ---------------------------------------------------------------------------

using BosonKey = std::vector<int>; // descending magnitudes >= 1

inline int key_level(const BosonKey& k) { return std::accumulate(k.begin(), k.end(), 0); }

class BosonState {
public:
    BosonState() = default;
    explicit BosonState(Poly alpha) : alpha_(std::move(alpha)) {}

    static BosonState vacuum(Poly alpha) {
        BosonState s(std::move(alpha));
        s.add_term({}, Poly(1));
        return s;
    }

    const Poly& alpha() const { return alpha_; }
    const std::map<BosonKey, Poly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(BosonKey key, Poly coeff) {
        if (coeff.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(std::move(key), std::move(coeff));
        if (!inserted) {
            it->second += coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    BosonState& operator+=(const BosonState& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }
    BosonState& operator-=(const BosonState& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, -c);
        return *this;
    }
    friend BosonState operator+(BosonState a, const BosonState& b) { return a += b; }
    friend BosonState operator-(BosonState a, const BosonState& b) { return a -= b; }
    friend BosonState operator*(const Poly& c, const BosonState& v) {
        BosonState r(v.alpha_);
        for (const auto& [k, vc] : v.terms_) r.add_term(k, c * vc);
        return r;
    }
    friend BosonState operator*(const Rational& c, const BosonState& v) { return Poly(c) * v; }
    friend bool operator==(const BosonState& a, const BosonState& b) { return a.terms_ == b.terms_; }

private:
    Poly alpha_;
    std::map<BosonKey, Poly> terms_;
};

inline BosonState boson_monomial(const Poly& alpha, BosonKey key, Poly coeff = Poly(1)) {
    BosonState s(alpha);
    s.add_term(std::move(key), std::move(coeff));
    return s;
}

/** Oscillator action: [j_m, j_n] = m delta_{m,-n}, j_0 |alpha> = alpha. */
inline BosonState j_apply(int n, const BosonState& v) {
    BosonState out(v.alpha());
    for (const auto& [key, coeff] : v.terms()) {
        if (n == 0) {
            out.add_term(key, coeff * v.alpha());
        } else if (n < 0) {
            BosonKey k = key;
            k.insert(std::upper_bound(k.begin(), k.end(), -n, std::greater<int>()), -n);
            out.add_term(std::move(k), coeff);
        } else {
            auto range = std::equal_range(key.begin(), key.end(), n, std::greater<int>());
            long long cnt = range.second - range.first;
            if (cnt == 0) continue;
            BosonKey k = key;
            k.erase(k.begin() + (range.first - key.begin()));
            out.add_term(std::move(k), Rational(cnt * n) * coeff);
        }
    }
    return out;
}

namespace detail {

// Sum bound for realized modes: the state's own level is always exact;
// a caller-provided truncation >= level gives the identical result.
inline int bound_for(int level, std::optional<int> truncation) {
    if (truncation) {
        if (level > *truncation) throw std::invalid_argument("realized mode: truncation exceeded");
        return *truncation;
    }
    return level;
}

} // namespace detail

/**
 * Virasoro mode from T = (1/2)(:jj: + dj):
 * L_n = (1/2) [ sum_{k<=-1} j_k j_{n-k} + sum_{k>=0} j_{n-k} j_k ] - (1/2)(n+1) j_n,
 * with k running over [n-N, -1] and [0, N] on a level-N word.
 */
inline BosonState boson_L(int n, const BosonState& v, std::optional<int> truncation = std::nullopt) {
    BosonState out(v.alpha());
    for (const auto& [key, coeff] : v.terms()) {
        BosonState mono = boson_monomial(v.alpha(), key);
        int N = detail::bound_for(key_level(key), truncation);
        BosonState acc(v.alpha());
        for (int k = n - N; k <= -1; ++k) acc += j_apply(k, j_apply(n - k, mono));
        for (int k = 0; k <= N; ++k) acc += j_apply(n - k, j_apply(k, mono));
        acc = Rational(1, 2) * acc;
        acc -= Rational(n + 1, 2) * j_apply(n, mono);
        out += coeff * acc;
    }
    return out;
}

/**
 * Weight-3 mode from (1/12)(4 :j^3: + 6 :j dj: + d^2 j). Cubic modes are
 * sums over sorted index triples a <= b <= c with a+b+c = n, applied
 * rightmost-first, weighted by the permutation count of the multiset;
 * :j dj:_n carries -(n-k+1) from the derivative factor; d^2 j contributes
 * (n+1)(n+2) j_n.
 */
inline BosonState boson_W(int n, const BosonState& v, std::optional<int> truncation = std::nullopt) {
    BosonState out(v.alpha());
    for (const auto& [key, coeff] : v.terms()) {
        BosonState mono = boson_monomial(v.alpha(), key);
        int N = detail::bound_for(key_level(key), truncation);
        BosonState cubic(v.alpha());
        int cLow = n >= 0 ? (n + 2) / 3 : -((-n) / 3); // ceil(n/3)
        for (int c = cLow; c <= N; ++c) {
            int rem = n - c;
            int bLow = rem >= 0 ? (rem + 1) / 2 : -((-rem) / 2); // ceil(rem/2)
            for (int b = bLow; b <= c; ++b) {
                int a = rem - b;
                int mult = (a == b && b == c) ? 1 : (a == b || b == c) ? 3 : 6;
                cubic += Rational(mult) * j_apply(a, j_apply(b, j_apply(c, mono)));
            }
        }
        BosonState jdj(v.alpha());
        for (int k = n - N; k <= -1; ++k) jdj += Rational(-(n - k + 1)) * j_apply(k, j_apply(n - k, mono));
        for (int k = 0; k <= N; ++k) jdj += Rational(-(n - k + 1)) * j_apply(n - k, j_apply(k, mono));
        BosonState acc = Rational(4) * cubic + Rational(6) * jdj;
        acc += Rational((n + 1) * (n + 2)) * j_apply(n, mono);
        out += coeff * (Rational(1, 12) * acc);
    }
    return out;
}

inline BosonState boson_mode(Family f, int n, const BosonState& v, std::optional<int> truncation = std::nullopt) {
    return f == Family::L ? boson_L(n, v, truncation) : boson_W(n, v, truncation);
}

/** (t, w) eigenvalues of (L_0, W_0) on |alpha>, computed, not transcribed. */
inline std::pair<Poly, Poly> highest_weight(const Poly& alpha) {
    BosonState vac = BosonState::vacuum(alpha);
    auto eigenvalue = [](const BosonState& image) {
        if (image.is_zero()) return Poly(0);
        if (image.terms().size() != 1 || !image.terms().begin()->first.empty())
            throw std::logic_error("highest_weight: image is not a vacuum multiple");
        return image.terms().begin()->second;
    };
    return {eigenvalue(boson_L(0, vac)), eigenvalue(boson_W(0, vac))};
}

inline std::pair<Rational, Rational> highest_weight(const Rational& alpha) {
    auto [t, w] = highest_weight(Poly(alpha));
    return {t.as_rational(), w.as_rational()};
}

/** Quadratic Virasoro tail of the weight-3 bracket, realized through
 *  boson Virasoro modes with the level-N truncation of the bilateral sum. */
inline BosonState boson_lambda(int p, const BosonState& v) {
    BosonState out(v.alpha());
    for (const auto& [key, coeff] : v.terms()) {
        BosonState mono = boson_monomial(v.alpha(), key);
        int N = key_level(key);
        BosonState acc(v.alpha());
        for (int q = p - N; q <= -2; ++q) acc += boson_L(q, boson_L(p - q, mono));
        for (int q = -1; q <= N; ++q) acc += boson_L(p - q, boson_L(q, mono));
        acc += Rational(-3 * (p + 2) * (p + 3), 10) * boson_L(p, mono);
        out += coeff * acc;
    }
    return out;
}

inline BosonState boson_expr(const core::OperatorExpr& e, const BosonState& v) {
    BosonState out(v.alpha());
    for (const auto& [c, mode] : e.modes) out += Poly(c) * boson_mode(mode.family, mode.index, v);
    if (!e.lambdaCoeff.is_zero()) out += Poly(e.lambdaCoeff) * boson_lambda(e.lambdaIndex, v);
    if (!e.central.is_zero()) out += Poly(e.central) * v;
    return out;
}

inline std::vector<BosonKey> boson_basis(int level) {
    std::vector<BosonKey> out;
    // Partitions of `level`, parts >= 1, stored descending.
    std::vector<int> current;
    auto rec = [&](auto&& self, int total, int maxPart) -> void {
        if (total == 0) {
            out.push_back(current);
            return;
        }
        for (int part = std::min(total, maxPart); part >= 1; --part) {
            current.push_back(part);
            self(self, total - part, part);
            current.pop_back();
        }
    };
    rec(rec, level, level);
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// bc Fock space. A state is keyed by (b-magnitudes, c-magnitudes): the word
// b(-m_1)...b(-m_r) c(-n_1)...c(-n_s)|0> with m_1 > ... > m_r >= 0 and
// n_1 > ... > n_s >= 1; that factor order fixes every sign.
// ---------------------------------------------------------------------------

using FermionKey = std::pair<std::vector<int>, std::vector<int>>;

inline int fermion_level(const FermionKey& k) {
    return std::accumulate(k.first.begin(), k.first.end(), 0) +
           std::accumulate(k.second.begin(), k.second.end(), 0);
}
inline int fermion_charge(const FermionKey& k) {
    return static_cast<int>(k.first.size()) - static_cast<int>(k.second.size());
}

class FermionState {
public:
    static FermionState vacuum() {
        FermionState s;
        s.add_term({}, Rational(1));
        return s;
    }

    const std::map<FermionKey, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(FermionKey key, Rational coeff) {
        if (coeff.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(std::move(key), std::move(coeff));
        if (!inserted) {
            it->second += coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    FermionState& operator+=(const FermionState& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }
    FermionState& operator-=(const FermionState& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, -c);
        return *this;
    }
    friend FermionState operator+(FermionState a, const FermionState& b) { return a += b; }
    friend FermionState operator-(FermionState a, const FermionState& b) { return a -= b; }
    friend FermionState operator*(const Rational& c, const FermionState& v) {
        FermionState r;
        for (const auto& [k, vc] : v.terms_) r.add_term(k, c * vc);
        return r;
    }
    friend bool operator==(const FermionState& a, const FermionState& b) { return a.terms_ == b.terms_; }

private:
    std::map<FermionKey, Rational> terms_;
};

inline FermionState fermion_monomial(FermionKey key, Rational coeff = Rational(1)) {
    FermionState s;
    s.add_term(std::move(key), std::move(coeff));
    return s;
}

/**
 * b(k): creation (k <= 0) inserts b(-|k|) from the left, one sign flip per
 * b passed; annihilation (k >= 1) contracts against c(-k) with the sign of
 * its position, since {b(m), c(n)} = delta_{m,-n} and b(k)|0> = 0.
 */
inline FermionState b_apply(int k, const FermionState& v) {
    FermionState out;
    for (const auto& [key, coeff] : v.terms()) {
        if (k <= 0) {
            int m = -k;
            const auto& bs = key.first;
            auto pos = std::lower_bound(bs.begin(), bs.end(), m, std::greater<int>());
            if (pos != bs.end() && *pos == m) continue; // b^2 = 0
            FermionKey nk = key;
            size_t idx = pos - bs.begin();
            nk.first.insert(nk.first.begin() + idx, m);
            out.add_term(std::move(nk), idx % 2 == 0 ? coeff : -coeff);
        } else {
            const auto& cs = key.second;
            auto pos = std::find(cs.begin(), cs.end(), k);
            if (pos == cs.end()) continue;
            size_t idx = key.first.size() + (pos - cs.begin());
            FermionKey nk = key;
            nk.second.erase(nk.second.begin() + (pos - cs.begin()));
            out.add_term(std::move(nk), idx % 2 == 0 ? coeff : -coeff);
        }
    }
    return out;
}

/** c(k): creation (k <= -1) passes the whole b block then inserts;
 *  annihilation (k >= 0) contracts against b(-k). */
inline FermionState c_apply(int k, const FermionState& v) {
    FermionState out;
    for (const auto& [key, coeff] : v.terms()) {
        if (k <= -1) {
            int n = -k;
            const auto& cs = key.second;
            auto pos = std::lower_bound(cs.begin(), cs.end(), n, std::greater<int>());
            if (pos != cs.end() && *pos == n) continue;
            FermionKey nk = key;
            size_t idx = key.first.size() + (pos - cs.begin());
            nk.second.insert(nk.second.begin() + (pos - cs.begin()), n);
            out.add_term(std::move(nk), idx % 2 == 0 ? coeff : -coeff);
        } else {
            const auto& bs = key.first;
            auto pos = std::find(bs.begin(), bs.end(), k);
            if (pos == bs.end()) continue;
            size_t idx = pos - bs.begin();
            FermionKey nk = key;
            nk.first.erase(nk.first.begin() + idx);
            out.add_term(std::move(nk), idx % 2 == 0 ? coeff : -coeff);
        }
    }
    return out;
}

/** Charge current j_n = sum_m :b(m) c(n-m):, split by normal ordering. */
inline FermionState fermion_j(int n, const FermionState& v, std::optional<int> truncation = std::nullopt) {
    FermionState out;
    for (const auto& [key, coeff] : v.terms()) {
        FermionState mono = fermion_monomial(key);
        int N = detail::bound_for(fermion_level(key), truncation);
        FermionState acc;
        for (int m = n - N; m <= 0; ++m) acc += b_apply(m, c_apply(n - m, mono));
        for (int m = 1; m <= N; ++m) acc -= c_apply(n - m, b_apply(m, mono));
        out += coeff * acc;
    }
    return out;
}

/** Virasoro from :db c:, L_n = sum_m (-m) :b(m) c(n-m):. */
inline FermionState fermion_L(int n, const FermionState& v, std::optional<int> truncation = std::nullopt) {
    FermionState out;
    for (const auto& [key, coeff] : v.terms()) {
        FermionState mono = fermion_monomial(key);
        int N = detail::bound_for(fermion_level(key), truncation);
        FermionState acc;
        for (int m = n - N; m <= -1; ++m) acc += Rational(-m) * b_apply(m, c_apply(n - m, mono));
        for (int m = 1; m <= N; ++m) acc += Rational(m) * c_apply(n - m, b_apply(m, mono));
        out += coeff * acc;
    }
    return out;
}

/** Weight-3 mode from (1/2)(:d^2b c: - :db dc:): (1/2) m (2m-n) :b(m) c(n-m):. */
inline FermionState fermion_W(int n, const FermionState& v, std::optional<int> truncation = std::nullopt) {
    FermionState out;
    for (const auto& [key, coeff] : v.terms()) {
        FermionState mono = fermion_monomial(key);
        int N = detail::bound_for(fermion_level(key), truncation);
        FermionState acc;
        for (int m = n - N; m <= -1; ++m)
            acc += Rational(m * (2 * m - n), 2) * b_apply(m, c_apply(n - m, mono));
        for (int m = 1; m <= N; ++m)
            acc -= Rational(m * (2 * m - n), 2) * c_apply(n - m, b_apply(m, mono));
        out += coeff * acc;
    }
    return out;
}

inline FermionState fermion_mode(Family f, int n, const FermionState& v,
                                 std::optional<int> truncation = std::nullopt) {
    return f == Family::L ? fermion_L(n, v, truncation) : fermion_W(n, v, truncation);
}

/** All (b-set, c-set) keys of the given level and charge, sorted. */
inline std::vector<FermionKey> fermion_basis(int level, int charge) {
    std::vector<FermionKey> out;
    // Strict descending sequences: b parts distinct >= 0, c parts distinct >= 1.
    auto strictParts = [](int total, int count, int minPart) {
        std::vector<std::vector<int>> res;
        std::vector<int> cur;
        auto rec = [&](auto&& self, int rem, int want, int maxPart) -> void {
            if (want == 0) {
                if (rem == 0) res.push_back(cur);
                return;
            }
            for (int part = maxPart; part >= minPart + want - 1; --part) {
                if (part > rem) continue;
                cur.push_back(part);
                self(self, rem - part, want - 1, part - 1);
                cur.pop_back();
            }
        };
        rec(rec, total, count, total);
        return res;
    };
    for (int s = 0;; ++s) {
        int r = s + charge;
        if (r < 0) continue;
        long long minSum = static_cast<long long>(r) * (r - 1) / 2 + static_cast<long long>(s) * (s + 1) / 2;
        if (minSum > level) break;
        for (int bSum = 0; bSum <= level; ++bSum)
            for (const auto& bs : strictParts(bSum, r, 0))
                for (const auto& cs : strictParts(level - bSum, s, 1)) out.emplace_back(bs, cs);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Correspondence and verification reports.
// ---------------------------------------------------------------------------

/** Image of a boson word under the charge-0 correspondence: the same
 *  oscillator word built from fermion-realized currents. */
inline FermionState bosonize_word(const BosonKey& key) {
    FermionState s = FermionState::vacuum();
    for (auto it = key.rbegin(); it != key.rend(); ++it) s = fermion_j(-*it, s);
    return s;
}

namespace detail {

inline std::vector<Rational> boson_coords(const BosonState& v, const std::vector<BosonKey>& basis) {
    std::vector<Rational> out(basis.size());
    size_t seen = 0;
    for (size_t i = 0; i < basis.size(); ++i) {
        auto it = v.terms().find(basis[i]);
        if (it != v.terms().end()) {
            out[i] = it->second.as_rational();
            ++seen;
        }
    }
    if (seen != v.terms().size()) throw std::logic_error("boson vector leaves the graded component");
    return out;
}

inline std::vector<Rational> fermion_coords(const FermionState& v, const std::vector<FermionKey>& basis) {
    std::vector<Rational> out(basis.size());
    size_t seen = 0;
    for (size_t i = 0; i < basis.size(); ++i) {
        auto it = v.terms().find(basis[i]);
        if (it != v.terms().end()) {
            out[i] = it->second;
            ++seen;
        }
    }
    if (seen != v.terms().size()) throw std::logic_error("fermion vector leaves the graded component");
    return out;
}

} // namespace detail

struct RelationReport {
    int maxLevel = 0;
    int pairsChecked = 0;
    int failures = 0;
    bool ok() const { return pairsChecked > 0 && failures == 0; }
};

/**
 * Realized-commutator check on the alpha = 0 Fock space: for every
 * generator pair with |index| <= 3, [X_m, Y_n] computed by composing
 * realized modes equals the realized mode-algebra commutator (quadratic
 * tail expanded through realized Virasoro modes) on every graded
 * component through maxLevel.
 */
inline RelationReport verify_w3_relations(int maxLevel, const Rational& c = Rational(-2)) {
    auto params = core::AlgebraParams::for_central_charge(c);
    Poly alpha(0);
    RelationReport rep;
    rep.maxLevel = maxLevel;
    std::vector<std::pair<Family, Family>> familyPairs{
        {Family::L, Family::L}, {Family::L, Family::Wt}, {Family::Wt, Family::Wt}};
    for (auto [fa, fb] : familyPairs)
        for (int m = -3; m <= 3; ++m)
            for (int n = -3; n <= 3; ++n) {
                ++rep.pairsChecked;
                auto e = core::commutator({fa, m}, {fb, n}, params);
                bool good = true;
                for (int level = 0; level <= maxLevel && good; ++level)
                    for (const auto& key : boson_basis(level)) {
                        BosonState v = boson_monomial(alpha, key);
                        BosonState lhs =
                            boson_mode(fa, m, boson_mode(fb, n, v)) - boson_mode(fb, n, boson_mode(fa, m, v));
                        if (!(lhs == boson_expr(e, v))) {
                            good = false;
                            break;
                        }
                    }
                if (!good) ++rep.failures;
            }
    return rep;
}

struct BosonizationReport {
    int maxLevel = 0;
    std::vector<int> bosonDims;
    std::vector<int> fermionDims;
    bool dimsMatch = false;
    bool invertible = false;
    bool intertwines = false;
    int modesChecked = 0;
    bool ok() const { return dimsMatch && invertible && intertwines; }
};

/**
 * Charge-0 boson-fermion dictionary: the map sending each oscillator word
 * to its fermion-realized image is a graded isomorphism through maxLevel,
 * and it intertwines the two realizations of L_n, W_n for |n| <= 2.
 */
inline BosonizationReport verify_bosonization(int maxLevel) {
    BosonizationReport rep;
    rep.maxLevel = maxLevel;
    std::vector<std::vector<BosonKey>> bBases(maxLevel + 1);
    std::vector<std::vector<FermionKey>> fBases(maxLevel + 1);
    std::vector<RatMatrix> phi; // fermion coords of bosonized basis words, per level
    rep.dimsMatch = true;
    for (int l = 0; l <= maxLevel; ++l) {
        bBases[l] = boson_basis(l);
        fBases[l] = fermion_basis(l, 0);
        rep.bosonDims.push_back(static_cast<int>(bBases[l].size()));
        rep.fermionDims.push_back(static_cast<int>(fBases[l].size()));
        if (bBases[l].size() != fBases[l].size()) rep.dimsMatch = false;
    }
    if (!rep.dimsMatch) return rep;

    rep.invertible = true;
    for (int l = 0; l <= maxLevel; ++l) {
        RatMatrix m(fBases[l].size(), bBases[l].size());
        for (size_t j = 0; j < bBases[l].size(); ++j) {
            auto coords = detail::fermion_coords(bosonize_word(bBases[l][j]), fBases[l]);
            for (size_t i = 0; i < coords.size(); ++i) m.at(i, j) = coords[i];
        }
        if (exact::rank(m) != m.rows()) rep.invertible = false;
        phi.push_back(std::move(m));
    }

    rep.intertwines = true;
    Poly alpha(0);
    for (Family f : {Family::L, Family::Wt})
        for (int n = -2; n <= 2; ++n) {
            ++rep.modesChecked;
            for (int l = 0; l <= maxLevel; ++l) {
                int target = l - n;
                if (target < 0 || target > maxLevel) continue;
                for (size_t j = 0; j < bBases[l].size(); ++j) {
                    BosonState bImage = boson_mode(f, n, boson_monomial(alpha, bBases[l][j]));
                    auto bCoords = detail::boson_coords(bImage, bBases[target]);
                    FermionState expected;
                    for (size_t i = 0; i < bCoords.size(); ++i)
                        if (!bCoords[i].is_zero()) expected += bCoords[i] * bosonize_word(bBases[target][i]);
                    FermionState actual = fermion_mode(f, n, bosonize_word(bBases[l][j]));
                    if (!(actual == expected)) rep.intertwines = false;
                }
            }
        }
    return rep;
}

} // namespace w3::freefield
