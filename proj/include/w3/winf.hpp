#pragma once

#include "w3/rational.hpp"
#include "w3/zhu.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace w3::winf {

using exact::Rational;

// ---------------------------------------------------------------------------
// Polynomials in the Euler operator D = t d/dt, dense ascending coefficients.
// ---------------------------------------------------------------------------

using DPoly = std::vector<Rational>;

inline void dp_trim(DPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline bool dp_is_zero(const DPoly& p) {
    for (const auto& c : p)
        if (!c.is_zero()) return false;
    return true;
}

inline DPoly dp_add(const DPoly& a, const DPoly& b) {
    DPoly out(std::max(a.size(), b.size()));
    for (size_t i = 0; i < out.size(); ++i) {
        if (i < a.size()) out[i] += a[i];
        if (i < b.size()) out[i] += b[i];
    }
    dp_trim(out);
    return out;
}

inline DPoly dp_scale(const Rational& c, const DPoly& a) {
    if (c.is_zero()) return {};
    DPoly out = a;
    for (auto& x : out) x = c * x;
    dp_trim(out);
    return out;
}

inline DPoly dp_sub(const DPoly& a, const DPoly& b) { return dp_add(a, dp_scale(Rational(-1), b)); }

inline DPoly dp_mul(const DPoly& a, const DPoly& b) {
    if (a.empty() || b.empty()) return {};
    DPoly out(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    dp_trim(out);
    return out;
}

/** f(D) -> f(D + s). */
inline DPoly dp_shift(const DPoly& f, const Rational& s) {
    DPoly out;
    DPoly power{Rational(1)}; // (D+s)^i
    const DPoly linear{s, Rational(1)};
    for (size_t i = 0; i < f.size(); ++i) {
        out = dp_add(out, dp_scale(f[i], power));
        if (i + 1 < f.size()) power = dp_mul(power, linear);
    }
    return out;
}

inline Rational dp_eval(const DPoly& f, const Rational& x) {
    Rational acc;
    for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + *it;
    return acc;
}

/** D(D-1)...(D-l+1); the l = 0 product is 1. */
inline DPoly dp_falling(int l) {
    DPoly out{Rational(1)};
    for (int j = 0; j < l; ++j) out = dp_mul(out, DPoly{Rational(-j), Rational(1)});
    return out;
}

// ---------------------------------------------------------------------------
// The centrally extended algebra of differential operators on the circle.
// An element is a finite sum of t^r p_r(D) plus a multiple of the central C.
// ---------------------------------------------------------------------------

struct DiffOp {
    std::map<int, DPoly> terms; // grade r -> p_r(D), no zero polys stored
    Rational central;

    void add_term(int grade, DPoly p) {
        dp_trim(p);
        if (p.empty()) return;
        auto [it, inserted] = terms.try_emplace(grade, std::move(p));
        if (!inserted) {
            it->second = dp_add(it->second, p);
            if (it->second.empty()) terms.erase(it);
        }
    }

    bool is_zero() const { return terms.empty() && central.is_zero(); }

    DiffOp& operator+=(const DiffOp& o) {
        for (const auto& [r, p] : o.terms) add_term(r, p);
        central += o.central;
        return *this;
    }
    DiffOp& operator-=(const DiffOp& o) {
        for (const auto& [r, p] : o.terms) add_term(r, dp_scale(Rational(-1), p));
        central -= o.central;
        return *this;
    }
    friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
    friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
    friend DiffOp operator*(const Rational& c, const DiffOp& x) {
        DiffOp out;
        for (const auto& [r, p] : x.terms) out.add_term(r, dp_scale(c, p));
        out.central = c * x.central;
        return out;
    }
    friend bool operator==(const DiffOp& a, const DiffOp& b) {
        return a.terms == b.terms && a.central == b.central;
    }
};

inline DiffOp make_diffop(int grade, DPoly p) {
    DiffOp x;
    x.add_term(grade, std::move(p));
    return x;
}

namespace detail {

/** Cocycle on a graded pair: sum_{j=-r}^{-1} f(j) g(j+r) for r = -s >= 1,
 *  zero for r+s != 0 or r = 0, extended antisymmetrically to r <= -1. */
inline Rational pair_cocycle(int r, const DPoly& f, int s, const DPoly& g) {
    if (r + s != 0 || r == 0) return Rational(0);
    if (r < 0) return -pair_cocycle(s, g, r, f);
    Rational acc;
    for (int j = -r; j <= -1; ++j) acc += dp_eval(f, Rational(j)) * dp_eval(g, Rational(j + r));
    return acc;
}

} // namespace detail

/** Bilinear extension of Psi; the central parts of x and y contribute nothing. */
inline Rational cocycle(const DiffOp& x, const DiffOp& y) {
    Rational acc;
    for (const auto& [r, f] : x.terms)
        for (const auto& [s, g] : y.terms) acc += detail::pair_cocycle(r, f, s, g);
    return acc;
}

/** [t^r f(D), t^s g(D)] = t^{r+s} (f(D+s) g(D) - f(D) g(D+r)) + Psi(x,y) C. */
inline DiffOp bracket(const DiffOp& x, const DiffOp& y) {
    DiffOp out;
    for (const auto& [r, f] : x.terms)
        for (const auto& [s, g] : y.terms) {
            out.add_term(r + s, dp_sub(dp_mul(dp_shift(f, Rational(s)), g), dp_mul(f, dp_shift(g, Rational(r)))));
            out.central += detail::pair_cocycle(r, f, s, g);
        }
    return out;
}

// ---------------------------------------------------------------------------
// The two standard bases: J^l_k = -t^{l+k} (d/dt)^l = -t^k D(D-1)...(D-l+1),
// L^l_k = -t^k D^l. Coordinates are maps (l, k) -> Rational.
// ---------------------------------------------------------------------------

using BasisCoords = std::map<std::pair<int, int>, Rational>;

inline DiffOp basis_J(int l, int k) {
    if (l < 0) throw std::invalid_argument("basis_J: l must be >= 0");
    return make_diffop(k, dp_scale(Rational(-1), dp_falling(l)));
}

inline DiffOp basis_L(int l, int k) {
    if (l < 0) throw std::invalid_argument("basis_L: l must be >= 0");
    DPoly p(l + 1);
    p[l] = Rational(-1);
    return make_diffop(k, p);
}

inline BasisCoords to_L_coords(const DiffOp& x) {
    BasisCoords out;
    for (const auto& [k, f] : x.terms)
        for (size_t i = 0; i < f.size(); ++i)
            if (!f[i].is_zero()) out[{static_cast<int>(i), k}] = -f[i];
    return out;
}

inline BasisCoords to_J_coords(const DiffOp& x) {
    BasisCoords out;
    for (const auto& [k, f] : x.terms) {
        DPoly g = f;
        while (!g.empty()) {
            int d = static_cast<int>(g.size()) - 1;
            Rational lead = g.back();
            out[{d, k}] = -lead;
            g = dp_sub(g, dp_scale(lead, dp_falling(d)));
        }
    }
    return out;
}

inline DiffOp from_L_coords(const BasisCoords& coords) {
    DiffOp out;
    for (const auto& [lk, c] : coords) out += c * basis_L(lk.first, lk.second);
    return out;
}

inline DiffOp from_J_coords(const BasisCoords& coords) {
    DiffOp out;
    for (const auto& [lk, c] : coords) out += c * basis_J(lk.first, lk.second);
    return out;
}

// ---------------------------------------------------------------------------
// Drinfeld-Sokolov central charges and the two-parameter module labels.
// ---------------------------------------------------------------------------

/** c_n at level k: 2n^3 - n - 1 - n(n^2-1)((k+n)^{-1} + k + n); pole at k = -n. */
inline Rational dsr_central_charge(long long n, const Rational& k) {
    if (n < 2) throw std::invalid_argument("dsr_central_charge: n must be >= 2");
    Rational x = k + Rational(n);
    if (x.is_zero()) throw std::invalid_argument("dsr_central_charge: pole at k = -n");
    return Rational(2 * n * n * n - n - 1) - Rational(n * (n * n - 1)) * (x.inverse() + x);
}

/** Label of an irreducible module: a weight-curve parameter for the cubic
 *  factor (alpha = 1 is the excluded duplicate of alpha = 0) and a charge
 *  for the Heisenberg factor, together with the induced (t, w). */
struct ModuleLabel {
    Rational alpha;
    Rational s;
    Rational t;
    Rational w;

    friend bool operator==(const ModuleLabel& a, const ModuleLabel& b) {
        return a.alpha == b.alpha && a.s == b.s;
    }
};

inline ModuleLabel classify(const Rational& alpha, const Rational& s) {
    if (alpha == Rational(1))
        throw std::invalid_argument("classify: alpha = 1 is the excluded representative; use alpha = 0");
    auto [t, w] = zhu::weight_from_alpha(alpha);
    return ModuleLabel{alpha, s, t, w};
}

// ---------------------------------------------------------------------------
// Seed-stable randomized elements (explicit modulo arithmetic so the stream
// is identical on every platform).
// ---------------------------------------------------------------------------

inline Rational random_rational(std::mt19937_64& rng, long long numSpan = 9, long long denSpan = 3) {
    long long num = static_cast<long long>(rng() % (2 * numSpan + 1)) - numSpan;
    long long den = 1 + static_cast<long long>(rng() % denSpan);
    return Rational(num, den);
}

inline DiffOp random_diffop(std::mt19937_64& rng, int maxGrade = 4, int maxDeg = 4) {
    DiffOp out;
    int nTerms = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < nTerms; ++i) {
        int grade = static_cast<int>(rng() % (2 * maxGrade + 1)) - maxGrade;
        int deg = static_cast<int>(rng() % (maxDeg + 1));
        DPoly p(deg + 1);
        for (int d = 0; d <= deg; ++d) p[d] = random_rational(rng);
        if (p[deg].is_zero()) p[deg] = Rational(1 + static_cast<long long>(rng() % 9));
        out.add_term(grade, std::move(p));
    }
    out.central = random_rational(rng);
    return out;
}

struct JacobiReport {
    int samples = 0;
    int antisymmetryFailures = 0;
    int jacobiFailures = 0;
    bool ok() const { return samples > 0 && antisymmetryFailures == 0 && jacobiFailures == 0; }
};

/** Antisymmetry and the cyclic identity (with central terms included, the
 *  latter is exactly the 2-cocycle condition) on seeded random triples. */
inline JacobiReport verify_jacobi(int samples, std::uint64_t seed, int maxDeg = 4) {
    std::mt19937_64 rng(seed);
    JacobiReport rep;
    rep.samples = samples;
    for (int i = 0; i < samples; ++i) {
        DiffOp x = random_diffop(rng, 4, maxDeg);
        DiffOp y = random_diffop(rng, 4, maxDeg);
        DiffOp z = random_diffop(rng, 4, maxDeg);
        if (!((bracket(x, y) + bracket(y, x)).is_zero())) ++rep.antisymmetryFailures;
        DiffOp cyc = bracket(bracket(x, y), z) + bracket(bracket(y, z), x) + bracket(bracket(z, x), y);
        if (!cyc.is_zero()) ++rep.jacobiFailures;
    }
    return rep;
}

} // namespace w3::winf
