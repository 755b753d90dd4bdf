#pragma once

#include "w3/rational.hpp"

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace w3::exact {

// The coefficient ring everywhere is Q[t, w, alpha] with this fixed
// variable order; t and w are the Zhu-algebra generators, alpha the
// free-boson momentum.
enum class Var : int { t = 0, w = 1, alpha = 2 };

inline const char* var_name(Var v) {
    switch (v) {
        case Var::t: return "t";
        case Var::w: return "w";
        case Var::alpha: return "alpha";
    }
    throw std::logic_error("var_name: bad variable");
}

struct Monomial {
    std::array<int, 3> e{0, 0, 0}; // exponents of (t, w, alpha)

    int exp(Var v) const { return e[static_cast<int>(v)]; }
    bool is_constant() const { return e[0] == 0 && e[1] == 0 && e[2] == 0; }

    // Term order: lexicographic on (w, t, alpha) exponents. Map iteration
    // ascends, so printing walks the map in reverse to lead with the
    // highest w-power (the curve generator prints as w^2 - ...).
    friend bool operator<(const Monomial& a, const Monomial& b) {
        if (a.e[1] != b.e[1]) return a.e[1] < b.e[1];
        if (a.e[0] != b.e[0]) return a.e[0] < b.e[0];
        return a.e[2] < b.e[2];
    }
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
};

/** Sparse exact polynomial in (t, w, alpha). Zero coefficients are never stored. */
class Poly {
public:
    Poly() = default;
    Poly(const Rational& c) { add_term({}, c); }
    Poly(int c) : Poly(Rational(c)) {}

    static Poly variable(Var v) {
        Poly p;
        Monomial m;
        m.e[static_cast<int>(v)] = 1;
        p.add_term(m, Rational(1));
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant());
    }

    // Constant value; throws if a variable is still present.
    Rational as_rational() const {
        if (is_zero()) return Rational(0);
        if (!is_constant()) throw std::domain_error("Poly::as_rational: polynomial is not constant: " + str());
        return terms_.begin()->second;
    }

    Rational coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    int degree(Var v) const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.exp(v));
        return d;
    }

    const std::map<Monomial, Rational>& terms() const { return terms_; }

    void add_term(const Monomial& m, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Poly operator-() const {
        Poly r;
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }
    Poly& operator+=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m;
                for (int i = 0; i < 3; ++i) m.e[i] = ma.e[i] + mb.e[i];
                r.add_term(m, ca * cb);
            }
        return r;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend Poly operator*(const Rational& c, const Poly& p) {
        Poly r;
        if (c.is_zero()) return r;
        for (const auto& [m, pc] : p.terms_) r.terms_.emplace(m, c * pc);
        return r;
    }

    Poly pow(int n) const {
        if (n < 0) throw std::domain_error("Poly::pow: negative exponent");
        Poly r(Rational(1));
        for (int i = 0; i < n; ++i) r *= *this;
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Substitute polynomials for variables; variables absent from the map
    // are kept symbolic.
    Poly substitute(const std::map<Var, Poly>& assignment) const {
        Poly out;
        for (const auto& [m, c] : terms_) {
            Poly term(c);
            for (int i = 0; i < 3; ++i) {
                if (m.e[i] == 0) continue;
                Var v = static_cast<Var>(i);
                auto it = assignment.find(v);
                Poly base = it == assignment.end() ? variable(v) : it->second;
                term *= base.pow(m.e[i]);
            }
            out += term;
        }
        return out;
    }

    // Full evaluation; every variable that occurs must be assigned.
    Rational eval(const std::map<Var, Rational>& assignment) const {
        std::map<Var, Poly> polyAssign;
        for (const auto& [v, r] : assignment) polyAssign.emplace(v, Poly(r));
        Poly evaluated = substitute(polyAssign);
        if (!evaluated.is_constant())
            throw std::domain_error("Poly::eval: missing assignment for a variable in " + str());
        return evaluated.as_rational();
    }

    // Text form: terms joined by +/-, leading term first under the term
    // order, coefficients p/q, monomial factors t^a*w^b*alpha^c with an
    // exponent of 1 left implicit. The zero polynomial prints as "0".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const Rational& c = it->second;
            bool neg = c.sign() < 0;
            if (out.empty()) {
                if (neg) out += "-";
            } else {
                out += neg ? " - " : " + ";
            }
            Rational mag = c.abs();
            std::string monoStr = mono_str(it->first);
            if (monoStr.empty()) {
                out += mag.str();
            } else if (mag.is_one()) {
                out += monoStr;
            } else {
                out += mag.str() + "*" + monoStr;
            }
        }
        return out;
    }

private:
    static std::string mono_str(const Monomial& m) {
        std::string out;
        for (int i = 0; i < 3; ++i) {
            if (m.e[i] == 0) continue;
            if (!out.empty()) out += "*";
            out += var_name(static_cast<Var>(i));
            if (m.e[i] != 1) out += "^" + std::to_string(m.e[i]);
        }
        return out;
    }

    std::map<Monomial, Rational> terms_;
};

} // namespace w3::exact
