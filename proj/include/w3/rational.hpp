#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace w3::exact {

using BigInt = boost::multiprecision::cpp_int;

/**
 * Arbitrary-precision rational scalar.
 *
 * Invariants: always in lowest terms, denominator > 0, zero is 0/1.
 * The backing store (boost cpp_rational) maintains canonical form after
 * every operation, so two equal values always compare bitwise equal.
 */
class Rational {
public:
    using Backend = boost::multiprecision::cpp_rational;

    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long long n) : v_(n) {}
    Rational(const BigInt& n) : v_(n) {}
    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        v_ = den < 0 ? Backend(-num, -den) : Backend(num, den);
    }
    Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

    static Rational parse(std::string_view text);

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return v_ < 0 ? -1 : (v_ > 0 ? 1 : 0); }

    Rational operator-() const { return Rational(Backend(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational abs() const { return v_ < 0 ? -*this : *this; }

    Rational inverse() const {
        if (is_zero()) throw std::domain_error("Rational: inverse of zero");
        return Rational(denominator(), numerator());
    }

    // Canonical text form: "p" when the denominator is 1, else "p/q".
    std::string str() const {
        if (is_integer()) return numerator().str();
        return numerator().str() + "/" + denominator().str();
    }

private:
    explicit Rational(Backend v) : v_(std::move(v)) {}
    Backend v_;
};

inline Rational Rational::parse(std::string_view text) {
    auto bad = [&] { throw std::invalid_argument("Rational::parse: bad literal '" + std::string(text) + "'"); };
    size_t i = 0, n = text.size();
    while (i < n && text[i] == ' ') ++i;
    size_t end = n;
    while (end > i && text[end - 1] == ' ') --end;
    if (i >= end) bad();
    auto read_int = [&](size_t from, size_t to) -> BigInt {
        size_t p = from;
        bool neg = false;
        if (p < to && (text[p] == '-' || text[p] == '+')) { neg = text[p] == '-'; ++p; }
        if (p >= to) bad();
        BigInt acc = 0;
        for (; p < to; ++p) {
            if (text[p] < '0' || text[p] > '9') bad();
            acc = acc * 10 + (text[p] - '0');
        }
        return neg ? BigInt(-acc) : acc;
    };
    size_t slash = text.find('/', i);
    if (slash == std::string_view::npos || slash >= end)
        return Rational(read_int(i, end));
    BigInt num = read_int(i, slash);
    BigInt den = read_int(slash + 1, end);
    if (den == 0) throw std::invalid_argument("Rational::parse: zero denominator");
    return Rational(num, den);
}

// Exact binomial coefficient; zero for k < 0 or k > n when n >= 0.
inline Rational binomial(long long n, long long k) {
    if (k < 0) return Rational(0);
    BigInt num = 1, den = 1;
    for (long long i = 0; i < k; ++i) {
        num *= BigInt(n - i);
        den *= BigInt(i + 1);
    }
    return Rational(num, den);
}

} // namespace w3::exact
