#pragma once

#include "w3/pbw.hpp"

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace w3::core {

/**
 * Text form for module vectors:
 *   vector := ['+'|'-']? term (('+'|'-') term)* | '0'
 *   term   := [rational '*']? mode* 'vac'
 *   mode   := ('L'|'Wt') '(' integer ')'
 * Mode indices must be creation indices for the target module. Modes are
 * applied right to left, so out-of-order words straighten into canonical
 * PBW combinations (the string denotes an operator product, not a basis
 * label).
 */
struct ParseError : std::runtime_error {
    size_t position;
    ParseError(const std::string& what, size_t pos)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

namespace detail {

class VectorParser {
public:
    VectorParser(std::string_view text, W3Module module) : text_(text), module_(std::move(module)) {}

    StateVector parse() {
        skip_ws();
        StateVector result(module_);
        if (peek() == '0') {
            size_t save = pos_;
            ++pos_;
            skip_ws();
            if (at_end()) return result;
            pos_ = save; // a term may not start with a digit-0 rational? it may: "0/1*vac"; rewind and parse normally
        }
        bool first = true;
        while (true) {
            skip_ws();
            Rational sign(1);
            if (first) {
                if (peek() == '+') ++pos_;
                else if (peek() == '-') { sign = Rational(-1); ++pos_; }
            } else {
                if (at_end()) break;
                if (peek() == '+') ++pos_;
                else if (peek() == '-') { sign = Rational(-1); ++pos_; }
                else throw ParseError("expected '+' or '-' between terms", pos_);
            }
            result += sign * parse_term();
            first = false;
        }
        return result;
    }

private:
    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    void expect(char c) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c)
            throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    Rational parse_rational() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) throw ParseError("expected a number", pos_);
        std::string num(text_.substr(start, pos_ - start));
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            size_t dstart = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (pos_ == dstart) throw ParseError("expected a denominator", pos_);
            std::string den(text_.substr(dstart, pos_ - dstart));
            return Rational(exact::BigInt(num), exact::BigInt(den));
        }
        return Rational(exact::BigInt(num));
    }

    int parse_index() {
        skip_ws();
        bool neg = false;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            neg = text_[pos_] == '-';
            ++pos_;
        }
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) throw ParseError("expected an integer index", pos_);
        long long v = std::stoll(std::string(text_.substr(start, pos_ - start)));
        return static_cast<int>(neg ? -v : v);
    }

    StateVector parse_term() {
        skip_ws();
        Rational coeff(1);
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            coeff = parse_rational();
            expect('*');
        }
        std::vector<ModeSymbol> modes;
        while (true) {
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == 'L') {
                ++pos_;
                modes.push_back(read_mode(Family::L));
            } else if (pos_ + 1 < text_.size() && text_[pos_] == 'W' && text_[pos_ + 1] == 't') {
                pos_ += 2;
                modes.push_back(read_mode(Family::Wt));
            } else {
                break;
            }
        }
        skip_ws();
        if (text_.substr(pos_, 3) != "vac")
            throw ParseError("expected 'vac', a mode, or a coefficient", pos_);
        pos_ += 3;
        StateVector v = StateVector::vacuum(module_);
        for (auto it = modes.rbegin(); it != modes.rend(); ++it) v = apply_mode(*it, v);
        return coeff * v;
    }

    ModeSymbol read_mode(Family f) {
        size_t modePos = pos_;
        expect('(');
        int idx = parse_index();
        expect(')');
        ModeSymbol s{f, idx};
        if (!module_.isCreation(s))
            throw ParseError(mode_str(s) + " is not a creation operator on this module", modePos);
        return s;
    }

    std::string_view text_;
    size_t pos_ = 0;
    W3Module module_;
};

} // namespace detail

inline StateVector parse_vector(std::string_view text, const W3Module& module) {
    return detail::VectorParser(text, module).parse();
}

inline std::string word_str(const PBWMonomial& w) {
    std::string out;
    for (int i : w.lModes) out += mode_str({Family::L, i});
    for (int i : w.wModes) out += mode_str({Family::Wt, i});
    return out + "vac";
}

/**
 * Canonical text form: terms in monomial-map order, rational coefficients
 * of magnitude 1 omitted, and polynomial coefficients (which fall outside
 * the input grammar) parenthesized.
 */
inline std::string print_vector(const StateVector& v) {
    if (v.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [word, coeff] : v.terms()) {
        std::string piece;
        bool negative = false;
        if (coeff.is_constant()) {
            Rational r = coeff.as_rational();
            negative = r.sign() < 0;
            Rational mag = r.abs();
            piece = mag.is_one() ? word_str(word) : mag.str() + "*" + word_str(word);
        } else {
            piece = "(" + coeff.str() + ")*" + word_str(word);
        }
        if (first) out += (negative ? "-" : "") + piece;
        else out += (negative ? " - " : " + ") + piece;
        first = false;
    }
    return out;
}

} // namespace w3::core
