#pragma once

#include "w3/rational.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace w3::exact {

/** Dense matrix over Rational. Row-major, value semantics. */
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Rational& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const Rational& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    static RatMatrix identity(size_t n) {
        RatMatrix m(n, n);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
        return m;
    }

    friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const RatMatrix& a, const RatMatrix& b) { return !(a == b); }

    RatMatrix& operator+=(const RatMatrix& o) {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("RatMatrix: shape mismatch in +=");
        for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
        return *this;
    }
    friend RatMatrix operator+(RatMatrix a, const RatMatrix& b) { return a += b; }

    friend RatMatrix operator*(const Rational& c, const RatMatrix& m) {
        RatMatrix r(m.rows_, m.cols_);
        for (size_t i = 0; i < m.a_.size(); ++i) r.a_[i] = c * m.a_[i];
        return r;
    }

    // Product; empty factors (0 rows/cols) yield the zero matrix of the
    // composite shape so graded components of dimension 0 compose cleanly.
    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("RatMatrix: shape mismatch in *");
        RatMatrix r(a.rows_, b.cols_);
        for (size_t i = 0; i < a.rows_; ++i)
            for (size_t k = 0; k < a.cols_; ++k) {
                const Rational& aik = a.at(i, k);
                if (aik.is_zero()) continue;
                for (size_t j = 0; j < b.cols_; ++j) {
                    const Rational& bkj = b.at(k, j);
                    if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
                }
            }
        return r;
    }

    std::vector<Rational> apply(const std::vector<Rational>& x) const {
        if (x.size() != cols_) throw std::invalid_argument("RatMatrix: vector length mismatch");
        std::vector<Rational> y(rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j)
                if (!at(i, j).is_zero()) y[i] += at(i, j) * x[j];
        return y;
    }

private:
    size_t rows_, cols_;
    std::vector<Rational> a_;
};

namespace detail {

// Fraction-free (Bareiss) forward elimination on an integer copy of the
// matrix. Keeps intermediate entries to minor-sized growth instead of the
// blow-up plain rational elimination produces. Pivot choice is the first
// nonzero row per column, so the result is deterministic.
struct Echelon {
    std::vector<std::vector<BigInt>> m;
    std::vector<size_t> pivotCols; // pivot of row r sits in pivotCols[r]
};

inline Echelon bareiss_echelon(const RatMatrix& a) {
    size_t rows = a.rows(), cols = a.cols();
    std::vector<std::vector<BigInt>> m(rows, std::vector<BigInt>(cols));
    for (size_t i = 0; i < rows; ++i) {
        BigInt scale = 1;
        for (size_t j = 0; j < cols; ++j)
            scale = boost::multiprecision::lcm(scale, a.at(i, j).denominator());
        for (size_t j = 0; j < cols; ++j)
            m[i][j] = a.at(i, j).numerator() * (scale / a.at(i, j).denominator());
    }

    Echelon out;
    BigInt prev = 1;
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t pivot = row;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[row], m[pivot]);
        for (size_t i = row + 1; i < rows; ++i) {
            for (size_t j = col + 1; j < cols; ++j) {
                BigInt num = m[i][j] * m[row][col] - m[i][col] * m[row][j];
                BigInt q, r;
                boost::multiprecision::divide_qr(num, prev, q, r);
                if (r != 0) throw std::logic_error("bareiss: inexact division");
                m[i][j] = q;
            }
            m[i][col] = 0;
        }
        prev = m[row][col];
        out.pivotCols.push_back(col);
        ++row;
    }
    out.m = std::move(m);
    return out;
}

} // namespace detail

inline size_t rank(const RatMatrix& a) { return detail::bareiss_echelon(a).pivotCols.size(); }

/**
 * Reduced row echelon form (pivots 1, zeros above and below pivots).
 * Forward pass is fraction-free; back substitution is exact rational.
 */
inline RatMatrix rref(const RatMatrix& a, std::vector<size_t>* pivotColsOut = nullptr) {
    detail::Echelon e = detail::bareiss_echelon(a);
    size_t rows = a.rows(), cols = a.cols();
    RatMatrix r(rows, cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) r.at(i, j) = Rational(e.m[i][j]);
    for (size_t p = e.pivotCols.size(); p-- > 0;) {
        size_t col = e.pivotCols[p];
        Rational inv = r.at(p, col).inverse();
        for (size_t j = col; j < cols; ++j) r.at(p, j) *= inv;
        for (size_t i = 0; i < p; ++i) {
            Rational f = r.at(i, col);
            if (f.is_zero()) continue;
            for (size_t j = col; j < cols; ++j) r.at(i, j) -= f * r.at(p, j);
        }
    }
    if (pivotColsOut) *pivotColsOut = e.pivotCols;
    return r;
}

/**
 * Right kernel basis of a. One vector per free column, ordered by free
 * column index; each vector is rescaled so its first nonzero entry is 1,
 * which pins the basis byte-for-byte across runs.
 */
inline std::vector<std::vector<Rational>> kernel_basis(const RatMatrix& a) {
    std::vector<size_t> pivots;
    RatMatrix r = rref(a, &pivots);
    size_t cols = a.cols();
    std::vector<bool> isPivot(cols, false);
    for (size_t c : pivots) isPivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (size_t freeCol = 0; freeCol < cols; ++freeCol) {
        if (isPivot[freeCol]) continue;
        std::vector<Rational> v(cols);
        v[freeCol] = Rational(1);
        for (size_t p = 0; p < pivots.size(); ++p)
            v[pivots[p]] = -r.at(p, freeCol);
        for (size_t j = 0; j < cols; ++j) {
            if (!v[j].is_zero()) {
                Rational inv = v[j].inverse();
                for (size_t k = j; k < cols; ++k) v[k] *= inv;
                break;
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// Any exact solution of a x = b, or nullopt when inconsistent. Free
// variables are set to zero.
inline std::optional<std::vector<Rational>> solve(const RatMatrix& a, const std::vector<Rational>& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve: length mismatch");
    RatMatrix aug(a.rows(), a.cols() + 1);
    for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    std::vector<size_t> pivots;
    RatMatrix r = rref(aug, &pivots);
    for (size_t c : pivots)
        if (c == a.cols()) return std::nullopt;
    std::vector<Rational> x(a.cols());
    for (size_t p = 0; p < pivots.size(); ++p) x[pivots[p]] = r.at(p, a.cols());
    return x;
}

} // namespace w3::exact
