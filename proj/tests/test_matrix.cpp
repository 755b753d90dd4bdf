#include "w3/matrix.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using w3::exact::RatMatrix;
using w3::exact::Rational;

namespace {

RatMatrix random_matrix(std::mt19937_64& rng, size_t rows, size_t cols) {
    RatMatrix m(rows, cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j)
            m.at(i, j) = Rational(static_cast<long long>(rng() % 11) - 5);
    return m;
}

std::vector<Rational> mat_vec(const RatMatrix& m, const std::vector<Rational>& v) {
    std::vector<Rational> out(m.rows());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) out[i] += m.at(i, j) * v[j];
    return out;
}

bool all_zero(const std::vector<Rational>& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

} // namespace

TEST_CASE("rank and kernel on known matrices") {
    RatMatrix m(2, 2);
    m.at(0, 0) = Rational(1);
    m.at(0, 1) = Rational(2);
    m.at(1, 0) = Rational(2);
    m.at(1, 1) = Rational(4);
    REQUIRE(w3::exact::rank(m) == 1);
    auto ker = w3::exact::kernel_basis(m);
    REQUIRE(ker.size() == 1);
    REQUIRE(all_zero(mat_vec(m, ker[0])));
    // Deterministic normalization: first nonzero coordinate is 1.
    REQUIRE(ker[0][0] == Rational(1));
    REQUIRE(ker[0][1] == Rational(-1, 2));

    RatMatrix id(3, 3);
    for (size_t i = 0; i < 3; ++i) id.at(i, i) = Rational(1);
    REQUIRE(w3::exact::rank(id) == 3);
    REQUIRE(w3::exact::kernel_basis(id).empty());
    REQUIRE(w3::exact::rref(id) == id);
}

TEST_CASE("solve") {
    RatMatrix m(2, 2);
    m.at(0, 0) = Rational(2);
    m.at(0, 1) = Rational(1);
    m.at(1, 0) = Rational(1);
    m.at(1, 1) = Rational(-1);
    auto sol = w3::exact::solve(m, {Rational(5), Rational(1)});
    REQUIRE(sol.has_value());
    REQUIRE((*sol)[0] == Rational(2));
    REQUIRE((*sol)[1] == Rational(1));

    RatMatrix sing(2, 1);
    sing.at(0, 0) = Rational(1);
    sing.at(1, 0) = Rational(1);
    REQUIRE_FALSE(w3::exact::solve(sing, {Rational(1), Rational(2)}).has_value());
    REQUIRE(w3::exact::solve(sing, {Rational(3), Rational(3)}).has_value());
}

TEST_CASE("rank-nullity and exactness on seeded random matrices") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 12; ++trial) {
        size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
        RatMatrix m = random_matrix(rng, rows, cols);
        size_t r = w3::exact::rank(m);
        auto ker = w3::exact::kernel_basis(m);
        REQUIRE(r + ker.size() == cols);
        for (const auto& v : ker) {
            REQUIRE(all_zero(mat_vec(m, v)));
            size_t firstNonzero = 0;
            while (firstNonzero < v.size() && v[firstNonzero].is_zero()) ++firstNonzero;
            REQUIRE(firstNonzero < v.size());
            REQUIRE(v[firstNonzero] == Rational(1));
        }
        // rref is idempotent and rank-preserving.
        RatMatrix r1 = w3::exact::rref(m);
        REQUIRE(w3::exact::rref(r1) == r1);
        REQUIRE(w3::exact::rank(r1) == r);
    }
}

TEST_CASE("fractional entries stay exact through elimination") {
    RatMatrix m(3, 3);
    // Hilbert-like matrix: notoriously ill-conditioned in floating point,
    // trivially exact here.
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) m.at(i, j) = Rational(1, static_cast<long long>(i + j + 1));
    REQUIRE(w3::exact::rank(m) == 3);
    auto sol = w3::exact::solve(m, {Rational(1), Rational(0), Rational(0)});
    REQUIRE(sol.has_value());
    REQUIRE((*sol)[0] == Rational(9));
    REQUIRE((*sol)[1] == Rational(-36));
    REQUIRE((*sol)[2] == Rational(30));
}
