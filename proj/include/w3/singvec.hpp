#pragma once

#include "w3/matrix.hpp"
#include "w3/pbw.hpp"

#include <array>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace w3::singvec {

using exact::Poly;
using exact::RatMatrix;
using exact::Rational;
using namespace w3::core;

/**
 * The level-6 singular pair of the c = -2 vacuum module, in canonical
 * coordinates (the quadratic W-term carries the rescaled generator, so
 * every coefficient is rational):
 *   v_s  = (Wt_{-3}^2 - 19/36 L_{-3}^2 - 8/9 L_{-2}^3
 *           - 14/9 L_{-2} L_{-4} + 44/9 L_{-6}) |0>
 *   v_s' = (9/2 Wt_{-6} + 9 L_{-3} Wt_{-3} - 6 L_{-2} Wt_{-4}) |0>
 * Both are valid creation words in the Verma module as well, so the same
 * constructors serve the non-singularity witness there.
 */
inline StateVector vs_state(const W3Module& m) {
    StateVector v(m);
    v.add_term({{}, {-3, -3}}, Poly(1));
    v.add_term({{-3, -3}, {}}, Poly(Rational(-19, 36)));
    v.add_term({{-2, -2, -2}, {}}, Poly(Rational(-8, 9)));
    v.add_term({{-2, -4}, {}}, Poly(Rational(-14, 9)));
    v.add_term({{-6}, {}}, Poly(Rational(44, 9)));
    return v;
}

inline StateVector vsp_state(const W3Module& m) {
    StateVector v(m);
    v.add_term({{}, {-6}}, Poly(Rational(9, 2)));
    v.add_term({{-3}, {-3}}, Poly(9));
    v.add_term({{-2}, {-4}}, Poly(-6));
    return v;
}

inline std::vector<ModeSymbol> default_probes() {
    return {{Family::L, 1}, {Family::L, 2}, {Family::Wt, 1}, {Family::Wt, 2}};
}

struct SingularReport {
    int level = 0;
    int kernelDim = 0;
    std::vector<StateVector> basis;
    std::vector<ModeSymbol> checkedModes;
};

namespace detail {

inline Rational constant_of(const Poly& p) {
    if (!p.is_constant()) throw std::logic_error("expected a constant coefficient");
    return p.as_rational();
}

// Coordinates of v in the level basis; throws if a term falls outside it.
inline std::vector<Rational> coords_in_basis(const StateVector& v, const std::vector<PBWMonomial>& basis) {
    std::vector<Rational> out(basis.size());
    size_t seen = 0;
    for (size_t i = 0; i < basis.size(); ++i) {
        auto it = v.terms().find(basis[i]);
        if (it != v.terms().end()) {
            out[i] = constant_of(it->second);
            ++seen;
        }
    }
    if (seen != v.terms().size()) throw std::logic_error("vector has terms outside the graded basis");
    return out;
}

inline StateVector from_coords(const W3Module& m, const std::vector<PBWMonomial>& basis,
                               const std::vector<Rational>& coords) {
    StateVector v(m);
    for (size_t i = 0; i < basis.size(); ++i) v.add_term(basis[i], Poly(coords[i]));
    return v;
}

} // namespace detail

/**
 * Stacked matrix of the given positive modes acting out of the level
 * component: block rows per probe, indexed by the target component's
 * graded basis; columns indexed by graded_basis(level). For a Verma
 * module the symbolic weights are evaluated at the given point first.
 */
inline RatMatrix positive_action_matrix(const W3Module& m, int level, std::span<const ModeSymbol> probes,
                                        std::optional<std::pair<Rational, Rational>> weights = std::nullopt) {
    if (level < 0) throw std::invalid_argument("positive_action_matrix: negative level");
    for (const auto& s : probes)
        if (s.index <= 0) throw std::invalid_argument("positive_action_matrix: probe index must be positive");
    if (m.kind == ModuleKind::Verma && !weights)
        throw std::invalid_argument("positive_action_matrix: Verma module needs concrete weights");

    auto cols = graded_basis(m, level);
    size_t rows = 0;
    for (const auto& s : probes)
        if (level - s.index >= 0) rows += graded_basis(m, level - s.index).size();

    RatMatrix out(rows, cols.size());
    for (size_t j = 0; j < cols.size(); ++j) {
        StateVector basisVec = StateVector::monomial(m, cols[j]);
        size_t rowBase = 0;
        for (const auto& s : probes) {
            if (level - s.index < 0) continue;
            auto targetBasis = graded_basis(m, level - s.index);
            StateVector image = apply_mode(s, basisVec);
            if (weights) image = eval_weights(image, weights->first, weights->second);
            auto coords = detail::coords_in_basis(image, targetBasis);
            for (size_t i = 0; i < coords.size(); ++i) out.at(rowBase + i, j) = coords[i];
            rowBase += targetBasis.size();
        }
    }
    return out;
}

/**
 * Kernel of the positive action at a level. The raw kernel basis is in
 * deterministic echelon form; when the level-6 vacuum kernel turns out to
 * be exactly two-dimensional and to contain the canonical singular pair,
 * the report presents that pair itself so its coefficients can be read
 * off directly.
 */
inline SingularReport find_singular(const W3Module& m, int level,
                                    std::optional<std::pair<Rational, Rational>> weights = std::nullopt,
                                    std::vector<ModeSymbol> probes = default_probes()) {
    SingularReport rep;
    rep.level = level;
    rep.checkedModes = probes;
    auto basisWords = graded_basis(m, level);
    RatMatrix a = positive_action_matrix(m, level, probes, weights);
    auto kernel = exact::kernel_basis(a);
    rep.kernelDim = static_cast<int>(kernel.size());
    for (const auto& k : kernel) rep.basis.push_back(detail::from_coords(m, basisWords, k));

    if (m.kind == ModuleKind::Vacuum && level == 6 && rep.kernelDim == 2) {
        RatMatrix span(basisWords.size(), 2);
        for (size_t i = 0; i < basisWords.size(); ++i)
            for (size_t j = 0; j < 2; ++j) span.at(i, j) = kernel[j][i];
        auto vs = detail::coords_in_basis(vs_state(m), basisWords);
        auto vsp = detail::coords_in_basis(vsp_state(m), basisWords);
        if (exact::solve(span, vs) && exact::solve(span, vsp))
            rep.basis = {vs_state(m), vsp_state(m)};
    }
    return rep;
}

/**
 * The zero-mode action of the weight-3 generator on the singular pair:
 * exact 2x2 matrix (columns are the images of v_s and v_s' in the
 * (v_s, v_s') coordinates), its square's scalar, and its eigenvalues
 * when rational.
 */
struct W0Structure {
    RatMatrix matrix{2, 2};
    Rational vsScalar;     // Wt_0 v_s  = vsScalar  * v_s'
    Rational vspScalar;    // Wt_0 v_s' = vspScalar * v_s
    Rational squareScalar; // Wt_0^2 = squareScalar * id on the span
    std::vector<Rational> eigenvalues;
    std::string note;
};

inline W0Structure w0_structure(const W3Module& m) {
    if (m.kind != ModuleKind::Vacuum) throw std::invalid_argument("w0_structure: vacuum module only");
    auto basisWords = graded_basis(m, 6);
    RatMatrix pairCols(basisWords.size(), 2);
    auto vs = detail::coords_in_basis(vs_state(m), basisWords);
    auto vsp = detail::coords_in_basis(vsp_state(m), basisWords);
    for (size_t i = 0; i < basisWords.size(); ++i) {
        pairCols.at(i, 0) = vs[i];
        pairCols.at(i, 1) = vsp[i];
    }

    W0Structure out;
    ModeSymbol w0{Family::Wt, 0};
    std::array<StateVector, 2> images{apply_mode(w0, vs_state(m)), apply_mode(w0, vsp_state(m))};
    for (size_t j = 0; j < 2; ++j) {
        auto sol = exact::solve(pairCols, detail::coords_in_basis(images[j], basisWords));
        if (!sol) throw std::logic_error("w0_structure: image not in the singular span");
        out.matrix.at(0, j) = (*sol)[0];
        out.matrix.at(1, j) = (*sol)[1];
    }
    out.vsScalar = out.matrix.at(1, 0);
    out.vspScalar = out.matrix.at(0, 1);

    RatMatrix sq = out.matrix * out.matrix;
    if (sq.at(0, 1).is_zero() && sq.at(1, 0).is_zero() && sq.at(0, 0) == sq.at(1, 1))
        out.squareScalar = sq.at(0, 0);
    else
        throw std::logic_error("w0_structure: zero-mode square is not scalar on the span");

    // Eigenvalues of [[a, b], [c, d]] over Q, when the discriminant is a
    // rational square.
    Rational tr = out.matrix.at(0, 0) + out.matrix.at(1, 1);
    Rational det = out.matrix.at(0, 0) * out.matrix.at(1, 1) - out.matrix.at(0, 1) * out.matrix.at(1, 0);
    Rational disc = tr * tr - Rational(4) * det;
    if (disc.sign() >= 0) {
        exact::BigInt num = boost::multiprecision::sqrt(disc.numerator());
        exact::BigInt den = boost::multiprecision::sqrt(disc.denominator());
        if (num * num == disc.numerator() && den * den == disc.denominator()) {
            Rational root(num, den);
            out.eigenvalues = {(tr + root) / Rational(2), (tr - root) / Rational(2)};
        }
    }
    std::ostringstream note;
    note << "zero mode exchanges the pair: v_s -> " << out.vsScalar.str() << " * v_s', v_s' -> "
         << out.vspScalar.str() << " * v_s; its square is " << out.squareScalar.str()
         << " on the span, so the only eigenvalues consistent with these scalars are ";
    for (size_t i = 0; i < out.eigenvalues.size(); ++i) note << (i ? ", " : "") << out.eigenvalues[i].str();
    out.note = note.str();
    return out;
}

/**
 * Witness that the pair is singular only in the vacuum quotient: inside
 * the Verma module with highest weight (0,0) some checked positive mode
 * has a nonzero image.
 */
struct VermaWitness {
    bool vsNonSingular = false;
    bool vspNonSingular = false;
    ModeSymbol vsWitness{Family::L, 0};
    ModeSymbol vspWitness{Family::L, 0};
    StateVector vsImage;
    StateVector vspImage;
};

inline VermaWitness verify_not_verma_singular(const Rational& c) {
    W3Module verma = W3Module::verma(c);
    VermaWitness out;
    auto findWitness = [&](const StateVector& v, bool& flag, ModeSymbol& mode, StateVector& image) {
        for (const auto& s : default_probes()) {
            StateVector img = eval_weights(apply_mode(s, v), Rational(0), Rational(0));
            if (!img.is_zero()) {
                flag = true;
                mode = s;
                image = img;
                return;
            }
        }
    };
    findWitness(vs_state(verma), out.vsNonSingular, out.vsWitness, out.vsImage);
    findWitness(vsp_state(verma), out.vspNonSingular, out.vspWitness, out.vspImage);
    return out;
}

} // namespace w3::singvec
