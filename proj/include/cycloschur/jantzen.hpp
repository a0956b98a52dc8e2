#pragma once

/*
 * Jantzen filtration of Weyl modules from the valuations of their Gram
 * matrices, and the resulting graded decomposition numbers d_{λμ}(v).
 *
 * For a shape λ, every weight block of the bilinear form on the Weyl module
 * is an integral matrix over the local ring R.  Its elementary-divisor
 * valuations say how deep each basis direction sits inside the filtration
 *     W = J_0 ⊇ J_1 ⊇ J_2 ⊇ ...
 * A direction with valuation i contributes to the layers J_0/J_1, ..., up to
 * J_i/J_{i+1}; a direction with valuation ∞ (a zero elementary divisor) lies
 * in every J_i.  We truncate at cut = (largest finite valuation) + 1, the
 * first index from which the filtration is constant, and report the stable
 * part as layer `cut`.
 *
 * Each layer is a genuine module character, so it decomposes into simple
 * characters with non-negative multiplicities; collecting the multiplicity
 * of L_μ in layer i as the v^i coefficient yields d_{λμ}(v).  The same
 * polynomials govern the Specht modules of the underlying Hecke algebra,
 * which is cross-checked here dimension by dimension against the valuations
 * of the Specht Gram matrix.
 */

#include <cstddef>
#include <map>
#include <stdexcept>
#include <vector>

#include "cycloschur/errors.hpp"
#include "cycloschur/matrix.hpp"
#include "cycloschur/multipartition.hpp"
#include "cycloschur/schur.hpp"
#include "cycloschur/snf.hpp"
#include "cycloschur/vpolynomial.hpp"

namespace cycloschur {

/* Valuation data of all weight blocks of one Weyl module's Gram matrix. */
struct JantzenProfile {
    int shape = -1;                          /* engine shape index of λ */
    std::map<int, ValuationProfile> blocks;  /* weight index → valuations */
    long cut = 0;                            /* layers run i = 0 .. cut */
    bool singular = false; /* some block has a zero elementary divisor */
};

template <class MS>
JantzenProfile jantzen_profile(const SchurEngine<MS>& E, int si) {
    const auto& WG = E.weyl_gram(si);
    JantzenProfile P;
    P.shape = si;
    long maxfin = 0; /* the (λ, λ) block is (1), so valuation 0 occurs */
    for (const auto& [wi, block] : WG.blocks) {
        ValuationProfile prof = elementary_divisor_valuations(E.ms(), block);
        if (prof.count_inf() > 0) P.singular = true;
        maxfin = std::max(maxfin, prof.max_finite());
        P.blocks.emplace(wi, std::move(prof));
    }
    P.cut = maxfin + 1;
    return P;
}

/* Character of J_i/J_{i+1}; the stable part (∞ valuations) is reported at
 * i = cut, where the filtration has become constant. */
template <class MS>
typename SchurEngine<MS>::Character layer_character(const SchurEngine<MS>& E,
                                                    const JantzenProfile& P,
                                                    long i) {
    typename SchurEngine<MS>::Character ch(E.weights().size(), 0);
    for (const auto& [wi, prof] : P.blocks) {
        long c = prof.count_eq(i);
        if (i == P.cut) c += prof.count_inf();
        ch[wi] = c;
    }
    return ch;
}

/* d_{λμ}(v) for fixed λ = shapes()[P.shape], indexed like shapes().
 *
 * Validated on the way out:
 *   - the layer characters sum to the Weyl character,
 *   - d_{λλ} = 1 and the constant term of d_{λμ} is δ_{λμ},
 *   - d_{λμ} ≠ 0 only when λ dominates μ,
 *   - all coefficients are non-negative,
 *   - v = 1 recovers the ungraded multiplicities [W_λ : L_μ]. */
template <class MS>
std::vector<VPoly> v_decomp_row(const SchurEngine<MS>& E,
                                const JantzenProfile& P) {
    using Character = typename SchurEngine<MS>::Character;
    const std::size_t ns = E.shapes().size();
    std::vector<VPoly> row(ns);
    Character total(E.weights().size(), 0);
    for (long i = 0; i <= P.cut; ++i) {
        Character ch = layer_character(E, P, i);
        bool empty = true;
        for (std::size_t w = 0; w < ch.size(); ++w) {
            total[w] += ch[w];
            if (ch[w] != 0) empty = false;
        }
        if (empty) continue;
        std::vector<long> mult = E.decompose_character(std::move(ch));
        for (std::size_t j = 0; j < ns; ++j)
            if (mult[j] != 0) row[j] = row[j] + VPoly::monomial(mult[j], i);
    }
    if (total != E.char_weyl(P.shape))
        throw MathInconsistency(
            "v_decomp_row: layer characters do not sum to the Weyl character");
    std::vector<long> ungraded =
        E.decompose_character(E.char_weyl(P.shape));
    for (std::size_t j = 0; j < ns; ++j) {
        if (!row[j].nonnegative())
            throw MathInconsistency("v_decomp_row: negative coefficient");
        if (row[j][0] != (static_cast<int>(j) == P.shape ? 1 : 0))
            throw MathInconsistency(
                "v_decomp_row: constant term is not delta_{lambda,mu}");
        if (!row[j].is_zero()) {
            DominanceCmp c =
                dominance_cmp(E.shapes()[P.shape], E.shapes()[j]);
            if (c != DominanceCmp::equal && c != DominanceCmp::greater)
                throw MathInconsistency(
                    "v_decomp_row: nonzero entry outside the dominance cone");
        }
        if (row[j].eval_at_one() != ungraded[j])
            throw MathInconsistency(
                "v_decomp_row: v = 1 does not recover [W : L]");
    }
    if (row[P.shape] != VPoly::one())
        throw MathInconsistency("v_decomp_row: diagonal entry is not 1");
    return row;
}

template <class MS>
std::vector<VPoly> v_decomp_row(const SchurEngine<MS>& E, int si) {
    return v_decomp_row(E, jantzen_profile(E, si));
}

template <class MS>
VPoly v_decomp(const SchurEngine<MS>& E, int si_lam, int si_mu) {
    return v_decomp_row(E, si_lam).at(si_mu);
}

/* Full matrix [d_{λμ}(v)], rows and columns indexed like shapes(). */
template <class MS>
std::vector<std::vector<VPoly>> v_decomp_matrix(const SchurEngine<MS>& E) {
    std::vector<std::vector<VPoly>> rows;
    rows.reserve(E.shapes().size());
    for (std::size_t si = 0; si < E.shapes().size(); ++si)
        rows.push_back(v_decomp_row(E, static_cast<int>(si)));
    return rows;
}

/* ---- Hecke-algebra (Specht module) side ------------------------------- */

template <class MS>
const Matrix<typename MS::Scalar>& specht_gram_of(const SchurEngine<MS>& E,
                                                  int si) {
    return E.hecke().specht_gram(E.shapes()[si]);
}

/* Elementary-divisor valuations of the Specht module's Gram matrix. */
template <class MS>
ValuationProfile specht_jantzen_valuations(const SchurEngine<MS>& E, int si) {
    return elementary_divisor_valuations(E.ms(), specht_gram_of(E, si));
}

/* dim D_μ over the residue field; D_μ = S_μ / rad is zero iff the Gram
 * matrix vanishes identically mod the maximal ideal. */
template <class MS>
long dim_D(const SchurEngine<MS>& E, int si) {
    return rank_over_F(E.ms(), specht_gram_of(E, si));
}

template <class MS>
bool is_D_nonzero(const SchurEngine<MS>& E, int si) {
    return dim_D(E, si) > 0;
}

/* Graded multiplicities [S_λ : D_μ]_v.  These coincide with the Weyl-side
 * d_{λμ}(v); before returning, every filtration layer of the Specht module
 * is checked dimension-wise:
 *     Σ_{μ : D_μ ≠ 0} (coefficient of v^i in d_{λμ}) · dim D_μ
 * must equal the number of Specht Gram valuations equal to i (with the ∞
 * valuations counted at i = cut, the Weyl module's truncation index). */
template <class MS>
std::vector<VPoly> v_decomp_hecke_row(const SchurEngine<MS>& E, int si_lam) {
    JantzenProfile P = jantzen_profile(E, si_lam);
    std::vector<VPoly> row = v_decomp_row(E, P);
    ValuationProfile S = specht_jantzen_valuations(E, si_lam);
    const std::size_t ns = E.shapes().size();
    std::vector<long> dims(ns, 0);
    for (std::size_t j = 0; j < ns; ++j) dims[j] = dim_D(E, static_cast<int>(j));
    for (long i = 0; i <= P.cut; ++i) {
        long lhs = 0;
        for (std::size_t j = 0; j < ns; ++j)
            if (dims[j] > 0) lhs += row[j][static_cast<int>(i)] * dims[j];
        long rhs = S.count_eq(i) + (i == P.cut ? S.count_inf() : 0);
        if (lhs != rhs)
            throw MathInconsistency(
                "v_decomp_hecke_row: Specht layer dimension mismatch");
    }
    return row;
}

template <class MS>
VPoly v_decomp_hecke(const SchurEngine<MS>& E, int si_lam, int si_mu) {
    if (!is_D_nonzero(E, si_mu))
        throw std::invalid_argument("v_decomp_hecke: D_mu is zero");
    return v_decomp_hecke_row(E, si_lam).at(si_mu);
}

} // namespace cycloschur
