#pragma once

/* Weyl modules of the cyclotomic q-Schur algebra S(Λ) for Λ = Λ(n,r,m),
 * computed entirely inside the Ariki-Koike algebra H.
 *
 * The Schur algebra is End_H(⊕_μ M^μ) with M^μ = m_μ H.  The basis map
 * φ_{ST}: M^ν → M^μ (S of type μ, T of type ν) sends m_ν to the double
 * sum m_{ST} of Murphy elements.  The Weyl-module bilinear form is read
 * off from the composite φ_{T^λ S} ∘ φ_{T T^λ}: M^λ → M^μ → M^λ, whose
 * value at m_λ is m_{T^λ S}·h_T where h_T solves m_μ h_T = m_{T T^λ} in
 * H.  The coefficient of m_{t^λ t^λ} in that product is ⟨φ_S, φ_T⟩; all
 * other Murphy coefficients must sit at strictly more dominant shapes.
 * Well-definedness (independence of the chosen solution h_T) holds
 * because m_{T^λ S} lies in the left ideal H·m_μ; both solvabilities are
 * verified and any failure aborts.
 *
 * Weight spaces: a character maps each weight μ ∈ Λ to a dimension; the
 * character of W^λ counts semistandard tableaux, the character of the
 * simple head L^λ is the rank over the residue field F of the Gram block
 * at each weight.  Composition multiplicities are solved by stripping
 * ⊵-maximal supported weights (unitriangularity of the simple characters).
 */

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "cycloschur/hecke.hpp"
#include "cycloschur/snf.hpp"

namespace cycloschur {

template <class MS>
class SchurEngine {
public:
    using Scalar = typename MS::Scalar;
    using Elem = typename HeckeAlgebra<MS>::Elem;
    /* weight-space dimensions, indexed like weights() */
    using Character = std::vector<long>;

    struct WeylGram {
        /* weight index → T_0(λ,μ) in canonical order, and the Gram block */
        std::map<int, std::vector<SemistandardTableau>> tabs;
        std::map<int, Matrix<Scalar>> blocks;
    };

    SchurEngine(const MS& ms, int n, std::vector<int> m)
        : ms_(&ms), n_(n), m_(std::move(m)), H_(ms, n) {
        if (static_cast<int>(m_.size()) != ms.r())
            throw std::invalid_argument("SchurEngine: need one bound per parameter");
        weights_ = enumerate_lambda(n_, ms.r(), m_);
        for (int i = 0; i < static_cast<int>(weights_.size()); ++i)
            weight_index_.emplace(weights_[i], i);
        for (int i = 0; i < static_cast<int>(weights_.size()); ++i)
            if (weights_[i].is_partition()) {
                shape_of_weight_.emplace(i, static_cast<int>(shapes_.size()));
                shape_weight_.push_back(i);
                shapes_.emplace_back(weights_[i]);
            }
        gram_cache_.resize(shapes_.size());
        char_weyl_cache_.resize(shapes_.size());
        char_simple_cache_.resize(shapes_.size());
    }

    const MS& ms() const { return *ms_; }
    int n() const { return n_; }
    int r() const { return ms_->r(); }
    const std::vector<int>& bounds() const { return m_; }
    const HeckeAlgebra<MS>& hecke() const { return H_; }

    const std::vector<Multicomposition>& weights() const { return weights_; }
    const std::vector<Multipartition>& shapes() const { return shapes_; }
    int weight_index(const Multicomposition& mu) const {
        auto it = weight_index_.find(mu);
        if (it == weight_index_.end())
            throw std::invalid_argument("weight_index: not a weight of this algebra");
        return it->second;
    }
    int shape_index(const Multipartition& lam) const {
        auto it = shape_of_weight_.find(weight_index(lam));
        if (it == shape_of_weight_.end())
            throw std::invalid_argument("shape_index: not a dominant weight");
        return it->second;
    }
    int shape_weight(int si) const { return shape_weight_.at(si); }

    const WeylGram& weyl_gram(int si) const {
        if (!gram_cache_.at(si)) build_gram(si);
        return *gram_cache_[si];
    }
    /* Adopt externally supplied Gram data (e.g. from a cache) for shape si;
     * the caller is responsible for structural validation. */
    void install_gram(int si, WeylGram wg) const {
        gram_cache_.at(si) = std::make_unique<WeylGram>(std::move(wg));
    }

    /* μ ↦ |T_0(λ,μ)| */
    const Character& char_weyl(int si) const {
        if (!char_weyl_cache_.at(si)) {
            const Multipartition& lam = shapes_[si];
            Character ch(weights_.size(), 0);
            for (int wi = 0; wi < static_cast<int>(weights_.size()); ++wi)
                ch[wi] = static_cast<long>(enumerate_ssyt(lam, weights_[wi]).size());
            char_weyl_cache_[si] = std::move(ch);
        }
        return *char_weyl_cache_[si];
    }
    long weyl_dim(int si) const {
        long d = 0;
        for (long x : char_weyl(si)) d += x;
        return d;
    }

    /* μ ↦ rank over F of the Gram block */
    const Character& char_simple(int si) const {
        if (!char_simple_cache_.at(si)) {
            const WeylGram& G = weyl_gram(si);
            Character ch(weights_.size(), 0);
            for (const auto& [wi, block] : G.blocks) ch[wi] = rank_over_F(*ms_, block);
            if (ch[shape_weight_[si]] != 1)
                throw MathInconsistency("char_simple: leading weight space of L is not 1-dimensional");
            char_simple_cache_[si] = std::move(ch);
        }
        return *char_simple_cache_[si];
    }

    /* Solve ch = Σ_ν c_ν · char_simple(ν) by stripping ⊵-maximal supported
     * weights; the canonical weight order refines dominance, so the first
     * supported weight is maximal and its multiplicity is forced. */
    std::vector<long> decompose_character(Character ch) const {
        if (ch.size() != weights_.size())
            throw std::invalid_argument("decompose_character: wrong length");
        std::vector<long> out(shapes_.size(), 0);
        for (int wi = 0; wi < static_cast<int>(weights_.size()); ++wi) {
            if (ch[wi] == 0) continue;
            auto it = shape_of_weight_.find(wi);
            if (it == shape_of_weight_.end())
                throw MathInconsistency(
                    "decompose_character: maximal supported weight is not a partition");
            if (ch[wi] < 0)
                throw MathInconsistency("decompose_character: negative multiplicity");
            const long c = ch[wi];
            const int si = it->second;
            const Character& simple = char_simple(si);
            for (std::size_t j = 0; j < ch.size(); ++j) ch[j] -= c * simple[j];
            out[si] += c;
            if (ch[wi] != 0)
                throw MathInconsistency("decompose_character: stripping failed at its own weight");
        }
        for (long rest : ch)
            if (rest != 0)
                throw MathInconsistency("decompose_character: nonzero residual");
        return out;
    }

private:
    /* left/right multiplication matrices of m_μ on the normal basis */
    const Matrix<Scalar>& lmul_matrix(int wi) const {
        auto it = lmul_cache_.find(wi);
        if (it != lmul_cache_.end()) return it->second;
        return mul_matrix(wi, /*left=*/true, lmul_cache_);
    }
    const Matrix<Scalar>& rmul_matrix(int wi) const {
        auto it = rmul_cache_.find(wi);
        if (it != rmul_cache_.end()) return it->second;
        return mul_matrix(wi, /*left=*/false, rmul_cache_);
    }
    const Matrix<Scalar>& mul_matrix(int wi, bool left,
                                     std::map<int, Matrix<Scalar>>& cache) const {
        const Elem m_mu = H_.m_lambda(weights_[wi]);
        const auto& keys = H_.basis_keys();
        const int d = static_cast<int>(keys.size());
        Matrix<Scalar> M(d, d);
        for (int j = 0; j < d; ++j) {
            Elem bj;
            bj.emplace(keys[j], Scalar(1));
            Elem prod = left ? H_.multiply(m_mu, bj) : H_.multiply(bj, m_mu);
            for (const auto& [k, c] : prod) M.at(H_.basis_position(k), j) = c;
        }
        auto [pos, ok] = cache.emplace(wi, std::move(M));
        (void)ok;
        return pos->second;
    }

    void build_gram(int si) const {
        const Multipartition& lam = shapes_[si];
        const Multipartition lamH = H_.rebound_partition(lam);
        const int hsi = H_.shape_index(lamH);
        const StandardTableau tsupH = superstandard(lamH);
        if (!(H_.std_tableaux(hsi)[0] == tsupH))
            throw MathInconsistency("weyl_gram: superstandard tableau is not first");
        const CellRef top{hsi, 0, 0};

        const std::vector<StandardTableau> stds = enumerate_std(lam);
        const StandardTableau tsup = superstandard(lam);
        const int nstd = static_cast<int>(stds.size());
        std::vector<Elem> left_el(nstd), right_el(nstd);
        for (int i = 0; i < nstd; ++i) {
            left_el[i] = H_.murphy_element(lam, tsup, stds[i]);  /* m_{t^λ s} */
            right_el[i] = H_.murphy_element(lam, stds[i], tsup); /* m_{s t^λ} */
        }
        const int d = static_cast<int>(H_.basis_keys().size());

        auto gram = std::make_unique<WeylGram>();
        for (int wi = 0; wi < static_cast<int>(weights_.size()); ++wi) {
            const Multicomposition& mu = weights_[wi];
            std::vector<SemistandardTableau> ssyts = enumerate_ssyt(lam, mu);
            if (ssyts.empty()) continue;
            const int nt = static_cast<int>(ssyts.size());

            /* group the standard tableaux by μ-type */
            std::vector<std::vector<int>> cls(nt);
            for (int t = 0; t < nstd; ++t) {
                auto T = type_map(stds[t], mu);
                if (!T) continue;
                for (int j = 0; j < nt; ++j)
                    if (ssyts[j] == *T) {
                        cls[j].push_back(t);
                        break;
                    }
            }
            for (const auto& c : cls)
                if (c.empty())
                    throw MathInconsistency("weyl_gram: semistandard class without standard lift");

            /* class sums m_{T^λ S} and m_{T T^λ} */
            std::vector<Elem> S_el(nt), T_el(nt);
            for (int j = 0; j < nt; ++j) {
                for (int t : cls[j]) {
                    S_el[j] = HeckeAlgebra<MS>::sum(S_el[j], left_el[t]);
                    T_el[j] = HeckeAlgebra<MS>::sum(T_el[j], right_el[t]);
                }
            }

            /* h_T with m_μ h_T = m_{T T^λ}; and the well-definedness witness
             * m_{T^λ S} ∈ H·m_μ */
            Matrix<Scalar> B(d, nt), Smat(d, nt);
            for (int j = 0; j < nt; ++j) {
                auto bv = H_.to_coords(T_el[j]);
                auto sv = H_.to_coords(S_el[j]);
                for (int i = 0; i < d; ++i) {
                    B.at(i, j) = bv[i];
                    Smat.at(i, j) = sv[i];
                }
            }
            auto h_all = solve_many(lmul_matrix(wi), B);
            if (!h_all)
                throw MathInconsistency("weyl_gram: m_{TT^λ} is not in the image of m_μ");
            if (!solve_many(rmul_matrix(wi), Smat))
                throw MathInconsistency("weyl_gram: m_{T^λS} is not in the left ideal H·m_μ");

            Matrix<Scalar> G(nt, nt);
            for (int tj = 0; tj < nt; ++tj) {
                std::vector<Scalar> hv(d);
                for (int i = 0; i < d; ++i) hv[i] = h_all->at(i, tj);
                const Elem hT = H_.from_coords(hv);
                for (int sj = 0; sj < nt; ++sj) {
                    Elem prod = H_.multiply(S_el[sj], hT);
                    auto coeffs = H_.murphy_coefficients(prod);
                    for (const auto& [cell, c] : coeffs) {
                        if (cell.shape == hsi) {
                            if (!(cell == top))
                                throw MathInconsistency(
                                    "weyl_gram: coefficient escapes the cell filtration");
                            G.at(sj, tj) = c;
                        } else if (dominance_cmp(H_.cell_shapes()[cell.shape], lamH) !=
                                   DominanceCmp::greater) {
                            throw MathInconsistency(
                                "weyl_gram: coefficient at a non-dominant shape");
                        }
                    }
                }
            }
            if (G != G.transpose())
                throw MathInconsistency("weyl_gram: block is not symmetric");
            if (wi == shape_weight_[si] &&
                !(G == Matrix<Scalar>(1, 1, {Scalar(1)})))
                throw MathInconsistency("weyl_gram: leading block is not (1)");
            gram->tabs.emplace(wi, std::move(ssyts));
            gram->blocks.emplace(wi, std::move(G));
        }
        gram_cache_[si] = std::move(gram);
    }

    const MS* ms_;
    int n_;
    std::vector<int> m_;
    HeckeAlgebra<MS> H_;
    std::vector<Multicomposition> weights_;
    std::vector<Multipartition> shapes_;
    std::map<Multicomposition, int> weight_index_;
    std::map<int, int> shape_of_weight_;
    std::vector<int> shape_weight_;

    mutable std::vector<std::unique_ptr<WeylGram>> gram_cache_;
    mutable std::vector<std::optional<Character>> char_weyl_cache_;
    mutable std::vector<std::optional<Character>> char_simple_cache_;
    mutable std::map<int, Matrix<Scalar>> lmul_cache_;
    mutable std::map<int, Matrix<Scalar>> rmul_cache_;
};

} // namespace cycloschur
