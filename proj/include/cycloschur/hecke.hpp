#pragma once

/* The cyclotomic Hecke algebra H_{n,r} over a modular system.
 *
 * Presentation (generators T_0, T_1..T_{n-1} over R with parameters
 * q̂, Q̂_1..Q̂_r):
 *   (T_i - q̂)(T_i + 1) = 0                      i >= 1
 *   Π_{k=1..r} (T_0 - Q̂_k) = 0
 *   T_0 T_1 T_0 T_1 = T_1 T_0 T_1 T_0
 *   T_i T_{i+1} T_i = T_{i+1} T_i T_{i+1},  T_i T_j = T_j T_i (|i-j| >= 2)
 *
 * Jucys-Murphy elements: L_1 = T_0, L_{i+1} = T_i L_i T_i.  The algebra is
 * free over R with normal basis { L_1^{c_1}···L_n^{c_n} T_w : 0 <= c_i < r,
 * w in S_n }, of rank r^n n!.
 *
 * Elements are maps from packed basis keys to scalars.  All products are
 * computed by structural recursions:
 *   - right multiplication by T_i only touches the T_w part;
 *   - left multiplication by T_i uses the closed commutation
 *       T_i L_i^a L_{i+1}^b = q̂^{b-a} L_i^b L_{i+1}^a T_i
 *           + (q̂-1)·sgn(b-a)·Σ_{k=min(a,b)}^{max(a,b)-1} q̂^{k-a} L_i^k L_{i+1}^{a+b-k},
 *     whose output exponents never exceed max(a,b) < r;
 *   - right multiplication by T_0 = L_1 pushes L_1 through T_w by a
 *     memoised recursion on reduced words, then merges exponents; an
 *     exponent reaching r is rewritten with the table Ξ_m = NF(L_m^r),
 *     built bottom-up from the cyclotomic relation via
 *       L_m^r = q̂^{-1} T_{m-1} [ q̂^r L_{m-1}^r T_{m-1}
 *               + (q̂-1) Σ_{j=1}^{r-1} q̂^j L_{m-1}^j L_m^{r-j} ].
 *
 * The same class carries the Murphy cellular basis m_st = T_{d(s)}^* m_λ
 * T_{d(t)} (λ running over all r-partitions of n, built from the scaled
 * Jucys-Murphy elements q̂^{1-i} L_i), the change of basis to the normal
 * basis, and Specht-module Gram matrices.
 */

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cycloschur/errors.hpp"
#include "cycloschur/matrix.hpp"
#include "cycloschur/multipartition.hpp"
#include "cycloschur/tableau.hpp"

namespace cycloschur {

/* cell of the Murphy basis: shape index and positions of (s,t) in the
 * standard-tableau list of that shape */
struct CellRef {
    int shape;
    int s;
    int t;
    auto operator<=>(const CellRef&) const = default;
};

template <class MS>
class HeckeAlgebra {
public:
    using Scalar = typename MS::Scalar;
    using Elem = std::map<std::uint64_t, Scalar>;

    HeckeAlgebra(const MS& ms, int n) : ms_(&ms), n_(n), r_(ms.r()), perms_(n) {
        if (n < 0 || n > 8) throw std::invalid_argument("HeckeAlgebra: need 0 <= n <= 8");
        if (r_ < 1 || r_ > 15) throw std::invalid_argument("HeckeAlgebra: need 1 <= r <= 15");
        build_xi();
    }

    const MS& ms() const { return *ms_; }
    int n() const { return n_; }
    int r() const { return r_; }
    const PermTable& perms() const { return perms_; }
    long dim() const {
        long d = 1;
        for (int i = 1; i <= n_; ++i) d *= r_ * i;
        return d; /* r^n·n! */
    }

    /* ---- basis keys ---- */

    std::uint64_t make_key(const std::vector<int>& exps, int widx) const {
        std::uint64_t k = static_cast<std::uint64_t>(widx);
        for (int i = 0; i < n_; ++i) {
            if (exps[i] < 0 || exps[i] > 15) throw std::logic_error("exponent out of key range");
            k |= static_cast<std::uint64_t>(exps[i]) << (16 + 4 * i);
        }
        return k;
    }
    std::vector<int> key_exps(std::uint64_t k) const {
        std::vector<int> e(n_);
        for (int i = 0; i < n_; ++i) e[i] = static_cast<int>((k >> (16 + 4 * i)) & 0xF);
        return e;
    }
    int key_widx(std::uint64_t k) const { return static_cast<int>(k & 0xFFFF); }
    static std::uint64_t rekey(std::uint64_t k, int widx) {
        return (k & ~std::uint64_t(0xFFFF)) | static_cast<std::uint64_t>(widx);
    }

    /* ---- element helpers ---- */

    static void add_term(Elem& e, std::uint64_t key, const Scalar& c) {
        if (is_zero_elem(c)) return;
        auto it = e.find(key);
        if (it == e.end()) {
            e.emplace(key, c);
            return;
        }
        it->second = it->second + c;
        if (is_zero_elem(it->second)) e.erase(it);
    }
    static void axpy(Elem& target, const Elem& src, const Scalar& c) {
        for (const auto& [k, v] : src) add_term(target, k, c * v);
    }
    Elem scaled(const Elem& x, const Scalar& c) const {
        Elem out;
        axpy(out, x, c);
        return out;
    }
    static Elem sum(const Elem& a, const Elem& b) {
        Elem out = a;
        for (const auto& [k, v] : b) add_term(out, k, v);
        return out;
    }

    Elem zero() const { return {}; }
    Elem one() const {
        Elem e;
        e.emplace(make_key(std::vector<int>(n_, 0), perms_.id()), Scalar(1));
        return e;
    }
    Elem Tw_elem(int widx) const {
        Elem e;
        e.emplace(make_key(std::vector<int>(n_, 0), widx), Scalar(1));
        return e;
    }
    Elem T_elem(int i) const {  /* T_{s_i}, 1 <= i <= n-1 */
        check_strand(i);
        return Tw_elem(perms_.rmul_s[perms_.id()][i - 1]);
    }
    Elem L_elem(int k) const {  /* L_k, 1 <= k <= n */
        if (k < 1 || k > n_) throw std::invalid_argument("L_elem: bad index");
        std::vector<int> e(n_, 0);
        if (r_ == 1) {
            /* L_k has exponent cap 0; use its normal form instead */
            Elem x = one();
            return rmul_L(x, k);
        }
        e[k - 1] = 1;
        Elem x;
        x.emplace(make_key(e, perms_.id()), Scalar(1));
        return x;
    }
    Elem T0_elem() const { return L_elem(1); }

    /* q̂ powers (negative allowed; q̂ is a unit) */
    Scalar q() const { return ms_->qhat; }
    Scalar qpow(long j) const {
        auto it = qpow_.find(j);
        if (it != qpow_.end()) return it->second;
        Scalar v(1);
        Scalar base = j >= 0 ? q() : Scalar(1) / q();
        for (long t = 0; t < std::abs(j); ++t) v = v * base;
        qpow_.emplace(j, v);
        return v;
    }

    /* ---- structural products ---- */

    /* x · T_{s_i} */
    Elem rmul_T(const Elem& x, int i) const {
        check_strand(i);
        Elem out;
        for (const auto& [k, c] : x) {
            int w = key_widx(k);
            int ws = perms_.rmul_s[w][i - 1];
            if (perms_.length[ws] > perms_.length[w]) {
                add_term(out, rekey(k, ws), c);
            } else {
                add_term(out, rekey(k, ws), q() * c);
                add_term(out, k, (q() - Scalar(1)) * c);
            }
        }
        return out;
    }

    /* x · T_0 (= x · L_1) */
    Elem rmul_T0(const Elem& x) const {
        Elem out;
        for (const auto& [k, c] : x) {
            const std::vector<int> a = key_exps(k);
            const Elem& pl = pushL(key_widx(k), 1);
            for (const auto& [k2, c2] : pl) {
                std::vector<int> m = key_exps(k2);
                bool over = false;
                for (int i = 0; i < n_; ++i) {
                    m[i] += a[i];
                    if (m[i] >= r_) over = true;
                }
                Scalar coef = c * c2;
                int u = key_widx(k2);
                if (!over) {
                    add_term(out, make_key(m, u), coef);
                } else {
                    Elem t = nf_L(m);
                    for (int letter : perms_.word[u]) t = rmul_T(t, letter);
                    axpy(out, t, coef);
                }
            }
        }
        return out;
    }

    /* x · L_k via L_k = T_{k-1}···T_1 T_0 T_1···T_{k-1} */
    Elem rmul_L(const Elem& x, int k) const {
        if (k < 1 || k > n_) throw std::invalid_argument("rmul_L: bad index");
        Elem t = x;
        for (int i = k - 1; i >= 1; --i) t = rmul_T(t, i);
        t = rmul_T0(t);
        for (int i = 1; i <= k - 1; ++i) t = rmul_T(t, i);
        return t;
    }

    /* T_{s_i} · x, by the closed crossing formula (no exponent overflow) */
    Elem lmul_T(int i, const Elem& x) const {
        check_strand(i);
        Elem out;
        const Scalar qm1 = q() - Scalar(1);
        for (const auto& [k, c] : x) {
            std::vector<int> a = key_exps(k);
            const int alpha = a[i - 1], beta = a[i];
            const int w = key_widx(k);
            /* T_i T_w part of the swap term */
            int siw = perms_.inverse[perms_.rmul_s[perms_.inverse[w]][i - 1]];
            std::vector<int> swapped = a;
            std::swap(swapped[i - 1], swapped[i]);
            const Scalar lead = qpow(beta - alpha) * c;
            if (perms_.length[siw] > perms_.length[w]) {
                add_term(out, make_key(swapped, siw), lead);
            } else {
                add_term(out, make_key(swapped, siw), q() * lead);
                add_term(out, make_key(swapped, w), qm1 * lead);
            }
            /* remainder: cancels entirely when alpha == beta */
            if (alpha != beta) {
                const int lo = std::min(alpha, beta), hi = std::max(alpha, beta);
                const Scalar sgn = (beta > alpha) ? Scalar(1) : Scalar(-1);
                for (int t = lo; t < hi; ++t) {
                    std::vector<int> e = a;
                    e[i - 1] = t;
                    e[i] = alpha + beta - t;
                    add_term(out, make_key(e, w), sgn * qm1 * qpow(t - alpha) * c);
                }
            }
        }
        return out;
    }

    /* full product, decomposing b into generator words */
    Elem multiply(const Elem& a, const Elem& b) const {
        Elem out;
        for (const auto& [k, c] : b) {
            Elem t = a;
            const std::vector<int> e = key_exps(k);
            for (int strand = 1; strand <= n_; ++strand)
                for (int copy = 0; copy < e[strand - 1]; ++copy) t = rmul_L(t, strand);
            for (int letter : perms_.word[key_widx(k)]) t = rmul_T(t, letter);
            axpy(out, t, c);
        }
        return out;
    }

    /* the *-anti-automorphism: fixes T_0..T_{n-1}, reverses products */
    Elem star(const Elem& x) const {
        Elem out;
        for (const auto& [k, c] : x) {
            std::vector<int> e = key_exps(k);
            Elem t = Tw_elem(perms_.inverse[key_widx(k)]);
            for (int strand = 1; strand <= n_; ++strand)
                for (int copy = 0; copy < e[strand - 1]; ++copy) t = rmul_L(t, strand);
            axpy(out, t, c);
        }
        return out;
    }

    /* ---- Murphy cellular structure ---- */

    std::vector<int> full_bounds() const { return std::vector<int>(r_, std::max(n_, 1)); }

    const std::vector<Multipartition>& cell_shapes() const {
        if (shapes_.empty()) {
            shapes_ = enumerate_lambda_plus(n_, r_, full_bounds());
            for (const auto& lam : shapes_) tabs_.push_back(enumerate_std(lam));
        }
        return shapes_;
    }
    const std::vector<StandardTableau>& std_tableaux(int shape_idx) const {
        cell_shapes();
        return tabs_[shape_idx];
    }
    int shape_index(const Multipartition& lam) const {
        const auto& sh = cell_shapes();
        Multipartition full = rebound_partition(lam);
        for (int i = 0; i < static_cast<int>(sh.size()); ++i)
            if (sh[i] == full) return i;
        throw std::invalid_argument("shape_index: not a shape of this algebra");
    }
    /* re-pad a multipartition of n to this algebra's cell-shape bounds */
    Multipartition rebound_partition(const Multipartition& lam) const {
        if (lam.size() != n_ || lam.r() != r_)
            throw std::invalid_argument("rebound_partition: wrong size or number of components");
        std::vector<std::vector<int>> parts;
        for (int k = 0; k < lam.r(); ++k) parts.push_back(lam.component(k));
        return Multipartition(std::move(parts), full_bounds());
    }
    /* Unlike partitions, a composition of n may have a nonzero entry past
     * row n (for example (0,1)), so widen the bound where needed; m_lambda
     * only reads row lengths and component sizes, which are unaffected. */
    Multicomposition rebound_composition(const Multicomposition& mu) const {
        if (mu.size() != n_ || mu.r() != r_)
            throw std::invalid_argument("rebound_composition: wrong size or number of components");
        std::vector<std::vector<int>> parts;
        std::vector<int> bound = full_bounds();
        for (int k = 0; k < mu.r(); ++k) {
            parts.push_back(mu.component(k));
            int len = static_cast<int>(parts.back().size());
            while (len > 0 && parts.back()[len - 1] == 0) --len;
            bound[k] = std::max(bound[k], len);
        }
        return Multicomposition(std::move(parts), bound);
    }

    /* m_λ = (Π_{k=2..r} Π_{i=1..a_k} (q̂^{1-i} L_i - Q̂_k)) · Σ_{w ∈ S_λ} T_w.
     * The scaled elements q̂^{1-i} L_i are the Jucys-Murphy elements in the
     * normalization for which symmetric polynomials in a prefix commute with
     * the row stabilizer; this makes m_λ *-invariant and the basis cellular.
     * Defined for any multicomposition (the generator of M^μ for weights μ). */
    Elem m_lambda(const Multicomposition& lam_in) const {
        Multicomposition lam = rebound_composition(lam_in);
        /* the L-part expands into monomials with exponents < r */
        std::map<std::vector<int>, Scalar> u;
        u.emplace(std::vector<int>(n_, 0), Scalar(1));
        long ak = 0;
        for (int k = 2; k <= r_; ++k) {
            ak += lam.component_size(k - 2);
            const Scalar& Q = ms_->Qhat[k - 1];
            for (long i = 1; i <= ak; ++i) {
                std::map<std::vector<int>, Scalar> next;
                for (const auto& [e, c] : u) {
                    std::vector<int> e2 = e;
                    e2[i - 1] += 1;
                    if (e2[i - 1] >= r_) throw std::logic_error("m_lambda: exponent overflow");
                    Scalar up = qpow(1 - i) * c;
                    auto it = next.find(e2);
                    if (it == next.end()) next.emplace(std::move(e2), up);
                    else it->second = it->second + up;
                    auto it0 = next.find(e);
                    Scalar dec = Scalar(0) - Q * c;
                    if (it0 == next.end()) next.emplace(e, dec);
                    else it0->second = it0->second + dec;
                }
                u = std::move(next);
            }
        }
        /* row stabilizer: Young subgroup on concatenated nonzero row lengths */
        std::vector<int> rows;
        for (int k = 0; k < r_; ++k)
            for (int len : lam.component(k))
                if (len > 0) rows.push_back(len);
        Elem out;
        for (const Perm& w : enumerate_young_subgroup(n_, rows)) {
            int widx = perms_.index_of.at(w.one_line());
            for (const auto& [e, c] : u)
                if (!is_zero_elem(c)) add_term(out, make_key(e, widx), c);
        }
        return out;
    }

    /* m_st = T_{d(s)}^* · m_λ · T_{d(t)} */
    Elem murphy_element(const Multipartition& lam, const StandardTableau& s,
                        const StandardTableau& t) const {
        Elem e = m_lambda(lam);
        for (int letter : d_perm(t).reduced_word()) e = rmul_T(e, letter);
        for (int letter : d_perm(s).reduced_word()) e = lmul_T(letter, e);
        return e;
    }

    const std::vector<std::uint64_t>& basis_keys() const {
        if (basis_keys_.empty()) {
            std::vector<int> e(n_, 0);
            for (int w = 0; w < perms_.size(); ++w) {
                while (true) {
                    basis_keys_.push_back(make_key(e, w));
                    int i = 0;
                    while (i < n_ && e[i] == r_ - 1) e[i++] = 0;
                    if (i == n_) break;
                    e[i] += 1;
                }
            }
            std::sort(basis_keys_.begin(), basis_keys_.end());
            for (std::size_t i = 0; i < basis_keys_.size(); ++i)
                basis_index_.emplace(basis_keys_[i], static_cast<int>(i));
        }
        return basis_keys_;
    }
    int basis_position(std::uint64_t key) const {
        basis_keys();
        return basis_index_.at(key);
    }
    /* coordinate vector of x in the normal basis, and back */
    std::vector<Scalar> to_coords(const Elem& x) const {
        std::vector<Scalar> v(basis_keys().size(), Scalar(0));
        for (const auto& [k, c] : x) v[basis_index_.at(k)] = c;
        return v;
    }
    Elem from_coords(const std::vector<Scalar>& v) const {
        const auto& keys = basis_keys();
        Elem e;
        for (std::size_t i = 0; i < keys.size(); ++i)
            if (!is_zero_elem(v[i])) e.emplace(keys[i], v[i]);
        return e;
    }

    /* flattened cell list in canonical order, with row offsets */
    const std::vector<CellRef>& cells() const {
        if (cells_.empty()) {
            cell_shapes();
            for (int sh = 0; sh < static_cast<int>(shapes_.size()); ++sh)
                for (int s = 0; s < static_cast<int>(tabs_[sh].size()); ++s)
                    for (int t = 0; t < static_cast<int>(tabs_[sh].size()); ++t)
                        cells_.push_back({sh, s, t});
        }
        return cells_;
    }

    /* rows: cells in canonical order; columns: normal basis keys ascending */
    const Matrix<Scalar>& murphy_transition() const {
        if (!transition_) {
            basis_keys();
            const auto& cl = cells();
            Matrix<Scalar> M(static_cast<int>(cl.size()), static_cast<int>(basis_keys_.size()));
            for (std::size_t row = 0; row < cl.size(); ++row) {
                Elem e = murphy_element(shapes_[cl[row].shape], tabs_[cl[row].shape][cl[row].s],
                                        tabs_[cl[row].shape][cl[row].t]);
                for (const auto& [k, c] : e)
                    M.at(static_cast<int>(row), basis_index_.at(k)) = c;
            }
            transition_ = std::move(M);
        }
        return *transition_;
    }

    /* coordinates of x in the Murphy basis */
    std::map<CellRef, Scalar> murphy_coefficients(const Elem& x) const {
        const Matrix<Scalar>& M = murphy_transition();
        if (!transition_invT_) {
            auto inv = inverse(M.transpose());
            if (!inv)
                throw MathInconsistency("Murphy transition matrix is singular over K");
            transition_invT_ = std::move(*inv);
        }
        std::vector<Scalar> v(basis_keys_.size(), Scalar(0));
        for (const auto& [k, c] : x) v[basis_index_.at(k)] = c;
        const Matrix<Scalar>& inv = *transition_invT_;
        std::map<CellRef, Scalar> out;
        const auto& cl = cells();
        for (int row = 0; row < inv.rows(); ++row) {
            Scalar acc(0);
            for (int col = 0; col < inv.cols(); ++col) {
                if (is_zero_elem(v[col])) continue;
                acc = acc + inv.at(row, col) * v[col];
            }
            if (!is_zero_elem(acc)) out.emplace(cl[row], acc);
        }
        return out;
    }

    /* Gram matrix of the Specht module S^λ in the basis {m_{t^λ t} + H^{∨λ}}:
     * <m_s, m_t> is the coefficient of m_{t^λ t^λ} in m_{t^λ s}·m_{t t^λ};
     * every other coefficient must sit at a strictly more dominant shape. */
    const Matrix<Scalar>& specht_gram(const Multipartition& lam_in) const {
        Multipartition lam = rebound_partition(lam_in);
        auto it = gram_cache_.find(lam.text());
        if (it != gram_cache_.end()) return it->second;
        const int my_shape = shape_index(lam);
        const auto& tabs = std_tableaux(my_shape);
        const StandardTableau tsup = superstandard(lam);
        const int N = static_cast<int>(tabs.size());
        std::vector<Elem> left(N), right(N);
        for (int i = 0; i < N; ++i) {
            left[i] = murphy_element(lam, tsup, tabs[i]);   /* m_{t^λ s} */
            right[i] = murphy_element(lam, tabs[i], tsup);  /* m_{t t^λ} */
        }
        Matrix<Scalar> G(N, N);
        for (int si = 0; si < N; ++si)
            for (int ti = 0; ti < N; ++ti) {
                Elem prod = multiply(left[si], right[ti]);
                auto coeffs = murphy_coefficients(prod);
                for (const auto& [cell, c] : coeffs) {
                    if (cell.shape == my_shape) {
                        bool at_top = tabs[cell.s] == tsup && tabs[cell.t] == tsup;
                        if (!at_top)
                            throw MathInconsistency(
                                "specht_gram: coefficient escapes the cell filtration");
                        G.at(si, ti) = c;
                    } else {
                        auto cmpres = dominance_cmp(shapes_[cell.shape], lam);
                        if (cmpres != DominanceCmp::greater)
                            throw MathInconsistency(
                                "specht_gram: coefficient at a non-dominant shape");
                    }
                }
            }
        auto [pos, ok] = gram_cache_.emplace(lam.text(), std::move(G));
        (void)ok;
        return pos->second;
    }

private:
    void check_strand(int i) const {
        if (i < 1 || i > n_ - 1) throw std::invalid_argument("generator index out of range");
    }

    /* Ξ_m = NF(L_m^r), m = 1..n */
    void build_xi() {
        xi_.clear();
        if (n_ == 0) return;
        /* elementary symmetric functions of Q̂ */
        std::vector<Scalar> esym(r_ + 1, Scalar(0));
        esym[0] = Scalar(1);
        for (int k = 0; k < r_; ++k)
            for (int j = std::min(k + 1, r_); j >= 1; --j)
                esym[j] = esym[j] + ms_->Qhat[k] * esym[j - 1];
        /* Ξ_1 from the cyclotomic relation: L_1^r = Σ (−1)^{k+1} e_k L_1^{r-k} */
        Elem x1;
        for (int k = 1; k <= r_; ++k) {
            std::vector<int> e(n_, 0);
            e[0] = r_ - k;
            Scalar c = (k % 2 == 1) ? esym[k] : Scalar(0) - esym[k];
            add_term(x1, make_key(e, perms_.id()), c);
        }
        xi_.push_back(std::move(x1));
        for (int m = 2; m <= n_; ++m) {
            Elem bracket = scaled(rmul_T(xi_[m - 2], m - 1), qpow(r_));
            for (int j = 1; j <= r_ - 1; ++j) {
                std::vector<int> e(n_, 0);
                e[m - 2] = j;
                e[m - 1] = r_ - j;
                add_term(bracket, make_key(e, perms_.id()), (q() - Scalar(1)) * qpow(j));
            }
            xi_.push_back(scaled(lmul_T(m - 1, bracket), qpow(-1)));
        }
    }

    /* NF(T_w · L_m), memoised; every term is a single L_k times some T_u */
    const Elem& pushL(int widx, int m) const {
        auto key = std::make_pair(widx, m);
        auto it = pushL_.find(key);
        if (it != pushL_.end()) return it->second;
        Elem res;
        if (widx == perms_.id()) {
            std::vector<int> e(n_, 0);
            if (m - 1 < n_) e[m - 1] = 1;
            if (r_ == 1) {
                /* exponent cap 0: L_m itself needs rewriting; Ξ_m = NF(L_m) */
                res = xi_[m - 1];
            } else {
                res.emplace(make_key(e, perms_.id()), Scalar(1));
            }
        } else {
            const std::vector<int>& word = perms_.word[widx];
            const int i = word.back();
            const int wp = perms_.rmul_s[widx][i - 1];  /* w = w'·s_i, shorter */
            if (m != i && m != i + 1) {
                res = rmul_T(pushL(wp, m), i);
            } else if (m == i) {
                /* T_i L_i = q̂^{-1} L_{i+1} T_i − q̂^{-1}(q̂−1) L_{i+1} */
                Elem a = pushL(wp, i + 1);
                res = scaled(rmul_T(a, i), qpow(-1));
                axpy(res, a, Scalar(0) - qpow(-1) * (q() - Scalar(1)));
            } else {
                /* T_i L_{i+1} = q̂ L_i T_i + (q̂−1) L_{i+1} */
                Elem a = pushL(wp, i);
                Elem b = pushL(wp, i + 1);
                res = scaled(rmul_T(a, i), q());
                axpy(res, b, q() - Scalar(1));
            }
        }
        auto [pos, ok] = pushL_.emplace(key, std::move(res));
        (void)ok;
        return pos->second;
    }

    /* normal form of the pure L-monomial L^c (entries may reach or exceed r);
     * rewrites the highest overflowing strand with Ξ and recurses */
    const Elem& nf_L(const std::vector<int>& c) const {
        auto it = nfl_.find(c);
        if (it != nfl_.end()) return it->second;
        Elem res;
        int m = 0;
        for (int i = n_; i >= 1; --i)
            if (c[i - 1] >= r_) {
                m = i;
                break;
            }
        if (m == 0) {
            res.emplace(make_key(c, perms_.id()), Scalar(1));
        } else {
            std::vector<int> base = c;
            base[m - 1] -= r_;
            for (const auto& [k, coef] : xi_[m - 1]) {
                std::vector<int> merged = key_exps(k);
                for (int i = 0; i < n_; ++i) merged[i] += base[i];
                Elem t = nf_L(merged);
                for (int letter : perms_.word[key_widx(k)]) t = rmul_T(t, letter);
                axpy(res, t, coef);
            }
        }
        auto [pos, ok] = nfl_.emplace(c, std::move(res));
        (void)ok;
        return pos->second;
    }

    const MS* ms_;
    int n_, r_;
    PermTable perms_;
    std::vector<Elem> xi_;
    mutable std::map<long, Scalar> qpow_;
    mutable std::map<std::pair<int, int>, Elem> pushL_;
    mutable std::map<std::vector<int>, Elem> nfl_;

    mutable std::vector<Multipartition> shapes_;
    mutable std::vector<std::vector<StandardTableau>> tabs_;
    mutable std::vector<CellRef> cells_;
    mutable std::vector<std::uint64_t> basis_keys_;
    mutable std::map<std::uint64_t, int> basis_index_;
    mutable std::optional<Matrix<Scalar>> transition_;
    mutable std::optional<Matrix<Scalar>> transition_invT_;
    mutable std::map<std::string, Matrix<Scalar>> gram_cache_;
};

} // namespace cycloschur
