#pragma once

/*
 * Splitting the r parameter components into g consecutive blocks
 * p = (r_1, ..., r_g) induces, for every multipartition whose boxes are
 * distributed among the blocks, a tensor factorization of its Weyl module
 * data: component engines over the sliced parameter lists compute their own
 * Gram blocks, filtration layers, and graded decomposition polynomials, and
 * the block-diagonal ("bar") objects of the full algebra are modelled as
 * Kronecker / tensor products of these.
 *
 * Everything here is verification-oriented: the tensor side is computed
 * exclusively by the small component engines, the direct side exclusively
 * by the full-size engine, and the two are compared.  The only shared code
 * is the generic linear algebra underneath both.
 */

#include <algorithm>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cycloschur/errors.hpp"
#include "cycloschur/jantzen.hpp"
#include "cycloschur/matrix.hpp"
#include "cycloschur/modular_system.hpp"
#include "cycloschur/multipartition.hpp"
#include "cycloschur/schur.hpp"
#include "cycloschur/snf.hpp"
#include "cycloschur/tableau.hpp"
#include "cycloschur/vpolynomial.hpp"

namespace cycloschur {

/* Restriction of a modular system to a consecutive range [lo, hi) of its
 * parameter components; the local structure (p or x) is unchanged. */
inline PLocalSystem slice_system(const PLocalSystem& ms, int lo, int hi) {
    return PLocalSystem(
        ms.p, ms.qhat,
        std::vector<PLocalSystem::Scalar>(ms.Qhat.begin() + lo,
                                          ms.Qhat.begin() + hi));
}
inline XAdicSystem slice_system(const XAdicSystem& ms, int lo, int hi) {
    return XAdicSystem(
        ms.e, ms.qhat,
        std::vector<XAdicSystem::Scalar>(ms.Qhat.begin() + lo,
                                         ms.Qhat.begin() + hi));
}

/* One block of a split configuration: its own rank, level, bounds and
 * parameters.  A block with n = 0 is trivial; its only module datum is the
 * scalar 1 and it contributes the empty factor to every product. */
template <class MS>
struct ComponentConfig {
    int index; /* block number k, 0-based */
    int n;     /* boxes assigned to this block */
    int r;     /* parameter components in this block */
    std::vector<int> m;
    MS ms;
};

template <class MS>
std::vector<ComponentConfig<MS>> component_configs(int n, int r,
                                                   const std::vector<int>& m,
                                                   const PSplit& p,
                                                   const AlphaVector& alpha,
                                                   const MS& ms) {
    validate_psplit(p, r);
    if (static_cast<int>(m.size()) != r || ms.r() != r)
        throw std::invalid_argument("component_configs: bound/parameter count");
    if (alpha.n.size() != p.size())
        throw std::invalid_argument("component_configs: alpha length");
    int total = 0;
    for (int x : alpha.n) {
        if (x < 0) throw std::invalid_argument("component_configs: negative block size");
        total += x;
    }
    if (total != n) throw std::invalid_argument("component_configs: alpha does not sum to n");
    std::vector<ComponentConfig<MS>> out;
    int off = 0;
    for (std::size_t k = 0; k < p.size(); ++k) {
        out.push_back(ComponentConfig<MS>{
            static_cast<int>(k), alpha.n[k], p[k],
            std::vector<int>(m.begin() + off, m.begin() + off + p[k]),
            slice_system(ms, off, off + p[k])});
        off += p[k];
    }
    return out;
}

/* Owns the full-size engine, the sliced parameter systems, and lazily
 * created component engines keyed by (block, boxes-in-block). */
template <class MS>
class ProductContext {
  public:
    ProductContext(const MS& ms, int n, std::vector<int> m, PSplit p)
        : n_(n), m_(std::move(m)), p_(std::move(p)) {
        const int r = static_cast<int>(m_.size());
        if (ms.r() != r)
            throw std::invalid_argument("ProductContext: |m| != number of parameters");
        validate_psplit(p_, r);
        int off = 0;
        for (int rk : p_) {
            starts_.push_back(off);
            off += rk;
        }
        systems_.reserve(p_.size());
        for (std::size_t k = 0; k < p_.size(); ++k)
            systems_.push_back(
                slice_system(ms, starts_[k], starts_[k] + p_[k]));
        big_ = std::make_unique<SchurEngine<MS>>(ms, n_, m_);
    }
    ProductContext(const ProductContext&) = delete;
    ProductContext& operator=(const ProductContext&) = delete;

    int g() const { return static_cast<int>(p_.size()); }
    const PSplit& psplit() const { return p_; }
    const SchurEngine<MS>& big() const { return *big_; }
    const MS& system(int k) const { return systems_.at(k); }
    std::vector<int> bounds_slice(int k) const {
        return std::vector<int>(m_.begin() + starts_.at(k),
                                m_.begin() + starts_.at(k) + p_.at(k));
    }
    /* engine for block k holding nk boxes (nk = 0 is legal) */
    const SchurEngine<MS>& component(int k, int nk) const {
        auto key = std::make_pair(k, nk);
        auto it = engines_.find(key);
        if (it == engines_.end())
            it = engines_
                     .emplace(key, std::make_unique<SchurEngine<MS>>(
                                       systems_.at(k), nk, bounds_slice(k)))
                     .first;
        return *it->second;
    }

  private:
    int n_;
    std::vector<int> m_;
    PSplit p_;
    std::vector<int> starts_;
    std::vector<MS> systems_; /* filled once in the constructor; engines keep
                                 pointers into it, so it never grows after */
    std::unique_ptr<SchurEngine<MS>> big_;
    mutable std::map<std::pair<int, int>,
                     std::unique_ptr<SchurEngine<MS>>>
        engines_;
};

namespace detail {
inline void require_alpha_match(const Multicomposition& lam,
                                const Multicomposition& mu, const PSplit& p) {
    if (alpha_p(lam, p) != alpha_p(mu, p))
        throw std::invalid_argument(
            "block box counts of the two multicompositions differ");
}
} // namespace detail

/* ∏_k d_{λ^[k] μ^[k]}(v), each factor computed inside its component
 * engine.  Blocks with no boxes contribute the factor 1. */
template <class MS>
VPoly product_v_decomp(const ProductContext<MS>& C, const Multipartition& lam,
                       const Multipartition& mu) {
    detail::require_alpha_match(lam, mu, C.psplit());
    auto L = split(lam, C.psplit());
    auto M = split(mu, C.psplit());
    VPoly prod = VPoly::one();
    for (int k = 0; k < C.g(); ++k) {
        const int nk = static_cast<int>(L[k].size());
        if (nk == 0) continue;
        const auto& Ek = C.component(k, nk);
        prod = prod * v_decomp(Ek, Ek.shape_index(Multipartition(L[k])),
                               Ek.shape_index(Multipartition(M[k])));
        if (prod.is_zero()) break;
    }
    return prod;
}

/* Same product on the Hecke-algebra side; requires every component simple
 * D_{μ^[k]} to be nonzero (checked inside v_decomp_hecke). */
template <class MS>
VPoly product_v_decomp_hecke(const ProductContext<MS>& C,
                             const Multipartition& lam,
                             const Multipartition& mu) {
    detail::require_alpha_match(lam, mu, C.psplit());
    auto L = split(lam, C.psplit());
    auto M = split(mu, C.psplit());
    VPoly prod = VPoly::one();
    for (int k = 0; k < C.g(); ++k) {
        const int nk = static_cast<int>(L[k].size());
        if (nk == 0) continue;
        const auto& Ek = C.component(k, nk);
        prod = prod * v_decomp_hecke(Ek, Ek.shape_index(Multipartition(L[k])),
                                     Ek.shape_index(Multipartition(M[k])));
    }
    return prod;
}

/* Gram block of the tensor ("bar") module at weight μ: the Kronecker
 * product of the component Gram blocks, together with the block-respecting
 * tableaux reordered so that position matches the Kronecker index of the
 * split.  The reindexing is itself a verification: the splitting map must
 * hit every Kronecker position exactly once. */
template <class MS>
struct BarZBlock {
    std::vector<SemistandardTableau> tabs; /* Kronecker order */
    Matrix<typename MS::Scalar> gram;
};

template <class MS>
BarZBlock<MS> barZ_gram_block(const ProductContext<MS>& C,
                              const Multipartition& lam,
                              const Multicomposition& mu) {
    using Scalar = typename MS::Scalar;
    detail::require_alpha_match(lam, mu, C.psplit());
    auto L = split(lam, C.psplit());
    auto M = split(mu, C.psplit());

    Matrix<Scalar> acc(1, 1);
    acc.at(0, 0) = Scalar(1);
    std::vector<const std::vector<SemistandardTableau>*> factors;
    bool empty = false;
    for (int k = 0; k < C.g(); ++k) {
        const int nk = static_cast<int>(L[k].size());
        if (nk == 0) continue;
        const auto& Ek = C.component(k, nk);
        const auto& WG = Ek.weyl_gram(Ek.shape_index(Multipartition(L[k])));
        const int wik = Ek.weight_index(M[k]);
        auto it = WG.blocks.find(wik);
        if (it == WG.blocks.end()) {
            empty = true;
            break;
        }
        factors.push_back(&WG.tabs.at(wik));
        acc = kronecker(acc, it->second);
    }
    BarZBlock<MS> out;
    if (empty) {
        if (!enumerate_ssyt_p(lam, mu, C.psplit()).empty())
            throw MathInconsistency(
                "barZ_gram_block: component block empty but tableaux exist");
        out.gram = Matrix<Scalar>(0, 0);
        return out;
    }
    out.gram = std::move(acc);

    /* place each block-respecting tableau at the Kronecker position of its
     * component split */
    std::vector<SemistandardTableau> all = enumerate_ssyt_p(lam, mu, C.psplit());
    if (static_cast<int>(all.size()) != out.gram.rows())
        throw MathInconsistency(
            "barZ_gram_block: tableau count differs from Kronecker size");
    out.tabs.resize(all.size()); /* every slot is overwritten below */
    std::vector<char> seen(all.size(), 0);
    for (const auto& T : all) {
        auto S = split_ssyt(T, C.psplit());
        long pos = 0;
        std::size_t fi = 0;
        for (int k = 0; k < C.g(); ++k) {
            if (static_cast<int>(L[k].size()) == 0) continue;
            const auto& list = *factors[fi++];
            auto jt = std::find(list.begin(), list.end(), S[k]);
            if (jt == list.end())
                throw MathInconsistency(
                    "barZ_gram_block: split component is not a component tableau");
            pos = pos * static_cast<long>(list.size()) +
                  static_cast<long>(jt - list.begin());
        }
        if (seen.at(pos))
            throw MathInconsistency("barZ_gram_block: splitting map collides");
        seen[pos] = 1;
        out.tabs[pos] = T;
    }
    for (char s : seen)
        if (!s) throw MathInconsistency("barZ_gram_block: splitting map misses a position");
    return out;
}

/* Valuation check for one shape λ: at every weight μ with the same block
 * box counts, the elementary-divisor valuations of the Kronecker block must
 * equal the Minkowski sum of the component valuations, and the count at
 * each level must match the convolution of the component level counts. */
struct TensorReport {
    std::string lambda;
    int checked = 0;
    std::vector<std::string> failures;
    bool pass() const { return failures.empty(); }
};

template <class MS>
TensorReport verify_jantzen_tensor(const ProductContext<MS>& C,
                                   const Multipartition& lam) {
    const auto& E = C.big();
    const PSplit& p = C.psplit();
    const AlphaVector al = alpha_p(lam, p);
    auto L = split(lam, p);
    TensorReport rep;
    rep.lambda = lam.text();
    for (std::size_t wi = 0; wi < E.weights().size(); ++wi) {
        const Multicomposition& mu = E.weights()[wi];
        if (alpha_p(mu, p) != al) continue;
        BarZBlock<MS> B = barZ_gram_block(C, lam, mu);
        ValuationProfile direct =
            elementary_divisor_valuations(E.ms(), B.gram);

        auto M = split(mu, p);
        ValuationProfile mink(std::vector<long>{0});
        std::map<long, long> conv{{0, 1}};
        long total = 1, fin_total = 1;
        for (int k = 0; k < C.g(); ++k) {
            const int nk = static_cast<int>(L[k].size());
            if (nk == 0) continue;
            const auto& Ek = C.component(k, nk);
            const auto& WG =
                Ek.weyl_gram(Ek.shape_index(Multipartition(L[k])));
            auto it = WG.blocks.find(Ek.weight_index(M[k]));
            ValuationProfile pk =
                (it == WG.blocks.end())
                    ? ValuationProfile()
                    : elementary_divisor_valuations(Ek.ms(), it->second);
            mink = minkowski_sum(mink, pk);
            total *= static_cast<long>(pk.size());
            fin_total *= static_cast<long>(pk.size()) - pk.count_inf();
            std::map<long, long> levels;
            for (long v : pk.v)
                if (v != VAL_INF) ++levels[v];
            std::map<long, long> next;
            for (const auto& [lev, c] : conv)
                for (const auto& [lv, cnt] : levels)
                    next[lev + lv] += c * cnt;
            conv = std::move(next);
        }
        ++rep.checked;
        if (direct != mink) {
            rep.failures.push_back("profile mismatch at weight " + mu.text() +
                                   ": " + direct.text() + " vs " +
                                   mink.text());
            continue;
        }
        bool conv_ok = true;
        long fin_seen = 0;
        for (const auto& [lev, c] : conv) {
            if (direct.count_eq(lev) != c) conv_ok = false;
            fin_seen += c;
        }
        if (static_cast<long>(direct.size()) - direct.count_inf() != fin_seen)
            conv_ok = false;
        if (direct.count_inf() != total - fin_total) conv_ok = false;
        if (!conv_ok)
            rep.failures.push_back("level convolution mismatch at weight " +
                                   mu.text());
    }
    return rep;
}

/* Full comparison of the product factorization against the direct
 * computation, over every pair of shapes with matching block box counts. */
struct PairRecord {
    std::string lambda, mu;
    VPoly direct, product;
    bool schur_pass = false;
    bool ak_checked = false; /* all simple-module hypotheses held */
    VPoly ak_direct, ak_product;
    bool ak_pass = true;
};

struct VerificationReport {
    std::string description;
    std::vector<PairRecord> pairs;
    int schur_checked = 0, schur_failed = 0;
    int ak_checked = 0, ak_failed = 0;
    int nonconstant = 0; /* pairs whose agreed polynomial has degree >= 1 */
    bool pass() const { return schur_failed == 0 && ak_failed == 0; }
};

namespace detail {
inline std::string coeff_array_text(const VPoly& f) {
    std::string s = "[";
    for (int i = 0; i <= f.degree(); ++i) {
        if (i) s += ",";
        s += std::to_string(f[i]);
    }
    return s + "]";
}
} // namespace detail

inline std::string report_json(const VerificationReport& R) {
    std::string s = "{\"description\":\"" + R.description + "\",";
    s += "\"summary\":{\"pairs\":" + std::to_string(R.pairs.size());
    s += ",\"schur_checked\":" + std::to_string(R.schur_checked);
    s += ",\"schur_failed\":" + std::to_string(R.schur_failed);
    s += ",\"ak_checked\":" + std::to_string(R.ak_checked);
    s += ",\"ak_failed\":" + std::to_string(R.ak_failed);
    s += ",\"nonconstant\":" + std::to_string(R.nonconstant);
    s += std::string(",\"pass\":") + (R.pass() ? "true" : "false") + "},";
    s += "\"pairs\":[";
    for (std::size_t i = 0; i < R.pairs.size(); ++i) {
        const PairRecord& pr = R.pairs[i];
        if (i) s += ",";
        s += "{\"lambda\":\"" + pr.lambda + "\",\"mu\":\"" + pr.mu + "\"";
        s += ",\"direct\":" + detail::coeff_array_text(pr.direct);
        s += ",\"product\":" + detail::coeff_array_text(pr.product);
        s += std::string(",\"pass\":") + (pr.schur_pass ? "true" : "false");
        if (pr.ak_checked) {
            s += ",\"ak\":{\"direct\":" + detail::coeff_array_text(pr.ak_direct);
            s += ",\"product\":" + detail::coeff_array_text(pr.ak_product);
            s += std::string(",\"pass\":") + (pr.ak_pass ? "true" : "false") + "}";
        } else {
            s += ",\"ak\":null";
        }
        s += "}";
    }
    return s + "]}";
}

template <class MS>
VerificationReport verify_product_formula(const ProductContext<MS>& C) {
    const auto& E = C.big();
    const PSplit& p = C.psplit();
    VerificationReport R;
    {
        std::string ps;
        for (std::size_t k = 0; k < p.size(); ++k)
            ps += (k ? "," : "") + std::to_string(p[k]);
        R.description = "n=" + std::to_string(E.n()) + " r=" +
                        std::to_string(E.r()) + " split=(" + ps + ") " +
                        E.ms().describe();
    }
    const int ns = static_cast<int>(E.shapes().size());
    std::vector<AlphaVector> alphas;
    alphas.reserve(ns);
    for (int si = 0; si < ns; ++si)
        alphas.push_back(alpha_p(E.shapes()[si], p));
    std::vector<long> dimD(ns);
    for (int si = 0; si < ns; ++si) dimD[si] = dim_D(E, si);

    std::map<int, std::vector<VPoly>> schur_rows, hecke_rows;
    for (int sl = 0; sl < ns; ++sl) {
        for (int sm = 0; sm < ns; ++sm) {
            if (!(alphas[sl] == alphas[sm])) continue;
            const Multipartition& lam = E.shapes()[sl];
            const Multipartition& mu = E.shapes()[sm];
            PairRecord rec;
            rec.lambda = lam.text();
            rec.mu = mu.text();

            auto rit = schur_rows.find(sl);
            if (rit == schur_rows.end())
                rit = schur_rows.emplace(sl, v_decomp_row(E, sl)).first;
            rec.direct = rit->second[sm];
            rec.product = product_v_decomp(C, lam, mu);
            rec.schur_pass = (rec.direct == rec.product);
            ++R.schur_checked;
            if (!rec.schur_pass) ++R.schur_failed;
            else if (rec.direct.degree() >= 1) ++R.nonconstant;

            /* Hecke side only when every simple in sight is nonzero */
            bool hyp = dimD[sm] > 0;
            if (hyp) {
                auto M = split(mu, p);
                for (int k = 0; k < C.g() && hyp; ++k) {
                    const int nk = static_cast<int>(M[k].size());
                    if (nk == 0) continue;
                    const auto& Ek = C.component(k, nk);
                    hyp = is_D_nonzero(
                        Ek, Ek.shape_index(Multipartition(M[k])));
                }
            }
            if (hyp) {
                rec.ak_checked = true;
                auto hit = hecke_rows.find(sl);
                if (hit == hecke_rows.end())
                    hit = hecke_rows.emplace(sl, v_decomp_hecke_row(E, sl))
                              .first;
                rec.ak_direct = hit->second[sm];
                rec.ak_product = product_v_decomp_hecke(C, lam, mu);
                rec.ak_pass = (rec.ak_direct == rec.ak_product);
                ++R.ak_checked;
                if (!rec.ak_pass) ++R.ak_failed;
            }
            R.pairs.push_back(std::move(rec));
        }
    }
    return R;
}

} // namespace cycloschur
