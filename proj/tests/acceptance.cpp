/*
 * End-to-end checks.  Each numbered criterion prints exactly one PASS/FAIL
 * line; the process exits 0 only if every criterion passes.
 *
 *  1. basis dimensions and invertible basis change
 *  2. bottom-weight Gram block equals the Specht Gram
 *  3. filtration matrix well-formedness
 *  4. Specht valuations match the bottom-weight profile
 *  5. product factorization of graded multiplicities
 *  6. Hecke-side factorization where the simple modules survive
 *  7. Kronecker elementary-divisor law
 *  8. pinned small-case values
 *  9. deterministic command-line output
 */

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cycloschur/cache.hpp"
#include "cycloschur/jantzen.hpp"
#include "cycloschur/modular_system.hpp"
#include "cycloschur/product.hpp"
#include "cycloschur/schur.hpp"
#include "cycloschur/tableau.hpp"

using namespace cycloschur;
namespace fs = std::filesystem;

namespace {

/* (n, r) instances shared by the structural criteria */
const std::vector<std::pair<int, int>>& grid() {
    static const std::vector<std::pair<int, int>> g = {
        {1, 1}, {2, 1}, {3, 1}, {1, 2}, {2, 2}, {3, 2}, {1, 3}, {2, 3}};
    return g;
}

/* Standard test system at the prime p: qhat = 1 and cyclotomic parameters
 * 0, p, p^2, ... so that consecutive parameter differences have positive
 * valuation (the interesting non-separated case). */
PLocalSystem make_system(long p, int r) {
    std::vector<Rational> Q;
    long pk = p;
    for (int k = 0; k < r; ++k) {
        Q.push_back(k == 0 ? Rational(0) : Rational(pk));
        if (k > 0) pk *= p;
    }
    return PLocalSystem(p, Rational(1), std::move(Q));
}

std::vector<int> square_bounds(int n, int r) {
    return std::vector<int>(static_cast<std::size_t>(r), std::max(n, 1));
}

long group_order(int n, int r) {
    long d = 1;
    for (int i = 0; i < n; ++i) d *= r;
    for (int i = 2; i <= n; ++i) d *= i;
    return d;
}

/* criterion 1 ---------------------------------------------------------- */
bool crit_dimensions(std::string& detail) {
    const auto start = std::chrono::steady_clock::now();
    for (auto [n, r] : grid()) {
        const PLocalSystem ms = make_system(2, r);
        const HeckeAlgebra<PLocalSystem> H(ms, n);
        const long want = group_order(n, r);
        if (H.dim() != want) {
            detail = "algebra dimension wrong at n=" + std::to_string(n) +
                     " r=" + std::to_string(r);
            return false;
        }
        long cells = 0;
        for (const auto& lam : H.cell_shapes()) {
            const long s = static_cast<long>(enumerate_std(lam).size());
            cells += s * s;
        }
        if (cells != want) {
            detail = "sum of squared tableau counts wrong at n=" +
                     std::to_string(n) + " r=" + std::to_string(r);
            return false;
        }
        const auto& M = H.murphy_transition();
        if (M.rows() != want || M.cols() != want) {
            detail = "cellular basis has the wrong cardinality at n=" +
                     std::to_string(n) + " r=" + std::to_string(r);
            return false;
        }
        if (!inverse(M).has_value()) {
            detail = "cellular basis change not invertible at n=" +
                     std::to_string(n) + " r=" + std::to_string(r);
            return false;
        }
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (secs >= 60.0) {
        detail = "took " + std::to_string(secs) + "s (>= 60s)";
        return false;
    }
    return true;
}

/* criterion 2 ---------------------------------------------------------- */
template <class MS>
bool omega_block_matches(const SchurEngine<MS>& E, int si) {
    const Multipartition omega = omega_shape(E.n(), E.ms().r(), E.bounds());
    const int owi = E.weight_index(omega);
    const auto& WG = E.weyl_gram(si);
    if (!WG.blocks.count(owi)) return false;
    const auto& block = WG.blocks.at(owi);
    const auto& tabs = WG.tabs.at(owi);
    const Multipartition& lam = E.shapes()[si];
    const auto& SG = E.hecke().specht_gram(lam);
    const auto stds = enumerate_std(lam);
    if (static_cast<int>(stds.size()) != block.rows() || SG.rows() != block.rows())
        return false;
    std::vector<int> pos(stds.size(), -1);
    for (std::size_t a = 0; a < stds.size(); ++a) {
        auto img = type_map(stds[a], omega);
        if (!img) return false;
        auto it = std::find(tabs.begin(), tabs.end(), *img);
        if (it == tabs.end()) return false;
        pos[a] = static_cast<int>(it - tabs.begin());
    }
    for (std::size_t a = 0; a < stds.size(); ++a)
        for (std::size_t b = 0; b < stds.size(); ++b)
            if (!(SG.at(static_cast<int>(a), static_cast<int>(b)) ==
                  block.at(pos[a], pos[b])))
                return false;
    return true;
}

bool crit_omega_blocks(std::string& detail) {
    for (long p : {2L, 3L})
        for (auto [n, r] : grid()) {
            const PLocalSystem ms = make_system(p, r);
            const SchurEngine<PLocalSystem> E(ms, n, square_bounds(n, r));
            for (int si = 0; si < static_cast<int>(E.shapes().size()); ++si)
                if (!omega_block_matches(E, si)) {
                    detail = "mismatch at p=" + std::to_string(p) +
                             " n=" + std::to_string(n) + " r=" + std::to_string(r) +
                             " shape " + E.shapes()[si].text();
                    return false;
                }
        }
    return true;
}

/* criterion 3 ---------------------------------------------------------- */
bool crit_filtration(std::string& detail) {
    for (long p : {2L, 3L})
        for (auto [n, r] : grid()) {
            const PLocalSystem ms = make_system(p, r);
            const SchurEngine<PLocalSystem> E(ms, n, square_bounds(n, r));
            const auto D = v_decomp_matrix(E);
            const int ns = static_cast<int>(E.shapes().size());
            for (int si = 0; si < ns; ++si) {
                const std::string at = " at p=" + std::to_string(p) + " n=" +
                                       std::to_string(n) + " r=" + std::to_string(r) +
                                       " shape " + E.shapes()[si].text();
                const JantzenProfile P = jantzen_profile(E, si);
                std::vector<long> sum(E.weights().size(), 0);
                for (long i = 0; i <= P.cut; ++i) {
                    const auto layer = layer_character(E, P, i);
                    for (std::size_t w = 0; w < sum.size(); ++w) sum[w] += layer[w];
                }
                if (sum != E.char_weyl(si)) {
                    detail = "layer characters do not sum to the module character" + at;
                    return false;
                }
                const auto d1 = E.decompose_character(E.char_weyl(si));
                for (int sj = 0; sj < ns; ++sj) {
                    const VPoly& f = D[si][sj];
                    const long c0 = f.degree() >= 0 ? f[0] : 0;
                    if (c0 != (si == sj ? 1 : 0)) {
                        detail = "constant term violates unitriangularity" + at;
                        return false;
                    }
                    if (si == sj && !(f == VPoly::one())) {
                        detail = "diagonal entry is not 1" + at;
                        return false;
                    }
                    if (f.degree() >= 0 && !dominates(E.shapes()[si], E.shapes()[sj])) {
                        detail = "nonzero entry outside the dominance cone" + at;
                        return false;
                    }
                    long ev = 0;
                    for (int i = 0; i <= f.degree(); ++i) ev += f[i];
                    if (ev != d1[sj]) {
                        detail = "specialization at v=1 disagrees with the "
                                 "character-solved multiplicity" + at;
                        return false;
                    }
                }
            }
        }
    return true;
}

/* criterion 4 ---------------------------------------------------------- */
bool crit_specht_valuations(std::string& detail) {
    for (long p : {2L, 3L})
        for (auto [n, r] : grid()) {
            const PLocalSystem ms = make_system(p, r);
            const SchurEngine<PLocalSystem> E(ms, n, square_bounds(n, r));
            const Multipartition omega = omega_shape(n, r, E.bounds());
            const int owi = E.weight_index(omega);
            for (int si = 0; si < static_cast<int>(E.shapes().size()); ++si) {
                const ValuationProfile S = specht_jantzen_valuations(E, si);
                const JantzenProfile P = jantzen_profile(E, si);
                const ValuationProfile W = P.blocks.count(owi)
                                               ? P.blocks.at(owi)
                                               : ValuationProfile{};
                if (!(S == W)) {
                    detail = "profiles differ at p=" + std::to_string(p) + " n=" +
                             std::to_string(n) + " r=" + std::to_string(r) +
                             " shape " + E.shapes()[si].text() + ": " + S.text() +
                             " vs " + W.text();
                    return false;
                }
            }
        }
    return true;
}

/* criteria 5-7 share one sweep over the product configurations ---------- */
struct ProductSweep {
    bool ran = false;
    std::string error;
    int pairs = 0, schur_failed = 0, ak_checked = 0, ak_failed = 0;
    int nonconstant = 0;
    int barz_checked = 0, barz_failed = 0;
    std::string barz_detail;
};

const ProductSweep& product_sweep() {
    static ProductSweep S;
    if (S.ran) return S;
    S.ran = true;
    try {
        for (long p : {2L, 3L})
            for (int n = 1; n <= 3; ++n) {
                const PLocalSystem ms = make_system(p, 2);
                const ProductContext<PLocalSystem> C(ms, n, square_bounds(n, 2),
                                                    PSplit{1, 1});
                const VerificationReport R = verify_product_formula(C);
                S.pairs += static_cast<int>(R.pairs.size());
                S.schur_failed += R.schur_failed;
                S.ak_checked += R.ak_checked;
                S.ak_failed += R.ak_failed;
                S.nonconstant += R.nonconstant;

                /* the elementary-divisor law on every assembled tensor block */
                const auto& E = C.big();
                Matrix<Rational> unit(1, 1);
                unit.at(0, 0) = Rational(1);
                for (const auto& lam : E.shapes())
                    for (const auto& mu : E.weights()) {
                        if (!(alpha_p(lam, C.psplit()) == alpha_p(mu, C.psplit())))
                            continue;
                        const auto B = barZ_gram_block(C, lam, mu);
                        if (B.gram.rows() == 0) continue;
                        const auto L = split(lam, C.psplit());
                        const auto M = split(mu, C.psplit());
                        ValuationProfile want =
                            elementary_divisor_valuations(ms, unit);
                        for (int k = 0; k < C.g(); ++k) {
                            const int nk = static_cast<int>(L[k].size());
                            if (nk == 0) continue;
                            const auto& Ek = C.component(k, nk);
                            const auto& WG = Ek.weyl_gram(
                                Ek.shape_index(Multipartition(L[k])));
                            const auto& block = WG.blocks.at(Ek.weight_index(M[k]));
                            want = minkowski_sum(
                                want,
                                elementary_divisor_valuations(C.system(k), block));
                        }
                        const ValuationProfile got =
                            elementary_divisor_valuations(ms, B.gram);
                        ++S.barz_checked;
                        if (!(got == want)) {
                            ++S.barz_failed;
                            if (S.barz_detail.empty())
                                S.barz_detail = "tensor block at p=" +
                                                std::to_string(p) + " n=" +
                                                std::to_string(n) + " shape " +
                                                lam.text() + " weight " + mu.text();
                        }
                    }
            }
    } catch (const std::exception& e) {
        S.error = e.what();
    }
    return S;
}

bool crit_product(std::string& detail) {
    const ProductSweep& S = product_sweep();
    if (!S.error.empty()) {
        detail = S.error;
        return false;
    }
    if (S.schur_failed != 0) {
        detail = std::to_string(S.schur_failed) + " of " + std::to_string(S.pairs) +
                 " pairs disagree";
        return false;
    }
    if (S.nonconstant == 0) {
        detail = "no configuration produced a nonconstant polynomial";
        return false;
    }
    return true;
}

bool crit_product_hecke(std::string& detail) {
    const ProductSweep& S = product_sweep();
    if (!S.error.empty()) {
        detail = S.error;
        return false;
    }
    if (S.ak_checked == 0) {
        detail = "no pair satisfied the nonvanishing hypotheses";
        return false;
    }
    if (S.ak_failed != 0) {
        detail = std::to_string(S.ak_failed) + " of " + std::to_string(S.ak_checked) +
                 " comparisons disagree";
        return false;
    }
    return true;
}

/* criterion 7 ---------------------------------------------------------- */
bool crit_kronecker(std::string& detail) {
    std::mt19937 rng(20260823u);
    std::uniform_int_distribution<int> dim_d(1, 4);
    std::uniform_int_distribution<long> ent_d(-20, 20);
    for (long p : {2L, 3L}) {
        const PLocalSystem ms(p, 1, std::vector<long>{0});
        for (int trial = 0; trial < 50; ++trial) {
            const int da = dim_d(rng), db = dim_d(rng);
            Matrix<Rational> A(da, da), B(db, db);
            for (int i = 0; i < da; ++i)
                for (int j = 0; j < da; ++j) A.at(i, j) = Rational(ent_d(rng));
            for (int i = 0; i < db; ++i)
                for (int j = 0; j < db; ++j) B.at(i, j) = Rational(ent_d(rng));
            const auto got = elementary_divisor_valuations(ms, kronecker(A, B));
            const auto want = minkowski_sum(elementary_divisor_valuations(ms, A),
                                            elementary_divisor_valuations(ms, B));
            if (!(got == want)) {
                detail = "random trial " + std::to_string(trial) + " at p=" +
                         std::to_string(p) + ": " + got.text() + " vs " + want.text();
                return false;
            }
        }
    }
    const ProductSweep& S = product_sweep();
    if (!S.error.empty()) {
        detail = S.error;
        return false;
    }
    if (S.barz_checked == 0) {
        detail = "no tensor blocks were assembled";
        return false;
    }
    if (S.barz_failed != 0) {
        detail = std::to_string(S.barz_failed) + " of " +
                 std::to_string(S.barz_checked) + " tensor blocks disagree (" +
                 S.barz_detail + ")";
        return false;
    }
    return true;
}

/* criterion 8 ---------------------------------------------------------- */
bool crit_pinned_values(std::string& detail) {
    {
        const PLocalSystem ms(2, 1, std::vector<long>{0, 2});
        const SchurEngine<PLocalSystem> E(ms, 1, {1, 1});
        int si0 = -1, si1 = -1;
        for (int si = 0; si < 2; ++si) {
            if (E.shapes()[si].text() == "1|") si0 = si;
            if (E.shapes()[si].text() == "|1") si1 = si;
        }
        if (si0 < 0 || si1 < 0) {
            detail = "one-box shapes not found";
            return false;
        }
        const auto& SG = E.hecke().specht_gram(E.shapes()[si0]);
        if (SG.rows() != 1 || !(SG.at(0, 0) == ms.Qhat[0] - ms.Qhat[1])) {
            detail = "one-box Specht Gram is not Q_1 - Q_2";
            return false;
        }
        if (ms.valuation(SG.at(0, 0)) != 1) {
            detail = "one-box Gram valuation is not 1";
            return false;
        }
        if (!(v_decomp(E, si0, si1) == VPoly(std::vector<long>{0, 1}))) {
            detail = "one-box graded multiplicity is not v";
            return false;
        }
    }
    {
        const PLocalSystem ms(2, 1, std::vector<long>{0});
        const SchurEngine<PLocalSystem> E(ms, 2, {2});
        int srow = -1, scol = -1;
        for (int si = 0; si < static_cast<int>(E.shapes().size()); ++si) {
            if (E.shapes()[si].text() == "2") srow = si;
            if (E.shapes()[si].text() == "1,1") scol = si;
        }
        if (srow < 0 || scol < 0) {
            detail = "two-box shapes not found";
            return false;
        }
        if (!(v_decomp(E, srow, scol) == VPoly(std::vector<long>{0, 1}))) {
            detail = "two-box graded multiplicity at p=2 is not v";
            return false;
        }
    }
    return true;
}

/* criterion 9 ---------------------------------------------------------- */
std::optional<std::string> run_cli(const std::string& args) {
    const std::string cmd =
        std::string("'") + CYCLOSCHUR_CLI_PATH + "' " + args + " 2>/dev/null";
    FILE* f = popen(cmd.c_str(), "r");
    if (!f) return std::nullopt;
    std::string out;
    char buf[4096];
    std::size_t k;
    while ((k = fread(buf, 1, sizeof buf, f)) > 0) out.append(buf, k);
    if (pclose(f) != 0) return std::nullopt;
    return out;
}

bool crit_determinism(std::string& detail) {
    const std::string base = "vdecomp --n 1 --r 2 --p 2 --Qhat 0,2";
    const fs::path dir = fs::temp_directory_path() / "cycloschur-acceptance-cache";
    fs::remove_all(dir);
    const std::string cached = base + " --cache-dir '" + dir.string() + "'";
    const auto a = run_cli(base);
    const auto b = run_cli(base);
    const auto c = run_cli(cached); /* cold cache */
    const auto d = run_cli(cached); /* warm cache */
    fs::remove_all(dir);
    if (!a || !b || !c || !d) {
        detail = "a run failed";
        return false;
    }
    if (*a != *b || *a != *c || *a != *d) {
        detail = "outputs differ between runs";
        return false;
    }
    if (*a != "[[[1],[0,1]],[[],[1]]]\n") {
        detail = "output is not the expected matrix";
        return false;
    }
    return true;
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char* title;
        bool (*run)(std::string&);
    };
    const std::vector<Criterion> criteria = {
        {1, "basis dimensions and invertible basis change", crit_dimensions},
        {2, "bottom-weight Gram block equals the Specht Gram", crit_omega_blocks},
        {3, "filtration matrix well-formedness", crit_filtration},
        {4, "Specht valuations match the bottom-weight profile",
         crit_specht_valuations},
        {5, "product factorization of graded multiplicities", crit_product},
        {6, "Hecke-side factorization where simples survive", crit_product_hecke},
        {7, "Kronecker elementary-divisor law", crit_kronecker},
        {8, "pinned small-case values", crit_pinned_values},
        {9, "deterministic command-line output", crit_determinism},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = e.what();
        }
        if (ok) {
            std::cout << "criterion " << c.id << " (" << c.title << "): PASS\n";
        } else {
            std::cout << "criterion " << c.id << " (" << c.title << "): FAIL ("
                      << detail << ")\n";
            ++failures;
        }
    }
    return failures == 0 ? 0 : 1;
}
