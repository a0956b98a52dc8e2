#include <catch2/catch_amalgamated.hpp>

#include "cycloschur/modular_system.hpp"
#include "cycloschur/schur.hpp"
#include "cycloschur/vpolynomial.hpp"

using namespace cycloschur;

TEST_CASE("v-polynomial arithmetic and text") {
    VPoly z;
    REQUIRE(z.is_zero());
    REQUIRE(z.text() == "0");
    REQUIRE(z.degree() == -1);
    VPoly one = VPoly::one();
    REQUIRE(one.text() == "1");
    VPoly v = VPoly::monomial(1, 1);
    REQUIRE(v.text() == "v");
    REQUIRE((v * v).text() == "v^2");
    REQUIRE((one + v * v).text() == "1+v^2");
    REQUIRE(VPoly::monomial(2, 1).text() == "2v");
    REQUIRE((VPoly::constant(3) + VPoly::monomial(2, 1) + VPoly::monomial(1, 3)).text() ==
            "3+2v+v^3");
    REQUIRE((v + z) == v);
    REQUIRE((v * z).is_zero());
    REQUIRE((v * one) == v);
    VPoly a = VPoly(std::vector<long>{1, 2});
    VPoly b = VPoly(std::vector<long>{3, 0, 1});
    REQUIRE((a * b) == VPoly(std::vector<long>{3, 6, 1, 2}));
    REQUIRE((a + b) == VPoly(std::vector<long>{4, 2, 1}));
    REQUIRE(a.eval_at_one() == 3);
    REQUIRE(VPoly(std::vector<long>{0, 0}).is_zero());
    REQUIRE(a.nonnegative());
    REQUIRE(!VPoly(std::vector<long>{1, -1}).nonnegative());
}

TEST_CASE("Weyl Gram blocks of the one-box bialgebra") {
    PLocalSystem ms(2, 1, std::vector<long>{0, 2});
    SchurEngine<PLocalSystem> E(ms, 1, {1, 1});
    REQUIRE(E.weights().size() == 2);
    REQUIRE(E.shapes().size() == 2);

    /* λ = ((1),()) has weight spaces at both weights */
    const auto& G0 = E.weyl_gram(0);
    REQUIRE(G0.blocks.size() == 2);
    REQUIRE(G0.blocks.at(0) == Matrix<Rational>(1, 1, {Rational(1)}));
    /* block at μ=((),(1)) is (Q̂_1 − Q̂_2) = (−2) */
    REQUIRE(G0.blocks.at(1) == Matrix<Rational>(1, 1, {Rational(-2)}));

    /* λ = ((),(1)) sees only its own weight */
    const auto& G1 = E.weyl_gram(1);
    REQUIRE(G1.blocks.size() == 1);
    REQUIRE(G1.blocks.at(1) == Matrix<Rational>(1, 1, {Rational(1)}));

    /* characters */
    REQUIRE(E.char_weyl(0) == SchurEngine<PLocalSystem>::Character{1, 1});
    REQUIRE(E.char_weyl(1) == SchurEngine<PLocalSystem>::Character{0, 1});
    /* rank of (−2) over F_2 is 0 */
    REQUIRE(E.char_simple(0) == SchurEngine<PLocalSystem>::Character{1, 0});
    REQUIRE(E.char_simple(1) == SchurEngine<PLocalSystem>::Character{0, 1});

    /* decompose char_weyl(((1),())) = [L^((1),())] + [L^((),(1))] */
    auto d = E.decompose_character(E.char_weyl(0));
    REQUIRE(d == std::vector<long>{1, 1});
    REQUIRE(E.decompose_character(E.char_weyl(1)) == std::vector<long>{0, 1});
    /* dim bookkeeping: 2² + 1² = 5 */
    REQUIRE(E.weyl_dim(0) * E.weyl_dim(0) + E.weyl_dim(1) * E.weyl_dim(1) == 5);
}

TEST_CASE("unit parameter difference keeps both simples full") {
    PLocalSystem ms(2, 1, std::vector<long>{0, 1});
    SchurEngine<PLocalSystem> E(ms, 1, {1, 1});
    REQUIRE(E.char_simple(0) == SchurEngine<PLocalSystem>::Character{1, 1});
    REQUIRE(E.decompose_character(E.char_weyl(0)) == std::vector<long>{1, 0});
}

TEST_CASE("Weyl Gram block (1+q) for the two-row shape") {
    PLocalSystem ms(5, 2, std::vector<long>{1});
    SchurEngine<PLocalSystem> E(ms, 2, {2});
    /* weights in canonical order: (2), (1,1), (0,2)-style compositions */
    int si = E.shape_index(Multipartition({{2}}, {2}));
    const auto& G = E.weyl_gram(si);
    int wi = E.weight_index(Multicomposition({{1, 1}}, {2}));
    REQUIRE(G.blocks.at(wi) == Matrix<Rational>(1, 1, {Rational(3)})); /* 1+q̂ at q̂=2 */
    REQUIRE(G.blocks.at(E.shape_weight(si)) == Matrix<Rational>(1, 1, {Rational(1)}));
    /* char of W^(2) over weights (2),(1,1),(0,2): one tableau each */
    const auto& cw = E.char_weyl(si);
    long total = 0;
    for (long x : cw) total += x;
    REQUIRE(total == 3);
}

template <class MS>
static void gram_agreement_and_bookkeeping(const MS& ms, int n, int r) {
    SchurEngine<MS> E(ms, n, std::vector<int>(r, std::max(n, 1)));
    const auto& H = E.hecke();
    const Multipartition omega = omega_shape(n, r, E.bounds());
    for (int si = 0; si < static_cast<int>(E.shapes().size()); ++si) {
        const Multipartition& lam = E.shapes()[si];
        const auto& WG = E.weyl_gram(si);
        /* ω-weight block equals the Specht Gram matrix under the bijection
         * t ↦ type_map(t, ω) */
        int wo = E.weight_index(omega);
        const auto& block = WG.blocks.at(wo);
        const auto& ssyts = WG.tabs.at(wo);
        auto stds = enumerate_std(lam);
        const auto& SG = H.specht_gram(lam);
        REQUIRE(block.rows() == static_cast<int>(stds.size()));
        std::vector<int> pos(stds.size());
        for (std::size_t t = 0; t < stds.size(); ++t) {
            auto T = type_map(stds[t], omega);
            REQUIRE(T.has_value());
            int at = -1;
            for (int j = 0; j < static_cast<int>(ssyts.size()); ++j)
                if (ssyts[j] == *T) at = j;
            REQUIRE(at >= 0);
            pos[t] = at;
        }
        for (std::size_t s = 0; s < stds.size(); ++s)
            for (std::size_t t = 0; t < stds.size(); ++t)
                REQUIRE(SG.at(static_cast<int>(s), static_cast<int>(t)) ==
                        block.at(pos[s], pos[t]));
        /* layer-0 sanity: decompose(char_weyl) is unitriangular with 1 at λ */
        auto d = E.decompose_character(E.char_weyl(si));
        REQUIRE(d[si] == 1);
        for (int sj = 0; sj < static_cast<int>(d.size()); ++sj) {
            if (d[sj] == 0) continue;
            REQUIRE(dominates(E.shapes()[si], E.shapes()[sj]));
        }
    }
}

TEST_CASE("Schur-functor Gram agreement on the small grid") {
    PLocalSystem ms2(2, 1, std::vector<long>{0, 2});
    PLocalSystem ms_gen(5, 2, std::vector<long>{1, 3});
    for (int n = 1; n <= 2; ++n) {
        gram_agreement_and_bookkeeping(ms2, n, 2);
        gram_agreement_and_bookkeeping(ms_gen, n, 2);
    }
    PLocalSystem ms1(5, 2, std::vector<long>{1});
    gram_agreement_and_bookkeeping(ms1, 3, 1);
}

TEST_CASE("Schur engine over the x-adic cyclotomic system") {
    XAdicSystem ms(2, {XAdicSystem::QhatSpec{{Rational(1)}, 0},
                       XAdicSystem::QhatSpec{{Rational(1)}, 1}});
    SchurEngine<XAdicSystem> E(ms, 1, {1, 1});
    const auto& G = E.weyl_gram(0);
    /* ⟨m,m⟩ = Q̂_1 − Q̂_2 = 1 − (1+x) = −x, valuation 1 */
    REQUIRE(ms.valuation(G.blocks.at(1).at(0, 0)) == 1);
    REQUIRE(E.char_simple(0) == SchurEngine<XAdicSystem>::Character{1, 0});
}

TEST_CASE("n=0 engine degenerates to the scalar algebra") {
    PLocalSystem ms(2, 1, std::vector<long>{0, 2});
    SchurEngine<PLocalSystem> E(ms, 0, {1, 1});
    REQUIRE(E.weights().size() == 1);
    REQUIRE(E.shapes().size() == 1);
    REQUIRE(E.weyl_gram(0).blocks.at(0) == Matrix<Rational>(1, 1, {Rational(1)}));
    REQUIRE(E.char_simple(0) == SchurEngine<PLocalSystem>::Character{1});
    REQUIRE(E.decompose_character(E.char_weyl(0)) == std::vector<long>{1});
}
