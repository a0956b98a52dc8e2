#pragma once

/* Elementary-divisor valuations over a discrete valuation ring.
 *
 * For a matrix G with entries in R there are invertible P, Q over R with
 * P G Q diagonal; the multiset of valuations of the diagonal (∞ for zero
 * divisors) is the ValuationProfile.  Over a DVR a single elimination pass
 * per pivot suffices: the pivot of minimal valuation divides every entry
 * of the remaining block, and subtracting multiples cannot drop below the
 * pivot's valuation. */

#include <algorithm>

#include "cycloschur/matrix.hpp"
#include "cycloschur/rational.hpp"

namespace cycloschur {

struct ValuationProfile {
    std::vector<long> v;  /* ascending; VAL_INF entries last */

    ValuationProfile() = default;
    explicit ValuationProfile(std::vector<long> vals) : v(std::move(vals)) {
        std::sort(v.begin(), v.end());
    }

    std::size_t size() const { return v.size(); }
    long count_inf() const {
        return std::count(v.begin(), v.end(), VAL_INF);
    }
    long count_eq(long i) const { return std::count(v.begin(), v.end(), i); }
    long count_ge(long i) const {
        return std::count_if(v.begin(), v.end(), [i](long x) { return x >= i; });
    }
    /* largest finite valuation; -1 when none */
    long max_finite() const {
        long m = -1;
        for (long x : v)
            if (x != VAL_INF) m = std::max(m, x);
        return m;
    }

    bool operator==(const ValuationProfile& o) const { return v == o.v; }
    bool operator!=(const ValuationProfile& o) const { return !(*this == o); }

    std::string text() const {
        std::string s = "{";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += ",";
            s += (v[i] == VAL_INF) ? "inf" : std::to_string(v[i]);
        }
        return s + "}";
    }
};

/* {a+b : a ∈ A, b ∈ B} as a multiset, with ∞ + x = ∞ */
inline ValuationProfile minkowski_sum(const ValuationProfile& A, const ValuationProfile& B) {
    std::vector<long> out;
    for (long a : A.v)
        for (long b : B.v)
            out.push_back((a == VAL_INF || b == VAL_INF) ? VAL_INF : a + b);
    return ValuationProfile(std::move(out));
}

template <class MS>
ValuationProfile elementary_divisor_valuations(const MS& ms, Matrix<typename MS::Scalar> G) {
    using S = typename MS::Scalar;
    for (int i = 0; i < G.rows(); ++i)
        for (int j = 0; j < G.cols(); ++j)
            if (ms.valuation(G.at(i, j)) < 0)
                throw std::domain_error("elementary_divisor_valuations: entry outside R");

    const int steps = std::min(G.rows(), G.cols());
    std::vector<long> divisors;
    for (int t = 0; t < steps; ++t) {
        /* pivot: minimal valuation in the remaining block, first position
         * in row-major order among ties */
        long best = VAL_INF;
        int pi = -1, pj = -1;
        for (int i = t; i < G.rows(); ++i)
            for (int j = t; j < G.cols(); ++j) {
                long val = ms.valuation(G.at(i, j));
                if (val < best) {
                    best = val;
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) {  /* remaining block is zero */
            for (int k = t; k < steps; ++k) divisors.push_back(VAL_INF);
            break;
        }
        if (pi != t)
            for (int j = 0; j < G.cols(); ++j) std::swap(G.at(pi, j), G.at(t, j));
        if (pj != t)
            for (int i = 0; i < G.rows(); ++i) std::swap(G.at(i, pj), G.at(i, t));
        const S pivot = G.at(t, t);
        for (int i = t + 1; i < G.rows(); ++i) {
            if (is_zero_elem(G.at(i, t))) continue;
            S f = G.at(i, t) / pivot;  /* in R: ν(entry) >= ν(pivot) */
            for (int j = t; j < G.cols(); ++j) G.at(i, j) = G.at(i, j) - f * G.at(t, j);
        }
        for (int j = t + 1; j < G.cols(); ++j) {
            if (is_zero_elem(G.at(t, j))) continue;
            S f = G.at(t, j) / pivot;
            for (int i = t; i < G.rows(); ++i) G.at(i, j) = G.at(i, j) - f * G.at(i, t);
        }
        divisors.push_back(best);
    }
    return ValuationProfile(std::move(divisors));
}

/* rank of the entrywise reduction of G over the residue field F */
template <class MS>
int rank_over_F(const MS& ms, const Matrix<typename MS::Scalar>& G) {
    using R = typename MS::Residue;
    Matrix<R> m(G.rows(), G.cols());
    for (int i = 0; i < G.rows(); ++i)
        for (int j = 0; j < G.cols(); ++j) m.at(i, j) = ms.reduce(G.at(i, j));
    return rank(std::move(m));
}

} // namespace cycloschur
