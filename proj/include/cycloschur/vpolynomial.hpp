#pragma once

/* Polynomials in the grading variable v with integer coefficients, stored
 * as ascending coefficient vectors with trailing zeros stripped (so the
 * zero polynomial is the empty vector).  These carry graded decomposition
 * multiplicities, hence coefficients are expected to be non-negative;
 * arithmetic itself works over Z. */

#include <string>
#include <vector>

namespace cycloschur {

struct VPoly {
    std::vector<long> c;

    VPoly() = default;
    explicit VPoly(std::vector<long> coeffs) : c(std::move(coeffs)) { normalize(); }
    static VPoly constant(long a) { return VPoly(std::vector<long>{a}); }
    static VPoly one() { return constant(1); }
    /* a·v^k */
    static VPoly monomial(long a, int k) {
        std::vector<long> v(k + 1, 0);
        v[k] = a;
        return VPoly(std::move(v));
    }

    void normalize() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; } /* -1 for 0 */
    long operator[](int i) const {
        return (i >= 0 && i < static_cast<int>(c.size())) ? c[i] : 0;
    }
    long eval_at_one() const {
        long s = 0;
        for (long x : c) s += x;
        return s;
    }
    bool nonnegative() const {
        for (long x : c)
            if (x < 0) return false;
        return true;
    }

    bool operator==(const VPoly& o) const { return c == o.c; }
    bool operator!=(const VPoly& o) const { return c != o.c; }

    friend VPoly operator+(const VPoly& a, const VPoly& b) {
        std::vector<long> r(std::max(a.c.size(), b.c.size()), 0);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[static_cast<int>(i)] + b[static_cast<int>(i)];
        return VPoly(std::move(r));
    }
    friend VPoly operator*(const VPoly& a, const VPoly& b) {
        if (a.is_zero() || b.is_zero()) return VPoly();
        std::vector<long> r(a.c.size() + b.c.size() - 1, 0);
        for (std::size_t i = 0; i < a.c.size(); ++i)
            for (std::size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
        return VPoly(std::move(r));
    }

    /* "0", "1", "v", "2v", "v^2", "1+v^2", ... */
    std::string text() const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (c[i] == 0) continue;
            if (!out.empty()) out += "+";
            if (i == 0) {
                out += std::to_string(c[i]);
                continue;
            }
            if (c[i] != 1) out += std::to_string(c[i]);
            out += "v";
            if (i > 1) out += "^" + std::to_string(i);
        }
        return out;
    }
};

} // namespace cycloschur
