#pragma once

/* Dense univariate polynomials over a field.  Coefficients ascending;
 * the zero polynomial has an empty coefficient vector (degree -1).
 * F must support +, -, *, /, ==, default-construct to 0, construct from long. */

#include <vector>

#include "cycloschur/rational.hpp"

namespace cycloschur {

template <class F>
class Poly {
public:
    Poly() = default;
    Poly(const F& constant) {
        c_.push_back(constant);
        trim();
    }
    explicit Poly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Poly monomial(int k, const F& coef) {
        std::vector<F> c(k + 1);
        c[k] = coef;
        return Poly(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<F>& coeffs() const { return c_; }

    F operator[](int k) const {
        if (k < 0 || k > degree()) return F();
        return c_[k];
    }

    /* order of vanishing at 0; VAL_INF for the zero polynomial */
    long ord() const {
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!(c_[i] == F())) return static_cast<long>(i);
        return VAL_INF;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<F> c(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[static_cast<int>(i)] + b[static_cast<int>(i)];
        return Poly(std::move(c));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<F> c(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[static_cast<int>(i)] - b[static_cast<int>(i)];
        return Poly(std::move(c));
    }
    Poly operator-() const {
        std::vector<F> c(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) c[i] = F() - c_[i];
        return Poly(std::move(c));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<F> c(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
        return Poly(std::move(c));
    }
    friend Poly operator*(const Poly& a, const F& s) {
        std::vector<F> c(a.c_.size());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.c_[i] * s;
        return Poly(std::move(c));
    }
    friend Poly operator*(const F& s, const Poly& a) { return a * s; }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /* division with remainder; requires b != 0 (field coefficients) */
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw std::domain_error("Poly: division by zero");
        Poly q, r = a;
        const F lead = b.c_.back();
        while (!r.is_zero() && r.degree() >= b.degree()) {
            int shift = r.degree() - b.degree();
            F coef = r.c_.back() / lead;
            q += Poly::monomial(shift, coef);
            r -= Poly::monomial(shift, coef) * b;
        }
        return {q, r};
    }
    friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
    friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

    F eval(const F& x) const {
        F acc;
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    Poly monic() const {
        if (is_zero()) return *this;
        F inv = F(1) / c_.back();
        return *this * inv;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == F()) c_.pop_back();
    }
    std::vector<F> c_;
};

/* monic gcd via the Euclidean algorithm */
template <class F>
Poly<F> gcd_monic(Poly<F> a, Poly<F> b) {
    while (!b.is_zero()) {
        Poly<F> r = a % b;
        a = b;
        b = r.monic();  /* unit scaling keeps coefficient growth bounded */
    }
    return a.monic();
}

/* g = s·a + t·b with g = gcd (monic, or zero when both inputs are zero) */
template <class F>
struct ExtendedGcd {
    Poly<F> g, s, t;
};
template <class F>
ExtendedGcd<F> extended_gcd(const Poly<F>& a, const Poly<F>& b) {
    Poly<F> r0 = a, r1 = b;
    Poly<F> s0{F(1)}, s1, t0, t1{F(1)};
    while (!r1.is_zero()) {
        auto [q, r] = Poly<F>::divmod(r0, r1);
        r0 = r1;
        r1 = r;
        Poly<F> s2 = s0 - q * s1, t2 = t0 - q * t1;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    if (r0.is_zero()) return {r0, s0, t0};
    F inv = F(1) / r0.coeffs().back();
    return {r0 * inv, s0 * inv, t0 * inv};
}

} // namespace cycloschur
