#pragma once

/* Exact rational scalars (GMP), p-adic valuation, and the prime field F_p.
 *
 * Fp elements normally carry their modulus.  A modulus of 0 marks a plain
 * integer constant (e.g. literals produced by generic code); such constants
 * lift to the other operand's modulus on any binary operation.
 */

#include <gmpxx.h>

#include <limits>
#include <stdexcept>
#include <string>

namespace cycloschur {

using Rational = mpq_class;

inline constexpr long VAL_INF = std::numeric_limits<long>::max();

/* order of p in x (negative when p divides the denominator); VAL_INF for 0 */
inline long p_valuation(const Rational& x, long p) {
    if (p < 2) throw std::invalid_argument("p_valuation: modulus must be >= 2");
    if (x == 0) return VAL_INF;
    Rational y(x);
    y.canonicalize();
    mpz_class tmp, f(p);
    long vn = static_cast<long>(mpz_remove(tmp.get_mpz_t(), y.get_num().get_mpz_t(), f.get_mpz_t()));
    long vd = static_cast<long>(mpz_remove(tmp.get_mpz_t(), y.get_den().get_mpz_t(), f.get_mpz_t()));
    return vn - vd;
}

class Fp {
public:
    Fp() : v_(0), p_(0) {}
    Fp(long v) : v_(v), p_(0) {}
    Fp(long v, long p) : v_(normalize(v, p)), p_(p) {
        if (p < 2) throw std::invalid_argument("Fp: modulus must be >= 2");
    }

    long value() const { return v_; }
    long modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    friend Fp operator+(const Fp& a, const Fp& b) {
        auto [x, y, p] = lift(a, b);
        return p ? Fp(x + y, p) : Fp(x + y);
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        auto [x, y, p] = lift(a, b);
        return p ? Fp(x - y, p) : Fp(x - y);
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        auto [x, y, p] = lift(a, b);
        return p ? Fp(x * y, p) : Fp(x * y);
    }
    Fp operator-() const { return p_ ? Fp(-v_, p_) : Fp(-v_); }

    Fp inverse() const {
        if (is_zero()) throw std::domain_error("Fp: inverse of zero");
        if (p_ == 0) {
            if (v_ == 1 || v_ == -1) return *this;
            throw std::domain_error("Fp: integer constant has no inverse");
        }
        /* extended Euclid */
        long a = v_, m = p_, x0 = 1, x1 = 0;
        while (m) {
            long q = a / m;
            long t = a - q * m;
            a = m;
            m = t;
            t = x0 - q * x1;
            x0 = x1;
            x1 = t;
        }
        if (a != 1 && a != -1) throw std::domain_error("Fp: modulus not coprime to value");
        return Fp(a == 1 ? x0 : -x0, p_);
    }
    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }

    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }

    friend bool operator==(const Fp& a, const Fp& b) {
        auto [x, y, p] = lift(a, b);
        return p ? (normalize(x, p) == normalize(y, p)) : (x == y);
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

    std::string text() const { return std::to_string(v_); }

private:
    static long normalize(long v, long p) {
        long r = v % p;
        return r < 0 ? r + p : r;
    }
    static std::tuple<long, long, long> lift(const Fp& a, const Fp& b) {
        if (a.p_ && b.p_ && a.p_ != b.p_)
            throw std::invalid_argument("Fp: mixed moduli");
        long p = a.p_ ? a.p_ : b.p_;
        return {a.v_, b.v_, p};
    }

    long v_;
    long p_;
};

/* reduction R -> F_p of a rational with non-negative p-valuation */
inline Fp reduce_p_local(const Rational& x, long p) {
    if (p_valuation(x, p) < 0)
        throw std::domain_error("reduce_p_local: element is not p-integral");
    Rational y(x);
    y.canonicalize();
    mpz_class pz(p), nr, dr;
    mpz_mod(nr.get_mpz_t(), y.get_num().get_mpz_t(), pz.get_mpz_t());
    mpz_mod(dr.get_mpz_t(), y.get_den().get_mpz_t(), pz.get_mpz_t());
    return Fp(nr.get_si(), p) / Fp(dr.get_si(), p);
}

inline std::string rational_text(const Rational& x) {
    Rational y(x);
    y.canonicalize();
    return y.get_str();
}

} // namespace cycloschur
