#pragma once

/* The cyclotomic number field Q(ζ_e), realised as Q[x]/(Φ_e) with exact
 * rational coefficients.
 *
 * A Cyc element optionally carries a shared field descriptor.  Elements with
 * no descriptor are plain rational constants; they lift into the other
 * operand's field on any binary operation.  This lets generic code create
 * literals (0, 1, -1) without knowing e.
 */

#include <map>
#include <memory>
#include <numeric>

#include "cycloschur/polynomial.hpp"

namespace cycloschur {

struct CycField;
using CycFieldPtr = std::shared_ptr<const CycField>;

struct CycField {
    int e;
    Poly<Rational> phi;  /* the e-th cyclotomic polynomial, monic */

    int degree() const { return phi.degree(); }

    /* memoised construction; fields are canonical per e */
    static CycFieldPtr make(int e) {
        static std::map<int, CycFieldPtr> cache;
        if (e < 1) throw std::invalid_argument("CycField: e must be >= 1");
        auto it = cache.find(e);
        if (it != cache.end()) return it->second;
        auto f = std::make_shared<CycField>();
        f->e = e;
        f->phi = cyclotomic_polynomial(e);
        cache[e] = f;
        return f;
    }

    /* Φ_e via x^e - 1 = Π_{d|e} Φ_d, by exact division */
    static Poly<Rational> cyclotomic_polynomial(int e) {
        std::vector<Rational> xe(e + 1);
        xe[0] = Rational(-1);
        xe[e] = Rational(1);
        Poly<Rational> p{std::vector<Rational>(xe)};
        for (int d = 1; d < e; ++d)
            if (e % d == 0) {
                auto [q, r] = Poly<Rational>::divmod(p, cyclotomic_polynomial(d));
                if (!r.is_zero()) throw std::logic_error("cyclotomic division not exact");
                p = q;
            }
        return p;
    }
};

class Cyc {
public:
    Cyc() = default;
    Cyc(long v) { set_constant(Rational(v)); }
    Cyc(const Rational& v) { set_constant(v); }
    Cyc(CycFieldPtr fld, Poly<Rational> residue) : fld_(std::move(fld)), c_(std::move(residue)) {
        if (!fld_) throw std::invalid_argument("Cyc: null field");
        reduce();
    }

    static Cyc zeta(const CycFieldPtr& fld) {
        return Cyc(fld, Poly<Rational>::monomial(1, Rational(1)));
    }

    const CycFieldPtr& field() const { return fld_; }
    const Poly<Rational>& residue() const { return c_; }

    bool is_zero() const { return c_.is_zero(); }
    bool is_rational() const { return c_.degree() <= 0; }
    Rational rational_value() const {
        if (!is_rational()) throw std::domain_error("Cyc: not rational");
        return c_[0];
    }

    friend Cyc operator+(const Cyc& a, const Cyc& b) {
        auto f = join(a, b);
        return make(f, a.c_ + b.c_);
    }
    friend Cyc operator-(const Cyc& a, const Cyc& b) {
        auto f = join(a, b);
        return make(f, a.c_ - b.c_);
    }
    friend Cyc operator*(const Cyc& a, const Cyc& b) {
        auto f = join(a, b);
        return make(f, a.c_ * b.c_);
    }
    Cyc operator-() const {
        Cyc r = *this;
        r.c_ = -r.c_;
        return r;
    }

    Cyc inverse() const {
        if (is_zero()) throw std::domain_error("Cyc: inverse of zero");
        if (!fld_ || is_rational()) {
            Cyc r = *this;
            r.c_ = Poly<Rational>{Rational(1) / c_[0]};
            return r;
        }
        /* s·c + t·Φ = 1 in Q[x] (Φ irreducible, c not a multiple) */
        auto eg = extended_gcd(c_, fld_->phi);
        if (eg.g.degree() != 0) throw std::logic_error("Cyc: residue not invertible");
        return make(fld_, eg.s * (Rational(1) / eg.g[0]));
    }
    friend Cyc operator/(const Cyc& a, const Cyc& b) { return a * b.inverse(); }

    Cyc& operator+=(const Cyc& o) { return *this = *this + o; }
    Cyc& operator-=(const Cyc& o) { return *this = *this - o; }
    Cyc& operator*=(const Cyc& o) { return *this = *this * o; }

    friend bool operator==(const Cyc& a, const Cyc& b) {
        join(a, b);  /* reject mixed fields */
        return a.c_ == b.c_;
    }
    friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }

    /* coefficient list "a0" or "[a0,a1,...]" in the power basis of ζ */
    std::string text() const {
        if (is_rational()) return rational_text(c_[0]);
        std::string out = "[";
        for (int k = 0; k <= (fld_ ? fld_->degree() - 1 : 0); ++k) {
            if (k) out += ",";
            out += rational_text(c_[k]);
        }
        return out + "]";
    }

private:
    void set_constant(const Rational& v) { c_ = Poly<Rational>{v}; }
    void reduce() {
        if (fld_ && c_.degree() >= fld_->degree()) c_ = c_ % fld_->phi;
    }
    static Cyc make(const CycFieldPtr& f, Poly<Rational> p) {
        Cyc r;
        r.fld_ = f;
        r.c_ = std::move(p);
        r.reduce();
        return r;
    }
    static CycFieldPtr join(const Cyc& a, const Cyc& b) {
        if (a.fld_ && b.fld_ && a.fld_->e != b.fld_->e)
            throw std::invalid_argument("Cyc: mixed cyclotomic fields");
        return a.fld_ ? a.fld_ : b.fld_;
    }

    CycFieldPtr fld_;        /* null: plain rational constant */
    Poly<Rational> c_;       /* residue mod Φ_e when fld_ set */
};

} // namespace cycloschur
