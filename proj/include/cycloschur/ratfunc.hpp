#pragma once

/* Rational functions in one variable x over a cyclotomic field:
 * num/den with den monic and gcd(num, den) = 1.  The x-adic valuation is
 * ord_x(num) - ord_x(den); after reduction at most one of the two vanishes
 * at 0, so elements of non-negative valuation can be evaluated at x = 0. */

#include "cycloschur/cyclotomic.hpp"

namespace cycloschur {

class RatFunc {
public:
    RatFunc() : num_(), den_(Cyc(1)) {}
    RatFunc(long v) : num_(Cyc(v)), den_(Cyc(1)) {}
    RatFunc(const Cyc& v) : num_(v), den_(Cyc(1)) {}
    RatFunc(const Poly<Cyc>& p) : num_(p), den_(Cyc(1)) {}
    RatFunc(Poly<Cyc> num, Poly<Cyc> den) : num_(std::move(num)), den_(std::move(den)) {
        normalize();
    }

    static RatFunc x() { return RatFunc(Poly<Cyc>::monomial(1, Cyc(1))); }

    const Poly<Cyc>& num() const { return num_; }
    const Poly<Cyc>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    /* order of vanishing at x = 0; VAL_INF for 0 */
    long ord() const {
        if (is_zero()) return VAL_INF;
        return num_.ord() - den_.ord();
    }

    /* value at x = 0; requires ord() >= 0 */
    Cyc eval0() const {
        if (is_zero()) return Cyc(0);
        if (ord() < 0) throw std::domain_error("RatFunc: pole at x = 0");
        return num_[0] / den_[0];
    }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw std::domain_error("RatFunc: division by zero");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }

    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    std::string text() const {
        auto poly_text = [](const Poly<Cyc>& p) {
            std::string out = "(";
            for (int k = 0; k <= std::max(p.degree(), 0); ++k) {
                if (k) out += ",";
                out += p[k].text();
            }
            return out + ")";
        };
        if (den_ == Poly<Cyc>(Cyc(1))) return poly_text(num_);
        return poly_text(num_) + "/" + poly_text(den_);
    }

private:
    void normalize() {
        if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
        if (num_.is_zero()) {
            den_ = Poly<Cyc>(Cyc(1));
            return;
        }
        Poly<Cyc> g = gcd_monic(num_, den_);
        if (g.degree() > 0) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
        Cyc lead = den_[den_.degree()];
        if (!(lead == Cyc(1))) {
            Cyc inv = lead.inverse();
            num_ = num_ * inv;
            den_ = den_ * inv;
        }
    }

    Poly<Cyc> num_, den_;
};

} // namespace cycloschur
