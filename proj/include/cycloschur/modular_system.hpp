#pragma once

/* Modular systems (K, R, F): a discrete valuation ring R with fraction
 * field K, maximal ideal ℘, residue field F = R/℘, together with the
 * algebra parameters q̂, Q̂_1..Q̂_r in R and their images q, Q_i in F.
 *
 * Two concrete systems:
 *   - PLocalSystem: K = Q, R = Z localised at a prime p, F = F_p,
 *     parameters are integers (or p-integral rationals).
 *   - XAdicSystem:  K = Q(ζ_e)(x), R = rational functions regular at x = 0,
 *     F = Q(ζ_e); by default q̂ = ζ_e·(1+x), and Q̂_i = c_i·(1+x)^{b_i}
 *     with c_i in the cyclotomic field.
 */

#include "cycloschur/ratfunc.hpp"

namespace cycloschur {

struct PLocalSystem {
    using Scalar = Rational;
    using Residue = Fp;

    long p;
    Scalar qhat;
    std::vector<Scalar> Qhat;

    PLocalSystem(long p_, const Scalar& qhat_, std::vector<Scalar> Qhat_)
        : p(p_), qhat(qhat_), Qhat(std::move(Qhat_)) {
        if (p < 2) throw std::invalid_argument("PLocalSystem: p must be a prime >= 2");
        for (long d = 2; d * d <= p; ++d)
            if (p % d == 0) throw std::invalid_argument("PLocalSystem: p must be prime");
        if (valuation(qhat) != 0)
            throw std::invalid_argument("PLocalSystem: qhat must be a unit of R");
        for (const auto& Q : Qhat)
            if (valuation(Q) < 0)
                throw std::invalid_argument("PLocalSystem: Qhat must lie in R");
    }
    PLocalSystem(long p_, long qhat_, const std::vector<long>& Qhat_)
        : PLocalSystem(p_, Scalar(qhat_), std::vector<Scalar>(Qhat_.begin(), Qhat_.end())) {}

    int r() const { return static_cast<int>(Qhat.size()); }
    Scalar from_int(long v) const { return Scalar(v); }

    long valuation(const Scalar& x) const { return p_valuation(x, p); }
    bool in_R(const Scalar& x) const { return valuation(x) >= 0; }
    Residue reduce(const Scalar& x) const { return reduce_p_local(x, p); }

    std::string scalar_text(const Scalar& x) const { return rational_text(x); }
    std::string residue_text(const Residue& x) const { return x.text(); }

    std::string describe() const {
        std::string s = "plocal p=" + std::to_string(p) + " qhat=" + rational_text(qhat) + " Qhat=";
        for (std::size_t i = 0; i < Qhat.size(); ++i)
            s += (i ? "," : "") + rational_text(Qhat[i]);
        return s;
    }
};

struct XAdicSystem {
    using Scalar = RatFunc;
    using Residue = Cyc;

    int e;
    CycFieldPtr field;
    Scalar qhat;
    std::vector<Scalar> Qhat;

    /* Q̂_i = c_i·(1+x)^{b_i}; q̂ defaults to ζ_e·(1+x) */
    struct QhatSpec {
        std::vector<Rational> c;  /* coefficients of c_i in the power basis of ζ_e */
        int b = 0;
    };

    XAdicSystem(int e_, const std::vector<QhatSpec>& Qspecs)
        : XAdicSystem(e_, default_qhat(e_), build_Qhat(e_, Qspecs)) {}

    XAdicSystem(int e_, Scalar qhat_, std::vector<Scalar> Qhat_)
        : e(e_), field(CycField::make(e_)), qhat(std::move(qhat_)), Qhat(std::move(Qhat_)) {
        if (valuation(qhat) != 0)
            throw std::invalid_argument("XAdicSystem: qhat must be a unit of R");
        for (const auto& Q : Qhat)
            if (!Q.is_zero() && valuation(Q) < 0)
                throw std::invalid_argument("XAdicSystem: Qhat must lie in R");
    }

    int r() const { return static_cast<int>(Qhat.size()); }
    Scalar from_int(long v) const { return Scalar(v); }

    long valuation(const Scalar& x) const { return x.ord(); }
    bool in_R(const Scalar& x) const { return valuation(x) >= 0; }
    Residue reduce(const Scalar& x) const {
        if (!in_R(x)) throw std::domain_error("XAdicSystem: element is not regular at x=0");
        return x.eval0();
    }

    std::string scalar_text(const Scalar& x) const { return x.text(); }
    std::string residue_text(const Residue& x) const { return x.text(); }

    std::string describe() const {
        std::string s = "xadic e=" + std::to_string(e) + " qhat=" + qhat.text() + " Qhat=";
        for (std::size_t i = 0; i < Qhat.size(); ++i) s += (i ? ";" : "") + Qhat[i].text();
        return s;
    }

    static Scalar default_qhat(int e_) {
        Cyc z = Cyc::zeta(CycField::make(e_));
        return RatFunc(z) * one_plus_x();
    }
    static Scalar one_plus_x() {
        return RatFunc(Poly<Cyc>(std::vector<Cyc>{Cyc(1), Cyc(1)}));
    }

private:
    static std::vector<Scalar> build_Qhat(int e_, const std::vector<QhatSpec>& specs) {
        auto fld = CycField::make(e_);
        std::vector<Scalar> out;
        for (const auto& s : specs) {
            Cyc c(fld, Poly<Rational>(std::vector<Rational>(s.c)));
            Scalar q(c);
            Scalar step = s.b >= 0 ? one_plus_x() : RatFunc(1) / one_plus_x();
            for (int i = 0; i < std::abs(s.b); ++i) q = q * step;
            out.push_back(q);
        }
        return out;
    }
};

} // namespace cycloschur
