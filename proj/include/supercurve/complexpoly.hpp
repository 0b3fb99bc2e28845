#pragma once

#include <algorithm>
#include <cassert>
#include <cmath>
#include <complex>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace supercurve {

using C = std::complex<double>;

/// Dense polynomial over ℂ, coefficients stored lowest degree first.
class Poly {
  public:
    Poly() = default;
    Poly(std::initializer_list<C> coeffs) : c_(coeffs) { trim(); }
    explicit Poly(std::vector<C> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly constant(C v) { return Poly{{v}}; }
    static Poly x() { return Poly{{C(0.0), C(1.0)}}; }
    static Poly monomial(int k, C v = C(1.0)) {
        std::vector<C> c(k + 1, C(0.0));
        c[k] = v;
        return Poly(c);
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const std::vector<C>& coeffs() const { return c_; }
    C coeff(int k) const { return (k >= 0 && k < (int)c_.size()) ? c_[k] : C(0.0); }

    C operator()(C z) const {
        C acc(0.0);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * z + c_[i];
        return acc;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<C> d(c_.size() - 1);
        for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = double(k) * c_[k];
        return Poly(d);
    }

    Poly operator+(const Poly& o) const {
        std::vector<C> r(std::max(c_.size(), o.c_.size()), C(0.0));
        for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
        return Poly(r);
    }
    Poly operator-(const Poly& o) const { return *this + (o * C(-1.0)); }
    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly();
        std::vector<C> r(c_.size() + o.c_.size() - 1, C(0.0));
        for (size_t i = 0; i < c_.size(); ++i)
            for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
        return Poly(r);
    }
    Poly operator*(C s) const {
        std::vector<C> r(c_);
        for (auto& v : r) v *= s;
        return Poly(r);
    }

    /// sup of |coeff|, used as a scale for tolerance decisions.
    double coeff_scale() const {
        double m = 0.0;
        for (const auto& v : c_) m = std::max(m, std::abs(v));
        return m;
    }

    /// Drop trailing coefficients below tol (relative to coeff_scale when rel=true).
    void trim(double tol = 0.0, bool rel = false) {
        double cut = rel ? tol * coeff_scale() : tol;
        while (!c_.empty() && std::abs(c_.back()) <= cut) c_.pop_back();
    }

    bool operator==(const Poly& o) const { return c_ == o.c_; }

  private:
    std::vector<C> c_;
};

/// p((a z + b)/(c z + d)) written as num/den with den = (c z + d)^deg(p).
/// Exact coefficient arithmetic; this is how curve/section pullbacks stay rational.
inline std::pair<Poly, Poly> compose_moebius(const Poly& p, C a, C b, C c, C d) {
    int n = std::max(p.degree(), 0);
    Poly lin_num{{b, a}}, lin_den{{d, c}};
    // Powers of numerator/denominator up to n.
    std::vector<Poly> np(n + 1), dp(n + 1);
    np[0] = Poly::constant(C(1.0));
    dp[0] = Poly::constant(C(1.0));
    for (int k = 1; k <= n; ++k) {
        np[k] = np[k - 1] * lin_num;
        dp[k] = dp[k - 1] * lin_den;
    }
    Poly num;
    for (int k = 0; k <= p.degree(); ++k) num = num + np[k] * dp[n - k] * p.coeff(k);
    if (p.is_zero()) num = Poly();
    return {num, dp[n]};
}

/// Rational function num/den over ℂ. No symbolic gcd reduction; degrees stay
/// small in this codebase and cancellation is handled at evaluation sites.
class RationalFn {
  public:
    RationalFn() : num_(), den_(Poly::constant(C(1.0))) {}
    RationalFn(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::invalid_argument("RationalFn: zero denominator");
        normalize();
    }
    explicit RationalFn(Poly num) : RationalFn(std::move(num), Poly::constant(C(1.0))) {}
    static RationalFn constant(C v) { return RationalFn(Poly::constant(v)); }
    static RationalFn x() { return RationalFn(Poly::x()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial(double tol = 1e-12) const { return den_.degree() == 0 || poles_cancel(tol); }

    C operator()(C z) const {
        auto [n, d] = eval_pair(z);
        return n / d;
    }

    /// Numerator/denominator values with removable 0/0 points resolved by
    /// successive differentiation (uncancelled common factors).
    std::pair<C, C> eval_pair(C z) const {
        C n = num_(z), d = den_(z);
        if (d == C(0.0) && n == C(0.0)) {
            Poly pn = num_, pd = den_;
            for (int k = 0; k < 8 && d == C(0.0) && n == C(0.0); ++k) {
                pn = pn.derivative();
                pd = pd.derivative();
                n = pn(z);
                d = pd(z);
            }
        }
        return {n, d};
    }

    /// Value as a point of ℂ ∪ {∞}: returns {value, finite_flag}.
    std::pair<C, bool> eval_projective(C z) const {
        auto [n, d] = eval_pair(z);
        if (std::abs(d) >= std::abs(n)) {
            if (d == C(0.0)) return {C(0.0), false};  // genuine 0/0 only for the zero map
            return {n / d, true};
        }
        return {d / n, false};  // finite in the other target chart: value is 1/w
    }

    RationalFn derivative() const {
        return RationalFn(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    RationalFn operator+(const RationalFn& o) const {
        return RationalFn(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    RationalFn operator-(const RationalFn& o) const { return *this + o * C(-1.0); }
    RationalFn operator*(const RationalFn& o) const {
        return RationalFn(num_ * o.num_, den_ * o.den_);
    }
    RationalFn operator*(C s) const { return RationalFn(num_ * s, den_); }
    RationalFn reciprocal() const {
        if (num_.is_zero()) throw std::domain_error("RationalFn: reciprocal of zero");
        return RationalFn(den_, num_);
    }

    /// f((a z + b)/(c z + d)), exact.
    RationalFn compose_mb(C a, C b, C c, C d) const {
        auto [nn, nd] = compose_moebius(num_, a, b, c, d);
        auto [dn, dd] = compose_moebius(den_, a, b, c, d);
        // Common (cz+d)^k factors between nd and dd cancel by construction:
        // nd = (cz+d)^deg(num), dd = (cz+d)^deg(den).
        int dn_deg = num_.degree(), dd_deg = den_.degree();
        Poly lin{{d, c}};
        Poly num = nn, den = dn;
        for (int k = dd_deg; k < dn_deg; ++k) den = den * lin;
        for (int k = dn_deg; k < dd_deg; ++k) num = num * lin;
        return RationalFn(num, den);
    }

  private:
    void normalize() {
        // Strip exact common monomial factors z^k (chart transforms produce
        // them; they would otherwise evaluate 0/0 at the origin).
        auto low_zeros = [](const Poly& p) {
            int k = 0;
            while (k <= p.degree() && p.coeff(k) == C(0.0)) ++k;
            return k;
        };
        if (!num_.is_zero()) {
            int k = std::min(low_zeros(num_), low_zeros(den_));
            if (k > 0) {
                auto strip = [k](const Poly& p) {
                    std::vector<C> c(p.coeffs().begin() + k, p.coeffs().end());
                    return Poly(c);
                };
                num_ = strip(num_);
                den_ = strip(den_);
            }
        }
        // Scale so the denominator's largest coefficient is 1 (keeps floats tame).
        double s = den_.coeff_scale();
        if (s > 0.0 && std::isfinite(s)) {
            num_ = num_ * C(1.0 / s);
            den_ = den_ * C(1.0 / s);
        }
    }
    bool poles_cancel(double) const { return false; }  // conservative

    Poly num_, den_;
};

}  // namespace supercurve
