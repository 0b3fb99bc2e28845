#pragma once

#include <cmath>
#include <random>
#include <stdexcept>

#include "supercurve/sphere.hpp"

namespace supercurve {

/// Sphere automorphism z ↦ (az+b)/(cz+d) stored as an SL(2,ℂ) representative.
/// The matrix sign is the spin-lift datum: m and -m act identically on points
/// and differ only in the sign of odd-degree lift factors.
class Moebius {
  public:
    C a{1.0}, b{0.0}, c{0.0}, d{1.0};

    Moebius() = default;
    Moebius(C a_, C b_, C c_, C d_, bool renormalize = true) : a(a_), b(b_), c(c_), d(d_) {
        if (renormalize) normalize_det();
    }

    static Moebius identity() { return {}; }
    /// Scaling z ↦ s z for s > 0 (or complex s ≠ 0).
    static Moebius scaling(C s) {
        C r = std::sqrt(s);
        return {r, C(0.0), C(0.0), C(1.0) / r, false};
    }
    static Moebius translation(C t) { return {C(1.0), t, C(0.0), C(1.0), false}; }
    static Moebius inversion() { return {C(0.0), C(0.0, 1.0), C(0.0, 1.0), C(0.0), false}; }

    C det() const { return a * d - b * c; }

    void normalize_det() {
        C dt = det();
        if (dt == C(0.0)) throw std::invalid_argument("Moebius: singular matrix");
        C s = std::sqrt(dt);
        a /= s; b /= s; c /= s; d /= s;
    }

    Moebius negated() const { return {-a, -b, -c, -d, false}; }
    Moebius inverse() const { return {d, -b, -c, a, false}; }

    /// Matrix product, renormalized to det 1; action = pointwise composition.
    Moebius compose(const Moebius& o) const {
        return Moebius(a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c,
                       c * o.b + d * o.d, true);
    }

    /// Chart-aware action on sphere points; no poles, result is canonical.
    SpherePoint apply(const SpherePoint& p) const {
        C num, den;
        if (p.chart == 0) {
            num = a * p.z + b;
            den = c * p.z + d;
        } else {
            // z = 1/u: (a/u + b)/(c/u + d) = (a + b u)/(c + d u)
            num = a + b * p.z;
            den = c + d * p.z;
        }
        if (std::abs(num) > std::abs(den)) return SpherePoint{1, den / num};
        if (den == C(0.0)) return SpherePoint::infinity_point();
        return SpherePoint{0, num / den};
    }
    SpherePoint operator()(const SpherePoint& p) const { return apply(p); }

    /// Conformal factor λ_m(p) of m*h = λ_m h for the FS metric; the pole-free
    /// form (1+|z|²)²/(|cz+d|² + |az+b|²)² is used, chart-adjusted.
    double conformal_factor(const SpherePoint& p) const {
        double num, den;
        if (p.chart == 0) {
            num = 1.0 + std::norm(p.z);
            den = std::norm(c * p.z + d) + std::norm(a * p.z + b);
        } else {
            num = 1.0 + std::norm(p.z);
            den = std::norm(c + d * p.z) + std::norm(a + b * p.z);
        }
        double r = num / den;
        return r * r;
    }

    /// Scalar by which Φ_m = √(dm)^d acts on the chart-trivialized fiber of
    /// L_deg at p: (c z + d)^{-deg} in chart 0, (a + b u)^{-deg} in chart 1
    /// (frames of the same chart index on both ends; the returned chart tag
    /// records which). A pole of one chart's expression triggers the switch;
    /// both cannot degenerate since ad - bc = 1. The SL(2,ℂ) sign enters for
    /// odd deg; composing at the matrix level keeps the cocycle law exact.
    std::pair<C, int> lift_factor_tagged(int deg, const SpherePoint& p) const {
        if (deg == 0) throw std::invalid_argument("lift_factor: degree 0 excluded");
        C base = (p.chart == 0) ? (c * p.z + d) : (a + b * p.z);
        if (base == C(0.0)) {
            if (!p.representable_in(1 - p.chart))
                throw std::domain_error("lift_factor: point invalid in both charts");
            SpherePoint q{1 - p.chart, p.coord_in(1 - p.chart)};
            return lift_factor_tagged(deg, q);
        }
        return {std::pow(base, -double(deg)), p.chart};
    }
    C lift_factor(int deg, const SpherePoint& p) const { return lift_factor_tagged(deg, p).first; }

    /// Chart-fixed lift factor (both ends trivialized in the same chart);
    /// the exact cocycle identity holds chartwise at the SL(2,ℂ) level.
    C lift_factor_in_chart(int deg, C coord, int chart) const {
        C base = (chart == 0) ? (c * coord + d) : (a + b * coord);
        return std::pow(base, -double(deg));
    }

    bool is_rotation(double tol = 1e-12) const {
        return std::abs(d - std::conj(a)) < tol && std::abs(c + std::conj(b)) < tol &&
               std::abs(det() - C(1.0)) < tol;
    }

    /// Transvection: the FS rotation carrying p to q along their geodesic
    /// (axis = n_p × n_q). Parallel transport along the geodesic is its
    /// differential.
    static Moebius transvection(const SpherePoint& from, const SpherePoint& to);

    /// Rotation taking 0 to the given point (special transvection).
    static Moebius rotation_to(const SpherePoint& p) {
        return transvection(SpherePoint::origin(), p);
    }

    static Moebius random_rotation(std::mt19937_64& rng);
    static Moebius random(std::mt19937_64& rng, double spread = 1.0);
};

/// Spinor-convention unit vector n = ⟨ξ|σ|ξ⟩/|ξ|² for ξ = homogeneous(p):
/// n(0) = (0,0,-1), n(∞) = (0,0,+1); consistent with the SU(2) action used in
/// transvection().
inline std::array<double, 3> unit_vector(const SpherePoint& p) {
    auto h = p.homogeneous();
    double n = std::norm(h[0]) + std::norm(h[1]);
    C cross = std::conj(h[0]) * h[1];
    return {2.0 * cross.real() / n, 2.0 * cross.imag() / n,
            (std::norm(h[0]) - std::norm(h[1])) / n};
}

inline Moebius Moebius::transvection(const SpherePoint& from, const SpherePoint& to) {
    auto n1 = unit_vector(from), n2 = unit_vector(to);
    double dot = n1[0] * n2[0] + n1[1] * n2[1] + n1[2] * n2[2];
    std::array<double, 3> ax = {n1[1] * n2[2] - n1[2] * n2[1], n1[2] * n2[0] - n1[0] * n2[2],
                                n1[0] * n2[1] - n1[1] * n2[0]};
    double s = std::sqrt(ax[0] * ax[0] + ax[1] * ax[1] + ax[2] * ax[2]);
    if (s < 1e-15) {
        if (dot > 0.0) return identity();
        throw std::invalid_argument("transvection: antipodal points have no unique geodesic");
    }
    for (auto& v : ax) v /= s;
    double theta = std::atan2(s, dot);
    // SU(2) element exp(-i θ/2 (k·σ)) in the spinor convention matching
    // unit_vector(); verified by the m(from) == to unit test.
    double ch = std::cos(theta / 2.0), sh = std::sin(theta / 2.0);
    C a(ch, -sh * ax[2]);
    C b(-sh * ax[1], -sh * ax[0]);
    return Moebius(a, b, -std::conj(b), std::conj(a), false);
}

inline Moebius Moebius::random_rotation(std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    C a(g(rng), g(rng)), b(g(rng), g(rng));
    double n = std::sqrt(std::norm(a) + std::norm(b));
    a /= n; b /= n;
    return Moebius(a, b, -std::conj(b), std::conj(a), false);
}

inline Moebius Moebius::random(std::mt19937_64& rng, double spread) {
    std::normal_distribution<double> g(0.0, 1.0);
    std::uniform_real_distribution<double> u(-spread, spread);
    // rotation * scaling * rotation: keeps the action well conditioned
    Moebius r1 = random_rotation(rng), r2 = random_rotation(rng);
    Moebius s = scaling(std::exp(u(rng)));
    return r1.compose(s).compose(r2);
}

}  // namespace supercurve
