#pragma once

#include <array>
#include <cmath>
#include <vector>

#include "supercurve/complexpoly.hpp"

namespace supercurve {

/// S² as two copies of ℂ glued along ℂ* by w = 1/z. chart 0 covers everything
/// but the point at infinity; chart 1 everything but the origin.
struct SpherePoint {
    int chart = 0;  // 0 or 1
    C z{0.0, 0.0};

    static SpherePoint origin() { return {0, C(0.0)}; }
    static SpherePoint infinity_point() { return {1, C(0.0)}; }
    static SpherePoint from_chart0(C z) { return SpherePoint{0, z}.canonical(); }
    static SpherePoint from_chart1(C w) { return SpherePoint{1, w}.canonical(); }

    bool is_infinity() const { return chart == 1 && z == C(0.0); }

    /// Coordinate in the requested chart; caller must know the point is
    /// representable there (|z| != 0 when switching).
    C coord_in(int target_chart) const {
        if (target_chart == chart) return z;
        return C(1.0) / z;
    }
    bool representable_in(int target_chart) const { return target_chart == chart || z != C(0.0); }

    /// Canonical form: chart 0 iff |z| <= 1 (ties to chart 0). A 10% hysteresis
    /// variant is provided for iterative code that would otherwise flip-flop.
    SpherePoint canonical() const {
        double a = std::abs(z);
        if (a <= 1.0) return *this;
        return {1 - chart, C(1.0) / z};
    }
    SpherePoint canonical_hysteresis() const {
        double a = std::abs(z);
        if (a <= 1.1) return *this;  // keep current chart within the margin
        return {1 - chart, C(1.0) / z};
    }

    /// Homogeneous coordinates [z0 : z1], chart-0 point z = z0/z1.
    std::array<C, 2> homogeneous() const {
        if (chart == 0) return {z, C(1.0)};
        return {C(1.0), z};
    }
};

/// Chordal distance on the unit 2-sphere, range [0, 2]; chart-independent.
/// The determinant form 2|a∧b|/(|a||b|) = 2 sin(Θ/2) avoids cancellation for
/// nearby points.
inline double chordal_dist(const SpherePoint& p, const SpherePoint& q) {
    auto a = p.homogeneous(), b = q.homogeneous();
    C det = a[0] * b[1] - a[1] * b[0];
    double na = std::norm(a[0]) + std::norm(a[1]);
    double nb = std::norm(b[0]) + std::norm(b[1]);
    return 2.0 * std::abs(det) / std::sqrt(na * nb);
}

/// Fubini-Study area density (1+|z|²)^{-2} at a chart coordinate; total area π.
inline double fs_density(C z) {
    double n = 1.0 + std::norm(z);
    return 1.0 / (n * n);
}

/// Hermitian fiber weight |θ|²_H of the chart-trivializing frame of L_d:
/// (1+|z|²)^{-d}, the unique normalization consistent with the z^{-d} cocycle;
/// for d = 2 it reproduces the FS norm of ∂/∂z (TΣ = L₂).
inline double fiber_weight(int d, C z) { return std::pow(1.0 + std::norm(z), -double(d)); }

/// Quasi-uniform sample of n sphere points (golden-angle spiral), canonical
/// chart coordinates. Deterministic.
inline std::vector<SpherePoint> sphere_samples(int n) {
    std::vector<SpherePoint> pts;
    pts.reserve(n);
    const double ga = 3.14159265358979323846 * (3.0 - std::sqrt(5.0));
    for (int i = 0; i < n; ++i) {
        double z3 = 1.0 - 2.0 * (i + 0.5) / n;  // n₃ component
        double r3 = std::sqrt(std::max(0.0, 1.0 - z3 * z3));
        double th = ga * i;
        // invert the stereographic convention of unit_vector(): n₃ = -1 ↔ z = 0
        double denom = 1.0 - z3;
        C z;
        int chart;
        if (denom >= 1.0) {  // lower hemisphere incl. equator → chart 0
            z = C(r3 * std::cos(th), -r3 * std::sin(th)) / denom;
            chart = 0;
        } else {
            z = C(r3 * std::cos(th), r3 * std::sin(th)) / (1.0 + z3);
            chart = 1;
        }
        pts.push_back(SpherePoint{chart, z}.canonical());
    }
    return pts;
}

}  // namespace supercurve
