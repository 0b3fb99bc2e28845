#pragma once

#include <limits>
#include <vector>

#include "supercurve/moebius.hpp"

namespace supercurve {

enum class Target { FlatCn, CPn };

/// Target manifolds supported: flat ℂⁿ and CPⁿ with the Fubini-Study metric
/// normalized to (1+|w|²)^{-2}|dw|² on CP¹ (sphere area π).
struct TargetSpec {
    Target kind = Target::CPn;
    int n = 1;  // complex dimension

    bool operator==(const TargetSpec& o) const { return kind == o.kind && n == o.n; }
};

/// Hermitian metric matrix h_{jk̄} at affine target coordinates w ∈ ℂⁿ.
/// Riemannian inner product of chart tangent vectors u, v is Re Σ h_{jk̄} u_j v̄_k.
inline std::vector<C> target_metric_at(const TargetSpec& t, const std::vector<C>& w) {
    int n = t.n;
    std::vector<C> h(n * n, C(0.0));
    if (t.kind == Target::FlatCn) {
        for (int j = 0; j < n; ++j) h[j * n + j] = C(1.0);
        return h;
    }
    double s = 1.0;
    for (auto& wj : w) s += std::norm(wj);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            C v = (j == k) ? C(s) : C(0.0);
            v -= std::conj(w[j]) * w[k];
            h[j * n + k] = v / (s * s);
        }
    return h;
}

/// Hermitian form Σ h_{jk̄} u_j v̄_k given a metric matrix (row-major n×n).
inline C hermitian_form(const std::vector<C>& h, const std::vector<C>& u,
                        const std::vector<C>& v) {
    int n = (int)u.size();
    C acc(0.0);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) acc += h[j * n + k] * u[j] * std::conj(v[k]);
    return acc;
}

/// The bundle metric of eqn-(H2) type on L_d ⊗_J φ*TX in chart trivializations:
/// ⟨ψ₁,ψ₂⟩ = ½ Re(Σ h_{jk̄} u₁_j ū₂_k) · |θ|²_H with |θ|²_H the fiber weight.
/// `metric` must be positive definite (checked on the diagonal and via ⟨u,u⟩).
inline double bundle_inner(int d, const SpherePoint& p, const std::vector<C>& metric,
                           const std::vector<C>& psi1, const std::vector<C>& psi2) {
    if (d == 0) throw std::invalid_argument("bundle_inner: degree 0 excluded");
    int n = (int)psi1.size();
    for (int j = 0; j < n; ++j)
        if (metric[j * n + j].real() <= 0.0)
            throw std::invalid_argument("bundle_inner: target metric not positive definite");
    double q1 = hermitian_form(metric, psi1, psi1).real();
    double q2 = hermitian_form(metric, psi2, psi2).real();
    if (q1 < 0.0 || q2 < 0.0)
        throw std::invalid_argument("bundle_inner: target metric not positive definite");
    double g = hermitian_form(metric, psi1, psi2).real();
    return 0.5 * g * fiber_weight(d, p.z);
}

inline double bundle_norm_sq(int d, const SpherePoint& p, const std::vector<C>& metric,
                             const std::vector<C>& psi) {
    return bundle_inner(d, p, metric, psi, psi);
}

/// Riemannian distance d_{g_J} between affine target points.
/// CPⁿ: arccos(|⟨P,Q⟩|/(|P||Q|)) with homogeneous lifts, range [0, π/2].
inline double target_dist(const TargetSpec& t, const std::vector<C>& w1,
                          const std::vector<C>& w2) {
    if (t.kind == Target::FlatCn) {
        double s = 0.0;
        for (int j = 0; j < t.n; ++j) s += std::norm(w1[j] - w2[j]);
        return std::sqrt(s);
    }
    C inner(1.0);
    double n1 = 1.0, n2 = 1.0;
    for (int j = 0; j < t.n; ++j) {
        inner += w1[j] * std::conj(w2[j]);
        n1 += std::norm(w1[j]);
        n2 += std::norm(w2[j]);
    }
    double c = std::abs(inner) / std::sqrt(n1 * n2);
    return std::acos(std::min(1.0, std::max(-1.0, c)));
}

inline double target_injectivity_radius(const TargetSpec& t) {
    return t.kind == Target::FlatCn ? std::numeric_limits<double>::infinity()
                                    : std::acos(-1.0) / 2.0;
}

/// |Φ_m|² fiber-weight transport ratio |lf|²·W_d(m(p))/W_d(p) evaluated with
/// the chart pair the lift factor was expressed in. Lem-2.3 conformality says
/// this equals λ_m(p)^{d/2} for every d ≠ 0.
inline double lift_weight_ratio(const Moebius& m, int d, const SpherePoint& p) {
    SpherePoint pc = p.canonical();
    auto [lf, chart] = m.lift_factor_tagged(d, pc);
    SpherePoint mp = m.apply(pc);
    C zin = pc.coord_in(chart);
    C zout = mp.coord_in(chart);  // representable: the switch logic guarantees it
    return std::norm(lf) * fiber_weight(d, zout) / fiber_weight(d, zin);
}

/// Parallel transport of a chart tangent component along the minimal FS
/// geodesic from w1 to w2 on CP¹ (flat targets transport trivially). On CP¹
/// the transvection realizes the transport; its chart derivative is the factor.
inline C transport_factor_cp1(C w1, C w2) {
    SpherePoint p = SpherePoint::from_chart0(w1), q = SpherePoint::from_chart0(w2);
    Moebius m = Moebius::transvection(p, q);
    C den = m.c * w1 + m.d;
    return C(1.0) / (den * den);  // M'(w1), det = 1
}

}  // namespace supercurve
