#pragma once

#include <optional>
#include <string>
#include <vector>

#include "supercurve/bundle.hpp"
#include "supercurve/complexpoly.hpp"
#include "supercurve/moebius.hpp"

namespace supercurve {

/// A point of the target, comparable across charts: affine coordinates for
/// flat ℂⁿ, homogeneous [X_0 : ... : X_n] for CPⁿ (affine w_j = X_j/X_0).
struct TargetPoint {
    TargetSpec target;
    std::vector<C> coords;  // affine (flat) or homogeneous (CPn, size n+1)

    /// Affine chart-0 coordinates; nullopt when on the hyperplane X_0 = 0.
    std::optional<std::vector<C>> affine() const;
};

double target_point_dist(const TargetPoint& p, const TargetPoint& q);

/// Rational map S² → X. CP¹ maps are stored in all four (source, target)
/// chart representations; CPⁿ maps as homogeneous polynomial lifts per source
/// chart; flat maps as polynomial components (global smooth flat curves are
/// the constants — nonconstant ones carry infinite energy and only appear as
/// local models).
class GlobalCurve {
  public:
    static GlobalCurve cp1(RationalFn phi);
    static GlobalCurve cpn(std::vector<Poly> homogeneous_lift);  // size n+1
    static GlobalCurve flat(std::vector<Poly> components);
    static GlobalCurve constant(const TargetSpec& t, const std::vector<C>& affine_value);

    const TargetSpec& target() const { return target_; }
    int degree() const { return degree_; }
    bool is_constant(double tol = 1e-12) const;

    TargetPoint value(const SpherePoint& p) const;

    /// CP¹ chart representation φ_{s,t}: source chart s, target chart t.
    const RationalFn& cp1_rep(int s, int t) const { return cp1_rep_[s][t]; }

    /// CP¹ evaluation at a chart-s coordinate: returns (w, t) with w the
    /// affine value in the target chart t that keeps |w| ≤ 1.
    std::pair<C, int> cp1_value_canonical(int s, C zeta) const;

    /// Flat components (source chart 0).
    const std::vector<Poly>& flat_components() const { return flat_; }

    /// Invariant energy density ½|dφ|² as a scalar on S² (FS source metric,
    /// FS or flat target metric).
    double energy_density(const SpherePoint& p) const;

    /// Numeric coprimality measure of the homogeneous lift: |resultant| after
    /// coefficient normalization. Must stay ≥ 1e-10 for a valid curve.
    double coprimality() const { return coprimality_; }

    friend GlobalCurve pullback_curve(const GlobalCurve& phi, const Moebius& m);
    friend bool curve_close(const GlobalCurve&, const GlobalCurve&, double, int);
    friend class SuperSection;

  private:
    GlobalCurve() = default;
    void finalize_cp1();

    TargetSpec target_;
    int degree_ = 0;
    double coprimality_ = 1.0;
    // CP1
    RationalFn cp1_rep_[2][2];
    // CPn: homogeneous lift per source chart
    std::vector<Poly> lift0_, lift1_;
    std::vector<Poly> dlift0_, dlift1_;
    // flat
    std::vector<Poly> flat_, flat1_;
};

/// φ ∘ m as exact rational composition; degree preserved.
GlobalCurve pullback_curve(const GlobalCurve& phi, const Moebius& m);

/// Sampled sup target-distance between two curves (diagnostic helper).
double curve_sup_dist(const GlobalCurve& a, const GlobalCurve& b, int samples = 200);

/// Smooth section of L_d ⊗_J φ*TX in chart-polynomial form. Supported targets:
/// CP¹ (scalar component w.r.t. θ ⊗ ∂/∂w) and flat ℂⁿ. Stored in all chart
/// combinations; global smoothness is enforced at construction by the
/// cocycle/target-transition pole check.
class SuperSection {
  public:
    /// CP¹ target: component u(z) in source chart 0, target chart 0.
    static SuperSection cp1(int d, GlobalCurve phi, RationalFn u00);
    /// Flat target: components (vector over ℂⁿ) in source chart 0.
    static SuperSection flat(int d, GlobalCurve phi, std::vector<RationalFn> u0);
    static SuperSection zero(int d, GlobalCurve phi);

    int bundle_degree() const { return d_; }
    const GlobalCurve& curve() const { return phi_; }
    bool is_zero() const;

    /// Pointwise squared bundle norm |ψ|²(p) per eqn-(H2) metric.
    double norm_sq(const SpherePoint& p) const;

    /// Component vector at p in the given source chart / target chart pair
    /// (CP¹: size-1 vector).
    std::vector<C> components(int s, int t, C zeta) const;

    /// CP¹ chart reps u_{s,t}; flat reps u_{s}.
    const RationalFn& cp1_comp(int s, int t) const { return u_[s][t]; }
    const std::vector<RationalFn>& flat_comp(int s) const { return uflat_[s]; }

    friend SuperSection pullback_section(const SuperSection& psi, const Moebius& m);

  private:
    SuperSection() = default;
    void build_reps_cp1();
    void build_reps_flat();
    void validate() const;

    int d_ = -1;
    GlobalCurve phi_;
    RationalFn u_[2][2];                 // CP1
    bool rep_ok_[2][2] = {{true, true}, {true, true}};
    std::vector<RationalFn> uflat_[2];   // flat
};

/// Φ_m^{-1} ∘ ψ ∘ m (spin lift included); curveRef becomes φ ∘ m.
SuperSection pullback_section(const SuperSection& psi, const Moebius& m);

/// Fiber-norm distance |ψ₁ ⊖ ψ₂|(p) of two sections over curves whose values
/// at p are within the target injectivity radius: ψ₂'s target part is
/// parallel-transported along the minimal geodesic to φ₁(p) before comparing.
/// Returns +∞ when the base points are too far apart.
double section_fiber_dist(const SuperSection& a, const SuperSection& b, const SpherePoint& p);

/// Sampled sup fiber-norm distance.
double section_sup_dist(const SuperSection& a, const SuperSection& b, int samples = 200);

/// Catalog of exact holomorphic supercurves on the standard targets.
/// kinds: "identity" | "power" (k) | "bubble" (eps) | "random" (maxdeg, seed)
///      | "holo" (alpha, beta) with φ = id, ψ = (α+βz)·frame, d = -1.
struct CatalogParams {
    int k = 2;
    double eps = 0.01;
    int maxdeg = 3;
    unsigned long seed = 1;
    C alpha{1.0}, beta{0.0};
    int d = -1;
};
std::pair<GlobalCurve, SuperSection> make_instance(const std::string& kind,
                                                   const CatalogParams& params = {});

double resultant_abs(const Poly& p, const Poly& q);

}  // namespace supercurve
