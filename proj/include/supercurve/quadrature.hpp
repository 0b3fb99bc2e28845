#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "supercurve/moebius.hpp"

namespace supercurve {

struct QuadratureError : std::runtime_error {
    double best;
    QuadratureError(const std::string& what, double best_) : std::runtime_error(what), best(best_) {}
};

/// Adaptive tensor Gauss-Legendre integration of f over [ax,bx]×[ay,by].
/// Globally adaptive: worst panel is bisected until the error sum meets
/// max(rel_tol·|I|, abs_floor). Deterministic for fixed inputs.
double integrate_rect(const std::function<double(double, double)>& f, double ax, double bx,
                      double ay, double by, double rel_tol, double abs_floor = 1e-14,
                      int max_panels = 60000);

/// Planar integral over a disc B_r(z0) ⊂ ℂ with Lebesgue measure (polar form).
double integrate_planar_disc(const std::function<double(C)>& f, C z0, double r, double rel_tol);

/// Sphere regions. Discs are rotated-coordinate discs (spherical caps): the
/// image of {|u| < r} under the transvection 0 ↦ center. Centered at 0 this is
/// the coordinate disc B_r(0).
struct Region {
    enum class Kind { FullSphere, Disc, Annulus, Complement, MoebiusDisc };
    Kind kind = Kind::FullSphere;
    SpherePoint center;
    double r = 0.0, R = 0.0;
    std::vector<std::pair<SpherePoint, double>> removed;  // Complement
    Moebius map;                                          // MoebiusDisc: map(disc(center, r))

    static Region full_sphere() { return {}; }
    static Region disc(const SpherePoint& c, double radius) {
        if (!(radius > 0.0)) throw std::invalid_argument("Region: disc radius must be positive");
        Region g; g.kind = Kind::Disc; g.center = c; g.r = radius; return g;
    }
    static Region annulus(const SpherePoint& c, double r0, double r1) {
        if (!(0.0 < r0 && r0 < r1)) throw std::invalid_argument("Region: need 0 < r < R");
        Region g; g.kind = Kind::Annulus; g.center = c; g.r = r0; g.R = r1; return g;
    }
    static Region complement(std::vector<std::pair<SpherePoint, double>> discs) {
        if (discs.empty()) return full_sphere();
        for (auto& [c, rad] : discs)
            if (!(rad > 0.0)) throw std::invalid_argument("Region: disc radius must be positive");
        Region g; g.kind = Kind::Complement; g.removed = std::move(discs); return g;
    }
    /// Möbius image m(B_r(c)); integrates by substitution with λ_m as Jacobian.
    static Region moebius_image(const SpherePoint& c, double radius, const Moebius& m) {
        Region g = disc(c, radius); g.kind = Kind::MoebiusDisc; g.map = m; return g;
    }

    bool contains(const SpherePoint& p) const;
};

/// ∫_region density dvol for a pointwise-defined invariant density on S².
/// dvol is the FS volume (sphere area π). Poles of the density must be
/// excluded by the region geometry; multi-disc complements additionally
/// require the density to be evaluable on the removed discs past the first.
double integrate(const std::function<double(const SpherePoint&)>& density, const Region& region,
                 double rel_tol);

}  // namespace supercurve
