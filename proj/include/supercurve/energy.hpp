#pragma once

#include "supercurve/family.hpp"
#include "supercurve/localpair.hpp"
#include "supercurve/quadrature.hpp"

namespace supercurve {

/// E(φ, U) := ½ ∫_U |dφ|² dvol (FS source metric, target metric per spec).
double energy_curve(const GlobalCurve& phi, const Region& region, double rel_tol = 1e-8);

/// E(ψ, U) := ½ ∫_U |ψ|^{-4/d} dvol; closed cases d = -1 (L⁴) and d = -2 (L²).
/// Other d ≠ 0 are evaluated but experimental (non-integer exponents).
double energy_section(const SuperSection& psi, const Region& region, double rel_tol = 1e-8);
inline bool section_energy_experimental(int d) { return d != -1 && d != -2; }

inline double super_energy(const GlobalCurve& phi, const SuperSection& psi, const Region& region,
                           double rel_tol = 1e-8) {
    return energy_curve(phi, region, rel_tol) + energy_section(psi, region, rel_tol);
}

/// E^loc(φ, ψ, U) := ∫_U (|dφ|² + |ψ|² + |dψ|²) ds dt over a planar disc.
double local_super_energy(const LocalPair& lp, C center, double radius, double rel_tol = 1e-8,
                          double fd_step = 1e-5);

/// Minimal energy of a nonconstant holomorphic sphere, computed as the min
/// over degree-1 catalog maps (= sphere area π); the ħ of the mass bound.
double hbar_estimate(double rel_tol = 1e-8);

/// Aitken Δ² acceleration on the last three ladder entries.
double aitken_last3(const std::vector<double>& x);

/// ε-indexed energy concentration data around a point; raw (ε, ν) ladders are
/// kept alongside the extrapolated limits.
struct MassProfile {
    SpherePoint center;
    std::vector<double> epsilons;                  // decreasing
    std::vector<std::vector<double>> ladder_phi;   // [eps][nu]
    std::vector<std::vector<double>> ladder_psi;
    std::vector<double> mass_phi, mass_psi;        // ν-limits per ε
    double m_phi = 0.0, m_psi = 0.0;               // ε → 0 extrapolations
    bool monotone_warning = false;
};

MassProfile mass_profile(const Family& family, const SpherePoint& z0,
                         std::vector<double> epsilons, double nu_max, double rel_tol = 1e-7);

}  // namespace supercurve
