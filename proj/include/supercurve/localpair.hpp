#pragma once

#include <Eigen/Dense>
#include <functional>
#include <string>

#include "supercurve/curve.hpp"

namespace supercurve {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

inline Vec cvec(C z) {
    Vec v(2);
    v << z.real(), z.imag();
    return v;
}

/// Block-diagonal standard complex structure on ℝ^{2n}.
Mat standard_J(int n);
/// 2n×2n real matrix of multiplication by the complex scalar c on ℂⁿ ≅ ℝ^{2n}.
Mat complex_mult_matrix(C c, int n);

struct PlanarDomain {
    double x0 = -1.2, x1 = 1.2, y0 = -1.2, y1 = 1.2;
    static PlanarDomain square(double half) { return {-half, half, -half, half}; }
    bool contains(C z, double margin = 0.0) const {
        return z.real() >= x0 + margin && z.real() <= x1 - margin && z.imag() >= y0 + margin &&
               z.imag() <= y1 - margin;
    }
};

/// Local holomorphic supercurve model: fields (φ, ψ) into ℝ^{2n} on a planar
/// domain with structure fields J̃(z), D̃(z). Closed-form derivatives are
/// optional; when absent, consumers fall back to central differences.
struct LocalPair {
    PlanarDomain domain;
    int n = 1;
    std::function<Vec(C)> phi, psi;
    std::function<Mat(C)> Jt, Dt;
    // optional closed forms
    std::function<Vec(C)> dphi_s, dphi_t, dpsi_s, dpsi_t;
    std::function<Mat(C)> dJt_s, dJt_t, dDt_s, dDt_t;

    bool has_exact_field_derivatives() const { return bool(dphi_s) && bool(dpsi_s); }
    bool has_exact_structure_derivatives() const { return bool(dJt_s) && bool(dDt_s); }

    /// Def-3.2 shape: target-space J(x) and D(x, direction); φ(domain) ⊆ V is
    /// the caller's responsibility and checked by validate().
    static LocalPair from_target_fields(PlanarDomain dom, int n, std::function<Vec(C)> phi,
                                        std::function<Vec(C)> psi, std::function<Mat(Vec)> J,
                                        std::function<Mat(Vec, Vec)> D, double fd_step = 1e-5);

    static LocalPair from_effective_fields(PlanarDomain dom, int n, std::function<Vec(C)> phi,
                                           std::function<Vec(C)> psi, std::function<Mat(C)> Jt,
                                           std::function<Mat(C)> Dt);

    /// Checks ‖J̃² + id‖ ≤ 1e-10 on a sample grid. Returns diagnostics.
    std::vector<std::string> validate(int grid = 16) const;
};

struct GridSpec {
    double x0 = -0.9, x1 = 0.9, y0 = -0.9, y1 = 0.9;
    int nx = 41, ny = 41;
    static GridSpec square(double half, int res) { return {-half, half, -half, half, res, res}; }
};

struct ResidualResult {
    double sup_phi = 0.0, sup_psi = 0.0;
};

/// Sup over the grid of |∂_sφ + J̃∂_tφ| and |∂_sψ + J̃∂_tψ + D̃ψ|.
/// Exact derivatives are used when the pair carries them; otherwise central
/// differences of step h (grid must be ≥ 2h interior to the domain).
ResidualResult residual_local(const LocalPair& lp, const GridSpec& grid, double h);

enum class Connection { Trivial, LeviCivitaFS };

/// PDE residual of global data, evaluated per chart with J̃, D̃ assembled from
/// the connection (D̃ = 0 for trivial on flat targets; FS Christoffels along φ
/// for Levi-Civita on CPⁿ). h = 0 uses exact rational derivatives.
ResidualResult residual_global(const GlobalCurve& phi, const SuperSection& psi, Connection conn,
                               const GridSpec& chart_grid, double h = 0.0);

}  // namespace supercurve
