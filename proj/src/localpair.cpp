#include "supercurve/localpair.hpp"

#include <cmath>

namespace supercurve {

Mat standard_J(int n) {
    Mat J = Mat::Zero(2 * n, 2 * n);
    for (int k = 0; k < n; ++k) {
        J(2 * k, 2 * k + 1) = -1.0;
        J(2 * k + 1, 2 * k) = 1.0;
    }
    return J;
}

Mat complex_mult_matrix(C c, int n) {
    Mat M = Mat::Zero(2 * n, 2 * n);
    for (int k = 0; k < n; ++k) {
        M(2 * k, 2 * k) = c.real();
        M(2 * k, 2 * k + 1) = -c.imag();
        M(2 * k + 1, 2 * k) = c.imag();
        M(2 * k + 1, 2 * k + 1) = c.real();
    }
    return M;
}

LocalPair LocalPair::from_target_fields(PlanarDomain dom, int n, std::function<Vec(C)> phi,
                                        std::function<Vec(C)> psi, std::function<Mat(Vec)> J,
                                        std::function<Mat(Vec, Vec)> D, double fd_step) {
    LocalPair lp;
    lp.domain = dom;
    lp.n = n;
    lp.phi = phi;
    lp.psi = std::move(psi);
    auto dphis = [phi, fd_step](C z) -> Vec {
        return (phi(z + fd_step) - phi(z - fd_step)) / (2.0 * fd_step);
    };
    lp.Jt = [J, phi](C z) { return J(phi(z)); };
    lp.Dt = [D, phi, dphis](C z) { return D(phi(z), dphis(z)); };
    return lp;
}

LocalPair LocalPair::from_effective_fields(PlanarDomain dom, int n, std::function<Vec(C)> phi,
                                           std::function<Vec(C)> psi, std::function<Mat(C)> Jt,
                                           std::function<Mat(C)> Dt) {
    LocalPair lp;
    lp.domain = dom;
    lp.n = n;
    lp.phi = std::move(phi);
    lp.psi = std::move(psi);
    lp.Jt = std::move(Jt);
    lp.Dt = std::move(Dt);
    return lp;
}

std::vector<std::string> LocalPair::validate(int grid) const {
    std::vector<std::string> diag;
    Mat id = Mat::Identity(2 * n, 2 * n);
    double worst = 0.0;
    for (int i = 0; i < grid; ++i)
        for (int j = 0; j < grid; ++j) {
            C z(domain.x0 + (domain.x1 - domain.x0) * (i + 0.5) / grid,
                domain.y0 + (domain.y1 - domain.y0) * (j + 0.5) / grid);
            Mat J = Jt(z);
            worst = std::max(worst, (J * J + id).norm());
        }
    if (worst > 1e-10)
        diag.push_back("J̃² + id deviates by " + std::to_string(worst) + " on the sample grid");
    return diag;
}

ResidualResult residual_local(const LocalPair& lp, const GridSpec& grid, double h) {
    bool exact = lp.has_exact_field_derivatives();
    if (!exact) {
        if (!(h > 0.0)) throw std::invalid_argument("residual_local: need h > 0 without closed forms");
        PlanarDomain d = lp.domain;
        if (!(grid.x0 >= d.x0 + 2 * h && grid.x1 <= d.x1 - 2 * h && grid.y0 >= d.y0 + 2 * h &&
              grid.y1 <= d.y1 - 2 * h))
            throw std::invalid_argument("residual_local: grid must be >= 2h interior to the domain");
    }
    ResidualResult r;
    for (int i = 0; i < grid.nx; ++i)
        for (int j = 0; j < grid.ny; ++j) {
            C z(grid.x0 + (grid.x1 - grid.x0) * (grid.nx == 1 ? 0.5 : double(i) / (grid.nx - 1)),
                grid.y0 + (grid.y1 - grid.y0) * (grid.ny == 1 ? 0.5 : double(j) / (grid.ny - 1)));
            Vec ps, pt, ss, st;
            if (exact) {
                ps = lp.dphi_s(z); pt = lp.dphi_t(z);
                ss = lp.dpsi_s(z); st = lp.dpsi_t(z);
            } else {
                ps = (lp.phi(z + h) - lp.phi(z - h)) / (2 * h);
                pt = (lp.phi(z + C(0, h)) - lp.phi(z - C(0, h))) / (2 * h);
                ss = (lp.psi(z + h) - lp.psi(z - h)) / (2 * h);
                st = (lp.psi(z + C(0, h)) - lp.psi(z - C(0, h))) / (2 * h);
            }
            Mat J = lp.Jt(z), D = lp.Dt(z);
            double rphi = (ps + J * pt).norm();
            double rpsi = (ss + J * st + D * lp.psi(z)).norm();
            if (!std::isfinite(rphi) || !std::isfinite(rpsi))
                throw std::runtime_error("residual_local: NaN in field evaluation");
            r.sup_phi = std::max(r.sup_phi, rphi);
            r.sup_psi = std::max(r.sup_psi, rpsi);
        }
    return r;
}

namespace {

// FS Christoffel Γ^w_{ww} on CP¹ at affine coordinate w.
C fs_christoffel(C w) { return -2.0 * std::conj(w) / (1.0 + std::norm(w)); }

}  // namespace

ResidualResult residual_global(const GlobalCurve& phi, const SuperSection& psi, Connection conn,
                               const GridSpec& grid, double h) {
    const TargetSpec& ts = phi.target();
    if (conn == Connection::Trivial && ts.kind != Target::FlatCn)
        throw std::invalid_argument(
            "residual_global: trivial connection unsupported on a projective target");
    if (conn == Connection::LeviCivitaFS && ts.kind != Target::CPn)
        throw std::invalid_argument(
            "residual_global: Levi-Civita FS connection needs a CPn target");
    if (ts.kind == Target::CPn && ts.n > 1 && !psi.is_zero())
        throw std::invalid_argument("residual_global: CPn sections unsupported for n >= 2");

    ResidualResult total;
    for (int s = 0; s < 2; ++s) {
        for (int i = 0; i < grid.nx; ++i)
            for (int j = 0; j < grid.ny; ++j) {
                C z(grid.x0 + (grid.x1 - grid.x0) * (grid.nx == 1 ? 0.5 : double(i) / (grid.nx - 1)),
                    grid.y0 + (grid.y1 - grid.y0) * (grid.ny == 1 ? 0.5 : double(j) / (grid.ny - 1)));
                if (std::abs(z) > 1.0) continue;  // the two chart discs cover S²
                C rphi, rpsi, dphi_s_c, dphi_t_c;
                if (ts.kind == Target::FlatCn) {
                    if (s == 1) continue;  // nonconstant flat maps live on chart 0
                    double sup_phi = 0.0, sup_psi = 0.0;
                    for (auto& comp : phi.flat_components()) {
                        C d1, d2;
                        if (h <= 0.0) {
                            C dc = comp.derivative()(z);
                            d1 = dc; d2 = C(0, 1) * dc;
                        } else {
                            d1 = (comp(z + h) - comp(z - h)) / (2 * h);
                            d2 = (comp(z + C(0, h)) - comp(z - C(0, h))) / (2 * h);
                        }
                        sup_phi = std::max(sup_phi, std::abs(d1 + C(0, 1) * d2));
                    }
                    for (auto& u : psi.flat_comp(0)) {
                        C d1, d2;
                        if (u.is_zero()) continue;
                        if (h <= 0.0) {
                            C du = u.derivative()(z);
                            d1 = du; d2 = C(0, 1) * du;
                        } else {
                            d1 = (u(z + h) - u(z - h)) / (2 * h);
                            d2 = (u(z + C(0, h)) - u(z - C(0, h))) / (2 * h);
                        }
                        sup_psi = std::max(sup_psi, std::abs(d1 + C(0, 1) * d2));
                    }
                    total.sup_phi = std::max(total.sup_phi, sup_phi);
                    total.sup_psi = std::max(total.sup_psi, sup_psi);
                    continue;
                }
                // CP1 path: pick the target chart at the stencil center
                auto [w, t] = phi.cp1_value_canonical(s, z);
                const RationalFn& prep = phi.cp1_rep(s, t);
                if (h <= 0.0) {
                    C dp = prep.derivative()(z);
                    dphi_s_c = dp;
                    dphi_t_c = C(0, 1) * dp;
                } else {
                    dphi_s_c = (prep(z + h) - prep(z - h)) / (2 * h);
                    dphi_t_c = (prep(z + C(0, h)) - prep(z - C(0, h))) / (2 * h);
                }
                rphi = dphi_s_c + C(0, 1) * dphi_t_c;
                if (!psi.is_zero()) {
                    const RationalFn& urep = psi.cp1_comp(s, t);
                    C du_s, du_t;
                    if (h <= 0.0) {
                        C du = urep.derivative()(z);
                        du_s = du;
                        du_t = C(0, 1) * du;
                    } else {
                        du_s = (urep(z + h) - urep(z - h)) / (2 * h);
                        du_t = (urep(z + C(0, h)) - urep(z - C(0, h))) / (2 * h);
                    }
                    C dterm(0.0);
                    if (conn == Connection::LeviCivitaFS)
                        dterm = fs_christoffel(w) * (dphi_s_c + C(0, 1) * dphi_t_c) * urep(z);
                    rpsi = du_s + C(0, 1) * du_t + dterm;
                }
                if (!std::isfinite(std::abs(rphi)) || !std::isfinite(std::abs(rpsi)))
                    throw std::runtime_error("residual_global: NaN in field evaluation");
                total.sup_phi = std::max(total.sup_phi, std::abs(rphi));
                total.sup_psi = std::max(total.sup_psi, std::abs(rpsi));
            }
    }
    return total;
}

}  // namespace supercurve
