#include "supercurve/energy.hpp"

#include <algorithm>
#include <cmath>

namespace supercurve {

double energy_curve(const GlobalCurve& phi, const Region& region, double rel_tol) {
    if (phi.is_constant()) return 0.0;
    // energy_density is already the invariant ½|dφ|² (the ½ and the conformal
    // factor 2 of holomorphic maps cancel)
    auto density = [&](const SpherePoint& p) { return phi.energy_density(p); };
    return integrate(density, region, rel_tol);
}

double energy_section(const SuperSection& psi, const Region& region, double rel_tol) {
    if (psi.is_zero()) return 0.0;
    int d = psi.bundle_degree();
    double expo = -2.0 / double(d);  // |ψ|^{-4/d} = (|ψ|²)^{-2/d}
    auto density = [&](const SpherePoint& p) {
        double n2 = psi.norm_sq(p);
        return std::pow(n2, expo);
    };
    return 0.5 * integrate(density, region, rel_tol);
}

double local_super_energy(const LocalPair& lp, C center, double radius, double rel_tol,
                          double fd_step) {
    bool exact = lp.has_exact_field_derivatives();
    auto density = [&](C z) {
        Vec ps, pt, ss, st;
        if (exact) {
            ps = lp.dphi_s(z); pt = lp.dphi_t(z);
            ss = lp.dpsi_s(z); st = lp.dpsi_t(z);
        } else {
            double h = fd_step;
            ps = (lp.phi(z + h) - lp.phi(z - h)) / (2 * h);
            pt = (lp.phi(z + C(0, h)) - lp.phi(z - C(0, h))) / (2 * h);
            ss = (lp.psi(z + h) - lp.psi(z - h)) / (2 * h);
            st = (lp.psi(z + C(0, h)) - lp.psi(z - C(0, h))) / (2 * h);
        }
        return ps.squaredNorm() + pt.squaredNorm() + lp.psi(z).squaredNorm() + ss.squaredNorm() +
               st.squaredNorm();
    };
    return integrate_planar_disc(density, center, radius, rel_tol);
}

double hbar_estimate(double rel_tol) {
    // min over degree-1 rational maps; every Möbius image of the identity has
    // the same energy by conformal invariance, sampled over a fixed set.
    std::mt19937_64 rng(20240915ULL);
    double best = std::numeric_limits<double>::infinity();
    GlobalCurve id_curve = GlobalCurve::cp1(RationalFn::x());
    best = std::min(best, energy_curve(id_curve, Region::full_sphere(), rel_tol));
    for (int k = 0; k < 4; ++k) {
        Moebius m = Moebius::random(rng, 0.7);
        best = std::min(best,
                        energy_curve(pullback_curve(id_curve, m), Region::full_sphere(), rel_tol));
    }
    return best;
}

double aitken_last3(const std::vector<double>& x) {
    if (x.empty()) throw std::invalid_argument("aitken_last3: empty ladder");
    if (x.size() < 3) return x.back();
    double a = x[x.size() - 3], b = x[x.size() - 2], c = x.back();
    double denom = (c - b) - (b - a);
    double scale = std::abs(a) + std::abs(b) + std::abs(c) + 1e-300;
    if (std::abs(denom) < 1e-13 * scale) return c;
    double acc = c - (c - b) * (c - b) / denom;
    // Δ² can misbehave on non-geometric tails; never extrapolate further than
    // one full step beyond the last value.
    if (std::abs(acc - c) > 2.0 * std::abs(c - b) + 1e-12 * scale) return c;
    return acc;
}

MassProfile mass_profile(const Family& family, const SpherePoint& z0,
                         std::vector<double> epsilons, double nu_max, double rel_tol) {
    std::sort(epsilons.begin(), epsilons.end(), std::greater<double>());
    MassProfile mp;
    mp.center = z0;
    mp.epsilons = epsilons;
    std::vector<double> nus;
    for (double nu : family.nu_ladder)
        if (nu <= nu_max) nus.push_back(nu);
    if (nus.empty()) throw std::invalid_argument("mass_profile: empty nu ladder");

    std::vector<std::pair<GlobalCurve, SuperSection>> members;
    for (double nu : nus) members.push_back(family.at(nu));

    for (double eps : epsilons) {
        Region ball = Region::disc(z0, eps);
        std::vector<double> lphi, lpsi;
        for (auto& [c, s] : members) {
            lphi.push_back(energy_curve(c, ball, rel_tol));
            lpsi.push_back(energy_section(s, ball, rel_tol));
        }
        mp.mass_phi.push_back(aitken_last3(lphi));
        mp.mass_psi.push_back(aitken_last3(lpsi));
        mp.ladder_phi.push_back(std::move(lphi));
        mp.ladder_psi.push_back(std::move(lpsi));
    }
    for (size_t i = 1; i < mp.mass_phi.size(); ++i) {
        if (mp.mass_phi[i] > mp.mass_phi[i - 1] + 1e-8) mp.monotone_warning = true;
        if (mp.mass_psi[i] > mp.mass_psi[i - 1] + 1e-8) mp.monotone_warning = true;
    }
    mp.m_phi = aitken_last3(mp.mass_phi);
    mp.m_psi = aitken_last3(mp.mass_psi);
    return mp;
}

// ---------------------------------------------------------------------------
// catalog families

Family constant_family(const GlobalCurve& phi, const SuperSection& psi,
                       std::vector<double> ladder) {
    return Family{[phi, psi](double) { return std::make_pair(phi, psi); }, std::move(ladder)};
}

Family bubble_family(double coef, std::vector<double> ladder, Poly section_g, int d) {
    if (coef == 0.0) throw std::invalid_argument("bubble_family: coef must be nonzero");
    if (section_g.degree() > 3)
        throw std::invalid_argument("bubble_family: section numerator degree exceeds H⁰ bound");
    return Family{[coef, section_g, d](double nu) {
                      GlobalCurve phi = GlobalCurve::cp1(
                          RationalFn(Poly{{C(coef / nu), C(0.0), C(1.0)}}, Poly::x()));
                      SuperSection psi =
                          section_g.is_zero()
                              ? SuperSection::zero(d, phi)
                              : SuperSection::cp1(d, phi, RationalFn(section_g, Poly::monomial(2)));
                      return std::make_pair(phi, psi);
                  },
                  std::move(ladder)};
}

Family pullback_family(const GlobalCurve& phi, const SuperSection& psi,
                       std::vector<double> ladder) {
    return Family{[phi, psi](double nu) {
                      Moebius m = Moebius::scaling(C(nu));
                      return std::make_pair(pullback_curve(phi, m), pullback_section(psi, m));
                  },
                  std::move(ladder)};
}

}  // namespace supercurve
