#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "supercurve/energy.hpp"

using namespace supercurve;

namespace {
const double kPi = std::acos(-1.0);
std::mt19937_64 rng(99);
}  // namespace

TEST_CASE("energy quantization: E(z^k) = k pi") {
    for (int k = 1; k <= 5; ++k) {
        auto [phi, psi] = make_instance("power", {.k = k});
        CHECK(energy_curve(phi, Region::full_sphere(), 1e-9) ==
              doctest::Approx(k * kPi).epsilon(1e-7));
    }
    GlobalCurve cst = GlobalCurve::constant({Target::CPn, 1}, {C(0.3, 0.8)});
    CHECK(energy_curve(cst, Region::full_sphere()) == 0.0);
}

TEST_CASE("hbar estimate is the sphere area") {
    CHECK(hbar_estimate(1e-9) == doctest::Approx(kPi).epsilon(1e-7));
}

TEST_CASE("zero section has zero energy; scaling laws") {
    auto [phi, zero] = make_instance("identity");
    CHECK(energy_section(zero, Region::full_sphere()) == 0.0);

    for (int d : {-1, -2}) {
        CatalogParams cp;
        cp.seed = 11 + d;
        cp.maxdeg = 2;
        cp.d = d;
        auto [c, s] = make_instance("random", cp);
        if (s.is_zero()) continue;
        double e1 = energy_section(s, Region::full_sphere(), 1e-9);
        C scale(1.7, 0.0);
        SuperSection s2 = SuperSection::cp1(d, c, s.cp1_comp(0, 0) * scale);
        double e2 = energy_section(s2, Region::full_sphere(), 1e-9);
        double expo = (d == -1) ? 4.0 : 2.0;
        CHECK(e2 == doctest::Approx(std::pow(std::abs(scale), expo) * e1).epsilon(1e-9));
    }
}

TEST_CASE("conformal invariance of curve and section energy") {
    std::uniform_real_distribution<double> u(-0.8, 0.8);
    for (int i = 0; i < 12; ++i) {
        CatalogParams cp;
        cp.seed = 40 + i;
        cp.maxdeg = 3;
        cp.d = (i % 2) ? -1 : -2;
        auto [phi, psi] = make_instance("random", cp);
        Moebius m = Moebius::random(rng, 0.6);
        SpherePoint c = SpherePoint::from_chart0(C(u(rng), u(rng)));
        double r = 0.3 + 0.4 * std::abs(u(rng));
        Region U = Region::disc(c, r);
        Region Uback = Region::moebius_image(c, r, m.inverse());  // m^{-1}(U)

        double ephi = energy_curve(phi, U, 1e-9);
        double ephi_m = energy_curve(pullback_curve(phi, m), Uback, 1e-9);
        CHECK(std::abs(ephi_m - ephi) <= 1e-6 * (1.0 + ephi));

        double epsi = energy_section(psi, U, 1e-9);
        double epsi_m = energy_section(pullback_section(psi, m), Uback, 1e-9);
        CHECK(std::abs(epsi_m - epsi) <= 1e-6 * (1.0 + epsi));
    }
}

TEST_CASE("degree law over the full sphere under pullback") {
    auto [phi, psi] = make_instance("power", {.k = 3});
    Moebius m = Moebius::random(rng, 0.8);
    CHECK(energy_curve(pullback_curve(phi, m), Region::full_sphere(), 1e-8) ==
          doctest::Approx(3 * kPi).epsilon(1e-6));
}

TEST_CASE("local super energy: identity over the unit disc") {
    auto phi = [](C z) { return cvec(z); };
    auto zero = [](C) { return cvec(C(0.0)); };
    LocalPair lp = LocalPair::from_effective_fields(
        PlanarDomain::square(1.5), 1, phi, zero, [](C) { return standard_J(1); },
        [](C) { return Mat::Zero(2, 2); });
    // ∫_{B_1} |dφ|² = 2π (|dφ|² = 2), ψ contributes nothing
    CHECK(local_super_energy(lp, C(0.0), 1.0, 1e-9) == doctest::Approx(2 * kPi).epsilon(1e-6));
    LocalPair trivial = LocalPair::from_effective_fields(
        PlanarDomain::square(1.5), 1, zero, zero, [](C) { return standard_J(1); },
        [](C) { return Mat::Zero(2, 2); });
    CHECK(local_super_energy(trivial, C(0.0), 1.0, 1e-9) == doctest::Approx(0.0));
}

TEST_CASE("aitken acceleration") {
    // geometric ladder x_k = L + c q^k is accelerated exactly
    std::vector<double> x;
    for (int k = 0; k < 5; ++k) x.push_back(2.5 + 0.8 * std::pow(0.5, k));
    CHECK(aitken_last3(x) == doctest::Approx(2.5).epsilon(1e-12));
    CHECK(aitken_last3({1.0}) == 1.0);
}

TEST_CASE("mass profile: constant family has no concentration") {
    auto [phi, psi] = make_instance("power", {.k = 2});
    Family fam = constant_family(phi, psi, geometric_ladder(10.0, 3));
    MassProfile mp =
        mass_profile(fam, SpherePoint::origin(), {0.4, 0.2, 0.1, 0.05}, 1e9, 1e-7);
    CHECK(std::abs(mp.m_phi) <= 1e-3);
    CHECK(std::abs(mp.m_psi) <= 1e-3);
    CHECK(!mp.monotone_warning);
}

TEST_CASE("mass profile: bubble family concentrates pi at the origin") {
    Family fam = bubble_family(1.0, geometric_ladder(2500.0, 3));
    MassProfile mp = mass_profile(fam, SpherePoint::origin(), {0.4, 0.2, 0.1}, 1e5, 1e-7);
    CHECK(mp.m_phi == doctest::Approx(kPi).epsilon(1e-2 / kPi));
    CHECK(std::abs(mp.m_psi) <= 1e-6);
    // no concentration at z₀ = 1
    MassProfile away =
        mass_profile(fam, SpherePoint::from_chart0(C(1.0)), {0.2, 0.1, 0.05}, 1e5, 1e-7);
    CHECK(std::abs(away.m_phi) <= 1e-3);
}

TEST_CASE("experimental degree flag") {
    CHECK(!section_energy_experimental(-1));
    CHECK(!section_energy_experimental(-2));
    CHECK(section_energy_experimental(-3));
    CHECK(section_energy_experimental(1));
}
