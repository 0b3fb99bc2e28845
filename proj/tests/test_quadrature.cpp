#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "supercurve/quadrature.hpp"

using namespace supercurve;

namespace {
const double kPi = std::acos(-1.0);
}

TEST_CASE("full sphere FS area is pi") {
    auto one = [](const SpherePoint&) { return 1.0; };
    CHECK(integrate(one, Region::full_sphere(), 1e-9) == doctest::Approx(kPi).epsilon(1e-8));
}

TEST_CASE("zero density integrates to zero exactly") {
    auto zero = [](const SpherePoint&) { return 0.0; };
    CHECK(integrate(zero, Region::full_sphere(), 1e-9) == 0.0);
}

TEST_CASE("disc additivity: B_R = B_r + A(r,R)") {
    auto f = [](const SpherePoint& p) {
        C z = p.chart == 0 ? p.z : (p.z == C(0.0) ? C(1e9) : C(1.0) / p.z);
        return std::exp(-0.3 * std::norm(z)) + 0.2 * z.real();
    };
    SpherePoint c = SpherePoint::from_chart0(C(0.3, -0.2));
    double br = integrate(f, Region::disc(c, 0.4), 1e-9);
    double ann = integrate(f, Region::annulus(c, 0.4, 1.7), 1e-9);
    double bR = integrate(f, Region::disc(c, 1.7), 1e-9);
    CHECK(bR == doctest::Approx(br + ann).epsilon(1e-8));
}

TEST_CASE("complement of a disc plus the disc is the sphere") {
    auto f = [](const SpherePoint& p) { return 1.0 + 0.1 * unit_vector(p)[0]; };
    SpherePoint c = SpherePoint::from_chart0(C(-0.5, 0.1));
    double inside = integrate(f, Region::disc(c, 0.6), 1e-9);
    double outside = integrate(f, Region::complement({{c, 0.6}}), 1e-9);
    double whole = integrate(f, Region::full_sphere(), 1e-9);
    CHECK(inside + outside == doctest::Approx(whole).epsilon(1e-8));
}

TEST_CASE("rotated disc integral matches area of cap") {
    // FS area of the cap {|u| < r} is π r²/(1+r²), rotation invariant
    auto one = [](const SpherePoint&) { return 1.0; };
    for (double r : {0.3, 1.0, 2.5}) {
        double expect = kPi * r * r / (1.0 + r * r);
        SpherePoint c = SpherePoint::from_chart0(C(0.8, -0.4));
        CHECK(integrate(one, Region::disc(c, r), 1e-9) == doctest::Approx(expect).epsilon(1e-8));
    }
}

TEST_CASE("moebius image region via substitution") {
    std::mt19937_64 rng(7);
    auto one = [](const SpherePoint&) { return 1.0; };
    Moebius m = Moebius::random(rng);
    SpherePoint c = SpherePoint::from_chart0(C(0.2, 0.1));
    double r = 0.5;
    // area of m(B_r(c)) computed by substitution = ∫_{B} λ_m dvol
    double via_sub = integrate(one, Region::moebius_image(c, r, m), 1e-9);
    auto lam = [&](const SpherePoint& p) { return m.conformal_factor(p); };
    double direct = integrate(lam, Region::disc(c, r), 1e-9);
    CHECK(via_sub == doctest::Approx(direct).epsilon(1e-9));
}

TEST_CASE("planar disc quadrature") {
    auto f = [](C z) { return std::norm(z); };
    // ∫_{B_r} |z|² = π r⁴ / 2
    CHECK(integrate_planar_disc(f, C(0.0), 1.5, 1e-10) ==
          doctest::Approx(kPi * std::pow(1.5, 4) / 2.0).epsilon(1e-9));
}

TEST_CASE("non convergence raises with best estimate attached") {
    // genuinely singular integrand inside the region
    auto f = [](const SpherePoint& p) {
        double a = p.chart == 0 ? std::abs(p.z) : 1.0 / std::max(1e-300, std::abs(p.z));
        return 1.0 / std::max(1e-300, a * a);
    };
    CHECK_THROWS_AS(integrate(f, Region::disc(SpherePoint::origin(), 1.0), 1e-10),
                    QuadratureError);
}

TEST_CASE("region membership") {
    Region d = Region::disc(SpherePoint::from_chart0(C(0.5)), 0.3);
    CHECK(d.contains(SpherePoint::from_chart0(C(0.5))));
    CHECK(!d.contains(SpherePoint::from_chart0(C(-0.5))));
    Region a = Region::annulus(SpherePoint::origin(), 0.5, 2.0);
    CHECK(a.contains(SpherePoint::from_chart0(C(1.0, 0.2))));
    CHECK(!a.contains(SpherePoint::origin()));
    CHECK(!a.contains(SpherePoint::infinity_point()));
}
