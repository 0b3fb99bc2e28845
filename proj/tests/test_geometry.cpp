#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "supercurve/bundle.hpp"
#include "supercurve/moebius.hpp"
#include "supercurve/sphere.hpp"

using namespace supercurve;

namespace {
std::mt19937_64 rng(42);

SpherePoint random_point() {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    SpherePoint p{std::uniform_int_distribution<int>(0, 1)(rng), C(u(rng), u(rng))};
    return p.canonical();
}
}  // namespace

TEST_CASE("chart round trip") {
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int i = 0; i < 200; ++i) {
        C z(u(rng), u(rng));
        if (std::abs(z) < 1e-3) continue;
        SpherePoint p{0, z};
        SpherePoint q{1, p.coord_in(1)};
        CHECK(std::abs(q.coord_in(0) - z) <= 1e-12 * std::abs(z));
    }
    // canonical form uses chart 0 iff |z| <= 1
    CHECK(SpherePoint{0, C(0.5)}.canonical().chart == 0);
    CHECK(SpherePoint{0, C(2.0)}.canonical().chart == 1);
    CHECK(SpherePoint{0, C(1.0)}.canonical().chart == 0);  // tie toward chart 0
}

TEST_CASE("sl2 determinant and sign carry") {
    for (int i = 0; i < 50; ++i) {
        Moebius m = Moebius::random(rng);
        CHECK(std::abs(m.det() - C(1.0)) <= 1e-12);
        Moebius neg = m.negated();
        SpherePoint p = random_point();
        CHECK(chordal_dist(m.apply(p), neg.apply(p)) <= 1e-12);
        // odd-degree lifts differ exactly by the sign
        CHECK(std::abs(m.lift_factor(-1, p) + neg.lift_factor(-1, p)) <= 1e-12);
        CHECK(std::abs(m.lift_factor(-2, p) - neg.lift_factor(-2, p)) <= 1e-12);
    }
}

TEST_CASE("compose identity and inverse") {
    Moebius m = Moebius::random(rng);
    Moebius id = Moebius::identity();
    CHECK(std::abs(m.compose(id).a - m.a) <= 1e-12);
    Moebius mi = m.compose(m.inverse());
    // ± identity matrix, same sphere action
    bool plus = std::abs(mi.a - C(1.0)) < 1e-10 && std::abs(mi.d - C(1.0)) < 1e-10;
    bool minus = std::abs(mi.a + C(1.0)) < 1e-10 && std::abs(mi.d + C(1.0)) < 1e-10;
    CHECK((plus || minus));
    for (int i = 0; i < 10; ++i) {
        SpherePoint p = random_point();
        CHECK(chordal_dist(mi.apply(p), p) <= 1e-10);
    }
}

TEST_CASE("composition acts as pointwise composition") {
    // rotation(π/2) twice acts as rotation(π) on sampled points
    Moebius r1 = Moebius::transvection(SpherePoint::origin(), SpherePoint::from_chart0(C(1.0)));
    Moebius r2 = r1.compose(r1);
    for (int i = 0; i < 10; ++i) {
        SpherePoint p = random_point();
        CHECK(chordal_dist(r2.apply(p), r1.apply(r1.apply(p))) <= 1e-12);
    }
    for (int i = 0; i < 40; ++i) {
        Moebius m1 = Moebius::random(rng), m2 = Moebius::random(rng);
        SpherePoint p = random_point();
        CHECK(chordal_dist(m1.compose(m2).apply(p), m1.apply(m2.apply(p))) <= 1e-10);
    }
}

TEST_CASE("transvection carries from to to") {
    for (int i = 0; i < 50; ++i) {
        SpherePoint p = random_point(), q = random_point();
        if (chordal_dist(p, q) > 1.999) continue;
        Moebius t = Moebius::transvection(p, q);
        CHECK(chordal_dist(t.apply(p), q) <= 1e-10);
        CHECK(t.is_rotation());
    }
}

TEST_CASE("conformal factor") {
    // rotations are FS isometries
    for (int i = 0; i < 30; ++i) {
        Moebius r = Moebius::random_rotation(rng);
        SpherePoint p = random_point();
        CHECK(r.conformal_factor(p) == doctest::Approx(1.0).epsilon(1e-12));
    }
    // m(z) = α z at the origin → α²
    Moebius s = Moebius::scaling(C(2.5));
    CHECK(s.conformal_factor(SpherePoint::origin()) == doctest::Approx(2.5 * 2.5).epsilon(1e-12));

    // m(z) = z + 1 at 0: cross-check against a symmetric finite difference of
    // chordal distances (the chordal metric is 2/(1+|z|²)|dz| infinitesimally)
    Moebius tr = Moebius::translation(C(1.0));
    double lambda = tr.conformal_factor(SpherePoint::origin());
    double h = 1e-6;
    SpherePoint a{0, C(-h)}, b{0, C(h)};
    double ratio = chordal_dist(tr.apply(a), tr.apply(b)) / chordal_dist(a, b);
    // chordal stretch → metric stretch √λ as h → 0
    CHECK(std::abs(ratio * ratio - lambda) <= 1e-6 * lambda);
}

TEST_CASE("group action invariant: conformal factor cocycle") {
    for (int i = 0; i < 30; ++i) {
        Moebius m1 = Moebius::random(rng), m2 = Moebius::random(rng);
        SpherePoint p = random_point();
        double lhs = m1.compose(m2).conformal_factor(p);
        double rhs = m1.conformal_factor(m2.apply(p)) * m2.conformal_factor(p);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
    }
}

TEST_CASE("lift factor basics") {
    SpherePoint p = random_point();
    CHECK(std::abs(Moebius::identity().lift_factor(-1, p) - C(1.0)) <= 1e-15);
    CHECK(std::abs(Moebius::identity().lift_factor(2, p) - C(1.0)) <= 1e-15);

    // cocycle law at the SL(2,ℂ) level, chart-0 trivializations throughout
    for (int i = 0; i < 50; ++i) {
        Moebius m = Moebius::random(rng), mt = Moebius::random(rng);
        SpherePoint q = random_point();
        if (q.chart != 0) continue;
        SpherePoint mtq = mt.apply(q);
        if (!mtq.representable_in(0)) continue;
        for (int d : {-2, -1, 1, 2}) {
            C lhs = m.compose(mt).lift_factor_in_chart(d, q.z, 0);
            C rhs = m.lift_factor_in_chart(d, mtq.coord_in(0), 0) *
                    mt.lift_factor_in_chart(d, q.z, 0);
            CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(lhs));
        }
    }
}

TEST_CASE("lift conformality: |Φv|² transports fiber weight by λ^{d/2}") {
    // Lem-2.3 shape: ⟨Φv,Φw⟩_{H at m(p)} = λ_m(p)^{d/2} ⟨v,w⟩_{H at p}
    for (int i = 0; i < 100; ++i) {
        Moebius m = Moebius::random(rng);
        SpherePoint p = random_point();
        for (int d : {-2, -1, 1, 2}) {
            double lhs = lift_weight_ratio(m, d, p);
            double rhs = std::pow(m.conformal_factor(p), d / 2.0);
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
        }
    }
}

TEST_CASE("rotation subgroup transports fiber weight exactly") {
    for (int i = 0; i < 100; ++i) {
        Moebius r = Moebius::random_rotation(rng);
        SpherePoint p = random_point();
        for (int d : {-2, -1, 1, 2})
            CHECK(lift_weight_ratio(r, d, p) == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("bundle_inner positive definite and H2 shape") {
    TargetSpec cp1{Target::CPn, 1};
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
        SpherePoint p = random_point();
        std::vector<C> w{C(u(rng), u(rng))};
        auto h = target_metric_at(cp1, w);
        std::vector<C> v{C(u(rng), u(rng))};
        double q = bundle_inner(-1, p, h, v, v);
        if (std::abs(v[0]) > 0.0) CHECK(q > 0.0);
        std::vector<C> zero{C(0.0)};
        CHECK(bundle_inner(-1, p, h, zero, v) == 0.0);
    }
    // non-positive metric rejected
    std::vector<C> bad{C(-1.0)};
    std::vector<C> v{C(1.0)};
    CHECK_THROWS(bundle_inner(-1, SpherePoint::origin(), bad, v, v));
}

TEST_CASE("flat and cp1 target distances") {
    TargetSpec flat{Target::FlatCn, 2};
    CHECK(target_dist(flat, {C(0.0), C(0.0)}, {C(3.0), C(4.0)}) == doctest::Approx(5.0));
    TargetSpec cp1{Target::CPn, 1};
    // FS distance: small increments scale like |dw|/(1+|w|²)
    double d = target_dist(cp1, {C(0.0)}, {C(1e-6)});
    CHECK(d == doctest::Approx(1e-6).epsilon(1e-6));
    // transport preserves fiber norms (isometry): |τ|·(1+|w1|²)/(1+|w2|²) = 1
    C tau = transport_factor_cp1(C(0.2, 0.1), C(-0.4, 0.3));
    double n1 = 1.0 + std::norm(C(0.2, 0.1)), n2 = 1.0 + std::norm(C(-0.4, 0.3));
    CHECK(std::abs(tau) * n1 / n2 == doctest::Approx(1.0).epsilon(1e-12));
}
