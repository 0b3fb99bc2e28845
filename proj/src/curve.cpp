#include "supercurve/curve.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "supercurve/polyroots.hpp"

namespace supercurve {

namespace {

constexpr double kCoprimalityFloor = 1e-10;

RationalFn mul_monomial(const RationalFn& f, int k) {
    if (k >= 0) return RationalFn(f.num() * Poly::monomial(k), f.den());
    return RationalFn(f.num(), f.den() * Poly::monomial(-k));
}

RationalFn compose_inversion(const RationalFn& f) { return f.compose_mb(C(0), C(1), C(1), C(0)); }

}  // namespace

double resultant_abs(const Poly& p, const Poly& q) {
    int m = p.degree(), n = q.degree();
    if (m < 0 || n < 0) return 0.0;  // a zero polynomial shares every root
    if (m == 0 && n == 0) return 1.0;
    double sp = p.coeff_scale(), sq = q.coeff_scale();
    Eigen::MatrixXcd S = Eigen::MatrixXcd::Zero(m + n, m + n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k <= m; ++k) S(i, i + k) = p.coeff(m - k) / sp;
    for (int i = 0; i < m; ++i)
        for (int k = 0; k <= n; ++k) S(n + i, i + k) = q.coeff(n - k) / sq;
    return std::abs(S.determinant());
}

std::optional<std::vector<C>> TargetPoint::affine() const {
    if (target.kind == Target::FlatCn) return coords;
    C x0 = coords[0];
    double scale = 0.0;
    for (auto& c : coords) scale = std::max(scale, std::abs(c));
    if (std::abs(x0) < 1e-14 * scale) return std::nullopt;
    std::vector<C> w(target.n);
    for (int j = 0; j < target.n; ++j) w[j] = coords[j + 1] / x0;
    return w;
}

double target_point_dist(const TargetPoint& p, const TargetPoint& q) {
    if (!(p.target == q.target)) throw std::invalid_argument("target_point_dist: mixed targets");
    if (p.target.kind == Target::FlatCn) {
        double s = 0.0;
        for (size_t j = 0; j < p.coords.size(); ++j) s += std::norm(p.coords[j] - q.coords[j]);
        return std::sqrt(s);
    }
    // FS distance via atan2(|a∧b|, |⟨a,b⟩|): the wedge norm is computed
    // componentwise, so nearby points do not cancel
    C inner(0.0);
    double wedge2 = 0.0;
    for (size_t j = 0; j < p.coords.size(); ++j) {
        inner += p.coords[j] * std::conj(q.coords[j]);
        for (size_t k = j + 1; k < p.coords.size(); ++k)
            wedge2 += std::norm(p.coords[j] * q.coords[k] - p.coords[k] * q.coords[j]);
    }
    return std::atan2(std::sqrt(wedge2), std::abs(inner));
}

// ---------------------------------------------------------------------------
// GlobalCurve

GlobalCurve GlobalCurve::cp1(RationalFn phi) {
    GlobalCurve g;
    g.target_ = {Target::CPn, 1};
    g.cp1_rep_[0][0] = std::move(phi);
    g.finalize_cp1();
    return g;
}

void GlobalCurve::finalize_cp1() {
    const Poly &N = cp1_rep_[0][0].num(), &D = cp1_rep_[0][0].den();
    degree_ = std::max(N.degree(), D.degree());
    if (degree_ < 0) throw std::invalid_argument("GlobalCurve: zero map has no projective value");
    coprimality_ = resultant_abs(N, D);
    if (degree_ > 0 && coprimality_ < kCoprimalityFloor)
        throw std::invalid_argument("GlobalCurve: homogeneous components share a zero");
    cp1_rep_[0][1] = cp1_rep_[0][0].reciprocal();
    cp1_rep_[1][0] = cancel_common_roots(compose_inversion(cp1_rep_[0][0]));
    cp1_rep_[1][1] = cancel_common_roots(compose_inversion(cp1_rep_[0][1]));

    // homogeneous lifts (X0, X1) = (den, num), degree-matched
    auto pad = [&](const Poly& p) { return p; };
    lift0_ = {pad(D), pad(N)};
    lift1_.clear();
    for (auto& F : lift0_) {
        auto [num, den] = compose_moebius(F, C(0), C(1), C(1), C(0));
        (void)den;
        lift1_.push_back(num * Poly::monomial(degree_ - std::max(F.degree(), 0)));
    }
    dlift0_ = {lift0_[0].derivative(), lift0_[1].derivative()};
    dlift1_ = {lift1_[0].derivative(), lift1_[1].derivative()};
}

GlobalCurve GlobalCurve::cpn(std::vector<Poly> lift) {
    if (lift.size() < 2) throw std::invalid_argument("GlobalCurve::cpn: need n+1 components");
    if (lift.size() == 2) return cp1(RationalFn(lift[1], lift[0]));
    GlobalCurve g;
    g.target_ = {Target::CPn, (int)lift.size() - 1};
    int deg = -1;
    for (auto& F : lift) deg = std::max(deg, F.degree());
    if (deg < 0) throw std::invalid_argument("GlobalCurve::cpn: zero lift");
    g.degree_ = deg;
    g.lift0_ = lift;
    // pairwise resultants bound the common-zero measure from below
    double cop = std::numeric_limits<double>::infinity();
    bool nontrivial = false;
    for (size_t i = 0; i < lift.size(); ++i)
        for (size_t j = i + 1; j < lift.size(); ++j) {
            if (lift[i].degree() < 1 && lift[j].degree() < 1) continue;
            nontrivial = true;
            cop = std::min(cop, resultant_abs(lift[i], lift[j]));
        }
    g.coprimality_ = nontrivial ? cop : 1.0;
    if (deg > 0 && g.coprimality_ < kCoprimalityFloor)
        throw std::invalid_argument("GlobalCurve: homogeneous components share a zero");
    for (auto& F : g.lift0_) {
        auto [num, den] = compose_moebius(F, C(0), C(1), C(1), C(0));
        (void)den;
        g.lift1_.push_back(num * Poly::monomial(deg - std::max(F.degree(), 0)));
    }
    for (auto& F : g.lift0_) g.dlift0_.push_back(F.derivative());
    for (auto& F : g.lift1_) g.dlift1_.push_back(F.derivative());
    return g;
}

GlobalCurve GlobalCurve::flat(std::vector<Poly> components) {
    if (components.empty()) throw std::invalid_argument("GlobalCurve::flat: empty");
    GlobalCurve g;
    g.target_ = {Target::FlatCn, (int)components.size()};
    int deg = 0;
    for (auto& p : components) deg = std::max(deg, std::max(p.degree(), 0));
    g.degree_ = deg;
    g.flat_ = std::move(components);
    return g;
}

GlobalCurve GlobalCurve::constant(const TargetSpec& t, const std::vector<C>& v) {
    if ((int)v.size() != t.n) throw std::invalid_argument("GlobalCurve::constant: bad dimension");
    if (t.kind == Target::FlatCn) {
        std::vector<Poly> comps;
        for (auto& c : v) comps.push_back(Poly::constant(c));
        return flat(comps);
    }
    if (t.n == 1) return cp1(RationalFn::constant(v[0]));
    std::vector<Poly> lift{Poly::constant(C(1.0))};
    for (auto& c : v) lift.push_back(Poly::constant(c));
    return cpn(lift);
}

bool GlobalCurve::is_constant(double) const { return degree_ == 0; }

TargetPoint GlobalCurve::value(const SpherePoint& p) const {
    TargetPoint tp;
    tp.target = target_;
    if (target_.kind == Target::FlatCn) {
        C z;
        if (p.chart == 0) {
            z = p.z;
        } else if (p.z != C(0.0)) {
            z = C(1.0) / p.z;
        } else if (degree_ == 0) {
            z = C(0.0);
        } else {
            throw std::domain_error("flat curve: nonconstant polynomial map has no value at infinity");
        }
        for (auto& comp : flat_) tp.coords.push_back(comp(z));
        return tp;
    }
    const auto& lift = (p.chart == 0) ? lift0_ : lift1_;
    for (auto& F : lift) tp.coords.push_back(F(p.z));
    return tp;
}

std::pair<C, int> GlobalCurve::cp1_value_canonical(int s, C zeta) const {
    auto [v, finite] = cp1_rep_[s][0].eval_projective(zeta);
    return {v, finite ? 0 : 1};
}

double GlobalCurve::energy_density(const SpherePoint& p) const {
    double conf = 1.0 + std::norm(p.z);
    conf *= conf;
    if (target_.kind == Target::FlatCn) {
        if (degree_ == 0) return 0.0;
        C z;
        double jac = 1.0;  // |dz/dζ|² for the chart-1 coordinate ζ
        if (p.chart == 0) {
            z = p.z;
        } else if (p.z != C(0.0)) {
            z = C(1.0) / p.z;
            jac = std::norm(z) * std::norm(z);
        } else {
            return std::numeric_limits<double>::infinity();
        }
        double s = 0.0;
        for (auto& comp : flat_) s += std::norm(comp.derivative()(z));
        return s * jac * conf;
    }
    const auto& F = (p.chart == 0) ? lift0_ : lift1_;
    const auto& dF = (p.chart == 0) ? dlift0_ : dlift1_;
    double A = 0.0, B = 0.0;
    C I(0.0);
    for (size_t k = 0; k < F.size(); ++k) {
        C f = F[k](p.z), df = dF[k](p.z);
        A += std::norm(f);
        B += std::norm(df);
        I += df * std::conj(f);
    }
    double e = (A * B - std::norm(I)) / (A * A);
    return std::max(0.0, e) * conf;
}

GlobalCurve pullback_curve(const GlobalCurve& phi, const Moebius& m) {
    if (phi.target_.kind == Target::FlatCn) {
        if (phi.degree_ == 0) return phi;
        if (std::abs(m.c) > 1e-14)
            throw std::invalid_argument(
                "pullback_curve: nonconstant flat curves only compose with affine maps");
        std::vector<Poly> comps;
        C a = m.a / m.d, b = m.b / m.d;
        for (auto& p : phi.flat_) {
            auto [num, den] = compose_moebius(p, a, b, C(0), C(1));
            (void)den;
            comps.push_back(num);
        }
        return GlobalCurve::flat(comps);
    }
    if (phi.target_.n == 1)
        return GlobalCurve::cp1(phi.cp1_rep_[0][0].compose_mb(m.a, m.b, m.c, m.d));
    std::vector<Poly> lift;
    Poly lin{{m.d, m.c}};
    for (auto& F : phi.lift0_) {
        auto [num, den] = compose_moebius(F, m.a, m.b, m.c, m.d);
        (void)den;
        Poly g = num;
        for (int k = std::max(F.degree(), 0); k < phi.degree_; ++k) g = g * lin;
        lift.push_back(g);
    }
    return GlobalCurve::cpn(lift);
}

double curve_sup_dist(const GlobalCurve& a, const GlobalCurve& b, int samples) {
    double sup = 0.0;
    for (auto& p : sphere_samples(samples))
        sup = std::max(sup, target_point_dist(a.value(p), b.value(p)));
    return sup;
}

bool curve_close(const GlobalCurve& a, const GlobalCurve& b, double tol, int samples) {
    return curve_sup_dist(a, b, samples) <= tol;
}

// ---------------------------------------------------------------------------
// SuperSection

SuperSection SuperSection::cp1(int d, GlobalCurve phi, RationalFn u00) {
    if (d == 0) throw std::invalid_argument("SuperSection: bundle degree 0 excluded");
    if (phi.target().kind != Target::CPn || phi.target().n != 1)
        throw std::invalid_argument("SuperSection::cp1: curve target must be CP1");
    SuperSection s;
    s.d_ = d;
    s.phi_ = std::move(phi);
    s.u_[0][0] = std::move(u00);
    s.build_reps_cp1();
    s.validate();
    return s;
}

SuperSection SuperSection::flat(int d, GlobalCurve phi, std::vector<RationalFn> u0) {
    if (d == 0) throw std::invalid_argument("SuperSection: bundle degree 0 excluded");
    if (phi.target().kind != Target::FlatCn)
        throw std::invalid_argument("SuperSection::flat: curve target must be flat");
    if ((int)u0.size() != phi.target().n)
        throw std::invalid_argument("SuperSection::flat: component count mismatch");
    SuperSection s;
    s.d_ = d;
    s.phi_ = std::move(phi);
    s.uflat_[0] = std::move(u0);
    s.build_reps_flat();
    s.validate();
    return s;
}

SuperSection SuperSection::zero(int d, GlobalCurve phi) {
    const TargetSpec ts = phi.target();
    if (ts.kind == Target::FlatCn) return flat(d, std::move(phi), std::vector<RationalFn>(ts.n));
    if (ts.n == 1) return cp1(d, std::move(phi), RationalFn());
    // CPn (n >= 2): only the zero section is representable here
    SuperSection s;
    s.d_ = d;
    s.phi_ = std::move(phi);
    return s;
}

bool SuperSection::is_zero() const {
    if (phi_.target().kind == Target::FlatCn) {
        for (auto& u : uflat_[0])
            if (!u.is_zero()) return false;
        return true;
    }
    if (phi_.target().n > 1) return true;
    return u_[0][0].is_zero();
}

void SuperSection::build_reps_cp1() {
    u_[0][0] = cancel_common_roots(u_[0][0]);
    // source chart swap: u_{1,t}(w) = w^d · u_{0,t}(1/w)
    u_[1][0] = cancel_common_roots(mul_monomial(compose_inversion(u_[0][0]), d_));
    // target chart swap: u_{s,1} = -u_{s,0}/φ_{s,0}². Undefined when φ ≡ 0
    // (the canonical target chart is then always 0 and the rep never used).
    const RationalFn& phi00 = phi_.cp1_rep(0, 0);
    if (phi00.num().is_zero()) {
        rep_ok_[0][1] = rep_ok_[1][1] = false;
        return;
    }
    RationalFn inv_sq(phi00.den() * phi00.den(), phi00.num() * phi00.num());
    u_[0][1] = cancel_common_roots(u_[0][0] * inv_sq * C(-1.0));
    u_[1][1] = cancel_common_roots(mul_monomial(compose_inversion(u_[0][1]), d_));
}

void SuperSection::build_reps_flat() {
    uflat_[1].clear();
    for (auto& u : uflat_[0])
        uflat_[1].push_back(cancel_common_roots(mul_monomial(compose_inversion(u), d_)));
}

void SuperSection::validate() const {
    if (phi_.target().kind == Target::CPn && phi_.target().n > 1)
        throw std::invalid_argument(
            "SuperSection: CPn (n>=2) sections are not supported; use CP1 or a flat target");
    if (is_zero()) return;

    // Global smoothness is a functional statement: the invariant |ψ|² stays
    // bounded as rings shrink onto any candidate pole of the chart reps.
    // Unbounded growth between ring radii flags a genuine pole; removable
    // common factors and frame poles over target infinity stay bounded.
    auto ring_blows = [&](int s, C root) {
        double v_outer = 0.0, v_inner = 0.0;
        for (int k = 0; k < 8; ++k) {
            C dir = std::polar(1.0, 0.7853981633974483 * k + 0.31);
            v_outer = std::max(v_outer, norm_sq(SpherePoint{s, root + 1e-3 * dir}));
            v_inner = std::max(v_inner, norm_sq(SpherePoint{s, root + 1e-5 * dir}));
        }
        return v_inner > 50.0 * std::max(v_outer, 1e-30);
    };
    for (int s = 0; s < 2; ++s) {
        std::vector<C> candidates;
        if (phi_.target().kind == Target::FlatCn) {
            for (auto& u : uflat_[s])
                for (C r : poly_roots(u.den())) candidates.push_back(r);
        } else {
            for (int t = 0; t < 2; ++t) {
                if (!rep_ok_[s][t]) continue;
                for (C r : poly_roots(u_[s][t].den())) candidates.push_back(r);
            }
        }
        for (C root : candidates)
            if (std::abs(root) <= 1.02 && ring_blows(s, root))
                throw std::invalid_argument(
                    "SuperSection: chart representation has a pole (not globally smooth)");
    }
}

std::vector<C> SuperSection::components(int s, int t, C zeta) const {
    if (phi_.target().kind == Target::FlatCn) {
        std::vector<C> v;
        for (auto& u : uflat_[s]) v.push_back(u.is_zero() ? C(0.0) : u(zeta));
        return v;
    }
    const RationalFn& u = u_[s][t];
    return {u.is_zero() ? C(0.0) : u(zeta)};
}

double SuperSection::norm_sq(const SpherePoint& p) const {
    int s = p.chart;
    C zeta = p.z;
    double w = fiber_weight(d_, zeta);
    if (phi_.target().kind == Target::FlatCn) {
        double acc = 0.0;
        for (auto& u : uflat_[s])
            if (!u.is_zero()) acc += std::norm(u(zeta));
        return 0.5 * acc * w;
    }
    if (phi_.target().n > 1) return 0.0;  // zero section
    if (u_[0][0].is_zero()) return 0.0;
    auto [wv, t] = phi_.cp1_value_canonical(s, zeta);
    C uval = u_[s][t](zeta);
    double hw = 1.0 + std::norm(wv);
    return 0.5 * std::norm(uval) / (hw * hw) * w;
}

SuperSection pullback_section(const SuperSection& psi, const Moebius& m) {
    if (psi.bundle_degree() == 0) throw std::invalid_argument("pullback_section: degree 0");
    GlobalCurve newphi = pullback_curve(psi.curve(), m);
    Poly lin{{m.d, m.c}};
    auto lift_mult = [&](const RationalFn& f) {
        RationalFn g = f.compose_mb(m.a, m.b, m.c, m.d);
        int d = psi.bundle_degree();
        Poly pw = Poly::constant(C(1.0));
        for (int k = 0; k < std::abs(d); ++k) pw = pw * lin;
        RationalFn out = (d >= 0) ? RationalFn(g.num() * pw, g.den())
                                  : RationalFn(g.num(), g.den() * pw);
        return cancel_common_roots(out);
    };
    if (psi.curve().target().kind == Target::FlatCn) {
        std::vector<RationalFn> comps;
        for (auto& u : psi.flat_comp(0)) comps.push_back(u.is_zero() ? u : lift_mult(u));
        return SuperSection::flat(psi.bundle_degree(), newphi, comps);
    }
    if (psi.is_zero()) return SuperSection::zero(psi.bundle_degree(), newphi);
    return SuperSection::cp1(psi.bundle_degree(), newphi, lift_mult(psi.cp1_comp(0, 0)));
}

double section_fiber_dist(const SuperSection& a, const SuperSection& b, const SpherePoint& p) {
    if (a.bundle_degree() != b.bundle_degree())
        throw std::invalid_argument("section_fiber_dist: bundle degrees differ");
    const TargetSpec& ts = a.curve().target();
    if (!(ts == b.curve().target()))
        throw std::invalid_argument("section_fiber_dist: targets differ");
    int s = p.chart;
    C zeta = p.z;
    double w = fiber_weight(a.bundle_degree(), zeta);
    if (ts.kind == Target::FlatCn) {
        auto ua = a.components(s, 0, zeta), ub = b.components(s, 0, zeta);
        double acc = 0.0;
        for (size_t j = 0; j < ua.size(); ++j) acc += std::norm(ua[j] - ub[j]);
        return std::sqrt(0.5 * acc * w);
    }
    double base_dist = target_point_dist(a.curve().value(p), b.curve().value(p));
    if (base_dist >= 0.999 * target_injectivity_radius(ts))
        return std::numeric_limits<double>::infinity();
    auto [wa, ta] = a.curve().cp1_value_canonical(s, zeta);
    auto [wb, tb] = b.curve().cp1_value_canonical(s, zeta);
    C ua = a.components(s, ta, zeta)[0];
    C ub = b.components(s, tb, zeta)[0];
    // express b's value and component in a's target chart
    if (tb != ta) {
        if (wb == C(0.0)) return std::numeric_limits<double>::infinity();
        ub = -ub * wb * wb;  // ∂/∂w_{1-t} = -w_t² ∂/∂w_t at w_t = 1/w_{1-t}
        wb = C(1.0) / wb;
    }
    C tau = transport_factor_cp1(wb, wa);
    C diff = ua - tau * ub;
    double hw = 1.0 + std::norm(wa);
    return std::sqrt(0.5 * std::norm(diff) / (hw * hw) * w);
}

double section_sup_dist(const SuperSection& a, const SuperSection& b, int samples) {
    double sup = 0.0;
    for (auto& p : sphere_samples(samples)) sup = std::max(sup, section_fiber_dist(a, b, p));
    return sup;
}

// ---------------------------------------------------------------------------
// catalog

std::pair<GlobalCurve, SuperSection> make_instance(const std::string& kind,
                                                   const CatalogParams& params) {
    if (kind == "identity") {
        GlobalCurve phi = GlobalCurve::cp1(RationalFn::x());
        return {phi, SuperSection::zero(params.d, phi)};
    }
    if (kind == "power") {
        if (params.k < 1) throw std::invalid_argument("make_instance: power needs k >= 1");
        GlobalCurve phi = GlobalCurve::cp1(RationalFn(Poly::monomial(params.k)));
        return {phi, SuperSection::zero(params.d, phi)};
    }
    if (kind == "bubble") {
        if (params.eps == 0.0)
            throw std::invalid_argument("make_instance: bubble family is singular at eps = 0");
        GlobalCurve phi =
            GlobalCurve::cp1(RationalFn(Poly{{C(params.eps), C(0.0), C(1.0)}}, Poly::x()));
        return {phi, SuperSection::zero(params.d, phi)};
    }
    if (kind == "holo") {
        GlobalCurve phi = GlobalCurve::cp1(RationalFn::x());
        return {phi, SuperSection::cp1(-1, phi, RationalFn(Poly{{params.alpha, params.beta}}))};
    }
    if (kind == "random") {
        std::mt19937_64 rng(params.seed);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        auto rnd_poly = [&](int deg) {
            std::vector<C> c(deg + 1);
            for (auto& v : c) v = C(u(rng), u(rng));
            return Poly(c);
        };
        for (int attempt = 0; attempt < 64; ++attempt) {
            std::uniform_int_distribution<int> degdist(0, params.maxdeg);
            int dn = degdist(rng), dd = degdist(rng);
            if (dn == 0 && dd == 0) dn = 1;
            Poly N = rnd_poly(dn), D = rnd_poly(dd);
            if (resultant_abs(N, D) < 1e-6) continue;
            GlobalCurve phi = GlobalCurve::cp1(RationalFn(N, D));
            // H⁰(L_d ⊗ φ*T CP¹) = { g/Q² : deg g ≤ d + 2 deg φ }
            int gdeg = params.d + 2 * phi.degree();
            if (gdeg < 0) return {phi, SuperSection::zero(params.d, phi)};
            std::uniform_int_distribution<int> gd(0, gdeg);
            Poly g = rnd_poly(gd(rng)) * C(0.5);
            RationalFn u00(g, D * D);
            return {phi, SuperSection::cp1(params.d, phi, u00)};
        }
        throw std::runtime_error("make_instance: failed to draw a coprime rational map");
    }
    throw std::invalid_argument("make_instance: unknown catalog id '" + kind + "'");
}

}  // namespace supercurve
