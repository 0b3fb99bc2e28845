#include "supercurve/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

namespace supercurve {

namespace {

// 8-point Gauss-Legendre on [-1, 1].
constexpr double kGLx[8] = {-0.9602898564975363, -0.7966664774136267, -0.5255324099163290,
                            -0.1834346424956498, 0.1834346424956498,  0.5255324099163290,
                            0.7966664774136267,  0.9602898564975363};
constexpr double kGLw[8] = {0.1012285362903763, 0.2223810344533745, 0.3137066458778873,
                            0.3626837833783620, 0.3626837833783620, 0.3137066458778873,
                            0.2223810344533745, 0.1012285362903763};

struct Panel {
    double ax, bx, ay, by;
    double value, err;
    long seq;
};

struct PanelWorse {
    bool operator()(const Panel& p, const Panel& q) const {
        if (p.err != q.err) return p.err < q.err;
        return p.seq > q.seq;  // deterministic tie-breaking
    }
};

double gl2d(const std::function<double(double, double)>& f, double ax, double bx, double ay,
            double by) {
    double cx = 0.5 * (ax + bx), hx = 0.5 * (bx - ax);
    double cy = 0.5 * (ay + by), hy = 0.5 * (by - ay);
    double acc = 0.0;
    for (int i = 0; i < 8; ++i) {
        double x = cx + hx * kGLx[i];
        double row = 0.0;
        for (int j = 0; j < 8; ++j) row += kGLw[j] * f(x, cy + hy * kGLx[j]);
        acc += kGLw[i] * row;
    }
    return acc * hx * hy;
}

Panel make_panel(const std::function<double(double, double)>& f, double ax, double bx, double ay,
                 double by, long seq) {
    double coarse = gl2d(f, ax, bx, ay, by);
    double mx = 0.5 * (ax + bx), my = 0.5 * (ay + by);
    double fine = gl2d(f, ax, mx, ay, my) + gl2d(f, mx, bx, ay, my) + gl2d(f, ax, mx, my, by) +
                  gl2d(f, mx, bx, my, by);
    return Panel{ax, bx, ay, by, fine, std::abs(fine - coarse), seq};
}

}  // namespace

double integrate_rect(const std::function<double(double, double)>& f, double ax, double bx,
                      double ay, double by, double rel_tol, double abs_floor, int max_panels) {
    if (!(bx > ax) || !(by > ay)) return 0.0;
    std::priority_queue<Panel, std::vector<Panel>, PanelWorse> heap;
    long seq = 0;
    double total = 0.0, err = 0.0;
    auto push = [&](double x0, double x1, double y0, double y1) {
        Panel p = make_panel(f, x0, x1, y0, y1, seq++);
        if (!std::isfinite(p.value)) throw QuadratureError("integrand not finite", total);
        total += p.value;
        err += p.err;
        heap.push(p);
    };
    // initial 2×2 split to seed the error estimates
    double mx = 0.5 * (ax + bx), my = 0.5 * (ay + by);
    push(ax, mx, ay, my); push(mx, bx, ay, my); push(ax, mx, my, by); push(mx, bx, my, by);

    int panels = 4;
    while (err > std::max(rel_tol * std::abs(total), abs_floor)) {
        if (panels >= max_panels)
            throw QuadratureError("quadrature did not converge at max refinement depth", total);
        Panel w = heap.top();
        heap.pop();
        total -= w.value;
        err -= w.err;
        double px = 0.5 * (w.ax + w.bx), py = 0.5 * (w.ay + w.by);
        push(w.ax, px, w.ay, py); push(px, w.bx, w.ay, py);
        push(w.ax, px, py, w.by); push(px, w.bx, py, w.by);
        panels += 3;
        if (err < 0.0) err = 0.0;
    }
    return total;
}

double integrate_planar_disc(const std::function<double(C)>& f, C z0, double r, double rel_tol) {
    auto polar = [&](double rho, double th) {
        return f(z0 + std::polar(rho, th)) * rho;
    };
    double two_pi = 2.0 * std::acos(-1.0);
    return integrate_rect(polar, 0.0, r, 0.0, two_pi, rel_tol);
}

namespace {

using Density = std::function<double(const SpherePoint&)>;

// ∫ over rotated-coordinate annulus {r0 < |u| < r1} of g(Rot(u))·fs(u), with
// the |u| > 1 part mapped through u = 1/v so every quadrature domain stays in
// the unit disc. Rot chart-applies, so v = 0 (the antipode) is fine.
double annular_piece(const Density& g, const Moebius& rot, double r0, double r1, double rel_tol) {
    double two_pi = 2.0 * std::acos(-1.0);
    double total = 0.0;
    double lo = std::min(r0, 1.0), hi = std::min(r1, 1.0);
    if (hi > lo) {
        auto f = [&](double rho, double th) {
            C u = std::polar(rho, th);
            SpherePoint p = rot.apply(SpherePoint{0, u});
            return g(p) * fs_density(u) * rho;
        };
        total += integrate_rect(f, lo, hi, 0.0, two_pi, rel_tol);
    }
    // outer part: |u| in (max(r0,1), r1) ↔ |v| in (1/r1, min(1/r0, 1))
    if (r1 > 1.0) {
        double vlo = 1.0 / r1, vhi = 1.0 / std::max(r0, 1.0);
        if (vhi > vlo) {
            auto f = [&](double rho, double th) {
                C v = std::polar(rho, th);
                SpherePoint p = rot.apply(SpherePoint{1, v});
                return g(p) * fs_density(v) * rho;
            };
            total += integrate_rect(f, vlo, vhi, 0.0, two_pi, rel_tol);
        }
    }
    return total;
}

double integrate_disc_like(const Density& g, const SpherePoint& center, double r0, double r1,
                           double rel_tol) {
    Moebius rot = Moebius::rotation_to(center);
    return annular_piece(g, rot, r0, r1, rel_tol);
}

}  // namespace

bool Region::contains(const SpherePoint& p) const {
    switch (kind) {
        case Kind::FullSphere:
            return true;
        case Kind::Disc: {
            SpherePoint u = Moebius::rotation_to(center).inverse().apply(p);
            return u.chart == 0 && std::abs(u.z) < r;
        }
        case Kind::Annulus: {
            SpherePoint u = Moebius::rotation_to(center).inverse().apply(p);
            double a = (u.chart == 0) ? std::abs(u.z)
                                      : (u.z == C(0.0) ? std::numeric_limits<double>::infinity()
                                                       : 1.0 / std::abs(u.z));
            return a > r && a < R;
        }
        case Kind::Complement: {
            for (auto& [c, rad] : removed)
                if (Region::disc(c, rad).contains(p)) return false;
            return true;
        }
        case Kind::MoebiusDisc: {
            return Region::disc(center, r).contains(map.inverse().apply(p));
        }
    }
    return false;
}

double integrate(const Density& density, const Region& region, double rel_tol) {
    switch (region.kind) {
        case Region::Kind::FullSphere: {
            double two_pi = 2.0 * std::acos(-1.0);
            auto mk = [&](int chart) {
                return [&, chart](double rho, double th) {
                    C u = std::polar(rho, th);
                    return density(SpherePoint{chart, u}) * fs_density(u) * rho;
                };
            };
            return integrate_rect(mk(0), 0.0, 1.0, 0.0, two_pi, rel_tol) +
                   integrate_rect(mk(1), 0.0, 1.0, 0.0, two_pi, rel_tol);
        }
        case Region::Kind::Disc:
            return integrate_disc_like(density, region.center, 0.0, region.r, rel_tol);
        case Region::Kind::Annulus:
            return integrate_disc_like(density, region.center, region.r, region.R, rel_tol);
        case Region::Kind::Complement: {
            // complement of the first disc is an exact rotated annulus (r, ∞);
            // remaining discs are subtracted and must be density-evaluable.
            auto& first = region.removed.front();
            Moebius rot = Moebius::rotation_to(first.first);
            double total = annular_piece(density, rot, first.second,
                                         std::numeric_limits<double>::infinity(), rel_tol);
            for (size_t i = 1; i < region.removed.size(); ++i)
                total -= integrate_disc_like(density, region.removed[i].first, 0.0,
                                             region.removed[i].second, rel_tol);
            return total;
        }
        case Region::Kind::MoebiusDisc: {
            const Moebius m = region.map;
            auto g = [&](const SpherePoint& p) {
                return density(m.apply(p)) * m.conformal_factor(p);
            };
            return integrate_disc_like(g, region.center, 0.0, region.r, rel_tol);
        }
    }
    throw std::logic_error("integrate: unknown region kind");
}

}  // namespace supercurve
