#include "supercurve/polyroots.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

namespace supercurve {

std::vector<C> poly_roots(const Poly& p, double rel_tol) {
    Poly q = p;
    q.trim(rel_tol, true);
    int n = q.degree();
    if (n <= 0) return {};
    if (n == 1) return {-q.coeff(0) / q.coeff(1)};

    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(n, n);
    C lead = q.coeff(n);
    for (int i = 1; i < n; ++i) comp(i, i - 1) = C(1.0);
    for (int i = 0; i < n; ++i) comp(i, n - 1) = -q.coeff(i) / lead;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, /*computeEigenvectors=*/false);
    std::vector<C> roots(n);
    for (int i = 0; i < n; ++i) roots[i] = es.eigenvalues()(i);
    return roots;
}

std::vector<C> rational_preimages(const RationalFn& f, C w) {
    return poly_roots(f.num() - f.den() * w);
}

Poly poly_from_roots(C leading, const std::vector<C>& roots) {
    Poly p = Poly::constant(leading);
    for (C r : roots) p = p * Poly{{-r, C(1.0)}};
    return p;
}

namespace {

// synthetic division by (z - r): quotient plus the remainder p(r)
std::pair<Poly, C> deflate(const Poly& p, C r) {
    int n = p.degree();
    if (n < 1) return {Poly(), p.coeff(0)};
    std::vector<C> q(n);
    C acc = p.coeff(n);
    for (int k = n - 1; k >= 0; --k) {
        q[k] = acc;
        acc = acc * r + p.coeff(k);
    }
    return {Poly(q), acc};
}

}  // namespace

RationalFn cancel_common_roots(const RationalFn& f, double tol) {
    if (f.is_zero() || f.den().degree() < 1 || f.num().degree() < 1) return f;
    Poly num = f.num(), den = f.den();
    // A shared linear factor divides both with a tiny remainder; division is
    // remainder-validated, which adapts to the ε^{1/m} scatter of clustered
    // roots while never cancelling genuinely distinct ones.
    bool progress = true;
    while (progress && den.degree() >= 1 && num.degree() >= 1) {
        progress = false;
        for (C r : poly_roots(den)) {
            auto [qd, remd] = deflate(den, r);
            auto [qn, remn] = deflate(num, r);
            if (std::abs(remd) <= tol * den.coeff_scale() &&
                std::abs(remn) <= tol * num.coeff_scale()) {
                den = qd;
                num = qn;
                progress = true;
                break;
            }
        }
    }
    if (den.degree() == f.den().degree()) return f;
    return RationalFn(num, den);
}

}  // namespace supercurve
