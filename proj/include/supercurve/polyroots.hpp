#pragma once

#include "supercurve/complexpoly.hpp"

namespace supercurve {

/// All complex roots of p (companion-matrix eigenvalues). Leading/trailing
/// coefficients below rel_tol * coeff_scale are trimmed first.
std::vector<C> poly_roots(const Poly& p, double rel_tol = 1e-13);

/// Solve f(z) = w for rational f, i.e. roots of num - w*den.
std::vector<C> rational_preimages(const RationalFn& f, C w);

/// Monic-times-leading polynomial with the given roots.
Poly poly_from_roots(C leading, const std::vector<C>& roots);

/// Cancel numerator/denominator roots that agree within tol (relative).
/// Chart transforms and Möbius compositions produce exact common factors;
/// this keeps the rational reps evaluable near those points.
RationalFn cancel_common_roots(const RationalFn& f, double tol = 1e-9);

}  // namespace supercurve
