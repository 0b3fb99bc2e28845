#pragma once

#include <functional>

#include "supercurve/curve.hpp"

namespace supercurve {

/// ν-indexed sequence of holomorphic supercurves, closed-form in ν for the
/// catalog families; nu_ladder lists the evaluation indices (increasing).
struct Family {
    std::function<std::pair<GlobalCurve, SuperSection>(double)> generator;
    std::vector<double> nu_ladder;

    std::pair<GlobalCurve, SuperSection> at(double nu) const { return generator(nu); }
    double nu_max() const { return nu_ladder.back(); }
};

inline std::vector<double> geometric_ladder(double start, int count, double ratio = 2.0) {
    std::vector<double> v;
    double x = start;
    for (int i = 0; i < count; ++i, x *= ratio) v.push_back(x);
    return v;
}

/// φ^ν = φ, ψ^ν = ψ for all ν.
Family constant_family(const GlobalCurve& phi, const SuperSection& psi,
                       std::vector<double> ladder);

/// φ^ν(z) = z + (coef/ν)/z on CP¹; optional d = -1 section u = g(z)/z² with
/// deg g ≤ 3 (the H⁰ bound for this degree-2 family).
Family bubble_family(double coef, std::vector<double> ladder, Poly section_g = Poly(), int d = -1);

/// φ^ν = φ∘(z ↦ νz), ψ^ν the lifted pullback; all energy concentrates at 0
/// and the rescaling δ^ν = 1/ν undoes the pullback exactly.
Family pullback_family(const GlobalCurve& phi, const SuperSection& psi,
                       std::vector<double> ladder);

}  // namespace supercurve
