#pragma once

// SL(2,Z) mapping-class dynamics on the Farey model: the elliptic /
// parabolic / hyperbolic trichotomy with exact fixed-point data, Dehn
// twists, the twist intersection inequality, and commutation.
// m and -m act identically on slopes; classification is reported for the
// projective class with the given lift recorded.

#include "ccx/boundary.hpp"
#include "ccx/sl2.hpp"
#include "ccx/slope.hpp"
#include "ccx/surd.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ccx::mcg {

enum class ElementKind { FiniteOrder, Reducible, PseudoAnosov };

struct ElementClass {
    ElementKind kind = ElementKind::FiniteOrder;
    SL2Matrix lift;
    int order = 0;                        // finite-order case
    std::optional<Slope> fixed_slope;     // reducible case
    std::optional<QuadSurd> dilatation;   // pA: (|tr| + sqrt(tr^2-4))/2
    std::optional<QuadSurd> f_plus, f_minus;      // pA fixed points, exact
    std::optional<BoundaryPoint> f_plus_cf, f_minus_cf;  // same, as CFs

    std::string kind_name() const;
};

// trace trichotomy: |tr| < 2 or +-I -> finite order (exact order);
// |tr| = 2 -> parabolic with its unique fixed slope; |tr| > 2 -> pA.
ElementClass classify(const SL2Matrix& m);

// |value(m^i seed) - value(F+)| for i = 1..steps, as exact rationals
// (numerator/denominator pairs); seed must differ from F-.
std::vector<Rational> iterate_convergence(const SL2Matrix& m, const Slope& seed, int steps);

// choose a seed among {0/1, 1/1, 1/0} far from F- (circle distance)
Slope safe_seed(const ElementClass& pa);

// v -> v + n (v ^ w) w for w the primitive vector of alpha
SL2Matrix dehn_twist(const Slope& alpha, long long power);

// Sum(|n|-2) i(g,a) i(a,b) - i(g,b) <= i(t^n g, b) <= |n| i(g,a) i(a,b) + i(g,b)
// (torus specialization: a single twisting curve)
bool twist_inequality_check(const Slope& alpha, long long n, const Slope& beta,
                            const Slope& gamma);

// t_alpha^n beta != beta for |n| >= 3 when i(alpha,beta) != 0
bool twist_nonfix_check(const Slope& alpha, const Slope& beta, long long n);

// t_alpha^n and t_beta^m commute iff i(alpha,beta) = 0
bool commuting_check(const Slope& alpha, const Slope& beta, long long n, long long m);

} // namespace ccx::mcg
