#include "ccx/mcg.hpp"

#include "ccx/errors.hpp"

namespace ccx::mcg {

std::string ElementClass::kind_name() const {
    switch (kind) {
        case ElementKind::FiniteOrder: return "finite-order";
        case ElementKind::Reducible: return "reducible";
        case ElementKind::PseudoAnosov: return "pseudo-anosov";
    }
    return "?";
}

ElementClass classify(const SL2Matrix& m) {
    if (!m.det().is_one()) throw PreconditionError("classify: determinant must be 1");
    ElementClass out;
    out.lift = m;
    BigInt tr = m.trace();
    BigInt abstr = tr.abs();
    if (m.is_pm_identity()) {
        out.kind = ElementKind::FiniteOrder;
        out.order = m.is_identity() ? 1 : 2;
        return out;
    }
    if (abstr < BigInt(2)) {
        out.kind = ElementKind::FiniteOrder;
        // char. polynomial x^2 - tr x + 1: tr = 0 -> order 4,
        // tr = 1 -> order 6, tr = -1 -> order 3
        if (tr.is_zero()) out.order = 4;
        else if (tr.is_one()) out.order = 6;
        else out.order = 3;
        return out;
    }
    if (abstr == BigInt(2)) {
        out.kind = ElementKind::Reducible;
        // primitive eigenvector of the parabolic: (m - s I) v = 0, s = tr/2
        BigInt s = tr.sign() > 0 ? 1 : -1;
        BigInt a = m.a - s, b = m.b, c = m.c, d = m.d - s;
        // rows (a b), (c d) are proportional; eigen-slope p/q solves a p + b q = 0
        Slope fixed = !a.is_zero() || !b.is_zero() ? Slope(-b, a) : Slope(-d, c);
        out.fixed_slope = fixed;
        return out;
    }
    out.kind = ElementKind::PseudoAnosov;
    BigInt disc = tr * tr - 4;
    out.dilatation = QuadSurd(abstr, disc, BigInt(2));
    // fixed points of z -> (az+b)/(cz+d): c z^2 + (d-a) z - b = 0;
    // c = 0 forces a d = 1 hence |tr| = 2, so c != 0 here
    if (m.c.is_zero()) throw InvariantError("classify: hyperbolic with c = 0");
    // roots ((a-d) +- sqrt(disc)) / (2c); attracting root has |eigenvalue| > 1,
    // eigenvalue lambda = (tr + sign * sqrt(disc))/2 with z = (lambda - d)/c
    // attracting: the eigenvalue of largest absolute value
    int sgn_attract = tr.sign() > 0 ? 1 : -1;
    auto root = [&](int sgn) {
        // z = ((a - d) + sgn * sqrt(disc)) / (2c) folded into (p + sqrt(D))/q
        if (sgn > 0) return QuadSurd(m.a - m.d, disc, BigInt(2) * m.c);
        return QuadSurd(-(m.a - m.d), disc, BigInt(-2) * m.c);
    };
    QuadSurd fp = root(sgn_attract), fm = root(-sgn_attract);
    out.f_plus = fp;
    out.f_minus = fm;
    out.f_plus_cf = BoundaryPoint::from_surd(fp);
    out.f_minus_cf = BoundaryPoint::from_surd(fm);
    return out;
}

namespace {
Rational slope_value(const Slope& s) {
    if (s.is_infinity()) throw PreconditionError("slope_value: infinite slope");
    return Rational(s.num(), s.den());
}
}  // namespace

std::vector<Rational> iterate_convergence(const SL2Matrix& m, const Slope& seed, int steps) {
    ElementClass cls = classify(m);
    if (cls.kind != ElementKind::PseudoAnosov)
        throw PreconditionError("iterate_convergence: matrix is not pseudo-Anosov");
    // rational seeds never equal the irrational repelling point; still honor
    // the documented check for exotic callers
    if (!seed.is_infinity() && cls.f_minus->cmp(slope_value(seed)) == 0)
        throw PreconditionError("iterate_convergence: seed equals the repelling fixed point");
    // bracket F+ once by two deep convergents; their gap is far below any
    // threshold the iterates are measured against
    const size_t depth = 40;
    Slope c0 = convergent(*cls.f_plus_cf, depth), c1 = convergent(*cls.f_plus_cf, depth + 1);
    Rational v0 = slope_value(c0), v1 = slope_value(c1);
    std::vector<Rational> gaps;
    Slope cur = seed;
    for (int i = 0; i < steps; ++i) {
        cur = apply_sl2(m, cur);
        if (cur.is_infinity()) {
            // an early iterate may pass through 1/0; record a large gap
            gaps.emplace_back(BigInt(1), BigInt(1));
            gaps.back() = Rational(BigInt("1000000000"), BigInt(1));
            continue;
        }
        Rational v = slope_value(cur);
        Rational g0 = (v - v0).abs();
        Rational g1 = (v - v1).abs();
        gaps.push_back(g0 > g1 ? g0 : g1);  // conservative upper bracket
    }
    return gaps;
}

Slope safe_seed(const ElementClass& pa) {
    if (pa.kind != ElementKind::PseudoAnosov) throw PreconditionError("safe_seed: not pA");
    // 0 and 1 are both valid seeds; pick the one farther from F- so the
    // burn-in is short (distance at least 1/2 either way)
    return pa.f_minus->cmp(Rational(1, 2)) >= 0 ? Slope(0, 1) : Slope(1, 1);
}

SL2Matrix dehn_twist(const Slope& alpha, long long power) {
    const BigInt& wx = alpha.num();
    const BigInt& wy = alpha.den();
    BigInt n(power);
    // v + n (vx wy - vy wx) (wx, wy): matrix [[1 + n wx wy, -n wx^2], [n wy^2, 1 - n wx wy]]
    return SL2Matrix(BigInt(1) + n * wx * wy, -n * wx * wx, n * wy * wy,
                     BigInt(1) - n * wx * wy);
}

bool twist_inequality_check(const Slope& alpha, long long n, const Slope& beta,
                            const Slope& gamma) {
    SL2Matrix t = dehn_twist(alpha, n);
    BigInt iga = intersection_number(gamma, alpha);
    BigInt iab = intersection_number(alpha, beta);
    BigInt igb = intersection_number(gamma, beta);
    BigInt mid = intersection_number(apply_sl2(t, gamma), beta);
    BigInt absn = BigInt(n).abs();
    BigInt lower = (absn - 2) * iga * iab - igb;
    BigInt upper = absn * iga * iab + igb;
    return lower <= mid && mid <= upper;
}

bool twist_nonfix_check(const Slope& alpha, const Slope& beta, long long n) {
    if (intersection_number(alpha, beta).is_zero())
        throw PreconditionError("twist_nonfix_check: need i(alpha,beta) != 0");
    if (n > -3 && n < 3) throw PreconditionError("twist_nonfix_check: need |n| >= 3");
    return !(apply_sl2(dehn_twist(alpha, n), beta) == beta);
}

bool commuting_check(const Slope& alpha, const Slope& beta, long long n, long long m) {
    if (n == 0 || m == 0) throw PreconditionError("commuting_check: nonzero powers required");
    SL2Matrix ta = dehn_twist(alpha, n), tb = dehn_twist(beta, m);
    bool commute = ta * tb == tb * ta;
    bool disjoint = intersection_number(alpha, beta).is_zero();
    if (commute != disjoint)
        throw InvariantError("commuting_check: commutation disagrees with disjointness");
    return commute;
}

} // namespace ccx::mcg
