#include <doctest.h>

#include "ccx/errors.hpp"
#include "ccx/mcg.hpp"
#include "ccx/rng.hpp"

using namespace ccx;
namespace M = ccx::mcg;

namespace {
SL2Matrix rand_sl2(Rng& rng, int len = 8) {
    SL2Matrix m;
    for (int i = 0; i < len; ++i) {
        switch (rng.below(3)) {
            case 0: m = m * SL2Matrix(1, 1, 0, 1); break;
            case 1: m = m * SL2Matrix(1, -1, 0, 1); break;
            default: m = m * SL2Matrix(0, -1, 1, 0); break;
        }
    }
    return m;
}

Slope rand_slope(Rng& rng, long long bound = 9) {
    while (true) {
        long long p = rng.range(-bound, bound), q = rng.range(0, bound);
        if (p || q) return Slope(p, q);
    }
}
}  // namespace

TEST_CASE("classification of standard elements") {
    auto rot = M::classify(SL2Matrix(0, -1, 1, 0));
    CHECK(rot.kind == M::ElementKind::FiniteOrder);
    CHECK(rot.order == 4);

    auto id = M::classify(SL2Matrix::identity());
    CHECK(id.order == 1);
    auto neg = M::classify(SL2Matrix(-1, 0, 0, -1));
    CHECK(neg.order == 2);
    CHECK(M::classify(SL2Matrix(0, -1, 1, -1)).order == 3);
    CHECK(M::classify(SL2Matrix(1, -1, 1, 0)).order == 6);

    auto par = M::classify(SL2Matrix(1, 1, 0, 1));
    CHECK(par.kind == M::ElementKind::Reducible);
    CHECK(*par.fixed_slope == Slope(1, 0));

    auto pa = M::classify(SL2Matrix(2, 1, 1, 1));
    CHECK(pa.kind == M::ElementKind::PseudoAnosov);
    CHECK(*pa.dilatation == QuadSurd(3, 5, 2));
    CHECK(*pa.f_plus == QuadSurd(1, 5, 2));  // golden
    CHECK(pa.f_plus_cf->is_periodic());
    CHECK(pa.f_plus_cf->term(0).to_ll() == 1);
    CHECK(pa.f_plus_cf->term(7).to_ll() == 1);

    CHECK_THROWS_AS(M::classify(SL2Matrix(2, 0, 0, 1)), PreconditionError);
}

TEST_CASE("finite order elements really have their order") {
    Rng rng(21);
    int found = 0;
    for (int it = 0; it < 400 && found < 40; ++it) {
        SL2Matrix m = rand_sl2(rng, static_cast<int>(rng.below(7)) + 1);
        auto cls = M::classify(m);
        if (cls.kind != M::ElementKind::FiniteOrder) continue;
        ++found;
        SL2Matrix p = m;
        for (int i = 1; i < cls.order; ++i) {
            CHECK(!p.is_identity());
            p = p * m;
        }
        CHECK(p.is_identity());
    }
    CHECK(found > 0);
}

TEST_CASE("reducible elements fix exactly one slope") {
    Rng rng(22);
    int found = 0;
    for (int it = 0; it < 600 && found < 40; ++it) {
        SL2Matrix m = rand_sl2(rng);
        auto cls = M::classify(m);
        if (cls.kind != M::ElementKind::Reducible) continue;
        ++found;
        Slope fixed = *cls.fixed_slope;
        CHECK(apply_sl2(m, fixed) == fixed);
        // uniqueness: no other small slope is fixed
        for (long long p = -6; p <= 6; ++p)
            for (long long q = 0; q <= 6; ++q) {
                if (p == 0 && q == 0) continue;
                Slope s(p, q);
                if (s == fixed) continue;
                CHECK(!(apply_sl2(m, s) == s));
            }
    }
    CHECK(found > 0);
}

TEST_CASE("pseudo-anosov fixed points and convergence") {
    SL2Matrix m(2, 1, 1, 1);
    auto cls = M::classify(m);
    // F+ fixed by the Moebius action
    CHECK(cls.f_plus->apply(m) == *cls.f_plus);
    CHECK(cls.f_minus->apply(m) == *cls.f_minus);
    // iterate from 0: monotone decrease after burn-in, final tiny
    auto gaps = M::iterate_convergence(m, Slope(0, 1), 20);
    REQUIRE(gaps.size() == 20);
    for (size_t i = 5; i + 1 < gaps.size(); ++i) CHECK(gaps[i + 1] < gaps[i]);
    CHECK(gaps.back() < Rational(1, BigInt("100000000")));
    // the inverse converges to F-
    auto icls = M::classify(m.inverse());
    CHECK(*icls.f_plus == *cls.f_minus);
    CHECK(*icls.f_minus == *cls.f_plus);
    // near-fixed seed is already close
    auto near = M::iterate_convergence(m, Slope(13, 8), 3);
    CHECK(near.front() < Rational(1, 10));
}

TEST_CASE("equivariance of fixed points under conjugation") {
    Rng rng(23);
    int found = 0;
    for (int it = 0; it < 300 && found < 25; ++it) {
        SL2Matrix m = rand_sl2(rng);
        auto cls = M::classify(m);
        if (cls.kind != M::ElementKind::PseudoAnosov) continue;
        ++found;
        SL2Matrix g = rand_sl2(rng, 4);
        SL2Matrix conj = g * m * g.inverse();
        auto ccls = M::classify(conj);
        REQUIRE(ccls.kind == M::ElementKind::PseudoAnosov);
        CHECK(*ccls.f_plus == cls.f_plus->apply(g));
        CHECK(*ccls.f_minus == cls.f_minus->apply(g));
    }
    CHECK(found > 0);
}

TEST_CASE("dehn twists") {
    CHECK(M::dehn_twist(Slope(1, 0), 1) == SL2Matrix(1, -1, 0, 1));
    Rng rng(24);
    for (int it = 0; it < 60; ++it) {
        Slope a = rand_slope(rng);
        long long n = rng.range(-5, 5);
        SL2Matrix t = M::dehn_twist(a, n);
        CHECK(t.det().is_one());
        CHECK(apply_sl2(t, a) == a);
        // power additivity
        long long k = rng.range(-3, 3);
        CHECK(M::dehn_twist(a, n + k) == t * M::dehn_twist(a, k));
        if (n != 0) {
            auto cls = M::classify(t);
            CHECK(cls.kind == M::ElementKind::Reducible);
            CHECK(*cls.fixed_slope == a);
        }
    }
}

TEST_CASE("twist inequality") {
    // n = 0: reduces to -i(g,b) <= i(g,b) <= i(g,b)
    CHECK(M::twist_inequality_check(Slope(1, 0), 0, Slope(0, 1), Slope(0, 1)));
    // pinned instance: alpha = 1/0, n = 3, beta = gamma = 0
    CHECK(M::twist_inequality_check(Slope(1, 0), 3, Slope(0, 1), Slope(0, 1)));
    Rng rng(25);
    for (int it = 0; it < 1000; ++it) {
        Slope a = rand_slope(rng), b = rand_slope(rng), g = rand_slope(rng);
        long long n = rng.range(-9, 9);
        CHECK(M::twist_inequality_check(a, n, b, g));
    }
}

TEST_CASE("twist nonfix and commutation") {
    CHECK(M::twist_nonfix_check(Slope(1, 0), Slope(0, 1), 3));
    CHECK(apply_sl2(M::dehn_twist(Slope(1, 0), 3), Slope(0, 1)) == Slope(-3, 1));
    CHECK_THROWS_AS(M::twist_nonfix_check(Slope(1, 0), Slope(1, 0), 3), PreconditionError);
    CHECK_THROWS_AS(M::twist_nonfix_check(Slope(1, 0), Slope(0, 1), 2), PreconditionError);
    Rng rng(26);
    for (int it = 0; it < 200; ++it) {
        Slope a = rand_slope(rng), b = rand_slope(rng);
        long long n = rng.range(1, 5), m = rng.range(1, 5);
        bool commute = M::commuting_check(a, b, n, m);
        CHECK(commute == (a == b));  // distinct slopes always intersect on the torus
    }
    CHECK(M::commuting_check(Slope(2, 5), Slope(2, 5), 2, 3));
}
