#include <doctest.h>

#include "ccx/busemann.hpp"
#include "ccx/errors.hpp"

using namespace ccx;
namespace B = ccx::busemann;

namespace {
B::Engine<B::TreeBusemann> tree_engine() { return B::Engine<B::TreeBusemann>({}, 3); }
B::Engine<B::FareyBusemann> farey_engine() {
    B::FareyBusemann fb;
    fb.budget.max_depth = 96;
    return B::Engine<B::FareyBusemann>(fb, 3);
}
}  // namespace

TEST_CASE("tree busemann basics") {
    auto eng = tree_engine();
    TreeEnd a{"", "0"};
    // alpha_a(y, y) = 0
    CHECK(eng.alpha(a, "1", "1", 10).value == 0);
    // x on the ray from y toward a at distance m: alpha = -m
    CHECK(eng.alpha(a, "00", "", 10).value == -2);
    CHECK(eng.alpha(a, "0000", "", 12).value == -4);
    // tree: alpha == beta exactly
    for (const char* x : {"", "1", "10", "001"})
        for (const char* y : {"", "0", "20"}) {
            CHECK(eng.alpha(a, x, y, 14).value == eng.beta(a, x, y, 14).value);
        }
    // beta <= d(x,y)
    TreeBackend t(3);
    CHECK(eng.beta(a, "21", "0", 14).value <= t.distance("21", "0"));
    CHECK_THROWS_AS(eng.alpha(a, "21", "0", 2), PreconditionError);
}

TEST_CASE("tree cocycle defects vanish") {
    auto eng = tree_engine();
    TreeEnd a{"", "1"};
    auto [anti, tri] = eng.cocycle_defects(a, "0", "20", "100", 16);
    CHECK(anti == 0);
    CHECK(tri == 0);
    auto [anti2, tri2] = eng.cocycle_defects(a, "0", "0", "0", 16);
    CHECK(anti2 == 0);
    CHECK(tri2 == 0);
}

TEST_CASE("farey busemann: alpha within 8 delta of beta") {
    auto eng = farey_engine();
    BoundaryPoint a = BoundaryPoint::golden();
    // delta-hat for the Farey sample is at least 1/2; 8*delta >= 4
    for (const char* xs : {"0/1", "1/2", "-1/1"}) {
        Slope x(xs);
        Slope y(1, 1);
        int horizon = farey::distance(x, y) + 8;
        int av = eng.alpha(a, x, y, horizon).value;
        int bv = eng.beta(a, x, y, horizon).value;
        CHECK(std::abs(av - bv) <= 8);
        CHECK(bv <= farey::distance(x, y));
    }
}

TEST_CASE("on_ray and on_side membership") {
    auto eng = farey_engine();
    BoundaryPoint a = BoundaryPoint::golden();
    // convergents lie on rays from earlier convergents toward a
    CHECK(eng.on_ray(convergent(a, 0), convergent(a, 2), a));
    CHECK(!eng.on_ray(convergent(a, 2), convergent(a, 0), a));
    BoundaryPoint b = BoundaryPoint::from_surd(QuadSurd(0, 2, -1));  // -sqrt2
    // 0 and 1 sit between -sqrt2 and golden
    CHECK(eng.on_side(Slope(0, 1), b, a));
    CHECK(eng.on_side(Slope(1, 1), b, a));
    CHECK(!eng.on_side(Slope(-3, 1), b, a));
}

TEST_CASE("tree min set is the ideal triangle center") {
    auto eng = tree_engine();
    TreeEnd a{"", "0"}, b{"1", "0"}, c{"2", "0"};
    B::Engine<B::TreeBusemann>::MinSetParams prm;
    prm.window_radius = 4;
    prm.bases = {"", "0", "10"};
    prm.delta_x2 = 0;
    prm.pool_depth = 24;
    auto res = eng.min_set(a, b, c, prm);
    CHECK(res.margin > 0);
    // MS is the root (the median of the three ends)
    REQUIRE(res.ms.size() == 1);
    CHECK(res.ms[0] == "");
    // MS subset of MS'
    for (const auto& v : res.ms)
        CHECK(std::find(res.ms_prime.begin(), res.ms_prime.end(), v) != res.ms_prime.end());
    CHECK(res.certified);  // tree delta = 0 makes the certificate easy
}

TEST_CASE("farey min set basics and equivariance") {
    auto eng = farey_engine();
    BoundaryPoint a = BoundaryPoint::from_surd(QuadSurd(1, 5, 2));    // golden
    BoundaryPoint b = BoundaryPoint::from_surd(QuadSurd(0, 2, -1));   // -sqrt2
    BoundaryPoint c = BoundaryPoint::from_surd(QuadSurd(9, 2, 2));    // (9+sqrt2)/2
    B::Engine<B::FareyBusemann>::MinSetParams prm;
    prm.window_radius = 4;
    prm.bases = {Slope(0, 1), Slope(1, 1)};
    prm.delta_x2 = 2;
    prm.pool_depth = 32;
    auto res = eng.min_set(a, b, c, prm);
    CHECK(res.margin > 0);
    CHECK(!res.ms.empty());
    for (const auto& v : res.ms)
        CHECK(std::find(res.ms_prime.begin(), res.ms_prime.end(), v) != res.ms_prime.end());
    // properness: F^y(w) >= d(w,y) - M0 for the fitted M0 is checked in the
    // acceptance suite; here check equivariance under the shift
    SL2Matrix m(1, 1, 0, 1);
    auto res2 = eng.min_set(BoundaryPoint::from_surd(a.to_surd().apply(m)),
                            BoundaryPoint::from_surd(b.to_surd().apply(m)),
                            BoundaryPoint::from_surd(c.to_surd().apply(m)),
                            [&] {
                                auto p = prm;
                                for (auto& s : p.bases) s = apply_sl2(m, s);
                                return p;
                            }());
    REQUIRE(res2.ms_prime.size() == res.ms_prime.size());
    for (size_t i = 0; i < res.ms_prime.size(); ++i)
        CHECK(res2.ms_prime[i] == apply_sl2(m, res.ms_prime[i]));
}

TEST_CASE("busemann value bounds and lipschitz on farey samples") {
    auto eng = farey_engine();
    BoundaryPoint a = BoundaryPoint::from_surd(QuadSurd(1, 8, 3));
    std::vector<Slope> pts{Slope(0, 1), Slope(1, 1), Slope(1, 2), Slope(-1, 1), Slope(2, 1)};
    // delta-hat of the small declared sample is 1 (doubled 2); slack 8
    for (const auto& x : pts)
        for (const auto& y : pts) {
            int d = farey::distance(x, y);
            int horizon = d + 8;
            int av = eng.alpha(a, x, y, horizon).value;
            int bv = eng.beta(a, x, y, horizon).value;
            CHECK(std::abs(av) <= d + 8);
            CHECK(bv <= d);
            CHECK(std::abs(bv) <= d + 8);
        }
    // Lipschitz: |beta_a(x,z) - beta_a(y,z)| <= d(x,y) + 80 delta
    Slope z(1, 3);
    for (const auto& x : pts)
        for (const auto& y : pts) {
            int hx = farey::distance(x, z) + 8, hy = farey::distance(y, z) + 8;
            int bx = eng.beta(a, x, z, hx).value;
            int by = eng.beta(a, y, z, hy).value;
            CHECK(std::abs(bx - by) <= farey::distance(x, y) + 80);
        }
}

TEST_CASE("min set base-change stability and ms-prime diameter") {
    // tree instance: certified (delta = 0), so diam(MS') >= 3 is asserted
    auto eng = tree_engine();
    TreeEnd a{"", "0"}, b{"1", "0"}, c{"2", "0"};
    B::Engine<B::TreeBusemann>::MinSetParams prm;
    prm.window_radius = 4;
    prm.bases = {"", "0", "10"};
    prm.delta_x2 = 0;
    prm.pool_depth = 24;
    auto res = eng.min_set(a, b, c, prm);
    REQUIRE(res.certified);
    TreeBackend t(3);
    int diam = 0;
    for (const auto& u : res.ms_prime)
        for (const auto& v : res.ms_prime) diam = std::max(diam, t.distance(u, v));
    CHECK(diam >= 3);
    // MS stability under base change: the union MS (which contains every
    // MS^z) stays within 1344 delta-hat of MV^y; delta = 0 on the tree, so
    // this is equality of minima across bases
    REQUIRE(res.base_minima.size() == 3);
    for (const auto& [y, mv] : res.base_minima)
        for (const auto& w : res.ms) {
            long long f = eng.minset_eval(a, b, c, y, w, false);
            CHECK(f <= mv + 1344 * (res.delta_x2_used / 2));
        }
}

TEST_CASE("window errors") {
    auto eng = farey_engine();
    BoundaryPoint a = BoundaryPoint::from_surd(QuadSurd(1, 5, 2));
    BoundaryPoint b = BoundaryPoint::from_surd(QuadSurd(0, 2, -1));
    BoundaryPoint c = BoundaryPoint::from_surd(QuadSurd(9, 2, 2));
    B::Engine<B::FareyBusemann>::MinSetParams prm;
    prm.window_radius = 40;  // far beyond the pool: no boundary ring
    prm.bases = {Slope(0, 1)};
    prm.pool_depth = 16;
    CHECK_THROWS_AS(eng.min_set(a, b, c, prm), StabilizationError);
}

TEST_CASE("minset_eval membership gate") {
    auto eng = farey_engine();
    BoundaryPoint a = BoundaryPoint::from_surd(QuadSurd(1, 5, 2));
    BoundaryPoint b = BoundaryPoint::from_surd(QuadSurd(0, 2, -1));
    BoundaryPoint c = BoundaryPoint::from_surd(QuadSurd(9, 2, 2));
    // 0 lies between -sqrt2 and golden, hence inside the realized union
    CHECK_NOTHROW(eng.minset_eval(a, b, c, Slope(1, 1), Slope(0, 1)));
    // a slope far outside every side is rejected
    CHECK_THROWS_AS(eng.minset_eval(a, b, c, Slope(1, 1), Slope(-50, 1)), PreconditionError);
}
