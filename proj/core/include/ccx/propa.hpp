#pragma once

// Property-A witness functions: F_a(x,k,n) indicators over [n,2n]-segments
// of geodesics from B(x;k) toward a boundary point, their l^1 sums
// H_a(x,n) = n^{-3/2} sum_{k<sqrt n} F_a(x,k,n), probability normalization,
// and Yu-set quantization.
//
// H is held as integer multiplicities with the common prefactor n^{-3/2}
// kept symbolic; all norms, differences, and bound checks stay exact
// (squaring tricks absorb the sqrt(n) terms). Normalized probability
// vectors are plain rationals since the prefactor cancels.

#include "ccx/bigint.hpp"
#include "ccx/boundary.hpp"
#include "ccx/errors.hpp"
#include "ccx/graphs.hpp"
#include "ccx/rational.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace ccx::propa {

// per-backend constants (delta0, delta1, P0, P1): configuration values
// standing in for existence constants of the underlying geometry
struct Config {
    long long delta0 = 0, delta1 = 1;
    long long P0 = 1, P1 = 1;
    bool trusted = false;  // assert (vs report) the norm upper bound

    static Config tree() { return {0, 1, 1, 1, true}; }
    static Config farey() { return {2, 6, 6, 54, false}; }
};

template <class V>
struct FWitness {
    std::vector<V> support;  // sorted; all weights are 1
    V origin{};
    std::string target;
    long long k = 0, n = 0;
    bool exact = true;
    long long trunc_bound = 0;  // height bound when !exact
    long long l1() const { return static_cast<long long>(support.size()); }
};

template <class V>
struct HWitness {
    std::map<V, long long> mult;  // weight of v is mult[v] / n^{3/2}
    V origin{};
    std::string target;
    long long n = 0;
    bool exact = true;
    long long trunc_bound = 0;

    BigInt scaled_l1() const {
        BigInt s = 0;
        for (const auto& [v, m] : mult) s += BigInt(m);
        return s;
    }
};

// exact l^1 distance scaled by n^{3/2} (both witnesses must share n and
// exactness regime)
template <class V>
BigInt h_difference_scaled(const HWitness<V>& x, const HWitness<V>& y) {
    if (x.n != y.n) throw PreconditionError("h_difference: mismatched n");
    if (x.exact != y.exact || (!x.exact && x.trunc_bound != y.trunc_bound))
        throw PreconditionError("h_difference: mixed exactness");
    BigInt s = 0;
    auto it = x.mult.begin();
    auto jt = y.mult.begin();
    while (it != x.mult.end() || jt != y.mult.end()) {
        if (jt == y.mult.end() || (it != x.mult.end() && it->first < jt->first)) {
            s += BigInt(it->second);
            ++it;
        } else if (it == x.mult.end() || jt->first < it->first) {
            s += BigInt(jt->second);
            ++jt;
        } else {
            s += BigInt(it->second >= jt->second ? it->second - jt->second
                                                 : jt->second - it->second);
            ++it;
            ++jt;
        }
    }
    return s;
}

// D/n^{3/2} <= 2 R (n + 2 sqrt(n) + 2 delta0 + 1) P1 / n^{3/2}, exactly:
// D - A <= B sqrt(n) with A = 2R(n+2d0+1)P1, B = 4RP1
bool h_diff_bound_holds(const BigInt& D, long long n, long long R, long long delta0,
                        long long P1);

// sign of D1/n1^{3/2} - D2/n2^{3/2} (all nonnegative), exactly
int cmp_scaled(const BigInt& D1, long long n1, const BigInt& D2, long long n2);

// exact rational value of D/n^{3/2}; requires n to be a perfect square
Rational scaled_to_rational(const BigInt& D, long long n);
bool is_perfect_square(long long n);

// textual exact value: a rational when n is square, else "D/n^(3/2)"
std::string scaled_to_string(const BigInt& D, long long n);

template <class V>
struct ProbAssignment {
    std::map<V, Rational> p;
    long long radius = 0;  // recorded support bound R(n)
};

template <class V>
struct ProbFamily {
    std::map<V, ProbAssignment<V>> vectors;  // x -> a^n_x
    long long n = 0;
    long long radius = 0;
};

// normalize a family of H-witnesses over a vertex set into probability
// vectors sharing the recorded support radius
template <class V>
ProbFamily<V> normalize_family(const std::vector<HWitness<V>>& hs, long long delta0);

template <class V>
ProbAssignment<V> normalize(const HWitness<V>& h, long long delta0) {
    BigInt total = h.scaled_l1();
    if (total.is_zero()) throw PreconditionError("normalize: zero witness");
    ProbAssignment<V> out;
    for (const auto& [v, m] : h.mult) out.p.emplace(v, Rational(BigInt(m), total));
    long long s = 1;
    while (s * s < h.n) ++s;  // ceil(sqrt(n))
    out.radius = 2 * h.n + s + delta0;
    return out;
}

template <class V>
ProbFamily<V> normalize_family(const std::vector<HWitness<V>>& hs, long long delta0) {
    if (hs.empty()) throw PreconditionError("normalize_family: empty family");
    ProbFamily<V> fam;
    fam.n = hs.front().n;
    for (const auto& h : hs) {
        if (h.n != fam.n) throw PreconditionError("normalize_family: mixed n");
        ProbAssignment<V> a = normalize(h, delta0);
        fam.radius = a.radius;
        fam.vectors.emplace(h.origin, std::move(a));
    }
    return fam;
}

template <class V>
struct YuSet {
    std::set<std::pair<V, BigInt>> elements;
    BigInt quantization;  // |elements| equals this when built from a vector
};

// A = {(v, j) : j >= 1, j/P <= p(v)}; requires every entry to be a
// multiple of 1/P; |A| = P.
template <class V>
YuSet<V> yu_set(const ProbAssignment<V>& a, const BigInt& P) {
    YuSet<V> out;
    out.quantization = P;
    for (const auto& [v, pr] : a.p) {
        BigInt scaled = pr.num() * P;
        BigInt count, rem;
        BigInt::divmod(scaled, pr.den(), count, rem);
        if (!rem.is_zero())
            throw PreconditionError("yu_set: probability not a multiple of 1/P");
        for (BigInt j = 1; j <= count; j += 1) out.elements.emplace(v, j);
    }
    if (!(BigInt(out.elements.size()) == P))
        throw InvariantError("yu_set: |A| != P");
    return out;
}

template <class V>
BigInt yu_symmetric_difference(const YuSet<V>& a, const YuSet<V>& b) {
    BigInt count = 0;
    for (const auto& e : a.elements)
        if (!b.elements.count(e)) count += 1;
    for (const auto& e : b.elements)
        if (!a.elements.count(e)) count += 1;
    return count;
}

// l^1 distance of two probability assignments times P (exact integer when
// entries are multiples of 1/P)
template <class V>
BigInt prob_l1_times_p(const ProbAssignment<V>& a, const ProbAssignment<V>& b, const BigInt& P) {
    Rational s;
    auto it = a.p.begin();
    auto jt = b.p.begin();
    while (it != a.p.end() || jt != b.p.end()) {
        if (jt == b.p.end() || (it != a.p.end() && it->first < jt->first)) {
            s += it->second;
            ++it;
        } else if (it == a.p.end() || jt->first < it->first) {
            s += jt->second;
            ++jt;
        } else {
            s += (it->second - jt->second).abs();
            ++it;
            ++jt;
        }
    }
    Rational scaled = s * Rational(P);
    if (!scaled.is_integer()) throw PreconditionError("prob_l1_times_p: P not a common denominator");
    return scaled.num();
}

// ---- engines ----

class TreePropa {
public:
    TreePropa(TreeBackend tree, Config cfg) : tree_(std::move(tree)), cfg_(cfg) {}

    const Config& config() const { return cfg_; }

    // requires n - 2k - delta0 - delta1 > 0
    FWitness<std::string> f_witness(const std::string& x, const TreeEnd& a, long long k,
                                    long long n) const;
    HWitness<std::string> h_witness(const std::string& x, const TreeEnd& a, long long n) const;

private:
    TreeBackend tree_;
    Config cfg_;
};

class FareyPropa {
public:
    struct Trunc {
        long long bound;  // max of |numerator| and denominator for base points
        long long step;
        Trunc(long long b = 64, long long s = 16) : bound(b), step(s) {}
    };

    FareyPropa(Config cfg, StabilizationBudget budget = {}) : cfg_(cfg), budget_(budget) {}

    const Config& config() const { return cfg_; }

    // k = 0 is exact (union of stabilized spheres); k >= 1 is truncated to
    // base points with height <= bound, stabilized across (bound, bound+step)
    FWitness<Slope> f_witness(const Slope& x, const BoundaryPoint& a, long long k, long long n,
                              const Trunc& trunc = Trunc{}) const;
    HWitness<Slope> h_witness(const Slope& x, const BoundaryPoint& a, long long n,
                              const Trunc& trunc = Trunc{}) const;

private:
    Config cfg_;
    StabilizationBudget budget_;

    std::vector<Slope> truncated_ball(const Slope& x, long long k, long long bound) const;
};

void check_f_precondition(const Config& cfg, long long k, long long n);
void check_h_precondition(const Config& cfg, long long n);

} // namespace ccx::propa
