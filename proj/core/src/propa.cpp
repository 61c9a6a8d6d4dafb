#include "ccx/propa.hpp"

#include <algorithm>
#include <cmath>

namespace ccx::propa {

bool is_perfect_square(long long n) {
    if (n < 0) return false;
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r * r == n;
}

bool h_diff_bound_holds(const BigInt& D, long long n, long long R, long long delta0,
                        long long P1) {
    BigInt A = BigInt(2 * R * P1) * BigInt(n + 2 * delta0 + 1);
    BigInt B = BigInt(4 * R * P1);
    BigInt lhs = D - A;
    if (lhs.sign() <= 0) return true;
    return lhs * lhs <= B * B * BigInt(n);
}

int cmp_scaled(const BigInt& D1, long long n1, const BigInt& D2, long long n2) {
    // D1/n1^{3/2} vs D2/n2^{3/2}  <=>  D1^2 n2^3 vs D2^2 n1^3
    BigInt l = D1 * D1 * BigInt::pow(BigInt(n2), 3);
    BigInt r = D2 * D2 * BigInt::pow(BigInt(n1), 3);
    return l == r ? 0 : (l < r ? -1 : 1);
}

Rational scaled_to_rational(const BigInt& D, long long n) {
    if (!is_perfect_square(n))
        throw PreconditionError("scaled_to_rational: n is not a perfect square");
    long long s = static_cast<long long>(std::sqrt(static_cast<double>(n)));
    while (s * s != n) s += (s * s < n) ? 1 : -1;
    return Rational(D, BigInt(n) * BigInt(s));
}

std::string scaled_to_string(const BigInt& D, long long n) {
    if (is_perfect_square(n)) return scaled_to_rational(D, n).to_string();
    return D.to_string() + "/" + std::to_string(n) + "^(3/2)";
}

void check_f_precondition(const Config& cfg, long long k, long long n) {
    if (k < 0 || n < 1) throw PreconditionError("f_witness: need k >= 0, n >= 1");
    if (n - 2 * k - cfg.delta0 - cfg.delta1 <= 0)
        throw PreconditionError("f_witness: n - 2k - delta0 - delta1 > 0 required");
}

void check_h_precondition(const Config& cfg, long long n) {
    long long s = 1;
    while (s * s < n) ++s;  // ceil(sqrt(n))
    for (long long k = 0; k < s; ++k)
        if (n - 2 * k - cfg.delta0 - cfg.delta1 <= 0)
            throw PreconditionError(
                "h_witness: every k < sqrt(n) needs n - 2k - delta0 - delta1 > 0");
}

FWitness<std::string> TreePropa::f_witness(const std::string& x, const TreeEnd& a, long long k,
                                           long long n) const {
    check_f_precondition(cfg_, k, n);
    std::set<std::string> sup;
    for (const std::string& base : tree_.ball(x, static_cast<int>(k))) {
        for (long long t = n; t <= 2 * n; ++t)
            sup.insert(tree_ray_vertex(tree_, base, a, static_cast<int>(t)));
    }
    FWitness<std::string> w;
    w.support.assign(sup.begin(), sup.end());
    w.origin = x;
    w.target = a.prefix(8) + "...";
    w.k = k;
    w.n = n;
    w.exact = true;
    return w;
}

HWitness<std::string> TreePropa::h_witness(const std::string& x, const TreeEnd& a,
                                           long long n) const {
    check_h_precondition(cfg_, n);
    HWitness<std::string> h;
    h.origin = x;
    h.target = a.prefix(8) + "...";
    h.n = n;
    h.exact = true;
    long long s = 1;
    while (s * s < n) ++s;
    for (long long k = 0; k < s; ++k) {
        for (const std::string& v : f_witness(x, a, k, n).support) ++h.mult[v];
    }
    return h;
}

std::vector<Slope> FareyPropa::truncated_ball(const Slope& x, long long k,
                                              long long bound) const {
    // closed ball of radius k among slopes of height (max |p|, q) <= bound,
    // x itself always included
    std::vector<Slope> frontier{x}, all{x};
    auto seen = [&](const Slope& s) {
        return std::find(all.begin(), all.end(), s) != all.end();
    };
    for (long long depth = 0; depth < k; ++depth) {
        std::vector<Slope> next;
        for (const Slope& v : frontier) {
            // neighbors r/s with |v.num * s - v.den * r| = 1 and height <= bound
            for (long long s = 0; s <= bound; ++s) {
                for (int sign : {1, -1}) {
                    // v.num * s - v.den * r = sign  =>  r = (v.num * s - sign)/v.den
                    BigInt num = v.num() * BigInt(s) - BigInt(sign);
                    if (v.den().is_zero()) continue;  // handled below
                    BigInt r, rem;
                    BigInt::divmod(num, v.den(), r, rem);
                    if (!rem.is_zero()) continue;
                    if (r.abs() > BigInt(bound)) continue;
                    if (s == 0 && !r.abs().is_one()) continue;
                    Slope w = s == 0 ? Slope::infinity() : Slope(r, BigInt(s));
                    if (!seen(w)) {
                        all.push_back(w);
                        next.push_back(w);
                    }
                }
            }
            if (v.is_infinity()) {
                for (long long i = -bound; i <= bound; ++i) {
                    Slope w(BigInt(i), BigInt(1));
                    if (!seen(w)) {
                        all.push_back(w);
                        next.push_back(w);
                    }
                }
            }
        }
        frontier = std::move(next);
    }
    std::sort(all.begin(), all.end());
    return all;
}

FWitness<Slope> FareyPropa::f_witness(const Slope& x, const BoundaryPoint& a, long long k,
                                      long long n, const Trunc& trunc) const {
    check_f_precondition(cfg_, k, n);
    auto union_over = [&](const std::vector<Slope>& bases) {
        std::set<Slope> sup;
        for (const Slope& base : bases)
            for (long long t = n; t <= 2 * n; ++t) {
                for (const Slope& v :
                     geodesic_sphere(base, a, static_cast<int>(t), budget_))
                    sup.insert(v);
            }
        return sup;
    };
    FWitness<Slope> w;
    w.origin = x;
    w.target = a.to_string();
    w.k = k;
    w.n = n;
    if (k == 0) {
        auto sup = union_over({x});
        w.support.assign(sup.begin(), sup.end());
        w.exact = true;
        return w;
    }
    // truncated base points, stabilized across (bound, bound + step)
    auto s1 = union_over(truncated_ball(x, k, trunc.bound));
    auto s2 = union_over(truncated_ball(x, k, trunc.bound + trunc.step));
    if (s1 != s2)
        throw StabilizationError("f_witness: truncated support not stable across bounds");
    w.support.assign(s1.begin(), s1.end());
    w.exact = false;
    w.trunc_bound = trunc.bound;
    return w;
}

HWitness<Slope> FareyPropa::h_witness(const Slope& x, const BoundaryPoint& a, long long n,
                                      const Trunc& trunc) const {
    check_h_precondition(cfg_, n);
    HWitness<Slope> h;
    h.origin = x;
    h.target = a.to_string();
    h.n = n;
    h.exact = true;
    long long s = 1;
    while (s * s < n) ++s;
    for (long long k = 0; k < s; ++k) {
        FWitness<Slope> f = f_witness(x, a, k, n, trunc);
        if (!f.exact) {
            h.exact = false;
            h.trunc_bound = trunc.bound;
        }
        for (const Slope& v : f.support) ++h.mult[v];
    }
    return h;
}

} // namespace ccx::propa
