#include "ccx/boundary.hpp"

#include "ccx/errors.hpp"

#include <algorithm>

namespace ccx {

namespace {

void check_terms(const std::vector<BigInt>& v, const char* what) {
    for (const BigInt& t : v)
        if (t.sign() <= 0)
            throw PreconditionError(std::string("BoundaryPoint: ") + what +
                                    " terms must be positive");
}

}  // namespace

BoundaryPoint::BoundaryPoint(BigInt head, std::vector<BigInt> pre, std::vector<BigInt> period)
    : head_(std::move(head)), pre_(std::move(pre)), period_(std::move(period)) {
    check_terms(pre_, "preperiod");
    check_terms(period_, "period");
    if (period_.empty()) throw PreconditionError("BoundaryPoint: empty period");
}

BoundaryPoint::BoundaryPoint(BigInt head, std::vector<BigInt> terms)
    : head_(std::move(head)), pre_(std::move(terms)) {
    check_terms(pre_, "tail");
    if (pre_.empty()) throw PreconditionError("BoundaryPoint: no tail terms");
}

BoundaryPoint::BoundaryPoint(BigInt head, std::function<BigInt(size_t)> gen, size_t depth)
    : head_(std::move(head)), gen_(std::move(gen)), gen_depth_(depth) {
    if (!gen_ || depth < 1) throw PreconditionError("BoundaryPoint: bad generator");
}

BoundaryPoint BoundaryPoint::golden() { return BoundaryPoint(1, {}, {BigInt(1)}); }

BoundaryPoint BoundaryPoint::from_surd(const QuadSurd& s) {
    QuadSurd::CF cf = s.continued_fraction();
    return BoundaryPoint(cf.head, cf.pre, cf.period);
}

BoundaryPoint BoundaryPoint::parse(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) s.push_back(c);
    auto bad = [] { return PreconditionError("BoundaryPoint: expected [a0;a1,..~(b1,..)]"); };
    if (s.size() < 3 || s.front() != '[' || s.back() != ']') throw bad();
    std::string inner = s.substr(1, s.size() - 2);
    auto semi = inner.find(';');
    if (semi == std::string::npos) throw bad();
    BigInt head(std::string_view(inner).substr(0, semi));
    std::string tail = inner.substr(semi + 1);
    std::string prepart = tail, periodpart;
    auto tilde = tail.find('~');
    if (tilde != std::string::npos) {
        prepart = tail.substr(0, tilde);
        periodpart = tail.substr(tilde + 1);
        if (periodpart.size() < 3 || periodpart.front() != '(' || periodpart.back() != ')')
            throw bad();
        periodpart = periodpart.substr(1, periodpart.size() - 2);
    }
    auto split_terms = [&bad](const std::string& part) {
        std::vector<BigInt> out;
        size_t pos = 0;
        while (pos < part.size()) {
            auto comma = part.find(',', pos);
            if (comma == std::string::npos) comma = part.size();
            if (comma == pos) throw bad();
            out.emplace_back(std::string_view(part).substr(pos, comma - pos));
            pos = comma + 1;
        }
        return out;
    };
    std::vector<BigInt> pre = split_terms(prepart);
    if (tilde == std::string::npos) {
        if (pre.empty()) throw bad();
        return BoundaryPoint(std::move(head), std::move(pre));
    }
    return BoundaryPoint(std::move(head), std::move(pre), split_terms(periodpart));
}

BigInt BoundaryPoint::term(size_t i) const {
    if (i == 0) return head_;
    size_t j = i - 1;
    if (j < pre_.size()) return pre_[j];
    if (!period_.empty()) return period_[(j - pre_.size()) % period_.size()];
    if (gen_) {
        if (i > gen_depth_) throw StabilizationError("BoundaryPoint: generator depth exceeded");
        BigInt t = gen_(i);
        if (t.sign() <= 0) throw InvariantError("BoundaryPoint: generator term not positive");
        return t;
    }
    throw StabilizationError("BoundaryPoint: declared depth exceeded");
}

size_t BoundaryPoint::available_depth() const {
    if (!period_.empty()) return SIZE_MAX;
    if (gen_) return gen_depth_;
    return pre_.size();
}

QuadSurd BoundaryPoint::to_surd() const {
    if (period_.empty()) throw PreconditionError("BoundaryPoint: not periodic");
    // tail value t of the purely periodic part [b1; b2, ..., bk, b1, ...]
    // satisfies t = (pk t + pk1)/(qk t + qk1); take the root > 1
    BigInt p1 = period_[0], p0 = 1, q1 = 1, q0 = 0;
    for (size_t i = 1; i < period_.size(); ++i) {
        BigInt p2 = period_[i] * p1 + p0;
        BigInt q2 = period_[i] * q1 + q0;
        p0 = std::move(p1);
        p1 = std::move(p2);
        q0 = std::move(q1);
        q1 = std::move(q2);
    }
    // q1 t^2 + (q0 - p1) t - p0 = 0
    BigInt A = q1, B = q0 - p1, C = -p0;
    BigInt disc = B * B - BigInt(4) * A * C;
    QuadSurd t = QuadSurd::from_coeffs(-B, BigInt(1), disc, BigInt(2) * A);
    // fold the head and preperiod back: x = [a0; a1, ..., am, t]
    BigInt pm1 = 1, pm0 = head_, qm1 = 0, qm0 = 1;
    for (const BigInt& a : pre_) {
        BigInt p2 = a * pm0 + pm1;
        BigInt q2 = a * qm0 + qm1;
        pm1 = std::move(pm0);
        pm0 = std::move(p2);
        qm1 = std::move(qm0);
        qm0 = std::move(q2);
    }
    return t.apply(SL2Matrix(pm0, pm1, qm0, qm1));
}

std::string BoundaryPoint::to_string() const {
    std::string out = "[" + head_.to_string() + ";";
    for (size_t i = 0; i < pre_.size(); ++i) {
        if (i) out += ",";
        out += pre_[i].to_string();
    }
    if (!period_.empty()) {
        out += "~(";
        for (size_t i = 0; i < period_.size(); ++i) {
            if (i) out += ",";
            out += period_[i].to_string();
        }
        out += ")";
    }
    out += "]";
    return out;
}

bool BoundaryPoint::operator==(const BoundaryPoint& o) const {
    if (is_periodic() && o.is_periodic()) return to_surd().cmp(o.to_surd()) == 0;
    size_t depth = std::min(available_depth(), o.available_depth());
    depth = std::min<size_t>(depth, 64);
    for (size_t i = 0; i <= depth; ++i)
        if (term(i) != o.term(i)) return false;
    return true;
}

Slope convergent(const BoundaryPoint& a, size_t n) {
    if (n > a.available_depth())
        throw StabilizationError("convergent: depth exceeded");
    BigInt p1 = 1, p0 = 0, q1 = 0, q0 = 1;  // p_{-1}/q_{-1}, p_{-2}/q_{-2}
    for (size_t i = 0; i <= n; ++i) {
        BigInt t = a.term(i);
        BigInt p = t * p1 + p0;
        BigInt q = t * q1 + q0;
        p0 = std::move(p1);
        p1 = std::move(p);
        q0 = std::move(q1);
        q1 = std::move(q);
    }
    return Slope(p1, q1);
}

int cmp_boundary_rational(const BoundaryPoint& a, const Slope& r,
                          const StabilizationBudget& budget) {
    if (r.is_infinity()) return -1;  // boundary values are finite reals
    size_t depth = std::min(budget.max_depth, a.available_depth());
    for (size_t n = 0; n + 1 <= depth; ++n) {
        Slope c0 = convergent(a, n), c1 = convergent(a, n + 1);
        const Slope& lo = c0 < c1 ? c0 : c1;
        const Slope& hi = c0 < c1 ? c1 : c0;
        if (r < lo) return 1;
        if (hi < r) return -1;
        if (r == lo) return 1;   // a is strictly inside (lo, hi)
        if (r == hi) return -1;
    }
    throw StabilizationError("cmp_boundary_rational: undecided at available depth");
}

bool boundary_in_open_arc(const BoundaryPoint& a, const Slope& lo, const Slope& hi,
                          const StabilizationBudget& budget) {
    size_t depth = std::min(budget.max_depth, a.available_depth());
    for (size_t n = 0; n + 1 <= depth; ++n) {
        Slope c0 = convergent(a, n), c1 = convergent(a, n + 1);
        Slope blo = c0 < c1 ? c0 : c1;
        Slope bhi = c0 < c1 ? c1 : c0;
        // decided once the whole bracket avoids the arc endpoints
        auto inside_bracket = [&](const Slope& s) {
            return !s.is_infinity() && !(s < blo) && !(bhi < s);
        };
        if (inside_bracket(lo) || inside_bracket(hi)) continue;
        bool b0 = farey::in_open_arc(blo, lo, hi);
        bool b1 = farey::in_open_arc(bhi, lo, hi);
        if (b0 == b1) return b0;
    }
    throw StabilizationError("boundary_in_open_arc: undecided at available depth");
}

std::vector<FareyEdge> nested_edges(const BoundaryPoint& a, size_t count) {
    if (count > a.available_depth())
        throw StabilizationError("nested_edges: depth exceeded");
    std::vector<FareyEdge> out;
    Slope prev = convergent(a, 0);
    for (size_t k = 1; k <= count; ++k) {
        Slope cur = convergent(a, k);
        out.emplace_back(prev, cur);
        prev = std::move(cur);
    }
    return out;
}

namespace {

// crossing graphs between a vertex and a convergent are rebuilt for every
// sphere layer; keep a small per-thread cache (the returned reference is
// valid only until the next call on this thread)
const farey::CrossingGraph& cached_crossing(const Slope& y, const Slope& c) {
    thread_local std::vector<std::pair<std::pair<Slope, Slope>, farey::CrossingGraph>> cache;
    auto key = std::make_pair(y, c);
    for (auto& [k, g] : cache)
        if (k == key) return g;
    if (cache.size() >= 16) cache.erase(cache.begin());
    cache.emplace_back(key, farey::crossing_graph(y, c));
    return cache.back().second;
}

// layered slice of geodesics y -> convergent(a, N); empty optional when the
// convergent is still too close
std::optional<std::vector<Slope>> sphere_slice(const Slope& y, const BoundaryPoint& a,
                                               size_t N, int t) {
    if (N > a.available_depth()) throw StabilizationError("geodesic_sphere: depth exceeded");
    Slope c = convergent(a, N);
    if (c == y) return std::nullopt;
    const farey::CrossingGraph& g = cached_crossing(y, c);
    if (g.dist < t + 2) return std::nullopt;
    std::vector<Slope> out;
    for (size_t i = 0; i < g.verts.size(); ++i)
        if (g.dist_x[i] == t && g.dist_x[i] + g.dist_y[i] == g.dist) out.push_back(g.verts[i]);
    std::sort(out.begin(), out.end());
    return out;
}

// rays approach a between the two convergent tails, so a single parity of
// truncation sees only part of the sphere; probe unions two consecutive
// depths
std::optional<std::vector<Slope>> sphere_probe(const Slope& y, const BoundaryPoint& a,
                                               size_t N, int t) {
    auto s1 = sphere_slice(y, a, N, t);
    auto s2 = sphere_slice(y, a, N + 1, t);
    if (!s1 || !s2) return std::nullopt;
    std::vector<Slope> out;
    std::set_union(s1->begin(), s1->end(), s2->begin(), s2->end(), std::back_inserter(out));
    return out;
}

}  // namespace

std::vector<Slope> geodesic_sphere(const Slope& y, const BoundaryPoint& a, int t,
                                   const StabilizationBudget& budget) {
    if (t < 0) throw PreconditionError("geodesic_sphere: t < 0");
    if (t == 0) return {y};
    size_t N = static_cast<size_t>(t) + 4;
    std::optional<std::vector<Slope>> prev;
    size_t prevN = 0;
    while (N <= budget.max_depth && N <= a.available_depth()) {
        auto cur = sphere_probe(y, a, N, t);
        if (cur && prev && prevN + static_cast<size_t>(budget.step) == N && *cur == *prev)
            return *cur;
        prev = std::move(cur);
        prevN = N;
        N += static_cast<size_t>(budget.step);
    }
    throw StabilizationError("geodesic_sphere: no stable value within depth budget");
}

RaySegment ray(const Slope& x, const BoundaryPoint& a, size_t length,
               const StabilizationBudget& budget) {
    RaySegment seg{x, {x}, a.to_string(), 0};
    // candidates for the next vertex after the current prefix when the
    // target is truncated at depth N (next-layer vertices of geodesics
    // extending the prefix); nullopt when the truncation is too shallow
    auto candidates_at = [&](size_t N, size_t i) -> std::optional<std::vector<Slope>> {
        if (N > a.available_depth()) return std::nullopt;
        Slope c = convergent(a, N);
        if (c == x) return std::nullopt;
        farey::CrossingGraph g = farey::crossing_graph(x, c);
        if (g.dist < static_cast<int>(i) + 2) return std::nullopt;
        for (size_t j = 0; j < seg.vertices.size(); ++j) {
            int idx = g.index_of(seg.vertices[j]);
            if (idx < 0 || g.dist_x[idx] != static_cast<int>(j) ||
                g.dist_x[idx] + g.dist_y[idx] != g.dist)
                return std::vector<Slope>{};  // prefix not on this truncation
        }
        std::vector<Slope> out;
        int last = g.index_of(seg.vertices.back());
        for (int w : g.adj[last])
            if (g.dist_x[w] == static_cast<int>(i) + 1 && g.dist_x[w] + g.dist_y[w] == g.dist)
                out.push_back(g.verts[w]);
        std::sort(out.begin(), out.end());
        return out;
    };
    for (size_t i = 0; i < length; ++i) {
        // union over two consecutive truncation depths (rays approach the
        // boundary point between the two convergent tails), probed at
        // step-indexed depths so prefixes are L-independent
        std::optional<Slope> committed;
        size_t N = 2 * (i + 2);
        std::optional<std::vector<Slope>> prev;
        size_t prevN = 0;
        while (N + 1 <= budget.max_depth && N + 1 <= a.available_depth()) {
            auto c1 = candidates_at(N, i);
            auto c2 = candidates_at(N + 1, i);
            std::optional<std::vector<Slope>> cand;
            if (c1 && c2) {
                std::vector<Slope> u;
                std::set_union(c1->begin(), c1->end(), c2->begin(), c2->end(),
                               std::back_inserter(u));
                if (!u.empty()) cand = std::move(u);
            }
            if (cand && prev && prevN + static_cast<size_t>(budget.step) == N &&
                *cand == *prev) {
                committed = cand->front();
                break;
            }
            prev = std::move(cand);
            prevN = N;
            N += static_cast<size_t>(budget.step);
        }
        if (!committed)
            throw StabilizationError("ray: step " + std::to_string(i + 1) +
                                     " did not stabilize within depth budget");
        seg.vertices.push_back(*committed);
    }
    // crossing containment: the prefix must meet the nested edges in order,
    // never jumping past one without touching it
    size_t checkable = std::min<size_t>(length + 2, a.available_depth());
    for (size_t k = 1; k <= checkable; ++k) {
        FareyEdge e = nested_edges(a, k).back();
        if (e.has_endpoint(x)) continue;
        bool touched = false;
        for (const Slope& v : seg.vertices)
            if (e.has_endpoint(v)) {
                touched = true;
                break;
            }
        if (touched) continue;
        // not touched: the whole prefix must still be on x's side
        bool x_side = farey::in_open_arc(x, e.a(), e.b());
        for (const Slope& v : seg.vertices) {
            if (e.has_endpoint(v)) continue;
            if (farey::in_open_arc(v, e.a(), e.b()) != x_side)
                throw StabilizationError("ray: crossed nested edge " + e.to_string() +
                                         " without touching it");
        }
    }
    seg.stable_depth = length;
    return seg;
}

GromovProductBounds gromov_product_bounds(const BoundaryPoint& a, const BoundaryPoint& b,
                                          const Slope& base, const StabilizationBudget& budget) {
    struct Probe {
        std::optional<FareyEdge> low_edge;
        std::optional<FareyEdge> high_edge;
        int low = 0, high = 0;
        bool ok = false;
    };
    auto edge_dist = [&](const FareyEdge& e) {
        return std::min(farey::distance(base, e.a()), farey::distance(base, e.b()));
    };
    auto boundary_side_differs = [&](const BoundaryPoint& pt, const FareyEdge& e, bool base_side) {
        return boundary_in_open_arc(pt, e.a(), e.b(), budget) != base_side;
    };
    auto probe = [&](size_t N) -> Probe {
        Probe r;
        Slope ca = convergent(a, N), cb = convergent(b, N);
        if (ca == base || cb == base || ca == cb) return r;
        auto Ea = farey::separating_edges(base, ca);
        auto Eb = farey::separating_edges(base, cb);
        size_t common = 0;
        while (common < Ea.size() && common < Eb.size() && Ea[common] == Eb[common]) ++common;
        if (common == Ea.size() || common == Eb.size()) return r;  // not yet split
        // low: deepest common edge with a, b both on the far side
        for (size_t i = common; i-- > 0;) {
            const FareyEdge& e = Ea[i];
            bool base_side = farey::in_open_arc(base, e.a(), e.b());
            if (boundary_side_differs(a, e, base_side) && boundary_side_differs(b, e, base_side)) {
                r.low_edge = e;
                r.low = edge_dist(e) - 2;
                break;
            }
        }
        // high: first post-split edge separating one point from {base, other}
        auto first_post = [&](const std::vector<FareyEdge>& E, const BoundaryPoint& target,
                              const BoundaryPoint& other) -> std::optional<FareyEdge> {
            for (size_t i = common; i < E.size(); ++i) {
                const FareyEdge& e = E[i];
                bool base_side = farey::in_open_arc(base, e.a(), e.b());
                if (boundary_side_differs(target, e, base_side) &&
                    !boundary_side_differs(other, e, base_side))
                    return e;
            }
            return std::nullopt;
        };
        auto ea = first_post(Ea, a, b);
        auto eb = first_post(Eb, b, a);
        if (ea || eb) {
            int va = ea ? edge_dist(*ea) + 1 : INT32_MAX;
            int vb = eb ? edge_dist(*eb) + 1 : INT32_MAX;
            r.high_edge = va <= vb ? ea : eb;
            r.high = std::min(va, vb);
            r.ok = true;
        }
        return r;
    };
    size_t N = 4;
    std::optional<Probe> prev;
    size_t prevN = 0;
    size_t max_depth = std::min({budget.max_depth, a.available_depth(), b.available_depth()});
    while (N <= max_depth) {
        Probe cur = probe(N);
        if (cur.ok && prev && prev->ok && prevN + static_cast<size_t>(budget.step) == N &&
            cur.low == prev->low && cur.high == prev->high) {
            GromovProductBounds out{cur.low, cur.high,
                                    cur.low_edge ? *cur.low_edge : FareyEdge(Slope(0, 1), Slope(1, 0)),
                                    *cur.high_edge};
            return out;
        }
        prev = std::move(cur);
        prevN = N;
        N += static_cast<size_t>(budget.step);
    }
    throw StabilizationError(
        "gromov_product_bounds: a, b indistinguishable at available depth");
}

} // namespace ccx
