#include "ccx/farey.hpp"

#include "ccx/errors.hpp"
#include "ccx/rational.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace ccx::farey {

Slope reduce(const BigInt& p, const BigInt& q) { return Slope(p, q); }

bool ccw(const Slope& a, const Slope& b, const Slope& c) {
    if (a == b || b == c || a == c)
        throw PreconditionError("ccw: points must be distinct");
    // Parity of negatives among the three pairwise crosses is invariant
    // under representative flips and under det-1 maps.
    int neg = 0;
    if (b.cross(a).is_neg()) ++neg;
    if (c.cross(b).is_neg()) ++neg;
    if (a.cross(c).is_neg()) ++neg;
    return (neg & 1) != 0;
}

bool in_open_arc(const Slope& x, const Slope& lo, const Slope& hi) {
    if (x == lo || x == hi) return false;
    return ccw(lo, x, hi);
}

bool separates(const FareyEdge& e, const Slope& x, const Slope& y) {
    if (e.has_endpoint(x) || e.has_endpoint(y))
        throw PreconditionError("separates: " + (e.has_endpoint(x) ? x : y).to_string() +
                                " is an endpoint of " + e.to_string());
    return in_open_arc(x, e.a(), e.b()) != in_open_arc(y, e.a(), e.b());
}

std::vector<FareyEdge> separating_edges(const Slope& x, const Slope& y) {
    if (x == y) throw PreconditionError("separating_edges: x == y");
    SL2Matrix m = send_to_infinity(x);
    SL2Matrix mi = m.inverse();
    Slope yy = apply_sl2(m, y);
    std::vector<FareyEdge> out;
    if (yy.den().is_one()) return out;  // adjacent to 1/0
    BigInt n = Rational(yy.num(), yy.den()).floor();
    Slope lo(n, BigInt(1)), hi(n + 1, BigInt(1));
    while (true) {
        out.emplace_back(apply_sl2(mi, lo), apply_sl2(mi, hi));
        Slope med = mediant(lo, hi);
        if (med == yy) break;
        // compare by rational value; all of lo, med, hi, yy are finite here
        if (yy.cross(med).is_neg())
            hi = med;
        else
            lo = med;
    }
    return out;
}

int CrossingGraph::index_of(const Slope& v) const {
    for (size_t i = 0; i < verts.size(); ++i)
        if (verts[i] == v) return static_cast<int>(i);
    return -1;
}

namespace {

std::vector<int> bfs(const std::vector<std::vector<int>>& adj, int src) {
    std::vector<int> d(adj.size(), -1);
    std::deque<int> q{src};
    d[src] = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int w : adj[v])
            if (d[w] < 0) {
                d[w] = d[v] + 1;
                q.push_back(w);
            }
    }
    return d;
}

}  // namespace

CrossingGraph crossing_graph(const Slope& x, const Slope& y) {
    CrossingGraph g;
    g.verts.push_back(x);
    if (y == x) {
        g.adj.resize(1);
        g.dist_x = {0};
        g.dist_y = {0};
        g.index_y = 0;
        g.dist = 0;
        return g;
    }
    g.verts.push_back(y);
    for (const FareyEdge& e : separating_edges(x, y)) {
        for (const Slope* s : {&e.a(), &e.b()}) {
            if (g.index_of(*s) < 0) g.verts.push_back(*s);
        }
    }
    const int n = static_cast<int>(g.verts.size());
    g.adj.assign(n, {});
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (adjacent(g.verts[i], g.verts[j])) {
                g.adj[i].push_back(j);
                g.adj[j].push_back(i);
            }
    g.index_y = 1;
    g.dist_x = bfs(g.adj, 0);
    g.dist_y = bfs(g.adj, 1);
    g.dist = g.dist_x[1];
    if (g.dist < 0) throw InvariantError("crossing_graph: x, y not connected");
    return g;
}

int distance(const Slope& x, const Slope& y) { return crossing_graph(x, y).dist; }

std::vector<std::vector<Slope>> geodesics(const Slope& x, const Slope& y) {
    CrossingGraph g = crossing_graph(x, y);
    std::vector<std::vector<Slope>> out;
    std::vector<int> path{0};
    // walk the layered DAG: each step increases dist_x by 1, keeping
    // dist_x + dist_y == dist
    auto dfs = [&](auto&& self, int v) -> void {
        if (v == g.index_y) {
            std::vector<Slope> p;
            p.reserve(path.size());
            for (int i : path) p.push_back(g.verts[i]);
            out.push_back(std::move(p));
            return;
        }
        for (int w : g.adj[v]) {
            if (g.dist_x[w] == g.dist_x[v] + 1 && g.dist_x[w] + g.dist_y[w] == g.dist) {
                path.push_back(w);
                self(self, w);
                path.pop_back();
            }
        }
    };
    dfs(dfs, 0);
    std::sort(out.begin(), out.end(),
              [](const std::vector<Slope>& a, const std::vector<Slope>& b) {
                  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
              });
    return out;
}

std::vector<Slope> geodesic_vertices(const Slope& x, const Slope& y) {
    CrossingGraph g = crossing_graph(x, y);
    std::vector<Slope> out;
    for (size_t i = 0; i < g.verts.size(); ++i)
        if (g.dist_x[i] >= 0 && g.dist_y[i] >= 0 && g.dist_x[i] + g.dist_y[i] == g.dist)
            out.push_back(g.verts[i]);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<PivotRecord> pivots(const Slope& x, const Slope& y) {
    if (x == y) return {};
    auto edges = separating_edges(x, y);
    std::vector<Slope> order;        // first-appearance order of endpoints
    std::map<Slope, int> counts;
    for (const FareyEdge& e : edges) {
        for (const Slope* s : {&e.a(), &e.b()}) {
            auto [it, fresh] = counts.emplace(*s, 0);
            if (fresh) order.push_back(*s);
            ++it->second;
        }
    }
    std::vector<PivotRecord> out;
    for (const Slope& v : order)
        if (counts[v] >= 2) out.push_back({v, counts[v]});
    return out;
}

std::vector<Slope> neighbors_in_interval(const Slope& v, const Slope& lo, const Slope& hi) {
    if (lo == hi) throw PreconditionError("neighbors_in_interval: degenerate interval");
    if (v == lo || v == hi || in_open_arc(v, lo, hi))
        throw PreconditionError(
            "neighbors_in_interval: v in the closed interval (neighbor set not finite)");
    SL2Matrix m = send_to_infinity(v);
    SL2Matrix mi = m.inverse();
    Slope lo2 = apply_sl2(m, lo), hi2 = apply_sl2(m, hi);
    // v was outside the closed arc, so the image arc misses 1/0 and is a
    // plain value interval (lo2, hi2) with lo2 < hi2.
    if (lo2.is_infinity() || hi2.is_infinity() || !(lo2 < hi2))
        throw InvariantError("neighbors_in_interval: image arc not a finite interval");
    BigInt n = Rational(lo2.num(), lo2.den()).floor() + 1;  // first integer > lo2
    std::vector<Slope> out;
    for (; Slope(n, BigInt(1)) < hi2; n += 1) out.push_back(apply_sl2(mi, Slope(n, BigInt(1))));
    return out;
}

} // namespace ccx::farey
