#pragma once

// Test-only brute-force oracle for the Farey graph: explicit vertex
// universe of slopes with bounded numerator/denominator, adjacency by
// determinant, BFS distances, exhaustive shortest-path enumeration.
// Independent of the crossing-graph implementation path it checks.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace oracle {

struct Frac {
    long long p = 0, q = 1;  // canonical: gcd 1, q >= 0, q = 0 -> p = 1
    bool operator==(const Frac& o) const { return p == o.p && q == o.q; }
    bool operator<(const Frac& o) const { return p < o.p || (p == o.p && q < o.q); }
};

inline Frac reduce(long long p, long long q) {
    if (q == 0) return {1, 0};
    if (q < 0) {
        p = -p;
        q = -q;
    }
    long long g = std::gcd(std::abs(p), q);
    return {p / g, q / g};
}

class FareyUniverse {
public:
    // all reduced p/q with |p| <= pmax, 0 <= q <= qmax (plus 1/0)
    FareyUniverse(long long pmax, long long qmax) : pmax_(pmax), qmax_(qmax) {
        for (long long q = 0; q <= qmax; ++q) {
            for (long long p = -pmax; p <= pmax; ++p) {
                if (p == 0 && q == 0) continue;
                Frac f = reduce(p, q);
                if (f.p != p || f.q != q) continue;
                index_.emplace(f, static_cast<int>(verts_.size()));
                verts_.push_back(f);
            }
        }
        adj_.resize(verts_.size());
        for (size_t i = 0; i < verts_.size(); ++i) {
            const Frac v = verts_[i];
            if (v.q == 0) {
                for (long long n = -pmax_; n <= pmax_; ++n) push_neighbor(i, n, 1);
            } else {
                // neighbors r/s: v.p * s - v.q * r = +-1; s = 0 yields 1/0
                for (long long s = 0; s <= qmax; ++s) {
                    for (int sign : {1, -1}) {
                        long long num = v.p * s - sign;
                        if (num % v.q != 0) continue;
                        push_neighbor(i, num / v.q, s);
                    }
                }
            }
            std::sort(adj_[i].begin(), adj_[i].end());
            adj_[i].erase(std::unique(adj_[i].begin(), adj_[i].end()), adj_[i].end());
        }
    }

    int id(const Frac& f) const {
        auto it = index_.find(f);
        return it == index_.end() ? -1 : it->second;
    }
    size_t size() const { return verts_.size(); }
    const Frac& vert(int i) const { return verts_[static_cast<size_t>(i)]; }
    const std::vector<int>& neighbors(int i) const { return adj_[static_cast<size_t>(i)]; }

    std::vector<int> bfs(int src) const {
        std::vector<int> d(verts_.size(), -1);
        std::vector<int> queue{src};
        d[static_cast<size_t>(src)] = 0;
        for (size_t h = 0; h < queue.size(); ++h) {
            int v = queue[h];
            for (int w : adj_[static_cast<size_t>(v)])
                if (d[static_cast<size_t>(w)] < 0) {
                    d[static_cast<size_t>(w)] = d[static_cast<size_t>(v)] + 1;
                    queue.push_back(w);
                }
        }
        return d;
    }

    int distance(const Frac& a, const Frac& b) const {
        int i = id(a), j = id(b);
        if (i < 0 || j < 0) throw std::runtime_error("oracle: vertex outside universe");
        return bfs(i)[static_cast<size_t>(j)];
    }

    // all shortest paths as vertex sequences
    std::vector<std::vector<Frac>> all_geodesics(const Frac& a, const Frac& b) const {
        int i = id(a), j = id(b);
        if (i < 0 || j < 0) throw std::runtime_error("oracle: vertex outside universe");
        std::vector<int> di = bfs(i), dj = bfs(j);
        int dist = di[static_cast<size_t>(j)];
        std::vector<std::vector<Frac>> out;
        std::vector<int> path{i};
        auto dfs = [&](auto&& self, int v) -> void {
            if (v == j) {
                std::vector<Frac> p;
                for (int t : path) p.push_back(verts_[static_cast<size_t>(t)]);
                out.push_back(std::move(p));
                return;
            }
            for (int w : adj_[static_cast<size_t>(v)]) {
                if (di[static_cast<size_t>(w)] == di[static_cast<size_t>(v)] + 1 &&
                    di[static_cast<size_t>(w)] + dj[static_cast<size_t>(w)] == dist) {
                    path.push_back(w);
                    self(self, w);
                    path.pop_back();
                }
            }
        };
        dfs(dfs, i);
        std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
            return std::lexicographical_compare(
                x.begin(), x.end(), y.begin(), y.end(), [](const Frac& u, const Frac& v) {
                    bool ui = u.q == 0, vi = v.q == 0;
                    if (ui != vi) return vi;
                    if (ui) return false;
                    return static_cast<__int128>(u.p) * v.q < static_cast<__int128>(v.p) * u.q;
                });
        });
        return out;
    }

private:
    long long pmax_, qmax_;
    std::vector<Frac> verts_;
    std::map<Frac, int> index_;
    std::vector<std::vector<int>> adj_;

    void push_neighbor(size_t i, long long r, long long s) {
        Frac f = reduce(r, s);
        if (std::abs(f.p) > pmax_ || f.q > qmax_) return;
        int j = id(f);
        if (j >= 0 && static_cast<size_t>(j) != i) adj_[i].push_back(j);
    }
};

} // namespace oracle
