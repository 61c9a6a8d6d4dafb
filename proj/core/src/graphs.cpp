#include "ccx/graphs.hpp"

#include "ccx/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace ccx {

TreeBackend::TreeBackend(int degree) : degree_(degree) {
    if (degree < 3 || degree > 10) throw PreconditionError("TreeBackend: degree in [3,10]");
}

bool TreeBackend::valid(const Vertex& v) const {
    for (size_t i = 0; i < v.size(); ++i) {
        int limit = i == 0 ? degree_ : degree_ - 1;
        if (v[i] < '0' || v[i] >= '0' + limit) return false;
    }
    return true;
}

std::vector<TreeBackend::Vertex> TreeBackend::neighbors(const Vertex& v) const {
    std::vector<Vertex> out;
    if (!v.empty()) out.push_back(v.substr(0, v.size() - 1));
    int limit = v.empty() ? degree_ : degree_ - 1;
    for (int c = 0; c < limit; ++c) out.push_back(v + static_cast<char>('0' + c));
    return out;
}

std::vector<TreeBackend::Vertex> TreeBackend::ball(const Vertex& v, int r) const {
    std::vector<Vertex> out{v};
    size_t head = 0;
    std::vector<int> depth{0};
    while (head < out.size()) {
        Vertex cur = out[head];
        int d = depth[head];
        ++head;
        if (d == r) continue;
        for (const Vertex& w : neighbors(cur)) {
            if (std::find(out.begin(), out.end(), w) == out.end()) {
                out.push_back(w);
                depth.push_back(d + 1);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {
size_t lcp(const std::string& a, const std::string& b) {
    size_t n = std::min(a.size(), b.size()), i = 0;
    while (i < n && a[i] == b[i]) ++i;
    return i;
}
}  // namespace

int TreeBackend::distance(const Vertex& u, const Vertex& v) const {
    size_t c = lcp(u, v);
    return static_cast<int>(u.size() - c + v.size() - c);
}

std::vector<std::vector<TreeBackend::Vertex>> TreeBackend::geodesics(const Vertex& u,
                                                                     const Vertex& v) const {
    size_t c = lcp(u, v);
    std::vector<Vertex> path;
    for (size_t i = u.size(); i > c; --i) path.push_back(u.substr(0, i));
    path.push_back(u.substr(0, c));
    for (size_t i = c + 1; i <= v.size(); ++i) path.push_back(v.substr(0, i));
    return {path};
}

std::string TreeEnd::prefix(size_t len) const {
    std::string out;
    out.reserve(len);
    for (size_t i = 0; i < len; ++i) out.push_back(at(i));
    return out;
}

bool TreeEnd::operator==(const TreeEnd& o) const {
    size_t n = pre.size() + period.size() + o.pre.size() + o.period.size();
    for (size_t i = 0; i < 2 * n; ++i)
        if (at(i) != o.at(i)) return false;
    return true;
}

std::string tree_ray_vertex(const TreeBackend& t, const std::string& x, const TreeEnd& a, int n) {
    if (n < 0) throw PreconditionError("tree_ray_vertex: negative index");
    // climb from x to the divergence point with the end's word, then follow it
    size_t c = 0;
    while (c < x.size() && x[c] == a.at(c)) ++c;
    size_t climb = x.size() - c;
    std::string v;
    if (static_cast<size_t>(n) <= climb) {
        v = x.substr(0, x.size() - static_cast<size_t>(n));
    } else {
        v = a.prefix(c + (static_cast<size_t>(n) - climb));
    }
    if (!t.valid(v)) throw PreconditionError("tree_ray_vertex: end word invalid for tree");
    return v;
}

FiniteGraph FiniteGraph::from_edge_list_text(const std::string& text) {
    std::map<std::string, int> ids;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::string> names;
    std::istringstream in(text);
    std::string u, v;
    while (in >> u >> v) {
        auto get = [&](const std::string& s) {
            auto [it, fresh] = ids.emplace(s, static_cast<int>(names.size()));
            if (fresh) names.push_back(s);
            return it->second;
        };
        edges.emplace_back(get(u), get(v));
    }
    FiniteGraph g = from_edges(static_cast<int>(names.size()), edges);
    g.names_ = std::move(names);
    return g;
}

FiniteGraph FiniteGraph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    FiniteGraph g;
    g.adj_.assign(static_cast<size_t>(n), {});
    g.names_.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) g.names_[static_cast<size_t>(i)] = std::to_string(i);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n || u == v)
            throw PreconditionError("FiniteGraph: bad edge");
        if (std::find(g.adj_[u].begin(), g.adj_[u].end(), v) == g.adj_[u].end()) {
            g.adj_[u].push_back(v);
            g.adj_[v].push_back(u);
        }
    }
    return g;
}

int FiniteGraph::id(const std::string& name) const {
    for (int i = 0; i < size(); ++i)
        if (names_[static_cast<size_t>(i)] == name) return i;
    return -1;
}

std::vector<int> FiniteGraph::ball(int v, int r) const {
    std::vector<int> d(adj_.size(), -1);
    std::deque<int> q{v};
    d[static_cast<size_t>(v)] = 0;
    std::vector<int> out;
    while (!q.empty()) {
        int cur = q.front();
        q.pop_front();
        out.push_back(cur);
        if (d[static_cast<size_t>(cur)] == r) continue;
        for (int w : adj_[static_cast<size_t>(cur)])
            if (d[static_cast<size_t>(w)] < 0) {
                d[static_cast<size_t>(w)] = d[static_cast<size_t>(cur)] + 1;
                q.push_back(w);
            }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int FiniteGraph::distance(int u, int v) const {
    std::vector<int> d(adj_.size(), -1);
    std::deque<int> q{u};
    d[static_cast<size_t>(u)] = 0;
    while (!q.empty()) {
        int cur = q.front();
        q.pop_front();
        if (cur == v) return d[static_cast<size_t>(cur)];
        for (int w : adj_[static_cast<size_t>(cur)])
            if (d[static_cast<size_t>(w)] < 0) {
                d[static_cast<size_t>(w)] = d[static_cast<size_t>(cur)] + 1;
                q.push_back(w);
            }
    }
    return -1;
}

std::vector<std::vector<int>> FiniteGraph::geodesics(int u, int v) const {
    std::vector<int> du(adj_.size(), -1), dv(adj_.size(), -1);
    auto bfs = [&](int src, std::vector<int>& d) {
        std::deque<int> q{src};
        d[static_cast<size_t>(src)] = 0;
        while (!q.empty()) {
            int cur = q.front();
            q.pop_front();
            for (int w : adj_[static_cast<size_t>(cur)])
                if (d[static_cast<size_t>(w)] < 0) {
                    d[static_cast<size_t>(w)] = d[static_cast<size_t>(cur)] + 1;
                    q.push_back(w);
                }
        }
    };
    bfs(u, du);
    bfs(v, dv);
    int dist = du[static_cast<size_t>(v)];
    if (dist < 0) throw PreconditionError("FiniteGraph: vertices not connected");
    std::vector<std::vector<int>> out;
    std::vector<int> path{u};
    auto dfs = [&](auto&& self, int cur) -> void {
        if (cur == v) {
            out.push_back(path);
            return;
        }
        for (int w : adj_[static_cast<size_t>(cur)]) {
            if (du[static_cast<size_t>(w)] == du[static_cast<size_t>(cur)] + 1 &&
                du[static_cast<size_t>(w)] + dv[static_cast<size_t>(w)] == dist) {
                path.push_back(w);
                self(self, w);
                path.pop_back();
            }
        }
    };
    dfs(dfs, u);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace ccx
