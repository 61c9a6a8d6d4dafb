#pragma once

// Graph backends behind one oracle shape: distance + complete geodesic
// enumeration, with optional neighbor enumeration on bounded-geometry
// backends. Vertex identifier types differ per backend.

#include "ccx/boundary.hpp"
#include "ccx/farey.hpp"
#include "ccx/slope.hpp"

#include <concepts>
#include <string>
#include <vector>

namespace ccx {

template <class B>
concept GraphOracle = requires(const B& b, const typename B::Vertex& v) {
    { b.distance(v, v) } -> std::convertible_to<int>;
    { b.geodesics(v, v) } -> std::convertible_to<std::vector<std::vector<typename B::Vertex>>>;
};

// Infinite k-regular tree. Vertices are path words from a root: the first
// letter picks one of k root edges, every later letter one of k-1 forward
// edges. Geodesics are unique.
class TreeBackend {
public:
    using Vertex = std::string;

    explicit TreeBackend(int degree = 3);
    int degree() const { return degree_; }

    bool valid(const Vertex& v) const;
    std::vector<Vertex> neighbors(const Vertex& v) const;
    std::vector<Vertex> ball(const Vertex& v, int r) const;  // closed ball
    int distance(const Vertex& u, const Vertex& v) const;
    std::vector<std::vector<Vertex>> geodesics(const Vertex& u, const Vertex& v) const;

private:
    int degree_;
};

// An end of the tree: an eventually periodic infinite word.
struct TreeEnd {
    std::string pre;
    std::string period;  // nonempty

    char at(size_t i) const {
        return i < pre.size() ? pre[i] : period[(i - pre.size()) % period.size()];
    }
    std::string prefix(size_t len) const;
    bool operator==(const TreeEnd& o) const;
};

// t-th vertex of the unique geodesic ray from x toward the end a.
std::string tree_ray_vertex(const TreeBackend& t, const std::string& x, const TreeEnd& a, int n);

// Finite graph from an explicit edge list ("u v" per line, arbitrary token
// names). Vertices are dense ints; names kept for reporting.
class FiniteGraph {
public:
    using Vertex = int;

    static FiniteGraph from_edge_list_text(const std::string& text);
    static FiniteGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int size() const { return static_cast<int>(adj_.size()); }
    const std::string& name(int v) const { return names_[v]; }
    int id(const std::string& name) const;  // -1 if absent
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    std::vector<int> ball(int v, int r) const;
    int distance(int u, int v) const;  // -1 if disconnected
    std::vector<std::vector<int>> geodesics(int u, int v) const;

private:
    std::vector<std::vector<int>> adj_;
    std::vector<std::string> names_;
};

// Farey graph as a GraphOracle.
struct FareyGraph {
    using Vertex = Slope;
    int distance(const Slope& a, const Slope& b) const { return farey::distance(a, b); }
    std::vector<std::vector<Slope>> geodesics(const Slope& a, const Slope& b) const {
        return farey::geodesics(a, b);
    }
};

} // namespace ccx
