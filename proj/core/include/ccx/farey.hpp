#pragma once

// Exact combinatorics of the Farey graph on Q ∪ {1/0}: separating edges,
// distances, complete geodesic enumeration, pivots.
//
// The algorithm of record for distance/geodesics is the finite "crossing
// graph": {x, y} plus all endpoints of edges separating x from y, with
// Farey adjacency. Every geodesic's interior vertices are endpoints of
// separating edges, so the crossing graph contains every geodesic.

#include "ccx/slope.hpp"
#include "ccx/sl2.hpp"

#include <vector>

namespace ccx::farey {

Slope reduce(const BigInt& p, const BigInt& q);

// Circular order on Q ∪ {1/0}: true iff b lies strictly inside the
// counterclockwise arc from a to c (all three distinct).
bool ccw(const Slope& a, const Slope& b, const Slope& c);

// Strict membership in the counterclockwise arc (lo, hi).
bool in_open_arc(const Slope& x, const Slope& lo, const Slope& hi);

// x and y lie in different open arcs cut by e. Endpoint collisions are
// rejected (distinct from returning false).
bool separates(const FareyEdge& e, const Slope& x, const Slope& y);

// E(x, y) in separation order (the edge nearest x first). Empty iff
// d(x, y) <= 1. Computed by mediant descent after conjugating x to 1/0.
std::vector<FareyEdge> separating_edges(const Slope& x, const Slope& y);

struct CrossingGraph {
    std::vector<Slope> verts;            // verts[0] = x; y at index_y
    std::vector<std::vector<int>> adj;
    std::vector<int> dist_x, dist_y;     // BFS distances inside the graph
    int index_y = 0;
    int dist = 0;                        // d(x, y)

    int index_of(const Slope& v) const;  // -1 if absent
};

CrossingGraph crossing_graph(const Slope& x, const Slope& y);

int distance(const Slope& x, const Slope& y);

// The complete set of geodesics from x to y, sorted lexicographically by
// slope order.
std::vector<std::vector<Slope>> geodesics(const Slope& x, const Slope& y);

// G(x, y): union of vertices over all geodesics, sorted.
std::vector<Slope> geodesic_vertices(const Slope& x, const Slope& y);

// Vertices incident to >= 2 edges of E(x, y), with incidence counts,
// in separation order.
std::vector<PivotRecord> pivots(const Slope& x, const Slope& y);

// Neighbors of v strictly inside the ccw arc (lo, hi), in circular order
// from lo. Requires v outside the closed arc (otherwise the set is
// infinite) and lo != hi.
std::vector<Slope> neighbors_in_interval(const Slope& v, const Slope& lo, const Slope& hi);

} // namespace ccx::farey
