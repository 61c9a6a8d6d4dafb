#pragma once

// Boundary points of the Farey graph as continued fractions, the nested
// edge sequences witnessing them, geodesic rays toward them, and geodesic
// spheres G(y, a)_t.
//
// A quantity indexed by convergent depth N is accepted once two probes
// (N, N+2) agree and the crossing-containment check passes; otherwise the
// computation raises StabilizationError rather than returning a truncation.

#include "ccx/bigint.hpp"
#include "ccx/farey.hpp"
#include "ccx/slope.hpp"
#include "ccx/surd.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace ccx {

class BoundaryPoint {
public:
    // periodic tail (quadratic irrational)
    BoundaryPoint(BigInt head, std::vector<BigInt> pre, std::vector<BigInt> period);
    // explicit finite list of terms with declared available depth (head + terms)
    BoundaryPoint(BigInt head, std::vector<BigInt> terms);
    // term generator with declared available depth; gen(i) for i >= 1
    BoundaryPoint(BigInt head, std::function<BigInt(size_t)> gen, size_t depth);

    static BoundaryPoint parse(std::string_view text);  // "[a0;a1,...]" / "[a0;a1,..~(b1,..)]"
    static BoundaryPoint golden();                      // [1;(1)]
    static BoundaryPoint from_surd(const QuadSurd& s);

    BigInt term(size_t i) const;         // i = 0 is the integer head
    size_t available_depth() const;      // max usable term index
    bool is_periodic() const { return !period_.empty(); }
    QuadSurd to_surd() const;            // periodic points only

    std::string to_string() const;
    bool operator==(const BoundaryPoint& o) const;

private:
    BigInt head_;
    std::vector<BigInt> pre_;
    std::vector<BigInt> period_;
    std::function<BigInt(size_t)> gen_;
    size_t gen_depth_ = 0;
};

struct StabilizationBudget {
    size_t max_depth = 256;  // deepest convergent index probed
    int step = 2;            // probe spacing (N, N+step)
};

Slope convergent(const BoundaryPoint& a, size_t n);

// sign(a - r) for rational r, decided from the convergent bracketing
int cmp_boundary_rational(const BoundaryPoint& a, const Slope& r,
                          const StabilizationBudget& budget = {});

// whether a lies strictly inside the ccw arc (lo, hi)
bool boundary_in_open_arc(const BoundaryPoint& a, const Slope& lo, const Slope& hi,
                          const StabilizationBudget& budget = {});

// n consecutive-convergent edges (c_{k-1}, c_k), k = 1..n; the value
// intervals they cut are strictly nested around a.
std::vector<FareyEdge> nested_edges(const BoundaryPoint& a, size_t count);

struct RaySegment {
    Slope origin;
    std::vector<Slope> vertices;   // length+1 vertices, a geodesic
    std::string target;            // textual form of the boundary point
    size_t stable_depth = 0;       // certified prefix length (edges)
};

// Geodesic of `length` edges from x toward a: the prefix-stable greedy
// extension (lexicographically least stabilized next vertex at each step).
RaySegment ray(const Slope& x, const BoundaryPoint& a, size_t length,
               const StabilizationBudget& budget = {});

// G(y, a)_t: the set of t-th vertices over geodesic rays from y to a,
// stabilized over convergent depth.
std::vector<Slope> geodesic_sphere(const Slope& y, const BoundaryPoint& a, int t,
                                   const StabilizationBudget& budget = {});

struct GromovProductBounds {
    int low = 0, high = 0;
    FareyEdge low_edge, high_edge;
};

// bracketing bounds for the Gromov product (a|b)_base from separating
// edges: low = d(base, e) - 2 over e separating base from {a, b} (deepest
// common edge), high = d(base, e) + 1 over e separating {base and one
// point} from the other (first post-split edge).
GromovProductBounds gromov_product_bounds(const BoundaryPoint& a, const BoundaryPoint& b,
                                          const Slope& base,
                                          const StabilizationBudget& budget = {});

} // namespace ccx
