#pragma once

// Hyperbolicity statistics over a GraphOracle. All values are half-integers
// held as doubled ints (no floating point). Every delta here is a sample
// statistic, never a claimed global constant.

#include "ccx/errors.hpp"
#include "ccx/graphs.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <string>
#include <vector>

namespace ccx::hyp {

struct HyperbolicityReport {
    int four_point_x2 = 0;  // doubled four-point delta over the sample
    int slim_x2 = 0;        // doubled slim-triangle delta over the sample
    std::string sample;
};

// 2 * (x|y)_z = d(x,z) + d(y,z) - d(x,y)
template <GraphOracle B>
int gromov_product_x2(const B& b, const typename B::Vertex& x, const typename B::Vertex& y,
                      const typename B::Vertex& z) {
    return b.distance(x, z) + b.distance(y, z) - b.distance(x, y);
}

// minimal doubled delta with (x|z)_w >= min((x|y)_w, (y|z)_w) - delta over
// all ordered quadruples of the sample
template <GraphOracle B>
int four_point_delta_x2(const B& b, const std::vector<typename B::Vertex>& sample) {
    const size_t n = sample.size();
    if (n < 4) throw PreconditionError("four_point_delta: need at least 4 vertices");
    std::vector<std::vector<int>> d(n, std::vector<int>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) d[i][j] = d[j][i] = b.distance(sample[i], sample[j]);
    auto gp2 = [&](size_t x, size_t y, size_t w) { return d[x][w] + d[y][w] - d[x][y]; };
    int delta2 = 0;
    for (size_t w = 0; w < n; ++w)
        for (size_t x = 0; x < n; ++x)
            for (size_t y = 0; y < n; ++y)
                for (size_t z = 0; z < n; ++z) {
                    if (w == x || w == y || w == z || x == y || x == z || y == z) continue;
                    int lack = std::min(gp2(x, y, w), gp2(y, z, w)) - gp2(x, z, w);
                    delta2 = std::max(delta2, lack);
                }
    return delta2;
}

namespace detail {

template <GraphOracle B>
int side_to_sides_max_x2(const B& b, const std::vector<typename B::Vertex>& side,
                         const std::vector<typename B::Vertex>& o1,
                         const std::vector<typename B::Vertex>& o2) {
    int worst = 0;
    for (const auto& v : side) {
        int best = -1;
        for (const auto& w : o1) {
            int dd = b.distance(v, w);
            if (best < 0 || dd < best) best = dd;
        }
        for (const auto& w : o2) {
            int dd = b.distance(v, w);
            if (best < 0 || dd < best) best = dd;
        }
        worst = std::max(worst, best);
    }
    return 2 * worst;
}

}  // namespace detail

// For each triangle: the best (minimal) slimness over choices of one
// geodesic per side; the report value is the max over triangles. Slimness
// only needs existence of good representatives, so the statistic picks them.
template <GraphOracle B>
int slim_delta_x2(const B& b,
                  const std::vector<std::array<typename B::Vertex, 3>>& triangles) {
    int out = 0;
    for (const auto& tri : triangles) {
        auto g01 = b.geodesics(tri[0], tri[1]);
        auto g12 = b.geodesics(tri[1], tri[2]);
        auto g20 = b.geodesics(tri[2], tri[0]);
        int best = -1;
        for (const auto& f : g01)
            for (const auto& g : g12)
                for (const auto& h : g20) {
                    int s = std::max({detail::side_to_sides_max_x2(b, f, g, h),
                                      detail::side_to_sides_max_x2(b, g, h, f),
                                      detail::side_to_sides_max_x2(b, h, f, g)});
                    if (best < 0 || s < best) best = s;
                }
        out = std::max(out, best);
    }
    return out;
}

// pointwise closeness of two equally long geodesic segments
template <GraphOracle B>
bool r_close(const B& b, const std::vector<typename B::Vertex>& f,
             const std::vector<typename B::Vertex>& g, int r) {
    if (f.size() != g.size()) throw PreconditionError("r_close: length mismatch");
    for (size_t i = 0; i < f.size(); ++i)
        if (b.distance(f[i], g[i]) > r) return false;
    return true;
}

template <class V>
std::vector<V> central_segment(const std::vector<V>& f, int r) {
    if (r < 0 || f.size() < 2 * static_cast<size_t>(r) + 1)
        throw PreconditionError("central_segment: over-trim");
    return std::vector<V>(f.begin() + r, f.end() - r);
}

} // namespace ccx::hyp
