#pragma once

// Busemann functions on a hyperbolic graph backend with boundary targets,
// and the windowed MIN-set computation.
//
//   alpha_a(x,y) = limsup_t ( d(x, G(y,a)_t) - t )   (min over the sphere)
//   beta_a(x,y)  = sup_h limsup_t ( d(x, h(t)) - t ) (max over the sphere)
//
// Tail limsups are certified by a plateau: the maximum over the last
// `window` layers must equal the maximum over the last 2*window layers,
// otherwise StabilizationError. On trees both notions coincide exactly.

#include "ccx/boundary.hpp"
#include "ccx/errors.hpp"
#include "ccx/graphs.hpp"

#include <algorithm>
#include <array>
#include <concepts>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

namespace ccx::busemann {

template <class B>
concept Backend = requires(const B& b, const typename B::Vertex& v,
                           const typename B::Target& a, int t, size_t n) {
    { b.distance(v, v) } -> std::convertible_to<int>;
    { b.sphere(v, a, t) } -> std::convertible_to<std::vector<typename B::Vertex>>;
    { b.approximant(a, n) } -> std::convertible_to<typename B::Vertex>;
    { b.segment_vertices(v, v) } -> std::convertible_to<std::vector<typename B::Vertex>>;
    { b.probe_step() } -> std::convertible_to<size_t>;
    { b.max_depth(a) } -> std::convertible_to<size_t>;
};

struct BusemannValue {
    int value = 0;
    char mode = 'a';  // 'a' or 'b'
    int horizon = 0;
    int window = 0;
};

template <class V>
struct MinSetResult {
    std::vector<V> centers;
    std::vector<V> region;    // candidate window, X-membership filtered
    std::vector<V> boundary;  // outermost region layer
    std::vector<V> ms;        // union over bases of argmin sets
    std::vector<V> ms_prime;  // radius-3 closure of ms inside the region
    std::vector<std::pair<V, long long>> base_minima;  // (base, MV^y)
    long long margin = 0;     // min over bases of boundary-min minus MV^y
    int window_radius = 0;
    int delta_x2_used = 0;
    bool certified = false;   // margin > 672*delta + 3
};

template <Backend B>
class Engine {
public:
    using V = typename B::Vertex;
    using T = typename B::Target;

    explicit Engine(B backend, int window = 4) : b_(std::move(backend)), window_(window) {}

    const B& backend() const { return b_; }
    int window() const { return window_; }

    BusemannValue alpha(const T& a, const V& x, const V& y, int horizon) const {
        auto cache = sphere_cache(y, a);
        return tail_value(cache, x, y, horizon, false);
    }
    BusemannValue beta(const T& a, const V& x, const V& y, int horizon) const {
        auto cache = sphere_cache(y, a);
        return tail_value(cache, x, y, horizon, true);
    }

    // (|beta(x,y)+beta(y,x)|, |beta(x,y)+beta(y,z)-beta(x,z)|)
    std::pair<int, int> cocycle_defects(const T& a, const V& x, const V& y, const V& z,
                                        int horizon) const {
        int bxy = beta(a, x, y, horizon).value;
        int byx = beta(a, y, x, horizon).value;
        int byz = beta(a, y, z, horizon).value;
        int bxz = beta(a, x, z, horizon).value;
        return {std::abs(bxy + byx), std::abs(bxy + byz - bxz)};
    }

    // F^y_{abc}(w); by default verifies w sits in the realized union of
    // geodesic sets (side membership toward one of the three targets)
    long long minset_eval(const T& a, const T& b, const T& c, const V& y, const V& w,
                          bool check_membership = true) const {
        if (check_membership) {
            bool member = (on_side(w, a, b) && on_ray(w, w, b)) ||
                          (on_side(w, b, c) && on_ray(w, w, c)) ||
                          (on_side(w, c, a) && on_ray(w, w, a));
            if (!member)
                throw PreconditionError("minset_eval: w fails the X(a,b,c) membership test");
        }
        int horizon = b_.distance(w, y) + 2 * window_ + 2;
        return static_cast<long long>(alpha(a, w, y, horizon).value) +
               alpha(b, w, y, horizon).value + alpha(c, w, y, horizon).value;
    }

    // does w lie on a stabilized geodesic from x toward the target?
    // approximants of two consecutive depths bracket the target, so the
    // membership is the OR over both truncations, stabilized over probes
    bool on_ray(const V& x, const V& w, const T& target) const {
        size_t step = b_.probe_step();
        int dxw = b_.distance(x, w);
        size_t n = 8;
        std::optional<bool> prev;
        while (n + 1 <= b_.max_depth(target)) {
            bool ready = true, cur = false;
            for (size_t m : {n, n + 1}) {
                V e = b_.approximant(target, m);
                int dxe = b_.distance(x, e);
                if (dxe < dxw + 2) ready = false;
                else cur = cur || (dxw + b_.distance(w, e) == dxe);
            }
            if (ready) {
                if (prev && *prev == cur) return cur;
                prev = cur;
            }
            n += step;
        }
        throw StabilizationError("on_ray: membership did not stabilize");
    }

    // does w lie between the two targets (on the bi-infinite side)?
    bool on_side(const V& w, const T& a, const T& b) const {
        size_t step = b_.probe_step();
        size_t n = 8;
        std::optional<bool> prev;
        while (n + 1 <= std::min(b_.max_depth(a), b_.max_depth(b))) {
            bool ready = true, cur = false;
            for (size_t ma : {n, n + 1})
                for (size_t mb : {n, n + 1}) {
                    V ea = b_.approximant(a, ma), eb = b_.approximant(b, mb);
                    int dab = b_.distance(ea, eb);
                    if (dab < 6) ready = false;
                    else cur = cur || (b_.distance(ea, w) + b_.distance(w, eb) == dab);
                }
            if (ready) {
                if (prev && *prev == cur) return cur;
                prev = cur;
            }
            n += step;
        }
        throw StabilizationError("on_side: membership did not stabilize");
    }

    struct MinSetParams {
        int window_radius = 6;
        std::vector<V> bases;
        int delta_x2 = 2;     // doubled sample delta-hat for the certificate
        size_t pool_depth = 40;
    };

    MinSetResult<V> min_set(const T& a, const T& b, const T& c, const MinSetParams& prm) const;

private:
    B b_;
    int window_;

    struct SphereCache {
        const B* b;
        const V* y;
        const T* a;
        mutable std::map<int, std::vector<V>> layers;
        const std::vector<V>& operator()(int t) const {
            auto it = layers.find(t);
            if (it == layers.end()) it = layers.emplace(t, b->sphere(*y, *a, t)).first;
            return it->second;
        }
    };

    SphereCache sphere_cache(const V& y, const T& a) const { return SphereCache{&b_, &y, &a, {}}; }

    template <class Sph>
    BusemannValue tail_value(const Sph& sphere_of, const V& x, const V& y, int horizon,
                             bool use_max) const {
        int w = window_;
        if (horizon < b_.distance(x, y) + 2 * w)
            throw PreconditionError("busemann: horizon below d(x,y) + 2*window");
        std::vector<int> vals;
        for (int t = horizon - 2 * w; t <= horizon; ++t) {
            const std::vector<V>& sph = sphere_of(t);
            if (sph.empty()) throw InvariantError("busemann: empty sphere");
            int best = 0;
            bool first = true;
            for (const V& v : sph) {
                int d = b_.distance(x, v);
                if (first || (use_max ? d > best : d < best)) best = d;
                first = false;
            }
            vals.push_back(best - t);
        }
        int tail = *std::max_element(vals.end() - (w + 1), vals.end());
        int full = *std::max_element(vals.begin(), vals.end());
        if (tail != full)
            throw StabilizationError("busemann: tail plateau not reached at this horizon");
        BusemannValue out;
        out.value = tail;
        out.mode = use_max ? 'b' : 'a';
        out.horizon = horizon;
        out.window = w;
        return out;
    }
};

template <Backend B>
MinSetResult<typename B::Vertex> Engine<B>::min_set(const T& a, const T& b, const T& c,
                                                    const MinSetParams& prm) const {
    using std::vector;
    std::array<const T*, 3> first{&a, &b, &c};
    std::array<const T*, 3> second{&b, &c, &a};
    // candidate pool: geodesic vertices between deep approximants, per pair,
    // kept only when the two-probe side membership stabilizes to true
    vector<V> pool;
    std::array<vector<V>, 3> sides;
    for (size_t i = 0; i < 3; ++i) {
        std::vector<V> raw;
        for (size_t ma : {prm.pool_depth, prm.pool_depth + 1})
            for (size_t mb : {prm.pool_depth, prm.pool_depth + 1}) {
                V u = b_.approximant(*first[i], ma);
                V v = b_.approximant(*second[i], mb);
                for (const V& w : b_.segment_vertices(u, v))
                    if (std::find(raw.begin(), raw.end(), w) == raw.end()) raw.push_back(w);
            }
        for (const V& w : raw)
            if (on_side(w, *first[i], *second[i])) sides[i].push_back(w);
        for (const V& w : sides[i])
            if (std::find(pool.begin(), pool.end(), w) == pool.end()) pool.push_back(w);
    }
    for (const auto& s : sides)
        if (s.empty()) throw StabilizationError("min_set: empty side approximation");
    auto dist_to_set = [&](const V& v, const vector<V>& s) {
        int best = -1;
        for (const V& w : s) {
            int d = b_.distance(v, w);
            if (best < 0 || d < best) best = d;
        }
        return best;
    };
    // coarse center: minimize the max distance to the three sides
    int best_score = -1;
    vector<V> centers;
    for (const V& v : pool) {
        int score = 0;
        for (const auto& s : sides) score = std::max(score, dist_to_set(v, s));
        if (best_score < 0 || score < best_score) {
            best_score = score;
            centers.clear();
        }
        if (score == best_score) centers.push_back(v);
    }
    std::sort(centers.begin(), centers.end());
    // window region, X-membership filtered
    const int R = prm.window_radius;
    vector<V> region, boundary;
    for (const V& w : pool) {
        int dc = dist_to_set(w, centers);
        if (dc > R) continue;
        bool member = false;
        for (size_t i = 0; i < 3 && !member; ++i) {
            if (!on_side(w, *first[i], *second[i])) continue;
            member = on_ray(w, w, *second[i]);
        }
        if (!member) continue;
        region.push_back(w);
        if (dc == R) boundary.push_back(w);
    }
    if (region.empty()) throw StabilizationError("min_set: empty region");
    if (boundary.empty())
        throw StabilizationError("min_set: no boundary layer; enlarge the window");
    std::sort(region.begin(), region.end());
    std::sort(boundary.begin(), boundary.end());
    MinSetResult<V> out;
    out.centers = centers;
    out.region = region;
    out.boundary = boundary;
    out.window_radius = R;
    out.delta_x2_used = prm.delta_x2;
    // per-base minimization with shared sphere caches
    long long margin = -1;
    vector<V> ms;
    for (const V& y : prm.bases) {
        auto ca = sphere_cache(y, a);
        auto cb = sphere_cache(y, b);
        auto cc = sphere_cache(y, c);
        std::map<V, long long> fvals;
        long long mv = 0;
        bool firstv = true;
        for (const V& w : region) {
            int horizon = b_.distance(w, y) + 2 * window_ + 2;
            long long f = static_cast<long long>(tail_value(ca, w, y, horizon, false).value) +
                          tail_value(cb, w, y, horizon, false).value +
                          tail_value(cc, w, y, horizon, false).value;
            fvals[w] = f;
            if (firstv || f < mv) mv = f, firstv = false;
        }
        for (const V& w : region)
            if (fvals[w] == mv && std::find(ms.begin(), ms.end(), w) == ms.end())
                ms.push_back(w);
        long long bmin = 0;
        firstv = true;
        for (const V& w : boundary)
            if (firstv || fvals[w] < bmin) bmin = fvals[w], firstv = false;
        long long m = bmin - mv;
        if (margin < 0 || m < margin) margin = m;
        out.base_minima.emplace_back(y, mv);
    }
    if (margin <= 0)
        throw StabilizationError("min_set: nonpositive boundary margin; enlarge the window");
    std::sort(ms.begin(), ms.end());
    out.ms = ms;
    for (const V& w : region)
        if (dist_to_set(w, ms) <= 3) out.ms_prime.push_back(w);
    std::sort(out.ms_prime.begin(), out.ms_prime.end());
    out.margin = margin;
    out.certified = 2 * margin > 672LL * prm.delta_x2 + 6;
    return out;
}

// ---- backends ----

struct FareyBusemann {
    using Vertex = Slope;
    using Target = BoundaryPoint;

    StabilizationBudget budget{};
    // distance memo, shared across copies and internally synchronized
    // (sphere/region scans revisit the same pairs constantly)
    struct DistanceMemo {
        std::mutex mu;
        std::map<std::pair<Slope, Slope>, int> map;
    };
    std::shared_ptr<DistanceMemo> memo = std::make_shared<DistanceMemo>();

    int distance(const Slope& x, const Slope& y) const {
        auto key = x < y ? std::make_pair(x, y) : std::make_pair(y, x);
        {
            std::lock_guard<std::mutex> lock(memo->mu);
            auto it = memo->map.find(key);
            if (it != memo->map.end()) return it->second;
        }
        int d = farey::distance(x, y);
        std::lock_guard<std::mutex> lock(memo->mu);
        memo->map.emplace(std::move(key), d);
        return d;
    }
    std::vector<Slope> sphere(const Slope& y, const BoundaryPoint& a, int t) const {
        return geodesic_sphere(y, a, t, budget);
    }
    Slope approximant(const BoundaryPoint& a, size_t n) const { return convergent(a, n); }
    size_t probe_step() const { return static_cast<size_t>(budget.step); }
    size_t max_depth(const BoundaryPoint& a) const {
        return std::min(budget.max_depth, a.available_depth());
    }
    std::vector<Slope> segment_vertices(const Slope& u, const Slope& v) const {
        return farey::geodesic_vertices(u, v);
    }
};

struct TreeBusemann {
    using Vertex = std::string;
    using Target = TreeEnd;

    TreeBackend tree{3};
    size_t depth_cap = 96;

    int distance(const std::string& x, const std::string& y) const {
        return tree.distance(x, y);
    }
    std::vector<std::string> sphere(const std::string& y, const TreeEnd& a, int t) const {
        return {tree_ray_vertex(tree, y, a, t)};
    }
    std::string approximant(const TreeEnd& a, size_t n) const { return a.prefix(n); }
    size_t probe_step() const { return 2; }
    size_t max_depth(const TreeEnd&) const { return depth_cap; }
    std::vector<std::string> segment_vertices(const std::string& u, const std::string& v) const {
        return tree.geodesics(u, v).front();
    }
};

} // namespace ccx::busemann
