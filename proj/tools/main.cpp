// ccx: command-line front end for the Farey curve-complex toolkit.
// Subcommands emit deterministic JSON (default) or CSV reports; every
// report embeds the exact parameters and exactness flags. Exit codes:
// 0 success, 2 precondition, 3 budget/stabilization, 4 internal invariant.

#include <CLI11.hpp>
#include <json.hpp>

#include "ccx/boundary.hpp"
#include "ccx/busemann.hpp"
#include "ccx/errors.hpp"
#include "ccx/farey.hpp"
#include "ccx/graphs.hpp"
#include "ccx/hyp.hpp"
#include "ccx/mcg.hpp"
#include "ccx/propa.hpp"
#include "ccx/rng.hpp"
#include "ccx/slope.hpp"
#include "ccx/surfaces.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <mutex>
#include <thread>

using json = nlohmann::ordered_json;
using namespace ccx;

namespace {

constexpr const char* kVersion = "0.1.0";

struct Output {
    std::string format = "json";
    std::string path;

    void emit(const json& j, const std::string& csv) const {
        std::ostringstream os;
        if (format == "csv") os << csv;
        else os << j.dump(2) << "\n";
        if (path.empty()) {
            std::cout << os.str();
        } else {
            std::ofstream f(path);
            if (!f) throw PreconditionError("cannot open output path " + path);
            f << os.str();
        }
    }
};

json base_report(const std::string& sub) {
    json j;
    j["tool"] = "ccx";
    j["version"] = kVersion;
    j["subcommand"] = sub;
    return j;
}

int thread_count() {
    if (const char* env = std::getenv("CCX_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    return 1;
}

template <class Fn>
void parallel_rows(size_t count, Fn&& fn) {
    int threads = thread_count();
    if (threads <= 1) {
        for (size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::exception_ptr first_error;
    std::mutex mu;
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
            try {
                for (size_t i = static_cast<size_t>(t); i < count;
                     i += static_cast<size_t>(threads))
                    fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(mu);
                if (!first_error) first_error = std::current_exception();
            }
        });
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

std::vector<std::string> path_strings(const std::vector<Slope>& path) {
    std::vector<std::string> out;
    out.reserve(path.size());
    for (const auto& s : path) out.push_back(s.to_string());
    return out;
}

Slope rand_slope(Rng& rng, long long bound) {
    while (true) {
        long long p = rng.range(-bound, bound), q = rng.range(0, bound);
        if (p || q) return Slope(p, q);
    }
}

BoundaryPoint rand_quadratic(Rng& rng) {
    BigInt head(rng.range(-2, 2));
    std::vector<BigInt> pre, per;
    size_t npre = rng.below(3);
    for (size_t i = 0; i < npre; ++i) pre.emplace_back(rng.range(1, 3));
    size_t nper = 1 + rng.below(3);
    for (size_t i = 0; i < nper; ++i) per.emplace_back(rng.range(1, 3));
    return BoundaryPoint(head, pre, per);
}

void run_distance(const Output& out, const std::string& xs, const std::string& ys) {
    Slope x(xs), y(ys);
    int d = farey::distance(x, y);
    json j = base_report("distance");
    j["params"] = {{"x", x.to_string()}, {"y", y.to_string()}};
    j["distance"] = d;
    std::ostringstream csv;
    csv << "x,y,distance\n" << x.to_string() << "," << y.to_string() << "," << d << "\n";
    out.emit(j, csv.str());
}

void run_geodesics(const Output& out, const std::string& xs, const std::string& ys) {
    Slope x(xs), y(ys);
    auto paths = farey::geodesics(x, y);
    json j = base_report("geodesics");
    j["params"] = {{"x", x.to_string()}, {"y", y.to_string()}};
    j["count"] = paths.size();
    j["geodesics"] = json::array();
    for (const auto& p : paths) j["geodesics"].push_back(path_strings(p));
    std::ostringstream csv;
    csv << "index,path\n";
    for (size_t i = 0; i < paths.size(); ++i) {
        csv << i << ",";
        for (size_t k = 0; k < paths[i].size(); ++k)
            csv << (k ? " " : "") << paths[i][k].to_string();
        csv << "\n";
    }
    out.emit(j, csv.str());
}

void run_pivots(const Output& out, const std::string& xs, const std::string& ys) {
    Slope x(xs), y(ys);
    auto pv = farey::pivots(x, y);
    auto edges = farey::separating_edges(x, y);
    json j = base_report("pivots");
    j["params"] = {{"x", x.to_string()}, {"y", y.to_string()}};
    j["separating_edges"] = json::array();
    for (const auto& e : edges) j["separating_edges"].push_back(e.to_string());
    j["pivots"] = json::array();
    for (const auto& pr : pv)
        j["pivots"].push_back({{"vertex", pr.vertex.to_string()}, {"weight", pr.weight}});
    std::ostringstream csv;
    csv << "vertex,weight\n";
    for (const auto& pr : pv) csv << pr.vertex.to_string() << "," << pr.weight << "\n";
    out.emit(j, csv.str());
}

void run_ray(const Output& out, const std::string& xs, const std::string& as, long long L) {
    Slope x(xs);
    BoundaryPoint a = BoundaryPoint::parse(as);
    RaySegment seg = ray(x, a, static_cast<size_t>(L));
    json j = base_report("ray");
    j["params"] = {{"x", x.to_string()}, {"a", a.to_string()}, {"length", L}};
    j["vertices"] = path_strings(seg.vertices);
    j["stable_depth"] = seg.stable_depth;
    std::ostringstream csv;
    csv << "index,vertex\n";
    for (size_t i = 0; i < seg.vertices.size(); ++i)
        csv << i << "," << seg.vertices[i].to_string() << "\n";
    out.emit(j, csv.str());
}

void run_classify(const Output& out, const std::string& ms) {
    SL2Matrix m = SL2Matrix::parse(ms);
    auto cls = mcg::classify(m);
    json j = base_report("classify");
    j["params"] = {{"matrix", m.to_string()}};
    j["kind"] = cls.kind_name();
    if (cls.kind == mcg::ElementKind::FiniteOrder) j["order"] = cls.order;
    if (cls.fixed_slope) j["fixed_slope"] = cls.fixed_slope->to_string();
    if (cls.dilatation) j["dilatation"] = cls.dilatation->to_string();
    if (cls.f_plus_cf) j["f_plus"] = cls.f_plus_cf->to_string();
    if (cls.f_minus_cf) j["f_minus"] = cls.f_minus_cf->to_string();
    std::ostringstream csv;
    csv << "matrix,kind,order,fixed,dilatation,f_plus,f_minus\n";
    csv << m.to_string() << "," << cls.kind_name() << ","
        << (cls.kind == mcg::ElementKind::FiniteOrder ? std::to_string(cls.order) : "") << ","
        << (cls.fixed_slope ? cls.fixed_slope->to_string() : "") << ","
        << (cls.dilatation ? cls.dilatation->to_string() : "") << ","
        << (cls.f_plus_cf ? cls.f_plus_cf->to_string() : "") << ","
        << (cls.f_minus_cf ? cls.f_minus_cf->to_string() : "") << "\n";
    out.emit(j, csv.str());
}

void run_busemann(const Output& out, const std::string& as, const std::string& xs,
                  const std::string& ys, int horizon) {
    BoundaryPoint a = BoundaryPoint::parse(as);
    Slope x(xs), y(ys);
    busemann::FareyBusemann fb;
    busemann::Engine<busemann::FareyBusemann> eng(fb, 3);
    if (horizon <= 0) horizon = farey::distance(x, y) + 8;
    auto av = eng.alpha(a, x, y, horizon);
    auto bv = eng.beta(a, x, y, horizon);
    json j = base_report("busemann");
    j["params"] = {{"a", a.to_string()},
                   {"x", x.to_string()},
                   {"y", y.to_string()},
                   {"horizon", horizon},
                   {"window", av.window}};
    j["alpha"] = av.value;
    j["beta"] = bv.value;
    j["gap"] = std::abs(av.value - bv.value);
    std::ostringstream csv;
    csv << "a,x,y,horizon,alpha,beta\n";
    csv << a.to_string() << "," << x.to_string() << "," << y.to_string() << "," << horizon << ","
        << av.value << "," << bv.value << "\n";
    out.emit(j, csv.str());
}

void run_minset(const Output& out, const std::string& as, const std::string& bs,
                const std::string& cs, int window, const std::string& bases_csv) {
    BoundaryPoint a = BoundaryPoint::parse(as);
    BoundaryPoint b = BoundaryPoint::parse(bs);
    BoundaryPoint c = BoundaryPoint::parse(cs);
    busemann::FareyBusemann fb;
    fb.budget.max_depth = 128;
    busemann::Engine<busemann::FareyBusemann> eng(fb, 3);
    busemann::Engine<busemann::FareyBusemann>::MinSetParams prm;
    prm.window_radius = window;
    std::istringstream in(bases_csv);
    std::string tok;
    while (std::getline(in, tok, ',')) prm.bases.emplace_back(tok);
    if (prm.bases.empty()) prm.bases = {Slope(0, 1), Slope(1, 1)};
    auto res = eng.min_set(a, b, c, prm);
    json j = base_report("minset");
    j["params"] = {
        {"a", a.to_string()}, {"b", b.to_string()}, {"c", c.to_string()}, {"window", window}};
    json jb = json::array();
    for (const auto& s : prm.bases) jb.push_back(s.to_string());
    j["params"]["bases"] = jb;
    j["ms"] = path_strings(res.ms);
    j["ms_prime"] = path_strings(res.ms_prime);
    j["centers"] = path_strings(res.centers);
    j["margin"] = res.margin;
    j["delta_x2_used"] = res.delta_x2_used;
    j["certified"] = res.certified;
    std::ostringstream csv;
    csv << "set,slopes\n";
    csv << "MS,";
    for (size_t i = 0; i < res.ms.size(); ++i) csv << (i ? " " : "") << res.ms[i].to_string();
    csv << "\nMS',";
    for (size_t i = 0; i < res.ms_prime.size(); ++i)
        csv << (i ? " " : "") << res.ms_prime[i].to_string();
    csv << "\n";
    out.emit(j, csv.str());
}

void run_twist_check(const Output& out, long long samples, uint64_t seed) {
    Rng rng(seed);
    long long ineq_pass = 0, nonfix_pass = 0, commute_pass = 0;
    for (long long i = 0; i < samples; ++i) {
        Slope alpha = rand_slope(rng, 9);
        Slope beta = rand_slope(rng, 9);
        Slope gamma = rand_slope(rng, 9);
        long long n = rng.range(-9, 9);
        if (mcg::twist_inequality_check(alpha, n, beta, gamma)) ++ineq_pass;
        if (!intersection_number(alpha, beta).is_zero()) {
            long long nn = rng.coin() ? 3 + static_cast<long long>(rng.below(5))
                                      : -3 - static_cast<long long>(rng.below(5));
            if (mcg::twist_nonfix_check(alpha, beta, nn)) ++nonfix_pass;
            if (!mcg::commuting_check(alpha, beta, 1 + static_cast<long long>(rng.below(4)),
                                      1 + static_cast<long long>(rng.below(4))))
                ++commute_pass;
        } else {
            ++nonfix_pass;
            ++commute_pass;
        }
    }
    json j = base_report("twist-check");
    j["params"] = {{"samples", samples}, {"seed", seed}};
    j["inequality_pass"] = ineq_pass;
    j["nonfix_pass"] = nonfix_pass;
    j["noncommute_pass"] = commute_pass;
    j["all_pass"] = (ineq_pass == samples && nonfix_pass == samples && commute_pass == samples);
    std::ostringstream csv;
    csv << "samples,seed,inequality_pass,nonfix_pass,noncommute_pass\n";
    csv << samples << "," << seed << "," << ineq_pass << "," << nonfix_pass << ","
        << commute_pass << "\n";
    out.emit(j, csv.str());
}

void run_decomp_enum(const Output& out, int g, int p) {
    surfaces::SurfaceType s{g, p};
    auto all = surfaces::enumerate_decompositions(s);
    json j = base_report("decomp-enum");
    j["params"] = {{"g", g}, {"p", p}};
    j["kappa"] = surfaces::complexity(s);
    j["types"] = all.size();
    j["decompositions"] = json::array();
    std::ostringstream csv;
    csv << "index,curves,n_value,tree,graph\n";
    for (size_t i = 0; i < all.size(); ++i) {
        const auto& d = all[i];
        j["decompositions"].push_back({{"graph", d.to_string()},
                                       {"curves", d.edge_count()},
                                       {"n_value", d.n_value()},
                                       {"tree", d.is_tree()}});
        csv << i << "," << d.edge_count() << "," << d.n_value() << "," << (d.is_tree() ? 1 : 0)
            << "," << d.to_string() << "\n";
    }
    out.emit(j, csv.str());
}

void run_verify_lemmas(const Output& out, int g, int p) {
    surfaces::SurfaceType s{g, p};
    auto maxr = surfaces::verify_max_lemma(s);
    auto parr = surfaces::verify_parity_lemmas(s);
    auto extr = surfaces::extension_predicate_checks(s);
    bool pass = maxr.pass && parr.pass && extr.pass;
    json j = base_report("verify-lemmas");
    j["params"] = {{"g", g}, {"p", p}};
    j["kappa"] = surfaces::complexity(s);
    j["n_max_formula"] = maxr.formula;
    j["n_max_enumerated"] = maxr.enumerated;
    j["types"] = maxr.types;
    j["maximizers"] = maxr.maximizers;
    j["parity_pass"] = parr.pass;
    j["extension_configs"] = extr.configurations;
    j["extension_mismatches"] = extr.mismatches;
    j["verdict"] = pass ? "PASS" : "FAIL";
    std::ostringstream csv;
    csv << "g,p,kappa,n_max,types,maximizers,parity_verdict\n";
    csv << g << "," << p << "," << surfaces::complexity(s) << "," << maxr.enumerated << ","
        << maxr.types << "," << maxr.maximizers << "," << (pass ? "PASS" : "FAIL") << "\n";
    out.emit(j, csv.str());
}

void run_invariants(const Output& out, int g, int p) {
    surfaces::SurfaceType s{g, p};
    Rational chi = surfaces::virtual_euler(s);
    auto [idx, beta] = surfaces::l2_betti(s);
    json j = base_report("invariants");
    j["params"] = {{"g", g}, {"p", p}};
    j["kappa"] = surfaces::complexity(s);
    j["virtual_euler"] = chi.to_string();
    j["l2_betti_index"] = idx;
    j["l2_betti"] = beta.to_string();
    if (g == 1 && p == 1)
        j["cost_note"] = "SL(2,Z) has fixed price and cost " +
                         surfaces::sl2z_cost().to_string() + " = 1 + beta_1";
    std::ostringstream csv;
    csv << "g,p,kappa,virtual_euler,l2_index,l2_betti\n";
    csv << g << "," << p << "," << surfaces::complexity(s) << "," << chi.to_string() << "," << idx
        << "," << beta.to_string() << "\n";
    out.emit(j, csv.str());
}

struct ScanRow {
    long long n = 0;
    size_t pair_id = 0;
    int dxy = 0;
    std::string diff;
    std::string bound;
    bool within = false;
    std::string exact;
};

// witnesses on a finite edge-list graph: the target is a designated far
// vertex standing in for a boundary direction; exact whenever the distance
// budget allows the [n, 2n] segments
propa::FWitness<int> file_f_witness(const FiniteGraph& g, int x, int target, long long k,
                                    long long n) {
    if (g.distance(x, target) < 2 * n + k + 1)
        throw PreconditionError("propa-scan(file): target too close for the [n,2n] segment");
    std::set<int> sup;
    for (int base : g.ball(x, static_cast<int>(k))) {
        for (const auto& path : g.geodesics(base, target))
            for (long long t = n; t <= 2 * n && t < static_cast<long long>(path.size()); ++t)
                sup.insert(path[static_cast<size_t>(t)]);
    }
    propa::FWitness<int> w;
    w.support.assign(sup.begin(), sup.end());
    w.k = k;
    w.n = n;
    w.exact = true;
    return w;
}

propa::HWitness<int> file_h_witness(const FiniteGraph& g, int x, int target, long long n,
                                    const propa::Config& cfg) {
    propa::check_h_precondition(cfg, n);
    propa::HWitness<int> h;
    h.n = n;
    h.exact = true;
    long long s = 1;
    while (s * s < n) ++s;
    for (long long k = 0; k < s; ++k)
        for (int v : file_f_witness(g, x, target, k, n).support) ++h.mult[v];
    return h;
}

void run_propa_scan(const Output& out, const std::string& graph, long long n_lo, long long n_hi,
                    long long pairs, long long trunc_bound, uint64_t seed,
                    const std::string& graph_file, const std::string& target_name) {
    std::vector<long long> ns;
    for (long long n = n_lo; n <= n_hi; ++n) ns.push_back(n);
    if (ns.empty() || pairs < 1) throw PreconditionError("propa-scan: empty scan");
    std::vector<ScanRow> rows;
    json params = {{"graph", graph},   {"n_lo", n_lo}, {"n_hi", n_hi},
                   {"pairs", pairs},   {"seed", seed}, {"trunc_bound", trunc_bound},
                   {"threads", thread_count()}};
    if (graph == "tree3") {
        propa::TreePropa eng(TreeBackend(3), propa::Config::tree());
        TreeEnd end{"", "0"};
        Rng rng(seed);
        TreeBackend t(3);
        std::vector<std::pair<std::string, std::string>> ps;
        for (long long i = 0; i < pairs; ++i) {
            std::string x;
            size_t len = rng.below(4);
            for (size_t k = 0; k < len; ++k)
                x.push_back(static_cast<char>('0' + rng.below(k == 0 ? 3 : 2)));
            auto nb = t.neighbors(x);
            ps.emplace_back(x, nb[rng.below(nb.size())]);
        }
        rows.resize(ns.size() * ps.size());
        parallel_rows(rows.size(), [&](size_t i) {
            long long n = ns[i / ps.size()];
            size_t pid = i % ps.size();
            auto hx = eng.h_witness(ps[pid].first, end, n);
            auto hy = eng.h_witness(ps[pid].second, end, n);
            BigInt d = propa::h_difference_scaled(hx, hy);
            int dxy = t.distance(ps[pid].first, ps[pid].second);
            long long R = dxy + 1;
            ScanRow r;
            r.n = n;
            r.pair_id = pid;
            r.dxy = dxy;
            r.diff = propa::scaled_to_string(d, n);
            BigInt A = BigInt(2 * R * eng.config().P1) * BigInt(n + 2 * eng.config().delta0 + 1);
            r.bound = "(" + A.to_string() + "+" + std::to_string(4 * R * eng.config().P1) +
                      "*sqrt(" + std::to_string(n) + "))/" + std::to_string(n) + "^(3/2)";
            r.within = propa::h_diff_bound_holds(d, n, R, eng.config().delta0, eng.config().P1);
            r.exact = "exact";
            rows[i] = std::move(r);
        });
    } else if (graph == "farey") {
        propa::FareyPropa eng(propa::Config{0, 1, 6, 54, false});
        Rng rng(seed);
        std::vector<std::pair<Slope, Slope>> ps;
        std::vector<BoundaryPoint> targets;
        for (long long i = 0; i < pairs; ++i) {
            Slope x = rand_slope(rng, 4);
            Slope y = apply_sl2(send_to_infinity(x).inverse(), Slope(rng.range(-3, 3), 1));
            ps.emplace_back(x, y);
            targets.push_back(rand_quadratic(rng));
        }
        rows.resize(ns.size() * ps.size());
        parallel_rows(rows.size(), [&](size_t i) {
            long long n = ns[i / ps.size()];
            size_t pid = i % ps.size();
            auto hx = eng.h_witness(ps[pid].first, targets[pid], n,
                                    propa::FareyPropa::Trunc(trunc_bound));
            auto hy = eng.h_witness(ps[pid].second, targets[pid], n,
                                    propa::FareyPropa::Trunc(trunc_bound));
            BigInt d = propa::h_difference_scaled(hx, hy);
            ScanRow r;
            r.n = n;
            r.pair_id = pid;
            r.dxy = farey::distance(ps[pid].first, ps[pid].second);
            r.diff = propa::scaled_to_string(d, n);
            // conservative configured bound, reported (not asserted) since
            // the Farey constants are untrusted
            long long R = r.dxy + 1;
            const auto& cfg = eng.config();
            BigInt A = BigInt(2 * R * cfg.P1) * BigInt(n + 2 * cfg.delta0 + 1);
            r.bound = "(" + A.to_string() + "+" + std::to_string(4 * R * cfg.P1) + "*sqrt(" +
                      std::to_string(n) + "))/" + std::to_string(n) + "^(3/2)";
            r.within = propa::h_diff_bound_holds(d, n, R, cfg.delta0, cfg.P1);
            r.exact =
                hx.exact && hy.exact ? "exact" : ("truncated@" + std::to_string(trunc_bound));
            rows[i] = std::move(r);
        });
    } else if (graph == "file") {
        if (graph_file.empty() || target_name.empty())
            throw PreconditionError("propa-scan: file graphs need --graph-file and --target");
        std::ifstream in(graph_file);
        if (!in) throw PreconditionError("propa-scan: cannot read " + graph_file);
        std::stringstream buf;
        buf << in.rdbuf();
        FiniteGraph g = FiniteGraph::from_edge_list_text(buf.str());
        int target = g.id(target_name);
        if (target < 0) throw PreconditionError("propa-scan: unknown target vertex");
        params["graph_file"] = graph_file;
        params["target"] = target_name;
        propa::Config cfg = propa::Config::tree();
        Rng rng(seed);
        // sample pairs far enough that every scanned n fits its [n,2n] window
        long long smax = 1;
        while (smax * smax < n_hi) ++smax;
        long long need = 2 * n_hi + smax + 2;
        std::vector<int> eligible;
        for (int v = 0; v < g.size(); ++v)
            if (g.distance(v, target) >= need && !g.neighbors(v).empty()) eligible.push_back(v);
        if (eligible.empty())
            throw PreconditionError("propa-scan(file): no vertex is " + std::to_string(need) +
                                    " away from the target; enlarge the graph or lower n");
        std::vector<std::pair<int, int>> ps;
        for (long long i = 0; i < pairs; ++i) {
            int x = eligible[rng.below(eligible.size())];
            const auto& nb = g.neighbors(x);
            ps.emplace_back(x, nb[rng.below(nb.size())]);
        }
        rows.resize(ns.size() * ps.size());
        parallel_rows(rows.size(), [&](size_t i) {
            long long n = ns[i / ps.size()];
            size_t pid = i % ps.size();
            auto hx = file_h_witness(g, ps[pid].first, target, n, cfg);
            auto hy = file_h_witness(g, ps[pid].second, target, n, cfg);
            BigInt d = propa::h_difference_scaled(hx, hy);
            ScanRow r;
            r.n = n;
            r.pair_id = pid;
            r.dxy = g.distance(ps[pid].first, ps[pid].second);
            r.diff = propa::scaled_to_string(d, n);
            r.bound = "reported";
            r.within = true;
            r.exact = "exact";
            rows[i] = std::move(r);
        });
    } else {
        throw PreconditionError("propa-scan: graph must be farey, tree3, or file");
    }
    json j = base_report("propa-scan");
    j["params"] = params;
    j["rows"] = json::array();
    std::ostringstream csv;
    csv << "n,pair_id,dxy,h_diff,bound,within,exact\n";
    for (const auto& r : rows) {
        j["rows"].push_back({{"n", r.n},
                             {"pair_id", r.pair_id},
                             {"dxy", r.dxy},
                             {"h_diff", r.diff},
                             {"bound", r.bound},
                             {"within", r.within},
                             {"exact", r.exact}});
        csv << r.n << "," << r.pair_id << "," << r.dxy << "," << r.diff << "," << r.bound << ","
            << (r.within ? 1 : 0) << "," << r.exact << "\n";
    }
    out.emit(j, csv.str());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Farey curve-complex toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    Output out;
    app.add_option("--format", out.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--output", out.path, "output file (default stdout)");

    std::function<void()> runner;

    std::string xs, ys, as, bs, cs, ms;
    long long L = 4, samples = 1000;
    long long n_lo = 4, n_hi = 9, pairs = 4, trunc_bound = 24;
    int horizon = 0, window = 4, g = 1, p = 1;
    uint64_t seed = 0;
    std::string graph = "farey", bases, graph_file, target_name;

    auto* dcmd = app.add_subcommand("distance", "Farey graph distance");
    dcmd->add_option("x", xs)->required();
    dcmd->add_option("y", ys)->required();
    dcmd->callback([&] { runner = [&] { run_distance(out, xs, ys); }; });

    auto* gcmd = app.add_subcommand("geodesics", "all geodesics between two slopes");
    gcmd->add_option("x", xs)->required();
    gcmd->add_option("y", ys)->required();
    gcmd->callback([&] { runner = [&] { run_geodesics(out, xs, ys); }; });

    auto* pcmd = app.add_subcommand("pivots", "separating edges and pivots");
    pcmd->add_option("x", xs)->required();
    pcmd->add_option("y", ys)->required();
    pcmd->callback([&] { runner = [&] { run_pivots(out, xs, ys); }; });

    auto* rcmd = app.add_subcommand("ray", "geodesic ray toward a boundary point");
    rcmd->add_option("x", xs)->required();
    rcmd->add_option("a", as)->required();
    rcmd->add_option("L", L)->required();
    rcmd->callback([&] { runner = [&] { run_ray(out, xs, as, L); }; });

    auto* ccmd = app.add_subcommand("classify", "Nielsen-Thurston type of an SL(2,Z) matrix");
    ccmd->add_option("matrix", ms)->required();
    ccmd->callback([&] { runner = [&] { run_classify(out, ms); }; });

    auto* bcmd = app.add_subcommand("busemann", "Busemann alpha/beta at a boundary point");
    bcmd->add_option("a", as)->required();
    bcmd->add_option("x", xs)->required();
    bcmd->add_option("y", ys)->required();
    bcmd->add_option("--horizon", horizon);
    bcmd->callback([&] { runner = [&] { run_busemann(out, as, xs, ys, horizon); }; });

    auto* mcmd = app.add_subcommand("minset", "windowed MIN-set of a boundary triple");
    mcmd->add_option("a", as)->required();
    mcmd->add_option("b", bs)->required();
    mcmd->add_option("c", cs)->required();
    mcmd->add_option("--window", window);
    mcmd->add_option("--bases", bases, "comma-separated base slopes");
    mcmd->callback([&] { runner = [&] { run_minset(out, as, bs, cs, window, bases); }; });

    auto* tcmd = app.add_subcommand("twist-check", "randomized Dehn twist checks");
    tcmd->add_option("--samples", samples);
    tcmd->add_option("--seed", seed)->required();
    tcmd->callback([&] { runner = [&] { run_twist_check(out, samples, seed); }; });

    auto* ecmd = app.add_subcommand("decomp-enum", "enumerate decomposition types");
    ecmd->add_option("g", g)->required();
    ecmd->add_option("p", p)->required();
    ecmd->callback([&] { runner = [&] { run_decomp_enum(out, g, p); }; });

    auto* vcmd = app.add_subcommand("verify-lemmas", "exhaustive decomposition lemma checks");
    vcmd->add_option("g", g)->required();
    vcmd->add_option("p", p)->required();
    vcmd->callback([&] { runner = [&] { run_verify_lemmas(out, g, p); }; });

    auto* icmd = app.add_subcommand("invariants", "Euler characteristic and l2 Betti numbers");
    icmd->add_option("g", g)->required();
    icmd->add_option("p", p)->required();
    icmd->callback([&] { runner = [&] { run_invariants(out, g, p); }; });

    std::string n_range;
    auto* scmd = app.add_subcommand("propa-scan", "property-A witness difference scan");
    scmd->add_option("--graph", graph, "farey, tree3, or file");
    scmd->add_option("--n-range", n_range, "inclusive range lo:hi");
    scmd->add_option("--n-lo", n_lo);
    scmd->add_option("--n-hi", n_hi);
    scmd->add_option("--pairs", pairs);
    scmd->add_option("--D", trunc_bound, "truncation bound for k >= 1 on the Farey graph");
    scmd->add_option("--graph-file", graph_file, "edge-list file for --graph file");
    scmd->add_option("--target", target_name, "target vertex name for --graph file");
    scmd->add_option("--seed", seed)->required();
    scmd->callback([&] {
        runner = [&] {
            if (!n_range.empty()) {
                auto colon = n_range.find(':');
                if (colon == std::string::npos)
                    throw PreconditionError("propa-scan: --n-range wants lo:hi");
                n_lo = std::stoll(n_range.substr(0, colon));
                n_hi = std::stoll(n_range.substr(colon + 1));
            }
            run_propa_scan(out, graph, n_lo, n_hi, pairs, trunc_bound, seed, graph_file,
                           target_name);
        };
    });

    try {
        app.parse(argc, argv);
        if (runner) runner();
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const PreconditionError& e) {
        json err = {{"error", {{"kind", "precondition"}, {"message", e.what()}}}};
        std::cout << err.dump(2) << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        json err = {{"error", {{"kind", "precondition"}, {"message", e.what()}}}};
        std::cout << err.dump(2) << "\n";
        return 2;
    } catch (const StabilizationError& e) {
        json err = {{"error", {{"kind", "stabilization"}, {"message", e.what()}}}};
        std::cout << err.dump(2) << "\n";
        return 3;
    } catch (const InvariantError& e) {
        json err = {{"error", {{"kind", "invariant"}, {"message", e.what()}}}};
        std::cout << err.dump(2) << "\n";
        return 4;
    } catch (const std::exception& e) {
        json err = {{"error", {{"kind", "internal"}, {"message", e.what()}}}};
        std::cout << err.dump(2) << "\n";
        return 4;
    }
    return 0;
}
