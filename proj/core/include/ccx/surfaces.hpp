#pragma once

// Surface-complexity arithmetic and exhaustive enumeration of curve-system
// decomposition types. A decomposition graph records the topological type
// of a surface cut along disjoint curves: vertices are pieces (genus label
// + external boundary legs), edges are curves, self-loops are curves whose
// two sides meet the same piece. Enumeration is complete up to labeled
// multigraph isomorphism.

#include "ccx/rational.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace ccx::surfaces {

struct SurfaceType {
    int g = 0, p = 0;
    bool operator==(const SurfaceType&) const = default;
    auto operator<=>(const SurfaceType&) const = default;
    std::string to_string() const;
};

int complexity(SurfaceType s);             // kappa = 3g + p - 4
int n_max(SurfaceType s);                  // g + floor((g+p-2)/2)
bool admissible_piece(int g, int p);       // negative Euler characteristic

SurfaceType cut_nonseparating(SurfaceType s);  // (g-1, p+2); rejects g = 0
// all admissible unordered piece pairs with g1+g2 = g, p1+p2 = p+2, p_i >= 1
std::vector<std::pair<SurfaceType, SurfaceType>> cut_separating(SurfaceType s);

class DecompositionGraph {
public:
    struct Piece {
        int genus = 0;
        int legs = 0;
        auto operator<=>(const Piece&) const = default;
    };

    DecompositionGraph(std::vector<Piece> pieces, std::map<std::pair<int, int>, int> edges);

    int vertex_count() const { return static_cast<int>(pieces_.size()); }
    int edge_count() const;
    const std::vector<Piece>& pieces() const { return pieces_; }
    const std::map<std::pair<int, int>, int>& edges() const { return edges_; }

    int boundary_of(int v) const;       // p_v = legs + incident endpoints
    SurfaceType piece_type(int v) const { return {pieces_[v].genus, boundary_of(v)}; }
    int degree(int v) const;            // loop counts twice
    bool connected() const;
    int cycle_rank() const;             // E - V + 1
    int total_genus() const;            // sum of labels + cycle rank
    int total_legs() const;
    bool all_pieces_admissible() const;
    bool is_tree() const { return cycle_rank() == 0; }

    // number of non-pants pieces
    int n_value() const;
    // counts of piece types (0,3), (0,4), (0,5), (1,1), (1,2); other = -1 marker
    struct TypeCounts {
        int n03 = 0, n04 = 0, n05 = 0, n11 = 0, n12 = 0, other = 0;
        bool operator==(const TypeCounts&) const = default;
    };
    TypeCounts type_counts() const;

    // isomorphism-invariant certificate (refinement + minimization over
    // residual label-class permutations)
    std::string canonical() const;

    std::string to_string() const;

private:
    std::vector<Piece> pieces_;
    std::map<std::pair<int, int>, int> edges_;  // (i<=j) -> multiplicity
};

int n_of(const DecompositionGraph& d);

// every decomposition type of the surface with at most max_edges curves
// (default 3g+p-3); includes the empty decomposition
std::vector<DecompositionGraph> enumerate_decompositions(SurfaceType s, int max_edges = -1);

// n_max by exhaustive enumeration, memoized across calls
int n_max_by_enumeration(SurfaceType s);

struct MaxLemmaReport {
    SurfaceType surface;
    int formula = 0;
    int enumerated = 0;
    size_t types = 0;
    size_t maximizers = 0;
    bool pass = false;
};
MaxLemmaReport verify_max_lemma(SurfaceType s);

struct ParityReport {
    SurfaceType surface;
    bool even = false;
    size_t maximizers = 0;
    bool counts_ok = false;     // every maximizer matches the lemma tuples
    bool trees_ok = false;      // even case: every maximizer is a tree
    std::array<bool, 4> odd_case_admissible{};  // cases (a)-(d) allowed
    std::array<bool, 4> odd_case_realized{};
    bool pass = false;
};
ParityReport verify_parity_lemmas(SurfaceType s);

struct ExtensionReport {
    SurfaceType surface;
    size_t configurations = 0;  // distinguished-curve configurations checked
    size_t mismatches = 0;      // predicate vs enumeration oracle
    bool pass = false;
};
// kappa odd: the two-separating-curve and separating+nonseparating
// equivalences, plus single-curve extendability; kappa even: the
// one-step degradation n(tau) = n(M) - 1 for curves added to maximizers
ExtensionReport extension_predicate_checks(SurfaceType s);

Rational bernoulli(int n);                     // B1 = -1/2 convention
Rational virtual_euler(SurfaceType s);         // rejects out-of-domain types
std::pair<int, Rational> l2_betti(SurfaceType s);  // (3g-3+p, beta value)

// |Gamma(M_{0,3})| and the SL(2,Z) cost value
inline constexpr int pants_mapping_class_group_order = 6;
Rational sl2z_cost();  // 13/12

} // namespace ccx::surfaces
