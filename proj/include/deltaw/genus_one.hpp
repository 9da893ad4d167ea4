#pragma once

#include "deltaw/complex.hpp"
#include "deltaw/homology.hpp"
#include "deltaw/weights.hpp"

#include <string>
#include <utility>
#include <vector>

namespace deltaw {

/// Connected multigraph with vertex genera and a marking of {1..n}.
/// Genus-1 regime: b1 + sum of genera = 1, so the graph is either a tree
/// with one genus-1 vertex or unicyclic with all genera 0 (loops and
/// parallel edges allowed).
struct MarkedGraph {
    int n = 0;
    std::vector<int> genus;
    std::vector<MarkSet> marks;
    /// Unordered pairs with first <= second, list kept sorted; loops have
    /// both entries equal.
    std::vector<std::pair<std::int32_t, std::int32_t>> edges;

    int vertex_count() const { return static_cast<int>(genus.size()); }
    int edge_count() const { return static_cast<int>(edges.size()); }
    int b1() const { return edge_count() - vertex_count() + 1; }
    /// Edge flags at v (loops count twice).
    int valency(std::int32_t v) const;
    bool is_connected() const;
    int total_genus() const;

    /// Structural and w-stability invariants; throws std::logic_error.
    void validate(const WeightVector& w) const;

    std::string str() const;
};

/// Cell of the symmetric Δ-complex Δ₁,w: a canonical graph together with
/// the degeneracy flag (some automorphism permutes the edges oddly, so the
/// cell dies in rational chains).
struct GenusOneCell {
    MarkedGraph graph;
    bool degenerate = false;
};

/// Canonicalization product: the relabeled graph (edges sorted), the vertex
/// map old->new, and a total encoding usable as a dictionary key.
struct GraphCanon {
    MarkedGraph graph;
    std::vector<std::int32_t> vertex_map;
    std::vector<std::uint64_t> encoding;
};
GraphCanon canonical_graph(const MarkedGraph& g);

/// Vertex automorphisms of a canonical graph (as vertex maps; includes the
/// identity).
std::vector<std::vector<std::int32_t>> graph_automorphisms(const MarkedGraph& canonical);

/// A cell is degenerate when a parallel edge pair exists (swapping them is
/// odd) or some automorphism induces an odd edge permutation.  Loop reversal
/// fixes every edge and is even.
bool cell_degenerate(const MarkedGraph& canonical);

/// Contract one edge (by index into the sorted edge list): merging endpoints
/// for a bridge, incrementing the vertex genus for a loop.  Stability is
/// preserved.
MarkedGraph contract_edge(const MarkedGraph& g, std::size_t edge_index);

/// All isomorphism classes of w-stable genus-1 marked graphs with the given
/// edge count, in canonical form, deterministically ordered.  Degenerate
/// cells are included.  Throws CapacityError when n exceeds the supported
/// range.
std::vector<MarkedGraph> enumerate_genus1_graphs(const WeightVector& w, int edge_count,
                                                 const BuildLimits& limits = {});

/// Δ₁,w with its reduced rational cellular chain complex.  cells[e-1] lists
/// the cells with e edges; the chain complex has min_degree -1 (the lone
/// (-1)-cell is the edgeless genus-1 graph) and degree-d basis the
/// non-degenerate cells with d+1 edges.
struct GenusOneComplex {
    WeightVector w;
    std::vector<std::vector<GenusOneCell>> cells;
    ChainComplex cc;

    std::size_t total_cells() const;
};
GenusOneComplex build_genus1(const WeightVector& w, const BuildLimits& limits = {});

/// Reduced rational homology of Δ₁,w.
HomologyProfile genus1_homology(const WeightVector& w, const BuildLimits& limits = {});

/// True when some vertex carries marks of total weight > 1.
bool graph_has_heavy_vertex(const MarkedGraph& g, const WeightVector& w);

/// True when the graph is its own core: unicyclic with every valency 2.
bool is_cycle_graph(const MarkedGraph& g);

/// Reduced rational homology of the heavy marking locus X₁,w (the cells with
/// a heavy vertex; a subcomplex since contractions only grow vertex marks).
/// All zero when the total weight exceeds 1 (the locus is contractible);
/// empty profile when the locus is empty.
HomologyProfile genus1_heavy_locus_homology(const GenusOneComplex& gc);

/// Closed-form Betti prediction for Δ₁,(1^(m), ε^(k)) with kε < 1:
///   m ≥ 2, m+k ≥ 3: ½(m-1)! m^k in degree m+k-1;
///   m = 1: a single class in degree k when k is even (k ≥ 2);
///   m = 0: C(k-1,d) in each even degree 0 < d ≤ k-1;
/// everything else zero.  Requires m,k ≥ 0, m+k ≥ 1.
HomologyProfile genus1_betti_prediction(int m, int k);

/// Checks Susp²(Δ₀,w_long) ≃ Δ₁,w_short ∨ Δ₁,w_short on Betti numbers:
/// w_short = (1,1,w₄..wₙ), w_long = (1,1,1,w₄..wₙ), n ≥ 4.  Throws
/// std::invalid_argument when the tails mismatch.
bool verify_double_suspension(const WeightVector& w_short, const WeightVector& w_long);

}  // namespace deltaw
