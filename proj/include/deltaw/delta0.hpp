#pragma once

#include "deltaw/complex.hpp"
#include "deltaw/splits.hpp"
#include "deltaw/trees.hpp"

#include <vector>

namespace deltaw {

/// The tropical moduli complex for genus 0: vertices are the admissible
/// splits, faces the pairwise-compatible subsets (a flag complex).  The
/// split behind vertex i is splits[i]; labels are the canonical sides.
struct Delta0 {
    WeightVector w;
    std::vector<Split> splits;
    SimplicialComplex cx;

    StableTree tree_of_face(const Face& f) const;
};

/// Requires n >= 3 and genus-0 stability (sum w > 2).  The result may be the
/// void complex (no admissible splits).
Delta0 build_delta0(const WeightVector& w, const BuildLimits& limits = {});

/// Subcomplex of faces whose tree has a vertex v with
/// weight(marks(v) minus {1,2}) > 1.  Same vertex indexing as d0.cx.
SimplicialComplex build_heavy_locus(const Delta0& d0);

/// Orientation double cover of a path-space complex: the flag complex of the
/// poset {A : w(A) > 1 and w(complement) > 1} ordered by inclusion.  Vertex
/// labels are the subsets themselves; projection[i] is the d0 vertex index
/// the poset element maps to.  Throws std::invalid_argument unless
/// is_path_space(w).
struct DoubleCover {
    std::vector<MarkSet> sets;
    SimplicialComplex cx;
    std::vector<std::int32_t> projection;
};
DoubleCover build_double_cover(const Delta0& d0, const BuildLimits& limits = {});

/// Flag (order) complex of the rank-selected Boolean lattice: subsets A of
/// {1..n} with k <= |A| <= n-k, ordered by inclusion.  Requires
/// 1 <= k and 2k <= n.
SimplicialComplex build_rank_selected_flag(int n, int k, const BuildLimits& limits = {});

/// The complement complex Δ_u = {complement of A : A heavy for u} on the
/// index set {1..r}.  May contain the empty face (and nothing else).
SimplicialComplex build_delta_u(const WeightVector& u);

/// Simplicial automorphism of d0.cx induced by a mark permutation.  perm is
/// 1-based: mark i goes to perm[i-1].  Requires w to be perm-invariant
/// entrywise; throws std::invalid_argument otherwise.  Returns the vertex
/// bijection (old index -> new index).
std::vector<std::int32_t> relabel_marks(const Delta0& d0, const std::vector<int>& perm);

}  // namespace deltaw
