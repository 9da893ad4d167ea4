#pragma once

#include "deltaw/splits.hpp"

#include <vector>

namespace deltaw {

/// Marked tree dual to a face of the split complex: vertices carry disjoint
/// (possibly empty) mark sets covering {1..n}; each edge realizes one split.
struct StableTree {
    int n = 0;
    std::vector<MarkSet> vertex_marks;
    std::vector<std::pair<int, int>> edges;      // tree edges (u,v)
    std::vector<Split> edge_splits;              // split realized by each edge

    int vertex_count() const { return static_cast<int>(vertex_marks.size()); }
    int edge_count() const { return static_cast<int>(edges.size()); }

    int degree(int v) const;
    /// Weighted valency: edge degree plus total weight of the marks at v.
    Rational valency(int v, const WeightVector& w) const;

    /// Checks tree shape, mark partition, split realization and stability
    /// (every vertex valency > 2).  Throws std::logic_error on violation.
    void validate(const WeightVector& w) const;
};

/// Reconstruct the unique marked tree realizing a set of pairwise-compatible
/// splits (Buneman).  Throws std::invalid_argument when some pair is
/// incompatible or the split list has duplicates.
StableTree face_to_tree(const std::vector<Split>& face, const WeightVector& w);

}  // namespace deltaw
