#pragma once

#include "deltaw/complex.hpp"
#include "deltaw/weights.hpp"

#include <string>
#include <vector>

namespace deltaw {

/// Partition of {1..r} into disjoint nonempty blocks (singletons included).
/// Canonical form: blocks sorted by their bitmask, so partitions compare
/// and hash cheaply.
struct SetPartition {
    int r = 0;
    std::vector<MarkSet> blocks;

    /// Number of blocks = dimension of the corresponding diagonal subspace.
    int dimension() const { return static_cast<int>(blocks.size()); }

    void canonicalize();
    /// Throws std::logic_error when blocks do not partition {1..r}.
    void validate() const;

    std::string str() const;  // "{1,2,3}|{4}"

    friend bool operator==(const SetPartition& a, const SetPartition& b) {
        return a.r == b.r && a.blocks == b.blocks;
    }
    friend bool operator<(const SetPartition& a, const SetPartition& b);
};

/// The all-singletons partition (the lattice bottom).
SetPartition discrete_partition(int r);

/// Partition with one block A and singletons elsewhere.
SetPartition one_block_partition(int r, MarkSet A);

/// True when every block of a is contained in a block of b (a is finer).
bool refines(const SetPartition& a, const SetPartition& b);

/// Finest common coarsening.
SetPartition join(const SetPartition& a, const SetPartition& b);

/// Intersection lattice of the u-induced diagonal arrangement: the
/// join-closure of the one-heavy-block partitions, plus the bottom.
/// Elements are kept sorted in canonical order.
struct IntersectionLattice {
    int r = 0;
    std::vector<SetPartition> elements;

    bool contains(const SetPartition& p) const;
};

IntersectionLattice intersection_lattice(const std::vector<Rational>& u);

/// Order complex of the open interval (0̂, p) in L: vertices are the
/// elements strictly between, faces are the chains.  Contains the empty
/// face, so an empty interval gives the (-1)-sphere {∅}.
/// Throws std::invalid_argument when p ∉ L or p = 0̂.
SimplicialComplex interval_order_complex(const IntersectionLattice& L, const SetPartition& p,
                                         const BuildLimits& limits = {});

}  // namespace deltaw
