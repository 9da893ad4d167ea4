#pragma once

#include "deltaw/weights.hpp"

#include <vector>

namespace deltaw {

/// A 2-side partition of the marks {1..n}, stored by the side NOT containing
/// mark 1 (the canonical side).  A split is admissible for w when both sides
/// have weight strictly greater than 1.
struct Split {
    MarkSet side;  // canonical side, never contains mark 1
    int n = 0;

    Split() = default;
    Split(MarkSet s, int marks);  // canonicalizes: flips to the side without mark 1

    MarkSet other_side() const { return side.complement(n); }

    friend bool operator==(const Split& a, const Split& b) {
        return a.n == b.n && a.side == b.side;
    }
    friend bool operator<(const Split& a, const Split& b) { return a.side < b.side; }

    std::string str() const { return side.str(); }
};

/// All admissible splits for w, ascending by canonical-side bitmask.
std::vector<Split> admissible_splits(const WeightVector& w);

/// Two splits are compatible iff one of the four corner intersections is
/// empty (equivalently, they are realized together on some tree).
/// Throws std::invalid_argument when the mark counts differ.
bool splits_compatible(const Split& a, const Split& b);

}  // namespace deltaw
