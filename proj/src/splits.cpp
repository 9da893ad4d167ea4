#include "deltaw/splits.hpp"

#include <stdexcept>

namespace deltaw {

Split::Split(MarkSet s, int marks) : side(s), n(marks) {
    if (side.contains(1)) side = side.complement(n);
    if (side.empty() || side.complement(n).empty())
        throw std::invalid_argument("Split: both sides must be nonempty");
}

std::vector<Split> admissible_splits(const WeightVector& w) {
    const int n = w.size();
    const Rational one(1);
    const Rational total = w.total();
    std::vector<Split> out;
    // Canonical sides are exactly the subsets of {2..n}.
    MarkSet candidates = MarkSet::full(n).without(1);
    for (MarkSet side : heavy_family(w, candidates))
        if (total - subset_weight(w, side) > one) out.push_back(Split(side, n));
    return out;  // heavy_family order is ascending by bitmask already
}

bool splits_compatible(const Split& a, const Split& b) {
    if (a.n != b.n)
        throw std::invalid_argument("splits_compatible: mark counts differ");
    MarkSet a2 = a.other_side(), b2 = b.other_side();
    return (a.side & b.side).empty() || (a.side & b2).empty() ||
           (a2 & b.side).empty() || (a2 & b2).empty();
}

}  // namespace deltaw
