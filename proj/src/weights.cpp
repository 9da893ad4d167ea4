#include "deltaw/weights.hpp"

#include <stdexcept>

namespace deltaw {

WeightVector::WeightVector(std::vector<Rational> entries) : w_(std::move(entries)) {
    if (w_.size() >= 31)
        throw std::length_error("WeightVector: too many marks (bitmask capacity)");
    for (const Rational& r : w_)
        if (!r.is_positive() || r > Rational(1))
            throw std::invalid_argument("WeightVector: entries must lie in (0,1]");
}

Rational WeightVector::total() const { return subset_weight(*this, MarkSet::full(size())); }

bool WeightVector::stable_for_genus(int g) const {
    return Rational(2 * g - 2) + total() > Rational(0);
}

Rational subset_weight(const WeightVector& w, MarkSet subset) {
    Rational sum;
    for (std::uint32_t b = subset.bits; b; b &= b - 1) {
        int mark = __builtin_ctz(b) + 1;
        if (mark > w.size())
            throw std::out_of_range("subset_weight: mark outside weight vector");
        sum += w[mark];
    }
    return sum;
}

std::vector<MarkSet> heavy_family(const WeightVector& w, MarkSet restrict_to) {
    const Rational one(1);
    std::vector<MarkSet> out;
    // Iterate subsets of restrict_to in ascending bitmask order.
    std::uint32_t r = restrict_to.bits;
    std::uint32_t sub = 0;
    while (true) {
        MarkSet s(sub);
        if (subset_weight(w, s) > one) out.push_back(s);
        if (sub == r) break;
        sub = (sub - r) & r;  // next subset of r above sub
    }
    return out;
}

bool is_path_space(const WeightVector& w) {
    const int n = w.size();
    const Rational one(1);
    // Assign each mark to part 0/1/2; exists an all-heavy tripartition?
    // n is small (<= 31, in practice <= 12); 3^n with pruning is fine for
    // the sizes the builders accept, but prune via subsets instead:
    // a tripartition (A,B,C) is all-heavy iff A and B are disjoint heavy
    // sets whose complement is heavy.
    std::vector<MarkSet> heavy = heavy_family(w, MarkSet::full(n));
    for (size_t i = 0; i < heavy.size(); ++i) {
        for (size_t j = i + 1; j < heavy.size(); ++j) {
            if ((heavy[i] & heavy[j]).empty()) {
                MarkSet rest = (heavy[i] | heavy[j]).complement(n);
                if (subset_weight(w, rest) > one) return false;
            }
        }
    }
    return true;
}

EdgeCase classify_edge_cases(const WeightVector& w) {
    const Rational one(1);
    if (w.size() < 2 || w[1] != one || w[2] != one)
        throw std::invalid_argument("classify_edge_cases: requires w_1 = w_2 = 1");
    MarkSet tail = MarkSet::full(w.size()).without(1).without(2);
    if (!(subset_weight(w, tail) > one)) return EdgeCase::HEAVY_LOCUS_EMPTY;
    // Isolated point: the tail is heavy but dropping any single tail mark
    // leaves weight <= 1, so the only heavy tail subset is the whole tail.
    for (int t : tail.members())
        if (subset_weight(w, tail.without(t)) > one) return EdgeCase::GENERIC;
    return EdgeCase::HEAVY_LOCUS_ISOLATED_POINT;
}

}  // namespace deltaw
