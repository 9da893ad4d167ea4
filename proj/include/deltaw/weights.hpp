#pragma once

#include "deltaw/marks.hpp"
#include "deltaw/rational.hpp"

#include <vector>

namespace deltaw {

/// Weight vector w in (0,1]^n attached to the marks 1..n.
class WeightVector {
public:
    WeightVector() = default;
    explicit WeightVector(std::vector<Rational> entries);

    int size() const { return static_cast<int>(w_.size()); }
    const Rational& operator[](int mark) const { return w_[static_cast<size_t>(mark - 1)]; }
    const std::vector<Rational>& entries() const { return w_; }

    Rational total() const;

    /// 2g - 2 + sum(w) > 0, the stability inequality for the moduli space.
    bool stable_for_genus(int g) const;

    friend bool operator==(const WeightVector& a, const WeightVector& b) { return a.w_ == b.w_; }

private:
    std::vector<Rational> w_;
};

/// Sum of w_i over i in the subset.
Rational subset_weight(const WeightVector& w, MarkSet subset);

/// All subsets A of restrict_to with subset_weight(w, A) > 1, in ascending
/// bitmask order (deterministic).
std::vector<MarkSet> heavy_family(const WeightVector& w, MarkSet restrict_to);

/// True iff no tripartition of {1..n} into three parts of weight > 1 each
/// exists; in that case every stable tree for w is a path.
bool is_path_space(const WeightVector& w);

enum class EdgeCase {
    HEAVY_LOCUS_EMPTY,           // sum of w_i, i >= 3, is <= 1
    HEAVY_LOCUS_ISOLATED_POINT,  // heavy locus is a single 0-cell
    GENERIC,
};

/// Classify w = (1, 1, w_3, ..., w_n) by the shape of its heavy marking
/// locus.  Throws std::invalid_argument unless w_1 = w_2 = 1.
EdgeCase classify_edge_cases(const WeightVector& w);

}  // namespace deltaw
