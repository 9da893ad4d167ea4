#pragma once

#include "deltaw/rational.hpp"

#include <cstdint>
#include <vector>

namespace deltaw {

/// Sparse integer matrix, column-major.  col_entries[j] lists (row, value)
/// pairs sorted by row, values nonzero.
struct SparseIntMatrix {
    std::int64_t rows = 0;
    std::int64_t cols = 0;
    std::vector<std::vector<std::pair<std::int32_t, std::int64_t>>> col_entries;

    static SparseIntMatrix zero(std::int64_t r, std::int64_t c) {
        SparseIntMatrix m;
        m.rows = r;
        m.cols = c;
        m.col_entries.resize(static_cast<std::size_t>(c));
        return m;
    }
    std::size_t nnz() const {
        std::size_t t = 0;
        for (const auto& col : col_entries) t += col.size();
        return t;
    }
};

struct SmithResult {
    std::size_t rank = 0;
    /// Nonzero invariant factors d_1 | d_2 | ... | d_rank (positive).
    std::vector<BigInt> invariant_factors;
};

struct SnfOptions {
    /// Once no ±1 pivots remain, the residual matrix is finished densely;
    /// beyond this side length we refuse (capacity error) instead of
    /// thrashing.
    std::size_t dense_core_cap = 2048;
};

/// Smith normal form over Z.  Sparse elimination with ±1 pivots chosen by
/// Markowitz-style minimal fill, dense gcd elimination on the residual core.
/// int64 arithmetic with overflow detection, arbitrary-precision retry.
SmithResult smith_normal_form(const SparseIntMatrix& m, const SnfOptions& opts = {});

/// Rank over the prime field F_p (p < 2^31, prime).
std::size_t rank_mod_p(const SparseIntMatrix& m, std::uint64_t p);

}  // namespace deltaw
