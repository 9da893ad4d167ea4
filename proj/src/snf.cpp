#include "deltaw/snf.hpp"

#include "deltaw/complex.hpp"  // CapacityError

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <stdexcept>

namespace deltaw {

namespace {

struct Int64Overflow {};

// Arithmetic policies.  CheckedInt64 throws Int64Overflow so the caller can
// restart with BigInt entries; BigInt never overflows.
struct CheckedInt64 {
    using value = std::int64_t;
    static value mul(value a, value b) {
        value r;
        if (__builtin_mul_overflow(a, b, &r)) throw Int64Overflow{};
        return r;
    }
    static value sub(value a, value b) {
        value r;
        if (__builtin_sub_overflow(a, b, &r)) throw Int64Overflow{};
        return r;
    }
    static bool is_unit(value v) { return v == 1 || v == -1; }
};

struct BigIntOps {
    using value = BigInt;
    static value mul(const value& a, const value& b) { return a * b; }
    static value sub(const value& a, const value& b) { return a - b; }
    static bool is_unit(const value& v) { return v == 1 || v == -1; }
};

/// Sparse phase: eliminate with ±1 pivots only.  Rows are sorted
/// (col, value) vectors; a per-column member list with lazy deletion tracks
/// occupancy; a set keyed by (column fill, column) serves Markowitz-lite
/// pivot selection among columns that still contain a unit entry.
template <class Ops>
class SparseEliminator {
    using T = typename Ops::value;

public:
    explicit SparseEliminator(const SparseIntMatrix& m)
        : rows_(static_cast<std::size_t>(m.rows)),
          row_live_(static_cast<std::size_t>(m.rows), 1),
          col_rows_(static_cast<std::size_t>(m.cols)),
          col_count_(static_cast<std::size_t>(m.cols), 0),
          col_units_(static_cast<std::size_t>(m.cols), 0) {
        for (std::int64_t j = 0; j < m.cols; ++j)
            for (auto [r, v] : m.col_entries[static_cast<std::size_t>(j)]) {
                rows_[static_cast<std::size_t>(r)].emplace_back(static_cast<std::int32_t>(j),
                                                                T(v));
                col_rows_[static_cast<std::size_t>(j)].push_back(r);
                ++col_count_[static_cast<std::size_t>(j)];
                if (v == 1 || v == -1) ++col_units_[static_cast<std::size_t>(j)];
            }
        for (auto& row : rows_) std::sort(row.begin(), row.end());
        for (std::size_t j = 0; j < col_count_.size(); ++j)
            if (col_units_[j] > 0)
                unit_cols_.insert({col_count_[j], static_cast<std::int32_t>(j)});
    }

    /// Run unit-pivot elimination; returns the number of unit pivots.
    std::size_t run() {
        std::size_t pivots = 0;
        while (!unit_cols_.empty()) {
            std::int32_t c = unit_cols_.begin()->second;
            std::int32_t r = pick_pivot_row(c);
            eliminate(r, c);
            ++pivots;
        }
        return pivots;
    }

    /// Residual live entries after run(), as triplets.
    std::vector<std::tuple<std::int32_t, std::int32_t, T>> residual() const {
        std::vector<std::tuple<std::int32_t, std::int32_t, T>> out;
        for (std::size_t r = 0; r < rows_.size(); ++r)
            if (row_live_[r])
                for (const auto& [c, v] : rows_[r])
                    out.emplace_back(static_cast<std::int32_t>(r), c, v);
        return out;
    }

private:
    const T* entry(std::int32_t r, std::int32_t c) const {
        const auto& row = rows_[static_cast<std::size_t>(r)];
        auto it = std::lower_bound(row.begin(), row.end(), c,
                                   [](const auto& p, std::int32_t key) { return p.first < key; });
        return (it != row.end() && it->first == c) ? &it->second : nullptr;
    }

    std::int32_t pick_pivot_row(std::int32_t c) {
        auto& members = col_rows_[static_cast<std::size_t>(c)];
        std::int32_t best = -1;
        std::size_t best_len = SIZE_MAX;
        std::size_t w = 0;
        for (std::size_t i = 0; i < members.size(); ++i) {
            std::int32_t r = members[i];
            if (!row_live_[static_cast<std::size_t>(r)]) continue;
            const T* v = entry(r, c);
            if (!v) continue;  // stale
            members[w++] = r;
            if (Ops::is_unit(*v) && rows_[static_cast<std::size_t>(r)].size() < best_len) {
                best_len = rows_[static_cast<std::size_t>(r)].size();
                best = r;
            }
        }
        members.resize(w);
        if (best < 0) throw std::logic_error("snf: unit bookkeeping out of sync");
        return best;
    }

    void col_changed(std::int32_t c, bool had, bool had_unit, bool has, bool has_unit) {
        std::size_t j = static_cast<std::size_t>(c);
        bool was_in_set = col_units_[j] > 0;
        auto key = std::pair<std::int32_t, std::int32_t>{col_count_[j], c};
        col_count_[j] += (has ? 1 : 0) - (had ? 1 : 0);
        col_units_[j] += (has_unit ? 1 : 0) - (had_unit ? 1 : 0);
        bool now_in_set = col_units_[j] > 0;
        if (was_in_set) unit_cols_.erase(key);
        if (now_in_set) unit_cols_.insert({col_count_[j], c});
    }

    // row[dst] -= q * row[src]
    void axpy(std::int32_t dst, std::int32_t src, const T& q) {
        const auto& a = rows_[static_cast<std::size_t>(dst)];
        const auto& b = rows_[static_cast<std::size_t>(src)];
        std::vector<std::pair<std::int32_t, T>> out;
        out.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
                out.push_back(a[i++]);
            } else if (i == a.size() || b[j].first < a[i].first) {
                T nv = Ops::mul(q, b[j].second);
                nv = Ops::sub(T(0), nv);
                if (nv != 0) {
                    col_changed(b[j].first, false, false, true, Ops::is_unit(nv));
                    col_rows_[static_cast<std::size_t>(b[j].first)].push_back(dst);
                    out.emplace_back(b[j].first, std::move(nv));
                }
                ++j;
            } else {
                T nv = Ops::sub(a[i].second, Ops::mul(q, b[j].second));
                bool had_unit = Ops::is_unit(a[i].second);
                if (nv != 0) {
                    bool has_unit = Ops::is_unit(nv);
                    if (had_unit != has_unit)
                        col_changed(a[i].first, true, had_unit, true, has_unit);
                    out.emplace_back(a[i].first, std::move(nv));
                } else {
                    col_changed(a[i].first, true, had_unit, false, false);
                }
                ++i;
                ++j;
            }
        }
        rows_[static_cast<std::size_t>(dst)] = std::move(out);
    }

    void eliminate(std::int32_t r, std::int32_t c) {
        const T pv = *entry(r, c);  // ±1 by construction
        // collect live rows of column c other than r
        std::vector<std::int32_t> targets;
        for (std::int32_t r2 : col_rows_[static_cast<std::size_t>(c)]) {
            if (r2 == r || !row_live_[static_cast<std::size_t>(r2)]) continue;
            if (entry(r2, c)) targets.push_back(r2);
        }
        std::sort(targets.begin(), targets.end());
        targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
        for (std::int32_t r2 : targets) {
            const T v2 = *entry(r2, c);
            // q = v2 / pv, exact since pv = ±1
            T q = (pv == 1) ? v2 : Ops::sub(T(0), v2);
            axpy(r2, r, q);
        }
        // retire pivot row: remaining entries vanish under column operations
        // that touch no other row (column c is zero outside the pivot).
        for (const auto& [c2, v2] : rows_[static_cast<std::size_t>(r)])
            col_changed(c2, true, Ops::is_unit(v2), false, false);
        rows_[static_cast<std::size_t>(r)].clear();
        rows_[static_cast<std::size_t>(r)].shrink_to_fit();
        row_live_[static_cast<std::size_t>(r)] = 0;
        col_rows_[static_cast<std::size_t>(c)].clear();
    }

    std::vector<std::vector<std::pair<std::int32_t, T>>> rows_;
    std::vector<char> row_live_;
    std::vector<std::vector<std::int32_t>> col_rows_;
    std::vector<std::int32_t> col_count_;
    std::vector<std::int32_t> col_units_;
    std::set<std::pair<std::int32_t, std::int32_t>> unit_cols_;
};

BigInt abs_big(BigInt v) { return v < 0 ? -v : v; }

/// Textbook dense SNF diagonalization (BigInt), for the residual core.
std::vector<BigInt> dense_snf_diagonal(std::vector<std::vector<BigInt>> a) {
    std::vector<BigInt> diag;
    if (a.empty()) return diag;
    const std::size_t R = a.size(), C = a[0].size();
    for (std::size_t t = 0; t < std::min(R, C); ++t) {
        while (true) {
            // min |value| in the trailing submatrix
            std::size_t bi = SIZE_MAX, bj = SIZE_MAX;
            BigInt best;
            for (std::size_t i = t; i < R; ++i)
                for (std::size_t j = t; j < C; ++j)
                    if (a[i][j] != 0) {
                        BigInt v = abs_big(a[i][j]);
                        if (bi == SIZE_MAX || v < best) {
                            best = v;
                            bi = i;
                            bj = j;
                        }
                    }
            if (bi == SIZE_MAX) return diag;  // submatrix zero
            std::swap(a[t], a[bi]);
            for (std::size_t i = 0; i < R; ++i) std::swap(a[i][t], a[i][bj]);

            const BigInt p = a[t][t];
            bool clean = true;
            for (std::size_t i = t + 1; i < R; ++i)
                if (a[i][t] != 0) {
                    BigInt q = a[i][t] / p;
                    if (q != 0)
                        for (std::size_t j = t; j < C; ++j) a[i][j] -= q * a[t][j];
                    if (a[i][t] != 0) clean = false;
                }
            for (std::size_t j = t + 1; j < C; ++j)
                if (a[t][j] != 0) {
                    BigInt q = a[t][j] / p;
                    if (q != 0)
                        for (std::size_t i = t; i < R; ++i) a[i][j] -= q * a[i][t];
                    if (a[t][j] != 0) clean = false;
                }
            if (clean) break;  // row/col both cleared; remainders would have been smaller
        }
        diag.push_back(abs_big(a[t][t]));
    }
    return diag;
}

/// diag(a,b) ~ diag(gcd,lcm): iterate until the chain divides.
std::vector<BigInt> normalize_factors(std::vector<BigInt> d) {
    d.erase(std::remove(d.begin(), d.end(), BigInt(0)), d.end());
    std::sort(d.begin(), d.end());
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < d.size(); ++i)
            for (std::size_t j = i + 1; j < d.size(); ++j)
                if (d[j] % d[i] != 0) {
                    BigInt g = boost::multiprecision::gcd(d[i], d[j]);
                    BigInt l = d[i] / g * d[j];
                    d[i] = g;
                    d[j] = l;
                    changed = true;
                }
        if (changed) std::sort(d.begin(), d.end());
    }
    return d;
}

template <class Ops>
SmithResult smith_impl(const SparseIntMatrix& m, const SnfOptions& opts) {
    SparseEliminator<Ops> elim(m);
    const std::size_t units = elim.run();
    auto residual = elim.residual();

    SmithResult res;
    std::vector<BigInt> diag(units, BigInt(1));
    if (!residual.empty()) {
        // compact the residual into a dense core
        std::vector<std::int32_t> rmap, cmap;
        for (auto& [r, c, v] : residual) {
            rmap.push_back(r);
            cmap.push_back(c);
        }
        auto uniq = [](std::vector<std::int32_t>& v) {
            std::sort(v.begin(), v.end());
            v.erase(std::unique(v.begin(), v.end()), v.end());
        };
        uniq(rmap);
        uniq(cmap);
        if (rmap.size() > opts.dense_core_cap || cmap.size() > opts.dense_core_cap)
            throw CapacityError("smith_normal_form: residual core exceeds dense cap");
        std::vector<std::vector<BigInt>> core(rmap.size(),
                                              std::vector<BigInt>(cmap.size(), BigInt(0)));
        for (auto& [r, c, v] : residual) {
            std::size_t i = static_cast<std::size_t>(
                std::lower_bound(rmap.begin(), rmap.end(), r) - rmap.begin());
            std::size_t j = static_cast<std::size_t>(
                std::lower_bound(cmap.begin(), cmap.end(), c) - cmap.begin());
            core[i][j] = BigInt(v);
        }
        for (BigInt& d : dense_snf_diagonal(std::move(core))) diag.push_back(std::move(d));
    }
    res.invariant_factors = normalize_factors(std::move(diag));
    res.rank = res.invariant_factors.size();
    return res;
}

}  // namespace

SmithResult smith_normal_form(const SparseIntMatrix& m, const SnfOptions& opts) {
    try {
        return smith_impl<CheckedInt64>(m, opts);
    } catch (const Int64Overflow&) {
        return smith_impl<BigIntOps>(m, opts);
    }
}

namespace {

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = (__uint128_t(r) * b) % p;
        b = (__uint128_t(b) * b) % p;
        e >>= 1;
    }
    return r;
}

}  // namespace

std::size_t rank_mod_p(const SparseIntMatrix& m, std::uint64_t p) {
    if (p < 2 || p >= (1ull << 31)) throw std::invalid_argument("rank_mod_p: bad modulus");
    // rows as sorted (col, value mod p) vectors.
    std::vector<std::vector<std::pair<std::int32_t, std::uint64_t>>> rows(
        static_cast<std::size_t>(m.rows));
    std::vector<std::vector<std::int32_t>> col_rows(static_cast<std::size_t>(m.cols));
    std::vector<std::int32_t> col_count(static_cast<std::size_t>(m.cols), 0);
    for (std::int64_t j = 0; j < m.cols; ++j)
        for (auto [r, v] : m.col_entries[static_cast<std::size_t>(j)]) {
            std::int64_t mv = v % static_cast<std::int64_t>(p);
            if (mv < 0) mv += static_cast<std::int64_t>(p);
            if (mv == 0) continue;
            rows[static_cast<std::size_t>(r)].emplace_back(static_cast<std::int32_t>(j),
                                                           static_cast<std::uint64_t>(mv));
            col_rows[static_cast<std::size_t>(j)].push_back(r);
            ++col_count[static_cast<std::size_t>(j)];
        }
    for (auto& row : rows) std::sort(row.begin(), row.end());
    std::vector<char> row_live(rows.size(), 1);
    std::set<std::pair<std::int32_t, std::int32_t>> cols;
    for (std::size_t j = 0; j < col_count.size(); ++j)
        if (col_count[j] > 0) cols.insert({col_count[j], static_cast<std::int32_t>(j)});

    auto entry = [&](std::int32_t r, std::int32_t c) -> std::uint64_t* {
        auto& row = rows[static_cast<std::size_t>(r)];
        auto it = std::lower_bound(row.begin(), row.end(), c,
                                   [](const auto& e, std::int32_t key) { return e.first < key; });
        return (it != row.end() && it->first == c) ? &it->second : nullptr;
    };
    auto col_changed = [&](std::int32_t c, int delta) {
        std::size_t j = static_cast<std::size_t>(c);
        cols.erase({col_count[j], c});
        col_count[j] += delta;
        if (col_count[j] > 0) cols.insert({col_count[j], c});
    };

    std::size_t rank = 0;
    while (!cols.empty()) {
        std::int32_t c = cols.begin()->second;
        // choose live pivot row with minimal fill
        auto& members = col_rows[static_cast<std::size_t>(c)];
        std::int32_t piv = -1;
        std::size_t best = SIZE_MAX, w = 0;
        for (std::size_t i = 0; i < members.size(); ++i) {
            std::int32_t r = members[i];
            if (!row_live[static_cast<std::size_t>(r)] || !entry(r, c)) continue;
            members[w++] = r;
            if (rows[static_cast<std::size_t>(r)].size() < best) {
                best = rows[static_cast<std::size_t>(r)].size();
                piv = r;
            }
        }
        members.resize(w);
        if (piv < 0) throw std::logic_error("rank_mod_p: column bookkeeping out of sync");
        const std::uint64_t pv = *entry(piv, c);
        const std::uint64_t inv = pow_mod(pv, p - 2, p);
        std::vector<std::int32_t> targets;
        for (std::int32_t r2 : members)
            if (r2 != piv) targets.push_back(r2);
        for (std::int32_t r2 : targets) {
            const std::uint64_t* v2 = entry(r2, c);
            if (!v2) continue;
            const std::uint64_t q = (__uint128_t(*v2) * inv) % p;
            // row r2 -= q * row piv  (mod p)
            const auto& a = rows[static_cast<std::size_t>(r2)];
            const auto& b = rows[static_cast<std::size_t>(piv)];
            std::vector<std::pair<std::int32_t, std::uint64_t>> out;
            out.reserve(a.size() + b.size());
            std::size_t i = 0, j = 0;
            while (i < a.size() || j < b.size()) {
                if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
                    out.push_back(a[i++]);
                } else if (i == a.size() || b[j].first < a[i].first) {
                    std::uint64_t nv = p - (__uint128_t(q) * b[j].second) % p;
                    if (nv == p) nv = 0;
                    if (nv) {
                        col_changed(b[j].first, +1);
                        col_rows[static_cast<std::size_t>(b[j].first)].push_back(r2);
                        out.emplace_back(b[j].first, nv);
                    }
                    ++j;
                } else {
                    std::uint64_t nv =
                        (a[i].second + p - (__uint128_t(q) * b[j].second) % p) % p;
                    if (nv)
                        out.emplace_back(a[i].first, nv);
                    else
                        col_changed(a[i].first, -1);
                    ++i;
                    ++j;
                }
            }
            rows[static_cast<std::size_t>(r2)] = std::move(out);
        }
        for (const auto& [c2, v2] : rows[static_cast<std::size_t>(piv)]) col_changed(c2, -1);
        rows[static_cast<std::size_t>(piv)].clear();
        row_live[static_cast<std::size_t>(piv)] = 0;
        col_rows[static_cast<std::size_t>(c)].clear();
        ++rank;
    }
    return rank;
}

}  // namespace deltaw
