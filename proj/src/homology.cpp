#include "deltaw/homology.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <random>
#include <stdexcept>
#include <thread>

namespace deltaw {

DegreeHomology HomologyProfile::group(int degree) const {
    int i = degree - min_degree;
    if (i < 0 || i >= static_cast<int>(groups.size())) return {};
    return groups[static_cast<size_t>(i)];
}

void HomologyProfile::set(int degree, DegreeHomology g) {
    if (groups.empty()) {
        min_degree = degree;
        groups.push_back(std::move(g));
        return;
    }
    while (degree < min_degree) {
        groups.insert(groups.begin(), DegreeHomology{});
        --min_degree;
    }
    while (degree > max_degree()) groups.push_back(DegreeHomology{});
    groups[static_cast<size_t>(degree - min_degree)] = std::move(g);
}

void HomologyProfile::add_free(int degree, long long rank) {
    if (rank == 0) return;
    DegreeHomology g = group(degree);
    g.betti += rank;
    set(degree, std::move(g));
}

bool HomologyProfile::torsion_free() const {
    for (const auto& g : groups)
        if (!g.torsion.empty()) return false;
    return true;
}

std::vector<int> HomologyProfile::support() const {
    std::vector<int> out;
    for (int d = min_degree; d <= max_degree(); ++d)
        if (!group(d).trivial()) out.push_back(d);
    return out;
}

long long HomologyProfile::reduced_euler() const {
    long long chi = 0;
    for (int d = min_degree; d <= max_degree(); ++d) {
        long long sign = ((d % 2) == 0) ? 1 : -1;  // degree -1 contributes -1
        chi += sign * group(d).betti;
    }
    return chi;
}

bool operator==(const HomologyProfile& a, const HomologyProfile& b) {
    int lo = std::min(a.min_degree, b.min_degree);
    int hi = std::max(a.max_degree(), b.max_degree());
    for (int d = lo; d <= hi; ++d)
        if (!(a.group(d) == b.group(d))) return false;
    return true;
}

std::string group_str(const DegreeHomology& g) {
    if (g.trivial()) return "0";
    std::string s;
    if (g.betti > 0) {
        s = "Z";
        if (g.betti > 1) s += "^" + std::to_string(g.betti);
    }
    // group equal torsion factors: Z/2+Z/2 -> (Z/2)^2
    for (size_t i = 0; i < g.torsion.size();) {
        size_t j = i;
        while (j < g.torsion.size() && g.torsion[j] == g.torsion[i]) ++j;
        if (!s.empty()) s += "+";
        std::string t = "Z/" + std::to_string(g.torsion[i]);
        if (j - i > 1) t = "(" + t + ")^" + std::to_string(j - i);
        s += t;
        i = j;
    }
    return s;
}

std::string HomologyProfile::str() const {
    std::string s;
    for (int d : support()) {
        if (!s.empty()) s += ", ";
        std::string name = "H" + std::to_string(d);
        if (reduced && d == 0) name = "H~0";
        s += name + " = " + group_str(group(d));
    }
    return s.empty() ? "0" : s;
}

void ChainComplex::validate() const {
    // (d ∘ d) = 0: multiply consecutive boundary matrices.
    for (std::size_t i = 0; i + 1 < boundary.size(); ++i) {
        const SparseIntMatrix& low = boundary[i];       // C_{k} -> C_{k-1}
        const SparseIntMatrix& high = boundary[i + 1];  // C_{k+1} -> C_{k}
        for (std::int64_t j = 0; j < high.cols; ++j) {
            std::map<std::int32_t, long long> acc;
            for (auto [r, v] : high.col_entries[static_cast<size_t>(j)])
                for (auto [r2, v2] : low.col_entries[static_cast<size_t>(r)])
                    acc[r2] += v * v2;
            for (auto& [r2, v2] : acc)
                if (v2 != 0) throw std::logic_error("chain complex: d∘d != 0");
        }
    }
}

ChainComplex boundary_matrices(const SimplicialComplex& K, bool reduced) {
    ChainComplex cc;
    if (K.is_void()) return cc;
    const int d_max = K.dim();
    const bool augmented = reduced;  // K nonempty here
    cc.min_degree = augmented ? -1 : 0;
    if (augmented) cc.dims.push_back(1);
    for (int d = 0; d <= d_max; ++d) cc.dims.push_back(K.face_count(d));
    if (cc.dims.size() <= 1 && !augmented) return cc;

    if (augmented && d_max >= 0) {
        SparseIntMatrix aug = SparseIntMatrix::zero(1, static_cast<std::int64_t>(K.face_count(0)));
        for (std::int64_t j = 0; j < aug.cols; ++j)
            aug.col_entries[static_cast<size_t>(j)].push_back({0, 1});
        cc.boundary.push_back(std::move(aug));
    }
    for (int d = 1; d <= d_max; ++d) {
        const auto& lower = K.faces[static_cast<size_t>(d - 1)];
        const auto& upper = K.faces[static_cast<size_t>(d)];
        SparseIntMatrix b = SparseIntMatrix::zero(static_cast<std::int64_t>(lower.size()),
                                                  static_cast<std::int64_t>(upper.size()));
        Face sub;
        for (std::size_t j = 0; j < upper.size(); ++j) {
            const Face& f = upper[j];
            for (std::size_t drop = 0; drop < f.size(); ++drop) {
                sub.clear();
                for (std::size_t i = 0; i < f.size(); ++i)
                    if (i != drop) sub.push_back(f[i]);
                auto it = std::lower_bound(lower.begin(), lower.end(), sub);
                if (it == lower.end() || *it != sub)
                    throw std::logic_error("boundary_matrices: facet missing");
                std::int32_t row = static_cast<std::int32_t>(it - lower.begin());
                std::int64_t sign = (drop % 2 == 0) ? 1 : -1;
                b.col_entries[j].push_back({row, sign});
            }
            std::sort(b.col_entries[j].begin(), b.col_entries[j].end());
        }
        cc.boundary.push_back(std::move(b));
    }
    return cc;
}

namespace {

long long to_ll(const BigInt& v) {
    if (v > BigInt(std::numeric_limits<long long>::max()))
        throw CapacityError("homology: invariant factor exceeds int64");
    return static_cast<long long>(v);
}

std::uint64_t pick_large_prime(std::size_t salt) {
    static const std::uint64_t primes[] = {
        2147483629ull, 2147483587ull, 2147483563ull, 2147483549ull,
        2147483543ull, 2147483497ull, 2147483489ull, 2147483477ull,
    };
    std::mt19937_64 rng(0x9E3779B97F4A7C15ull ^ salt);
    return primes[rng() % (sizeof(primes) / sizeof(primes[0]))];
}

}  // namespace

HomologyProfile chain_homology(const ChainComplex& cc, const HomologyOptions& opts) {
    HomologyProfile prof;
    prof.min_degree = cc.min_degree;
    prof.reduced = (cc.min_degree == -1);
    prof.coeffs = opts.coeffs;
    prof.p = opts.p;
    const std::size_t D = cc.dims.size();
    prof.groups.resize(D);
    if (D == 0) return prof;

    // ranks[i] = rank of boundary[i] (map into degree min+i); factors kept
    // for torsion extraction under Z.
    std::vector<std::size_t> ranks(cc.boundary.size(), 0);
    std::vector<std::vector<BigInt>> factors(cc.boundary.size());

    if (opts.coeffs == Coefficients::Fp) {
        if (opts.p < 2) throw std::invalid_argument("homology: Fp needs a prime p");
        for (std::size_t i = 0; i < cc.boundary.size(); ++i)
            ranks[i] = rank_mod_p(cc.boundary[i], opts.p);
    } else {
        // degrees are independent; fan out when the hardware has spare cores
        const unsigned hw = std::thread::hardware_concurrency();
        if (hw > 1 && cc.boundary.size() > 1) {
            std::vector<std::future<SmithResult>> futs;
            for (std::size_t i = 0; i < cc.boundary.size(); ++i)
                futs.push_back(std::async(std::launch::async, [&, i] {
                    return smith_normal_form(cc.boundary[i], opts.snf);
                }));
            for (std::size_t i = 0; i < futs.size(); ++i) {
                SmithResult s = futs[i].get();
                ranks[i] = s.rank;
                factors[i] = std::move(s.invariant_factors);
            }
        } else {
            for (std::size_t i = 0; i < cc.boundary.size(); ++i) {
                SmithResult s = smith_normal_form(cc.boundary[i], opts.snf);
                ranks[i] = s.rank;
                factors[i] = std::move(s.invariant_factors);
            }
        }
        if (opts.coeffs == Coefficients::Z && opts.crosscheck) {
            for (std::size_t i = 0; i < cc.boundary.size(); ++i) {
                for (std::uint64_t p :
                     {std::uint64_t(2), std::uint64_t(3),
                      pick_large_prime(cc.dims.size() + cc.boundary[i].nnz())}) {
                    std::size_t drop = 0;
                    for (const BigInt& f : factors[i])
                        if (f % BigInt(p) == 0) ++drop;
                    if (rank_mod_p(cc.boundary[i], p) != ranks[i] - drop)
                        throw std::logic_error("homology: mod-p rank cross-check failed");
                }
            }
        }
    }

    for (std::size_t i = 0; i < D; ++i) {
        DegreeHomology g;
        std::size_t rank_in = (i < cc.boundary.size()) ? ranks[i] : 0;     // d: C_{i+1} -> C_i
        std::size_t rank_out = (i > 0) ? ranks[i - 1] : 0;                 // d: C_i -> C_{i-1}
        g.betti = static_cast<long long>(cc.dims[i]) - static_cast<long long>(rank_out) -
                  static_cast<long long>(rank_in);
        if (g.betti < 0) throw std::logic_error("homology: negative betti");
        if (opts.coeffs == Coefficients::Z && i < cc.boundary.size())
            for (const BigInt& f : factors[i])
                if (f > 1) g.torsion.push_back(to_ll(f));
        prof.groups[i] = std::move(g);
    }
    return prof;
}

HomologyProfile homology(const SimplicialComplex& K, const HomologyOptions& opts) {
    ChainComplex cc = boundary_matrices(K, opts.reduced);
    HomologyProfile p = chain_homology(cc, opts);
    p.reduced = opts.reduced;
    return p;
}

HomologyProfile relative_homology(const SimplicialComplex& K, const SimplicialComplex& L,
                                  const HomologyOptions& opts) {
    if (L.total_faces() == 0)
        throw std::invalid_argument("relative_homology: L is empty");
    if (!is_subcomplex(L, K))
        throw std::invalid_argument("relative_homology: L is not a subcomplex of K");

    // Quotient chain complex: K-faces not in L, unreduced.
    ChainComplex cc;
    cc.min_degree = 0;
    const int d_max = K.dim();
    std::vector<std::vector<std::int32_t>> keep_index(static_cast<size_t>(d_max + 1));
    std::vector<std::vector<Face>> kept(static_cast<size_t>(d_max + 1));
    for (int d = 0; d <= d_max; ++d) {
        const auto& fs = K.faces[static_cast<size_t>(d)];
        keep_index[static_cast<size_t>(d)].assign(fs.size(), -1);
        for (std::size_t i = 0; i < fs.size(); ++i)
            if (!L.contains_face(fs[i])) {
                keep_index[static_cast<size_t>(d)][i] =
                    static_cast<std::int32_t>(kept[static_cast<size_t>(d)].size());
                kept[static_cast<size_t>(d)].push_back(fs[i]);
            }
        cc.dims.push_back(kept[static_cast<size_t>(d)].size());
    }
    for (int d = 1; d <= d_max; ++d) {
        const auto& lower = K.faces[static_cast<size_t>(d - 1)];
        SparseIntMatrix b = SparseIntMatrix::zero(
            static_cast<std::int64_t>(kept[static_cast<size_t>(d - 1)].size()),
            static_cast<std::int64_t>(kept[static_cast<size_t>(d)].size()));
        Face sub;
        std::size_t col = 0;
        for (const Face& f : kept[static_cast<size_t>(d)]) {
            for (std::size_t drop = 0; drop < f.size(); ++drop) {
                sub.clear();
                for (std::size_t i = 0; i < f.size(); ++i)
                    if (i != drop) sub.push_back(f[i]);
                auto it = std::lower_bound(lower.begin(), lower.end(), sub);
                std::int32_t row = keep_index[static_cast<size_t>(d - 1)][static_cast<size_t>(
                    it - lower.begin())];
                if (row < 0) continue;  // facet lies in L: quotient kills it
                b.col_entries[col].push_back({row, (drop % 2 == 0) ? 1 : -1});
            }
            std::sort(b.col_entries[col].begin(), b.col_entries[col].end());
            ++col;
        }
        cc.boundary.push_back(std::move(b));
    }
    HomologyProfile p = chain_homology(cc, opts);
    p.reduced = false;
    return p;
}

HomologyProfile invariant_homology(const SimplicialComplex& K,
                                   const std::vector<std::int32_t>& sigma) {
    const std::size_t V = K.vertex_labels.size();
    if (sigma.size() != V)
        throw std::invalid_argument("invariant_homology: action size mismatch");
    for (std::size_t v = 0; v < V; ++v) {
        std::int32_t s = sigma[v];
        if (s < 0 || static_cast<std::size_t>(s) >= V ||
            sigma[static_cast<size_t>(s)] != static_cast<std::int32_t>(v))
            throw std::invalid_argument("invariant_homology: not an involution");
    }

    const int d_max = K.dim();
    // map face -> (image face, sign of sorting permutation)
    auto image = [&](const Face& f) -> std::pair<Face, int> {
        Face g;
        g.reserve(f.size());
        for (auto v : f) g.push_back(sigma[static_cast<size_t>(v)]);
        int sign = 1;
        for (std::size_t i = 0; i < g.size(); ++i)  // insertion sort, count swaps
            for (std::size_t j = i; j > 0 && g[j - 1] > g[j]; --j) {
                std::swap(g[j - 1], g[j]);
                sign = -sign;
            }
        for (std::size_t i = 0; i + 1 < g.size(); ++i)
            if (g[i] == g[i + 1])
                throw std::invalid_argument("invariant_homology: action not injective on a face");
        return {std::move(g), sign};
    };

    // Invariant basis per dimension: fixed faces with even sign, plus one
    // representative per 2-orbit (basis vector f + sign * sigma(f)).
    struct BasisVec {
        Face rep;
        Face other;  // empty when fixed
        int sign = 1;
    };
    std::vector<std::vector<BasisVec>> basis(static_cast<size_t>(d_max + 1));
    std::vector<std::map<Face, std::int32_t>> rep_index(static_cast<size_t>(d_max + 1));
    for (int d = 0; d <= d_max; ++d) {
        for (const Face& f : K.faces[static_cast<size_t>(d)]) {
            auto [g, sign] = image(f);
            if (!K.contains_face(g))
                throw std::invalid_argument("invariant_homology: action not simplicial");
            if (g == f) {
                if (sign == 1) {
                    rep_index[static_cast<size_t>(d)][f] =
                        static_cast<std::int32_t>(basis[static_cast<size_t>(d)].size());
                    basis[static_cast<size_t>(d)].push_back({f, {}, 1});
                }
                // odd fixed faces are annihilated by the averaging idempotent
            } else if (f < g) {
                rep_index[static_cast<size_t>(d)][f] =
                    static_cast<std::int32_t>(basis[static_cast<size_t>(d)].size());
                basis[static_cast<size_t>(d)].push_back({f, g, sign});
            }
        }
    }

    ChainComplex cc;
    cc.min_degree = 0;
    for (int d = 0; d <= d_max; ++d) cc.dims.push_back(basis[static_cast<size_t>(d)].size());
    for (int d = 1; d <= d_max; ++d) {
        SparseIntMatrix b = SparseIntMatrix::zero(
            static_cast<std::int64_t>(basis[static_cast<size_t>(d - 1)].size()),
            static_cast<std::int64_t>(basis[static_cast<size_t>(d)].size()));
        std::size_t col = 0;
        for (const BasisVec& bv : basis[static_cast<size_t>(d)]) {
            // boundary of the invariant chain in the face basis
            std::map<Face, long long> chain;
            auto add_boundary = [&](const Face& f, long long coef) {
                Face sub;
                for (std::size_t drop = 0; drop < f.size(); ++drop) {
                    sub.clear();
                    for (std::size_t i = 0; i < f.size(); ++i)
                        if (i != drop) sub.push_back(f[i]);
                    chain[sub] += (drop % 2 == 0 ? 1 : -1) * coef;
                }
            };
            add_boundary(bv.rep, 1);
            if (!bv.other.empty()) add_boundary(bv.other, bv.sign);
            // read off coefficients at representative faces
            for (const auto& [face, coef] : chain) {
                if (coef == 0) continue;
                auto it = rep_index[static_cast<size_t>(d - 1)].find(face);
                if (it != rep_index[static_cast<size_t>(d - 1)].end())
                    b.col_entries[col].push_back({it->second, coef});
            }
            std::sort(b.col_entries[col].begin(), b.col_entries[col].end());
            ++col;
        }
        cc.boundary.push_back(std::move(b));
    }

    HomologyOptions opts;
    opts.coeffs = Coefficients::Q;
    opts.reduced = false;
    HomologyProfile p = chain_homology(cc, opts);
    p.reduced = false;
    return p;
}

}  // namespace deltaw
