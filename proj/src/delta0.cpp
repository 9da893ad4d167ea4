#include "deltaw/delta0.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace deltaw {

StableTree Delta0::tree_of_face(const Face& f) const {
    std::vector<Split> ss;
    for (auto v : f) ss.push_back(splits[static_cast<size_t>(v)]);
    return face_to_tree(ss, w);
}

Delta0 build_delta0(const WeightVector& w, const BuildLimits& limits) {
    if (w.size() < 3) throw std::invalid_argument("build_delta0: need n >= 3");
    if (!w.stable_for_genus(0))
        throw std::invalid_argument("build_delta0: weight vector not genus-0 stable");
    Delta0 d0;
    d0.w = w;
    d0.splits = admissible_splits(w);
    const int V = static_cast<int>(d0.splits.size());
    const std::size_t words = static_cast<std::size_t>((V + 63) / 64);
    std::vector<std::vector<std::uint64_t>> adj(static_cast<size_t>(V),
                                                std::vector<std::uint64_t>(words, 0));
    for (int i = 0; i < V; ++i)
        for (int j = i + 1; j < V; ++j)
            if (splits_compatible(d0.splits[static_cast<size_t>(i)],
                                  d0.splits[static_cast<size_t>(j)])) {
                adj[static_cast<size_t>(i)][static_cast<size_t>(j >> 6)] |= 1ull << (j & 63);
                adj[static_cast<size_t>(j)][static_cast<size_t>(i >> 6)] |= 1ull << (i & 63);
            }
    std::vector<std::string> labels;
    for (const Split& s : d0.splits) labels.push_back(s.str());
    d0.cx = flag_complex(std::move(labels), adj, limits);
    return d0;
}

SimplicialComplex build_heavy_locus(const Delta0& d0) {
    const int n = d0.w.size();
    const Rational one(1);
    if (n < 2 || !(d0.w[1] == one) || !(d0.w[2] == one))
        throw std::invalid_argument("build_heavy_locus: weights must start (1,1,...)");
    MarkSet distinguished = MarkSet::single(1) | MarkSet::single(2);
    SimplicialComplex L;
    L.vertex_labels = d0.cx.vertex_labels;
    // The empty face corresponds to the one-vertex tree, which lies in the
    // locus exactly when the whole tail is heavy.
    L.has_empty_face =
        subset_weight(d0.w, MarkSet::full(n).without(1).without(2)) > one;
    L.faces.resize(d0.cx.faces.size());
    for (int d = 0; d <= d0.cx.dim(); ++d) {
        for (const Face& f : d0.cx.faces[d]) {
            StableTree T = d0.tree_of_face(f);
            bool heavy = false;
            for (MarkSet m : T.vertex_marks) {
                MarkSet rest(m.bits & ~distinguished.bits);
                if (subset_weight(d0.w, rest) > one) {
                    heavy = true;
                    break;
                }
            }
            if (heavy) L.faces[static_cast<size_t>(d)].push_back(f);
        }
    }
    L.trim();
    return L;
}

namespace {

SimplicialComplex poset_flag_complex(const std::vector<MarkSet>& sets,
                                     const BuildLimits& limits) {
    const int V = static_cast<int>(sets.size());
    const std::size_t words = static_cast<std::size_t>((V + 63) / 64);
    std::vector<std::vector<std::uint64_t>> adj(static_cast<size_t>(V),
                                                std::vector<std::uint64_t>(words, 0));
    for (int i = 0; i < V; ++i)
        for (int j = i + 1; j < V; ++j) {
            bool cmp = sets[static_cast<size_t>(i)].subset_of(sets[static_cast<size_t>(j)]) ||
                       sets[static_cast<size_t>(j)].subset_of(sets[static_cast<size_t>(i)]);
            if (cmp && sets[static_cast<size_t>(i)] != sets[static_cast<size_t>(j)]) {
                adj[static_cast<size_t>(i)][static_cast<size_t>(j >> 6)] |= 1ull << (j & 63);
                adj[static_cast<size_t>(j)][static_cast<size_t>(i >> 6)] |= 1ull << (i & 63);
            }
        }
    std::vector<std::string> labels;
    for (MarkSet s : sets) labels.push_back(s.str());
    // Chains in a poset = cliques of the comparability graph.
    return flag_complex(std::move(labels), adj, limits);
}

}  // namespace

DoubleCover build_double_cover(const Delta0& d0, const BuildLimits& limits) {
    if (!is_path_space(d0.w))
        throw std::invalid_argument("build_double_cover: not a path space");
    const int n = d0.w.size();
    const Rational one(1);
    DoubleCover dc;
    for (MarkSet A : heavy_family(d0.w, MarkSet::full(n)))
        if (d0.w.total() - subset_weight(d0.w, A) > one) dc.sets.push_back(A);
    dc.cx = poset_flag_complex(dc.sets, limits);
    for (MarkSet A : dc.sets) {
        Split s(A, n);
        auto it = std::lower_bound(d0.splits.begin(), d0.splits.end(), s);
        if (it == d0.splits.end() || !(*it == s))
            throw std::logic_error("build_double_cover: projection target missing");
        dc.projection.push_back(static_cast<std::int32_t>(it - d0.splits.begin()));
    }
    return dc;
}

SimplicialComplex build_rank_selected_flag(int n, int k, const BuildLimits& limits) {
    if (k < 1 || 2 * k > n)
        throw std::invalid_argument("build_rank_selected_flag: need 1 <= k and 2k <= n");
    std::vector<MarkSet> sets;
    for (std::uint32_t bits = 1; bits < (1u << n); ++bits) {
        int sz = __builtin_popcount(bits);
        if (sz >= k && sz <= n - k) sets.push_back(MarkSet(bits));
    }
    return poset_flag_complex(sets, limits);
}

SimplicialComplex build_delta_u(const WeightVector& u) {
    const int r = u.size();
    SimplicialComplex K;
    for (int i = 1; i <= r; ++i) K.vertex_labels.push_back(std::to_string(i));
    std::vector<Face> all;
    for (MarkSet A : heavy_family(u, MarkSet::full(r))) {
        MarkSet c = A.complement(r);
        if (c.empty()) {
            K.has_empty_face = true;
            continue;
        }
        Face f;
        for (int m : c.members()) f.push_back(m - 1);
        all.push_back(std::move(f));
    }
    for (Face& f : all) {
        int d = static_cast<int>(f.size()) - 1;
        if (d >= static_cast<int>(K.faces.size())) K.faces.resize(static_cast<size_t>(d + 1));
        K.faces[static_cast<size_t>(d)].push_back(std::move(f));
    }
    for (auto& fs : K.faces) std::sort(fs.begin(), fs.end());
    K.trim();
    return K;
}

std::vector<std::int32_t> relabel_marks(const Delta0& d0, const std::vector<int>& perm) {
    const int n = d0.w.size();
    if (static_cast<int>(perm.size()) != n)
        throw std::invalid_argument("relabel_marks: permutation size mismatch");
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (int p : perm) {
        if (p < 1 || p > n || seen[static_cast<size_t>(p - 1)])
            throw std::invalid_argument("relabel_marks: not a permutation");
        seen[static_cast<size_t>(p - 1)] = 1;
    }
    for (int i = 1; i <= n; ++i)
        if (!(d0.w[i] == d0.w[perm[static_cast<size_t>(i - 1)]]))
            throw std::invalid_argument("relabel_marks: permutation does not preserve w");

    std::vector<std::int32_t> out;
    for (const Split& s : d0.splits) {
        std::uint32_t bits = 0;
        for (int m : s.side.members())
            bits |= 1u << (perm[static_cast<size_t>(m - 1)] - 1);
        Split t(MarkSet(bits), n);
        auto it = std::lower_bound(d0.splits.begin(), d0.splits.end(), t);
        if (it == d0.splits.end() || !(*it == t))
            throw std::logic_error("relabel_marks: image split missing");
        out.push_back(static_cast<std::int32_t>(it - d0.splits.begin()));
    }
    // Sanity: the map must send faces to faces (it does, since
    // compatibility is permutation-invariant); spot-check top faces.
    if (!d0.cx.faces.empty()) {
        for (const Face& f : d0.cx.faces.back()) {
            Face g;
            for (auto v : f) g.push_back(out[static_cast<size_t>(v)]);
            std::sort(g.begin(), g.end());
            if (!d0.cx.contains_face(g))
                throw std::logic_error("relabel_marks: image is not simplicial");
        }
    }
    return out;
}

}  // namespace deltaw
