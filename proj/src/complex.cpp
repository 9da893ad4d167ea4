#include "deltaw/complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace deltaw {

std::size_t SimplicialComplex::total_faces() const {
    std::size_t t = has_empty_face ? 1 : 0;
    for (const auto& fs : faces) t += fs.size();
    return t;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
    std::vector<std::size_t> f;
    f.reserve(faces.size());
    for (const auto& fs : faces) f.push_back(fs.size());
    return f;
}

bool SimplicialComplex::contains_face(const Face& f) const {
    if (f.empty()) return has_empty_face;
    int d = static_cast<int>(f.size()) - 1;
    if (d >= static_cast<int>(faces.size())) return false;
    return std::binary_search(faces[d].begin(), faces[d].end(), f);
}

void SimplicialComplex::trim() {
    while (!faces.empty() && faces.back().empty()) faces.pop_back();
}

void SimplicialComplex::validate() const {
    for (int d = 0; d < static_cast<int>(faces.size()); ++d) {
        const auto& fs = faces[d];
        if (!std::is_sorted(fs.begin(), fs.end()))
            throw std::logic_error("complex: face list not sorted");
        if (std::adjacent_find(fs.begin(), fs.end()) != fs.end())
            throw std::logic_error("complex: duplicate face");
        for (const Face& f : fs) {
            if (static_cast<int>(f.size()) != d + 1)
                throw std::logic_error("complex: face in wrong dimension bucket");
            for (size_t i = 0; i < f.size(); ++i) {
                if (f[i] < 0 || f[i] >= static_cast<std::int32_t>(vertex_labels.size()))
                    throw std::logic_error("complex: vertex index out of range");
                if (i + 1 < f.size() && f[i] >= f[i + 1])
                    throw std::logic_error("complex: face not strictly increasing");
            }
            if (d > 0) {
                Face sub(f.size() - 1);
                for (size_t drop = 0; drop < f.size(); ++drop) {
                    sub.clear();
                    for (size_t i = 0; i < f.size(); ++i)
                        if (i != drop) sub.push_back(f[i]);
                    if (!contains_face(sub))
                        throw std::logic_error("complex: not closed under subsets");
                }
            }
        }
    }
}

namespace {

struct UnionFind {
    std::vector<std::int32_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    std::int32_t find(std::int32_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::int32_t a, std::int32_t b) { parent[find(a)] = find(b); }
};

}  // namespace

ComplexStats complex_stats(const SimplicialComplex& K) {
    ComplexStats s;
    for (const auto& fs : K.faces) s.f_vector.push_back(fs.size());
    while (!s.f_vector.empty() && s.f_vector.back() == 0) s.f_vector.pop_back();
    long long chi = 0;
    for (std::size_t d = 0; d < s.f_vector.size(); ++d)
        chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(s.f_vector[d]);
    s.reduced_euler = chi - (K.nonempty() ? 1 : 0);
    if (!K.faces.empty()) {
        UnionFind uf(K.vertex_labels.size());
        if (K.faces.size() > 1)
            for (const Face& e : K.faces[1]) uf.unite(e[0], e[1]);
        std::vector<std::int32_t> roots;
        for (const Face& v : K.faces[0]) roots.push_back(uf.find(v[0]));
        std::sort(roots.begin(), roots.end());
        roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
        s.components = roots.size();
    }
    return s;
}

namespace {

inline bool adj_test(const std::vector<std::vector<std::uint64_t>>& adj, int a, int b) {
    return (adj[a][b >> 6] >> (b & 63)) & 1u;
}

}  // namespace

SimplicialComplex flag_complex(std::vector<std::string> labels,
                               const std::vector<std::vector<std::uint64_t>>& adjacency,
                               const BuildLimits& limits) {
    const int V = static_cast<int>(labels.size());
    SimplicialComplex K;
    K.vertex_labels = std::move(labels);
    // A flag complex always contains the empty face; with no vertices the
    // result is {∅} (the (-1)-sphere), not the void complex.
    K.has_empty_face = true;
    if (V == 0) return K;

    std::size_t total = 0;
    K.faces.emplace_back();
    for (int v = 0; v < V; ++v) K.faces[0].push_back(Face{v});
    total += K.faces[0].size();

    // Extend each (d-1)-face by vertices above its maximum adjacent to all
    // members; the flag property makes the common-neighbor test sufficient.
    const std::size_t words = adjacency.empty() ? 0 : adjacency[0].size();
    while (!K.faces.back().empty()) {
        std::vector<Face> next;
        std::vector<std::uint64_t> common(words);
        for (const Face& f : K.faces.back()) {
            common = adjacency[f[0]];
            for (size_t i = 1; i < f.size(); ++i)
                for (std::size_t wdx = 0; wdx < words; ++wdx)
                    common[wdx] &= adjacency[f[i]][wdx];
            // keep only candidates strictly above the face maximum
            for (int v = f.back() + 1; v < V; ++v) {
                if ((common[v >> 6] >> (v & 63)) & 1u) {
                    Face g = f;
                    g.push_back(v);
                    next.push_back(std::move(g));
                    if (++total > limits.max_faces)
                        throw CapacityError("flag_complex: face cap exceeded");
                }
            }
        }
        if (next.empty()) break;
        K.faces.push_back(std::move(next));  // extension order preserves lex sortedness
    }
    K.trim();
    return K;
}

SimplicialComplex suspend(const SimplicialComplex& K, const BuildLimits& limits) {
    SimplicialComplex S;
    S.vertex_labels = K.vertex_labels;
    S.has_empty_face = true;  // suspensions are never void
    std::string apex0 = "N", apex1 = "S";
    // Labels are opaque; just make the apex labels fresh.
    auto taken = [&](const std::string& s) {
        return std::find(S.vertex_labels.begin(), S.vertex_labels.end(), s) !=
               S.vertex_labels.end();
    };
    while (taken(apex0)) apex0 += "'";
    while (taken(apex1) || apex1 == apex0) apex1 += "'";
    const std::int32_t a0 = static_cast<std::int32_t>(S.vertex_labels.size());
    const std::int32_t a1 = a0 + 1;
    S.vertex_labels.push_back(apex0);
    S.vertex_labels.push_back(apex1);

    if (2 * K.total_faces() + 2 + K.total_faces() > limits.max_faces)
        throw CapacityError("suspend: face cap exceeded");

    S.faces.resize(static_cast<std::size_t>(K.dim() + 2 >= 1 ? K.dim() + 2 : 1));
    for (int d = 0; d <= K.dim(); ++d) S.faces[d] = K.faces[d];
    if (S.faces.empty()) S.faces.emplace_back();
    // cones over the implicit empty face
    S.faces[0].push_back(Face{a0});
    S.faces[0].push_back(Face{a1});
    for (int d = 0; d <= K.dim(); ++d) {
        for (const Face& f : K.faces[d]) {
            Face g0 = f, g1 = f;
            g0.push_back(a0);  // apexes have the largest indices
            g1.push_back(a1);
            S.faces[d + 1].push_back(std::move(g0));
            S.faces[d + 1].push_back(std::move(g1));
        }
    }
    for (auto& fs : S.faces) std::sort(fs.begin(), fs.end());
    S.trim();
    return S;
}

bool is_subcomplex(const SimplicialComplex& L, const SimplicialComplex& K) {
    if (L.vertex_labels != K.vertex_labels) return false;
    if (L.has_empty_face && !(K.has_empty_face || !K.faces.empty())) return false;
    for (const auto& fs : L.faces)
        for (const Face& f : fs) {
            if (!K.contains_face(f)) return false;
            // L must itself be closed under passing to codimension-one
            // subfaces, otherwise it is merely a subset of faces.
            if (f.size() < 2) continue;
            Face sub(f.size() - 1);
            for (std::size_t skip = 0; skip < f.size(); ++skip) {
                std::size_t j = 0;
                for (std::size_t i = 0; i < f.size(); ++i)
                    if (i != skip) sub[j++] = f[i];
                if (!L.contains_face(sub)) return false;
            }
        }
    return true;
}

bool same_labeled_complex(const SimplicialComplex& A, const SimplicialComplex& B) {
    if (A.has_empty_face != B.has_empty_face) return false;
    auto labeled_faces = [](const SimplicialComplex& K) {
        std::vector<std::vector<std::string>> out;
        for (const auto& fs : K.faces)
            for (const Face& f : fs) {
                std::vector<std::string> lf;
                for (auto v : f) lf.push_back(K.vertex_labels[v]);
                std::sort(lf.begin(), lf.end());
                out.push_back(std::move(lf));
            }
        std::sort(out.begin(), out.end());
        return out;
    };
    return labeled_faces(A) == labeled_faces(B);
}

}  // namespace deltaw
