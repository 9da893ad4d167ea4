#include "deltaw/trees.hpp"

#include <algorithm>
#include <stdexcept>

namespace deltaw {

int StableTree::degree(int v) const {
    int d = 0;
    for (auto [a, b] : edges) d += (a == v) + (b == v);
    return d;
}

Rational StableTree::valency(int v, const WeightVector& w) const {
    return Rational(degree(v)) + subset_weight(w, vertex_marks[static_cast<size_t>(v)]);
}

void StableTree::validate(const WeightVector& w) const {
    const int V = vertex_count();
    if (edge_count() != V - 1) throw std::logic_error("tree: edge count");
    // connectivity + mark partition
    std::vector<int> comp(static_cast<size_t>(V), -1);
    std::vector<int> stack{0};
    comp[0] = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (auto [a, b] : edges) {
            int o = a == v ? b : (b == v ? a : -1);
            if (o >= 0 && comp[static_cast<size_t>(o)] < 0) {
                comp[static_cast<size_t>(o)] = 0;
                stack.push_back(o);
            }
        }
    }
    for (int c : comp)
        if (c < 0) throw std::logic_error("tree: disconnected");
    std::uint32_t seen = 0;
    for (MarkSet m : vertex_marks) {
        if (m.bits & seen) throw std::logic_error("tree: overlapping mark sets");
        seen |= m.bits;
    }
    if (seen != MarkSet::full(n).bits) throw std::logic_error("tree: marks not covered");
    // each edge realizes its split
    for (size_t e = 0; e < edges.size(); ++e) {
        // marks on the component of edges[e].second after cutting edge e
        std::vector<char> vis(static_cast<size_t>(V), 0);
        std::vector<int> st{edges[e].second};
        vis[static_cast<size_t>(edges[e].second)] = 1;
        std::uint32_t side = 0;
        while (!st.empty()) {
            int v = st.back();
            st.pop_back();
            side |= vertex_marks[static_cast<size_t>(v)].bits;
            for (size_t f = 0; f < edges.size(); ++f) {
                if (f == e) continue;
                auto [a, b] = edges[f];
                int o = a == v ? b : (b == v ? a : -1);
                if (o >= 0 && !vis[static_cast<size_t>(o)]) {
                    vis[static_cast<size_t>(o)] = 1;
                    st.push_back(o);
                }
            }
        }
        Split got(MarkSet(side), n);
        if (!(got == edge_splits[e])) throw std::logic_error("tree: edge split mismatch");
    }
    for (int v = 0; v < V; ++v)
        if (!(valency(v, w) > Rational(2))) throw std::logic_error("tree: unstable vertex");
}

StableTree face_to_tree(const std::vector<Split>& face, const WeightVector& w) {
    const int n = w.size();
    for (size_t i = 0; i < face.size(); ++i)
        for (size_t j = i + 1; j < face.size(); ++j) {
            if (face[i] == face[j])
                throw std::invalid_argument("face_to_tree: duplicate split");
            if (!splits_compatible(face[i], face[j]))
                throw std::invalid_argument("face_to_tree: incompatible splits");
        }

    StableTree T;
    T.n = n;
    T.vertex_marks = {MarkSet::full(n)};

    // Insert splits one at a time.  For the current tree, each edge e knows
    // the mark set of the component on its (u,v)=edges[e] v-side; walking
    // toward a strictly-containing side locates the unique vertex to split.
    for (const Split& s : face) {
        MarkSet A = s.side;  // canonical side (no mark 1)
        // Mark set of the component across edge e as seen from `from`
        // (BFS avoiding e).
        auto side_marks = [&](size_t e, int from) -> MarkSet {
            int far = T.edges[e].first == from ? T.edges[e].second : T.edges[e].first;
            std::vector<char> vis(static_cast<size_t>(T.vertex_count()), 0);
            std::vector<int> st{far};
            vis[static_cast<size_t>(far)] = 1;
            std::uint32_t bits = 0;
            while (!st.empty()) {
                int v = st.back();
                st.pop_back();
                bits |= T.vertex_marks[static_cast<size_t>(v)].bits;
                for (size_t f = 0; f < T.edges.size(); ++f) {
                    if (f == e) continue;
                    auto [a, b] = T.edges[f];
                    int o = a == v ? b : (b == v ? a : -1);
                    if (o >= 0 && !vis[static_cast<size_t>(o)]) {
                        vis[static_cast<size_t>(o)] = 1;
                        st.push_back(o);
                    }
                }
            }
            return MarkSet(bits);
        };

        int at = 0;
        while (true) {
            int next = -1;
            for (size_t e = 0; e < T.edges.size(); ++e) {
                auto [a, b] = T.edges[e];
                if (a != at && b != at) continue;
                int other = a == at ? b : a;
                MarkSet far = side_marks(e, at);
                bool containsA = A.subset_of(far) && far != A;
                bool containsAc = A.complement(n).subset_of(far) && far != A.complement(n);
                if (containsA || containsAc) {
                    next = other;
                    break;
                }
            }
            if (next < 0) break;
            at = next;
        }

        // Split vertex `at` into (keep = side with the complement of A near
        // the rest, move = side meeting A).  Neighbor subtrees attach by
        // containment; compatibility guarantees each lands on one side.
        int moved = T.vertex_count();
        MarkSet mineA = T.vertex_marks[static_cast<size_t>(at)] & A;
        MarkSet mineAc = MarkSet(T.vertex_marks[static_cast<size_t>(at)].bits & ~A.bits);
        T.vertex_marks[static_cast<size_t>(at)] = mineAc;
        T.vertex_marks.push_back(mineA);
        for (size_t e = 0; e < T.edges.size(); ++e) {
            auto& [a, b] = T.edges[e];
            if (a != at && b != at) continue;
            MarkSet far = side_marks(e, at);
            if (far.subset_of(A)) {
                (a == at ? a : b) = moved;
            }
        }
        T.edges.emplace_back(at, moved);
        T.edge_splits.push_back(s);
    }
    return T;
}

}  // namespace deltaw
