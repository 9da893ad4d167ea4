#include "deltaw/genus_one.hpp"

#include "deltaw/delta0.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace deltaw {

namespace {

using Enc = std::vector<std::uint64_t>;
using VertexMap = std::vector<std::int32_t>;
using EdgePair = std::pair<std::int32_t, std::int32_t>;

constexpr int kMaxMarks = 6;  // complexes stay tiny here; the CLI guards too

long long to_ll_checked(const BigInt& v) {
    if (v > BigInt(std::numeric_limits<long long>::max()) ||
        v < BigInt(std::numeric_limits<long long>::min()))
        throw std::overflow_error("genus-1 prediction exceeds 64-bit range");
    return v.convert_to<long long>();
}

BigInt factorial_big(int k) {
    BigInt f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

BigInt binomial_big(int a, int b) {
    if (b < 0 || b > a) return 0;
    BigInt r = 1;
    for (int i = 1; i <= b; ++i) {
        r *= (a - b + i);
        r /= i;  // exact: r is C(a-b+i, i) after the step
    }
    return r;
}

// ---------------------------------------------------------------------------
// Canonical labelling.
//
// Colors start from (genus, marks, valency, loop count) and are sharpened by
// neighborhood multisets (loops list their own vertex twice).  The candidate
// orderings keep color classes contiguous and permute only inside a class;
// the minimum encoding over candidates is a sound canonical form because the
// colors are isomorphism-invariant.

std::vector<int> wl_colors(const MarkedGraph& g) {
    const int V = g.vertex_count();
    std::vector<std::vector<int>> adj(V);
    std::vector<int> loops(V, 0);
    for (const auto& [a, b] : g.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
        if (a == b) ++loops[a];
    }

    std::vector<int> color(V, 0);
    std::size_t classes = 0;
    {
        std::map<std::array<std::uint64_t, 4>, std::vector<int>> groups;
        for (int v = 0; v < V; ++v)
            groups[{static_cast<std::uint64_t>(g.genus[v]), g.marks[v].bits,
                    adj[v].size(), static_cast<std::uint64_t>(loops[v])}]
                .push_back(v);
        int c = 0;
        for (const auto& [key, ids] : groups) {
            for (int v : ids) color[v] = c;
            ++c;
        }
        classes = groups.size();
    }

    for (int round = 0; round < V; ++round) {
        std::map<std::pair<int, std::vector<int>>, std::vector<int>> groups;
        for (int v = 0; v < V; ++v) {
            std::vector<int> nb;
            nb.reserve(adj[v].size());
            for (int u : adj[v]) nb.push_back(color[u]);
            std::sort(nb.begin(), nb.end());
            groups[{color[v], std::move(nb)}].push_back(v);
        }
        if (groups.size() == classes) break;
        classes = groups.size();
        int c = 0;
        for (const auto& [key, ids] : groups) {
            for (int v : ids) color[v] = c;
            ++c;
        }
    }
    return color;
}

std::vector<VertexMap> candidate_positions(const MarkedGraph& g) {
    const int V = g.vertex_count();
    std::vector<int> color = wl_colors(g);
    std::map<int, std::vector<int>> by_color;
    for (int v = 0; v < V; ++v) by_color[color[v]].push_back(v);

    std::vector<std::vector<int>> classes;
    classes.reserve(by_color.size());
    std::size_t total = 1;
    for (auto& [c, ids] : by_color) {
        for (std::size_t i = 2; i <= ids.size(); ++i) {
            total *= i;
            if (total > 200'000)
                throw CapacityError("genus-1 canonical form: symmetry class too large");
        }
        classes.push_back(std::move(ids));
    }

    std::vector<VertexMap> out;
    while (true) {
        VertexMap pos(V);
        int next = 0;
        for (const auto& cl : classes)
            for (int v : cl) pos[v] = next++;
        out.push_back(std::move(pos));

        std::size_t k = 0;
        while (k < classes.size() &&
               !std::next_permutation(classes[k].begin(), classes[k].end()))
            ++k;
        if (k == classes.size()) break;
    }
    return out;
}

Enc encode_with(const MarkedGraph& g, const VertexMap& pos) {
    const int V = g.vertex_count();
    VertexMap inv(V);
    for (int v = 0; v < V; ++v) inv[pos[v]] = v;

    Enc e;
    e.reserve(2 + 2 * static_cast<std::size_t>(V) + 1 + g.edges.size());
    e.push_back(static_cast<std::uint64_t>(V));
    e.push_back(static_cast<std::uint64_t>(g.n));
    for (int v = 0; v < V; ++v) {
        e.push_back(static_cast<std::uint64_t>(g.genus[inv[v]]));
        e.push_back(g.marks[inv[v]].bits);
    }
    std::vector<std::uint64_t> codes;
    codes.reserve(g.edges.size());
    for (const auto& [a, b] : g.edges) {
        std::uint64_t x = static_cast<std::uint64_t>(pos[a]);
        std::uint64_t y = static_cast<std::uint64_t>(pos[b]);
        if (x > y) std::swap(x, y);
        codes.push_back((x << 32) | y);
    }
    std::sort(codes.begin(), codes.end());
    e.push_back(static_cast<std::uint64_t>(codes.size()));
    e.insert(e.end(), codes.begin(), codes.end());
    return e;
}

Enc identity_encoding(const MarkedGraph& g) {
    VertexMap id(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) id[v] = v;
    return encode_with(g, id);
}

bool odd_permutation(const std::vector<int>& p) {
    std::vector<char> seen(p.size(), 0);
    bool odd = false;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        std::size_t j = i, len = 0;
        while (!seen[j]) {
            seen[j] = 1;
            j = static_cast<std::size_t>(p[j]);
            ++len;
        }
        if ((len - 1) & 1) odd = !odd;
    }
    return odd;
}

int edge_position(const std::vector<EdgePair>& sorted_edges, EdgePair e) {
    auto it = std::lower_bound(sorted_edges.begin(), sorted_edges.end(), e);
    if (it == sorted_edges.end() || *it != e)
        throw std::logic_error("genus-1: edge image not found");
    return static_cast<int>(it - sorted_edges.begin());
}

// ---------------------------------------------------------------------------
// Enumeration.
//
// A genus-1 stable graph is a core (one genus-1 vertex, or a cycle of length
// c >= 1 with all genera zero) with a rooted stable forest hanging off each
// core vertex.  Hanging trees and forests are generated per mark set with
// memoization; cycles are deduplicated through the canonical form.  Every
// hanging tree carries at least one mark (unmarked leaves are unstable), so
// the recursion is finite and cycle cores are at most n long.

struct RTree {
    MarkSet root;
    std::vector<RTree> children;  // sorted by enc
    int vertices = 1;             // total, including the root
    std::string enc;
};

std::string rtree_encode(MarkSet root, const std::vector<RTree>& kids) {
    std::string s = "(";
    s += std::to_string(root.bits);
    for (const auto& k : kids) s += k.enc;
    s += ")";
    return s;
}

struct Genus1Enumerator {
    const WeightVector& w;
    int n;
    std::uint32_t full;
    std::map<std::uint32_t, std::vector<RTree>> tree_memo;
    std::map<std::uint32_t, std::vector<std::vector<RTree>>> forest_memo;
    std::map<std::uint32_t, std::vector<std::vector<RTree>>> forest_multi_memo;

    explicit Genus1Enumerator(const WeightVector& wv)
        : w(wv), n(wv.size()), full(MarkSet::full(wv.size()).bits) {}

    // Trees that hang below a parent edge and carry exactly `mask`.  Root
    // stability with the parent edge: 1 + #children + w(root) > 2.
    const std::vector<RTree>& hanging_trees(std::uint32_t mask) {
        auto it = tree_memo.find(mask);
        if (it != tree_memo.end()) return it->second;

        std::vector<RTree> out;
        for (std::uint32_t r = mask;; r = (r - 1) & mask) {
            const auto& fs = (r == 0) ? forests_multi(mask) : forests(mask ^ r);
            for (const auto& f : fs) {
                Rational slack = Rational(static_cast<long long>(f.size())) +
                                 subset_weight(w, MarkSet(r));
                if (slack > Rational(1)) {
                    RTree t;
                    t.root = MarkSet(r);
                    t.children = f;
                    t.vertices = 1;
                    for (const auto& c : f) t.vertices += c.vertices;
                    t.enc = rtree_encode(t.root, t.children);
                    out.push_back(std::move(t));
                }
            }
            if (r == 0) break;
        }
        std::sort(out.begin(), out.end(),
                  [](const RTree& a, const RTree& b) { return a.enc < b.enc; });
        return tree_memo[mask] = std::move(out);
    }

    // Forests covering `mask` exactly: empty only for mask = 0; each block is
    // a nonempty sub-mask.  The block holding the lowest mark is the first
    // one chosen, so each partition appears once.
    const std::vector<std::vector<RTree>>& forests(std::uint32_t mask) {
        auto it = forest_memo.find(mask);
        if (it != forest_memo.end()) return it->second;

        std::vector<std::vector<RTree>> out;
        if (mask == 0) {
            out.emplace_back();
        } else {
            for (const RTree& t : hanging_trees(mask)) out.push_back({t});
            const auto& multi = forests_multi(mask);
            out.insert(out.end(), multi.begin(), multi.end());
        }
        return forest_memo[mask] = std::move(out);
    }

    // Forests with at least two blocks (every block a strict sub-mask, which
    // keeps the recursion with hanging_trees well-founded).
    const std::vector<std::vector<RTree>>& forests_multi(std::uint32_t mask) {
        auto it = forest_multi_memo.find(mask);
        if (it != forest_multi_memo.end()) return it->second;

        std::vector<std::vector<RTree>> out;
        if (mask != 0) {
            const std::uint32_t low = mask & (~mask + 1);
            for (std::uint32_t b = mask; b; b = (b - 1) & mask) {
                if (!(b & low) || b == mask) continue;
                const auto& rest = forests(mask ^ b);
                for (const RTree& t : hanging_trees(b)) {
                    for (const auto& f : rest) {
                        std::vector<RTree> g = f;
                        g.push_back(t);
                        std::sort(g.begin(), g.end(), [](const RTree& x, const RTree& y) {
                            return x.enc < y.enc;
                        });
                        out.push_back(std::move(g));
                    }
                }
            }
        }
        return forest_multi_memo[mask] = std::move(out);
    }

    static void attach(MarkedGraph& g, int parent, const RTree& t) {
        const int v = g.vertex_count();
        g.genus.push_back(0);
        g.marks.push_back(t.root);
        g.edges.emplace_back(parent, v);
        for (const RTree& c : t.children) attach(g, v, c);
    }

    void emit(MarkedGraph g, std::map<Enc, MarkedGraph>& sink, const BuildLimits& limits) {
        std::sort(g.edges.begin(), g.edges.end());
        g.validate(w);
        GraphCanon c = canonical_graph(g);
        sink.emplace(std::move(c.encoding), std::move(c.graph));
        if (sink.size() > limits.max_faces)
            throw CapacityError("genus-1 enumeration exceeds the face budget");
    }

    // Tree case: genus-1 core vertex, E tree vertices hanging off it.
    void case_tree(int E, std::map<Enc, MarkedGraph>& sink, const BuildLimits& limits) {
        for (std::uint32_t r = full;; r = (r - 1) & full) {
            for (const auto& f : forests(full ^ r)) {
                int tv = 0;
                for (const auto& t : f) tv += t.vertices;
                if (!f.empty() && tv == E) {
                    MarkedGraph g;
                    g.n = n;
                    g.genus.push_back(1);
                    g.marks.push_back(MarkSet(r));
                    for (const RTree& t : f) attach(g, 0, t);
                    emit(std::move(g), sink, limits);
                }
            }
            if (r == 0) break;
        }
    }

    struct CoreDeco {
        MarkSet marks;
        const std::vector<RTree>* forest;
    };

    void place_cycle(int c, int pos, std::uint32_t remaining, int budget,
                     std::vector<CoreDeco>& acc, std::map<Enc, MarkedGraph>& sink,
                     const BuildLimits& limits) {
        if (pos == c) {
            if (remaining != 0 || budget != 0) return;
            MarkedGraph g;
            g.n = n;
            g.genus.assign(static_cast<std::size_t>(c), 0);
            g.marks.resize(static_cast<std::size_t>(c));
            for (int i = 0; i < c; ++i) g.marks[static_cast<std::size_t>(i)] = acc[static_cast<std::size_t>(i)].marks;
            if (c == 1) {
                g.edges.emplace_back(0, 0);
            } else if (c == 2) {
                g.edges.emplace_back(0, 1);
                g.edges.emplace_back(0, 1);
            } else {
                for (int i = 0; i + 1 < c; ++i) g.edges.emplace_back(i, i + 1);
                g.edges.emplace_back(0, c - 1);
            }
            for (int i = 0; i < c; ++i)
                for (const RTree& t : *acc[static_cast<std::size_t>(i)].forest) attach(g, i, t);
            emit(std::move(g), sink, limits);
            return;
        }
        // Every core vertex needs a mark or a tree, so its mask is nonempty;
        // anchoring mark 1 at position 0 trims the rotational overcount.
        for (std::uint32_t m = remaining; m; m = (m - 1) & remaining) {
            if (pos == 0 && !(m & 1u)) continue;
            for (std::uint32_t r = m;; r = (r - 1) & m) {
                for (const auto& f : forests(m ^ r)) {
                    int tv = 0;
                    for (const auto& t : f) tv += t.vertices;
                    if (tv <= budget) {
                        acc.push_back({MarkSet(r), &f});
                        place_cycle(c, pos + 1, remaining ^ m, budget - tv, acc, sink, limits);
                        acc.pop_back();
                    }
                }
                if (r == 0) break;
            }
        }
    }

    std::map<Enc, MarkedGraph> enumerate(int E, const BuildLimits& limits) {
        std::map<Enc, MarkedGraph> sink;
        case_tree(E, sink, limits);
        std::vector<CoreDeco> acc;
        for (int c = 1; c <= std::min(n, E); ++c)
            place_cycle(c, 0, full, E - c, acc, sink, limits);
        return sink;
    }
};

void check_genus1_input(const WeightVector& w) {
    if (w.size() < 1 || !w.stable_for_genus(1))
        throw std::invalid_argument("genus-1: weight vector is empty or unstable");
    if (w.size() > kMaxMarks)
        throw CapacityError("genus-1 complexes are capped at 6 marks");
}

// Cellular boundary over the selected (non-degenerate) cells.  keep[e-1][i]
// selects cells[e-1][i]; the selection must be closed under contraction up
// to degenerate targets.  Returns a void complex when nothing is selected.
ChainComplex assemble_chain(const std::vector<std::vector<GenusOneCell>>& cells,
                            const std::vector<std::vector<char>>& keep) {
    const int e_all = static_cast<int>(cells.size());
    std::vector<int> nd(static_cast<std::size_t>(e_all) + 1, 0);
    std::vector<std::map<Enc, std::pair<int, int>>> index(static_cast<std::size_t>(e_all) + 1);
    for (int e = 1; e <= e_all; ++e) {
        const auto& layer = cells[static_cast<std::size_t>(e - 1)];
        for (std::size_t i = 0; i < layer.size(); ++i) {
            int sub = -1;
            if (keep[static_cast<std::size_t>(e - 1)][i]) sub = nd[static_cast<std::size_t>(e)]++;
            index[static_cast<std::size_t>(e)].emplace(identity_encoding(layer[i].graph),
                                                       std::make_pair(static_cast<int>(i), sub));
        }
    }

    int e_max = 0;
    for (int e = 1; e <= e_all; ++e)
        if (nd[static_cast<std::size_t>(e)] > 0) e_max = e;
    if (e_max == 0) return ChainComplex{};

    ChainComplex cc;
    cc.min_degree = -1;
    cc.dims.push_back(1);
    for (int e = 1; e <= e_max; ++e) cc.dims.push_back(static_cast<std::size_t>(nd[static_cast<std::size_t>(e)]));

    for (int e = 1; e <= e_max; ++e) {
        const std::int64_t rows = (e == 1) ? 1 : nd[static_cast<std::size_t>(e - 1)];
        const std::int64_t cols = nd[static_cast<std::size_t>(e)];
        std::map<std::pair<int, int>, long long> entries;

        const auto& layer = cells[static_cast<std::size_t>(e - 1)];
        for (std::size_t i = 0; i < layer.size(); ++i) {
            if (!keep[static_cast<std::size_t>(e - 1)][i]) continue;
            const MarkedGraph& g = layer[i].graph;
            const int col = index[static_cast<std::size_t>(e)].at(identity_encoding(g)).second;

            for (int ei = 0; ei < e; ++ei) {
                MarkedGraph h = contract_edge(g, static_cast<std::size_t>(ei));
                GraphCanon ch = canonical_graph(h);
                int row;
                long long coeff;
                if (e == 1) {
                    if (ch.graph.edge_count() != 0)
                        throw std::logic_error("genus-1: bad edge contraction");
                    row = 0;
                    coeff = 1;
                } else {
                    auto tit = index[static_cast<std::size_t>(e - 1)].find(ch.encoding);
                    if (tit == index[static_cast<std::size_t>(e - 1)].end())
                        throw std::logic_error("genus-1: contraction target not enumerated");
                    const auto [tidx, tsub] = tit->second;
                    if (cells[static_cast<std::size_t>(e - 2)][static_cast<std::size_t>(tidx)].degenerate)
                        continue;
                    if (tsub < 0)
                        throw std::logic_error("genus-1: selection not closed under contraction");
                    row = tsub;

                    // Comparison sign: track the surviving edges (order
                    // inherited from g) into the canonical order of the
                    // target; non-degenerate targets have no parallel edges,
                    // so positions are unambiguous.
                    std::vector<int> perm(static_cast<std::size_t>(e - 1));
                    for (int j = 0; j + 1 < e; ++j) {
                        auto [a, b] = h.edges[static_cast<std::size_t>(j)];
                        std::int32_t x = ch.vertex_map[static_cast<std::size_t>(a)];
                        std::int32_t y = ch.vertex_map[static_cast<std::size_t>(b)];
                        if (x > y) std::swap(x, y);
                        perm[static_cast<std::size_t>(j)] = edge_position(ch.graph.edges, {x, y});
                    }
                    const int sign = odd_permutation(perm) ? -1 : 1;
                    coeff = ((ei & 1) ? -1 : 1) * sign;
                }
                entries[{row, static_cast<int>(col)}] += coeff;
            }
        }

        SparseIntMatrix m = SparseIntMatrix::zero(rows, cols);
        for (const auto& [rc, val] : entries) {
            if (val == 0) continue;
            m.col_entries[static_cast<std::size_t>(rc.second)].emplace_back(rc.first, val);
        }
        for (auto& colv : m.col_entries)
            std::sort(colv.begin(), colv.end());
        cc.boundary.push_back(std::move(m));
    }
    return cc;
}

HomologyOptions rational_opts() {
    HomologyOptions ho;
    ho.coeffs = Coefficients::Q;
    ho.crosscheck = false;
    return ho;
}

}  // namespace

// ---------------------------------------------------------------------------
// MarkedGraph

int MarkedGraph::valency(std::int32_t v) const {
    int d = 0;
    for (const auto& [a, b] : edges) {
        if (a == v) ++d;
        if (b == v) ++d;
    }
    return d;
}

bool MarkedGraph::is_connected() const {
    const int V = vertex_count();
    if (V == 0) return false;
    std::vector<std::vector<std::int32_t>> adj(static_cast<std::size_t>(V));
    for (const auto& [a, b] : edges) {
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
    }
    std::vector<char> seen(static_cast<std::size_t>(V), 0);
    std::vector<std::int32_t> stack{0};
    seen[0] = 1;
    int found = 1;
    while (!stack.empty()) {
        std::int32_t v = stack.back();
        stack.pop_back();
        for (std::int32_t u : adj[static_cast<std::size_t>(v)])
            if (!seen[static_cast<std::size_t>(u)]) {
                seen[static_cast<std::size_t>(u)] = 1;
                ++found;
                stack.push_back(u);
            }
    }
    return found == V;
}

int MarkedGraph::total_genus() const {
    int t = 0;
    for (int g : genus) t += g;
    return t;
}

void MarkedGraph::validate(const WeightVector& w) const {
    const int V = vertex_count();
    if (V == 0) throw std::logic_error("MarkedGraph: no vertices");
    if (static_cast<int>(marks.size()) != V)
        throw std::logic_error("MarkedGraph: genus/marks size mismatch");
    if (n != w.size()) throw std::logic_error("MarkedGraph: mark count != weight count");
    for (const auto& [a, b] : edges)
        if (a < 0 || b < 0 || a > b || b >= V)
            throw std::logic_error("MarkedGraph: edge endpoints out of range");
    for (int g : genus)
        if (g < 0) throw std::logic_error("MarkedGraph: negative genus");
    if (!is_connected()) throw std::logic_error("MarkedGraph: not connected");
    if (total_genus() + b1() != 1) throw std::logic_error("MarkedGraph: total genus != 1");

    std::uint32_t seen = 0;
    for (const MarkSet& m : marks) {
        if (m.bits & seen) throw std::logic_error("MarkedGraph: mark repeated");
        if (m.bits & ~MarkSet::full(n).bits)
            throw std::logic_error("MarkedGraph: mark out of range");
        seen |= m.bits;
    }
    if (seen != MarkSet::full(n).bits) throw std::logic_error("MarkedGraph: mark missing");

    for (int v = 0; v < V; ++v) {
        Rational slack = Rational(2 * genus[static_cast<std::size_t>(v)] - 2 + valency(v)) +
                         subset_weight(w, marks[static_cast<std::size_t>(v)]);
        if (!(slack > Rational(0)))
            throw std::logic_error("MarkedGraph: unstable vertex " + std::to_string(v));
    }
}

std::string MarkedGraph::str() const {
    std::string s;
    for (int v = 0; v < vertex_count(); ++v) {
        if (v) s += " ";
        s += "g" + std::to_string(genus[static_cast<std::size_t>(v)]) +
             marks[static_cast<std::size_t>(v)].str();
    }
    s += " |";
    for (const auto& [a, b] : edges)
        s += " " + std::to_string(a) + "-" + std::to_string(b);
    return s;
}

// ---------------------------------------------------------------------------

GraphCanon canonical_graph(const MarkedGraph& g) {
    const auto cands = candidate_positions(g);
    const VertexMap* best = nullptr;
    Enc best_enc;
    for (const auto& pos : cands) {
        Enc e = encode_with(g, pos);
        if (!best || e < best_enc) {
            best = &pos;
            best_enc = std::move(e);
        }
    }

    GraphCanon out;
    out.vertex_map = *best;
    out.encoding = std::move(best_enc);

    const int V = g.vertex_count();
    MarkedGraph c;
    c.n = g.n;
    c.genus.resize(static_cast<std::size_t>(V));
    c.marks.resize(static_cast<std::size_t>(V));
    for (int v = 0; v < V; ++v) {
        c.genus[static_cast<std::size_t>(out.vertex_map[static_cast<std::size_t>(v)])] =
            g.genus[static_cast<std::size_t>(v)];
        c.marks[static_cast<std::size_t>(out.vertex_map[static_cast<std::size_t>(v)])] =
            g.marks[static_cast<std::size_t>(v)];
    }
    c.edges.reserve(g.edges.size());
    for (const auto& [a, b] : g.edges) {
        std::int32_t x = out.vertex_map[static_cast<std::size_t>(a)];
        std::int32_t y = out.vertex_map[static_cast<std::size_t>(b)];
        if (x > y) std::swap(x, y);
        c.edges.emplace_back(x, y);
    }
    std::sort(c.edges.begin(), c.edges.end());
    out.graph = std::move(c);
    return out;
}

std::vector<VertexMap> graph_automorphisms(const MarkedGraph& canonical) {
    const Enc base = identity_encoding(canonical);
    std::vector<VertexMap> autos;
    for (const auto& pos : candidate_positions(canonical)) {
        Enc e = encode_with(canonical, pos);
        if (e < base) throw std::logic_error("graph_automorphisms: graph not canonical");
        if (e == base) autos.push_back(pos);
    }
    return autos;
}

bool cell_degenerate(const MarkedGraph& canonical) {
    const auto& edges = canonical.edges;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i)
        if (edges[i] == edges[i + 1]) return true;  // parallel pair swap is odd

    for (const VertexMap& a : graph_automorphisms(canonical)) {
        std::vector<int> perm(edges.size());
        for (std::size_t i = 0; i < edges.size(); ++i) {
            std::int32_t x = a[static_cast<std::size_t>(edges[i].first)];
            std::int32_t y = a[static_cast<std::size_t>(edges[i].second)];
            if (x > y) std::swap(x, y);
            perm[i] = edge_position(edges, {x, y});
        }
        if (odd_permutation(perm)) return true;
    }
    return false;
}

MarkedGraph contract_edge(const MarkedGraph& g, std::size_t edge_index) {
    if (edge_index >= g.edges.size())
        throw std::invalid_argument("contract_edge: index out of range");
    const auto [u, v] = g.edges[edge_index];

    MarkedGraph h;
    h.n = g.n;
    if (u == v) {
        h.genus = g.genus;
        h.marks = g.marks;
        h.genus[static_cast<std::size_t>(u)] += 1;
        for (std::size_t j = 0; j < g.edges.size(); ++j)
            if (j != edge_index) h.edges.push_back(g.edges[j]);
        return h;
    }

    const int V = g.vertex_count();
    auto remap = [u = u, v = v](std::int32_t x) -> std::int32_t {
        if (x == v) return u;
        return x > v ? x - 1 : x;
    };
    h.genus.resize(static_cast<std::size_t>(V - 1));
    h.marks.resize(static_cast<std::size_t>(V - 1));
    for (std::int32_t x = 0; x < V; ++x) {
        if (x == v) continue;
        h.genus[static_cast<std::size_t>(remap(x))] = g.genus[static_cast<std::size_t>(x)];
        h.marks[static_cast<std::size_t>(remap(x))] = g.marks[static_cast<std::size_t>(x)];
    }
    h.genus[static_cast<std::size_t>(u)] += g.genus[static_cast<std::size_t>(v)];
    h.marks[static_cast<std::size_t>(u)] =
        h.marks[static_cast<std::size_t>(u)] | g.marks[static_cast<std::size_t>(v)];
    for (std::size_t j = 0; j < g.edges.size(); ++j) {
        if (j == edge_index) continue;
        std::int32_t x = remap(g.edges[j].first);
        std::int32_t y = remap(g.edges[j].second);
        if (x > y) std::swap(x, y);
        h.edges.emplace_back(x, y);
    }
    return h;
}

std::vector<MarkedGraph> enumerate_genus1_graphs(const WeightVector& w, int edge_count,
                                                 const BuildLimits& limits) {
    check_genus1_input(w);
    if (edge_count < 1)
        throw std::invalid_argument("enumerate_genus1_graphs: edge_count must be >= 1");

    Genus1Enumerator en(w);
    auto sink = en.enumerate(edge_count, limits);
    std::vector<MarkedGraph> out;
    out.reserve(sink.size());
    for (auto& [enc, g] : sink) out.push_back(std::move(g));
    return out;
}

std::size_t GenusOneComplex::total_cells() const {
    std::size_t t = 0;
    for (const auto& layer : cells) t += layer.size();
    return t;
}

GenusOneComplex build_genus1(const WeightVector& w, const BuildLimits& limits) {
    check_genus1_input(w);

    GenusOneComplex out;
    out.w = w;

    Genus1Enumerator en(w);
    std::size_t total = 0;
    for (int e = 1;; ++e) {
        // Contractions keep stability, so the first empty layer is final.
        if (e > 2 * w.size() + 3)
            throw std::logic_error("build_genus1: edge count exceeded the structural bound");
        auto sink = en.enumerate(e, limits);
        if (sink.empty()) break;
        std::vector<GenusOneCell> layer;
        layer.reserve(sink.size());
        for (auto& [enc, g] : sink) {
            GenusOneCell cell;
            cell.degenerate = cell_degenerate(g);
            cell.graph = std::move(g);
            layer.push_back(std::move(cell));
        }
        total += layer.size();
        if (total > limits.max_faces)
            throw CapacityError("genus-1 complex exceeds the face budget");
        out.cells.push_back(std::move(layer));
    }

    std::vector<std::vector<char>> keep;
    keep.reserve(out.cells.size());
    for (const auto& layer : out.cells) {
        std::vector<char> k(layer.size());
        for (std::size_t i = 0; i < layer.size(); ++i) k[i] = !layer[i].degenerate;
        keep.push_back(std::move(k));
    }
    out.cc = assemble_chain(out.cells, keep);
    if (out.cc.dims.empty())
        throw std::logic_error("build_genus1: no cells (the all-marks loop must exist)");
    return out;
}

HomologyProfile genus1_homology(const WeightVector& w, const BuildLimits& limits) {
    GenusOneComplex gc = build_genus1(w, limits);
    return chain_homology(gc.cc, rational_opts());
}

bool graph_has_heavy_vertex(const MarkedGraph& g, const WeightVector& w) {
    for (const MarkSet& m : g.marks)
        if (subset_weight(w, m) > Rational(1)) return true;
    return false;
}

bool is_cycle_graph(const MarkedGraph& g) {
    if (g.total_genus() != 0 || g.b1() != 1 || !g.is_connected()) return false;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.valency(v) != 2) return false;
    return true;
}

HomologyProfile genus1_heavy_locus_homology(const GenusOneComplex& gc) {
    HomologyProfile empty;
    empty.reduced = true;
    empty.coeffs = Coefficients::Q;
    empty.groups.clear();

    if (!(gc.w.total() > Rational(1))) return empty;  // no vertex can be heavy

    std::vector<std::vector<char>> keep;
    keep.reserve(gc.cells.size());
    for (const auto& layer : gc.cells) {
        std::vector<char> k(layer.size());
        for (std::size_t i = 0; i < layer.size(); ++i)
            k[i] = !layer[i].degenerate && graph_has_heavy_vertex(layer[i].graph, gc.w);
        keep.push_back(std::move(k));
    }
    ChainComplex cc = assemble_chain(gc.cells, keep);
    if (cc.dims.empty()) return empty;
    return chain_homology(cc, rational_opts());
}

HomologyProfile genus1_betti_prediction(int m, int k) {
    if (m < 0 || k < 0 || m + k < 1)
        throw std::invalid_argument("genus1_betti_prediction: need m, k >= 0 and m + k >= 1");

    HomologyProfile p;
    p.reduced = true;
    p.coeffs = Coefficients::Q;
    p.groups.clear();

    if (m >= 2) {
        if (m + k >= 3) {
            BigInt c = factorial_big(m - 1);
            for (int i = 0; i < k; ++i) c *= m;
            c /= 2;  // exact: (m-1)! m^k is even whenever m+k >= 3
            p.add_free(m + k - 1, to_ll_checked(c));
        }
        // (m, k) = (2, 0) is contractible
    } else if (m == 1) {
        if (k >= 2 && k % 2 == 0) p.add_free(k, 1);
    } else {
        for (int d = 2; d <= k - 1; d += 2)
            p.add_free(d, to_ll_checked(binomial_big(k - 1, d)));
    }
    return p;
}

bool verify_double_suspension(const WeightVector& w_short, const WeightVector& w_long) {
    const int ns = w_short.size();
    const Rational one(1);
    if (ns < 3 || w_long.size() != ns + 1 || !(w_short[1] == one) || !(w_short[2] == one) ||
        !(w_long[1] == one) || !(w_long[2] == one) || !(w_long[3] == one))
        throw std::invalid_argument("verify_double_suspension: need w = (1,1,tail), w' = (1,1,1,tail)");
    for (int i = 3; i <= ns; ++i)
        if (!(w_long[i + 1] == w_short[i]))
            throw std::invalid_argument("verify_double_suspension: mismatched tails");

    Delta0 d0 = build_delta0(w_long);
    SimplicialComplex s2 = suspend(suspend(d0.cx));
    HomologyProfile left = homology(s2, rational_opts());
    HomologyProfile right = genus1_homology(w_short);

    const int lo = std::min(left.min_degree, right.min_degree);
    const int hi = std::max(left.max_degree(), right.max_degree());
    for (int d = lo; d <= hi; ++d)
        if (left.betti(d) != 2 * right.betti(d)) return false;
    return true;
}

}  // namespace deltaw
