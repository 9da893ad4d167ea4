#include "doctest.h"

#include "deltaw/genus_one.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

using namespace deltaw;

namespace {

WeightVector wv(std::vector<Rational> v) { return WeightVector(std::move(v)); }

// ---------------------------------------------------------------------------
// Independent oracle: brute-force isomorphism classes of w-stable genus-1
// graphs with E edges, for V <= 4 vertices.  Deliberately avoids the library
// canonicalization: iso-testing runs over all vertex permutations.

struct RawGraph {
    std::vector<int> genus;
    std::vector<std::uint32_t> marks;
    std::vector<std::pair<int, int>> edges;  // normalized, sorted
};

bool raw_iso(const RawGraph& a, const RawGraph& b) {
    const int V = static_cast<int>(a.genus.size());
    if (static_cast<int>(b.genus.size()) != V || a.edges.size() != b.edges.size()) return false;
    std::vector<int> perm(static_cast<std::size_t>(V));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int v = 0; v < V && ok; ++v)
            ok = b.genus[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])] ==
                     a.genus[static_cast<std::size_t>(v)] &&
                 b.marks[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])] ==
                     a.marks[static_cast<std::size_t>(v)];
        if (!ok) continue;
        std::vector<std::pair<int, int>> mapped;
        mapped.reserve(a.edges.size());
        for (auto [x, y] : a.edges) {
            int px = perm[static_cast<std::size_t>(x)];
            int py = perm[static_cast<std::size_t>(y)];
            if (px > py) std::swap(px, py);
            mapped.emplace_back(px, py);
        }
        std::sort(mapped.begin(), mapped.end());
        if (mapped == b.edges) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

bool raw_connected(int V, const std::vector<std::pair<int, int>>& edges) {
    std::vector<int> comp(static_cast<std::size_t>(V));
    std::iota(comp.begin(), comp.end(), 0);
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto [a, b] : edges) {
            int ca = comp[static_cast<std::size_t>(a)], cb = comp[static_cast<std::size_t>(b)];
            if (ca != cb) {
                for (int& c : comp)
                    if (c == std::max(ca, cb)) c = std::min(ca, cb);
                changed = true;
            }
        }
    }
    return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

std::vector<RawGraph> oracle_classes(const WeightVector& w, int E) {
    const int n = w.size();
    std::vector<RawGraph> reps;
    for (int V : {E, E + 1}) {
        if (V < 1 || V > 4) continue;
        const int total_genus = V - E;  // b1 = E - V + 1 and b1 + sum(g) = 1
        if (total_genus < 0 || total_genus > 1) continue;

        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < V; ++i)
            for (int j = i; j < V; ++j) pairs.emplace_back(i, j);

        // multisets of E pairs
        std::vector<std::vector<int>> multisets;
        std::vector<int> pick;
        auto rec = [&](auto&& self, int start, int left) -> void {
            if (left == 0) {
                multisets.push_back(pick);
                return;
            }
            for (int p = start; p < static_cast<int>(pairs.size()); ++p) {
                pick.push_back(p);
                self(self, p, left - 1);
                pick.pop_back();
            }
        };
        rec(rec, 0, E);

        for (const auto& ms : multisets) {
            std::vector<std::pair<int, int>> edges;
            edges.reserve(ms.size());
            for (int p : ms) edges.push_back(pairs[static_cast<std::size_t>(p)]);
            if (!raw_connected(V, edges)) continue;

            for (int gv = 0; gv < (total_genus == 1 ? V : 1); ++gv) {
                std::vector<int> genus(static_cast<std::size_t>(V), 0);
                if (total_genus == 1) genus[static_cast<std::size_t>(gv)] = 1;

                // mark assignments: mark i -> vertex digits[i]
                const long long count = [&] {
                    long long c = 1;
                    for (int i = 0; i < n; ++i) c *= V;
                    return c;
                }();
                for (long long a = 0; a < count; ++a) {
                    std::vector<std::uint32_t> marks(static_cast<std::size_t>(V), 0);
                    long long t = a;
                    for (int i = 0; i < n; ++i) {
                        marks[static_cast<std::size_t>(t % V)] |= (1u << i);
                        t /= V;
                    }
                    bool stable = true;
                    for (int v = 0; v < V && stable; ++v) {
                        int val = 0;
                        for (auto [x, y] : edges) {
                            if (x == v) ++val;
                            if (y == v) ++val;
                        }
                        Rational slack =
                            Rational(2 * genus[static_cast<std::size_t>(v)] - 2 + val) +
                            subset_weight(w, MarkSet(marks[static_cast<std::size_t>(v)]));
                        stable = slack > Rational(0);
                    }
                    if (!stable) continue;

                    RawGraph rg{genus, marks, edges};
                    std::sort(rg.edges.begin(), rg.edges.end());
                    bool seen = false;
                    for (const auto& r : reps)
                        if (raw_iso(rg, r)) {
                            seen = true;
                            break;
                        }
                    if (!seen) reps.push_back(std::move(rg));
                }
            }
        }
    }
    return reps;
}

const MarkedGraph* find_graph(const std::vector<MarkedGraph>& gs, int vertices, int loops) {
    for (const auto& g : gs) {
        int l = 0;
        for (const auto& [a, b] : g.edges)
            if (a == b) ++l;
        if (g.vertex_count() == vertices && l == loops) return &g;
    }
    return nullptr;
}

}  // namespace

TEST_CASE("enumerate (1,1): the two one-edge graphs") {
    auto gs = enumerate_genus1_graphs(wv({1, 1}), 1);
    REQUIRE(gs.size() == 2);

    const MarkedGraph* loop = find_graph(gs, 1, 1);
    REQUIRE(loop != nullptr);
    CHECK(loop->genus == std::vector<int>{0});
    CHECK(loop->marks[0] == MarkSet::full(2));
    CHECK(!cell_degenerate(*loop));

    const MarkedGraph* bridge = find_graph(gs, 2, 0);
    REQUIRE(bridge != nullptr);
    CHECK(bridge->total_genus() == 1);
    // the leaf carries both marks, the genus-1 vertex none
    for (int v = 0; v < 2; ++v) {
        if (bridge->genus[static_cast<std::size_t>(v)] == 1)
            CHECK(bridge->marks[static_cast<std::size_t>(v)].empty());
        else
            CHECK(bridge->marks[static_cast<std::size_t>(v)] == MarkSet::full(2));
    }
    CHECK(!cell_degenerate(*bridge));
}

TEST_CASE("enumerate (1,1): two-edge graphs, the 2-cycle degenerate") {
    auto gs = enumerate_genus1_graphs(wv({1, 1}), 2);
    REQUIRE(gs.size() == 2);

    const MarkedGraph* loop_bridge = find_graph(gs, 2, 1);
    REQUIRE(loop_bridge != nullptr);
    CHECK(loop_bridge->total_genus() == 0);
    CHECK(!cell_degenerate(*loop_bridge));

    const MarkedGraph* two_cycle = find_graph(gs, 2, 0);
    REQUIRE(two_cycle != nullptr);
    CHECK(two_cycle->edges == std::vector<std::pair<std::int32_t, std::int32_t>>{{0, 1}, {0, 1}});
    CHECK(two_cycle->marks[0].size() == 1);  // marks on distinct vertices
    CHECK(two_cycle->marks[1].size() == 1);
    CHECK(cell_degenerate(*two_cycle));

    CHECK(enumerate_genus1_graphs(wv({1, 1}), 3).empty());
}

TEST_CASE("enumerate (eps,eps): no three-edge graph survives stability") {
    WeightVector w = wv({{1, 3}, {1, 3}});
    auto e1 = enumerate_genus1_graphs(w, 1);
    REQUIRE(e1.size() == 1);  // only the loop; the leaf needs weight > 1
    CHECK(e1[0].vertex_count() == 1);
    CHECK(e1[0].total_genus() == 0);

    auto e2 = enumerate_genus1_graphs(w, 2);
    REQUIRE(e2.size() == 1);
    CHECK(cell_degenerate(e2[0]));  // the 2-cycle

    CHECK(enumerate_genus1_graphs(w, 3).empty());
}

TEST_CASE("enumeration agrees with the brute-force oracle") {
    const std::vector<WeightVector> ws = {
        wv({1, 1}),
        wv({{1, 3}, {1, 3}}),
        wv({1, {1, 3}, {1, 3}}),
        wv({{1, 4}, {1, 4}, {1, 4}}),
        wv({1, 1, {1, 2}}),
    };
    for (const auto& w : ws) {
        for (int E = 1; E <= 3; ++E) {
            CAPTURE(w.total().str());
            CAPTURE(E);
            auto mine = enumerate_genus1_graphs(w, E);
            auto oracle = oracle_classes(w, E);
            CHECK(mine.size() == oracle.size());
            for (const auto& g : mine) g.validate(w);
        }
    }
}

TEST_CASE("chain complex for (1,1): ranks 2 and 1, contractible") {
    GenusOneComplex gc = build_genus1(wv({1, 1}));
    REQUIRE(gc.cells.size() == 2);
    CHECK(gc.cells[0].size() == 2);
    CHECK(gc.cells[1].size() == 2);
    int degenerate = 0;
    for (const auto& c : gc.cells[1]) degenerate += c.degenerate;
    CHECK(degenerate == 1);

    CHECK(gc.cc.min_degree == -1);
    CHECK(gc.cc.dims == std::vector<std::size_t>{1, 2, 1});
    gc.cc.validate();

    HomologyProfile h = genus1_homology(wv({1, 1}));
    CHECK(h.support().empty());
}

TEST_CASE("small homology goldens") {
    SUBCASE("(eps,eps) is an interval") {
        CHECK(genus1_homology(wv({{1, 3}, {1, 3}})).support().empty());
    }
    SUBCASE("(eps,eps,eps) is a 2-sphere") {
        HomologyProfile h = genus1_homology(wv({{1, 4}, {1, 4}, {1, 4}}));
        CHECK(h.support() == std::vector<int>{2});
        CHECK(h.betti(2) == 1);
        // cell count detail: one 0-cell (the loop), no usable 1-cells, one
        // 2-cell (the marked 3-cycle)
        GenusOneComplex gc = build_genus1(wv({{1, 4}, {1, 4}, {1, 4}}));
        CHECK(gc.cc.dims == std::vector<std::size_t>{1, 1, 0, 1});
    }
    SUBCASE("(1,eps,eps)") {
        HomologyProfile h = genus1_homology(wv({1, {1, 3}, {1, 3}}));
        CHECK(h.support() == std::vector<int>{2});
        CHECK(h.betti(2) == 1);
    }
    SUBCASE("(1,1,eps)") {
        HomologyProfile h = genus1_homology(wv({1, 1, {1, 2}}));
        CHECK(h.support() == std::vector<int>{2});
        CHECK(h.betti(2) == 1);
    }
    SUBCASE("(1,1,1): half of 2! spheres") {
        HomologyProfile h = genus1_homology(wv({1, 1, 1}));
        CHECK(h.support() == std::vector<int>{2});
        CHECK(h.betti(2) == 1);
    }
}

TEST_CASE("betti prediction closed form") {
    CHECK(genus1_betti_prediction(2, 1).betti(2) == 1);
    CHECK(genus1_betti_prediction(2, 1).support() == std::vector<int>{2});

    CHECK(genus1_betti_prediction(1, 3).support().empty());
    CHECK(genus1_betti_prediction(1, 2).betti(2) == 1);
    CHECK(genus1_betti_prediction(1, 0).support().empty());

    HomologyProfile k5 = genus1_betti_prediction(0, 5);
    CHECK(k5.betti(2) == 6);  // C(4,2)
    CHECK(k5.betti(4) == 1);  // C(4,4)
    CHECK(k5.support() == std::vector<int>{2, 4});

    CHECK(genus1_betti_prediction(0, 1).support().empty());
    CHECK(genus1_betti_prediction(2, 0).support().empty());
    CHECK(genus1_betti_prediction(3, 0).betti(2) == 1);   // ½·2!
    CHECK(genus1_betti_prediction(4, 0).betti(3) == 3);   // ½·3!
    CHECK(genus1_betti_prediction(6, 2).betti(7) == 60 * 36);  // ½·5!·6²

    CHECK_THROWS_AS(genus1_betti_prediction(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(genus1_betti_prediction(-1, 2), std::invalid_argument);
}

TEST_CASE("computed homology matches the prediction for m+k <= 5") {
    for (int m = 0; m <= 5; ++m) {
        for (int k = 0; m + k <= 5; ++k) {
            if (m + k < 1) continue;
            std::vector<Rational> v;
            for (int i = 0; i < m; ++i) v.emplace_back(1);
            for (int i = 0; i < k; ++i) v.emplace_back(1, k + 1);
            CAPTURE(m);
            CAPTURE(k);
            HomologyProfile computed = genus1_homology(wv(v));
            HomologyProfile predicted = genus1_betti_prediction(m, k);
            CHECK(computed == predicted);
        }
    }
}

TEST_CASE("boundary squares to zero and the locus splits into cycle graphs") {
    const std::vector<WeightVector> ws = {
        wv({1, 1}),
        wv({1, 1, {1, 2}}),
        wv({1, {1, 3}, {1, 3}}),
        wv({{1, 4}, {1, 4}, {1, 4}}),
        wv({1, 1, 1, 1}),
        wv({{2, 3}, {2, 3}, {2, 3}}),
        wv({1, {1, 2}, {1, 2}, {1, 2}}),
    };
    for (const auto& w : ws) {
        CAPTURE(w.total().str());
        GenusOneComplex gc = build_genus1(w);
        gc.cc.validate();

        HomologyProfile locus = genus1_heavy_locus_homology(gc);
        if (w.total() > Rational(1)) {
            CHECK(locus.support().empty());  // contractible locus
        } else {
            CHECK(locus.groups.empty());  // empty locus
        }

        for (const auto& layer : gc.cells)
            for (const auto& cell : layer)
                if (!graph_has_heavy_vertex(cell.graph, w))
                    CHECK(is_cycle_graph(cell.graph));
    }
}

TEST_CASE("contract_edge: loop bumps genus, bridge merges") {
    auto gs = enumerate_genus1_graphs(wv({1, 1}), 1);
    const MarkedGraph* loop = find_graph(gs, 1, 1);
    REQUIRE(loop != nullptr);
    MarkedGraph c = contract_edge(*loop, 0);
    CHECK(c.vertex_count() == 1);
    CHECK(c.edge_count() == 0);
    CHECK(c.genus == std::vector<int>{1});
    CHECK(c.marks[0] == MarkSet::full(2));

    const MarkedGraph* bridge = find_graph(gs, 2, 0);
    REQUIRE(bridge != nullptr);
    MarkedGraph d = contract_edge(*bridge, 0);
    CHECK(d.vertex_count() == 1);
    CHECK(d.genus == std::vector<int>{1});
    CHECK(d.marks[0] == MarkSet::full(2));

    CHECK_THROWS_AS(contract_edge(*loop, 5), std::invalid_argument);
}

TEST_CASE("validate rejects malformed graphs") {
    WeightVector w = wv({1, 1});

    MarkedGraph disconnected;
    disconnected.n = 2;
    disconnected.genus = {1, 0};
    disconnected.marks = {MarkSet::single(1), MarkSet::single(2)};
    CHECK_THROWS_AS(disconnected.validate(w), std::logic_error);

    MarkedGraph wrong_genus;  // two independent loops -> genus 2
    wrong_genus.n = 2;
    wrong_genus.genus = {1};
    wrong_genus.marks = {MarkSet::full(2)};
    wrong_genus.edges = {{0, 0}};
    CHECK_THROWS_AS(wrong_genus.validate(w), std::logic_error);

    MarkedGraph missing_mark;
    missing_mark.n = 2;
    missing_mark.genus = {1};
    missing_mark.marks = {MarkSet::single(1)};
    CHECK_THROWS_AS(missing_mark.validate(w), std::logic_error);

    MarkedGraph unstable;  // genus-0 leaf with one unit mark: 1 + 1 = 2, not > 2
    unstable.n = 2;
    unstable.genus = {1, 0};
    unstable.marks = {MarkSet::single(1), MarkSet::single(2)};
    unstable.edges = {{0, 1}};
    CHECK_THROWS_AS(unstable.validate(w), std::logic_error);
}

TEST_CASE("input guards") {
    CHECK_THROWS_AS(enumerate_genus1_graphs(wv({1, 1}), 0), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_genus1_graphs(wv({}), 1), std::invalid_argument);
    CHECK_THROWS_AS(build_genus1(wv({1, 1, 1, 1, 1, 1, 1})), CapacityError);
}

TEST_CASE("double suspension comparison") {
    CHECK(verify_double_suspension(wv({1, 1, {1, 2}}), wv({1, 1, 1, {1, 2}})));
    CHECK(verify_double_suspension(wv({1, 1, {1, 3}, {1, 3}}), wv({1, 1, 1, {1, 3}, {1, 3}})));
    CHECK(verify_double_suspension(wv({1, 1, 1}), wv({1, 1, 1, 1})));

    CHECK_THROWS_AS(verify_double_suspension(wv({1, 1, {1, 2}}), wv({1, 1, 1, {1, 3}})),
                    std::invalid_argument);
    CHECK_THROWS_AS(verify_double_suspension(wv({1, 1}), wv({1, 1, 1})),
                    std::invalid_argument);
    CHECK_THROWS_AS(verify_double_suspension(wv({1, {1, 2}, {1, 2}}), wv({1, 1, {1, 2}, {1, 2}})),
                    std::invalid_argument);
}
