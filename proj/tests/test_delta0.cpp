#include "deltaw/delta0.hpp"

#include <doctest.h>

#include <random>

#include "deltaw/homology.hpp"
#include "test_util.hpp"

using namespace deltaw;

namespace {

WeightVector wv(std::initializer_list<Rational> v) { return WeightVector(std::vector<Rational>(v)); }

WeightVector ones(int n) { return WeightVector(std::vector<Rational>(static_cast<std::size_t>(n), Rational(1))); }

WeightVector half_tail(int n_heavy, int n_half) {
    std::vector<Rational> v(static_cast<std::size_t>(n_heavy), Rational(1));
    for (int i = 0; i < n_half; ++i) v.emplace_back(1, 2);
    return WeightVector(v);
}

}  // namespace

TEST_CASE("delta0 small builds") {
    // n = 3: no admissible splits; the complex is {∅}, the (-1)-sphere
    // (the tropical moduli cone is a single point)
    auto d3 = build_delta0(ones(3));
    CHECK(d3.cx.faces.empty());
    CHECK(d3.cx.has_empty_face);
    CHECK(homology(d3.cx).group(-1) == DegreeHomology{1, {}});
    CHECK_NOTHROW(d3.tree_of_face({}).validate(d3.w));

    // n = 4, all ones: three pairwise-crossing splits, so three points
    auto d4 = build_delta0(ones(4));
    CHECK(d4.cx.f_vector() == std::vector<std::size_t>{3});
    CHECK(complex_stats(d4.cx).components == 3);
    CHECK(d4.cx.vertex_labels == std::vector<std::string>{"{2,3}", "{2,4}", "{3,4}"});

    // n = 5, all ones: the Petersen graph
    auto d5 = build_delta0(ones(5));
    CHECK(d5.cx.f_vector() == std::vector<std::size_t>{10, 15});
    CHECK(complex_stats(d5.cx).components == 1);
    CHECK(complex_stats(d5.cx).reduced_euler == -6);
    auto h5 = homology(d5.cx);
    CHECK(h5.betti(0) == 0);
    CHECK(h5.group(1) == DegreeHomology{6, {}});  // (5-2)! spheres

    // every face corresponds to a stable tree
    for (std::size_t d = 0; d < d5.cx.faces.size(); ++d)
        for (const auto& f : d5.cx.faces[d]) {
            auto t = d5.tree_of_face(f);
            CHECK_NOTHROW(t.validate(d5.w));
            CHECK(t.edges.size() == f.size());
        }

    // (1,1,1/2,1/2): two crossing splits -> S^0
    auto dh = build_delta0(wv({Rational(1), Rational(1), Rational(1, 2), Rational(1, 2)}));
    CHECK(dh.cx.f_vector() == std::vector<std::size_t>{2});
    CHECK(complex_stats(dh.cx).components == 2);

    // too light for genus 0: 1/3+1/3+1/3 = 1 <= 2
    CHECK_THROWS_AS(build_delta0(wv({Rational(1, 3), Rational(1, 3), Rational(1, 3)})),
                    std::invalid_argument);
    // fewer than three marks
    CHECK_THROWS_AS(build_delta0(ones(2)), std::invalid_argument);
}

TEST_CASE("delta0 (1,1,1/2,1/2,1/2) is a hexagon plus an isolated point") {
    auto d = build_delta0(half_tail(2, 3));
    CHECK(d.cx.f_vector() == std::vector<std::size_t>{7, 6});
    auto stats = complex_stats(d.cx);
    CHECK(stats.components == 2);
    auto h = homology(d.cx);
    CHECK(h.betti(0) == 1);
    CHECK(h.group(1) == DegreeHomology{1, {}});  // S^1 v S^0

    // the isolated component is exactly the heavy marking locus
    auto locus = build_heavy_locus(d);
    REQUIRE(locus.f_vector() == std::vector<std::size_t>{1});
    auto v = locus.faces[0][0][0];
    CHECK(d.cx.vertex_labels[static_cast<std::size_t>(v)] == "{3,4,5}");
    for (const auto& e : d.cx.faces[1]) {
        CHECK(e[0] != v);
        CHECK(e[1] != v);
    }
    CHECK(classify_edge_cases(d.w) == EdgeCase::HEAVY_LOCUS_ISOLATED_POINT);
    CHECK(homology(locus).support().empty());
}

TEST_CASE("heavy marking locus across the edge-case trichotomy") {
    // empty locus
    auto de = build_delta0(wv({Rational(1), Rational(1), Rational(1, 4), Rational(1, 4)}));
    CHECK(classify_edge_cases(de.w) == EdgeCase::HEAVY_LOCUS_EMPTY);
    CHECK(build_heavy_locus(de).is_void());
    // and the complex itself is S^{n-4} = S^0
    CHECK(complex_stats(de.cx).components == 2);
    CHECK(de.cx.f_vector() == std::vector<std::size_t>{2});

    // isolated point, bigger tail
    auto di = build_delta0(
        wv({Rational(1), Rational(1), Rational(1, 3), Rational(1, 3), Rational(1, 3), Rational(1, 3)}));
    CHECK(classify_edge_cases(di.w) == EdgeCase::HEAVY_LOCUS_ISOLATED_POINT);
    auto locus = build_heavy_locus(di);
    REQUIRE(locus.f_vector() == std::vector<std::size_t>{1});
    auto v = locus.faces[0][0][0];
    CHECK(di.cx.vertex_labels[static_cast<std::size_t>(v)] == "{3,4,5,6}");
    for (const auto& e : di.cx.faces[1]) {
        CHECK(e[0] != v);
        CHECK(e[1] != v);
    }

    // generic
    auto dg = build_delta0(half_tail(2, 4));
    CHECK(classify_edge_cases(dg.w) == EdgeCase::GENERIC);
    auto lg = build_heavy_locus(dg);
    CHECK(!lg.is_void());
    CHECK(lg.total_faces() > 1);
    CHECK(is_subcomplex(lg, dg.cx));
}

TEST_CASE("orientation double cover of (1/2)^6") {
    auto d = build_delta0(WeightVector(std::vector<Rational>(6, Rational(1, 2))));
    CHECK(d.cx.f_vector() == std::vector<std::size_t>{10});
    REQUIRE(is_path_space(d.w));
    auto cover = build_double_cover(d);
    CHECK(cover.cx.f_vector() == std::vector<std::size_t>{20});
    REQUIRE(cover.projection.size() == 20);

    // exactly two preimages per split, and they are complementary sets
    std::vector<int> hits(10, 0);
    for (std::size_t i = 0; i < 20; ++i) {
        auto p = cover.projection[static_cast<std::size_t>(i)];
        hits[static_cast<std::size_t>(p)]++;
        Split s = d.splits[static_cast<std::size_t>(p)];
        bool matches = cover.sets[i] == s.side || cover.sets[i] == s.other_side();
        CHECK(matches);
    }
    for (int h : hits) CHECK(h == 2);

    // unreduced Euler characteristic doubles under the cover
    auto su = complex_stats(cover.cx);
    auto sd = complex_stats(d.cx);
    CHECK(su.reduced_euler + 1 == 2 * (sd.reduced_euler + 1));

    CHECK_THROWS_AS(build_double_cover(build_delta0(ones(6))), std::invalid_argument);
}

TEST_CASE("double cover equals the rank-selected Boolean complex for (1/2)^n") {
    for (int n : {6, 7, 8}) {
        auto d = build_delta0(WeightVector(std::vector<Rational>(static_cast<std::size_t>(n), Rational(1, 2))));
        auto cover = build_double_cover(d);
        // heavy with heavy complement means k+1 <= |A| <= n-k-1 with k+1 = 3
        auto rank_sel = build_rank_selected_flag(n, 3);
        CHECK(cover.cx.f_vector() == rank_sel.f_vector());
        CHECK(same_labeled_complex(cover.cx, rank_sel));
    }
}

TEST_CASE("rank-selected Boolean complexes") {
    auto m = build_rank_selected_flag(4, 2);
    CHECK(m.f_vector() == std::vector<std::size_t>{6});

    auto hexagon = build_rank_selected_flag(3, 1);
    CHECK(hexagon.f_vector() == std::vector<std::size_t>{6, 6});
    auto h = homology(hexagon);
    CHECK(h.betti(0) == 0);
    CHECK(h.group(1) == DegreeHomology{1, {}});

    CHECK_THROWS_AS(build_rank_selected_flag(3, 2), std::invalid_argument);
    CHECK_THROWS_AS(build_rank_selected_flag(5, 0), std::invalid_argument);
}

TEST_CASE("delta_u complement complexes") {
    // u = (1,1): only the full set is heavy, so Δ_u = {∅}
    auto a = build_delta_u(wv({Rational(1), Rational(1)}));
    CHECK(a.faces.empty());
    CHECK(a.has_empty_face);
    CHECK(!a.is_void());
    CHECK(homology(a).group(-1) == DegreeHomology{1, {}});

    // u = (1/2)^4: heavy sets have size >= 3; complements are the four
    // singletons and the empty set
    auto b = build_delta_u(WeightVector(std::vector<Rational>(4, Rational(1, 2))));
    CHECK(b.f_vector() == std::vector<std::size_t>{4});
    CHECK(b.has_empty_face);
    auto hb = homology(b);
    CHECK(hb.group(0) == DegreeHomology{3, {}});

    // nothing heavy at all: the void complex
    auto c = build_delta_u(wv({Rational(1, 3), Rational(1, 3)}));
    CHECK(c.is_void());

    // u = (1, 1/2, 1/2): heavy sets are {1,2}, {1,3} and the full set
    // ({2,3} has weight exactly 1, which does not count), so Δ_u consists of
    // the vertices {3}, {2} and the empty face
    auto d = build_delta_u(wv({Rational(1), Rational(1, 2), Rational(1, 2)}));
    CHECK_NOTHROW(d.validate());
    CHECK(d.has_empty_face);
    CHECK(d.f_vector() == std::vector<std::size_t>{2});
}

TEST_CASE("relabel_marks") {
    auto d = build_delta0(ones(4));
    // swap marks 3 and 4
    auto sigma = relabel_marks(d, {1, 2, 4, 3});
    REQUIRE(sigma.size() == 3);
    // labels: {2,3} <-> {2,4}, {3,4} fixed
    auto lbl = [&](std::int32_t i) { return d.cx.vertex_labels[static_cast<std::size_t>(i)]; };
    for (std::int32_t i = 0; i < 3; ++i) {
        if (lbl(i) == "{3,4}") CHECK(sigma[static_cast<std::size_t>(i)] == i);
        if (lbl(i) == "{2,3}") CHECK(lbl(sigma[static_cast<std::size_t>(i)]) == "{2,4}");
    }

    // identity permutation is always allowed
    auto id = relabel_marks(d, {1, 2, 3, 4});
    for (std::int32_t i = 0; i < 3; ++i) CHECK(id[static_cast<std::size_t>(i)] == i);

    // weight-breaking permutation rejected
    auto dw = build_delta0(wv({Rational(1), Rational(1), Rational(1, 2), Rational(1, 3), Rational(1, 3)}));
    CHECK_THROWS_AS(relabel_marks(dw, {1, 2, 4, 3, 5}), std::invalid_argument);
    // not a permutation
    CHECK_THROWS_AS(relabel_marks(d, {1, 2, 3, 3}), std::invalid_argument);

    // involution on the Petersen complex induces a simplicial involution
    auto d5 = build_delta0(ones(5));
    auto tau = relabel_marks(d5, {2, 1, 3, 4, 5});
    auto hq = invariant_homology(d5.cx, tau);
    CHECK(hq.betti(0) == 1);  // stays connected
}

TEST_CASE("delta0 capacity guard") {
    BuildLimits tight;
    tight.max_faces = 10;
    CHECK_THROWS_AS(build_delta0(ones(6), tight), CapacityError);
}

TEST_CASE("delta0 faces agree with brute-force clique enumeration on random weights") {
    std::mt19937 rng(67);
    for (int trial = 0; trial < 12; ++trial) {
        int n = 4 + static_cast<int>(rng() % 3);
        std::vector<Rational> v;
        for (int i = 0; i < n; ++i) {
            long long den = 1 + rng() % 3;
            v.emplace_back(1, den);
        }
        WeightVector w{v};
        if (!w.stable_for_genus(0)) continue;
        auto d = build_delta0(w);
        if (d.cx.is_void()) continue;
        // brute force: every subset of splits, tested for pairwise
        // compatibility (a subset is a face iff the subset minus its lowest
        // element is one and that element is compatible with the rest)
        const auto& S = d.splits;
        REQUIRE(S.size() <= 25);  // n <= 6 admits at most 25 splits
        std::vector<std::uint32_t> compat(S.size(), 0);
        for (std::size_t a = 0; a < S.size(); ++a)
            for (std::size_t b = 0; b < S.size(); ++b)
                if (a != b && splits_compatible(S[a], S[b]))
                    compat[a] |= (1u << b);
        std::size_t count_faces = 0;
        std::vector<std::size_t> per_dim(16, 0);
        std::vector<bool> good(std::size_t{1} << S.size(), false);
        good[0] = true;
        for (std::uint32_t mask = 1; mask < (1u << S.size()); ++mask) {
            std::uint32_t low = mask & (~mask + 1u);
            std::uint32_t rest = mask ^ low;
            std::size_t i = static_cast<std::size_t>(__builtin_ctz(mask));
            bool ok = good[rest] && (rest & ~compat[i]) == 0;
            good[mask] = ok;
            if (ok) {
                ++count_faces;
                per_dim[static_cast<std::size_t>(__builtin_popcount(mask)) - 1]++;
            }
        }
        // total_faces counts the empty face, the mask loop does not
        std::size_t expected = count_faces + (d.cx.has_empty_face ? 1 : 0);
        CHECK(d.cx.total_faces() == expected);
        for (std::size_t k = 0; k < d.cx.faces.size(); ++k) CHECK(d.cx.faces[k].size() == per_dim[k]);
    }
}
