#include "deltaw/predictions.hpp"

#include <doctest.h>

#include <random>

#include "deltaw/delta0.hpp"

using namespace deltaw;

namespace {

std::vector<Rational> halves(int r) { return std::vector<Rational>(static_cast<size_t>(r), Rational(1, 2)); }

WeightVector with_distinguished(const std::vector<Rational>& u) {
    std::vector<Rational> v{Rational(1), Rational(1)};
    v.insert(v.end(), u.begin(), u.end());
    return WeightVector(v);
}

}  // namespace

TEST_CASE("partition primitives") {
    auto bot = discrete_partition(4);
    CHECK(bot.dimension() == 4);
    CHECK(bot.str() == "{1}|{2}|{3}|{4}");
    CHECK_NOTHROW(bot.validate());

    auto p = one_block_partition(4, MarkSet::single(1) | MarkSet::single(2));
    CHECK(p.dimension() == 3);
    CHECK(refines(bot, p));
    CHECK(!refines(p, bot));
    CHECK(refines(p, p));

    auto q = one_block_partition(4, MarkSet::single(3) | MarkSet::single(4));
    auto j = join(p, q);
    CHECK(j.dimension() == 2);
    CHECK(j.str() == "{1,2}|{3,4}");
    CHECK(refines(p, j));
    CHECK(refines(q, j));

    // join with overlap merges transitively
    auto a = one_block_partition(4, MarkSet::single(1) | MarkSet::single(2));
    auto b = one_block_partition(4, MarkSet::single(2) | MarkSet::single(3));
    CHECK(join(a, b).str() == "{1,2,3}|{4}");
}

TEST_CASE("intersection lattices") {
    auto l3 = intersection_lattice(halves(3));
    CHECK(l3.elements.size() == 2);  // bottom and {123}

    auto l4 = intersection_lattice(halves(4));
    REQUIRE(l4.elements.size() == 6);
    std::multiset<int> dims;
    for (const auto& p : l4.elements) dims.insert(p.dimension());
    CHECK(dims == std::multiset<int>{1, 2, 2, 2, 2, 4});

    auto trivial = intersection_lattice({Rational(1, 3), Rational(1, 3)});
    REQUIRE(trivial.elements.size() == 1);
    CHECK(trivial.elements[0] == discrete_partition(2));

    auto none = intersection_lattice({});
    CHECK(none.elements.size() == 1);

    // joins of disjoint heavy blocks appear: (1/2)^6 has two-block elements
    auto l6 = intersection_lattice(halves(6));
    bool has_two_heavy_blocks = false;
    for (const auto& p : l6.elements) {
        int big = 0;
        for (MarkSet b : p.blocks) big += b.size() >= 3 ? 1 : 0;
        if (big == 2) has_two_heavy_blocks = true;
    }
    CHECK(has_two_heavy_blocks);
}

TEST_CASE("interval order complexes") {
    auto L = intersection_lattice(halves(4));
    SetPartition top;  // the one-block partition {1234}
    top.r = 4;
    top.blocks.push_back(MarkSet::full(4));
    REQUIRE(L.contains(top));

    auto oc = interval_order_complex(L, top);
    CHECK(oc.f_vector() == std::vector<std::size_t>{4});  // four incomparable planes
    CHECK(oc.has_empty_face);

    // a cover of the bottom has an empty open interval = the (-1)-sphere
    auto plane = one_block_partition(4, MarkSet(0b0111));
    REQUIRE(L.contains(plane));
    auto oc2 = interval_order_complex(L, plane);
    CHECK(oc2.faces.empty());
    CHECK(oc2.has_empty_face);

    CHECK_THROWS_AS(interval_order_complex(L, discrete_partition(4)), std::invalid_argument);
    SetPartition foreign = one_block_partition(4, MarkSet(0b0011));
    CHECK_THROWS_AS(interval_order_complex(L, foreign), std::invalid_argument);
}

TEST_CASE("Goresky-MacPherson assembly") {
    auto g3 = gm_link_homology(halves(3));
    CHECK(g3.support() == std::vector<int>{0});
    CHECK(g3.group(0) == DegreeHomology{1, {}});

    auto g4 = gm_link_homology(halves(4));
    CHECK(g4.support() == std::vector<int>{1});
    CHECK(g4.group(1) == DegreeHomology{7, {}});

    CHECK(gm_link_homology({}).support().empty());
    CHECK(gm_link_homology({Rational(1, 3), Rational(1, 3)}).support().empty());

    // two unit weights: single heavy block {1,2}, one empty interval at d=1
    auto g11 = gm_link_homology({Rational(1), Rational(1)});
    CHECK(g11.support() == std::vector<int>{0});
}

TEST_CASE("predicted profiles match direct homology on small cases") {
    // (1,1,1,1): GM gives Z at 0, plus the sphere summand at n-4 = 0
    auto p4 = predicted_delta0_profile(with_distinguished({Rational(1), Rational(1)}));
    CHECK(p4.group(0) == DegreeHomology{2, {}});
    CHECK(p4.support() == std::vector<int>{0});

    // (1,1,(1/2)^3): hexagon plus isolated point
    auto p5 = predicted_delta0_profile(with_distinguished(halves(3)));
    CHECK(p5.group(0) == DegreeHomology{1, {}});
    CHECK(p5.group(1) == DegreeHomology{1, {}});

    // (1,1,(1/2)^4)
    auto p6 = predicted_delta0_profile(with_distinguished(halves(4)));
    CHECK(p6.support() == std::vector<int>{1, 2});
    CHECK(p6.group(1) == DegreeHomology{7, {}});
    CHECK(p6.group(2) == DegreeHomology{1, {}});

    // n = 3 degenerate case: the (-1)-sphere
    auto p3 = predicted_delta0_profile(with_distinguished({Rational(1, 2)}));
    CHECK(p3.support() == std::vector<int>{-1});

    CHECK_THROWS_AS(predicted_delta0_profile(WeightVector(halves(4))), std::invalid_argument);

    std::mt19937 rng(71);
    int tested = 0;
    for (int trial = 0; trial < 40 && tested < 12; ++trial) {
        int r = 2 + static_cast<int>(rng() % 3);
        std::vector<Rational> u;
        for (int i = 0; i < r; ++i) u.emplace_back(1, 1 + static_cast<long long>(rng() % 4));
        auto w = with_distinguished(u);
        auto predicted = predicted_delta0_profile(w);
        auto actual = homology(build_delta0(w).cx);
        CHECK(predicted == actual);
        CHECK(actual.torsion_free());
        ++tested;
    }
    CHECK(tested == 12);
}

TEST_CASE("lex facet order") {
    auto so = lex_facet_order(WeightVector(halves(4)));
    REQUIRE(so.facets.size() == 4);
    for (int i = 0; i < 4; ++i) CHECK(so.facets[static_cast<size_t>(i)] == Face{i});

    // (1/2,1/2,1/3,1/3,1/3): facets are all pairs except the two halves,
    // ordered with the light marks re-indexed first
    WeightVector u({Rational(1, 2), Rational(1, 2), Rational(1, 3), Rational(1, 3), Rational(1, 3)});
    auto so5 = lex_facet_order(u);
    std::vector<Face> expect = {{2, 3}, {2, 4}, {0, 2}, {1, 2}, {3, 4},
                                {0, 3}, {1, 3}, {0, 4}, {1, 4}};
    CHECK(so5.facets == expect);

    CHECK_THROWS_AS(lex_facet_order(WeightVector({Rational(1)})), std::invalid_argument);
    CHECK_THROWS_AS(lex_facet_order(WeightVector({Rational(1, 3), Rational(1, 3)})),
                    std::invalid_argument);
}

TEST_CASE("verify_shelling") {
    // single facet: vacuously a shelling
    SimplicialComplex tri;
    tri.vertex_labels = {"a", "b", "c"};
    tri.faces = {{Face{0}, Face{1}, Face{2}}, {Face{0, 1}, Face{0, 2}, Face{1, 2}},
                 {Face{0, 1, 2}}};
    tri.has_empty_face = true;
    CHECK(verify_shelling(tri, ShellingOrder{{Face{0, 1, 2}}}));

    // two disjoint edges can never be shelled
    SimplicialComplex disj;
    disj.vertex_labels = {"a", "b", "c", "d"};
    disj.faces = {{Face{0}, Face{1}, Face{2}, Face{3}}, {Face{0, 1}, Face{2, 3}}};
    CHECK(!verify_shelling(disj, ShellingOrder{{Face{0, 1}, Face{2, 3}}}));
    CHECK(!verify_shelling(disj, ShellingOrder{{Face{2, 3}, Face{0, 1}}}));

    // order must list the facets exactly
    CHECK_THROWS_AS(verify_shelling(disj, ShellingOrder{{Face{0, 1}}}), std::invalid_argument);
    CHECK_THROWS_AS(verify_shelling(disj, ShellingOrder{{Face{0, 1}, Face{0, 1}}}),
                    std::invalid_argument);

    // hollow triangle: any facet order is a shelling
    SimplicialComplex hollow = tri;
    hollow.faces.pop_back();
    CHECK(verify_shelling(hollow, ShellingOrder{{Face{0, 1}, Face{0, 2}, Face{1, 2}}}));
    CHECK(verify_shelling(hollow, ShellingOrder{{Face{1, 2}, Face{0, 1}, Face{0, 2}}}));

    // lex order shells Delta_u, including a nonpure example
    for (const WeightVector& u :
         {WeightVector(halves(4)), WeightVector(halves(5)),
          WeightVector({Rational(1, 2), Rational(1, 2), Rational(1, 3), Rational(1, 3), Rational(1, 3)}),
          WeightVector({Rational(1, 2), Rational(1, 2), Rational(1, 4), Rational(1, 4), Rational(1, 4),
                        Rational(1, 4)})}) {
        auto K = build_delta_u(u);
        CHECK(verify_shelling(K, lex_facet_order(u)));
    }

    // the nonpure case above really is nonpure
    WeightVector np({Rational(1, 2), Rational(1, 2), Rational(1, 4), Rational(1, 4), Rational(1, 4),
                     Rational(1, 4)});
    auto sizes = [&] {
        std::set<std::size_t> s;
        for (const Face& f : lex_facet_order(np).facets) s.insert(f.size());
        return s;
    }();
    CHECK(sizes == std::set<std::size_t>{2, 3});
}

TEST_CASE("closed-form predictions") {
    CHECK(heavy_light_prediction(2, 3) == SphereWedge{1, 1});
    CHECK(heavy_light_prediction(4, 0) == SphereWedge{2, 0});
    CHECK(heavy_light_prediction(3, 2) == SphereWedge{4, 1});
    CHECK(heavy_light_prediction(6, 2) == SphereWedge{600, 4});
    CHECK_THROWS_AS(heavy_light_prediction(1, 5), std::invalid_argument);
    CHECK_THROWS_AS(heavy_light_prediction(2, 1), std::invalid_argument);

    CHECK(gaps_support(7, 3) == std::set<int>{3, 1});
    CHECK(gaps_support(9, 2) == std::set<int>{5, 4, 3});
    CHECK(gaps_support(8, 5) == std::set<int>{4, 0});
    CHECK(gaps_support(4, 2) == std::set<int>{0});
    CHECK_THROWS_AS(gaps_support(3, 2), std::invalid_argument);
    CHECK_THROWS_AS(gaps_support(6, 1), std::invalid_argument);

    CHECK(rep_dimension(2, 5) == 1);
    CHECK(rep_dimension(4, 3) == 54);
    CHECK(rep_dimension(3, 2) == 4);
    for (int m = 2; m <= 6; ++m)
        for (int k = 0; k <= 5; ++k) {
            long long closed = 1;
            for (int i = 2; i <= m - 2; ++i) closed *= i;
            for (int i = 0; i < k; ++i) closed *= (m - 1);
            CHECK(rep_dimension(m, k) == closed);
        }
    CHECK_THROWS_AS(rep_dimension(1, 3), std::invalid_argument);

    CHECK(disconnected_prediction(3, 2) == SphereWedge{10, 0});
    CHECK(disconnected_prediction(2, 3) == SphereWedge{3, 1});
    CHECK(disconnected_prediction(1, 2) == SphereWedge{1, 0});
    CHECK_THROWS_AS(disconnected_prediction(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(disconnected_prediction(2, 1), std::invalid_argument);
}
