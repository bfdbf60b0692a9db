#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ribbonres/poset.hpp"
#include "ribbonres/schur.hpp"

using namespace ribbonres;

namespace {
const CoefficientRing Q = CoefficientRing::rationals();
const CoefficientRing F2 = CoefficientRing::prime_field(2);
const CoefficientRing Z = CoefficientRing::integers();
}  // namespace

TEST_CASE("order complexes of small rank selections") {
    // three isolated vertices
    auto p1 = rank_selected_boolean(3, {1});
    auto c1 = build_order_complex(p1);
    CHECK(c1.face_count(0) == 3);
    CHECK(c1.face_count(1) == 0);
    auto h1 = homology_ranks(c1, Z);
    CHECK(h1.rank.at(0) == 2);
    CHECK(h1.torsion_free());

    // the hexagon: ranks {1,2} in the three-element Boolean lattice
    auto p2 = rank_selected_boolean(3, {1, 2});
    auto c2 = build_order_complex(p2);
    CHECK(c2.face_count(0) == 6);
    CHECK(c2.face_count(1) == 6);
    auto h2 = homology_ranks(c2, Z);
    CHECK(h2.rank.at(0) == 0);
    CHECK(h2.rank.at(1) == 1);

    // the proper part of the four-element Boolean lattice is a 2-sphere
    auto p3 = rank_selected_boolean(4, {1, 2, 3});
    auto c3 = build_order_complex(p3);
    long euler = 0;
    for (int k = 0; k <= c3.top_dim(); ++k) euler += (k % 2 == 0 ? 1 : -1) * c3.face_count(k);
    CHECK(euler == 2);
    auto h3 = homology_ranks(c3, Z);
    CHECK(h3.rank.at(2) == 1);
    CHECK(h3.rank.at(1) == 0);
    CHECK(h3.rank.at(0) == 0);

    // six middle vertices of the four-element lattice
    auto p4 = rank_selected_boolean(4, {2});
    auto h4 = homology_ranks(build_order_complex(p4), Z);
    CHECK(h4.rank.at(0) == 5);
}

TEST_CASE("boundary of boundary vanishes") {
    auto p = rank_selected_boolean(5, {1, 3, 4});
    auto c = build_order_complex(p);
    for (int k = 1; k <= c.top_dim(); ++k)
        CHECK(c.boundaries[k - 1].multiplied_by(c.boundaries[k]).is_zero());
}

TEST_CASE("field ranks equal rational ranks in the tested cases") {
    auto p = rank_selected_boolean(5, {2, 4});
    auto c = build_order_complex(p);
    auto hq = homology_ranks(c, Q);
    auto h2 = homology_ranks(c, F2);
    for (auto& [k, r] : hq.rank) CHECK(h2.rank.at(k) == r);
}

TEST_CASE("rank selections at composition partial sums") {
    CHECK(verify_solomon(Composition({1, 1, 1})).all_pass());
    CHECK(verify_solomon(Composition({2, 2})).all_pass());
    CHECK(verify_solomon(Composition({1, 2})).all_pass());
    CHECK(verify_solomon(Composition({4})).all_pass());  // empty selection
    CHECK(verify_solomon(Composition({2, 1, 2})).all_pass());

    // the two sides computed independently: homology of the middle-rank
    // selection of the four-element lattice vs the multilinear weight space
    auto h = homology_ranks(build_order_complex(rank_selected_boolean(4, {2})), Z);
    auto specht = realize(Composition({2, 2}), 4, Q)->weight_space_dim({1, 1, 1, 1});
    CHECK(h.rank.at(0) == specht);
    CHECK(specht == 5);

    auto h13 = homology_ranks(build_order_complex(rank_selected_boolean(3, {1})), Z);
    auto specht12 = realize(Composition({1, 2}), 3, Q)->weight_space_dim({1, 1, 1});
    CHECK(h13.rank.at(0) == specht12);
    CHECK(specht12 == 2);
}

TEST_CASE("poset link for small windows") {
    CHECK(verify_tor_poset_link(2, 1, 1, 3).all_pass());
    CHECK(verify_tor_poset_link(2, 2, 1, 3).all_pass());
    CHECK(verify_tor_poset_link(1, 1, 2, 2).all_pass());
    CHECK(verify_tor_poset_link(3, 1, 2, 2).all_pass());
}

TEST_CASE("element cap") {
    auto p = rank_selected_boolean(12, {6});
    CHECK_THROWS_AS(build_order_complex(p, 100), ResourceError);
}
