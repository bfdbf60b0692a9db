#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ribbonres/schur.hpp"
#include "ribbonres/sympoly.hpp"

using namespace ribbonres;

namespace {
const CoefficientRing Q = CoefficientRing::rationals();
const CoefficientRing F2 = CoefficientRing::prime_field(2);
const CoefficientRing F3 = CoefficientRing::prime_field(3);
}  // namespace

TEST_CASE("filling image of the exterior square") {
    SkewShape col = ribbon_shape(Composition({1, 1}));
    auto r = realize(col, 2, Q);
    // the generator: 1 on top, 2 on bottom (reading order: bottom, top)
    AmbVec v = filling_image(r->ambient(), col, {2, 1});
    REQUIRE(v.size() == 2);
    CHECK(abs(v[0].second) == 1);
    CHECK(abs(v[1].second) == 1);
    CHECK(v[0].second == -v[1].second);

    // repeated entry in a column vanishes
    CHECK(filling_image(r->ambient(), col, {1, 1}).empty());

    // swapping two entries of one column negates the image
    AmbVec w = filling_image(r->ambient(), col, {1, 2});
    REQUIRE(w.size() == 2);
    for (size_t i = 0; i < 2; ++i) {
        CHECK(w[i].first == v[i].first);
        CHECK(w[i].second == -v[i].second);
    }
}

TEST_CASE("the worked three-row shape maps to eight signed tuples") {
    // rows (3,3,2) bottom-to-top; columns 2, 3, 4 each hold two cells
    SkewShape d({{1, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 3}, {2, 4}, {3, 4}, {3, 5}});
    REQUIRE(d.rows().parts == std::vector<int>{3, 3, 2});
    REQUIRE(d.col_sizes().parts == std::vector<int>{1, 2, 2, 2, 1});
    auto r = realize(d, 8, Q);
    // all-distinct entries: the three two-cell columns antisymmetrize into
    // 2^3 = 8 signed tuples and nothing merges
    AmbVec v = filling_image(r->ambient(), d, {1, 2, 3, 4, 5, 6, 7, 8});
    CHECK(v.size() == 8);
}

TEST_CASE("realization dimensions and universal freeness") {
    CHECK(realize(Composition({1, 1}), 2, Q)->dim() == 1);
    CHECK(realize(Composition({2, 1}), 2, Q)->dim() == 2);
    CHECK(realize(Composition({2, 1}), 3, Q)->dim() == 8);  // 18 - 10

    for (auto& ring : {Q, F2, F3})
        for (auto parts : std::vector<std::vector<int>>{{2, 1}, {1, 1, 2}, {3, 2}}) {
            auto r = realize(Composition(parts), 2, ring);
            CHECK(r->verify_universal_freeness() == r->dim());
        }
}

TEST_CASE("straightening") {
    auto r = realize(Composition({2, 1}), 2, Q);
    // a tableau already in the basis solves to a unit vector
    for (int t = 0; t < r->dim(); ++t) {
        Coords c = straighten(*r, r->ssyt()[t]);
        REQUIRE(c.size() == 1);
        CHECK(c[0].first == t);
        CHECK(c[0].second == 1);
    }
    // non-column-increasing fillings are rejected
    SkewShape col = ribbon_shape(Composition({1, 1}));
    auto rc = realize(col, 2, Q);
    CHECK_THROWS_AS(straighten(*rc, Tableau{col, {1, 2}}), UsageError);

    // a column-increasing non-ssyt filling straightens with integer coords
    SkewShape s = ribbon_shape(Composition({2, 2}));
    auto rs = realize(s, 3, Q);
    Tableau t{s, {2, 1, 1, 3}};  // rows: (2,1) bottom, (1,3) top; col 2 holds 1 over 1?
    if (is_column_increasing(s, t.entries) && !is_ssyt(s, t.entries)) {
        Coords c = straighten(*rs, t);
        CHECK(!c.empty());
    }
}

TEST_CASE("delta injects and m surjects with a zero composite") {
    // the exterior square inside the tensor square
    SparseMatrix dm = map_delta(Composition({1}), Composition({1}), 2, Q);
    CHECK(dm.ncols == 1);
    REQUIRE(dm.cols[0].size() == 2);
    CHECK(abs(dm.cols[0][0].second) == 1);
    CHECK(dm.cols[0][0].second == -dm.cols[0][1].second);

    SparseMatrix mm = map_m(Composition({1}), Composition({1}), 2, Q);
    CHECK(mm.nrows == 3);
    CHECK(rank(mm, Q) == 3);
    CHECK(mm.multiplied_by(dm).is_zero());

    // two-row target: rank of delta equals the concatenation dimension
    auto rcat = realize(Composition({2, 3}), 2, Q);
    SparseMatrix d2 = map_delta(Composition({2}), Composition({3}), 2, Q);
    CHECK(rank(d2, Q) == rcat->dim());
}

TEST_CASE("split exactness counts") {
    Composition a({2, 2}), b({1, 3});
    int n = 2;
    for (auto& ring : {Q, F2, F3}) {
        auto ra = realize(a, n, ring);
        auto rb = realize(b, n, ring);
        SparseMatrix dm = map_delta(a, b, n, ring);
        SparseMatrix mm = map_m(a, b, n, ring);
        auto pw = pair_weights(*ra, *rb);
        long rd = graded_rank(dm, pw, realization_weights(*realize(concat(a, b), n, ring)), ring);
        long rm = graded_rank(mm, realization_weights(*realize(near_concat(a, b), n, ring)), pw,
                              ring);
        CHECK(rd + rm == static_cast<long>(ra->dim()) * rb->dim());
        // m after delta vanishes on every basis vector
        auto prod = mm.multiplied_by(dm);
        if (ring.tag == RingTag::prime_field) {
            bool zero = true;
            for (auto& col : prod.cols)
                for (auto& [r, v] : col)
                    if (v % static_cast<long>(ring.p) != 0) zero = false;
            CHECK(zero);
        } else {
            CHECK(prod.is_zero());
        }
    }
}

TEST_CASE("weight space dimensions against the Schur polynomial") {
    for (auto parts : std::vector<std::vector<int>>{{2, 1}, {1, 1}, {3}, {2, 2}, {1, 2, 1},
                                                    {4, 2}, {2, 2, 2}, {1, 4, 1}}) {
        Composition alpha(parts);
        int n = 3;
        auto r = realize(alpha, n, Q);
        SymPoly s = ribbon_schur(alpha, n, SchurMethod::ssyt_sum);
        const MonBasis& degs = mon_basis(n, alpha.size());
        for (int i = 0; i < degs.dim(); ++i) {
            CHECK(Int(static_cast<long>(r->weight_space_dim(degs.expo(i)))) ==
                  s.coeff_at(degs.expo(i)));
        }
    }
    // one-row and column special cases
    CHECK(realize(Composition({3}), 2, Q)->weight_space_dim({3, 0}) == 1);
    CHECK(realize(Composition({1, 1}), 2, Q)->weight_space_dim({2, 0}) == 0);
    CHECK(realize(Composition({2, 1}), 3, Q)->weight_space_dim({1, 1, 1}) == 2);
}

TEST_CASE("ranks agree over every coefficient ring") {
    for (auto parts : std::vector<std::vector<int>>{{2, 1}, {2, 2}, {1, 1, 1}, {3, 1}}) {
        auto rq = realize(Composition(parts), 2, Q);
        auto r2 = realize(Composition(parts), 2, F2);
        auto r3 = realize(Composition(parts), 2, F3);
        CHECK(rq->verify_universal_freeness() == r2->verify_universal_freeness());
        CHECK(rq->verify_universal_freeness() == r3->verify_universal_freeness());
    }
}

TEST_CASE("intersection proposition") {
    CHECK(verify_intersection(Composition({1}), Composition({1}), Composition({1}), 2).all_pass());
    CHECK(verify_intersection(Composition({1}), Composition({1}), Composition({1}), 3).all_pass());
    CHECK(realize(Composition({1, 1, 1}), 2, Q)->dim() == 0);
    CHECK(realize(Composition({1, 1, 1}), 3, Q)->dim() == 1);
    CHECK(verify_intersection(Composition({2}), Composition({1}), Composition({1}), 2).all_pass());
}
