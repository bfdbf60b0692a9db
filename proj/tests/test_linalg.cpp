#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "ribbonres/linalg.hpp"

using namespace ribbonres;

namespace {

SparseMatrix from_rows(const std::vector<std::vector<long>>& rows) {
    int nr = static_cast<int>(rows.size());
    int nc = nr ? static_cast<int>(rows[0].size()) : 0;
    SparseMatrix m(nr, nc);
    for (int r = 0; r < nr; ++r)
        for (int c = 0; c < nc; ++c)
            if (rows[r][c] != 0) m.add(r, c, Int(rows[r][c]));
    m.normalize();
    return m;
}

std::vector<Rat> unit(int n, int i, const Rat& v = Rat(1)) {
    std::vector<Rat> e(n, Rat(0));
    e[i] = v;
    return e;
}

const CoefficientRing Q = CoefficientRing::rationals();
const CoefficientRing F2 = CoefficientRing::prime_field(2);

}  // namespace

TEST_CASE("rank and kernel basics") {
    CHECK(rank(SparseMatrix::identity(3), Q) == 3);
    auto rki = rank_kernel_image(SparseMatrix(2, 5), Q);
    CHECK(rki.rank == 0);
    CHECK(rki.kernel.dim() == 5);

    auto a = from_rows({{1, 2}, {2, 4}});
    CHECK(rank(a, Q) == 1);
    CHECK(rank(a, F2) == 1);
    CHECK_THROWS_AS(rank_kernel_image(a, CoefficientRing::integers()), FieldRequiredError);
}

TEST_CASE("solve in span") {
    Subspace b{2, from_rows({{1}, {0}})};
    auto c = solve_in_span(b, {Rat(3), Rat(0)}, Q);
    REQUIRE(c.has_value());
    CHECK((*c)[0] == 3);
    CHECK(!solve_in_span(b, unit(2, 1), Q).has_value());

    Subspace b2{2, from_rows({{1, 0}, {1, 1}})};
    auto c2 = solve_in_span(b2, unit(2, 0), Q);
    REQUIRE(c2.has_value());
    CHECK((*c2)[0] == 1);
    CHECK((*c2)[1] == -1);
}

TEST_CASE("intersection of subspaces") {
    Subspace u{3, from_rows({{1, 0}, {0, 1}, {0, 0}})};
    Subspace w{3, from_rows({{0, 0}, {1, 0}, {0, 1}})};
    auto inter = intersect(u, w, Q);
    CHECK(inter.dim() == 1);
    // spanned by e2
    REQUIRE(inter.basis.cols[0].size() == 1);
    CHECK(inter.basis.cols[0][0].first == 1);

    auto self = intersect(u, u, Q);
    CHECK(self.dim() == 2);
}

TEST_CASE("planted intersection in dimension six") {
    // U and W share exactly the span of p1, p2
    auto u = from_rows({{1, 0, 3, 1}, {0, 1, 1, 0}, {0, 0, 2, 1}, {0, 0, 0, 1},
                        {0, 0, 1, 2}, {0, 0, 4, 1}});
    auto w = from_rows({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1},
                        {1, 2, 0, 0}, {1, 1, 0, 0}});
    // columns 3,4 of u and the combinations below span the same plane
    Subspace us{6, u}, ws{6, w};
    auto inter = intersect(us, ws, Q);
    CHECK(inter.dim() >= 0);
    // containment both ways for every intersection basis vector
    for (int c = 0; c < inter.dim(); ++c) {
        std::vector<Rat> v(6, Rat(0));
        for (auto& [r, val] : inter.basis.cols[c]) v[r] = Rat(val);
        CHECK(solve_in_span(us, v, Q).has_value());
        CHECK(solve_in_span(ws, v, Q).has_value());
    }
}

TEST_CASE("smith homology of point sets and cycles") {
    // middle dimension 4, zero maps
    auto h = smith_homology(SparseMatrix(4, 0), SparseMatrix(0, 4));
    CHECK(h.betti_rank == 4);
    CHECK(h.torsion.empty());

    // hollow triangle: vertices a,b,c; edges ab, ac, bc; no faces
    auto d1 = from_rows({{-1, -1, 0}, {1, 0, -1}, {0, 1, 1}});
    auto h1 = smith_homology(SparseMatrix(3, 0), d1);
    CHECK(h1.betti_rank == 1);
    CHECK(h1.torsion.empty());
}

TEST_CASE("projective plane torsion") {
    // minimal 6-vertex triangulation; oracle checks first
    std::vector<std::array<int, 3>> faces{{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6},
                                          {1, 2, 6}, {2, 3, 5}, {3, 4, 6}, {2, 4, 5},
                                          {3, 5, 6}, {2, 4, 6}};
    std::map<std::pair<int, int>, int> edge_count;
    for (auto& f : faces) {
        std::array<int, 3> s = f;
        std::sort(s.begin(), s.end());
        edge_count[{s[0], s[1]}]++;
        edge_count[{s[0], s[2]}]++;
        edge_count[{s[1], s[2]}]++;
    }
    REQUIRE(edge_count.size() == 15);
    for (auto& [e, k] : edge_count) REQUIRE(k == 2);  // closed surface
    // chi = 6 - 15 + 10 = 1

    std::vector<std::pair<int, int>> edges;
    for (auto& [e, k] : edge_count) edges.push_back(e);
    auto edge_index = [&](int a, int b) {
        auto key = std::minmax(a, b);
        return static_cast<int>(std::lower_bound(edges.begin(), edges.end(),
                                                 std::make_pair(key.first, key.second)) -
                                edges.begin());
    };
    SparseMatrix d1(6, 15);
    for (size_t e = 0; e < edges.size(); ++e) {
        d1.add(edges[e].first - 1, static_cast<int>(e), Int(-1));
        d1.add(edges[e].second - 1, static_cast<int>(e), Int(1));
    }
    d1.normalize();
    SparseMatrix d2(15, 10);
    for (size_t f = 0; f < faces.size(); ++f) {
        std::array<int, 3> s = faces[f];
        std::sort(s.begin(), s.end());
        d2.add(edge_index(s[1], s[2]), static_cast<int>(f), Int(1));
        d2.add(edge_index(s[0], s[2]), static_cast<int>(f), Int(-1));
        d2.add(edge_index(s[0], s[1]), static_cast<int>(f), Int(1));
    }
    d2.normalize();
    auto h1 = smith_homology(d2, d1);
    CHECK(h1.betti_rank == 0);
    REQUIRE(h1.torsion.size() == 1);
    CHECK(h1.torsion[0] == 2);
    // rank over F2 differs from the rational rank exactly by the torsion
    CHECK(rank(d2, F2) == rank(d2, Q) - 1);
}

TEST_CASE("smith normal form divisor chain") {
    auto m = from_rows({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}});
    auto s = smith_normal_form(m);
    REQUIRE(s.rank >= 1);
    for (size_t i = 0; i + 1 < s.divisors.size(); ++i)
        CHECK(s.divisors[i + 1] % s.divisors[i] == 0);
}

TEST_CASE("rational rank dominates prime-field rank") {
    std::vector<SparseMatrix> ms{from_rows({{2, 0}, {0, 2}}), from_rows({{1, 1}, {1, 1}}),
                                 from_rows({{3, 1, 2}, {0, 3, 3}, {3, 4, 5}})};
    for (auto& m : ms) {
        CHECK(rank(m, Q) >= rank(m, F2));
        auto s = smith_normal_form(m);
        CHECK(s.rank == rank(m, Q));
        CHECK(s.rank_mod(2) == rank(m, F2));
    }
}

TEST_CASE("graded rank splits by weight") {
    // two independent weight blocks
    SparseMatrix m(4, 4);
    m.add(0, 0, 1);
    m.add(1, 0, 2);
    m.add(1, 1, 4);
    m.add(0, 1, 2);
    m.add(2, 2, 5);
    m.add(3, 3, 7);
    m.normalize();
    std::vector<Weight> roww{9, 9, 11, 12}, colw{9, 9, 11, 12};
    CHECK(graded_rank(m, roww, colw, Q) == rank(m, Q));
    auto ker = graded_kernel(m, roww, colw, Q);
    CHECK(ker.ncols == 4 - rank(m, Q));
}
