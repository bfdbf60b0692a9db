#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ribbonres/combinatorics.hpp"

using namespace ribbonres;

namespace {

// the two skew diagrams used in the figures: (3,3,1)/(1) and (4,4,4,2)/(2)
SkewShape figure_d() {
    return SkewShape({{1, 1}, {2, 1}, {2, 2}, {2, 3}, {3, 2}, {3, 3}});
}
SkewShape figure_dp() {
    return SkewShape({{1, 1}, {1, 2}, {2, 1}, {2, 2}, {2, 3}, {2, 4},
                      {3, 1}, {3, 2}, {3, 3}, {3, 4}, {4, 3}, {4, 4}});
}

}  // namespace

TEST_CASE("ribbon shapes") {
    SkewShape s = ribbon_shape(Composition({3, 1, 1, 2, 4}));
    CHECK(s.cell_count() == 11);
    CHECK(s.rows().parts == std::vector<int>{3, 1, 1, 2, 4});
    CHECK(s.row_span(1) == std::pair<int, int>{1, 3});
    CHECK(s.row_span(2) == std::pair<int, int>{3, 3});
    CHECK(s.row_span(3) == std::pair<int, int>{3, 3});
    CHECK(s.row_span(4) == std::pair<int, int>{3, 4});
    CHECK(s.row_span(5) == std::pair<int, int>{4, 7});
    CHECK(s.is_ribbon());

    CHECK(ribbon_shape(Composition({5})).cell_count() == 5);
    CHECK(ribbon_shape(Composition({5})).rows().length() == 1);
    SkewShape col = ribbon_shape(Composition({1, 1}));
    CHECK(col.cell_count() == 2);
    CHECK(col.col_sizes().parts == std::vector<int>{2});

    CHECK_THROWS_AS(ribbon_shape(Composition(std::vector<int>{})), UsageError);
    CHECK_THROWS_AS(Composition({2, 0, 1}), UsageError);
}

TEST_CASE("composition concat and near-concat") {
    Composition a({2, 1, 3}), b({2, 4, 2});
    CHECK(concat(a, b).parts == std::vector<int>{2, 1, 3, 2, 4, 2});
    CHECK(near_concat(a, b).parts == std::vector<int>{2, 1, 5, 4, 2});
    CHECK(near_concat(Composition({1}), Composition({1})).parts == std::vector<int>{2});
}

TEST_CASE("mixed associativity") {
    for (int ta = 1; ta <= 3; ++ta)
        for (int tb = 1; tb <= 3; ++tb)
            for (int tc = 1; tc <= 3; ++tc) {
                Composition a(std::vector<int>(ta, 1)), b({tb}), g({1, tc});
                CHECK(near_concat(concat(a, b), g) == concat(a, near_concat(b, g)));
                CHECK(concat(near_concat(a, b), g) == near_concat(a, concat(b, g)));
            }
}

TEST_CASE("diagram composition agrees with composition operations on ribbons") {
    // every pair of compositions with both totals at most 6
    std::vector<std::vector<int>> comps;
    for (int total = 1; total <= 6; ++total)
        for (int mask = 0; mask < (1 << (total - 1)); ++mask) {
            std::vector<int> parts;
            int run = 1;
            for (int b = 0; b < total - 1; ++b) {
                if (mask & (1 << b)) {
                    parts.push_back(run);
                    run = 1;
                } else
                    ++run;
            }
            parts.push_back(run);
            comps.push_back(parts);
        }
    for (auto& pa : comps)
        for (auto& pb : comps) {
            Composition a(pa), b(pb);
            CHECK(diagram_compose(ribbon_shape(a), ribbon_shape(b), DiagramComposeKind::concat)
                      .normalized() == ribbon_shape(concat(a, b)));
            CHECK(diagram_compose(ribbon_shape(a), ribbon_shape(b),
                                  DiagramComposeKind::near_concat)
                      .normalized() == ribbon_shape(near_concat(a, b)));
        }
}

TEST_CASE("figure diagrams compose with the stated corner alignment") {
    SkewShape d = figure_d(), dp = figure_dp();
    // the left column of D' has three cells and the right column of D two
    CHECK(d.col_sizes().parts.back() == 2);
    CHECK(dp.col_sizes().parts.front() == 3);
    SkewShape sum = diagram_compose(d, dp, DiagramComposeKind::disjoint_sum);
    CHECK(sum.cell_count() == d.cell_count() + dp.cell_count());
    SkewShape cat = diagram_compose(d, dp, DiagramComposeKind::concat);
    CHECK(cat.cell_count() == 18);
    CHECK(cat.is_skew());
    // merged column: two cells of D below the three cells of D'
    CHECK(cat.col_sizes().parts[2] == 5);
    SkewShape near = diagram_compose(d, dp, DiagramComposeKind::near_concat);
    CHECK(near.cell_count() == 18);
    CHECK(near.is_skew());
    // merged row: top row of D (2 cells) extends into the bottom row of D' (2)
    CHECK(near.rows().parts[2] == 4);
}

TEST_CASE("tableau enumeration with the brute-force oracle") {
    SkewShape s = ribbon_shape(Composition({2, 1}));
    auto ssyt = enumerate_tableaux(s, 2, TableauKind::ssyt);
    // oracle: filter all 2^3 fillings
    int count = 0;
    for (int a = 1; a <= 2; ++a)
        for (int b = 1; b <= 2; ++b)
            for (int c = 1; c <= 2; ++c)
                if (is_ssyt(s, {a, b, c})) ++count;
    CHECK(count == 2);
    CHECK(static_cast<int>(ssyt.size()) == count);

    auto col = enumerate_tableaux(ribbon_shape(Composition({1, 1})), 2, TableauKind::ssyt);
    REQUIRE(col.size() == 1);
    // cells in reading order: bottom then top; the top cell holds the 1
    CHECK(col[0].entries == std::vector<int>{2, 1});

    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 3; ++n) {
            auto row = enumerate_tableaux(ribbon_shape(Composition({m})), n, TableauKind::ssyt);
            CHECK(Int(static_cast<long>(row.size())) == sym_power_dim(m, n));
        }
}

TEST_CASE("enumeration is deterministic and ordered by reading word") {
    SkewShape s = ribbon_shape(Composition({2, 2}));
    auto first = enumerate_tableaux(s, 3, TableauKind::ssyt);
    auto second = enumerate_tableaux(s, 3, TableauKind::ssyt);
    CHECK(first == second);
    for (size_t i = 0; i + 1 < first.size(); ++i)
        CHECK(first[i].entries < first[i + 1].entries);

    // content-restricted enumeration agrees with filtering
    std::vector<int> content{2, 1, 1};
    auto restricted = enumerate_tableaux_with_content(s, 3, TableauKind::ssyt, content);
    std::vector<Tableau> filtered;
    for (auto& t : first)
        if (t.content(3) == content) filtered.push_back(t);
    CHECK(restricted == filtered);
}

TEST_CASE("transpose") {
    CHECK(ribbon_shape(Composition({1, 1})).transposed() ==
          ribbon_shape(Composition({2})));
    SkewShape s = ribbon_shape(Composition({3, 1, 1, 2, 4}));
    CHECK(s.transposed().transposed() == s.normalized());
    // the d=2, r=1 resolution shapes are fixed up to half-turn rotation
    for (int i = 0; i <= 3; ++i) {
        std::vector<int> parts(i, 2);
        parts.push_back(1);
        SkewShape shape = ribbon_shape(Composition(parts));
        SkewShape t = shape.transposed();
        CHECK((t == shape.normalized() || t == shape.rotated180()));
    }
}

TEST_CASE("column-increasing versus ssyt fillings") {
    SkewShape s = ribbon_shape(Composition({2, 1}));
    auto ci = enumerate_tableaux(s, 2, TableauKind::column_increasing);
    auto ss = enumerate_tableaux(s, 2, TableauKind::ssyt);
    CHECK(ci.size() >= ss.size());
    for (auto& t : ss) CHECK(is_column_increasing(s, t.entries));
}
