#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ribbonres/derived.hpp"

using namespace ribbonres;

namespace {
const CoefficientRing Q = CoefficientRing::rationals();
const CoefficientRing F2 = CoefficientRing::prime_field(2);
const CoefficientRing F3 = CoefficientRing::prime_field(3);
}  // namespace

TEST_CASE("tensor dimensions for the even-odd pair") {
    DegreeTable t;
    CHECK(tensor_dims(2, 1, 1, 2, Q, 8, &t).all_pass());
    CHECK(t.dims.at(2) == 4);  // 3 + 1
    CHECK(t.dims.at(4) == 5);
    CHECK(t.dims.at(6) == 7);
}

TEST_CASE("tensor with a free factor") {
    DegreeTable t;
    CHECK(tensor_dims(2, 0, 1, 2, Q, 7, &t).all_pass());
    VeroneseModule mp{2, 1, 2};
    for (auto& [j, dim] : t.dims) CHECK(Int(dim) == mp.component_dim(j));
}

TEST_CASE("lex splitting is R-linear") {
    CHECK(splitting_psi(2, 1, 1, 2, 8, SplitKind::lex, Q).all_pass());
    CHECK(splitting_psi(3, 2, 1, 2, 12, SplitKind::lex, Q).all_pass());
    CHECK(splitting_psi(2, 1, 1, 2, 8, SplitKind::lex, F2).all_pass());
}

TEST_CASE("binomial splitting") {
    CHECK(splitting_psi(2, 1, 1, 2, 8, SplitKind::binomial, Q).all_pass());
    CHECK(splitting_psi(2, 1, 1, 3, 8, SplitKind::binomial, Q).all_pass());
    // C(2,1) = 2 is not invertible in characteristic 2
    CHECK_THROWS_AS(splitting_psi(2, 1, 1, 2, 8, SplitKind::binomial, F2), UsageError);
    // C(3,1) = 3 is fine there
    CHECK(splitting_psi(2, 1, 2, 2, 9, SplitKind::binomial, F2).all_pass());
    CHECK_THROWS_AS(splitting_psi(1, 1, 2, 2, 8, SplitKind::binomial, F3), UsageError);
}

TEST_CASE("higher Tor concentration") {
    CHECK(tor(2, 1, 1, 2, Q, 1, 8, true).all_pass());
    CHECK(tor(2, 1, 1, 2, Q, 2, 10, true).all_pass());
    CHECK(tor(1, 1, 1, 2, Q, 1, 5, true).all_pass());
    CHECK(tor(3, 2, 1, 2, Q, 1, 10).all_pass());
    // a free module kills the higher functors
    CHECK(tor(2, 0, 1, 2, Q, 1, 7).all_pass());
}

TEST_CASE("the third Tor of two powers of the irrelevant ideal") {
    // expected dimension = the ribbon module with a five-cell column: zero
    // for fewer than five variables
    for (int n : {2, 3}) {
        DegreeTable t;
        CHECK(tor(1, 2, 3, n, Q, 3, 10, true, &t).all_pass());
        for (auto& [j, dim] : t.dims) CHECK(dim == 0);
    }
}

TEST_CASE("Tor agrees across coefficient rings") {
    DegreeTable tq, t2, t3;
    CHECK(tor(2, 2, 1, 2, Q, 1, 9, false, &tq).all_pass());
    CHECK(tor(2, 2, 1, 2, F2, 1, 9, false, &t2).all_pass());
    CHECK(tor(2, 2, 1, 2, F3, 1, 9, false, &t3).all_pass());
    CHECK(tq == t2);
    CHECK(tq == t3);
}

TEST_CASE("Euler characteristic ties Tor to the tensor table") {
    // sum_i (-1)^i dim(term_i)_j equals sum_i (-1)^i dim Tor_i_j; with
    // concentration this pins the tensor dimension at the bottom degree
    int d = 2, r = 1, rp = 1, n = 2;
    DegreeTable tensor_t;
    CHECK(tensor_dims(d, r, rp, n, Q, 6, &tensor_t).all_pass());
    // dim Tor_1 at degree d+r+rp
    DegreeTable tor_t;
    CHECK(tor(d, r, rp, n, Q, 1, 6, false, &tor_t).all_pass());
    long tor1 = tor_t.dims.at(d + r + rp);
    // term_0 = M tensor S^rp at degree 4: dim S^{4-rp} * dim S^rp restricted
    // to the module grading; at j = 4: dim S^3 * ... checked numerically:
    VeroneseModule m{d, r, n};
    Int term0 = m.component_dim(4 - rp) * sym_power_dim(rp, n);
    Int term1 = m.component_dim(4 - d - rp) * realize(Composition({d, rp}), n, Q)->dim();
    CHECK(Int(tensor_t.dims.at(4)) == term0 - term1 + tor1);
}

TEST_CASE("hom dimensions") {
    DegreeTable t;
    CHECK(hom_dims(2, 3, 1, 2, Q, 6, &t).all_pass());
    CHECK(hom_shift(2, 3, 1) == 0);
    CHECK(t.dims.at(0) == 1);
    CHECK(t.dims.at(2) == 3);
    CHECK(t.dims.at(4) == 5);

    CHECK(hom_dims(3, 2, 2, 2, Q, 6, &t).all_pass());
    CHECK(t.dims.at(0) == 1);  // endomorphisms are the ring

    CHECK(hom_dims(2, 1, 3, 3, Q, 8, &t).all_pass());
    CHECK(hom_shift(2, 1, 3) == 2);

    // univariate case: every dimension on the progression is one
    CHECK(hom_dims(3, 2, 1, 1, Q, 9, &t).all_pass());
    CHECK(hom_dims(2, 4, 1, 1, Q, 7, &t).all_pass());

    // prime fields give the same table
    DegreeTable t2;
    CHECK(hom_dims(2, 3, 1, 2, F2, 6, &t2).all_pass());
    DegreeTable tq;
    CHECK(hom_dims(2, 3, 1, 2, Q, 6, &tq).all_pass());
    CHECK(t2 == tq);
}
