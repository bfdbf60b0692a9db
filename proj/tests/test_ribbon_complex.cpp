#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ribbonres/ribbon_complex.hpp"

using namespace ribbonres;

namespace {
const CoefficientRing Q = CoefficientRing::rationals();
const CoefficientRing F2 = CoefficientRing::prime_field(2);
}  // namespace

TEST_CASE("one-row blocks are multiplication matrices") {
    PartialBlock b = partial_block(Composition({1}), 1, 2, Q);
    CHECK(b.cols() == 4);   // 2 monomials x 2 tableaux
    CHECK(b.rows() == 3);   // degree-2 monomials
    CHECK(b.rank() == 3);
}

TEST_CASE("degree-zero blocks are injections") {
    PartialBlock b = partial_block(Composition({3, 2}), 0, 2, Q);
    auto src = realize(Composition({3, 2}), 2, Q);
    CHECK(b.cols() == src->dim());
    CHECK(b.rank() == src->dim());
}

TEST_CASE("the square of the restricted map vanishes") {
    CHECK(check_d2_zero(Composition({1, 1}), 0, 2, Q).all_pass());
    CHECK(check_d2_zero(Composition({2, 2, 1}), 2, 2, Q).all_pass());
    CHECK(check_d2_zero(Composition({3, 2}), 1, 3, F2).all_pass());
}

TEST_CASE("fault injection trips the square check") {
    testhooks::flip_first_partial_sign = true;
    Report r = check_d2_zero(Composition({1, 1}), 1, 2, Q);
    testhooks::flip_first_partial_sign = false;
    CHECK(!r.all_pass());
}

TEST_CASE("the unrestricted map is not a differential") {
    Report r = counterexample_unrestricted(2, Q);
    CHECK(r.all_pass());
    // over F2 the symmetric witness degenerates but the repeated-variable
    // witness still has a nonzero square
    Report r2 = counterexample_unrestricted(2, F2);
    CHECK(r2.all_pass());
    CHECK(r2.items[0].computed["characteristic_note"]["symmetric_nonzero"] == false);
    CHECK(counterexample_unrestricted(1, Q).all_pass());
}

TEST_CASE("kernels match the extended ribbon modules") {
    // exterior square inside the tensor square, via the kernel
    CHECK(kernel_image_lemma(Composition({1}), 1, 1, 2, Q).all_pass());
    // the kernel of the (2,1) block in its lowest positive degree
    CHECK(kernel_image_lemma(Composition({2, 1}), 2, 2, 2, Q).all_pass());
    CHECK(realize(Composition({2, 2, 1}), 2, Q)->dim() == 2);
    // q strictly below p
    CHECK(kernel_image_lemma(Composition({2, 1}), 4, 2, 2, Q).all_pass());
}

TEST_CASE("near-concatenation complex for small sequences") {
    // length 2: the split short exact sequence
    CHECK(verify_hg({Composition({1}), Composition({1})}, 2, Q).all_pass());

    // all-ones length 3: term dims 8, 12, 4 and every reduced homology zero
    HGComplex hg = build_hg({Composition({1}), Composition({1}), Composition({1})}, 2, Q);
    REQUIRE(hg.level_dims.size() == 3);
    CHECK(hg.level_dims[0] == 8);
    CHECK(hg.level_dims[1] == 12);
    CHECK(hg.level_dims[2] == 4);
    CHECK(verify_hg({Composition({1}), Composition({1}), Composition({1})}, 2, Q).all_pass());

    CHECK(verify_hg({Composition({2}), Composition({1}), Composition({1})}, 2, Q).all_pass());
    CHECK(realize(Composition({2, 1, 1}), 2, Q)->dim() == 0);

    // a four-block instance
    CHECK(verify_hg({Composition({1}), Composition({2}), Composition({1}), Composition({1})},
                    2, Q)
              .all_pass());
}

TEST_CASE("complex over prime fields") {
    CHECK(verify_hg({Composition({2}), Composition({1, 1})}, 2, F2).all_pass());
    CHECK(check_d2_zero(Composition({1, 2, 1}), 1, 2, F2).all_pass());
}
