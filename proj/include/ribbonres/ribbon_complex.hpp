#pragma once

// The tensor-degree-lowering differential on graded pieces of the ribbon
// subspace of S (x) T(S): the homogeneous block attached to a composition
// alpha and a degree p maps (monomials of degree p) x (tableaux of the alpha
// ribbon) into (monomials of degree p + alpha_1) x (tableaux of the ribbon
// with the bottom row removed).  Also the cochain complex resolving a
// concatenation of ribbons by near-concatenations, with signed merge maps.

#include <vector>

#include "ribbonres/schur.hpp"

namespace ribbonres {

struct PartialBlock {
    Composition alpha;
    int p = 0;
    int n = 1;
    CoefficientRing ring;
    RealizationPtr source;  // ribbon of alpha
    RealizationPtr target;  // ribbon of alpha with the bottom row removed
    const MonBasis* src_mons = nullptr;  // degree p
    const MonBasis* dst_mons = nullptr;  // degree p + alpha_1
    // column (u, T) -> u * dim(source) + T; row (w, T') -> w * dim(target) + T'
    SparseMatrix matrix;
    std::vector<Weight> row_weights, col_weights;

    long cols() const { return matrix.ncols; }
    long rows() const { return matrix.nrows; }
    int rank() const { return graded_rank(matrix, row_weights, col_weights, ring); }
    SparseMatrix kernel() const {
        return graded_kernel(matrix, row_weights, col_weights, ring);
    }
};

PartialBlock partial_block(const Composition& alpha, int p, int n,
                           const CoefficientRing& ring);

// composes the two blocks leaving alpha and checks the product vanishes
Report check_d2_zero(const Composition& alpha, int p, int n,
                     const CoefficientRing& ring = CoefficientRing::rationals());

// an element outside the ribbon subspace on which the square of the
// degree-lowering map does not vanish
Report counterexample_unrestricted(int n, const CoefficientRing& ring = CoefficientRing::rationals());

// kernel of the alpha block in degree p + |alpha| has the dimension of the
// (p, alpha) ribbon module and equals the image of the (q, alpha) block
Report kernel_image_lemma(const Composition& alpha, int p, int q, int n,
                          const CoefficientRing& ring = CoefficientRing::rationals());

// ---------------------------------------------------------------------------
// the near-concatenation cochain complex

struct HGTerm {
    std::vector<Composition> seq;        // merged composition sequence
    std::vector<RealizationPtr> factors;
    TupleIndexer indexer{std::vector<int>{}};
    long dim = 1;
    long offset = 0;  // column offset within its level

    std::vector<Weight> weights() const;
};

struct HGComplex {
    std::vector<Composition> alphas;
    int n = 1;
    CoefficientRing ring;
    // level i holds one term per i-subset of the merge positions, ordered by
    // the binary value of the subset
    std::vector<std::vector<std::vector<int>>> subsets;  // [level][k] = sorted subset
    std::vector<std::vector<HGTerm>> terms;
    std::vector<long> level_dims;
    std::vector<std::vector<Weight>> level_weights;
    std::vector<SparseMatrix> deltas;  // deltas[i] : level i -> level i+1

    int levels() const { return static_cast<int>(terms.size()); }
};

HGComplex build_hg(const std::vector<Composition>& alphas, int n,
                   const CoefficientRing& ring);

// delta^2 = 0, H^0 = the concatenation module, H^i = 0 for i >= 1, the
// alternating dimension sum, and commutativity of the merge diamonds
Report verify_hg(const std::vector<Composition>& alphas, int n,
                 const CoefficientRing& ring = CoefficientRing::rationals(),
                 bool check_diamonds = true);

namespace testhooks {
// test-only fault injection: flips the sign of the first entry of the next
// constructed partial block, then clears itself
extern bool flip_first_partial_sign;
}  // namespace testhooks

}  // namespace ribbonres
