#pragma once

// Explicit Schur module realizations: the module attached to a diagram D is
// realized inside the tensor product of symmetric powers indexed by the rows
// of D, as the span of images of column-antisymmetrized, row-symmetrized
// fillings.  Column-strict tableaux give a basis over every coefficient
// ring; all maps are expressed in these bases by exact linear solves.
//
// Every vector in play is multihomogeneous, so each realization is factored
// into content blocks (one LU solver per content, built lazily); this keeps
// the linear algebra small even for large shapes.

#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>

#include "ribbonres/combinatorics.hpp"
#include "ribbonres/linalg.hpp"
#include "ribbonres/monomials.hpp"
#include "ribbonres/report.hpp"
#include "ribbonres/sparse.hpp"

namespace ribbonres {

// sparse ambient vector: (tuple index, coefficient), sorted by index
using AmbVec = std::vector<std::pair<long, Int>>;

struct AmbientRowSpace {
    int n = 1;
    Composition row_comp;  // bottom-to-top row sizes; may be empty
    std::vector<const MonBasis*> bases;
    TupleIndexer indexer{std::vector<int>{}};
    long dim = 1;

    AmbientRowSpace() = default;
    AmbientRowSpace(const Composition& rows, int n);

    Weight weight_of(long index) const;
};

// Image of an arbitrary filling (entries aligned with d.cells()); zero when
// some column repeats an entry.  Multilinear and alternating in columns.
AmbVec filling_image(const AmbientRowSpace& amb, const SkewShape& d,
                     const std::vector<int>& entries);

// coordinates in the tableau basis: (global tableau index, coefficient)
using Coords = std::vector<std::pair<int, Int>>;

class SchurRealization {
  public:
    SchurRealization(const SkewShape& shape, int n, const CoefficientRing& ring);

    const SkewShape& shape() const { return shape_; }
    int vars() const { return n_; }
    const CoefficientRing& ring() const { return ring_; }
    const AmbientRowSpace& ambient() const { return amb_; }
    const std::vector<Tableau>& ssyt() const { return ssyt_; }
    int dim() const { return static_cast<int>(ssyt_.size()); }
    const AmbVec& image(int tableau_index) const { return images_[tableau_index]; }
    Weight content_of(int tableau_index) const { return contents_[tableau_index]; }

    // Solve an ambient vector (necessarily multihomogeneous) in the tableau
    // basis; nullopt when it lies outside the module.
    std::optional<Coords> try_solve(const AmbVec& v) const;
    Coords solve(const AmbVec& v, const char* context) const;

    int weight_space_dim(const Expo& a) const;

    // touches every content block; throws ViolatedInvariant on any rank
    // deficiency, otherwise returns dim()
    int verify_universal_freeness() const;

    SparseMatrix basis_matrix() const;  // ambient dim x dim, canonical order

  private:
    struct Block {
        std::vector<int> cols;             // global tableau indices
        std::vector<long> rows;            // global ambient indices, sorted
        std::unordered_map<long, int> row_of;
        std::unique_ptr<DenseSolver<QOpsV>> solver_q;
        std::unique_ptr<DenseSolver<FpOps>> solver_fp;
    };

    const Block& block_for(Weight content) const;

    SkewShape shape_;
    int n_;
    CoefficientRing ring_;
    AmbientRowSpace amb_;
    std::vector<Tableau> ssyt_;
    std::vector<AmbVec> images_;
    std::vector<Weight> contents_;
    std::unordered_map<Weight, std::vector<int>> by_content_;
    mutable std::mutex mutex_;
    mutable std::unordered_map<Weight, std::unique_ptr<Block>> blocks_;
};

using RealizationPtr = std::shared_ptr<const SchurRealization>;

// process-wide cache keyed by (normalized shape, n, ring)
RealizationPtr realize(const SkewShape& shape, int n, const CoefficientRing& ring);
RealizationPtr realize(const Composition& alpha, int n, const CoefficientRing& ring);

// straightening: coordinates of a column-increasing filling in the basis
Coords straighten(const SchurRealization& r, const Tableau& t);

// The injection of the concatenation module into the tensor product of the
// two factor modules, in tableau bases.  Rows are indexed by pairs
// (a, b) -> a * dim(B) + b.
SparseMatrix map_delta(const Composition& alpha, const Composition& beta, int n,
                       const CoefficientRing& ring);

// The surjection of the tensor product onto the near-concatenation module
// (multiply the top row of the first factor into the bottom row of the
// second).  Columns are indexed by pairs as in map_delta.
SparseMatrix map_m(const Composition& alpha, const Composition& beta, int n,
                   const CoefficientRing& ring);

// column/row weights of the pair basis of A (x) B, for graded elimination
std::vector<Weight> pair_weights(const SchurRealization& a, const SchurRealization& b);
std::vector<Weight> realization_weights(const SchurRealization& a);

// dim((S^{a.b} (x) S^c) meet (S^a (x) S^{b.c})) == dim S^{a.b.c}, plus the
// containment of the image of S^{a.b.c} in that intersection
Report verify_intersection(const Composition& alpha, const Composition& beta,
                           const Composition& gamma, int n,
                           const CoefficientRing& ring = CoefficientRing::rationals());

}  // namespace ribbonres
