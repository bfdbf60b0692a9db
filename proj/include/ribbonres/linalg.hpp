#pragma once

// Exact linear algebra over Q, F_p, and Z.
//
// Ranks of integer matrices over Q go through fraction-free Bareiss
// elimination; field eliminations are generic over an operations bundle.
// Pivoting is deterministic: among entries of minimal magnitude (Bareiss) or
// the first nonzero (field case), the smallest row then column index wins.
//
// The graded_* entry points exploit multigradings: a multihomogeneous matrix
// splits into independent blocks per column weight, which keeps every
// elimination small even when the assembled matrix is large.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "ribbonres/monomials.hpp"
#include "ribbonres/sparse.hpp"

namespace ribbonres {

// ---------------------------------------------------------------------------
// dense kernels

// Fraction-free elimination, destroys m, returns rank over Q.
int bareiss_rank(DenseMat<Int>& m);

// Generic field elimination -> rank.  Destroys m.
template <class Ops>
int field_rank(DenseMat<typename Ops::Elem>& m, const Ops& ops) {
    int rank = 0;
    for (int c = 0; c < m.nc && rank < m.nr; ++c) {
        int piv = -1;
        for (int r = rank; r < m.nr; ++r)
            if (!ops.is_zero(m.at(r, c))) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != rank)
            for (int j = c; j < m.nc; ++j) std::swap(m.at(piv, j), m.at(rank, j));
        for (int r = rank + 1; r < m.nr; ++r) {
            if (ops.is_zero(m.at(r, c))) continue;
            auto f = ops.div(m.at(r, c), m.at(rank, c));
            m.at(r, c) = ops.zero();
            for (int j = c + 1; j < m.nc; ++j)
                m.at(r, j) = ops.sub(m.at(r, j), ops.mul(f, m.at(rank, j)));
        }
        ++rank;
    }
    return rank;
}

// RREF over a field; returns pivot column list. Destroys m.
template <class Ops>
std::vector<int> field_rref(DenseMat<typename Ops::Elem>& m, const Ops& ops) {
    std::vector<int> pivots;
    int row = 0;
    for (int c = 0; c < m.nc && row < m.nr; ++c) {
        int piv = -1;
        for (int r = row; r < m.nr; ++r)
            if (!ops.is_zero(m.at(r, c))) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != row)
            for (int j = 0; j < m.nc; ++j) std::swap(m.at(piv, j), m.at(row, j));
        auto d = m.at(row, c);
        for (int j = c; j < m.nc; ++j) m.at(row, j) = ops.div(m.at(row, j), d);
        for (int r = 0; r < m.nr; ++r) {
            if (r == row || ops.is_zero(m.at(r, c))) continue;
            auto f = m.at(r, c);
            for (int j = c; j < m.nc; ++j)
                m.at(r, j) = ops.sub(m.at(r, j), ops.mul(f, m.at(row, j)));
        }
        pivots.push_back(c);
        ++row;
    }
    return pivots;
}

// Kernel basis (columns) from RREF. Destroys m.
template <class Ops>
DenseMat<typename Ops::Elem> field_kernel(DenseMat<typename Ops::Elem>& m, const Ops& ops) {
    int nc = m.nc;
    auto pivots = field_rref(m, ops);
    std::vector<int> pivot_of_col(nc, -1);
    for (size_t i = 0; i < pivots.size(); ++i) pivot_of_col[pivots[i]] = static_cast<int>(i);
    std::vector<int> free_cols;
    for (int c = 0; c < nc; ++c)
        if (pivot_of_col[c] < 0) free_cols.push_back(c);
    DenseMat<typename Ops::Elem> ker(nc, static_cast<int>(free_cols.size()), ops.zero());
    for (size_t k = 0; k < free_cols.size(); ++k) {
        int fc = free_cols[k];
        ker.at(fc, static_cast<int>(k)) = ops.one();
        for (size_t i = 0; i < pivots.size(); ++i)
            ker.at(pivots[i], static_cast<int>(k)) = ops.neg(m.at(static_cast<int>(i), fc));
    }
    return ker;
}

// LU solver for a full-column-rank matrix; solve() reports not-in-span
// exactly when v has a component outside the column space.
template <class Ops>
class DenseSolver {
  public:
    using E = typename Ops::Elem;

    DenseSolver(DenseMat<E> m, const Ops& ops) : ops_(ops), m_(std::move(m)) {
        int nr = m_.nr, nc = m_.nc;
        perm_.resize(nr);
        for (int i = 0; i < nr; ++i) perm_[i] = i;
        if (nc > nr) throw ViolatedInvariant("solver: more columns than rows");
        for (int j = 0; j < nc; ++j) {
            int piv = -1;
            for (int r = j; r < nr; ++r)
                if (!ops_.is_zero(m_.at(r, j))) {
                    piv = r;
                    break;
                }
            if (piv < 0) throw ViolatedInvariant("solver: rank-deficient basis");
            if (piv != j) {
                for (int c = 0; c < nc; ++c) std::swap(m_.at(piv, c), m_.at(j, c));
                std::swap(perm_[piv], perm_[j]);
            }
            for (int r = j + 1; r < nr; ++r) {
                if (ops_.is_zero(m_.at(r, j))) continue;
                auto f = ops_.div(m_.at(r, j), m_.at(j, j));
                m_.at(r, j) = f;  // store the multiplier in place
                for (int c = j + 1; c < nc; ++c)
                    m_.at(r, c) = ops_.sub(m_.at(r, c), ops_.mul(f, m_.at(j, c)));
            }
        }
    }

    int rows() const { return m_.nr; }
    int cols() const { return m_.nc; }

    std::optional<std::vector<E>> solve(const std::vector<E>& v) const {
        int nr = m_.nr, nc = m_.nc;
        std::vector<E> w(nr);
        for (int i = 0; i < nr; ++i) w[i] = v[perm_[i]];
        for (int j = 0; j < nc; ++j)
            for (int r = j + 1; r < nr; ++r)
                if (!ops_.is_zero(m_.at(r, j)))
                    w[r] = ops_.sub(w[r], ops_.mul(m_.at(r, j), w[j]));
        for (int r = nc; r < nr; ++r)
            if (!ops_.is_zero(w[r])) return std::nullopt;
        std::vector<E> c(nc);
        for (int j = nc - 1; j >= 0; --j) {
            E s = w[j];
            for (int k = j + 1; k < nc; ++k)
                s = ops_.sub(s, ops_.mul(m_.at(j, k), c[k]));
            c[j] = ops_.div(s, m_.at(j, j));
        }
        return c;
    }

  private:
    Ops ops_;
    DenseMat<E> m_;
    std::vector<int> perm_;
};

// ---------------------------------------------------------------------------
// public API on integer sparse matrices

struct Subspace {
    int ambient_dim = 0;
    SparseMatrix basis;  // columns independent

    int dim() const { return basis.ncols; }
};

struct RankKernelImage {
    int rank = 0;
    Subspace kernel;
    Subspace image;
};

int rank(const SparseMatrix& a, const CoefficientRing& ring);
RankKernelImage rank_kernel_image(const SparseMatrix& a, const CoefficientRing& ring);

// Coordinates of v in the span of the (independent) columns of b, or nullopt.
// For fp rings the rational inputs must have denominators prime to p; the
// returned coordinates are then residue representatives.
std::optional<std::vector<Rat>> solve_in_span(const Subspace& b, const std::vector<Rat>& v,
                                              const CoefficientRing& ring);

Subspace intersect(const Subspace& u, const Subspace& w, const CoefficientRing& ring);

struct SmithResult {
    int rank = 0;
    std::vector<Int> divisors;  // nonzero elementary divisors, divisibility chain

    std::vector<Int> nontrivial() const {
        std::vector<Int> t;
        for (auto& d : divisors)
            if (d != 1) t.push_back(d);
        return t;
    }
    // rank of the matrix over F_p = number of divisors not divisible by p
    int rank_mod(std::uint64_t p) const {
        int r = 0;
        for (auto& d : divisors)
            if (d % static_cast<unsigned long>(p) != 0) ++r;
        return r;
    }
};

SmithResult smith_normal_form(const SparseMatrix& a);

struct HomologySummary {
    int betti_rank = 0;
    std::vector<Int> torsion;
};

// Homology at the middle term of  src --d_in--> mid --d_out--> dst.
HomologySummary smith_homology(const SparseMatrix& d_in, const SparseMatrix& d_out);

// ---------------------------------------------------------------------------
// graded drivers (weights label the multidegree of each row/column)

int graded_rank(const SparseMatrix& a, const std::vector<Weight>& row_w,
                const std::vector<Weight>& col_w, const CoefficientRing& ring);

// Kernel basis, columns scattered back into global coordinates.  Entries are
// integers for q/z (primitive columns) and residue representatives for fp.
SparseMatrix graded_kernel(const SparseMatrix& a, const std::vector<Weight>& row_w,
                           const std::vector<Weight>& col_w, const CoefficientRing& ring);

// helpers shared across modules
DenseMat<Int> densify(const SparseMatrix& a);
DenseMat<Rat> densify_q(const SparseMatrix& a);
SparseMatrix sparsify(const DenseMat<Rat>& m);  // clears denominators per column

}  // namespace ribbonres
