#pragma once

// Veronese rings and modules, and finite windows of the minimal free
// resolution assembled from ribbon blocks: the i-th step carries the ribbon
// module of (d^i, r) with generators in degree d*i + r, and the degree-j
// piece of each differential is a partial block.  The augmentation is the
// multiplication onto the module itself.

#include <map>

#include "ribbonres/ribbon_complex.hpp"

namespace ribbonres {

struct VeroneseModule {
    int d = 1, r = 0, n = 1;

    // dim of the degree-j component (dim S^j when j >= r, j == r mod d)
    Int component_dim(int j) const {
        if (j < r || (j - r) % d != 0) return 0;
        return sym_power_dim(j, n);
    }
};

struct ResolutionWindow {
    int d = 1, r = 1, n = 1, i_max = 0, deg_max = 0;
    CoefficientRing ring;
    std::vector<RealizationPtr> steps;  // step i: ribbon of (d^i, r)
    // blocks[{i, j}]: degree-j piece of the i-th differential; i = 0 is the
    // augmentation onto the module
    std::map<std::pair<int, int>, PartialBlock> blocks;

    // dim of the step-i term in internal degree j (0 when the grading
    // forbids the coefficient)
    long term_dim(int i, int j) const;
    bool block_valid(int i, int j) const;
};

ResolutionWindow build_resolution(int d, int r, int n, const CoefficientRing& ring,
                                  int i_max, int deg_max);

// dimension/rank table for cross-ring comparisons
struct WindowTable {
    // (i, j) -> {term dim, rank of the degree-j piece of differential i}
    std::map<std::pair<int, int>, std::pair<long, long>> entries;
    bool operator==(const WindowTable&) const = default;
};

Report verify_exactness(const ResolutionWindow& w, WindowTable* table = nullptr);
Report verify_minimality(const ResolutionWindow& w);

struct BettiEntry {
    int degree = 0;
    long dim = 0;
};

// Betti numbers: generator degree and dimension of the i-th step, checked
// against the tableau count and the determinantal dimension
BettiEntry betti(int d, int r, int n, int i,
                 const CoefficientRing& ring = CoefficientRing::rationals());

}  // namespace ribbonres
