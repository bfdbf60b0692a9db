#pragma once

// Rank-selected subposets of the Boolean lattice, their order complexes, and
// integral simplicial homology.  Elements are bitmasks; chains are
// enumerated by DFS; one Smith normal form per boundary matrix serves every
// coefficient ring at once.

#include <cstdint>
#include <map>

#include "ribbonres/combinatorics.hpp"
#include "ribbonres/linalg.hpp"
#include "ribbonres/report.hpp"

namespace ribbonres {

struct RankSelectedPoset {
    int m = 0;
    std::vector<int> ranks;            // selected ranks, ascending
    std::vector<std::uint32_t> elems;  // subsets, ordered by (rank, mask)

    int size() const { return static_cast<int>(elems.size()); }
};

RankSelectedPoset rank_selected_boolean(int m, std::vector<int> ranks);

struct OrderComplexChainComplex {
    // faces[k]: k-simplices = chains of k+1 poset elements (indices into the
    // poset's element list, increasing)
    std::vector<std::vector<std::vector<int>>> faces;
    // boundaries[k]: C_k -> C_{k-1}; index 0 is the augmentation onto the
    // empty face, so all homology below is reduced
    std::vector<SparseMatrix> boundaries;

    int top_dim() const { return static_cast<int>(faces.size()) - 1; }
    long face_count(int k) const {
        if (k < 0 || k > top_dim()) return k == -1 ? 1 : 0;
        return static_cast<long>(faces[k].size());
    }
};

OrderComplexChainComplex build_order_complex(const RankSelectedPoset& p,
                                             long element_cap = 2500);

struct ReducedHomology {
    std::map<int, long> rank;               // dimension -> reduced Betti number
    std::map<int, std::vector<Int>> torsion;  // dimension -> elementary divisors != 1

    bool concentrated_in(int dim) const {
        for (auto& [k, r] : rank)
            if (r != 0 && k != dim) return false;
        return true;
    }
    bool torsion_free() const {
        for (auto& [k, t] : torsion)
            if (!t.empty()) return false;
        return true;
    }
};

ReducedHomology homology_ranks(const OrderComplexChainComplex& c,
                               const CoefficientRing& ring);

// rank-selection at the partial sums of alpha: reduced homology concentrated
// in dimension len(alpha) - 2 with the dimension of the multilinear weight
// space of the ribbon module, torsion-free
Report verify_solomon(const Composition& alpha);

// squarefree multidegrees match the rank-selected poset homology; general
// multidegrees match the Schur polynomial coefficients
Report verify_tor_poset_link(int d, int r, int i, int n_general);

}  // namespace ribbonres
