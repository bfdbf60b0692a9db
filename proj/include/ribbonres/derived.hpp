#pragma once

// Tensor products, Tor, and Hom between Veronese modules, one internal
// degree at a time.  The tensor quotient is computed by identification
// chasing (every relation equates two monomial pairs up to moving a ring
// monomial across the tensor sign); Tor comes from tensoring the ribbon
// resolution; Hom from the presentation.

#include <map>

#include "ribbonres/veronese.hpp"

namespace ribbonres {

struct DegreeTable {
    std::map<int, long> dims;
    bool operator==(const DegreeTable&) const = default;
};

// dims of M (x)_R M' per internal degree up to deg_max, verified against the
// splitting prediction; kernel annihilation by positive-degree ring elements
// is checked on a kernel basis
Report tensor_dims(int d, int r, int rp, int n, const CoefficientRing& ring,
                   int deg_max, DegreeTable* out = nullptr);

enum class SplitKind { lex, binomial };

// phi . psi = id and R-linearity for the chosen section of the
// multiplication map; the binomial section additionally commutes with
// coordinate permutations and preserves multidegrees
Report splitting_psi(int d, int r, int rp, int n, int deg_max, SplitKind kind,
                     const CoefficientRing& ring);

// Tor_i per internal degree; optionally per multidegree against the Schur
// polynomial coefficients
Report tor(int d, int r, int rp, int n, const CoefficientRing& ring, int i,
           int deg_max, bool multigraded = false, DegreeTable* out = nullptr);

// dims of Hom_R(M, M') per Hom-degree t up to t_max
Report hom_dims(int d, int r, int rp, int n, const CoefficientRing& ring, int t_max,
                DegreeTable* out = nullptr);

// the degree shift at which Hom lives: r'-r when r <= r', otherwise the
// representative of r'-r in [0, d)
int hom_shift(int d, int r, int rp);

}  // namespace ribbonres
