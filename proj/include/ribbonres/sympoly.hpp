#pragma once

// Truncated symmetric polynomials in n variables over Z, stored as
// coefficient maps on monomial orbits (one key per weakly decreasing
// exponent vector).  Products are orbit convolutions with a degree cap.

#include <map>
#include <string>
#include <vector>

#include "ribbonres/combinatorics.hpp"
#include "ribbonres/monomials.hpp"
#include "ribbonres/report.hpp"

namespace ribbonres {

inline constexpr int kDefaultMaxDeg = 24;

class SymPoly {
  public:
    SymPoly() = default;
    SymPoly(int n, int max_deg) : n_(n), max_deg_(max_deg) {}

    static SymPoly constant(int n, int max_deg, const Int& c) {
        SymPoly f(n, max_deg);
        if (c != 0) f.coeffs_[pack_expo(Expo(n, 0))] = c;
        return f;
    }
    static SymPoly zero(int n, int max_deg) { return SymPoly(n, max_deg); }
    static SymPoly one(int n, int max_deg) { return constant(n, max_deg, 1); }

    int vars() const { return n_; }
    int max_deg() const { return max_deg_; }
    const std::map<Weight, Int>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    // orbit key must be weakly decreasing; enforced on insertion
    void add_orbit(const Expo& partition, const Int& c);

    SymPoly operator+(const SymPoly& o) const;
    SymPoly operator-(const SymPoly& o) const;
    SymPoly operator*(const SymPoly& o) const;
    SymPoly operator-() const;
    bool operator==(const SymPoly& o) const { return n_ == o.n_ && coeffs_ == o.coeffs_; }

    // coefficient of the monomial x^a (any ordering of a)
    Int coeff_at(const Expo& a) const;

    // principal specialization x_1 = ... = x_n = 1
    Int eval_at_ones() const;

    // the degree-d homogeneous component
    SymPoly component(int d) const;

    std::string str() const;

  private:
    int n_ = 1, max_deg_ = kDefaultMaxDeg;
    std::map<Weight, Int> coeffs_;

    friend SymPoly sympoly_product(const SymPoly&, const SymPoly&);
};

SymPoly h_poly(int m, int n, int max_deg = kDefaultMaxDeg);
SymPoly e_poly(int m, int n, int max_deg = kDefaultMaxDeg);

enum class SchurMethod { ssyt_sum, jacobi_trudi };
SymPoly skew_schur(const SkewShape& d, int n, SchurMethod method,
                   int max_deg = kDefaultMaxDeg);

inline SymPoly ribbon_schur(const Composition& alpha, int n, SchurMethod method,
                            int max_deg = kDefaultMaxDeg) {
    return skew_schur(ribbon_shape(alpha), n, method, max_deg);
}

// number of distinct permutations of the exponent vector within n slots
Int orbit_size(const Expo& partition, int n);

// s_D * s_D' = s_{D.D'} + s_{D(+)D'} for skew shapes D, D'
Report verify_product_identity(const SkewShape& d, const SkewShape& dp, int n);

// det[H_ij] for ribbon sequences, where H is built from near-concatenations:
// the determinant must equal the Schur polynomial of the full concatenation
Report hamel_goulden_det(const std::vector<Composition>& alphas, int n);

// generating identity: the degree-(m d + r) component of
// (1 + h_d + h_2d + ...) * sum_i (-1)^i s_{ribbon(d^i, r)} equals h_{m d + r}
Report verify_veronese_series(int d, int r, int n, int max_m);

// the resolution shapes for d=2, r=1 are fixed (up to 180-degree rotation)
// by transposition, so their Schur polynomials are stable under the
// fundamental involution
Report omega_stability_check(int i_max, int n = 2);

}  // namespace ribbonres
