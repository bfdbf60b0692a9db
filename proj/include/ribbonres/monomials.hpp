#pragma once

// Monomial bases of the graded pieces S^m(k^n) and tuple indexing for
// products of such pieces.  Exponent vectors are packed into a uint64 key
// (8 bits per variable, n <= 8, degrees <= 255), which doubles as the
// multidegree label everywhere.

#include <cstdint>
#include <numeric>
#include <unordered_map>
#include <vector>

#include "ribbonres/arith.hpp"

namespace ribbonres {

using Expo = std::vector<int>;  // exponent vector, length n
using Weight = std::uint64_t;   // packed exponent vector

inline Weight pack_expo(const Expo& e) {
    if (e.size() > 8) throw UsageError("at most 8 variables supported");
    Weight w = 0;
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] < 0 || e[i] > 255) throw UsageError("exponent out of range");
        w |= static_cast<Weight>(e[i]) << (8 * i);
    }
    return w;
}

inline Expo unpack_expo(Weight w, int n) {
    Expo e(n);
    for (int i = 0; i < n; ++i) e[i] = static_cast<int>((w >> (8 * i)) & 0xff);
    return e;
}

inline Weight add_weights(Weight a, Weight b) { return a + b; }  // no carries at our degrees

inline int weight_degree(Weight w, int n) {
    int d = 0;
    for (int i = 0; i < n; ++i) d += static_cast<int>((w >> (8 * i)) & 0xff);
    return d;
}

// All monomials of degree m in n variables, ordered lexicographically by
// exponent vector descending (x1^m first).  This matches the reading-word
// order of one-row tableaux.
class MonBasis {
  public:
    MonBasis() = default;
    MonBasis(int n, int m) : n_(n), m_(m) {
        Expo e(n, 0);
        gen(e, 0, m);
        for (size_t i = 0; i < mons_.size(); ++i) index_[pack_expo(mons_[i])] = static_cast<int>(i);
    }

    int vars() const { return n_; }
    int degree() const { return m_; }
    int dim() const { return static_cast<int>(mons_.size()); }
    const Expo& expo(int i) const { return mons_[i]; }
    Weight weight(int i) const { return pack_expo(mons_[i]); }

    int index_of(Weight w) const {
        auto it = index_.find(w);
        if (it == index_.end()) throw ViolatedInvariant("monomial not in basis");
        return it->second;
    }
    int index_of(const Expo& e) const { return index_of(pack_expo(e)); }

  private:
    void gen(Expo& e, int pos, int rem) {
        if (pos == n_ - 1) {
            e[pos] = rem;
            mons_.push_back(e);
            return;
        }
        for (int v = rem; v >= 0; --v) {
            e[pos] = v;
            gen(e, pos + 1, rem - v);
        }
        e[pos] = 0;
    }

    int n_ = 0, m_ = 0;
    std::vector<Expo> mons_;
    std::unordered_map<Weight, int> index_;
};

// Shared per-run cache of MonBasis objects.
const MonBasis& mon_basis(int n, int m);

// Index arithmetic for tensor products of graded pieces: tuples
// (i_1, ..., i_k) with the first factor most significant.
struct TupleIndexer {
    std::vector<int> dims;
    std::vector<long> strides;
    long total = 1;

    explicit TupleIndexer(std::vector<int> d) : dims(std::move(d)) {
        strides.assign(dims.size(), 1);
        for (int i = static_cast<int>(dims.size()) - 2; i >= 0; --i)
            strides[i] = strides[i + 1] * dims[i + 1];
        total = dims.empty() ? 1 : strides[0] * dims[0];
    }
    long index(const std::vector<int>& t) const {
        long ix = 0;
        for (size_t i = 0; i < dims.size(); ++i) ix += strides[i] * t[i];
        return ix;
    }
    std::vector<int> tuple(long ix) const {
        std::vector<int> t(dims.size());
        for (size_t i = 0; i < dims.size(); ++i) {
            t[i] = static_cast<int>(ix / strides[i]);
            ix %= strides[i];
        }
        return t;
    }
};

}  // namespace ribbonres
