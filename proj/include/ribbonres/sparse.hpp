#pragma once

// Column-major sparse matrices.  Entries are kept sorted by row and nonzero.

#include <algorithm>
#include <vector>

#include "ribbonres/arith.hpp"

namespace ribbonres {

template <class T>
struct SparseMat {
    int nrows = 0, ncols = 0;
    std::vector<std::vector<std::pair<int, T>>> cols;

    SparseMat() = default;
    SparseMat(int nr, int nc) : nrows(nr), ncols(nc), cols(nc) {}

    void add(int r, int c, T v) {
        if (r < 0 || r >= nrows || c < 0 || c >= ncols)
            throw ViolatedInvariant("sparse entry out of range");
        cols[c].push_back({r, std::move(v)});
    }

    // merge duplicate rows, drop zeros, sort
    void normalize() {
        for (auto& col : cols) {
            std::sort(col.begin(), col.end(),
                      [](auto& a, auto& b) { return a.first < b.first; });
            std::vector<std::pair<int, T>> out;
            for (auto& e : col) {
                if (!out.empty() && out.back().first == e.first)
                    out.back().second += e.second;
                else
                    out.push_back(e);
            }
            std::erase_if(out, [](auto& e) { return e.second == 0; });
            col = std::move(out);
        }
    }

    bool is_zero() const {
        for (auto& col : cols)
            if (!col.empty()) return false;
        return true;
    }

    long nnz() const {
        long s = 0;
        for (auto& col : cols) s += static_cast<long>(col.size());
        return s;
    }

    SparseMat transposed() const {
        SparseMat t(ncols, nrows);
        for (int c = 0; c < ncols; ++c)
            for (auto& [r, v] : cols[c]) t.cols[r].push_back({c, v});
        t.normalize();
        return t;
    }

    // this * b
    SparseMat multiplied_by(const SparseMat& b) const {
        if (ncols != b.nrows) throw ViolatedInvariant("sparse product shape mismatch");
        SparseMat out(nrows, b.ncols);
        for (int c = 0; c < b.ncols; ++c) {
            std::vector<T> acc;
            std::vector<int> touched;
            acc.assign(nrows, T(0));
            for (auto& [k, bv] : b.cols[c]) {
                for (auto& [r, av] : cols[k]) {
                    if (acc[r] == 0 && av * bv != 0) touched.push_back(r);
                    acc[r] += av * bv;
                }
            }
            std::sort(touched.begin(), touched.end());
            for (int r : touched)
                if (acc[r] != 0) out.cols[c].push_back({r, acc[r]});
        }
        return out;
    }

    std::vector<T> apply(const std::vector<T>& x) const {
        if (static_cast<int>(x.size()) != ncols)
            throw ViolatedInvariant("sparse apply shape mismatch");
        std::vector<T> y(nrows, T(0));
        for (int c = 0; c < ncols; ++c) {
            if (x[c] == 0) continue;
            for (auto& [r, v] : cols[c]) y[r] += v * x[c];
        }
        return y;
    }

    static SparseMat identity(int n) {
        SparseMat m(n, n);
        for (int i = 0; i < n; ++i) m.cols[i].push_back({i, T(1)});
        return m;
    }
};

using SparseMatrix = SparseMat<Int>;

template <class T>
struct DenseMat {
    int nr = 0, nc = 0;
    std::vector<T> a;

    DenseMat() = default;
    DenseMat(int r, int c, T fill = T(0)) : nr(r), nc(c), a(static_cast<size_t>(r) * c, fill) {}
    T& at(int r, int c) { return a[static_cast<size_t>(r) * nc + c]; }
    const T& at(int r, int c) const { return a[static_cast<size_t>(r) * nc + c]; }
};

}  // namespace ribbonres
