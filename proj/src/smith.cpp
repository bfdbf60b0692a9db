#include <queue>
#include <set>
#include <unordered_map>

#include "ribbonres/linalg.hpp"

namespace ribbonres {

// ---------------------------------------------------------------------------
// dense Smith normal form (used on whatever survives the sparse phase)

namespace {

void dense_snf(DenseMat<Int>& m, std::vector<Int>& divisors) {
    int nr = m.nr, nc = m.nc;
    for (int t = 0; t < std::min(nr, nc); ++t) {
        // locate minimal-magnitude nonzero in the trailing submatrix
        int pr = -1, pc = -1;
        Int best = 0;
        for (int r = t; r < nr; ++r)
            for (int c = t; c < nc; ++c) {
                if (sgn(m.at(r, c)) == 0) continue;
                Int mag = abs(m.at(r, c));
                if (pr < 0 || mag < best) {
                    best = mag;
                    pr = r;
                    pc = c;
                }
            }
        if (pr < 0) return;  // all zero
        for (int c = 0; c < nc; ++c) std::swap(m.at(pr, c), m.at(t, c));
        for (int r = 0; r < nr; ++r) std::swap(m.at(r, pc), m.at(r, t));

        bool clean = false;
        while (!clean) {
            clean = true;
            for (int r = t + 1; r < nr; ++r) {
                if (sgn(m.at(r, t)) == 0) continue;
                Int q = m.at(r, t) / m.at(t, t);  // truncated; remainder handled below
                if (sgn(q) != 0)
                    for (int c = t; c < nc; ++c) m.at(r, c) -= q * m.at(t, c);
                if (sgn(m.at(r, t)) != 0) {
                    // remainder smaller than pivot: swap up and restart
                    for (int c = t; c < nc; ++c) std::swap(m.at(r, c), m.at(t, c));
                    clean = false;
                }
            }
            for (int c = t + 1; c < nc; ++c) {
                if (sgn(m.at(t, c)) == 0) continue;
                Int q = m.at(t, c) / m.at(t, t);
                if (sgn(q) != 0)
                    for (int r = t; r < nr; ++r) m.at(r, c) -= q * m.at(r, t);
                if (sgn(m.at(t, c)) != 0) {
                    for (int r = t; r < nr; ++r) std::swap(m.at(r, c), m.at(r, t));
                    clean = false;
                }
            }
            if (!clean) continue;
            // divisibility fix-up: pivot must divide every remaining entry
            for (int r = t + 1; r < nr && clean; ++r)
                for (int c = t + 1; c < nc && clean; ++c)
                    if (sgn(m.at(r, c) % m.at(t, t)) != 0) {
                        for (int cc = t; cc < nc; ++cc) m.at(t, cc) += m.at(r, cc);
                        clean = false;
                    }
        }
        divisors.push_back(abs(m.at(t, t)));
    }
}

// sparse phase: peel off +-1 pivots with Markowitz-style fill control
struct SparseEliminator {
    int nrows, ncols;
    std::vector<std::unordered_map<int, Int>> cols;
    std::vector<std::set<int>> row_cols;
    std::vector<char> row_live, col_live;
    // heap of (fill score, col, row), lazily revalidated
    using HeapItem = std::tuple<long, int, int>;
    std::priority_queue<HeapItem, std::vector<HeapItem>, std::greater<HeapItem>> heap;
    int unit_pivots = 0;

    explicit SparseEliminator(const SparseMatrix& a)
        : nrows(a.nrows), ncols(a.ncols), cols(a.ncols), row_cols(a.nrows),
          row_live(a.nrows, 1), col_live(a.ncols, 1) {
        for (int c = 0; c < a.ncols; ++c)
            for (auto& [r, v] : a.cols[c]) {
                if (sgn(v) == 0) continue;
                cols[c][r] = v;
                row_cols[r].insert(c);
            }
        for (int c = 0; c < ncols; ++c)
            for (auto& [r, v] : cols[c]) push_candidate(r, c);
    }

    bool is_unit(const Int& v) const { return v == 1 || v == -1; }

    long score(int r, int c) const {
        return (static_cast<long>(row_cols[r].size()) - 1) *
               (static_cast<long>(cols[c].size()) - 1);
    }

    void push_candidate(int r, int c) {
        auto it = cols[c].find(r);
        if (it != cols[c].end() && is_unit(it->second))
            heap.push({score(r, c), c, r});
    }

    void eliminate(int r0, int c0) {
        Int v = cols[c0][r0];  // +-1
        // column ops clear row r0 everywhere else
        auto pivot_col = cols[c0];
        std::vector<int> touched_cols(row_cols[r0].begin(), row_cols[r0].end());
        for (int c : touched_cols) {
            if (c == c0) continue;
            Int f = cols[c][r0] * v;  // cols[c] -= f * pivot_col
            for (auto& [r, pv] : pivot_col) {
                auto it = cols[c].find(r);
                if (it == cols[c].end()) {
                    Int nv = -f * pv;
                    if (sgn(nv) != 0) {
                        cols[c][r] = nv;
                        row_cols[r].insert(c);
                        if (is_unit(nv)) heap.push({score(r, c), c, r});
                    }
                } else {
                    it->second -= f * pv;
                    if (sgn(it->second) == 0) {
                        cols[c].erase(it);
                        row_cols[r].erase(c);
                    } else if (is_unit(it->second)) {
                        heap.push({score(r, c), c, r});
                    }
                }
            }
        }
        // row ops kill the rest of the pivot column (they touch nothing else)
        for (auto& [r, pv] : cols[c0]) row_cols[r].erase(c0);
        cols[c0].clear();
        row_live[r0] = 0;
        col_live[c0] = 0;
        ++unit_pivots;
    }

    void run() {
        while (!heap.empty()) {
            auto [s, c, r] = heap.top();
            heap.pop();
            if (!col_live[c] || !row_live[r]) continue;
            auto it = cols[c].find(r);
            if (it == cols[c].end() || !is_unit(it->second)) continue;
            long now = score(r, c);
            if (now > s) {
                heap.push({now, c, r});
                continue;
            }
            eliminate(r, c);
        }
    }

    // remaining live entries as a dense matrix
    DenseMat<Int> remainder() const {
        std::vector<int> rmap(nrows, -1), cmap(ncols, -1);
        int nr = 0, nc = 0;
        for (int c = 0; c < ncols; ++c)
            if (col_live[c] && !cols[c].empty()) cmap[c] = nc++;
        std::vector<char> rused(nrows, 0);
        for (int c = 0; c < ncols; ++c)
            if (cmap[c] >= 0)
                for (auto& [r, v] : cols[c]) rused[r] = 1;
        for (int r = 0; r < nrows; ++r)
            if (rused[r]) rmap[r] = nr++;
        if (static_cast<long>(nr) * nc > 16'000'000L)
            throw ResourceError("smith_normal_form: dense remainder too large");
        DenseMat<Int> m(nr, nc, Int(0));
        for (int c = 0; c < ncols; ++c)
            if (cmap[c] >= 0)
                for (auto& [r, v] : cols[c]) m.at(rmap[r], cmap[c]) = v;
        return m;
    }
};

}  // namespace

SmithResult smith_normal_form(const SparseMatrix& a) {
    SmithResult out;
    if (a.nrows == 0 || a.ncols == 0) return out;
    SparseEliminator elim(a);
    elim.run();
    std::vector<Int> rest;
    auto m = elim.remainder();
    dense_snf(m, rest);
    out.rank = elim.unit_pivots + static_cast<int>(rest.size());
    out.divisors.assign(static_cast<size_t>(elim.unit_pivots), Int(1));
    // dense part divisors come after the 1's; the chain property is preserved
    std::sort(rest.begin(), rest.end());
    for (auto& d : rest) out.divisors.push_back(d);
    return out;
}

HomologySummary smith_homology(const SparseMatrix& d_in, const SparseMatrix& d_out) {
    if (d_in.nrows != d_out.ncols)
        throw UsageError("smith_homology: middle dimensions disagree");
    if (d_in.ncols > 0 && d_out.nrows > 0) {
        auto prod = d_out.multiplied_by(d_in);
        if (!prod.is_zero())
            throw NotAComplexError("smith_homology: d_out * d_in != 0");
    }
    auto s_in = smith_normal_form(d_in);
    auto s_out = smith_normal_form(d_out);
    HomologySummary h;
    h.betti_rank = d_in.nrows - s_out.rank - s_in.rank;
    h.torsion = s_in.nontrivial();
    return h;
}

}  // namespace ribbonres
