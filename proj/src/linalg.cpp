#include "ribbonres/linalg.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>

namespace ribbonres {

// ---------------------------------------------------------------------------
// monomial basis cache

namespace {
std::mutex mon_mutex;
std::map<std::pair<int, int>, std::unique_ptr<MonBasis>> mon_cache;
}  // namespace

const MonBasis& mon_basis(int n, int m) {
    std::lock_guard<std::mutex> lock(mon_mutex);
    auto key = std::make_pair(n, m);
    auto it = mon_cache.find(key);
    if (it == mon_cache.end())
        it = mon_cache.emplace(key, std::make_unique<MonBasis>(n, m)).first;
    return *it->second;
}

// ---------------------------------------------------------------------------
// dense helpers

DenseMat<Int> densify(const SparseMatrix& a) {
    DenseMat<Int> m(a.nrows, a.ncols, Int(0));
    for (int c = 0; c < a.ncols; ++c)
        for (auto& [r, v] : a.cols[c]) m.at(r, c) = v;
    return m;
}

DenseMat<Rat> densify_q(const SparseMatrix& a) {
    DenseMat<Rat> m(a.nrows, a.ncols, Rat(0));
    for (int c = 0; c < a.ncols; ++c)
        for (auto& [r, v] : a.cols[c]) m.at(r, c) = Rat(v);
    return m;
}

SparseMatrix sparsify(const DenseMat<Rat>& m) {
    SparseMatrix out(m.nr, m.nc);
    for (int c = 0; c < m.nc; ++c) {
        Int lcm = 1;
        for (int r = 0; r < m.nr; ++r)
            if (sgn(m.at(r, c)) != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
                                              m.at(r, c).get_den().get_mpz_t());
        Int g = 0;
        std::vector<std::pair<int, Int>> col;
        for (int r = 0; r < m.nr; ++r) {
            if (sgn(m.at(r, c)) == 0) continue;
            Rat scaled = m.at(r, c) * Rat(lcm);
            Int z = scaled.get_num();  // denominator is 1 after scaling
            col.push_back({r, z});
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
        }
        if (g > 1)
            for (auto& [r, v] : col) v /= g;
        out.cols[c] = std::move(col);
    }
    return out;
}

// drop all-zero rows; rank is unchanged and Bareiss stays small
static DenseMat<Int> densify_compressed(const SparseMatrix& a) {
    std::vector<int> live(a.nrows, 0);
    for (int c = 0; c < a.ncols; ++c)
        for (auto& [r, v] : a.cols[c]) live[r] = 1;
    std::vector<int> map(a.nrows, -1);
    int nr = 0;
    for (int r = 0; r < a.nrows; ++r)
        if (live[r]) map[r] = nr++;
    DenseMat<Int> m(nr, a.ncols, Int(0));
    for (int c = 0; c < a.ncols; ++c)
        for (auto& [r, v] : a.cols[c]) m.at(map[r], c) = v;
    return m;
}

int bareiss_rank(DenseMat<Int>& m) {
    int nr = m.nr, nc = m.nc;
    int rank = 0;
    Int prev = 1;
    for (int k = 0; k < std::min(nr, nc); ++k) {
        // pivot: minimal magnitude, then smallest row, then smallest column
        int pr = -1, pc = -1;
        Int best = 0;
        for (int r = k; r < nr; ++r)
            for (int c = k; c < nc; ++c) {
                const Int& v = m.at(r, c);
                if (sgn(v) == 0) continue;
                Int mag = abs(v);
                if (pr < 0 || mag < best) {
                    best = mag;
                    pr = r;
                    pc = c;
                    if (best == 1) goto chosen;  // cannot do better
                }
            }
    chosen:
        if (pr < 0) break;
        if (pr != k)
            for (int c = 0; c < nc; ++c) std::swap(m.at(pr, c), m.at(k, c));
        if (pc != k)
            for (int r = 0; r < nr; ++r) std::swap(m.at(r, pc), m.at(r, k));
        const Int piv = m.at(k, k);
        for (int r = k + 1; r < nr; ++r) {
            const Int lead = m.at(r, k);
            bool lead_zero = sgn(lead) == 0;
            for (int c = k + 1; c < nc; ++c) {
                if (lead_zero && sgn(m.at(r, c)) == 0) continue;
                Int t = lead_zero ? Int(m.at(r, c) * piv)
                                  : Int(m.at(r, c) * piv - lead * m.at(k, c));
                if (prev == 1)
                    m.at(r, c) = std::move(t);
                else
                    mpz_divexact(m.at(r, c).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m.at(r, k) = 0;
        }
        prev = piv;
        ++rank;
    }
    return rank;
}

// ---------------------------------------------------------------------------
// rank / kernel / image

static DenseMat<std::uint64_t> densify_fp(const SparseMatrix& a, const FpOps& ops) {
    DenseMat<std::uint64_t> m(a.nrows, a.ncols, 0);
    for (int c = 0; c < a.ncols; ++c)
        for (auto& [r, v] : a.cols[c]) m.at(r, c) = ops.from_int(v);
    return m;
}

int rank(const SparseMatrix& a, const CoefficientRing& ring) {
    if (a.nrows == 0 || a.ncols == 0) return 0;
    if (ring.tag == RingTag::prime_field) {
        FpOps ops(ring.p);
        auto m = densify_fp(a, ops);
        return field_rank(m, ops);
    }
    auto m = densify_compressed(a);
    return bareiss_rank(m);
}

RankKernelImage rank_kernel_image(const SparseMatrix& a, const CoefficientRing& ring) {
    if (!ring.is_field())
        throw FieldRequiredError("rank_kernel_image requires a field; use smith_homology over z");
    RankKernelImage out;
    out.kernel.ambient_dim = a.ncols;
    out.image.ambient_dim = a.nrows;

    std::vector<int> pivots;
    if (ring.tag == RingTag::prime_field) {
        FpOps ops(ring.p);
        auto m = densify_fp(a, ops);
        auto mc = m;
        pivots = field_rref(mc, ops);
        auto ker = field_kernel(m, ops);
        out.kernel.basis = SparseMatrix(a.ncols, ker.nc);
        for (int c = 0; c < ker.nc; ++c)
            for (int r = 0; r < ker.nr; ++r)
                if (ker.at(r, c) != 0) out.kernel.basis.cols[c].push_back({r, Int(ker.at(r, c))});
    } else {
        QOpsV ops;
        auto m = densify_q(a);
        auto mc = m;
        pivots = field_rref(mc, ops);
        auto ker = field_kernel(m, ops);
        out.kernel.basis = sparsify(ker);
    }
    out.rank = static_cast<int>(pivots.size());
    out.image.basis = SparseMatrix(a.nrows, out.rank);
    for (size_t i = 0; i < pivots.size(); ++i) out.image.basis.cols[i] = a.cols[pivots[i]];
    return out;
}

std::optional<std::vector<Rat>> solve_in_span(const Subspace& b, const std::vector<Rat>& v,
                                              const CoefficientRing& ring) {
    if (static_cast<int>(v.size()) != b.ambient_dim)
        throw UsageError("solve_in_span: ambient dimension mismatch");
    if (b.basis.ncols == 0) {
        for (auto& x : v)
            if (sgn(x) != 0) return std::nullopt;
        return std::vector<Rat>{};
    }
    if (ring.tag == RingTag::prime_field) {
        FpOps ops(ring.p);
        auto m = densify_fp(b.basis, ops);
        DenseSolver<FpOps> solver(std::move(m), ops);
        std::vector<std::uint64_t> w(v.size());
        for (size_t i = 0; i < v.size(); ++i) {
            auto num = ops.from_int(v[i].get_num());
            auto den = ops.from_int(v[i].get_den());
            w[i] = ops.div(num, den);
        }
        auto c = solver.solve(w);
        if (!c) return std::nullopt;
        std::vector<Rat> out(c->size());
        for (size_t i = 0; i < c->size(); ++i) out[i] = Rat(static_cast<unsigned long>((*c)[i]));
        return out;
    }
    QOpsV ops;
    DenseSolver<QOpsV> solver(densify_q(b.basis), ops);
    return solver.solve(v);
}

Subspace intersect(const Subspace& u, const Subspace& w, const CoefficientRing& ring) {
    if (!ring.is_field()) throw FieldRequiredError("intersect requires a field");
    if (u.ambient_dim != w.ambient_dim)
        throw UsageError("intersect: ambient dimension mismatch");
    SparseMatrix stacked(u.ambient_dim, u.dim() + w.dim());
    for (int c = 0; c < u.dim(); ++c) stacked.cols[c] = u.basis.cols[c];
    for (int c = 0; c < w.dim(); ++c) stacked.cols[u.dim() + c] = w.basis.cols[c];
    auto rki = rank_kernel_image(stacked, ring);
    // u-part of each kernel vector gives a spanning set of the intersection
    SparseMatrix uc(u.dim(), rki.kernel.dim());
    for (int c = 0; c < rki.kernel.dim(); ++c)
        for (auto& [r, val] : rki.kernel.basis.cols[c])
            if (r < u.dim()) uc.cols[c].push_back({r, val});
    SparseMatrix span = u.basis.multiplied_by(uc);
    auto basis = rank_kernel_image(span, ring).image;
    basis.ambient_dim = u.ambient_dim;
    return basis;
}

// ---------------------------------------------------------------------------
// graded drivers

namespace {

struct Block {
    std::vector<int> cols;   // global column ids
    std::vector<int> rows;   // global row ids (touched)
};

std::map<Weight, Block> split_blocks(const SparseMatrix& a, const std::vector<Weight>& row_w,
                                     const std::vector<Weight>& col_w) {
    if (static_cast<int>(col_w.size()) != a.ncols ||
        static_cast<int>(row_w.size()) != a.nrows)
        throw UsageError("graded driver: weight label size mismatch");
    std::map<Weight, Block> blocks;
    for (int c = 0; c < a.ncols; ++c) blocks[col_w[c]].cols.push_back(c);
    for (auto& [w, blk] : blocks) {
        std::vector<char> seen(a.nrows, 0);
        for (int c : blk.cols)
            for (auto& [r, v] : a.cols[c]) {
                if (row_w[r] != w)
                    throw ViolatedInvariant("graded driver: entry crosses weight blocks");
                if (!seen[r]) {
                    seen[r] = 1;
                    blk.rows.push_back(r);
                }
            }
        std::sort(blk.rows.begin(), blk.rows.end());
    }
    return blocks;
}

}  // namespace

int graded_rank(const SparseMatrix& a, const std::vector<Weight>& row_w,
                const std::vector<Weight>& col_w, const CoefficientRing& ring) {
    auto blocks = split_blocks(a, row_w, col_w);
    int total = 0;
    for (auto& [w, blk] : blocks) {
        std::unordered_map<int, int> rmap;
        for (size_t i = 0; i < blk.rows.size(); ++i) rmap[blk.rows[i]] = static_cast<int>(i);
        if (ring.tag == RingTag::prime_field) {
            FpOps ops(ring.p);
            DenseMat<std::uint64_t> m(static_cast<int>(blk.rows.size()),
                                      static_cast<int>(blk.cols.size()), 0);
            for (size_t j = 0; j < blk.cols.size(); ++j)
                for (auto& [r, v] : a.cols[blk.cols[j]])
                    m.at(rmap[r], static_cast<int>(j)) = ops.from_int(v);
            total += field_rank(m, ops);
        } else {
            DenseMat<Int> m(static_cast<int>(blk.rows.size()),
                            static_cast<int>(blk.cols.size()), Int(0));
            for (size_t j = 0; j < blk.cols.size(); ++j)
                for (auto& [r, v] : a.cols[blk.cols[j]]) m.at(rmap[r], static_cast<int>(j)) = v;
            total += bareiss_rank(m);
        }
    }
    return total;
}

SparseMatrix graded_kernel(const SparseMatrix& a, const std::vector<Weight>& row_w,
                           const std::vector<Weight>& col_w, const CoefficientRing& ring) {
    auto blocks = split_blocks(a, row_w, col_w);
    std::vector<std::vector<std::pair<int, Int>>> out_cols;
    for (auto& [w, blk] : blocks) {
        std::unordered_map<int, int> rmap;
        for (size_t i = 0; i < blk.rows.size(); ++i) rmap[blk.rows[i]] = static_cast<int>(i);
        if (ring.tag == RingTag::prime_field) {
            FpOps ops(ring.p);
            DenseMat<std::uint64_t> m(static_cast<int>(blk.rows.size()),
                                      static_cast<int>(blk.cols.size()), 0);
            for (size_t j = 0; j < blk.cols.size(); ++j)
                for (auto& [r, v] : a.cols[blk.cols[j]])
                    m.at(rmap[r], static_cast<int>(j)) = ops.from_int(v);
            auto ker = field_kernel(m, ops);
            for (int c = 0; c < ker.nc; ++c) {
                std::vector<std::pair<int, Int>> col;
                for (int r = 0; r < ker.nr; ++r)
                    if (ker.at(r, c) != 0)
                        col.push_back({blk.cols[r], Int(ker.at(r, c))});
                std::sort(col.begin(), col.end());
                out_cols.push_back(std::move(col));
            }
        } else {
            QOpsV ops;
            DenseMat<Rat> m(static_cast<int>(blk.rows.size()),
                            static_cast<int>(blk.cols.size()), Rat(0));
            for (size_t j = 0; j < blk.cols.size(); ++j)
                for (auto& [r, v] : a.cols[blk.cols[j]]) m.at(rmap[r], static_cast<int>(j)) = Rat(v);
            auto ker = field_kernel(m, ops);
            auto sk = sparsify(ker);
            for (int c = 0; c < sk.ncols; ++c) {
                std::vector<std::pair<int, Int>> col;
                for (auto& [r, v] : sk.cols[c]) col.push_back({blk.cols[r], v});
                std::sort(col.begin(), col.end());
                out_cols.push_back(std::move(col));
            }
        }
    }
    SparseMatrix out(a.ncols, static_cast<int>(out_cols.size()));
    out.cols = std::move(out_cols);
    return out;
}

}  // namespace ribbonres
