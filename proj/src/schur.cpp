#include "ribbonres/schur.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "ribbonres/sympoly.hpp"

namespace ribbonres {

AmbientRowSpace::AmbientRowSpace(const Composition& rows, int n_) {
    n = n_;
    row_comp = rows;
    std::vector<int> dims;
    for (int m : rows.parts) {
        bases.push_back(&mon_basis(n, m));
        dims.push_back(bases.back()->dim());
    }
    indexer = TupleIndexer(dims);
    dim = indexer.total;
}

Weight AmbientRowSpace::weight_of(long index) const {
    auto t = indexer.tuple(index);
    Weight w = 0;
    for (size_t i = 0; i < t.size(); ++i) w = add_weights(w, bases[i]->weight(t[i]));
    return w;
}

AmbVec filling_image(const AmbientRowSpace& amb, const SkewShape& d,
                     const std::vector<int>& entries) {
    const auto& cells = d.cells();
    if (entries.size() != cells.size())
        throw UsageError("filling_image: entry count mismatch");
    for (int e : entries)
        if (e < 1 || e > amb.n) throw UsageError("filling_image: entry outside alphabet");
    if (cells.empty()) return {{0, Int(1)}};

    int min_row = d.min_row();
    // row (0-based factor id) of each cell
    std::vector<int> row_of(cells.size());
    for (size_t i = 0; i < cells.size(); ++i) row_of[i] = cells[i].row - min_row;

    // columns as cell-index lists, top-to-bottom
    std::map<int, std::vector<int>> col_cells;
    for (size_t i = 0; i < cells.size(); ++i) col_cells[cells[i].col].push_back(static_cast<int>(i));
    std::vector<std::vector<int>> columns;
    for (auto& [c, v] : col_cells) {
        std::sort(v.begin(), v.end(),
                  [&](int a, int b) { return cells[a].row > cells[b].row; });
        // alternation: a repeated entry in a column kills the image
        for (size_t i = 0; i < v.size(); ++i)
            for (size_t j = i + 1; j < v.size(); ++j)
                if (entries[v[i]] == entries[v[j]]) return {};
        columns.push_back(v);
    }

    int ell = amb.row_comp.length();
    std::unordered_map<long, Int> acc;
    // current value assigned to each cell
    std::vector<int> assigned(entries);

    std::vector<int> tuple(ell);
    std::vector<Expo> row_expo(ell);

    std::function<void(size_t, int)> recurse = [&](size_t ci, int sign) {
        if (ci == columns.size()) {
            for (int rr = 0; rr < ell; ++rr) row_expo[rr].assign(amb.n, 0);
            for (size_t i = 0; i < cells.size(); ++i) row_expo[row_of[i]][assigned[i] - 1]++;
            for (int rr = 0; rr < ell; ++rr) tuple[rr] = amb.bases[rr]->index_of(row_expo[rr]);
            acc[amb.indexer.index(tuple)] += sign;
            return;
        }
        const auto& colv = columns[ci];
        size_t k = colv.size();
        std::vector<int> perm(k);
        for (size_t i = 0; i < k; ++i) perm[i] = static_cast<int>(i);
        std::vector<int> saved(k);
        for (size_t i = 0; i < k; ++i) saved[i] = assigned[colv[i]];
        do {
            int inv = 0;
            for (size_t i = 0; i < k; ++i)
                for (size_t j = i + 1; j < k; ++j)
                    if (perm[i] > perm[j]) ++inv;
            for (size_t i = 0; i < k; ++i) assigned[colv[i]] = saved[perm[i]];
            recurse(ci + 1, (inv % 2 == 0) ? sign : -sign);
        } while (std::next_permutation(perm.begin(), perm.end()));
        for (size_t i = 0; i < k; ++i) assigned[colv[i]] = saved[i];
    };
    recurse(0, 1);

    AmbVec out;
    for (auto& [ix, c] : acc)
        if (c != 0) out.push_back({ix, c});
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// SchurRealization

SchurRealization::SchurRealization(const SkewShape& shape, int n, const CoefficientRing& ring)
    : shape_(shape.normalized()), n_(n), ring_(ring) {
    if (n < 1) throw UsageError("realize: need n >= 1");
    Composition rows = shape_.empty() ? Composition(std::vector<int>{}) : shape_.rows();
    amb_ = AmbientRowSpace(rows, n);
    ssyt_ = enumerate_tableaux(shape_, n, TableauKind::ssyt);
    if (shape_.empty()) {
        images_ = {AmbVec{{0, Int(1)}}};
        contents_ = {0};
        by_content_[0] = {0};
        return;
    }
    images_.reserve(ssyt_.size());
    contents_.reserve(ssyt_.size());
    for (size_t i = 0; i < ssyt_.size(); ++i) {
        images_.push_back(filling_image(amb_, shape_, ssyt_[i].entries));
        if (images_.back().empty())
            throw ViolatedInvariant("violated-freeness: tableau image vanished");
        contents_.push_back(pack_expo(ssyt_[i].content(n)));
        by_content_[contents_.back()].push_back(static_cast<int>(i));
    }
}

const SchurRealization::Block& SchurRealization::block_for(Weight content) const {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = blocks_.find(content);
    if (it != blocks_.end()) return *it->second;

    auto blk = std::make_unique<Block>();
    auto cit = by_content_.find(content);
    if (cit != by_content_.end()) blk->cols = cit->second;
    std::vector<char> dummy;
    for (int col : blk->cols)
        for (auto& [ix, v] : images_[col]) {
            if (!blk->row_of.count(ix)) {
                blk->row_of[ix] = 0;  // provisional
                blk->rows.push_back(ix);
            }
        }
    std::sort(blk->rows.begin(), blk->rows.end());
    for (size_t i = 0; i < blk->rows.size(); ++i) blk->row_of[blk->rows[i]] = static_cast<int>(i);

    if (!blk->cols.empty()) {
        int nr = static_cast<int>(blk->rows.size());
        int nc = static_cast<int>(blk->cols.size());
        if (nr < nc)
            throw ViolatedInvariant("violated-freeness: more tableaux than support rows");
        if (ring_.tag == RingTag::prime_field) {
            FpOps ops(ring_.p);
            DenseMat<std::uint64_t> m(nr, nc, 0);
            for (int c = 0; c < nc; ++c)
                for (auto& [ix, v] : images_[blk->cols[c]])
                    m.at(blk->row_of[ix], c) = ops.from_int(v);
            blk->solver_fp = std::make_unique<DenseSolver<FpOps>>(std::move(m), ops);
        } else {
            QOpsV ops;
            DenseMat<Rat> m(nr, nc, Rat(0));
            for (int c = 0; c < nc; ++c)
                for (auto& [ix, v] : images_[blk->cols[c]]) m.at(blk->row_of[ix], c) = Rat(v);
            blk->solver_q = std::make_unique<DenseSolver<QOpsV>>(std::move(m), ops);
        }
    }
    auto& ref = *blk;
    blocks_[content] = std::move(blk);
    return ref;
}

std::optional<Coords> SchurRealization::try_solve(const AmbVec& v) const {
    if (v.empty()) return Coords{};
    Weight w = amb_.weight_of(v.front().first);
    const Block& blk = block_for(w);
    if (blk.cols.empty()) return std::nullopt;  // nonzero vector, empty block
    std::vector<Rat> rhs_q;
    std::vector<std::uint64_t> rhs_fp;
    bool fp = ring_.tag == RingTag::prime_field;
    if (fp)
        rhs_fp.assign(blk.rows.size(), 0);
    else
        rhs_q.assign(blk.rows.size(), Rat(0));
    FpOps fops(fp ? ring_.p : 2);
    for (auto& [ix, c] : v) {
        auto it = blk.row_of.find(ix);
        if (it == blk.row_of.end()) {
            if (fp ? (fops.from_int(c) != 0) : (sgn(c) != 0)) return std::nullopt;
            continue;
        }
        if (fp)
            rhs_fp[it->second] = fops.from_int(c);
        else
            rhs_q[it->second] = Rat(c);
    }
    Coords out;
    if (fp) {
        auto sol = blk.solver_fp->solve(rhs_fp);
        if (!sol) return std::nullopt;
        for (size_t i = 0; i < sol->size(); ++i)
            if ((*sol)[i] != 0) out.push_back({blk.cols[i], Int(static_cast<unsigned long>((*sol)[i]))});
    } else {
        auto sol = blk.solver_q->solve(rhs_q);
        if (!sol) return std::nullopt;
        for (size_t i = 0; i < sol->size(); ++i) {
            if (sgn((*sol)[i]) == 0) continue;
            if ((*sol)[i].get_den() != 1)
                throw ViolatedInvariant(
                    "universal freeness violated: non-integral straightening coefficient");
            out.push_back({blk.cols[i], (*sol)[i].get_num()});
        }
    }
    return out;
}

Coords SchurRealization::solve(const AmbVec& v, const char* context) const {
    auto c = try_solve(v);
    if (!c) throw ViolatedInvariant(std::string("violated-subspace: ") + context);
    return *c;
}

int SchurRealization::weight_space_dim(const Expo& a) const {
    if (static_cast<int>(a.size()) != n_)
        throw UsageError("weight_space_dim: multidegree length mismatch");
    int total = 0;
    for (int x : a) total += x;
    if (total != shape_.cell_count())
        throw UsageError("weight_space_dim: multidegree has wrong total degree");
    Weight w = pack_expo(a);
    const Block& blk = block_for(w);  // construction verifies independence
    return static_cast<int>(blk.cols.size());
}

int SchurRealization::verify_universal_freeness() const {
    std::vector<Weight> contents;
    {
        std::lock_guard<std::mutex> lock(mutex_);
        for (auto& [w, ids] : by_content_) contents.push_back(w);
    }
    for (Weight w : contents) block_for(w);
    return dim();
}

SparseMatrix SchurRealization::basis_matrix() const {
    if (amb_.dim > INT32_MAX) throw ResourceError("ambient too large to materialize");
    SparseMatrix m(static_cast<int>(amb_.dim), dim());
    for (int c = 0; c < dim(); ++c)
        for (auto& [ix, v] : images_[c]) m.cols[c].push_back({static_cast<int>(ix), v});
    return m;
}

// ---------------------------------------------------------------------------
// realization cache

namespace {

std::string realization_key(const SkewShape& shape, int n, const CoefficientRing& ring) {
    SkewShape nm = shape.normalized();
    std::ostringstream os;
    for (auto& c : nm.cells()) os << c.row << ',' << c.col << ';';
    os << '|' << n << '|' << ring.str();
    return os.str();
}

std::mutex cache_mutex;
std::unordered_map<std::string, RealizationPtr> cache;

}  // namespace

RealizationPtr realize(const SkewShape& shape, int n, const CoefficientRing& ring) {
    std::string key = realization_key(shape, n, ring);
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    auto r = std::make_shared<const SchurRealization>(shape, n, ring);
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto [it, inserted] = cache.emplace(key, std::move(r));
    return it->second;
}

RealizationPtr realize(const Composition& alpha, int n, const CoefficientRing& ring) {
    return realize(ribbon_shape(alpha), n, ring);
}

Coords straighten(const SchurRealization& r, const Tableau& t) {
    if (!is_column_increasing(t.shape, t.entries))
        throw UsageError("straighten: filling is not column-increasing");
    AmbVec v = filling_image(r.ambient(), r.shape(), t.entries);
    auto c = r.try_solve(v);
    if (!c) throw ViolatedInvariant("violated-spanning: column-increasing image outside basis span");
    return *c;
}

// ---------------------------------------------------------------------------
// Delta and m

SparseMatrix map_delta(const Composition& alpha, const Composition& beta, int n,
                       const CoefficientRing& ring) {
    auto ra = realize(alpha, n, ring);
    auto rb = realize(beta, n, ring);
    auto rc = realize(concat(alpha, beta), n, ring);
    long dim_b_amb = rb->ambient().dim;
    SparseMatrix out(ra->dim() * rb->dim(), rc->dim());

    for (int u = 0; u < rc->dim(); ++u) {
        // split the concatenation ambient (first factors = alpha's rows)
        std::unordered_map<long, AmbVec> per_b;  // b ambient index -> alpha-part vector
        for (auto& [ix, v] : rc->image(u)) {
            long ia = ix / dim_b_amb, ib = ix % dim_b_amb;
            per_b[ib].push_back({ia, v});
        }
        // stage 1: express the alpha part in A's tableau basis
        std::map<int, std::unordered_map<long, Int>> rows_a;  // a-tab -> (b index -> coeff)
        for (auto& [ib, vec] : per_b) {
            auto va = vec;
            std::sort(va.begin(), va.end());
            for (auto& [a, coeff] : ra->solve(va, "map_delta stage 1")) rows_a[a][ib] += coeff;
        }
        // stage 2: express each residual b-vector in B's basis
        for (auto& [a, bvecmap] : rows_a) {
            AmbVec vb;
            for (auto& [ib, c] : bvecmap)
                if (c != 0) vb.push_back({ib, c});
            if (vb.empty()) continue;
            std::sort(vb.begin(), vb.end());
            for (auto& [b, coeff] : rb->solve(vb, "map_delta stage 2"))
                out.cols[u].push_back({a * rb->dim() + b, coeff});
        }
        std::sort(out.cols[u].begin(), out.cols[u].end());
    }
    return out;
}

SparseMatrix map_m(const Composition& alpha, const Composition& beta, int n,
                   const CoefficientRing& ring) {
    auto ra = realize(alpha, n, ring);
    auto rb = realize(beta, n, ring);
    auto rt = realize(near_concat(alpha, beta), n, ring);
    const auto& amb_a = ra->ambient();
    const auto& amb_b = rb->ambient();
    const auto& amb_t = rt->ambient();
    int la = alpha.length();
    int lb = beta.length();

    SparseMatrix out(rt->dim(), ra->dim() * rb->dim());
    for (int a = 0; a < ra->dim(); ++a)
        for (int b = 0; b < rb->dim(); ++b) {
            std::unordered_map<long, Int> acc;
            for (auto& [ixa, va] : ra->image(a))
                for (auto& [ixb, vb] : rb->image(b)) {
                    auto ta = amb_a.indexer.tuple(ixa);
                    auto tb = amb_b.indexer.tuple(ixb);
                    // multiply alpha's top row into beta's bottom row
                    Expo merged = amb_a.bases[la - 1]->expo(ta[la - 1]);
                    const Expo& eb = amb_b.bases[0]->expo(tb[0]);
                    for (int i = 0; i < n; ++i) merged[i] += eb[i];
                    std::vector<int> tt(la + lb - 1);
                    for (int i = 0; i < la - 1; ++i) tt[i] = ta[i];
                    tt[la - 1] = amb_t.bases[la - 1]->index_of(merged);
                    for (int i = 1; i < lb; ++i) tt[la - 1 + i] = tb[i];
                    acc[amb_t.indexer.index(tt)] += va * vb;
                }
            AmbVec v;
            for (auto& [ix, c] : acc)
                if (c != 0) v.push_back({ix, c});
            std::sort(v.begin(), v.end());
            if (v.empty()) continue;
            for (auto& [t, coeff] : rt->solve(v, "map_m image"))
                out.cols[a * rb->dim() + b].push_back({t, coeff});
            std::sort(out.cols[a * rb->dim() + b].begin(), out.cols[a * rb->dim() + b].end());
        }
    return out;
}

std::vector<Weight> realization_weights(const SchurRealization& a) {
    std::vector<Weight> w(a.dim());
    for (int i = 0; i < a.dim(); ++i) w[i] = a.content_of(i);
    return w;
}

std::vector<Weight> pair_weights(const SchurRealization& a, const SchurRealization& b) {
    std::vector<Weight> w(static_cast<size_t>(a.dim()) * b.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < b.dim(); ++j)
            w[static_cast<size_t>(i) * b.dim() + j] = add_weights(a.content_of(i), b.content_of(j));
    return w;
}

// ---------------------------------------------------------------------------
// intersection of Schur modules inside a triple tensor product

Report verify_intersection(const Composition& alpha, const Composition& beta,
                           const Composition& gamma, int n, const CoefficientRing& ring) {
    if (!ring.is_field()) throw FieldRequiredError("verify_intersection requires a field");
    Report rep;
    Stopwatch sw;
    auto ra = realize(alpha, n, ring);
    auto rb = realize(beta, n, ring);
    auto rg = realize(gamma, n, ring);
    auto rabg = realize(concat(concat(alpha, beta), gamma), n, ring);
    int da = ra->dim(), db = rb->dim(), dg = rg->dim();
    long triple = static_cast<long>(da) * db * dg;

    SparseMatrix d_ab = map_delta(alpha, beta, n, ring);      // (da*db) x dim(ab)
    SparseMatrix d_bg = map_delta(beta, gamma, n, ring);      // (db*dg) x dim(bg)
    SparseMatrix d_ab_g = map_delta(concat(alpha, beta), gamma, n, ring);

    // U = Delta_ab (x) I_g, W = I_a (x) Delta_bg, in triple coordinates
    Subspace u, w;
    u.ambient_dim = static_cast<int>(triple);
    u.basis = SparseMatrix(static_cast<int>(triple), d_ab.ncols * dg);
    for (int c = 0; c < d_ab.ncols; ++c)
        for (int g = 0; g < dg; ++g)
            for (auto& [rab, v] : d_ab.cols[c])
                u.basis.cols[c * dg + g].push_back({rab * dg + g, v});
    w.ambient_dim = static_cast<int>(triple);
    w.basis = SparseMatrix(static_cast<int>(triple), da * d_bg.ncols);
    for (int a = 0; a < da; ++a)
        for (int c = 0; c < d_bg.ncols; ++c)
            for (auto& [rbg, v] : d_bg.cols[c])
                w.basis.cols[a * d_bg.ncols + c].push_back(
                    {a * (static_cast<long>(db) * dg) + rbg, v});
    for (auto& col : u.basis.cols) std::sort(col.begin(), col.end());
    for (auto& col : w.basis.cols) std::sort(col.begin(), col.end());

    Subspace inter = intersect(u, w, ring);
    int expected = rabg->dim();
    bool dim_ok = inter.dim() == expected;

    // the image of the full concatenation module must lie in the intersection;
    // column c of d_ab_g has entries over pairs (u_ab, g), routed through Delta_ab
    SparseMatrix through(static_cast<int>(triple), d_ab_g.ncols);
    for (int c = 0; c < d_ab_g.ncols; ++c) {
        std::unordered_map<long, Int> acc;
        for (auto& [pair_ix, v] : d_ab_g.cols[c]) {
            int uab = static_cast<int>(pair_ix / dg);
            int g = static_cast<int>(pair_ix % dg);
            for (auto& [rab, vv] : d_ab.cols[uab]) acc[static_cast<long>(rab) * dg + g] += v * vv;
        }
        for (auto& [ix, v] : acc)
            if (v != 0) through.cols[c].push_back({static_cast<int>(ix), v});
        std::sort(through.cols[c].begin(), through.cols[c].end());
    }
    bool contained = true;
    if (inter.dim() > 0 || through.ncols == 0) {
        for (int c = 0; c < through.ncols && contained; ++c) {
            std::vector<Rat> v(triple, Rat(0));
            for (auto& [ix, val] : through.cols[c]) v[ix] = Rat(val);
            contained = solve_in_span(inter, v, ring).has_value();
        }
    } else {
        contained = through.is_zero();
    }

    CheckResult c;
    c.check = "schur_intersection";
    c.anchor = "the concatenation module equals the intersection of the two "
               "partial-concatenation tensor modules inside the triple tensor";
    c.params = json{{"alpha", alpha.str()}, {"beta", beta.str()}, {"gamma", gamma.str()},
                    {"n", n}, {"ring", ring.str()}};
    c.expected = json{{"dim", expected}};
    c.computed = json{{"dim", inter.dim()}, {"contains_image", contained}};
    c.pass = dim_ok && contained;
    c.millis = sw.millis();
    rep.add(std::move(c));
    return rep;
}

}  // namespace ribbonres
