#include "ribbonres/ribbon_complex.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace ribbonres {

namespace testhooks {
bool flip_first_partial_sign = false;
}

namespace {

Composition tail_of(const Composition& alpha) {
    if (alpha.length() < 2) throw UsageError("tail_of: composition too short");
    return Composition(std::vector<int>(alpha.parts.begin() + 1, alpha.parts.end()));
}

bool product_vanishes(const SparseMatrix& prod, const CoefficientRing& ring) {
    if (ring.tag != RingTag::prime_field) return prod.is_zero();
    for (auto& col : prod.cols)
        for (auto& [r, v] : col)
            if (v % static_cast<long>(ring.p) != 0) return false;
    return true;
}

}  // namespace

PartialBlock partial_block(const Composition& alpha, int p, int n,
                           const CoefficientRing& ring) {
    if (p < 0) throw UsageError("partial_block: need p >= 0");
    PartialBlock blk;
    blk.alpha = alpha;
    blk.p = p;
    blk.n = n;
    blk.ring = ring;
    blk.source = realize(alpha, n, ring);
    bool tail_empty = alpha.length() == 1;
    blk.target = tail_empty ? realize(SkewShape(), n, ring)
                            : realize(tail_of(alpha), n, ring);
    blk.src_mons = &mon_basis(n, p);
    blk.dst_mons = &mon_basis(n, p + alpha.parts[0]);

    const auto& src = *blk.source;
    const auto& tgt = *blk.target;
    int dim_s = src.dim(), dim_t = tgt.dim();
    int um = blk.src_mons->dim(), wm = blk.dst_mons->dim();
    blk.matrix = SparseMatrix(static_cast<int>(static_cast<long>(wm) * dim_t),
                              static_cast<int>(static_cast<long>(um) * dim_s));

    // the first ambient factor of the source ribbon is its bottom row; the
    // remaining factors are exactly the target's ambient
    long tail_total = tgt.ambient().dim;
    const MonBasis& row_mons = mon_basis(n, alpha.parts[0]);

    // per tableau: split the image along the bottom-row monomial and solve
    // each residual tail once (solving is linear, so columns reassemble)
    struct Split {
        int m1;        // bottom-row monomial index
        Coords coords;  // tail expressed in the target tableau basis
    };
    std::vector<std::vector<Split>> splits(dim_s);
    for (int t = 0; t < dim_s; ++t) {
        std::map<int, AmbVec> groups;
        for (auto& [ix, v] : src.image(t))
            groups[static_cast<int>(ix / tail_total)].push_back({ix % tail_total, v});
        for (auto& [m1, vec] : groups) {
            auto v = vec;
            std::sort(v.begin(), v.end());
            auto coords = tgt.try_solve(v);
            if (!coords)
                throw ViolatedInvariant(
                    "violated-restriction: image escapes the ribbon subspace");
            splits[t].push_back({m1, std::move(*coords)});
        }
    }

    bool flip = testhooks::flip_first_partial_sign;
    for (int u = 0; u < um; ++u) {
        const Expo& ue = blk.src_mons->expo(u);
        for (int t = 0; t < dim_s; ++t) {
            auto& col = blk.matrix.cols[static_cast<long>(u) * dim_s + t];
            for (auto& sp : splits[t]) {
                Expo we = row_mons.expo(sp.m1);
                for (int i = 0; i < n; ++i) we[i] += ue[i];
                long w = blk.dst_mons->index_of(we);
                for (auto& [tt, c] : sp.coords) {
                    Int val = c;
                    if (flip) {
                        val = -val;
                        flip = false;
                        testhooks::flip_first_partial_sign = false;
                    }
                    col.push_back({static_cast<int>(w * dim_t + tt), val});
                }
            }
        }
    }
    blk.matrix.normalize();

    blk.col_weights.resize(blk.matrix.ncols);
    for (int u = 0; u < um; ++u)
        for (int t = 0; t < dim_s; ++t)
            blk.col_weights[static_cast<long>(u) * dim_s + t] =
                add_weights(blk.src_mons->weight(u), src.content_of(t));
    blk.row_weights.resize(blk.matrix.nrows);
    for (int w = 0; w < wm; ++w)
        for (int t = 0; t < dim_t; ++t)
            blk.row_weights[static_cast<long>(w) * dim_t + t] =
                add_weights(blk.dst_mons->weight(w), tgt.content_of(t));
    return blk;
}

Report check_d2_zero(const Composition& alpha, int p, int n, const CoefficientRing& ring) {
    if (alpha.length() < 2) throw UsageError("check_d2_zero: need length >= 2");
    Report rep;
    Stopwatch sw;
    PartialBlock first = partial_block(alpha, p, n, ring);
    PartialBlock second = partial_block(tail_of(alpha), p + alpha.parts[0], n, ring);
    auto prod = second.matrix.multiplied_by(first.matrix);
    bool ok = product_vanishes(prod, ring);
    CheckResult c;
    c.check = "d_squared_zero";
    c.anchor = "the degree-lowering map squares to zero on the ribbon subspace";
    c.params = json{{"alpha", alpha.str()}, {"p", p}, {"n", n}, {"ring", ring.str()}};
    c.expected = "zero composite";
    c.computed = ok ? "zero" : "nonzero composite";
    c.pass = ok;
    c.millis = sw.millis();
    rep.add(std::move(c));
    return rep;
}

// ---------------------------------------------------------------------------
// counterexample off the ribbon subspace

namespace {

// minimal model of S (x) T(S): coefficient map on (monomial, word of monomials)
struct TensorElem {
    // key: packed monomials, first entry the S-factor
    std::map<std::vector<Weight>, Int> terms;

    static TensorElem single(const std::vector<Weight>& key, Int c) {
        TensorElem e;
        e.terms[key] = c;
        return e;
    }
    TensorElem lower() const {  // s (x) s1 (x) rest -> s*s1 (x) rest
        TensorElem out;
        for (auto& [key, c] : terms) {
            if (key.size() < 2) continue;  // tensor degree 0 maps to 0
            std::vector<Weight> nk;
            nk.push_back(add_weights(key[0], key[1]));
            for (size_t i = 2; i < key.size(); ++i) nk.push_back(key[i]);
            out.terms[nk] += c;
        }
        std::erase_if(out.terms, [](auto& kv) { return kv.second == 0; });
        return out;
    }
    bool is_zero_over(const CoefficientRing& ring) const {
        for (auto& [k, c] : terms) {
            if (ring.tag == RingTag::prime_field) {
                if (c % static_cast<long>(ring.p) != 0) return false;
            } else if (c != 0) {
                return false;
            }
        }
        return true;
    }
    std::string str(int n) const {
        if (terms.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& [k, c] : terms) {
            if (!first) os << " + ";
            first = false;
            os << c << "*(";
            for (size_t i = 0; i < k.size(); ++i) {
                if (i) os << " (x) ";
                Expo e = unpack_expo(k[i], n);
                os << "x^[";
                for (int j = 0; j < n; ++j) os << (j ? "," : "") << e[j];
                os << "]";
            }
            os << ")";
        }
        return os.str();
    }
};

}  // namespace

Report counterexample_unrestricted(int n, const CoefficientRing& ring) {
    if (n < 1) throw UsageError("counterexample_unrestricted: need n >= 1");
    Report rep;
    Stopwatch sw;
    Weight x1 = pack_expo([&] {
        Expo e(n, 0);
        e[0] = 1;
        return e;
    }());

    // 1 (x) x1 (x) x1 is not alternating in the two tensor slots, so it lies
    // outside the (1,1) ribbon summand; its double image is x1^2
    TensorElem w = TensorElem::single({0, x1, x1}, 1);
    TensorElem dsq = w.lower().lower();
    bool nonzero = !dsq.is_zero_over(ring);

    // over characteristic 2 the symmetrized two-variable witness degenerates
    json note;
    if (n >= 2) {
        Weight x2 = pack_expo([&] {
            Expo e(n, 0);
            e[1] = 1;
            return e;
        }());
        TensorElem sym;
        sym.terms[{0, x1, x2}] = 1;
        sym.terms[{0, x2, x1}] = 1;
        TensorElem sym_dsq = sym.lower().lower();
        bool sym_nonzero = !sym_dsq.is_zero_over(ring);
        note = json{{"symmetric_witness", sym.str(n)},
                    {"symmetric_dsq", sym_dsq.str(n)},
                    {"symmetric_nonzero", sym_nonzero}};
        if (!sym_nonzero)
            note["remark"] = "characteristic-sensitive witness vanishes; using the "
                             "repeated-variable witness instead";
    }

    CheckResult c;
    c.check = "unrestricted_not_a_differential";
    c.anchor = "the degree-lowering map is not a differential on the full "
               "tensor algebra";
    c.params = json{{"n", n}, {"ring", ring.str()}};
    c.expected = "nonzero square on a witness outside the ribbon subspace";
    c.computed = json{{"witness", w.str(n)}, {"dsq", dsq.str(n)}, {"nonzero", nonzero},
                      {"characteristic_note", note}};
    c.pass = nonzero;
    c.millis = sw.millis();
    rep.add(std::move(c));
    return rep;
}

// ---------------------------------------------------------------------------
// kernel and image of the blocks

Report kernel_image_lemma(const Composition& alpha, int p, int q, int n,
                          const CoefficientRing& ring) {
    if (p <= 0 || q <= 0 || q > p) throw UsageError("kernel_image_lemma: need 0 < q <= p");
    Report rep;
    Stopwatch sw;

    PartialBlock blk = partial_block(alpha, p, n, ring);
    SparseMatrix ker = blk.kernel();
    int ker_dim = ker.ncols;

    std::vector<int> pa{p};
    pa.insert(pa.end(), alpha.parts.begin(), alpha.parts.end());
    int expected = realize(Composition(pa), n, ring)->dim();

    std::vector<int> qa{q};
    qa.insert(qa.end(), alpha.parts.begin(), alpha.parts.end());
    PartialBlock prev = partial_block(Composition(qa), p - q, n, ring);
    int im_dim = prev.rank();

    // image inside kernel: the composite must vanish
    auto prod = blk.matrix.multiplied_by(prev.matrix);
    bool composite_zero = product_vanishes(prod, ring);

    // kernel inside image: spanning does not grow when kernel columns join
    // the image columns (checked per weight block)
    SparseMatrix joint(blk.matrix.ncols, prev.matrix.ncols + ker.ncols);
    for (int c = 0; c < prev.matrix.ncols; ++c) joint.cols[c] = prev.matrix.cols[c];
    for (int c = 0; c < ker.ncols; ++c) joint.cols[prev.matrix.ncols + c] = ker.cols[c];
    std::vector<Weight> joint_w(prev.col_weights);
    for (int c = 0; c < ker.ncols; ++c) {
        Weight w = 0;
        if (!ker.cols[c].empty()) w = blk.col_weights[ker.cols[c].front().first];
        joint_w.push_back(w);
    }
    int joint_rank = graded_rank(joint, blk.col_weights, joint_w, ring);
    bool ker_in_im = joint_rank == im_dim;

    bool ok = (ker_dim == expected) && (im_dim == expected) && composite_zero && ker_in_im;
    CheckResult c;
    c.check = "kernel_image_lemma";
    c.anchor = "kernel of the alpha block in its lowest positive degree is the "
               "(p, alpha) ribbon module and equals the image of the (q, alpha) block";
    c.params = json{{"alpha", alpha.str()}, {"p", p}, {"q", q}, {"n", n}, {"ring", ring.str()}};
    c.expected = json{{"dim", expected}};
    c.computed = json{{"kernel_dim", ker_dim}, {"image_dim", im_dim},
                      {"composite_zero", composite_zero}, {"kernel_in_image", ker_in_im}};
    c.pass = ok;
    c.millis = sw.millis();
    rep.add(std::move(c));
    return rep;
}

// ---------------------------------------------------------------------------
// the near-concatenation cochain complex

std::vector<Weight> HGTerm::weights() const {
    std::vector<Weight> w(dim);
    for (long ix = 0; ix < dim; ++ix) {
        auto t = indexer.tuple(ix);
        Weight acc = 0;
        for (size_t f = 0; f < factors.size(); ++f)
            acc = add_weights(acc, factors[f]->content_of(t[f]));
        w[ix] = acc;
    }
    return w;
}

namespace {

std::vector<Composition> merge_sequence(const std::vector<Composition>& alphas,
                                        const std::vector<int>& subset) {
    std::vector<char> merged(alphas.size(), 0);
    for (int j : subset) merged[j] = 1;  // j in [1, ell-1]: merge alpha_j with alpha_{j+1}
    std::vector<Composition> seq;
    Composition cur = alphas[0];
    for (size_t i = 1; i < alphas.size(); ++i) {
        if (merged[i])
            cur = near_concat(cur, alphas[i]);
        else {
            seq.push_back(cur);
            cur = alphas[i];
        }
    }
    seq.push_back(cur);
    return seq;
}

HGTerm make_term(const std::vector<Composition>& seq, int n, const CoefficientRing& ring) {
    HGTerm t;
    t.seq = seq;
    std::vector<int> dims;
    for (auto& c : seq) {
        t.factors.push_back(realize(c, n, ring));
        dims.push_back(t.factors.back()->dim());
    }
    t.indexer = TupleIndexer(dims);
    t.dim = t.indexer.total;
    return t;
}

// merge factors (t, t+1) of src via the m matrix, identity elsewhere
SparseMatrix nabla_block(const HGTerm& src, const HGTerm& dst, int fpos, int n,
                         const CoefficientRing& ring) {
    SparseMatrix m = map_m(src.seq[fpos], src.seq[fpos + 1], n, ring);
    int dim_b = src.factors[fpos + 1]->dim();
    SparseMatrix out(static_cast<int>(dst.dim), static_cast<int>(src.dim));
    for (long ix = 0; ix < src.dim; ++ix) {
        auto tup = src.indexer.tuple(ix);
        int a = tup[fpos], b = tup[fpos + 1];
        for (auto& [mt, coeff] : m.cols[static_cast<long>(a) * dim_b + b]) {
            std::vector<int> full;
            full.reserve(dst.seq.size());
            for (int f = 0; f < fpos; ++f) full.push_back(tup[f]);
            full.push_back(mt);
            for (int f = fpos + 2; f < static_cast<int>(src.seq.size()); ++f)
                full.push_back(tup[f]);
            out.cols[ix].push_back({static_cast<int>(dst.indexer.index(full)), coeff});
        }
        std::sort(out.cols[ix].begin(), out.cols[ix].end());
    }
    return out;
}

// the factor position at which inserting j merges two factors of seq(I)
int factor_position(const std::vector<int>& subset, int j, int ell) {
    // factors correspond to maximal runs of merges; count run starts < j
    std::vector<char> merged(ell + 1, 0);
    for (int s : subset) merged[s] = 1;
    int pos = 0;
    for (int i = 1; i < j; ++i)
        if (!merged[i]) ++pos;
    return pos;
}

}  // namespace

HGComplex build_hg(const std::vector<Composition>& alphas, int n,
                   const CoefficientRing& ring) {
    if (alphas.empty()) throw UsageError("build_hg: empty sequence");
    HGComplex hg;
    hg.alphas = alphas;
    hg.n = n;
    hg.ring = ring;
    int ell = static_cast<int>(alphas.size());
    int positions = ell - 1;

    hg.subsets.assign(positions + 1, {});
    for (int mask = 0; mask < (1 << positions); ++mask) {
        std::vector<int> subset;
        for (int b = 0; b < positions; ++b)
            if (mask & (1 << b)) subset.push_back(b + 1);
        hg.subsets[subset.size()].push_back(subset);
    }
    // masks ascend within each level already (iteration order)

    hg.terms.resize(positions + 1);
    hg.level_dims.assign(positions + 1, 0);
    hg.level_weights.resize(positions + 1);
    for (int lvl = 0; lvl <= positions; ++lvl) {
        for (auto& subset : hg.subsets[lvl]) {
            HGTerm t = make_term(merge_sequence(alphas, subset), n, ring);
            t.offset = hg.level_dims[lvl];
            hg.level_dims[lvl] += t.dim;
            hg.terms[lvl].push_back(std::move(t));
        }
        hg.level_weights[lvl].resize(hg.level_dims[lvl]);
        for (auto& t : hg.terms[lvl]) {
            auto w = t.weights();
            for (long i = 0; i < t.dim; ++i) hg.level_weights[lvl][t.offset + i] = w[i];
        }
    }

    for (int lvl = 0; lvl < positions; ++lvl) {
        SparseMatrix delta(static_cast<int>(hg.level_dims[lvl + 1]),
                           static_cast<int>(hg.level_dims[lvl]));
        for (size_t si = 0; si < hg.subsets[lvl].size(); ++si) {
            const auto& is = hg.subsets[lvl][si];
            const HGTerm& src = hg.terms[lvl][si];
            for (size_t sj = 0; sj < hg.subsets[lvl + 1].size(); ++sj) {
                const auto& js = hg.subsets[lvl + 1][sj];
                // need js == is plus one element
                std::vector<int> diff;
                std::set_difference(js.begin(), js.end(), is.begin(), is.end(),
                                    std::back_inserter(diff));
                if (diff.size() != 1 ||
                    !std::includes(js.begin(), js.end(), is.begin(), is.end()))
                    continue;
                int j = diff[0];
                int m_index = static_cast<int>(
                    std::lower_bound(js.begin(), js.end(), j) - js.begin());
                int sign = (m_index % 2 == 0) ? 1 : -1;
                const HGTerm& dst = hg.terms[lvl + 1][sj];
                int fpos = factor_position(is, j, ell - 1);
                SparseMatrix blockm = nabla_block(src, dst, fpos, n, ring);
                for (long c = 0; c < src.dim; ++c)
                    for (auto& [r, v] : blockm.cols[c])
                        delta.cols[src.offset + c].push_back(
                            {static_cast<int>(dst.offset + r), sign * v});
            }
        }
        delta.normalize();
        hg.deltas.push_back(std::move(delta));
    }
    return hg;
}

Report verify_hg(const std::vector<Composition>& alphas, int n,
                 const CoefficientRing& ring, bool check_diamonds) {
    Report rep;
    Stopwatch sw;
    HGComplex hg = build_hg(alphas, n, ring);
    int top = hg.levels() - 1;

    bool dsq = true;
    for (size_t i = 0; i + 1 < hg.deltas.size(); ++i) {
        auto prod = hg.deltas[i + 1].multiplied_by(hg.deltas[i]);
        if (!product_vanishes(prod, ring)) {
            dsq = false;
            break;
        }
    }

    std::vector<int> ranks(hg.deltas.size());
    for (size_t i = 0; i < hg.deltas.size(); ++i)
        ranks[i] = graded_rank(hg.deltas[i], hg.level_weights[i + 1], hg.level_weights[i], ring);

    Composition full = alphas[0];
    for (size_t i = 1; i < alphas.size(); ++i) full = concat(full, alphas[i]);
    int h0_expected = realize(full, n, ring)->dim();
    long h0 = hg.level_dims[0] - (hg.deltas.empty() ? 0 : ranks[0]);
    bool homology_ok = h0 == h0_expected;
    std::vector<long> hdims{h0};
    for (int lvl = 1; lvl <= top; ++lvl) {
        long out_rank = lvl < static_cast<int>(hg.deltas.size()) ? ranks[lvl] : 0;
        long in_rank = ranks[lvl - 1];
        long hdim = hg.level_dims[lvl] - out_rank - in_rank;
        hdims.push_back(hdim);
        if (hdim != 0) homology_ok = false;
    }

    long euler = 0;
    for (int lvl = 0; lvl <= top; ++lvl)
        euler += (lvl % 2 == 0 ? 1 : -1) * hg.level_dims[lvl];
    bool euler_ok = euler == h0_expected;

    bool diamonds_ok = true;
    if (check_diamonds) {
        int positions = static_cast<int>(alphas.size()) - 1;
        for (int lvl = 0; lvl + 2 <= top && diamonds_ok; ++lvl)
            for (size_t si = 0; si < hg.subsets[lvl].size() && diamonds_ok; ++si) {
                const auto& is = hg.subsets[lvl][si];
                for (int j = 1; j <= positions && diamonds_ok; ++j) {
                    if (std::binary_search(is.begin(), is.end(), j)) continue;
                    for (int j2 = j + 1; j2 <= positions && diamonds_ok; ++j2) {
                        if (std::binary_search(is.begin(), is.end(), j2)) continue;
                        auto mk = [&](std::vector<int> s, int extra) {
                            s.push_back(extra);
                            std::sort(s.begin(), s.end());
                            return s;
                        };
                        auto s1 = mk(is, j), s2 = mk(is, j2), s12 = mk(s1, j2);
                        HGTerm t0 = make_term(merge_sequence(alphas, is), n, ring);
                        HGTerm ta = make_term(merge_sequence(alphas, s1), n, ring);
                        HGTerm tb = make_term(merge_sequence(alphas, s2), n, ring);
                        HGTerm tc = make_term(merge_sequence(alphas, s12), n, ring);
                        int ell1 = positions;
                        auto path1 = nabla_block(ta, tc, factor_position(s1, j2, ell1), n, ring)
                                         .multiplied_by(nabla_block(
                                             t0, ta, factor_position(is, j, ell1), n, ring));
                        auto path2 = nabla_block(tb, tc, factor_position(s2, j, ell1), n, ring)
                                         .multiplied_by(nabla_block(
                                             t0, tb, factor_position(is, j2, ell1), n, ring));
                        SparseMatrix diffm(path1.nrows, path1.ncols);
                        for (int c = 0; c < path1.ncols; ++c) {
                            diffm.cols[c] = path1.cols[c];
                            for (auto& [r, v] : path2.cols[c]) diffm.cols[c].push_back({r, -v});
                        }
                        diffm.normalize();
                        if (!product_vanishes(diffm, ring)) diamonds_ok = false;
                    }
                }
            }
    }

    bool ok = dsq && homology_ok && euler_ok && diamonds_ok;
    json params;
    std::vector<std::string> comps;
    for (auto& a : alphas) comps.push_back(a.str());
    params["alphas"] = comps;
    params["n"] = n;
    params["ring"] = ring.str();
    CheckResult c;
    c.check = "hg_complex";
    c.anchor = "the near-concatenation cochain complex resolves the "
               "concatenation module: acyclic in positive degrees";
    c.params = params;
    c.expected = json{{"H0", h0_expected}, {"higher", 0}};
    c.computed = json{{"delta_sq_zero", dsq}, {"homology", hdims},
                      {"level_dims", hg.level_dims}, {"euler", euler},
                      {"diamonds_commute", diamonds_ok}};
    c.pass = ok;
    c.millis = sw.millis();
    rep.add(std::move(c));
    return rep;
}

}  // namespace ribbonres
