#include "ribbonres/sympoly.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace ribbonres {

namespace {

bool weakly_decreasing(const Expo& e) {
    for (size_t i = 0; i + 1 < e.size(); ++i)
        if (e[i] < e[i + 1]) return false;
    return true;
}

// all distinct rearrangements of a weakly decreasing vector
std::vector<Expo> orbit(const Expo& part) {
    Expo v = part;
    std::sort(v.begin(), v.end());
    std::vector<Expo> out;
    do {
        out.push_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

int expo_degree(const Expo& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

}  // namespace

void SymPoly::add_orbit(const Expo& partition, const Int& c) {
    if (static_cast<int>(partition.size()) != n_)
        throw UsageError("SymPoly::add_orbit: wrong vector length");
    if (!weakly_decreasing(partition))
        throw UsageError("SymPoly::add_orbit: key must be weakly decreasing");
    if (expo_degree(partition) > max_deg_) return;
    Weight k = pack_expo(partition);
    auto it = coeffs_.find(k);
    if (it == coeffs_.end()) {
        if (c != 0) coeffs_[k] = c;
    } else {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

SymPoly SymPoly::operator+(const SymPoly& o) const {
    if (n_ != o.n_) throw UsageError("SymPoly: variable count mismatch");
    SymPoly out(n_, std::max(max_deg_, o.max_deg_));
    out.coeffs_ = coeffs_;
    for (auto& [k, c] : o.coeffs_) {
        auto it = out.coeffs_.find(k);
        if (it == out.coeffs_.end())
            out.coeffs_[k] = c;
        else {
            it->second += c;
            if (it->second == 0) out.coeffs_.erase(it);
        }
    }
    return out;
}

SymPoly SymPoly::operator-() const {
    SymPoly out(n_, max_deg_);
    for (auto& [k, c] : coeffs_) out.coeffs_[k] = -c;
    return out;
}

SymPoly SymPoly::operator-(const SymPoly& o) const { return *this + (-o); }

SymPoly SymPoly::operator*(const SymPoly& o) const {
    if (n_ != o.n_) throw UsageError("SymPoly: variable count mismatch");
    int cap = std::max(max_deg_, o.max_deg_);
    SymPoly out(n_, cap);
    for (auto& [ka, ca] : coeffs_) {
        Expo pa = unpack_expo(ka, n_);
        int da = expo_degree(pa);
        auto orb_a = orbit(pa);
        for (auto& [kb, cb] : o.coeffs_) {
            Expo pb = unpack_expo(kb, n_);
            if (da + expo_degree(pb) > cap) continue;
            Int c = ca * cb;
            auto orb_b = orbit(pb);
            // coefficient of the sorted representative x^nu in m_a * m_b is
            // the number of orbit pairs summing to exactly nu
            for (auto& u : orb_a)
                for (auto& v : orb_b) {
                    Expo w(n_);
                    for (int i = 0; i < n_; ++i) w[i] = u[i] + v[i];
                    if (!weakly_decreasing(w)) continue;
                    Weight kw = pack_expo(w);
                    auto it = out.coeffs_.find(kw);
                    if (it == out.coeffs_.end())
                        out.coeffs_[kw] = c;
                    else {
                        it->second += c;
                        if (it->second == 0) out.coeffs_.erase(it);
                    }
                }
        }
    }
    return out;
}

Int SymPoly::coeff_at(const Expo& a) const {
    if (static_cast<int>(a.size()) != n_)
        throw UsageError("coeff_at: wrong multidegree length");
    Expo s = a;
    std::sort(s.begin(), s.end(), std::greater<int>());
    auto it = coeffs_.find(pack_expo(s));
    return it == coeffs_.end() ? Int(0) : it->second;
}

Int SymPoly::eval_at_ones() const {
    Int total = 0;
    for (auto& [k, c] : coeffs_) total += c * orbit_size(unpack_expo(k, n_), n_);
    return total;
}

SymPoly SymPoly::component(int d) const {
    SymPoly out(n_, max_deg_);
    for (auto& [k, c] : coeffs_)
        if (weight_degree(k, n_) == d) out.coeffs_[k] = c;
    return out;
}

std::string SymPoly::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [k, c] : coeffs_) {
        Expo e = unpack_expo(k, n_);
        if (!first) os << " + ";
        first = false;
        os << c << "*m(";
        for (size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
        os << ")";
    }
    return os.str();
}

Int orbit_size(const Expo& partition, int n) {
    Expo s = partition;
    s.resize(n, 0);
    std::sort(s.begin(), s.end());
    Int total = 1;
    for (int i = 2; i <= n; ++i) total *= i;
    int run = 1;
    for (int i = 1; i <= n; ++i) {
        if (i < n && s[i] == s[i - 1])
            ++run;
        else {
            for (int j = 2; j <= run; ++j) total /= j;
            run = 1;
        }
    }
    return total;
}

SymPoly h_poly(int m, int n, int max_deg) {
    if (m < 0) throw UsageError("h_poly: negative degree");
    SymPoly f(n, max_deg);
    if (m > max_deg) return f;
    // every partition of m into at most n parts, coefficient 1
    std::vector<int> part;
    std::function<void(int, int)> gen = [&](int rem, int maxpart) {
        if (rem == 0) {
            Expo e(part.begin(), part.end());
            e.resize(n, 0);
            f.add_orbit(e, 1);
            return;
        }
        if (static_cast<int>(part.size()) == n) return;
        for (int p = std::min(rem, maxpart); p >= 1; --p) {
            part.push_back(p);
            gen(rem - p, p);
            part.pop_back();
        }
    };
    if (m == 0)
        f.add_orbit(Expo(n, 0), 1);
    else
        gen(m, m);
    return f;
}

SymPoly e_poly(int m, int n, int max_deg) {
    if (m < 0) throw UsageError("e_poly: negative degree");
    SymPoly f(n, max_deg);
    if (m > n || m > max_deg) return f;  // e_m = 0 beyond n variables
    Expo e(n, 0);
    for (int i = 0; i < m; ++i) e[i] = 1;
    f.add_orbit(e, 1);
    return f;
}

namespace {

SymPoly schur_by_ssyt(const SkewShape& d, int n, int max_deg) {
    SymPoly f(n, max_deg);
    // s_D = sum over column-strict tableaux; only contents that are already
    // weakly decreasing contribute to the orbit map
    for (auto& t : enumerate_tableaux(d, n, TableauKind::ssyt)) {
        Expo c = t.content(n);
        bool sorted = true;
        for (size_t i = 0; i + 1 < c.size(); ++i)
            if (c[i] < c[i + 1]) {
                sorted = false;
                break;
            }
        if (sorted) f.add_orbit(c, 1);
    }
    return f;
}

// determinant by expansion along the first column, skipping zero entries;
// the Jacobi-Trudi matrix is close to Hessenberg so this stays small
SymPoly det_expand(const std::vector<std::vector<SymPoly>>& m, std::vector<int>& rows,
                   size_t col, int n, int max_deg) {
    if (col == m.size() || rows.empty()) return SymPoly::one(n, max_deg);
    SymPoly acc = SymPoly::zero(n, max_deg);
    for (size_t idx = 0; idx < rows.size(); ++idx) {
        int r = rows[idx];
        if (m[r][col].is_zero()) continue;
        std::vector<int> rest;
        rest.reserve(rows.size() - 1);
        for (size_t j = 0; j < rows.size(); ++j)
            if (j != idx) rest.push_back(rows[j]);
        SymPoly sub = det_expand(m, rest, col + 1, n, max_deg);
        SymPoly term = m[r][col] * sub;
        if (idx % 2 == 0)
            acc = acc + term;
        else
            acc = acc - term;
    }
    return acc;
}

SymPoly sympoly_det(const std::vector<std::vector<SymPoly>>& m, int n, int max_deg) {
    std::vector<int> rows(m.size());
    for (size_t i = 0; i < rows.size(); ++i) rows[i] = static_cast<int>(i);
    return det_expand(m, rows, 0, n, max_deg);
}

SymPoly schur_by_jacobi_trudi(const SkewShape& d, int n, int max_deg) {
    auto [lambda, mu] = d.as_lambda_mu();
    int ell = static_cast<int>(lambda.size());
    std::vector<std::vector<SymPoly>> m(ell, std::vector<SymPoly>(ell));
    for (int i = 0; i < ell; ++i)
        for (int j = 0; j < ell; ++j) {
            int deg = lambda[i] - mu[j] - i + j;
            m[i][j] = deg < 0 ? SymPoly::zero(n, max_deg) : h_poly(deg, n, max_deg);
        }
    return sympoly_det(m, n, max_deg);
}

}  // namespace

SymPoly skew_schur(const SkewShape& d, int n, SchurMethod method, int max_deg) {
    if (d.empty()) return SymPoly::one(n, max_deg);
    switch (method) {
        case SchurMethod::ssyt_sum: return schur_by_ssyt(d, n, max_deg);
        case SchurMethod::jacobi_trudi: return schur_by_jacobi_trudi(d, n, max_deg);
    }
    throw UsageError("unknown Schur method");
}

// ---------------------------------------------------------------------------
// verification reports

namespace {

json first_diff_monomial(const SymPoly& a, const SymPoly& b, int n) {
    for (auto& [k, c] : a.coeffs()) {
        Expo e = unpack_expo(k, n);
        if (b.coeff_at(e) != c)
            return json{{"monomial", e}, {"lhs", c.get_str()}, {"rhs", b.coeff_at(e).get_str()}};
    }
    for (auto& [k, c] : b.coeffs()) {
        Expo e = unpack_expo(k, n);
        if (a.coeff_at(e) != c)
            return json{{"monomial", e}, {"lhs", a.coeff_at(e).get_str()}, {"rhs", c.get_str()}};
    }
    return json();
}

}  // namespace

Report verify_product_identity(const SkewShape& d, const SkewShape& dp, int n) {
    Report rep;
    Stopwatch sw;
    int cap = d.cell_count() + dp.cell_count();
    SymPoly lhs = skew_schur(d, n, SchurMethod::ssyt_sum, cap) *
                  skew_schur(dp, n, SchurMethod::ssyt_sum, cap);
    SkewShape cat = diagram_compose(d, dp, DiagramComposeKind::concat);
    SkewShape near = diagram_compose(d, dp, DiagramComposeKind::near_concat);
    SymPoly rhs = skew_schur(cat, n, SchurMethod::ssyt_sum, cap) +
                  skew_schur(near, n, SchurMethod::ssyt_sum, cap);
    bool ok = lhs == rhs;
    CheckResult c;
    c.check = "product_identity";
    c.anchor = "skew Schur product identity: s_D * s_D' = s_{D.D'} + s_{D(.)D'}";
    c.params = json{{"cells_lhs", d.cell_count()}, {"cells_rhs", dp.cell_count()}, {"n", n}};
    c.expected = "equal coefficientwise";
    c.computed = ok ? json("equal") : first_diff_monomial(lhs, rhs, n);
    c.pass = ok;
    c.millis = sw.millis();
    rep.add(std::move(c));
    return rep;
}

Report hamel_goulden_det(const std::vector<Composition>& alphas, int n) {
    if (alphas.empty()) throw UsageError("hamel_goulden_det: empty sequence");
    Report rep;
    Stopwatch sw;
    int ell = static_cast<int>(alphas.size());
    Composition full = alphas[0];
    int total = alphas[0].size();
    for (int i = 1; i < ell; ++i) {
        full = concat(full, alphas[i]);
        total += alphas[i].size();
    }
    int cap = total;
    std::vector<std::vector<SymPoly>> m(ell, std::vector<SymPoly>(ell));
    for (int i = 0; i < ell; ++i)
        for (int j = 0; j < ell; ++j) {
            if (i >= j + 2) {
                m[i][j] = SymPoly::zero(n, cap);
            } else if (i == j + 1) {
                m[i][j] = SymPoly::one(n, cap);
            } else {
                Composition merged = alphas[i];
                for (int k = i + 1; k <= j; ++k) merged = near_concat(merged, alphas[k]);
                m[i][j] = ribbon_schur(merged, n, SchurMethod::ssyt_sum, cap);
            }
        }
    SymPoly det = sympoly_det(m, n, cap);
    SymPoly target = ribbon_schur(full, n, SchurMethod::ssyt_sum, cap);
    bool ok = det == target;
    json params;
    params["n"] = n;
    params["ell"] = ell;
    std::vector<std::string> comps;
    for (auto& a : alphas) comps.push_back(a.str());
    params["alphas"] = comps;
    CheckResult c;
    c.check = "hamel_goulden_det";
    c.anchor = "ribbon determinant identity: s of the concatenation equals "
               "det of the near-concatenation matrix";
    c.params = params;
    c.expected = "determinant equals s_{concatenation}";
    c.computed = ok ? json("equal") : first_diff_monomial(det, target, n);
    c.pass = ok;
    c.millis = sw.millis();
    rep.add(std::move(c));
    return rep;
}

Report verify_veronese_series(int d, int r, int n, int max_m) {
    if (d < 1 || r < 1) throw UsageError("verify_veronese_series: need d, r >= 1");
    Report rep;
    for (int m = 0; m <= max_m; ++m) {
        Stopwatch sw;
        int deg = m * d + r;
        // degree component of (sum_k h_{kd}) * (sum_i (-1)^i s_{sigma(d^i,r)})
        SymPoly acc = SymPoly::zero(n, deg);
        for (int i = 0; i <= m; ++i) {
            std::vector<int> parts(i, d);
            parts.push_back(r);
            SymPoly s = ribbon_schur(Composition(parts), n, SchurMethod::ssyt_sum, deg);
            SymPoly term = h_poly(d * (m - i), n, deg) * s;
            acc = (i % 2 == 0) ? acc + term : acc - term;
        }
        SymPoly target = h_poly(deg, n, deg);
        bool ok = acc == target;
        CheckResult c;
        c.check = "veronese_series";
        c.anchor = "alternating ribbon expansion of the Veronese Hilbert series: "
                   "h_{m d + r} = sum_i (-1)^i h_{d(m-i)} s_{ribbon(d^i,r)}";
        c.params = json{{"d", d}, {"r", r}, {"n", n}, {"m", m}};
        c.expected = "component equals h";
        c.computed = ok ? json("equal") : first_diff_monomial(acc, target, n);
        c.pass = ok;
        c.millis = sw.millis();
        rep.add(std::move(c));
        if (!ok) break;
    }
    return rep;
}

Report omega_stability_check(int i_max, int n) {
    Report rep;
    for (int i = 0; i <= i_max; ++i) {
        Stopwatch sw;
        std::vector<int> parts(i, 2);
        parts.push_back(1);
        SkewShape shape = ribbon_shape(Composition(parts));
        SkewShape t = shape.transposed();
        bool shape_fixed = (t == shape.normalized()) || (t == shape.rotated180());
        int deg = shape.cell_count();
        bool char_fixed = skew_schur(shape, n, SchurMethod::ssyt_sum, deg) ==
                          skew_schur(t, n, SchurMethod::ssyt_sum, deg);
        CheckResult c;
        c.check = "omega_stability";
        c.anchor = "resolution shapes for d=2, r=1 are transpose-invariant "
                   "(up to 180-degree rotation), so their Schur polynomials are "
                   "stable under the h<->e involution";
        c.params = json{{"i", i}, {"n", n}};
        c.expected = "transpose fixes the shape and the Schur polynomial";
        c.computed = json{{"shape_fixed", shape_fixed}, {"character_fixed", char_fixed}};
        c.pass = shape_fixed && char_fixed;
        c.millis = sw.millis();
        rep.add(std::move(c));
    }
    return rep;
}

}  // namespace ribbonres
