#include "ribbonres/combinatorics.hpp"

#include <map>
#include <sstream>

namespace ribbonres {

Composition SkewShape::rows() const {
    if (cells_.empty()) return Composition(std::vector<int>{});
    std::map<int, std::pair<int, int>> span;  // row -> [min,max] col
    std::map<int, int> count;
    for (auto& c : cells_) {
        auto it = span.find(c.row);
        if (it == span.end())
            span[c.row] = {c.col, c.col};
        else {
            it->second.first = std::min(it->second.first, c.col);
            it->second.second = std::max(it->second.second, c.col);
        }
        count[c.row]++;
    }
    std::vector<int> parts;
    int expect = span.begin()->first;
    for (auto& [r, se] : span) {
        if (r != expect)
            throw UsageError("shape has an empty row between occupied rows");
        if (count[r] != se.second - se.first + 1)
            throw UsageError("shape row is not a contiguous interval");
        parts.push_back(count[r]);
        ++expect;
    }
    return Composition(std::move(parts));
}

Composition SkewShape::col_sizes() const {
    if (cells_.empty()) return Composition(std::vector<int>{});
    std::map<int, int> count;
    for (auto& c : cells_) count[c.col]++;
    std::vector<int> parts;
    int expect = count.begin()->first;
    for (auto& [c, k] : count) {
        if (c != expect)
            throw UsageError("shape has an empty column between occupied columns");
        parts.push_back(k);
        ++expect;
    }
    return Composition(std::move(parts));
}

std::pair<int, int> SkewShape::row_span(int r) const {
    int lo = INT32_MAX, hi = INT32_MIN, n = 0;
    for (auto& c : cells_)
        if (c.row == r) {
            lo = std::min(lo, c.col);
            hi = std::max(hi, c.col);
            ++n;
        }
    if (n == 0) throw UsageError("row_span: empty row");
    if (n != hi - lo + 1) throw UsageError("row_span: row not contiguous");
    return {lo, hi};
}

std::vector<std::vector<Cell>> SkewShape::columns_top_to_bottom() const {
    std::map<int, std::vector<Cell>> by_col;
    for (auto& c : cells_) by_col[c.col].push_back(c);
    std::vector<std::vector<Cell>> out;
    for (auto& [col, v] : by_col) {
        std::sort(v.begin(), v.end(),
                  [](const Cell& a, const Cell& b) { return a.row > b.row; });
        out.push_back(v);
    }
    return out;
}

std::pair<std::vector<int>, std::vector<int>> SkewShape::as_lambda_mu() const {
    SkewShape nm = normalized();
    Composition rc = nm.rows();  // throws unless rows contiguous
    int ell = rc.length();
    std::vector<int> lambda(ell), mu(ell);
    for (int i = 0; i < ell; ++i) {
        // English row i+1 (from the top) is our row ell-i
        auto [lo, hi] = nm.row_span(ell - i);
        lambda[i] = hi;
        mu[i] = lo - 1;
    }
    for (int i = 0; i + 1 < ell; ++i) {
        if (lambda[i] < lambda[i + 1] || mu[i] < mu[i + 1])
            throw UsageError("diagram is not a skew shape lambda/mu");
    }
    for (int i = 0; i < ell; ++i)
        if (mu[i] > lambda[i]) throw UsageError("diagram is not a skew shape lambda/mu");
    return {lambda, mu};
}

bool SkewShape::is_skew() const {
    try {
        as_lambda_mu();
        return true;
    } catch (const UsageError&) {
        return false;
    }
}

bool SkewShape::is_ribbon() const {
    if (cells_.empty()) return false;
    SkewShape nm = normalized();
    Composition rc;
    try {
        rc = nm.rows();
    } catch (const UsageError&) {
        return false;
    }
    // consecutive rows overlap in exactly one column, and no 2x2 block
    int prev_hi = 0;
    for (int r = 1; r <= rc.length(); ++r) {
        auto [lo, hi] = nm.row_span(r);
        if (r > 1 && lo != prev_hi) return false;
        prev_hi = hi;
    }
    return true;
}

std::string SkewShape::str() const {
    if (cells_.empty()) return "(empty shape)";
    SkewShape nm = normalized();
    std::ostringstream os;
    int rmax = nm.max_row(), cmax = nm.max_col();
    std::set<std::pair<int, int>> occ;
    for (auto& c : nm.cells()) occ.insert({c.row, c.col});
    for (int r = rmax; r >= 1; --r) {
        for (int c = 1; c <= cmax; ++c)
            os << (occ.count({r, c}) ? "[]" : "  ");
        os << "\n";
    }
    return os.str();
}

SkewShape ribbon_shape(const Composition& alpha) {
    alpha.validate();
    if (alpha.empty()) throw UsageError("ribbon_shape: empty composition");
    std::vector<Cell> cells;
    int start = 1;
    for (int i = 0; i < alpha.length(); ++i) {
        int len = alpha.parts[i];
        for (int c = start; c < start + len; ++c) cells.push_back({i + 1, c});
        start = start + len - 1;  // next row begins over the last cell of this one
    }
    return SkewShape(std::move(cells));
}

SkewShape diagram_compose(const SkewShape& d, const SkewShape& dp, DiagramComposeKind kind) {
    if (d.empty() || dp.empty())
        throw UsageError("diagram_compose: empty diagram");
    SkewShape a = d.normalized();
    SkewShape b = dp.normalized();

    if (kind == DiagramComposeKind::concat) {
        // D must have a northeast-most corner cell, D' a southwest-most one
        Cell ne{a.max_row(), a.max_col()}, sw{b.min_row(), b.min_col()};
        auto has = [](const SkewShape& s, Cell c) {
            return std::binary_search(s.cells().begin(), s.cells().end(), c);
        };
        if (!has(a, ne) || !has(b, sw))
            throw UsageError("diagram_compose concat: missing corner cell");
    }

    int drow = 0, dcol = 0;
    switch (kind) {
        case DiagramComposeKind::disjoint_sum:
            drow = a.max_row();      // b's row 1 lands just above a's top row
            dcol = a.max_col();      // and strictly to the right
            break;
        case DiagramComposeKind::concat:
            drow = a.max_row();
            dcol = a.max_col() - 1;  // b's col 1 lands on a's rightmost column
            break;
        case DiagramComposeKind::near_concat:
            drow = a.max_row() - 1;  // b's row 1 lands on a's top row
            dcol = a.max_col();
            break;
    }
    std::vector<Cell> cells = a.cells();
    for (auto& c : b.cells()) cells.push_back({c.row + drow, c.col + dcol});
    SkewShape out(std::move(cells));
    if (out.cell_count() != a.cell_count() + b.cell_count())
        throw UsageError("diagram_compose: overlapping cells");
    return out;
}

bool is_column_increasing(const SkewShape& d, const std::vector<int>& entries) {
    const auto& cells = d.cells();
    std::map<int, std::vector<std::pair<int, int>>> cols;  // col -> (row, entry)
    for (size_t i = 0; i < cells.size(); ++i)
        cols[cells[i].col].push_back({cells[i].row, entries[i]});
    for (auto& [c, v] : cols) {
        auto w = v;
        std::sort(w.begin(), w.end());  // by row ascending = bottom to top
        for (size_t i = 0; i + 1 < w.size(); ++i)
            if (w[i + 1].second >= w[i].second) return false;  // higher cell must be smaller
    }
    return true;
}

bool is_ssyt(const SkewShape& d, const std::vector<int>& entries) {
    if (!is_column_increasing(d, entries)) return false;
    const auto& cells = d.cells();
    std::map<int, std::vector<std::pair<int, int>>> rows;  // row -> (col, entry)
    for (size_t i = 0; i < cells.size(); ++i)
        rows[cells[i].row].push_back({cells[i].col, entries[i]});
    for (auto& [r, v] : rows) {
        auto w = v;
        std::sort(w.begin(), w.end());
        for (size_t i = 0; i + 1 < w.size(); ++i)
            if (w[i].second > w[i + 1].second) return false;
    }
    return true;
}

namespace {

// Backtracking over cells in reading order.  For the partial-filling pruning
// we re-check only constraints that involve the just-assigned cell against
// earlier cells (cells earlier in reading order have lower row, or same row
// and lower column).
struct TableauEnumerator {
    const SkewShape& shape;
    int n;
    TableauKind kind;
    const std::vector<int>* content = nullptr;  // optional target content
    std::vector<int> remaining;                 // per value, when content given

    std::vector<Tableau> out;
    std::vector<int> entries;
    // nearest occupied cell below in the same column / to the left in the
    // same row, or -1; both predecessors come earlier in reading order
    std::vector<int> below;
    std::vector<int> left;

    explicit TableauEnumerator(const SkewShape& s, int n_, TableauKind k)
        : shape(s), n(n_), kind(k) {
        const auto& cells = shape.cells();
        below.assign(cells.size(), -1);
        left.assign(cells.size(), -1);
        std::map<int, std::vector<std::pair<int, int>>> by_col, by_row;
        for (size_t i = 0; i < cells.size(); ++i) {
            by_col[cells[i].col].push_back({cells[i].row, static_cast<int>(i)});
            by_row[cells[i].row].push_back({cells[i].col, static_cast<int>(i)});
        }
        for (auto& [c, v] : by_col)
            for (size_t j = 1; j < v.size(); ++j) below[v[j].second] = v[j - 1].second;
        for (auto& [r, v] : by_row)
            for (size_t j = 1; j < v.size(); ++j) left[v[j].second] = v[j - 1].second;
        entries.assign(cells.size(), 0);
    }

    bool admissible(size_t i, int v) const {
        // column: this cell sits above 'below[i]', so it must be smaller
        if (below[i] >= 0 && v >= entries[below[i]]) return false;
        if (kind == TableauKind::ssyt && left[i] >= 0 && v < entries[left[i]]) return false;
        return true;
    }

    void run(size_t i) {
        if (i == entries.size()) {
            if (content)
                for (int r : remaining)
                    if (r != 0) return;
            out.push_back(Tableau{shape, entries});
            return;
        }
        for (int v = 1; v <= n; ++v) {
            if (!admissible(i, v)) continue;
            if (content) {
                if (remaining[v - 1] == 0) continue;
                remaining[v - 1]--;
            }
            entries[i] = v;
            run(i + 1);
            if (content) remaining[v - 1]++;
        }
        entries[i] = 0;
    }
};

}  // namespace

std::vector<Tableau> enumerate_tableaux(const SkewShape& d, int n, TableauKind kind) {
    if (n < 1) throw UsageError("alphabet size must be >= 1");
    if (d.empty()) return {Tableau{d, {}}};
    TableauEnumerator e(d, n, kind);
    e.run(0);
    return std::move(e.out);
}

std::vector<Tableau> enumerate_tableaux_with_content(const SkewShape& d, int n,
                                                     TableauKind kind,
                                                     const std::vector<int>& content) {
    if (n < 1) throw UsageError("alphabet size must be >= 1");
    if (static_cast<int>(content.size()) != n)
        throw UsageError("content vector length must equal n");
    int total = 0;
    for (int c : content) total += c;
    if (total != d.cell_count()) return {};
    if (d.empty()) return {Tableau{d, {}}};
    TableauEnumerator e(d, n, kind);
    e.content = &content;
    e.remaining = content;
    e.run(0);
    return std::move(e.out);
}

std::string Tableau::str() const {
    std::ostringstream os;
    const auto& cells = shape.cells();
    std::map<std::pair<int, int>, int> val;
    for (size_t i = 0; i < cells.size(); ++i)
        val[{cells[i].row, cells[i].col}] = entries[i];
    for (int r = shape.max_row(); r >= shape.min_row(); --r) {
        for (int c = shape.min_col(); c <= shape.max_col(); ++c) {
            auto it = val.find({r, c});
            if (it == val.end())
                os << " .";
            else
                os << " " << it->second;
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace ribbonres
