#pragma once

// Compositions, skew diagrams, ribbons, diagram composition, and tableau
// enumeration.  Row 1 is the bottom row throughout; ribbon row sizes are read
// bottom-to-top.  Column entries of a tableau increase strictly top-to-bottom
// (so the cell in the higher row carries the smaller entry), rows increase
// weakly left-to-right.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ribbonres/arith.hpp"

namespace ribbonres {

struct Composition {
    std::vector<int> parts;

    Composition() = default;
    Composition(std::initializer_list<int> p) : parts(p) { validate(); }
    explicit Composition(std::vector<int> p) : parts(std::move(p)) { validate(); }

    // the empty part list is allowed as a value (the row list of the empty
    // shape); operations that need nonempty input check for themselves
    void validate() const {
        for (int a : parts)
            if (a < 1) throw UsageError("invalid composition: part < 1");
    }
    bool empty() const { return parts.empty(); }

    int size() const {
        int s = 0;
        for (int a : parts) s += a;
        return s;
    }
    int length() const { return static_cast<int>(parts.size()); }
    bool operator==(const Composition&) const = default;

    Composition reversed() const {
        auto p = parts;
        std::reverse(p.begin(), p.end());
        return Composition(std::move(p));
    }

    std::string str() const {
        std::string s = "(";
        for (size_t i = 0; i < parts.size(); ++i)
            s += (i ? "," : "") + std::to_string(parts[i]);
        return s + ")";
    }
};

enum class ComposeKind { concat, near_concat };
enum class DiagramComposeKind { disjoint_sum, concat, near_concat };

inline Composition compose(const Composition& a, const Composition& b, ComposeKind kind) {
    if (a.empty() || b.empty()) throw UsageError("compose: empty composition");
    std::vector<int> parts = a.parts;
    if (kind == ComposeKind::concat) {
        parts.insert(parts.end(), b.parts.begin(), b.parts.end());
    } else {
        parts.back() += b.parts.front();
        parts.insert(parts.end(), b.parts.begin() + 1, b.parts.end());
    }
    return Composition(std::move(parts));
}

inline Composition concat(const Composition& a, const Composition& b) {
    return compose(a, b, ComposeKind::concat);
}
inline Composition near_concat(const Composition& a, const Composition& b) {
    return compose(a, b, ComposeKind::near_concat);
}

struct Cell {
    int row = 0, col = 0;  // 1-based, row 1 = bottom
    auto operator<=>(const Cell&) const = default;
};

class SkewShape {
  public:
    SkewShape() = default;
    explicit SkewShape(std::vector<Cell> cells) : cells_(std::move(cells)) {
        std::sort(cells_.begin(), cells_.end());
        cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
    }

    const std::vector<Cell>& cells() const { return cells_; }
    int cell_count() const { return static_cast<int>(cells_.size()); }
    bool empty() const { return cells_.empty(); }
    bool operator==(const SkewShape&) const = default;

    int min_row() const;
    int max_row() const;
    int min_col() const;
    int max_col() const;

    // translate so that min row = min col = 1
    SkewShape normalized() const;
    SkewShape transposed() const;   // (r,c) -> (c,r), then normalized
    SkewShape rotated180() const;

    // row sizes bottom-to-top; throws if some row is not a contiguous interval
    Composition rows() const;
    Composition col_sizes() const;  // left-to-right column sizes

    // column interval [first,last] of row r (requires contiguity)
    std::pair<int, int> row_span(int r) const;

    // cells of each column, ordered top-to-bottom (row descending)
    std::vector<std::vector<Cell>> columns_top_to_bottom() const;

    // English-convention partition pair with lambda_i = right end of the
    // i-th row from the top, mu_i = left end - 1; throws for shapes that are
    // not of skew form
    std::pair<std::vector<int>, std::vector<int>> as_lambda_mu() const;
    bool is_skew() const;

    bool is_ribbon() const;

    // cells in reading order (rows bottom-to-top, left-to-right);
    // identical to cells() because of the sort order
    const std::vector<Cell>& reading_order() const { return cells_; }

    std::string str() const;

  private:
    std::vector<Cell> cells_;  // sorted by (row, col)
};

SkewShape ribbon_shape(const Composition& alpha);
SkewShape diagram_compose(const SkewShape& d, const SkewShape& dp, DiagramComposeKind kind);

enum class TableauKind { column_increasing, ssyt };

struct Tableau {
    SkewShape shape;
    std::vector<int> entries;  // aligned with shape.cells() (= reading order)

    int entry(size_t cell_index) const { return entries[cell_index]; }

    // exponent vector of the content monomial x_T, length n
    std::vector<int> content(int n) const {
        std::vector<int> c(n, 0);
        for (int e : entries) c[e - 1]++;
        return c;
    }
    bool operator==(const Tableau&) const = default;
    std::string str() const;
};

// Exhaustive, duplicate-free, in lexicographic reading-word order.
std::vector<Tableau> enumerate_tableaux(const SkewShape& d, int n, TableauKind kind);

// Only tableaux whose content equals the given exponent vector (length n).
std::vector<Tableau> enumerate_tableaux_with_content(const SkewShape& d, int n,
                                                     TableauKind kind,
                                                     const std::vector<int>& content);

bool is_column_increasing(const SkewShape& d, const std::vector<int>& entries);
bool is_ssyt(const SkewShape& d, const std::vector<int>& entries);

// ---------------------------------------------------------------------------
// inline implementations

inline int SkewShape::min_row() const {
    int m = INT32_MAX;
    for (auto& c : cells_) m = std::min(m, c.row);
    return m;
}
inline int SkewShape::max_row() const {
    int m = INT32_MIN;
    for (auto& c : cells_) m = std::max(m, c.row);
    return m;
}
inline int SkewShape::min_col() const {
    int m = INT32_MAX;
    for (auto& c : cells_) m = std::min(m, c.col);
    return m;
}
inline int SkewShape::max_col() const {
    int m = INT32_MIN;
    for (auto& c : cells_) m = std::max(m, c.col);
    return m;
}

inline SkewShape SkewShape::normalized() const {
    if (cells_.empty()) return *this;
    int dr = min_row() - 1, dc = min_col() - 1;
    std::vector<Cell> out;
    out.reserve(cells_.size());
    for (auto& c : cells_) out.push_back({c.row - dr, c.col - dc});
    return SkewShape(std::move(out));
}

inline SkewShape SkewShape::transposed() const {
    std::vector<Cell> out;
    out.reserve(cells_.size());
    for (auto& c : cells_) out.push_back({c.col, c.row});
    return SkewShape(std::move(out)).normalized();
}

inline SkewShape SkewShape::rotated180() const {
    std::vector<Cell> out;
    out.reserve(cells_.size());
    for (auto& c : cells_) out.push_back({-c.row, -c.col});
    return SkewShape(std::move(out)).normalized();
}

}  // namespace ribbonres
