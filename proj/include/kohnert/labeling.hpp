#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "diagram.hpp"
#include "errors.hpp"

namespace kohnert {

using LabeledDiagram = std::map<Cell, int>;

inline Diagram cells_of(const LabeledDiagram& l) {
    std::vector<Cell> cells;
    for (const auto& [c, v] : l) cells.push_back(c);
    return Diagram(std::move(cells));
}

inline bool is_flagged(const LabeledDiagram& l) {
    for (const auto& [c, v] : l)
        if (v < c.row) return false;
    return true;
}

inline std::string render_labeled(const LabeledDiagram& l) {
    auto d = cells_of(l);
    std::string out;
    for (int r = 1; r <= d.max_row(); ++r) {
        for (int c = 1; c <= d.max_col(); ++c) {
            auto it = l.find({r, c});
            if (it == l.end()) out += '.';
            else if (it->second < 10) out += static_cast<char>('0' + it->second);
            else out += static_cast<char>('a' + it->second - 10);
        }
        out += '\n';
    }
    return out;
}

namespace detail {

inline void require_same_columns(const Diagram& t, const Diagram& d) {
    if (trimmed(column_weight(t)) != trimmed(column_weight(d)))
        throw precondition_error("column weights differ");
}

inline std::optional<int> label_row(const LabeledDiagram& l, int label, int col) {
    for (const auto& [c, v] : l)
        if (c.col == col && v == label) return c.row;
    return std::nullopt;
}

}  // namespace detail

// ---------- left-justified labeling ----------

inline std::optional<LabeledDiagram> label_left(const Diagram& t, const WeakComposition& a) {
    detail::require_same_columns(t, key_diagram(a));
    LabeledDiagram l;
    for (int c = t.max_col(); c >= 1; --c) {
        std::vector<int> labels;
        for (int i = 1; i <= static_cast<int>(a.size()); ++i)
            if (a(i) >= c) labels.push_back(i);
        for (int row : t.column(c)) {
            auto pick = labels.end();
            for (auto it = labels.begin(); it != labels.end(); ++it) {
                auto right = detail::label_row(l, *it, c + 1);
                if (!right || *right <= row) {
                    pick = it;
                    break;
                }
            }
            if (pick == labels.end()) return std::nullopt;
            l[{row, c}] = *pick;
            labels.erase(pick);
        }
    }
    return l;
}

inline bool is_kohnert_tableau(const LabeledDiagram& l, const WeakComposition& a) {
    const int n = static_cast<int>(a.size());
    std::map<std::pair<int, int>, std::vector<int>> where;  // (label, col) -> rows
    for (const auto& [c, v] : l) {
        if (v < 1 || v > n) return false;
        where[{v, c.col}].push_back(c.row);
    }
    for (const auto& [key, rows] : where)
        if (key.second > a(key.first) || rows.size() != 1) return false;
    for (int i = 1; i <= n; ++i)
        for (int c = 1; c <= a(i); ++c)
            if (!where.count({i, c})) return false;
    if (!is_flagged(l)) return false;
    for (int i = 1; i <= n; ++i)
        for (int c = 1; c < a(i); ++c)
            if (where[{i, c + 1}][0] > where[{i, c}][0]) return false;
    for (const auto& [ci, i] : l)
        for (const auto& [cj, j] : l) {
            if (ci.col != cj.col || i >= j || ci.row <= cj.row) continue;
            auto right = where.find({i, ci.col + 1});
            if (right == where.end() || right->second[0] <= cj.row) return false;
        }
    return true;
}

inline bool member_left(const Diagram& t, const WeakComposition& a) {
    if (trimmed(column_weight(t)) != trimmed(column_weight(key_diagram(a)))) return false;
    auto l = label_left(t, a);
    return l && is_flagged(*l);
}

// ---------- column pairing and rectification ----------

struct ColumnPairing {
    std::vector<std::pair<Cell, Cell>> pairs;  // (column i cell, column i+1 cell)
    std::vector<Cell> unpaired_left;           // column i, bottom to top
    std::vector<Cell> unpaired_right;          // column i+1, bottom to top
};

// Rows scanned bottom to top; in a row the column-i cell comes first. A
// column-(i+1) cell pairs with the nearest open column-i cell weakly below it.
inline ColumnPairing column_pair(const Diagram& t, int i) {
    if (i < 1) throw precondition_error("column index must be positive");
    auto left = t.column(i), right = t.column(i + 1);
    std::vector<int> rows = left;
    rows.insert(rows.end(), right.begin(), right.end());
    std::sort(rows.begin(), rows.end(), std::greater<>());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    ColumnPairing p;
    std::vector<Cell> open;
    for (int r : rows) {
        if (std::binary_search(left.begin(), left.end(), r)) open.push_back({r, i});
        if (std::binary_search(right.begin(), right.end(), r)) {
            if (open.empty()) {
                p.unpaired_right.push_back({r, i + 1});
            } else {
                p.pairs.emplace_back(open.back(), Cell{r, i + 1});
                open.pop_back();
            }
        }
    }
    p.unpaired_left = open;
    return p;
}

inline Diagram rect_step(const Diagram& t, int i) {
    auto p = column_pair(t, i);
    if (p.unpaired_right.empty()) return t;
    Cell x = p.unpaired_right.back();
    std::vector<Cell> cells = t.cells();
    for (auto& c : cells)
        if (c == x) c.col = i;
    return Diagram(std::move(cells));
}

inline Diagram rectify(Diagram t) {
    for (bool changed = true; changed;) {
        changed = false;
        for (int i = 1; i < t.max_col() && !changed; ++i) {
            auto u = rect_step(t, i);
            if (!(u == t)) {
                t = std::move(u);
                changed = true;
            }
        }
    }
    return t;
}

namespace detail {

// Rectification of columns >= base, carrying labels. A moved label that already
// occurs in the target column displaces the label of that cell's column partner,
// which is then carried on in its place.
inline LabeledDiagram label_rectify(LabeledDiagram cur, int base) {
    for (bool changed = true; changed;) {
        changed = false;
        auto shape = cells_of(cur);
        for (int i = base; i < shape.max_col() && !changed; ++i) {
            auto p = column_pair(shape, i);
            if (p.unpaired_right.empty()) continue;
            Cell x = p.unpaired_right.back();
            int l = cur.at(x);
            cur.erase(x);
            std::map<int, Cell> partner;
            for (const auto& [y, z] : p.pairs) partner[y.row] = z;
            for (;;) {
                auto y = label_row(cur, l, i);
                if (!y || !partner.count(*y)) break;
                Cell z = partner[*y];
                int next = cur.at(z);
                cur[z] = l;
                l = next;
            }
            cur[{x.row, i}] = l;
            changed = true;
        }
    }
    return cur;
}

}  // namespace detail

// ---------- northwest labeling ----------

inline std::optional<LabeledDiagram> label_northwest(const Diagram& t, const Diagram& d) {
    if (!is_northwest(d)) throw precondition_error("label_northwest needs a northwest diagram");
    detail::require_same_columns(t, d);
    LabeledDiagram l;
    for (int c = t.max_col(); c >= 1; --c) {
        auto labels = d.column(c);
        auto cells = t.column(c);
        std::map<int, int> z;  // label -> row of that label in column c+1 after rectification
        if (!cells.empty()) {
            LabeledDiagram suffix;
            int leftmost = 0;
            for (const auto& [cell, v] : l)
                if (cell.col > c && (leftmost == 0 || cell.col < leftmost)) leftmost = cell.col;
            if (leftmost) {
                int shift = leftmost - (c + 1);
                for (const auto& [cell, v] : l)
                    if (cell.col > c) suffix[{cell.row, cell.col - shift}] = v;
                suffix = detail::label_rectify(std::move(suffix), c + 1);
                for (const auto& [cell, v] : suffix)
                    if (cell.col == c + 1 && !z.emplace(v, cell.row).second) return std::nullopt;
            }
        }
        std::vector<bool> used(cells.size(), false);
        for (int r : labels) {
            auto it = z.find(r);
            std::size_t k = 0;
            while (k < cells.size() && (used[k] || (it != z.end() && cells[k] < it->second))) ++k;
            if (k == cells.size()) return std::nullopt;
            used[k] = true;
            l[{cells[k], c}] = r;
        }
    }
    return l;
}

inline bool member_northwest(const Diagram& t, const Diagram& d) {
    if (!is_northwest(d)) throw precondition_error("member_northwest needs a northwest diagram");
    if (trimmed(column_weight(t)) != trimmed(column_weight(d))) return false;
    auto l = label_northwest(t, d);
    return l && is_flagged(*l);
}

}  // namespace kohnert
