#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace kohnert {

struct Cell {
    int row = 1;
    int col = 1;
    auto operator<=>(const Cell&) const = default;
};

// Finite set of cells, matrix convention (row 1 on top). Stored sorted by (row, col).
class Diagram {
public:
    Diagram() = default;
    Diagram(std::initializer_list<Cell> cells) : Diagram(std::vector<Cell>(cells)) {}
    explicit Diagram(std::vector<Cell> cells) : cells_(std::move(cells)) {
        for (const auto& c : cells_)
            if (c.row < 1 || c.col < 1)
                throw precondition_error("cell coordinates must be positive");
        std::sort(cells_.begin(), cells_.end());
        cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
    }

    const std::vector<Cell>& cells() const { return cells_; }
    auto begin() const { return cells_.begin(); }
    auto end() const { return cells_.end(); }
    std::size_t size() const { return cells_.size(); }
    bool empty() const { return cells_.empty(); }

    bool contains(int row, int col) const {
        return std::binary_search(cells_.begin(), cells_.end(), Cell{row, col});
    }
    bool contains(Cell c) const { return contains(c.row, c.col); }

    int max_row() const { return cells_.empty() ? 0 : cells_.back().row; }
    int max_col() const {
        int m = 0;
        for (const auto& c : cells_) m = std::max(m, c.col);
        return m;
    }
    int min_col() const {
        if (cells_.empty()) return 0;
        int m = cells_.front().col;
        for (const auto& c : cells_) m = std::min(m, c.col);
        return m;
    }

    std::vector<int> row(int r) const {
        std::vector<int> out;
        for (const auto& c : cells_)
            if (c.row == r) out.push_back(c.col);
        return out;
    }
    std::vector<int> column(int col) const {
        std::vector<int> out;
        for (const auto& c : cells_)
            if (c.col == col) out.push_back(c.row);
        return out;
    }

    auto operator<=>(const Diagram&) const = default;
    bool operator==(const Diagram&) const = default;

private:
    std::vector<Cell> cells_;
};

struct WeakComposition {
    std::vector<int> parts;

    WeakComposition() = default;
    WeakComposition(std::initializer_list<int> p) : WeakComposition(std::vector<int>(p)) {}
    explicit WeakComposition(std::vector<int> p) : parts(std::move(p)) {
        for (int x : parts)
            if (x < 0) throw precondition_error("weak composition parts must be nonnegative");
    }

    std::size_t size() const { return parts.size(); }
    // 1-based; zero past the end
    int operator()(int i) const {
        return i >= 1 && i <= static_cast<int>(parts.size()) ? parts[i - 1] : 0;
    }
    int total() const {
        int s = 0;
        for (int x : parts) s += x;
        return s;
    }
    auto operator<=>(const WeakComposition&) const = default;
};

inline WeakComposition padded(const WeakComposition& a, std::size_t n) {
    auto p = a.parts;
    if (p.size() < n) p.resize(n, 0);
    return WeakComposition(std::move(p));
}

inline WeakComposition trimmed(const WeakComposition& a) {
    auto p = a.parts;
    while (!p.empty() && p.back() == 0) p.pop_back();
    return WeakComposition(std::move(p));
}

inline bool same_weight(const WeakComposition& a, const WeakComposition& b) {
    return trimmed(a) == trimmed(b);
}

inline WeakComposition sort_decreasing(const WeakComposition& a) {
    auto p = a.parts;
    std::sort(p.begin(), p.end(), std::greater<>());
    return WeakComposition(std::move(p));
}

inline std::string to_string(const WeakComposition& a) {
    std::string s = "(";
    for (std::size_t i = 0; i < a.parts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(a.parts[i]);
    }
    return s + ")";
}

inline std::ostream& operator<<(std::ostream& os, const WeakComposition& a) { return os << to_string(a); }

inline WeakComposition add_alpha(const WeakComposition& a, int r, int s, int m) {
    if (r < 1 || r >= s) throw precondition_error("add_alpha needs 1 <= r < s");
    auto p = padded(a, static_cast<std::size_t>(s)).parts;
    p[r - 1] += m;
    p[s - 1] -= m;
    if (p[r - 1] < 0 || p[s - 1] < 0) throw precondition_error("add_alpha produced a negative entry");
    if (m == 0) return a;
    return WeakComposition(std::move(p));
}

class Permutation {
public:
    Permutation() = default;
    Permutation(std::initializer_list<int> w) : Permutation(std::vector<int>(w)) {}
    explicit Permutation(std::vector<int> one_line) : w_(std::move(one_line)) {
        std::vector<bool> seen(w_.size() + 1, false);
        for (int x : w_) {
            if (x < 1 || x > static_cast<int>(w_.size()) || seen[x])
                throw precondition_error("not a permutation");
            seen[x] = true;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> w(n);
        for (int i = 0; i < n; ++i) w[i] = i + 1;
        return Permutation(std::move(w));
    }

    // Product of the word s_{w_1} s_{w_2} ... read as composition on values.
    static Permutation from_word(const std::vector<int>& word, int n) {
        for (int i : word) n = std::max(n, i + 1);
        auto p = identity(n).w_;
        for (int i : word)
            for (int& x : p) {
                if (x == i) x = i + 1;
                else if (x == i + 1) x = i;
            }
        return Permutation(std::move(p));
    }

    int size() const { return static_cast<int>(w_.size()); }
    int operator()(int i) const { return i >= 1 && i <= size() ? w_[i - 1] : i; }
    const std::vector<int>& one_line() const { return w_; }

    Permutation inverse() const {
        std::vector<int> v(w_.size());
        for (std::size_t i = 0; i < w_.size(); ++i) v[w_[i] - 1] = static_cast<int>(i) + 1;
        return Permutation(std::move(v));
    }

    int length() const {
        int inv = 0;
        for (std::size_t i = 0; i < w_.size(); ++i)
            for (std::size_t j = i + 1; j < w_.size(); ++j)
                if (w_[i] > w_[j]) ++inv;
        return inv;
    }

    bool operator==(const Permutation& o) const {
        std::size_t n = std::max(w_.size(), o.w_.size());
        for (std::size_t i = 1; i <= n; ++i)
            if ((*this)(static_cast<int>(i)) != o(static_cast<int>(i))) return false;
        return true;
    }

private:
    std::vector<int> w_;
};

inline Permutation parse_permutation(std::string_view s) {
    std::vector<int> w;
    bool commas = s.find(',') != std::string_view::npos;
    if (commas) {
        std::string tok;
        std::stringstream ss{std::string(s)};
        while (std::getline(ss, tok, ','))
            if (!tok.empty()) w.push_back(std::stoi(tok));
    } else {
        for (char ch : s) {
            if (ch < '1' || ch > '9') throw parse_error(1, "bad permutation digit");
            w.push_back(ch - '0');
        }
    }
    return Permutation(std::move(w));
}

inline WeakComposition weight(const Diagram& d) {
    std::vector<int> p(static_cast<std::size_t>(d.max_row()), 0);
    for (const auto& c : d) ++p[c.row - 1];
    return WeakComposition(std::move(p));
}

inline WeakComposition column_weight(const Diagram& d) {
    std::vector<int> p(static_cast<std::size_t>(d.max_col()), 0);
    for (const auto& c : d) ++p[c.col - 1];
    return WeakComposition(std::move(p));
}

inline bool is_northwest(const Diagram& d) {
    for (const auto& lo : d)
        for (const auto& hi : d)
            if (hi.row < lo.row && lo.col < hi.col && !d.contains(hi.row, lo.col)) return false;
    return true;
}

inline bool is_percent_avoiding(const Diagram& d) {
    for (const auto& lo : d)
        for (const auto& hi : d)
            if (hi.row < lo.row && lo.col < hi.col && !d.contains(hi.row, lo.col) &&
                !d.contains(lo.row, hi.col))
                return false;
    return true;
}

inline Diagram key_diagram(const WeakComposition& a) {
    std::vector<Cell> cells;
    for (std::size_t i = 0; i < a.parts.size(); ++i)
        for (int j = 1; j <= a.parts[i]; ++j) cells.push_back({static_cast<int>(i) + 1, j});
    return Diagram(std::move(cells));
}

inline Diagram rothe_diagram(const Permutation& w) {
    auto winv = w.inverse();
    std::vector<Cell> cells;
    for (int i = 1; i <= w.size(); ++i)
        for (int j = 1; j < w(i); ++j)
            if (winv(j) > i) cells.push_back({i, j});
    return Diagram(std::move(cells));
}

inline Diagram swap_rows(const Diagram& d, int r) {
    if (r < 1) throw precondition_error("row index must be positive");
    std::vector<Cell> cells;
    cells.reserve(d.size());
    for (auto c : d) {
        if (c.row == r) c.row = r + 1;
        else if (c.row == r + 1) c.row = r;
        cells.push_back(c);
    }
    return Diagram(std::move(cells));
}

inline bool row_subset(const Diagram& d, int r) {
    if (r < 1) throw precondition_error("row index must be positive");
    for (int col : d.row(r))
        if (!d.contains(r + 1, col)) return false;
    return true;
}

inline std::optional<int> first_column_tower(const Diagram& d) {
    if (d.empty()) throw precondition_error("first_column_tower of the empty diagram");
    auto rows = d.column(d.min_col());
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (rows[i] != static_cast<int>(i) + 1) return std::nullopt;
    return static_cast<int>(rows.size());
}

inline Diagram remove_column(const Diagram& d, int col) {
    std::vector<Cell> cells;
    for (const auto& c : d)
        if (c.col != col) cells.push_back(c);
    return Diagram(std::move(cells));
}

// --- text formats ---

inline std::vector<std::string> split_lines(std::string_view text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char ch : text) {
        if (ch == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur += ch;
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    return lines;
}

inline Diagram parse_grid(std::string_view text) {
    auto lines = split_lines(text);
    std::vector<Cell> cells;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        int col = 0;
        for (char ch : lines[i]) {
            if (ch == ' ' || ch == '\t') continue;
            ++col;
            if (ch == '#') cells.push_back({static_cast<int>(i) + 1, col});
            else if (ch != '.')
                throw parse_error(static_cast<int>(i) + 1, std::string("unexpected character '") + ch + "'");
        }
    }
    return Diagram(std::move(cells));
}

// "r,c" entries separated by newlines or blanks
inline Diagram parse_cells(std::string_view text) {
    auto lines = split_lines(text);
    std::vector<Cell> cells;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        std::stringstream ss(lines[i]);
        std::string tok;
        int line_no = static_cast<int>(i) + 1;
        while (ss >> tok) {
            auto comma = tok.find(',');
            if (comma == std::string::npos) throw parse_error(line_no, "expected r,c but got '" + tok + "'");
            std::size_t used_r = 0, used_c = 0;
            int r = 0, c = 0;
            try {
                r = std::stoi(tok.substr(0, comma), &used_r);
                c = std::stoi(tok.substr(comma + 1), &used_c);
            } catch (const std::exception&) {
                throw parse_error(line_no, "expected r,c but got '" + tok + "'");
            }
            if (used_r != comma || used_c != tok.size() - comma - 1)
                throw parse_error(line_no, "expected r,c but got '" + tok + "'");
            if (r < 1 || c < 1) throw parse_error(line_no, "coordinates must be positive");
            cells.push_back({r, c});
        }
    }
    return Diagram(std::move(cells));
}

inline Diagram parse_diagram(std::string_view text) {
    if (text.find(',') != std::string_view::npos) return parse_cells(text);
    return parse_grid(text);
}

inline std::string render_grid(const Diagram& d) {
    std::string out;
    int w = d.max_col();
    for (int r = 1; r <= d.max_row(); ++r) {
        for (int c = 1; c <= w; ++c) out += d.contains(r, c) ? '#' : '.';
        out += '\n';
    }
    return out;
}

inline std::string render_cells(const Diagram& d) {
    std::string out;
    for (const auto& c : d) out += std::to_string(c.row) + "," + std::to_string(c.col) + "\n";
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const Diagram& d) {
    os << "{";
    bool first = true;
    for (const auto& c : d) {
        os << (first ? "" : ",") << "(" << c.row << "," << c.col << ")";
        first = false;
    }
    return os << "}";
}

}  // namespace kohnert
