#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "closure.hpp"
#include "diagram.hpp"
#include "errors.hpp"
#include "polynomial.hpp"

namespace kohnert {

using FlaggedFilling = std::map<Cell, int>;

inline WeakComposition filling_weight(const FlaggedFilling& t, int n) {
    std::vector<int> w(static_cast<std::size_t>(n), 0);
    for (const auto& [c, v] : t) ++w[v - 1];
    return WeakComposition(std::move(w));
}

// monomial in the z_{k,l}: sorted multiset of (k,l)
using ZMonomial = std::vector<std::pair<int, int>>;
using ZPolynomial = std::map<ZMonomial, Integer>;

inline ZPolynomial z_multiply(const ZPolynomial& a, const ZPolynomial& b) {
    ZPolynomial r;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            ZMonomial m;
            std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
            auto& slot = r[m];
            slot += ca * cb;
            if (slot == 0) r.erase(m);
        }
    return r;
}

struct OracleLimits {
    std::size_t max_cells = 6;
    int max_n = 4;
    std::size_t max_fillings = 20000;
};

// Visits flagged fillings with distinct column entries; f returns false to stop.
inline void for_each_flagged_filling(const Diagram& d, int n, const std::function<bool(const FlaggedFilling&)>& f) {
    if (d.max_row() > n) throw precondition_error("diagram has rows beyond n");
    const auto& cells = d.cells();
    std::vector<std::size_t> order(cells.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return cells[a].col < cells[b].col; });
    FlaggedFilling t;
    std::map<int, std::set<int>> used;  // column -> values
    bool stop = false;
    std::function<void(std::size_t)> go = [&](std::size_t k) {
        if (stop) return;
        if (k == order.size()) {
            stop = !f(t);
            return;
        }
        const Cell c = cells[order[k]];
        for (int v = 1; v <= std::min(c.row, n) && !stop; ++v) {
            if (used[c.col].count(v)) continue;
            used[c.col].insert(v);
            t[c] = v;
            go(k + 1);
            used[c.col].erase(v);
        }
        t.erase(c);
    };
    go(0);
}

inline std::vector<FlaggedFilling> enumerate_flagged_fillings(const Diagram& d, int n) {
    std::vector<FlaggedFilling> out;
    for_each_flagged_filling(d, n, [&](const FlaggedFilling& t) {
        out.push_back(t);
        return true;
    });
    return out;
}

// det(z_{a_i, b_j}) with every z_{k,l}, k > l, set to zero
inline ZPolynomial column_determinant(const std::vector<int>& values, const std::vector<int>& rows) {
    ZPolynomial r;
    std::vector<int> sigma(rows.size());
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
        bool zero = false;
        ZMonomial m;
        for (std::size_t k = 0; k < sigma.size() && !zero; ++k) {
            int a = values[k], b = rows[sigma[k]];
            if (a > b) zero = true;
            m.emplace_back(a, b);
        }
        if (zero) continue;
        int inversions = 0;
        for (std::size_t i = 0; i < sigma.size(); ++i)
            for (std::size_t j = i + 1; j < sigma.size(); ++j)
                if (sigma[i] > sigma[j]) ++inversions;
        std::sort(m.begin(), m.end());
        auto& slot = r[m];
        slot += inversions % 2 ? -1 : 1;
        if (slot == 0) r.erase(m);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return r;
}

inline ZPolynomial delta(const FlaggedFilling& t, const Diagram& d) {
    ZPolynomial r;
    r[{}] = 1;
    for (int c = 1; c <= d.max_col(); ++c) {
        auto rows = d.column(c);
        if (rows.empty()) continue;
        std::vector<int> values;
        for (int row : rows) {
            auto it = t.find({row, c});
            if (it == t.end()) throw precondition_error("filling does not cover the diagram");
            values.push_back(it->second);
        }
        r = z_multiply(r, column_determinant(values, rows));
        if (r.empty()) break;
    }
    return r;
}

// Fraction-free Gaussian elimination; every division is exact.
template <class Int>
std::size_t exact_rank(std::vector<std::vector<Int>> m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t rank = 0;
    Int prev = 1;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t p = rank;
        while (p < rows && m[p][col] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[rank]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j)
                m[i][j] = (m[rank][col] * m[i][j] - m[i][col] * m[rank][j]) / prev;
            m[i][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
    }
    return rank;
}

struct OracleResult {
    Polynomial character;
    std::map<WeakComposition, std::size_t> dimensions;
    std::size_t fillings = 0;
};

inline OracleResult flagged_character_report(const Diagram& d, int n, const OracleLimits& lim = {}) {
    if (d.max_row() > n) throw precondition_error("diagram has rows beyond n");
    if (d.size() > lim.max_cells || n > lim.max_n)
        throw scale_limit_error("oracle limited to " + std::to_string(lim.max_cells) + " cells and n <= " +
                                std::to_string(lim.max_n));
    std::map<WeakComposition, std::vector<ZPolynomial>> groups;
    OracleResult out;
    for_each_flagged_filling(d, n, [&](const FlaggedFilling& t) {
        if (++out.fillings > lim.max_fillings) return false;
        auto z = delta(t, d);
        if (!z.empty()) groups[filling_weight(t, n)].push_back(std::move(z));
        return true;
    });
    if (out.fillings > lim.max_fillings)
        throw scale_limit_error("oracle limited to " + std::to_string(lim.max_fillings) + " fillings");
    out.character = Polynomial(n);
    for (const auto& [w, vecs] : groups) {
        std::map<ZMonomial, std::size_t> index;
        for (const auto& z : vecs)
            for (const auto& [m, c] : z) index.emplace(m, 0);
        std::size_t k = 0;
        for (auto& [m, idx] : index) idx = k++;
        std::vector<std::vector<Integer>> mat(vecs.size(), std::vector<Integer>(index.size(), 0));
        for (std::size_t i = 0; i < vecs.size(); ++i)
            for (const auto& [m, c] : vecs[i]) mat[i][index[m]] = c;
        auto rank = exact_rank(std::move(mat));
        out.dimensions[w] = rank;
        out.character.add_term(w.parts, rank);
    }
    return out;
}

inline Polynomial flagged_character(const Diagram& d, int n, const OracleLimits& lim = {}) {
    return flagged_character_report(d, n, lim).character;
}

inline Polynomial flagged_character(const Diagram& d) { return flagged_character(d, std::max(d.max_row(), 1)); }

inline FlaggedFilling a1_filling(const Diagram& d, int r, int s, const std::set<int>& cols) {
    if (r < 1 || r >= s) throw precondition_error("a1_filling needs 1 <= r < s");
    FlaggedFilling t;
    for (const auto& c : d) t[c] = c.row;
    for (int j : cols) {
        if (!d.contains(s, j) || d.contains(r, j))
            throw precondition_error("column " + std::to_string(j) + " needs a cell in row s and none in row r");
        auto a = d.column(j);
        std::size_t k = 0;
        while (a[k] <= r) ++k;
        std::size_t l = static_cast<std::size_t>(std::find(a.begin(), a.end(), s) - a.begin());
        std::vector<int> v = a;
        v[k] = r;
        for (std::size_t i = k + 1; i <= l; ++i) v[i] = a[i - 1];
        for (std::size_t i = 0; i < a.size(); ++i) t[{a[i], j}] = v[i];
    }
    return t;
}

struct TightnessWitness {
    int r = 0, s = 0, K = 0;
    Cell y, z;
    std::set<int> columns;
    WeakComposition monomial;
    FlaggedFilling filling;
};

inline TightnessWitness tightness_witness(const Diagram& d) {
    if (!is_percent_avoiding(d) || is_northwest(d))
        throw precondition_error("tightness_witness needs a %-avoiding diagram that is not northwest");
    TightnessWitness w;
    for (const auto& lo : d)
        for (const auto& hi : d) {
            if (!(hi.row < lo.row && lo.col < hi.col) || d.contains(hi.row, lo.col)) continue;
            int gap = lo.row - hi.row;
            if (w.s == 0 || gap < w.s - w.r || (gap == w.s - w.r && hi.row < w.r)) {
                w.r = hi.row;
                w.s = lo.row;
            }
        }
    const auto row_r = d.row(w.r), row_s = d.row(w.s);
    bool found = false;
    for (int c : row_s)
        if (!d.contains(w.r, c) && row_r.back() > c) {
            w.y = {w.s, c};
            found = true;
        }
    if (!found) throw verification_error("no cell y found for the chosen rows");
    for (int c : row_s)
        if (c >= w.y.col && !d.contains(w.r, c)) w.columns.insert(c);
    w.K = static_cast<int>(w.columns.size());
    w.z = {w.s, row_s[row_s.size() - static_cast<std::size_t>(w.K)]};
    w.monomial = add_alpha(padded(weight(d), static_cast<std::size_t>(d.max_row())), w.r, w.s, w.K);
    w.filling = a1_filling(d, w.r, w.s, w.columns);
    if (!same_weight(filling_weight(w.filling, d.max_row()), w.monomial))
        throw verification_error("a1 filling has the wrong weight");
    if (delta(w.filling, d).empty()) throw verification_error("a1 filling has vanishing determinant product");
    if (kohnert_polynomial(d).coefficient(w.monomial) != 0)
        throw verification_error("witness monomial occurs in the Kohnert polynomial");
    return w;
}

}  // namespace kohnert
