#pragma once

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "closure.hpp"
#include "diagram.hpp"
#include "polynomial.hpp"

namespace kohnert {

// ---------- diagrams ----------

struct DiagramPairing {
    std::vector<std::pair<Cell, Cell>> pairs;  // (row i cell, row i+1 cell)
    std::vector<Cell> unpaired_upper;          // row i, left to right
    std::vector<Cell> unpaired_lower;          // row i+1, left to right
};

// Columns scanned left to right; within a column the row-i cell comes first.
// A row-(i+1) cell closes the nearest open row-i cell weakly to its left.
inline DiagramPairing pair_diagram(const Diagram& t, int i) {
    if (i < 1) throw precondition_error("color must be positive");
    DiagramPairing p;
    auto upper = t.row(i), lower = t.row(i + 1);
    std::vector<int> cols = upper;
    cols.insert(cols.end(), lower.begin(), lower.end());
    std::sort(cols.begin(), cols.end());
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    std::vector<Cell> open;
    for (int c : cols) {
        if (std::binary_search(upper.begin(), upper.end(), c)) open.push_back({i, c});
        if (std::binary_search(lower.begin(), lower.end(), c)) {
            if (open.empty()) {
                p.unpaired_lower.push_back({i + 1, c});
            } else {
                p.pairs.emplace_back(open.back(), Cell{i + 1, c});
                open.pop_back();
            }
        }
    }
    p.unpaired_upper = open;
    return p;
}

inline Diagram move_cell(const Diagram& t, Cell from, Cell to) {
    std::vector<Cell> cells = t.cells();
    for (auto& c : cells)
        if (c == from) c = to;
    return Diagram(std::move(cells));
}

inline std::optional<Diagram> raise_diagram(const Diagram& t, int i) {
    auto p = pair_diagram(t, i);
    if (p.unpaired_lower.empty()) return std::nullopt;
    Cell x = p.unpaired_lower.back();
    return move_cell(t, x, {i, x.col});
}

inline std::optional<Diagram> lower_diagram(const Diagram& t, int i) {
    auto p = pair_diagram(t, i);
    if (p.unpaired_upper.empty()) return std::nullopt;
    Cell x = p.unpaired_upper.front();
    return move_cell(t, x, {i + 1, x.col});
}

// ---------- tableaux (French: rows[0] is the bottom row) ----------

struct Tableau {
    std::vector<std::vector<int>> rows;

    WeakComposition shape() const {
        std::vector<int> s;
        for (const auto& r : rows) s.push_back(static_cast<int>(r.size()));
        return WeakComposition(std::move(s));
    }
    bool is_semistandard() const {
        for (std::size_t k = 0; k < rows.size(); ++k) {
            if (k > 0 && rows[k].size() > rows[k - 1].size()) return false;
            for (std::size_t c = 0; c < rows[k].size(); ++c) {
                if (rows[k][c] < 1) return false;
                if (c > 0 && rows[k][c] < rows[k][c - 1]) return false;
                if (k > 0 && rows[k][c] <= rows[k - 1][c]) return false;
            }
        }
        return true;
    }
    auto operator<=>(const Tableau&) const = default;
};

inline WeakComposition weight(const Tableau& t, int n) {
    std::vector<int> w(static_cast<std::size_t>(n), 0);
    for (const auto& r : t.rows)
        for (int x : r) {
            if (x > n) throw precondition_error("tableau entry exceeds n");
            ++w[x - 1];
        }
    return WeakComposition(std::move(w));
}

inline Tableau highest_weight_tableau(const WeakComposition& lambda) {
    Tableau t;
    for (std::size_t k = 0; k < lambda.size(); ++k)
        if (lambda.parts[k] > 0) t.rows.emplace_back(lambda.parts[k], static_cast<int>(k) + 1);
    return t;
}

inline std::vector<Tableau> enumerate_ssyt(const WeakComposition& lambda, int n) {
    std::vector<int> shape;
    for (int x : lambda.parts)
        if (x > 0) shape.push_back(x);
    for (std::size_t k = 1; k < shape.size(); ++k)
        if (shape[k] > shape[k - 1]) throw precondition_error("shape must be a partition");
    std::vector<Tableau> out;
    Tableau t;
    for (int len : shape) t.rows.emplace_back(len, 0);
    std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t k, std::size_t c) {
        if (k == shape.size()) {
            out.push_back(t);
            return;
        }
        if (c == t.rows[k].size()) {
            fill(k + 1, 0);
            return;
        }
        int lo = 1;
        if (c > 0) lo = std::max(lo, t.rows[k][c - 1]);
        if (k > 0) lo = std::max(lo, t.rows[k - 1][c] + 1);
        for (int v = lo; v <= n; ++v) {
            t.rows[k][c] = v;
            fill(k, c + 1);
        }
    };
    fill(0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

// position of a cell: (row index from the bottom, column index), both 0-based
using TableauPos = std::pair<std::size_t, std::size_t>;

// columns left to right, each read top to bottom
inline std::vector<TableauPos> column_reading_order(const Tableau& t) {
    std::vector<TableauPos> order;
    std::size_t width = t.rows.empty() ? 0 : t.rows[0].size();
    for (std::size_t c = 0; c < width; ++c)
        for (std::size_t k = t.rows.size(); k-- > 0;)
            if (c < t.rows[k].size()) order.emplace_back(k, c);
    return order;
}

struct TableauPairing {
    std::vector<std::pair<TableauPos, TableauPos>> pairs;  // (i+1, i)
    std::vector<TableauPos> unpaired_i;                    // in reading order
    std::vector<TableauPos> unpaired_next;
};

// an i+1 opens, a later i closes
inline TableauPairing pair_tableau(const Tableau& t, int i) {
    TableauPairing p;
    std::vector<TableauPos> open;
    for (auto pos : column_reading_order(t)) {
        int v = t.rows[pos.first][pos.second];
        if (v == i + 1) {
            open.push_back(pos);
        } else if (v == i) {
            if (open.empty()) {
                p.unpaired_i.push_back(pos);
            } else {
                p.pairs.emplace_back(open.back(), pos);
                open.pop_back();
            }
        }
    }
    p.unpaired_next = open;
    return p;
}

inline std::optional<Tableau> lower_tableau(const Tableau& t, int i) {
    auto p = pair_tableau(t, i);
    if (p.unpaired_i.empty()) return std::nullopt;
    Tableau u = t;
    auto [k, c] = p.unpaired_i.back();
    u.rows[k][c] = i + 1;
    if (!u.is_semistandard()) throw verification_error("f_i produced a non-semistandard tableau");
    return u;
}

inline std::optional<Tableau> raise_tableau(const Tableau& t, int i) {
    auto p = pair_tableau(t, i);
    if (p.unpaired_next.empty()) return std::nullopt;
    Tableau u = t;
    auto [k, c] = p.unpaired_next.front();
    u.rows[k][c] = i;
    if (!u.is_semistandard()) throw verification_error("e_i produced a non-semistandard tableau");
    return u;
}

// ---------- generic crystal machinery ----------

template <class V>
struct CrystalOps;

template <>
struct CrystalOps<Diagram> {
    static std::optional<Diagram> raise(const Diagram& v, int i) { return raise_diagram(v, i); }
    static std::optional<Diagram> lower(const Diagram& v, int i) { return lower_diagram(v, i); }
    static WeakComposition wt(const Diagram& v, int n) { return padded(weight(v), static_cast<std::size_t>(n)); }
};

template <>
struct CrystalOps<Tableau> {
    static std::optional<Tableau> raise(const Tableau& v, int i) { return raise_tableau(v, i); }
    static std::optional<Tableau> lower(const Tableau& v, int i) { return lower_tableau(v, i); }
    static WeakComposition wt(const Tableau& v, int n) { return weight(v, n); }
};

template <class V>
std::set<V> demazure_set_op(const std::set<V>& xs, int i) {
    std::set<V> out = xs;
    for (const auto& x : xs) {
        auto y = CrystalOps<V>::lower(x, i);
        while (y) {
            out.insert(*y);
            y = CrystalOps<V>::lower(*y, i);
        }
    }
    return out;
}

template <class V>
std::set<V> demazure_word(std::set<V> xs, const std::vector<int>& word) {
    for (auto it = word.rbegin(); it != word.rend(); ++it) xs = demazure_set_op(xs, *it);
    return xs;
}

inline std::set<Tableau> demazure_crystal(const WeakComposition& lambda, const WeakComposition& a, int n) {
    if (!same_weight(sort_decreasing(a), lambda))
        throw precondition_error("lambda must be the decreasing rearrangement of a");
    if (static_cast<int>(trimmed(a).size()) > n || static_cast<int>(trimmed(lambda).size()) > n)
        throw precondition_error("composition longer than n");
    return demazure_word(std::set<Tableau>{highest_weight_tableau(lambda)}, sorting_permutation(a).word);
}

template <class V>
struct CrystalGraph {
    int n = 0;  // colors 1..n-1
    std::vector<V> vertices;
    std::vector<std::map<int, std::size_t>> lower;  // f_i edges
    std::vector<std::map<int, std::size_t>> raise;  // e_i edges
    std::size_t highest = 0;

    std::size_t size() const { return vertices.size(); }
    std::optional<std::size_t> index_of(const V& v) const {
        auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
        if (it == vertices.end() || !(*it == v)) return std::nullopt;
        return static_cast<std::size_t>(it - vertices.begin());
    }
    Polynomial character() const {
        Polynomial f(n);
        for (const auto& v : vertices) f.add_term(CrystalOps<V>::wt(v, n).parts, 1);
        return f;
    }
    WeakComposition highest_weight() const { return CrystalOps<V>::wt(vertices[highest], n); }
};

template <class V>
bool is_highest_weight(const V& v, int n) {
    for (int i = 1; i < n; ++i)
        if (CrystalOps<V>::raise(v, i)) return false;
    return true;
}

// Connected components of the colored graph induced on xs. Highest weight means
// every e_i is undefined, not merely undefined inside xs.
template <class V, class Range>
std::vector<CrystalGraph<V>> components(const Range& xs, int n) {
    std::vector<V> verts(xs.begin(), xs.end());
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    const std::size_t m = verts.size();
    auto find = [&](const V& v) -> std::optional<std::size_t> {
        auto it = std::lower_bound(verts.begin(), verts.end(), v);
        if (it == verts.end() || !(*it == v)) return std::nullopt;
        return static_cast<std::size_t>(it - verts.begin());
    };
    std::vector<std::map<int, std::size_t>> down(m), up(m);
    std::vector<std::vector<std::size_t>> adj(m);
    for (std::size_t k = 0; k < m; ++k)
        for (int i = 1; i < n; ++i) {
            if (auto f = CrystalOps<V>::lower(verts[k], i))
                if (auto j = find(*f)) {
                    down[k][i] = *j;
                    adj[k].push_back(*j);
                }
            if (auto e = CrystalOps<V>::raise(verts[k], i))
                if (auto j = find(*e)) {
                    up[k][i] = *j;
                    adj[k].push_back(*j);
                }
        }
    std::vector<long> comp(m, -1);
    std::vector<CrystalGraph<V>> out;
    for (std::size_t s = 0; s < m; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<std::size_t> members;
        std::deque<std::size_t> q{s};
        comp[s] = static_cast<long>(out.size());
        while (!q.empty()) {
            auto k = q.front();
            q.pop_front();
            members.push_back(k);
            for (auto j : adj[k])
                if (comp[j] < 0) {
                    comp[j] = comp[s];
                    q.push_back(j);
                }
        }
        std::sort(members.begin(), members.end());
        std::map<std::size_t, std::size_t> local;
        for (std::size_t t = 0; t < members.size(); ++t) local[members[t]] = t;
        CrystalGraph<V> g;
        g.n = n;
        g.lower.resize(members.size());
        g.raise.resize(members.size());
        std::size_t hw_count = 0;
        for (std::size_t t = 0; t < members.size(); ++t) {
            g.vertices.push_back(verts[members[t]]);
            for (auto [i, j] : down[members[t]]) g.lower[t][i] = local.at(j);
            for (auto [i, j] : up[members[t]]) g.raise[t][i] = local.at(j);
            if (is_highest_weight(verts[members[t]], n)) {
                g.highest = t;
                ++hw_count;
            }
        }
        if (hw_count != 1)
            throw verification_error("crystal component with " + std::to_string(hw_count) +
                                     " highest weight vertices");
        out.push_back(std::move(g));
    }
    return out;
}

template <class V, class W>
bool crystal_isomorphic(const CrystalGraph<V>& g, const CrystalGraph<W>& h) {
    if (g.size() != h.size() || g.size() == 0) return g.size() == h.size();
    if (!same_weight(g.highest_weight(), h.highest_weight())) return false;
    const int n = std::max(g.n, h.n);
    std::vector<long> to_h(g.size(), -1), to_g(h.size(), -1);
    std::deque<std::pair<std::size_t, std::size_t>> q;
    to_h[g.highest] = static_cast<long>(h.highest);
    to_g[h.highest] = static_cast<long>(g.highest);
    q.emplace_back(g.highest, h.highest);
    auto link = [&](std::size_t a, std::size_t b) {
        if (to_h[a] < 0 && to_g[b] < 0) {
            to_h[a] = static_cast<long>(b);
            to_g[b] = static_cast<long>(a);
            q.emplace_back(a, b);
            return true;
        }
        return to_h[a] == static_cast<long>(b) && to_g[b] == static_cast<long>(a);
    };
    while (!q.empty()) {
        auto [a, b] = q.front();
        q.pop_front();
        for (int i = 1; i < n; ++i) {
            for (auto edges : {std::make_pair(&g.lower, &h.lower), std::make_pair(&g.raise, &h.raise)}) {
                const auto& ea = (*edges.first)[a];
                const auto& eb = (*edges.second)[b];
                auto ia = ea.find(i);
                auto ib = eb.find(i);
                if ((ia == ea.end()) != (ib == eb.end())) return false;
                if (ia != ea.end() && !link(ia->second, ib->second)) return false;
            }
        }
    }
    for (auto x : to_h)
        if (x < 0) return false;
    return true;
}

template <class V>
CrystalGraph<V> crystal_graph(const std::set<V>& xs, int n) {
    auto comps = components<V>(xs, n);
    if (comps.size() != 1) throw verification_error("vertex set is not a connected crystal");
    return comps.front();
}

struct DemazureComponent {
    WeakComposition key;
    std::size_t size = 0;
    WeakComposition highest_weight;
    Diagram highest;
};

inline std::vector<DemazureComponent> decompose_demazure(const Diagram& d) {
    if (!is_northwest(d)) throw precondition_error("decompose_demazure needs a northwest diagram");
    const int n = std::max(d.max_row(), 1);
    auto kd = kohnert_closure(d);
    std::vector<DemazureComponent> out;
    for (const auto& g : components<Diagram>(kd.members(), n)) {
        auto terms = key_expand(g.character());
        if (terms.size() != 1 || terms.front().second != 1)
            throw verification_error("component character is not a single key polynomial");
        auto a = padded(terms.front().first, static_cast<std::size_t>(n));
        auto model = crystal_graph(demazure_crystal(sort_decreasing(a), a, n), n);
        if (!crystal_isomorphic(g, model))
            throw verification_error("component is not isomorphic to the Demazure crystal " + to_string(a));
        out.push_back({a, g.size(), g.highest_weight(), g.vertices[g.highest]});
    }
    return out;
}

}  // namespace kohnert
