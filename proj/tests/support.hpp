#pragma once

#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include <kohnert.hpp>

namespace fixtures {

using namespace kohnert;

inline Diagram nw_example() { return Diagram{{2, 1}, {3, 1}, {3, 2}, {4, 2}}; }
inline Diagram t5() { return Diagram{{1, 1}, {2, 1}, {2, 2}, {2, 3}, {3, 2}}; }
inline Diagram five_row_example() {
    return Diagram{{1, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 1}, {2, 3}, {2, 4},
                   {2, 5}, {3, 1}, {3, 2}, {4, 3}, {5, 1}, {5, 2}};
}

// x1^3x2^2 + x1^3x2x3 + x1^2x2^3 + x1^2x2^2x3 + x1x2^3x3
inline Polynomial t5_character() {
    Polynomial f(3);
    for (auto e : {Exponent{3, 2, 0}, Exponent{3, 1, 1}, Exponent{2, 3, 0}, Exponent{2, 2, 1}, Exponent{1, 3, 1}})
        f.add_term(e, 1);
    return f;
}

inline Polynomial poly(std::initializer_list<std::pair<Exponent, long>> terms) {
    Polynomial f;
    for (const auto& [e, c] : terms) f.add_term(e, c);
    return f;
}

// the poset as drawn: node letters and covering edges
inline std::map<char, Diagram> poset_nodes() {
    return {
        {'A', {{2, 1}, {3, 1}, {3, 2}, {4, 2}}}, {'B', {{1, 1}, {3, 1}, {3, 2}, {4, 2}}},
        {'C', {{2, 1}, {2, 2}, {3, 1}, {4, 2}}}, {'D', {{2, 1}, {2, 2}, {3, 1}, {3, 2}}},
        {'E', {{1, 1}, {2, 2}, {3, 1}, {4, 2}}}, {'F', {{1, 1}, {2, 2}, {3, 1}, {3, 2}}},
        {'G', {{1, 2}, {2, 1}, {3, 1}, {4, 2}}}, {'H', {{1, 1}, {2, 1}, {2, 2}, {4, 2}}},
        {'J', {{1, 1}, {1, 2}, {3, 1}, {4, 2}}}, {'K', {{1, 1}, {1, 2}, {2, 2}, {3, 1}}},
        {'L', {{1, 2}, {2, 1}, {3, 1}, {3, 2}}}, {'M', {{1, 2}, {2, 1}, {2, 2}, {3, 1}}},
        {'N', {{1, 1}, {1, 2}, {2, 1}, {4, 2}}}, {'O', {{1, 1}, {1, 2}, {3, 1}, {3, 2}}},
        {'P', {{1, 1}, {2, 1}, {2, 2}, {3, 2}}}, {'Q', {{1, 1}, {1, 2}, {2, 1}, {3, 2}}},
        {'S', {{1, 1}, {1, 2}, {2, 1}, {2, 2}}},
    };
}

inline const char* poset_edge_letters[] = {"AB", "AC", "AD", "BE", "BF", "CG", "CH", "CD", "DL", "DM", "EF",
                                   "EJ", "EH", "FK", "FO", "GJ", "GL", "GN", "HN", "HP", "LO", "LM",
                                   "JN", "JO", "KS", "MS", "NQ", "OK", "PQ", "PS", "QS"};

// drawn undirected; the lower end has the lexicographically smaller weight
inline std::set<std::pair<Diagram, Diagram>> poset_expected_edges() {
    auto nodes = poset_nodes();
    std::set<std::pair<Diagram, Diagram>> out;
    for (const char* e : poset_edge_letters) {
        auto a = nodes.at(e[0]), b = nodes.at(e[1]);
        if (closure_order(b, a)) std::swap(a, b);
        out.emplace(a, b);
    }
    return out;
}

using Edge = std::tuple<std::string, int, std::string>;

inline const std::vector<Edge> left_edges = {
    {"A35", 1, "A14"}, {"A54", 1, "A33"}, {"A53", 1, "A42"}, {"A42", 1, "A11"}, {"A31", 1, "A10"},
    {"A14", 2, "A13"}, {"A54", 2, "A53"}, {"A33", 2, "A32"}, {"A32", 2, "A31"}, {"A11", 2, "A10"},
    {"A35", 3, "A54"}, {"A14", 3, "A33"},
};
inline const std::vector<Edge> right_edges = {
    {"B74", 1, "B63"}, {"B73", 1, "B62"}, {"B62", 1, "B51"},
    {"B75", 2, "B74"}, {"B74", 2, "B73"}, {"B63", 2, "B62"},
};

inline std::map<std::string, Diagram> kohnert_crystal_nodes() {
    return {
        {"A35", {{1, 1}, {1, 2}, {2, 1}, {3, 2}}}, {"A14", {{1, 1}, {2, 1}, {2, 2}, {3, 2}}},
        {"A54", {{1, 1}, {1, 2}, {2, 1}, {4, 2}}}, {"A13", {{1, 1}, {2, 2}, {3, 1}, {3, 2}}},
        {"A33", {{1, 1}, {2, 1}, {2, 2}, {4, 2}}}, {"A53", {{1, 1}, {1, 2}, {3, 1}, {4, 2}}},
        {"A32", {{1, 1}, {2, 2}, {3, 1}, {4, 2}}}, {"A42", {{1, 2}, {2, 1}, {3, 1}, {4, 2}}},
        {"A11", {{2, 1}, {2, 2}, {3, 1}, {4, 2}}}, {"A31", {{1, 1}, {3, 1}, {3, 2}, {4, 2}}},
        {"A10", {{2, 1}, {3, 1}, {3, 2}, {4, 2}}},
        {"B75", {{1, 1}, {1, 2}, {2, 1}, {2, 2}}}, {"B74", {{1, 1}, {1, 2}, {2, 2}, {3, 1}}},
        {"B73", {{1, 1}, {1, 2}, {3, 1}, {3, 2}}}, {"B63", {{1, 2}, {2, 1}, {2, 2}, {3, 1}}},
        {"B62", {{1, 2}, {2, 1}, {3, 1}, {3, 2}}}, {"B51", {{2, 1}, {2, 2}, {3, 1}, {3, 2}}},
    };
}

inline Tableau tab(std::vector<std::vector<int>> rows_bottom_up) { return Tableau{std::move(rows_bottom_up)}; }

inline std::map<std::string, Tableau> demazure_nodes() {
    return {
        {"A35", tab({{1, 1}, {2}, {3}})}, {"A14", tab({{1, 2}, {2}, {3}})}, {"A54", tab({{1, 1}, {2}, {4}})},
        {"A13", tab({{1, 3}, {2}, {3}})}, {"A33", tab({{1, 2}, {2}, {4}})}, {"A53", tab({{1, 1}, {3}, {4}})},
        {"A32", tab({{1, 3}, {2}, {4}})}, {"A42", tab({{1, 2}, {3}, {4}})}, {"A11", tab({{2, 2}, {3}, {4}})},
        {"A31", tab({{1, 3}, {3}, {4}})}, {"A10", tab({{2, 3}, {3}, {4}})},
    };
}

template <class V>
inline std::set<std::tuple<V, int, V>> graph_edges(const std::vector<CrystalGraph<V>>& gs) {
    std::set<std::tuple<V, int, V>> out;
    for (const auto& g : gs)
        for (std::size_t v = 0; v < g.size(); ++v)
            for (auto [i, u] : g.lower[v]) out.emplace(g.vertices[v], i, g.vertices[u]);
    return out;
}

template <class V>
inline std::set<std::tuple<V, int, V>> named_edges(const std::map<std::string, V>& nodes, const std::vector<Edge>& es) {
    std::set<std::tuple<V, int, V>> out;
    for (const auto& [a, i, b] : es) out.emplace(nodes.at(a), i, nodes.at(b));
    return out;
}

// every subset of the rows x cols box with at most max_cells cells
inline void for_each_diagram(int rows, int cols, int max_cells, const std::function<void(const Diagram&)>& f) {
    std::vector<Cell> box;
    for (int r = 1; r <= rows; ++r)
        for (int c = 1; c <= cols; ++c) box.push_back({r, c});
    std::vector<Cell> pick;
    std::function<void(std::size_t)> go = [&](std::size_t k) {
        f(Diagram(pick));
        if (static_cast<int>(pick.size()) == max_cells) return;
        for (std::size_t j = k; j < box.size(); ++j) {
            pick.push_back(box[j]);
            go(j + 1);
            pick.pop_back();
        }
    };
    go(0);
}

inline std::vector<Diagram> northwest_diagrams(int rows, int cols, int max_cells) {
    std::vector<Diagram> out;
    for_each_diagram(rows, cols, max_cells, [&](const Diagram& d) {
        if (is_northwest(d)) out.push_back(d);
    });
    return out;
}

// diagrams inside the box with the same column weight as d
inline std::vector<Diagram> same_column_weight(const Diagram& d, int rows) {
    auto cw = column_weight(d).parts;
    std::vector<Diagram> out;
    std::vector<Cell> pick;
    std::function<void(int)> col = [&](int c) {
        if (c > static_cast<int>(cw.size())) {
            out.push_back(Diagram(pick));
            return;
        }
        std::function<void(int, int)> choose = [&](int from, int left) {
            if (left == 0) {
                col(c + 1);
                return;
            }
            for (int r = from; r <= rows; ++r) {
                pick.push_back({r, c});
                choose(r + 1, left - 1);
                pick.pop_back();
            }
        };
        choose(1, cw[c - 1]);
    };
    col(1);
    return out;
}

// closure by repeated single moves on sorted sets, no bitsets
inline std::set<Diagram> naive_closure(const Diagram& d) {
    std::set<Diagram> seen{d};
    std::vector<Diagram> stack{d};
    while (!stack.empty()) {
        auto t = stack.back();
        stack.pop_back();
        for (int r = 1; r <= t.max_row(); ++r)
            if (auto u = apply_kohnert_move(t, r))
                if (seen.insert(*u).second) stack.push_back(*u);
    }
    return seen;
}

inline Polynomial random_polynomial(std::mt19937& rng, int n, int max_degree, int terms) {
    std::uniform_int_distribution<int> deg(0, max_degree), coef(-5, 5), var(0, n - 1);
    Polynomial f(n);
    for (int t = 0; t < terms; ++t) {
        Exponent e(static_cast<std::size_t>(n), 0);
        int d = deg(rng);
        for (int k = 0; k < d; ++k) ++e[var(rng)];
        f.add_term(e, coef(rng));
    }
    return f;
}

inline Diagram random_diagram(std::mt19937& rng, int rows, int cols, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<Cell> cells;
    for (int r = 1; r <= rows; ++r)
        for (int c = 1; c <= cols; ++c)
            if (coin(rng)) cells.push_back({r, c});
    return Diagram(std::move(cells));
}

}  // namespace fixtures
