#pragma once

#include <json.hpp>
#include <limits>
#include <sstream>
#include <string>

#include "closure.hpp"
#include "crystal.hpp"
#include "diagram.hpp"
#include "labeling.hpp"
#include "polynomial.hpp"

namespace kohnert {

using json = nlohmann::ordered_json;

inline json integer_json(const Integer& c) {
    if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
        return json(static_cast<long long>(c));
    return json(c.str());
}

inline Integer integer_from_json(const json& j) {
    if (j.is_string()) return Integer(j.get<std::string>());
    return Integer(j.get<long long>());
}

inline json to_json(const WeakComposition& a) { return json(a.parts); }

inline json to_json(const Polynomial& f) {
    json terms = json::array();
    for (const auto& [e, c] : f.terms()) {
        auto exp = e;
        exp.resize(static_cast<std::size_t>(f.n()), 0);
        terms.push_back({{"exp", exp}, {"coef", integer_json(c)}});
    }
    return {{"n", f.n()}, {"terms", terms}};
}

inline Polynomial polynomial_from_json(const json& j) {
    Polynomial f(j.at("n").get<int>());
    for (const auto& t : j.at("terms")) {
        auto e = t.at("exp").get<std::vector<int>>();
        for (int x : e)
            if (x < 0) throw precondition_error("negative exponent");
        f.add_term(std::move(e), integer_from_json(t.at("coef")));
    }
    return f;
}

inline json to_json(const Diagram& d) {
    json cells = json::array();
    for (const auto& c : d) cells.push_back({c.row, c.col});
    return cells;
}

inline json to_json(const LabeledDiagram& l) {
    json cells = json::array();
    for (const auto& [c, v] : l) cells.push_back({{"r", c.row}, {"c", c.col}, {"label", v}});
    return {{"cells", cells}};
}

inline std::string render_tableau(const Tableau& t) {
    std::string out;
    for (auto k = t.rows.size(); k-- > 0;) {
        for (std::size_t c = 0; c < t.rows[k].size(); ++c) {
            if (c) out += ' ';
            out += std::to_string(t.rows[k][c]);
        }
        out += '\n';
    }
    return out;
}

namespace detail {

inline std::string dot_label(const std::string& text) {
    std::string out;
    for (char ch : text) {
        if (ch == '\n') out += "\\n";
        else if (ch == '"' || ch == '\\') out += std::string("\\") + ch;
        else out += ch;
    }
    return out;
}

inline std::string vertex_text(const Diagram& d) { return render_grid(d); }
inline std::string vertex_text(const Tableau& t) { return render_tableau(t); }

}  // namespace detail

inline std::string poset_dot(const Diagram& d) {
    auto kd = kohnert_closure(d);
    std::ostringstream os;
    os << "digraph kohnert_poset {\n  node [shape=box, fontname=\"monospace\"];\n";
    std::map<Diagram, std::size_t> id;
    for (const auto& t : kd) {
        id.emplace(t, id.size());
        os << "  n" << id[t] << " [label=\"" << detail::dot_label(render_grid(t)) << "\"];\n";
    }
    for (const auto& t : kd)
        for (const auto& [r, u] : kohnert_moves(t)) os << "  n" << id[t] << " -> n" << id.at(u) << ";\n";
    os << "}\n";
    return os.str();
}

template <class V>
std::string crystal_dot(const std::vector<CrystalGraph<V>>& graphs) {
    std::ostringstream os;
    os << "digraph crystal {\n  node [shape=box, fontname=\"monospace\"];\n";
    std::size_t base = 0;
    for (std::size_t g = 0; g < graphs.size(); ++g) {
        const auto& cg = graphs[g];
        os << "  subgraph cluster_" << g << " {\n";
        for (std::size_t v = 0; v < cg.size(); ++v)
            os << "    n" << base + v << " [label=\"" << detail::dot_label(detail::vertex_text(cg.vertices[v]))
               << "\"];\n";
        for (std::size_t v = 0; v < cg.size(); ++v)
            for (const auto& [i, u] : cg.lower[v])
                os << "    n" << base + v << " -> n" << base + u << " [colorscheme=set19, color=" << i
                   << ", label=\"" << i << "\"];\n";
        os << "  }\n";
        base += cg.size();
    }
    os << "}\n";
    return os.str();
}

}  // namespace kohnert
