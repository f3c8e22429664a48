#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <kohnert.hpp>

using namespace kohnert;

namespace {

enum Exit { ok = 0, usage = 2, precondition = 3, mismatch = 4 };

struct Input {
    std::string grid, cells, key, rothe;
};

struct Mismatch : verification_error {
    using verification_error::verification_error;
};

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

WeakComposition parse_composition(const std::string& text) {
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t used = 0;
        int v = -1;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
        }
        if (v < 0 || used != tok.size()) throw parse_error(1, "bad composition entry '" + tok + "'");
        parts.push_back(v);
    }
    return WeakComposition(std::move(parts));
}

void add_input(CLI::App* app, Input& in, const std::string& prefix = "") {
    auto g = app->add_option("--" + prefix + "grid", in.grid, "grid file of '.' and '#' rows, '-' for stdin");
    auto c = app->add_option("--" + prefix + "cells", in.cells, "cells as 'r,c' tokens, inline or a file");
    auto k = app->add_option("--" + prefix + "key", in.key, "key diagram of a weak composition a1,a2,...");
    auto r = app->add_option("--" + prefix + "rothe", in.rothe, "Rothe diagram of a one-line permutation");
    g->excludes(c, k, r);
    c->excludes(k, r);
    k->excludes(r);
}

bool given(const Input& in) { return !in.grid.empty() || !in.cells.empty() || !in.key.empty() || !in.rothe.empty(); }

Diagram read_diagram(const Input& in) {
    if (!in.grid.empty()) return parse_grid(slurp(in.grid));
    if (!in.cells.empty())
        return parse_cells(std::filesystem::is_regular_file(in.cells) ? slurp(in.cells) : in.cells);
    if (!in.key.empty()) return key_diagram(parse_composition(in.key));
    if (!in.rothe.empty()) return rothe_diagram(parse_permutation(in.rothe));
    throw CLI::RequiredError("a diagram (--grid, --cells, --key or --rothe)");
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

json document(const std::string& kind) { return {{"schema", "kohnert." + kind + "/1"}}; }

std::string indent(const std::string& block, const std::string& pad) {
    std::string out;
    std::istringstream is(block);
    for (std::string line; std::getline(is, line);) out += pad + line + '\n';
    return out;
}

OracleLimits oracle_limits() {
    OracleLimits lim;
    if (const char* env = std::getenv("KOHNERT_MAX_CELLS")) lim.max_cells = std::stoul(env);
    return lim;
}

struct Flags {
    bool json = false, dot = false;
};

int run_kd(const Diagram& d, const Flags& f) {
    auto kd = kohnert_closure(d);
    if (f.dot) {
        std::cout << poset_dot(d);
    } else if (f.json) {
        auto j = document("kd");
        j["size"] = kd.size();
        j["edges"] = poset_edges(d).size();
        json members = json::array();
        for (const auto& t : kd) members.push_back(to_json(t));
        j["members"] = members;
        emit(j);
    } else {
        std::cout << "closure size " << kd.size() << "\n";
        for (const auto& t : kd) std::cout << '\n' << render_grid(t);
    }
    return ok;
}

int run_poly(const Diagram& d, const Flags& f) {
    auto k = kohnert_polynomial(d);
    if (f.json) {
        auto j = document("poly");
        j["polynomial"] = to_json(k);
        j["pretty"] = pretty(k);
        emit(j);
    } else {
        std::cout << pretty(k) << '\n';
    }
    return ok;
}

int run_magyar(const Diagram& d, const Flags& f) {
    auto steps = reduction_trace(d);
    auto ch = character_from_trace(steps);
    ch.widen(d.max_row());
    if (f.json) {
        auto j = document("magyar");
        json trace = json::array();
        for (const auto& s : steps) trace.push_back({{"rule", to_string(s)}, {"diagram", to_json(s.diagram)}});
        j["trace"] = trace;
        j["character"] = to_json(ch);
        j["pretty"] = pretty(ch);
        emit(j);
    } else {
        for (const auto& s : steps) {
            std::cout << to_string(s) << '\n';
            if (!s.diagram.empty()) std::cout << indent(render_grid(s.diagram), "  ");
        }
        std::cout << "character " << pretty(ch) << '\n';
    }
    return ok;
}

int run_oracle(const Diagram& d, int n, const Flags& f) {
    if (n == 0) n = std::max(d.max_row(), 1);
    auto rep = flagged_character_report(d, n, oracle_limits());
    if (f.json) {
        auto j = document("oracle");
        j["n"] = n;
        j["fillings"] = rep.fillings;
        json dims = json::array();
        for (const auto& [w, k] : rep.dimensions) dims.push_back({{"weight", to_json(w)}, {"dimension", k}});
        j["dimensions"] = dims;
        j["character"] = to_json(rep.character);
        j["pretty"] = pretty(rep.character);
        emit(j);
    } else {
        std::cout << "character " << pretty(rep.character) << '\n';
        for (const auto& [w, k] : rep.dimensions) std::cout << "  " << to_string(w) << " dim " << k << '\n';
    }
    return ok;
}

std::optional<WeakComposition> single_key(const Polynomial& ch) {
    try {
        auto terms = key_expand(ch);
        if (terms.size() == 1 && terms[0].second == 1) return terms[0].first;
    } catch (const not_key_positive&) {
    }
    return std::nullopt;
}

int run_crystal(const Diagram& d, const Flags& f) {
    const int n = std::max(d.max_row(), 1);
    auto comps = components<Diagram>(kohnert_closure(d).members(), n);
    if (f.dot) {
        std::cout << crystal_dot(comps);
        return ok;
    }
    json list = json::array();
    for (const auto& g : comps) {
        json c{{"size", g.size()}, {"highest_weight", to_json(g.highest_weight())}};
        auto key = single_key(g.character());
        c["key"] = key ? to_json(*key) : json(nullptr);
        c["highest"] = to_json(g.vertices[g.highest]);
        list.push_back(c);
    }
    if (is_northwest(d)) {
        std::multiset<WeakComposition> expected, found;
        for (const auto& c : decompose_demazure(d)) expected.insert(c.key);
        for (const auto& c : list)
            if (!c["key"].is_null()) found.insert(WeakComposition(c["key"].get<std::vector<int>>()));
        if (expected != found) throw Mismatch("component keys disagree with the key expansion");
    }
    if (f.json) {
        auto j = document("crystal");
        j["n"] = n;
        j["components"] = list;
        emit(j);
        return ok;
    }
    std::cout << comps.size() << (comps.size() == 1 ? " component\n" : " components\n");
    for (const auto& c : list) {
        std::cout << "size " << c["size"].get<std::size_t>() << " highest weight "
                  << to_string(WeakComposition(c["highest_weight"].get<std::vector<int>>())) << " key ";
        if (c["key"].is_null()) std::cout << "none";
        else std::cout << to_string(WeakComposition(c["key"].get<std::vector<int>>()));
        std::cout << '\n';
    }
    return ok;
}

int run_expand(const Diagram& d, const Flags& f) {
    auto terms = key_expand(kohnert_polynomial(d));
    if (f.json) {
        auto j = document("expand");
        json list = json::array();
        for (const auto& [a, c] : terms) list.push_back({{"key", to_json(a)}, {"coef", integer_json(c)}});
        j["terms"] = list;
        emit(j);
    } else {
        for (const auto& [a, c] : terms) std::cout << c << " key" << to_string(a) << '\n';
    }
    return ok;
}

struct VerifyResult {
    std::size_t closure = 0;
    bool oracle = false;
};

VerifyResult verify_one(const Diagram& d, const OracleLimits& lim) {
    if (!is_northwest(d)) throw precondition_error("verify needs a northwest diagram");
    VerifyResult r;
    auto kd = kohnert_closure(d);
    r.closure = kd.size();
    auto k = character(kd.members(), d.max_row());
    auto m = magyar_character(d);
    std::ostringstream os;
    os << d;
    if (m != k) throw Mismatch("recurrence disagrees with the Kohnert polynomial on " + os.str());
    const int n = std::max(d.max_row(), 1);
    if (d.size() <= lim.max_cells && n <= lim.max_n) {
        try {
            auto o = flagged_character(d, n, lim);
            if (o != k) throw Mismatch("flagged Schur character disagrees on " + os.str());
            r.oracle = true;
        } catch (const scale_limit_error&) {
        }
    }
    return r;
}

int run_verify(const Diagram& d, const Flags& f) {
    auto r = verify_one(d, oracle_limits());
    if (f.json) {
        auto j = document("verify");
        j["closure"] = r.closure;
        j["oracle_checked"] = r.oracle;
        j["ok"] = true;
        emit(j);
    } else {
        std::cout << "ok: " << r.closure << " Kohnert diagrams, recurrence agrees"
                  << (r.oracle ? ", module oracle agrees" : ", module oracle skipped") << '\n';
    }
    return ok;
}

int run_sweep(const std::string& bounds, const Flags& f) {
    int rows = 0, cols = 0, max = 0;
    char x = 0, colon = 0;
    std::istringstream is(bounds);
    if (!(is >> rows >> x >> cols >> colon >> max) || x != 'x' || colon != ':' || rows < 1 || cols < 1 || max < 0)
        throw CLI::ValidationError("--sweep expects ROWSxCOLS:MAX, e.g. 3x3:5");
    auto lim = oracle_limits();
    std::size_t diagrams = 0, oracle = 0;
    std::vector<Cell> box, pick;
    for (int r = 1; r <= rows; ++r)
        for (int c = 1; c <= cols; ++c) box.push_back({r, c});
    std::function<void(std::size_t)> go = [&](std::size_t k) {
        Diagram d(pick);
        if (is_northwest(d)) {
            ++diagrams;
            oracle += verify_one(d, lim).oracle;
        }
        if (static_cast<int>(pick.size()) == max) return;
        for (std::size_t j = k; j < box.size(); ++j) {
            pick.push_back(box[j]);
            go(j + 1);
            pick.pop_back();
        }
    };
    go(0);
    if (f.json) {
        auto j = document("verify");
        j["sweep"] = bounds;
        j["diagrams"] = diagrams;
        j["oracle_checked"] = oracle;
        j["ok"] = true;
        emit(j);
    } else {
        std::cout << "ok: " << diagrams << " northwest diagrams, " << oracle << " checked against the module oracle\n";
    }
    return ok;
}

int run_tight(const Diagram& d, const Flags& f) {
    auto w = tightness_witness(d);
    auto mono = Polynomial::monomial(w.monomial);
    if (f.json) {
        auto j = document("tight");
        j["r"] = w.r;
        j["s"] = w.s;
        j["K"] = w.K;
        j["y"] = {w.y.row, w.y.col};
        j["z"] = {w.z.row, w.z.col};
        j["columns"] = w.columns;
        j["monomial"] = to_json(w.monomial);
        j["pretty"] = pretty(mono);
        json cells = json::array();
        for (const auto& [c, v] : w.filling) cells.push_back({{"r", c.row}, {"c", c.col}, {"value", v}});
        j["filling"] = cells;
        emit(j);
    } else {
        std::cout << "rows r=" << w.r << " s=" << w.s << " K=" << w.K << '\n';
        std::cout << "y=(" << w.y.row << ',' << w.y.col << ") z=(" << w.z.row << ',' << w.z.col << ")\n";
        std::cout << "witness " << pretty(mono) << " occurs in the module character, not in the Kohnert polynomial\n";
        std::cout << "filling\n" << indent(render_labeled(w.filling), "  ");
    }
    return ok;
}

int run_tableaux(const Diagram& t, const Input& against, const Flags& f) {
    std::optional<LabeledDiagram> l;
    std::optional<bool> kohnert_tableau;
    if (!against.key.empty()) {
        auto a = parse_composition(against.key);
        l = label_left(t, a);
        if (l) kohnert_tableau = is_kohnert_tableau(*l, a);
    } else {
        l = label_northwest(t, read_diagram(against));
    }
    bool flagged = l && is_flagged(*l);
    if (f.json) {
        auto j = document("tableaux");
        j["defined"] = l.has_value();
        j["labeling"] = l ? to_json(*l) : json(nullptr);
        j["flagged"] = flagged;
        j["member"] = flagged;
        if (kohnert_tableau) j["kohnert_tableau"] = *kohnert_tableau;
        emit(j);
    } else if (!l) {
        std::cout << "labeling undefined\nmember no\n";
    } else {
        std::cout << render_labeled(*l) << "flagged " << (flagged ? "yes" : "no") << '\n';
        if (kohnert_tableau) std::cout << "kohnert tableau " << (*kohnert_tableau ? "yes" : "no") << '\n';
        std::cout << "member " << (flagged ? "yes" : "no") << '\n';
    }
    return ok;
}

int fail(int code, const std::string& kind, const std::string& message, std::optional<int> line = {}) {
    auto j = document("error");
    j["kind"] = kind;
    j["message"] = message;
    if (line) j["line"] = *line;
    std::cerr << j.dump() << '\n';
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kohnert diagrams, key polynomials, crystals and flagged Schur characters"};
    app.require_subcommand(1);
    Flags flags;
    Input in, against;
    int oracle_n = 0;
    std::string sweep;

    auto with_input = [&](const std::string& name, const std::string& help, bool json_flag, bool dot_flag) {
        auto* sub = app.add_subcommand(name, help);
        add_input(sub, in);
        if (json_flag) sub->add_flag("--json", flags.json, "machine-readable output");
        if (dot_flag) sub->add_flag("--dot", flags.dot, "Graphviz output");
        return sub;
    };
    auto* kd = with_input("kd", "Kohnert closure and poset", true, true);
    auto* poly = with_input("poly", "Kohnert polynomial", true, false);
    auto* magyar = with_input("magyar", "character by the reduction recurrence", true, false);
    auto* oracle = with_input("oracle", "flagged Schur module character by brute force", true, false);
    oracle->add_option("-n", oracle_n, "number of variables (default: bottom row)");
    auto* crystal = with_input("crystal", "Kohnert crystal components", true, true);
    auto* expand = with_input("expand", "key expansion of the Kohnert polynomial", true, false);
    auto* verify = with_input("verify", "check Kohnert = recurrence = module oracle", true, false);
    verify->add_option("--sweep", sweep, "all northwest diagrams in a box, ROWSxCOLS:MAX");
    auto* tight = with_input("tight", "tightness witness for a %-avoiding non-northwest diagram", true, false);
    auto* tableaux = with_input("tableaux", "Kohnert labeling of a diagram", true, false);
    add_input(tableaux, against, "against-");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return fail(usage, "usage", e.what());
    }

    try {
        if (verify->parsed() && !sweep.empty()) {
            if (given(in)) throw CLI::ValidationError("--sweep takes no diagram");
            return run_sweep(sweep, flags);
        }
        if (tableaux->parsed() && !given(against))
            throw CLI::RequiredError("a target (--against-key, --against-grid, --against-cells or --against-rothe)");
        auto d = read_diagram(in);
        if (kd->parsed()) return run_kd(d, flags);
        if (poly->parsed()) return run_poly(d, flags);
        if (magyar->parsed()) return run_magyar(d, flags);
        if (oracle->parsed()) return run_oracle(d, oracle_n, flags);
        if (crystal->parsed()) return run_crystal(d, flags);
        if (expand->parsed()) return run_expand(d, flags);
        if (verify->parsed()) return run_verify(d, flags);
        if (tight->parsed()) return run_tight(d, flags);
        if (tableaux->parsed()) return run_tableaux(d, against, flags);
    } catch (const CLI::Error& e) {
        return fail(usage, "usage", e.what());
    } catch (const parse_error& e) {
        return fail(usage, "parse", e.what(), e.line);
    } catch (const precondition_error& e) {
        return fail(precondition, "precondition", e.what());
    } catch (const verification_error& e) {
        return fail(mismatch, "verification", e.what());
    }
    return usage;
}
