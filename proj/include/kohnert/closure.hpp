#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <unordered_set>
#include <utility>
#include <vector>

#include "diagram.hpp"
#include "polynomial.hpp"

namespace kohnert {

inline std::optional<Diagram> apply_kohnert_move(const Diagram& d, int r) {
    if (r < 1) throw precondition_error("row index must be positive");
    auto cols = d.row(r);
    if (cols.empty()) return std::nullopt;
    int c = cols.back();
    for (int target = r - 1; target >= 1; --target) {
        if (d.contains(target, c)) continue;
        std::vector<Cell> cells = d.cells();
        for (auto& cell : cells)
            if (cell.row == r && cell.col == c) cell.row = target;
        return Diagram(std::move(cells));
    }
    return std::nullopt;
}

inline std::vector<std::pair<int, Diagram>> kohnert_moves(const Diagram& d) {
    std::vector<std::pair<int, Diagram>> out;
    for (int r = 1; r <= d.max_row(); ++r) {
        auto m = apply_kohnert_move(d, r);
        if (!m) continue;
        bool dup = false;
        for (const auto& [rr, e] : out) dup = dup || e == *m;
        if (!dup) out.emplace_back(r, std::move(*m));
    }
    return out;
}

// canonical member order: weight lexicographically, then cell list
inline bool closure_order(const Diagram& a, const Diagram& b) {
    auto wa = trimmed(weight(a)), wb = trimmed(weight(b));
    if (wa != wb) return wa < wb;
    return a < b;
}

class DiagramSet {
public:
    DiagramSet() = default;
    DiagramSet(Diagram origin, std::vector<Diagram> members) : origin_(std::move(origin)), members_(std::move(members)) {
        lookup_ = members_;
        std::sort(lookup_.begin(), lookup_.end());
        lookup_.erase(std::unique(lookup_.begin(), lookup_.end()), lookup_.end());
        members_ = lookup_;
        std::sort(members_.begin(), members_.end(), closure_order);
    }

    const Diagram& origin() const { return origin_; }
    const std::vector<Diagram>& members() const { return members_; }
    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }
    std::size_t size() const { return members_.size(); }
    bool contains(const Diagram& d) const { return std::binary_search(lookup_.begin(), lookup_.end(), d); }

    bool is_closed() const {
        for (const auto& t : members_)
            for (const auto& [r, u] : kohnert_moves(t))
                if (!contains(u)) return false;
        return true;
    }

private:
    Diagram origin_;
    std::vector<Diagram> members_;
    std::vector<Diagram> lookup_;
};

namespace detail {

// column c (1-based) -> bitmask of occupied rows; rows never exceed the origin's
using ColumnMasks = std::vector<std::uint64_t>;

struct MaskHash {
    std::size_t operator()(const ColumnMasks& m) const noexcept {
        std::size_t h = 0xcbf29ce484222325ull;
        for (auto x : m) h = (h ^ std::hash<std::uint64_t>{}(x)) * 0x100000001b3ull;
        return h;
    }
};

inline ColumnMasks to_masks(const Diagram& d) {
    ColumnMasks m(static_cast<std::size_t>(d.max_col()), 0);
    for (const auto& c : d) m[c.col - 1] |= std::uint64_t{1} << c.row;
    return m;
}

inline Diagram from_masks(const ColumnMasks& m) {
    std::vector<Cell> cells;
    for (std::size_t c = 0; c < m.size(); ++c)
        for (int r = 1; r < 64; ++r)
            if (m[c] >> r & 1) cells.push_back({r, static_cast<int>(c) + 1});
    return Diagram(std::move(cells));
}

}  // namespace detail

inline DiagramSet kohnert_closure(const Diagram& d) {
    if (d.max_row() >= 63) throw precondition_error("closure supports at most 62 rows");
    using detail::ColumnMasks;
    std::unordered_set<ColumnMasks, detail::MaskHash> seen;
    std::deque<ColumnMasks> queue;
    auto start = detail::to_masks(d);
    seen.insert(start);
    queue.push_back(start);
    const int rows = d.max_row();
    while (!queue.empty()) {
        ColumnMasks cur = std::move(queue.front());
        queue.pop_front();
        for (int r = 1; r <= rows; ++r) {
            const std::uint64_t bit = std::uint64_t{1} << r;
            int c = static_cast<int>(cur.size()) - 1;
            while (c >= 0 && !(cur[c] & bit)) --c;
            if (c < 0) continue;
            int target = r - 1;
            while (target >= 1 && (cur[c] >> target & 1)) --target;
            if (target < 1) continue;
            ColumnMasks next = cur;
            next[c] = (next[c] & ~bit) | (std::uint64_t{1} << target);
            if (seen.insert(next).second) queue.push_back(std::move(next));
        }
    }
    std::vector<Diagram> members;
    members.reserve(seen.size());
    for (const auto& m : seen) members.push_back(detail::from_masks(m));
    return DiagramSet(d, std::move(members));
}

inline Polynomial character(const std::vector<Diagram>& xs, int n = 0) {
    Polynomial f(n);
    for (const auto& t : xs) f.add_term(weight(t).parts, 1);
    return f;
}

inline Polynomial kohnert_polynomial(const Diagram& d) {
    return character(kohnert_closure(d).members(), d.max_row());
}

inline std::vector<std::pair<Diagram, Diagram>> poset_edges(const Diagram& d) {
    std::vector<std::pair<Diagram, Diagram>> out;
    for (const auto& t : kohnert_closure(d))
        for (auto& [r, u] : kohnert_moves(t)) out.emplace_back(t, std::move(u));
    return out;
}

inline Polynomial key_polynomial_kohnert(const WeakComposition& a) {
    auto f = kohnert_polynomial(key_diagram(a));
    f.widen(static_cast<int>(a.size()));
    return f;
}

}  // namespace kohnert
