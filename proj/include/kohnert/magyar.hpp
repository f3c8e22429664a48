#pragma once

#include <string>
#include <vector>

#include "diagram.hpp"
#include "errors.hpp"
#include "polynomial.hpp"

namespace kohnert {

struct ReductionStep {
    enum class Rule { M1, M2, M3 };
    Rule rule = Rule::M1;
    int param = 0;    // k for M2, r for M3
    Diagram diagram;  // the diagram the rule was applied to
};

inline std::string to_string(const ReductionStep& s) {
    switch (s.rule) {
        case ReductionStep::Rule::M1: return "M1";
        case ReductionStep::Rule::M2: return "M2(k=" + std::to_string(s.param) + ")";
        case ReductionStep::Rule::M3: return "M3(r=" + std::to_string(s.param) + ")";
    }
    return "?";
}

inline std::vector<ReductionStep> reduction_trace(const Diagram& start) {
    if (!is_northwest(start)) throw precondition_error("magyar recurrence needs a northwest diagram");
    std::vector<ReductionStep> steps;
    Diagram d = start;
    while (!d.empty()) {
        const int c = d.min_col();
        if (auto k = first_column_tower(d)) {
            steps.push_back({ReductionStep::Rule::M2, *k, d});
            d = remove_column(d, c);
            continue;
        }
        auto rows = d.column(c);
        int t = 0;
        for (int row : rows)
            if (row >= 2 && !d.contains(row - 1, c)) {
                t = row;
                break;
            }
        const int r = t - 1;
        if (t == 0 || !d.row(r).empty()) throw verification_error("reduction strategy found no empty row to lift into");
        steps.push_back({ReductionStep::Rule::M3, r, d});
        d = swap_rows(d, r);
    }
    steps.push_back({ReductionStep::Rule::M1, 0, d});
    return steps;
}

inline Polynomial character_from_trace(const std::vector<ReductionStep>& steps) {
    Polynomial f = Polynomial::one();
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        if (it->rule == ReductionStep::Rule::M2) {
            for (int i = 1; i <= it->param; ++i) f = f.shift_variable(i);
        } else if (it->rule == ReductionStep::Rule::M3) {
            f = demazure_pi(f, it->param);
        }
    }
    return f;
}

inline Polynomial magyar_character(const Diagram& d) {
    auto f = character_from_trace(reduction_trace(d));
    f.widen(d.max_row());
    return f;
}

}  // namespace kohnert
