#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "diagram.hpp"
#include "errors.hpp"

namespace kohnert {

using Integer = boost::multiprecision::cpp_int;

// Exponent vectors are kept without trailing zeros, so lexicographic order on
// the stored keys agrees with the zero-padded order.
using Exponent = std::vector<int>;

inline Exponent normalize_exponent(Exponent e) {
    while (!e.empty() && e.back() == 0) e.pop_back();
    return e;
}

class Polynomial {
public:
    using Terms = std::map<Exponent, Integer>;

    Polynomial() = default;
    explicit Polynomial(int n) : n_(n) {}

    static Polynomial constant(const Integer& c, int n = 0) {
        Polynomial p(n);
        p.add_term({}, c);
        return p;
    }
    static Polynomial one() { return constant(1); }
    static Polynomial monomial(const WeakComposition& a, const Integer& c = 1) {
        Polynomial p(static_cast<int>(a.size()));
        p.add_term(a.parts, c);
        return p;
    }
    static Polynomial variable(int i) {
        Exponent e(static_cast<std::size_t>(i), 0);
        e[i - 1] = 1;
        Polynomial p(i);
        p.add_term(e, 1);
        return p;
    }

    int n() const { return n_; }
    void widen(int n) { n_ = std::max(n_, n); }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Integer coefficient(const Exponent& e) const {
        auto it = terms_.find(normalize_exponent(e));
        return it == terms_.end() ? Integer(0) : it->second;
    }
    Integer coefficient(const WeakComposition& a) const { return coefficient(a.parts); }

    void add_term(Exponent e, const Integer& c) {
        if (c == 0) return;
        widen(static_cast<int>(e.size()));
        e = normalize_exponent(std::move(e));
        auto [it, inserted] = terms_.try_emplace(std::move(e), c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Polynomial& operator+=(const Polynomial& o) {
        widen(o.n_);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        widen(o.n_);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    Polynomial& operator*=(const Integer& k) {
        if (k == 0) terms_.clear();
        for (auto& [e, c] : terms_) c *= k;
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(Polynomial a) { return a *= -1; }
    friend Polynomial operator*(Polynomial a, const Integer& k) { return a *= k; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial r(std::max(a.n_, b.n_));
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponent e(std::max(ea.size(), eb.size()), 0);
                for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
                for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
                r.add_term(std::move(e), ca * cb);
            }
        return r;
    }

    // equality of polynomials as functions; the declared variable count is ignored
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

    Polynomial shift_variable(int i, int k = 1) const {
        Polynomial r(std::max(n_, i));
        for (const auto& [e, c] : terms_) {
            Exponent f = e;
            if (f.size() < static_cast<std::size_t>(i)) f.resize(i, 0);
            f[i - 1] += k;
            r.add_term(std::move(f), c);
        }
        return r;
    }

    // s_i . f
    Polynomial swap_variables(int i) const {
        Polynomial r(std::max(n_, i + 1));
        for (const auto& [e, c] : terms_) {
            Exponent f = e;
            if (f.size() < static_cast<std::size_t>(i + 1)) f.resize(i + 1, 0);
            std::swap(f[i - 1], f[i]);
            r.add_term(std::move(f), c);
        }
        return r;
    }

private:
    Terms terms_;
    int n_ = 0;
};

inline Integer specialize_ones(const Polynomial& f) {
    Integer s = 0;
    for (const auto& [e, c] : f.terms()) s += c;
    return s;
}

inline std::string pretty(const Polynomial& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        Integer mag = c < 0 ? Integer(-c) : c;
        if (out.empty()) out += c < 0 ? "-" : "";
        else out += c < 0 ? " - " : " + ";
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(i + 1);
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) out += mag.str();
        else if (mag == 1) out += mono;
        else out += mag.str() + "*" + mono;
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const Polynomial& f) { return os << pretty(f); }

inline Polynomial divided_difference(const Polynomial& f, int i) {
    if (i < 1) throw precondition_error("operator index must be at least 1");
    Polynomial g = f - f.swap_variables(i);
    Polynomial q(std::max(f.n(), i + 1));
    while (!g.is_zero()) {
        auto lead = *g.terms().rbegin();
        Exponent e = lead.first;
        if (e.size() < static_cast<std::size_t>(i) || e[i - 1] == 0)
            throw verification_error("divided difference left a nonzero remainder");
        e[i - 1] -= 1;
        Polynomial t(0);
        t.add_term(e, lead.second);
        q += t;
        g -= t.shift_variable(i);
        g += t.shift_variable(i + 1);
    }
    return q;
}

inline Polynomial demazure_pi(const Polynomial& f, int i) {
    if (i < 1) throw precondition_error("operator index must be at least 1");
    return divided_difference(f.shift_variable(i), i);
}

inline Polynomial pi_word(Polynomial f, const std::vector<int>& word) {
    for (auto it = word.rbegin(); it != word.rend(); ++it) f = demazure_pi(f, *it);
    return f;
}

struct SortingPermutation {
    Permutation w;
    std::vector<int> word;
};

// a_i = lambda_{w(i)} with lambda = sort_decreasing(a); ties keep their order.
inline SortingPermutation sorting_permutation(const WeakComposition& a) {
    auto v = a.parts;
    const int n = static_cast<int>(v.size());
    std::vector<int> origin(n);
    for (int p = 0; p < n; ++p) origin[p] = p;
    std::vector<int> word;
    bool swapped = true;
    while (swapped) {
        swapped = false;
        for (int p = 0; p + 1 < n; ++p)
            if (v[p] < v[p + 1]) {
                std::swap(v[p], v[p + 1]);
                std::swap(origin[p], origin[p + 1]);
                word.push_back(p + 1);
                swapped = true;
            }
    }
    std::vector<int> w(n);
    for (int j = 0; j < n; ++j) w[origin[j]] = j + 1;
    return {Permutation(std::move(w)), std::move(word)};
}

inline Polynomial key_polynomial(const WeakComposition& a) {
    auto f = Polynomial::monomial(sort_decreasing(a));
    f.widen(static_cast<int>(a.size()));
    return pi_word(f, sorting_permutation(a).word);
}

using KeyExpansion = std::vector<std::pair<WeakComposition, Integer>>;

// Greedy expansion on the lexicographically smallest exponent: x^a is the
// lex-smallest term of kappa_a, so the basis change is unitriangular.
inline KeyExpansion key_expand(const Polynomial& f) {
    for (const auto& [e, c] : f.terms())
        if (c < 0) throw precondition_error("key_expand needs nonnegative coefficients");
    KeyExpansion out;
    Polynomial g = f;
    while (!g.is_zero()) {
        auto [e, c] = *g.terms().begin();
        auto a = padded(WeakComposition(e), static_cast<std::size_t>(f.n()));
        g -= key_polynomial(a) * c;
        out.emplace_back(std::move(a), c);
        for (const auto& [e2, c2] : g.terms())
            if (c2 < 0) throw not_key_positive("not key-positive");
    }
    return out;
}

}  // namespace kohnert
