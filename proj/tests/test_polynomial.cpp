#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace kohnert;
using namespace fixtures;

namespace {

// termwise closed form of the divided difference
Polynomial dd_closed_form(const Polynomial& f, int i) {
    Polynomial out(std::max(f.n(), i + 1));
    for (const auto& [e0, c] : f.terms()) {
        Exponent e = e0;
        e.resize(std::max<std::size_t>(e.size(), i + 1), 0);
        int a = e[i - 1], b = e[i];
        if (a == b) continue;
        int lo = std::min(a, b), hi = std::max(a, b);
        for (int k = 0; k < hi - lo; ++k) {
            Exponent t = e;
            t[i - 1] = a > b ? a - 1 - k : a + k;
            t[i] = a > b ? b + k : b - 1 - k;
            out.add_term(t, a > b ? c : Integer(-c));
        }
    }
    return out;
}

Polynomial symmetrize(const Polynomial& f, int i) { return f + f.swap_variables(i); }

}  // namespace

TEST_CASE("arithmetic basics") {
    auto x1 = Polynomial::variable(1), x2 = Polynomial::variable(2);
    CHECK((x1 + x2) * (x1 - x2) == x1 * x1 - x2 * x2);
    CHECK((x1 - x1).is_zero());
    CHECK(pretty(x1 * x1 * x2 + x2 * Integer(3) - Polynomial::one()) == "x1^2*x2 + 3*x2 - 1");
    CHECK(pretty(Polynomial()) == "0");
    CHECK(Polynomial::monomial({1, 0, 0}) == Polynomial::variable(1));
}

TEST_CASE("divided differences") {
    CHECK(divided_difference(Polynomial::variable(1), 1) == Polynomial::one());
    CHECK(divided_difference(poly({{{1, 1}, 1}}), 1).is_zero());
    CHECK(divided_difference(poly({{{3, 1}, 1}}), 1) == poly({{{2, 1}, 1}, {{1, 2}, 1}}));
    CHECK_THROWS_AS(divided_difference(Polynomial::one(), 0), precondition_error);

    std::mt19937 rng(1);
    for (int k = 0; k < 1000; ++k) {
        int n = 2 + k % 3;
        auto f = random_polynomial(rng, n, 6, 6);
        int i = 1 + k % (n - 1);
        auto g = divided_difference(f, i);
        CHECK(g == dd_closed_form(f, i));
        CHECK(divided_difference(g, i).is_zero());
        auto x_diff = Polynomial::variable(i) - Polynomial::variable(i + 1);
        CHECK(g * x_diff == f - f.swap_variables(i));
    }
}

TEST_CASE("Demazure operators") {
    CHECK(demazure_pi(poly({{{2, 1}, 1}}), 2) == poly({{{2, 1}, 1}, {{2, 0, 1}, 1}}));
    CHECK(demazure_pi(poly({{{2, 1}, 1}, {{2, 0, 1}, 1}}), 1) ==
          poly({{{2, 1}, 1}, {{2, 0, 1}, 1}, {{1, 2}, 1}, {{1, 1, 1}, 1}, {{0, 2, 1}, 1}}));
    CHECK(demazure_pi(Polynomial::one(), 3) == Polynomial::one());
    auto f = poly({{{1, 2, 0, 3}, 2}});
    CHECK(pi_word(f, {}) == f);
}

TEST_CASE("Demazure operator identities on random inputs") {
    std::mt19937 rng(2);
    for (int k = 0; k < 1000; ++k) {
        int n = 3 + k % 2;
        auto f = random_polynomial(rng, n, 5, 5);
        int i = 1 + k % (n - 1);
        auto p = demazure_pi(f, i);
        CHECK(demazure_pi(p, i) == p);
        CHECK(pi_word(f, {i, i}) == pi_word(f, {i}));
        if (n == 4) {
            CHECK(pi_word(f, {1, 3}) == pi_word(f, {3, 1}));
            CHECK(pi_word(f, {2, 3, 2}) == pi_word(f, {3, 2, 3}));
        }
        CHECK(pi_word(f, {1, 2, 1}) == pi_word(f, {2, 1, 2}));

        auto sym = symmetrize(f, i);
        CHECK(demazure_pi(sym, i) == sym);
        bool symmetric = f == f.swap_variables(i);
        CHECK((demazure_pi(f, i) == f) == symmetric);
    }
}

TEST_CASE("sorting permutation") {
    auto sp = sorting_permutation({0, 1, 2, 1});
    CHECK(sp.w == Permutation{4, 2, 1, 3});
    CHECK(sp.word == std::vector<int>{1, 2, 3, 1});
    CHECK(sorting_permutation({3, 2, 2, 0}).word.empty());
    CHECK(sorting_permutation({3, 2, 2, 0}).w == Permutation::identity(4));

    for (int code = 0; code < 4 * 4 * 4 * 4 * 4; ++code) {
        std::vector<int> p;
        for (int c = code, k = 0; k < 5; ++k, c /= 4) p.push_back(c % 4);
        WeakComposition a(p);
        auto s = sorting_permutation(a);
        auto lambda = sort_decreasing(a);
        int inv = 0;
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j)
                if (p[i] < p[j]) ++inv;
        CHECK(static_cast<int>(s.word.size()) == inv);
        CHECK(s.w.length() == inv);
        CHECK(Permutation::from_word(s.word, 5) == s.w);
        for (int i = 1; i <= 5; ++i) CHECK(a(i) == lambda(s.w(i)));
    }
}

TEST_CASE("key polynomials") {
    CHECK(key_polynomial({3, 1, 0}) == Polynomial::monomial({3, 1, 0}));
    CHECK(specialize_ones(key_polynomial({0, 1, 2, 1})) == 11);
    CHECK(specialize_ones(key_polynomial({0, 2, 2, 0})) == 6);
    CHECK(specialize_ones(key_polynomial_kohnert({0, 1, 2, 1})) == 11);
    CHECK(specialize_ones(key_polynomial_kohnert({0, 2, 2, 0})) == 6);
    CHECK(key_polynomial_kohnert({2, 1}) == Polynomial::monomial({2, 1}));
}

TEST_CASE("both key polynomial routes agree for parts <= 3, length <= 4") {
    for (int code = 0; code < 256; ++code) {
        std::vector<int> p;
        for (int c = code, k = 0; k < 4; ++k, c /= 4) p.push_back(c % 4);
        WeakComposition a(p);
        auto kappa = key_polynomial(a);
        CHECK(kappa == key_polynomial_kohnert(a));
        if (std::is_sorted(p.begin(), p.end()))
            for (int i = 1; i < 4; ++i) CHECK(kappa == kappa.swap_variables(i));
    }
}

TEST_CASE("key expansion") {
    auto k6 = kohnert_polynomial(nw_example());
    auto terms = key_expand(k6);
    REQUIRE(terms.size() == 2);
    CHECK(terms[0] == std::pair{WeakComposition{0, 1, 2, 1}, Integer(1)});
    CHECK(terms[1] == std::pair{WeakComposition{0, 2, 2, 0}, Integer(1)});

    for (WeakComposition a : {WeakComposition{0, 1, 2, 1}, WeakComposition{2, 0, 3}, WeakComposition{0, 0, 2}}) {
        auto t = key_expand(key_polynomial(a));
        REQUIRE(t.size() == 1);
        CHECK(t[0].first == a);
        CHECK(t[0].second == 1);
    }

    auto x1_x2 = Polynomial::variable(1) + Polynomial::variable(2);
    auto t = key_expand(x1_x2);
    REQUIRE(t.size() == 1);
    CHECK(t[0].first == WeakComposition{0, 1});
    CHECK_THROWS_AS(key_expand(Polynomial::variable(2)), not_key_positive);
    CHECK(key_expand(Polynomial()).empty());
    CHECK_THROWS_AS(key_expand(-Polynomial::one()), precondition_error);
}

TEST_CASE("specialize at ones") {
    CHECK(specialize_ones(kohnert_polynomial(nw_example())) == 17);
    CHECK(specialize_ones(Polynomial()) == 0);
    CHECK(specialize_ones(Polynomial::monomial({2, 0, 5})) == 1);
}
