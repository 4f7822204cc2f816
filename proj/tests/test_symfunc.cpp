#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "incidence/symfunc.hpp"

using namespace incidence;

namespace {

SymLaurent sym(int n, std::vector<std::pair<Exponents, long>> raw) {
    std::vector<std::pair<Exponents, Int>> conv;
    for (auto& [v, c] : raw) conv.emplace_back(v, Int(c));
    return SymLaurent::canonicalize(n, std::move(conv));
}

// All compositions of d with n parts in [0, cap]; the brute-force route the
// truncated generators are checked against.
void for_each_composition(long d, int n, long cap,
                          const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> cur(static_cast<std::size_t>(n), 0);
    std::function<void(int, long)> rec = [&](int pos, long rem) {
        if (pos == n) {
            if (rem == 0) fn(cur);
            return;
        }
        for (long v = 0; v <= std::min(cap, rem); ++v) {
            cur[static_cast<std::size_t>(pos)] = static_cast<int>(v);
            rec(pos + 1, rem - v);
        }
        cur[static_cast<std::size_t>(pos)] = 0;
    };
    rec(0, d);
}

SymLaurent random_sym(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> nterms(0, 3), expo(0, 3), coeff(-4, 4);
    std::vector<std::pair<Exponents, Int>> raw;
    const int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        Exponents v(static_cast<std::size_t>(n));
        for (int& x : v) x = expo(rng);
        raw.emplace_back(std::move(v), Int(coeff(rng)));
    }
    return SymLaurent::canonicalize(n, std::move(raw));
}

}  // namespace

TEST_CASE("canonicalize merges orbits, drops zeros") {
    CHECK(sym(5, {{{2, 1, 0, 0, 0}, 1}, {{0, 1, 2, 0, 0}, 1}})
          == sym(5, {{{2, 1, 0, 0, 0}, 2}}));
    CHECK(sym(3, {}).is_zero());
    CHECK(sym(2, {{{1, 1}, 3}, {{1, 1}, -3}}).is_zero());
    CHECK_THROWS_AS(sym(2, {{{1, 1, 1}, 1}}), std::invalid_argument);
}

TEST_CASE("add and sub") {
    const int n = 2;
    CHECK(complete_h(n, 1) + complete_h(n, 1) == sym(n, {{{1, 0}, 2}}));
    CHECK((complete_h(n, 2) - complete_h(n, 2)).is_zero());
    // s_(1,1) + h_2 = m_(2) + 2 m_(1,1) in two variables
    CHECK(schur2(n, 1, 1) + complete_h(n, 2)
          == sym(n, {{{2, 0}, 1}, {{1, 1}, 2}}));
    CHECK_THROWS_AS(complete_h(2, 1) + complete_h(3, 1), std::invalid_argument);
}

TEST_CASE("mul basics") {
    const SymLaurent f = sym(3, {{{2, 1, 0}, 3}, {{1, 1, 1}, -2}});
    CHECK(f * SymLaurent::one(3) == f);
    CHECK(complete_h(2, 1) * complete_h(2, 1)
          == sym(2, {{{2, 0}, 1}, {{1, 1}, 2}}));
}

TEST_CASE("mul reproduces the 24-dimensional character") {
    const int n = 5;
    const SymLaurent lhs = truncated_h(n, 4, 2) * truncated_h(n, 1, 2)
                         - truncated_h(n, 5, 2) * truncated_h(n, 0, 2);
    const SymLaurent want = sym(n, {{{2, 1, 1, 1, 0}, 1}, {{1, 1, 1, 1, 1}, 4}});
    CHECK(lhs == want);
    CHECK(lhs.dimension() == 24);
}

TEST_CASE("frobenius") {
    CHECK(sym(2, {{{1, 0}, 1}}).frobenius(1) == sym(2, {{{1, 0}, 1}}));
    CHECK(sym(2, {{{1, 0}, 1}}).frobenius(2) == sym(2, {{{2, 0}, 1}}));
    CHECK(nim_poly(2, 1).frobenius(4) == sym(2, {{{4, 4}, 1}}));
    CHECK_THROWS_AS(sym(2, {{{1, 0}, 1}}).frobenius(0), std::invalid_argument);
}

TEST_CASE("frobenius is a ring homomorphism") {
    std::mt19937 rng(7);
    for (int iter = 0; iter < 40; ++iter) {
        const int n = 2 + static_cast<int>(rng() % 3);
        const SymLaurent f = random_sym(rng, n), g = random_sym(rng, n);
        for (long q : {2L, 3L, 4L})
            CHECK((f * g).frobenius(q) == f.frobenius(q) * g.frobenius(q));
    }
}

TEST_CASE("dualize") {
    CHECK(sym(2, {{{1, 0}, 1}}).dualized() == sym(2, {{{0, -1}, 1}}));
    CHECK(complete_h(2, 2).dualized() == sym(2, {{{0, -2}, 1}, {{-1, -1}, 1}}));
    std::mt19937 rng(11);
    for (int iter = 0; iter < 30; ++iter) {
        const SymLaurent f = random_sym(rng, 3);
        CHECK(f.dualized().dualized() == f);
    }
}

TEST_CASE("dimension and coeff_of") {
    CHECK(truncated_h(5, 5, 3).dimension() == 51);
    CHECK(SymLaurent::zero(4).dimension() == 0);
    CHECK(sym(5, {{{2, 1, 1, 1, 0}, 1}, {{1, 1, 1, 1, 1}, 4}}).dimension() == 24);
    CHECK(complete_h(2, 2).coeff_of({1, 1}) == 1);
    const SymLaurent f = truncated_h(5, 4, 2) * truncated_h(5, 1, 2)
                       - truncated_h(5, 5, 2) * truncated_h(5, 0, 2);
    CHECK(f.coeff_of({1, 2, 1, 0, 1}) == 1);  // any rearrangement of (2,1,1,1,0)
    CHECK(SymLaurent::zero(3).coeff_of({5, 1, 0}) == 0);
}

TEST_CASE("complete and truncated generators") {
    CHECK(truncated_h(5, 5, 3)
          == sym(5, {{{2, 2, 1, 0, 0}, 1}, {{2, 1, 1, 1, 0}, 1}, {{1, 1, 1, 1, 1}, 1}}));
    CHECK(complete_h(4, 0) == SymLaurent::one(4));
    CHECK(complete_h(4, -2).is_zero());
    CHECK(truncated_h(2, 3, 2).is_zero());
    CHECK_THROWS_AS(truncated_h(3, 2, 1), std::invalid_argument);
}

namespace {

// every monomial of a coefficient-one polynomial, by orbit expansion
std::set<std::vector<int>> monomial_set(const SymLaurent& f) {
    std::set<std::vector<int>> out;
    for (const auto& [k, c] : f.terms()) {
        REQUIRE(c == 1);
        Exponents v = k;
        std::sort(v.begin(), v.end());
        do out.insert(v);
        while (std::next_permutation(v.begin(), v.end()));
    }
    return out;
}

}  // namespace

TEST_CASE("truncated_h against brute-force composition enumeration") {
    for (int n = 2; n <= 4; ++n) {
        for (long q : {2L, 3L, 4L}) {
            for (long d = 0; d <= 10; ++d) {
                std::set<std::vector<int>> brute;
                for_each_composition(d, n, q - 1, [&](const std::vector<int>& c) {
                    brute.insert(c);
                });
                CHECK(monomial_set(truncated_h(n, d, q)) == brute);
            }
        }
    }
}

TEST_CASE("schur polynomials") {
    for (int n : {2, 3})
        for (long a = 0; a <= 4; ++a)
            CHECK(schur2(n, a, a + 1).is_zero());
    CHECK(schur2(2, 1, 1) == sym(2, {{{1, 1}, 1}}));
    CHECK(truncated_schur(5, 4, 1, 2)
          == sym(5, {{{2, 1, 1, 1, 0}, 1}, {{1, 1, 1, 1, 1}, 4}}));
}

TEST_CASE("nim polynomials") {
    CHECK(nim_poly(3, 0) == SymLaurent::one(3));
    CHECK(nim_poly(2, 1) == sym(2, {{{1, 1}, 1}}));
    CHECK_THROWS_AS(nim_poly(2, -1), std::invalid_argument);
    // brute force: compositions of 2m with zero XOR
    for (int n = 2; n <= 4; ++n) {
        for (long m = 0; m <= 6; ++m) {
            std::set<std::vector<int>> brute;
            for_each_composition(2 * m, n, 2 * m, [&](const std::vector<int>& c) {
                int x = 0;
                for (int v : c) x ^= v;
                if (x == 0) brute.insert(c);
            });
            CHECK(monomial_set(nim_poly(n, m)) == brute);
        }
    }
}

TEST_CASE("nim_sum") {
    CHECK(nim_sum({0, 9}) == 9);
    CHECK(nim_sum({7, 7}) == 0);
    CHECK(nim_sum({10, 3, 3, 2, 1, 1}) == 8);
    CHECK_THROWS_AS(nim_sum({-1}), std::invalid_argument);
}

TEST_CASE("phi") {
    const int n = 5, p = 2;
    CHECK(phi(n, p, 1, 4)
          == truncated_h(n, 4, 2) * truncated_h(n, 1, 2)
             - truncated_h(n, 5, 2) * truncated_h(n, 0, 2));
    CHECK(phi(n, p, -3, 10).is_zero());
    CHECK(phi(5, 2, 0, 5) == sym(5, {{{1, 1, 1, 1, 1}, 1}}));
    // degenerate parameters vanish after the telescoping sum
    for (long d = -3; d <= 4; ++d)
        for (long e = -6; e <= 4; ++e)
            if (d < 0 || d + e < 0) CHECK(phi(3, 3, d, e).is_zero());
}

TEST_CASE("ring axioms on random inputs") {
    std::mt19937 rng(2024);
    for (int iter = 0; iter < 60; ++iter) {
        const int n = 2 + static_cast<int>(rng() % 4);
        const SymLaurent f = random_sym(rng, n), g = random_sym(rng, n),
                         h = random_sym(rng, n);
        CHECK(f * g == g * f);
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * (g + h) == f * g + f * h);
    }
}

TEST_CASE("canonical form is idempotent") {
    std::mt19937 rng(5);
    for (int iter = 0; iter < 40; ++iter) {
        const int n = 2 + static_cast<int>(rng() % 3);
        const SymLaurent f = random_sym(rng, n);
        std::vector<std::pair<Exponents, Int>> raw;
        for (const auto& [k, c] : f.terms()) raw.emplace_back(k, c);
        CHECK(SymLaurent::canonicalize(n, std::move(raw)) == f);
    }
}

TEST_CASE("dimension is multiplicative on genuine characters") {
    for (int n : {2, 3, 4}) {
        std::vector<SymLaurent> fam = {complete_h(n, 3), truncated_h(n, 4, 3),
                                       schur2(n, 3, 1), truncated_h(n, 2, 2)};
        for (const auto& f : fam)
            for (const auto& g : fam)
                CHECK((f * g).dimension() == f.dimension() * g.dimension());
    }
}
