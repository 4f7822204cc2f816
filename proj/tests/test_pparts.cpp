#include <doctest.h>

#include <stdexcept>

#include "incidence/oracle.hpp"
#include "incidence/pparts.hpp"

using namespace incidence;

TEST_CASE("splitting base cases") {
    PPartsEngine eng(3);
    // free case d < r: d+1 summands of weight d, no twist
    const SplitType s = eng.split_Fdr(2, 5);
    CHECK(s.count() == 3);
    SplitType want;
    want.add(2, 0, 0);
    want.add(1, 1, 0);
    want.add(0, 2, 0);
    CHECK(s == want);
    // r = 1 is a single line bundle
    SplitType line;
    line.add(4, 4, -4);
    CHECK(eng.split_Fdr(4, 1) == line);
    CHECK_THROWS_AS(eng.split_Fdr(-1, 2), std::invalid_argument);
    CHECK_THROWS_AS(eng.split_Fdr(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(PPartsEngine(6), std::invalid_argument);
}

TEST_CASE("splitting examples") {
    PPartsEngine e2(2);
    SplitType want;
    want.add(2, 2, -2);
    want.add(1, 1, 0);
    CHECK(e2.split_Fdr(2, 2) == want);

    PPartsEngine e3(3);
    const SplitType s = e3.split_Fdr(7, 2);
    CHECK(s.twist_sum() == -12);
    CHECK(s == oracle::split_type_oracle(3, 7, 2));
}

TEST_CASE("splitting matches the oracle with all invariants") {
    for (int p : {2, 3}) {
        PPartsEngine eng(p);
        for (long r = 1; r <= 6; ++r) {
            for (long d = 0; d <= 18; ++d) {
                const SplitType s = eng.split_Fdr(d, r);
                CHECK(s == oracle::split_type_oracle(p, d, r));
                CHECK(s.count() == (d >= r ? r : d + 1));
                if (d >= r) {
                    CHECK(s.weight_sum_u() == d * r - r * (r - 1) / 2);
                    CHECK(s.weight_sum_v() == d * r - r * (r - 1) / 2);
                    CHECK(s.twist_sum() == -r * (d - r + 1));
                    for (const auto& [k, m] : s.summands()) {
                        CHECK(std::get<0>(k) >= d - r + 1);
                        CHECK(std::get<0>(k) <= d);
                        CHECK(std::get<1>(k) >= d - r + 1);
                        CHECK(std::get<1>(k) <= d);
                    }
                }
            }
        }
    }
}

TEST_CASE("overlapping cases give the same multiset at d = q+r-1") {
    for (int p : {2, 3})
        for (long r = 1; r <= p * p; ++r)
            CHECK(detail::split_overlap_case2(p, r) == detail::split_overlap_case3(p, r));
}

TEST_CASE("global sections character identity") {
    // sum over summands of z1^u z2^v h_{i+e} equals the kernel character of
    // multiplication by omega^r, twist by twist
    for (int p : {2, 3}) {
        PPartsEngine eng(p);
        for (long r = 1; r <= 4; ++r) {
            const long q = [&] { long x = p; while (x < r) x *= p; return x; }();
            for (long d = 0; d <= 8; ++d) {
                const SplitType s = eng.split_Fdr(d, r);
                for (long e = -r; e <= 2 * q; ++e) {
                    BiChar predicted;
                    for (const auto& [k, m] : s.summands()) {
                        const auto [u, v, i] = k;
                        for (long t = 0; t <= i + e; ++t)
                            predicted.add_term(u + t, v + i + e - t, m);
                    }
                    BiChar actual;
                    if (e >= 0) {
                        for (long a1 = 0; a1 <= d + e; ++a1) {
                            const long a2 = d + e - a1;
                            const std::vector<long> exps = {a1 + 1, a2 + 1};
                            const long sdim = oracle::box_dim(exps, e);
                            if (!sdim) continue;
                            const long rk = oracle::box_power_rank(p, exps, e, r);
                            if (sdim - rk) actual.add_term(a1, a2, sdim - rk);
                        }
                    }
                    CHECK(predicted == actual);
                }
            }
        }
    }
}

TEST_CASE("B and C characters: base cases") {
    PPartsEngine e5(5);
    const auto [b0, c0] = e5.bc_char(4, 0);
    CHECK(b0.is_zero());
    CHECK(c0.is_zero());
    const auto [b, c] = e5.bc_char(3, 2);
    CHECK(b == staircase_char(2));
    CHECK(c == staircase_char(2));
    CHECK(staircase_char(2).coeff(0, 0) == 1);
    CHECK(staircase_char(2).total_dimension() == 3);
}

TEST_CASE("B and C characters against the module-character oracle") {
    // dim B(d,r)_(al,be) = F^{d-1}_r[u,v] - F^d_{r+1}[u,v] + [u,v >= d]
    //   at (u,v) = (d-1-al, d-1-be), where F^d_r[u,v] is the kernel dimension
    //   of omega^r on the weight-(u,v) piece of M_{d,*}; similarly for C with
    //   (u,v) = (al+d-r, be+d-r) and [al,be >= 0].
    auto module_dim = [](int p, long d, long r, long u, long v) -> long {
        const long e = u + v - d;
        if (d < 0 || e < 0) return 0;
        const std::vector<long> exps = {u + 1, v + 1};
        const long sdim = oracle::box_dim(exps, e);
        if (!sdim) return 0;
        return sdim - oracle::box_power_rank(p, exps, e, r);
    };
    for (int p : {2, 3}) {
        PPartsEngine eng(p);
        for (long r = 0; r <= 4; ++r) {
            for (long d = 0; d <= 8; ++d) {
                const auto [B, C] = eng.bc_char(d, r);
                for (const auto& [k, coeff] : B.terms()) CHECK(coeff > 0);
                for (const auto& [k, coeff] : C.terms()) CHECK(coeff > 0);
                CHECK(B.is_swap_symmetric());
                CHECK(C.is_swap_symmetric());
                long bound = 1;
                for (const auto& [k, coeff] : B.terms())
                    bound = std::max({bound, k.first + 2, k.second + 2});
                for (long al = 0; al <= bound; ++al)
                    for (long be = 0; be <= bound; ++be) {
                        const long u = d - 1 - al, v = d - 1 - be;
                        const long expect = module_dim(p, d - 1, r, u, v)
                                          - module_dim(p, d, r + 1, u, v)
                                          + ((u >= d && v >= d) ? 1 : 0);
                        CHECK(B.coeff(al, be) == expect);
                    }
                if (d >= r && r >= 1) {
                    long cbound = 1;
                    for (const auto& [k, coeff] : C.terms())
                        cbound = std::max({cbound, k.first + 2, k.second + 2});
                    for (long al = 0; al <= cbound; ++al)
                        for (long be = 0; be <= cbound; ++be) {
                            const long u = al + d - r, v = be + d - r;
                            const long expect = module_dim(p, d, r, u, v)
                                              - module_dim(p, d, r + 1, u, v) + 1;
                            CHECK(C.coeff(al, be) == expect);
                        }
                }
            }
        }
    }
}

TEST_CASE("quotient characters") {
    PPartsEngine e2(2);
    for (long d = 1; d <= 9; d += 2) {
        BiChar unit;
        unit.add_term(0, 0, 1);
        CHECK(e2.quot_char(d, 1) == unit);
    }
    for (long d = 2; d <= 8; d += 2) CHECK(e2.quot_char(d, 1).is_zero());

    PPartsEngine e5(5);
    const BiChar q5 = e5.quot_char(7, 2);
    CHECK(!q5.is_zero());
    for (const auto& [k, c] : q5.terms()) {
        CHECK(c > 0);
        CHECK(k.first + k.second == 1);
    }
    PPartsEngine e3(3);
    const BiChar q33 = e3.quot_char(3, 3);
    for (const auto& [k, c] : q33.terms()) CHECK(c > 0);
}

TEST_CASE("characteristic-2 quotient closed form") {
    BiChar f2h1;
    f2h1.add_term(2, 0, 1);
    f2h1.add_term(0, 2, 1);
    CHECK(quot_char_char2(3, 3) == f2h1);
    CHECK(quot_char_char2(4, 3).is_zero());
    BiChar unit;
    unit.add_term(0, 0, 1);
    CHECK(quot_char_char2(1, 1) == unit);
    CHECK_THROWS_AS(quot_char_char2(4, 2), std::invalid_argument);

    PPartsEngine e2(2);
    for (long r = 1; r <= 15; r += 2)
        for (long d = 0; d <= 32; ++d)
            CHECK(quot_char_char2(d, r) == e2.quot_char(d, r));
}

TEST_CASE("no-carries membership") {
    CHECK(nc_member(0, 12));
    CHECK_FALSE(nc_member(1, 1));
    CHECK(nc_member(3, 4));  // binomial(7,3) = 35 is odd
    CHECK_THROWS_AS(nc_member(-1, 2), std::invalid_argument);
}
