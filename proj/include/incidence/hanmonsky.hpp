#pragma once

#include <map>
#include <utility>
#include <vector>

#include "incidence/pparts.hpp"

namespace incidence {

/// Element of the graded Han-Monsky representation ring: a multiset of
/// (c, j) pairs, each standing for the cyclic module delta_c(-j) (block
/// length c, generator in degree j).
struct HMClass {
    std::map<std::pair<long, long>, long> summands;

    void add(long c, long j, long mult = 1);
    long long total_dimension() const;  // sum of c over summands

    bool operator==(const HMClass& o) const = default;
};

/// Graded Jordan type of T = T_1 + ... + T_n on
/// k[T_1..T_n]/(T_1^{a_1},...,T_n^{a_n}) over F_p, computed from the rank
/// table of powers of T in the monomial basis.
HMClass hm_product(int p, const std::vector<long>& lengths);

/// Product of two classes via pairwise delta products, shifts distributed.
/// An independent route used to check associativity of hm_product.
HMClass hm_class_product(int p, const HMClass& x, const HMClass& y);

/// Every summand delta_c(-j) with p not dividing c must satisfy
/// c + 2j = sum(lengths) - (n-1).
bool check_prime_shift_constraint(int p, const std::vector<long>& lengths,
                                  const HMClass& result);

/// For odd lengths 2a_i+1 at p = 2: the unique odd-length summand, as a
/// (length, shift) pair delta_{2c+1}(-j) with c the Nim-sum of the a_i.
std::pair<long, long> odd_summand_char2(const std::vector<long>& odd_lengths);

/// Decide whether delta_r(-j) is a summand of delta_a * delta_b by reading one
/// coefficient of the ideal quotient character J(d-1,r-1)/J(d,r).
bool summand_test_via_ideals(PPartsEngine& engine, long a, long b, long r, long j);
bool summand_test_via_ideals(int p, long a, long b, long r, long j);

}  // namespace incidence
