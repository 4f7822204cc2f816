#pragma once

#include <cstdint>
#include <map>
#include <tuple>
#include <utility>

namespace incidence {

/// Bivariate (n = 2) torus character: finite integer combination of weights
/// z1^u z2^v, not symmetrized. Zero coefficients are dropped.
class BiChar {
public:
    using Key = std::pair<long, long>;

    BiChar() = default;

    const std::map<Key, long long>& terms() const& { return terms_; }
    const std::map<Key, long long>& terms() const&& = delete;
    bool is_zero() const { return terms_.empty(); }
    long long coeff(long u, long v) const;
    long long total_dimension() const;

    void add_term(long u, long v, long long c);

    BiChar operator+(const BiChar& o) const;
    BiChar operator-(const BiChar& o) const;
    BiChar operator*(const BiChar& o) const;

    /// Multiply by the monomial z1^du z2^dv.
    BiChar shifted(long du, long dv) const;

    /// z_i -> z_i^{-1}.
    BiChar dualized() const;

    bool is_swap_symmetric() const;

    bool operator==(const BiChar& o) const = default;

private:
    std::map<Key, long long> terms_;
};

/// [S/m^d]: the staircase of monomials with u + v < d.
BiChar staircase_char(long d);

/// [S/m^[a q']]: quotient by the Frobenius power (m^a)^[q'].
BiChar frobenius_staircase_char(long a, long qprime);

/// h_a(z1^{q'}, z2^{q'}) as a BiChar; zero for a < 0.
BiChar frobenius_h2(long a, long qprime);

/// Multiset of T-equivariant line-bundle summands (u, v, i), each meaning
/// a rank-one piece with torus weight (u, v) twisted by O(i).
class SplitType {
public:
    using Key = std::tuple<long, long, long>;

    const std::map<Key, long>& summands() const& { return summands_; }
    const std::map<Key, long>& summands() const&& = delete;
    long count() const;
    long weight_sum_u() const;
    long weight_sum_v() const;
    long twist_sum() const;

    void add(long u, long v, long i, long mult = 1);
    SplitType shifted(long du, long dv, long di) const;
    void merge(const SplitType& o);

    bool operator==(const SplitType& o) const = default;

private:
    std::map<Key, long> summands_;
};

/// true iff a and b share no binary digit (binomial(a+b, a) is odd).
bool nc_member(long a, long b);

/// Characteristic-2 closed form for the quotient character J(d-1,r-1)/J(d,r);
/// r must be odd.
BiChar quot_char_char2(long d, long r);

/// n = 2 engine: splitting types of F^d_r and characters of the finite-length
/// quotients B(d,r) = S/I(d,r), C(d,r) = S/J(d,r). Results are memoized per
/// engine instance; one engine serves one logical task at a time.
class PPartsEngine {
public:
    explicit PPartsEngine(int p);

    int prime() const { return p_; }

    SplitType split_Fdr(long d, long r);
    std::pair<BiChar, BiChar> bc_char(long d, long r);
    BiChar quot_char(long d, long r);

private:
    int p_;
    std::map<std::pair<long, long>, SplitType> split_memo_;
    std::map<std::pair<long, long>, BiChar> b_memo_, c_memo_;

    long split_window(long r) const;  // smallest p^e >= max(r, p), e >= 1
    long bc_window(long r) const;     // smallest p^e > r, e >= 1
    SplitType split_raw(long d, long r);
    BiChar b_char(long d, long r);
    BiChar c_char(long d, long r);
};

namespace detail {
/// The two overlapping expansions of F^d_r at d = q + r - 1, for the
/// case-overlap consistency check.
SplitType split_overlap_case2(int p, long r);
SplitType split_overlap_case3(int p, long r);
}  // namespace detail

}  // namespace incidence
