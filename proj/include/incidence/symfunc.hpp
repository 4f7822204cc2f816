#pragma once

#include <gmpxx.h>

#include <functional>
#include <map>
#include <utility>
#include <vector>

namespace incidence {

/// Exact integer coefficient type used throughout the character ring.
using Int = mpz_class;

/// A torus weight / multidegree: length-n integer tuple, entries may be negative.
using Exponents = std::vector<int>;

bool is_prime(long p);

/// n! / (product of multiplicities of repeated entries)! -- the size of the
/// S_n-orbit of an exponent vector.
Int orbit_size(const Exponents& v);

/// Number of monomials of degree d in n variables (dim Sym^d = dim D^d).
Int monomial_count(int n, long d);

/// Enumerate weakly decreasing vectors of length `parts` with entries in
/// [0, cap] summing to `total`. Invokes fn on each (vector reused between calls).
void for_each_partition(long total, int parts, long cap,
                        const std::function<void(const Exponents&)>& fn);

/// Symmetric Laurent polynomial in n variables, stored in the
/// monomial-symmetric basis: a map from dominant (weakly decreasing) exponent
/// vectors to nonzero integer coefficients. Values are immutable after
/// construction; all operations are pure.
class SymLaurent {
public:
    explicit SymLaurent(int n);

    static SymLaurent zero(int n) { return SymLaurent(n); }
    static SymLaurent one(int n);

    /// Sort each vector to dominant form, merge like keys, drop zeros.
    static SymLaurent canonicalize(int n, std::vector<std::pair<Exponents, Int>> raw);

    int vars() const { return n_; }
    const std::map<Exponents, Int>& terms() const& { return terms_; }
    const std::map<Exponents, Int>& terms() const&& = delete;
    bool is_zero() const { return terms_.empty(); }

    SymLaurent operator+(const SymLaurent& o) const;
    SymLaurent operator-(const SymLaurent& o) const;
    SymLaurent operator-() const;
    SymLaurent operator*(const SymLaurent& o) const;

    /// z_i -> z_i^q on every variable; q >= 1.
    SymLaurent frobenius(long q) const;

    /// z_i -> z_i^{-1}; an involution.
    SymLaurent dualized() const;

    /// Evaluation at z_i = 1: sum of coeff * orbit size.
    Int dimension() const;

    /// Coefficient of the dominant sort of a; zero if absent.
    Int coeff_of(Exponents a) const;

    bool operator==(const SymLaurent& o) const {
        return n_ == o.n_ && terms_ == o.terms_;
    }
    bool operator!=(const SymLaurent& o) const { return !(*this == o); }

private:
    int n_;
    std::map<Exponents, Int> terms_;

    void insert_term(Exponents key, Int c);
    friend SymLaurent complete_family(int n, long d, long cap);
};

// Generating families. Degenerate indices (d < 0, or beyond the truncation
// window) give the zero polynomial; the recursions rely on that convention.

SymLaurent complete_h(int n, long d);
SymLaurent truncated_h(int n, long d, long q);  // parts < q; requires q >= 2
SymLaurent schur2(int n, long a, long b);       // h_a h_b - h_{a+1} h_{b-1}
SymLaurent truncated_schur(int n, long a, long b, long q);
SymLaurent nim_poly(int n, long m);             // requires m >= 0
SymLaurent phi(int n, int p, long d, long e);   // requires p prime

/// Bitwise XOR fold of non-negative integers.
long nim_sum(const std::vector<long>& values);

}  // namespace incidence
