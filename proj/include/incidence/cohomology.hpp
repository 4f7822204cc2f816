#pragma once

#include <map>
#include <tuple>
#include <utility>

#include "incidence/symfunc.hpp"

namespace incidence {

/// A cohomology query: character of H^i(P^{n-1}, D^d R(e)) in characteristic p.
struct CohQuery {
    int n = 2;   // variables; projective space of dimension n-1
    int p = 0;   // 0 or prime
    int i = 0;   // cohomological degree, 0 or 1
    long d = 0;  // divided power, >= 0
    long e = 0;  // twist, >= -1 (smaller twists are out of domain)
};

/// Index translation between line bundles O_X(a,b) on the incidence
/// correspondence and queries D^d R(e): pure bookkeeping, no determinant
/// twist.
struct IncidenceIndex {
    long cohomological_offset;  // H^{i+offset} on X corresponds to H^i here
    long d;
    long e;
};

IncidenceIndex incidence_translate(int n, long a, long b);

/// Character engine for h^i(D^d R(e)). Owns a memo table; use one engine per
/// logical task, several engines in parallel if needed.
class CohomologyEngine {
public:
    CohomologyEngine(int n, int p);

    int vars() const { return n_; }
    int prime() const { return p_; }

    /// The recursion for e >= d-1 (or the small-d closed form); for d >= p
    /// and -1 <= e <= d-2, the raw dual of the swapped query (exponents <= 0).
    SymLaurent character(int i, long d, long e);

    /// The honest polynomial character of H^i in every regime (what the
    /// recursion consumes internally, and what the oracle matches exactly).
    SymLaurent polynomial_character(int i, long d, long e);

    /// Closed form valid for p = 0 or d < p.
    SymLaurent base_small_d(int i, long d, long e) const;

    /// dualize(character of the swapped query); requires -1 <= e <= d-2.
    SymLaurent dual_swap(int i, long d, long e);

    /// h^1 closed form for p <= d < p^2, e >= d-1.
    SymLaurent small_weights(long d, long e);

    /// h^1 via Nim polynomials and truncated Schur polynomials; requires
    /// p = 2, e >= d-1.
    SymLaurent char2_nonrecursive(long d, long e);

private:
    int n_, p_;
    std::map<std::tuple<int, long, long>, SymLaurent> memo_;

    void validate(int i, long d, long e) const;
};

/// Bivariate truncated series in (u, v) with SymLaurent coefficients; keys are
/// (u-degree, v-degree). Used for the characteristic-2 functional equation.
using CharSeries = std::map<std::pair<long, long>, SymLaurent>;

/// Left minus right of the functional equation relating the generating
/// function of h^1 characters to Nim polynomials, truncated to u-degree
/// <= max_u and v-degree <= max_v. Identically zero on a correct build.
CharSeries genfunc_residual(int n, long max_u, long max_v);

}  // namespace incidence
