#pragma once

#include <optional>
#include <vector>

#include "incidence/symfunc.hpp"

namespace incidence {

/// theta_q(x) from the characteristic-2 criterion; nullopt is the absorbing
/// minus-infinity value (any sum containing it satisfies every bound).
/// Requires q a power of 2 with q >= 2, x >= 0.
std::optional<long> theta_q(long x, long q);

/// Weak Lefschetz for M_abar in characteristic 2: the theta_q inequality for
/// every power of 2 in the finite window. Entries a_i >= 0.
bool wlp_char2(const std::vector<long>& a);

/// Weak Lefschetz via the cohomology-coefficient criterion, reduced to the
/// middle twist pair by the support inclusion. p = 0 or prime.
bool wlp_cohomological(int p, const std::vector<long>& a);

/// Socle-degree classification: true iff every M_abar with n parts and socle
/// degree s has WLP in characteristic p. Requires n >= 3, p prime.
bool socle_guarantees_wlp(int n, int p, long s);

/// Ground truth: maximal rank of multiplication by T on every graded piece.
bool wlp_oracle(int p, const std::vector<long>& a);

enum class WlpMethod { Auto, Char2, Cohomology, Oracle };

/// Result of a WLP query, with a witness for failures where the method
/// produces one (the violated q for char2, the monomial abar for cohomology).
struct WlpResult {
    bool wlp = false;
    std::optional<long> witness_q;
    std::optional<std::vector<long>> witness_monomial;
};

/// Public entry point: takes ideal exponents (each >= 2) and converts to
/// abar = exponents - 1 internally.
WlpResult wlp_query(int p, const std::vector<long>& exponents,
                    WlpMethod method = WlpMethod::Auto);

}  // namespace incidence
