#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "incidence/fpmatrix.hpp"
#include "incidence/pparts.hpp"
#include "incidence/symfunc.hpp"

namespace incidence {
namespace oracle {

/// Monomials T^E with 0 <= E_i < exps_i and sum(E) = degree, in lexicographic
/// order. This is the graded basis of the box algebra k[T_1..T_n]/(T_i^{exps_i}).
std::vector<std::vector<int>> box_basis(const std::vector<long>& exps, long degree);

long box_dim(const std::vector<long>& exps, long degree);

/// Matrix of multiplication by T = T_1 + ... + T_n from degree `degree` to
/// degree+1 of the box algebra, in the lexicographic monomial bases.
FpMatrix box_step_matrix(int p, const std::vector<long>& exps, long degree);

/// ranks[k] = rank of T^k : A_degree -> A_{degree+k} for k = 1..kmax, computed
/// by propagating an echelonized image basis one step at a time.
std::vector<long> box_power_ranks(int p, const std::vector<long>& exps, long degree,
                                  long kmax);

long box_power_rank(int p, const std::vector<long>& exps, long degree, long k);

/// The full rank table r_{j,k} = rank(T^k : A_j -> A_{j+k}) of the product
/// algebra with T_i^{lengths_i} = 0, together with the Hilbert function.
struct JordanRanks {
    long socle = 0;                      // top nonzero degree
    std::vector<long> dims;              // dims[j] = dim A_j, j = 0..socle
    std::vector<std::vector<long>> rank; // rank[j][k], k = 0..socle+1-j

    long r(long j, long k) const;        // 0 outside the table; r(j,0) = dims[j]
};

JordanRanks jordan_ranks(int p, const std::vector<long>& lengths);

/// Ranks of multiplication by T on each graded piece of M_abar (the Artinian
/// algebra with exponents 1 + a_i), for e = 0..socle-1; plus the Hilbert
/// function for e = 0..socle.
struct MultRanks {
    std::vector<long> dims;
    std::vector<long> ranks;
};

MultRanks artinian_mult_ranks(int p, const std::vector<long>& a);

/// Ordered monomial basis of M_{d,e} = D^d V tensor Sym^e V: pairs of a
/// divided-power exponent vector (sum d) and a symmetric one (sum e),
/// lexicographic on the pair.
struct MBasis {
    int n = 0;
    long d = 0, e = 0;
    std::vector<std::pair<std::vector<int>, std::vector<int>>> elems;

    static MBasis build(int n, long d, long e);
};

/// Matrix of multiplication by omega^r : M_{d,e} -> M_{d-r,e+r}, assembled by
/// composing r single-step 0/1 matrices. Requires d >= r >= 0.
FpMatrix omega_power_matrix(int n, int p, long d, long e, long r);

/// Same map built in one shot from multinomial coefficients mod p; a test
/// double for the composition path.
FpMatrix omega_power_matrix_multinomial(int n, int p, long d, long e, long r);

/// Characters of kernel and cokernel of multiplication by omega^r on M_{d,e},
/// assembled from per-multidegree blocks. For e >= -1 and r = 1 these are
/// h^0(D^d R(e)) and h^1(D^d R(e)); for general r they are the cohomology of
/// the twisted principal-parts duals.
std::pair<SymLaurent, SymLaurent> sheaf_coh_char(int n, int p, long d, long r, long e);

/// Recover the splitting type of F^d_r on P^1 by greedy peeling of kernel
/// characters across twists. Independent of the splitting recursion.
SplitType split_type_oracle(int p, long d, long r);

}  // namespace oracle
}  // namespace incidence
