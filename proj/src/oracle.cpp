#include "incidence/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>

namespace incidence {
namespace oracle {

std::vector<std::vector<int>> box_basis(const std::vector<long>& exps, long degree) {
    std::vector<std::vector<int>> out;
    if (degree < 0) return out;
    const int n = static_cast<int>(exps.size());
    std::vector<int> cur(static_cast<std::size_t>(n), 0);
    std::function<void(int, long)> rec = [&](int pos, long rem) {
        if (pos == n) {
            if (rem == 0) out.push_back(cur);
            return;
        }
        const long top = std::min<long>(exps[static_cast<std::size_t>(pos)] - 1, rem);
        for (long v = 0; v <= top; ++v) {
            cur[static_cast<std::size_t>(pos)] = static_cast<int>(v);
            rec(pos + 1, rem - v);
        }
        cur[static_cast<std::size_t>(pos)] = 0;
    };
    rec(0, degree);
    return out;
}

long box_dim(const std::vector<long>& exps, long degree) {
    if (degree < 0) return 0;
    long socle = 0;
    for (long e : exps) socle += e - 1;
    if (degree > socle) return 0;
    // product of truncated geometric series, one coefficient
    std::vector<long> coef(static_cast<std::size_t>(degree) + 1, 0);
    coef[0] = 1;
    for (long e : exps) {
        std::vector<long> next(coef.size(), 0);
        for (std::size_t i = 0; i < coef.size(); ++i) {
            if (!coef[i]) continue;
            for (long v = 0; v < e && i + static_cast<std::size_t>(v) < next.size(); ++v)
                next[i + static_cast<std::size_t>(v)] += coef[i];
        }
        coef.swap(next);
    }
    return coef[static_cast<std::size_t>(degree)];
}

FpMatrix box_step_matrix(int p, const std::vector<long>& exps, long degree) {
    auto src = box_basis(exps, degree);
    auto tgt = box_basis(exps, degree + 1);
    std::map<std::vector<int>, std::size_t> tidx;
    for (std::size_t i = 0; i < tgt.size(); ++i) tidx.emplace(tgt[i], i);
    FpMatrix m(static_cast<unsigned>(p), tgt.size(), src.size());
    for (std::size_t j = 0; j < src.size(); ++j) {
        std::vector<int> e = src[j];
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (e[i] + 1 >= exps[i]) continue;
            ++e[i];
            m.add_at(tidx.at(e), j, 1);
            --e[i];
        }
    }
    return m;
}

namespace {

// Adjacency of the single multiplication step from `degree` to degree+1:
// adj[source index] = target indices (each with coefficient 1).
std::vector<std::vector<std::uint32_t>> step_adjacency(const std::vector<long>& exps,
                                                       long degree) {
    auto src = box_basis(exps, degree);
    auto tgt = box_basis(exps, degree + 1);
    std::map<std::vector<int>, std::uint32_t> tidx;
    for (std::size_t i = 0; i < tgt.size(); ++i)
        tidx.emplace(tgt[i], static_cast<std::uint32_t>(i));
    std::vector<std::vector<std::uint32_t>> adj(src.size());
    for (std::size_t j = 0; j < src.size(); ++j) {
        std::vector<int> e = src[j];
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (e[i] + 1 >= exps[i]) continue;
            ++e[i];
            adj[j].push_back(tidx.at(e));
            --e[i];
        }
    }
    return adj;
}

std::vector<long> power_ranks_gf2(const std::vector<long>& exps, long degree, long kmax) {
    std::vector<long> ranks;
    const long dim0 = box_dim(exps, degree);
    // image basis as packed rows over the current degree's monomials
    std::size_t width = static_cast<std::size_t>(dim0);
    std::vector<std::vector<std::uint64_t>> basis;
    basis.reserve(width);
    const std::size_t w0 = (width + 63) / 64;
    for (std::size_t i = 0; i < width; ++i) {
        std::vector<std::uint64_t> row(w0, 0);
        row[i >> 6] = std::uint64_t(1) << (i & 63);
        basis.push_back(std::move(row));
    }
    for (long k = 1; k <= kmax; ++k) {
        const long t = degree + k - 1;
        auto adj = step_adjacency(exps, t);
        const std::size_t tdim = static_cast<std::size_t>(box_dim(exps, t + 1));
        const std::size_t words = (tdim + 63) / 64;
        std::vector<std::vector<std::uint64_t>> pivots;
        std::vector<std::size_t> pivcol;
        for (const auto& v : basis) {
            std::vector<std::uint64_t> img(words, 0);
            for (std::size_t wi = 0; wi < v.size(); ++wi) {
                std::uint64_t bits = v[wi];
                while (bits) {
                    const std::size_t b = (wi << 6) + static_cast<std::size_t>(__builtin_ctzll(bits));
                    bits &= bits - 1;
                    for (std::uint32_t tpos : adj[b]) img[tpos >> 6] ^= std::uint64_t(1) << (tpos & 63);
                }
            }
            for (std::size_t pi = 0; pi < pivots.size(); ++pi) {
                const std::size_t c = pivcol[pi];
                if (img[c >> 6] & (std::uint64_t(1) << (c & 63)))
                    for (std::size_t wj = 0; wj < words; ++wj) img[wj] ^= pivots[pi][wj];
            }
            std::size_t lead = tdim;
            for (std::size_t wj = 0; wj < words; ++wj)
                if (img[wj]) { lead = (wj << 6) + static_cast<std::size_t>(__builtin_ctzll(img[wj])); break; }
            if (lead < tdim) {
                pivcol.push_back(lead);
                pivots.push_back(std::move(img));
            }
        }
        ranks.push_back(static_cast<long>(pivots.size()));
        basis = std::move(pivots);
        if (basis.empty()) {
            while (static_cast<long>(ranks.size()) < kmax) ranks.push_back(0);
            break;
        }
    }
    while (static_cast<long>(ranks.size()) < kmax) ranks.push_back(0);
    return ranks;
}

std::vector<long> power_ranks_odd(int p, const std::vector<long>& exps, long degree,
                                  long kmax) {
    const unsigned up = static_cast<unsigned>(p);
    std::vector<long> ranks;
    const std::size_t dim0 = static_cast<std::size_t>(box_dim(exps, degree));
    std::vector<std::vector<std::uint8_t>> basis;
    basis.reserve(dim0);
    for (std::size_t i = 0; i < dim0; ++i) {
        std::vector<std::uint8_t> row(dim0, 0);
        row[i] = 1;
        basis.push_back(std::move(row));
    }
    for (long k = 1; k <= kmax; ++k) {
        const long t = degree + k - 1;
        auto adj = step_adjacency(exps, t);
        const std::size_t tdim = static_cast<std::size_t>(box_dim(exps, t + 1));
        std::vector<std::vector<std::uint8_t>> pivots;
        std::vector<std::size_t> pivcol;
        for (const auto& v : basis) {
            std::vector<std::uint8_t> img(tdim, 0);
            for (std::size_t b = 0; b < v.size(); ++b) {
                if (!v[b]) continue;
                for (std::uint32_t tpos : adj[b])
                    img[tpos] = static_cast<std::uint8_t>((img[tpos] + v[b]) % up);
            }
            for (std::size_t pi = 0; pi < pivots.size(); ++pi) {
                const unsigned f = img[pivcol[pi]];
                if (!f) continue;
                const auto& prow = pivots[pi];
                for (std::size_t j = 0; j < tdim; ++j)
                    img[j] = static_cast<std::uint8_t>((img[j] + up * up - f * prow[j]) % up);
            }
            std::size_t lead = tdim;
            for (std::size_t j = 0; j < tdim; ++j)
                if (img[j]) { lead = j; break; }
            if (lead < tdim) {
                const unsigned inv = fp_inverse(img[lead], up);
                for (std::size_t j = lead; j < tdim; ++j)
                    img[j] = static_cast<std::uint8_t>(img[j] * inv % up);
                pivcol.push_back(lead);
                pivots.push_back(std::move(img));
            }
        }
        ranks.push_back(static_cast<long>(pivots.size()));
        basis = std::move(pivots);
        if (basis.empty()) {
            while (static_cast<long>(ranks.size()) < kmax) ranks.push_back(0);
            break;
        }
    }
    while (static_cast<long>(ranks.size()) < kmax) ranks.push_back(0);
    return ranks;
}

}  // namespace

std::vector<long> box_power_ranks(int p, const std::vector<long>& exps, long degree,
                                  long kmax) {
    if (!is_prime(p)) throw std::invalid_argument("box_power_ranks: p must be prime");
    if (kmax < 1) return {};
    if (degree < 0 || box_dim(exps, degree) == 0)
        return std::vector<long>(static_cast<std::size_t>(kmax), 0);
    return p == 2 ? power_ranks_gf2(exps, degree, kmax)
                  : power_ranks_odd(p, exps, degree, kmax);
}

long box_power_rank(int p, const std::vector<long>& exps, long degree, long k) {
    if (k == 0) return box_dim(exps, degree);
    return box_power_ranks(p, exps, degree, k).back();
}

long JordanRanks::r(long j, long k) const {
    if (j < 0 || k < 0 || j > socle || j + k > socle) return 0;
    if (k == 0) return dims[static_cast<std::size_t>(j)];
    return rank[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
}

JordanRanks jordan_ranks(int p, const std::vector<long>& lengths) {
    if (lengths.empty()) throw std::invalid_argument("jordan_ranks: empty lengths");
    for (long l : lengths)
        if (l < 1) throw std::invalid_argument("jordan_ranks: lengths must be positive");
    JordanRanks t;
    for (long l : lengths) t.socle += l - 1;
    t.dims.resize(static_cast<std::size_t>(t.socle) + 1);
    for (long j = 0; j <= t.socle; ++j)
        t.dims[static_cast<std::size_t>(j)] = box_dim(lengths, j);
    t.rank.resize(static_cast<std::size_t>(t.socle) + 1);
    for (long j = 0; j <= t.socle; ++j) {
        const long kmax = t.socle - j;
        auto& row = t.rank[static_cast<std::size_t>(j)];
        row.assign(static_cast<std::size_t>(kmax) + 1, 0);
        row[0] = t.dims[static_cast<std::size_t>(j)];
        if (kmax >= 1) {
            auto rs = box_power_ranks(p, lengths, j, kmax);
            for (long k = 1; k <= kmax; ++k)
                row[static_cast<std::size_t>(k)] = rs[static_cast<std::size_t>(k - 1)];
        }
    }
    return t;
}

MultRanks artinian_mult_ranks(int p, const std::vector<long>& a) {
    std::vector<long> exps;
    exps.reserve(a.size());
    long socle = 0;
    for (long x : a) {
        if (x < 0) throw std::invalid_argument("artinian_mult_ranks: a_i must be >= 0");
        exps.push_back(x + 1);
        socle += x;
    }
    MultRanks out;
    for (long e = 0; e <= socle; ++e) out.dims.push_back(box_dim(exps, e));
    for (long e = 0; e < socle; ++e) out.ranks.push_back(box_power_rank(p, exps, e, 1));
    return out;
}

MBasis MBasis::build(int n, long d, long e) {
    MBasis b;
    b.n = n;
    b.d = d;
    b.e = e;
    if (d < 0 || e < 0) return b;
    std::vector<long> free_box(static_cast<std::size_t>(n), d + e + 1);
    for (const auto& dv : box_basis(free_box, d))
        for (const auto& ev : box_basis(free_box, e)) b.elems.emplace_back(dv, ev);
    return b;
}

namespace {

FpMatrix omega_step(int n, int p, long d, long e) {
    MBasis src = MBasis::build(n, d, e);
    MBasis tgt = MBasis::build(n, d - 1, e + 1);
    std::map<std::pair<std::vector<int>, std::vector<int>>, std::size_t> tidx;
    for (std::size_t i = 0; i < tgt.elems.size(); ++i) tidx.emplace(tgt.elems[i], i);
    FpMatrix m(static_cast<unsigned>(p), tgt.elems.size(), src.elems.size());
    for (std::size_t j = 0; j < src.elems.size(); ++j) {
        auto [dv, ev] = src.elems[j];
        for (int i = 0; i < n; ++i) {
            if (dv[static_cast<std::size_t>(i)] == 0) continue;
            --dv[static_cast<std::size_t>(i)];
            ++ev[static_cast<std::size_t>(i)];
            m.add_at(tidx.at({dv, ev}), j, 1);
            ++dv[static_cast<std::size_t>(i)];
            --ev[static_cast<std::size_t>(i)];
        }
    }
    return m;
}

}  // namespace

FpMatrix omega_power_matrix(int n, int p, long d, long e, long r) {
    if (r < 0 || d < r) throw std::invalid_argument("omega_power_matrix: need 0 <= r <= d");
    if (r == 0) return FpMatrix::identity(static_cast<unsigned>(p),
                                          MBasis::build(n, d, e).elems.size());
    FpMatrix acc = omega_step(n, p, d, e);
    for (long k = 2; k <= r; ++k)
        acc = omega_step(n, p, d - k + 1, e + k - 1).multiply(acc);
    return acc;
}

FpMatrix omega_power_matrix_multinomial(int n, int p, long d, long e, long r) {
    if (r < 0 || d < r) throw std::invalid_argument("omega_power_matrix: need 0 <= r <= d");
    MBasis src = MBasis::build(n, d, e);
    MBasis tgt = MBasis::build(n, d - r, e + r);
    FpMatrix m(static_cast<unsigned>(p), tgt.elems.size(), src.elems.size());
    for (std::size_t i = 0; i < tgt.elems.size(); ++i) {
        const auto& [dv2, ev2] = tgt.elems[i];
        for (std::size_t j = 0; j < src.elems.size(); ++j) {
            const auto& [dv, ev] = src.elems[j];
            bool ok = true;
            Int coef(1);
            long rem = r;
            for (int t = 0; t < n && ok; ++t) {
                const int kk = dv[static_cast<std::size_t>(t)] - dv2[static_cast<std::size_t>(t)];
                if (kk < 0 || ev2[static_cast<std::size_t>(t)] - ev[static_cast<std::size_t>(t)] != kk) {
                    ok = false;
                    break;
                }
                Int b;
                mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(rem),
                             static_cast<unsigned long>(kk));
                coef *= b;
                rem -= kk;
            }
            if (!ok || rem != 0) continue;
            m.add_at(i, j, static_cast<long>(mpz_fdiv_ui(coef.get_mpz_t(),
                                                         static_cast<unsigned long>(p))));
        }
    }
    return m;
}

std::pair<SymLaurent, SymLaurent> sheaf_coh_char(int n, int p, long d, long r, long e) {
    if (n < 2) throw std::invalid_argument("sheaf_coh_char: need n >= 2");
    if (!is_prime(p)) throw std::invalid_argument("sheaf_coh_char: p must be prime");
    if (d < 0 || r < 0) throw std::invalid_argument("sheaf_coh_char: need d, r >= 0");
    std::vector<std::pair<Exponents, Int>> ker_terms, coker_terms;
    for_each_partition(d + e, n, d + e < 0 ? 0 : d + e, [&](const Exponents& abar) {
        std::vector<long> exps;
        exps.reserve(abar.size());
        for (int x : abar) exps.push_back(x + 1);
        const long sdim = box_dim(exps, e);
        const long tdim = box_dim(exps, e + r);
        const long rk = (sdim == 0 || tdim == 0) ? 0 : box_power_rank(p, exps, e, r);
        if (sdim - rk > 0) ker_terms.emplace_back(abar, Int(sdim - rk));
        if (tdim - rk > 0) coker_terms.emplace_back(abar, Int(tdim - rk));
    });
    return {SymLaurent::canonicalize(n, std::move(ker_terms)),
            SymLaurent::canonicalize(n, std::move(coker_terms))};
}

namespace {

// Kernel of omega^r on M_{d,e} for n = 2, as a bigraded character.
BiChar omega_kernel_bichar(int p, long d, long e, long r) {
    BiChar out;
    if (e < 0) return out;
    for (long a1 = 0; a1 <= d + e; ++a1) {
        const long a2 = d + e - a1;
        std::vector<long> exps = {a1 + 1, a2 + 1};
        const long sdim = box_dim(exps, e);
        if (sdim == 0) continue;
        const long rk = box_power_rank(p, exps, e, r);
        if (sdim - rk > 0) out.add_term(a1, a2, sdim - rk);
    }
    return out;
}

}  // namespace

SplitType split_type_oracle(int p, long d, long r) {
    if (d < 0 || r < 1) throw std::invalid_argument("split_type_oracle: need d >= 0, r >= 1");
    const long target = d >= r ? r : d + 1;
    SplitType found;
    long total = 0;
    for (long e = 0; e <= d && total < target; ++e) {
        BiChar actual = omega_kernel_bichar(p, d, e, r);
        BiChar predicted;
        for (const auto& [key, mult] : found.summands()) {
            const auto [u, v, i] = key;
            for (long t = 0; t <= i + e; ++t)
                predicted.add_term(u + t, v + i + e - t, mult);
        }
        BiChar residual = actual - predicted;
        for (const auto& [k, c] : residual.terms()) {
            if (c < 0)
                throw std::logic_error("split_type_oracle: negative residual, splitting "
                                       "model violated");
            found.add(k.first, k.second, -e, c);
            total += c;
        }
    }
    if (total != target)
        throw std::logic_error("split_type_oracle: recovery incomplete");
    return found;
}

}  // namespace oracle
}  // namespace incidence
