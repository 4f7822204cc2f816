#include "incidence/cohomology.hpp"

#include <algorithm>
#include <stdexcept>

namespace incidence {

IncidenceIndex incidence_translate(int n, long a, long b) {
    return {n - 2, -b - n + 1, a - 1};
}

CohomologyEngine::CohomologyEngine(int n, int p) : n_(n), p_(p) {
    if (n < 2) throw std::invalid_argument("CohomologyEngine: need n >= 2");
    if (p != 0 && !is_prime(p))
        throw std::invalid_argument("CohomologyEngine: p must be 0 or prime");
}

void CohomologyEngine::validate(int i, long d, long e) const {
    if (i != 0 && i != 1) throw std::domain_error("cohomology: i must be 0 or 1");
    if (d < 0) throw std::domain_error("cohomology: need d >= 0");
    if (e < -1)
        throw std::domain_error("cohomology: twist e <= -2 is out of domain "
                                "(cohomology concentrated in top degree)");
}

SymLaurent CohomologyEngine::base_small_d(int i, long d, long e) const {
    validate(i, d, e);
    if (p_ != 0 && d >= p_)
        throw std::domain_error("base_small_d: requires p = 0 or d < p");
    if (i == 0) return e >= d ? schur2(n_, e, d) : SymLaurent::zero(n_);
    return (e <= d - 2) ? schur2(n_, d - 1, e + 1) : SymLaurent::zero(n_);
}

SymLaurent CohomologyEngine::polynomial_character(int i, long d, long e) {
    validate(i, d, e);
    const auto key = std::make_tuple(i, d, e);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    SymLaurent res(n_);
    if (p_ == 0 || d < p_) {
        res = base_small_d(i, d, e);
    } else if (e >= d - 1) {
        for (long a = 0; a * p_ <= d; ++a) {
            for (long b = -1; b * p_ <= d + e; ++b) {
                SymLaurent ph = phi(n_, p_, d - a * p_, e - b * p_);
                if (ph.is_zero()) continue;
                SymLaurent ch = polynomial_character(i, a, b);
                if (ch.is_zero()) continue;
                res = res + ph * ch.frobenius(p_);
            }
        }
    } else {
        // H^i(D^d R(e)) and H^{1-i}(D^{e+1} R(d-1)) have the same character:
        // graded local duality on each Artinian block M_abar.
        res = polynomial_character(1 - i, e + 1, d - 1);
    }
    memo_.emplace(key, res);
    return res;
}

SymLaurent CohomologyEngine::dual_swap(int i, long d, long e) {
    validate(i, d, e);
    if (e > d - 2)
        throw std::domain_error("dual_swap: requires -1 <= e <= d-2");
    return polynomial_character(1 - i, e + 1, d - 1).dualized();
}

SymLaurent CohomologyEngine::character(int i, long d, long e) {
    validate(i, d, e);
    if (p_ == 0 || d < p_ || e >= d - 1) return polynomial_character(i, d, e);
    return dual_swap(i, d, e);
}

SymLaurent CohomologyEngine::small_weights(long d, long e) {
    if (p_ < 2) throw std::domain_error("small_weights: requires p > 0");
    if (d < p_ || d >= static_cast<long>(p_) * p_)
        throw std::domain_error("small_weights: requires p <= d < p^2");
    if (e < d - 1) throw std::domain_error("small_weights: requires e >= d-1");
    const long t = d / p_;
    SymLaurent res(n_);
    for (long A = 1; A <= t; ++A) {
        for (long B = 1; B <= A; ++B) {
            for (long J = 0; J <= A - B; ++J) {
                SymLaurent term =
                    truncated_h(n_, e + (B - J) * p_, p_) * truncated_h(n_, d - A * p_, p_)
                  - truncated_h(n_, e + (B - J) * p_ + 1, p_) * truncated_h(n_, d - A * p_ - 1, p_);
                if (term.is_zero()) continue;
                res = res + term * schur2(n_, A - B, J).frobenius(p_);
            }
        }
    }
    return res;
}

SymLaurent CohomologyEngine::char2_nonrecursive(long d, long e) {
    if (p_ != 2) throw std::domain_error("char2_nonrecursive: requires p = 2");
    if (d < 0 || e < d - 1)
        throw std::domain_error("char2_nonrecursive: requires d >= 0, e >= d-1");
    SymLaurent res(n_);
    // Lambda_d enumerated q ascending, then m, then j, for reproducible output.
    for (long q = 2; q <= d; q *= 2) {
        for (long m = 0; (2 * m + 1) * q <= d; ++m) {
            for (long j = 0; (2 * m + 2 * j + 1) * q <= d; ++j) {
                SymLaurent s = truncated_schur(n_, e - (2 * m - 2 * j - 1) * q,
                                               d - (2 * m + 2 * j + 1) * q, q);
                if (s.is_zero()) continue;
                res = res + nim_poly(n_, m).frobenius(2 * q) * s;
            }
        }
    }
    return res;
}

namespace {

void series_accumulate(CharSeries& dst, const std::pair<long, long>& key,
                       const SymLaurent& val) {
    if (val.is_zero()) return;
    auto [it, fresh] = dst.try_emplace(key, val);
    if (!fresh) {
        it->second = it->second + val;
        if (it->second.is_zero()) dst.erase(it);
    }
}

CharSeries series_mul(const CharSeries& a, const CharSeries& b, long max_u, long max_v) {
    CharSeries out;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) {
            const long u = ka.first + kb.first, v = ka.second + kb.second;
            if (u > max_u || v > max_v) continue;
            series_accumulate(out, {u, v}, ca * cb);
        }
    return out;
}

}  // namespace

CharSeries genfunc_residual(int n, long max_u, long max_v) {
    if (max_u < 0 || max_v < 0)
        throw std::invalid_argument("genfunc_residual: truncation orders must be >= 0");
    CohomologyEngine eng(n, 2);

    // G = sum over d >= 0, e >= -1 of h^1(D^d R(e)) u^d v^{d+e}, as polynomial
    // characters in both regimes.
    CharSeries G;
    for (long d = 0; d <= max_u; ++d) {
        for (long w = std::max<long>(0, d - 1); w <= max_v; ++w) {
            const long e = w - d;
            if (e < -1) continue;
            series_accumulate(G, {d, w}, eng.polynomial_character(1, d, e));
        }
    }

    CharSeries one_plus_u;
    series_accumulate(one_plus_u, {0, 0}, SymLaurent::one(n));
    if (max_u >= 1) series_accumulate(one_plus_u, {1, 0}, SymLaurent::one(n));

    CharSeries hp_uv, hp_v;  // h'(uv) and h'(v)
    for (long a = 0; a <= n && a <= max_u && a <= max_v; ++a)
        series_accumulate(hp_uv, {a, a}, truncated_h(n, a, 2));
    for (long b = 0; b <= n && b <= max_v; ++b)
        series_accumulate(hp_v, {0, b}, truncated_h(n, b, 2));

    CharSeries F2G;
    for (const auto& [k, c] : G)
        if (2 * k.first <= max_u && 2 * k.second <= max_v)
            series_accumulate(F2G, {2 * k.first, 2 * k.second}, c.frobenius(2));

    CharSeries uF2N;  // u * F^2(N(u v^2))
    for (long m = 0; 2 * m + 1 <= max_u && 4 * m <= max_v; ++m)
        series_accumulate(uF2N, {2 * m + 1, 4 * m}, nim_poly(n, m).frobenius(2));

    CharSeries lhs = series_mul(one_plus_u, G, max_u, max_v);
    CharSeries rhs = series_mul(series_mul(hp_uv, hp_v, max_u, max_v), F2G, max_u, max_v);
    for (const auto& [k, c] : uF2N) series_accumulate(rhs, k, c);

    CharSeries residual = lhs;
    for (const auto& [k, c] : rhs) series_accumulate(residual, k, -c);
    return residual;
}

}  // namespace incidence
