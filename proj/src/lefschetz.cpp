#include "incidence/lefschetz.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "incidence/cohomology.hpp"
#include "incidence/oracle.hpp"

namespace incidence {

std::optional<long> theta_q(long x, long q) {
    if (q < 2 || (q & (q - 1)) != 0)
        throw std::invalid_argument("theta_q: q must be a power of 2, q >= 2");
    if (x < 0) throw std::invalid_argument("theta_q: x must be >= 0");
    const long r = x % (2 * q);
    if (r <= q - 1) return r;
    if (r <= 2 * q - 2) return 2 * q - 2 - r;
    return std::nullopt;
}

namespace {

// nullopt when some theta is -infinity (the sum then satisfies any bound)
std::optional<long> theta_sum(const std::vector<long>& a, long q) {
    long s = 0;
    for (long x : a) {
        auto t = theta_q(x, q);
        if (!t) return std::nullopt;
        s += *t;
    }
    return s;
}

}  // namespace

bool wlp_char2(const std::vector<long>& a) {
    for (long x : a)
        if (x < 0) throw std::invalid_argument("wlp_char2: entries must be >= 0");
    const long m = a.empty() ? 0 : *std::max_element(a.begin(), a.end());
    const long x = nim_sum(a);
    for (long q = 2; q <= 2 * m; q *= 2) {
        if (2 * q <= x) continue;
        auto s = theta_sum(a, q);
        if (s && *s > 2 * q - 2) return false;
    }
    return true;
}

bool wlp_cohomological(int p, const std::vector<long>& a) {
    const int n = static_cast<int>(a.size());
    if (n < 1) throw std::invalid_argument("wlp_cohomological: empty tuple");
    for (long x : a)
        if (x < 0) throw std::invalid_argument("wlp_cohomological: entries must be >= 0");
    if (n == 1) return true;
    const long s = std::accumulate(a.begin(), a.end(), 0L);
    CohomologyEngine eng(n, p);
    Exponents abar(a.begin(), a.end());
    return eng.polynomial_character(1, (s + 1) / 2, s / 2).coeff_of(abar) == 0;
}

bool socle_guarantees_wlp(int n, int p, long s) {
    if (n < 3) throw std::invalid_argument("socle_guarantees_wlp: requires n >= 3");
    if (!is_prime(p)) throw std::invalid_argument("socle_guarantees_wlp: p must be prime");
    if (s < 0) throw std::invalid_argument("socle_guarantees_wlp: s must be >= 0");
    if (s <= 2 * p - 2) return true;
    if (n == 3) {
        for (long q = p; q <= s + 4; q *= p)
            for (long t = 1; t < p; ++t)
                if ((2 * t + 2) * q - 4 <= s && s <= (2 * t + 2) * q - 2) return true;
    }
    if (n == 4 && p == 2 && s == 6) return true;
    return false;
}

bool wlp_oracle(int p, const std::vector<long>& a) {
    const auto mr = oracle::artinian_mult_ranks(p, a);
    for (std::size_t e = 0; e + 1 < mr.dims.size(); ++e)
        if (mr.ranks[e] != std::min(mr.dims[e], mr.dims[e + 1])) return false;
    return true;
}

WlpResult wlp_query(int p, const std::vector<long>& exponents, WlpMethod method) {
    if (exponents.empty()) throw std::invalid_argument("wlp_query: empty exponents");
    std::vector<long> a;
    a.reserve(exponents.size());
    for (long e : exponents) {
        if (e < 2) throw std::invalid_argument("wlp_query: ideal exponents must be >= 2");
        a.push_back(e - 1);
    }
    if (method == WlpMethod::Auto)
        method = (p == 2) ? WlpMethod::Char2 : WlpMethod::Cohomology;

    WlpResult res;
    switch (method) {
        case WlpMethod::Char2: {
            if (p != 2) throw std::domain_error("wlp method char2 requires p = 2");
            const long m = *std::max_element(a.begin(), a.end());
            const long x = nim_sum(a);
            res.wlp = true;
            for (long q = 2; q <= 2 * m; q *= 2) {
                if (2 * q <= x) continue;
                auto s = theta_sum(a, q);
                if (s && *s > 2 * q - 2) {
                    res.wlp = false;
                    res.witness_q = q;
                    break;
                }
            }
            break;
        }
        case WlpMethod::Cohomology: {
            res.wlp = wlp_cohomological(p, a);
            if (!res.wlp) res.witness_monomial = a;
            break;
        }
        case WlpMethod::Oracle: {
            res.wlp = wlp_oracle(p, a);
            break;
        }
        case WlpMethod::Auto:
            break;  // unreachable
    }
    return res;
}

}  // namespace incidence
