#include "incidence/symfunc.hpp"

#include <algorithm>
#include <stdexcept>

namespace incidence {

bool is_prime(long p) {
    if (p < 2) return false;
    for (long f = 2; f * f <= p; ++f)
        if (p % f == 0) return false;
    return true;
}

Int orbit_size(const Exponents& v) {
    Int num;
    mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(v.size()));
    Exponents s = v;
    std::sort(s.begin(), s.end());
    std::size_t i = 0;
    while (i < s.size()) {
        std::size_t j = i;
        while (j < s.size() && s[j] == s[i]) ++j;
        Int fac;
        mpz_fac_ui(fac.get_mpz_t(), static_cast<unsigned long>(j - i));
        num /= fac;
        i = j;
    }
    return num;
}

Int monomial_count(int n, long d) {
    if (d < 0 || n <= 0) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(d + n - 1),
                 static_cast<unsigned long>(n - 1));
    return r;
}

void for_each_partition(long total, int parts, long cap,
                        const std::function<void(const Exponents&)>& fn) {
    if (total < 0 || parts < 0) return;
    Exponents cur(static_cast<std::size_t>(parts), 0);
    std::function<void(int, long, long)> rec = [&](int pos, long rem, long hi) {
        if (pos == parts) {
            if (rem == 0) fn(cur);
            return;
        }
        long top = std::min(hi, rem);
        for (long v = top; v >= 0; --v) {
            if (v * (parts - pos) < rem) break;  // remaining slots cannot reach rem
            cur[static_cast<std::size_t>(pos)] = static_cast<int>(v);
            rec(pos + 1, rem - v, v);
        }
        cur[static_cast<std::size_t>(pos)] = 0;
    };
    rec(0, total, cap);
}

SymLaurent::SymLaurent(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("SymLaurent: variable count must be positive");
}

SymLaurent SymLaurent::one(int n) {
    SymLaurent f(n);
    f.terms_.emplace(Exponents(static_cast<std::size_t>(n), 0), Int(1));
    return f;
}

void SymLaurent::insert_term(Exponents key, Int c) {
    if (c == 0) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), std::move(c));
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

SymLaurent SymLaurent::canonicalize(int n, std::vector<std::pair<Exponents, Int>> raw) {
    SymLaurent f(n);
    for (auto& [vec, c] : raw) {
        if (static_cast<int>(vec.size()) != n)
            throw std::invalid_argument("canonicalize: exponent vector of wrong length");
        std::sort(vec.begin(), vec.end(), std::greater<int>());
        f.insert_term(std::move(vec), std::move(c));
    }
    return f;
}

SymLaurent SymLaurent::operator+(const SymLaurent& o) const {
    if (n_ != o.n_) throw std::invalid_argument("SymLaurent: variable count mismatch");
    SymLaurent f = *this;
    for (const auto& [k, c] : o.terms_) f.insert_term(k, c);
    return f;
}

SymLaurent SymLaurent::operator-() const {
    SymLaurent f(n_);
    for (const auto& [k, c] : terms_) f.terms_.emplace(k, -c);
    return f;
}

SymLaurent SymLaurent::operator-(const SymLaurent& o) const { return *this + (-o); }

SymLaurent SymLaurent::operator*(const SymLaurent& o) const {
    if (n_ != o.n_) throw std::invalid_argument("SymLaurent: variable count mismatch");
    SymLaurent out(n_);
    if (terms_.empty() || o.terms_.empty()) return out;

    // Expand the operand with fewer total orbit elements; keep the other in
    // dominant form. For dominant nu, the coefficient of m_nu in m_lambda*m_mu
    // is |orbit(lambda)| * #{beta in orbit(mu) : sort(lambda+beta) = nu} / |orbit(nu)|.
    Int self_orbits(0), other_orbits(0);
    for (const auto& [k, c] : terms_) self_orbits += orbit_size(k);
    for (const auto& [k, c] : o.terms_) other_orbits += orbit_size(k);
    const SymLaurent& expand = (other_orbits <= self_orbits) ? o : *this;
    const SymLaurent& keep = (other_orbits <= self_orbits) ? *this : o;

    std::vector<std::pair<const Exponents*, Int>> kept;
    kept.reserve(keep.terms_.size());
    for (const auto& [k, c] : keep.terms_) kept.emplace_back(&k, c * orbit_size(k));

    std::map<Exponents, Int> acc;
    Exponents sum(static_cast<std::size_t>(n_));
    for (const auto& [mu, cmu] : expand.terms_) {
        Exponents beta = mu;
        std::sort(beta.begin(), beta.end());
        do {
            for (const auto& [lam, weight] : kept) {
                for (int i = 0; i < n_; ++i) sum[static_cast<std::size_t>(i)] = (*lam)[static_cast<std::size_t>(i)] + beta[static_cast<std::size_t>(i)];
                std::sort(sum.begin(), sum.end(), std::greater<int>());
                acc[sum] += cmu * weight;
            }
        } while (std::next_permutation(beta.begin(), beta.end()));
    }

    for (auto& [nu, total] : acc) {
        if (total == 0) continue;
        Int denom = orbit_size(nu);
        Int q, rem;
        mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), total.get_mpz_t(), denom.get_mpz_t());
        if (rem != 0)
            throw std::logic_error("SymLaurent: orbit count not divisible, "
                                   "product accumulation corrupted");
        out.terms_.emplace(nu, std::move(q));
    }
    return out;
}

SymLaurent SymLaurent::frobenius(long q) const {
    if (q < 1) throw std::invalid_argument("frobenius: q must be >= 1");
    SymLaurent f(n_);
    for (const auto& [k, c] : terms_) {
        Exponents k2 = k;
        for (int& x : k2) x = static_cast<int>(x * q);
        f.terms_.emplace(std::move(k2), c);
    }
    return f;
}

SymLaurent SymLaurent::dualized() const {
    SymLaurent f(n_);
    for (const auto& [k, c] : terms_) {
        Exponents k2 = k;
        for (int& x : k2) x = -x;
        std::sort(k2.begin(), k2.end(), std::greater<int>());
        f.terms_.emplace(std::move(k2), c);
    }
    return f;
}

Int SymLaurent::dimension() const {
    Int d(0);
    for (const auto& [k, c] : terms_) d += c * orbit_size(k);
    return d;
}

Int SymLaurent::coeff_of(Exponents a) const {
    if (static_cast<int>(a.size()) != n_)
        throw std::invalid_argument("coeff_of: exponent vector of wrong length");
    std::sort(a.begin(), a.end(), std::greater<int>());
    auto it = terms_.find(a);
    return it == terms_.end() ? Int(0) : it->second;
}

SymLaurent complete_family(int n, long d, long cap) {
    SymLaurent f(n);
    if (d < 0) return f;
    for_each_partition(d, n, cap, [&](const Exponents& lam) {
        f.terms_.emplace(lam, Int(1));
    });
    return f;
}

SymLaurent complete_h(int n, long d) { return complete_family(n, d, d < 0 ? 0 : d); }

SymLaurent truncated_h(int n, long d, long q) {
    if (q < 2) throw std::invalid_argument("truncated_h: q must be >= 2");
    if (d < 0 || d > n * (q - 1)) return SymLaurent::zero(n);
    return complete_family(n, d, q - 1);
}

SymLaurent schur2(int n, long a, long b) {
    return complete_h(n, a) * complete_h(n, b) - complete_h(n, a + 1) * complete_h(n, b - 1);
}

SymLaurent truncated_schur(int n, long a, long b, long q) {
    return truncated_h(n, a, q) * truncated_h(n, b, q)
         - truncated_h(n, a + 1, q) * truncated_h(n, b - 1, q);
}

SymLaurent nim_poly(int n, long m) {
    if (m < 0) throw std::invalid_argument("nim_poly: m must be >= 0");
    std::vector<std::pair<Exponents, Int>> raw;
    for_each_partition(2 * m, n, 2 * m, [&](const Exponents& lam) {
        long x = 0;
        for (int v : lam) x ^= v;
        if (x == 0) raw.emplace_back(lam, Int(1));
    });
    return SymLaurent::canonicalize(n, std::move(raw));
}

long nim_sum(const std::vector<long>& values) {
    long x = 0;
    for (long v : values) {
        if (v < 0) throw std::invalid_argument("nim_sum: negative input");
        x ^= v;
    }
    return x;
}

SymLaurent phi(int n, int p, long d, long e) {
    if (!is_prime(p)) throw std::invalid_argument("phi: p must be prime");
    SymLaurent f(n);
    for (long j = 0; j * p <= d; ++j) {
        f = f + truncated_h(n, e + j * p, p) * truncated_h(n, d - j * p, p)
              - truncated_h(n, e + 1 + j * p, p) * truncated_h(n, d - 1 - j * p, p);
    }
    return f;
}

}  // namespace incidence
