#include "incidence/pparts.hpp"

#include <stdexcept>

#include "incidence/symfunc.hpp"

namespace incidence {

long long BiChar::coeff(long u, long v) const {
    auto it = terms_.find({u, v});
    return it == terms_.end() ? 0 : it->second;
}

long long BiChar::total_dimension() const {
    long long s = 0;
    for (const auto& [k, c] : terms_) s += c;
    return s;
}

void BiChar::add_term(long u, long v, long long c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace({u, v}, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BiChar BiChar::operator+(const BiChar& o) const {
    BiChar out = *this;
    for (const auto& [k, c] : o.terms_) out.add_term(k.first, k.second, c);
    return out;
}

BiChar BiChar::operator-(const BiChar& o) const {
    BiChar out = *this;
    for (const auto& [k, c] : o.terms_) out.add_term(k.first, k.second, -c);
    return out;
}

BiChar BiChar::operator*(const BiChar& o) const {
    BiChar out;
    for (const auto& [k1, c1] : terms_)
        for (const auto& [k2, c2] : o.terms_)
            out.add_term(k1.first + k2.first, k1.second + k2.second, c1 * c2);
    return out;
}

BiChar BiChar::shifted(long du, long dv) const {
    BiChar out;
    for (const auto& [k, c] : terms_) out.add_term(k.first + du, k.second + dv, c);
    return out;
}

BiChar BiChar::dualized() const {
    BiChar out;
    for (const auto& [k, c] : terms_) out.add_term(-k.first, -k.second, c);
    return out;
}

bool BiChar::is_swap_symmetric() const {
    for (const auto& [k, c] : terms_)
        if (coeff(k.second, k.first) != c) return false;
    return true;
}

BiChar staircase_char(long d) {
    BiChar out;
    for (long u = 0; u < d; ++u)
        for (long v = 0; u + v < d; ++v) out.add_term(u, v, 1);
    return out;
}

BiChar frobenius_staircase_char(long a, long qprime) {
    BiChar out;
    for (long u = 0; u < a * qprime; ++u)
        for (long v = 0; v < a * qprime; ++v)
            if (u / qprime + v / qprime <= a - 1) out.add_term(u, v, 1);
    return out;
}

BiChar frobenius_h2(long a, long qprime) {
    BiChar out;
    for (long i = 0; i <= a; ++i) out.add_term(i * qprime, (a - i) * qprime, 1);
    return out;
}

long SplitType::count() const {
    long c = 0;
    for (const auto& [k, m] : summands_) c += m;
    return c;
}

long SplitType::weight_sum_u() const {
    long s = 0;
    for (const auto& [k, m] : summands_) s += std::get<0>(k) * m;
    return s;
}

long SplitType::weight_sum_v() const {
    long s = 0;
    for (const auto& [k, m] : summands_) s += std::get<1>(k) * m;
    return s;
}

long SplitType::twist_sum() const {
    long s = 0;
    for (const auto& [k, m] : summands_) s += std::get<2>(k) * m;
    return s;
}

void SplitType::add(long u, long v, long i, long mult) {
    if (mult == 0) return;
    auto [it, fresh] = summands_.try_emplace({u, v, i}, mult);
    if (!fresh) {
        it->second += mult;
        if (it->second == 0) summands_.erase(it);
    }
}

SplitType SplitType::shifted(long du, long dv, long di) const {
    SplitType out;
    for (const auto& [k, m] : summands_)
        out.add(std::get<0>(k) + du, std::get<1>(k) + dv, std::get<2>(k) + di, m);
    return out;
}

void SplitType::merge(const SplitType& o) {
    for (const auto& [k, m] : o.summands_)
        add(std::get<0>(k), std::get<1>(k), std::get<2>(k), m);
}

bool nc_member(long a, long b) {
    if (a < 0 || b < 0) throw std::invalid_argument("nc_member: negative input");
    return (a & b) == 0;
}

BiChar quot_char_char2(long d, long r) {
    if (r < 1 || r % 2 == 0) throw std::invalid_argument("quot_char_char2: r must be odd >= 1");
    BiChar out;
    if (d < r || !nc_member(r, d - r)) return out;
    out.add_term(0, 0, 1);
    for (int bit = 1; (1L << bit) <= r; ++bit)
        if (r >> bit & 1) {
            BiChar f;  // F^{2^bit}(h_1)
            f.add_term(1L << bit, 0, 1);
            f.add_term(0, 1L << bit, 1);
            out = out * f;
        }
    return out;
}

PPartsEngine::PPartsEngine(int p) : p_(p) {
    if (!is_prime(p)) throw std::invalid_argument("PPartsEngine: p must be prime");
}

long PPartsEngine::split_window(long r) const {
    long q = p_;
    while (q < r) q *= p_;
    return q;
}

long PPartsEngine::bc_window(long r) const {
    long q = p_;
    while (q <= r) q *= p_;
    return q;
}

// H_{a,b} = sum of L_{a+b-i,i} for b <= i <= a; zero when a < b.
static void add_H(SplitType& out, long a, long b, long twist) {
    for (long i = b; i <= a; ++i) out.add(a + b - i, i, twist);
}

SplitType PPartsEngine::split_raw(long d, long r) {
    if (r <= 0) return {};
    auto key = std::make_pair(d, r);
    if (auto it = split_memo_.find(key); it != split_memo_.end()) return it->second;

    SplitType out;
    if (d < r) {
        add_H(out, d, 0, 0);
    } else if (r == 1) {
        // F^d_1 is the d-th tensor power of the tautological subsheaf.
        out.add(d, d, -d);
    } else {
        const long q = split_window(r);
        if (d >= q + r - 1) {
            out = split_raw(d - q, r).shifted(q, q, -q);
        } else if (d >= q - 1) {
            add_H(out, d, q, -q);
            add_H(out, q - 1, d - r + 1, r - q);
        } else {
            const long qp = q / p_;
            const long a = r / qp;
            if (a < 1 || a >= p_ || a * qp > r || r >= (a + 1) * qp)
                throw std::logic_error("split_Fdr: window parameter out of range");
            SplitType s1 = split_raw(d - a * qp, r - a * qp);
            SplitType s2 = split_raw(d - r + qp, (a + 1) * qp - r);
            for (long a1 = 0; a1 <= a; ++a1)
                out.merge(s1.shifted(a1 * qp, (a - a1) * qp, 0));
            for (long a1 = 0; a1 <= a - 1; ++a1)
                out.merge(s2.shifted(a1 * qp, (a - 1 - a1) * qp, r - a * qp));
        }
    }
    split_memo_.emplace(key, out);
    return out;
}

SplitType PPartsEngine::split_Fdr(long d, long r) {
    if (d < 0 || r < 1) throw std::invalid_argument("split_Fdr: need d >= 0, r >= 1");
    return split_raw(d, r);
}

BiChar PPartsEngine::b_char(long d, long r) {
    if (r == 0) return {};
    if (d < 0) throw std::logic_error("b_char: negative d");
    const long q = bc_window(r);
    const long dd = d % q;
    auto key = std::make_pair(dd, r);
    if (auto it = b_memo_.find(key); it != b_memo_.end()) return it->second;

    BiChar out;
    if (dd <= r) {
        out = staircase_char(dd);
    } else {
        const long qp = q / p_;
        const long a = r / qp;
        if (a < 1 || a >= p_ || a * qp > r || r >= (a + 1) * qp)
            throw std::logic_error("b_char: window parameter out of range");
        BiChar t1 = frobenius_h2(a, qp) * b_char(dd - a * qp, r - a * qp);
        BiChar t2 = frobenius_h2(a - 1, qp)
                  * c_char(dd - r - 1 + qp, (a + 1) * qp - r - 1).dualized().shifted(qp - 1, qp - 1);
        out = t1 - t2 + frobenius_staircase_char(a, qp);
    }
    b_memo_.emplace(key, out);
    return out;
}

BiChar PPartsEngine::c_char(long d, long r) {
    if (r == 0) return {};
    const long q = bc_window(r);
    long dd = ((d % q) + q) % q;
    while (dd < r) dd += q;  // periodic lift into [r, q+r-1]
    auto key = std::make_pair(dd, r);
    if (auto it = c_memo_.find(key); it != c_memo_.end()) return it->second;

    BiChar out = b_char(q + r - 1 - dd, r);
    c_memo_.emplace(key, out);
    return out;
}

std::pair<BiChar, BiChar> PPartsEngine::bc_char(long d, long r) {
    if (r < 0) throw std::invalid_argument("bc_char: need r >= 0");
    if (r > 0 && d < 0) throw std::invalid_argument("bc_char: need d >= 0");
    return {b_char(d, r), c_char(d, r)};
}

BiChar PPartsEngine::quot_char(long d, long r) {
    if (r < 1) throw std::invalid_argument("quot_char: need r >= 1");
    return c_char(d, r) - c_char(d - 1, r - 1);
}

namespace detail {

SplitType split_overlap_case2(int p, long r) {
    PPartsEngine eng(p);
    long q = p;
    while (q < r) q *= p;
    const long d = q + r - 1;
    return eng.split_Fdr(d - q, r).shifted(q, q, -q);
}

SplitType split_overlap_case3(int p, long r) {
    long q = p;
    while (q < r) q *= p;
    const long d = q + r - 1;
    SplitType out;
    add_H(out, d, q, -q);
    add_H(out, q - 1, d - r + 1, r - q);
    return out;
}

}  // namespace detail

}  // namespace incidence
