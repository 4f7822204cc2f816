#include "incidence/hanmonsky.hpp"

#include <numeric>
#include <stdexcept>

#include "incidence/oracle.hpp"
#include "incidence/symfunc.hpp"

namespace incidence {

void HMClass::add(long c, long j, long mult) {
    if (mult == 0) return;
    auto [it, fresh] = summands.try_emplace({c, j}, mult);
    if (!fresh) {
        it->second += mult;
        if (it->second == 0) summands.erase(it);
    }
}

long long HMClass::total_dimension() const {
    long long s = 0;
    for (const auto& [k, m] : summands) s += static_cast<long long>(k.first) * m;
    return s;
}

HMClass hm_product(int p, const std::vector<long>& lengths) {
    if (!is_prime(p)) throw std::invalid_argument("hm_product: p must be prime");
    if (lengths.empty()) throw std::invalid_argument("hm_product: empty lengths");
    const auto table = oracle::jordan_ranks(p, lengths);
    HMClass out;
    // delta_c(-j) multiplicity from the string-count formula on the rank table.
    for (long j = 0; j <= table.socle; ++j) {
        for (long c = 1; c + j <= table.socle + 1; ++c) {
            const long N = (table.r(j, c - 1) - table.r(j, c))
                         - (table.r(j - 1, c) - table.r(j - 1, c + 1));
            if (N < 0) throw std::logic_error("hm_product: negative string count");
            out.add(c, j, N);
        }
    }
    return out;
}

HMClass hm_class_product(int p, const HMClass& x, const HMClass& y) {
    HMClass out;
    for (const auto& [kx, mx] : x.summands)
        for (const auto& [ky, my] : y.summands) {
            HMClass pair = hm_product(p, {kx.first, ky.first});
            for (const auto& [k, m] : pair.summands)
                out.add(k.first, k.second + kx.second + ky.second, m * mx * my);
        }
    return out;
}

bool check_prime_shift_constraint(int p, const std::vector<long>& lengths,
                                  const HMClass& result) {
    const long total = std::accumulate(lengths.begin(), lengths.end(), 0L);
    const long expected = total - (static_cast<long>(lengths.size()) - 1);
    for (const auto& [k, m] : result.summands)
        if (k.first % p != 0 && k.first + 2 * k.second != expected) return false;
    return true;
}

std::pair<long, long> odd_summand_char2(const std::vector<long>& odd_lengths) {
    if (odd_lengths.empty())
        throw std::invalid_argument("odd_summand_char2: empty lengths");
    std::vector<long> a;
    a.reserve(odd_lengths.size());
    for (long l : odd_lengths) {
        if (l < 1 || l % 2 == 0)
            throw std::invalid_argument("odd_summand_char2: lengths must be odd >= 1");
        a.push_back((l - 1) / 2);
    }
    const long c = nim_sum(a);
    const long j = std::accumulate(a.begin(), a.end(), 0L) - c;
    return {2 * c + 1, j};
}

bool summand_test_via_ideals(PPartsEngine& engine, long a, long b, long r, long j) {
    if (a < 1 || b < 1 || r < 1 || j < 0)
        throw std::invalid_argument("summand_test_via_ideals: need a,b,r >= 1, j >= 0");
    const long d = a + b - 1 - j;
    return engine.quot_char(d, r).coeff(a - 1 + r - d, b - 1 + r - d) != 0;
}

bool summand_test_via_ideals(int p, long a, long b, long r, long j) {
    PPartsEngine engine(p);
    return summand_test_via_ideals(engine, a, b, r, j);
}

}  // namespace incidence
