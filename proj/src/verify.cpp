#include "incidence/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "incidence/cohomology.hpp"
#include "incidence/hanmonsky.hpp"
#include "incidence/lefschetz.hpp"
#include "incidence/oracle.hpp"
#include "incidence/pparts.hpp"
#include "incidence/symfunc.hpp"

namespace incidence {
namespace verify {

int default_jobs() {
    const unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

namespace {

// Per work item: (cases checked, failure detail; empty string = pass).
using ItemFn = std::function<std::pair<long long, std::string>(std::size_t)>;

SweepOutcome run_items(std::string name, std::size_t count, int jobs, const ItemFn& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    SweepOutcome out;
    out.name = std::move(name);
    if (jobs < 1) jobs = 1;

    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::atomic<long long> cases{0};
    std::mutex mu;
    std::size_t fail_index = count;
    std::string fail_detail;

    auto worker = [&]() {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count || failed.load()) break;
            auto [n_cases, detail] = fn(i);
            cases += n_cases;
            if (!detail.empty()) {
                std::lock_guard<std::mutex> lk(mu);
                if (i < fail_index) {
                    fail_index = i;
                    fail_detail = detail;
                }
                failed = true;
            }
        }
    };

    if (jobs == 1 || count <= 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        const int nthreads = static_cast<int>(std::min<std::size_t>(count, jobs));
        threads.reserve(static_cast<std::size_t>(nthreads));
        for (int t = 0; t < nthreads; ++t) threads.emplace_back(worker);
        for (auto& t : threads) t.join();
    }

    out.ok = !failed.load();
    out.cases = cases.load();
    out.first_failure = fail_detail;
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

std::string sym_brief(const SymLaurent& f) {
    std::ostringstream os;
    os << "dim=" << f.dimension() << " terms=" << f.terms().size();
    return os.str();
}

// All multisets of values in [lo, hi] with 1..max_size elements.
void for_each_multiset(long lo, long hi, int max_size,
                       const std::function<void(const std::vector<long>&)>& fn) {
    std::vector<long> cur;
    std::function<void(int)> rec = [&](int remaining) {
        if (remaining == 0) return;
        for (long v = (cur.empty() ? lo : cur.back()); v <= hi; ++v) {
            cur.push_back(v);
            fn(cur);
            rec(remaining - 1);
            cur.pop_back();
        }
    };
    rec(max_size);
}

// Partitions of s into exactly n parts, each >= 1, weakly decreasing.
void for_each_tuple(long s, int n, const std::function<void(const std::vector<long>&)>& fn) {
    if (s < n) return;
    for_each_partition(s - n, n, s - n, [&](const Exponents& lam) {
        std::vector<long> a(lam.begin(), lam.end());
        for (long& x : a) x += 1;
        fn(a);
    });
}

}  // namespace

SweepOutcome worked_examples() {
    return run_items("worked-examples", 1, 1, [](std::size_t) -> std::pair<long long, std::string> {
        long long cases = 0;
        std::ostringstream fail;

        CohomologyEngine e2(5, 2);
        SymLaurent c = e2.character(1, 3, 2);
        SymLaurent want = SymLaurent::canonicalize(
            5, {{{2, 1, 1, 1, 0}, Int(1)}, {{1, 1, 1, 1, 1}, Int(4)}});
        ++cases;
        if (c != want || c.dimension() != 24)
            return {cases, "coh n=5 p=2 i=1 d=3 e=2: expected m(2,1,1,1,0)+4m(1^5), dim 24"};
        ++cases;
        if (e2.character(1, 2, 3) != SymLaurent::canonicalize(5, {{{1, 1, 1, 1, 1}, Int(1)}}))
            return {cases, "coh n=5 p=2 i=1 d=2 e=3: expected m(1^5)"};

        CohomologyEngine e3(5, 3);
        SymLaurent c3 = e3.character(1, 3, 2);
        ++cases;
        if (c3 != truncated_h(5, 5, 3) || c3.dimension() != 51)
            return {cases, "coh n=5 p=3 i=1 d=3 e=2: expected h'_5, dim 51"};
        ++cases;
        if (!e3.character(1, 2, 3).is_zero())
            return {cases, "coh n=5 p=3 i=1 d=2 e=3: expected 0"};

        CohomologyEngine e5(5, 5);
        ++cases;
        if (!e5.character(1, 3, 2).is_zero())
            return {cases, "coh n=5 p=5 i=1 d=3 e=2: expected 0"};
        return {cases, ""};
    });
}

SweepOutcome cohomology_oracle(int jobs) {
    const std::vector<int> ns = {2, 3, 4}, ps = {2, 3, 5};
    std::vector<std::pair<int, int>> items;
    for (int n : ns)
        for (int p : ps) items.emplace_back(n, p);
    return run_items("cohomology-oracle-equivalence", items.size(), jobs,
                     [items](std::size_t idx) -> std::pair<long long, std::string> {
        const auto [n, p] = items[idx];
        CohomologyEngine eng(n, p);
        long long cases = 0;
        for (long d = 0; d <= 8; ++d) {
            for (long e = std::max<long>(-1, d - 1); e <= 10; ++e) {
                auto [oh0, oh1] = oracle::sheaf_coh_char(n, p, d, 1, e);
                ++cases;
                if (eng.character(0, d, e) != oh0) {
                    std::ostringstream os;
                    os << "coh mismatch i=0 n=" << n << " p=" << p << " d=" << d << " e=" << e;
                    return {cases, os.str()};
                }
                ++cases;
                if (eng.character(1, d, e) != oh1) {
                    std::ostringstream os;
                    os << "coh mismatch i=1 n=" << n << " p=" << p << " d=" << d << " e=" << e;
                    return {cases, os.str()};
                }
            }
        }
        return {cases, ""};
    });
}

SweepOutcome char2_closed_form(int jobs) {
    std::vector<int> ns;
    for (int n = 2; n <= 12; ++n) ns.push_back(n);
    return run_items("char2-closed-form", ns.size(), jobs,
                     [ns](std::size_t idx) -> std::pair<long long, std::string> {
        const int n = ns[idx];
        CohomologyEngine eng(n, 2);
        long long cases = 0;
        for (long d = 0; d <= 8; ++d) {
            for (long e = std::max<long>(-1, d - 1); e <= 10; ++e) {
                ++cases;
                if (eng.char2_nonrecursive(d, e) != eng.character(1, d, e)) {
                    std::ostringstream os;
                    os << "char2 mismatch n=" << n << " d=" << d << " e=" << e;
                    return {cases, os.str()};
                }
            }
        }
        if (n == 11) {
            // The corrected formula carries the elementary-symmetric term
            // s^{(2)}_{(e+6,0)}; without it the closed form first fails at n = 11.
            const long d = 6, e = 5;
            SymLaurent uncorrected = truncated_schur(n, e + 4, 2, 4)
                                   + truncated_schur(n, e + 2, 4, 2)
                                   + nim_poly(n, 1).frobenius(4) * truncated_schur(n, e - 2, 0, 2);
            SymLaurent rec = eng.character(1, d, e);
            ++cases;
            if (uncorrected == rec)
                return {cases, "uncorrected 3-term formula unexpectedly agrees at n=11 d=6 e=5"};
            ++cases;
            if (uncorrected + truncated_schur(n, e + 6, 0, 2) != rec)
                return {cases, "corrected 4-term formula does not match recursion at n=11 d=6 e=5"};
        }
        return {cases, ""};
    });
}

SweepOutcome small_weights_closed_form(int jobs) {
    std::vector<std::pair<int, int>> items;
    for (int n = 2; n <= 5; ++n)
        for (int p : {2, 3}) items.emplace_back(n, p);
    return run_items("small-weights-closed-form", items.size(), jobs,
                     [items](std::size_t idx) -> std::pair<long long, std::string> {
        const auto [n, p] = items[idx];
        CohomologyEngine eng(n, p);
        long long cases = 0;
        for (long d = p; d < static_cast<long>(p) * p; ++d) {
            for (long e = d - 1; e <= d + 6; ++e) {
                ++cases;
                if (eng.small_weights(d, e) != eng.character(1, d, e)) {
                    std::ostringstream os;
                    os << "small-weights mismatch n=" << n << " p=" << p << " d=" << d
                       << " e=" << e;
                    return {cases, os.str()};
                }
            }
        }
        return {cases, ""};
    });
}

SweepOutcome hm_table_and_dimension(int jobs) {
    const std::vector<int> ps = {2, 3, 5, 7};
    return run_items("hm-table-and-dimension", ps.size(), jobs,
                     [ps](std::size_t idx) -> std::pair<long long, std::string> {
        const int p = ps[idx];
        long long cases = 0;

        HMClass want;
        if (p == 2) { want.add(7, 0); want.add(4, 1); want.add(4, 2); }
        else if (p == 3) { want.add(6, 0); want.add(6, 1); want.add(3, 2); }
        else if (p == 5) { want.add(5, 0); want.add(5, 1); want.add(5, 2); }
        else { want.add(7, 0); want.add(5, 1); want.add(3, 2); }
        ++cases;
        if (hm_product(p, {3, 5}) != want) {
            std::ostringstream os;
            os << "delta3*delta5 table row wrong at p=" << p;
            return {cases, os.str()};
        }

        std::string failure;
        long long local = 0;
        for_each_multiset(1, 10, 3, [&](const std::vector<long>& ls) {
            if (!failure.empty()) return;
            ++local;
            long long prod = 1;
            for (long l : ls) prod *= l;
            if (hm_product(p, ls).total_dimension() != prod) {
                std::ostringstream os;
                os << "dimension conservation fails p=" << p << " lengths=";
                for (long l : ls) os << l << ",";
                failure = os.str();
            }
        });
        return {cases + local, failure};
    });
}

SweepOutcome hm_ideal_bridge(int jobs) {
    std::vector<std::pair<int, long>> items;
    for (int p : {2, 3, 5})
        for (long a = 1; a <= 12; ++a) items.emplace_back(p, a);
    return run_items("hm-ideal-bridge", items.size(), jobs,
                     [items](std::size_t idx) -> std::pair<long long, std::string> {
        const auto [p, a] = items[idx];
        PPartsEngine engine(p);
        long long cases = 0;
        for (long b = a; b <= 12; ++b) {
            const HMClass pr = hm_product(p, {a, b});
            for (long r = 1; r <= a + b; ++r) {
                for (long j = 0; j <= a - 1; ++j) {
                    const bool member = pr.summands.count({r, j}) > 0;
                    ++cases;
                    if (summand_test_via_ideals(engine, a, b, r, j) != member) {
                        std::ostringstream os;
                        os << "bridge mismatch p=" << p << " a=" << a << " b=" << b
                           << " r=" << r << " j=" << j;
                        return {cases, os.str()};
                    }
                }
            }
        }
        return {cases, ""};
    });
}

SweepOutcome hm_odd_summand(int jobs) {
    std::vector<std::vector<long>> items;
    {
        std::vector<long> cur;
        std::function<void(int)> rec = [&](int remaining) {
            if (remaining == 0) return;
            for (long v = (cur.empty() ? 1 : cur.back()); v <= 15; v += 2) {
                cur.push_back(v);
                items.push_back(cur);
                rec(remaining - 1);
                cur.pop_back();
            }
        };
        rec(4);
    }
    // Largest algebras first so a worker starts on them immediately.
    std::sort(items.begin(), items.end(),
              [](const std::vector<long>& x, const std::vector<long>& y) {
                  long long px = 1, py = 1;
                  for (long v : x) px *= v;
                  for (long v : y) py *= v;
                  return px > py;
              });
    return run_items("hm-odd-summand-law", items.size(), jobs,
                     [items](std::size_t idx) -> std::pair<long long, std::string> {
        const auto& ls = items[idx];
        const HMClass pr = hm_product(2, ls);
        long odd_count = 0;
        std::pair<long, long> found{0, 0};
        for (const auto& [k, m] : pr.summands) {
            if (k.first % 2 == 1) {
                odd_count += m;
                found = k;
            }
        }
        std::ostringstream os;
        for (long l : ls) os << l << ",";
        if (odd_count != 1)
            return {1, "odd-summand count != 1 for lengths=" + os.str()};
        if (found != odd_summand_char2(ls))
            return {1, "odd-summand mismatch for lengths=" + os.str()};
        return {1, ""};
    });
}

SweepOutcome pparts_split(int jobs) {
    std::vector<std::pair<int, long>> items;
    for (int p : {2, 3})
        for (long r = 1; r <= 9; ++r) items.emplace_back(p, r);
    return run_items("pparts-splitting", items.size(), jobs,
                     [items](std::size_t idx) -> std::pair<long long, std::string> {
        const auto [p, r] = items[idx];
        PPartsEngine engine(p);
        long long cases = 0;
        for (long d = 0; d <= 30; ++d) {
            const SplitType s = engine.split_Fdr(d, r);
            std::ostringstream ctx;
            ctx << "p=" << p << " d=" << d << " r=" << r;
            ++cases;
            if (s != oracle::split_type_oracle(p, d, r))
                return {cases, "split mismatch vs oracle " + ctx.str()};
            ++cases;
            if (s.count() != (d >= r ? r : d + 1))
                return {cases, "split count invariant " + ctx.str()};
            if (d >= r) {
                const long ws = d * r - r * (r - 1) / 2;
                ++cases;
                if (s.weight_sum_u() != ws || s.weight_sum_v() != ws)
                    return {cases, "split weight-sum invariant " + ctx.str()};
                ++cases;
                if (s.twist_sum() != -r * (d - r + 1))
                    return {cases, "split twist-sum invariant " + ctx.str()};
                for (const auto& [k, m] : s.summands()) {
                    const auto [u, v, i] = k;
                    ++cases;
                    if (u < d - r + 1 || u > d || v < d - r + 1 || v > d)
                        return {cases, "split weight-window invariant " + ctx.str()};
                }
            }
        }
        return {cases, ""};
    });
}

SweepOutcome pparts_ideal_chars(int jobs) {
    struct Item { int p; long r; bool char2_check; };
    std::vector<Item> items;
    for (int p : {2, 3, 5})
        for (long r = 1; r <= 12; ++r)
            if (r % p != 0) items.push_back({p, r, false});
    for (long r = 1; r <= 31; r += 2) items.push_back({2, r, true});
    return run_items("pparts-ideal-characters", items.size(), jobs,
                     [items](std::size_t idx) -> std::pair<long long, std::string> {
        const auto [p, r, char2_check] = items[idx];
        PPartsEngine engine(p);
        long long cases = 0;
        if (!char2_check) {
            long q = p;
            while (q <= r) q *= p;
            for (long d = 0; d <= 3 * q; ++d) {
                const BiChar qc = engine.quot_char(d, r);
                for (const auto& [k, c] : qc.terms()) {
                    ++cases;
                    if (c < 0 || k.first + k.second != r - 1) {
                        std::ostringstream os;
                        os << "quotient concentration fails p=" << p << " d=" << d
                           << " r=" << r;
                        return {cases, os.str()};
                    }
                }
                ++cases;
            }
        } else {
            for (long d = 0; d <= 64; ++d) {
                ++cases;
                if (quot_char_char2(d, r) != engine.quot_char(d, r)) {
                    std::ostringstream os;
                    os << "char2 quotient closed form fails d=" << d << " r=" << r;
                    return {cases, os.str()};
                }
            }
        }
        return {cases, ""};
    });
}

SweepOutcome wlp_claims() {
    return run_items("wlp-worked-claims", 1, 1,
                     [](std::size_t) -> std::pair<long long, std::string> {
        long long cases = 0;
        for (int p : {2, 3, 5, 7}) {
            const bool want = (p >= 5);
            ++cases;
            if (wlp_query(p, {2, 2, 2, 2, 2}).wlp != want) {
                std::ostringstream os;
                os << "exponents (2,2,2,2,2) wrong at p=" << p;
                return {cases, os.str()};
            }
            ++cases;
            if (wlp_query(p, {3, 3, 2}).wlp != (p != 3)) {
                std::ostringstream os;
                os << "exponents (3,3,2) wrong at p=" << p;
                return {cases, os.str()};
            }
        }
        for (auto method : {WlpMethod::Char2, WlpMethod::Cohomology, WlpMethod::Oracle}) {
            ++cases;
            if (!wlp_query(2, {11, 4, 4, 3, 2, 2}, method).wlp)
                return {cases, "exponents (11,4,4,3,2,2) should satisfy WLP at p=2"};
            ++cases;
            if (wlp_query(2, {10, 4, 3, 3, 3, 2}, method).wlp)
                return {cases, "exponents (10,4,3,3,3,2) should fail WLP at p=2"};
        }
        return {cases, ""};
    });
}

SweepOutcome wlp_triple_agreement(int jobs) {
    std::vector<std::pair<int, int>> items;
    for (int n = 1; n <= 5; ++n)
        for (int p : {2, 3, 5}) items.emplace_back(n, p);
    return run_items("wlp-triple-agreement", items.size(), jobs,
                     [items](std::size_t idx) -> std::pair<long long, std::string> {
        const auto [n, p] = items[idx];
        long long cases = 0;
        std::string failure;
        for (long s = n; s <= 12; ++s) {
            for_each_tuple(s, n, [&](const std::vector<long>& a) {
                if (!failure.empty()) return;
                ++cases;
                const bool o = wlp_oracle(p, a);
                const bool c = wlp_cohomological(p, a);
                const bool k2 = (p == 2) ? wlp_char2(a) : o;
                if (o != c || o != k2) {
                    std::ostringstream os;
                    os << "wlp disagreement p=" << p << " a=";
                    for (long x : a) os << x << ",";
                    os << " oracle=" << o << " coh=" << c << " char2=" << k2;
                    failure = os.str();
                }
            });
            if (!failure.empty()) break;
        }
        return {cases, failure};
    });
}

SweepOutcome wlp_socle_classification(int jobs) {
    std::vector<std::pair<int, int>> items;
    for (int n : {3, 4, 5})
        for (int p : {2, 3}) items.emplace_back(n, p);
    return run_items("wlp-socle-classification", items.size(), jobs,
                     [items](std::size_t idx) -> std::pair<long long, std::string> {
        const auto [n, p] = items[idx];
        long long cases = 0;
        for (long s = n; s <= 20; ++s) {
            bool all = true;
            for_each_tuple(s, n, [&](const std::vector<long>& a) {
                if (all && !wlp_oracle(p, a)) all = false;
            });
            ++cases;
            if (socle_guarantees_wlp(n, p, s) != all) {
                std::ostringstream os;
                os << "socle classification mismatch n=" << n << " p=" << p << " s=" << s
                   << " exhaustive=" << all;
                return {cases, os.str()};
            }
        }
        return {cases, ""};
    });
}

SweepOutcome functional_equation(int jobs) {
    const std::vector<int> ns = {2, 3, 4};
    return run_items("functional-equation", ns.size(), jobs,
                     [ns](std::size_t idx) -> std::pair<long long, std::string> {
        const int n = ns[idx];
        const CharSeries residual = genfunc_residual(n, 6, 8);
        if (!residual.empty()) {
            std::ostringstream os;
            os << "functional equation residual nonzero n=" << n << " at (u,v)=("
               << residual.begin()->first.first << "," << residual.begin()->first.second
               << "): " << sym_brief(residual.begin()->second);
            return {1, os.str()};
        }
        return {1, ""};
    });
}

std::vector<SweepOutcome> run_all(int jobs) {
    return {worked_examples(),
            cohomology_oracle(jobs),
            char2_closed_form(jobs),
            small_weights_closed_form(jobs),
            hm_table_and_dimension(jobs),
            hm_ideal_bridge(jobs),
            hm_odd_summand(jobs),
            pparts_split(jobs),
            pparts_ideal_chars(jobs),
            wlp_claims(),
            wlp_triple_agreement(jobs),
            wlp_socle_classification(jobs),
            functional_equation(jobs)};
}

std::vector<SweepOutcome> run_preset(const std::string& module, const std::string& preset,
                                     int jobs) {
    auto unknown = [&]() -> std::vector<SweepOutcome> {
        throw std::invalid_argument("unknown sweep preset '" + preset + "' for module '" +
                                    module + "'");
    };
    if (module == "coh") {
        if (preset == "examples") return {worked_examples()};
        if (preset == "oracle") return {cohomology_oracle(jobs)};
        if (preset == "char2") return {char2_closed_form(jobs)};
        if (preset == "small-weights") return {small_weights_closed_form(jobs)};
        if (preset == "genfunc") return {functional_equation(jobs)};
        if (preset == "all")
            return {worked_examples(), cohomology_oracle(jobs), char2_closed_form(jobs),
                    small_weights_closed_form(jobs), functional_equation(jobs)};
        return unknown();
    }
    if (module == "pparts") {
        if (preset == "split") return {pparts_split(jobs)};
        if (preset == "ideals") return {pparts_ideal_chars(jobs)};
        if (preset == "all") return {pparts_split(jobs), pparts_ideal_chars(jobs)};
        return unknown();
    }
    if (module == "hm") {
        if (preset == "table") return {hm_table_and_dimension(jobs)};
        if (preset == "bridge") return {hm_ideal_bridge(jobs)};
        if (preset == "odd-summand") return {hm_odd_summand(jobs)};
        if (preset == "all")
            return {hm_table_and_dimension(jobs), hm_ideal_bridge(jobs), hm_odd_summand(jobs)};
        return unknown();
    }
    if (module == "wlp") {
        if (preset == "claims") return {wlp_claims()};
        if (preset == "triple") return {wlp_triple_agreement(jobs)};
        if (preset == "socle") return {wlp_socle_classification(jobs)};
        if (preset == "all")
            return {wlp_claims(), wlp_triple_agreement(jobs), wlp_socle_classification(jobs)};
        return unknown();
    }
    return unknown();
}

}  // namespace verify
}  // namespace incidence
