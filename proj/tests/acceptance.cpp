// Acceptance suite: runs every verification sweep at full stated ranges and
// prints one pass/fail line per criterion. Exits nonzero if any fails.

#include <cstdio>
#include <string>
#include <vector>

#include "incidence/verify.hpp"

int main(int argc, char** argv) {
    int jobs = incidence::verify::default_jobs();
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--jobs" && i + 1 < argc) jobs = std::atoi(argv[++i]);
    }

    using Fn = incidence::verify::SweepOutcome (*)(int);
    struct Criterion {
        const char* id;
        Fn fn;
    };
    const std::vector<Criterion> criteria = {
        {"01 worked-example-reproduction", [](int) { return incidence::verify::worked_examples(); }},
        {"02 cohomology-oracle-equivalence", incidence::verify::cohomology_oracle},
        {"03 char2-closed-form", incidence::verify::char2_closed_form},
        {"04 small-weights-closed-form", incidence::verify::small_weights_closed_form},
        {"05 han-monsky-table-and-dimension", incidence::verify::hm_table_and_dimension},
        {"06 summand-ideal-bridge", incidence::verify::hm_ideal_bridge},
        {"07 char2-odd-summand-law", incidence::verify::hm_odd_summand},
        {"08 principal-parts-splitting", incidence::verify::pparts_split},
        {"09 ideal-quotient-characters", incidence::verify::pparts_ideal_chars},
        {"10a wlp-worked-claims", [](int) { return incidence::verify::wlp_claims(); }},
        {"10b wlp-triple-agreement", incidence::verify::wlp_triple_agreement},
        {"10d wlp-socle-classification", incidence::verify::wlp_socle_classification},
        {"11 functional-equation", incidence::verify::functional_equation},
    };

    bool all_ok = true;
    double total = 0;
    for (const auto& c : criteria) {
        const auto outcome = c.fn(jobs);
        total += outcome.seconds;
        std::printf("criterion %-36s %s  (%lld checks, %.2f s)\n", c.id,
                    outcome.ok ? "PASS" : "FAIL", outcome.cases, outcome.seconds);
        if (!outcome.ok) {
            std::printf("    first mismatch: %s\n", outcome.first_failure.c_str());
            all_ok = false;
        }
        std::fflush(stdout);
    }
    std::printf("%s  (%.2f s total, %d workers)\n", all_ok ? "ALL CRITERIA PASS" : "FAILURES PRESENT",
                total, jobs);
    return all_ok ? 0 : 1;
}
