#pragma once

#include <string>
#include <vector>

namespace incidence {
namespace verify {

struct SweepOutcome {
    std::string name;
    bool ok = true;
    long long cases = 0;
    double seconds = 0.0;
    std::string first_failure;  // reproduction parameters of the first mismatch
};

// Each sweep runs one acceptance criterion exactly as stated (zero tolerance).
SweepOutcome worked_examples();
SweepOutcome cohomology_oracle(int jobs);
SweepOutcome char2_closed_form(int jobs);
SweepOutcome small_weights_closed_form(int jobs);
SweepOutcome hm_table_and_dimension(int jobs);
SweepOutcome hm_ideal_bridge(int jobs);
SweepOutcome hm_odd_summand(int jobs);
SweepOutcome pparts_split(int jobs);
SweepOutcome pparts_ideal_chars(int jobs);
SweepOutcome wlp_claims();
SweepOutcome wlp_triple_agreement(int jobs);
SweepOutcome wlp_socle_classification(int jobs);
SweepOutcome functional_equation(int jobs);

std::vector<SweepOutcome> run_all(int jobs);

/// Sweeps for one CLI module ("coh", "pparts", "hm", "wlp") and preset name;
/// preset "all" runs every sweep of the module. Throws std::invalid_argument
/// for unknown names.
std::vector<SweepOutcome> run_preset(const std::string& module,
                                     const std::string& preset, int jobs);

int default_jobs();

}  // namespace verify
}  // namespace incidence
