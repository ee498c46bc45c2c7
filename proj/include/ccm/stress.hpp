#ifndef CCM_STRESS_HPP
#define CCM_STRESS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ccm/extractor.hpp"
#include "ccm/kernels.hpp"

namespace ccm {

/// Randomized falsification harness configuration. Per-trial seeds are
/// derived from `seed` and the trial ordinal, so results do not depend on
/// scheduling or the worker count.
struct StressConfig {
    int n = 3;
    int trials = 100;
    uint64_t seed = 0;
    std::vector<double> red_densities = {0.5};
    int jobs = 1;
    bool allow_experimental_n2 = false;

    void validate() const;
};

struct TrialRecord {
    int density_index = 0;
    int trial = 0;
    uint64_t seed = 0;
    CaseTag tag = CaseTag::ConnectedPacking;
    bool verified = false;
    bool unresolved = false;
    std::string error;  // nonempty on TheoremViolation / budget exhaustion
    double seconds = 0.0;
};

struct StressSummary {
    StressConfig config;
    std::vector<TrialRecord> trials;  // ordered by global trial ordinal
    int verified = 0;
    int failed = 0;
    int unresolved = 0;

    bool all_ok() const { return failed == 0; }
};

StressSummary run_stress(const StressConfig& cfg,
                         const SearchBudget& budget = SearchBudget::from_env());

/// Deterministic report: byte-identical across reruns with the same config.
std::string format_summary(const StressSummary& s);

/// Wall-clock percentiles; nondeterministic, kept out of the report proper.
std::string format_timings(const StressSummary& s);

/// Deterministic machine-readable summary (JSON).
std::string summary_json(const StressSummary& s);

}  // namespace ccm

#endif
