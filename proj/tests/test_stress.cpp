#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ccm/errors.hpp"
#include "ccm/stress.hpp"

using namespace ccm;

TEST_CASE("config validation") {
    StressConfig cfg;
    cfg.trials = 0;
    CHECK_THROWS_AS(cfg.validate(), InvalidInput);
    cfg.trials = 1;
    cfg.red_densities = {1.5};
    CHECK_THROWS_AS(cfg.validate(), InvalidInput);
    cfg.red_densities = {};
    CHECK_THROWS_AS(cfg.validate(), InvalidInput);
    cfg.red_densities = {0.5};
    cfg.n = 2;
    CHECK_THROWS_AS(cfg.validate(), InvalidInput);  // needs the experimental flag
    cfg.allow_experimental_n2 = true;
    CHECK_NOTHROW(cfg.validate());
}

TEST_CASE("100 trials at p=0.5 seed=42 all verify; reruns are identical") {
    StressConfig cfg;
    cfg.n = 3;
    cfg.trials = 100;
    cfg.seed = 42;
    cfg.red_densities = {0.5};
    cfg.jobs = 4;
    StressSummary a = run_stress(cfg);
    CHECK(a.verified == 100);
    CHECK(a.failed == 0);
    CHECK(a.all_ok());

    cfg.jobs = 1;  // scheduling must not affect the report
    StressSummary b = run_stress(cfg);
    CHECK(format_summary(a) == format_summary(b));
    CHECK(summary_json(a) == summary_json(b));
    for (size_t i = 0; i < a.trials.size(); ++i) {
        CHECK(a.trials[i].seed == b.trials[i].seed);
        CHECK(a.trials[i].tag == b.trials[i].tag);
    }
}

TEST_CASE("all-blue density: every certificate comes from the early exit") {
    StressConfig cfg;
    cfg.n = 3;
    cfg.trials = 100;
    cfg.seed = 7;
    cfg.red_densities = {0.0};
    cfg.jobs = 2;
    StressSummary s = run_stress(cfg);
    CHECK(s.verified == 100);
    for (const TrialRecord& rec : s.trials) CHECK(rec.tag == CaseTag::ConnectedPacking);
    CHECK(format_summary(s).find("result: PASS") != std::string::npos);
}

TEST_CASE("timing report exists but stays out of the deterministic summary") {
    StressConfig cfg;
    cfg.n = 3;
    cfg.trials = 5;
    cfg.seed = 1;
    StressSummary s = run_stress(cfg);
    CHECK(format_timings(s).find("median=") != std::string::npos);
    CHECK(format_summary(s).find("median=") == std::string::npos);
    CHECK(summary_json(s).find("seconds") == std::string::npos);
}
