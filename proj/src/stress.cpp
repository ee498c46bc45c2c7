#include "ccm/stress.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "ccm/errors.hpp"
#include "ccm/rng.hpp"

namespace ccm {

void StressConfig::validate() const {
    if (trials < 1) throw InvalidInput("stress requires trials >= 1");
    if (n < 2) throw InvalidInput("stress requires n >= 2");
    if (n == 2 && !allow_experimental_n2)
        throw InvalidInput("n=2 is experimental; pass --experimental-n2");
    if (red_densities.empty()) throw InvalidInput("stress requires at least one red density");
    for (double p : red_densities)
        if (!(p >= 0.0 && p <= 1.0)) throw InvalidInput("red densities must lie in [0,1]");
    if (jobs < 1) throw InvalidInput("stress requires jobs >= 1");
}

StressSummary run_stress(const StressConfig& cfg, const SearchBudget& budget) {
    cfg.validate();
    const int order = 13 * cfg.n - 3;
    const int total = static_cast<int>(cfg.red_densities.size()) * cfg.trials;

    StressSummary summary;
    summary.config = cfg;
    summary.trials.resize(total);

    std::atomic<int> next{0};
    auto worker = [&]() {
        while (true) {
            int ordinal = next.fetch_add(1);
            if (ordinal >= total) return;
            TrialRecord& rec = summary.trials[ordinal];
            rec.density_index = ordinal / cfg.trials;
            rec.trial = ordinal % cfg.trials;
            rec.seed = derive_seed(cfg.seed, static_cast<uint64_t>(ordinal));
            double p = cfg.red_densities[rec.density_index];
            EdgeColoring coloring = random_coloring(order, p, rec.seed);
            auto t0 = std::chrono::steady_clock::now();
            try {
                ExtractOutcome outcome = extract(coloring, cfg.n, budget);
                rec.tag = outcome.tag;
                if (outcome.certificate) {
                    rec.verified =
                        verify_certificate(coloring, *outcome.certificate, cfg.n).ok;
                    if (!rec.verified) rec.error = "certificate rejected by verifier";
                } else {
                    rec.unresolved = true;
                }
            } catch (const std::exception& e) {
                rec.error = e.what();
            }
            rec.seconds =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        }
    };

    int jobs = std::min(cfg.jobs, total);
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    for (const TrialRecord& rec : summary.trials) {
        if (rec.verified)
            ++summary.verified;
        else if (rec.unresolved)
            ++summary.unresolved;
        else
            ++summary.failed;
    }
    return summary;
}

namespace {

constexpr CaseTag kAllTags[] = {CaseTag::ConnectedPacking, CaseTag::ComponentPacking, CaseTag::Case11,
                                CaseTag::Case12,     CaseTag::Case21,        CaseTag::Case22,
                                CaseTag::UnresolvedN2};

std::string density_str(double p) {
    std::ostringstream out;
    out << p;
    return out.str();
}

std::vector<int> histogram(const StressSummary& s, int density_index) {
    std::vector<int> h(std::size(kAllTags), 0);
    for (const TrialRecord& rec : s.trials) {
        if (density_index >= 0 && rec.density_index != density_index) continue;
        if (!rec.error.empty()) continue;
        for (size_t i = 0; i < std::size(kAllTags); ++i)
            if (kAllTags[i] == rec.tag) ++h[i];
    }
    return h;
}

void print_histogram(std::ostream& out, const std::vector<int>& h) {
    bool any = false;
    for (size_t i = 0; i < h.size(); ++i)
        if (h[i]) {
            out << (any ? " " : "") << case_tag_name(kAllTags[i]) << "=" << h[i];
            any = true;
        }
    if (!any) out << "none";
}

}  // namespace

std::string format_summary(const StressSummary& s) {
    std::ostringstream out;
    out << "stress n=" << s.config.n << " trials=" << s.config.trials << " seed=" << s.config.seed
        << " densities=";
    for (size_t i = 0; i < s.config.red_densities.size(); ++i)
        out << (i ? "," : "") << density_str(s.config.red_densities[i]);
    out << " order=" << 13 * s.config.n - 3 << "\n";
    for (size_t d = 0; d < s.config.red_densities.size(); ++d) {
        int verified = 0, failed = 0, unresolved = 0;
        for (const TrialRecord& rec : s.trials)
            if (rec.density_index == static_cast<int>(d)) {
                if (rec.verified)
                    ++verified;
                else if (rec.unresolved)
                    ++unresolved;
                else
                    ++failed;
            }
        out << "p_red=" << density_str(s.config.red_densities[d]) << ": trials=" << s.config.trials
            << " verified=" << verified << " failed=" << failed << " unresolved=" << unresolved
            << " cases: ";
        print_histogram(out, histogram(s, static_cast<int>(d)));
        out << "\n";
    }
    out << "total: trials=" << s.trials.size() << " verified=" << s.verified
        << " failed=" << s.failed << " unresolved=" << s.unresolved << " cases: ";
    print_histogram(out, histogram(s, -1));
    out << "\n";
    bool any_issue = false;
    for (const TrialRecord& rec : s.trials) {
        if (rec.error.empty() && !rec.unresolved) continue;
        any_issue = true;
        out << (rec.unresolved ? "unresolved" : "failure") << ": p_red="
            << density_str(s.config.red_densities[rec.density_index]) << " trial=" << rec.trial
            << " seed=" << rec.seed;
        if (!rec.error.empty()) out << " error=\"" << rec.error << "\"";
        out << "\n";
    }
    if (!any_issue) out << "failures: none\n";
    out << "result: " << (s.all_ok() ? "PASS" : "FAIL") << "\n";
    return out.str();
}

std::string format_timings(const StressSummary& s) {
    std::vector<double> times;
    times.reserve(s.trials.size());
    for (const TrialRecord& rec : s.trials) times.push_back(rec.seconds);
    std::sort(times.begin(), times.end());
    auto pct = [&](double q) {
        if (times.empty()) return 0.0;
        size_t i = static_cast<size_t>(std::ceil(q * times.size()));
        return times[std::min(times.size() - 1, i == 0 ? 0 : i - 1)];
    };
    std::ostringstream out;
    out << "timing (wall clock, not part of the report): median=" << pct(0.5)
        << "s p99=" << pct(0.99) << "s max=" << (times.empty() ? 0.0 : times.back()) << "s\n";
    return out.str();
}

std::string summary_json(const StressSummary& s) {
    nlohmann::ordered_json j;
    j["n"] = s.config.n;
    j["order"] = 13 * s.config.n - 3;
    j["trials_per_density"] = s.config.trials;
    j["seed"] = s.config.seed;
    j["densities"] = s.config.red_densities;
    j["verified"] = s.verified;
    j["failed"] = s.failed;
    j["unresolved"] = s.unresolved;
    nlohmann::ordered_json per;
    for (size_t d = 0; d < s.config.red_densities.size(); ++d) {
        nlohmann::ordered_json cell;
        cell["p_red"] = s.config.red_densities[d];
        int verified = 0, failed = 0, unresolved = 0;
        for (const TrialRecord& rec : s.trials)
            if (rec.density_index == static_cast<int>(d)) {
                if (rec.verified)
                    ++verified;
                else if (rec.unresolved)
                    ++unresolved;
                else
                    ++failed;
            }
        cell["verified"] = verified;
        cell["failed"] = failed;
        cell["unresolved"] = unresolved;
        auto h = histogram(s, static_cast<int>(d));
        nlohmann::ordered_json cases;
        for (size_t i = 0; i < h.size(); ++i)
            if (h[i]) cases[case_tag_name(kAllTags[i])] = h[i];
        cell["cases"] = cases;
        per.push_back(cell);
    }
    j["per_density"] = per;
    nlohmann::ordered_json failures = nlohmann::ordered_json::array();
    for (const TrialRecord& rec : s.trials)
        if (!rec.error.empty() || rec.unresolved) {
            nlohmann::ordered_json f;
            f["p_red"] = s.config.red_densities[rec.density_index];
            f["trial"] = rec.trial;
            f["seed"] = rec.seed;
            f["unresolved"] = rec.unresolved;
            if (!rec.error.empty()) f["error"] = rec.error;
            failures.push_back(f);
        }
    j["failures"] = failures;
    j["result"] = s.all_ok() ? "PASS" : "FAIL";
    return j.dump(2) + "\n";
}

}  // namespace ccm
