#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "ccm/errors.hpp"
#include "ccm/extractor.hpp"
#include "ccm/extremal.hpp"
#include "ccm/oracles.hpp"
#include "ccm/partition.hpp"
#include "ccm/rng.hpp"
#include "ccm/selftest.hpp"
#include "ccm/stress.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ccm::InvalidInput("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ccm::InvalidInput("cannot open output file: " + path);
    out << content;
}

std::vector<int> parse_csv_ints(const std::string& text, const std::string& what) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t used = 0;
            int v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw ccm::InvalidInput("invalid " + what + " entry: \"" + item + "\"");
        }
    }
    if (out.empty()) throw ccm::InvalidInput(what + " list is empty");
    return out;
}

std::vector<double> parse_csv_doubles(const std::string& text, const std::string& what) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t used = 0;
            double v = std::stod(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw ccm::InvalidInput("invalid " + what + " entry: \"" + item + "\"");
        }
    }
    if (out.empty()) throw ccm::InvalidInput(what + " list is empty");
    return out;
}

// "1-36" / "1,2,5-9": 1-indexed vertex selection, returned 0-indexed sorted.
std::vector<int> parse_subset(const std::string& text) {
    std::vector<int> verts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t dash = item.find('-');
        try {
            if (dash == std::string::npos) {
                verts.push_back(std::stoi(item));
            } else {
                int lo = std::stoi(item.substr(0, dash));
                int hi = std::stoi(item.substr(dash + 1));
                if (lo > hi) throw std::invalid_argument(item);
                for (int v = lo; v <= hi; ++v) verts.push_back(v);
            }
        } catch (const std::exception&) {
            throw ccm::InvalidInput("invalid subset entry: \"" + item + "\"");
        }
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    if (verts.empty()) throw ccm::InvalidInput("subset selects no vertices");
    if (verts.front() < 1) throw ccm::InvalidInput("subset vertices are 1-indexed");
    for (int& v : verts) --v;
    return verts;
}

std::string format_quads(const std::vector<ccm::Quad>& quads) {
    std::ostringstream out;
    for (const auto& q : quads) {
        out << " {";
        for (int i = 0; i < 4; ++i) out << (i ? "," : "") << q[i] + 1;
        out << "}";
    }
    return out.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"connected 4-clique matching Ramsey machinery (R_2(c(nK4)) = 13n-3)"};
    app.require_subcommand(1);

    // gen-extremal
    auto* gen_ext = app.add_subcommand("gen-extremal",
                                       "emit the lower-bound coloring on 13n-4 vertices");
    int ge_n = 3;
    std::string ge_out = "-";
    bool ge_compact = false;
    gen_ext->add_option("-n,--copies", ge_n, "copy count n >= 2")->required();
    gen_ext->add_option("-o,--output", ge_out, "output file (default stdout)");
    gen_ext->add_flag("--compact", ge_compact, "use the eccx hex format");

    // gen-random
    auto* gen_rand = app.add_subcommand("gen-random", "emit a seeded random coloring");
    int gr_order = 0, gr_n = 0;
    double gr_p = 0.5;
    uint64_t gr_seed = 0;
    std::string gr_out = "-";
    bool gr_compact = false;
    gen_rand->add_option("-N,--order", gr_order, "vertex count");
    gen_rand->add_option("-n,--copies", gr_n, "copy count (order becomes 13n-3)");
    gen_rand->add_option("--p-red", gr_p, "red edge probability (default 0.5)");
    gen_rand->add_option("--seed", gr_seed, "64-bit seed (default 0)");
    gen_rand->add_option("-o,--output", gr_out, "output file (default stdout)");
    gen_rand->add_flag("--compact", gr_compact, "use the eccx hex format");

    // extract
    auto* extract_cmd = app.add_subcommand("extract",
                                           "extract a monochromatic connected-nK4 certificate");
    std::string ex_in, ex_cert_out = "-", ex_subset;
    int ex_n = 0;
    bool ex_n2 = false;
    extract_cmd->add_option("-i,--input", ex_in, "coloring file (- for stdin)")->required();
    extract_cmd->add_option("-n,--copies", ex_n, "copy count n")->required();
    extract_cmd->add_option("--cert-out", ex_cert_out, "certificate output file");
    extract_cmd->add_flag("--experimental-n2", ex_n2, "allow n=2 (may return unresolved)");
    extract_cmd->add_option("--subset", ex_subset,
                            "restrict to these 1-indexed vertices first (e.g. 1-36)");

    // verify-cert
    auto* verify_cmd = app.add_subcommand("verify-cert", "verify a certificate against a coloring");
    std::string vc_in, vc_cert;
    int vc_n = 0;
    verify_cmd->add_option("-i,--input", vc_in, "coloring file")->required();
    verify_cmd->add_option("--cert", vc_cert, "certificate file")->required();
    verify_cmd->add_option("-n,--copies", vc_n, "copy count n")->required();

    // check-absence
    auto* absence_cmd = app.add_subcommand(
        "check-absence", "verify no monochromatic connected nK4 exists (exact)");
    std::string ca_in;
    int ca_n = 0;
    absence_cmd->add_option("-i,--input", ca_in, "coloring file")->required();
    absence_cmd->add_option("-n,--copies", ca_n, "copy count n")->required();

    // stress
    auto* stress_cmd = app.add_subcommand("stress", "randomized extract+verify harness");
    ccm::StressConfig stress_cfg;
    std::string st_densities = "0.5", st_summary_out;
    stress_cmd->add_option("-n,--copies", stress_cfg.n, "copy count n")->required();
    stress_cmd->add_option("--trials", stress_cfg.trials, "trials per density")->required();
    stress_cmd->add_option("--seed", stress_cfg.seed, "base seed (default 0)");
    stress_cmd->add_option("--p-red", st_densities, "comma-separated red densities");
    stress_cmd->add_option("--jobs", stress_cfg.jobs, "worker count (default 1)");
    stress_cmd->add_option("--summary-out", st_summary_out, "machine-readable summary file");
    stress_cmd->add_flag("--experimental-n2", stress_cfg.allow_experimental_n2,
                         "allow n=2 trials");

    // combine-parts
    auto* combine_cmd = app.add_subcommand("combine-parts", "run the part combiner");
    int cp_n = 0;
    std::string cp_parts;
    combine_cmd->add_option("-n,--copies", cp_n, "copy count n")->required();
    combine_cmd->add_option("--parts", cp_parts, "descending counts, e.g. 4,4")->required();

    // oracle
    auto* oracle_cmd = app.add_subcommand("oracle", "closed-form values");
    oracle_cmd->require_subcommand(1);
    auto* oracle_f = oracle_cmd->add_subcommand("f", "guaranteed red matching size f_k(u)");
    int of_k = 0, of_u = 0;
    oracle_f->add_option("-k", of_k, "blue packing bound k >= 1")->required();
    oracle_f->add_option("-u", of_u, "residual vertex count u >= 0")->required();
    auto* oracle_rm = oracle_cmd->add_subcommand("rm", "R(mK2,(k+1)K4)");
    int orm_m = 0, orm_k = 0;
    oracle_rm->add_option("-m", orm_m, "matching size m >= 1")->required();
    oracle_rm->add_option("-k", orm_k, "quad count parameter k >= 0")->required();
    auto* oracle_rt = oracle_cmd->add_subcommand("rt", "R(mK3,(k+1)K4)");
    int ort_m = 0, ort_k = 0;
    oracle_rt->add_option("-m", ort_m, "triangle count m >= 1")->required();
    oracle_rt->add_option("-k", ort_k, "quad count parameter k >= 1")->required();

    // selftest
    auto* selftest_cmd = app.add_subcommand("selftest", "built-in verification suites");
    std::string st_which;
    selftest_cmd->add_option("which", st_which, "lemma2 | f-lemma | ramsey-small | all")
        ->required()
        ->check(CLI::IsMember({"lemma2", "f-lemma", "ramsey-small", "all"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*gen_ext) {
            write_output(ge_out, ccm::serialize_coloring(ccm::build_extremal(ge_n), ge_compact));
            return kExitOk;
        }

        if (*gen_rand) {
            if ((gr_order > 0) == (gr_n > 0))
                throw ccm::InvalidInput("gen-random needs exactly one of -N or -n");
            int order = gr_order > 0 ? gr_order : 13 * gr_n - 3;
            if (order < 1) throw ccm::InvalidInput("order must be positive");
            if (!(gr_p >= 0.0 && gr_p <= 1.0))
                throw ccm::InvalidInput("--p-red must lie in [0,1]");
            write_output(gr_out, ccm::serialize_coloring(
                                     ccm::random_coloring(order, gr_p, gr_seed), gr_compact));
            return kExitOk;
        }

        if (*extract_cmd) {
            if (ex_n == 2 && !ex_n2)
                throw ccm::InvalidInput("n=2 is experimental; pass --experimental-n2");
            ccm::EdgeColoring coloring = ccm::parse_coloring(read_input(ex_in));
            if (!ex_subset.empty()) coloring = coloring.induced(parse_subset(ex_subset));
            ccm::ExtractOutcome outcome = ccm::extract(coloring, ex_n);
            if (!outcome.certificate) {
                std::cout << "unresolved (" << ccm::case_tag_name(outcome.tag)
                          << "): " << outcome.unresolved->reason << "\n";
                return kExitVerificationFailed;
            }
            write_output(ex_cert_out, ccm::serialize_certificate(*outcome.certificate));
            if (ex_cert_out != "-")
                std::cout << "certificate: color=" << ccm::color_name(outcome.certificate->color)
                          << " case=" << ccm::case_tag_name(outcome.tag)
                          << " support=" << outcome.certificate->support.count()
                          << " quads=" << outcome.certificate->quads.size() << "\n";
            return kExitOk;
        }

        if (*verify_cmd) {
            ccm::EdgeColoring coloring = ccm::parse_coloring(read_input(vc_in));
            ccm::Certificate cert =
                ccm::parse_certificate(read_input(vc_cert), coloring.order());
            ccm::VerifyResult res = ccm::verify_certificate(coloring, cert, vc_n);
            if (res.ok) {
                std::cout << "certificate OK (" << ccm::color_name(cert.color) << ", "
                          << cert.quads.size() << " quads)\n";
                return kExitOk;
            }
            std::cout << "certificate REJECTED: " << res.reason << "\n";
            return kExitVerificationFailed;
        }

        if (*absence_cmd) {
            ccm::EdgeColoring coloring = ccm::parse_coloring(read_input(ca_in));
            ccm::AbsenceReport report = ccm::check_absence(coloring, ca_n);
            if (report.absent) {
                std::cout << "absent: no monochromatic connected " << ca_n << "K4\n";
                return kExitOk;
            }
            std::cout << "present: " << ccm::color_name(report.witness_color)
                      << " component of size " << report.witness_component.count()
                      << " packs quads" << format_quads(report.witness_quads) << "\n";
            return kExitVerificationFailed;
        }

        if (*stress_cmd) {
            stress_cfg.red_densities = parse_csv_doubles(st_densities, "--p-red");
            ccm::StressSummary summary = ccm::run_stress(stress_cfg);
            std::cout << ccm::format_summary(summary);
            std::cerr << ccm::format_timings(summary);
            if (!st_summary_out.empty()) write_output(st_summary_out, ccm::summary_json(summary));
            return summary.all_ok() ? kExitOk : kExitVerificationFailed;
        }

        if (*combine_cmd) {
            ccm::PartitionInput input{cp_n, parse_csv_ints(cp_parts, "--parts")};
            ccm::PartitionGrouping g = ccm::combine(input);
            std::cout << "kind=" << (g.kind == ccm::GroupingKind::Three ? "Three" : "Two")
                      << "\n";
            for (size_t i = 0; i < g.groups.size(); ++i) {
                std::cout << "group " << i + 1 << ": indices";
                for (int idx : g.groups[i]) std::cout << " " << idx + 1;
                std::cout << " (sum=" << g.group_sums[i] << ")\n";
            }
            return kExitOk;
        }

        if (*oracle_cmd) {
            if (*oracle_f)
                std::cout << ccm::guaranteed_red_matching(of_k, of_u) << "\n";
            else if (*oracle_rm)
                std::cout << ccm::ramsey_match_quads(orm_m, orm_k) << "\n";
            else
                std::cout << ccm::ramsey_triangles_quads(ort_m, ort_k) << "\n";
            return kExitOk;
        }

        if (*selftest_cmd) {
            std::vector<ccm::SelftestResult> results;
            if (st_which == "all")
                results = ccm::selftest_all();
            else if (st_which == "lemma2")
                results = {ccm::selftest_lemma2()};
            else if (st_which == "f-lemma")
                results = {ccm::selftest_f_lemma()};
            else
                results = {ccm::selftest_ramsey_small()};
            bool all_pass = true;
            for (const auto& r : results) {
                std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.name << ": " << r.detail
                          << "\n";
                all_pass = all_pass && r.pass;
            }
            return all_pass ? kExitOk : kExitVerificationFailed;
        }
    } catch (const ccm::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ccm::InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\nrun with --help for usage\n";
        return kExitUsage;
    } catch (const ccm::TheoremViolation& e) {
        std::cerr << "THEOREM VIOLATION at " << e.stage() << ": " << e.detail() << "\n"
                  << "offending coloring follows:\n"
                  << e.coloring_text();
        return kExitVerificationFailed;
    } catch (const ccm::SearchBudgetExhausted& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerificationFailed;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitVerificationFailed;
    }
    return kExitUsage;
}
