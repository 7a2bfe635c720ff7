// stratum-atlas: classify strata of meromorphic differentials, count the
// connected components of their framed versions, and cross-check every
// closed-form count against the monodromy-subgroup oracle.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "strata/report.hpp"
#include "strata/verify.hpp"

namespace {

using strata::OutputFormat;

OutputFormat parse_format(const std::string& s) {
    if (s == "json") return OutputFormat::Json;
    if (s == "csv") return OutputFormat::Csv;
    return OutputFormat::Text;
}

std::vector<int> parse_marks(const std::string& list, std::string& err) {
    std::vector<int> out;
    size_t pos = 0;
    while (pos < list.size()) {
        size_t next = list.find(',', pos);
        std::string tok = list.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        try {
            int v = std::stoi(tok);
            if (v < 1) throw std::invalid_argument("index");
            out.push_back(v - 1);  // 1-based on the command line
        } catch (...) {
            err = "bad marked index '" + tok + "'";
            return {};
        }
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return out;
}

}  // namespace

int run(int argc, char** argv);

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

int run(int argc, char** argv) {
    CLI::App app{"exact component counts for strata of meromorphic differentials"};
    app.require_subcommand(1);

    std::string format_name = "text";
    app.add_option("--format", format_name, "output format: json, text or csv")
        ->check(CLI::IsMember({"json", "text", "csv"}));
    std::uint64_t oracle_bound = strata::BruteForceClosure::kDefaultBound;
    app.add_option("--oracle-bound", oracle_bound,
                   "largest frame-group order enumerated by the brute-force engine");

    // analyze
    auto* analyze_cmd = app.add_subcommand("analyze", "analyze one signature, e.g. \"2,2,-3,-3\" or \"H(2^2,-3^2)\"");
    std::string signature_text;
    analyze_cmd->add_option("signature", signature_text, "signature text")->required();
    std::string mark_list;
    analyze_cmd->add_option("--mark", mark_list, "comma-separated 1-based singularity indices to mark");
    bool list_generators = false;
    analyze_cmd->add_flag("--generators", list_generators, "list the monodromy generators per component");

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "analyze every valid signature within bounds");
    int max_sings = 4, max_deg = 6;
    std::optional<int> genus;
    sweep_cmd->add_option("--max-sings", max_sings, "maximum number of singularities");
    sweep_cmd->add_option("--max-deg", max_deg, "maximum |degree|");
    sweep_cmd->add_option("--genus", genus, "restrict to an exact genus");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    verify_cmd->add_option("suite", suite, "dk | theta-kernel | master-identity | hyperelliptic | partial")
        ->required();
    std::optional<int> v_max_sings, v_max_deg, v_genus;
    verify_cmd->add_option("--max-sings", v_max_sings, "maximum number of singularities");
    verify_cmd->add_option("--max-deg", v_max_deg, "maximum |degree|");
    verify_cmd->add_option("--genus", v_genus, "restrict to an exact genus");
    int hyp_max_n = 8, hyp_max_p = 8;
    verify_cmd->add_option("--max-n", hyp_max_n, "hyperelliptic suite: largest n");
    verify_cmd->add_option("--max-p", hyp_max_p, "hyperelliptic suite: largest |p|");
    std::optional<int> hyp_max;
    verify_cmd->add_option("--max", hyp_max, "hyperelliptic suite: bound for both n and |p|");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // command-line problems are input errors
    }
    if (hyp_max) hyp_max_n = hyp_max_p = *hyp_max;
    const OutputFormat fmt = parse_format(format_name);

    if (*analyze_cmd) {
        strata::AnalyzeOptions opts;
        opts.oracle_bound = oracle_bound;
        opts.list_generators = list_generators;
        if (!mark_list.empty()) {
            std::string err;
            opts.marked = parse_marks(mark_list, err);
            if (!err.empty()) {
                std::cerr << "error: " << err << "\n";
                return 2;
            }
        }
        strata::ValidationResult v = strata::parse_signature(signature_text);
        if (v.ok())
            for (int m : opts.marked)
                if (m >= v.signature->size()) {
                    std::cerr << "error: marked index " << (m + 1) << " out of range\n";
                    return 2;
                }
        strata::Report r = strata::analyze_text(signature_text, opts);
        if (fmt == OutputFormat::Csv) std::cout << strata::csv_header() << "\n";
        std::cout << strata::render_report(r, fmt);
        return strata::report_exit_code(r);
    }

    if (*sweep_cmd) {
        strata::AnalyzeOptions opts;
        opts.oracle_bound = oracle_bound;
        if (fmt == OutputFormat::Csv) std::cout << strata::csv_header() << "\n";
        int exit_code = 0;
        strata::enumerate_signatures(max_sings, max_deg, genus, [&](const strata::Signature& sig) {
            strata::Report r = strata::analyze(sig, opts);
            std::cout << strata::render_report(r, fmt);
            if (!r.all_match) exit_code = 1;
        });
        return exit_code;
    }

    // verify
    strata::VerifyOptions vopts;
    vopts.oracle_bound = oracle_bound;
    if (v_genus) vopts.genus = v_genus;
    auto sink = [&](const std::string& line) {
        if (fmt == OutputFormat::Json) std::cout << line << "\n";
    };
    vopts.item_sink = sink;

    strata::VerifySummary summary;
    if (suite == "dk") {
        vopts.max_sings = v_max_sings.value_or(6);
        vopts.max_deg = v_max_deg.value_or(12);
        summary = strata::verify_dk(vopts);
    } else if (suite == "theta-kernel") {
        vopts.max_sings = v_max_sings.value_or(5);
        vopts.max_deg = v_max_deg.value_or(9);
        summary = strata::verify_theta_kernel(vopts);
    } else if (suite == "master-identity") {
        vopts.max_sings = v_max_sings.value_or(5);
        vopts.max_deg = v_max_deg.value_or(9);
        summary = strata::verify_master_identity(vopts);
    } else if (suite == "hyperelliptic") {
        summary = strata::verify_hyperelliptic(hyp_max_n, hyp_max_p, vopts.item_sink);
    } else if (suite == "partial") {
        vopts.max_sings = v_max_sings.value_or(5);
        vopts.max_deg = v_max_deg.value_or(9);
        summary = strata::verify_partial(vopts);
    } else {
        std::cerr << "error: unknown suite '" << suite << "'\n";
        return 2;
    }

    if (fmt == OutputFormat::Json) {
        nlohmann::ordered_json j;
        j["schema"] = strata::kSchema;
        j["suite"] = summary.suite;
        j["checked"] = summary.checked;
        j["pass"] = summary.passed;
        j["fail"] = summary.failed;
        j["skipped"] = summary.skipped;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << summary.to_string() << "\n";
    }
    return summary.ok() ? 0 : 1;
}
