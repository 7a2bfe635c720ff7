#pragma once

// Human- and machine-readable reports for single signatures and sweeps.
// Every count is dual-derived where possible: the closed form on one side,
// the monodromy-subgroup index on the other, with a brute-force closure
// cross-check of the subgroup order when the frame group is small enough.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "strata/abelian.hpp"
#include "strata/components.hpp"
#include "strata/invariants.hpp"
#include "strata/monodromy.hpp"
#include "strata/signature.hpp"

namespace strata {

inline constexpr const char* kSchema = "stratum-atlas/1";

enum class OutputFormat { Json, Text, Csv };

struct AnalyzeOptions {
    std::uint64_t oracle_bound = BruteForceClosure::kDefaultBound;
    std::vector<int> marked;  // 0-based partial marking, empty = none requested
    bool list_generators = false;
};

struct PartialResult {
    std::vector<int> marked;  // 0-based
    Int count;
};

struct ComponentReport {
    ComponentDescriptor descriptor;
    bool skipped = false;
    std::string skip_reason;
    Int closed_form = 0;
    Int oracle_index = 0;
    std::optional<Int> closure_order;  // subgroup order counted independently
    std::string oracle_mode;           // "hnf+closure" or "hnf-only"
    bool match = false;
    std::vector<std::string> generator_names;
    std::vector<PartialResult> partial;
};

struct Report {
    std::string signature_text;
    bool valid = false;
    std::vector<std::string> errors;
    std::optional<Signature> signature;
    int genus = 0;
    std::vector<int> h;
    SignaturePredicates preds{};
    std::vector<ComponentReport> components;
    bool all_match = true;  // over non-skipped components
};

Report analyze(const Signature& sig, const AnalyzeOptions& opts = {});
Report analyze_text(const std::string& signature_text, const AnalyzeOptions& opts = {});

std::string render_report(const Report& r, OutputFormat fmt);
std::string csv_header();

// exit status: 0 all matched (or skipped), 1 mismatch, 2 invalid input
int report_exit_code(const Report& r);

}  // namespace strata
