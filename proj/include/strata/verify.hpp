#pragma once

// Sweep drivers: enumerate signatures within bounds and check the count
// identities on each. These are the engines behind `stratum-atlas verify`
// and the acceptance suite.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "strata/abelian.hpp"
#include "strata/signature.hpp"

namespace strata {

// Calls f on every valid canonical signature with at most max_sings entries
// and |degree| <= max_deg, grouped by entry count, descending tuples in
// lexicographic order. Optional exact genus filter.
void enumerate_signatures(int max_sings, int max_deg, std::optional<int> genus,
                          const std::function<void(const Signature&)>& f);

struct VerifyOptions {
    int max_sings = 5;
    int max_deg = 9;
    std::optional<int> genus;
    std::uint64_t oracle_bound = BruteForceClosure::kDefaultBound;
    // receives one JSON record per checked item when set
    std::function<void(const std::string&)> item_sink;
};

struct VerifySummary {
    std::string suite;
    long checked = 0;
    long passed = 0;
    long failed = 0;
    long skipped = 0;
    std::vector<std::string> failures;  // capped detail lines
    bool ok() const { return failed == 0; }
    std::string to_string() const;
};

// closed-form count == monodromy index, with closure cross-check
VerifySummary verify_master_identity(const VerifyOptions& opts);
// gcd identity d_k = eps_k * prod N_ki on genus-zero signatures
VerifySummary verify_dk(const VerifyOptions& opts);
// kernel of the distinguishing homomorphism == monodromy subgroup
VerifySummary verify_theta_kernel(const VerifyOptions& opts);
// hyperelliptic shape families against their closed forms
VerifySummary verify_hyperelliptic(int max_n, int max_abs_p,
                                   const std::function<void(const std::string&)>& item_sink = {});
// partial markings: connected when an unmarked odd singularity exists
// (positive genus), full marking reproduces the framed count
VerifySummary verify_partial(const VerifyOptions& opts);
// spin-parity obstruction: generators have parity zero and indices are
// exactly 2 (positive genus) or 2N (genus zero, > 2 odd degrees)
VerifySummary verify_parity(const VerifyOptions& opts);
// randomized agreement of the lattice and closure engines
VerifySummary verify_oracle_selfcheck(int trials, std::uint64_t max_order, int membership_probes,
                                      std::uint64_t seed);
// pinned spot values for three signatures
VerifySummary verify_spot_values();

}  // namespace strata
