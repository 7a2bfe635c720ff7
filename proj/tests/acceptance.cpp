// Acceptance suite: one pass/fail line per criterion. With no arguments all
// criteria run; otherwise the given criterion numbers run. Exit status is
// the number of failing criteria.

#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "strata/verify.hpp"

namespace {

struct Criterion {
    int id;
    const char* title;
    std::function<strata::VerifySummary()> run;
};

const std::vector<Criterion>& criteria() {
    using namespace strata;
    static const std::vector<Criterion> all = {
        {1, "master identity: closed form vs monodromy oracle, r<=5, |deg|<=9",
         [] {
             VerifyOptions o;
             o.max_sings = 5;
             o.max_deg = 9;
             return verify_master_identity(o);
         }},
        {2, "hyperelliptic shape counts, n<=8, |p|<=8",
         [] { return verify_hyperelliptic(8, 8); }},
        {3, "coordinate gcd identity, genus 0, r<=6, |deg|<=12",
         [] {
             VerifyOptions o;
             o.max_sings = 6;
             o.max_deg = 12;
             return verify_dk(o);
         }},
        {4, "invariant kernel equals monodromy subgroup, genus 0, r<=5, |deg|<=9",
         [] {
             VerifyOptions o;
             o.max_sings = 5;
             o.max_deg = 9;
             return verify_theta_kernel(o);
         }},
        {5, "spin parity obstruction: even generators, index 2 or 2N, r<=5, |deg|<=9",
         [] {
             VerifyOptions o;
             o.max_sings = 5;
             o.max_deg = 9;
             return verify_parity(o);
         }},
        {6, "oracle self-consistency on 1000 randomized groups of order <= 10^4",
         [] { return verify_oracle_selfcheck(1000, 10000, 100, 0x5eed5eedULL); }},
        {7, "partial markings: unmarked odd connects, full marking reproduces counts",
         [] {
             VerifyOptions o;
             o.max_sings = 5;
             o.max_deg = 9;
             return verify_partial(o);
         }},
        {8, "spot values for 2,2,-3,-3 / 1,1,1,-5 / 3,3,-4,-4",
         [] { return verify_spot_values(); }},
    };
    return all;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<int> wanted;
    for (int i = 1; i < argc; ++i) wanted.push_back(std::atoi(argv[i]));

    int failures = 0;
    for (const Criterion& c : criteria()) {
        if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), c.id) == wanted.end()) continue;
        strata::VerifySummary s = c.run();
        if (s.ok()) {
            std::printf("criterion %d (%s): PASS (%ld checked, %ld skipped)\n", c.id, c.title, s.checked,
                        s.skipped);
        } else {
            ++failures;
            std::printf("criterion %d (%s): FAIL (%ld of %ld checks failed)\n", c.id, c.title, s.failed,
                        s.checked);
            for (const std::string& f : s.failures) std::printf("    %s\n", f.c_str());
        }
        std::fflush(stdout);
    }
    return failures;
}
