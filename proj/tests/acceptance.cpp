// Acceptance runner: one line per criterion, exact checks, pinned bounds.
// Exit status is nonzero if any criterion fails.

#include "descent/suites.hpp"

#include <cstdio>

using namespace descent;

int main() {
    struct Criterion {
        std::string label;
        SuiteResult result;
        double time_budget_seconds;  // <= 0 means no budget
    };

    uint64_t seed = 0;
    std::vector<Criterion> criteria;
    criteria.push_back({"1 faithfully-flat Amitsur vanishing", suite_amitsur_vanishing(), 10.0});
    criteria.push_back({"2 restricted-module SDR certificates", suite_restricted_sdr(), 0.0});
    criteria.push_back({"3 Beck descent verdicts", suite_beck(), 0.0});
    criteria.push_back({"4 normalized = unnormalized cohomology", suite_normalized_oracle(seed), 60.0});
    criteria.push_back({"5 Cech cardinality law", suite_cech_cardinality(seed), 0.0});
    criteria.push_back({"6 codescent Beck verdicts", suite_codescent_beck(seed), 0.0});
    criteria.push_back({"7 Kan comonad and fullness identities", suite_kan(), 0.0});
    criteria.push_back({"8 adjunction isomorphism grid", suite_adjunction_grid(), 0.0});
    criteria.push_back({"9 two-path E2 consistency", suite_e2_consistency(), 0.0});
    criteria.push_back({"10 SNF contract and determinism", suite_snf_contract(seed), 0.0});

    int failures = 0;
    for (auto& c : criteria) {
        bool in_budget = c.time_budget_seconds <= 0 || c.result.seconds < c.time_budget_seconds;
        bool pass = c.result.passed && in_budget;
        if (!pass) ++failures;
        std::printf("criterion %-40s %s  (%.2fs%s)\n", c.label.c_str(), pass ? "PASS" : "FAIL",
                    c.result.seconds,
                    in_budget ? "" : " OVER BUDGET");
        if (!c.result.detail.empty()) std::printf("    %s\n", c.result.detail.c_str());
    }
    std::printf("%d/%zu acceptance criteria hold\n", static_cast<int>(criteria.size()) - failures,
                criteria.size());
    return failures == 0 ? 0 : 1;
}
