#pragma once

#include <string>
#include <vector>

namespace orientkit {

struct CriterionResult {
    int id;
    std::string name;
    bool pass;
    std::string detail;
    double seconds;
};

CriterionResult criterion_recognizer_oracle();
CriterionResult criterion_theorem_sweep(int jobs);
CriterionResult criterion_raft_orientation();
CriterionResult criterion_co_chain_equivalence();
CriterionResult criterion_ttf_classification();
CriterionResult criterion_figure_reproductions();
CriterionResult criterion_closure_suite();
CriterionResult criterion_known_classes();

/// Oracle equivalence on tiny graphs, catalog self-checks and small
/// raft-product orientations. `inject_failure` flips one catalog expectation
/// as a negative control for the reporting path.
std::vector<CriterionResult> run_quick(int jobs = 1, bool inject_failure = false);

/// The full acceptance sweep.
std::vector<CriterionResult> run_full(int jobs = 1);

}  // namespace orientkit
