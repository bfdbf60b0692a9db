#pragma once

// The verification suites run by the CLI and the acceptance binary.  Each
// criterion function sweeps its grid and returns one report; verify_all
// chains them.  Grids follow the library defaults unless filtered.

#include <functional>
#include <optional>

#include "ribbonres/report.hpp"
#include "ribbonres/arith.hpp"

namespace ribbonres::suites {

struct SuiteOptions {
    std::optional<int> only_n;                   // restrict to one alphabet size
    std::optional<CoefficientRing> only_ring;    // restrict to one ring
    int threads = 0;                             // 0 = default
};

Report split_ses(const SuiteOptions& opt = {});            // 1
Report schur_cross_oracle(const SuiteOptions& opt = {});   // 2
Report hamel_goulden(const SuiteOptions& opt = {});        // 3
Report ribbon_d2(const SuiteOptions& opt = {});            // 4
Report kernel_lemma(const SuiteOptions& opt = {});         // 5
Report resolution(const SuiteOptions& opt = {});           // 6
Report generating_identity(const SuiteOptions& opt = {});  // 7
Report tensor_theorem(const SuiteOptions& opt = {});       // 8
Report higher_tor(const SuiteOptions& opt = {});           // 9
Report hom_theorem(const SuiteOptions& opt = {});          // 10
Report poset_homology(const SuiteOptions& opt = {});       // 11
Report intersection_prop(const SuiteOptions& opt = {});    // 12

struct Criterion {
    int number;
    std::string name;
    std::function<Report(const SuiteOptions&)> run;
};
const std::vector<Criterion>& all_criteria();

Report verify_all(const SuiteOptions& opt = {});

// every composition of every total in [1, max_total]
std::vector<std::vector<int>> compositions_up_to(int max_total);
std::vector<std::vector<int>> compositions_of(int total);

}  // namespace ribbonres::suites
