// Runs every acceptance check and prints one PASS/FAIL line per
// criterion. Exit code 0 only if all pass. The two flow-corpus checks
// dominate the runtime (several minutes).
#include <iostream>
#include <vector>

#include "veflab/verification.hpp"

int main() {
  using namespace vefl;
  using Check = CriterionResult (*)();
  const Check checks[] = {
      criterion_green_oracle,      criterion_semigroup,
      criterion_low_block_decay,   criterion_high_block_decay,
      criterion_lp_toolkit,        criterion_constraint_transport,
      criterion_scaling,           criterion_oscillatory,
      criterion_boundedness,       criterion_stepper,
  };
  std::vector<CriterionResult> results;
  for (Check check : checks) {
    results.push_back(check());
    print_criterion(std::cout, results.back());
    std::cout.flush();
  }
  const bool ok = all_pass(results);
  int failed = 0;
  for (const auto& r : results)
    if (!r.pass) ++failed;
  std::cout << (ok ? "ALL CRITERIA PASS" : "CRITERIA FAILED") << " ("
            << results.size() - failed << "/" << results.size() << ")\n";
  return ok ? 0 : 1;
}
