#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vefl {

// One acceptance check: a short machine-greppable name, the verdict,
// and a one-line summary of the measured quantities against the pinned
// tolerances.
struct CriterionResult {
  std::string name;
  bool pass = false;
  std::string details;
};

// "PASS  name  details" / "FAIL  name  details"
void print_criterion(std::ostream& out, const CriterionResult& r);
bool all_pass(const std::vector<CriterionResult>& results);

// Closed-form mode propagator against the brute-force integrator over
// the (mu, |xi|, t) sweep, degenerate double-root line included.
CriterionResult criterion_green_oracle();

// Semigroup composition identity and exact identity matrix at t = 0.
CriterionResult criterion_semigroup();

// Below the frequency split the fitted block decay rates scale like
// 2^{2j} (parabolic regime).
CriterionResult criterion_low_block_decay();

// Above the split the contracted-part block rates are j-independent
// and the scaled remainder envelopes stay flat across [2 r0, 64 r0].
CriterionResult criterion_high_block_decay();

// Partition-of-unity residual, Bony reconstruction on a seeded corpus,
// Bernstein window for annulus fields.
CriterionResult criterion_lp_toolkit();

// Structural residuals along the nonlinear flow stay small and their
// accumulated growth scales like dt^2 under step halving.
CriterionResult criterion_constraint_transport();

// The critical velocity norm is invariant under l v(l x) across nested
// grids.
CriterionResult criterion_scaling();

// Oscillatory data: the supercritical norm decreases with epsilon
// while the critical-level norm stays within a fixed factor.
CriterionResult criterion_oscillatory();

// Frozen seeded corpus: the a-priori functionals stay within the
// configured multiple of their initial values.
CriterionResult criterion_boundedness();

// Exponential stepper: exact linear reduction and second-order
// self-convergence.
CriterionResult criterion_stepper();

// Suites used by the command-line verify subcommands.
std::vector<CriterionResult> verify_green_suite();       // propagator checks
std::vector<CriterionResult> verify_lp_suite();          // block analysis checks
std::vector<CriterionResult> verify_constraint_suite();  // flow and stepper checks

}  // namespace vefl
