#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "netcomm/digraph.hpp"
#include "netcomm/spectral.hpp"

namespace netcomm {

struct SelfCheckResult {
  std::string name;
  bool pass = false;
  double residual = 0.0;  // max observed deviation
  std::string detail;
};

struct SelfCheckReport {
  std::vector<SelfCheckResult> checks;
  bool all_pass() const;
};

/// Runs the built-in identity suite: reference hub/authority values on the
/// bundled 4-node example, the negative-entry generalized-exponential check,
/// the lift-exponential block identity, the three-way generalized-sinh
/// factorization, and the singular-value modification bounds.
///
/// `perturb` deliberately corrupts one computed matrix so the harness can be
/// shown to catch failures (negative control for the report itself).
SelfCheckReport run_selfcheck(bool perturb = false);

void print_selfcheck(std::ostream& out, const SelfCheckReport& report);

/// Plain Taylor summation of e^M with no scaling; reference oracle for the
/// scaling-and-squaring kernel on modest-norm inputs.
Matrix taylor_expm_reference(const Matrix& M);

/// The 4-node example graph used by the self-check and the docs: node 1
/// (0-based) is the clear hub and authority center, the dominant singular
/// value is a double one, and the full-SVD generalized exponential picks up
/// negative entries.
Digraph hub_example_digraph();

}  // namespace netcomm
