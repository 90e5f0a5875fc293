// Symbolic differentiation, simplification, substitution, and the structural
// decompositions behind the assumption checks.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "elab/expr.hpp"
#include "elab/model.hpp"

namespace elab {

// Structural partial derivative of e with respect to var; every other
// variable is held free. The result is simplified.
Expr differentiate(const Expr& e, std::string_view var);

// Constant folding, 0/1 identities, flattening and canonical ordering of
// commutative chains, and like-term/like-factor collection. Idempotent.
Expr simplify(const Expr& e);

// Replaces every occurrence of var and simplifies.
Expr substitute(const Expr& e, std::string_view var, const Expr& replacement);

// Outcome equation rewritten over exogenous variables only: every
// endogenous name replaced by its definition, innermost first.
Expr ground_to_exogenous(const StructuralModel& m, const Expr& e);

enum class SampleVerdict : std::uint8_t { Equal, NotEqual, Undecidable };

struct SamplingOptions {
  int trials = 64;
  double tolerance = 1e-9;      // relative: |a-b| <= tol*(1+max(|a|,|b|))
  std::uint64_t seed = 0x5ca1ab1e0ddba11ULL;  // fixed: verdicts are reproducible
  int retry_budget = 4096;      // total draws allowed across retries
};

// Probabilistic identity test on points drawn uniformly from [-10,10]^d.
// Points where either side fails to evaluate are redrawn; exhausting the
// retry budget yields Undecidable.
SampleVerdict equal_by_sampling(const Expr& a, const Expr& b,
                                const SamplingOptions& opts = {});

struct LinearDecomposition {
  std::string variable;
  Expr slope;      // free of variable
  Expr intercept;  // free of variable
};

enum class DecomposeStatus : std::uint8_t { Linear, NotLinear, Undecidable };

struct DecomposeResult {
  DecomposeStatus status = DecomposeStatus::Undecidable;
  std::optional<LinearDecomposition> decomposition;  // engaged iff Linear
  Expr derivative;  // d e / d var, simplified (the slope candidate)
  std::string note;
};

DecomposeResult linear_decompose(const Expr& e, std::string_view var);

enum class Verdict : std::uint8_t { Holds, Fails, Undecidable };

std::string_view to_string(Verdict v);

struct AssumptionReport {
  Verdict homogeneity_zx = Verdict::Undecidable;
  Expr homogeneity_witness;  // symbolic dX/dZ
  Verdict linearity_yx = Verdict::Undecidable;
  Expr linearity_witness;    // symbolic d2Y/dX2
  Expr slope_yx;             // symbolic dY/dX, for display
  bool exclusion_structural = false;
  std::vector<std::string> notes;
};

AssumptionReport check_assumptions(const StructuralModel& m);

}  // namespace elab
