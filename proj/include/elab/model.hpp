// Structural causal model: validated definitions plus role labels.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "elab/expr.hpp"

namespace elab {

enum class DistKind : std::uint8_t { Bernoulli, Normal, Uniform, PointMass };

struct Distribution {
  DistKind kind = DistKind::PointMass;
  double a = 0.0;  // Bernoulli p, Normal mu, Uniform lo, PointMass c
  double b = 0.0;  // Normal sigma, Uniform hi

  static Distribution bernoulli(double p) { return {DistKind::Bernoulli, p, 0.0}; }
  static Distribution normal(double mu, double sigma) { return {DistKind::Normal, mu, sigma}; }
  static Distribution uniform(double lo, double hi) { return {DistKind::Uniform, lo, hi}; }
  static Distribution point_mass(double c) { return {DistKind::PointMass, c, 0.0}; }
};

std::string to_string(const Distribution& d);

struct Definition {
  std::string name;
  bool exogenous = false;
  Distribution dist;  // meaningful iff exogenous
  Expr expr;          // meaningful iff endogenous
  int line = 0;       // source line, for diagnostics
  int column = 0;
};

// Definitions are stored in source order, which validation guarantees to be
// a topological order of the implied graph.
struct StructuralModel {
  std::vector<Definition> definitions;
  std::string instrument;
  std::string exposure;
  std::string outcome;

  int index_of(std::string_view name) const;
  const Definition* find(std::string_view name) const;
  const Definition& role_def(std::string_view role_name) const;

  // Position of each definition within the exogenous subsequence (-1 for
  // endogenous ones); the k in the (seed, unit, k) noise stream key.
  std::vector<int> exogenous_positions() const;
  std::size_t exogenous_count() const;

  const Expr& exposure_expr() const { return role_def(exposure).expr; }
  const Expr& outcome_expr() const { return role_def(outcome).expr; }
};

struct SourceDiagnostic {
  enum class Severity : std::uint8_t { Error, Warning };
  Severity severity = Severity::Error;
  std::string message;
  int line = 1;
  int column = 1;
};

// "error: <msg> at <line>:<col>"
std::string to_string(const SourceDiagnostic& d);

}  // namespace elab
