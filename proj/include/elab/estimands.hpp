// Monte Carlo estimands and diagnostics: ADE, Wald (potential-outcome and
// observational), ACE, reduced-form derivative, and the gap scan.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "elab/mc.hpp"
#include "elab/model.hpp"
#include "elab/symbolic.hpp"

namespace elab {

struct EstimandError : std::runtime_error {
  enum class Code { Relevance, InsufficientData, ModelDomain };
  Code code;
  EstimandError(Code c, const std::string& what) : std::runtime_error(what), code(c) {}
};

struct Estimate {
  double value = 0.0;
  double mc_se = 0.0;
  std::uint64_t n = 0;
  std::uint64_t seed = 0;
  std::string kind;  // ade | wald_true | wald_obs | ace | reduced_form_dydz | diagnostic
};

Estimate ade(const StructuralModel& m, std::uint64_t n, std::uint64_t seed, int threads = 0);
Estimate wald_true(const StructuralModel& m, std::uint64_t n, std::uint64_t seed, int threads = 0);
Estimate wald_observational(const StructuralModel& m, std::uint64_t n, std::uint64_t seed,
                            int threads = 0);
Estimate ace(const StructuralModel& m, double x_from, double x_to, std::uint64_t n,
             std::uint64_t seed, int threads = 0);
Estimate reduced_form_dydz(const StructuralModel& m, std::uint64_t n, std::uint64_t seed,
                           int threads = 0);

// Extractors over an existing coupled run (all estimates share its draws).
Estimate extract_ade(const PopulationStats& s, std::uint64_t seed);
Estimate extract_wald_true(const PopulationStats& s, std::uint64_t seed);
Estimate extract_wald_observational(const PopulationStats& s, std::uint64_t seed);
Estimate extract_ace(const PopulationStats& s, std::uint64_t seed);
Estimate extract_reduced_form(const PopulationStats& s, std::uint64_t seed);

struct GapReport {
  Estimate ade;
  Estimate wald_true;
  Estimate wald_obs;
  double gap = 0.0;     // wald_true.value - ade.value
  double gap_se = 0.0;  // delta-method, covariance-aware (same coupled run)
  Estimate identity_gap;   // E[beta_zy - dydx*beta_zx]
  Estimate nosh_cov;       // Cov(beta_zx, dydx)
  Estimate var_beta_zx;    // Var(beta_zx)
  AssumptionReport assumptions;
  std::uint64_t invalid_units = 0;
};

GapReport diagnostics(const StructuralModel& m, std::uint64_t n, std::uint64_t seed,
                      int threads = 0);

struct GridAxis {
  std::string name;
  double lo = 0.0, hi = 0.0, step = 1.0;
  std::vector<double> values() const;
};

struct ScanPoint {
  std::vector<std::pair<std::string, double>> params;  // axis order
  std::uint64_t seed = 0;                              // derived per point
  std::optional<GapReport> report;
  std::string error;  // set when this point failed
};

inline constexpr std::uint64_t kMaxGridPoints = 1'000'000;

// Rows in lexicographic grid order (last axis fastest); point seeds are
// mix-derived from (seed, point index) so points are independent.
std::vector<ScanPoint> scan_gap(const StructuralModel& tpl, const std::vector<GridAxis>& grid,
                                std::uint64_t n, std::uint64_t seed, int threads = 0);

}  // namespace elab
