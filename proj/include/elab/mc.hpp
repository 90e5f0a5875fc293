// Reproducible Monte Carlo over potential outcomes: exogenous draws,
// do-operator evaluation, per-unit effects, and streaming accumulation.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "elab/model.hpp"

namespace elab {

struct EvaluationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ModelDomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnitDraw {
  std::uint64_t unit_index = 0;
  // One entry per exogenous definition, in definition order.
  std::vector<std::pair<std::string, double>> values;

  double at(std::string_view name) const;
};

UnitDraw draw_exogenous(const StructuralModel& m, std::uint64_t unit_index,
                        std::uint64_t seed);

struct Intervention {
  std::vector<std::pair<std::string, double>> settings;  // distinct targets

  static Intervention none() { return {}; }
  static Intervention set(std::string name, double value);
  std::optional<double> find(std::string_view name) const;
};

// Walks definitions in order; an intervened variable takes its forced value
// and its own equation or distribution is bypassed. Throws EvaluationError
// on a domain fault (division by zero, log of a non-positive, ...).
std::map<std::string, double> evaluate(const StructuralModel& m, const UnitDraw& draw,
                                       const Intervention& iv);

struct UnitEffects {
  double x0 = 0, x1 = 0;  // X under do(Z=0) / do(Z=1), shared noise
  double y0 = 0, y1 = 0;
  double beta_zx = 0;     // x1 - x0
  double beta_zy = 0;     // y1 - y0
  double dydx = 0;        // structural dY/dX at natural values
  double dxdz = 0;        // structural dX/dZ at natural values
  std::optional<double> slope;  // beta_zy/beta_zx, absent when |beta_zx| <= 1e-12
};

UnitEffects unit_effects(const StructuralModel& m, const UnitDraw& draw);

// Single-pass mean/variance accumulator (Welford); merge is exact in exact
// arithmetic and performed in ascending chunk order for determinism.
class Welford {
 public:
  void add(double x);
  void merge(const Welford& o);
  std::uint64_t count() const { return n_; }
  double mean() const { return mean_; }
  double m2() const { return m2_; }
  double sample_variance() const;  // n-1 denominator
  double mean_se() const;          // sample sd / sqrt(n)

 private:
  std::uint64_t n_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

class Covariance {
 public:
  void add(double x, double y);
  void merge(const Covariance& o);
  std::uint64_t count() const { return n_; }
  double mean_x() const { return mean_x_; }
  double mean_y() const { return mean_y_; }
  double m2_x() const { return m2x_; }
  double m2_y() const { return m2y_; }
  double comoment() const { return c_; }
  double sample_covariance() const;
  double sample_variance_x() const;
  double sample_variance_y() const;

 private:
  std::uint64_t n_ = 0;
  double mean_x_ = 0.0, mean_y_ = 0.0;
  double c_ = 0.0, m2x_ = 0.0, m2y_ = 0.0;
};

struct RunRequest {
  std::uint64_t n = 1'000'000;
  std::uint64_t seed = 1;
  int threads = 0;  // 0 = hardware concurrency; affects speed only
  bool reduced_form = false;
  std::optional<std::pair<double, double>> ace;  // (from, to)
};

// Fixed single-pass statistic registrations; estimands read from here.
struct PopulationStats {
  std::uint64_t requested = 0;
  std::uint64_t invalid = 0;

  Welford z, x, y, x0, x1, y0, y1;
  Welford beta_zx, beta_zy, dydx, dxdz;
  Welford idgap;        // beta_zy - dydx*beta_zx
  Welford rf_dydz;      // when requested
  Welford ace_diff;     // when requested

  Covariance bzy_bzx, bzx_dydx, bzy_dydx;
  Covariance q_bzx, q_dydx;    // q = beta_zx*dydx
  Covariance b2_bzx;           // b2 = beta_zx^2
  Covariance xy_arm0, xy_arm1; // factual (X,Y) within Z arms

  double max_idgap_rel = 0.0;  // max |idgap| / max(1,|beta_zy|)

  std::uint64_t valid() const { return beta_zx.count(); }
  void merge(const PopulationStats& o);
};

inline constexpr std::uint64_t kChunkSize = 65536;
inline constexpr double kInvalidUnitAbortFraction = 0.01;

// Streams units 0..n-1 through the compiled tape; deterministic for fixed
// (model, n, seed) regardless of worker count or kernel backend. Throws
// ModelDomainError when more than 1% of units hit evaluation faults.
PopulationStats run_population(const StructuralModel& m, const RunRequest& req);

}  // namespace elab
