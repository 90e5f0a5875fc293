// Report documents and their text / JSON / CSV renderings. JSON and CSV are
// stability surfaces; the text form is for humans.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "elab/estimands.hpp"
#include "elab/symbolic.hpp"

namespace elab {

inline constexpr const char* kToolName = "estimand-lab";
inline constexpr const char* kToolVersion = "0.1.0";

struct EstimateRow {
  std::string kind;
  double value = 0.0;
  double mc_se = 0.0;
  std::uint64_t n = 0;
  std::uint64_t seed = 0;
  std::vector<std::pair<std::string, double>> params;  // scan columns
  std::string error;  // non-empty for failed scan points

  static EstimateRow from(const Estimate& e);
};

struct AssumptionView {
  std::string homogeneity_verdict;
  std::string homogeneity_witness;
  std::string linearity_verdict;
  std::string linearity_witness;
  std::string slope_yx;
  bool exclusion_structural = false;
  std::vector<std::string> notes;

  static AssumptionView from(const AssumptionReport& r);
};

struct GapView {
  double gap = 0.0;
  double gap_se = 0.0;
  std::uint64_t invalid_units = 0;
};

struct ReproduceRow {
  std::string name;
  double computed = 0.0;
  double expected = 0.0;
  double mc_se = 0.0;
  double band = 0.0;  // 0 means exact equality required
  bool pass = false;
};

struct ReportDocument {
  std::string command;
  std::string model_ref;  // file path or "builtin:paper"
  std::uint64_t n = 0;
  std::uint64_t seed = 0;
  std::vector<std::pair<std::string, std::string>> options;  // extra config echo

  std::optional<AssumptionView> assumptions;
  std::vector<EstimateRow> estimates;
  std::optional<GapView> gap;
  std::vector<ReproduceRow> reproduce;
  std::vector<std::string> warnings;
};

std::string render_text(const ReportDocument& doc);
std::string render_json(const ReportDocument& doc);  // schema documented in README
std::string render_csv(const ReportDocument& doc);   // kind,value,mc_se,n,seed[,param_*]

}  // namespace elab
