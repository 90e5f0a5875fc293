// Lexing, parsing and validation of the .scm model format.
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "elab/model.hpp"

namespace elab {

struct ParseResult {
  std::optional<StructuralModel> model;  // engaged iff no error diagnostics
  std::vector<SourceDiagnostic> diagnostics;

  bool ok() const { return model.has_value(); }
  std::string diagnostics_text() const;
};

ParseResult parse_model(std::string_view text);

// Template variant for parameter scans: names listed in `free_params` may be
// referenced without a definition. Binding them to constants and then
// validating yields an ordinary model.
ParseResult parse_model_template(std::string_view text,
                                 const std::vector<std::string>& free_params);

struct BindResult {
  std::optional<StructuralModel> model;
  std::string error;
};

BindResult bind_parameters(const StructuralModel& tpl,
                           const std::vector<std::pair<std::string, double>>& values);

// Standalone expression entry point; throws std::invalid_argument on any
// lex or grammar error.
Expr parse_expression(std::string_view text);

// Canonical text form; parse_model(pretty_print(m)) reproduces m exactly.
std::string pretty_print(const StructuralModel& m);

// The worked example model shipped with the tool (`--builtin paper`).
std::string_view builtin_paper_model();

}  // namespace elab
