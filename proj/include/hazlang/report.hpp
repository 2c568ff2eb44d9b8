#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hazlang/model.hpp"
#include "hazlang/trace.hpp"

namespace hazlang {

/// Deterministic concept-phase report. Formats: "markdown" (alias "md"),
/// "json", "csv". The csv text is the per-artifact files of csv_files()
/// joined with `#=== <name>` separators. Throws UNSUPPORTED_FORMAT.
std::string emit_report(const SafetyModel& model, const TraceMatrix& matrix,
                        const std::string& format);

/// One (file name, content) pair per artifact kind, fixed headers, RFC-style
/// quoting of fields containing commas/quotes/newlines.
std::vector<std::pair<std::string, std::string>> csv_files(const SafetyModel& model,
                                                           const TraceMatrix& matrix);

/// Stable-schema machine export of the full model plus trace matrix.
std::string model_to_json(const SafetyModel& model, const TraceMatrix& matrix);

/// Rebuilds a model from model_to_json output; the result serializes
/// byte-identically to the canonical form of the source model.
SafetyModel model_from_json(const std::string& json_text);

/// dot-language rendering: node shapes per kind, solid edges for control
/// actions, dashed edges for feedback, deterministic node order.
std::string export_control_structure(const SafetyModel& model);

std::string csv_escape(const std::string& field);

}  // namespace hazlang
