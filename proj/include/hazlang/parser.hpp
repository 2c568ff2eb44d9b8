#pragma once

#include <string>
#include <vector>

#include "hazlang/diagnostics.hpp"
#include "hazlang/model.hpp"

namespace hazlang {

struct ParseResult {
    SafetyModel model;
    std::vector<Diagnostic> diagnostics;

    bool ok() const { return !has_errors(diagnostics); }
};

/// Parses `.stpa` source. On zero error diagnostics the model is structurally
/// complete and preserves declaration order. Recovers after syntax errors so
/// multiple problems are reported per run.
///
/// Diagnostic rules: ENCODING, SYNTAX, DUPLICATE_ID, RANGE, DANGLING_REF.
ParseResult parse(const std::string& source, const std::string& file_name);

ParseResult parse_file(const std::string& path);

/// Canonical form: fixed section order, entities sorted by id, one
/// declaration per line, strings quoted with \" \\ \n escapes.
/// parse(serialize(m)) equals m up to internal ordering.
std::string serialize(const SafetyModel& model);

std::string escape_string(const std::string& text);

}  // namespace hazlang
