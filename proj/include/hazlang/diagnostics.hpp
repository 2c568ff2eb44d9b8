#pragma once

#include <optional>
#include <string>
#include <vector>

namespace hazlang {

struct SourceSpan {
    std::string file;
    int line = 1;    // 1-based
    int column = 1;  // 1-based
    int length = 1;  // in characters

    bool operator==(const SourceSpan&) const = default;
};

enum class DiagnosticSeverity { Error, Warning };

/// Errors block downstream pipeline stages; warnings do not.
struct Diagnostic {
    DiagnosticSeverity severity = DiagnosticSeverity::Error;
    std::string rule;    // stable code, e.g. DANGLING_REF
    std::string entity;  // offending entity id, may be empty
    std::string message;
    std::optional<SourceSpan> span;
};

inline bool has_errors(const std::vector<Diagnostic>& diags) {
    for (const auto& d : diags) {
        if (d.severity == DiagnosticSeverity::Error) return true;
    }
    return false;
}

/// "file:line:col: error[RULE]: message" (span omitted when absent).
std::string format_diagnostic(const Diagnostic& diag);

/// Stable order for reporting: (entity, rule, message, span position).
void sort_diagnostics(std::vector<Diagnostic>& diags);

}  // namespace hazlang
