#include "hazlang/diagnostics.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace hazlang {

std::string format_diagnostic(const Diagnostic& diag) {
    std::ostringstream out;
    if (diag.span) {
        out << diag.span->file << ":" << diag.span->line << ":" << diag.span->column
            << ": ";
    }
    out << (diag.severity == DiagnosticSeverity::Error ? "error" : "warning");
    out << "[" << diag.rule << "]: " << diag.message;
    return out.str();
}

void sort_diagnostics(std::vector<Diagnostic>& diags) {
    std::stable_sort(diags.begin(), diags.end(), [](const Diagnostic& a, const Diagnostic& b) {
        auto key = [](const Diagnostic& d) {
            int line = d.span ? d.span->line : 0;
            int col = d.span ? d.span->column : 0;
            return std::make_tuple(d.entity, d.rule, d.message, line, col);
        };
        return key(a) < key(b);
    });
}

}  // namespace hazlang
