#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hazlang/hara.hpp"
#include "hazlang/parser.hpp"
#include "hazlang/report.hpp"
#include "hazlang/stpa.hpp"
#include "hazlang/trace.hpp"
#include "hazlang/validate.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitModelErrors = 1;
constexpr int kExitFindings = 2;
constexpr int kExitUsage = 64;

void apply_env_default(hazlang::SafetyModel& model) {
    if (model.default_controllability_pragma) return;  // pragma wins
    const char* env = std::getenv("HAZLANG_DEFAULT_CONTROLLABILITY");
    if (!env) return;
    if (auto c = hazlang::controllability_from_keyword(env))
        model.default_controllability_pragma = c;
    else
        std::cerr << "warning: ignoring invalid HAZLANG_DEFAULT_CONTROLLABILITY '" << env
                  << "'\n";
}

/// Parse + validate; errors go to stderr. Returns nullopt when errors block
/// the pipeline.
std::optional<hazlang::SafetyModel> load_model(const std::string& path) {
    hazlang::ParseResult result = hazlang::parse_file(path);
    for (const auto& diag : result.diagnostics)
        std::cerr << hazlang::format_diagnostic(diag) << "\n";
    if (!result.ok()) return std::nullopt;

    auto diags = hazlang::validate_model(result.model);
    for (const auto& diag : diags) std::cerr << hazlang::format_diagnostic(diag) << "\n";
    if (hazlang::has_errors(diags)) return std::nullopt;

    apply_env_default(result.model);
    return std::move(result.model);
}

void write_output(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
    out << content;
}

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream stream(text);
    std::string part;
    while (std::getline(stream, part, ',')) {
        if (!part.empty()) parts.push_back(part);
    }
    return parts;
}

void print_table(const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> widths(header.size());
    for (std::size_t i = 0; i < header.size(); ++i) widths[i] = header[i].size();
    for (const auto& row : rows)
        for (std::size_t i = 0; i < row.size(); ++i)
            widths[i] = std::max(widths[i], row[i].size());

    auto print_row = [&](const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            std::cout << row[i] << std::string(widths[i] - row[i].size(), ' ');
            if (i + 1 < row.size()) std::cout << " | ";
        }
        std::cout << "\n";
    };
    print_row(header);
    std::size_t total = 0;
    for (std::size_t i = 0; i < widths.size(); ++i)
        total += widths[i] + (i + 1 < widths.size() ? 3 : 0);
    std::cout << std::string(total, '-') << "\n";
    for (const auto& row : rows) print_row(row);
}

int cmd_check(const std::string& file) {
    auto model = load_model(file);
    if (!model) return kExitModelErrors;
    auto warnings = hazlang::validate_control_structure(*model);
    for (const auto& diag : warnings)
        std::cerr << hazlang::format_diagnostic(diag) << "\n";
    std::cout << model->entity_count() << " entities, " << warnings.size()
              << " warnings\n";
    return kExitOk;
}

int cmd_gen_uca(const std::string& file, const std::string& action,
                const std::string& vars) {
    auto model = load_model(file);
    if (!model) return kExitModelErrors;
    try {
        auto candidates = hazlang::generate_uca_candidates(*model, action, split_csv(vars));
        for (const auto& uca : candidates) {
            std::cout << "uca " << uca.id << " action " << uca.action << " type "
                      << hazlang::to_keyword(uca.guide_word) << " context {";
            bool first = true;
            for (const auto& [name, value] : uca.context.assignments) {
                std::cout << (first ? " " : ", ") << name << "=" << value;
                first = false;
            }
            std::cout << (first ? "}" : " }") << " "
                      << hazlang::escape_string(uca.description)
                      << " hazards [] status candidate\n";
        }
    } catch (const hazlang::Error& err) {
        std::cerr << "error[" << err.code() << "]: " << err.what() << "\n";
        return kExitModelErrors;
    }
    return kExitOk;
}

int cmd_asil(const std::string& s, const std::string& e, const std::string& c) {
    auto severity = hazlang::severity_from_keyword(s);
    auto exposure = hazlang::exposure_from_keyword(e);
    auto controllability = hazlang::controllability_from_keyword(c);
    if (!severity || !exposure || !controllability) {
        std::cerr << "usage: asil S<0-3> E<0-4> C<0-3>\n";
        return kExitUsage;
    }
    std::cout << "ASIL " << hazlang::to_keyword(hazlang::determine_asil(
                     *severity, *exposure, *controllability))
              << "\n";
    return kExitOk;
}

int cmd_hara(const std::string& file, const std::string& default_c) {
    auto model = load_model(file);
    if (!model) return kExitModelErrors;
    if (!default_c.empty()) {
        auto c = hazlang::controllability_from_keyword(default_c);
        if (!c) {
            std::cerr << "invalid controllability class '" << default_c << "'\n";
            return kExitUsage;
        }
        if (!model->default_controllability_pragma)
            model->default_controllability_pragma = c;  // pragma wins
    }
    try {
        auto events =
            hazlang::form_hazardous_events(*model, hazlang::declared_event_inputs(*model));
        std::vector<std::vector<std::string>> rows;
        for (const auto& ev : events) {
            const auto* goal_decl = [&]() -> const hazlang::SafetyGoal* {
                for (const auto& g : model->goals)
                    if (g.event == ev.id) return &g;
                return nullptr;
            }();
            rows.push_back({ev.id, ev.hazard, ev.situation,
                            hazlang::to_keyword(ev.severity),
                            hazlang::to_keyword(ev.exposure),
                            hazlang::to_keyword(ev.controllability),
                            hazlang::to_keyword(ev.asil),
                            goal_decl ? goal_decl->text : ev.safety_goal.text});
        }
        print_table({"Event", "Hazard", "Situation", "S", "E", "C", "ASIL", "Safety Goal"},
                    rows);
    } catch (const hazlang::Error& err) {
        std::cerr << "error[" << err.code() << "]: " << err.what() << "\n";
        return kExitModelErrors;
    }
    return kExitOk;
}

int cmd_trace(const std::string& file) {
    auto model = load_model(file);
    if (!model) return kExitModelErrors;
    auto matrix = hazlang::build_trace_matrix(*model);
    for (const auto& finding : matrix.findings)
        std::cout << finding.rule << " " << finding.entity << ": " << finding.message
                  << "\n";
    if (matrix.findings.empty()) std::cout << "trace complete, 0 findings\n";
    return matrix.findings.empty() ? kExitOk : kExitFindings;
}

int cmd_report(const std::string& file, const std::string& format,
               const std::string& out_path) {
    auto model = load_model(file);
    if (!model) return kExitModelErrors;
    auto matrix = hazlang::build_trace_matrix(*model);
    try {
        if (format == "csv" && !out_path.empty()) {
            std::filesystem::create_directories(out_path);
            for (const auto& [name, content] : hazlang::csv_files(*model, matrix)) {
                std::ofstream out(std::filesystem::path(out_path) / name,
                                  std::ios::binary);
                out << content;
            }
            return kExitOk;
        }
        write_output(out_path, hazlang::emit_report(*model, matrix, format));
    } catch (const hazlang::Error& err) {
        std::cerr << "error[" << err.code() << "]: " << err.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}

int cmd_graph(const std::string& file, const std::string& out_path) {
    auto model = load_model(file);
    if (!model) return kExitModelErrors;
    write_output(out_path, hazlang::export_control_structure(*model));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"STPA hazard analysis for the ISO 26262 concept phase"};
    app.require_subcommand(1);

    std::string file, action, vars, s, e, c, format = "md", out_path, default_c;

    auto* check = app.add_subcommand("check", "parse and validate a model");
    check->add_option("file", file)->required();

    auto* gen = app.add_subcommand("gen-uca", "generate UCA candidates as DSL lines");
    gen->add_option("file", file)->required();
    gen->add_option("--action", action, "control action id")->required();
    gen->add_option("--vars", vars, "comma-separated process variables");

    auto* asil = app.add_subcommand("asil", "rate a (S,E,C) combination");
    asil->add_option("severity", s)->required();
    asil->add_option("exposure", e)->required();
    asil->add_option("controllability", c)->required();

    auto* hara = app.add_subcommand("hara", "form hazardous events, print HARA table");
    hara->add_option("file", file)->required();
    hara->add_option("--default-controllability", default_c);

    auto* trace = app.add_subcommand("trace", "report traceability findings");
    trace->add_option("file", file)->required();

    auto* report = app.add_subcommand("report", "emit the concept-phase report");
    report->add_option("file", file)->required();
    report->add_option("--format", format, "md|json|csv");
    report->add_option("--out", out_path, "output file (csv: directory)");

    auto* graph = app.add_subcommand("graph", "export the control structure as dot");
    graph->add_option("file", file)->required();
    graph->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        app.exit(err);
        return kExitUsage;
    }

    try {
        if (check->parsed()) return cmd_check(file);
        if (gen->parsed()) return cmd_gen_uca(file, action, vars);
        if (asil->parsed()) return cmd_asil(s, e, c);
        if (hara->parsed()) return cmd_hara(file, default_c);
        if (trace->parsed()) return cmd_trace(file);
        if (report->parsed()) return cmd_report(file, format, out_path);
        if (graph->parsed()) return cmd_graph(file, out_path);
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitModelErrors;
    }
    return kExitUsage;
}
