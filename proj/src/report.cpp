#include "hazlang/report.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

#include "hazlang/hara.hpp"
#include "hazlang/stpa.hpp"

namespace hazlang {

namespace {

using ordered_json = nlohmann::ordered_json;

template <typename T>
std::vector<const T*> sorted_by_id(const std::vector<T>& items) {
    std::vector<const T*> out;
    for (const auto& item : items) out.push_back(&item);
    std::sort(out.begin(), out.end(),
              [](const T* a, const T* b) { return a->id < b->id; });
    return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

std::vector<std::string> sorted(std::vector<std::string> values) {
    std::sort(values.begin(), values.end());
    return values;
}

std::string md_cell(const std::string& text) {
    std::string out;
    for (char c : text) {
        if (c == '|') out += "\\|";
        else if (c == '\n') out += " ";
        else out.push_back(c);
    }
    return out;
}

void md_table(std::ostringstream& out, const std::vector<std::string>& header,
              const std::vector<std::vector<std::string>>& rows) {
    out << "| " << join(header, " | ") << " |\n|";
    for (std::size_t i = 0; i < header.size(); ++i) out << " --- |";
    out << "\n";
    for (const auto& row : rows) {
        out << "|";
        for (const auto& cell : row) out << " " << md_cell(cell) << " |";
        out << "\n";
    }
}

std::string context_text(const Context& ctx) {
    if (ctx.free_text) return *ctx.free_text;
    std::string out;
    for (const auto& [name, value] : ctx.assignments) {
        if (!out.empty()) out += ", ";
        out += name + "=" + value;
    }
    return out;
}

/// Hazardous events as they appear in reports; formation failures are skipped.
std::vector<HazardousEvent> formed_events(const SafetyModel& model) {
    std::vector<HazardousEvent> events;
    for (const auto& input : declared_event_inputs(model)) {
        try {
            auto one = form_hazardous_events(model, {input});
            events.push_back(std::move(one.front()));
        } catch (const Error&) {
            // unformed event, reported via trace findings
        }
    }
    std::sort(events.begin(), events.end(),
              [](const HazardousEvent& a, const HazardousEvent& b) { return a.id < b.id; });
    return events;
}

std::string goal_text_for(const SafetyModel& model, const HazardousEvent& event) {
    for (const auto& goal : model.goals) {
        if (goal.event == event.id) return goal.text;
    }
    return event.safety_goal.text;
}

std::string emit_markdown(const SafetyModel& model, const TraceMatrix& matrix) {
    std::ostringstream out;
    out << "# Safety Analysis Report\n";

    out << "\n## Accidents\n\n";
    {
        std::vector<std::vector<std::string>> rows;
        for (const auto* acc : sorted_by_id(model.accidents))
            rows.push_back({acc->id, acc->description, acc->severity_note.value_or("")});
        md_table(out, {"ID", "Description", "Note"}, rows);
    }

    out << "\n## Hazards\n\n";
    {
        std::vector<std::vector<std::string>> rows;
        for (const auto* haz : sorted_by_id(model.hazards))
            rows.push_back({haz->id, haz->description, join(sorted(haz->leads_to), ", "),
                            haz->severity ? to_keyword(*haz->severity) : "",
                            haz->exposure ? to_keyword(*haz->exposure) : ""});
        md_table(out, {"ID", "Description", "Leads To", "S", "E"}, rows);
    }

    out << "\n## System Safety Constraints\n\n";
    {
        std::vector<std::vector<std::string>> rows;
        for (const auto* sc : sorted_by_id(model.constraints))
            rows.push_back({sc->id, sc->description, join(sorted(sc->mitigates), ", ")});
        md_table(out, {"ID", "Description", "Mitigates"}, rows);
    }

    auto events = formed_events(model);

    out << "\n## HARA\n\n";
    {
        std::vector<std::vector<std::string>> rows;
        for (const auto& ev : events) {
            const OperationalSituation* os = model.find_situation(ev.situation);
            std::string asil = to_keyword(ev.asil);
            if (ev.asil == Asil::QM) asil += " (informative)";
            rows.push_back({ev.id, ev.hazard, os ? os->description : ev.situation,
                            to_keyword(ev.severity), to_keyword(ev.exposure),
                            to_keyword(ev.controllability), asil,
                            goal_text_for(model, ev)});
        }
        md_table(out, {"Event", "Hazard", "Situation", "S", "E", "C", "ASIL",
                       "Safety Goal"},
                 rows);
    }

    out << "\n## Unsafe Control Actions\n\n";
    {
        // Classic four-column guide-word layout: one row per control action,
        // cells list the UCA ids of that (action, guide word).
        std::vector<std::vector<std::string>> rows;
        for (const auto* action : sorted_by_id(model.structure.action_edges)) {
            std::map<GuideWord, std::vector<std::string>> cells;
            for (const auto* uca : sorted_by_id(model.ucas)) {
                if (uca->action != action->id || uca->status == UcaStatus::Rejected)
                    continue;
                cells[uca->guide_word].push_back(uca->id);
            }
            rows.push_back({action->label,
                            join(cells[GuideWord::NotProvided], ", "),
                            join(cells[GuideWord::ProvidedUnsafe], ", "),
                            join(cells[GuideWord::WrongTimingOrOrder], ", "),
                            join(cells[GuideWord::StoppedTooSoonOrAppliedTooLong], ", ")});
        }
        md_table(out, {"Control Action", "Not Providing", "Providing Incorrect",
                       "Wrong Timing/Order", "Stopped Too Soon/Applied Too Long"},
                 rows);
    }

    out << "\n## Corresponding Safety Constraints\n\n";
    {
        std::vector<std::vector<std::string>> rows;
        for (const auto* csc : sorted_by_id(model.cscs))
            rows.push_back({csc->id, csc->uca, csc->text});
        md_table(out, {"ID", "UCA", "Text"}, rows);
    }

    out << "\n## Causal Scenarios\n\n";
    {
        std::vector<std::vector<std::string>> rows;
        for (const auto* sc : sorted_by_id(model.scenarios))
            rows.push_back({sc->id, sc->uca, to_keyword(sc->factor_category),
                            sc->description, sc->derived_constraint.value_or("")});
        md_table(out, {"ID", "UCA", "Factor", "Description", "Derived Constraint"}, rows);
    }

    out << "\n## Findings\n\n";
    if (matrix.findings.empty()) {
        out << "No findings.\n";
    } else {
        for (const auto& finding : matrix.findings)
            out << "- **" << finding.rule << "** " << finding.entity << ": "
                << finding.message << "\n";
    }
    return out.str();
}

}  // namespace

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out.push_back('"');
    return out;
}

namespace {

std::string csv_doc(const std::vector<std::string>& header,
                    const std::vector<std::vector<std::string>>& rows) {
    std::ostringstream out;
    out << join(header, ",") << "\n";
    for (const auto& row : rows) {
        std::vector<std::string> escaped;
        for (const auto& field : row) escaped.push_back(csv_escape(field));
        out << join(escaped, ",") << "\n";
    }
    return out.str();
}

}  // namespace

std::vector<std::pair<std::string, std::string>> csv_files(const SafetyModel& model,
                                                           const TraceMatrix& matrix) {
    std::vector<std::pair<std::string, std::string>> files;

    {
        std::vector<std::vector<std::string>> rows;
        for (const auto* acc : sorted_by_id(model.accidents))
            rows.push_back({acc->id, acc->description, acc->severity_note.value_or("")});
        files.emplace_back("accidents.csv", csv_doc({"id", "description", "note"}, rows));
    }
    {
        std::vector<std::vector<std::string>> rows;
        for (const auto* haz : sorted_by_id(model.hazards))
            rows.push_back({haz->id, haz->description, join(sorted(haz->leads_to), ";"),
                            haz->severity ? to_keyword(*haz->severity) : "",
                            haz->exposure ? to_keyword(*haz->exposure) : ""});
        files.emplace_back(
            "hazards.csv",
            csv_doc({"id", "description", "leads_to", "severity", "exposure"}, rows));
    }
    {
        std::vector<std::vector<std::string>> rows;
        for (const auto* sc : sorted_by_id(model.constraints))
            rows.push_back({sc->id, sc->description, join(sorted(sc->mitigates), ";")});
        files.emplace_back("constraints.csv",
                           csv_doc({"id", "description", "mitigates"}, rows));
    }
    {
        std::vector<std::vector<std::string>> rows;
        for (const auto* node : sorted_by_id(model.structure.nodes))
            rows.push_back({node->id, to_keyword(node->kind), node->label});
        files.emplace_back("nodes.csv", csv_doc({"id", "kind", "label"}, rows));
    }
    {
        std::vector<std::vector<std::string>> rows;
        for (const auto* e : sorted_by_id(model.structure.action_edges))
            rows.push_back({e->id, e->source, e->target, e->label,
                            join(e->payload_fields, ";")});
        files.emplace_back("actions.csv",
                           csv_doc({"id", "source", "target", "label", "payload"}, rows));
    }
    {
        std::vector<std::vector<std::string>> rows;
        for (const auto* e : sorted_by_id(model.structure.feedback_edges))
            rows.push_back({e->id, e->source, e->target, e->label});
        files.emplace_back("feedbacks.csv",
                           csv_doc({"id", "source", "target", "label"}, rows));
    }
    {
        std::vector<std::vector<std::string>> rows;
        for (const auto* os : sorted_by_id(model.situations))
            rows.push_back({os->id, os->description, os->operating_mode.value_or("")});
        files.emplace_back("situations.csv", csv_doc({"id", "description", "mode"}, rows));
    }
    {
        std::vector<std::vector<std::string>> rows;
        for (const auto& ev : formed_events(model))
            rows.push_back({ev.id, ev.hazard, ev.situation, to_keyword(ev.severity),
                            to_keyword(ev.exposure), to_keyword(ev.controllability),
                            to_keyword(ev.asil), goal_text_for(model, ev)});
        files.emplace_back("events.csv",
                           csv_doc({"id", "hazard", "situation", "severity", "exposure",
                                    "controllability", "asil", "safety_goal"},
                                   rows));
    }
    {
        std::vector<std::vector<std::string>> rows;
        for (const auto* goal : sorted_by_id(model.goals))
            rows.push_back({goal->id, goal->event,
                            goal->asil ? to_keyword(*goal->asil) : "", goal->text});
        files.emplace_back("goals.csv", csv_doc({"id", "event", "asil", "text"}, rows));
    }
    {
        std::vector<std::vector<std::string>> rows;
        for (const auto* uca : sorted_by_id(model.ucas))
            rows.push_back({uca->id, uca->action, to_keyword(uca->guide_word),
                            context_text(uca->context), uca->description,
                            join(sorted(uca->hazards), ";"), to_keyword(uca->status)});
        files.emplace_back("ucas.csv",
                           csv_doc({"id", "action", "guide_word", "context",
                                    "description", "hazards", "status"},
                                   rows));
    }
    {
        std::vector<std::vector<std::string>> rows;
        for (const auto* csc : sorted_by_id(model.cscs))
            rows.push_back({csc->id, csc->uca, csc->text});
        files.emplace_back("cscs.csv", csv_doc({"id", "uca", "text"}, rows));
    }
    {
        std::vector<std::vector<std::string>> rows;
        for (const auto* sc : sorted_by_id(model.scenarios))
            rows.push_back({sc->id, sc->uca, to_keyword(sc->factor_category),
                            sc->description, sc->derived_constraint.value_or("")});
        files.emplace_back(
            "scenarios.csv",
            csv_doc({"id", "uca", "factor", "description", "constraint"}, rows));
    }
    {
        std::vector<std::vector<std::string>> rows;
        for (const auto* item : sorted_by_id(model.items))
            rows.push_back({item->id, item->name, join(item->members, ";"),
                            join(item->boundary_in, ";"), join(item->boundary_out, ";"),
                            item->purpose});
        files.emplace_back("items.csv",
                           csv_doc({"id", "name", "members", "boundary_in",
                                    "boundary_out", "purpose"},
                                   rows));
    }
    {
        std::vector<std::vector<std::string>> rows;
        for (const auto& link : matrix.links)
            rows.push_back({link.from, link.to, to_keyword(link.kind)});
        files.emplace_back("links.csv", csv_doc({"from", "to", "kind"}, rows));
    }
    {
        std::vector<std::vector<std::string>> rows;
        for (const auto& finding : matrix.findings)
            rows.push_back({finding.rule, finding.entity, finding.message});
        files.emplace_back("findings.csv", csv_doc({"rule", "entity", "message"}, rows));
    }
    return files;
}

std::string model_to_json(const SafetyModel& model, const TraceMatrix& matrix) {
    ordered_json doc;
    doc["schema_version"] = 1;
    if (model.default_controllability_pragma)
        doc["default_controllability"] = to_keyword(*model.default_controllability_pragma);

    doc["accidents"] = ordered_json::array();
    for (const auto* acc : sorted_by_id(model.accidents)) {
        ordered_json j{{"id", acc->id}, {"description", acc->description}};
        if (acc->severity_note) j["note"] = *acc->severity_note;
        doc["accidents"].push_back(j);
    }
    doc["hazards"] = ordered_json::array();
    for (const auto* haz : sorted_by_id(model.hazards)) {
        ordered_json j{{"id", haz->id},
                       {"description", haz->description},
                       {"leads_to", sorted(haz->leads_to)}};
        if (haz->severity) j["severity"] = to_keyword(*haz->severity);
        if (haz->exposure) j["exposure"] = to_keyword(*haz->exposure);
        doc["hazards"].push_back(j);
    }
    doc["constraints"] = ordered_json::array();
    for (const auto* sc : sorted_by_id(model.constraints))
        doc["constraints"].push_back({{"id", sc->id},
                                      {"description", sc->description},
                                      {"mitigates", sorted(sc->mitigates)}});

    ordered_json structure;
    structure["nodes"] = ordered_json::array();
    for (const auto* node : sorted_by_id(model.structure.nodes)) {
        ordered_json j{{"id", node->id},
                       {"kind", to_keyword(node->kind)},
                       {"label", node->label}};
        if (node->process_model) {
            ordered_json vars = ordered_json::array();
            std::vector<const ProcessVariable*> sorted_vars;
            for (const auto& v : node->process_model->variables) sorted_vars.push_back(&v);
            std::sort(sorted_vars.begin(), sorted_vars.end(),
                      [](const ProcessVariable* a, const ProcessVariable* b) {
                          return a->name < b->name;
                      });
            for (const auto* v : sorted_vars)
                vars.push_back({{"name", v->name}, {"values", v->values}});
            j["process_model"] = vars;
        }
        structure["nodes"].push_back(j);
    }
    structure["actions"] = ordered_json::array();
    for (const auto* e : sorted_by_id(model.structure.action_edges))
        structure["actions"].push_back({{"id", e->id},
                                        {"source", e->source},
                                        {"target", e->target},
                                        {"label", e->label},
                                        {"payload", e->payload_fields}});
    structure["feedbacks"] = ordered_json::array();
    for (const auto* e : sorted_by_id(model.structure.feedback_edges))
        structure["feedbacks"].push_back({{"id", e->id},
                                          {"source", e->source},
                                          {"target", e->target},
                                          {"label", e->label}});
    doc["structure"] = structure;

    doc["situations"] = ordered_json::array();
    for (const auto* os : sorted_by_id(model.situations)) {
        ordered_json j{{"id", os->id}, {"description", os->description}};
        if (os->operating_mode) j["mode"] = *os->operating_mode;
        doc["situations"].push_back(j);
    }
    doc["events"] = ordered_json::array();
    for (const auto* ev : sorted_by_id(model.events)) {
        ordered_json j{{"id", ev->id}, {"hazard", ev->hazard}, {"situation", ev->situation}};
        if (ev->controllability) j["controllability"] = to_keyword(*ev->controllability);
        doc["events"].push_back(j);
    }
    doc["goals"] = ordered_json::array();
    for (const auto* goal : sorted_by_id(model.goals)) {
        ordered_json j{{"id", goal->id}, {"event", goal->event}, {"text", goal->text}};
        if (goal->asil) j["asil"] = to_keyword(*goal->asil);
        doc["goals"].push_back(j);
    }
    doc["ucas"] = ordered_json::array();
    for (const auto* uca : sorted_by_id(model.ucas)) {
        ordered_json context;
        context["assignments"] = ordered_json::object();
        for (const auto& [name, value] : uca->context.assignments)
            context["assignments"][name] = value;
        if (uca->context.free_text) context["free_text"] = *uca->context.free_text;
        doc["ucas"].push_back({{"id", uca->id},
                               {"action", uca->action},
                               {"guide_word", to_keyword(uca->guide_word)},
                               {"context", context},
                               {"description", uca->description},
                               {"hazards", sorted(uca->hazards)},
                               {"status", to_keyword(uca->status)}});
    }
    doc["cscs"] = ordered_json::array();
    for (const auto* csc : sorted_by_id(model.cscs))
        doc["cscs"].push_back({{"id", csc->id}, {"uca", csc->uca}, {"text", csc->text}});
    doc["scenarios"] = ordered_json::array();
    for (const auto* sc : sorted_by_id(model.scenarios)) {
        ordered_json j{{"id", sc->id},
                       {"uca", sc->uca},
                       {"factor", to_keyword(sc->factor_category)},
                       {"description", sc->description}};
        if (sc->derived_constraint) j["constraint"] = *sc->derived_constraint;
        doc["scenarios"].push_back(j);
    }
    doc["items"] = ordered_json::array();
    for (const auto* item : sorted_by_id(model.items))
        doc["items"].push_back({{"id", item->id},
                                {"name", item->name},
                                {"members", item->members},
                                {"boundary_in", item->boundary_in},
                                {"boundary_out", item->boundary_out},
                                {"purpose", item->purpose}});

    ordered_json trace;
    trace["links"] = ordered_json::array();
    for (const auto& link : matrix.links)
        trace["links"].push_back(
            {{"from", link.from}, {"to", link.to}, {"kind", to_keyword(link.kind)}});
    trace["findings"] = ordered_json::array();
    for (const auto& finding : matrix.findings)
        trace["findings"].push_back({{"rule", finding.rule},
                                     {"entity", finding.entity},
                                     {"message", finding.message}});
    doc["trace"] = trace;

    return doc.dump(2) + "\n";
}

SafetyModel model_from_json(const std::string& json_text) {
    ordered_json doc = ordered_json::parse(json_text);
    SafetyModel model;

    if (doc.contains("default_controllability")) {
        auto c = controllability_from_keyword(
            doc["default_controllability"].get<std::string>());
        if (c) model.default_controllability_pragma = c;
    }
    for (const auto& j : doc.value("accidents", ordered_json::array())) {
        Accident acc{j.at("id"), j.at("description"), std::nullopt};
        if (j.contains("note")) acc.severity_note = j["note"].get<std::string>();
        model.accidents.push_back(std::move(acc));
    }
    for (const auto& j : doc.value("hazards", ordered_json::array())) {
        Hazard haz;
        haz.id = j.at("id");
        haz.description = j.at("description");
        haz.leads_to = j.at("leads_to").get<std::vector<std::string>>();
        if (j.contains("severity"))
            haz.severity = severity_from_keyword(j["severity"].get<std::string>());
        if (j.contains("exposure"))
            haz.exposure = exposure_from_keyword(j["exposure"].get<std::string>());
        model.hazards.push_back(std::move(haz));
    }
    for (const auto& j : doc.value("constraints", ordered_json::array()))
        model.constraints.push_back(
            {j.at("id"), j.at("description"),
             j.at("mitigates").get<std::vector<std::string>>()});

    if (doc.contains("structure")) {
        const auto& s = doc["structure"];
        for (const auto& j : s.value("nodes", ordered_json::array())) {
            Node node;
            node.id = j.at("id");
            node.kind = node_kind_from_keyword(j.at("kind").get<std::string>())
                            .value_or(NodeKind::Controller);
            node.label = j.at("label");
            if (j.contains("process_model")) {
                ProcessModel pm;
                pm.owner = node.id;
                for (const auto& v : j["process_model"])
                    pm.variables.push_back(
                        {v.at("name"), v.at("values").get<std::vector<std::string>>()});
                node.process_model = std::move(pm);
            }
            model.structure.nodes.push_back(std::move(node));
        }
        for (const auto& j : s.value("actions", ordered_json::array()))
            model.structure.action_edges.push_back(
                {j.at("id"), j.at("source"), j.at("target"), j.at("label"),
                 j.at("payload").get<std::vector<std::string>>()});
        for (const auto& j : s.value("feedbacks", ordered_json::array()))
            model.structure.feedback_edges.push_back(
                {j.at("id"), j.at("source"), j.at("target"), j.at("label")});
    }
    for (const auto& j : doc.value("situations", ordered_json::array())) {
        OperationalSituation os{j.at("id"), j.at("description"), std::nullopt};
        if (j.contains("mode")) os.operating_mode = j["mode"].get<std::string>();
        model.situations.push_back(std::move(os));
    }
    for (const auto& j : doc.value("events", ordered_json::array())) {
        HazardousEventDecl ev{j.at("id"), j.at("hazard"), j.at("situation"), std::nullopt};
        if (j.contains("controllability"))
            ev.controllability =
                controllability_from_keyword(j["controllability"].get<std::string>());
        model.events.push_back(std::move(ev));
    }
    for (const auto& j : doc.value("goals", ordered_json::array())) {
        SafetyGoal goal{j.at("id"), j.at("text"), j.at("event"), std::nullopt};
        if (j.contains("asil")) goal.asil = asil_from_keyword(j["asil"].get<std::string>());
        model.goals.push_back(std::move(goal));
    }
    for (const auto& j : doc.value("ucas", ordered_json::array())) {
        UnsafeControlAction uca;
        uca.id = j.at("id");
        uca.action = j.at("action");
        uca.guide_word = guide_word_from_keyword(j.at("guide_word").get<std::string>())
                             .value_or(GuideWord::NotProvided);
        const auto& ctx = j.at("context");
        for (const auto& [name, value] : ctx.at("assignments").items())
            uca.context.assignments[name] = value.get<std::string>();
        if (ctx.contains("free_text"))
            uca.context.free_text = ctx["free_text"].get<std::string>();
        uca.description = j.at("description");
        uca.hazards = j.at("hazards").get<std::vector<std::string>>();
        uca.status = uca_status_from_keyword(j.at("status").get<std::string>())
                         .value_or(UcaStatus::Candidate);
        model.ucas.push_back(std::move(uca));
    }
    for (const auto& j : doc.value("cscs", ordered_json::array()))
        model.cscs.push_back({j.at("id"), j.at("uca"), j.at("text")});
    for (const auto& j : doc.value("scenarios", ordered_json::array())) {
        CausalScenario sc;
        sc.id = j.at("id");
        sc.uca = j.at("uca");
        sc.factor_category = causal_factor_from_keyword(j.at("factor").get<std::string>())
                                 .value_or(CausalFactorCategory::ControllerProcessModelFlaw);
        sc.description = j.at("description");
        if (j.contains("constraint"))
            sc.derived_constraint = j["constraint"].get<std::string>();
        model.scenarios.push_back(std::move(sc));
    }
    for (const auto& j : doc.value("items", ordered_json::array()))
        model.items.push_back({j.at("id"), j.at("name"),
                               j.at("members").get<std::vector<std::string>>(),
                               j.at("boundary_in").get<std::vector<std::string>>(),
                               j.at("boundary_out").get<std::vector<std::string>>(),
                               j.at("purpose")});
    return model;
}

std::string export_control_structure(const SafetyModel& model) {
    auto shape_of = [](NodeKind kind) {
        switch (kind) {
            case NodeKind::Controller: return "box";
            case NodeKind::Actuator: return "trapezium";
            case NodeKind::ControlledProcess: return "ellipse";
            case NodeKind::Sensor: return "hexagon";
            case NodeKind::External: return "component";
        }
        return "box";
    };
    auto quote = [](const std::string& text) {
        std::string out = "\"";
        for (char c : text) {
            if (c == '"' || c == '\\') out.push_back('\\');
            out.push_back(c);
        }
        out.push_back('"');
        return out;
    };

    std::ostringstream out;
    out << "digraph control_structure {\n";
    out << "  rankdir=TB;\n";
    for (const auto* node : sorted_by_id(model.structure.nodes)) {
        out << "  " << quote(node->id) << " [label=" << quote(node->label)
            << ", shape=" << shape_of(node->kind) << "];\n";
    }
    for (const auto* edge : sorted_by_id(model.structure.action_edges)) {
        out << "  " << quote(edge->source) << " -> " << quote(edge->target)
            << " [label=" << quote(edge->label) << ", style=solid];\n";
    }
    for (const auto* edge : sorted_by_id(model.structure.feedback_edges)) {
        out << "  " << quote(edge->source) << " -> " << quote(edge->target)
            << " [label=" << quote(edge->label) << ", style=dashed];\n";
    }
    out << "}\n";
    return out.str();
}

std::string emit_report(const SafetyModel& model, const TraceMatrix& matrix,
                        const std::string& format) {
    if (format == "markdown" || format == "md") return emit_markdown(model, matrix);
    if (format == "json") return model_to_json(model, matrix);
    if (format == "csv") {
        std::ostringstream out;
        for (const auto& [name, content] : csv_files(model, matrix))
            out << "#=== " << name << "\n" << content;
        return out.str();
    }
    throw Error("UNSUPPORTED_FORMAT", "unsupported report format '" + format + "'");
}

}  // namespace hazlang
