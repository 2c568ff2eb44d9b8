#include "hazlang/validate.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "hazlang/stpa.hpp"

namespace hazlang {

bool contains_modal(const std::string& text) {
    auto word_at = [&](std::size_t pos, std::size_t len) {
        bool left_ok = pos == 0 || !std::isalpha(static_cast<unsigned char>(text[pos - 1]));
        std::size_t end = pos + len;
        bool right_ok =
            end >= text.size() || !std::isalpha(static_cast<unsigned char>(text[end]));
        return left_ok && right_ok;
    };
    for (const char* modal : {"shall", "must"}) {
        std::size_t len = std::string(modal).size();
        for (std::size_t pos = text.find(modal); pos != std::string::npos;
             pos = text.find(modal, pos + 1)) {
            if (word_at(pos, len)) return true;
        }
    }
    return false;
}

namespace {

class Checker {
public:
    explicit Checker(const SafetyModel& model) : model_(model) {}

    std::vector<Diagnostic> run() {
        check_accidents();
        check_hazards();
        check_constraints();
        check_structure();
        check_situations();
        check_events();
        check_goals();
        check_ucas();
        check_cscs();
        check_scenarios();
        check_items();
        sort_diagnostics(diags_);
        return std::move(diags_);
    }

private:
    void emit(const std::string& rule, const std::string& entity,
              const std::string& message) {
        diags_.push_back({DiagnosticSeverity::Error, rule, entity, message, std::nullopt});
    }

    void check_accidents() {
        for (const auto& acc : model_.accidents) {
            if (acc.description.empty())
                emit("RANGE", acc.id, "accident '" + acc.id + "' has an empty description");
        }
    }

    void check_hazards() {
        for (const auto& haz : model_.hazards) {
            if (haz.description.empty())
                emit("RANGE", haz.id, "hazard '" + haz.id + "' has an empty description");
            if (haz.leads_to.empty())
                emit("EMPTY_LINKSET", haz.id,
                     "hazard '" + haz.id + "' must lead to at least one accident");
            for (const auto& acc : haz.leads_to) {
                if (!model_.find_accident(acc))
                    emit("DANGLING_REF", haz.id,
                         "hazard '" + haz.id + "' leads_to unknown accident '" + acc + "'");
            }
            if (haz.severity.has_value() != haz.exposure.has_value())
                emit("RANGE", haz.id,
                     "hazard '" + haz.id +
                         "' is partially classified; severity and exposure must be "
                         "given together");
        }
    }

    void check_constraints() {
        for (const auto& sc : model_.constraints) {
            if (sc.mitigates.empty())
                emit("EMPTY_LINKSET", sc.id,
                     "constraint '" + sc.id + "' must mitigate at least one hazard");
            for (const auto& haz : sc.mitigates) {
                if (!model_.find_hazard(haz))
                    emit("DANGLING_REF", sc.id,
                         "constraint '" + sc.id + "' mitigates unknown hazard '" + haz +
                             "'");
            }
            if (!contains_modal(sc.description))
                emit("MODAL_MISSING", sc.id,
                     "constraint '" + sc.id + "' text lacks a modal keyword "
                     "(\"shall\" or \"must\")");
        }
    }

    void check_structure() {
        const auto& cs = model_.structure;
        if (!cs.empty()) {
            bool any_controller =
                std::any_of(cs.nodes.begin(), cs.nodes.end(), [](const Node& n) {
                    return n.kind == NodeKind::Controller;
                });
            if (!any_controller)
                emit("NO_CONTROLLER", "",
                     "control structure declares no controller node");
        }
        for (const auto& node : cs.nodes) {
            if (node.process_model && node.kind != NodeKind::Controller)
                emit("PM_ON_NONCONTROLLER", node.id,
                     "process model attached to non-controller node '" + node.id + "'");
            if (node.process_model) check_process_model(*node.process_model);
        }
        for (const auto& edge : cs.action_edges) {
            const Node* src = cs.find_node(edge.source);
            const Node* dst = cs.find_node(edge.target);
            if (!src)
                emit("DANGLING_REF", edge.id,
                     "action '" + edge.id + "' has unknown source '" + edge.source + "'");
            if (!dst)
                emit("DANGLING_REF", edge.id,
                     "action '" + edge.id + "' has unknown target '" + edge.target + "'");
            if (src && src->kind != NodeKind::Controller && src->kind != NodeKind::Actuator)
                emit("RANGE", edge.id,
                     "action '" + edge.id +
                         "' must originate at a controller or actuator, got " +
                         to_keyword(src->kind));
            if (edge.label.empty())
                emit("RANGE", edge.id, "action '" + edge.id + "' has an empty label");
        }
        for (const auto& edge : cs.feedback_edges) {
            const Node* src = cs.find_node(edge.source);
            const Node* dst = cs.find_node(edge.target);
            if (!src)
                emit("DANGLING_REF", edge.id,
                     "feedback '" + edge.id + "' has unknown source '" + edge.source + "'");
            if (!dst)
                emit("DANGLING_REF", edge.id,
                     "feedback '" + edge.id + "' has unknown target '" + edge.target + "'");
            if (dst && dst->kind != NodeKind::Controller && dst->kind != NodeKind::Actuator)
                emit("RANGE", edge.id,
                     "feedback '" + edge.id +
                         "' must terminate at a controller or actuator, got " +
                         to_keyword(dst->kind));
        }
    }

    void check_process_model(const ProcessModel& pm) {
        std::set<std::string> names;
        for (const auto& var : pm.variables) {
            if (!names.insert(var.name).second)
                emit("RANGE", pm.owner,
                     "process model of '" + pm.owner + "' declares variable '" +
                         var.name + "' more than once");
            if (var.values.size() < 2)
                emit("RANGE", pm.owner,
                     "process variable '" + var.name + "' of '" + pm.owner +
                         "' needs at least two values");
            std::set<std::string> values(var.values.begin(), var.values.end());
            if (values.size() != var.values.size())
                emit("RANGE", pm.owner,
                     "process variable '" + var.name + "' of '" + pm.owner +
                         "' has duplicate values");
        }
    }

    void check_situations() {
        for (const auto& os : model_.situations) {
            if (os.description.empty())
                emit("RANGE", os.id, "situation '" + os.id + "' has an empty description");
        }
    }

    void check_events() {
        for (const auto& ev : model_.events) {
            if (!model_.find_hazard(ev.hazard))
                emit("DANGLING_REF", ev.id,
                     "event '" + ev.id + "' references unknown hazard '" + ev.hazard + "'");
            if (!model_.find_situation(ev.situation))
                emit("DANGLING_REF", ev.id,
                     "event '" + ev.id + "' references unknown situation '" +
                         ev.situation + "'");
        }
    }

    void check_goals() {
        for (const auto& goal : model_.goals) {
            if (!model_.find_event(goal.event))
                emit("DANGLING_REF", goal.id,
                     "goal '" + goal.id + "' references unknown event '" + goal.event +
                         "'");
            if (!contains_modal(goal.text))
                emit("MODAL_MISSING", goal.id,
                     "goal '" + goal.id + "' text lacks a modal keyword");
        }
    }

    void check_ucas() {
        for (const auto& uca : model_.ucas) {
            const ControlActionEdge* action = model_.structure.find_action(uca.action);
            if (!action)
                emit("DANGLING_REF", uca.id,
                     "uca '" + uca.id + "' references unknown action '" + uca.action + "'");
            for (const auto& haz : uca.hazards) {
                if (!model_.find_hazard(haz))
                    emit("DANGLING_REF", uca.id,
                         "uca '" + uca.id + "' references unknown hazard '" + haz + "'");
            }
            if (uca.status == UcaStatus::Confirmed && uca.hazards.empty())
                emit("EMPTY_LINKSET", uca.id,
                     "confirmed uca '" + uca.id + "' links no hazards");
            if (action) check_context(uca, *action);
        }
    }

    void check_context(const UnsafeControlAction& uca, const ControlActionEdge& action) {
        const Node* src = model_.structure.find_node(action.source);
        const ProcessModel* pm =
            (src && src->process_model) ? &*src->process_model : nullptr;
        for (const auto& [name, value] : uca.context.assignments) {
            const ProcessVariable* var = pm ? pm->find_variable(name) : nullptr;
            if (!var) {
                emit("DANGLING_REF", uca.id,
                     "uca '" + uca.id + "' assigns unknown process variable '" + name +
                         "'");
                continue;
            }
            if (std::find(var->values.begin(), var->values.end(), value) ==
                var->values.end())
                emit("DANGLING_REF", uca.id,
                     "uca '" + uca.id + "' assigns undeclared value '" + value +
                         "' to variable '" + name + "'");
        }
    }

    void check_cscs() {
        std::set<std::string> seen_ucas;
        for (const auto& csc : model_.cscs) {
            const UnsafeControlAction* uca = model_.find_uca(csc.uca);
            if (!uca) {
                emit("DANGLING_REF", csc.id,
                     "csc '" + csc.id + "' references unknown uca '" + csc.uca + "'");
            } else {
                if (uca->status != UcaStatus::Confirmed)
                    emit("RANGE", csc.id,
                         "csc '" + csc.id + "' references non-confirmed uca '" + csc.uca +
                             "'");
                if (!seen_ucas.insert(csc.uca).second)
                    emit("RANGE", csc.id,
                         "uca '" + csc.uca + "' has more than one corresponding "
                         "safety constraint");
            }
            if (!contains_modal(csc.text))
                emit("MODAL_MISSING", csc.id,
                     "csc '" + csc.id + "' text lacks a modal keyword");
        }
    }

    void check_scenarios() {
        for (const auto& sc : model_.scenarios) {
            const UnsafeControlAction* uca = model_.find_uca(sc.uca);
            if (!uca)
                emit("DANGLING_REF", sc.id,
                     "scenario '" + sc.id + "' references unknown uca '" + sc.uca + "'");
            else if (uca->status != UcaStatus::Confirmed)
                emit("RANGE", sc.id,
                     "scenario '" + sc.id + "' references non-confirmed uca '" + sc.uca +
                         "'");
        }
    }

    void check_items() {
        for (const auto& item : model_.items) {
            if (item.members.empty()) {
                emit("EMPTY_LINKSET", item.id, "item '" + item.id + "' has no members");
                continue;
            }
            bool resolved = true;
            for (const auto& member : item.members) {
                if (!model_.structure.find_node(member)) {
                    emit("DANGLING_REF", item.id,
                         "item '" + item.id + "' has unknown member '" + member + "'");
                    resolved = false;
                }
            }
            if (resolved) {
                auto [in, out] = boundary_edges(model_.structure, item.members);
                if (in != item.boundary_in || out != item.boundary_out)
                    emit("RANGE", item.id,
                         "item '" + item.id +
                             "' boundary sets do not match the cut edges of its members");
            }
        }
    }

    const SafetyModel& model_;
    std::vector<Diagnostic> diags_;
};

}  // namespace

std::vector<Diagnostic> validate_model(const SafetyModel& model) {
    return Checker(model).run();
}

}  // namespace hazlang
