#include "hazlang/stpa.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace hazlang {

std::pair<std::vector<std::string>, std::vector<std::string>> boundary_edges(
    const ControlStructure& structure, const std::vector<std::string>& members) {
    std::set<std::string> inside(members.begin(), members.end());
    std::vector<std::string> in, out;
    auto classify = [&](const std::string& id, const std::string& source,
                        const std::string& target) {
        bool src_in = inside.count(source) > 0;
        bool dst_in = inside.count(target) > 0;
        if (src_in && !dst_in) out.push_back(id);
        if (!src_in && dst_in) in.push_back(id);
    };
    for (const auto& e : structure.action_edges) classify(e.id, e.source, e.target);
    for (const auto& e : structure.feedback_edges) classify(e.id, e.source, e.target);
    std::sort(in.begin(), in.end());
    std::sort(out.begin(), out.end());
    return {in, out};
}

namespace {

bool weakly_connected(const ControlStructure& structure,
                      const std::set<std::string>& members) {
    if (members.size() <= 1) return true;
    std::map<std::string, std::vector<std::string>> adjacency;
    auto link = [&](const std::string& a, const std::string& b) {
        if (members.count(a) && members.count(b)) {
            adjacency[a].push_back(b);
            adjacency[b].push_back(a);
        }
    };
    for (const auto& e : structure.action_edges) link(e.source, e.target);
    for (const auto& e : structure.feedback_edges) link(e.source, e.target);

    std::set<std::string> seen;
    std::deque<std::string> queue{*members.begin()};
    seen.insert(*members.begin());
    while (!queue.empty()) {
        std::string current = queue.front();
        queue.pop_front();
        for (const auto& next : adjacency[current]) {
            if (seen.insert(next).second) queue.push_back(next);
        }
    }
    return seen.size() == members.size();
}

std::string slug_of(const std::string& name) {
    std::string slug;
    for (char c : name) slug.push_back(c == ' ' ? '_' : c);
    return slug;
}

}  // namespace

ItemDefinition derive_item_definition(const SafetyModel& model,
                                      const std::vector<std::string>& members,
                                      const std::string& name,
                                      const std::string& purpose) {
    if (members.empty()) throw Error("EMPTY_MEMBERS", "item member set is empty");
    std::set<std::string> unique(members.begin(), members.end());
    std::vector<std::string> labels;
    for (const auto& id : unique) {
        const Node* node = model.structure.find_node(id);
        if (!node) throw Error("DANGLING_REF", "unknown member node '" + id + "'");
        labels.push_back(node->label);
    }
    if (!weakly_connected(model.structure, unique))
        throw Error("DISCONNECTED", "item members are not weakly connected");

    ItemDefinition item;
    item.id = "item." + slug_of(name);
    item.name = name;
    item.members.assign(unique.begin(), unique.end());
    auto [in, out] = boundary_edges(model.structure, item.members);
    item.boundary_in = std::move(in);
    item.boundary_out = std::move(out);
    if (!purpose.empty()) {
        item.purpose = purpose;
    } else {
        std::string joined;
        for (const auto& label : labels) {
            if (!joined.empty()) joined += ", ";
            joined += label;
        }
        item.purpose = joined;
    }
    return item;
}

std::vector<Diagnostic> validate_control_structure(const SafetyModel& model) {
    const auto& cs = model.structure;
    std::vector<Diagnostic> diags;

    // Feedback reachability: walk feedback edges forward from the action
    // target or from any sensor node; the pair is covered if the commanding
    // controller is reached. Action edges never count as feedback.
    std::set<std::string> start;
    for (const auto& node : cs.nodes) {
        if (node.kind == NodeKind::Sensor) start.insert(node.id);
    }
    auto reaches = [&](const std::string& from, const std::string& to) {
        std::set<std::string> seen = start;
        seen.insert(from);
        bool grew = true;
        while (grew) {
            grew = false;
            for (const auto& fb : cs.feedback_edges) {
                if (seen.count(fb.source) && seen.insert(fb.target).second) grew = true;
            }
        }
        return seen.count(to) > 0;
    };

    std::set<std::pair<std::string, std::string>> checked;
    for (const auto& edge : cs.action_edges) {
        const Node* src = cs.find_node(edge.source);
        if (!src || src->kind != NodeKind::Controller) continue;
        if (!checked.insert({edge.source, edge.target}).second) continue;
        if (!reaches(edge.target, edge.source)) {
            diags.push_back({DiagnosticSeverity::Warning, "NO_FEEDBACK", edge.id,
                             "no feedback path from '" + edge.target + "' back to "
                             "controller '" + edge.source + "' for action '" +
                                 edge.label + "'",
                             std::nullopt});
        }
    }

    for (const auto& node : cs.nodes) {
        if (node.kind != NodeKind::Controller || node.process_model) continue;
        bool sources_action =
            std::any_of(cs.action_edges.begin(), cs.action_edges.end(),
                        [&](const ControlActionEdge& e) { return e.source == node.id; });
        if (sources_action)
            diags.push_back({DiagnosticSeverity::Warning, "NO_PROCESS_MODEL", node.id,
                             "controller '" + node.id +
                                 "' issues control actions but declares no process model",
                             std::nullopt});
    }

    sort_diagnostics(diags);
    return diags;
}

std::vector<Context> enumerate_contexts(const ProcessModel& pm,
                                        const std::vector<std::string>& vars) {
    std::vector<std::string> names(vars.begin(), vars.end());
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());

    std::vector<const ProcessVariable*> selected;
    for (const auto& name : names) {
        const ProcessVariable* var = pm.find_variable(name);
        if (!var)
            throw Error("UNKNOWN_VARIABLE",
                        "process model of '" + pm.owner + "' declares no variable '" +
                            name + "'");
        selected.push_back(var);
    }

    std::vector<Context> contexts{Context{}};
    std::vector<std::size_t> odometer(selected.size(), 0);
    if (!selected.empty()) {
        contexts.clear();
        while (true) {
            Context ctx;
            for (std::size_t i = 0; i < selected.size(); ++i)
                ctx.assignments[selected[i]->name] = selected[i]->values[odometer[i]];
            contexts.push_back(std::move(ctx));
            // advance, last variable fastest
            std::size_t i = selected.size();
            while (i > 0) {
                --i;
                if (++odometer[i] < selected[i]->values.size()) break;
                odometer[i] = 0;
                if (i == 0) return contexts;
            }
        }
    }
    return contexts;
}

std::string guide_word_phrase(GuideWord word) {
    switch (word) {
        case GuideWord::NotProvided: return "does not provide";
        case GuideWord::ProvidedUnsafe: return "provides unsafely";
        case GuideWord::WrongTimingOrOrder: return "provides at the wrong time or order";
        case GuideWord::StoppedTooSoonOrAppliedTooLong:
            return "stops too soon or applies too long";
    }
    return "?";
}

namespace {

std::string context_body(const Context& context) {
    if (context.free_text) return *context.free_text;
    std::string body;
    for (const auto& [name, value] : context.assignments) {
        if (!body.empty()) body += ", ";
        body += name + "=" + value;
    }
    return body;
}

}  // namespace

std::string context_clause(const Context& context) {
    std::string body = context_body(context);
    if (body.empty()) return "in any context";
    return "while " + body;
}

std::vector<UnsafeControlAction> generate_uca_candidates(
    const SafetyModel& model, const std::string& action_id,
    const std::vector<std::string>& vars) {
    const ControlActionEdge* action = model.structure.find_action(action_id);
    if (!action) throw Error("UNKNOWN_ACTION", "unknown control action '" + action_id + "'");
    const Node* source = model.structure.find_node(action->source);

    ProcessModel empty_pm;
    const ProcessModel* pm =
        (source && source->process_model) ? &*source->process_model : &empty_pm;
    std::vector<Context> contexts = enumerate_contexts(*pm, vars);

    static constexpr GuideWord kGuideWords[] = {
        GuideWord::NotProvided,
        GuideWord::ProvidedUnsafe,
        GuideWord::WrongTimingOrOrder,
        GuideWord::StoppedTooSoonOrAppliedTooLong,
    };

    std::string source_label = source ? source->label : action->source;
    std::vector<UnsafeControlAction> candidates;
    candidates.reserve(4 * contexts.size());
    for (GuideWord word : kGuideWords) {
        for (std::size_t n = 0; n < contexts.size(); ++n) {
            UnsafeControlAction uca;
            uca.id = action->id + "." + to_keyword(word) + "." + std::to_string(n + 1);
            uca.action = action->id;
            uca.guide_word = word;
            uca.context = contexts[n];
            uca.description = source_label + " " + guide_word_phrase(word) + " " +
                              action->label + " " + context_clause(contexts[n]);
            uca.status = UcaStatus::Candidate;
            candidates.push_back(std::move(uca));
        }
    }
    return candidates;
}

CorrespondingSafetyConstraint derive_corresponding_constraint(
    const UnsafeControlAction& uca, const SafetyModel& model) {
    if (uca.status != UcaStatus::Confirmed)
        throw Error("NOT_CONFIRMED", "uca '" + uca.id + "' is not confirmed");
    const ControlActionEdge* action = model.structure.find_action(uca.action);
    if (!action) throw Error("UNKNOWN_ACTION", "unknown control action '" + uca.action + "'");
    const Node* source = model.structure.find_node(action->source);
    const Node* target = model.structure.find_node(action->target);
    std::string source_label = source ? source->label : action->source;
    std::string action_phrase =
        action->label + " to " + (target ? target->label : action->target);

    std::string body = context_body(uca.context);
    auto clause = [&](const std::string& preposition) {
        if (body.empty()) return std::string("in any context");
        return preposition + " " + body;
    };

    std::string text;
    switch (uca.guide_word) {
        case GuideWord::NotProvided:
            text = source_label + " must always provide a valid " + action_phrase + " " +
                   clause("while");
            break;
        case GuideWord::ProvidedUnsafe:
            text = source_label + " must not provide " + action_phrase + " " +
                   clause("when");
            break;
        case GuideWord::WrongTimingOrOrder:
            text = source_label + " must provide " + action_phrase +
                   " at the required time and in the required order " + clause("while");
            break;
        case GuideWord::StoppedTooSoonOrAppliedTooLong:
            text = source_label + " must continue providing " + action_phrase +
                   " for the required duration " + clause("while");
            break;
    }

    return CorrespondingSafetyConstraint{"SC-" + uca.id, uca.id, text};
}

CausalChecklist causal_factor_checklist(const UnsafeControlAction& uca,
                                        const SafetyModel& model) {
    if (uca.status != UcaStatus::Confirmed)
        throw Error("NOT_CONFIRMED", "uca '" + uca.id + "' is not confirmed");
    const ControlActionEdge* action = model.structure.find_action(uca.action);
    if (!action) throw Error("UNKNOWN_ACTION", "unknown control action '" + uca.action + "'");

    const auto& cs = model.structure;
    const Node* source = cs.find_node(action->source);
    const Node* target = cs.find_node(action->target);
    std::string source_label = source ? source->label : action->source;
    std::string target_label = target ? target->label : action->target;

    // Feedback edges that close the loop back to the commanding controller.
    std::vector<const FeedbackEdge*> returning;
    for (const auto& fb : cs.feedback_edges) {
        if (fb.target == action->source) returning.push_back(&fb);
    }
    std::sort(returning.begin(), returning.end(),
              [](const FeedbackEdge* a, const FeedbackEdge* b) { return a->id < b->id; });

    auto touches_external = [&](const std::string& a, const std::string& b) {
        const Node* na = cs.find_node(a);
        const Node* nb = cs.find_node(b);
        return (na && na->kind == NodeKind::External) ||
               (nb && nb->kind == NodeKind::External);
    };

    CausalChecklist checklist;
    auto add = [&](CausalFactorCategory category, std::string prompt,
                   std::string element) {
        checklist.items.push_back({category, std::move(prompt), std::move(element)});
    };

    add(CausalFactorCategory::ControllerProcessModelFlaw,
        "Could the process model of " + source_label +
            " be wrong or stale when issuing '" + action->label + "'?",
        action->source);
    add(CausalFactorCategory::ControllerAlgorithmFlaw,
        "Could the control algorithm of " + source_label + " compute '" + action->label +
            "' incorrectly?",
        action->source);
    add(CausalFactorCategory::ControlPathFailure,
        "Could '" + action->label + "' be lost, corrupted, or delayed on the way to " +
            target_label + "?",
        action->id);
    if (target && target->kind == NodeKind::Actuator)
        add(CausalFactorCategory::ActuatorFailure,
            "Could actuator " + target_label + " fail to execute '" + action->label + "'?",
            action->target);
    if (target && target->kind == NodeKind::ControlledProcess)
        add(CausalFactorCategory::ControlledProcessDisturbance,
            "Could a disturbance on " + target_label + " defeat '" + action->label + "'?",
            action->target);
    for (const FeedbackEdge* fb : returning) {
        add(CausalFactorCategory::FeedbackMissingOrDelayed,
            "Could feedback '" + fb->label + "' be missing, delayed, or inadequate?",
            fb->id);
    }
    for (const FeedbackEdge* fb : returning) {
        const Node* fb_source = cs.find_node(fb->source);
        if (fb_source && fb_source->kind == NodeKind::Sensor)
            add(CausalFactorCategory::SensorFailure,
                "Could sensor " + fb_source->label + " report wrong values on '" +
                    fb->label + "'?",
                fb->source);
    }
    {
        std::vector<std::pair<std::string, std::string>> external_edges;
        for (const auto& e : cs.action_edges)
            if (touches_external(e.source, e.target)) external_edges.push_back({e.id, e.label});
        for (const auto& e : cs.feedback_edges)
            if (touches_external(e.source, e.target)) external_edges.push_back({e.id, e.label});
        std::sort(external_edges.begin(), external_edges.end());
        for (const auto& [id, label] : external_edges)
            add(CausalFactorCategory::CommunicationLoss,
                "Could communication be lost on external link '" + label + "'?", id);
    }
    add(CausalFactorCategory::ExternalEnvironment,
        "Could environmental conditions make '" + action->label + "' unsafe?",
        action->id);
    add(CausalFactorCategory::HumanInteraction,
        "Could human interaction interfere with '" + action->label + "'?", action->id);

    if (returning.empty())
        checklist.notes.push_back("NO_FEEDBACK: no feedback edge returns to '" +
                                  action->source + "'; see validate_control_structure");

    std::stable_sort(checklist.items.begin(), checklist.items.end(),
                     [](const ChecklistItem& a, const ChecklistItem& b) {
                         return static_cast<int>(a.category) < static_cast<int>(b.category);
                     });
    return checklist;
}

}  // namespace hazlang
