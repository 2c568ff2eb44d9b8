#include "hazlang/trace.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "hazlang/hara.hpp"

namespace hazlang {

const char* to_keyword(LinkKind kind) {
    switch (kind) {
        case LinkKind::HazardToAccident: return "hazard->accident";
        case LinkKind::ConstraintToHazard: return "constraint->hazard";
        case LinkKind::EventToHazard: return "event->hazard";
        case LinkKind::EventToSituation: return "event->situation";
        case LinkKind::GoalToEvent: return "goal->event";
        case LinkKind::UcaToHazard: return "uca->hazard";
        case LinkKind::UcaToAction: return "uca->action";
        case LinkKind::CscToUca: return "csc->uca";
        case LinkKind::ScenarioToUca: return "scenario->uca";
    }
    return "?";
}

TraceMatrix build_trace_matrix(const SafetyModel& model) {
    TraceMatrix matrix;
    auto link = [&](const std::string& from, const std::string& to, LinkKind kind) {
        matrix.links.push_back({from, to, kind});
    };

    for (const auto& haz : model.hazards) {
        for (const auto& acc : haz.leads_to) {
            if (model.find_accident(acc)) link(haz.id, acc, LinkKind::HazardToAccident);
        }
    }
    for (const auto& sc : model.constraints) {
        for (const auto& haz : sc.mitigates) {
            if (model.find_hazard(haz)) link(sc.id, haz, LinkKind::ConstraintToHazard);
        }
    }
    for (const auto& ev : model.events) {
        if (model.find_hazard(ev.hazard)) link(ev.id, ev.hazard, LinkKind::EventToHazard);
        if (model.find_situation(ev.situation))
            link(ev.id, ev.situation, LinkKind::EventToSituation);
    }
    for (const auto& goal : model.goals) {
        if (model.find_event(goal.event)) link(goal.id, goal.event, LinkKind::GoalToEvent);
    }
    for (const auto& uca : model.ucas) {
        for (const auto& haz : uca.hazards) {
            if (model.find_hazard(haz)) link(uca.id, haz, LinkKind::UcaToHazard);
        }
        if (model.structure.find_action(uca.action))
            link(uca.id, uca.action, LinkKind::UcaToAction);
    }
    for (const auto& csc : model.cscs) {
        if (model.find_uca(csc.uca)) link(csc.id, csc.uca, LinkKind::CscToUca);
    }
    for (const auto& sc : model.scenarios) {
        if (model.find_uca(sc.uca)) link(sc.id, sc.uca, LinkKind::ScenarioToUca);
    }

    std::sort(matrix.links.begin(), matrix.links.end(),
              [](const TraceLink& a, const TraceLink& b) {
                  return std::make_tuple(static_cast<int>(a.kind), a.from, a.to) <
                         std::make_tuple(static_cast<int>(b.kind), b.from, b.to);
              });

    // An event is formed only when its hazard resolves and carries both
    // severity and exposure, and its situation resolves.
    auto formed = [&](const HazardousEventDecl& ev) {
        const Hazard* haz = model.find_hazard(ev.hazard);
        return haz && haz->severity && haz->exposure &&
               model.find_situation(ev.situation) != nullptr;
    };

    auto finding = [&](const std::string& rule, const std::string& entity,
                       const std::string& message) {
        matrix.findings.push_back({rule, entity, message});
    };

    std::set<std::string> hazards_with_events;
    std::set<std::string> events_with_goals;
    for (const auto& ev : model.events) {
        if (formed(ev)) hazards_with_events.insert(ev.hazard);
    }
    for (const auto& goal : model.goals) events_with_goals.insert(goal.event);

    for (const auto& haz : model.hazards) {
        if (haz.leads_to.empty())
            finding("HAZARD_NO_ACCIDENT", haz.id,
                    "hazard '" + haz.id + "' is not linked to any accident");
        if (!hazards_with_events.count(haz.id))
            finding("HAZARD_NO_EVENT", haz.id,
                    "hazard '" + haz.id + "' is not covered by any hazardous event");
    }

    Controllability fallback = default_controllability(model);
    for (const auto& ev : model.events) {
        if (!formed(ev)) continue;
        if (!events_with_goals.count(ev.id))
            finding("EVENT_NO_GOAL", ev.id,
                    "hazardous event '" + ev.id + "' has no safety goal");
    }

    for (const auto& goal : model.goals) {
        const HazardousEventDecl* ev = model.find_event(goal.event);
        if (!ev || !formed(*ev) || !goal.asil) continue;
        const Hazard* haz = model.find_hazard(ev->hazard);
        Asil computed = determine_asil(*haz->severity, *haz->exposure,
                                       ev->controllability.value_or(fallback));
        if (computed != *goal.asil)
            finding("GOAL_ASIL_MISMATCH", goal.id,
                    "goal '" + goal.id + "' declares ASIL " + to_keyword(*goal.asil) +
                        " but event '" + ev->id + "' rates " + to_keyword(computed));
    }

    std::set<std::string> ucas_with_csc;
    std::set<std::string> ucas_with_scenario;
    for (const auto& csc : model.cscs) ucas_with_csc.insert(csc.uca);
    for (const auto& sc : model.scenarios) ucas_with_scenario.insert(sc.uca);
    for (const auto& uca : model.ucas) {
        if (uca.status != UcaStatus::Confirmed) continue;
        if (uca.hazards.empty())
            finding("CONFIRMED_UCA_NO_HAZARD", uca.id,
                    "confirmed uca '" + uca.id + "' links no hazards");
        if (!ucas_with_csc.count(uca.id))
            finding("CONFIRMED_UCA_NO_CSC", uca.id,
                    "confirmed uca '" + uca.id +
                        "' has no corresponding safety constraint");
        if (!ucas_with_scenario.count(uca.id))
            finding("CONFIRMED_UCA_NO_SCENARIO", uca.id,
                    "confirmed uca '" + uca.id + "' has no causal scenario");
    }

    std::sort(matrix.findings.begin(), matrix.findings.end(),
              [](const Finding& a, const Finding& b) {
                  return std::tie(a.entity, a.rule) < std::tie(b.entity, b.rule);
              });
    return matrix;
}

}  // namespace hazlang
