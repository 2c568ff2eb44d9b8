#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hazlang/model.hpp"

namespace hazlang {

/// Fully formed hazardous event with its computed ASIL and formulated goal.
struct HazardousEvent {
    std::string id;
    std::string hazard;
    std::string situation;
    Severity severity = Severity::S0;
    Exposure exposure = Exposure::E0;
    Controllability controllability = Controllability::C0;
    Asil asil = Asil::QM;
    SafetyGoal safety_goal;
};

/// ISO 26262-3 risk graph. QM if any class is at its zero level; otherwise
/// the additive index S+E+C maps 7/8/9/10 to A/B/C/D and anything lower to QM.
Asil determine_asil(Severity s, Exposure e, Controllability c);

/// Configured default controllability: model pragma wins over the caller
/// override (CLI flag or environment), which wins over C3.
Controllability default_controllability(
    const SafetyModel& model,
    std::optional<Controllability> override_value = std::nullopt);

struct EventInput {
    std::string hazard;
    std::string situation;
    std::optional<Controllability> controllability;  // default applies when absent
    std::optional<std::string> id;                   // minted `HE.<n>` when absent
};

/// One hazardous event per pair, ASIL via determine_asil and goal via
/// formulate_safety_goal, ids `HE.<n>` in input order unless given.
/// Throws UNCLASSIFIED_HAZARD or DANGLING_REF.
std::vector<HazardousEvent> form_hazardous_events(const SafetyModel& model,
                                                  const std::vector<EventInput>& pairs);

/// The model's declared `event` lines as inputs to form_hazardous_events.
std::vector<EventInput> declared_event_inputs(const SafetyModel& model);

/// "The <item name> must not <hazard condition phrase> while <situation
/// phrase>." The hazard phrase is the hazard description with its leading
/// subject stripped when it repeats the item name (plus a leading auxiliary
/// verb), used verbatim otherwise. Goal id `SG.<n>` aligned with the event.
SafetyGoal formulate_safety_goal(const HazardousEvent& event, const SafetyModel& model);

}  // namespace hazlang
