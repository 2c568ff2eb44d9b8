#pragma once

#include <string>
#include <vector>

#include "hazlang/model.hpp"

namespace hazlang {

enum class LinkKind {
    HazardToAccident,
    ConstraintToHazard,
    EventToHazard,
    EventToSituation,
    GoalToEvent,
    UcaToHazard,
    UcaToAction,
    CscToUca,
    ScenarioToUca,
};

const char* to_keyword(LinkKind kind);

struct TraceLink {
    std::string from;
    std::string to;
    LinkKind kind = LinkKind::HazardToAccident;

    bool operator==(const TraceLink&) const = default;
};

struct Finding {
    std::string rule;    // HAZARD_NO_ACCIDENT, HAZARD_NO_EVENT, EVENT_NO_GOAL,
                         // CONFIRMED_UCA_NO_HAZARD, CONFIRMED_UCA_NO_CSC,
                         // CONFIRMED_UCA_NO_SCENARIO, GOAL_ASIL_MISMATCH
    std::string entity;
    std::string message;
};

struct TraceMatrix {
    std::vector<TraceLink> links;    // sorted by (kind, from, to)
    std::vector<Finding> findings;   // sorted by (entity, rule)
};

/// Links derived purely from declared references; orphan findings recomputed
/// from the link sets. Events whose hazard is unclassified are treated as
/// unformed: they neither cover their hazard nor demand a goal.
TraceMatrix build_trace_matrix(const SafetyModel& model);

}  // namespace hazlang
