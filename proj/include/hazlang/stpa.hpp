#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hazlang/diagnostics.hpp"
#include "hazlang/model.hpp"

namespace hazlang {

/// Edge ids (entering, leaving) that have exactly one endpoint inside the
/// member set. Both lists are sorted by id.
std::pair<std::vector<std::string>, std::vector<std::string>> boundary_edges(
    const ControlStructure& structure, const std::vector<std::string>& members);

/// Cuts the control structure along the given member set. The members must be
/// non-empty, resolve, and be weakly connected over action+feedback edges.
/// Throws Error with code EMPTY_MEMBERS, DANGLING_REF, or DISCONNECTED.
ItemDefinition derive_item_definition(const SafetyModel& model,
                                      const std::vector<std::string>& members,
                                      const std::string& name,
                                      const std::string& purpose = "");

/// Well-formedness warnings for the control structure diagram:
/// NO_FEEDBACK for every controller->target action pair with no feedback path
/// (direct or via sensor nodes) back to the controller, and NO_PROCESS_MODEL
/// for every controller that sources actions without declaring a process model.
std::vector<Diagnostic> validate_control_structure(const SafetyModel& model);

/// Full cross product of value assignments over the given variables,
/// lexicographically ordered by (variable name, declared value order).
/// Empty vars yields the single empty context. Throws UNKNOWN_VARIABLE.
std::vector<Context> enumerate_contexts(const ProcessModel& pm,
                                        const std::vector<std::string>& vars);

/// One candidate per (guide word x context), status candidate, hazards empty,
/// ids `<action>.<guideword>.<n>`. Throws UNKNOWN_ACTION, UNKNOWN_VARIABLE.
std::vector<UnsafeControlAction> generate_uca_candidates(
    const SafetyModel& model, const std::string& action_id,
    const std::vector<std::string>& vars);

/// Negates a confirmed UCA into its corresponding safety constraint via the
/// per-guide-word template; id `SC-<uca id>`. Throws NOT_CONFIRMED.
CorrespondingSafetyConstraint derive_corresponding_constraint(
    const UnsafeControlAction& uca, const SafetyModel& model);

struct ChecklistItem {
    CausalFactorCategory category;
    std::string prompt;
    std::string element;  // implicated node or edge id
};

struct CausalChecklist {
    std::vector<ChecklistItem> items;  // in category declaration order
    std::vector<std::string> notes;    // cross-references, e.g. NO_FEEDBACK
};

/// Walks the control loop of the UCA's action edge and emits one prompt per
/// applicable causal-factor category. Throws NOT_CONFIRMED.
CausalChecklist causal_factor_checklist(const UnsafeControlAction& uca,
                                        const SafetyModel& model);

/// "does not provide", "provides unsafely", ...
std::string guide_word_phrase(GuideWord word);

/// "while road_type=highway" / "while <free text>" / "in any context".
std::string context_clause(const Context& context);

}  // namespace hazlang
