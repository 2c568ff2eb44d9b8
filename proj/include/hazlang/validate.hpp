#pragma once

#include <vector>

#include "hazlang/diagnostics.hpp"
#include "hazlang/model.hpp"

namespace hazlang {

/// Referential-integrity check over a structurally parsed model. Violations
/// are returned as data, never thrown. Empty result means every type
/// invariant holds and every id lookup performed downstream will succeed.
///
/// Rule codes: DANGLING_REF, NO_CONTROLLER, EMPTY_LINKSET, RANGE,
/// PM_ON_NONCONTROLLER, MODAL_MISSING.
std::vector<Diagnostic> validate_model(const SafetyModel& model);

/// True when the text contains "shall" or "must" as a word.
bool contains_modal(const std::string& text);

}  // namespace hazlang
