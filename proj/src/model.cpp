#include "hazlang/model.hpp"

#include <algorithm>
#include <cctype>

namespace hazlang {

const char* to_keyword(NodeKind kind) {
    switch (kind) {
        case NodeKind::Controller: return "controller";
        case NodeKind::Actuator: return "actuator";
        case NodeKind::ControlledProcess: return "process";
        case NodeKind::Sensor: return "sensor";
        case NodeKind::External: return "external";
    }
    return "?";
}

const char* to_keyword(GuideWord word) {
    switch (word) {
        case GuideWord::NotProvided: return "not_provided";
        case GuideWord::ProvidedUnsafe: return "provided_unsafe";
        case GuideWord::WrongTimingOrOrder: return "wrong_timing_or_order";
        case GuideWord::StoppedTooSoonOrAppliedTooLong:
            return "stopped_too_soon_or_applied_too_long";
    }
    return "?";
}

const char* to_keyword(UcaStatus status) {
    switch (status) {
        case UcaStatus::Candidate: return "candidate";
        case UcaStatus::Confirmed: return "confirmed";
        case UcaStatus::Rejected: return "rejected";
    }
    return "?";
}

const char* to_keyword(CausalFactorCategory category) {
    switch (category) {
        case CausalFactorCategory::ControllerProcessModelFlaw:
            return "controller_process_model_flaw";
        case CausalFactorCategory::ControllerAlgorithmFlaw:
            return "controller_algorithm_flaw";
        case CausalFactorCategory::ControlPathFailure: return "control_path_failure";
        case CausalFactorCategory::ActuatorFailure: return "actuator_failure";
        case CausalFactorCategory::ControlledProcessDisturbance:
            return "controlled_process_disturbance";
        case CausalFactorCategory::FeedbackMissingOrDelayed:
            return "feedback_missing_or_delayed";
        case CausalFactorCategory::SensorFailure: return "sensor_failure";
        case CausalFactorCategory::CommunicationLoss: return "communication_loss";
        case CausalFactorCategory::ExternalEnvironment: return "external_environment";
        case CausalFactorCategory::HumanInteraction: return "human_interaction";
    }
    return "?";
}

const char* to_keyword(Asil level) {
    switch (level) {
        case Asil::QM: return "QM";
        case Asil::A: return "A";
        case Asil::B: return "B";
        case Asil::C: return "C";
        case Asil::D: return "D";
    }
    return "?";
}

std::string to_keyword(Severity s) { return "S" + std::to_string(index_of(s)); }
std::string to_keyword(Exposure e) { return "E" + std::to_string(index_of(e)); }
std::string to_keyword(Controllability c) { return "C" + std::to_string(index_of(c)); }

std::optional<NodeKind> node_kind_from_keyword(const std::string& kw) {
    if (kw == "controller") return NodeKind::Controller;
    if (kw == "actuator") return NodeKind::Actuator;
    if (kw == "process") return NodeKind::ControlledProcess;
    if (kw == "sensor") return NodeKind::Sensor;
    if (kw == "external") return NodeKind::External;
    return std::nullopt;
}

std::optional<GuideWord> guide_word_from_keyword(const std::string& kw) {
    if (kw == "not_provided") return GuideWord::NotProvided;
    if (kw == "provided_unsafe") return GuideWord::ProvidedUnsafe;
    if (kw == "wrong_timing_or_order") return GuideWord::WrongTimingOrOrder;
    if (kw == "stopped_too_soon_or_applied_too_long")
        return GuideWord::StoppedTooSoonOrAppliedTooLong;
    return std::nullopt;
}

std::optional<UcaStatus> uca_status_from_keyword(const std::string& kw) {
    if (kw == "candidate") return UcaStatus::Candidate;
    if (kw == "confirmed") return UcaStatus::Confirmed;
    if (kw == "rejected") return UcaStatus::Rejected;
    return std::nullopt;
}

std::optional<CausalFactorCategory> causal_factor_from_keyword(const std::string& kw) {
    for (int i = 0; i <= static_cast<int>(CausalFactorCategory::HumanInteraction); ++i) {
        auto cat = static_cast<CausalFactorCategory>(i);
        if (kw == to_keyword(cat)) return cat;
    }
    return std::nullopt;
}

std::optional<Asil> asil_from_keyword(const std::string& kw) {
    if (kw == "QM") return Asil::QM;
    if (kw == "A") return Asil::A;
    if (kw == "B") return Asil::B;
    if (kw == "C") return Asil::C;
    if (kw == "D") return Asil::D;
    return std::nullopt;
}

namespace {

std::optional<int> class_index(const std::string& kw, char prefix, int max) {
    if (kw.size() != 2 || kw[0] != prefix) return std::nullopt;
    if (kw[1] < '0' || kw[1] > '0' + max) return std::nullopt;
    return kw[1] - '0';
}

template <typename T>
const T* find_by_id(const std::vector<T>& items, const std::string& id) {
    for (const auto& item : items) {
        if (item.id == id) return &item;
    }
    return nullptr;
}

}  // namespace

std::optional<Severity> severity_from_keyword(const std::string& kw) {
    auto i = class_index(kw, 'S', 3);
    if (!i) return std::nullopt;
    return static_cast<Severity>(*i);
}

std::optional<Exposure> exposure_from_keyword(const std::string& kw) {
    auto i = class_index(kw, 'E', 4);
    if (!i) return std::nullopt;
    return static_cast<Exposure>(*i);
}

std::optional<Controllability> controllability_from_keyword(const std::string& kw) {
    auto i = class_index(kw, 'C', 3);
    if (!i) return std::nullopt;
    return static_cast<Controllability>(*i);
}

const ProcessVariable* ProcessModel::find_variable(const std::string& name) const {
    for (const auto& v : variables) {
        if (v.name == name) return &v;
    }
    return nullptr;
}

const Node* ControlStructure::find_node(const std::string& id) const {
    return find_by_id(nodes, id);
}

const ControlActionEdge* ControlStructure::find_action(const std::string& id) const {
    return find_by_id(action_edges, id);
}

const FeedbackEdge* ControlStructure::find_feedback(const std::string& id) const {
    return find_by_id(feedback_edges, id);
}

const Accident* SafetyModel::find_accident(const std::string& id) const {
    return find_by_id(accidents, id);
}
const Hazard* SafetyModel::find_hazard(const std::string& id) const {
    return find_by_id(hazards, id);
}
const SystemSafetyConstraint* SafetyModel::find_constraint(const std::string& id) const {
    return find_by_id(constraints, id);
}
const OperationalSituation* SafetyModel::find_situation(const std::string& id) const {
    return find_by_id(situations, id);
}
const HazardousEventDecl* SafetyModel::find_event(const std::string& id) const {
    return find_by_id(events, id);
}
const SafetyGoal* SafetyModel::find_goal(const std::string& id) const {
    return find_by_id(goals, id);
}
const UnsafeControlAction* SafetyModel::find_uca(const std::string& id) const {
    return find_by_id(ucas, id);
}
const CorrespondingSafetyConstraint* SafetyModel::find_csc(const std::string& id) const {
    return find_by_id(cscs, id);
}
const CausalScenario* SafetyModel::find_scenario(const std::string& id) const {
    return find_by_id(scenarios, id);
}
const ItemDefinition* SafetyModel::find_item(const std::string& id) const {
    return find_by_id(items, id);
}

std::size_t SafetyModel::entity_count() const {
    std::size_t n = accidents.size() + hazards.size() + constraints.size() +
                    structure.nodes.size() + structure.action_edges.size() +
                    structure.feedback_edges.size() + situations.size() + events.size() +
                    goals.size() + ucas.size() + cscs.size() + scenarios.size() +
                    items.size();
    for (const auto& node : structure.nodes) {
        if (node.process_model) n += 1;
    }
    return n;
}

bool SafetyModel::empty() const { return entity_count() == 0; }

bool is_identifier(const std::string& token) {
    if (token.empty()) return false;
    unsigned char first = static_cast<unsigned char>(token[0]);
    if (!std::isalpha(first)) return false;
    return std::all_of(token.begin() + 1, token.end(), [](char c) {
        unsigned char u = static_cast<unsigned char>(c);
        return std::isalnum(u) || c == '_' || c == '.' || c == '-';
    });
}

}  // namespace hazlang
