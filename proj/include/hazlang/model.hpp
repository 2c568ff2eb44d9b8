#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hazlang {

/// Error with a stable machine-readable code (EMPTY_MEMBERS, NOT_CONFIRMED, ...).
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

enum class NodeKind { Controller, Actuator, ControlledProcess, Sensor, External };

enum class Severity { S0, S1, S2, S3 };
enum class Exposure { E0, E1, E2, E3, E4 };
enum class Controllability { C0, C1, C2, C3 };

/// QM < A < B < C < D.
enum class Asil { QM, A, B, C, D };

enum class GuideWord {
    NotProvided,
    ProvidedUnsafe,
    WrongTimingOrOrder,
    StoppedTooSoonOrAppliedTooLong,
};

enum class UcaStatus { Candidate, Confirmed, Rejected };

enum class CausalFactorCategory {
    ControllerProcessModelFlaw,
    ControllerAlgorithmFlaw,
    ControlPathFailure,
    ActuatorFailure,
    ControlledProcessDisturbance,
    FeedbackMissingOrDelayed,
    SensorFailure,
    CommunicationLoss,
    ExternalEnvironment,
    HumanInteraction,
};

const char* to_keyword(NodeKind kind);
const char* to_keyword(GuideWord word);
const char* to_keyword(UcaStatus status);
const char* to_keyword(CausalFactorCategory category);
const char* to_keyword(Asil level);
std::string to_keyword(Severity s);
std::string to_keyword(Exposure e);
std::string to_keyword(Controllability c);

std::optional<NodeKind> node_kind_from_keyword(const std::string& kw);
std::optional<GuideWord> guide_word_from_keyword(const std::string& kw);
std::optional<UcaStatus> uca_status_from_keyword(const std::string& kw);
std::optional<CausalFactorCategory> causal_factor_from_keyword(const std::string& kw);
std::optional<Asil> asil_from_keyword(const std::string& kw);
std::optional<Severity> severity_from_keyword(const std::string& kw);
std::optional<Exposure> exposure_from_keyword(const std::string& kw);
std::optional<Controllability> controllability_from_keyword(const std::string& kw);

inline int index_of(Severity s) { return static_cast<int>(s); }
inline int index_of(Exposure e) { return static_cast<int>(e); }
inline int index_of(Controllability c) { return static_cast<int>(c); }

struct Accident {
    std::string id;
    std::string description;
    std::optional<std::string> severity_note;
};

struct Hazard {
    std::string id;
    std::string description;
    std::vector<std::string> leads_to;  // accident ids
    std::optional<Severity> severity;
    std::optional<Exposure> exposure;
};

struct SystemSafetyConstraint {
    std::string id;
    std::string description;
    std::vector<std::string> mitigates;  // hazard ids
};

struct ProcessVariable {
    std::string name;
    std::vector<std::string> values;  // declared order is significant
};

struct ProcessModel {
    std::string owner;  // node id
    std::vector<ProcessVariable> variables;

    const ProcessVariable* find_variable(const std::string& name) const;
};

struct Node {
    std::string id;
    NodeKind kind = NodeKind::Controller;
    std::string label;
    std::optional<ProcessModel> process_model;  // controllers only
};

struct ControlActionEdge {
    std::string id;
    std::string source;  // node id, kind in {controller, actuator}
    std::string target;  // node id
    std::string label;
    std::vector<std::string> payload_fields;
};

struct FeedbackEdge {
    std::string id;
    std::string source;  // node id
    std::string target;  // node id, kind in {controller, actuator}
    std::string label;
};

struct ControlStructure {
    std::vector<Node> nodes;
    std::vector<ControlActionEdge> action_edges;
    std::vector<FeedbackEdge> feedback_edges;

    const Node* find_node(const std::string& id) const;
    const ControlActionEdge* find_action(const std::string& id) const;
    const FeedbackEdge* find_feedback(const std::string& id) const;
    bool empty() const {
        return nodes.empty() && action_edges.empty() && feedback_edges.empty();
    }
};

struct OperationalSituation {
    std::string id;
    std::string description;
    std::optional<std::string> operating_mode;
};

/// Declared hazardous event; ASIL and safety goal are derived (see hara.hpp).
struct HazardousEventDecl {
    std::string id;
    std::string hazard;     // hazard id, must carry severity+exposure
    std::string situation;  // situation id
    std::optional<Controllability> controllability;  // default applies when absent
};

struct SafetyGoal {
    std::string id;
    std::string text;  // contains "must not" or "must"
    std::string event;  // hazardous event id
    std::optional<Asil> asil;  // declared; must match the event's computed ASIL
};

/// Partial assignment of process-model variables, optionally replaced by an
/// authored prose phrase when rendered.
struct Context {
    std::map<std::string, std::string> assignments;  // variable -> value
    std::optional<std::string> free_text;

    bool operator==(const Context&) const = default;
};

struct UnsafeControlAction {
    std::string id;
    std::string action;  // control-action edge id
    GuideWord guide_word = GuideWord::NotProvided;
    Context context;
    std::string description;
    std::vector<std::string> hazards;  // non-empty when confirmed
    UcaStatus status = UcaStatus::Candidate;
};

struct CorrespondingSafetyConstraint {
    std::string id;
    std::string uca;  // confirmed UCA id
    std::string text;  // contains "shall" or "must"
};

struct CausalScenario {
    std::string id;
    std::string uca;  // confirmed UCA id
    CausalFactorCategory factor_category = CausalFactorCategory::ControllerProcessModelFlaw;
    std::string description;
    std::optional<std::string> derived_constraint;
};

struct ItemDefinition {
    std::string id;
    std::string name;
    std::vector<std::string> members;       // node ids
    std::vector<std::string> boundary_in;   // edge ids entering the member set
    std::vector<std::string> boundary_out;  // edge ids leaving the member set
    std::string purpose;
};

/// The whole parsed analysis. Declaration order is preserved; consumers that
/// need determinism sort by id. Immutable once validated.
struct SafetyModel {
    std::vector<Accident> accidents;
    std::vector<Hazard> hazards;
    std::vector<SystemSafetyConstraint> constraints;
    ControlStructure structure;
    std::vector<OperationalSituation> situations;
    std::vector<HazardousEventDecl> events;
    std::vector<SafetyGoal> goals;
    std::vector<UnsafeControlAction> ucas;
    std::vector<CorrespondingSafetyConstraint> cscs;
    std::vector<CausalScenario> scenarios;
    std::vector<ItemDefinition> items;
    std::optional<Controllability> default_controllability_pragma;

    const Accident* find_accident(const std::string& id) const;
    const Hazard* find_hazard(const std::string& id) const;
    const SystemSafetyConstraint* find_constraint(const std::string& id) const;
    const OperationalSituation* find_situation(const std::string& id) const;
    const HazardousEventDecl* find_event(const std::string& id) const;
    const SafetyGoal* find_goal(const std::string& id) const;
    const UnsafeControlAction* find_uca(const std::string& id) const;
    const CorrespondingSafetyConstraint* find_csc(const std::string& id) const;
    const CausalScenario* find_scenario(const std::string& id) const;
    const ItemDefinition* find_item(const std::string& id) const;

    std::size_t entity_count() const;
    bool empty() const;
};

/// True for `[A-Za-z][A-Za-z0-9_.-]*` (permits "AC.1", "UCA-1").
bool is_identifier(const std::string& token);

}  // namespace hazlang
