#include "hazlang/hara.hpp"

#include <algorithm>
#include <cctype>

namespace hazlang {

Asil determine_asil(Severity s, Exposure e, Controllability c) {
    if (s == Severity::S0 || e == Exposure::E0 || c == Controllability::C0)
        return Asil::QM;
    switch (index_of(s) + index_of(e) + index_of(c)) {
        case 7: return Asil::A;
        case 8: return Asil::B;
        case 9: return Asil::C;
        case 10: return Asil::D;
        default: return Asil::QM;
    }
}

Controllability default_controllability(const SafetyModel& model,
                                        std::optional<Controllability> override_value) {
    if (model.default_controllability_pragma) return *model.default_controllability_pragma;
    if (override_value) return *override_value;
    return Controllability::C3;
}

namespace {

std::string lowered(const std::string& text) {
    std::string out = text;
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return out;
}

bool strip_prefix_ci(std::string& text, const std::string& prefix) {
    if (prefix.empty() || text.size() < prefix.size()) return false;
    if (lowered(text.substr(0, prefix.size())) != lowered(prefix)) return false;
    // Only strip at a word boundary.
    if (text.size() > prefix.size() &&
        std::isalnum(static_cast<unsigned char>(text[prefix.size()])))
        return false;
    text.erase(0, prefix.size());
    while (!text.empty() && text.front() == ' ') text.erase(0, 1);
    return true;
}

std::string item_name_of(const SafetyModel& model) {
    if (model.items.empty()) return "system";
    const ItemDefinition* first = &model.items.front();
    for (const auto& item : model.items) {
        if (item.id < first->id) first = &item;
    }
    return first->name;
}

std::string hazard_condition_phrase(const Hazard& hazard, const std::string& item_name) {
    std::string phrase = hazard.description;
    while (!phrase.empty() && phrase.back() == '.') phrase.pop_back();
    std::string subject = phrase;
    bool stripped = strip_prefix_ci(subject, "the " + item_name) ||
                    strip_prefix_ci(subject, item_name);
    if (!stripped) return phrase;
    for (const char* aux : {"may", "might", "can", "could", "will", "shall"}) {
        if (strip_prefix_ci(subject, aux)) break;
    }
    return subject.empty() ? phrase : subject;
}

std::string goal_id_for(const std::string& event_id) {
    if (event_id.rfind("HE.", 0) == 0) return "SG." + event_id.substr(3);
    return "SG." + event_id;
}

}  // namespace

SafetyGoal formulate_safety_goal(const HazardousEvent& event, const SafetyModel& model) {
    const Hazard* hazard = model.find_hazard(event.hazard);
    const OperationalSituation* situation = model.find_situation(event.situation);
    if (!hazard)
        throw Error("DANGLING_REF", "event '" + event.id + "' references unknown hazard '" +
                                        event.hazard + "'");
    if (!situation)
        throw Error("DANGLING_REF", "event '" + event.id +
                                        "' references unknown situation '" +
                                        event.situation + "'");
    std::string item_name = item_name_of(model);
    SafetyGoal goal;
    goal.id = goal_id_for(event.id);
    goal.event = event.id;
    goal.asil = event.asil;
    goal.text = "The " + item_name + " must not " +
                hazard_condition_phrase(*hazard, item_name) + " while " +
                situation->description + ".";
    return goal;
}

std::vector<HazardousEvent> form_hazardous_events(const SafetyModel& model,
                                                  const std::vector<EventInput>& pairs) {
    Controllability fallback = default_controllability(model);
    std::vector<HazardousEvent> events;
    events.reserve(pairs.size());
    int n = 0;
    for (const auto& pair : pairs) {
        ++n;
        const Hazard* hazard = model.find_hazard(pair.hazard);
        if (!hazard) throw Error("DANGLING_REF", "unknown hazard '" + pair.hazard + "'");
        if (!model.find_situation(pair.situation))
            throw Error("DANGLING_REF", "unknown situation '" + pair.situation + "'");
        if (!hazard->severity || !hazard->exposure)
            throw Error("UNCLASSIFIED_HAZARD",
                        "hazard '" + pair.hazard +
                            "' lacks a severity/exposure classification");

        HazardousEvent event;
        event.id = pair.id ? *pair.id : "HE." + std::to_string(n);
        event.hazard = pair.hazard;
        event.situation = pair.situation;
        event.severity = *hazard->severity;
        event.exposure = *hazard->exposure;
        event.controllability = pair.controllability.value_or(fallback);
        event.asil = determine_asil(event.severity, event.exposure, event.controllability);
        event.safety_goal = formulate_safety_goal(event, model);
        events.push_back(std::move(event));
    }
    return events;
}

std::vector<EventInput> declared_event_inputs(const SafetyModel& model) {
    std::vector<EventInput> inputs;
    inputs.reserve(model.events.size());
    for (const auto& decl : model.events)
        inputs.push_back({decl.hazard, decl.situation, decl.controllability, decl.id});
    return inputs;
}

}  // namespace hazlang
