#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

#include "hazlang/parser.hpp"
#include "hazlang/stpa.hpp"
#include "hazlang/validate.hpp"

namespace test_support {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline std::string fixture_path() {
    return std::string(FIXTURE_DIR) + "/fully_automated_driving.stpa";
}

inline hazlang::SafetyModel load_fixture() {
    auto result = hazlang::parse_file(fixture_path());
    if (!result.ok()) throw std::runtime_error("fixture does not parse");
    if (hazlang::has_errors(hazlang::validate_model(result.model)))
        throw std::runtime_error("fixture does not validate");
    return std::move(result.model);
}

/// Structurally valid random models for round-trip and determinism checks.
inline hazlang::SafetyModel random_model(std::mt19937& rng) {
    using namespace hazlang;
    auto pick = [&](int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    };
    auto text = [&]() {
        static const char* words[] = {"vehicle", "loses",  "control", "while",
                                      "driving", "fast",   "on",      "road",
                                      "must",    "detect", "object"};
        std::string out;
        int n = pick(2, 6);
        for (int i = 0; i < n; ++i) {
            if (i) out += " ";
            out += words[pick(0, 10)];
        }
        switch (pick(0, 9)) {
            case 0: out += " \"quoted\""; break;
            case 1: out += " back\\slash"; break;
            case 2: out += "\nsecond line"; break;
            default: break;
        }
        return out;
    };

    SafetyModel model;
    int accidents = pick(1, 4);
    for (int i = 0; i < accidents; ++i) {
        Accident acc;
        acc.id = "AC." + std::to_string(i + 1);
        acc.description = text();
        if (pick(0, 3) == 0) acc.severity_note = text();
        model.accidents.push_back(acc);
    }
    int hazards = pick(1, 4);
    for (int i = 0; i < hazards; ++i) {
        Hazard haz;
        haz.id = "HA." + std::to_string(i + 1);
        haz.description = text();
        haz.leads_to.push_back("AC." + std::to_string(pick(1, accidents)));
        if (pick(0, 1)) {
            haz.severity = static_cast<Severity>(pick(0, 3));
            haz.exposure = static_cast<Exposure>(pick(0, 4));
        }
        model.hazards.push_back(haz);
    }
    if (pick(0, 1)) {
        SystemSafetyConstraint sc;
        sc.id = "SSC.1";
        sc.description = "the system must " + text();
        sc.mitigates.push_back("HA." + std::to_string(pick(1, hazards)));
        model.constraints.push_back(sc);
    }

    Node controller;
    controller.id = "CTRL";
    controller.kind = NodeKind::Controller;
    controller.label = text();
    ProcessModel pm;
    pm.owner = "CTRL";
    int vars = pick(0, 3);
    for (int v = 0; v < vars; ++v) {
        ProcessVariable var;
        var.name = "var" + std::to_string(v + 1);
        int values = pick(2, 4);
        for (int k = 0; k < values; ++k)
            var.values.push_back("value" + std::to_string(k + 1));
        pm.variables.push_back(var);
    }
    if (!pm.variables.empty()) controller.process_model = pm;
    model.structure.nodes.push_back(controller);

    Node target;
    target.id = "PROC";
    target.kind = pick(0, 1) ? NodeKind::ControlledProcess : NodeKind::Actuator;
    target.label = text();
    model.structure.nodes.push_back(target);
    if (pick(0, 1)) {
        Node sensor;
        sensor.id = "SENS";
        sensor.kind = NodeKind::Sensor;
        sensor.label = text();
        model.structure.nodes.push_back(sensor);
        model.structure.feedback_edges.push_back({"fb1", "SENS", "CTRL", text()});
    }
    ControlActionEdge action;
    action.id = "act1";
    action.source = "CTRL";
    action.target = "PROC";
    action.label = "command";
    if (pick(0, 1)) action.payload_fields = {text(), text()};
    model.structure.action_edges.push_back(action);

    int situations = pick(0, 2);
    for (int i = 0; i < situations; ++i) {
        OperationalSituation os;
        os.id = "OS" + std::to_string(i + 1);
        os.description = text();
        if (pick(0, 1)) os.operating_mode = text();
        model.situations.push_back(os);
    }
    for (int i = 0; i < situations; ++i) {
        const auto& haz = model.hazards[pick(0, hazards - 1)];
        if (!haz.severity) continue;
        HazardousEventDecl ev;
        ev.id = "HE." + std::to_string(i + 1);
        ev.hazard = haz.id;
        ev.situation = "OS" + std::to_string(i + 1);
        if (pick(0, 1)) ev.controllability = static_cast<Controllability>(pick(0, 3));
        model.events.push_back(ev);
        if (pick(0, 1)) {
            SafetyGoal goal;
            goal.id = "SG." + std::to_string(i + 1);
            goal.event = ev.id;
            goal.text = "the system must not " + text();
            model.goals.push_back(goal);
        }
    }

    int ucas = pick(0, 3);
    for (int i = 0; i < ucas; ++i) {
        UnsafeControlAction uca;
        uca.id = "UCA-" + std::to_string(i + 1);
        uca.action = "act1";
        uca.guide_word = static_cast<GuideWord>(pick(0, 3));
        if (controller.process_model && pick(0, 1)) {
            const auto& var = controller.process_model->variables.front();
            uca.context.assignments[var.name] =
                var.values[pick(0, static_cast<int>(var.values.size()) - 1)];
        }
        if (pick(0, 2) == 0) uca.context.free_text = text();
        uca.description = text();
        uca.status = static_cast<UcaStatus>(pick(0, 2));
        if (uca.status == UcaStatus::Confirmed)
            uca.hazards.push_back("HA." + std::to_string(pick(1, hazards)));
        model.ucas.push_back(uca);
        if (uca.status == UcaStatus::Confirmed) {
            model.cscs.push_back({"SC-" + uca.id, uca.id, "x must " + text()});
            if (pick(0, 1))
                model.scenarios.push_back({"CS." + std::to_string(i + 1), uca.id,
                                           static_cast<CausalFactorCategory>(pick(0, 9)),
                                           text(), std::nullopt});
        }
    }

    if (pick(0, 1)) {
        ItemDefinition item;
        item.id = "ITEM.1";
        item.name = text();
        item.members = {"CTRL"};
        auto [in, out] = boundary_edges(model.structure, item.members);
        item.boundary_in = in;
        item.boundary_out = out;
        item.purpose = text();
        model.items.push_back(item);
    }
    return model;
}

}  // namespace test_support
