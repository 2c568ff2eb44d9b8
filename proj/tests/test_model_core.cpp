#include <doctest.h>

#include <algorithm>

#include "hazlang/model.hpp"
#include "hazlang/validate.hpp"
#include "helpers.hpp"

using namespace hazlang;

namespace {

bool has_rule(const std::vector<Diagnostic>& diags, const std::string& rule,
              const std::string& entity) {
    return std::any_of(diags.begin(), diags.end(), [&](const Diagnostic& d) {
        return d.rule == rule && d.entity == entity;
    });
}

}  // namespace

TEST_CASE("worked-example fixture validates with zero diagnostics") {
    auto model = test_support::load_fixture();
    CHECK(validate_model(model).empty());
}

TEST_CASE("hand-built minimal model validates cleanly") {
    SafetyModel model;
    model.accidents.push_back({"AC.1", "collision on a highway", std::nullopt});
    Hazard haz;
    haz.id = "HA.1";
    haz.description = "loss of steering";
    haz.leads_to = {"AC.1"};
    haz.severity = Severity::S3;
    haz.exposure = Exposure::E3;
    model.hazards.push_back(haz);
    model.constraints.push_back(
        {"SC.1", "the vehicle must keep steering control", {"HA.1"}});
    model.structure.nodes.push_back({"C1", NodeKind::Controller, "controller", {}});
    model.structure.nodes.push_back({"P1", NodeKind::ControlledProcess, "plant", {}});
    model.structure.action_edges.push_back({"a1", "C1", "P1", "steer", {}});
    CHECK(validate_model(model).empty());
}

TEST_CASE("dangling leads_to reference is reported") {
    SafetyModel model;
    Hazard haz;
    haz.id = "H9";
    haz.description = "x";
    haz.leads_to = {"AC99"};
    model.hazards.push_back(haz);
    auto diags = validate_model(model);
    REQUIRE(diags.size() == 1);
    CHECK(diags[0].rule == "DANGLING_REF");
    CHECK(diags[0].entity == "H9");
}

TEST_CASE("structure without controller is reported") {
    SafetyModel model;
    model.structure.nodes.push_back({"S1", NodeKind::Sensor, "sensor", {}});
    auto diags = validate_model(model);
    REQUIRE(diags.size() == 1);
    CHECK(diags[0].rule == "NO_CONTROLLER");
}

TEST_CASE("empty model validates cleanly") {
    CHECK(validate_model(SafetyModel{}).empty());
}

TEST_CASE("rule codes for constructed violations") {
    SafetyModel model;
    model.structure.nodes.push_back({"C1", NodeKind::Controller, "c", {}});

    SUBCASE("empty link sets") {
        Hazard haz;
        haz.id = "HA.1";
        haz.description = "x";
        model.hazards.push_back(haz);
        CHECK(has_rule(validate_model(model), "EMPTY_LINKSET", "HA.1"));
    }
    SUBCASE("modal keyword missing") {
        Hazard haz;
        haz.id = "HA.1";
        haz.description = "x";
        haz.leads_to = {"AC.1"};
        model.accidents.push_back({"AC.1", "y", std::nullopt});
        model.hazards.push_back(haz);
        model.constraints.push_back({"SC.1", "the vehicle keeps control", {"HA.1"}});
        CHECK(has_rule(validate_model(model), "MODAL_MISSING", "SC.1"));
    }
    SUBCASE("process model on non-controller") {
        Node sensor{"S1", NodeKind::Sensor, "s", {}};
        sensor.process_model = ProcessModel{"S1", {{"v", {"a", "b"}}}};
        model.structure.nodes.push_back(sensor);
        CHECK(has_rule(validate_model(model), "PM_ON_NONCONTROLLER", "S1"));
    }
    SUBCASE("process variable with one value") {
        Node c2{"C2", NodeKind::Controller, "c2", {}};
        c2.process_model = ProcessModel{"C2", {{"v", {"only"}}}};
        model.structure.nodes.push_back(c2);
        CHECK(has_rule(validate_model(model), "RANGE", "C2"));
    }
    SUBCASE("action sourced at a sensor") {
        model.structure.nodes.push_back({"S1", NodeKind::Sensor, "s", {}});
        model.structure.action_edges.push_back({"a1", "S1", "C1", "cmd", {}});
        CHECK(has_rule(validate_model(model), "RANGE", "a1"));
    }
    SUBCASE("confirmed uca without hazards") {
        model.structure.nodes.push_back({"P1", NodeKind::ControlledProcess, "p", {}});
        model.structure.action_edges.push_back({"a1", "C1", "P1", "cmd", {}});
        UnsafeControlAction uca;
        uca.id = "UCA-1";
        uca.action = "a1";
        uca.description = "x";
        uca.status = UcaStatus::Confirmed;
        model.ucas.push_back(uca);
        CHECK(has_rule(validate_model(model), "EMPTY_LINKSET", "UCA-1"));
    }
    SUBCASE("context assigns undeclared value") {
        Node c2{"C2", NodeKind::Controller, "c2", {}};
        c2.process_model = ProcessModel{"C2", {{"mode", {"on", "off"}}}};
        model.structure.nodes.push_back(c2);
        model.structure.nodes.push_back({"P1", NodeKind::ControlledProcess, "p", {}});
        model.structure.action_edges.push_back({"a1", "C2", "P1", "cmd", {}});
        UnsafeControlAction uca;
        uca.id = "UCA-1";
        uca.action = "a1";
        uca.context.assignments["mode"] = "sideways";
        uca.description = "x";
        model.ucas.push_back(uca);
        CHECK(has_rule(validate_model(model), "DANGLING_REF", "UCA-1"));
    }
}

TEST_CASE("validate_model is idempotent and order-independent") {
    SafetyModel a;
    a.hazards.push_back({"H1", "x", {"AC9"}, std::nullopt, std::nullopt});
    a.hazards.push_back({"H2", "y", {}, std::nullopt, std::nullopt});

    SafetyModel b;
    b.hazards.push_back({"H2", "y", {}, std::nullopt, std::nullopt});
    b.hazards.push_back({"H1", "x", {"AC9"}, std::nullopt, std::nullopt});

    auto da1 = validate_model(a);
    auto da2 = validate_model(a);
    auto db = validate_model(b);
    auto codes = [](const std::vector<Diagnostic>& diags) {
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& d : diags) out.emplace_back(d.entity, d.rule);
        return out;
    };
    CHECK(codes(da1) == codes(da2));
    CHECK(codes(da1) == codes(db));
}

TEST_CASE("ASIL rating is a total order") {
    const Asil levels[] = {Asil::QM, Asil::A, Asil::B, Asil::C, Asil::D};
    for (Asil x : levels) {
        for (Asil y : levels) {
            // antisymmetry over the underlying order
            if (x < y) CHECK_FALSE(y < x);
            if (!(x < y) && !(y < x)) CHECK(x == y);
            for (Asil z : levels) {
                if (x < y && y < z) CHECK(x < z);
            }
        }
    }
    CHECK(Asil::QM < Asil::A);
    CHECK(Asil::C < Asil::D);
}

TEST_CASE("identifier syntax") {
    CHECK(is_identifier("AC.1"));
    CHECK(is_identifier("UCA-1"));
    CHECK(is_identifier("road_type"));
    CHECK_FALSE(is_identifier("1AC"));
    CHECK_FALSE(is_identifier(""));
    CHECK_FALSE(is_identifier("a b"));
}
