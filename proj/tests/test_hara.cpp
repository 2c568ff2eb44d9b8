#include <doctest.h>

#include <fstream>
#include <sstream>

#include "hazlang/hara.hpp"
#include "helpers.hpp"

using namespace hazlang;

namespace {

Severity severity_of(const std::string& s) {
    return static_cast<Severity>(s.at(1) - '0');
}
Exposure exposure_of(const std::string& s) {
    return static_cast<Exposure>(s.at(1) - '0');
}
Controllability controllability_of(const std::string& s) {
    return static_cast<Controllability>(s.at(1) - '0');
}

}  // namespace

TEST_CASE("risk graph anchor cells") {
    CHECK(determine_asil(Severity::S3, Exposure::E3, Controllability::C3) == Asil::C);
    CHECK(determine_asil(Severity::S3, Exposure::E4, Controllability::C3) == Asil::D);
    CHECK(determine_asil(Severity::S1, Exposure::E1, Controllability::C1) == Asil::QM);
    CHECK(determine_asil(Severity::S3, Exposure::E4, Controllability::C1) == Asil::B);
    CHECK(determine_asil(Severity::S1, Exposure::E4, Controllability::C3) == Asil::B);
}

TEST_CASE("risk graph matches the tabulated oracle") {
    std::ifstream table(std::string(FIXTURE_DIR) + "/asil_table.csv");
    REQUIRE(table.is_open());
    std::string line;
    std::getline(table, line);
    REQUIRE(line == "severity,exposure,controllability,asil");
    int rows = 0;
    while (std::getline(table, line)) {
        if (line.empty()) continue;
        std::stringstream fields(line);
        std::string s, e, c, asil;
        std::getline(fields, s, ',');
        std::getline(fields, e, ',');
        std::getline(fields, c, ',');
        std::getline(fields, asil, ',');
        Asil got = determine_asil(severity_of(s), exposure_of(e), controllability_of(c));
        CHECK_MESSAGE(std::string(to_keyword(got)) == asil, line);
        ++rows;
    }
    CHECK(rows == 80);
}

TEST_CASE("any zero class absorbs to QM") {
    for (int s = 0; s <= 3; ++s) {
        for (int e = 0; e <= 4; ++e) {
            for (int c = 0; c <= 3; ++c) {
                if (s != 0 && e != 0 && c != 0) continue;
                CHECK(determine_asil(static_cast<Severity>(s), static_cast<Exposure>(e),
                                     static_cast<Controllability>(c)) == Asil::QM);
            }
        }
    }
}

TEST_CASE("raising any single class never lowers the ASIL") {
    for (int s = 0; s <= 3; ++s) {
        for (int e = 0; e <= 4; ++e) {
            for (int c = 0; c <= 3; ++c) {
                Asil base = determine_asil(static_cast<Severity>(s),
                                           static_cast<Exposure>(e),
                                           static_cast<Controllability>(c));
                if (s < 3)
                    CHECK_FALSE(determine_asil(static_cast<Severity>(s + 1),
                                               static_cast<Exposure>(e),
                                               static_cast<Controllability>(c)) < base);
                if (e < 4)
                    CHECK_FALSE(determine_asil(static_cast<Severity>(s),
                                               static_cast<Exposure>(e + 1),
                                               static_cast<Controllability>(c)) < base);
                if (c < 3)
                    CHECK_FALSE(determine_asil(static_cast<Severity>(s),
                                               static_cast<Exposure>(e),
                                               static_cast<Controllability>(c + 1)) <
                                base);
            }
        }
    }
}

TEST_CASE("only the maximal corner reaches D") {
    for (int s = 1; s <= 3; ++s) {
        for (int e = 1; e <= 4; ++e) {
            for (int c = 1; c <= 3; ++c) {
                Asil asil = determine_asil(static_cast<Severity>(s),
                                           static_cast<Exposure>(e),
                                           static_cast<Controllability>(c));
                if (s == 3 && e == 4 && c == 3)
                    CHECK(asil == Asil::D);
                else
                    CHECK(asil < Asil::D);
            }
        }
    }
}

TEST_CASE("default controllability precedence") {
    SafetyModel model;
    CHECK(default_controllability(model) == Controllability::C3);
    CHECK(default_controllability(model, Controllability::C1) == Controllability::C1);
    model.default_controllability_pragma = Controllability::C2;
    CHECK(default_controllability(model) == Controllability::C2);
    CHECK(default_controllability(model, Controllability::C1) == Controllability::C2);
}

TEST_CASE("fixture hazardous event reproduces the worked example") {
    auto model = test_support::load_fixture();
    auto events = form_hazardous_events(model, declared_event_inputs(model));
    REQUIRE(events.size() == 1);
    const auto& event = events[0];
    CHECK(event.id == "HE.1");
    CHECK(event.hazard == "HA.1");
    CHECK(event.situation == "OS1");
    CHECK(event.severity == Severity::S3);
    CHECK(event.exposure == Exposure::E3);
    CHECK(event.controllability == Controllability::C3);
    CHECK(event.asil == Asil::C);
    CHECK(event.safety_goal.id == "SG.1");
    CHECK(event.safety_goal.text ==
          "The fully automated driving vehicle must not lose the steering control "
          "while driving on a highway.");
    CHECK(event.safety_goal.asil == Asil::C);
}

TEST_CASE("formed events agree with the declared goal") {
    auto model = test_support::load_fixture();
    auto events = form_hazardous_events(model, declared_event_inputs(model));
    REQUIRE(events.size() == 1);
    const auto* declared = model.find_goal("SG.1");
    REQUIRE(declared != nullptr);
    CHECK(declared->text == events[0].safety_goal.text);
    CHECK(declared->asil == events[0].safety_goal.asil);
}

TEST_CASE("goal text without a matching item keeps the hazard subject") {
    auto model = test_support::load_fixture();
    model.items.clear();
    auto events = form_hazardous_events(model, declared_event_inputs(model));
    REQUIRE(events.size() == 1);
    // subject no longer matches, so the phrase is used verbatim
    CHECK(events[0].safety_goal.text ==
          "The system must not The fully automated driving vehicle may lose the "
          "steering control while driving on a highway.");
}

TEST_CASE("auxiliary verbs other than may are stripped too") {
    auto model = test_support::load_fixture();
    model.hazards[0].description =
        "The fully automated driving vehicle could exceed the safe speed.";
    auto events = form_hazardous_events(model, declared_event_inputs(model));
    CHECK(events.at(0).safety_goal.text ==
          "The fully automated driving vehicle must not exceed the safe speed "
          "while driving on a highway.");
}

TEST_CASE("event ids are minted in input order when absent") {
    auto model = test_support::load_fixture();
    std::vector<EventInput> inputs = {
        {"HA.1", "OS1", Controllability::C1, std::nullopt},
        {"HA.1", "OS1", std::nullopt, std::string("HE.custom")},
        {"HA.1", "OS1", std::nullopt, std::nullopt},
    };
    auto events = form_hazardous_events(model, inputs);
    REQUIRE(events.size() == 3);
    CHECK(events[0].id == "HE.1");
    CHECK(events[1].id == "HE.custom");
    CHECK(events[2].id == "HE.3");
    CHECK(events[0].controllability == Controllability::C1);
    CHECK(events[0].asil == Asil::A);  // S3+E3+C1 = 7
    // pragma C3 fills the gap
    CHECK(events[2].controllability == Controllability::C3);
    CHECK(events[1].safety_goal.id == "SG.custom");
}

TEST_CASE("form_hazardous_events error codes") {
    auto model = test_support::load_fixture();
    try {
        form_hazardous_events(model, {{"HA.9", "OS1", std::nullopt, std::nullopt}});
        FAIL("expected DANGLING_REF");
    } catch (const Error& err) {
        CHECK(err.code() == "DANGLING_REF");
    }
    try {
        form_hazardous_events(model, {{"HA.1", "OS9", std::nullopt, std::nullopt}});
        FAIL("expected DANGLING_REF");
    } catch (const Error& err) {
        CHECK(err.code() == "DANGLING_REF");
    }
    model.hazards[0].severity.reset();
    try {
        form_hazardous_events(model, {{"HA.1", "OS1", std::nullopt, std::nullopt}});
        FAIL("expected UNCLASSIFIED_HAZARD");
    } catch (const Error& err) {
        CHECK(err.code() == "UNCLASSIFIED_HAZARD");
    }
}
