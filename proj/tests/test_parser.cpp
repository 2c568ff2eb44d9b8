#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "hazlang/parser.hpp"
#include "helpers.hpp"

using namespace hazlang;

TEST_CASE("single accident declaration") {
    auto result = parse(
        "accident AC.1 \"The fully automated vehicle collided into an object moving "
        "in front on a highway.\"\n",
        "t.stpa");
    REQUIRE(result.ok());
    REQUIRE(result.model.accidents.size() == 1);
    CHECK(result.model.accidents[0].id == "AC.1");
    CHECK(result.model.accidents[0].description ==
          "The fully automated vehicle collided into an object moving in front on a "
          "highway.");
}

TEST_CASE("empty input yields empty model and no diagnostics") {
    auto result = parse("", "t.stpa");
    CHECK(result.ok());
    CHECK(result.diagnostics.empty());
    CHECK(result.model.empty());
}

TEST_CASE("unclosed bracket recovers and reports a span on line 1") {
    auto result = parse("hazard H1 \"x\" leads_to [\naccident AC.1 \"y\"\n", "t.stpa");
    CHECK_FALSE(result.ok());
    auto syntax = std::count_if(result.diagnostics.begin(), result.diagnostics.end(),
                                [](const Diagnostic& d) { return d.rule == "SYNTAX"; });
    CHECK(syntax >= 1);
    bool span_line = std::any_of(
        result.diagnostics.begin(), result.diagnostics.end(), [](const Diagnostic& d) {
            return d.rule == "SYNTAX" && d.span && d.span->line <= 2;
        });
    CHECK(span_line);
    // parser kept scanning
    CHECK(result.model.accidents.size() == 1);
}

TEST_CASE("k independent errors yield at least k diagnostics") {
    std::string source =
        "accident \"missing id\"\n"
        "hazard H1 \"x\" leads_to [\n"
        "accident AC.1 \"ok\"\n"
        "situation OS1 12\n"
        "accident AC.2 \"ok\"\n"
        "classify H1 severity S9 exposure E1\n";
    auto result = parse(source, "t.stpa");
    int errors = 0;
    for (const auto& d : result.diagnostics)
        if (d.severity == DiagnosticSeverity::Error) ++errors;
    CHECK(errors >= 4);
    CHECK(result.model.accidents.size() == 2);
}

TEST_CASE("duplicate ids are errors, not last-wins") {
    auto result = parse("accident AC.1 \"a\"\naccident AC.1 \"b\"\n", "t.stpa");
    CHECK_FALSE(result.ok());
    REQUIRE(result.model.accidents.size() == 1);
    CHECK(result.model.accidents[0].description == "a");
    auto it = std::find_if(result.diagnostics.begin(), result.diagnostics.end(),
                           [](const Diagnostic& d) { return d.rule == "DUPLICATE_ID"; });
    REQUIRE(it != result.diagnostics.end());
    REQUIRE(it->span.has_value());
    CHECK(it->span->line == 2);
    CHECK(it->message.find("t.stpa:1:") != std::string::npos);  // both spans surfaced
}

TEST_CASE("invalid UTF-8 is an ENCODING error") {
    std::string source = "accident AC.1 \"x";
    source.push_back(static_cast<char>(0xFF));
    source += "\"\n";
    auto result = parse(source, "t.stpa");
    REQUIRE(result.diagnostics.size() == 1);
    CHECK(result.diagnostics[0].rule == "ENCODING");
}

TEST_CASE("syntax and duplicate spans address real input positions") {
    std::string source =
        "accident AC.1 \"a\"\n"
        "accident AC.1 \"b\"\n"
        "hazard H1 x leads_to [AC.1]\n";
    auto result = parse(source, "t.stpa");
    std::vector<std::string> lines;
    std::stringstream stream(source);
    for (std::string line; std::getline(stream, line);) lines.push_back(line);
    for (const auto& d : result.diagnostics) {
        if (d.rule != "SYNTAX" && d.rule != "DUPLICATE_ID") continue;
        REQUIRE(d.span.has_value());
        REQUIRE(d.span->line >= 1);
        REQUIRE(d.span->line <= static_cast<int>(lines.size()));
        CHECK(d.span->column >= 1);
        CHECK(d.span->column <=
              static_cast<int>(lines[d.span->line - 1].size()) + 1);
    }
}

TEST_CASE("forward references parse (two-pass resolution)") {
    auto result = parse(
        "hazard H1 \"x\" leads_to [AC.1]\n"
        "classify H1 severity S2 exposure E2\n"
        "accident AC.1 \"y\"\n",
        "t.stpa");
    REQUIRE(result.ok());
    REQUIRE(result.model.hazards.size() == 1);
    CHECK(result.model.hazards[0].severity == Severity::S2);
}

TEST_CASE("string escapes round-trip") {
    SafetyModel model;
    model.accidents.push_back(
        {"AC.1", "said \"stop\" and \\ wrote\na newline", std::nullopt});
    std::string text = serialize(model);
    auto result = parse(text, "t.stpa");
    REQUIRE(result.ok());
    REQUIRE(result.model.accidents.size() == 1);
    CHECK(result.model.accidents[0].description == model.accidents[0].description);
    CHECK(serialize(result.model) == text);
}

TEST_CASE("empty model serializes to a header comment only") {
    std::string text = serialize(SafetyModel{});
    CHECK(text == "# hazlang safety model (canonical form)\n");
}

TEST_CASE("fixture round-trips byte-for-byte on second serialization") {
    auto fixture = parse_file(test_support::fixture_path());
    REQUIRE(fixture.ok());
    std::string first = serialize(fixture.model);
    auto reparsed = parse(first, "canon.stpa");
    REQUIRE(reparsed.ok());
    CHECK(serialize(reparsed.model) == first);
    CHECK(reparsed.model.entity_count() == fixture.model.entity_count());
    CHECK(reparsed.model.ucas.size() == fixture.model.ucas.size());
}

TEST_CASE("randomized models round-trip") {
    std::mt19937 rng(20260824);
    for (int i = 0; i < 50; ++i) {
        auto model = test_support::random_model(rng);
        std::string first = serialize(model);
        auto reparsed = parse(first, "gen.stpa");
        REQUIRE_MESSAGE(reparsed.ok(), "case " << i << ":\n" << first);
        std::string second = serialize(reparsed.model);
        REQUIRE_MESSAGE(second == first, "case " << i);
        CHECK(reparsed.model.entity_count() == model.entity_count());
    }
}

TEST_CASE("uca declaration with context and free text") {
    std::string source =
        "structure {\n"
        "  controller C1 \"ctrl\"\n"
        "  process P1 \"plant\"\n"
        "  action a1 from C1 to P1 \"cmd\"\n"
        "}\n"
        "process_model of C1 { var mode : { on, off } }\n"
        "uca UCA-1 action a1 type provided_unsafe context { mode=on } as \"engaged\" "
        "\"desc\" hazards [] status candidate\n";
    auto result = parse(source, "t.stpa");
    REQUIRE(result.ok());
    REQUIRE(result.model.ucas.size() == 1);
    const auto& uca = result.model.ucas[0];
    CHECK(uca.guide_word == GuideWord::ProvidedUnsafe);
    CHECK(uca.context.assignments.at("mode") == "on");
    CHECK(uca.context.free_text == "engaged");
    CHECK(uca.status == UcaStatus::Candidate);
}

TEST_CASE("declared item boundaries are the cut edges") {
    auto model = test_support::load_fixture();
    const auto* item = model.find_item("ITEM.1");
    REQUIRE(item != nullptr);
    CHECK(item->boundary_out == std::vector<std::string>{"trajectory"});
    CHECK(item->boundary_in == std::vector<std::string>{"backend_link", "env_model"});
}
