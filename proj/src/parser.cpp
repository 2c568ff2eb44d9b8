#include "hazlang/parser.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "hazlang/stpa.hpp"

namespace hazlang {

namespace {

bool valid_utf8(const std::string& text) {
    std::size_t i = 0;
    while (i < text.size()) {
        unsigned char c = static_cast<unsigned char>(text[i]);
        std::size_t extra;
        if (c < 0x80) extra = 0;
        else if ((c & 0xE0) == 0xC0) extra = 1;
        else if ((c & 0xF0) == 0xE0) extra = 2;
        else if ((c & 0xF8) == 0xF0) extra = 3;
        else return false;
        if (i + extra >= text.size() && extra > 0) return false;
        for (std::size_t k = 1; k <= extra; ++k) {
            if ((static_cast<unsigned char>(text[i + k]) & 0xC0) != 0x80) return false;
        }
        i += extra + 1;
    }
    return true;
}

enum class TokKind {
    Ident,
    String,
    LBrace,
    RBrace,
    LBracket,
    RBracket,
    Comma,
    Equals,
    Colon,
    End,
};

struct Token {
    TokKind kind = TokKind::End;
    std::string text;  // identifier name or decoded string value
    SourceSpan span;
};

class Lexer {
public:
    Lexer(const std::string& source, std::string file, std::vector<Diagnostic>& diags)
        : src_(source), file_(std::move(file)), diags_(diags) {}

    std::vector<Token> run() {
        std::vector<Token> tokens;
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '\n') {
                advance();
                continue;
            }
            if (c == ' ' || c == '\t' || c == '\r') {
                advance();
                continue;
            }
            if (c == '#') {
                while (pos_ < src_.size() && src_[pos_] != '\n') advance();
                continue;
            }
            if (c == '"') {
                tokens.push_back(lex_string());
                continue;
            }
            if (std::isalpha(static_cast<unsigned char>(c))) {
                tokens.push_back(lex_ident());
                continue;
            }
            TokKind kind;
            switch (c) {
                case '{': kind = TokKind::LBrace; break;
                case '}': kind = TokKind::RBrace; break;
                case '[': kind = TokKind::LBracket; break;
                case ']': kind = TokKind::RBracket; break;
                case ',': kind = TokKind::Comma; break;
                case '=': kind = TokKind::Equals; break;
                case ':': kind = TokKind::Colon; break;
                default: {
                    diags_.push_back({DiagnosticSeverity::Error, "SYNTAX", "",
                                      std::string("unexpected character '") + c + "'",
                                      here(1)});
                    advance();
                    continue;
                }
            }
            Token tok{kind, std::string(1, c), here(1)};
            advance();
            tokens.push_back(tok);
        }
        tokens.push_back({TokKind::End, "", here(1)});
        return tokens;
    }

private:
    SourceSpan here(int length) const { return {file_, line_, column_, length}; }

    void advance() {
        char c = src_[pos_++];
        if (c == '\n') {
            ++line_;
            column_ = 1;
        } else if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) {
            ++column_;  // count code points, not bytes
        }
    }

    Token lex_ident() {
        SourceSpan span = here(0);
        std::string text;
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            unsigned char u = static_cast<unsigned char>(c);
            if (std::isalnum(u) || c == '_' || c == '.' || c == '-') {
                text.push_back(c);
                advance();
            } else {
                break;
            }
        }
        span.length = static_cast<int>(text.size());
        return {TokKind::Ident, text, span};
    }

    Token lex_string() {
        SourceSpan span = here(1);
        advance();  // opening quote
        std::string value;
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '"') {
                advance();
                span.length = column_ - span.column;
                if (span.length < 1) span.length = 1;
                return {TokKind::String, value, span};
            }
            if (c == '\n') break;  // strings are single-line
            if (c == '\\') {
                advance();
                if (pos_ >= src_.size()) break;
                char esc = src_[pos_];
                advance();
                switch (esc) {
                    case '"': value.push_back('"'); break;
                    case '\\': value.push_back('\\'); break;
                    case 'n': value.push_back('\n'); break;
                    default:
                        diags_.push_back({DiagnosticSeverity::Error, "SYNTAX", "",
                                          std::string("unknown escape '\\") + esc + "'",
                                          here(2)});
                        value.push_back(esc);
                }
                continue;
            }
            value.push_back(c);
            advance();
        }
        diags_.push_back({DiagnosticSeverity::Error, "SYNTAX", "",
                          "unterminated string literal", span});
        return {TokKind::String, value, span};
    }

    const std::string& src_;
    std::string file_;
    std::vector<Diagnostic>& diags_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
};

const std::set<std::string> kTopLevelKeywords = {
    "accident", "hazard",   "constraint", "structure", "process_model",
    "situation", "classify", "event",     "goal",      "uca",
    "csc",       "scenario", "item",      "default_controllability",
};

const std::set<std::string> kStructureKeywords = {
    "controller", "actuator", "process", "sensor", "external", "action", "feedback",
};

struct SyntaxAbort {};

struct PendingClassify {
    std::string hazard;
    Severity severity;
    Exposure exposure;
    SourceSpan span;
};

class Parser {
public:
    Parser(std::vector<Token> tokens, std::vector<Diagnostic>& diags)
        : tokens_(std::move(tokens)), diags_(diags) {}

    SafetyModel run() {
        while (!at(TokKind::End)) {
            try {
                parse_declaration();
            } catch (const SyntaxAbort&) {
                sync_top_level();
            }
        }
        finalize();
        return std::move(model_);
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& next() { return tokens_[pos_++]; }
    bool at(TokKind kind) const { return peek().kind == kind; }
    bool at_keyword(const std::string& kw) const {
        return at(TokKind::Ident) && peek().text == kw;
    }

    [[noreturn]] void fail(const std::string& message, const SourceSpan& span) {
        diags_.push_back({DiagnosticSeverity::Error, "SYNTAX", "", message, span});
        throw SyntaxAbort{};
    }

    void sync_top_level() {
        while (!at(TokKind::End)) {
            if (at(TokKind::Ident) && kTopLevelKeywords.count(peek().text)) return;
            ++pos_;
        }
    }

    void sync_structure() {
        while (!at(TokKind::End) && !at(TokKind::RBrace)) {
            if (at(TokKind::Ident) && (kStructureKeywords.count(peek().text) ||
                                       kTopLevelKeywords.count(peek().text)))
                return;
            ++pos_;
        }
    }

    Token expect(TokKind kind, const std::string& what) {
        if (!at(kind)) fail("expected " + what, peek().span);
        return next();
    }

    std::string expect_keyword(const std::string& kw) {
        if (!at_keyword(kw)) fail("expected '" + kw + "'", peek().span);
        return next().text;
    }

    Token expect_identifier(const std::string& what) {
        if (!at(TokKind::Ident)) fail("expected " + what, peek().span);
        Token tok = next();
        if (!is_identifier(tok.text)) fail("invalid identifier '" + tok.text + "'", tok.span);
        return tok;
    }

    std::string expect_string(const std::string& what) {
        return expect(TokKind::String, what + " (quoted string)").text;
    }

    bool register_id(const Token& id) {
        auto [it, inserted] = declared_ids_.emplace(id.text, id.span);
        if (!inserted) {
            std::ostringstream msg;
            msg << "duplicate id '" << id.text << "'; first declared at "
                << it->second.file << ":" << it->second.line << ":" << it->second.column;
            diags_.push_back(
                {DiagnosticSeverity::Error, "DUPLICATE_ID", id.text, msg.str(), id.span});
            return false;
        }
        return true;
    }

    std::vector<std::string> parse_id_list(const std::string& what) {
        expect(TokKind::LBracket, "'['");
        std::vector<std::string> ids;
        if (at(TokKind::RBracket)) {
            next();
            return ids;
        }
        while (true) {
            // a declaration keyword here means the list was never closed
            if (at(TokKind::Ident) && kTopLevelKeywords.count(peek().text))
                fail("expected ']' to close the " + what + " list", peek().span);
            ids.push_back(expect_identifier(what).text);
            if (at(TokKind::Comma)) {
                next();
                continue;
            }
            expect(TokKind::RBracket, "',' or ']'");
            return ids;
        }
    }

    Severity parse_severity() {
        Token tok = expect_identifier("severity class S0..S3");
        auto s = severity_from_keyword(tok.text);
        if (!s) {
            diags_.push_back({DiagnosticSeverity::Error, "RANGE", "",
                              "'" + tok.text + "' is not a severity class (S0..S3)",
                              tok.span});
            throw SyntaxAbort{};
        }
        return *s;
    }

    Exposure parse_exposure() {
        Token tok = expect_identifier("exposure class E0..E4");
        auto e = exposure_from_keyword(tok.text);
        if (!e) {
            diags_.push_back({DiagnosticSeverity::Error, "RANGE", "",
                              "'" + tok.text + "' is not an exposure class (E0..E4)",
                              tok.span});
            throw SyntaxAbort{};
        }
        return *e;
    }

    Controllability parse_controllability() {
        Token tok = expect_identifier("controllability class C0..C3");
        auto c = controllability_from_keyword(tok.text);
        if (!c) {
            diags_.push_back({DiagnosticSeverity::Error, "RANGE", "",
                              "'" + tok.text + "' is not a controllability class (C0..C3)",
                              tok.span});
            throw SyntaxAbort{};
        }
        return *c;
    }

    void parse_declaration() {
        const Token& tok = peek();
        if (tok.kind != TokKind::Ident)
            fail("expected a declaration keyword", tok.span);
        const std::string& kw = tok.text;
        if (kw == "accident") parse_accident();
        else if (kw == "hazard") parse_hazard();
        else if (kw == "constraint") parse_constraint();
        else if (kw == "structure") parse_structure();
        else if (kw == "process_model") parse_process_model();
        else if (kw == "situation") parse_situation();
        else if (kw == "classify") parse_classify();
        else if (kw == "event") parse_event();
        else if (kw == "goal") parse_goal();
        else if (kw == "uca") parse_uca();
        else if (kw == "csc") parse_csc();
        else if (kw == "scenario") parse_scenario();
        else if (kw == "item") parse_item();
        else if (kw == "default_controllability") parse_pragma();
        else fail("unknown declaration keyword '" + kw + "'", tok.span);
    }

    void parse_accident() {
        next();
        Token id = expect_identifier("accident id");
        Accident acc;
        acc.id = id.text;
        acc.description = expect_string("accident description");
        if (at_keyword("note")) {
            next();
            acc.severity_note = expect_string("severity note");
        }
        if (register_id(id)) model_.accidents.push_back(std::move(acc));
    }

    void parse_hazard() {
        next();
        Token id = expect_identifier("hazard id");
        Hazard haz;
        haz.id = id.text;
        haz.description = expect_string("hazard description");
        expect_keyword("leads_to");
        haz.leads_to = parse_id_list("accident id");
        if (register_id(id)) model_.hazards.push_back(std::move(haz));
    }

    void parse_constraint() {
        next();
        Token id = expect_identifier("constraint id");
        SystemSafetyConstraint sc;
        sc.id = id.text;
        sc.description = expect_string("constraint description");
        expect_keyword("mitigates");
        sc.mitigates = parse_id_list("hazard id");
        if (register_id(id)) model_.constraints.push_back(std::move(sc));
    }

    void parse_structure() {
        next();
        expect(TokKind::LBrace, "'{'");
        while (!at(TokKind::RBrace)) {
            if (at(TokKind::End)) fail("unclosed structure block", peek().span);
            try {
                parse_structure_entry();
            } catch (const SyntaxAbort&) {
                sync_structure();
                if (at(TokKind::Ident) && kTopLevelKeywords.count(peek().text) &&
                    !kStructureKeywords.count(peek().text))
                    return;  // assume the block was left unclosed
            }
        }
        next();  // '}'
    }

    void parse_structure_entry() {
        const Token& tok = peek();
        if (tok.kind != TokKind::Ident)
            fail("expected a structure keyword", tok.span);
        const std::string& kw = tok.text;
        if (auto kind = node_kind_from_keyword(kw)) {
            next();
            Token id = expect_identifier("node id");
            Node node;
            node.id = id.text;
            node.kind = *kind;
            node.label = expect_string("node label");
            if (register_id(id)) model_.structure.nodes.push_back(std::move(node));
            return;
        }
        if (kw == "action") {
            next();
            Token id = expect_identifier("action id");
            ControlActionEdge edge;
            edge.id = id.text;
            expect_keyword("from");
            edge.source = expect_identifier("source node id").text;
            expect_keyword("to");
            edge.target = expect_identifier("target node id").text;
            edge.label = expect_string("action label");
            if (at_keyword("payload")) {
                next();
                edge.payload_fields.push_back(expect_string("payload field"));
                while (at(TokKind::Comma)) {
                    next();
                    edge.payload_fields.push_back(expect_string("payload field"));
                }
            }
            if (register_id(id)) model_.structure.action_edges.push_back(std::move(edge));
            return;
        }
        if (kw == "feedback") {
            next();
            Token id = expect_identifier("feedback id");
            FeedbackEdge edge;
            edge.id = id.text;
            expect_keyword("from");
            edge.source = expect_identifier("source node id").text;
            expect_keyword("to");
            edge.target = expect_identifier("target node id").text;
            edge.label = expect_string("feedback label");
            if (register_id(id)) model_.structure.feedback_edges.push_back(std::move(edge));
            return;
        }
        fail("unknown structure keyword '" + kw + "'", tok.span);
    }

    void parse_process_model() {
        next();
        expect_keyword("of");
        Token owner = expect_identifier("controller id");
        ProcessModel pm;
        pm.owner = owner.text;
        expect(TokKind::LBrace, "'{'");
        std::set<std::string> names;
        while (at_keyword("var")) {
            next();
            Token name = expect_identifier("variable name");
            ProcessVariable var;
            var.name = name.text;
            if (!names.insert(var.name).second)
                diags_.push_back({DiagnosticSeverity::Error, "DUPLICATE_ID", pm.owner,
                                  "duplicate process variable '" + var.name + "'",
                                  name.span});
            expect(TokKind::Colon, "':'");
            expect(TokKind::LBrace, "'{'");
            std::set<std::string> values;
            while (true) {
                Token value = expect_identifier("variable value");
                if (!values.insert(value.text).second)
                    diags_.push_back({DiagnosticSeverity::Error, "DUPLICATE_ID", pm.owner,
                                      "duplicate value '" + value.text + "' for variable '" +
                                          var.name + "'",
                                      value.span});
                var.values.push_back(value.text);
                if (at(TokKind::Comma)) {
                    next();
                    continue;
                }
                expect(TokKind::RBrace, "',' or '}'");
                break;
            }
            pm.variables.push_back(std::move(var));
        }
        expect(TokKind::RBrace, "'var' or '}'");
        pending_process_models_.emplace_back(std::move(pm), owner.span);
    }

    void parse_situation() {
        next();
        Token id = expect_identifier("situation id");
        OperationalSituation os;
        os.id = id.text;
        os.description = expect_string("situation description");
        if (at_keyword("mode")) {
            next();
            os.operating_mode = expect_string("operating mode");
        }
        if (register_id(id)) model_.situations.push_back(std::move(os));
    }

    void parse_classify() {
        next();
        Token hazard = expect_identifier("hazard id");
        expect_keyword("severity");
        Severity s = parse_severity();
        expect_keyword("exposure");
        Exposure e = parse_exposure();
        pending_classifies_.push_back({hazard.text, s, e, hazard.span});
    }

    void parse_event() {
        next();
        Token id = expect_identifier("event id");
        HazardousEventDecl ev;
        ev.id = id.text;
        expect_keyword("hazard");
        ev.hazard = expect_identifier("hazard id").text;
        expect_keyword("situation");
        ev.situation = expect_identifier("situation id").text;
        if (at_keyword("controllability")) {
            next();
            ev.controllability = parse_controllability();
        }
        if (register_id(id)) model_.events.push_back(std::move(ev));
    }

    void parse_goal() {
        next();
        Token id = expect_identifier("goal id");
        SafetyGoal goal;
        goal.id = id.text;
        expect_keyword("event");
        goal.event = expect_identifier("event id").text;
        goal.text = expect_string("goal text");
        if (at_keyword("asil")) {
            next();
            Token level = expect_identifier("ASIL level");
            auto asil = asil_from_keyword(level.text);
            if (!asil) {
                diags_.push_back({DiagnosticSeverity::Error, "RANGE", goal.id,
                                  "'" + level.text + "' is not an ASIL level (QM,A,B,C,D)",
                                  level.span});
                throw SyntaxAbort{};
            }
            goal.asil = asil;
        }
        if (register_id(id)) model_.goals.push_back(std::move(goal));
    }

    void parse_uca() {
        next();
        Token id = expect_identifier("uca id");
        UnsafeControlAction uca;
        uca.id = id.text;
        expect_keyword("action");
        uca.action = expect_identifier("action id").text;
        expect_keyword("type");
        Token type = expect_identifier("guide word");
        auto word = guide_word_from_keyword(type.text);
        if (!word) fail("'" + type.text + "' is not a guide word", type.span);
        uca.guide_word = *word;
        expect_keyword("context");
        expect(TokKind::LBrace, "'{'");
        if (!at(TokKind::RBrace)) {
            while (true) {
                Token name = expect_identifier("variable name");
                expect(TokKind::Equals, "'='");
                Token value = expect_identifier("variable value");
                if (uca.context.assignments.count(name.text))
                    diags_.push_back({DiagnosticSeverity::Error, "DUPLICATE_ID", uca.id,
                                      "variable '" + name.text +
                                          "' assigned twice in context",
                                      name.span});
                uca.context.assignments[name.text] = value.text;
                if (at(TokKind::Comma)) {
                    next();
                    continue;
                }
                break;
            }
        }
        expect(TokKind::RBrace, "'}'");
        if (at_keyword("as")) {
            next();
            uca.context.free_text = expect_string("context phrase");
        }
        uca.description = expect_string("uca description");
        expect_keyword("hazards");
        uca.hazards = parse_id_list("hazard id");
        if (at_keyword("status")) {
            next();
            Token status = expect_identifier("status");
            auto st = uca_status_from_keyword(status.text);
            if (!st) fail("'" + status.text + "' is not a uca status", status.span);
            uca.status = *st;
        }
        if (register_id(id)) model_.ucas.push_back(std::move(uca));
    }

    void parse_csc() {
        next();
        Token id = expect_identifier("csc id");
        CorrespondingSafetyConstraint csc;
        csc.id = id.text;
        expect_keyword("uca");
        csc.uca = expect_identifier("uca id").text;
        csc.text = expect_string("constraint text");
        if (register_id(id)) model_.cscs.push_back(std::move(csc));
    }

    void parse_scenario() {
        next();
        Token id = expect_identifier("scenario id");
        CausalScenario sc;
        sc.id = id.text;
        expect_keyword("uca");
        sc.uca = expect_identifier("uca id").text;
        expect_keyword("factor");
        Token factor = expect_identifier("causal factor category");
        auto category = causal_factor_from_keyword(factor.text);
        if (!category)
            fail("'" + factor.text + "' is not a causal factor category", factor.span);
        sc.factor_category = *category;
        sc.description = expect_string("scenario description");
        if (at_keyword("constraint")) {
            next();
            sc.derived_constraint = expect_string("derived constraint");
        }
        if (register_id(id)) model_.scenarios.push_back(std::move(sc));
    }

    void parse_item() {
        next();
        Token id = expect_identifier("item id");
        ItemDefinition item;
        item.id = id.text;
        item.name = expect_string("item name");
        expect_keyword("members");
        item.members = parse_id_list("node id");
        std::sort(item.members.begin(), item.members.end());
        item.members.erase(std::unique(item.members.begin(), item.members.end()),
                           item.members.end());
        expect_keyword("purpose");
        item.purpose = expect_string("item purpose");
        if (register_id(id)) model_.items.push_back(std::move(item));
    }

    void parse_pragma() {
        Token kw = next();
        Controllability c = parse_controllability();
        if (model_.default_controllability_pragma) {
            diags_.push_back({DiagnosticSeverity::Error, "DUPLICATE_ID", "",
                              "default_controllability pragma given more than once",
                              kw.span});
            return;
        }
        model_.default_controllability_pragma = c;
    }

    void finalize() {
        std::set<std::string> classified;
        for (const auto& pc : pending_classifies_) {
            Hazard* hazard = nullptr;
            for (auto& h : model_.hazards) {
                if (h.id == pc.hazard) hazard = &h;
            }
            if (!hazard) {
                diags_.push_back({DiagnosticSeverity::Error, "DANGLING_REF", pc.hazard,
                                  "classify references unknown hazard '" + pc.hazard + "'",
                                  pc.span});
                continue;
            }
            if (!classified.insert(pc.hazard).second) {
                diags_.push_back({DiagnosticSeverity::Error, "DUPLICATE_ID", pc.hazard,
                                  "hazard '" + pc.hazard + "' classified more than once",
                                  pc.span});
                continue;
            }
            hazard->severity = pc.severity;
            hazard->exposure = pc.exposure;
        }

        for (auto& [pm, span] : pending_process_models_) {
            Node* owner = nullptr;
            for (auto& node : model_.structure.nodes) {
                if (node.id == pm.owner) owner = &node;
            }
            if (!owner) {
                diags_.push_back({DiagnosticSeverity::Error, "DANGLING_REF", pm.owner,
                                  "process_model references unknown node '" + pm.owner +
                                      "'",
                                  span});
                continue;
            }
            if (owner->process_model) {
                diags_.push_back({DiagnosticSeverity::Error, "DUPLICATE_ID", pm.owner,
                                  "node '" + pm.owner + "' already has a process model",
                                  span});
                continue;
            }
            owner->process_model = std::move(pm);
        }

        // Declared items carry no boundary syntax; the boundaries are the cut
        // edges of the member set, computed once members resolve.
        for (auto& item : model_.items) {
            bool resolved = std::all_of(
                item.members.begin(), item.members.end(),
                [&](const std::string& m) { return model_.structure.find_node(m) != nullptr; });
            if (resolved && !item.members.empty()) {
                auto [in, out] = boundary_edges(model_.structure, item.members);
                item.boundary_in = std::move(in);
                item.boundary_out = std::move(out);
            }
        }
    }

    std::vector<Token> tokens_;
    std::vector<Diagnostic>& diags_;
    std::size_t pos_ = 0;
    SafetyModel model_;
    std::map<std::string, SourceSpan> declared_ids_;
    std::vector<PendingClassify> pending_classifies_;
    std::vector<std::pair<ProcessModel, SourceSpan>> pending_process_models_;
};

}  // namespace

ParseResult parse(const std::string& source, const std::string& file_name) {
    ParseResult result;
    if (!valid_utf8(source)) {
        result.diagnostics.push_back({DiagnosticSeverity::Error, "ENCODING", "",
                                      "input is not valid UTF-8",
                                      SourceSpan{file_name, 1, 1, 1}});
        return result;
    }
    Lexer lexer(source, file_name, result.diagnostics);
    Parser parser(lexer.run(), result.diagnostics);
    result.model = parser.run();
    return result;
}

ParseResult parse_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        ParseResult result;
        result.diagnostics.push_back({DiagnosticSeverity::Error, "IO", "",
                                      "cannot open file '" + path + "'", std::nullopt});
        return result;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse(buffer.str(), path);
}

std::string escape_string(const std::string& text) {
    std::string out = "\"";
    for (char c : text) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            default: out.push_back(c);
        }
    }
    out.push_back('"');
    return out;
}

namespace {

template <typename T>
std::vector<const T*> sorted_by_id(const std::vector<T>& items) {
    std::vector<const T*> out;
    out.reserve(items.size());
    for (const auto& item : items) out.push_back(&item);
    std::sort(out.begin(), out.end(),
              [](const T* a, const T* b) { return a->id < b->id; });
    return out;
}

std::string id_list(std::vector<std::string> ids) {
    std::sort(ids.begin(), ids.end());
    std::string out = "[";
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) out += ", ";
        out += ids[i];
    }
    out += "]";
    return out;
}

}  // namespace

std::string serialize(const SafetyModel& model) {
    std::ostringstream out;
    out << "# hazlang safety model (canonical form)\n";

    if (model.default_controllability_pragma)
        out << "\ndefault_controllability "
            << to_keyword(*model.default_controllability_pragma) << "\n";

    auto accidents = sorted_by_id(model.accidents);
    if (!accidents.empty()) out << "\n";
    for (const auto* acc : accidents) {
        out << "accident " << acc->id << " " << escape_string(acc->description);
        if (acc->severity_note) out << " note " << escape_string(*acc->severity_note);
        out << "\n";
    }

    auto hazards = sorted_by_id(model.hazards);
    if (!hazards.empty()) out << "\n";
    for (const auto* haz : hazards) {
        out << "hazard " << haz->id << " " << escape_string(haz->description)
            << " leads_to " << id_list(haz->leads_to) << "\n";
    }

    auto constraints = sorted_by_id(model.constraints);
    if (!constraints.empty()) out << "\n";
    for (const auto* sc : constraints) {
        out << "constraint " << sc->id << " " << escape_string(sc->description)
            << " mitigates " << id_list(sc->mitigates) << "\n";
    }

    if (!model.structure.empty()) {
        out << "\nstructure {\n";
        for (const auto* node : sorted_by_id(model.structure.nodes)) {
            out << "  " << to_keyword(node->kind) << " " << node->id << " "
                << escape_string(node->label) << "\n";
        }
        for (const auto* edge : sorted_by_id(model.structure.action_edges)) {
            out << "  action " << edge->id << " from " << edge->source << " to "
                << edge->target << " " << escape_string(edge->label);
            if (!edge->payload_fields.empty()) {
                out << " payload ";
                for (std::size_t i = 0; i < edge->payload_fields.size(); ++i) {
                    if (i) out << ", ";
                    out << escape_string(edge->payload_fields[i]);
                }
            }
            out << "\n";
        }
        for (const auto* edge : sorted_by_id(model.structure.feedback_edges)) {
            out << "  feedback " << edge->id << " from " << edge->source << " to "
                << edge->target << " " << escape_string(edge->label) << "\n";
        }
        out << "}\n";
    }

    for (const auto* node : sorted_by_id(model.structure.nodes)) {
        if (!node->process_model) continue;
        out << "\nprocess_model of " << node->id << " {\n";
        std::vector<const ProcessVariable*> vars;
        for (const auto& v : node->process_model->variables) vars.push_back(&v);
        std::sort(vars.begin(), vars.end(), [](const ProcessVariable* a,
                                               const ProcessVariable* b) {
            return a->name < b->name;
        });
        for (const auto* var : vars) {
            out << "  var " << var->name << " : { ";
            for (std::size_t i = 0; i < var->values.size(); ++i) {
                if (i) out << ", ";
                out << var->values[i];
            }
            out << " }\n";
        }
        out << "}\n";
    }

    auto situations = sorted_by_id(model.situations);
    if (!situations.empty()) out << "\n";
    for (const auto* os : situations) {
        out << "situation " << os->id << " " << escape_string(os->description);
        if (os->operating_mode) out << " mode " << escape_string(*os->operating_mode);
        out << "\n";
    }

    bool any_classified = std::any_of(model.hazards.begin(), model.hazards.end(),
                                      [](const Hazard& h) { return h.severity.has_value(); });
    if (any_classified) out << "\n";
    for (const auto* haz : hazards) {
        if (!haz->severity || !haz->exposure) continue;
        out << "classify " << haz->id << " severity " << to_keyword(*haz->severity)
            << " exposure " << to_keyword(*haz->exposure) << "\n";
    }

    auto events = sorted_by_id(model.events);
    if (!events.empty()) out << "\n";
    for (const auto* ev : events) {
        out << "event " << ev->id << " hazard " << ev->hazard << " situation "
            << ev->situation;
        if (ev->controllability)
            out << " controllability " << to_keyword(*ev->controllability);
        out << "\n";
    }

    auto goals = sorted_by_id(model.goals);
    if (!goals.empty()) out << "\n";
    for (const auto* goal : goals) {
        out << "goal " << goal->id << " event " << goal->event << " "
            << escape_string(goal->text);
        if (goal->asil) out << " asil " << to_keyword(*goal->asil);
        out << "\n";
    }

    auto ucas = sorted_by_id(model.ucas);
    if (!ucas.empty()) out << "\n";
    for (const auto* uca : ucas) {
        out << "uca " << uca->id << " action " << uca->action << " type "
            << to_keyword(uca->guide_word) << " context {";
        bool first = true;
        for (const auto& [name, value] : uca->context.assignments) {
            out << (first ? " " : ", ") << name << "=" << value;
            first = false;
        }
        out << (first ? "}" : " }");
        if (uca->context.free_text) out << " as " << escape_string(*uca->context.free_text);
        out << " " << escape_string(uca->description) << " hazards "
            << id_list(uca->hazards) << " status " << to_keyword(uca->status) << "\n";
    }

    auto cscs = sorted_by_id(model.cscs);
    if (!cscs.empty()) out << "\n";
    for (const auto* csc : cscs) {
        out << "csc " << csc->id << " uca " << csc->uca << " "
            << escape_string(csc->text) << "\n";
    }

    auto scenarios = sorted_by_id(model.scenarios);
    if (!scenarios.empty()) out << "\n";
    for (const auto* sc : scenarios) {
        out << "scenario " << sc->id << " uca " << sc->uca << " factor "
            << to_keyword(sc->factor_category) << " " << escape_string(sc->description);
        if (sc->derived_constraint)
            out << " constraint " << escape_string(*sc->derived_constraint);
        out << "\n";
    }

    auto items = sorted_by_id(model.items);
    if (!items.empty()) out << "\n";
    for (const auto* item : items) {
        out << "item " << item->id << " " << escape_string(item->name) << " members "
            << id_list(item->members) << " purpose " << escape_string(item->purpose)
            << "\n";
    }

    return out.str();
}

}  // namespace hazlang
