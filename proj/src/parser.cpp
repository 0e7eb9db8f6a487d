#include "eplan/parser.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <vector>

namespace eplan {

namespace {

enum class TokenType {
    Identifier,
    Semicolon,
    Comma,
    LParen,
    RParen,
    LBracket,
    RBracket,
    End
};

struct Token {
    TokenType type = TokenType::End;
    std::string text;
    int line = 1;
    int column = 1;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

private:
    void advance() {
        skip_blank();
        current_.line = line_;
        current_.column = column_;
        if (pos_ >= text_.size()) {
            current_.type = TokenType::End;
            current_.text.clear();
            return;
        }
        const char c = text_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                bump();
            }
            current_.type = TokenType::Identifier;
            current_.text.assign(text_.substr(start, pos_ - start));
            return;
        }
        switch (c) {
        case ';':
            current_.type = TokenType::Semicolon;
            break;
        case ',':
            current_.type = TokenType::Comma;
            break;
        case '(':
            current_.type = TokenType::LParen;
            break;
        case ')':
            current_.type = TokenType::RParen;
            break;
        case '[':
            current_.type = TokenType::LBracket;
            break;
        case ']':
            current_.type = TokenType::RBracket;
            break;
        default:
            throw ParseError(line_, column_, std::string("unexpected character '") + c + "'");
        }
        current_.text.assign(1, c);
        bump();
    }

    void skip_blank() {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == '%') {
                while (pos_ < text_.size() && text_[pos_] != '\n') {
                    bump();
                }
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                bump();
            } else {
                break;
            }
        }
    }

    void bump() {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
    Token current_;
};

class Parser {
public:
    explicit Parser(std::string_view text) : lexer_(text) {}

    Domain run() {
        // First pass collects declarations so statements can reference
        // names declared later in the file.
        std::vector<RawStatement> raw;
        while (lexer_.peek().type != TokenType::End) {
            parse_item(raw);
        }
        if (fluent_ids_.empty()) {
            throw DomainError("domain declares no fluents");
        }
        if (agent_ids_.empty()) {
            throw DomainError("domain declares no agents");
        }

        std::vector<Statement> statements;
        statements.reserve(raw.size());
        for (const auto& r : raw) {
            statements.push_back(resolve(r));
        }
        Signature sig{fluent_names_, agent_names_};
        return Domain(std::move(sig), action_names_, std::move(statements));
    }

private:
    // Unresolved formula tree: names only.
    struct RawFormula {
        enum class Kind { Truth, Falsity, Atom, Not, And, Or, B, E, C } kind;
        std::string name;                    // Atom fluent or B agent
        std::vector<Token> group;            // E/C agent list
        std::unique_ptr<RawFormula> lhs, rhs;
        Token at;
    };
    using RawFormulaPtr = std::unique_ptr<RawFormula>;

    struct RawStatement {
        StatementKind kind;
        Token action;                        // action-scoped kinds
        Token name_payload;                  // determines / observes / aware_of
        bool literal_positive = true;        // causes
        Token literal_name;                  // causes
        RawFormulaPtr announced;             // announces
        RawFormulaPtr condition;             // may be null (defaults true)
        RawFormulaPtr formula;               // initially / goal
        int line = 0;
        int column = 0;
    };

    void parse_item(std::vector<RawStatement>& raw) {
        Token first = expect_identifier("declaration or statement");
        if (first.text == "fluent") {
            declare_list(fluent_names_, fluent_ids_, "fluent");
        } else if (first.text == "agent") {
            declare_list(agent_names_, agent_ids_, "agent");
        } else if (first.text == "action") {
            declare_list(action_names_, action_ids_, "action");
        } else if (first.text == "executable") {
            RawStatement s;
            s.kind = StatementKind::Executable;
            s.line = first.line;
            s.column = first.column;
            s.action = expect_identifier("action name");
            expect_keyword("if");
            s.condition = parse_formula();
            expect(TokenType::Semicolon, "';'");
            raw.push_back(std::move(s));
        } else if (first.text == "initially" || first.text == "goal") {
            RawStatement s;
            s.kind = first.text == "initially" ? StatementKind::Initially : StatementKind::Goal;
            s.line = first.line;
            s.column = first.column;
            s.formula = parse_formula();
            expect(TokenType::Semicolon, "';'");
            raw.push_back(std::move(s));
        } else {
            parse_infix_statement(first, raw);
        }
    }

    // Statements of the form `<id> <keyword> ...`.
    void parse_infix_statement(Token first, std::vector<RawStatement>& raw) {
        Token verb = expect_identifier("statement keyword");
        RawStatement s;
        s.line = first.line;
        s.column = first.column;
        if (verb.text == "causes") {
            s.kind = StatementKind::Causes;
            s.action = first;
            Token next = expect_identifier("fluent literal");
            if (next.text == "not") {
                s.literal_positive = false;
                next = expect_identifier("fluent name");
            }
            s.literal_name = next;
        } else if (verb.text == "determines") {
            s.kind = StatementKind::Determines;
            s.action = first;
            s.name_payload = expect_identifier("fluent name");
        } else if (verb.text == "announces") {
            s.kind = StatementKind::Announces;
            s.action = first;
            s.announced = parse_formula();
        } else if (verb.text == "observes" || verb.text == "aware_of") {
            s.kind = verb.text == "observes" ? StatementKind::Observes : StatementKind::AwareOf;
            s.name_payload = first; // the agent
            s.action = expect_identifier("action name");
        } else {
            throw ParseError(verb.line, verb.column,
                             "expected one of causes, determines, announces, observes, aware_of "
                             "after '" + first.text + "'");
        }
        if (lexer_.peek().type == TokenType::Identifier && lexer_.peek().text == "if") {
            lexer_.take();
            s.condition = parse_formula();
        }
        expect(TokenType::Semicolon, "';'");
        raw.push_back(std::move(s));
    }

    void declare_list(std::vector<std::string>& names,
                      std::map<std::string, std::uint32_t>& ids,
                      const char* what) {
        for (;;) {
            Token id = expect_identifier(what);
            if (is_reserved(id.text)) {
                throw ParseError(id.line, id.column,
                                 "'" + id.text + "' is reserved and cannot name a " + what);
            }
            if (!ids.emplace(id.text, static_cast<std::uint32_t>(names.size())).second) {
                throw ParseError(id.line, id.column, "duplicate " + std::string(what) + " '" +
                                                         id.text + "'");
            }
            names.push_back(id.text);
            if (lexer_.peek().type == TokenType::Comma) {
                lexer_.take();
                continue;
            }
            break;
        }
        expect(TokenType::Semicolon, "';'");
    }

    static bool is_reserved(const std::string& name) {
        static const char* const reserved[] = {"fluent", "agent",      "action", "executable",
                                               "causes", "determines", "announces", "observes",
                                               "aware_of", "initially", "goal",   "if",
                                               "not",    "and",        "or",     "true",
                                               "false",  "B",          "E",      "C"};
        for (const char* r : reserved) {
            if (name == r) {
                return true;
            }
        }
        return false;
    }

    // bf := disjunct ("or" disjunct)*
    RawFormulaPtr parse_formula() { return parse_or(); }

    RawFormulaPtr parse_or() {
        RawFormulaPtr lhs = parse_and();
        while (lexer_.peek().type == TokenType::Identifier && lexer_.peek().text == "or") {
            Token op = lexer_.take();
            auto node = std::make_unique<RawFormula>();
            node->kind = RawFormula::Kind::Or;
            node->at = op;
            node->lhs = std::move(lhs);
            node->rhs = parse_and();
            lhs = std::move(node);
        }
        return lhs;
    }

    RawFormulaPtr parse_and() {
        RawFormulaPtr lhs = parse_unary();
        while (lexer_.peek().type == TokenType::Identifier && lexer_.peek().text == "and") {
            Token op = lexer_.take();
            auto node = std::make_unique<RawFormula>();
            node->kind = RawFormula::Kind::And;
            node->at = op;
            node->lhs = std::move(lhs);
            node->rhs = parse_unary();
            lhs = std::move(node);
        }
        return lhs;
    }

    RawFormulaPtr parse_unary() {
        const Token& t = lexer_.peek();
        if (t.type == TokenType::Identifier && t.text == "not") {
            Token op = lexer_.take();
            auto node = std::make_unique<RawFormula>();
            node->kind = RawFormula::Kind::Not;
            node->at = op;
            node->lhs = parse_unary();
            return node;
        }
        return parse_primary();
    }

    RawFormulaPtr parse_primary() {
        Token t = lexer_.take();
        if (t.type == TokenType::LParen) {
            RawFormulaPtr inner = parse_formula();
            expect(TokenType::RParen, "')'");
            return inner;
        }
        if (t.type != TokenType::Identifier) {
            throw ParseError(t.line, t.column, "expected formula, got '" + t.text + "'");
        }
        auto node = std::make_unique<RawFormula>();
        node->at = t;
        if (t.text == "true") {
            node->kind = RawFormula::Kind::Truth;
            return node;
        }
        if (t.text == "false") {
            node->kind = RawFormula::Kind::Falsity;
            return node;
        }
        if (t.text == "B") {
            node->kind = RawFormula::Kind::B;
            expect(TokenType::LParen, "'('");
            node->name = expect_identifier("agent name").text;
            expect(TokenType::Comma, "','");
            node->lhs = parse_formula();
            expect(TokenType::RParen, "')'");
            return node;
        }
        if (t.text == "E" || t.text == "C") {
            node->kind = t.text == "E" ? RawFormula::Kind::E : RawFormula::Kind::C;
            expect(TokenType::LParen, "'('");
            expect(TokenType::LBracket, "'['");
            for (;;) {
                node->group.push_back(expect_identifier("agent name"));
                if (lexer_.peek().type == TokenType::Comma) {
                    lexer_.take();
                    continue;
                }
                break;
            }
            expect(TokenType::RBracket, "']'");
            expect(TokenType::Comma, "','");
            node->lhs = parse_formula();
            expect(TokenType::RParen, "')'");
            return node;
        }
        node->kind = RawFormula::Kind::Atom;
        node->name = t.text;
        return node;
    }

    Token expect(TokenType type, const char* what) {
        Token t = lexer_.take();
        if (t.type != type) {
            throw ParseError(t.line, t.column,
                             "expected " + std::string(what) + ", got '" +
                                 (t.type == TokenType::End ? "end of input" : t.text) + "'");
        }
        return t;
    }

    Token expect_identifier(const char* what) {
        Token t = lexer_.take();
        if (t.type != TokenType::Identifier) {
            throw ParseError(t.line, t.column,
                             "expected " + std::string(what) + ", got '" +
                                 (t.type == TokenType::End ? "end of input" : t.text) + "'");
        }
        return t;
    }

    void expect_keyword(const char* keyword) {
        Token t = expect_identifier(keyword);
        if (t.text != keyword) {
            throw ParseError(t.line, t.column,
                             "expected '" + std::string(keyword) + "', got '" + t.text + "'");
        }
    }

    // --- name resolution -------------------------------------------------

    Fluent resolve_fluent(const Token& t) const {
        auto it = fluent_ids_.find(t.text);
        if (it == fluent_ids_.end()) {
            throw ParseError(t.line, t.column, "undeclared fluent '" + t.text + "'");
        }
        return Fluent{it->second};
    }

    Agent resolve_agent(const Token& t) const {
        auto it = agent_ids_.find(t.text);
        if (it == agent_ids_.end()) {
            throw ParseError(t.line, t.column, "undeclared agent '" + t.text + "'");
        }
        return Agent{it->second};
    }

    std::uint32_t resolve_action(const Token& t) const {
        auto it = action_ids_.find(t.text);
        if (it == action_ids_.end()) {
            throw ParseError(t.line, t.column, "undeclared action '" + t.text + "'");
        }
        return it->second;
    }

    FormulaPtr resolve_formula(const RawFormula& raw) const {
        switch (raw.kind) {
        case RawFormula::Kind::Truth:
            return Formula::truth();
        case RawFormula::Kind::Falsity:
            return Formula::falsity();
        case RawFormula::Kind::Atom:
            return Formula::atom(resolve_fluent(raw.at));
        case RawFormula::Kind::Not:
            return Formula::negate(resolve_formula(*raw.lhs));
        case RawFormula::Kind::And:
            return Formula::conj(resolve_formula(*raw.lhs), resolve_formula(*raw.rhs));
        case RawFormula::Kind::Or:
            return Formula::disj(resolve_formula(*raw.lhs), resolve_formula(*raw.rhs));
        case RawFormula::Kind::B:
            return Formula::believes(resolve_agent_name(raw), resolve_formula(*raw.lhs));
        case RawFormula::Kind::E:
        case RawFormula::Kind::C: {
            AgentSet group;
            group.reserve(raw.group.size());
            for (const Token& t : raw.group) {
                group.push_back(resolve_agent(t));
            }
            FormulaPtr body = resolve_formula(*raw.lhs);
            return raw.kind == RawFormula::Kind::E
                       ? Formula::everyone(std::move(group), std::move(body))
                       : Formula::common(std::move(group), std::move(body));
        }
        }
        throw std::logic_error("unreachable formula kind");
    }

    Agent resolve_agent_name(const RawFormula& raw) const {
        auto it = agent_ids_.find(raw.name);
        if (it == agent_ids_.end()) {
            throw ParseError(raw.at.line, raw.at.column, "undeclared agent '" + raw.name + "'");
        }
        return Agent{it->second};
    }

    Statement resolve(const RawStatement& r) const {
        Statement s;
        s.kind = r.kind;
        s.line = r.line;
        s.column = r.column;
        s.condition = r.condition ? resolve_formula(*r.condition) : Formula::truth();
        switch (r.kind) {
        case StatementKind::Executable:
            s.action = resolve_action(r.action);
            break;
        case StatementKind::Causes:
            s.action = resolve_action(r.action);
            s.effect_literal = Literal{resolve_fluent(r.literal_name), r.literal_positive};
            break;
        case StatementKind::Determines:
            s.action = resolve_action(r.action);
            s.sensed_fluent = resolve_fluent(r.name_payload);
            break;
        case StatementKind::Announces:
            s.action = resolve_action(r.action);
            s.announced = resolve_formula(*r.announced);
            if (!s.announced->is_fluent_formula()) {
                throw ParseError(r.announced->at.line, r.announced->at.column,
                                 "announced formula must be a fluent formula");
            }
            break;
        case StatementKind::Observes:
        case StatementKind::AwareOf:
            s.action = resolve_action(r.action);
            s.observer = resolve_agent(r.name_payload);
            break;
        case StatementKind::Initially:
        case StatementKind::Goal:
            s.formula = resolve_formula(*r.formula);
            break;
        }
        return s;
    }

    Lexer lexer_;
    std::vector<std::string> fluent_names_;
    std::vector<std::string> agent_names_;
    std::vector<std::string> action_names_;
    std::map<std::string, std::uint32_t> fluent_ids_;
    std::map<std::string, std::uint32_t> agent_ids_;
    std::map<std::string, std::uint32_t> action_ids_;
};

} // namespace

Domain parse_domain(std::string_view text) {
    Parser parser(text);
    return parser.run();
}

} // namespace eplan
