#pragma once

#include "eplan/formula.hpp"
#include "eplan/vocabulary.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace eplan {

enum class ActionType { Ontic, Sensing, Announcement };

enum class StatementKind {
    Executable,
    Causes,
    Determines,
    Announces,
    Observes,
    AwareOf,
    Initially,
    Goal
};

/// One parsed statement. Which payload fields are meaningful depends on
/// the kind; `condition` is the `if` clause and defaults to true.
struct Statement {
    StatementKind kind = StatementKind::Initially;
    std::uint32_t action = 0;       // action-scoped kinds only
    Literal effect_literal{};       // Causes
    Fluent sensed_fluent{};         // Determines
    FormulaPtr announced;           // Announces (fluent formula)
    Agent observer{};               // Observes / AwareOf
    FormulaPtr condition;           // if-clause, never null
    FormulaPtr formula;             // Initially / Goal payload
    int line = 0;
    int column = 0;

    [[nodiscard]] bool is_action_scoped() const {
        return kind != StatementKind::Initially && kind != StatementKind::Goal;
    }
};

bool statements_equivalent(const Statement& a, const Statement& b);

/// A grounded planning domain: signature, actions with their statements,
/// initial conditions and the goal (conjunction of all goal statements).
///
/// Validation happens in the constructor; Domain values are immutable
/// afterwards and safe to share across threads.
class Domain {
public:
    struct ActionEntry {
        std::string name;
        ActionType type = ActionType::Ontic;
        std::vector<Statement> statements; // declaration order
    };

    Domain(Signature sig,
           std::vector<std::string> action_names,
           std::vector<Statement> statements);

    [[nodiscard]] const SignaturePtr& signature() const { return sig_; }
    [[nodiscard]] const std::vector<ActionEntry>& actions() const { return actions_; }
    [[nodiscard]] const std::vector<Statement>& statements() const { return statements_; }
    [[nodiscard]] const std::vector<FormulaPtr>& initially() const { return initially_; }
    [[nodiscard]] const FormulaPtr& goal() const { return goal_; }

    [[nodiscard]] std::optional<std::uint32_t> action_index(const std::string& name) const;

    /// Renders the domain back into statement syntax. Parsing the result
    /// yields an equal Domain.
    [[nodiscard]] std::string to_text() const;

    bool operator==(const Domain& other) const;

private:
    SignaturePtr sig_;
    std::vector<ActionEntry> actions_;          // declaration order
    std::map<std::string, std::uint32_t> action_index_;
    std::vector<Statement> statements_;         // original order, all kinds
    std::vector<FormulaPtr> initially_;
    FormulaPtr goal_;
};

} // namespace eplan
