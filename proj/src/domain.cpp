#include "eplan/domain.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace eplan {

namespace {

const char* statement_keyword(StatementKind kind) {
    switch (kind) {
    case StatementKind::Executable:
        return "executable";
    case StatementKind::Causes:
        return "causes";
    case StatementKind::Determines:
        return "determines";
    case StatementKind::Announces:
        return "announces";
    case StatementKind::Observes:
        return "observes";
    case StatementKind::AwareOf:
        return "aware_of";
    case StatementKind::Initially:
        return "initially";
    case StatementKind::Goal:
        return "goal";
    }
    return "?";
}

std::optional<ActionType> effect_kind(const Statement& s) {
    switch (s.kind) {
    case StatementKind::Causes:
        return ActionType::Ontic;
    case StatementKind::Determines:
        return ActionType::Sensing;
    case StatementKind::Announces:
        return ActionType::Announcement;
    default:
        return std::nullopt;
    }
}

void check_unique_names(const std::vector<std::string>& names, const char* what) {
    std::set<std::string> seen;
    for (const auto& name : names) {
        if (name.empty()) {
            throw DomainError(std::string(what) + " with empty name");
        }
        if (!seen.insert(name).second) {
            throw DomainError("duplicate " + std::string(what) + " '" + name + "'");
        }
    }
}

} // namespace

bool statements_equivalent(const Statement& a, const Statement& b) {
    if (a.kind != b.kind || a.action != b.action) {
        return false;
    }
    if (!formulas_equal(a.condition, b.condition)) {
        return false;
    }
    switch (a.kind) {
    case StatementKind::Executable:
        return true;
    case StatementKind::Causes:
        return a.effect_literal == b.effect_literal;
    case StatementKind::Determines:
        return a.sensed_fluent == b.sensed_fluent;
    case StatementKind::Announces:
        return formulas_equal(a.announced, b.announced);
    case StatementKind::Observes:
    case StatementKind::AwareOf:
        return a.observer == b.observer;
    case StatementKind::Initially:
    case StatementKind::Goal:
        return formulas_equal(a.formula, b.formula);
    }
    return false;
}

Domain::Domain(Signature sig,
               std::vector<std::string> action_names,
               std::vector<Statement> statements)
    : statements_(std::move(statements)) {
    if (sig.fluent_names.empty()) {
        throw DomainError("domain declares no fluents");
    }
    if (sig.agent_names.empty()) {
        throw DomainError("domain declares no agents");
    }
    check_unique_names(sig.fluent_names, "fluent");
    check_unique_names(sig.agent_names, "agent");
    check_unique_names(action_names, "action");

    sig_ = std::make_shared<Signature>(std::move(sig));

    actions_.reserve(action_names.size());
    for (std::uint32_t i = 0; i < action_names.size(); ++i) {
        action_index_.emplace(action_names[i], i);
        actions_.push_back(ActionEntry{std::move(action_names[i]), ActionType::Ontic, {}});
    }

    std::vector<std::optional<ActionType>> inferred(actions_.size());
    FormulaPtr goal_acc;

    for (const auto& s : statements_) {
        if (!s.condition) {
            throw DomainError("statement without condition formula");
        }
        if (s.is_action_scoped()) {
            if (s.action >= actions_.size()) {
                throw DomainError("statement references unknown action index");
            }
            if (auto kind = effect_kind(s)) {
                auto& slot = inferred[s.action];
                if (slot && *slot != *kind) {
                    throw DomainError("action '" + actions_[s.action].name +
                                      "' mixes effect kinds (causes/determines/announces)");
                }
                slot = *kind;
            }
            if (s.kind == StatementKind::Announces &&
                (!s.announced || !s.announced->is_fluent_formula())) {
                throw DomainError("announced formula of action '" + actions_[s.action].name +
                                  "' must be a fluent formula");
            }
            actions_[s.action].statements.push_back(s);
        } else if (s.kind == StatementKind::Initially) {
            initially_.push_back(s.formula);
        } else {
            goal_acc = goal_acc ? Formula::conj(goal_acc, s.formula) : s.formula;
        }
    }

    for (std::uint32_t i = 0; i < actions_.size(); ++i) {
        if (!inferred[i]) {
            throw DomainError("action '" + actions_[i].name +
                              "' has no effect statement (causes, determines or announces)");
        }
        actions_[i].type = *inferred[i];
    }

    goal_ = goal_acc ? goal_acc : Formula::truth();
}

std::optional<std::uint32_t> Domain::action_index(const std::string& name) const {
    auto it = action_index_.find(name);
    if (it == action_index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::string Domain::to_text() const {
    std::ostringstream out;
    out << "fluent";
    for (std::size_t i = 0; i < sig_->fluent_names.size(); ++i) {
        out << (i ? ", " : " ") << sig_->fluent_names[i];
    }
    out << ";\n";
    out << "agent";
    for (std::size_t i = 0; i < sig_->agent_names.size(); ++i) {
        out << (i ? ", " : " ") << sig_->agent_names[i];
    }
    out << ";\n";
    if (!actions_.empty()) {
        out << "action";
        for (std::size_t i = 0; i < actions_.size(); ++i) {
            out << (i ? ", " : " ") << actions_[i].name;
        }
        out << ";\n";
    }

    auto emit_condition = [&](const Statement& s) {
        if (s.condition->kind() != Connective::True) {
            out << " if " << format_formula(*s.condition, *sig_);
        }
    };

    for (const auto& s : statements_) {
        switch (s.kind) {
        case StatementKind::Executable:
            out << "executable " << actions_[s.action].name << " if "
                << format_formula(*s.condition, *sig_);
            break;
        case StatementKind::Causes:
            out << actions_[s.action].name << " causes ";
            if (!s.effect_literal.positive) {
                out << "not ";
            }
            out << sig_->fluent_name(s.effect_literal.fluent);
            emit_condition(s);
            break;
        case StatementKind::Determines:
            out << actions_[s.action].name << " determines " << sig_->fluent_name(s.sensed_fluent);
            emit_condition(s);
            break;
        case StatementKind::Announces:
            out << actions_[s.action].name << " announces "
                << format_formula(*s.announced, *sig_);
            emit_condition(s);
            break;
        case StatementKind::Observes:
        case StatementKind::AwareOf:
            out << sig_->agent_name(s.observer) << ' ' << statement_keyword(s.kind) << ' '
                << actions_[s.action].name;
            emit_condition(s);
            break;
        case StatementKind::Initially:
        case StatementKind::Goal:
            out << statement_keyword(s.kind) << ' ' << format_formula(*s.formula, *sig_);
            break;
        }
        out << ";\n";
    }
    return out.str();
}

bool Domain::operator==(const Domain& other) const {
    if (*sig_ != *other.sig_) {
        return false;
    }
    if (actions_.size() != other.actions_.size() ||
        statements_.size() != other.statements_.size()) {
        return false;
    }
    for (std::size_t i = 0; i < actions_.size(); ++i) {
        if (actions_[i].name != other.actions_[i].name ||
            actions_[i].type != other.actions_[i].type) {
            return false;
        }
    }
    for (std::size_t i = 0; i < statements_.size(); ++i) {
        if (!statements_equivalent(statements_[i], other.statements_[i])) {
            return false;
        }
    }
    return true;
}

} // namespace eplan
