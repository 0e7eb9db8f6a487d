#pragma once

#include "eplan/vocabulary.hpp"

#include <memory>
#include <string>
#include <vector>

namespace eplan {

enum class Connective {
    True,
    False,
    Atom,
    Not,
    And,
    Or,
    Believes, // B(ag, phi)
    Everyone, // E([ags], phi)
    Common    // C([ags], phi)
};

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

/// Immutable belief-formula node. Fluent formulas are the modal-free
/// fragment (modal_depth() == 0).
class Formula {
public:
    static FormulaPtr truth();
    static FormulaPtr falsity();
    static FormulaPtr atom(Fluent f);
    static FormulaPtr literal(Literal lit);
    static FormulaPtr negate(FormulaPtr phi);
    static FormulaPtr conj(FormulaPtr lhs, FormulaPtr rhs);
    static FormulaPtr disj(FormulaPtr lhs, FormulaPtr rhs);
    static FormulaPtr believes(Agent ag, FormulaPtr phi);
    static FormulaPtr everyone(AgentSet group, FormulaPtr phi); // group non-empty
    static FormulaPtr common(AgentSet group, FormulaPtr phi);   // group non-empty

    [[nodiscard]] Connective kind() const { return kind_; }
    [[nodiscard]] Fluent atom_fluent() const { return fluent_; }
    [[nodiscard]] Agent agent() const { return agent_; }
    [[nodiscard]] const AgentSet& group() const { return group_; }
    [[nodiscard]] const FormulaPtr& lhs() const { return lhs_; }
    [[nodiscard]] const FormulaPtr& rhs() const { return rhs_; }

    /// Maximum nesting of B/E/C operators.
    [[nodiscard]] int modal_depth() const { return modal_depth_; }
    [[nodiscard]] bool is_fluent_formula() const { return modal_depth_ == 0; }

private:
    Formula() = default;

    Connective kind_ = Connective::True;
    Fluent fluent_{};
    Agent agent_{};
    AgentSet group_;
    FormulaPtr lhs_;
    FormulaPtr rhs_;
    int modal_depth_ = 0;
};

/// Structural equality (no normalization: `not not f` differs from `f`).
bool formulas_equal(const FormulaPtr& a, const FormulaPtr& b);

/// Renders with minimal parentheses; `not` binds tighter than `and`,
/// which binds tighter than `or`. Inverse of the statement grammar.
std::string format_formula(const Formula& formula, const Signature& sig);

/// Evaluates a fluent formula against a single valuation (bit per fluent
/// id). Throws std::logic_error on a modal node.
bool eval_propositional(const Formula& formula, const std::vector<bool>& valuation);

/// Collects every fluent mentioned in the formula into `out` (dedup by id).
void collect_fluents(const Formula& formula, std::vector<bool>& out);

} // namespace eplan
