#pragma once

#include "eplan/domain.hpp"

#include <vector>

namespace eplan {

/// One conditional effect. Which payload field is meaningful follows the
/// action type: Ontic -> literal, Sensing -> sensed, Announcement ->
/// announced.
struct Effect {
    Literal literal{};
    Fluent sensed{};
    FormulaPtr announced;
    FormulaPtr condition;
};

enum class ObservabilityClass { Fully, Partially };

struct ObservabilityEntry {
    Agent agent{};
    ObservabilityClass cls = ObservabilityClass::Fully;
    FormulaPtr condition; // conditions of repeated statements are or-ed
};

/// A ground action ready for application: type, executability condition
/// (conjunction of its executable statements, true when absent), effects
/// in declaration order, and at most one observability entry per
/// (agent, class) pair.
class ActionInstance {
public:
    ActionInstance(std::string name, ActionType type, FormulaPtr executability,
                   std::vector<Effect> effects, std::vector<ObservabilityEntry> observability)
        : name_(std::move(name)),
          type_(type),
          executability_(std::move(executability)),
          effects_(std::move(effects)),
          observability_(std::move(observability)) {}

    [[nodiscard]] const std::string& name() const { return name_; }
    [[nodiscard]] ActionType type() const { return type_; }
    [[nodiscard]] const FormulaPtr& executability() const { return executability_; }
    [[nodiscard]] const std::vector<Effect>& effects() const { return effects_; }
    [[nodiscard]] const std::vector<ObservabilityEntry>& observability() const {
        return observability_;
    }

private:
    std::string name_;
    ActionType type_;
    FormulaPtr executability_;
    std::vector<Effect> effects_;
    std::vector<ObservabilityEntry> observability_;
};

/// One instance per declared action, in declaration order.
std::vector<ActionInstance> ground_action_instances(const Domain& domain);

} // namespace eplan
