#include "eplan/action.hpp"

#include <map>

namespace eplan {

std::vector<ActionInstance> ground_action_instances(const Domain& domain) {
    std::vector<ActionInstance> instances;
    instances.reserve(domain.actions().size());

    for (const auto& entry : domain.actions()) {
        FormulaPtr executability;
        std::vector<Effect> effects;
        std::map<std::pair<std::uint32_t, bool>, FormulaPtr> obs; // (agent, fully) -> condition

        for (const Statement& s : entry.statements) {
            switch (s.kind) {
            case StatementKind::Executable:
                executability =
                    executability ? Formula::conj(executability, s.condition) : s.condition;
                break;
            case StatementKind::Causes:
                effects.push_back(Effect{s.effect_literal, {}, nullptr, s.condition});
                break;
            case StatementKind::Determines:
                effects.push_back(Effect{{}, s.sensed_fluent, nullptr, s.condition});
                break;
            case StatementKind::Announces:
                effects.push_back(Effect{{}, {}, s.announced, s.condition});
                break;
            case StatementKind::Observes:
            case StatementKind::AwareOf: {
                const bool fully = s.kind == StatementKind::Observes;
                auto key = std::make_pair(s.observer.id, fully);
                auto it = obs.find(key);
                if (it == obs.end()) {
                    obs.emplace(key, s.condition);
                } else {
                    it->second = Formula::disj(it->second, s.condition);
                }
                break;
            }
            case StatementKind::Initially:
            case StatementKind::Goal:
                break;
            }
        }

        std::vector<ObservabilityEntry> observability;
        observability.reserve(obs.size());
        for (const auto& [key, condition] : obs) {
            observability.push_back(ObservabilityEntry{
                Agent{key.first},
                key.second ? ObservabilityClass::Fully : ObservabilityClass::Partially,
                condition});
        }

        instances.emplace_back(entry.name, entry.type,
                               executability ? executability : Formula::truth(),
                               std::move(effects), std::move(observability));
    }
    return instances;
}

} // namespace eplan
