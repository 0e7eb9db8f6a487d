#include "eplan/classify.hpp"

#include <optional>

namespace eplan {

namespace {

std::optional<Literal> match_literal(const Formula& f) {
    if (f.kind() == Connective::Atom) {
        return Literal{f.atom_fluent(), true};
    }
    if (f.kind() == Connective::Not && f.lhs()->kind() == Connective::Atom) {
        return Literal{f.lhs()->atom_fluent(), false};
    }
    return std::nullopt;
}

// B(i, psi) with psi a fluent formula.
struct BeliefAtom {
    Agent agent;
    FormulaPtr psi;
};

std::optional<BeliefAtom> match_belief(const FormulaPtr& f) {
    if (f->kind() == Connective::Believes && f->lhs()->is_fluent_formula()) {
        return BeliefAtom{f->agent(), f->lhs()};
    }
    return std::nullopt;
}

// Accepts psi / not psi in either argument order; returns the positive side.
std::optional<FormulaPtr> complementary(const FormulaPtr& a, const FormulaPtr& b) {
    if (b->kind() == Connective::Not && formulas_equal(b->lhs(), a)) {
        return a;
    }
    if (a->kind() == Connective::Not && formulas_equal(a->lhs(), b)) {
        return b;
    }
    return std::nullopt;
}

// C(B(i,psi) or B(i,not psi))
std::optional<ClassifiedInitially> match_type4(const FormulaPtr& payload) {
    if (payload->kind() != Connective::Or) {
        return std::nullopt;
    }
    auto left = match_belief(payload->lhs());
    auto right = match_belief(payload->rhs());
    if (!left || !right || left->agent != right->agent) {
        return std::nullopt;
    }
    auto psi = complementary(left->psi, right->psi);
    if (!psi) {
        return std::nullopt;
    }
    ClassifiedInitially out;
    out.type = 4;
    out.agent = left->agent;
    out.psi = *psi;
    return out;
}

// C(not B(i,psi) and not B(i,not psi))
std::optional<ClassifiedInitially> match_type5(const FormulaPtr& payload) {
    if (payload->kind() != Connective::And || payload->lhs()->kind() != Connective::Not ||
        payload->rhs()->kind() != Connective::Not) {
        return std::nullopt;
    }
    auto left = match_belief(payload->lhs()->lhs());
    auto right = match_belief(payload->rhs()->lhs());
    if (!left || !right || left->agent != right->agent) {
        return std::nullopt;
    }
    auto psi = complementary(left->psi, right->psi);
    if (!psi) {
        return std::nullopt;
    }
    ClassifiedInitially out;
    out.type = 5;
    out.agent = left->agent;
    out.psi = *psi;
    return out;
}

} // namespace

InitialClassification classify_initially(const Domain& domain) {
    const Signature& sig = *domain.signature();
    const AgentSet everyone = sig.all_agents();
    InitialClassification result;
    result.known.assign(sig.fluent_count(), std::nullopt);

    std::vector<bool> covered(sig.fluent_count(), false); // by a type 2-4 formula

    for (const FormulaPtr& formula : domain.initially()) {
        ClassifiedInitially entry;
        entry.formula = formula;

        if (formula->is_fluent_formula()) {
            entry.type = 1;
            entry.psi = formula;
            result.entries.push_back(std::move(entry));
            continue;
        }

        if (formula->kind() != Connective::Common) {
            throw DomainError("initial condition '" + format_formula(*formula, sig) +
                              "' is not in the restricted initial-state grammar");
        }
        if (formula->group() != everyone) {
            throw DomainError("initial condition '" + format_formula(*formula, sig) +
                              "' must use the full agent set under C");
        }
        const FormulaPtr& payload = formula->lhs();

        if (auto lit = match_literal(*payload)) {
            entry.type = 2;
            entry.known_literal = *lit;
            auto& slot = result.known[lit->fluent.id];
            if (slot.has_value() && *slot != lit->positive) {
                throw DomainError("contradictory initial values for fluent '" +
                                  sig.fluent_name(lit->fluent) + "'");
            }
            slot = lit->positive;
            covered[lit->fluent.id] = true;
        } else if (payload->is_fluent_formula()) {
            entry.type = 3;
            entry.psi = payload;
            collect_fluents(*payload, covered);
        } else if (auto t4 = match_type4(payload)) {
            entry = std::move(*t4);
            entry.formula = formula;
            collect_fluents(*entry.psi, covered);
        } else if (auto t5 = match_type5(payload)) {
            entry = std::move(*t5);
            entry.formula = formula;
        } else {
            throw DomainError("initial condition '" + format_formula(*formula, sig) +
                              "' is not in the restricted initial-state grammar");
        }
        result.entries.push_back(std::move(entry));
    }

    for (std::uint32_t f = 0; f < sig.fluent_count(); ++f) {
        if (!covered[f]) {
            throw DomainError("fluent '" + sig.fluent_names[f] +
                              "' occurs in no initial condition of the known/known-whether "
                              "forms (C of a literal, C of a formula, or C of B-or-B)");
        }
        if (!result.known[f].has_value()) {
            result.unknown.push_back(Fluent{f});
        }
    }
    return result;
}

} // namespace eplan
