#include "eplan/formula.hpp"

#include <algorithm>
#include <stdexcept>

namespace eplan {

AgentSet make_agent_set(std::vector<Agent> agents) {
    std::sort(agents.begin(), agents.end());
    agents.erase(std::unique(agents.begin(), agents.end()), agents.end());
    return agents;
}

bool agent_set_contains(const AgentSet& set, Agent agent) {
    return std::binary_search(set.begin(), set.end(), agent);
}

bool agent_set_subset(const AgentSet& small, const AgentSet& big) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

AgentSet Signature::all_agents() const {
    AgentSet all;
    all.reserve(agent_names.size());
    for (std::uint32_t i = 0; i < agent_names.size(); ++i) {
        all.push_back(Agent{i});
    }
    return all;
}

namespace {

FormulaPtr make_node(Formula&& node) {
    return std::make_shared<Formula>(std::move(node));
}

} // namespace

FormulaPtr Formula::truth() {
    static const FormulaPtr instance = [] {
        Formula node;
        node.kind_ = Connective::True;
        return make_node(std::move(node));
    }();
    return instance;
}

FormulaPtr Formula::falsity() {
    static const FormulaPtr instance = [] {
        Formula node;
        node.kind_ = Connective::False;
        return make_node(std::move(node));
    }();
    return instance;
}

FormulaPtr Formula::atom(Fluent f) {
    Formula node;
    node.kind_ = Connective::Atom;
    node.fluent_ = f;
    return make_node(std::move(node));
}

FormulaPtr Formula::literal(Literal lit) {
    FormulaPtr base = atom(lit.fluent);
    return lit.positive ? base : negate(std::move(base));
}

FormulaPtr Formula::negate(FormulaPtr phi) {
    Formula node;
    node.kind_ = Connective::Not;
    node.modal_depth_ = phi->modal_depth();
    node.lhs_ = std::move(phi);
    return make_node(std::move(node));
}

FormulaPtr Formula::conj(FormulaPtr lhs, FormulaPtr rhs) {
    Formula node;
    node.kind_ = Connective::And;
    node.modal_depth_ = std::max(lhs->modal_depth(), rhs->modal_depth());
    node.lhs_ = std::move(lhs);
    node.rhs_ = std::move(rhs);
    return make_node(std::move(node));
}

FormulaPtr Formula::disj(FormulaPtr lhs, FormulaPtr rhs) {
    Formula node;
    node.kind_ = Connective::Or;
    node.modal_depth_ = std::max(lhs->modal_depth(), rhs->modal_depth());
    node.lhs_ = std::move(lhs);
    node.rhs_ = std::move(rhs);
    return make_node(std::move(node));
}

FormulaPtr Formula::believes(Agent ag, FormulaPtr phi) {
    Formula node;
    node.kind_ = Connective::Believes;
    node.agent_ = ag;
    node.modal_depth_ = phi->modal_depth() + 1;
    node.lhs_ = std::move(phi);
    return make_node(std::move(node));
}

FormulaPtr Formula::everyone(AgentSet group, FormulaPtr phi) {
    if (group.empty()) {
        throw DomainError("group operator E requires a non-empty agent set");
    }
    Formula node;
    node.kind_ = Connective::Everyone;
    node.group_ = make_agent_set(std::move(group));
    node.modal_depth_ = phi->modal_depth() + 1;
    node.lhs_ = std::move(phi);
    return make_node(std::move(node));
}

FormulaPtr Formula::common(AgentSet group, FormulaPtr phi) {
    if (group.empty()) {
        throw DomainError("group operator C requires a non-empty agent set");
    }
    Formula node;
    node.kind_ = Connective::Common;
    node.group_ = make_agent_set(std::move(group));
    node.modal_depth_ = phi->modal_depth() + 1;
    node.lhs_ = std::move(phi);
    return make_node(std::move(node));
}

bool formulas_equal(const FormulaPtr& a, const FormulaPtr& b) {
    if (a == b) {
        return true;
    }
    if (!a || !b || a->kind() != b->kind()) {
        return false;
    }
    switch (a->kind()) {
    case Connective::True:
    case Connective::False:
        return true;
    case Connective::Atom:
        return a->atom_fluent() == b->atom_fluent();
    case Connective::Not:
        return formulas_equal(a->lhs(), b->lhs());
    case Connective::And:
    case Connective::Or:
        return formulas_equal(a->lhs(), b->lhs()) && formulas_equal(a->rhs(), b->rhs());
    case Connective::Believes:
        return a->agent() == b->agent() && formulas_equal(a->lhs(), b->lhs());
    case Connective::Everyone:
    case Connective::Common:
        return a->group() == b->group() && formulas_equal(a->lhs(), b->lhs());
    }
    return false;
}

namespace {

// Precedence: or (1) < and (2) < not (3) < primary (4).
int precedence(Connective kind) {
    switch (kind) {
    case Connective::Or:
        return 1;
    case Connective::And:
        return 2;
    case Connective::Not:
        return 3;
    default:
        return 4;
    }
}

void format_into(const Formula& f, const Signature& sig, int parent_prec, std::string& out) {
    const int prec = precedence(f.kind());
    const bool parens = prec < parent_prec;
    if (parens) {
        out += '(';
    }
    switch (f.kind()) {
    case Connective::True:
        out += "true";
        break;
    case Connective::False:
        out += "false";
        break;
    case Connective::Atom:
        out += sig.fluent_name(f.atom_fluent());
        break;
    case Connective::Not:
        out += "not ";
        format_into(*f.lhs(), sig, prec + 1, out);
        break;
    case Connective::And:
        format_into(*f.lhs(), sig, prec, out);
        out += " and ";
        format_into(*f.rhs(), sig, prec + 1, out);
        break;
    case Connective::Or:
        format_into(*f.lhs(), sig, prec, out);
        out += " or ";
        format_into(*f.rhs(), sig, prec + 1, out);
        break;
    case Connective::Believes:
        out += "B(";
        out += sig.agent_name(f.agent());
        out += ", ";
        format_into(*f.lhs(), sig, 0, out);
        out += ')';
        break;
    case Connective::Everyone:
    case Connective::Common:
        out += f.kind() == Connective::Everyone ? "E([" : "C([";
        for (std::size_t i = 0; i < f.group().size(); ++i) {
            if (i > 0) {
                out += ", ";
            }
            out += sig.agent_name(f.group()[i]);
        }
        out += "], ";
        format_into(*f.lhs(), sig, 0, out);
        out += ')';
        break;
    }
    if (parens) {
        out += ')';
    }
}

} // namespace

std::string format_formula(const Formula& formula, const Signature& sig) {
    std::string out;
    format_into(formula, sig, 0, out);
    return out;
}

bool eval_propositional(const Formula& formula, const std::vector<bool>& valuation) {
    switch (formula.kind()) {
    case Connective::True:
        return true;
    case Connective::False:
        return false;
    case Connective::Atom:
        return valuation.at(formula.atom_fluent().id);
    case Connective::Not:
        return !eval_propositional(*formula.lhs(), valuation);
    case Connective::And:
        return eval_propositional(*formula.lhs(), valuation) &&
               eval_propositional(*formula.rhs(), valuation);
    case Connective::Or:
        return eval_propositional(*formula.lhs(), valuation) ||
               eval_propositional(*formula.rhs(), valuation);
    default:
        throw std::logic_error("eval_propositional: modal operator in fluent formula");
    }
}

void collect_fluents(const Formula& formula, std::vector<bool>& out) {
    switch (formula.kind()) {
    case Connective::True:
    case Connective::False:
        return;
    case Connective::Atom:
        if (formula.atom_fluent().id < out.size()) {
            out[formula.atom_fluent().id] = true;
        }
        return;
    case Connective::Not:
    case Connective::Believes:
    case Connective::Everyone:
    case Connective::Common:
        collect_fluents(*formula.lhs(), out);
        return;
    case Connective::And:
    case Connective::Or:
        collect_fluents(*formula.lhs(), out);
        collect_fluents(*formula.rhs(), out);
        return;
    }
}

} // namespace eplan
