#include "eplan/estate.hpp"

#include <algorithm>
#include <unordered_map>

namespace eplan {

std::size_t EState::edge_count() const {
    std::size_t n = 0;
    for (const auto& per_world : successors_) {
        for (const auto& succ : per_world) {
            n += succ.size();
        }
    }
    return n;
}

bool EState::operator==(const EState& other) const {
    return pointed_ == other.pointed_ && valuations_ == other.valuations_ &&
           successors_ == other.successors_ &&
           (sig_ == other.sig_ || *sig_ == *other.sig_);
}

EStateBuilder::EStateBuilder(SignaturePtr sig) : sig_(std::move(sig)) {
    if (!sig_) {
        throw DomainError("e-state requires a signature");
    }
}

WorldId EStateBuilder::add_world(Valuation valuation) {
    if (valuation.size() != sig_->fluent_count()) {
        throw DomainError("world valuation does not cover every fluent");
    }
    valuations_.push_back(std::move(valuation));
    successors_.emplace_back(sig_->agent_count());
    return static_cast<WorldId>(valuations_.size() - 1);
}

void EStateBuilder::add_edge(WorldId from, Agent agent, WorldId to) {
    if (from >= valuations_.size() || to >= valuations_.size()) {
        throw DomainError("edge endpoint is not a world");
    }
    if (agent.id >= sig_->agent_count()) {
        throw DomainError("edge label is not an agent");
    }
    successors_[from][agent.id].push_back(to);
}

void EStateBuilder::set_pointed(WorldId w) {
    if (w >= valuations_.size()) {
        throw DomainError("pointed world is not a world");
    }
    pointed_ = w;
    pointed_set_ = true;
}

EState EStateBuilder::build() const {
    if (!pointed_set_) {
        throw DomainError("e-state has no pointed world");
    }

    // Reachability from the pointed world over all labels.
    const WorldId none = static_cast<WorldId>(-1);
    std::vector<WorldId> remap(valuations_.size(), none);
    std::vector<WorldId> order;
    order.push_back(pointed_);
    remap[pointed_] = 0;
    for (std::size_t head = 0; head < order.size(); ++head) {
        const WorldId w = order[head];
        for (const auto& succ : successors_[w]) {
            for (WorldId v : succ) {
                if (remap[v] == none) {
                    remap[v] = static_cast<WorldId>(order.size());
                    order.push_back(v);
                }
            }
        }
    }

    // Renumbering is stable in original id order, with the pointed world
    // simply kept; sort the survivor list back to input order.
    std::vector<WorldId> survivors(order.begin(), order.end());
    std::sort(survivors.begin(), survivors.end());
    for (std::size_t i = 0; i < survivors.size(); ++i) {
        remap[survivors[i]] = static_cast<WorldId>(i);
    }

    EState s;
    s.sig_ = sig_;
    s.pointed_ = remap[pointed_];
    s.valuations_.reserve(survivors.size());
    s.successors_.reserve(survivors.size());
    for (WorldId old : survivors) {
        s.valuations_.push_back(valuations_[old]);
        std::vector<std::vector<WorldId>> per_agent;
        per_agent.reserve(sig_->agent_count());
        for (const auto& succ : successors_[old]) {
            std::vector<WorldId> mapped;
            mapped.reserve(succ.size());
            for (WorldId v : succ) {
                mapped.push_back(remap[v]);
            }
            std::sort(mapped.begin(), mapped.end());
            mapped.erase(std::unique(mapped.begin(), mapped.end()), mapped.end());
            per_agent.push_back(std::move(mapped));
        }
        s.successors_.push_back(std::move(per_agent));
    }
    return s;
}

std::vector<WorldId> reaches(const EState& s, WorldId w, const AgentSet& group) {
    if (group.empty()) {
        throw DomainError("reaches requires a non-empty agent set");
    }
    std::vector<bool> reached(s.world_count(), false);
    std::vector<WorldId> queue;
    auto push_successors = [&](WorldId from) {
        for (Agent ag : group) {
            for (WorldId v : s.successors(from, ag)) {
                if (!reached[v]) {
                    reached[v] = true;
                    queue.push_back(v);
                }
            }
        }
    };
    push_successors(w); // seed with length-1 paths; w joins only via a cycle
    for (std::size_t head = 0; head < queue.size(); ++head) {
        push_successors(queue[head]);
    }
    std::sort(queue.begin(), queue.end());
    return queue;
}

namespace {

class Evaluator {
public:
    explicit Evaluator(const EState& s) : s_(s) {}

    bool eval(WorldId w, const Formula& f) {
        switch (f.kind()) {
        case Connective::True:
            return true;
        case Connective::False:
            return false;
        case Connective::Atom:
            return s_.valuation(w)[f.atom_fluent().id];
        case Connective::Not:
            return !eval(w, *f.lhs());
        case Connective::And:
            return eval(w, *f.lhs()) && eval(w, *f.rhs());
        case Connective::Or:
            return eval(w, *f.lhs()) || eval(w, *f.rhs());
        case Connective::Believes:
        case Connective::Everyone:
        case Connective::Common:
            return modal(w, f);
        }
        return false;
    }

private:
    bool modal(WorldId w, const Formula& f) {
        const auto key = std::make_pair(&f, w);
        if (auto it = memo_.find(key); it != memo_.end()) {
            return it->second;
        }
        bool result = true;
        switch (f.kind()) {
        case Connective::Believes:
            for (WorldId v : s_.successors(w, f.agent())) {
                if (!eval(v, *f.lhs())) {
                    result = false;
                    break;
                }
            }
            break;
        case Connective::Everyone:
            for (Agent ag : f.group()) {
                for (WorldId v : s_.successors(w, ag)) {
                    if (!eval(v, *f.lhs())) {
                        result = false;
                        break;
                    }
                }
                if (!result) {
                    break;
                }
            }
            break;
        case Connective::Common:
            for (WorldId v : reaches(s_, w, f.group())) {
                if (!eval(v, *f.lhs())) {
                    result = false;
                    break;
                }
            }
            break;
        default:
            break;
        }
        memo_.emplace(key, result);
        return result;
    }

    struct KeyHash {
        std::size_t operator()(const std::pair<const Formula*, WorldId>& k) const {
            return std::hash<const Formula*>()(k.first) * 1000003u + k.second;
        }
    };

    const EState& s_;
    std::unordered_map<std::pair<const Formula*, WorldId>, bool, KeyHash> memo_;
};

} // namespace

bool entails(const EState& s, WorldId w, const Formula& formula) {
    if (w >= s.world_count()) {
        throw DomainError("entails: world id out of range");
    }
    Evaluator ev(s);
    return ev.eval(w, formula);
}

bool entails(const EState& s, const Formula& formula) {
    return entails(s, s.pointed(), formula);
}

bool is_serial(const EState& s, Agent ag) {
    for (WorldId w = 0; w < s.world_count(); ++w) {
        if (s.successors(w, ag).empty()) {
            return false;
        }
    }
    return true;
}

bool is_transitive(const EState& s, Agent ag) {
    for (WorldId w = 0; w < s.world_count(); ++w) {
        const auto& direct = s.successors(w, ag);
        for (WorldId v : direct) {
            for (WorldId u : s.successors(v, ag)) {
                if (!std::binary_search(direct.begin(), direct.end(), u)) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool is_euclidean(const EState& s, Agent ag) {
    for (WorldId w = 0; w < s.world_count(); ++w) {
        const auto& direct = s.successors(w, ag);
        for (WorldId v : direct) {
            const auto& from_v = s.successors(v, ag);
            for (WorldId u : direct) {
                if (!std::binary_search(from_v.begin(), from_v.end(), u)) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool is_reflexive(const EState& s, Agent ag) {
    for (WorldId w = 0; w < s.world_count(); ++w) {
        const auto& direct = s.successors(w, ag);
        if (!std::binary_search(direct.begin(), direct.end(), w)) {
            return false;
        }
    }
    return true;
}

bool is_symmetric(const EState& s, Agent ag) {
    for (WorldId w = 0; w < s.world_count(); ++w) {
        for (WorldId v : s.successors(w, ag)) {
            const auto& back = s.successors(v, ag);
            if (!std::binary_search(back.begin(), back.end(), w)) {
                return false;
            }
        }
    }
    return true;
}

bool is_kd45(const EState& s) {
    for (std::uint32_t a = 0; a < s.signature()->agent_count(); ++a) {
        const Agent ag{a};
        if (!is_serial(s, ag) || !is_transitive(s, ag) || !is_euclidean(s, ag)) {
            return false;
        }
    }
    return true;
}

bool is_s5(const EState& s) {
    for (std::uint32_t a = 0; a < s.signature()->agent_count(); ++a) {
        const Agent ag{a};
        if (!is_reflexive(s, ag) || !is_transitive(s, ag) || !is_symmetric(s, ag)) {
            return false;
        }
    }
    return true;
}

} // namespace eplan
