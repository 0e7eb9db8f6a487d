#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace eplan {

/// Index of a propositional fluent within a domain's signature.
struct Fluent {
    std::uint32_t id = 0;
    auto operator<=>(const Fluent&) const = default;
};

/// Index of an agent within a domain's signature.
struct Agent {
    std::uint32_t id = 0;
    auto operator<=>(const Agent&) const = default;
};

/// Sorted, duplicate-free set of agents. Kept as a vector for cheap
/// iteration; use make_agent_set to normalize arbitrary input.
using AgentSet = std::vector<Agent>;

AgentSet make_agent_set(std::vector<Agent> agents);
bool agent_set_contains(const AgentSet& set, Agent agent);
bool agent_set_subset(const AgentSet& small, const AgentSet& big);

/// A possibly negated fluent.
struct Literal {
    Fluent fluent;
    bool positive = true;
    auto operator<=>(const Literal&) const = default;
};

/// Name tables shared by every value derived from one domain. Fluent and
/// agent ids index into these vectors.
struct Signature {
    std::vector<std::string> fluent_names;
    std::vector<std::string> agent_names;

    [[nodiscard]] std::size_t fluent_count() const { return fluent_names.size(); }
    [[nodiscard]] std::size_t agent_count() const { return agent_names.size(); }
    [[nodiscard]] const std::string& fluent_name(Fluent f) const { return fluent_names.at(f.id); }
    [[nodiscard]] const std::string& agent_name(Agent a) const { return agent_names.at(a.id); }
    [[nodiscard]] AgentSet all_agents() const;

    bool operator==(const Signature&) const = default;
};

using SignaturePtr = std::shared_ptr<const Signature>;

/// Error in the content of a domain: failed validation, classification,
/// state construction or action application.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& message) : std::runtime_error(message) {}
};

/// Syntax or name-resolution error, with 1-based source position.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& message)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {}

    [[nodiscard]] int line() const { return line_; }
    [[nodiscard]] int column() const { return column_; }

private:
    int line_;
    int column_;
};

} // namespace eplan
