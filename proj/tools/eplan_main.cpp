#include "eplan/action.hpp"
#include "eplan/canonical.hpp"
#include "eplan/dot.hpp"
#include "eplan/parser.hpp"
#include "eplan/planner.hpp"
#include "eplan/report.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitPlan = 0;
constexpr int kExitNoPlan = 1;
constexpr int kExitError = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// Writes the e-states along the plan, one DOT file per step.
void write_dot_trace(const eplan::Domain& domain, const eplan::PlanResult& result,
                     const std::string& dir) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    const auto instances = eplan::ground_action_instances(domain);
    auto [state, report] = eplan::build_initial_state(domain, eplan::classify_initially(domain));
    eplan::EState current = eplan::canonicalize(state).state;

    auto write_step = [&](std::size_t index, const eplan::EState& s) {
        char name[32];
        std::snprintf(name, sizeof(name), "step_%03zu.dot", index);
        std::ofstream out(fs::path(dir) / name, std::ios::binary);
        out << eplan::export_dot(s);
    };
    write_step(0, current);

    const auto* plan = std::get_if<eplan::Plan>(&result);
    if (!plan) {
        return;
    }
    std::size_t index = 1;
    for (const std::string& step : plan->steps) {
        const auto action = domain.action_index(step);
        auto next = eplan::apply(current, instances[*action]);
        if (!next) {
            throw std::runtime_error("plan replay failed at step '" + step + "'");
        }
        current = std::move(*next);
        write_step(index++, current);
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multi-agent epistemic planner over possibility-based e-states"};

    std::string input_path;
    eplan::SearchConfig config;
    bool no_visited = false;
    std::string output_format = "text";
    bool show_stats = false;
    std::string dot_dir;
    bool trace = false;

    app.add_option("input", input_path, "domain description file")->required();
    app.add_option("--max-horizon", config.max_horizon, "largest plan length to search")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    app.add_flag("--no-visited", no_visited, "disable the visited-state check");
    app.add_flag("--all-plans", config.all_plans, "report every shortest plan");
    app.add_option("--output", output_format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_flag("--stats", show_stats, "print search statistics");
    app.add_option("--dot", dot_dir, "directory for per-step e-state graphs");
    app.add_flag("--trace", trace, "print each horizon to stderr");

    CLI11_PARSE(app, argc, argv);

    config.visited_check = !no_visited;
    if (trace) {
        config.on_horizon = [](int horizon, std::size_t frontier_size) {
            std::cerr << "horizon " << horizon << ": frontier " << frontier_size << "\n";
        };
    }
    config.warn = [](const std::string& message) {
        std::cerr << "warning: " << message << "\n";
    };

    try {
        const std::string text = read_file(input_path);

        const auto t_setup = std::chrono::steady_clock::now();
        const eplan::Domain domain = eplan::parse_domain(text);
        // Surface bad initial conditions as setup diagnostics even though
        // plan_bfs would rebuild this state itself.
        eplan::build_initial_state(domain, eplan::classify_initially(domain));
        const double setup_ms = std::chrono::duration<double, std::milli>(
                                    std::chrono::steady_clock::now() - t_setup)
                                    .count();

        const eplan::PlanResult result = eplan::plan_bfs(domain, config);

        if (!dot_dir.empty()) {
            write_dot_trace(domain, result, dot_dir);
        }
        if (output_format == "json") {
            std::cout << eplan::result_to_json(result, setup_ms) << "\n";
        } else {
            std::cout << eplan::result_to_text(result, setup_ms, show_stats);
        }
        return std::holds_alternative<eplan::Plan>(result) ? kExitPlan : kExitNoPlan;
    } catch (const eplan::ParseError& e) {
        std::cerr << input_path << ":" << e.what() << "\n";
        return kExitError;
    } catch (const eplan::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
}
