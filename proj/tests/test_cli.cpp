#include "eplan/dot.hpp"
#include "eplan/parser.hpp"
#include "eplan/action.hpp"
#include "eplan/planner.hpp"
#include "eplan/report.hpp"

#include "support/fig1.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

using namespace eplan;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string stdout_text;
};

// Runs the CLI binary and captures stdout.
RunResult run_cli(const std::string& args) {
    const std::string out_path =
        (std::filesystem::temp_directory_path() / "eplan_cli_out.txt").string();
    const std::string command =
        std::string(EPLAN_CLI_PATH) + " " + args + " > " + out_path + " 2>/dev/null";
    const int status = std::system(command.c_str());
    RunResult result;
    result.exit_code = WEXITSTATUS(status);
    std::ifstream in(out_path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    result.stdout_text = buffer.str();
    return result;
}

std::string fixture(const std::string& name) {
    return std::string(EPLAN_FIXTURE_DIR) + "/" + name;
}

std::string write_temp_domain(const std::string& text) {
    const std::string path =
        (std::filesystem::temp_directory_path() / "eplan_cli_domain.epl").string();
    std::ofstream out(path, std::ios::binary);
    out << text;
    return path;
}

} // namespace

TEST_CASE("goal already satisfied: empty plan, exit 0") {
    const std::string path = write_temp_domain(
        "fluent f; agent a; action x; x causes f;"
        "initially C([a], f); goal f;");
    const RunResult r = run_cli(path);
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text == "plan: [] (length 0)\n");
}

TEST_CASE("json output matches the schema and recovers the plan") {
    const std::string path = write_temp_domain(
        "fluent f; agent a; action set;"
        "set causes f; a observes set;"
        "initially C([a], not f); goal C([a], f);");
    const RunResult r = run_cli(path + " --output json");
    CHECK(r.exit_code == 0);
    const auto parsed = nlohmann::json::parse(r.stdout_text);
    CHECK(parsed["plan"] == nlohmann::json::array({"set"}));
    CHECK(parsed["length"] == 1);
    CHECK(parsed["horizons"] == 1);
    CHECK(parsed.contains("states_expanded"));
    CHECK(parsed.contains("states_pruned"));
    CHECK(parsed["time_ms"].contains("setup"));
    CHECK(parsed["time_ms"].contains("search"));
}

TEST_CASE("syntax errors exit with status 2") {
    const std::string path = write_temp_domain("fluent f; agent a; action x; x caused f;");
    const RunResult r = run_cli(path);
    CHECK(r.exit_code == 2);
}

TEST_CASE("missing input file exits with status 2") {
    const RunResult r = run_cli("/nonexistent/nowhere.epl");
    CHECK(r.exit_code == 2);
}

TEST_CASE("bound exhaustion exits with status 1") {
    const std::string path = write_temp_domain(
        "fluent f, g; agent a; action set;"
        "set causes f; a observes set;"
        "initially C([a], not f); initially C([a], not g);"
        "goal g;");
    const RunResult r = run_cli(path + " --max-horizon 3");
    CHECK(r.exit_code == 1);
    CHECK(r.stdout_text.find("no plan found within horizon") != std::string::npos);
}

TEST_CASE("benchmark fixture via the CLI with stats") {
    const RunResult r = run_cli(fixture("coin_in_the_box.epl") + " --stats");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text.find("plan: [") != std::string::npos);
    CHECK(r.stdout_text.find("states_expanded: ") != std::string::npos);
    CHECK(r.stdout_text.find("initial: uk=") != std::string::npos);
}

TEST_CASE("dot trace files are emitted for every step") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "eplan_dot_trace";
    fs::remove_all(dir);
    const std::string path = write_temp_domain(
        "fluent f; agent a; action set;"
        "set causes f; a observes set;"
        "initially C([a], not f); goal C([a], f);");
    const RunResult r = run_cli(path + " --dot " + dir.string());
    CHECK(r.exit_code == 0);
    CHECK(fs::exists(dir / "step_000.dot"));
    CHECK(fs::exists(dir / "step_001.dot"));
    CHECK_FALSE(fs::exists(dir / "step_002.dot"));
}

// --- graph export ------------------------------------------------------

TEST_CASE("single looped world renders with a doubled border") {
    auto sig = std::make_shared<Signature>(Signature{{"f"}, {"a"}});
    EStateBuilder builder(sig);
    builder.add_world({true});
    builder.add_edge(0, Agent{0}, 0);
    builder.set_pointed(0);
    const std::string dot = export_dot(builder.build());
    CHECK(dot.find("w0 [label=\"w0 [f]\", peripheries=2]") != std::string::npos);
    CHECK(dot.find("w0 -> w0 [label=\"a\"]") != std::string::npos);
}

TEST_CASE("cluster state renders four nodes and twenty-four edges") {
    const std::string dot = export_dot(testing::make_fig1_state());
    std::size_t nodes = 0;
    std::size_t edges = 0;
    std::istringstream in(dot);
    std::string line;
    while (std::getline(in, line)) {
        if (line.find("->") != std::string::npos) {
            ++edges;
        } else if (line.find("[label=\"w") != std::string::npos) {
            ++nodes;
        }
    }
    CHECK(nodes == 4);
    CHECK(edges == 24);
}

TEST_CASE("graph export is deterministic") {
    CHECK(export_dot(testing::make_fig1_state()) == export_dot(testing::make_fig1_state()));
}

TEST_CASE("graph export along every benchmark trace is well-formed") {
    const std::regex node_line(R"(  w\d+ \[label="w\d+ \[[a-zA-Z0-9_ ]*\]"(, peripheries=2)?\];)");
    const std::regex edge_line(R"(  w\d+ -> w\d+ \[label="[a-zA-Z_][a-zA-Z0-9_]*"\];)");
    for (const char* name :
         {"coin_in_the_box.epl", "selective_communication.epl", "grapevine.epl",
          "collaboration_communication.epl", "assembly_line.epl"}) {
        CAPTURE(name);
        std::ifstream in(fixture(name), std::ios::binary);
        std::ostringstream buffer;
        buffer << in.rdbuf();
        const Domain d = parse_domain(buffer.str());

        const Plan plan = std::get<Plan>(plan_bfs(d));
        const auto instances = ground_action_instances(d);
        auto [state, report] = build_initial_state(d, classify_initially(d));
        EState current = std::move(state);
        std::vector<EState> trace{current};
        for (const std::string& step : plan.steps) {
            current = *apply(current, instances[*d.action_index(step)]);
            trace.push_back(current);
        }

        for (const EState& s : trace) {
            const std::string dot = export_dot(s);
            std::istringstream lines(dot);
            std::string line;
            std::size_t index = 0;
            std::size_t pointed_nodes = 0;
            bool closed = false;
            while (std::getline(lines, line)) {
                if (index == 0) {
                    CHECK(line == "digraph estate {");
                } else if (index == 1) {
                    CHECK(line == "  rankdir=LR;");
                } else if (line == "}") {
                    closed = true;
                } else {
                    CHECK_FALSE(closed);
                    const bool is_node = std::regex_match(line, node_line);
                    const bool is_edge = std::regex_match(line, edge_line);
                    CHECK_MESSAGE((is_node || is_edge), "unexpected line: ", line);
                    if (is_node && line.find("peripheries=2") != std::string::npos) {
                        ++pointed_nodes;
                    }
                }
                ++index;
            }
            CHECK(closed);
            CHECK(pointed_nodes == 1);
        }
    }
}

TEST_CASE("json rendering is stable modulo time fields") {
    const Domain d = parse_domain(
        "fluent f; agent a; action set;"
        "set causes f; a observes set;"
        "initially C([a], not f); goal C([a], f);");
    const PlanResult r1 = plan_bfs(d);
    const PlanResult r2 = plan_bfs(d);
    CHECK(result_to_json(r1, 0.0, true) == result_to_json(r2, 0.0, true));
}

TEST_CASE("all-plans mode is exposed through the CLI") {
    const std::string path = write_temp_domain(
        "fluent f; agent a; action left, right;"
        "left causes f; a observes left;"
        "right causes f; a observes right;"
        "initially C([a], not f); goal f;");
    const RunResult r = run_cli(path + " --all-plans --output json");
    CHECK(r.exit_code == 0);
    const auto parsed = nlohmann::json::parse(r.stdout_text);
    REQUIRE(parsed.contains("all_plans"));
    CHECK(parsed["all_plans"].size() == 2);
    CHECK(parsed["plan"] == nlohmann::json::array({"left"}));
}

TEST_CASE("no-plan json uses null plan and length") {
    const std::string path = write_temp_domain(
        "fluent f, g; agent a; action set;"
        "set causes f; a observes set;"
        "initially C([a], not f); initially C([a], not g); goal g;");
    const RunResult r = run_cli(path + " --max-horizon 2 --output json");
    CHECK(r.exit_code == 1);
    const auto parsed = nlohmann::json::parse(r.stdout_text);
    CHECK(parsed["plan"].is_null());
    CHECK(parsed["length"].is_null());
    CHECK(parsed["horizons"] == 2);
}
