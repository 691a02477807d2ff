#ifndef FOURPAGE_CLI_COMMANDS_HPP
#define FOURPAGE_CLI_COMMANDS_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "fourpage/binding.hpp"
#include "fourpage/cli/fixtures.hpp"
#include "fourpage/cli/report.hpp"
#include "fourpage/error.hpp"
#include "fourpage/ribbon.hpp"

namespace fourpage::cli {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int failed = 1;  // verification or invariant failure
inline constexpr int usage = 2;
inline constexpr int parse = 3;
inline constexpr int split = 4;
inline constexpr int not_reduced = 5;
inline constexpr int collapse = 6;
inline constexpr int cap = 7;
inline constexpr int other = 8;
}  // namespace exit_code

// Input problems collapse to "ParseError"; everything else keeps its kind.
std::string error_category(ErrorKind kind);
int exit_code_for(ErrorKind kind);

// `default`, `random`, `random:<seed>`, `strict` or `auto`. A bare `random`
// takes its seed from `env_seed` (FOURPAGE_TREE_SEED), else 0.
std::optional<PipelineOptions> parse_tree_option(std::string_view text,
                                                 std::optional<std::uint64_t> env_seed = {});

struct AnalyzeOptions {
    PipelineOptions pipeline;
    bool componentwise = false;
    double epsilon = 0.01;
};

struct Analysis {
    Report report;
    std::vector<Alpha4Result> parts;  // one per component, or just one
    std::vector<RibbonPlan> plans;
};

// Runs the pipeline on a loaded fixture. Library errors are caught and stored
// in the report; `error_kind` tells which one.
Analysis analyze(const KnotFixture& fx, const AnalyzeOptions& options,
                 std::optional<ErrorKind>* error_kind = nullptr);

struct OracleOptions {
    enum class Mode { all_trees, states } mode = Mode::all_trees;
    std::size_t cap = 100000;
    std::optional<int> unshaded_face;
};

struct OracleResult {
    std::string name;
    std::string mode;
    int crossings = 0;
    int trees = 0;
    int trees_passed = 0;
    std::vector<std::string> failures;
    // states mode only
    long states = 0;
    long single_circle_states = 0;
    long single_circle_spanning = 0;  // single-circle states whose set is a spanning tree
    bool formula_agrees = true;        // circles = 2k(A) + |A| - |V| for every state

    bool ok() const { return failures.empty(); }
};

// Exhaustive certification over every spanning tree and, in states mode,
// over all 2^c smoothings. Throws CapExceeded.
OracleResult run_oracle(const Diagram& d, const std::string& name, const OracleOptions& options);
Json oracle_json(const OracleResult& r);

// Entry point of the `fourpage` executable.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fourpage::cli

#endif  // FOURPAGE_CLI_COMMANDS_HPP
