#ifndef FOURPAGE_CLI_REPORT_HPP
#define FOURPAGE_CLI_REPORT_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fourpage/binding.hpp"
#include "fourpage/serialize.hpp"

namespace fourpage::cli {

struct ComponentSummary {
    int crossings = 0;
    int arcs = 0;
    std::string tree_strategy;
    std::vector<int> tree_edges;
    std::vector<EdgeLabel> removed;
    bool verified = false;
};

struct Report {
    std::string name;
    int crossings = 0;
    bool nonsplit = false;
    bool reduced = false;
    bool alternating = false;
    int link_components = 0;

    std::string tree_strategy;
    std::vector<int> tree_edges;
    bool strictness_attempted = false;
    bool strictness_not_forced = false;

    int binding_points = 0;  // arc count of the produced presentation
    int two_c = 0;
    bool strict = false;
    std::vector<EdgeLabel> removed;

    int alpha4_bound = 0;
    int rib_bound = 0;
    double epsilon = 0.0;
    double rib_length = 0.0;

    std::optional<int> known_arc_index;
    std::optional<bool> arc_index_consistent;

    VerifyReport verification;
    std::vector<ComponentSummary> components;  // filled in componentwise mode

    std::map<std::string, double> timings_ms;

    std::optional<std::string> error_category;
    std::optional<std::string> error_message;

    bool ok() const { return !error_category && verification.ok(); }
};

inline constexpr const char* kReportSchema = "fourpage.report/1";
inline constexpr const char* kBatchSchema = "fourpage.batch/1";
inline constexpr const char* kOracleSchema = "fourpage.oracle/1";

// Timings are left out unless asked for so that repeated runs are identical.
Json report_json(const Report& r, bool with_timings);
std::string report_text(const Report& r, bool with_timings);

}  // namespace fourpage::cli

#endif  // FOURPAGE_CLI_REPORT_HPP
