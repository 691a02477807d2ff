#include "fourpage/cli/report.hpp"

#include <sstream>

namespace fourpage::cli {

Json report_json(const Report& r, bool with_timings) {
    Json j;
    j["schema"] = kReportSchema;
    j["name"] = r.name;
    if (r.error_category) {
        j["error"] = {{"category", *r.error_category}, {"message", r.error_message.value_or("")}};
        return j;
    }
    j["crossings"] = r.crossings;
    j["predicates"] = {{"nonsplit", r.nonsplit}, {"reduced", r.reduced}, {"alternating", r.alternating}};
    j["link_components"] = r.link_components;
    j["tree"] = {{"strategy", r.tree_strategy},
                 {"edges", r.tree_edges},
                 {"strictness_attempted", r.strictness_attempted},
                 {"strictness_not_forced", r.strictness_not_forced}};
    j["binding_points"] = r.binding_points;
    j["arcs"] = r.binding_points;
    j["two_c"] = r.two_c;
    j["strict"] = r.strict;
    j["removed_binding_points"] = r.removed;
    j["bounds"] = {{"alpha4_upper", r.alpha4_bound},
                   {"rib_upper", r.rib_bound},
                   {"epsilon", r.epsilon},
                   {"ribbon_length", r.rib_length}};
    j["known"] = Json::object();
    if (r.known_arc_index) {
        j["known"]["arc_index"] = *r.known_arc_index;
        j["known"]["arc_index_consistent"] = r.arc_index_consistent.value_or(false);
    }
    j["verification"] = r.verification;
    if (!r.components.empty()) {
        Json comps = Json::array();
        for (const auto& c : r.components) {
            comps.push_back({{"crossings", c.crossings},
                             {"arcs", c.arcs},
                             {"tree_strategy", c.tree_strategy},
                             {"tree_edges", c.tree_edges},
                             {"removed_binding_points", c.removed},
                             {"verified", c.verified}});
        }
        j["components"] = std::move(comps);
    }
    if (with_timings) j["timings_ms"] = r.timings_ms;
    return j;
}

namespace {

const char* yes_no(bool b) { return b ? "yes" : "no"; }
const char* pass_fail(bool b) { return b ? "pass" : "FAIL"; }

}  // namespace

std::string report_text(const Report& r, bool with_timings) {
    std::ostringstream out;
    out << "diagram " << r.name << '\n';
    if (r.error_category) {
        out << "  error            " << *r.error_category << ": " << r.error_message.value_or("")
            << '\n';
        return out.str();
    }
    out << "  crossings        " << r.crossings << '\n'
        << "  non-split        " << yes_no(r.nonsplit) << '\n'
        << "  reduced          " << yes_no(r.reduced) << '\n'
        << "  alternating      " << yes_no(r.alternating) << '\n'
        << "  link components  " << r.link_components << '\n'
        << "  tree             " << r.tree_strategy << '\n'
        << "  binding points   " << r.binding_points << " (2c = " << r.two_c << ")\n"
        << "  strict           " << yes_no(r.strict) << '\n';
    if (!r.removed.empty()) {
        out << "  removed points  ";
        for (EdgeLabel e : r.removed) out << ' ' << e;
        out << '\n';
    }
    out << "  alpha4 <=        " << r.alpha4_bound << '\n'
        << "  Rib <=           " << r.rib_bound << " (length " << r.rib_length << " at epsilon "
        << r.epsilon << ")\n";
    if (r.known_arc_index) {
        out << "  arc index        " << *r.known_arc_index << " ("
            << (r.arc_index_consistent.value_or(false) ? "consistent" : "INCONSISTENT") << ")\n";
    }
    const auto& v = r.verification;
    out << "  condition 1      " << pass_fail(v.condition1) << '\n'
        << "  condition 2      " << pass_fail(v.condition2) << '\n'
        << "  condition 3      " << pass_fail(v.condition3) << '\n'
        << "  sides nonempty   " << pass_fail(v.sides_nonempty) << '\n'
        << "  pages noncrossing " << pass_fail(v.noncrossing_per_page) << '\n';
    for (const auto& p : v.problems) out << "  problem: " << p << '\n';
    if (with_timings) {
        for (const auto& [stage, ms] : r.timings_ms) out << "  time " << stage << ": " << ms << " ms\n";
    }
    return out.str();
}

}  // namespace fourpage::cli
