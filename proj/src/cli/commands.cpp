#include "fourpage/cli/commands.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "fourpage/cli/svg.hpp"
#include "fourpage/serialize.hpp"

namespace fourpage::cli {

namespace fs = std::filesystem;

std::string error_category(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::MalformedRecord:
        case ErrorKind::LabelCountError:
        case ErrorKind::EmptyDiagram:
        case ErrorKind::NonPlanarTrace:
            return "ParseError";
        default:
            return std::string(to_string(kind));
    }
}

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::MalformedRecord:
        case ErrorKind::LabelCountError:
        case ErrorKind::EmptyDiagram:
        case ErrorKind::NonPlanarTrace:
            return exit_code::parse;
        case ErrorKind::SplitDiagram: return exit_code::split;
        case ErrorKind::NotReduced: return exit_code::not_reduced;
        case ErrorKind::ComponentCollapse: return exit_code::collapse;
        case ErrorKind::CapExceeded: return exit_code::cap;
        case ErrorKind::NonPositiveEpsilon: return exit_code::usage;
        default: return exit_code::other;
    }
}

std::optional<PipelineOptions> parse_tree_option(std::string_view text,
                                                 std::optional<std::uint64_t> env_seed) {
    PipelineOptions o;
    if (text == "auto") {
        o.tree = TreeChoice::automatic;
    } else if (text == "default") {
        o.tree = TreeChoice::standard;
    } else if (text == "strict") {
        o.tree = TreeChoice::strict;
    } else if (text == "random") {
        o.tree = TreeChoice::random;
        o.seed = env_seed.value_or(0);
    } else if (text.starts_with("random:")) {
        o.tree = TreeChoice::random;
        auto digits = text.substr(7);
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), o.seed);
        if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size()) {
            return std::nullopt;
        }
    } else {
        return std::nullopt;
    }
    return o;
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::optional<std::uint64_t> env_seed() {
    const char* v = std::getenv("FOURPAGE_TREE_SEED");
    if (!v || !*v) return std::nullopt;
    std::uint64_t seed = 0;
    auto [ptr, ec] = std::from_chars(v, v + std::char_traits<char>::length(v), seed);
    if (ec != std::errc{} || *ptr != '\0') return std::nullopt;
    return seed;
}

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write " + path.string());
    file << text;
}

// "8_10" sorts after "8_9".
bool natural_less(const std::string& a, const std::string& b) {
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() && j < b.size()) {
        if (std::isdigit(static_cast<unsigned char>(a[i])) &&
            std::isdigit(static_cast<unsigned char>(b[j]))) {
            std::size_t i2 = i;
            std::size_t j2 = j;
            while (i2 < a.size() && std::isdigit(static_cast<unsigned char>(a[i2]))) ++i2;
            while (j2 < b.size() && std::isdigit(static_cast<unsigned char>(b[j2]))) ++j2;
            const auto na = std::stoull(a.substr(i, i2 - i));
            const auto nb = std::stoull(b.substr(j, j2 - j));
            if (na != nb) return na < nb;
            i = i2;
            j = j2;
        } else {
            if (a[i] != b[j]) return a[i] < b[j];
            ++i;
            ++j;
        }
    }
    return a.size() - i < b.size() - j;
}

VerifyReport merge_reports(const std::vector<VerifyReport>& reports) {
    VerifyReport all{true, true, true, true, true, {}};
    for (const auto& r : reports) {
        all.condition1 = all.condition1 && r.condition1;
        all.condition2 = all.condition2 && r.condition2;
        all.condition3 = all.condition3 && r.condition3;
        all.sides_nonempty = all.sides_nonempty && r.sides_nonempty;
        all.noncrossing_per_page = all.noncrossing_per_page && r.noncrossing_per_page;
        all.problems.insert(all.problems.end(), r.problems.begin(), r.problems.end());
    }
    return all;
}

void set_error(Report& r, ErrorKind kind, const std::string& message,
               std::optional<ErrorKind>* out) {
    r.error_category = error_category(kind);
    r.error_message = *r.error_category == to_string(kind)
                          ? message
                          : std::string(to_string(kind)) + ": " + message;
    if (out) *out = kind;
}

Json analysis_json(const Analysis& a, bool with_timings) {
    Json j = report_json(a.report, with_timings);
    if (a.report.error_category) return j;
    Json presentations = Json::array();
    Json ribbons = Json::array();
    Json pages = Json::array();
    for (std::size_t i = 0; i < a.parts.size(); ++i) {
        presentations.push_back(a.parts[i].presentation);
        ribbons.push_back(a.plans[i]);
        const auto map = page_assignment(a.parts[i].presentation);
        pages.push_back(map.per_page);
    }
    if (a.parts.size() == 1) {
        j["presentation"] = presentations[0];
        j["ribbon"] = ribbons[0];
        j["arcs_per_page"] = pages[0];
    } else {
        j["presentations"] = std::move(presentations);
        j["ribbons"] = std::move(ribbons);
        j["arcs_per_page"] = std::move(pages);
    }
    return j;
}

fs::path with_suffix(const fs::path& path, const std::string& suffix) {
    fs::path out = path;
    out.replace_filename(path.stem().string() + suffix + path.extension().string());
    return out;
}

// Writes presentation and ribbon SVGs; several parts get numbered files.
std::vector<fs::path> write_svgs(const Analysis& a, const fs::path& base) {
    std::vector<fs::path> written;
    for (std::size_t i = 0; i < a.parts.size(); ++i) {
        const std::string part = a.parts.size() > 1 ? "-part" + std::to_string(i + 1) : "";
        const fs::path pres = with_suffix(base, part);
        const fs::path rib = with_suffix(base, part + "-ribbon");
        write_text(pres, presentation_svg(a.parts[i].presentation));
        write_text(rib, ribbon_svg(ribbon_schematic(a.plans[i])));
        written.push_back(pres);
        written.push_back(rib);
    }
    return written;
}

int report_exit(const Analysis& a, std::optional<ErrorKind> kind) {
    if (kind) return exit_code_for(*kind);
    return a.report.ok() && a.report.arc_index_consistent.value_or(true) ? exit_code::ok
                                                                          : exit_code::failed;
}

// Loads a fixture; on failure fills the report and returns nullopt.
std::optional<KnotFixture> load(const fs::path& path, Report& r, std::optional<ErrorKind>& kind) {
    try {
        return load_fixture(path);
    } catch (const Error& e) {
        set_error(r, e.kind(), e.what(), &kind);
    } catch (const std::exception& e) {
        r.error_category = "ParseError";
        r.error_message = e.what();
        kind = ErrorKind::MalformedRecord;
    }
    if (r.name.empty()) r.name = path.stem().string();
    return std::nullopt;
}

struct SharedFlags {
    std::string tree = "auto";
    double epsilon = 0.01;
    std::optional<int> unshaded_face;
    bool componentwise = false;
    bool timings = false;
};

std::optional<AnalyzeOptions> analyze_options(const SharedFlags& f, std::ostream& err) {
    auto pipeline = parse_tree_option(f.tree, env_seed());
    if (!pipeline) {
        err << "error[Usage]: --tree expects default, random[:seed], strict or auto\n";
        return std::nullopt;
    }
    if (!(f.epsilon > 0.0)) {
        err << "error[NonPositiveEpsilon]: --epsilon must be positive\n";
        return std::nullopt;
    }
    pipeline->unshaded_face = f.unshaded_face;
    return AnalyzeOptions{*pipeline, f.componentwise, f.epsilon};
}

void add_shared_flags(CLI::App* sub, SharedFlags& f) {
    sub->add_option("--tree", f.tree, "default | random[:seed] | strict | auto")
        ->capture_default_str();
    sub->add_option("--epsilon", f.epsilon, "ribbon connection slack")->capture_default_str();
    sub->add_option("--unshaded-face", f.unshaded_face, "face id to leave unshaded");
    sub->add_flag("--componentwise", f.componentwise, "process split components separately");
    sub->add_flag("--timings", f.timings, "include stage timings in the report");
}

int cmd_analyze(const fs::path& path, const SharedFlags& flags, const std::string& json_out,
                const std::string& svg_out, std::ostream& out, std::ostream& err) {
    auto options = analyze_options(flags, err);
    if (!options) return exit_code::usage;

    Analysis a;
    std::optional<ErrorKind> kind;
    const auto start = Clock::now();
    auto fx = load(path, a.report, kind);
    if (fx) {
        a = analyze(*fx, *options, &kind);
        a.report.timings_ms["parse"] = 0.0;
        a.report.timings_ms["total"] = ms_since(start);
    }
    if (a.report.error_category) {
        err << "error[" << *a.report.error_category << "]: " << a.report.error_message.value_or("")
            << '\n';
    }
    const Json j = analysis_json(a, flags.timings);
    if (json_out == "-") {
        out << j.dump(2) << '\n';
    } else {
        out << report_text(a.report, flags.timings);
        if (!json_out.empty()) write_text(json_out, j.dump(2) + "\n");
    }
    if (!svg_out.empty() && !a.report.error_category) write_svgs(a, svg_out);
    return report_exit(a, kind);
}

int cmd_verify(const fs::path& path, const SharedFlags& flags, const std::string& json_out,
               std::ostream& out, std::ostream& err) {
    std::string text;
    {
        std::ifstream in(path);
        if (!in) {
            err << "error[ParseError]: cannot read " << path.string() << '\n';
            return exit_code::parse;
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    std::vector<VerifyReport> reports;
    std::string name = path.stem().string();
    try {
        Json doc;
        bool is_presentation = false;
        if (auto first = text.find_first_not_of(" \t\r\n");
            first != std::string::npos && text[first] == '{') {
            doc = Json::parse(text);
            is_presentation = doc.value("schema", std::string{}) == kPresentationSchema;
        }
        if (is_presentation) {
            const CircularPresentation p = presentation_from_json(doc);
            if (!p.source.name.empty()) name = p.source.name;
            reports.push_back(verify(p));
        } else {
            auto options = analyze_options(flags, err);
            if (!options) return exit_code::usage;
            const KnotFixture fx = load_fixture(path);
            name = fx.name;
            const auto parts = options->componentwise
                                   ? alpha4_componentwise(fx.diagram, options->pipeline)
                                   : std::vector<Alpha4Result>{
                                         alpha4_upper_bound(fx.diagram, options->pipeline)};
            for (const auto& part : parts) reports.push_back(verify(part.presentation));
        }
    } catch (const Error& e) {
        Report r;
        set_error(r, e.kind(), e.what(), nullptr);
        err << "error[" << *r.error_category << "]: " << *r.error_message << '\n';
        return exit_code_for(e.kind());
    } catch (const Json::exception& e) {
        err << "error[ParseError]: " << e.what() << '\n';
        return exit_code::parse;
    }
    const VerifyReport r = merge_reports(reports);
    Json j = r;
    j["name"] = name;
    if (json_out == "-") {
        out << j.dump(2) << '\n';
    } else {
        out << "verify " << name << '\n'
            << "  condition 1       " << (r.condition1 ? "pass" : "FAIL") << '\n'
            << "  condition 2       " << (r.condition2 ? "pass" : "FAIL") << '\n'
            << "  condition 3       " << (r.condition3 ? "pass" : "FAIL") << '\n'
            << "  sides nonempty    " << (r.sides_nonempty ? "pass" : "FAIL") << '\n'
            << "  pages noncrossing " << (r.noncrossing_per_page ? "pass" : "FAIL") << '\n';
        for (const auto& p : r.problems) out << "  problem: " << p << '\n';
        if (!json_out.empty()) write_text(json_out, j.dump(2) + "\n");
    }
    return r.ok() ? exit_code::ok : exit_code::failed;
}

int cmd_render(const fs::path& path, const SharedFlags& flags, const std::string& prefix,
               std::ostream& out, std::ostream& err) {
    auto options = analyze_options(flags, err);
    if (!options) return exit_code::usage;
    Analysis a;
    std::optional<ErrorKind> kind;
    auto fx = load(path, a.report, kind);
    if (fx) a = analyze(*fx, *options, &kind);
    if (a.report.error_category) {
        err << "error[" << *a.report.error_category << "]: " << a.report.error_message.value_or("")
            << '\n';
        return report_exit(a, kind);
    }
    const fs::path base = (prefix.empty() ? path.stem().string() : prefix) + ".svg";
    for (const auto& written : write_svgs(a, base)) out << "wrote " << written.string() << '\n';
    return report_exit(a, kind);
}

struct BatchRow {
    Report report;
    std::optional<ErrorKind> kind;
};

int cmd_batch(const fs::path& dir, const SharedFlags& flags, const std::string& json_out,
              int jobs, std::ostream& out, std::ostream& err) {
    auto options = analyze_options(flags, err);
    if (!options) return exit_code::usage;
    if (!fs::is_directory(dir)) {
        err << "error[ParseError]: not a directory: " << dir.string() << '\n';
        return exit_code::parse;
    }
    const auto files = fixture_files(dir);
    std::vector<BatchRow> rows(files.size());

    auto work = [&](std::size_t i) {
        const auto start = Clock::now();
        BatchRow& row = rows[i];
        if (auto fx = load(files[i], row.report, row.kind)) {
            row.report = analyze(*fx, *options, &row.kind).report;
        }
        row.report.timings_ms["total"] = ms_since(start);
    };
    const std::size_t threads =
        std::clamp<std::size_t>(jobs > 0 ? static_cast<std::size_t>(jobs) : 1, 1, files.size() + 1);
    if (threads <= 1) {
        for (std::size_t i = 0; i < files.size(); ++i) work(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < threads; ++t) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < files.size(); i = next++) work(i);
            });
        }
        for (auto& th : pool) th.join();
    }
    std::stable_sort(rows.begin(), rows.end(), [](const BatchRow& a, const BatchRow& b) {
        return natural_less(a.report.name, b.report.name);
    });

    int analyzed = 0;
    int errors = 0;
    int failed = 0;
    std::optional<int> min_gap;
    std::optional<int> min_gap_strict;
    bool bound_holds = true;
    bool strict_holds = true;
    for (const auto& row : rows) {
        const Report& r = row.report;
        if (r.error_category) {
            ++errors;
            continue;
        }
        ++analyzed;
        const int gap = r.two_c - r.binding_points;
        min_gap = std::min(min_gap.value_or(gap), gap);
        bound_holds = bound_holds && gap >= 0;
        if (r.strictness_attempted && !r.strictness_not_forced) {
            min_gap_strict = std::min(min_gap_strict.value_or(gap), gap);
            strict_holds = strict_holds && gap >= 1;
        }
        if (!r.verification.ok() || !r.arc_index_consistent.value_or(true)) ++failed;
    }
    const bool invariants = bound_holds && strict_holds && failed == 0;

    if (json_out == "-" || !json_out.empty()) {
        Json j;
        j["schema"] = kBatchSchema;
        j["rows"] = Json::array();
        for (const auto& row : rows) j["rows"].push_back(report_json(row.report, flags.timings));
        j["summary"] = {{"rows", rows.size()},
                        {"analyzed", analyzed},
                        {"errors", errors},
                        {"verification_failures", failed},
                        {"min_gap", min_gap ? Json(*min_gap) : Json(nullptr)},
                        {"min_gap_strict", min_gap_strict ? Json(*min_gap_strict) : Json(nullptr)},
                        {"invariants_hold", invariants}};
        if (json_out == "-") {
            out << j.dump(2) << '\n';
        } else {
            write_text(json_out, j.dump(2) + "\n");
        }
    }
    if (json_out != "-") {
        out << std::left << std::setw(10) << "name" << std::right << std::setw(4) << "c"
            << std::setw(5) << "alt" << std::setw(6) << "arcs" << std::setw(5) << "2c"
            << std::setw(8) << "strict" << std::setw(7) << "alpha" << std::setw(5) << "rib"
            << "  status\n";
        for (const auto& row : rows) {
            const Report& r = row.report;
            out << std::left << std::setw(10) << r.name << std::right;
            if (r.error_category) {
                out << std::setw(4) << '-' << std::setw(5) << '-' << std::setw(6) << '-'
                    << std::setw(5) << '-' << std::setw(8) << '-' << std::setw(7) << '-'
                    << std::setw(5) << '-' << "  " << *r.error_category << '\n';
                continue;
            }
            out << std::setw(4) << r.crossings << std::setw(5) << (r.alternating ? "yes" : "no")
                << std::setw(6) << r.binding_points << std::setw(5) << r.two_c << std::setw(8)
                << (r.strict ? "yes" : "no") << std::setw(7)
                << (r.known_arc_index ? std::to_string(*r.known_arc_index) : "-") << std::setw(5)
                << r.rib_bound << "  " << (r.ok() && r.arc_index_consistent.value_or(true) ? "ok" : "FAIL")
                << '\n';
            if (flags.timings) out << "          time " << r.timings_ms.at("total") << " ms\n";
        }
        out << "rows " << rows.size() << ", analyzed " << analyzed << ", errors " << errors
            << ", verification failures " << failed << '\n';
        if (min_gap) out << "min(2c - arcs) = " << *min_gap << '\n';
        if (min_gap_strict) out << "min(2c - arcs) over strict rows = " << *min_gap_strict << '\n';
        out << "invariants " << (invariants ? "hold" : "VIOLATED") << '\n';
    }
    return invariants ? exit_code::ok : exit_code::failed;
}

int cmd_oracle(const fs::path& path, const std::string& mode, std::size_t cap,
               std::optional<int> unshaded_face, const std::string& json_out, std::ostream& out,
               std::ostream& err) {
    OracleOptions options;
    options.mode = mode == "states" ? OracleOptions::Mode::states : OracleOptions::Mode::all_trees;
    options.cap = cap;
    options.unshaded_face = unshaded_face;
    OracleResult r;
    try {
        const KnotFixture fx = load_fixture(path);
        r = run_oracle(fx.diagram, fx.name, options);
    } catch (const Error& e) {
        Report r;
        set_error(r, e.kind(), e.what(), nullptr);
        err << "error[" << *r.error_category << "]: " << *r.error_message << '\n';
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        err << "error[ParseError]: " << e.what() << '\n';
        return exit_code::parse;
    }
    const Json j = oracle_json(r);
    if (json_out == "-") {
        out << j.dump(2) << '\n';
    } else {
        out << "oracle " << r.name << " (" << r.mode << ")\n"
            << "  trees passed     " << r.trees_passed << '/' << r.trees << '\n';
        if (options.mode == OracleOptions::Mode::states) {
            out << "  states traced    " << r.states << '\n'
                << "  single-circle    " << r.single_circle_states << " ("
                << r.single_circle_spanning << " spanning trees)\n"
                << "  circle formula   " << (r.formula_agrees ? "agrees" : "DISAGREES") << '\n';
        }
        for (const auto& f : r.failures) out << "  failure: " << f << '\n';
        if (!json_out.empty()) write_text(json_out, j.dump(2) + "\n");
    }
    return r.ok() ? exit_code::ok : exit_code::failed;
}

int find(std::vector<int>& parent, int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
}

// Number of connected components of (V, A).
int component_count(const TaitGraph& g, const std::vector<int>& subset) {
    std::vector<int> parent(g.vertex_count());
    std::iota(parent.begin(), parent.end(), 0);
    int count = g.vertex_count();
    for (int x : subset) {
        int a = find(parent, g.edges[x].u);
        int b = find(parent, g.edges[x].v);
        if (a != b) {
            parent[a] = b;
            --count;
        }
    }
    return count;
}

}  // namespace

Analysis analyze(const KnotFixture& fx, const AnalyzeOptions& options,
                 std::optional<ErrorKind>* error_kind) {
    Analysis a;
    Report& r = a.report;
    r.name = fx.name;
    r.epsilon = options.epsilon;
    const Diagram& d = fx.diagram;
    try {
        auto start = Clock::now();
        r.crossings = d.crossing_count();
        r.two_c = 2 * r.crossings;
        const FaceSet faces = compute_faces(d);
        r.nonsplit = is_nonsplit(d);
        r.reduced = is_reduced(d, faces);
        r.alternating = is_alternating(d);
        r.link_components = link_component_count(d);
        r.timings_ms["predicates"] = ms_since(start);

        start = Clock::now();
        if (options.componentwise) {
            a.parts = alpha4_componentwise(d, options.pipeline);
        } else {
            a.parts.push_back(alpha4_upper_bound(d, options.pipeline));
        }
        r.timings_ms["pipeline"] = ms_since(start);

        start = Clock::now();
        std::vector<VerifyReport> reports;
        for (auto& part : a.parts) {
            part.presentation.source.name = fx.name;
            reports.push_back(verify(part.presentation));
        }
        r.verification = merge_reports(reports);
        r.timings_ms["verify"] = ms_since(start);

        start = Clock::now();
        int connections = 0;
        for (const auto& part : a.parts) {
            a.plans.push_back(ribbon_plan(part.presentation));
            connections += static_cast<int>(a.plans.back().connections.size());
        }
        r.timings_ms["ribbon"] = ms_since(start);

        for (const auto& part : a.parts) {
            r.binding_points += part.arcs;
            r.strictness_attempted = r.strictness_attempted || part.strictness_attempted;
            r.strictness_not_forced = r.strictness_not_forced || part.tree.strictness_not_forced;
            r.removed.insert(r.removed.end(), part.presentation.source.removed.begin(),
                             part.presentation.source.removed.end());
        }
        r.strict = r.binding_points < r.two_c;
        r.alpha4_bound = r.binding_points;
        if (a.parts.size() == 1) {
            r.tree_strategy = a.parts[0].tree.strategy;
            r.tree_edges = a.parts[0].tree.edges;
            const RibbonBound b = ribbon_bound(a.plans[0], options.epsilon);
            r.rib_bound = b.bound;
            r.rib_length = b.length;
        } else {
            r.tree_strategy = "componentwise";
            r.rib_bound = r.binding_points;
            r.rib_length = r.binding_points + connections * options.epsilon;
            for (std::size_t i = 0; i < a.parts.size(); ++i) {
                const auto& part = a.parts[i];
                r.components.push_back({part.crossings, part.arcs, part.tree.strategy,
                                        part.tree.edges, part.presentation.source.removed,
                                        reports[i].ok()});
            }
        }
        if (fx.known.arc_index) {
            r.known_arc_index = fx.known.arc_index;
            r.arc_index_consistent = r.binding_points >= *fx.known.arc_index;
        }
    } catch (const Error& e) {
        a.parts.clear();
        a.plans.clear();
        set_error(r, e.kind(), e.what(), error_kind);
    }
    return a;
}

OracleResult run_oracle(const Diagram& d, const std::string& name, const OracleOptions& options) {
    OracleResult r;
    r.name = name;
    r.mode = options.mode == OracleOptions::Mode::states ? "states" : "all-trees";
    r.crossings = d.crossing_count();
    const int c = d.crossing_count();
    if (options.mode == OracleOptions::Mode::states && c > 12) {
        throw Error(ErrorKind::CapExceeded, "states mode needs at most 12 crossings, got " +
                                                std::to_string(c));
    }
    const FaceSet faces = compute_faces(d);
    const Shading shading = checkerboard(d, faces, options.unshaded_face);
    const TaitGraph g = build_tait(d, faces, shading);
    const TreeEnumeration all = enumerate_spanning_trees(g, options.cap);
    if (all.truncated) {
        throw Error(ErrorKind::CapExceeded,
                    "more than " + std::to_string(options.cap) + " spanning trees");
    }
    const bool alternating = is_alternating(d);
    r.trees = static_cast<int>(all.trees.size());
    for (const SpanningTree& t : all.trees) {
        std::ostringstream tag;
        tag << "tree {";
        for (std::size_t i = 0; i < t.edges.size(); ++i) tag << (i ? "," : "") << t.edges[i];
        tag << "}: ";
        try {
            const StateCircles circles = trace_circles(d, kauffman_state(g, t));
            if (circles.count() != 1) {
                r.failures.push_back(tag.str() + std::to_string(circles.count()) + " circles");
                continue;
            }
            const EulerTour tour = euler_tour(circles, t);
            std::vector<EdgeLabel> seen = tour.edges;
            std::sort(seen.begin(), seen.end());
            if (tour.length() != 2 * c || seen != d.edges()) {
                r.failures.push_back(tag.str() + "tour does not cover every edge once");
                continue;
            }
            CircularPresentation p = build_presentation(d, tour);
            if (alternating && !verify(p).ok()) {
                r.failures.push_back(tag.str() + "unrepaired presentation fails verification");
                continue;
            }
            p = repair_nonalternating(p);
            const VerifyReport v = verify(p);
            if (!v.ok()) {
                r.failures.push_back(tag.str() + "verification failed");
                continue;
            }
            if (p.arc_count() > 2 * c) {
                r.failures.push_back(tag.str() + "more than 2c arcs");
                continue;
            }
            ++r.trees_passed;
        } catch (const Error& e) {
            r.failures.push_back(tag.str() + std::string(to_string(e.kind())) + ": " + e.what());
        }
    }

    if (options.mode == OracleOptions::Mode::states) {
        std::vector<std::vector<int>> tree_sets;
        for (const auto& t : all.trees) tree_sets.push_back(t.edges);
        const int v = g.vertex_count();
        for (std::uint32_t mask = 0; mask < (1u << c); ++mask) {
            std::vector<int> subset;
            for (int x = 0; x < c; ++x) {
                if (mask & (1u << x)) subset.push_back(x);
            }
            const int count = trace_circles(d, state_from_subset(g, subset)).count();
            ++r.states;
            const int k = component_count(g, subset);
            if (count != 2 * k + static_cast<int>(subset.size()) - v) r.formula_agrees = false;
            const bool spanning = k == 1 && static_cast<int>(subset.size()) == v - 1;
            const bool is_tree =
                std::binary_search(tree_sets.begin(), tree_sets.end(), subset);
            if (spanning != is_tree) {
                r.failures.push_back("state " + std::to_string(mask) +
                                     ": spanning-tree enumeration disagrees");
            }
            if (count == 1) {
                ++r.single_circle_states;
                if (spanning) ++r.single_circle_spanning;
            }
            if (is_tree && count != 1) {
                r.failures.push_back("tree state " + std::to_string(mask) + " has " +
                                     std::to_string(count) + " circles");
            }
        }
        if (!r.formula_agrees) r.failures.push_back("circle count formula disagrees");
        if (r.single_circle_spanning != r.trees) {
            r.failures.push_back("tree states are not all single-circle states");
        }
    }
    return r;
}

Json oracle_json(const OracleResult& r) {
    Json j{{"schema", kOracleSchema},
           {"name", r.name},
           {"mode", r.mode},
           {"crossings", r.crossings},
           {"trees", r.trees},
           {"trees_passed", r.trees_passed},
           {"failures", r.failures},
           {"ok", r.ok()}};
    if (r.mode == "states") {
        j["states"] = r.states;
        j["single_circle_states"] = r.single_circle_states;
        j["single_circle_spanning_trees"] = r.single_circle_spanning;
        j["circle_formula_agrees"] = r.formula_agrees;
    }
    return j;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Four-page presentations of knot and link diagrams", "fourpage"};
    app.require_subcommand(1);

    SharedFlags flags;
    std::string path;
    std::string json_out;
    std::string svg_out;
    std::string prefix;
    std::string mode = "all-trees";
    std::size_t cap = 100000;
    int jobs = 1;

    auto* analyze_cmd = app.add_subcommand("analyze", "run the pipeline and report bounds");
    analyze_cmd->add_option("path", path, "diagram file (PD text or JSON)")->required();
    add_shared_flags(analyze_cmd, flags);
    analyze_cmd->add_option("--json", json_out, "write the JSON report here ('-' for stdout)");
    analyze_cmd->add_option("--svg", svg_out, "write presentation and ribbon SVGs");

    auto* verify_cmd = app.add_subcommand("verify", "check a presentation JSON or a diagram");
    verify_cmd->add_option("path", path, "presentation JSON or diagram file")->required();
    add_shared_flags(verify_cmd, flags);
    verify_cmd->add_option("--json", json_out, "write the JSON verdict here ('-' for stdout)");

    auto* render_cmd = app.add_subcommand("render", "write presentation and ribbon SVGs");
    render_cmd->add_option("path", path, "diagram file")->required();
    add_shared_flags(render_cmd, flags);
    render_cmd->add_option("--output-prefix", prefix, "output path without extension");

    auto* batch_cmd = app.add_subcommand("batch", "analyze every fixture in a directory");
    batch_cmd->add_option("dir", path, "fixture directory")->required();
    add_shared_flags(batch_cmd, flags);
    batch_cmd->add_option("--json", json_out, "write the JSON table here ('-' for stdout)");
    batch_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

    auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive check over trees or states");
    oracle_cmd->add_option("path", path, "diagram file")->required();
    oracle_cmd->add_option("--mode", mode, "all-trees | states")
        ->check(CLI::IsMember({"all-trees", "states"}))
        ->capture_default_str();
    oracle_cmd->add_option("--cap", cap, "maximum number of spanning trees")->capture_default_str();
    oracle_cmd->add_option("--unshaded-face", flags.unshaded_face, "face id to leave unshaded");
    oracle_cmd->add_option("--json", json_out, "write the JSON result here ('-' for stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_code::ok : exit_code::usage;
    }

    try {
        if (*analyze_cmd) return cmd_analyze(path, flags, json_out, svg_out, out, err);
        if (*verify_cmd) return cmd_verify(path, flags, json_out, out, err);
        if (*render_cmd) return cmd_render(path, flags, prefix, out, err);
        if (*batch_cmd) return cmd_batch(path, flags, json_out, jobs, out, err);
        if (*oracle_cmd) {
            return cmd_oracle(path, mode, cap, flags.unshaded_face, json_out, out, err);
        }
    } catch (const std::exception& e) {
        err << "error[IOError]: " << e.what() << '\n';
        return exit_code::other;
    }
    return exit_code::usage;
}

}  // namespace fourpage::cli
