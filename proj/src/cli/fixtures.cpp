#include "fourpage/cli/fixtures.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "fourpage/error.hpp"
#include "json.hpp"

namespace fourpage::cli {

namespace {

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool looks_like_json(const std::string& text) {
    auto first = text.find_first_not_of(" \t\r\n");
    return first != std::string::npos && text[first] == '{';
}

}  // namespace

KnotFixture load_fixture(const std::filesystem::path& path) {
    const std::string text = slurp(path);
    if (!looks_like_json(text)) {
        return {path.stem().string(), parse_pd(text), {}};
    }

    NamedDiagram named = parse_diagram_json(text);
    KnotFixture fx{named.name.empty() ? path.stem().string() : named.name,
                   std::move(named.diagram), {}};
    const auto doc = nlohmann::json::parse(text);
    if (doc.contains("known") && doc["known"].is_object()) {
        const auto& k = doc["known"];
        if (k.contains("crossing_number")) fx.known.crossing_number = k["crossing_number"].get<int>();
        if (k.contains("arc_index")) fx.known.arc_index = k["arc_index"].get<int>();
        if (k.contains("components")) fx.known.components = k["components"].get<int>();
        if (k.contains("alternating")) fx.known.alternating = k["alternating"].get<bool>();
        fx.known.source = k.value("source", std::string{});
    }
    return fx;
}

std::vector<std::filesystem::path> fixture_files(const std::filesystem::path& dir) {
    std::vector<std::filesystem::path> out;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        const auto ext = entry.path().extension().string();
        if (ext == ".json" || ext == ".pd" || ext == ".txt") out.push_back(entry.path());
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.filename() < b.filename(); });
    return out;
}

}  // namespace fourpage::cli
