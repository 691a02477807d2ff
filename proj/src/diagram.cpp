#include "fourpage/diagram.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <regex>
#include <sstream>
#include <stdexcept>

#include "fourpage/error.hpp"
#include "json.hpp"

namespace fourpage {

Diagram::Diagram(std::vector<std::array<EdgeLabel, 4>> quads) {
    if (quads.empty()) throw Error(ErrorKind::EmptyDiagram, "diagram has no crossings");

    std::map<EdgeLabel, std::vector<int>> occurrences;
    crossings_.reserve(quads.size());
    for (std::size_t i = 0; i < quads.size(); ++i) {
        crossings_.push_back({static_cast<int>(i), quads[i]});
        for (int j = 0; j < 4; ++j) occurrences[quads[i][j]].push_back(static_cast<int>(4 * i + j));
    }
    for (const auto& [label, where] : occurrences) {
        if (where.size() != 2) {
            throw Error(ErrorKind::LabelCountError,
                        "edge label " + std::to_string(label) + " occurs " +
                            std::to_string(where.size()) + " times; expected 2");
        }
    }

    mate_.assign(4 * quads.size(), -1);
    edges_.reserve(occurrences.size());
    ends_.reserve(occurrences.size());
    for (const auto& [label, where] : occurrences) {
        edges_.push_back(label);
        ends_.push_back({where[0], where[1]});
        mate_[where[0]] = where[1];
        mate_[where[1]] = where[0];
    }
}

bool Diagram::has_edge(EdgeLabel e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

int Diagram::edge_index(EdgeLabel e) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) throw std::out_of_range("no edge " + std::to_string(e));
    return static_cast<int>(it - edges_.begin());
}

std::array<HalfEdge, 2> Diagram::ends(EdgeLabel e) const {
    const auto& pair = ends_[edge_index(e)];
    return {HalfEdge::from_index(pair[0]), HalfEdge::from_index(pair[1])};
}

std::vector<std::array<EdgeLabel, 4>> Diagram::quads() const {
    std::vector<std::array<EdgeLabel, 4>> out;
    out.reserve(crossings_.size());
    for (const auto& x : crossings_) out.push_back(x.quad);
    return out;
}

namespace {

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

EdgeLabel parse_label(std::string_view token, std::string_view record) {
    EdgeLabel value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || token.empty()) {
        throw Error(ErrorKind::MalformedRecord,
                    "non-integer label '" + std::string(token) + "' in record '" +
                        std::string(record) + "'");
    }
    return value;
}

std::array<EdgeLabel, 4> labels_from_tokens(const std::vector<std::string>& tokens,
                                            std::string_view record) {
    if (tokens.size() != 4) {
        throw Error(ErrorKind::MalformedRecord, "record '" + std::string(record) + "' has " +
                                                    std::to_string(tokens.size()) +
                                                    " labels; expected 4");
    }
    std::array<EdgeLabel, 4> quad{};
    for (int i = 0; i < 4; ++i) quad[i] = parse_label(tokens[i], record);
    return quad;
}

std::vector<std::array<EdgeLabel, 4>> parse_bracketed(const std::string& text) {
    static const std::regex record_re(R"(X\s*\[([^\[\]]*)\])");
    std::vector<std::array<EdgeLabel, 4>> quads;
    auto begin = std::sregex_iterator(text.begin(), text.end(), record_re);
    std::string leftover = std::regex_replace(text, record_re, "");
    for (auto it = begin; it != std::sregex_iterator(); ++it) {
        std::vector<std::string> tokens;
        std::stringstream body((*it)[1].str());
        std::string tok;
        while (std::getline(body, tok, ',')) tokens.push_back(trim(tok));
        quads.push_back(labels_from_tokens(tokens, it->str()));
    }
    // Anything other than the PD[...] wrapper, commas and whitespace is junk.
    for (char ch : leftover) {
        if (std::string_view(" \t\r\n,[]PD").find(ch) == std::string_view::npos) {
            throw Error(ErrorKind::MalformedRecord,
                        std::string("unexpected character '") + ch + "' in PD notation");
        }
    }
    return quads;
}

std::vector<std::array<EdgeLabel, 4>> parse_records(const std::string& text) {
    std::vector<std::array<EdgeLabel, 4>> quads;
    std::stringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::stringstream records(line);
        std::string record;
        while (std::getline(records, record, ';')) {
            record = trim(record);
            if (record.empty()) continue;
            std::stringstream words(record);
            std::string head;
            words >> head;
            if (head != "X") {
                throw Error(ErrorKind::MalformedRecord,
                            "record '" + record + "' does not start with X");
            }
            std::vector<std::string> tokens;
            std::string tok;
            while (words >> tok) tokens.push_back(tok);
            quads.push_back(labels_from_tokens(tokens, record));
        }
    }
    return quads;
}

}  // namespace

Diagram parse_pd(std::string_view text) {
    std::string source(text);
    if (source.find('[') != std::string::npos) return Diagram(parse_bracketed(source));
    return Diagram(parse_records(source));
}

std::string to_pd_text(const Diagram& d) {
    std::ostringstream out;
    for (const auto& x : d.crossings()) {
        out << 'X';
        for (EdgeLabel e : x.quad) out << ' ' << e;
        out << '\n';
    }
    return out.str();
}

NamedDiagram parse_diagram_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorKind::MalformedRecord, std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("pd") || !doc["pd"].is_array()) {
        throw Error(ErrorKind::MalformedRecord, "diagram JSON needs a \"pd\" array");
    }
    std::vector<std::array<EdgeLabel, 4>> quads;
    for (const auto& rec : doc["pd"]) {
        if (!rec.is_array() || rec.size() != 4) {
            throw Error(ErrorKind::MalformedRecord, "pd record " + rec.dump() + " is not 4 labels");
        }
        std::array<EdgeLabel, 4> quad{};
        for (int i = 0; i < 4; ++i) {
            if (!rec[i].is_number_integer()) {
                throw Error(ErrorKind::MalformedRecord, "non-integer label in " + rec.dump());
            }
            quad[i] = rec[i].get<EdgeLabel>();
        }
        quads.push_back(quad);
    }
    std::string name = doc.value("name", std::string{});
    return {std::move(name), Diagram(std::move(quads))};
}

std::string to_diagram_json(const NamedDiagram& d) {
    nlohmann::json doc;
    doc["name"] = d.name;
    doc["pd"] = d.diagram.quads();
    return doc.dump();
}

}  // namespace fourpage
