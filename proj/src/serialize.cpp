#include "fourpage/serialize.hpp"

#include "fourpage/error.hpp"

namespace fourpage {

void to_json(Json& j, Page page) { j = static_cast<int>(page); }

void from_json(const Json& j, Page& page) {
    const int v = j.get<int>();
    if (v < 1 || v > 4) throw Error(ErrorKind::InvalidPresentation, "page must be 1..4");
    page = static_cast<Page>(v);
}

void to_json(Json& j, const TaitGraph& g) {
    Json edges = Json::array();
    for (const auto& e : g.edges) {
        edges.push_back({{"crossing", e.crossing},
                         {"u", e.u},
                         {"v", e.v},
                         {"shaded_corner", e.shaded_corner}});
    }
    j = {{"schema", kTaitSchema}, {"vertices", g.vertex_face}, {"edges", std::move(edges)}};
}

void to_json(Json& j, const SpanningTree& t) {
    j = {{"schema", kTreeSchema},
         {"edges", t.edges},
         {"strategy", t.strategy},
         {"fallback_used", t.fallback_used},
         {"strictness_not_forced", t.strictness_not_forced}};
}

void to_json(Json& j, const EulerTour& t) {
    j = {{"schema", kTourSchema}, {"edges", t.edges}, {"side", t.side}};
}

void to_json(Json& j, const CutArc& a) {
    j = {{"crossings", a.crossings},
         {"endpoints", a.endpoints},
         {"side", a.side},
         {"pass", a.pass},
         {"page", page_of(a.type())}};
}

void to_json(Json& j, const CircularPresentation& p) {
    Json binding = Json::array();
    for (const auto& b : p.binding) binding.push_back({{"edge", b.edge}, {"position", b.position}});
    j = {{"schema", kPresentationSchema},
         {"name", p.source.name},
         {"pd", p.diagram.quads()},
         {"binding", std::move(binding)},
         {"arcs", p.arcs},
         {"crossing_side", p.crossing_side},
         {"source",
          {{"tree_strategy", p.source.tree_strategy},
           {"tree_edges", p.source.tree_edges},
           {"removed", p.source.removed}}}};
}

void to_json(Json& j, const VerifyReport& r) {
    j = {{"schema", kVerifySchema},
         {"condition1", r.condition1},
         {"condition2", r.condition2},
         {"condition3", r.condition3},
         {"sides_nonempty", r.sides_nonempty},
         {"noncrossing_per_page", r.noncrossing_per_page},
         {"ok", r.ok()},
         {"problems", r.problems}};
}

void to_json(Json& j, const RibbonPlan& plan) {
    Json components = Json::array();
    for (const auto& component : plan.components) {
        Json stations = Json::array();
        for (const auto& s : component) {
            stations.push_back({{"edge", s.edge},
                                {"position", s.position},
                                {"pages", s.pages},
                                {"turn", s.turn},
                                {"diagonal", s.diagonal}});
        }
        components.push_back(std::move(stations));
    }
    Json connections = Json::array();
    for (const auto& c : plan.connections) {
        connections.push_back({{"arc", c.arc},
                               {"from", c.from_position},
                               {"to", c.to_position},
                               {"page", c.page}});
    }
    j = {{"schema", kRibbonSchema},
         {"width", plan.width},
         {"components", std::move(components)},
         {"connections", std::move(connections)}};
}

void to_json(Json& j, const RibbonBound& b) {
    j = {{"arcs", b.arcs},
         {"connections", b.connections},
         {"epsilon", b.epsilon},
         {"length", b.length},
         {"ratio", b.ratio},
         {"bound", b.bound}};
}

namespace {

Json point(const Point& p) { return Json::array({p.x, p.y}); }

// The enum macros map unknown strings to the first value; reject them instead.
Side side_from(const Json& j) {
    const auto text = j.get<std::string>();
    if (text == "inside") return Side::inside;
    if (text == "outside") return Side::outside;
    throw Error(ErrorKind::InvalidPresentation, "unknown side '" + text + "'");
}

Pass pass_from(const Json& j) {
    const auto text = j.get<std::string>();
    if (text == "over") return Pass::over;
    if (text == "under") return Pass::under;
    throw Error(ErrorKind::InvalidPresentation, "unknown pass '" + text + "'");
}

}  // namespace

void to_json(Json& j, const Schematic& s) {
    Json squares = Json::array();
    for (const auto& sq : s.squares) {
        squares.push_back({{"corner", point(sq.corner)},
                           {"size", sq.size},
                           {"edge", sq.edge},
                           {"position", sq.position},
                           {"turn", sq.turn},
                           {"diagonal", sq.diagonal}});
    }
    Json folds = Json::array();
    for (const auto& f : s.fold_marks) folds.push_back({point(f.a), point(f.b)});
    Json connectors = Json::array();
    for (const auto& c : s.connectors) {
        Json path = Json::array();
        for (const auto& p : c.path) path.push_back(point(p));
        connectors.push_back({{"arc", c.arc}, {"page", c.page}, {"level", c.level}, {"path", path}});
    }
    Json labels = Json::array();
    for (const auto& l : s.labels) labels.push_back({{"at", point(l.at)}, {"text", l.text}});
    j = {{"schema", kSchematicSchema},
         {"squares", std::move(squares)},
         {"fold_marks", std::move(folds)},
         {"connectors", std::move(connectors)},
         {"labels", std::move(labels)},
         {"bounds", {{"width", s.width}, {"min_y", s.min_y}, {"max_y", s.max_y}}}};
}

CircularPresentation presentation_from_json(const Json& j) {
    try {
        if (j.value("schema", std::string{}) != kPresentationSchema) {
            throw Error(ErrorKind::InvalidPresentation,
                        std::string("expected schema ") + kPresentationSchema);
        }
        Diagram d(j.at("pd").get<std::vector<std::array<EdgeLabel, 4>>>());
        CircularPresentation p{std::move(d), {}, {}, {}, {}};
        for (const auto& b : j.at("binding")) {
            p.binding.push_back({b.at("edge").get<EdgeLabel>(), b.at("position").get<int>()});
        }
        for (const auto& a : j.at("arcs")) {
            CutArc arc;
            arc.crossings = a.at("crossings").get<std::vector<int>>();
            arc.endpoints = a.at("endpoints").get<std::array<EdgeLabel, 2>>();
            arc.side = side_from(a.at("side"));
            arc.pass = pass_from(a.at("pass"));
            p.arcs.push_back(std::move(arc));
        }
        for (const auto& side : j.at("crossing_side")) p.crossing_side.push_back(side_from(side));
        p.source.name = j.value("name", std::string{});
        if (j.contains("source")) {
            const auto& s = j["source"];
            p.source.tree_strategy = s.value("tree_strategy", std::string{});
            p.source.tree_edges = s.value("tree_edges", std::vector<int>{});
            p.source.removed = s.value("removed", std::vector<EdgeLabel>{});
        }
        return p;
    } catch (const Json::exception& e) {
        throw Error(ErrorKind::InvalidPresentation, std::string("bad presentation JSON: ") + e.what());
    }
}

}  // namespace fourpage
