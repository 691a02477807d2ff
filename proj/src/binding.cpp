#include "fourpage/binding.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "fourpage/error.hpp"

namespace fourpage {

Page page_of(ArcType type) {
    if (type.pass == Pass::over) return type.side == Side::inside ? Page::P1 : Page::P2;
    return type.side == Side::inside ? Page::P3 : Page::P4;
}

bool opposite_pages(Page a, Page b) {
    return (static_cast<int>(a) - static_cast<int>(b) + 4) % 4 == 2;
}

int CircularPresentation::position_of(EdgeLabel e) const {
    for (const auto& b : binding) {
        if (b.edge == e) return b.position;
    }
    return -1;
}

std::vector<std::array<int, 2>> CircularPresentation::arc_ends_at(EdgeLabel e) const {
    std::vector<std::array<int, 2>> out;
    for (int a = 0; a < arc_count(); ++a) {
        for (int end = 0; end < 2; ++end) {
            if (arcs[a].endpoints[end] == e) out.push_back({a, end});
        }
    }
    return out;
}

CircularPresentation build_presentation(const Diagram& d, const EulerTour& tour, Provenance source) {
    std::vector<EdgeLabel> seen = tour.edges;
    std::sort(seen.begin(), seen.end());
    if (seen != d.edges() || static_cast<int>(tour.side.size()) != d.crossing_count()) {
        throw Error(ErrorKind::InvalidPresentation,
                    "tour does not visit every edge of the diagram exactly once");
    }

    CircularPresentation p{d, {}, {}, tour.side, std::move(source)};
    p.binding.reserve(tour.edges.size());
    for (int i = 0; i < tour.length(); ++i) p.binding.push_back({tour.edges[i], i});
    p.arcs.reserve(2 * d.crossing_count());
    for (const auto& x : d.crossings()) {
        const Side side = tour.side[x.id];
        p.arcs.push_back({{x.id}, {x.quad[0], x.quad[2]}, side, Pass::under});
        p.arcs.push_back({{x.id}, {x.quad[1], x.quad[3]}, side, Pass::over});
    }
    return p;
}

namespace {

struct ArcTrace {
    bool follows_diagram = false;
    std::vector<HalfEdge> entries;  // slot where the arc enters each crossing
};

// Walks the diagram from endpoints[0] through the listed crossings, passing
// straight across each one, and checks that it ends at endpoints[1] without
// touching another binding point on the way.
ArcTrace trace_arc(const CircularPresentation& p, const CutArc& arc,
                   const std::set<EdgeLabel>& binding_edges) {
    const Diagram& d = p.diagram;
    ArcTrace out;
    if (arc.crossings.empty() || !d.has_edge(arc.endpoints[0]) || !d.has_edge(arc.endpoints[1])) {
        return out;
    }
    for (const int x : arc.crossings) {
        if (x < 0 || x >= d.crossing_count()) return out;
    }
    for (HalfEdge start : d.ends(arc.endpoints[0])) {
        if (start.crossing != arc.crossings.front()) continue;
        std::vector<HalfEdge> entries;
        HalfEdge h = start;
        bool good = true;
        for (std::size_t k = 0; k < arc.crossings.size() && good; ++k) {
            entries.push_back(h);
            HalfEdge leave{h.crossing, (h.position + 2) % 4};
            const EdgeLabel f = d.label(leave);
            if (k + 1 == arc.crossings.size()) {
                good = (f == arc.endpoints[1]);
            } else {
                h = d.mate(leave);
                good = !binding_edges.count(f) && h.crossing == arc.crossings[k + 1];
            }
        }
        if (good) {
            out.follows_diagram = true;
            out.entries = std::move(entries);
            return out;
        }
    }
    return out;
}

bool interleaved(int a0, int a1, int b0, int b1) {
    if (a0 > a1) std::swap(a0, a1);
    if (a0 == b0 || a0 == b1 || a1 == b0 || a1 == b1) return false;
    const bool b0_in = a0 < b0 && b0 < a1;
    const bool b1_in = a0 < b1 && b1 < a1;
    return b0_in != b1_in;
}

}  // namespace

VerifyReport verify(const CircularPresentation& p) {
    VerifyReport r;
    const Diagram& d = p.diagram;

    // Condition 1: distinct binding edges, two arc ends at each point.
    r.condition1 = true;
    std::map<EdgeLabel, int> position;
    for (int i = 0; i < p.binding_count(); ++i) {
        const auto& b = p.binding[i];
        if (!d.has_edge(b.edge)) {
            r.condition1 = false;
            r.problems.push_back("binding point on unknown edge " + std::to_string(b.edge));
        } else if (!position.emplace(b.edge, i).second) {
            r.condition1 = false;
            r.problems.push_back("two binding points on edge " + std::to_string(b.edge));
        }
        if (b.position != i) {
            r.condition1 = false;
            r.problems.push_back("binding point " + std::to_string(b.edge) + " has position " +
                                 std::to_string(b.position) + ", expected " + std::to_string(i));
        }
    }
    if (p.arc_count() != p.binding_count()) {
        r.condition1 = false;
        r.problems.push_back("arc count differs from binding point count");
    }
    std::map<EdgeLabel, std::vector<int>> ends_at;  // edge -> arc ids, one per end
    for (int a = 0; a < p.arc_count(); ++a) {
        for (EdgeLabel e : p.arcs[a].endpoints) {
            ends_at[e].push_back(a);
            if (!position.count(e)) {
                r.condition1 = false;
                r.problems.push_back("arc " + std::to_string(a) + " ends off the binding circle");
            }
        }
    }
    for (const auto& b : p.binding) {
        if (ends_at[b.edge].size() != 2) {
            r.condition1 = false;
            r.problems.push_back("binding point " + std::to_string(b.edge) + " has " +
                                 std::to_string(ends_at[b.edge].size()) + " arc ends");
        }
    }

    // Condition 2: each arc traces the diagram with one side and one pass.
    r.condition2 = static_cast<int>(p.crossing_side.size()) == d.crossing_count();
    if (!r.condition2) r.problems.push_back("crossing side table has the wrong size");
    std::set<EdgeLabel> binding_edges;
    for (const auto& b : p.binding) binding_edges.insert(b.edge);
    std::vector<int> strand_uses(2 * d.crossing_count(), 0);
    for (int a = 0; r.condition2 && a < p.arc_count(); ++a) {
        const CutArc& arc = p.arcs[a];
        ArcTrace trace = trace_arc(p, arc, binding_edges);
        if (!trace.follows_diagram) {
            r.condition2 = false;
            r.problems.push_back("arc " + std::to_string(a) + " does not follow the diagram");
            break;
        }
        for (const HalfEdge& h : trace.entries) {
            const Pass pass = pass_at(h.position);
            ++strand_uses[2 * h.crossing + (pass == Pass::over ? 1 : 0)];
            if (pass != arc.pass) {
                r.condition2 = false;
                r.problems.push_back("arc " + std::to_string(a) + " changes pass at crossing " +
                                     std::to_string(h.crossing));
            }
            if (p.crossing_side[h.crossing] != arc.side) {
                r.condition2 = false;
                r.problems.push_back("arc " + std::to_string(a) + " leaves its side at crossing " +
                                     std::to_string(h.crossing));
            }
        }
    }
    if (r.condition2 && std::any_of(strand_uses.begin(), strand_uses.end(),
                                    [](int n) { return n != 1; })) {
        r.condition2 = false;
        r.problems.push_back("arcs do not cover every crossing strand exactly once");
    }

    // Condition 3: the two arcs at a binding point differ in type.
    r.condition3 = r.condition1;
    if (r.condition1) {
        for (const auto& b : p.binding) {
            const auto& at = ends_at[b.edge];
            if (at[0] == at[1] || p.arcs[at[0]].type() == p.arcs[at[1]].type()) {
                r.condition3 = false;
                r.problems.push_back("arcs of one type meet at binding point " +
                                     std::to_string(b.edge));
            }
        }
    }

    int inside = 0;
    int outside = 0;
    for (Side s : p.crossing_side) (s == Side::inside ? inside : outside)++;
    r.sides_nonempty = inside > 0 && outside > 0;
    if (!r.sides_nonempty) r.problems.push_back("one side of the binding circle has no crossing");

    r.noncrossing_per_page = r.condition1;
    if (r.condition1) {
        for (int a = 0; a < p.arc_count(); ++a) {
            for (int b = a + 1; b < p.arc_count(); ++b) {
                if (!(p.arcs[a].type() == p.arcs[b].type())) continue;
                if (interleaved(position[p.arcs[a].endpoints[0]], position[p.arcs[a].endpoints[1]],
                                position[p.arcs[b].endpoints[0]], position[p.arcs[b].endpoints[1]])) {
                    r.noncrossing_per_page = false;
                    r.problems.push_back("arcs " + std::to_string(a) + " and " + std::to_string(b) +
                                         " cross on page P" +
                                         std::to_string(static_cast<int>(page_of(p.arcs[a].type()))));
                }
            }
        }
    }
    return r;
}

namespace {

void reverse_arc(CutArc& arc) {
    std::reverse(arc.crossings.begin(), arc.crossings.end());
    std::swap(arc.endpoints[0], arc.endpoints[1]);
}

}  // namespace

std::optional<CircularPresentation> repair_once(const CircularPresentation& p) {
    std::optional<EdgeLabel> target;
    std::array<int, 2> arc_ids{};
    std::array<int, 2> end_ids{};
    std::vector<EdgeLabel> order;
    for (const auto& b : p.binding) order.push_back(b.edge);
    std::sort(order.begin(), order.end());
    for (EdgeLabel e : order) {
        auto ends = p.arc_ends_at(e);
        if (ends.size() != 2) {
            throw Error(ErrorKind::InvalidPresentation,
                        "binding point " + std::to_string(e) + " does not have two arc ends");
        }
        if (p.arcs[ends[0][0]].type() == p.arcs[ends[1][0]].type()) {
            target = e;
            arc_ids = {ends[0][0], ends[1][0]};
            end_ids = {ends[0][1], ends[1][1]};
            break;
        }
    }
    if (!target) return std::nullopt;
    if (arc_ids[0] == arc_ids[1]) {
        throw Error(ErrorKind::ComponentCollapse,
                    "removing binding point " + std::to_string(*target) +
                        " would leave a link component with no binding point");
    }

    CircularPresentation out = p;
    CutArc first = out.arcs[arc_ids[0]];
    CutArc second = out.arcs[arc_ids[1]];
    if (end_ids[0] == 0) reverse_arc(first);   // first now ends at the target
    if (end_ids[1] == 1) reverse_arc(second);  // second now starts there
    CutArc merged = first;
    merged.crossings.insert(merged.crossings.end(), second.crossings.begin(),
                            second.crossings.end());
    merged.endpoints = {first.endpoints[0], second.endpoints[1]};

    out.arcs[arc_ids[0]] = std::move(merged);
    out.arcs.erase(out.arcs.begin() + arc_ids[1]);
    out.binding.erase(std::find_if(out.binding.begin(), out.binding.end(),
                                   [&](const BindingPoint& b) { return b.edge == *target; }));
    for (int i = 0; i < out.binding_count(); ++i) out.binding[i].position = i;
    out.source.removed.push_back(*target);
    return out;
}

CircularPresentation repair_nonalternating(const CircularPresentation& p) {
    CircularPresentation out = p;
    while (auto next = repair_once(out)) out = std::move(*next);
    return out;
}

SpanningTree choose_tree_for_strictness(const Diagram& d, const TaitGraph& g) {
    const auto candidates = nonalternating_edges(d);
    if (candidates.empty()) {
        throw Error(ErrorKind::NotNonAlternating, "diagram is alternating");
    }
    for (EdgeLabel e : candidates) {
        auto [a, b] = d.ends(e);
        std::vector<int> pair{a.crossing};
        if (b.crossing != a.crossing) pair.push_back(b.crossing);
        std::sort(pair.begin(), pair.end());
        for (auto strategy : {TreeStrategy::avoid(pair), TreeStrategy::force(pair)}) {
            SpanningTree t = spanning_tree(g, strategy);
            if (!t.fallback_used) {
                t.strategy = "strict:" + t.strategy + "@edge" + std::to_string(e);
                return t;
            }
        }
    }
    SpanningTree t = spanning_tree(g);
    t.strictness_not_forced = true;
    t.strategy += "+StrictnessNotForced";
    return t;
}

Alpha4Result alpha4_upper_bound(const Diagram& d, const PipelineOptions& options) {
    const FaceSet faces = compute_faces(d);
    if (!is_nonsplit(d)) throw Error(ErrorKind::SplitDiagram, "diagram is split");
    if (auto nugatory = nugatory_crossings(d, faces); !nugatory.empty()) {
        throw NotReducedError(std::move(nugatory));
    }
    const Shading shading = checkerboard(d, faces, options.unshaded_face);
    const TaitGraph tait = build_tait(d, faces, shading);

    const bool alternating = is_alternating(d);
    bool attempted = false;
    SpanningTree tree;
    switch (options.tree) {
        case TreeChoice::automatic:
            attempted = !alternating;
            tree = alternating ? spanning_tree(tait) : choose_tree_for_strictness(d, tait);
            break;
        case TreeChoice::strict:
            attempted = true;
            tree = choose_tree_for_strictness(d, tait);
            break;
        case TreeChoice::standard:
            tree = spanning_tree(tait);
            break;
        case TreeChoice::random:
            tree = spanning_tree(tait, TreeStrategy::random(options.seed));
            break;
    }

    const KauffmanState state = kauffman_state(tait, tree);
    const StateCircles circles = trace_circles(d, state);
    const EulerTour tour = euler_tour(circles, tree);
    Provenance source;
    source.tree_strategy = tree.strategy;
    source.tree_edges = tree.edges;
    CircularPresentation presentation =
        repair_nonalternating(build_presentation(d, tour, std::move(source)));

    const int arcs = presentation.arc_count();
    return Alpha4Result{arcs,
                        d.crossing_count(),
                        arcs < 2 * d.crossing_count(),
                        attempted,
                        std::move(tree),
                        std::move(presentation)};
}

std::vector<Alpha4Result> alpha4_componentwise(const Diagram& d, const PipelineOptions& options) {
    std::vector<Alpha4Result> out;
    for (const Diagram& part : split_components(d)) {
        PipelineOptions local = options;
        local.unshaded_face.reset();
        out.push_back(alpha4_upper_bound(part, local));
    }
    return out;
}

PageMap page_assignment(const CircularPresentation& p) {
    PageMap m;
    m.arc_page.reserve(p.arcs.size());
    for (const auto& arc : p.arcs) {
        Page page = page_of(arc.type());
        m.arc_page.push_back(page);
        ++m.per_page[static_cast<int>(page) - 1];
    }
    return m;
}

}  // namespace fourpage
