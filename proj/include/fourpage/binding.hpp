#ifndef FOURPAGE_BINDING_HPP
#define FOURPAGE_BINDING_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fourpage/diagram.hpp"
#include "fourpage/state_tree.hpp"

namespace fourpage {

struct ArcType {
    Side side = Side::inside;
    Pass pass = Pass::over;

    bool operator==(const ArcType&) const = default;
};

enum class Page { P1 = 1, P2 = 2, P3 = 3, P4 = 4 };

// (inside, over) -> P1, (outside, over) -> P2, (inside, under) -> P3,
// (outside, under) -> P4. P1/P3 and P2/P4 are the opposite pairs.
Page page_of(ArcType type);
bool opposite_pages(Page a, Page b);

// A binding point sits at the midpoint of an edge.
struct BindingPoint {
    EdgeLabel edge = 0;
    int position = 0;  // index in the cyclic binding order
};

struct CutArc {
    std::vector<int> crossings;           // in order from endpoints[0] to endpoints[1]
    std::array<EdgeLabel, 2> endpoints{};  // binding point edges
    Side side = Side::inside;
    Pass pass = Pass::over;

    ArcType type() const { return {side, pass}; }
};

struct Provenance {
    std::string name;
    std::string tree_strategy;
    std::vector<int> tree_edges;
    std::vector<EdgeLabel> removed;  // binding points dropped by the repair, in order
};

struct CircularPresentation {
    Diagram diagram;
    std::vector<BindingPoint> binding;  // cyclic order
    std::vector<CutArc> arcs;
    std::vector<Side> crossing_side;  // by crossing
    Provenance source;

    int arc_count() const noexcept { return static_cast<int>(arcs.size()); }
    int binding_count() const noexcept { return static_cast<int>(binding.size()); }
    // Position in the cyclic order of the binding point on edge e, or -1.
    int position_of(EdgeLabel e) const;
    // The (arc index, end index) pairs meeting at binding point e.
    std::vector<std::array<int, 2>> arc_ends_at(EdgeLabel e) const;
};

// One binding point per edge in tour order; one arc per strand per crossing.
CircularPresentation build_presentation(const Diagram& d, const EulerTour& tour,
                                        Provenance source = {});

struct VerifyReport {
    bool condition1 = false;  // well-formed: distinct edges, two arc ends per point
    bool condition2 = false;  // every arc follows the diagram on one side with one pass
    bool condition3 = false;  // the two arcs at each binding point differ in type
    bool sides_nonempty = false;
    bool noncrossing_per_page = false;
    std::vector<std::string> problems;

    bool ok() const {
        return condition1 && condition2 && condition3 && sides_nonempty && noncrossing_per_page;
    }
};

VerifyReport verify(const CircularPresentation& p);

// Removes binding points whose two arcs share a type, lowest edge label
// first, merging the arcs. Throws ComponentCollapse if a link component would
// lose its last binding point.
CircularPresentation repair_nonalternating(const CircularPresentation& p);

// A single step of the repair: removes the lowest violating binding point, or
// returns nullopt when there is none.
std::optional<CircularPresentation> repair_once(const CircularPresentation& p);

// A tree that puts both ends of some non-alternating edge on one side.
// Throws NotNonAlternating for alternating diagrams.
SpanningTree choose_tree_for_strictness(const Diagram& d, const TaitGraph& g);

enum class TreeChoice {
    automatic,  // strictness search for non-alternating diagrams, default otherwise
    standard,
    random,
    strict,  // as automatic, but NotNonAlternating for alternating input
};

struct PipelineOptions {
    TreeChoice tree = TreeChoice::automatic;
    std::uint64_t seed = 0;
    std::optional<int> unshaded_face;
};

struct Alpha4Result {
    int arcs = 0;
    int crossings = 0;
    bool strict = false;  // arcs < 2c
    bool strictness_attempted = false;
    SpanningTree tree;
    CircularPresentation presentation;
};

// Full pipeline. Requires a non-split reduced diagram.
Alpha4Result alpha4_upper_bound(const Diagram& d, const PipelineOptions& options = {});

// Runs the pipeline on each connected component; arcs add up.
std::vector<Alpha4Result> alpha4_componentwise(const Diagram& d,
                                               const PipelineOptions& options = {});

struct PageMap {
    std::vector<Page> arc_page;  // by arc index
    std::array<int, 4> per_page{};
};

PageMap page_assignment(const CircularPresentation& p);

}  // namespace fourpage

#endif  // FOURPAGE_BINDING_HPP
