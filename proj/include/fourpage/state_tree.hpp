#ifndef FOURPAGE_STATE_TREE_HPP
#define FOURPAGE_STATE_TREE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "fourpage/diagram.hpp"

namespace fourpage {

// One Tait edge per crossing; the edge id is the crossing id.
struct TaitEdge {
    int crossing = 0;
    int u = 0;  // Tait vertex indices
    int v = 0;
    int shaded_corner = 0;  // 0: corners 0 and 2 are shaded, 1: corners 1 and 3

    bool is_loop() const noexcept { return u == v; }
};

// Checkerboard graph: vertices are the shaded faces, edges are crossings.
struct TaitGraph {
    std::vector<int> vertex_face;  // Tait vertex -> face id
    std::vector<TaitEdge> edges;   // edges[x].crossing == x

    int vertex_count() const noexcept { return static_cast<int>(vertex_face.size()); }
    int edge_count() const noexcept { return static_cast<int>(edges.size()); }
    bool is_connected() const;
    std::vector<int> loops() const;
    // Edges whose removal disconnects the graph. Loops are never bridges.
    std::vector<int> bridges() const;
};

TaitGraph build_tait(const Diagram& d, const FaceSet& f, const Shading& s);

enum class StrategyKind { standard, avoid, force, random };

struct TreeStrategy {
    StrategyKind kind = StrategyKind::standard;
    std::vector<int> edges;  // for avoid / force
    std::uint64_t seed = 0;  // for random

    static TreeStrategy standard() { return {}; }
    static TreeStrategy avoid(std::vector<int> e) { return {StrategyKind::avoid, std::move(e), 0}; }
    static TreeStrategy force(std::vector<int> e) { return {StrategyKind::force, std::move(e), 0}; }
    static TreeStrategy random(std::uint64_t seed) { return {StrategyKind::random, {}, seed}; }

    std::string tag() const;
};

struct SpanningTree {
    std::vector<int> edges;  // sorted Tait edge ids
    std::string strategy;    // how the tree was chosen
    bool fallback_used = false;
    // Set by choose_tree_for_strictness when no tree puts the two ends of a
    // non-alternating edge on the same side.
    bool strictness_not_forced = false;

    bool contains(int edge) const;
};

// Kruskal in lowest-id order, adjusted by the strategy. Avoided edges are
// excluded and forced edges included when possible; otherwise the tree is
// completed anyway and fallback_used is set.
SpanningTree spanning_tree(const TaitGraph& g, const TreeStrategy& strategy = {});

struct TreeEnumeration {
    std::vector<SpanningTree> trees;  // lexicographic by sorted edge ids
    bool truncated = false;
};

TreeEnumeration enumerate_spanning_trees(const TaitGraph& g, std::size_t cap);

enum class Smoothing { shaded_connecting, unshaded_connecting };

struct KauffmanState {
    std::vector<Smoothing> smoothing;  // by crossing
    std::vector<int> shaded_corner;    // by crossing, as in TaitEdge

    // The slot at the same crossing that the smoothing joins to h.
    HalfEdge partner(HalfEdge h) const;
    std::vector<int> shaded_connecting() const;
};

// Tree edges get the shaded-connecting smoothing, cotree edges the other.
KauffmanState kauffman_state(const TaitGraph& g, const SpanningTree& t);

// Arbitrary state from the set of shaded-connecting crossings.
KauffmanState state_from_subset(const TaitGraph& g, const std::vector<int>& shaded_connecting);

struct StateCircles {
    // Each circle lists the half-edges it departs through, in order; the
    // edge traversed is the label at that half-edge.
    std::vector<std::vector<HalfEdge>> circles;
    std::vector<std::vector<EdgeLabel>> labels;

    int count() const noexcept { return static_cast<int>(circles.size()); }
};

StateCircles trace_circles(const Diagram& d, const KauffmanState& st);

enum class Side { inside, outside };

// Cyclic edge sequence of the single state circle. Tree crossings are inside.
struct EulerTour {
    std::vector<EdgeLabel> edges;
    std::vector<Side> side;  // by crossing

    int length() const noexcept { return static_cast<int>(edges.size()); }
};

// Canonical start: smallest label, direction with the smaller second label.
EulerTour euler_tour(const StateCircles& c, const SpanningTree& t);

}  // namespace fourpage

#endif  // FOURPAGE_STATE_TREE_HPP
