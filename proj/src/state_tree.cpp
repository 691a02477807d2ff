#include "fourpage/state_tree.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "fourpage/error.hpp"

namespace fourpage {

namespace {

struct UnionFind {
    std::vector<int> parent;
    int sets = 0;

    explicit UnionFind(int n) : parent(n), sets(n) { std::iota(parent.begin(), parent.end(), 0); }

    int find(int v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    }

    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[std::max(a, b)] = std::min(a, b);
        --sets;
        return true;
    }
};

bool connected_without(const TaitGraph& g, int skipped) {
    UnionFind uf(g.vertex_count());
    for (const auto& e : g.edges) {
        if (e.crossing != skipped) uf.unite(e.u, e.v);
    }
    return uf.sets <= 1;
}

std::string join_ids(const std::vector<int>& ids) {
    std::ostringstream out;
    for (std::size_t i = 0; i < ids.size(); ++i) out << (i ? "," : "") << ids[i];
    return out.str();
}

}  // namespace

bool TaitGraph::is_connected() const { return connected_without(*this, -1); }

std::vector<int> TaitGraph::loops() const {
    std::vector<int> out;
    for (const auto& e : edges) {
        if (e.is_loop()) out.push_back(e.crossing);
    }
    return out;
}

std::vector<int> TaitGraph::bridges() const {
    std::vector<int> out;
    if (!is_connected()) return out;
    for (const auto& e : edges) {
        if (!e.is_loop() && !connected_without(*this, e.crossing)) out.push_back(e.crossing);
    }
    return out;
}

TaitGraph build_tait(const Diagram& d, const FaceSet& f, const Shading& s) {
    TaitGraph g;
    std::vector<int> vertex_of(f.size(), -1);
    for (int face = 0; face < f.size(); ++face) {
        if (s.is_shaded(face)) {
            vertex_of[face] = g.vertex_count();
            g.vertex_face.push_back(face);
        }
    }
    g.edges.reserve(d.crossing_count());
    for (int x = 0; x < d.crossing_count(); ++x) {
        const int k = s.is_shaded(f.face_at(x, 0)) ? 0 : 1;
        g.edges.push_back({x, vertex_of[f.face_at(x, k)], vertex_of[f.face_at(x, k + 2)], k});
    }
    return g;
}

std::string TreeStrategy::tag() const {
    switch (kind) {
        case StrategyKind::standard: return "default";
        case StrategyKind::avoid: return "avoid{" + join_ids(edges) + "}";
        case StrategyKind::force: return "force{" + join_ids(edges) + "}";
        case StrategyKind::random: return "random:" + std::to_string(seed);
    }
    return "unknown";
}

bool SpanningTree::contains(int edge) const {
    return std::binary_search(edges.begin(), edges.end(), edge);
}

SpanningTree spanning_tree(const TaitGraph& g, const TreeStrategy& strategy) {
    const int m = g.edge_count();
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    auto in_set = [&](int e) {
        return std::find(strategy.edges.begin(), strategy.edges.end(), e) != strategy.edges.end();
    };

    switch (strategy.kind) {
        case StrategyKind::standard: break;
        case StrategyKind::avoid:
            std::stable_partition(order.begin(), order.end(), [&](int e) { return !in_set(e); });
            break;
        case StrategyKind::force:
            std::stable_partition(order.begin(), order.end(), in_set);
            break;
        case StrategyKind::random: {
            std::mt19937_64 rng(strategy.seed);
            // Fisher-Yates with rejection sampling so the order only depends on
            // the engine, not on the standard library's distributions.
            for (int i = m - 1; i > 0; --i) {
                const std::uint64_t bound = static_cast<std::uint64_t>(i) + 1;
                const std::uint64_t limit = rng.max() - (rng.max() % bound);
                std::uint64_t draw;
                do {
                    draw = rng();
                } while (draw >= limit);
                std::swap(order[i], order[static_cast<int>(draw % bound)]);
            }
            break;
        }
    }

    SpanningTree tree;
    tree.strategy = strategy.tag();
    UnionFind uf(g.vertex_count());
    for (int e : order) {
        const auto& edge = g.edges[e];
        if (uf.unite(edge.u, edge.v)) {
            tree.edges.push_back(e);
        } else if (strategy.kind == StrategyKind::force && in_set(e)) {
            tree.fallback_used = true;
        }
    }
    if (uf.sets > 1) {
        throw Error(ErrorKind::Disconnected, "Tait graph is disconnected; no spanning tree");
    }
    std::sort(tree.edges.begin(), tree.edges.end());
    if (strategy.kind == StrategyKind::avoid) {
        tree.fallback_used = std::any_of(tree.edges.begin(), tree.edges.end(), in_set);
    }
    if (tree.fallback_used) tree.strategy += "+FallbackUsed";
    return tree;
}

namespace {

class TreeEnumerator {
public:
    TreeEnumerator(const TaitGraph& g, std::size_t cap) : g_(g), cap_(cap) {}

    TreeEnumeration run() {
        chosen_.clear();
        UnionFind uf(g_.vertex_count());
        descend(0, uf);
        return std::move(result_);
    }

private:
    bool can_still_span(std::size_t next, UnionFind uf) const {
        for (std::size_t i = next; i < g_.edges.size(); ++i) uf.unite(g_.edges[i].u, g_.edges[i].v);
        return uf.sets == 1;
    }

    // Returns false once the cap stops the search.
    bool descend(std::size_t next, const UnionFind& uf) {
        if (uf.sets == 1) {
            if (result_.trees.size() == cap_) {
                result_.truncated = true;
                return false;
            }
            result_.trees.push_back({chosen_, "enumerated", false, false});
            return true;
        }
        if (next == g_.edges.size()) return true;
        const auto& edge = g_.edges[next];

        UnionFind with = uf;
        if (with.unite(edge.u, edge.v)) {
            chosen_.push_back(static_cast<int>(next));
            bool more = descend(next + 1, with);
            chosen_.pop_back();
            if (!more) return false;
        }
        if (can_still_span(next + 1, uf)) return descend(next + 1, uf);
        return true;
    }

    const TaitGraph& g_;
    std::size_t cap_;
    std::vector<int> chosen_;
    TreeEnumeration result_;
};

}  // namespace

TreeEnumeration enumerate_spanning_trees(const TaitGraph& g, std::size_t cap) {
    if (!g.is_connected()) {
        throw Error(ErrorKind::Disconnected, "Tait graph is disconnected; no spanning tree");
    }
    return TreeEnumerator(g, cap).run();
}

HalfEdge KauffmanState::partner(HalfEdge h) const {
    // The smoothing merges corners k and k+2 by joining slots {k+1, k+2} and
    // {k+3, k}.
    const int k = smoothing[h.crossing] == Smoothing::shaded_connecting
                      ? shaded_corner[h.crossing]
                      : 1 - shaded_corner[h.crossing];
    const int r = (h.position - k + 4) % 4;
    return {h.crossing, (k + 3 - r) % 4};
}

std::vector<int> KauffmanState::shaded_connecting() const {
    std::vector<int> out;
    for (std::size_t x = 0; x < smoothing.size(); ++x) {
        if (smoothing[x] == Smoothing::shaded_connecting) out.push_back(static_cast<int>(x));
    }
    return out;
}

KauffmanState state_from_subset(const TaitGraph& g, const std::vector<int>& shaded_connecting) {
    KauffmanState st;
    st.smoothing.assign(g.edge_count(), Smoothing::unshaded_connecting);
    st.shaded_corner.reserve(g.edge_count());
    for (const auto& e : g.edges) st.shaded_corner.push_back(e.shaded_corner);
    for (int x : shaded_connecting) st.smoothing.at(x) = Smoothing::shaded_connecting;
    return st;
}

KauffmanState kauffman_state(const TaitGraph& g, const SpanningTree& t) {
    return state_from_subset(g, t.edges);
}

StateCircles trace_circles(const Diagram& d, const KauffmanState& st) {
    StateCircles out;
    std::vector<char> visited(4 * d.crossing_count(), 0);
    for (int start = 0; start < static_cast<int>(visited.size()); ++start) {
        if (visited[start]) continue;
        std::vector<HalfEdge> circle;
        std::vector<EdgeLabel> labels;
        HalfEdge h = HalfEdge::from_index(start);
        do {
            HalfEdge arrive = d.mate(h);
            visited[h.index()] = 1;
            visited[arrive.index()] = 1;
            circle.push_back(h);
            labels.push_back(d.label(h));
            h = st.partner(arrive);
        } while (h.index() != start);
        out.circles.push_back(std::move(circle));
        out.labels.push_back(std::move(labels));
    }
    return out;
}

EulerTour euler_tour(const StateCircles& c, const SpanningTree& t) {
    if (c.count() != 1) {
        throw Error(ErrorKind::NotSingleCircle,
                    "state has " + std::to_string(c.count()) + " circles; expected 1");
    }
    std::vector<EdgeLabel> seq = c.labels.front();
    const int n = static_cast<int>(seq.size());
    auto lowest = std::min_element(seq.begin(), seq.end());
    std::rotate(seq.begin(), lowest, seq.end());
    if (n > 2 && seq[n - 1] < seq[1]) std::reverse(seq.begin() + 1, seq.end());

    EulerTour tour;
    tour.edges = std::move(seq);
    const int crossings = n / 2;
    tour.side.assign(crossings, Side::outside);
    for (int e : t.edges) tour.side.at(e) = Side::inside;
    return tour;
}

}  // namespace fourpage
