#include <algorithm>
#include <deque>
#include <numeric>

#include "fourpage/diagram.hpp"
#include "fourpage/error.hpp"

namespace fourpage {

namespace {

int find_root(std::vector<int>& parent, int v) {
    while (parent[v] != v) {
        parent[v] = parent[parent[v]];
        v = parent[v];
    }
    return v;
}

}  // namespace

std::vector<int> crossing_components(const Diagram& d) {
    const int n = d.crossing_count();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    for (EdgeLabel e : d.edges()) {
        auto [a, b] = d.ends(e);
        int ra = find_root(parent, a.crossing);
        int rb = find_root(parent, b.crossing);
        if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
    }
    std::vector<int> component(n, -1);
    std::vector<int> id_of_root(n, -1);
    int next = 0;
    for (int x = 0; x < n; ++x) {
        int r = find_root(parent, x);
        if (id_of_root[r] < 0) id_of_root[r] = next++;
        component[x] = id_of_root[r];
    }
    return component;
}

FaceSet compute_faces(const Diagram& d) {
    const int corners = 4 * d.crossing_count();
    FaceSet f;
    f.corner_face.assign(corners, -1);
    for (int start = 0; start < corners; ++start) {
        if (f.corner_face[start] >= 0) continue;
        const int id = f.size();
        std::vector<HalfEdge> walk;
        int c = start;
        do {
            f.corner_face[c] = id;
            HalfEdge corner = HalfEdge::from_index(c);
            walk.push_back(corner);
            // Leave along the slot after the corner; arrive at the mate's corner.
            c = d.mate({corner.crossing, (corner.position + 1) % 4}).index();
        } while (c != start);
        f.faces.push_back(std::move(walk));
    }

    // Euler characteristic check, one sphere per connected component.
    auto component = crossing_components(d);
    const int comps = component.empty() ? 0 : *std::max_element(component.begin(), component.end()) + 1;
    std::vector<int> crossings(comps, 0);
    std::vector<int> faces(comps, 0);
    for (int x = 0; x < d.crossing_count(); ++x) ++crossings[component[x]];
    for (const auto& face : f.faces) ++faces[component[face.front().crossing]];
    for (int k = 0; k < comps; ++k) {
        if (faces[k] != crossings[k] + 2) {
            throw Error(ErrorKind::NonPlanarTrace,
                        "face tracing found " + std::to_string(faces[k]) + " faces for " +
                            std::to_string(crossings[k]) +
                            " crossings; the PD code is not planar");
        }
    }
    return f;
}

int Shading::shaded_count() const {
    return static_cast<int>(std::count(color.begin(), color.end(), Color::shaded));
}

int Shading::unshaded_count() const {
    return static_cast<int>(color.size()) - shaded_count();
}

Shading Shading::swapped() const {
    Shading s = *this;
    for (auto& c : s.color) c = (c == Color::shaded) ? Color::unshaded : Color::shaded;
    return s;
}

Shading checkerboard(const Diagram& d, const FaceSet& f, std::optional<int> unshaded_face) {
    // Faces meeting at consecutive corners of a crossing share an edge.
    std::vector<std::vector<int>> adjacent(f.size());
    for (int x = 0; x < d.crossing_count(); ++x) {
        for (int j = 0; j < 4; ++j) {
            int a = f.face_at(x, j);
            int b = f.face_at(x, (j + 1) % 4);
            if (a == b) {
                throw Error(ErrorKind::NotBipartite,
                            "face " + std::to_string(a) + " lies on both sides of an edge");
            }
            adjacent[a].push_back(b);
            adjacent[b].push_back(a);
        }
    }

    std::vector<int> color(f.size(), -1);
    auto flood = [&](int root) {
        color[root] = 0;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int v : adjacent[u]) {
                if (color[v] < 0) {
                    color[v] = 1 - color[u];
                    queue.push_back(v);
                } else if (color[v] == color[u]) {
                    throw Error(ErrorKind::NotBipartite, "face adjacency has an odd cycle");
                }
            }
        }
    };

    if (unshaded_face) {
        if (*unshaded_face < 0 || *unshaded_face >= f.size()) {
            throw std::out_of_range("unshaded face id " + std::to_string(*unshaded_face) +
                                    " out of range");
        }
        flood(*unshaded_face);
    }
    for (int x = 0; x < d.crossing_count(); ++x) {
        if (color[f.face_at(x, 0)] < 0) flood(f.face_at(x, 0));
    }

    Shading s;
    s.color.reserve(color.size());
    for (int c : color) s.color.push_back(c == 0 ? Color::unshaded : Color::shaded);
    return s;
}

bool is_nonsplit(const Diagram& d) {
    auto component = crossing_components(d);
    return std::all_of(component.begin(), component.end(), [](int c) { return c == 0; });
}

std::vector<int> nugatory_crossings(const Diagram& d, const FaceSet& f) {
    std::vector<int> out;
    for (int x = 0; x < d.crossing_count(); ++x) {
        if (f.face_at(x, 0) == f.face_at(x, 2) || f.face_at(x, 1) == f.face_at(x, 3)) {
            out.push_back(x);
        }
    }
    return out;
}

bool is_reduced(const Diagram& d, const FaceSet& f) { return nugatory_crossings(d, f).empty(); }

std::vector<EdgeLabel> nonalternating_edges(const Diagram& d) {
    std::vector<EdgeLabel> out;
    for (EdgeLabel e : d.edges()) {
        auto [a, b] = d.ends(e);
        if (pass_at(a.position) == pass_at(b.position)) out.push_back(e);
    }
    return out;
}

bool is_alternating(const Diagram& d) { return nonalternating_edges(d).empty(); }

std::vector<Diagram> split_components(const Diagram& d) {
    auto component = crossing_components(d);
    const int comps = *std::max_element(component.begin(), component.end()) + 1;
    std::vector<std::vector<std::array<EdgeLabel, 4>>> quads(comps);
    for (const auto& x : d.crossings()) quads[component[x.id]].push_back(x.quad);
    std::vector<Diagram> out;
    out.reserve(comps);
    for (auto& q : quads) out.emplace_back(std::move(q));
    return out;
}

int link_component_count(const Diagram& d) {
    // Labels on the same strand through a crossing sit in slots 0/2 or 1/3.
    const int m = d.edge_count();
    std::vector<int> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& x : d.crossings()) {
        for (int j = 0; j < 2; ++j) {
            int ra = find_root(parent, d.edge_index(x.quad[j]));
            int rb = find_root(parent, d.edge_index(x.quad[j + 2]));
            if (ra != rb) parent[ra] = rb;
        }
    }
    int count = 0;
    for (int i = 0; i < m; ++i) count += find_root(parent, i) == i;
    return count;
}

}  // namespace fourpage
