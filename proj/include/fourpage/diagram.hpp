#ifndef FOURPAGE_DIAGRAM_HPP
#define FOURPAGE_DIAGRAM_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fourpage {

using EdgeLabel = int;

// One end of an edge: the crossing it attaches to and its slot in the quad.
struct HalfEdge {
    int crossing = 0;
    int position = 0;

    int index() const noexcept { return 4 * crossing + position; }
    static HalfEdge from_index(int i) noexcept { return {i / 4, i % 4}; }

    auto operator<=>(const HalfEdge&) const = default;
};

// Which strand a quad slot belongs to. Slots 0 and 2 carry the under-strand,
// slots 1 and 3 the over-strand.
enum class Pass { over, under };

constexpr Pass pass_at(int position) noexcept {
    return (position % 2 == 1) ? Pass::over : Pass::under;
}

struct Crossing {
    int id = 0;
    // Edge labels counterclockwise from the incoming under-strand.
    std::array<EdgeLabel, 4> quad{};
};

// A PD-coded link diagram viewed as a 4-valent plane graph. The quad order
// at every crossing is the rotation system. Immutable after construction.
class Diagram {
public:
    // Validates the quads: at least one crossing, every label exactly twice.
    explicit Diagram(std::vector<std::array<EdgeLabel, 4>> quads);

    const std::vector<Crossing>& crossings() const noexcept { return crossings_; }
    int crossing_count() const noexcept { return static_cast<int>(crossings_.size()); }

    // Sorted edge labels.
    const std::vector<EdgeLabel>& edges() const noexcept { return edges_; }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
    bool has_edge(EdgeLabel e) const;

    // Dense index of an edge label in edges(). Throws std::out_of_range.
    int edge_index(EdgeLabel e) const;

    EdgeLabel label(HalfEdge h) const { return crossings_[h.crossing].quad[h.position]; }
    // The other end of the edge leaving through h.
    HalfEdge mate(HalfEdge h) const { return HalfEdge::from_index(mate_[h.index()]); }
    std::array<HalfEdge, 2> ends(EdgeLabel e) const;

    std::vector<std::array<EdgeLabel, 4>> quads() const;

    bool operator==(const Diagram& other) const { return quads() == other.quads(); }

private:
    std::vector<Crossing> crossings_;
    std::vector<EdgeLabel> edges_;
    std::vector<int> mate_;
    std::vector<std::array<int, 2>> ends_;  // half-edge indices per dense edge
};

struct NamedDiagram {
    std::string name;
    Diagram diagram;
};

// Accepts `X a b c d` records separated by `;` or newlines (`#` starts a
// comment) and Mathematica-style `PD[X[a,b,c,d], ...]`.
Diagram parse_pd(std::string_view text);

// One `X a b c d` record per line.
std::string to_pd_text(const Diagram& d);

// {"name": string, "pd": [[a,b,c,d], ...]}; extra keys are ignored.
NamedDiagram parse_diagram_json(std::string_view text);
std::string to_diagram_json(const NamedDiagram& d);

// Faces of the plane graph. A corner (x, j) is the angular sector at crossing
// x between slots j and j+1 (counterclockwise); faces are cyclic corner walks.
struct FaceSet {
    std::vector<std::vector<HalfEdge>> faces;
    std::vector<int> corner_face;  // indexed by 4 * crossing + corner

    int size() const noexcept { return static_cast<int>(faces.size()); }
    int face_at(int crossing, int corner) const { return corner_face[4 * crossing + corner]; }
    int degree(int face) const { return static_cast<int>(faces[face].size()); }
};

FaceSet compute_faces(const Diagram& d);

enum class Color { unshaded, shaded };

struct Shading {
    std::vector<Color> color;  // by face id

    bool is_shaded(int face) const { return color[face] == Color::shaded; }
    int shaded_count() const;
    int unshaded_count() const;
    Shading swapped() const;
};

// Checkerboard 2-coloring. The designated face is unshaded; by default that is
// face 0, the face holding corner 0 of crossing 0. Further connected
// components of a split diagram have the face at corner 0 of their lowest
// crossing unshaded.
Shading checkerboard(const Diagram& d, const FaceSet& f,
                     std::optional<int> unshaded_face = std::nullopt);

bool is_nonsplit(const Diagram& d);

// Crossings with two opposite corners in the same face.
std::vector<int> nugatory_crossings(const Diagram& d, const FaceSet& f);
bool is_reduced(const Diagram& d, const FaceSet& f);

// Edges that are over at both ends or under at both ends.
std::vector<EdgeLabel> nonalternating_edges(const Diagram& d);
bool is_alternating(const Diagram& d);

// Connected components of the underlying graph, each as its own diagram with
// the original labels and crossings in their original relative order.
std::vector<Diagram> split_components(const Diagram& d);

// Connected component id per crossing, numbered by lowest crossing.
std::vector<int> crossing_components(const Diagram& d);

// Number of closed strands (link components) of the diagram.
int link_component_count(const Diagram& d);

}  // namespace fourpage

#endif  // FOURPAGE_DIAGRAM_HPP
