#ifndef FOURPAGE_TESTS_ORACLES_HPP
#define FOURPAGE_TESTS_ORACLES_HPP

// Independent reference computations used only by tests. None of these call
// into the code paths they are used to check.

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "fourpage/diagram.hpp"
#include "fourpage/state_tree.hpp"

namespace fourpage::oracle {

// Number of spanning trees by the Matrix-Tree theorem (exact integer
// determinant of a reduced Laplacian). Loops are ignored.
std::int64_t matrix_tree_count(int vertices, const std::vector<std::pair<int, int>>& edges);
std::int64_t matrix_tree_count(const TaitGraph& g);

// All valid checkerboard colorings found by trying every 2-coloring of the
// faces; each entry is the colour (0/1) per face.
std::vector<std::vector<int>> brute_force_colorings(const Diagram& d, const FaceSet& f);

// A crossing is nugatory iff deleting it leaves its four dangling ends in more
// than one connected component.
bool nugatory_by_deletion(const Diagram& d, int crossing);

// Number of state circles for the shaded-connecting Tait edge set, from the
// boundary count of a plane ribbon subgraph: 2 k(A) + |A| - |V|.
int circles_by_formula(const TaitGraph& g, const std::vector<int>& shaded_connecting);

struct ColorCounts {
    int shaded = 0;
    int unshaded = 0;
    bool consistent = true;  // every merged face has corners of one colour
};

// Slot pairing at one crossing after smoothing it: pairs[j] is the slot
// joined to slot j.
std::array<int, 4> smoothing_pairs(const FaceSet& f, const Shading& s, int crossing,
                                   bool shaded_connecting);

// Replaces a single crossing by a smoothing and re-traces the faces of the
// result. `shaded_connecting` joins the two shaded corners.
ColorCounts faces_after_smoothing(const Diagram& d, const FaceSet& f, const Shading& s,
                                  int crossing, bool shaded_connecting);

// Is `subset` a spanning tree of g (|V|-1 edges, acyclic)?
bool is_spanning_tree(const TaitGraph& g, const std::vector<int>& subset);

// Relabels edges by a random injective map onto [1, 4c].
Diagram random_relabel(const Diagram& d, std::mt19937_64& rng);

// Inserts a Reidemeister I kink on edge e; `variant` picks one of four slot
// layouts for the new crossing.
Diagram add_kink(const Diagram& d, EdgeLabel e, int variant);

std::string read_file(const std::string& path);

// Path to the bundled data directory (set by the build).
std::string data_dir();

}  // namespace fourpage::oracle

#endif  // FOURPAGE_TESTS_ORACLES_HPP
