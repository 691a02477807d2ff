#include "oracles.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fourpage::oracle {

namespace {

struct Dsu {
    std::vector<int> p;
    explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int v) { return p[v] == v ? v : p[v] = find(p[v]); }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        p[a] = b;
        return true;
    }
};

}  // namespace

std::int64_t matrix_tree_count(int vertices, const std::vector<std::pair<int, int>>& edges) {
    if (vertices <= 1) return 1;
    const int n = vertices - 1;
    std::vector<std::vector<__int128>> m(n, std::vector<__int128>(n, 0));
    for (auto [u, v] : edges) {
        if (u == v) continue;
        if (u > 0) m[u - 1][u - 1] += 1;
        if (v > 0) m[v - 1][v - 1] += 1;
        if (u > 0 && v > 0) {
            m[u - 1][v - 1] -= 1;
            m[v - 1][u - 1] -= 1;
        }
    }
    // Bareiss fraction-free elimination.
    __int128 prev = 1;
    int sign = 1;
    for (int k = 0; k < n; ++k) {
        if (m[k][k] == 0) {
            int swap_row = -1;
            for (int r = k + 1; r < n; ++r) {
                if (m[r][k] != 0) {
                    swap_row = r;
                    break;
                }
            }
            if (swap_row < 0) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    return static_cast<std::int64_t>(sign * m[n - 1][n - 1]);
}

std::int64_t matrix_tree_count(const TaitGraph& g) {
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : g.edges) edges.emplace_back(e.u, e.v);
    return matrix_tree_count(g.vertex_count(), edges);
}

std::vector<std::vector<int>> brute_force_colorings(const Diagram& d, const FaceSet& f) {
    const int faces = f.size();
    if (faces > 24) throw std::invalid_argument("too many faces for brute force");
    std::vector<std::vector<int>> out;
    for (std::uint32_t mask = 0; mask < (1u << faces); ++mask) {
        bool good = true;
        for (int x = 0; x < d.crossing_count() && good; ++x) {
            for (int j = 0; j < 4 && good; ++j) {
                const int a = f.face_at(x, j);
                const int b = f.face_at(x, (j + 1) % 4);
                good = ((mask >> a) & 1u) != ((mask >> b) & 1u);
            }
        }
        if (!good) continue;
        std::vector<int> colors(faces);
        for (int i = 0; i < faces; ++i) colors[i] = (mask >> i) & 1u;
        out.push_back(std::move(colors));
    }
    return out;
}

bool nugatory_by_deletion(const Diagram& d, int crossing) {
    const int n = d.crossing_count();
    Dsu dsu(n + 4);
    auto node = [&](HalfEdge h) { return h.crossing == crossing ? n + h.position : h.crossing; };
    for (EdgeLabel e : d.edges()) {
        auto [a, b] = d.ends(e);
        dsu.unite(node(a), node(b));
    }
    std::set<int> roots;
    for (int j = 0; j < 4; ++j) roots.insert(dsu.find(n + j));
    return roots.size() > 1;
}

int circles_by_formula(const TaitGraph& g, const std::vector<int>& shaded_connecting) {
    Dsu dsu(g.vertex_count());
    int components = g.vertex_count();
    for (int x : shaded_connecting) {
        if (dsu.unite(g.edges[x].u, g.edges[x].v)) --components;
    }
    return 2 * components + static_cast<int>(shaded_connecting.size()) - g.vertex_count();
}

std::array<int, 4> smoothing_pairs(const FaceSet& f, const Shading& s, int crossing,
                                   bool shaded_connecting) {
    // Corner u lies between slots u and u+1. Cutting off both corners of one
    // colour joins the slots that bound each of them; that merges the two
    // corners of the other colour through the crossing.
    const bool even_shaded = s.is_shaded(f.face_at(crossing, 0));
    const int cut = (shaded_connecting == even_shaded) ? 1 : 0;  // parity of cut-off corners
    std::array<int, 4> joined{};
    joined[cut] = (cut + 1) % 4;
    joined[(cut + 1) % 4] = cut;
    joined[(cut + 2) % 4] = (cut + 3) % 4;
    joined[(cut + 3) % 4] = (cut + 2) % 4;
    return joined;
}

ColorCounts faces_after_smoothing(const Diagram& d, const FaceSet& f, const Shading& s,
                                  int crossing, bool shaded_connecting) {
    const std::array<int, 4> joined = smoothing_pairs(f, s, crossing, shaded_connecting);

    auto next_corner = [&](HalfEdge corner) {
        HalfEdge h = d.mate({corner.crossing, (corner.position + 1) % 4});
        while (h.crossing == crossing) h = d.mate({crossing, joined[h.position]});
        return h;
    };

    ColorCounts counts;
    std::set<int> seen;
    for (int x = 0; x < d.crossing_count(); ++x) {
        if (x == crossing) continue;
        for (int j = 0; j < 4; ++j) {
            HalfEdge start{x, j};
            if (seen.count(start.index())) continue;
            const bool shaded = s.is_shaded(f.face_at(x, j));
            HalfEdge c = start;
            do {
                seen.insert(c.index());
                if (s.is_shaded(f.face_at(c.crossing, c.position)) != shaded) counts.consistent = false;
                c = next_corner(c);
            } while (c.index() != start.index());
            (shaded ? counts.shaded : counts.unshaded)++;
        }
    }
    return counts;
}

bool is_spanning_tree(const TaitGraph& g, const std::vector<int>& subset) {
    if (static_cast<int>(subset.size()) != g.vertex_count() - 1) return false;
    Dsu dsu(g.vertex_count());
    for (int x : subset) {
        if (!dsu.unite(g.edges[x].u, g.edges[x].v)) return false;
    }
    return true;
}

Diagram random_relabel(const Diagram& d, std::mt19937_64& rng) {
    std::vector<EdgeLabel> pool(4 * d.crossing_count());
    std::iota(pool.begin(), pool.end(), 1);
    std::shuffle(pool.begin(), pool.end(), rng);
    std::map<EdgeLabel, EdgeLabel> relabel;
    for (int i = 0; i < d.edge_count(); ++i) relabel[d.edges()[i]] = pool[i];
    auto quads = d.quads();
    for (auto& q : quads) {
        for (auto& e : q) e = relabel.at(e);
    }
    return Diagram(std::move(quads));
}

Diagram add_kink(const Diagram& d, EdgeLabel e, int variant) {
    const EdgeLabel top = d.edges().back();
    const EdgeLabel loop = top + 1;
    const EdgeLabel tail = top + 2;
    auto quads = d.quads();
    const HalfEdge far = d.ends(e)[1];
    quads[far.crossing][far.position] = tail;
    switch (variant % 4) {
        case 0: quads.push_back({e, loop, loop, tail}); break;
        case 1: quads.push_back({loop, loop, e, tail}); break;
        case 2: quads.push_back({e, tail, loop, loop}); break;
        default: quads.push_back({loop, e, tail, loop}); break;
    }
    return Diagram(std::move(quads));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string data_dir() { return FOURPAGE_DATA_DIR; }

}  // namespace fourpage::oracle
