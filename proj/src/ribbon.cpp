#include "fourpage/ribbon.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "fourpage/error.hpp"

namespace fourpage {

int RibbonPlan::station_count() const {
    int n = 0;
    for (const auto& c : components) n += static_cast<int>(c.size());
    return n;
}

namespace {

Diagonal fold_diagonal(Page a, Page b) {
    const int lo = std::min(static_cast<int>(a), static_cast<int>(b));
    const int hi = std::max(static_cast<int>(a), static_cast<int>(b));
    if ((lo == 1 && hi == 2) || (lo == 3 && hi == 4)) return Diagonal::rising;
    return Diagonal::falling;
}

}  // namespace

RibbonPlan ribbon_plan(const CircularPresentation& p) {
    const VerifyReport report = verify(p);
    if (!report.ok()) {
        std::string why = report.problems.empty() ? "verification failed" : report.problems.front();
        throw Error(ErrorKind::InvalidPresentation, "cannot plan a ribbon: " + why);
    }

    RibbonPlan plan;
    std::map<EdgeLabel, std::vector<int>> arcs_at;
    for (int a = 0; a < p.arc_count(); ++a) {
        for (EdgeLabel e : p.arcs[a].endpoints) arcs_at[e].push_back(a);
        const Page page = page_of(p.arcs[a].type());
        plan.connections.push_back({a, p.position_of(p.arcs[a].endpoints[0]),
                                    p.position_of(p.arcs[a].endpoints[1]), page});
    }

    std::vector<char> visited(p.binding_count(), 0);
    for (const auto& start : p.binding) {
        if (visited[start.position]) continue;
        std::vector<Station> component;
        EdgeLabel here = start.edge;
        int leaving = arcs_at[here][0];
        int arriving = arcs_at[here][1];
        do {
            const int pos = p.position_of(here);
            visited[pos] = 1;
            const Page in = page_of(p.arcs[arriving].type());
            const Page out = page_of(p.arcs[leaving].type());
            Station s{here, pos, {in, out}, Turn::fold90, Diagonal::none};
            if (opposite_pages(in, out)) {
                s.turn = Turn::straight180;
            } else {
                s.diagonal = fold_diagonal(in, out);
            }
            component.push_back(s);

            const auto& ends = p.arcs[leaving].endpoints;
            here = (ends[0] == here) ? ends[1] : ends[0];
            arriving = leaving;
            const auto& next = arcs_at[here];
            leaving = (next[0] == arriving) ? next[1] : next[0];
        } while (here != start.edge);
        plan.components.push_back(std::move(component));
    }
    return plan;
}

RibbonBound ribbon_bound(const RibbonPlan& plan, double epsilon) {
    if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
        throw Error(ErrorKind::NonPositiveEpsilon, "epsilon must be a positive finite number");
    }
    RibbonBound b;
    b.arcs = plan.station_count();
    b.connections = static_cast<int>(plan.connections.size());
    b.epsilon = epsilon;
    b.length = b.arcs + b.connections * epsilon;
    b.ratio = b.length / plan.width;
    b.bound = b.arcs;
    return b;
}

namespace {

constexpr double kPitch = 2.0;     // distance between square origins
constexpr double kLevelStep = 0.5;  // height per nesting level

bool page_is_upper(Page page) { return page == Page::P1 || page == Page::P2; }

}  // namespace

Schematic ribbon_schematic(const RibbonPlan& plan) {
    Schematic s;
    const int n = plan.station_count();
    s.width = n > 0 ? kPitch * (n - 1) + 1.0 : 0.0;
    s.max_y = 1.0;
    s.min_y = 0.0;

    for (const auto& component : plan.components) {
        for (const Station& st : component) {
            SchematicSquare sq{{kPitch * st.position, 0.0}, 1.0, st.edge, st.position, st.turn,
                               st.diagonal};
            if (st.diagonal == Diagonal::rising) {
                s.fold_marks.push_back({sq.corner, {sq.corner.x + 1.0, 1.0}});
            } else if (st.diagonal == Diagonal::falling) {
                s.fold_marks.push_back({{sq.corner.x, 1.0}, {sq.corner.x + 1.0, 0.0}});
            }
            s.labels.push_back({{sq.corner.x + 0.5, 0.5}, std::to_string(st.edge)});
            s.squares.push_back(sq);
        }
    }
    std::sort(s.squares.begin(), s.squares.end(),
              [](const SchematicSquare& a, const SchematicSquare& b) { return a.position < b.position; });

    // Nesting level per connection: one more than the deepest same-page
    // connection strictly inside its span.
    const int m = static_cast<int>(plan.connections.size());
    std::vector<int> order(m);
    for (int i = 0; i < m; ++i) order[i] = i;
    auto span = [&](int i) {
        const auto& c = plan.connections[i];
        return std::pair{std::min(c.from_position, c.to_position),
                         std::max(c.from_position, c.to_position)};
    };
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        auto [a0, a1] = span(a);
        auto [b0, b1] = span(b);
        return (a1 - a0) < (b1 - b0) || ((a1 - a0) == (b1 - b0) && a < b);
    });
    std::vector<int> level(m, 1);
    for (int k = 0; k < m; ++k) {
        const int i = order[k];
        auto [lo, hi] = span(i);
        for (int j = 0; j < k; ++j) {
            const int inner = order[j];
            if (plan.connections[inner].page != plan.connections[i].page) continue;
            auto [ilo, ihi] = span(inner);
            if (lo <= ilo && ihi <= hi) level[i] = std::max(level[i], level[inner] + 1);
        }
    }

    std::array<int, 4> deepest{};
    for (int i = 0; i < m; ++i) {
        const int page = static_cast<int>(plan.connections[i].page) - 1;
        deepest[page] = std::max(deepest[page], level[i]);
    }

    for (int i = 0; i < m; ++i) {
        const auto& c = plan.connections[i];
        auto [lo, hi] = span(i);
        const double x0 = kPitch * lo + 0.5;
        const double x1 = kPitch * hi + 0.5;
        double base = 0.0;
        double y = 0.0;
        switch (c.page) {
            case Page::P1: base = 1.0; y = base + kLevelStep * level[i]; break;
            case Page::P2: base = 1.0; y = base + kLevelStep * (deepest[0] + level[i]); break;
            case Page::P3: base = 0.0; y = base - kLevelStep * level[i]; break;
            case Page::P4: base = 0.0; y = base - kLevelStep * (deepest[2] + level[i]); break;
        }
        s.connectors.push_back({{{x0, base}, {x0, y}, {x1, y}, {x1, base}}, c.page, c.arc, level[i]});
        if (page_is_upper(c.page)) {
            s.max_y = std::max(s.max_y, y);
        } else {
            s.min_y = std::min(s.min_y, y);
        }
    }
    return s;
}

}  // namespace fourpage
