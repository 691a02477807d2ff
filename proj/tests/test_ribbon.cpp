#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <set>

#include "fixtures.hpp"
#include "fourpage/error.hpp"
#include "fourpage/ribbon.hpp"

using namespace fourpage;
using fourpage::testing::all_tables;

namespace {

RibbonPlan plan_for(const Diagram& d) { return ribbon_plan(alpha4_upper_bound(d).presentation); }

ErrorKind error_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorKind::InvalidPresentation;
}

double cross(Point o, Point a, Point b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

bool segments_meet(Point a, Point b, Point c, Point d) {
    auto on = [](Point p, Point q, Point r) {
        return std::min(p.x, q.x) - 1e-9 <= r.x && r.x <= std::max(p.x, q.x) + 1e-9 &&
               std::min(p.y, q.y) - 1e-9 <= r.y && r.y <= std::max(p.y, q.y) + 1e-9;
    };
    const double d1 = cross(c, d, a);
    const double d2 = cross(c, d, b);
    const double d3 = cross(a, b, c);
    const double d4 = cross(a, b, d);
    if (((d1 > 1e-9 && d2 < -1e-9) || (d1 < -1e-9 && d2 > 1e-9)) &&
        ((d3 > 1e-9 && d4 < -1e-9) || (d3 < -1e-9 && d4 > 1e-9))) {
        return true;
    }
    return (std::abs(d1) <= 1e-9 && on(c, d, a)) || (std::abs(d2) <= 1e-9 && on(c, d, b)) ||
           (std::abs(d3) <= 1e-9 && on(a, b, c)) || (std::abs(d4) <= 1e-9 && on(a, b, d));
}

bool polylines_meet(const std::vector<Point>& p, const std::vector<Point>& q) {
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        for (std::size_t j = 0; j + 1 < q.size(); ++j) {
            if (segments_meet(p[i], p[i + 1], q[j], q[j + 1])) return true;
        }
    }
    return false;
}

}  // namespace

TEST(RibbonPlan, TrefoilStations) {
    const CircularPresentation p = alpha4_upper_bound(fourpage::testing::trefoil()).presentation;
    const RibbonPlan plan = ribbon_plan(p);
    EXPECT_EQ(plan.components.size(), 1u);
    EXPECT_EQ(plan.station_count(), 6);
    EXPECT_EQ(plan.connections.size(), 6u);
    EXPECT_DOUBLE_EQ(plan.width, 1.0);
    std::set<EdgeLabel> covered;
    for (const auto& st : plan.components[0]) covered.insert(st.edge);
    EXPECT_EQ(covered.size(), 6u);
}

TEST(RibbonPlan, HopfHasTwoComponents) {
    const RibbonPlan plan = plan_for(fourpage::testing::hopf());
    EXPECT_EQ(plan.components.size(), 2u);
    EXPECT_EQ(plan.station_count(), 4);
}

TEST(RibbonPlan, TurnMatchesPagePair) {
    for (const auto& fx : all_tables()) {
        const RibbonPlan plan = plan_for(fx.diagram);
        EXPECT_EQ(static_cast<int>(plan.components.size()), link_component_count(fx.diagram));
        for (const auto& component : plan.components) {
            for (const Station& st : component) {
                EXPECT_NE(st.pages[0], st.pages[1]) << fx.name;
                if (opposite_pages(st.pages[0], st.pages[1])) {
                    EXPECT_EQ(st.turn, Turn::straight180);
                    EXPECT_EQ(st.diagonal, Diagonal::none);
                } else {
                    EXPECT_EQ(st.turn, Turn::fold90);
                    EXPECT_NE(st.diagonal, Diagonal::none);
                }
            }
        }
    }
}

TEST(RibbonPlan, StationsFollowArcs) {
    // Consecutive stations of a component share the arc between them, so the
    // leaving page of one is the arriving page of the next.
    for (const auto& fx : all_tables()) {
        for (const auto& component : plan_for(fx.diagram).components) {
            for (std::size_t i = 0; i < component.size(); ++i) {
                const Station& a = component[i];
                const Station& b = component[(i + 1) % component.size()];
                EXPECT_EQ(a.pages[1], b.pages[0]) << fx.name;
            }
        }
    }
}

TEST(RibbonPlan, RejectsInvalidPresentation) {
    CircularPresentation p = alpha4_upper_bound(fourpage::testing::trefoil()).presentation;
    for (auto& s : p.crossing_side) s = Side::inside;
    for (auto& a : p.arcs) a.side = Side::inside;
    EXPECT_EQ(error_of([&] { ribbon_plan(p); }), ErrorKind::InvalidPresentation);
}

TEST(RibbonBound, TrefoilAnyEpsilon) {
    const RibbonPlan plan = plan_for(fourpage::testing::trefoil());
    for (double eps : {1.0, 0.5, 0.01, 1e-9}) {
        const RibbonBound b = ribbon_bound(plan, eps);
        EXPECT_EQ(b.bound, 6);
        EXPECT_EQ(b.arcs, 6);
        EXPECT_DOUBLE_EQ(b.length, 6 + 6 * eps);
        EXPECT_GT(b.ratio, 6.0);
    }
}

TEST(RibbonBound, HopfAndNonAlternating) {
    EXPECT_EQ(ribbon_bound(plan_for(fourpage::testing::hopf()), 0.1).bound, 4);
    EXPECT_LE(ribbon_bound(plan_for(fourpage::testing::table("8_19").diagram), 0.1).bound, 15);
}

TEST(RibbonBound, LengthDecreasesTowardArcCount) {
    const RibbonPlan plan = plan_for(fourpage::testing::table("5_2").diagram);
    double previous = std::numeric_limits<double>::infinity();
    for (double eps = 1.0; eps > 1e-6; eps /= 3) {
        const RibbonBound b = ribbon_bound(plan, eps);
        EXPECT_LT(b.length, previous);
        EXPECT_GT(b.length, b.bound);
        previous = b.length;
    }
    EXPECT_NEAR(ribbon_bound(plan, 1e-12).length, 10.0, 1e-9);
}

TEST(RibbonBound, NonPositiveEpsilon) {
    const RibbonPlan plan = plan_for(fourpage::testing::trefoil());
    for (double eps : {0.0, -1.0, std::numeric_limits<double>::quiet_NaN(),
                       std::numeric_limits<double>::infinity()}) {
        EXPECT_EQ(error_of([&] { ribbon_bound(plan, eps); }), ErrorKind::NonPositiveEpsilon);
    }
}

TEST(Schematic, TrefoilCounts) {
    const RibbonPlan plan = plan_for(fourpage::testing::trefoil());
    const Schematic s = ribbon_schematic(plan);
    EXPECT_EQ(s.squares.size(), 6u);
    EXPECT_EQ(s.connectors.size(), 6u);
    EXPECT_EQ(s.labels.size(), 6u);
    int folds = 0;
    for (const auto& st : plan.components[0]) folds += st.turn == Turn::fold90;
    EXPECT_EQ(static_cast<int>(s.fold_marks.size()), folds);
}

TEST(Schematic, HopfCounts) {
    const Schematic s = ribbon_schematic(plan_for(fourpage::testing::hopf()));
    EXPECT_EQ(s.squares.size(), 4u);
    EXPECT_EQ(s.connectors.size(), 4u);
}

TEST(Schematic, StraightChainIsCollinear) {
    RibbonPlan plan;
    std::vector<Station> chain;
    for (int i = 0; i < 4; ++i) {
        chain.push_back({i + 1, i, {Page::P1, Page::P3}, Turn::straight180, Diagonal::none});
    }
    plan.components.push_back(chain);
    const Schematic s = ribbon_schematic(plan);
    EXPECT_TRUE(s.fold_marks.empty());
    ASSERT_EQ(s.squares.size(), 4u);
    for (std::size_t i = 0; i < s.squares.size(); ++i) {
        EXPECT_DOUBLE_EQ(s.squares[i].corner.y, 0.0);
        if (i > 0) {
            EXPECT_GT(s.squares[i].corner.x, s.squares[i - 1].corner.x + s.squares[i - 1].size);
        }
    }
}

TEST(Schematic, LanesDoNotCrossWithinAPage) {
    for (const auto& fx : all_tables()) {
        const Schematic s = ribbon_schematic(plan_for(fx.diagram));
        for (std::size_t i = 0; i < s.connectors.size(); ++i) {
            const Connector& a = s.connectors[i];
            const bool upper = a.page == Page::P1 || a.page == Page::P2;
            for (const Point& pt : a.path) {
                EXPECT_TRUE(upper ? pt.y >= 1.0 : pt.y <= 0.0) << fx.name;
            }
            for (std::size_t j = i + 1; j < s.connectors.size(); ++j) {
                const Connector& b = s.connectors[j];
                if (a.page != b.page) continue;
                EXPECT_FALSE(polylines_meet(a.path, b.path)) << fx.name << " arcs " << a.arc
                                                             << " and " << b.arc;
            }
        }
    }
}

TEST(Schematic, SquaresDisjoint) {
    const Schematic s = ribbon_schematic(plan_for(fourpage::testing::table("8_19").diagram));
    for (std::size_t i = 1; i < s.squares.size(); ++i) {
        EXPECT_GE(s.squares[i].corner.x, s.squares[i - 1].corner.x + 1.0);
    }
}
