#ifndef FOURPAGE_RIBBON_HPP
#define FOURPAGE_RIBBON_HPP

#include <array>
#include <string>
#include <vector>

#include "fourpage/binding.hpp"

namespace fourpage {

enum class Turn { fold90, straight180 };

// Which diagonal of the unit square a fold runs along.
enum class Diagonal { none, rising, falling };

// A unit square of ribbon at one binding point.
struct Station {
    EdgeLabel edge = 0;
    int position = 0;              // in the binding order
    std::array<Page, 2> pages{};   // arriving arc's page, leaving arc's page
    Turn turn = Turn::straight180;
    Diagonal diagonal = Diagonal::none;
};

// A piece of ribbon inside one page joining two stations.
struct Connection {
    int arc = 0;
    int from_position = 0;
    int to_position = 0;
    Page page = Page::P1;
};

struct RibbonPlan {
    std::vector<std::vector<Station>> components;  // traversal order per link component
    std::vector<Connection> connections;
    double width = 1.0;

    int station_count() const;
};

RibbonPlan ribbon_plan(const CircularPresentation& p);

struct RibbonBound {
    int arcs = 0;
    int connections = 0;
    double epsilon = 0.0;
    double length = 0.0;  // arcs + connections * epsilon
    double ratio = 0.0;   // length / width
    int bound = 0;        // the infimum over epsilon, equal to arcs
};

RibbonBound ribbon_bound(const RibbonPlan& plan, double epsilon);

struct Point {
    double x = 0.0;
    double y = 0.0;
};

struct Segment {
    Point a;
    Point b;
};

struct SchematicSquare {
    Point corner;  // lower left
    double size = 1.0;
    EdgeLabel edge = 0;
    int position = 0;
    Turn turn = Turn::straight180;
    Diagonal diagonal = Diagonal::none;
};

struct Connector {
    std::vector<Point> path;
    Page page = Page::P1;
    int arc = 0;
    int level = 0;  // nesting depth inside its page lane, innermost is 1
};

struct Label {
    Point at;
    std::string text;
};

struct Schematic {
    std::vector<SchematicSquare> squares;
    std::vector<Segment> fold_marks;
    std::vector<Connector> connectors;
    std::vector<Label> labels;
    double min_y = 0.0;
    double max_y = 0.0;
    double width = 0.0;
};

// Squares sit along a horizontal axis in binding order. P1 and P2 connectors
// run above the axis, P3 and P4 below, each page in its own band.
Schematic ribbon_schematic(const RibbonPlan& plan);

}  // namespace fourpage

#endif  // FOURPAGE_RIBBON_HPP
