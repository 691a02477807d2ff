#include "fourpage/cli/svg.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace fourpage::cli {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", std::abs(v) < 5e-4 ? 0.0 : v);
    return buf;
}

const char* page_color(Page page) {
    switch (page) {
        case Page::P1: return "#d62728";
        case Page::P2: return "#1f77b4";
        case Page::P3: return "#2ca02c";
        case Page::P4: return "#9467bd";
    }
    return "#000000";
}

void svg_open(std::ostringstream& out, double width, double height) {
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(width)
        << "\" height=\"" << num(height) << "\" viewBox=\"0 0 " << num(width) << ' ' << num(height)
        << "\">\n"
        << "<rect x=\"0\" y=\"0\" width=\"" << num(width) << "\" height=\"" << num(height)
        << "\" fill=\"white\"/>\n";
}

void legend(std::ostringstream& out, double x, double y) {
    const char* names[] = {"P1 inside/over", "P2 outside/over", "P3 inside/under", "P4 outside/under"};
    for (int i = 0; i < 4; ++i) {
        const Page page = static_cast<Page>(i + 1);
        out << "<line x1=\"" << num(x) << "\" y1=\"" << num(y + 16 * i) << "\" x2=\"" << num(x + 24)
            << "\" y2=\"" << num(y + 16 * i) << "\" stroke=\"" << page_color(page)
            << "\" stroke-width=\"3\"/>\n"
            << "<text x=\"" << num(x + 30) << "\" y=\"" << num(y + 16 * i + 4)
            << "\" font-family=\"sans-serif\" font-size=\"11\">" << names[i] << "</text>\n";
    }
}

}  // namespace

std::string presentation_svg(const CircularPresentation& p) {
    constexpr double size = 640.0;
    constexpr double cx = 320.0;
    constexpr double cy = 320.0;
    constexpr double radius = 180.0;
    const int n = p.binding_count();
    auto angle = [&](int pos) { return 2.0 * std::numbers::pi * pos / std::max(n, 1) - std::numbers::pi / 2; };
    auto at = [&](int pos, double r) {
        return std::pair{cx + r * std::cos(angle(pos)), cy + r * std::sin(angle(pos))};
    };

    std::ostringstream out;
    svg_open(out, size, size);
    out << "<text x=\"16\" y=\"24\" font-family=\"sans-serif\" font-size=\"14\">"
        << (p.source.name.empty() ? std::string("presentation") : p.source.name) << ": " << n
        << " binding points</text>\n";
    out << "<circle class=\"binding-circle\" cx=\"" << num(cx) << "\" cy=\"" << num(cy) << "\" r=\""
        << num(radius) << "\" fill=\"none\" stroke=\"#444444\" stroke-width=\"1.5\"/>\n";

    for (std::size_t a = 0; a < p.arcs.size(); ++a) {
        const CutArc& arc = p.arcs[a];
        const int i = p.position_of(arc.endpoints[0]);
        const int j = p.position_of(arc.endpoints[1]);
        auto [x0, y0] = at(i, radius);
        auto [x1, y1] = at(j, radius);
        double qx = cx;
        double qy = cy;
        if (arc.side == Side::inside) {
            // Pull the chord towards the centre; short chords stay near the rim.
            auto [mx, my] = std::pair{(x0 + x1) / 2, (y0 + y1) / 2};
            qx = cx + 0.35 * (mx - cx);
            qy = cy + 0.35 * (my - cy);
        } else {
            int gap = (j - i + n) % n;
            double mid = angle(i) + 2.0 * std::numbers::pi * gap / (2.0 * n);
            if (gap > n / 2) {
                gap = n - gap;
                mid = angle(j) + 2.0 * std::numbers::pi * gap / (2.0 * n);
            }
            const double r = radius * (1.25 + 0.9 * gap / std::max(n, 1));
            qx = cx + r * std::cos(mid);
            qy = cy + r * std::sin(mid);
        }
        out << "<path class=\"arc\" data-arc=\"" << a << "\" d=\"M " << num(x0) << ' ' << num(y0)
            << " Q " << num(qx) << ' ' << num(qy) << ' ' << num(x1) << ' ' << num(y1)
            << "\" fill=\"none\" stroke=\"" << page_color(page_of(arc.type()))
            << "\" stroke-width=\"2\"" << (arc.pass == Pass::under ? " stroke-dasharray=\"6 4\"" : "")
            << "/>\n";
    }

    for (const auto& b : p.binding) {
        auto [x, y] = at(b.position, radius);
        auto [lx, ly] = at(b.position, radius - 16);
        out << "<circle class=\"binding-point\" cx=\"" << num(x) << "\" cy=\"" << num(y)
            << "\" r=\"4\" fill=\"black\"/>\n"
            << "<text x=\"" << num(lx) << "\" y=\"" << num(ly + 4)
            << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">" << b.edge
            << "</text>\n";
    }
    legend(out, 16, size - 70);
    out << "</svg>\n";
    return out.str();
}

std::string ribbon_svg(const Schematic& s) {
    constexpr double unit = 36.0;
    constexpr double margin = 40.0;
    const double width = s.width * unit + 2 * margin + 140;
    const double height = (s.max_y - s.min_y) * unit + 2 * margin;
    auto X = [&](double x) { return margin + x * unit; };
    auto Y = [&](double y) { return margin + (s.max_y - y) * unit; };

    std::ostringstream out;
    svg_open(out, width, height);
    out << "<line class=\"binding-axis\" x1=\"" << num(X(-0.5)) << "\" y1=\"" << num(Y(0.5))
        << "\" x2=\"" << num(X(s.width + 0.5)) << "\" y2=\"" << num(Y(0.5))
        << "\" stroke=\"#bbbbbb\" stroke-dasharray=\"2 3\"/>\n";
    for (const auto& c : s.connectors) {
        out << "<polyline class=\"connector\" data-page=\"" << static_cast<int>(c.page)
            << "\" points=\"";
        for (std::size_t i = 0; i < c.path.size(); ++i) {
            out << (i ? " " : "") << num(X(c.path[i].x)) << ',' << num(Y(c.path[i].y));
        }
        out << "\" fill=\"none\" stroke=\"" << page_color(c.page) << "\" stroke-width=\"2\"/>\n";
    }
    for (const auto& sq : s.squares) {
        out << "<rect class=\"ribbon-square\" x=\"" << num(X(sq.corner.x)) << "\" y=\""
            << num(Y(sq.corner.y + sq.size)) << "\" width=\"" << num(sq.size * unit)
            << "\" height=\"" << num(sq.size * unit)
            << "\" fill=\"#f2e6c9\" stroke=\"#333333\"/>\n";
    }
    for (const auto& f : s.fold_marks) {
        out << "<line class=\"fold\" x1=\"" << num(X(f.a.x)) << "\" y1=\"" << num(Y(f.a.y))
            << "\" x2=\"" << num(X(f.b.x)) << "\" y2=\"" << num(Y(f.b.y))
            << "\" stroke=\"#333333\" stroke-dasharray=\"3 2\"/>\n";
    }
    for (const auto& l : s.labels) {
        out << "<text x=\"" << num(X(l.at.x)) << "\" y=\"" << num(Y(l.at.y) + 4)
            << "\" font-family=\"sans-serif\" font-size=\"10\" text-anchor=\"middle\">" << l.text
            << "</text>\n";
    }
    legend(out, X(s.width) + 30, margin);
    out << "</svg>\n";
    return out.str();
}

}  // namespace fourpage::cli
