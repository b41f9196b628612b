#include "panelopt/svg.hpp"

#include <algorithm>
#include <cstdio>

namespace panelopt {

std::string airfoil_svg(const Airfoil& airfoil, bool show_control_points) {
    constexpr double width = 800.0;
    constexpr double margin = 40.0;
    const auto& pts = airfoil.points();
    double xmin = pts[0].x, xmax = pts[0].x, ymin = pts[0].y, ymax = pts[0].y;
    for (const auto& p : pts) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    const double scale = (width - 2.0 * margin) / std::max(xmax - xmin, 1e-12);
    const double height = (ymax - ymin) * scale + 2.0 * margin;
    auto sx = [&](double x) { return margin + (x - xmin) * scale; };
    auto sy = [&](double y) { return margin + (ymax - y) * scale; };  // SVG y grows downwards

    std::string out;
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\" "
                  "viewBox=\"0 0 %.0f %.0f\">\n",
                  width, height, width, height);
    out += buf;
    out += "<title>" + airfoil.name() + "</title>\n";
    out += "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" points=\"";
    for (const auto& p : pts) {
        std::snprintf(buf, sizeof buf, "%.3f,%.3f ", sx(p.x), sy(p.y));
        out += buf;
    }
    out += "\"/>\n";
    if (show_control_points) {
        for (const auto& pan : panels(airfoil)) {
            std::snprintf(buf, sizeof buf, "<circle cx=\"%.3f\" cy=\"%.3f\" r=\"2\" fill=\"red\"/>\n", sx(pan.mid.x),
                          sy(pan.mid.y));
            out += buf;
        }
    }
    out += "</svg>\n";
    return out;
}

}  // namespace panelopt
