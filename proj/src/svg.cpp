#include "atq/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <vector>

namespace atq {

namespace {

std::string fmt(double v)
{
    if (v == 0)
        v = 0;  // avoid "-0"
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string fmt(const Rational& r)
{
    return fmt(r.convert_to<double>());
}

struct Box {
    double x0 = 0, y0 = 0, x1 = 0, y1 = 0;
};

Box bounding_box(const RatPolygon& poly)
{
    Box b;
    bool first = true;
    for (const RatPoint& v : poly.vertices()) {
        const double x = v.x().convert_to<double>();
        const double y = v.y().convert_to<double>();
        if (first) {
            b = Box{x, y, x, y};
            first = false;
        } else {
            b.x0 = std::min(b.x0, x);
            b.y0 = std::min(b.y0, y);
            b.x1 = std::max(b.x1, x);
            b.y1 = std::max(b.y1, y);
        }
    }
    return b;
}

// y is negated on output so larger y draws higher.
void emit_diagram(std::ostringstream& out, const Diagram& d, double dx)
{
    std::vector<Node> nodes = d.nodes;
    std::sort(nodes.begin(), nodes.end(), [](const Node& a, const Node& b) {
        if (!same_point(a.position, b.position))
            return LexLessRat{}(a.position, b.position);
        return LexLessRat{}(a.cut_anchor, b.cut_anchor);
    });

    out << "  <path class=\"outline\" d=\"";
    const auto& verts = d.polygon.vertices();
    for (std::size_t i = 0; i < verts.size(); ++i) {
        out << (i == 0 ? "M " : " L ");
        out << fmt(verts[i].x().convert_to<double>() + dx) << ' '
            << fmt(-verts[i].y().convert_to<double>());
    }
    out << " Z\" fill=\"none\" stroke=\"black\" stroke-width=\"0.06\"/>\n";

    const LatticePartition lattice = lattice_points(d.polygon);
    for (const IntVec2& p : lattice.boundary)
        out << "  <circle class=\"boundary\" cx=\""
            << fmt(p.x().convert_to<double>() + dx) << "\" cy=\""
            << fmt(-p.y().convert_to<double>())
            << "\" r=\"0.07\" fill=\"black\"/>\n";
    for (const IntVec2& p : lattice.interior) {
        const RatPoint rp = to_rat(p);
        const bool is_node =
            std::any_of(nodes.begin(), nodes.end(), [&rp](const Node& n) {
                return same_point(n.position, rp);
            });
        if (is_node)
            continue;
        out << "  <circle class=\"interior\" cx=\""
            << fmt(p.x().convert_to<double>() + dx) << "\" cy=\""
            << fmt(-p.y().convert_to<double>())
            << "\" r=\"0.13\" fill=\"black\"/>\n";
    }
    for (const Node& n : nodes)
        out << "  <line class=\"cut\" x1=\""
            << fmt(n.cut_anchor.x().convert_to<double>() + dx) << "\" y1=\""
            << fmt(-n.cut_anchor.y().convert_to<double>()) << "\" x2=\""
            << fmt(n.position.x().convert_to<double>() + dx) << "\" y2=\""
            << fmt(-n.position.y().convert_to<double>())
            << "\" stroke=\"black\" stroke-width=\"0.05\""
               " stroke-dasharray=\"0.2 0.12\"/>\n";
    for (const Node& n : nodes) {
        const std::string cx = fmt(n.position.x().convert_to<double>() + dx);
        const std::string cy = fmt(-n.position.y().convert_to<double>());
        out << "  <g class=\"node\">\n"
            << "    <circle cx=\"" << cx << "\" cy=\"" << cy
            << "\" r=\"0.13\" fill=\"black\"/>\n"
            << "    <circle cx=\"" << cx << "\" cy=\"" << cy
            << "\" r=\"0.27\" fill=\"none\" stroke=\"black\""
               " stroke-width=\"0.05\"/>\n"
            << "  </g>\n";
    }
}

std::string wrap(const Box& world, const std::string& body)
{
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\""
        << fmt(world.x0 - 1) << ' ' << fmt(-world.y1 - 1) << ' '
        << fmt(world.x1 - world.x0 + 2) << ' ' << fmt(world.y1 - world.y0 + 2)
        << "\">\n"
        << body << "</svg>\n";
    return out.str();
}

}  // namespace

std::string render_svg(const Diagram& d)
{
    std::ostringstream body;
    emit_diagram(body, d, 0);
    return wrap(bounding_box(d.polygon), body.str());
}

std::string render_svg(const ClosedBase& c)
{
    const Box a = bounding_box(c.half_a.polygon);
    const Box b = bounding_box(c.half_b.polygon);
    const double dx = (a.x1 + 3) - b.x0;
    std::ostringstream body;
    emit_diagram(body, c.half_a, 0);
    emit_diagram(body, c.half_b, dx);
    const Box world{a.x0, std::min(a.y0, b.y0), dx + b.x1,
                    std::max(a.y1, b.y1)};
    return wrap(world, body.str());
}

}  // namespace atq
