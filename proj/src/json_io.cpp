#include "atq/json_io.hpp"

#include <algorithm>
#include <charconv>

#include "atq/errors.hpp"

namespace atq {

using nlohmann::json;

namespace {

Integer integer_from_json(const json& j)
{
    const Rational r = rational_from_json(j);
    if (!is_integral(r))
        throw DomainError("bad_json",
                          "expected an integer, got " + format_rational(r));
    return numerator(r);
}

json node_to_json(const Node& n)
{
    json j;
    j["position"] = point_to_json(n.position);
    j["eigenline"] = {n.eigenline.p().convert_to<std::int64_t>(),
                      n.eigenline.q().convert_to<std::int64_t>()};
    j["multiplicity"] = n.multiplicity;
    j["cut_anchor"] = point_to_json(n.cut_anchor);
    return j;
}

Node node_from_json(const json& j)
{
    Node n{point_from_json(j.at("position")),
           PrimitiveVector(integer_from_json(j.at("eigenline").at(0)),
                           integer_from_json(j.at("eigenline").at(1))),
           1, point_from_json(j.at("cut_anchor"))};
    if (j.contains("multiplicity"))
        n.multiplicity = integer_from_json(j.at("multiplicity"))
                             .convert_to<int>();
    return n;
}

json bs_class_to_json(const BSClass& c)
{
    switch (c.kind) {
    case FiberKind::RegularBS:
        return json("regular_bs");
    case FiberKind::EllipticBoundary:
        return json("elliptic_boundary");
    case FiberKind::FocusFocusBS:
        return json{{"focus_focus_bs", c.node_count}};
    case FiberKind::NotBS:
        break;
    }
    return json("not_bs");
}

}  // namespace

json rational_to_json(const Rational& r)
{
    return json(format_rational(r));
}

Rational rational_from_json(const json& j)
{
    if (j.is_number_integer())
        return Rational(Integer(j.get<std::int64_t>()));
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    throw DomainError("bad_json", "expected a rational string or integer");
}

json point_to_json(const RatPoint& p)
{
    return json{rational_to_json(p.x()), rational_to_json(p.y())};
}

RatPoint point_from_json(const json& j)
{
    if (!j.is_array() || j.size() != 2)
        throw DomainError("bad_json", "a point is a two-element array");
    return RatPoint(rational_from_json(j.at(0)), rational_from_json(j.at(1)));
}

json polygon_to_json(const RatPolygon& poly)
{
    json verts = json::array();
    for (const RatPoint& v : poly.vertices())
        verts.push_back(point_to_json(v));
    return json{{"vertices", std::move(verts)}};
}

RatPolygon polygon_from_json(const json& j)
{
    const json& verts = j.at("vertices");
    if (!verts.is_array())
        throw DomainError("bad_json", "\"vertices\" must be an array");
    std::vector<RatPoint> points;
    for (const json& v : verts)
        points.push_back(point_from_json(v));
    return RatPolygon(points);
}

json diagram_to_json(const Diagram& d)
{
    std::vector<Node> nodes = d.nodes;
    std::sort(nodes.begin(), nodes.end(), [](const Node& a, const Node& b) {
        if (!same_point(a.position, b.position))
            return LexLessRat{}(a.position, b.position);
        return LexLessRat{}(a.cut_anchor, b.cut_anchor);
    });
    json njson = json::array();
    for (const Node& n : nodes)
        njson.push_back(node_to_json(n));
    std::vector<std::size_t> traded = d.traded_vertices;
    std::sort(traded.begin(), traded.end());
    return json{{"polygon", polygon_to_json(d.polygon)},
                {"nodes", std::move(njson)},
                {"traded_vertices", traded}};
}

Diagram diagram_from_json(const json& j)
{
    Diagram d{polygon_from_json(j.at("polygon")), {}, {}};
    if (j.contains("nodes"))
        for (const json& nj : j.at("nodes"))
            d.nodes.push_back(node_from_json(nj));
    if (j.contains("traded_vertices")) {
        for (const json& tj : j.at("traded_vertices"))
            d.traded_vertices.push_back(
                integer_from_json(tj).convert_to<std::size_t>());
        std::sort(d.traded_vertices.begin(), d.traded_vertices.end());
        d.traded_vertices.erase(std::unique(d.traded_vertices.begin(),
                                            d.traded_vertices.end()),
                                d.traded_vertices.end());
    }
    return d;
}

json closed_base_to_json(const ClosedBase& c)
{
    return json{{"half_a", diagram_to_json(c.half_a)},
                {"half_b", diagram_to_json(c.half_b)},
                {"gluing_note", c.gluing_note},
                {"tag", c.tag}};
}

ClosedBase closed_base_from_json(const json& j)
{
    ClosedBase c{diagram_from_json(j.at("half_a")),
                 diagram_from_json(j.at("half_b")),
                 j.value("gluing_note", std::string{}),
                 j.value("tag", std::string{})};
    return c;
}

json graded_to_json(const GradedQuant& g)
{
    json out = json::object();
    for (int degree = 0; degree <= 2; ++degree) {
        const GradedComponent c = g.at(degree);
        out[std::to_string(degree)] = {c.finite_rank, c.smooth_copies};
    }
    for (const auto& [degree, c] : g.components())
        if (degree < 0 || degree > 2)
            out[std::to_string(degree)] = {c.finite_rank, c.smooth_copies};
    return out;
}

GradedQuant graded_from_json(const json& j)
{
    if (!j.is_object())
        throw DomainError("bad_json", "graded ranks must be an object");
    GradedQuant g;
    for (const auto& [key, value] : j.items()) {
        int degree = 0;
        const char* end = key.data() + key.size();
        const auto [ptr, ec] = std::from_chars(key.data(), end, degree);
        if (ec != std::errc() || ptr != end)
            throw DomainError("bad_json",
                              "degree key '" + key + "' is not an integer");
        if (!value.is_array() || value.size() != 2)
            throw DomainError("bad_json",
                              "each degree maps to [finite, smooth]");
        g.add(degree, value.at(0).get<std::int64_t>(),
              value.at(1).get<std::int64_t>());
    }
    return g;
}

json report_to_json(const QuantReport& r)
{
    json j;
    if (r.classification) {
        json cls = json::array();
        for (const auto& [point, bs] : *r.classification)
            cls.push_back(json{
                json{rational_to_json(Rational(point.x())),
                     rational_to_json(Rational(point.y()))},
                bs_class_to_json(bs)});
        j["classification"] = std::move(cls);
    } else {
        j["classification"] = nullptr;
    }
    j["graded"] = graded_to_json(r.graded);
    j["symplectic_volume"] = r.symplectic_volume
                                 ? rational_to_json(*r.symplectic_volume)
                                 : json(nullptr);
    j["kaehler_dimension"] =
        r.kaehler_dimension ? json(*r.kaehler_dimension) : json(nullptr);
    j["truncated"] = r.truncated;
    return j;
}

json semitoric_to_json(const SemitoricModel& m)
{
    json region;
    if (const auto* poly = std::get_if<RatPolygon>(&m.region.shape)) {
        region["polygon"] = polygon_to_json(*poly);
    } else {
        json planes = json::array();
        for (const HalfPlane& h :
             std::get<std::vector<HalfPlane>>(m.region.shape))
            planes.push_back(
                json{{"normal",
                      {h.normal.x().convert_to<std::int64_t>(),
                       h.normal.y().convert_to<std::int64_t>()}},
                     {"offset", rational_to_json(h.offset)}});
        region["halfplanes"] = std::move(planes);
    }
    json nodes = json::array();
    for (const Node& n : m.nodes)
        nodes.push_back(node_to_json(n));
    return json{{"region", std::move(region)}, {"nodes", std::move(nodes)}};
}

SemitoricModel semitoric_from_json(const json& j)
{
    SemitoricModel m;
    const json& region = j.at("region");
    if (region.contains("polygon")) {
        m.region.shape = polygon_from_json(region.at("polygon"));
    } else if (region.contains("halfplanes")) {
        std::vector<HalfPlane> planes;
        for (const json& hj : region.at("halfplanes")) {
            HalfPlane h;
            h.normal = (IntVec2() << integer_from_json(hj.at("normal").at(0)),
                        integer_from_json(hj.at("normal").at(1)))
                           .finished();
            if (h.normal.x() == 0 && h.normal.y() == 0)
                throw DomainError("bad_json", "half-plane normal is zero");
            h.offset = rational_from_json(hj.at("offset"));
            planes.push_back(h);
        }
        m.region.shape = std::move(planes);
    } else {
        throw DomainError("bad_json",
                          "region needs \"polygon\" or \"halfplanes\"");
    }
    if (j.contains("nodes"))
        for (const json& nj : j.at("nodes"))
            m.nodes.push_back(node_from_json(nj));
    return m;
}

json violations_to_json(const std::vector<Violation>& v)
{
    json list = json::array();
    for (const Violation& item : v)
        list.push_back(json{{"code", item.code}, {"detail", item.detail}});
    return json{{"violations", std::move(list)}};
}

std::string dump_canonical(const json& j)
{
    return j.dump(2) + "\n";
}

}  // namespace atq
