#include "atq/catalog.hpp"

#include <algorithm>
#include <cmath>

#include "atq/errors.hpp"

namespace atq {

namespace {

RatPoint rp(const Rational& x, const Rational& y)
{
    return RatPoint(x, y);
}

constexpr double kPi = 3.14159265358979323846;

}  // namespace

RatPolygon cp2(const Integer& d)
{
    if (d < 1)
        throw DomainError("bad_parameter", "scale must be >= 1");
    const Rational s(d);
    return RatPolygon({rp(0, 0), rp(s, 0), rp(0, s)});
}

RatPolygon cp2_blowup9()
{
    RatPolygon poly = cp2(9);
    const auto chop_at = [&poly](const Rational& x, const Rational& y,
                                 const Rational& size) {
        const auto idx = vertex_index(poly, rp(x, y));
        poly = corner_chop(poly, *idx, size);
    };
    chop_at(0, 0, 3);
    chop_at(9, 0, 3);
    chop_at(0, 9, 3);
    chop_at(3, 0, 1);
    chop_at(6, 0, 1);
    chop_at(6, 3, 1);
    chop_at(3, 6, 1);
    chop_at(0, 6, 1);
    chop_at(0, 3, 1);
    return poly;
}

Diagram k3_half()
{
    // Twelve nodes one lattice step inside their anchors. At half the
    // corners the step direction is the traded eigenline u+w; at the other
    // half it is u+2w, which keeps the twelve cuts disjoint (a u+w cut to
    // those points would run through a neighboring node).
    struct Entry {
        int ax, ay, ex, ey;
    };
    static const Entry entries[] = {
        {4, 0, -1, 1}, {5, 0, -1, 1}, {6, 1, -1, 0}, {6, 2, -1, 0},
        {5, 4, 0, -1}, {4, 5, 0, -1}, {2, 6, 1, -1}, {1, 6, 1, -1},
        {0, 5, 1, 0},  {0, 4, 1, 0},  {1, 2, 0, 1},  {2, 1, 0, 1},
    };
    Diagram d{cp2_blowup9(), {}, {}};
    for (const Entry& e : entries) {
        const RatPoint anchor = rp(e.ax, e.ay);
        const PrimitiveVector eigenline{Integer(e.ex), Integer(e.ey)};
        d.nodes.push_back(Node{anchor + to_rat(eigenline.vec()), eigenline, 1,
                               anchor});
        d.traded_vertices.push_back(*vertex_index(d.polygon, anchor));
    }
    std::sort(d.traded_vertices.begin(), d.traded_vertices.end());
    return d;
}

ClosedBase k3()
{
    return symplectic_sum(k3_half(), k3_half(), true, "k3");
}

Diagram s2xs2(bool traded)
{
    Diagram d{RatPolygon({rp(0, 0), rp(2, 0), rp(2, 2), rp(0, 2)}), {}, {}};
    if (traded)
        d = nodal_trade(d, *vertex_index(d.polygon, rp(2, 2)), 1);
    return d;
}

MomentSample sample_spin_spin(int grid)
{
    if (grid < 2)
        throw DomainError("bad_parameter", "grid must be >= 2");
    MomentSample out;
    out.rows.reserve(static_cast<std::size_t>(grid) * grid * grid * grid);
    const auto sphere = [grid](int i, int j, double& x, double& y, double& z) {
        const double theta = kPi * i / (grid - 1);
        const double phi = 2 * kPi * j / grid;
        x = std::sin(theta) * std::cos(phi);
        y = std::sin(theta) * std::sin(phi);
        z = std::cos(theta);
    };
    for (int i1 = 0; i1 < grid; ++i1)
        for (int j1 = 0; j1 < grid; ++j1)
            for (int i2 = 0; i2 < grid; ++i2)
                for (int j2 = 0; j2 < grid; ++j2) {
                    double x1, y1, z1, x2, y2, z2;
                    sphere(i1, j1, x1, y1, z1);
                    sphere(i2, j2, x2, y2, z2);
                    const double f1 =
                        z1 / 2 + (x1 * x2 + y1 * y2 + z1 * z2) / 2;
                    const double f2 = z1 + z2;
                    out.rows.push_back({f1, f2});
                }
    return out;
}

MomentSample sample_spin_oscillator(int grid, double radius)
{
    if (grid < 2)
        throw DomainError("bad_parameter", "grid must be >= 2");
    if (!(radius > 0))
        throw DomainError("bad_parameter", "radius must be positive");
    MomentSample out;
    out.rows.reserve(static_cast<std::size_t>(grid) * grid * grid * grid);
    for (int ir = 0; ir < grid; ++ir)
        for (int ja = 0; ja < grid; ++ja)
            for (int it = 0; it < grid; ++it)
                for (int jp = 0; jp < grid; ++jp) {
                    const double r = radius * ir / (grid - 1);
                    const double alpha = 2 * kPi * ja / grid;
                    const double u = r * std::cos(alpha);
                    const double v = r * std::sin(alpha);
                    const double theta = kPi * it / (grid - 1);
                    const double phi = 2 * kPi * jp / grid;
                    const double x = std::sin(theta) * std::cos(phi);
                    const double y = std::sin(theta) * std::sin(phi);
                    const double z = std::cos(theta);
                    const double f1 = z + (u * u + v * v) / 2;
                    const double f2 = (x * u + y * v) / 2;
                    out.rows.push_back({f1, f2});
                }
    return out;
}

SemitoricModel spherical_pendulum_model(bool bs)
{
    SemitoricModel m;
    m.region.shape = std::vector<HalfPlane>{
        {(IntVec2() << 0, 1).finished(), Rational(0)}};
    const RatPoint position = bs ? rp(0, 1) : rp(0, Rational(3, 2));
    m.nodes.push_back(
        Node{position, PrimitiveVector(0, 1), 1, rp(0, 0)});
    return m;
}

namespace {

GradedQuant degree2(std::int64_t finite, std::int64_t smooth)
{
    GradedQuant g;
    g.add(2, finite, smooth);
    return g;
}

std::vector<ExampleSpec> make_entries()
{
    std::vector<ExampleSpec> out;

    out.push_back({"cp2",
                   {{"d", 9}},
                   ExpectedFragment{degree2(28, 0), Rational(81), {}, {}},
                   "projective plane scaled by d"});
    out.push_back({"cp2-blowup9",
                   {},
                   ExpectedFragment{degree2(19, 0), Rational(48), {}, {}},
                   "ninefold blowup of cp2(9), a 12-gon of area 24"});
    out.push_back({"k3-half",
                   {},
                   ExpectedFragment{degree2(7, 12), Rational(48), {}, {}},
                   "cp2-blowup9 with all twelve corners traded for nodes"});
    out.push_back({"k3",
                   {},
                   ExpectedFragment{degree2(14, 24), Rational(96), 50, {}},
                   "symplectic sum of two k3-half diagrams"});
    out.push_back({"s2xs2",
                   {{"traded", 1}},
                   ExpectedFragment{degree2(0, 1), Rational(8), {}, {}},
                   "square of side 2, one corner traded for a node"});
    out.push_back({"spin-spin",
                   {{"grid", 8}},
                   {},
                   "coupled angular momenta samples, CSV"});
    out.push_back({"spin-oscillator",
                   {{"grid", 8}, {"radius", 2}},
                   {},
                   "spin-oscillator coupling samples, CSV"});
    out.push_back(
        {"spherical-pendulum",
         {{"bs", 1}, {"wx0", -10}, {"wy0", -10}, {"wx1", 10}, {"wy1", 10}},
         ExpectedFragment{degree2(209, 1), {}, {}, true},
         "half-plane image with one node; integral node position iff bs"});
    return out;
}

Rational param(const std::map<std::string, Rational>& params,
               const std::string& key)
{
    return params.at(key);
}

Integer integral_param(const std::map<std::string, Rational>& params,
                       const std::string& key)
{
    const Rational v = param(params, key);
    if (!is_integral(v))
        throw DomainError("bad_parameter",
                          key + " must be an integer, got "
                              + format_rational(v));
    return numerator(v);
}

}  // namespace

const std::vector<ExampleSpec>& catalog_entries()
{
    static const std::vector<ExampleSpec> entries = make_entries();
    return entries;
}

BuiltExample build_example(const std::string& name,
                           const std::map<std::string, Rational>& overrides)
{
    const ExampleSpec* spec = nullptr;
    for (const ExampleSpec& e : catalog_entries())
        if (e.name == name)
            spec = &e;
    if (!spec)
        throw DomainError("unknown_example", name);
    std::map<std::string, Rational> params = spec->parameters;
    for (const auto& [key, value] : overrides) {
        if (params.find(key) == params.end())
            throw DomainError("bad_parameter",
                              name + " has no parameter \"" + key + "\"");
        params[key] = value;
    }
    if (name == "cp2")
        return cp2(integral_param(params, "d"));
    if (name == "cp2-blowup9")
        return cp2_blowup9();
    if (name == "k3-half")
        return k3_half();
    if (name == "k3")
        return k3();
    if (name == "s2xs2")
        return s2xs2(param(params, "traded") != 0);
    if (name == "spin-spin")
        return sample_spin_spin(
            integral_param(params, "grid").convert_to<int>());
    if (name == "spin-oscillator")
        return sample_spin_oscillator(
            integral_param(params, "grid").convert_to<int>(),
            param(params, "radius").convert_to<double>());
    if (name == "spherical-pendulum")
        return spherical_pendulum_model(param(params, "bs") != 0);
    throw DomainError("unknown_example", name);
}

}  // namespace atq
