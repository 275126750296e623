#include <doctest.h>

#include "atq/catalog.hpp"
#include "atq/quantize.hpp"
#include "support/checks.hpp"

using namespace atq;

namespace {

RatPoint rp(const Rational& x, const Rational& y)
{
    return RatPoint{x, y};
}

IntVec2 ip(long long x, long long y)
{
    return (IntVec2() << Integer(x), Integer(y)).finished();
}

Diagram fully_traded_square(const Rational& side, const Rational& t)
{
    Diagram d{RatPolygon({rp(0, 0), rp(side, 0), rp(side, side), rp(0, side)}),
              {},
              {}};
    for (std::size_t v = 0; v < 4; ++v)
        d = nodal_trade(d, v, t);
    return d;
}

}  // namespace

TEST_CASE("fiber classification of the traded square")
{
    const Diagram d = s2xs2(true);
    const Classification cls = classify_fibers(d);
    CHECK(cls.size() == 9);
    REQUIRE(cls.count(ip(1, 1)) == 1);
    CHECK(cls.at(ip(1, 1)).kind == FiberKind::FocusFocusBS);
    CHECK(cls.at(ip(1, 1)).node_count == 1);
    CHECK(cls.at(ip(0, 0)).kind == FiberKind::EllipticBoundary);
    CHECK(cls.at(ip(2, 1)).kind == FiberKind::EllipticBoundary);
    CHECK(cls.count(ip(3, 3)) == 0);

    const Classification untraded = classify_fibers(s2xs2(false));
    CHECK(untraded.at(ip(1, 1)).kind == FiberKind::RegularBS);
}

TEST_CASE("counting rule on toric diagrams")
{
    const Diagram plane{cp2(9), {}, {}};
    const GradedQuant g = quantize(plane);
    CHECK(g.at(2).finite_rank == 28);
    CHECK(g.at(2).smooth_copies == 0);
    CHECK(g.at(0).finite_rank == 0);
    CHECK(g.at(1).finite_rank == 0);
}

TEST_CASE("trading a corner swaps one finite rank for one smooth copy")
{
    const GradedQuant traded = quantize(s2xs2(true));
    CHECK(traded.at(2).finite_rank == 0);
    CHECK(traded.at(2).smooth_copies == 1);
    const GradedQuant untraded = quantize(s2xs2(false));
    CHECK(untraded.at(2).finite_rank == 1);
    CHECK(untraded.at(2).smooth_copies == 0);
}

TEST_CASE("sliding a node off the lattice restores a finite rank")
{
    const Diagram slid = nodal_slide(s2xs2(true), 0, Rational(3, 2));
    const GradedQuant g = quantize(slid);
    CHECK(g.at(2).finite_rank == 1);
    CHECK(g.at(2).smooth_copies == 0);
}

TEST_CASE("node multiplicity scales the smooth contribution")
{
    Diagram d{cp2(4), {}, {}};
    d = nodal_trade(d, 0, 1, 3);
    const GradedQuant g = quantize(d);
    CHECK(g.at(2).smooth_copies == 3);
    CHECK(g.at(2).finite_rank == 2);  // (1,2) and (2,1) stay regular
}

TEST_CASE("half of the k3 surface")
{
    const Diagram half = k3_half();
    CHECK(validate(half).empty());
    const GradedQuant g = quantize(half);
    CHECK(g.at(2).finite_rank == 7);
    CHECK(g.at(2).smooth_copies == 12);
    CHECK(symplectic_volume(half) == 48);
}

TEST_CASE("closed k3 quantization")
{
    const ClosedBase c = k3();
    const GradedQuant g = quantize_closed(c);
    CHECK(g.at(2).finite_rank == 14);
    CHECK(g.at(2).smooth_copies == 24);
    CHECK(symplectic_volume(c) == 96);
    CHECK(kaehler_dimension_k3(c) == 50);
}

TEST_CASE("kaehler comparison requires the k3 tag and integrality")
{
    const Diagram half = fully_traded_square(2, Rational(1, 2));
    const ClosedBase untagged = symplectic_sum(half, half);
    CHECK_DOMAIN_ERROR(kaehler_dimension_k3(untagged), "not_k3");
    const ClosedBase tagged = symplectic_sum(half, half, true, "k3");
    // volume 8 per half: 4 + 4 + 2
    CHECK(kaehler_dimension_k3(tagged) == 10);
}

TEST_CASE("hypothetical halves of unit area")
{
    Diagram unit{RatPolygon({rp(0, 0), rp(1, 0), rp(1, 1), rp(0, 1)}), {}, {}};
    for (std::size_t v = 0; v < 4; ++v)
        unit = nodal_trade(unit, v, Rational(1, 4));
    const ClosedBase c = symplectic_sum(unit, unit, true, "k3");
    CHECK(symplectic_volume(c.half_a) == 2);
    CHECK(kaehler_dimension_k3(c) == 4);
    // no interior lattice points at all: the quantization vanishes
    CHECK(quantize_closed(c).is_zero());
}

TEST_CASE("semitoric half-plane scan")
{
    const SemitoricModel m = spherical_pendulum_model(true);
    const Window window{-10, -10, 10, 10};
    const QuantReport report = quantize_semitoric(m.region, m.nodes, window);
    CHECK(report.graded.at(2).finite_rank == 209);
    CHECK(report.graded.at(2).smooth_copies == 1);
    CHECK(report.truncated);
    CHECK_FALSE(report.symplectic_volume.has_value());
    REQUIRE(report.classification.has_value());
    CHECK(report.classification->size() == 231);
    CHECK(report.classification->at(ip(0, 1)).kind == FiberKind::FocusFocusBS);
    CHECK(report.classification->at(ip(0, 0)).kind
          == FiberKind::EllipticBoundary);
    CHECK(report.classification->at(ip(3, 2)).kind == FiberKind::RegularBS);
}

TEST_CASE("non-integral node position misses the lattice")
{
    const SemitoricModel m = spherical_pendulum_model(false);
    const QuantReport report =
        quantize_semitoric(m.region, m.nodes, Window{-10, -10, 10, 10});
    CHECK(report.graded.at(2).finite_rank == 210);
    CHECK(report.graded.at(2).smooth_copies == 0);
}

TEST_CASE("window clipping changes the count, not the classification rule")
{
    const SemitoricModel m = spherical_pendulum_model(true);
    const QuantReport report =
        quantize_semitoric(m.region, m.nodes, Window{-2, -2, 2, 2});
    // interior rows y=1,2 with x in [-2,2]: 10 points, one is the node
    CHECK(report.graded.at(2).finite_rank == 9);
    CHECK(report.graded.at(2).smooth_copies == 1);
    CHECK(report.truncated);
}

TEST_CASE("bounded polygon region inside a large window")
{
    SemitoricRegion region;
    region.shape = cp2(4);
    const QuantReport report =
        quantize_semitoric(region, {}, Window{-100, -100, 100, 100});
    CHECK_FALSE(report.truncated);
    CHECK(report.graded.at(2).finite_rank == 3);
    REQUIRE(report.symplectic_volume.has_value());
    CHECK(*report.symplectic_volume == 16);
    const QuantReport clipped =
        quantize_semitoric(region, {}, Window{0, 0, 2, 1});
    CHECK(clipped.truncated);
    CHECK(clipped.graded.at(2).finite_rank == 2);
}

TEST_CASE("infeasible half-plane systems quantize to zero")
{
    SemitoricRegion region;
    region.shape = std::vector<HalfPlane>{
        {ip(0, 1), Rational(0)},    // y >= 0
        {ip(0, -1), Rational(1)}};  // y <= -1
    const QuantReport report =
        quantize_semitoric(region, {}, Window{-5, -5, 5, 5});
    CHECK(report.graded.is_zero());
    CHECK_FALSE(report.truncated);
}

TEST_CASE("degenerate windows are rejected")
{
    const SemitoricModel m = spherical_pendulum_model(true);
    CHECK_DOMAIN_ERROR(quantize_semitoric(m.region, m.nodes,
                                          Window{5, 0, -5, 0}),
                       "empty_window");
}

TEST_CASE("semitoric nodes must sit inside the region")
{
    SemitoricRegion region;
    region.shape = std::vector<HalfPlane>{{ip(0, 1), Rational(0)}};
    const std::vector<Node> nodes{
        Node{rp(0, 0), PrimitiveVector(0, 1), 1, rp(0, 0)}};
    CHECK_DOMAIN_ERROR(quantize_semitoric(region, nodes,
                                          Window{-5, -5, 5, 5}),
                       "node_not_interior");
}

TEST_CASE("full reports for diagrams and closed bases")
{
    const QuantReport dr = report_for(s2xs2(true));
    CHECK(dr.classification.has_value());
    CHECK(dr.graded.at(2).smooth_copies == 1);
    REQUIRE(dr.symplectic_volume.has_value());
    CHECK(*dr.symplectic_volume == 8);
    CHECK_FALSE(dr.kaehler_dimension.has_value());
    CHECK_FALSE(dr.truncated);

    const QuantReport cr = report_for(k3());
    CHECK_FALSE(cr.classification.has_value());
    CHECK(cr.graded.at(2).finite_rank == 14);
    REQUIRE(cr.kaehler_dimension.has_value());
    CHECK(*cr.kaehler_dimension == 50);
}
