#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "atq/diagram.hpp"
#include "atq/quantize.hpp"

namespace atq {

// Projective plane scaled by d: triangle (0,0), (d,0), (0,d). d >= 1.
RatPolygon cp2(const Integer& d);

// Ninefold blowup of cp2(9): three corner chops of size 3, then six of
// size 1. A 12-gon of area 24 with 19 interior and 12 boundary points.
RatPolygon cp2_blowup9();

// Half of a K3 base: cp2_blowup9 with all twelve vertices traded and the
// twelve nodes on interior lattice points, one step from their anchors.
Diagram k3_half();

// Symplectic sum of two k3_half diagrams, tagged "k3".
ClosedBase k3();

// Square of side 2; traded swaps the (2,2) corner for a node at (1,1).
Diagram s2xs2(bool traded);

// Flat list of (f1, f2) samples.
struct MomentSample {
    std::vector<std::array<double, 2>> rows;
};

/**
 * Coupled angular momenta on S2 x S2:
 *   f1 = z1/2 + (x1 x2 + y1 y2 + z1 z2)/2,  f2 = z1 + z2.
 * Deterministic grid x grid x grid x grid sweep over both spheres
 * (theta includes the poles), odometer row order (i1, j1, i2, j2).
 * |f1| <= 1 and |f2| <= 2.
 */
MomentSample sample_spin_spin(int grid);

/**
 * Spin-oscillator coupling on S2 x R2:
 *   f1 = z + (u^2 + v^2)/2,  f2 = (x u + y v)/2.
 * (u,v) sweeps a polar grid of the given disk (radius 0 included), the
 * sphere as in sample_spin_spin; row order (i_r, j_ang, i_theta, j_phi).
 * f1 >= -1.
 */
MomentSample sample_spin_oscillator(int grid, double radius);

struct SemitoricModel {
    SemitoricRegion region;
    std::vector<Node> nodes;
};

// Normalized spherical pendulum image: upper half-plane with one node,
// at (0,1) when bs, at (0,3/2) otherwise.
SemitoricModel spherical_pendulum_model(bool bs);

// Partial QuantReport pinned by an example; absent fields are unchecked.
struct ExpectedFragment {
    std::optional<GradedQuant> graded;
    std::optional<Rational> symplectic_volume;
    std::optional<std::int64_t> kaehler_dimension;
    std::optional<bool> truncated;
};

struct ExampleSpec {
    std::string name;
    std::map<std::string, Rational> parameters;  // defaults
    std::optional<ExpectedFragment> expected;
    std::string summary;
};

const std::vector<ExampleSpec>& catalog_entries();

using BuiltExample =
    std::variant<RatPolygon, Diagram, ClosedBase, MomentSample, SemitoricModel>;

// Builds a catalog entry by name with parameter overrides. Throws
// DomainError("unknown_example") / DomainError("bad_parameter").
BuiltExample build_example(const std::string& name,
                           const std::map<std::string, Rational>& overrides);

}  // namespace atq
