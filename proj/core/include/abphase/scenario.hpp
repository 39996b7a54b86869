#pragma once

// Interferometer scenarios: worldlines, Faraday cages, optional connecting
// wire, and timing, plus validation and the four canonical builders.
//
// Canonical geometry (before overrides): the solenoid sits at the origin with
// radius 1; the Faraday cages sit at (+d, 0) for path a and (-d, 0) for path
// b with d = 10; the worldlines form a rhombus from the source beam splitter
// at (0, -1.2 d) up to the recombination point at (0, +1.2 d). Traversing
// path a forward and path b backward winds once counterclockwise around the
// solenoid. Legs take 2 time units, the particles sit in the cages during
// [2, 8], and the flux ramps over [4, 6] — strictly inside the dwell so that
// connecting-curve deformations never coincide with the ramp.

#include "abphase/fields.hpp"
#include "abphase/geometry.hpp"

#include <array>
#include <optional>
#include <vector>

namespace abphase {

enum class PathLabel { path_a, path_b };

struct Waypoint {
    double time = 0.0;
    Vec2 position;
};

struct Worldline {
    PathLabel label = PathLabel::path_a;
    std::vector<Waypoint> waypoints;
};

/// Piecewise-linear interpolation; exact positions at waypoint times.
/// Throws std::out_of_range outside the worldline's time span.
Vec2 worldline_position(const Worldline& w, double t);

struct FaradayCage {
    Vec2 center;
    double radius = 0.0;
};

/// Full angle subtended by the cage at `axis` (between the two tangent
/// lines from the axis). Requires the cage to be outside the axis point.
double cage_angular_extent(const FaradayCage& cage, Vec2 axis);

struct WirePath {
    Polyline points;  ///< runs from the path-a cage center to the path-b cage center
    int turns = 0;    ///< declared winding count of the wire closed by the straight return
};

enum class ScenarioKind { fig1, fig2a, fig2c, fig3, custom };

const char* to_string(ScenarioKind k);

struct Scenario {
    SolenoidModel solenoid;
    std::array<FaradayCage, 2> cages;  ///< [0] = path a cage, [1] = path b cage
    std::optional<WirePath> wire;
    Worldline path_a;
    Worldline path_b;
    PhysicalConstants constants;
    ScenarioKind kind_hint = ScenarioKind::custom;

    /// Containment tolerance for classifying points as inside the wire.
    double wire_tube_radius() const { return 1e-3 * solenoid.radius; }

    const FaradayCage& cage(PathLabel p) const {
        return cages[p == PathLabel::path_a ? 0 : 1];
    }
    const Worldline& worldline(PathLabel p) const {
        return p == PathLabel::path_a ? path_a : path_b;
    }

    /// Maximal interval during which both worldlines are parked (consecutive
    /// equal-position waypoints) inside their cages. For validated scenarios
    /// this strictly contains the ramp window.
    std::pair<double, double> dwell_interval() const;

    double start_time() const { return path_a.waypoints.front().time; }
    double end_time() const { return path_a.waypoints.back().time; }
};

bool point_in_any_conductor(const Scenario& sc, Vec2 p);

/// True when the conductor layout (cages and wire, as point sets) maps to
/// itself under a 180-degree rotation about the solenoid axis.
bool conductor_layout_symmetric(const Scenario& sc);

struct Violation {
    std::string code;
    std::string message;
};

/// Empty result iff all structural invariants hold and densely sampled
/// worldline points see exactly zero fields. Violations are data, not errors.
std::vector<Violation> validate(const Scenario& sc);

struct GeometryOverrides {
    std::optional<double> solenoid_radius;
    std::optional<double> cage_distance;
    std::optional<double> cage_radius;
    std::optional<double> half_height;   ///< beam-splitter distance from the cage line
    std::optional<double> ramp_start;
    std::optional<double> ramp_end;
    std::optional<RampShape> ramp_shape;
    std::optional<double> rotation;      ///< rigid rotation of the whole layout about the axis
};

/// Builds one of the four canonical scenarios. `turns` is used only by fig3;
/// its sign selects the wire winding direction (positive = counterclockwise).
/// Throws std::invalid_argument for override combinations that cannot
/// validate (overlapping conductors, fig3 with zero turns).
Scenario build_paper_scenario(ScenarioKind kind, double phi_i, double phi_f, int turns = 1,
                              const GeometryOverrides& geo = {});

}  // namespace abphase
