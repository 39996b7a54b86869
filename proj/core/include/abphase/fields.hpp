#pragma once

// Solenoid model and electromagnetic field evaluation.
//
// The model is 2+1 dimensional: an infinite solenoid seen in its cross
// section, carrying a time-dependent flux Phi(t) that ramps from flux_initial
// to flux_final over [ramp_start, ramp_end]. In the Lorenz gauge the exterior
// vector potential is azimuthal with magnitude Phi(t) / (2 pi rho), and a
// flux ramp induces the azimuthal electric field -dPhi/dt / (2 pi rho).
// Inside the solenoid the magnetic field is taken uniform, Phi(t) / (pi R^2);
// the induced electric field there follows from Faraday's law applied to that
// profile. All quantities are in natural units (charge = hbar = 1 by default),
// so fluxes are entered in phase-equivalent units and phases come out in
// radians.
//
// Conductors (Faraday cages and wires, described by Scenario) carry induced
// charges that cancel the total electric field in their interior. The induced
// part E_V is never synthesized pointwise; the one fact the model uses about
// it is that its line integral between the cages vanishes for conductor
// layouts symmetric under a 180-degree rotation about the solenoid axis
// (close any cage-to-cage curve with its rotated image: the induced field is
// conservative, so the loop integral is zero, and symmetry makes both halves
// equal). ev_line_integral_vanishes exposes that rule.
//
// Everything here is a pure function of its arguments; concurrent calls are
// safe.

#include "abphase/geometry.hpp"

#include <string>

namespace abphase {

struct Scenario;  // scenario.hpp

enum class RampShape { linear, smoothstep };

struct SolenoidModel {
    Vec2 axis;                   ///< cross-section position of the solenoid axis
    double radius = 1.0;
    double flux_initial = 0.0;
    double flux_final = 0.0;
    double ramp_start = 0.0;
    double ramp_end = 1.0;
    RampShape ramp_shape = RampShape::linear;
};

struct PhysicalConstants {
    double charge = 1.0;
    double hbar = 1.0;

    double phase_factor() const { return charge / hbar; }
};

enum class Region { inside_solenoid, inside_conductor, free_space };

struct FieldSample {
    Vec2 e_field;
    double b_field = 0.0;
    Region region = Region::free_space;
};

/// Flux through the solenoid at time t; exactly flux_initial/flux_final
/// outside the ramp window.
double flux_at(const SolenoidModel& s, double t);

/// dPhi/dt. Zero outside the open ramp window (the one-sided limit at the
/// window edges of a linear ramp is resolved to zero).
double flux_rate(const SolenoidModel& s, double t);

/// Lorenz-gauge exterior vector potential, Phi(t)/(2 pi rho) azimuthal.
/// Throws EvaluationError (code INTERIOR_POINT) for points inside the
/// solenoid; no scenario in this model ever needs the interior potential.
Vec2 vector_potential(const SolenoidModel& s, Vec2 p, double t);

/// Induced electric field -dA/dt outside the solenoid. Exactly zero outside
/// the ramp window. Throws for interior points, like vector_potential.
Vec2 induced_electric_field(const SolenoidModel& s, Vec2 p, double t);

/// Classifies a point and returns the model's total field there: B is
/// Phi/(pi R^2) inside the solenoid and zero outside; E vanishes identically
/// inside conductors, equals the induced field in free space, and inside the
/// solenoid follows Faraday's law for the uniform-B profile. The
/// induced-charge field away from conductors is not synthesized; see
/// ev_line_integral_vanishes.
FieldSample total_field_at(const Scenario& sc, Vec2 p, double t);

/// True when the line integral of the induced-charge field E_V along `curve`
/// is known to vanish: either the curve lies entirely inside conductors
/// (where the total field vanishes, a stronger statement), or the conductor
/// layout is 180-degree rotation symmetric about the solenoid axis and the
/// curve runs cage to cage (endpoints inside the two cages). A true result
/// authorizes replacing the total E by the induced field -dA/dt in line
/// integrals along the curve.
bool ev_line_integral_vanishes(const Scenario& sc, std::span<const Vec2> curve, double t);

/// Error with a machine-readable code, thrown when an evaluation leaves the
/// model's competence (interior potentials, unmodeled induced-charge fields,
/// inapplicable strategies).
class EvaluationError : public std::runtime_error {
public:
    EvaluationError(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

}  // namespace abphase
