#pragma once

// Spacetime deformation surfaces between the two worldlines and the
// surface-integral phase evaluator.
//
// A surface is a family of connecting curves gamma(t): each runs from the
// path-a position to the path-b position at time t. Between consecutive time
// samples the swept spatial patch is the closed polygon
//
//     a_k -> a_{k+1} -> gamma_{k+1} (a to b) -> b_{k+1} -> b_k
//          -> gamma_k reversed (b to a)
//
// so the total surface boundary telescopes to worldline a forward plus
// worldline b backward. With that orientation and the canonical geometry
// (path a through the +x cage, source below), the static magnetic phase of a
// flux-enclosing interferometer comes out positive.
//
// The magnetic term sums, patch by patch, the uniform interior field times
// the exact signed overlap area of the patch polygon with the solenoid disk;
// because curve deformations happen only where the flux is constant, the sum
// telescopes and the term carries no time-discretization error. The electric
// term is a composite-midpoint quadrature in time of the line integral of the
// field along the slice curve, with the total field replaced by the induced
// part -dA/dt where ev_line_integral_vanishes authorizes it (the replacement
// integrates E_A across conductor interiors too: the unshielded part that the
// conductors cancel pointwise is exactly compensated by the induced-charge
// field it stands in for).

#include "abphase/scenario.hpp"

#include <memory>
#include <vector>

namespace abphase {

enum class Strategy { left_of_solenoid, right_of_solenoid, through_wire, straight };

const char* to_string(Strategy s);

struct Resolution {
    int n_time = 2048;
    int n_curve = 512;

    Resolution halved() const { return {std::max(16, n_time / 2), std::max(16, n_curve / 2)}; }
};

/// Generates the connecting curve for every time instant. Outside the dwell
/// the curve is the straight segment between the worldline positions; inside
/// it blends smoothly into the strategy's detour (a counterclockwise or
/// clockwise arc around the solenoid, or the wire polyline), reaching the
/// full detour exactly at the ramp window so deformations never overlap the
/// flux change. Curve endpoints equal the worldline positions bitwise.
class ConnectingCurveFamily {
public:
    ConnectingCurveFamily(const Scenario& sc, Strategy strategy, int n_curve);

    Polyline curve(double t) const;

    Strategy strategy() const { return strategy_; }
    int n_curve() const { return n_curve_; }
    const Scenario& scenario() const { return *scenario_; }

private:
    const Scenario* scenario_;
    Strategy strategy_;
    int n_curve_;
    double dwell_in_ = 0.0;
    double dwell_out_ = 0.0;
    std::shared_ptr<const ArcLengthParam> detour_;  // null for straight
    std::vector<double> params_;                    // shared sample grid in [0, 1]

    double blend_factor(double t) const;
};

struct SpacetimeSurface {
    ConnectingCurveFamily family;
    std::vector<double> time_grid;  ///< patch boundaries; phase edges are grid points
    bool pierces_solenoid = false;  ///< some slice crosses the solenoid disk
};

/// Builds the surface for a validated scenario. Throws EvaluationError
/// (THROUGH_WIRE_REQUIRES_WIRE) when the strategy needs a wire the scenario
/// lacks. A straight family that pierces the solenoid is allowed (the flux
/// counting handles partial overlap) and flagged.
SpacetimeSurface build_surface(const Scenario& sc, Strategy strategy, Resolution res = {});

/// First term of the surface phase: q/hbar times the flux through the
/// surface, accumulated as B times signed patch/disk overlap area.
double magnetic_flux_term(const SpacetimeSurface& surface, const Scenario& sc);

/// Second term: q/hbar times the time integral over slices of the electric
/// line integral along the connecting curve. Throws EvaluationError
/// (EV_UNMODELED) if a ramp-window slice is neither inside conductors nor
/// authorized by the symmetry rule.
double electric_term(const SpacetimeSurface& surface, const Scenario& sc);

enum class Method { surface_eq1, potential_eq3, closed_form };

const char* to_string(Method m);

struct QuadratureInfo {
    int n_time = 0;
    int n_curve = 0;
    double error_estimate = 0.0;
};

struct PhaseResult {
    double magnetic_term = 0.0;
    double electric_term = 0.0;
    double total = 0.0;  ///< magnetic_term - electric_term
    Method method = Method::surface_eq1;
    QuadratureInfo quadrature;
};

/// Evaluates both terms at the requested resolution and at half resolution,
/// Richardson-extrapolates, and reports the comparison as the error estimate.
PhaseResult phase_eq1(const Scenario& sc, Strategy strategy, Resolution res = {});

}  // namespace abphase
