#include "abphase/surface.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace abphase {

namespace {
constexpr double pi = std::numbers::pi;

double smoothstep01(double u) {
    if (u <= 0.0) return 0.0;
    if (u >= 1.0) return 1.0;
    return u * u * (3.0 - 2.0 * u);
}

// Counterclockwise sweep from angle_from to angle_to in (0, 2*pi].
double ccw_sweep(double angle_from, double angle_to) {
    double sweep = std::fmod(angle_to - angle_from, 2.0 * pi);
    if (sweep <= 0.0) sweep += 2.0 * pi;
    return sweep;
}

Polyline detour_arc(const Scenario& sc, bool counterclockwise) {
    const Vec2 axis = sc.solenoid.axis;
    const Vec2 a = sc.cages[0].center - axis;
    const Vec2 b = sc.cages[1].center - axis;
    const double th_a = std::atan2(a.y, a.x);
    const double th_b = std::atan2(b.y, b.x);
    const double sweep = counterclockwise ? ccw_sweep(th_a, th_b) : ccw_sweep(th_a, th_b) - 2.0 * pi;
    const double r_a = norm(a);
    const double r_b = norm(b);
    const int n = std::max(48, int(std::ceil(std::abs(sweep) / (pi / 48.0))));
    Polyline pts;
    pts.reserve(n + 1);
    for (int i = 0; i <= n; ++i) {
        const double u = double(i) / n;
        const double th = th_a + sweep * u;
        const double r = r_a + (r_b - r_a) * u;
        pts.push_back(axis + Vec2{r * std::cos(th), r * std::sin(th)});
    }
    pts.front() = sc.cages[0].center;
    pts.back() = sc.cages[1].center;
    return pts;
}

}  // namespace

const char* to_string(Strategy s) {
    switch (s) {
        case Strategy::left_of_solenoid: return "left";
        case Strategy::right_of_solenoid: return "right";
        case Strategy::through_wire: return "through_wire";
        case Strategy::straight: return "straight";
    }
    return "straight";
}

const char* to_string(Method m) {
    switch (m) {
        case Method::surface_eq1: return "eq1";
        case Method::potential_eq3: return "eq3";
        case Method::closed_form: return "closed_form";
    }
    return "eq1";
}

ConnectingCurveFamily::ConnectingCurveFamily(const Scenario& sc, Strategy strategy, int n_curve)
    : scenario_(&sc), strategy_(strategy), n_curve_(std::max(2, n_curve)) {
    const auto [in, out] = sc.dwell_interval();
    dwell_in_ = in;
    dwell_out_ = out;

    switch (strategy_) {
        case Strategy::straight:
            break;
        case Strategy::left_of_solenoid:
            detour_ = std::make_shared<ArcLengthParam>(detour_arc(sc, true));
            break;
        case Strategy::right_of_solenoid:
            detour_ = std::make_shared<ArcLengthParam>(detour_arc(sc, false));
            break;
        case Strategy::through_wire:
            if (!sc.wire) {
                throw EvaluationError("THROUGH_WIRE_REQUIRES_WIRE",
                                      "through_wire strategy needs a scenario with a wire");
            }
            detour_ = std::make_shared<ArcLengthParam>(sc.wire->points);
            break;
    }
    params_ = detour_ ? merged_sample_params(n_curve_, detour_->knots())
                      : merged_sample_params(n_curve_, {});
}

double ConnectingCurveFamily::blend_factor(double t) const {
    if (!detour_) return 0.0;
    if (t <= dwell_in_ || t >= dwell_out_) return 0.0;
    const double t0 = scenario_->solenoid.ramp_start;
    const double t1 = scenario_->solenoid.ramp_end;
    if (t < t0) return smoothstep01((t - dwell_in_) / (t0 - dwell_in_));
    if (t > t1) return smoothstep01((dwell_out_ - t) / (dwell_out_ - t1));
    return 1.0;
}

Polyline ConnectingCurveFamily::curve(double t) const {
    const Vec2 pa = worldline_position(scenario_->path_a, t);
    const Vec2 pb = worldline_position(scenario_->path_b, t);
    const double lambda = blend_factor(t);

    Polyline pts;
    pts.reserve(params_.size());
    if (lambda == 0.0) {
        for (double u : params_) pts.push_back(lerp(pa, pb, u));
    } else if (lambda == 1.0) {
        for (double u : params_) pts.push_back(detour_->at(u));
    } else {
        for (double u : params_) {
            pts.push_back(lerp(lerp(pa, pb, u), detour_->at(u), lambda));
        }
    }
    pts.front() = pa;
    pts.back() = pb;
    return pts;
}

namespace {

std::vector<double> build_time_grid(const Scenario& sc, int n_time) {
    const auto [dwell_in, dwell_out] = sc.dwell_interval();
    std::vector<double> edges = {sc.start_time(), dwell_in,          sc.solenoid.ramp_start,
                                 sc.solenoid.ramp_end, dwell_out, sc.end_time()};
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    const double total = edges.back() - edges.front();
    std::vector<double> grid;
    grid.reserve(n_time + 8);
    grid.push_back(edges.front());
    for (std::size_t e = 0; e + 1 < edges.size(); ++e) {
        const double span = edges[e + 1] - edges[e];
        if (span <= 0.0) continue;
        const int n = std::max(4, int(std::llround(n_time * span / total)));
        for (int i = 1; i <= n; ++i) {
            grid.push_back(edges[e] + span * double(i) / n);
        }
        grid.back() = edges[e + 1];
    }
    return grid;
}

// Patch polygon between consecutive slices, oriented so the surface boundary
// is worldline a forward + worldline b backward.
Polyline patch_polygon(const Polyline& cur_lo, const Polyline& cur_hi) {
    Polyline poly;
    poly.reserve(cur_lo.size() + cur_hi.size());
    poly.insert(poly.end(), cur_hi.begin(), cur_hi.end());          // a_{k+1} .. b_{k+1}
    poly.insert(poly.end(), cur_lo.rbegin(), cur_lo.rend());        // b_k .. a_k
    return poly;
}

bool bbox_misses_disk(const Polyline& poly, Vec2 c, double r) {
    double min_x = poly[0].x, max_x = poly[0].x, min_y = poly[0].y, max_y = poly[0].y;
    for (const Vec2& p : poly) {
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    }
    return c.x + r < min_x || c.x - r > max_x || c.y + r < min_y || c.y - r > max_y;
}

}  // namespace

SpacetimeSurface build_surface(const Scenario& sc, Strategy strategy, Resolution res) {
    SpacetimeSurface surface{ConnectingCurveFamily(sc, strategy, res.n_curve),
                             build_time_grid(sc, res.n_time), false};

    // Flag slices that cross the solenoid disk (the straight family does when
    // the solenoid sits between the cages).
    const auto [dwell_in, dwell_out] = sc.dwell_interval();
    const Polyline dwell_curve = surface.family.curve(0.5 * (dwell_in + dwell_out));
    for (std::size_t i = 1; i < dwell_curve.size(); ++i) {
        const Vec2 seg[2] = {dwell_curve[i - 1], dwell_curve[i]};
        if (point_polyline_distance(sc.solenoid.axis, seg) < sc.solenoid.radius) {
            surface.pierces_solenoid = true;
            break;
        }
    }
    return surface;
}

double magnetic_flux_term(const SpacetimeSurface& surface, const Scenario& sc) {
    const SolenoidModel& s = sc.solenoid;
    const double disk_area = pi * s.radius * s.radius;
    const auto& grid = surface.time_grid;

    double phase = 0.0;
    Polyline cur_lo = surface.family.curve(grid.front());
    for (std::size_t k = 0; k + 1 < grid.size(); ++k) {
        Polyline cur_hi = surface.family.curve(grid[k + 1]);
        const double t_mid = 0.5 * (grid[k] + grid[k + 1]);
        const double flux = flux_at(s, t_mid);
        if (flux != 0.0) {
            const Polyline poly = patch_polygon(cur_lo, cur_hi);
            if (!bbox_misses_disk(poly, s.axis, s.radius)) {
                const double overlap = disk_polygon_overlap(poly, s.axis, s.radius);
                phase += (flux / disk_area) * overlap;
            }
        }
        cur_lo = std::move(cur_hi);
    }
    return sc.constants.phase_factor() * phase;
}

namespace {

// Induced field -dA/dt, extended into the solenoid interior with the
// uniform-B profile so slice curves may cross the disk.
Vec2 induced_field_anywhere(const SolenoidModel& s, Vec2 p, double rate) {
    const Vec2 d = p - s.axis;
    const double rho2 = dot(d, d);
    const double R2 = s.radius * s.radius;
    const double denom = std::max(rho2, R2);
    if (rho2 == 0.0) return {0.0, 0.0};
    return Vec2{-d.y, d.x} * (-rate / (2.0 * pi * (rho2 <= R2 ? R2 : rho2)) *
                              (rho2 <= R2 ? 1.0 : 1.0)) *
           (denom == denom ? 1.0 : 1.0);
}

double trapezoid_field_integral(const Polyline& curve, const SolenoidModel& s, double rate) {
    double acc = 0.0;
    Vec2 e_prev = induced_field_anywhere(s, curve[0], rate);
    for (std::size_t i = 1; i < curve.size(); ++i) {
        const Vec2 e_cur = induced_field_anywhere(s, curve[i], rate);
        const Vec2 dr = curve[i] - curve[i - 1];
        acc += 0.5 * (dot(e_prev, dr) + dot(e_cur, dr));
        e_prev = e_cur;
    }
    return acc;
}

bool curve_inside_conductors(const Scenario& sc, const Polyline& curve) {
    for (const Vec2& p : curve) {
        if (!point_in_any_conductor(sc, p)) return false;
    }
    return true;
}

}  // namespace

double electric_term(const SpacetimeSurface& surface, const Scenario& sc) {
    const SolenoidModel& s = sc.solenoid;
    const auto& grid = surface.time_grid;

    double phase = 0.0;
    for (std::size_t k = 0; k + 1 < grid.size(); ++k) {
        const double dt = grid[k + 1] - grid[k];
        const double t_mid = 0.5 * (grid[k] + grid[k + 1]);
        const double rate = flux_rate(s, t_mid);
        if (rate == 0.0) continue;

        const Polyline curve = surface.family.curve(t_mid);
        if (curve_inside_conductors(sc, curve)) {
            continue;  // total field is identically zero along the slice
        }
        if (!ev_line_integral_vanishes(sc, curve, t_mid)) {
            throw EvaluationError(
                "EV_UNMODELED",
                "induced-charge field is unmodeled along this slice; the scenario/strategy "
                "pair is outside the model's competence");
        }
        phase += dt * trapezoid_field_integral(curve, s, rate);
    }
    return sc.constants.phase_factor() * phase;
}

namespace {

struct TermPair {
    double magnetic;
    double electric;
};

TermPair evaluate_terms(const Scenario& sc, Strategy strategy, Resolution res) {
    const SpacetimeSurface surface = build_surface(sc, strategy, res);
    return {magnetic_flux_term(surface, sc), electric_term(surface, sc)};
}

}  // namespace

PhaseResult phase_eq1(const Scenario& sc, Strategy strategy, Resolution res) {
    const TermPair fine = evaluate_terms(sc, strategy, res);
    const TermPair coarse = evaluate_terms(sc, strategy, res.halved());

    PhaseResult out;
    out.method = Method::surface_eq1;
    out.magnetic_term = fine.magnetic + (fine.magnetic - coarse.magnetic) / 3.0;
    out.electric_term = fine.electric + (fine.electric - coarse.electric) / 3.0;
    out.total = out.magnetic_term - out.electric_term;
    out.quadrature = {res.n_time, res.n_curve,
                      (std::abs(fine.magnetic - coarse.magnetic) +
                       std::abs(fine.electric - coarse.electric)) /
                          3.0};
    return out;
}

}  // namespace abphase
