#pragma once

// Planar geometry primitives shared by all modules: 2D vectors, polylines,
// angle accumulation around a center point, and exact disk/polygon overlap.
//
// Angle convention used throughout the library: counterclockwise positive.
// The accumulated angle of a polyline around a center is the sum of per-segment
// signed angles, each in (-pi, pi); it is exact for polylines (independent of
// how densely a segment is subdivided) and is the quantity behind every
// winding-number and azimuthal line-integral computation here.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace abphase {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    constexpr Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    constexpr Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
    constexpr Vec2 operator-() const { return {-x, -y}; }
    constexpr bool operator==(const Vec2&) const = default;
};

constexpr Vec2 operator*(double s, Vec2 v) { return v * s; }

constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
double norm(Vec2 v);
double distance(Vec2 a, Vec2 b);

/// Linear interpolation that returns `a` bitwise when a == b.
Vec2 lerp(Vec2 a, Vec2 b, double u);

using Polyline = std::vector<Vec2>;

/// Signed angle from direction `a` to direction `b`, in (-pi, pi].
/// Throws std::domain_error if either vector is zero.
double signed_angle(Vec2 a, Vec2 b);

/// Sum of signed per-segment angles of `points` as seen from `center`.
/// Equals 2*pi times the winding number for closed polylines. Throws
/// std::domain_error when a vertex coincides with the center or a segment
/// passes through it (the subtended angle is undefined there).
double accumulated_angle(std::span<const Vec2> points, Vec2 center);

double polyline_length(std::span<const Vec2> points);

/// Distance from `p` to the nearest point of the polyline.
double point_polyline_distance(Vec2 p, std::span<const Vec2> points);

bool point_in_disk(Vec2 p, Vec2 center, double radius);

/// Signed area of the intersection of a closed polygon with a disk, counted
/// with winding multiplicity: the integral of the polygon's winding number
/// over the disk. Positive for counterclockwise polygons containing the disk.
/// Exact up to floating-point rounding (per-edge circular-sector clipping).
double disk_polygon_overlap(std::span<const Vec2> polygon, Vec2 center, double radius);

/// Shoelace signed area of a closed polygon (counterclockwise positive).
double polygon_signed_area(std::span<const Vec2> polygon);

/// Arc-length parameterization of a polyline. Evaluation at u in [0, 1]
/// returns a point on the polyline; u values of the original vertices are
/// exposed as knots so samplers can avoid cutting corners.
class ArcLengthParam {
public:
    explicit ArcLengthParam(Polyline points);

    Vec2 at(double u) const;
    const std::vector<double>& knots() const { return knots_; }
    const Polyline& points() const { return points_; }
    double length() const { return total_length_; }

private:
    Polyline points_;
    std::vector<double> knots_;  // cumulative-length fractions, knots_[0] = 0, back() = 1
    double total_length_ = 0.0;
};

/// Merge a uniform n-point grid on [0, 1] with the given knots, sorted and
/// deduplicated. Guarantees that consecutive samples of an ArcLengthParam
/// curve never straddle one of its vertices.
std::vector<double> merged_sample_params(int n, std::span<const double> knots);

}  // namespace abphase
