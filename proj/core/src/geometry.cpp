#include "abphase/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace abphase {

double norm(Vec2 v) { return std::hypot(v.x, v.y); }

double distance(Vec2 a, Vec2 b) { return norm(a - b); }

Vec2 lerp(Vec2 a, Vec2 b, double u) {
    if (a == b) return a;
    return {a.x + u * (b.x - a.x), a.y + u * (b.y - a.y)};
}

double signed_angle(Vec2 a, Vec2 b) {
    if ((a.x == 0.0 && a.y == 0.0) || (b.x == 0.0 && b.y == 0.0)) {
        throw std::domain_error("signed_angle: zero-length direction");
    }
    return std::atan2(cross(a, b), dot(a, b));
}

double accumulated_angle(std::span<const Vec2> points, Vec2 center) {
    if (points.size() < 2) return 0.0;
    double total = 0.0;
    Vec2 prev = points[0] - center;
    if (prev.x == 0.0 && prev.y == 0.0) {
        throw std::domain_error("accumulated_angle: vertex coincides with center");
    }
    for (std::size_t i = 1; i < points.size(); ++i) {
        const Vec2 cur = points[i] - center;
        if (cur.x == 0.0 && cur.y == 0.0) {
            throw std::domain_error("accumulated_angle: vertex coincides with center");
        }
        // A segment through the center subtends an undefined angle.
        if (cross(prev, cur) == 0.0 && dot(prev, cur) < 0.0) {
            throw std::domain_error("accumulated_angle: segment passes through center");
        }
        total += std::atan2(cross(prev, cur), dot(prev, cur));
        prev = cur;
    }
    return total;
}

double polyline_length(std::span<const Vec2> points) {
    double len = 0.0;
    for (std::size_t i = 1; i < points.size(); ++i) {
        len += distance(points[i - 1], points[i]);
    }
    return len;
}

double point_polyline_distance(Vec2 p, std::span<const Vec2> points) {
    if (points.empty()) return std::numeric_limits<double>::infinity();
    if (points.size() == 1) return distance(p, points[0]);
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < points.size(); ++i) {
        const Vec2 a = points[i - 1];
        const Vec2 b = points[i];
        const Vec2 ab = b - a;
        const double len2 = dot(ab, ab);
        double u = 0.0;
        if (len2 > 0.0) u = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
        best = std::min(best, distance(p, a + u * ab));
    }
    return best;
}

bool point_in_disk(Vec2 p, Vec2 center, double radius) {
    const Vec2 d = p - center;
    return dot(d, d) <= radius * radius;
}

namespace {

// Contribution of the directed edge a -> b (coordinates relative to the disk
// center) to the signed polygon/disk overlap: the triangle (0, a, b) clipped
// to the disk of radius r. Chord pieces contribute triangle area, pieces
// outside the disk contribute the circular sector they subtend.
double edge_disk_contribution(Vec2 a, Vec2 b, double r) {
    const Vec2 d = b - a;
    const double dd = dot(d, d);

    double roots[2];
    int n_roots = 0;
    if (dd > 0.0) {
        // |a + t d|^2 = r^2
        const double pb = dot(a, d) / dd;
        const double pc = (dot(a, a) - r * r) / dd;
        const double disc = pb * pb - pc;
        if (disc > 0.0) {
            const double s = std::sqrt(disc);
            const double t0 = -pb - s;
            const double t1 = -pb + s;
            if (t0 > 0.0 && t0 < 1.0) roots[n_roots++] = t0;
            if (t1 > 0.0 && t1 < 1.0) roots[n_roots++] = t1;
        }
    }

    double area = 0.0;
    double t_prev = 0.0;
    Vec2 p_prev = a;
    for (int i = 0; i <= n_roots; ++i) {
        const double t_next = (i < n_roots) ? roots[i] : 1.0;
        if (t_next <= t_prev) continue;
        const Vec2 p_next = (i < n_roots) ? a + roots[i] * d : b;
        const Vec2 mid = a + (0.5 * (t_prev + t_next)) * d;
        if (dot(mid, mid) <= r * r) {
            area += 0.5 * cross(p_prev, p_next);
        } else {
            // Sector swept from p_prev to p_next; a chord outside the disk
            // subtends strictly less than pi, so the principal angle is right.
            area += 0.5 * r * r * std::atan2(cross(p_prev, p_next), dot(p_prev, p_next));
        }
        t_prev = t_next;
        p_prev = p_next;
    }
    return area;
}

}  // namespace

double disk_polygon_overlap(std::span<const Vec2> polygon, Vec2 center, double radius) {
    if (polygon.size() < 3 || radius <= 0.0) return 0.0;
    double area = 0.0;
    Vec2 prev = polygon.back() - center;
    for (const Vec2& v : polygon) {
        const Vec2 cur = v - center;
        area += edge_disk_contribution(prev, cur, radius);
        prev = cur;
    }
    return area;
}

double polygon_signed_area(std::span<const Vec2> polygon) {
    if (polygon.size() < 3) return 0.0;
    double acc = 0.0;
    Vec2 prev = polygon.back();
    for (const Vec2& v : polygon) {
        acc += cross(prev, v);
        prev = v;
    }
    return 0.5 * acc;
}

ArcLengthParam::ArcLengthParam(Polyline points) : points_(std::move(points)) {
    if (points_.empty()) throw std::invalid_argument("ArcLengthParam: empty polyline");
    knots_.resize(points_.size());
    knots_[0] = 0.0;
    for (std::size_t i = 1; i < points_.size(); ++i) {
        total_length_ += distance(points_[i - 1], points_[i]);
        knots_[i] = total_length_;
    }
    if (total_length_ > 0.0) {
        for (double& k : knots_) k /= total_length_;
        knots_.back() = 1.0;
    } else {
        // Degenerate curve (single point repeated): spread knots uniformly.
        for (std::size_t i = 0; i < knots_.size(); ++i) {
            knots_[i] = knots_.size() > 1 ? double(i) / double(knots_.size() - 1) : 0.0;
        }
    }
}

Vec2 ArcLengthParam::at(double u) const {
    if (points_.size() == 1) return points_[0];
    if (u <= 0.0) return points_.front();
    if (u >= 1.0) return points_.back();
    const auto it = std::upper_bound(knots_.begin(), knots_.end(), u);
    const std::size_t hi = std::min<std::size_t>(it - knots_.begin(), knots_.size() - 1);
    const std::size_t lo = hi - 1;
    const double span = knots_[hi] - knots_[lo];
    const double f = span > 0.0 ? (u - knots_[lo]) / span : 0.0;
    return lerp(points_[lo], points_[hi], f);
}

std::vector<double> merged_sample_params(int n, std::span<const double> knots) {
    if (n < 2) n = 2;
    std::vector<double> params;
    params.reserve(static_cast<std::size_t>(n) + knots.size());
    for (int i = 0; i < n; ++i) params.push_back(double(i) / double(n - 1));
    params.insert(params.end(), knots.begin(), knots.end());
    std::sort(params.begin(), params.end());
    params.erase(std::unique(params.begin(), params.end(),
                             [](double a, double b) { return std::abs(a - b) < 1e-12; }),
                 params.end());
    if (params.front() != 0.0) params.front() = 0.0;
    if (params.back() != 1.0) params.back() = 1.0;
    return params;
}

}  // namespace abphase
