#pragma once

#include <array>
#include <cmath>

namespace dualtrack {

/// Integer pixel coordinate, x = column, y = row (origin top-left).
struct PixelCoord {
    int x = 0;
    int y = 0;

    bool operator==(const PixelCoord&) const = default;
};

/// 2D point / displacement in sub-pixel units.
struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    bool operator==(const Vec2&) const = default;

    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    Vec2& operator+=(Vec2 o) { x += o.x; y += o.y; return *this; }

    [[nodiscard]] double norm() const { return std::hypot(x, y); }
    [[nodiscard]] double norm_sq() const { return x * x + y * y; }
};

inline Vec2 to_vec(PixelCoord p) { return {static_cast<double>(p.x), static_cast<double>(p.y)}; }

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }

/// z-component of the 3D cross product of two in-plane vectors.
inline double cross_z(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }

inline double distance(Vec2 a, Vec2 b) { return (a - b).norm(); }

/// Perpendicular distance from p to the infinite line through a and b,
/// computed from the cross-product area form. Requires a != b.
inline double point_line_distance(Vec2 p, Vec2 a, Vec2 b) {
    return std::abs(cross_z(b - a, p - a)) / (b - a).norm();
}

/// Axis-aligned rectangle, (x, y) top-left corner, w right, h down.
struct Rect {
    double x = 0.0;
    double y = 0.0;
    double w = 0.0;
    double h = 0.0;

    bool operator==(const Rect&) const = default;

    [[nodiscard]] double area() const { return w * h; }
    [[nodiscard]] Vec2 center() const { return {x + w / 2.0, y + h / 2.0}; }
    [[nodiscard]] bool contains(Vec2 p) const {
        return p.x >= x && p.x < x + w && p.y >= y && p.y < y + h;
    }
};

}  // namespace dualtrack
