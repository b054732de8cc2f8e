#pragma once

#include <cmath>

namespace crowdrisk {

/// 2D vector, doubles. Used for positions [m], velocities [m/s] and winds.
struct Vec2 {
    double x{0.0};
    double y{0.0};

    constexpr Vec2() = default;
    constexpr Vec2(double x_, double y_) : x(x_), y(y_) {}

    constexpr Vec2 operator+(Vec2 r) const { return {x + r.x, y + r.y}; }
    constexpr Vec2 operator-(Vec2 r) const { return {x - r.x, y - r.y}; }
    constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
    constexpr Vec2 operator/(double s) const { return {x / s, y / s}; }
    constexpr Vec2 operator-() const { return {-x, -y}; }
    constexpr Vec2& operator+=(Vec2 r) { x += r.x; y += r.y; return *this; }
    constexpr Vec2& operator-=(Vec2 r) { x -= r.x; y -= r.y; return *this; }
    constexpr Vec2& operator*=(double s) { x *= s; y *= s; return *this; }
    constexpr bool operator==(const Vec2&) const = default;

    constexpr double dot(Vec2 r) const { return x * r.x + y * r.y; }
    /// z-component of the 3D cross product (a.k.a. 2D determinant).
    constexpr double cross(Vec2 r) const { return x * r.y - y * r.x; }
    constexpr double norm_sq() const { return x * x + y * y; }
    double norm() const { return std::hypot(x, y); }

    /// Unit vector; (0,0) when the norm is below eps.
    Vec2 normalized(double eps = 1e-12) const {
        const double n = norm();
        return n <= eps ? Vec2{0.0, 0.0} : Vec2{x / n, y / n};
    }

    /// Counter-clockwise rotation by angle [rad].
    Vec2 rotated(double angle) const {
        const double c = std::cos(angle), s = std::sin(angle);
        return {c * x - s * y, s * x + c * y};
    }

    /// Counter-clockwise perpendicular.
    constexpr Vec2 perp() const { return {-y, x}; }

    bool finite() const { return std::isfinite(x) && std::isfinite(y); }
};

constexpr Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }

inline double distance(Vec2 a, Vec2 b) { return (a - b).norm(); }

}  // namespace crowdrisk
