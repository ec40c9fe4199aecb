#pragma once

#include <cmath>

namespace bnet {

/// Planar vector in micrometers. Used for positions, displacements and
/// unit headings alike.
struct Vec2
{
    double x = 0.0;
    double y = 0.0;

    constexpr Vec2& operator+=(Vec2 const& o)
    {
        x += o.x;
        y += o.y;
        return *this;
    }
    constexpr Vec2& operator-=(Vec2 const& o)
    {
        x -= o.x;
        y -= o.y;
        return *this;
    }

    friend constexpr Vec2 operator+(Vec2 a, Vec2 const& b) { return a += b; }
    friend constexpr Vec2 operator-(Vec2 a, Vec2 const& b) { return a -= b; }
    friend constexpr Vec2 operator*(double s, Vec2 const& v) { return {s * v.x, s * v.y}; }
    friend constexpr Vec2 operator*(Vec2 const& v, double s) { return {s * v.x, s * v.y}; }
    friend constexpr bool operator==(Vec2 const&, Vec2 const&) = default;
};

constexpr double dot(Vec2 const& a, Vec2 const& b) { return a.x * b.x + a.y * b.y; }
constexpr double norm2(Vec2 const& v) { return dot(v, v); }
inline double norm(Vec2 const& v) { return std::hypot(v.x, v.y); }
inline double distance(Vec2 const& a, Vec2 const& b) { return norm(a - b); }

/// Unit vector at angle `theta` (radians) from the +x axis.
inline Vec2 unit_from_angle(double theta) { return {std::cos(theta), std::sin(theta)}; }

}  // namespace bnet
