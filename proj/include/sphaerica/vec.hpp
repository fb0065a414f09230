#pragma once

#include <algorithm>
#include <cmath>

namespace sphaerica {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    friend Vec2 operator+(Vec2 p, Vec2 q) { return {p.x + q.x, p.y + q.y}; }
    friend Vec2 operator-(Vec2 p, Vec2 q) { return {p.x - q.x, p.y - q.y}; }
    friend Vec2 operator*(double s, Vec2 p) { return {s * p.x, s * p.y}; }
};

inline double dot(Vec2 p, Vec2 q) { return p.x * q.x + p.y * q.y; }
inline double cross(Vec2 p, Vec2 q) { return p.x * q.y - p.y * q.x; }
inline double norm(Vec2 p) { return std::hypot(p.x, p.y); }
inline Vec2 perp(Vec2 p) { return {-p.y, p.x}; }

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    friend Vec3 operator+(Vec3 p, Vec3 q) { return {p.x + q.x, p.y + q.y, p.z + q.z}; }
    friend Vec3 operator-(Vec3 p, Vec3 q) { return {p.x - q.x, p.y - q.y, p.z - q.z}; }
    friend Vec3 operator-(Vec3 p) { return {-p.x, -p.y, -p.z}; }
    friend Vec3 operator*(double s, Vec3 p) { return {s * p.x, s * p.y, s * p.z}; }
};

inline double dot(Vec3 p, Vec3 q) { return p.x * q.x + p.y * q.y + p.z * q.z; }

inline Vec3 cross(Vec3 p, Vec3 q) {
    return {p.y * q.z - p.z * q.y, p.z * q.x - p.x * q.z, p.x * q.y - p.y * q.x};
}

inline double norm(Vec3 p) { return std::sqrt(dot(p, p)); }

/// Scalar triple product p . (q x r); vanishes iff the three are coplanar
/// with the origin, i.e. lie on one great circle when they are unit vectors.
inline double triple(Vec3 p, Vec3 q, Vec3 r) { return dot(p, cross(q, r)); }

inline double clamp_unit(double t) { return std::clamp(t, -1.0, 1.0); }

}  // namespace sphaerica
