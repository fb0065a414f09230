#pragma once

#include <cmath>

#include "sphaerica/errors.hpp"
#include "sphaerica/vec.hpp"

namespace sphaerica {

// Hyperboloid model of the hyperbolic plane: the upper sheet of
// x^2 + y^2 - z^2 = -1 in Minkowski 3-space, geodesics cut by planes
// through the origin.

inline double minkowski_dot(Vec3 u, Vec3 v) {
    return u.x * v.x + u.y * v.y - u.z * v.z;
}

/// J(u x v), the Minkowski analogue of the cross product:
/// minkowski_dot(u (x) v, w) = det(u, v, w).
inline Vec3 minkowski_cross(Vec3 u, Vec3 v) {
    Vec3 c = cross(u, v);
    return {c.x, c.y, -c.z};
}

inline bool on_hyperboloid(Vec3 p, double tol = 1e-9) {
    return p.z > 0.0 && std::fabs(minkowski_dot(p, p) + 1.0) <= tol;
}

/// Scale a timelike vector onto the upper sheet.
inline Vec3 to_hyperboloid(Vec3 v) {
    double q = -minkowski_dot(v, v);
    if (!(q > 0.0))
        throw DegenerateInput("to_hyperboloid: vector is not timelike");
    Vec3 p = (1.0 / std::sqrt(q)) * v;
    return p.z > 0.0 ? p : -p;
}

inline double hyperbolic_distance(Vec3 p, Vec3 q) {
    return std::acosh(std::max(1.0, -minkowski_dot(p, q)));
}

/// Point at hyperbolic distance s from (0,0,1) in direction theta.
inline Vec3 hyperboloid_polar(double s, double theta) {
    return {std::sinh(s) * std::cos(theta), std::sinh(s) * std::sin(theta), std::cosh(s)};
}

/// Intersection of the geodesics through (p1,q1) and (p2,q2); throws when
/// the geodesics do not meet (intersection direction not timelike).
inline Vec3 geodesic_intersection(Vec3 p1, Vec3 q1, Vec3 p2, Vec3 q2) {
    Vec3 n1 = minkowski_cross(p1, q1);
    Vec3 n2 = minkowski_cross(p2, q2);
    return to_hyperboloid(minkowski_cross(n1, n2));
}

/// Hyperbolic distance from x to the geodesic through p and q:
/// sinh(d) = |<x, n>| for the unit spacelike normal n of the geodesic plane.
inline double distance_to_geodesic(Vec3 x, Vec3 p, Vec3 q) {
    Vec3 n = minkowski_cross(p, q);
    double nn = minkowski_dot(n, n);  // spacelike for a genuine geodesic
    if (!(nn > 0.0))
        throw DegenerateInput("distance_to_geodesic: points do not span a geodesic");
    return std::asinh(std::fabs(minkowski_dot(x, n)) / std::sqrt(nn));
}

}  // namespace sphaerica
