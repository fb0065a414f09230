#pragma once

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "sphaerica/angle.hpp"
#include "sphaerica/errors.hpp"
#include "sphaerica/triangle.hpp"

namespace sphaerica {

/// Solid angle in steradians (area on the unit sphere) plus the method
/// that produced it.
struct SolidAngleResult {
    double steradians = 0.0;
    std::string method;  // "excess" | "regular-n-gon"
};

/// Area of a lune of dihedral angle theta on the unit sphere: 2*theta.
/// theta = 2*pi (the full sphere) is accepted as a boundary case.
inline double lune_area(Angle theta) {
    double t = theta.radians();
    if (!(t > 0.0) || t > kTwoPi)
        throw InvalidInput("lune_area: angle must lie in (0, 2*pi]");
    return 2.0 * t;
}

/// Girard: area = angle excess A + B + C - pi.
inline double girard_area(Angle A, Angle B, Angle C) {
    for (Angle x : {A, B, C}) require_triangle_element(x, "angle");
    double excess = A.radians() + B.radians() + C.radians() - kPi;
    if (excess <= 0.0 || excess >= kTwoPi)
        throw InvalidTriangle("girard_area: excess outside (0, 2*pi)");
    return excess;
}

namespace detail {

inline void require_spherical_sides(double a, double b, double c) {
    for (double s : {a, b, c})
        if (!(s > 0.0) || !(s < kPi) || !std::isfinite(s))
            throw InvalidTriangle("side outside (0, pi)");
    if (a + b + c >= kTwoPi)
        throw InvalidTriangle("side sum must be below 2*pi");
    if (a >= b + c || b >= a + c || c >= a + b)
        throw InvalidTriangle("side triple violates the triangle inequality");
}

}  // namespace detail

/// L'Huilier's quarter-excess form of the spherical Heron formula:
///   tan(E/4) = sqrt(tan(s/2) tan((s-a)/2) tan((s-b)/2) tan((s-c)/2)).
/// Well conditioned near degenerate triangles, where Girard's excess
/// cancels catastrophically.
inline double heron_spherical_area(Angle a, Angle b, Angle c) {
    double x = a.radians(), y = b.radians(), z = c.radians();
    detail::require_spherical_sides(x, y, z);
    double s = 0.5 * (x + y + z);
    double prod = std::tan(0.5 * s) * std::tan(0.5 * (s - x)) *
                  std::tan(0.5 * (s - y)) * std::tan(0.5 * (s - z));
    return 4.0 * std::atan(std::sqrt(std::max(0.0, prod)));
}

/// Euclidean Heron formula sqrt(s(s-a)(s-b)(s-c)).
inline double heron_planar_area(double a, double b, double c) {
    for (double s : {a, b, c})
        if (!(s > 0.0) || !std::isfinite(s))
            throw InvalidTriangle("heron_planar_area: sides must be positive");
    if (a >= b + c || b >= a + c || c >= a + b)
        throw InvalidTriangle("heron_planar_area: triangle inequality violated");
    double s = 0.5 * (a + b + c);
    return std::sqrt(std::max(0.0, s * (s - a) * (s - b) * (s - c)));
}

/// Measure of the solid angle bounded by n equal planar angles a, equally
/// inclined among themselves: the area of the regular spherical n-gon with
/// side a.  Triangulates into n isoceles triangles about the axis (apex
/// angle 2*pi/n); the base angle beta comes from the Napier relation
/// cos(pi/n) = cos(a/2) sin(beta) in the right triangle cut by the apothem.
inline SolidAngleResult solid_angle_regular(int n, Angle a) {
    if (n < 3) throw InvalidInput("solid_angle_regular: n must be at least 3");
    double side = a.radians();
    if (!(side > 0.0))
        throw InfeasibleCone("solid_angle_regular: side must be positive");
    // The polygon closes up only while a/2 < pi/n; at equality it flattens
    // onto a great circle (vertex angle pi).
    double half = 0.5 * side;
    double center = kPi / n;
    double sin_beta = std::cos(center) / std::cos(half);
    if (!(half < center) || !(sin_beta < 1.0) ||
        !(std::sin(half) < std::sin(center)))
        throw InfeasibleCone("solid_angle_regular: no spherical polygon with this side");
    double beta = std::asin(sin_beta);
    double triangle_excess = 2.0 * center + 2.0 * beta - kPi;
    return {n * triangle_excess, "regular-n-gon"};
}

struct PolyhedronVertexAngle {
    std::string name;
    int n;            // planar angles meeting at the vertex
    Angle a;          // each planar angle
    SolidAngleResult solid_angle;
};

/// Vertex solid angles of the five regular polyhedra.
inline std::vector<PolyhedronVertexAngle> regular_polyhedra_table() {
    std::vector<PolyhedronVertexAngle> rows;
    auto add = [&rows](const char* name, int n, double a) {
        rows.push_back({name, n, Angle(a), solid_angle_regular(n, Angle(a))});
    };
    add("tetrahedron", 3, kPi / 3.0);
    add("cube", 3, kPi / 2.0);
    add("octahedron", 4, kPi / 3.0);
    add("dodecahedron", 3, 3.0 * kPi / 5.0);
    add("icosahedron", 5, kPi / 3.0);
    return rows;
}

}  // namespace sphaerica
