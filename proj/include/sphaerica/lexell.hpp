#pragma once

#include <cmath>
#include <utility>

#include "sphaerica/area.hpp"
#include "sphaerica/core.hpp"
#include "sphaerica/errors.hpp"
#include "sphaerica/vec.hpp"

namespace sphaerica {

struct Line2D {
    Vec2 point;
    Vec2 direction;  // unit length
};

/// Locus of apices P such that triangle (A, B, P) has area S: the two
/// lines parallel to AB at distance 2S/|AB|.
inline std::pair<Line2D, Line2D> euclidean_equal_area_locus(Vec2 A, Vec2 B, double S,
                                                            const Tolerances& tol = {}) {
    if (!(S > 0.0) || !std::isfinite(S))
        throw InvalidInput("euclidean_equal_area_locus: area must be positive");
    double base = norm(B - A);
    if (base < tol.abs_eps)
        throw DegenerateInput("euclidean_equal_area_locus: base points coincide");
    Vec2 dir = (1.0 / base) * (B - A);
    Vec2 n = perp(dir);
    double h = 2.0 * S / base;
    return {Line2D{A + h * n, dir}, Line2D{A + (-h) * n, dir}};
}

/// Area of the spherical triangle PQR from its vertices: side lengths by
/// angular distance, area by the L'Huilier formula.
inline double spherical_triangle_area_from_vertices(const SpherePoint& P,
                                                    const SpherePoint& Q,
                                                    const SpherePoint& R,
                                                    const Tolerances& tol = {}) {
    Angle a = angular_distance(Q, R);
    Angle b = angular_distance(P, R);
    Angle c = angular_distance(P, Q);
    for (Angle s : {a, b, c})
        if (s.radians() < tol.abs_eps || kPi - s.radians() < tol.abs_eps)
            throw DegenerateInput("triangle vertices coincident or antipodal");
    try {
        return heron_spherical_area(a, b, c);
    } catch (const InvalidTriangle&) {
        throw DegenerateInput("triangle vertices nearly collinear");
    }
}

namespace detail {

// Non-throwing area used inside the locus root finder; sides are clamped
// away from the endpoints so degenerate iterates evaluate to 0 or 2*pi
// instead of failing.
inline double triangle_area_clamped(Vec3 P, Vec3 Q, Vec3 R) {
    auto side = [](Vec3 u, Vec3 v) {
        double d = std::acos(clamp_unit(dot(u, v)));
        return std::clamp(d, 1e-14, kPi - 1e-14);
    };
    double a = side(Q, R), b = side(P, R), c = side(P, Q);
    double s = 0.5 * (a + b + c);
    // rounding can push s past pi at the antipodal-degenerate end, where
    // the area tends to the full 2*pi
    double t0 = std::tan(0.5 * s);
    if (t0 < 0.0 || !std::isfinite(t0)) return kTwoPi;
    double prod = t0 * std::tan(0.5 * (s - a)) * std::tan(0.5 * (s - b)) *
                  std::tan(0.5 * (s - c));
    if (!std::isfinite(prod)) return kTwoPi;
    return 4.0 * std::atan(std::sqrt(std::max(0.0, prod)));
}

// Geodesic interpolation between two sphere points.
inline Vec3 slerp(Vec3 u, Vec3 v, double f) {
    double omega = std::acos(clamp_unit(dot(u, v)));
    double so = std::sin(omega);
    return (std::sin((1.0 - f) * omega) / so) * u + (std::sin(f * omega) / so) * v;
}

}  // namespace detail

/// Apex locus of spherical triangles with base (base_a, base_b) and area S:
/// a small circle.  `circle` is the fitted locus; `apex` is the fitted
/// apex on the perpendicular-bisector great circle and marks which side of
/// the base the locus arc was fitted on.
struct LexellLocus {
    SpherePoint base_a;
    SpherePoint base_b;
    double area;
    SmallCircle circle;
    SpherePoint apex;
};

/// Construct the Lexell locus for base (A, B) and area S in (0, 2*pi).
/// Three apices with area S are root-found along meridians through the
/// base (at fractions 1/4, 1/2, 3/4 of the base arc, toward the pole
/// side), and the unique circle through them is returned.  That the locus
/// passes through the antipodes of A and B is not used here; tests assert
/// it as an invariant.
inline LexellLocus lexell_circle(const SpherePoint& A, const SpherePoint& B, double S,
                                 const Tolerances& tol = {}) {
    if (!(S > 0.0) || !(S < kTwoPi))
        throw UnattainableArea("lexell_circle: area must lie in (0, 2*pi)");
    Vec3 axis = cross(A.vec(), B.vec());
    if (norm(axis) < tol.abs_eps)
        throw DegenerateInput("lexell_circle: base points coincident or antipodal");
    Vec3 pole_side = (1.0 / norm(axis)) * axis;  // hemisphere the apices live in

    // Root-find an apex on the great circle through the base point at
    // `frac`, leaving the base circle in a direction tilted by `tilt` from
    // the perpendicular.  Area runs from 0 (apex on the base circle) to
    // 2*pi (apex at the far crossing), so a bracket always exists for
    // attainable S.
    auto apex_at = [&](double frac, double tilt) {
        Vec3 Q = detail::slerp(A.vec(), B.vec(), frac);
        Vec3 T = cross(pole_side, Q);  // unit: tangent along the base circle
        Vec3 D = std::cos(tilt) * pole_side + std::sin(tilt) * T;
        auto area_at = [&](double t) {
            Vec3 P = std::cos(t) * Q + std::sin(t) * D;
            return detail::triangle_area_clamped(A.vec(), B.vec(), P);
        };
        double lo = 1e-9, hi = kPi - 1e-9;
        if (area_at(lo) > S || area_at(hi) < S)
            throw UnattainableArea("lexell_circle: no apex with the requested area");
        for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
            double mid = 0.5 * (lo + hi);
            (area_at(mid) < S ? lo : hi) = mid;
        }
        double t = 0.5 * (lo + hi);
        return std::cos(t) * Q + std::sin(t) * D;
    };

    Vec3 p1 = apex_at(0.5, 0.0);

    // Two further apices on asymmetric paths.  Distinct paths can still
    // cross the locus at a shared point, so fall back to other tilts when
    // the three apices fail to span a plane.
    Vec3 n{0, 0, 0};
    Vec3 p2, p3;
    for (auto [tilt2, tilt3] : {std::pair{0.35, -0.35}, {0.6, -0.9}, {0.95, -0.2}}) {
        p2 = apex_at(0.25, tilt2);
        p3 = apex_at(0.75, tilt3);
        n = cross(p2 - p1, p3 - p1);
        if (norm(n) > 1e-9) break;
    }
    if (norm(n) < 1e-9)
        throw DegenerateInput("lexell_circle: fitted apices are collinear");
    Vec3 pole = (1.0 / norm(n)) * n;
    if (dot(pole, pole_side) < 0.0) pole = -pole;  // deterministic side choice
    double radius = std::acos(clamp_unit(dot(pole, p1)));
    if (radius < tol.abs_eps || kPi - radius < tol.abs_eps)
        throw DegenerateInput("lexell_circle: fitted circle degenerates to a point");

    return LexellLocus{A, B, S,
                       SmallCircle{SpherePoint::normalized(pole), Angle(radius)},
                       SpherePoint::normalized(p1)};
}

}  // namespace sphaerica
