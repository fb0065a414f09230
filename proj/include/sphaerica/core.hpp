#pragma once

#include <cmath>

#include "sphaerica/angle.hpp"
#include "sphaerica/errors.hpp"
#include "sphaerica/vec.hpp"

namespace sphaerica {

/// Shared tolerance policy.
///   abs_eps        - absolute tolerance for degeneracy checks
///   residual_eps   - acceptance threshold for constraint residuals
///   root_scan_steps- grid size for the scan-based construction solvers
struct Tolerances {
    double abs_eps = 1e-10;
    double residual_eps = 1e-8;
    int root_scan_steps = 4096;

    void validate() const {
        if (!(abs_eps > 0.0) || !(residual_eps > 0.0) || root_scan_steps <= 0)
            throw InvalidInput("Tolerances: all fields must be positive");
    }
};

/// A point on the unit sphere.  The constructor enforces unit length to
/// 1e-12; use normalized() to build one from an arbitrary direction.
class SpherePoint {
public:
    SpherePoint(double x, double y, double z) : v_{x, y, z} {
        if (std::fabs(dot(v_, v_) - 1.0) > 1e-12)
            throw InvalidInput("SpherePoint: coordinates are not unit length");
    }

    explicit SpherePoint(Vec3 v) : SpherePoint(v.x, v.y, v.z) {}

    static SpherePoint normalized(Vec3 v) {
        double n = norm(v);
        if (!(n > 0.0) || !std::isfinite(n))
            throw InvalidInput("SpherePoint: cannot normalize a zero vector");
        return SpherePoint((1.0 / n) * v.x, (1.0 / n) * v.y, (1.0 / n) * v.z);
    }

    static SpherePoint normalized(double x, double y, double z) {
        return normalized(Vec3{x, y, z});
    }

    double x() const { return v_.x; }
    double y() const { return v_.y; }
    double z() const { return v_.z; }
    Vec3 vec() const { return v_; }

    SpherePoint antipode() const { return SpherePoint(-v_.x, -v_.y, -v_.z); }

private:
    Vec3 v_;
};

inline double dot(const SpherePoint& p, const SpherePoint& q) {
    return dot(p.vec(), q.vec());
}

/// { p : p . pole = 0 }
struct GreatCircle {
    SpherePoint pole;
};

/// { p : p . pole = cos(radius) }, radius in (0, pi).  radius = pi/2
/// degenerates to the great circle with the same pole.
struct SmallCircle {
    SpherePoint pole;
    Angle radius;

    SmallCircle(SpherePoint pole_, Angle radius_) : pole(pole_), radius(radius_) {
        require_triangle_element(radius, "SmallCircle radius");
    }
};

inline Angle angular_distance(const SpherePoint& p, const SpherePoint& q) {
    return Angle(std::acos(clamp_unit(dot(p, q))));
}

/// Pole is p x q normalized: order-sensitive, so callers wanting unsigned
/// circles compare poles up to sign.
inline GreatCircle great_circle_through(const SpherePoint& p, const SpherePoint& q,
                                        const Tolerances& tol = {}) {
    Vec3 n = cross(p.vec(), q.vec());
    if (norm(n) < tol.abs_eps)
        throw DegenerateInput("great_circle_through: points coincident or antipodal");
    return GreatCircle{SpherePoint::normalized(n)};
}

inline bool small_circle_contains(const SmallCircle& c, const SpherePoint& p, double tol) {
    if (!(tol > 0.0)) throw InvalidInput("small_circle_contains: tol must be positive");
    return std::fabs(dot(c.pole, p) - cos(c.radius)) <= tol;
}

inline bool great_circle_contains(const GreatCircle& c, const SpherePoint& p, double tol) {
    if (!(tol > 0.0)) throw InvalidInput("great_circle_contains: tol must be positive");
    return std::fabs(dot(c.pole, p)) <= tol;
}

}  // namespace sphaerica
