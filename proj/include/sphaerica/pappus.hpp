#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "sphaerica/core.hpp"
#include "sphaerica/errors.hpp"
#include "sphaerica/shapes.hpp"
#include "sphaerica/vec.hpp"

namespace sphaerica {

/// Inscribe a triangle in the carrier circle with side i's line passing
/// through point i (side i opposite vertex i).
struct PappusProblem2D {
    Circle2D carrier;
    Vec2 p1, p2, p3;
};

/// Spherical variant: vertices on a small circle, sides read as great
/// circles.
struct PappusProblemSphere {
    SmallCircle carrier;
    SpherePoint p1, p2, p3;
};

using Triangle2D = std::array<Vec2, 3>;
using TriangleSphere = std::array<SpherePoint, 3>;

namespace pappus_detail {

inline double wrap_pm_pi(double t) {
    t = std::remainder(t, kTwoPi);
    return t;
}

// Shared closure-map root scan: find t in [0, 2*pi) with mismatch(t) = 0.
// Sign changes are bisected.  Tangential (even-multiplicity) roots show up
// as local minima of |mismatch| that touch zero without crossing; those
// are located by golden-section search and sharpened with a parabolic fit
// of the signed mismatch.  Wrap jumps (|step| >= pi) are skipped.
template <typename MismatchFn>
std::vector<double> scan_closure_roots(MismatchFn&& mismatch, int steps) {
    std::vector<double> roots;
    std::vector<double> vals(static_cast<size_t>(steps) + 1);
    double dt = kTwoPi / steps;
    for (int i = 0; i <= steps; ++i) vals[static_cast<size_t>(i)] = mismatch(i * dt);
    auto at = [&](int i) { return vals[static_cast<size_t>(((i % steps) + steps) % steps)]; };

    auto bisect = [&](double lo, double hi, double flo) {
        for (int it = 0; it < 80 && hi - lo > 1e-13; ++it) {
            double mid = 0.5 * (lo + hi);
            double fm = mismatch(mid);
            if (fm == 0.0) return mid;
            if ((fm > 0.0) == (flo > 0.0)) { lo = mid; flo = fm; }
            else hi = mid;
        }
        return 0.5 * (lo + hi);
    };

    for (int i = 0; i < steps; ++i) {
        double f0 = vals[static_cast<size_t>(i)], f1 = vals[static_cast<size_t>(i) + 1];
        if (std::fabs(f0 - f1) >= kPi) continue;  // wrap seam, not a root
        if (f0 == 0.0) { roots.push_back(i * dt); continue; }
        if ((f0 > 0.0) != (f1 > 0.0)) roots.push_back(bisect(i * dt, (i + 1) * dt, f0));
    }

    // tangential roots: local minima of |mismatch| below a coarse gate
    for (int i = 0; i < steps; ++i) {
        double m0 = std::fabs(at(i));
        if (m0 >= 1e-3 || m0 == 0.0) continue;
        if (m0 > std::fabs(at(i - 1)) || m0 > std::fabs(at(i + 1))) continue;
        if (std::fabs(at(i) - at(i - 1)) >= kPi || std::fabs(at(i + 1) - at(i)) >= kPi)
            continue;

        double lo = (i - 1) * dt, hi = (i + 1) * dt;
        const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
        double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
        double g1 = std::fabs(mismatch(x1)), g2 = std::fabs(mismatch(x2));
        for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
            if (g1 < g2) { hi = x2; x2 = x1; g2 = g1; x1 = hi - gr * (hi - lo); g1 = std::fabs(mismatch(x1)); }
            else { lo = x1; x1 = x2; g1 = g2; x2 = lo + gr * (hi - lo); g2 = std::fabs(mismatch(x2)); }
        }
        double t = 0.5 * (lo + hi);
        // sharpen a double root: vertex of the parabola through three
        // nearby signed values
        for (double h : {1e-5, 1e-7}) {
            double fm = mismatch(t - h), f0c = mismatch(t), fp = mismatch(t + h);
            double denom = fp - 2.0 * f0c + fm;
            if (std::fabs(denom) > 1e-18) {
                double shift = -0.5 * h * (fp - fm) / denom;
                if (std::fabs(shift) < 2.0 * h) t += shift;
            }
        }
        if (std::fabs(mismatch(t)) < 1e-9) roots.push_back(t);
    }
    return roots;
}

inline double point_line_distance(Vec2 a, Vec2 b, Vec2 x) {
    double len = norm(b - a);
    if (len < 1e-12) return 1e6;
    return std::fabs(cross(b - a, x - a)) / len;
}

inline double point_great_circle_distance(Vec3 a, Vec3 b, Vec3 x) {
    Vec3 n = cross(a, b);
    double len = norm(n);
    if (len < 1e-12) return 1e6;
    return std::fabs(std::asin(clamp_unit(dot(x, n) / len)));
}

}  // namespace pappus_detail

/// All triangles inscribed in the planar carrier whose side i passes
/// through p_i.  Vertex V1 is parametrized by angle on the carrier, the
/// chord chain V1 -> V2 (through p3) -> V3 (through p1) -> closure
/// (through p2) is scanned for fixed points, and every candidate must pass
/// the incidence and on-carrier residual gates.
inline std::vector<Triangle2D> pappus_inscribed_triangle(const PappusProblem2D& prob,
                                                         const Tolerances& tol = {}) {
    using namespace pappus_detail;
    const Circle2D& K = prob.carrier;
    if (!(K.r > 0.0)) throw InvalidInput("pappus: carrier radius must be positive");
    Vec2 ctr{K.cx, K.cy};
    for (auto [u, v] : {std::pair{prob.p1, prob.p2}, {prob.p1, prob.p3}, {prob.p2, prob.p3}})
        if (norm(u - v) < tol.abs_eps)
            throw InvalidInput("pappus: the three points must be pairwise distinct");

    auto at = [&](double t) { return ctr + K.r * Vec2{std::cos(t), std::sin(t)}; };

    // Second intersection of the line through V (on the circle) and P; a
    // tangent chord yields the double point V itself.
    auto second = [&](Vec2 V, Vec2 P) {
        Vec2 d = P - V;
        double dd = dot(d, d);
        if (dd < 1e-26) return V;
        double s = -2.0 * dot(d, V - ctr) / dd;
        return V + s * d;
    };

    auto chain = [&](double t) {
        Vec2 v1 = at(t);
        Vec2 v2 = second(v1, prob.p3);
        Vec2 v3 = second(v2, prob.p1);
        Vec2 back = second(v3, prob.p2);
        return std::array<Vec2, 4>{v1, v2, v3, back};
    };

    auto mismatch = [&](double t) {
        auto ch = chain(t);
        double tb = std::atan2(ch[3].y - ctr.y, ch[3].x - ctr.x);
        return wrap_pm_pi(tb - t);
    };

    std::vector<Triangle2D> out;
    for (double t : scan_closure_roots(mismatch, tol.root_scan_steps)) {
        auto ch = chain(t);
        Triangle2D tri{ch[0], ch[1], ch[2]};
        bool ok = true;
        for (const Vec2& v : tri)
            if (std::fabs(norm(v - ctr) - K.r) > 1e-10) ok = false;
        if (norm(tri[0] - tri[1]) < 1e-8 || norm(tri[1] - tri[2]) < 1e-8 ||
            norm(tri[2] - tri[0]) < 1e-8)
            ok = false;  // collapsed chain, not a triangle
        if (ok && point_line_distance(tri[1], tri[2], prob.p1) > tol.residual_eps) ok = false;
        if (ok && point_line_distance(tri[2], tri[0], prob.p2) > tol.residual_eps) ok = false;
        if (ok && point_line_distance(tri[0], tri[1], prob.p3) > tol.residual_eps) ok = false;
        if (!ok) continue;
        bool dup = false;
        for (const Triangle2D& s : out) {
            double d = 0.0;
            for (int k = 0; k < 3; ++k) d = std::max(d, norm(s[static_cast<size_t>(k)] - tri[static_cast<size_t>(k)]));
            if (d < 1e-8) dup = true;
        }
        if (!dup) out.push_back(tri);
    }
    if (out.empty())
        throw NoSolution("pappus: no inscribed triangle through the three points");
    return out;
}

/// Spherical Pappus: vertices on the carrier small circle, side i's great
/// circle through p_i.  Same closure-map scan as the planar case, with
/// chords replaced by great-circle arcs.
inline std::vector<TriangleSphere> pappus_inscribed_triangle(const PappusProblemSphere& prob,
                                                             const Tolerances& tol = {}) {
    using namespace pappus_detail;
    Vec3 pole = prob.carrier.pole.vec();
    double rho = prob.carrier.radius.radians();
    double cr = std::cos(rho), sr = std::sin(rho);
    for (auto [u, v] : {std::pair{prob.p1, prob.p2}, {prob.p1, prob.p3}, {prob.p2, prob.p3}})
        if (norm(u.vec() - v.vec()) < tol.abs_eps)
            throw InvalidInput("pappus: the three points must be pairwise distinct");

    Vec3 ref = std::fabs(pole.z) < 0.9 ? Vec3{0, 0, 1} : Vec3{1, 0, 0};
    Vec3 e1 = cross(pole, ref);
    e1 = (1.0 / norm(e1)) * e1;
    Vec3 e2 = cross(pole, e1);

    auto at = [&](double t) {
        return cr * pole + sr * (std::cos(t) * e1 + std::sin(t) * e2);
    };

    // Second intersection of the great circle through V (on the carrier)
    // and P with the carrier; tangency yields the double point V.
    auto second = [&](Vec3 V, Vec3 P) {
        Vec3 n = cross(V, P);
        double nn = norm(n);
        if (nn < 1e-13) return V;  // P at +-V: chord undefined, stall
        n = (1.0 / nn) * n;
        Vec3 u = cross(n, pole);
        double m = norm(u);
        if (m < 1e-13) return V;  // chord runs along the carrier plane
        u = (1.0 / m) * u;
        Vec3 w = cross(u, n);  // unit, completes the great-circle frame
        double sphi = clamp_unit(cr / dot(w, pole));
        double phi0 = std::asin(sphi);
        Vec3 x1 = std::cos(phi0) * u + std::sin(phi0) * w;
        Vec3 x2 = std::cos(kPi - phi0) * u + std::sin(kPi - phi0) * w;
        return norm(x1 - V) >= norm(x2 - V) ? x1 : x2;
    };

    auto chain = [&](double t) {
        Vec3 v1 = at(t);
        Vec3 v2 = second(v1, prob.p3.vec());
        Vec3 v3 = second(v2, prob.p1.vec());
        Vec3 back = second(v3, prob.p2.vec());
        return std::array<Vec3, 4>{v1, v2, v3, back};
    };

    auto mismatch = [&](double t) {
        auto ch = chain(t);
        double tb = std::atan2(dot(ch[3], e2), dot(ch[3], e1));
        return wrap_pm_pi(tb - t);
    };

    std::vector<TriangleSphere> out;
    for (double t : scan_closure_roots(mismatch, tol.root_scan_steps)) {
        auto ch = chain(t);
        std::array<Vec3, 3> tri{ch[0], ch[1], ch[2]};
        bool ok = true;
        for (const Vec3& v : tri)
            if (std::fabs(dot(v, pole) - cr) > 1e-10) ok = false;
        if (norm(tri[0] - tri[1]) < 1e-8 || norm(tri[1] - tri[2]) < 1e-8 ||
            norm(tri[2] - tri[0]) < 1e-8)
            ok = false;
        if (ok && point_great_circle_distance(tri[1], tri[2], prob.p1.vec()) > tol.residual_eps) ok = false;
        if (ok && point_great_circle_distance(tri[2], tri[0], prob.p2.vec()) > tol.residual_eps) ok = false;
        if (ok && point_great_circle_distance(tri[0], tri[1], prob.p3.vec()) > tol.residual_eps) ok = false;
        if (!ok) continue;
        bool dup = false;
        for (const TriangleSphere& s : out) {
            double d = 0.0;
            for (int k = 0; k < 3; ++k)
                d = std::max(d, norm(s[static_cast<size_t>(k)].vec() - tri[static_cast<size_t>(k)]));
            if (d < 1e-8) dup = true;
        }
        if (!dup)
            out.push_back(TriangleSphere{SpherePoint::normalized(tri[0]),
                                         SpherePoint::normalized(tri[1]),
                                         SpherePoint::normalized(tri[2])});
    }
    if (out.empty())
        throw NoSolution("pappus: no inscribed triangle through the three points");
    return out;
}

}  // namespace sphaerica
