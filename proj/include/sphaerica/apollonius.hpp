#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <vector>

#include "sphaerica/core.hpp"
#include "sphaerica/errors.hpp"
#include "sphaerica/shapes.hpp"
#include "sphaerica/vec.hpp"

namespace sphaerica {

/// +1 external / -1 internal tangency, one entry per given circle/sphere.
template <size_t N>
using TangencySigns = std::array<int, N>;

namespace apollonius_detail {

template <size_t N>
inline void validate_signs(const TangencySigns<N>& s) {
    for (int v : s)
        if (v != 1 && v != -1)
            throw InvalidInput("TangencySigns: entries must be +1 or -1");
}

// Stable quadratic solver; returns real roots (0, 1 or 2 of them).
inline std::vector<double> solve_quadratic(double a, double b, double c, double scale) {
    std::vector<double> roots;
    if (std::fabs(a) < 1e-14 * scale) {
        if (std::fabs(b) < 1e-14 * scale) return roots;
        roots.push_back(-c / b);
        return roots;
    }
    double disc = b * b - 4.0 * a * c;
    if (disc < 0.0) return roots;
    double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
    roots.push_back(q / a);
    if (std::fabs(q) > 1e-300) roots.push_back(c / q);
    else roots.push_back(q / a);
    return roots;
}

}  // namespace apollonius_detail

inline double tangency_residual(const Circle2D& cand, const std::array<Circle2D, 3>& given,
                                const TangencySigns<3>& signs) {
    apollonius_detail::validate_signs(signs);
    double worst = 0.0;
    for (size_t i = 0; i < 3; ++i) {
        double d = std::hypot(cand.cx - given[i].cx, cand.cy - given[i].cy);
        worst = std::max(worst, std::fabs(d - std::fabs(cand.r + signs[i] * given[i].r)));
    }
    return worst;
}

inline double tangency_residual(const Sphere3D& cand, const std::array<Sphere3D, 4>& given,
                                const TangencySigns<4>& signs) {
    apollonius_detail::validate_signs(signs);
    double worst = 0.0;
    for (size_t i = 0; i < 4; ++i) {
        double d = norm(Vec3{cand.cx - given[i].cx, cand.cy - given[i].cy,
                             cand.cz - given[i].cz});
        worst = std::max(worst, std::fabs(d - std::fabs(cand.r + signs[i] * given[i].r)));
    }
    return worst;
}

struct Apollonius2Solution {
    Circle2D circle;
    TangencySigns<3> signs;
    double residual = 0.0;
};

struct Apollonius3Solution {
    Sphere3D sphere;
    TangencySigns<4> signs;
    double residual = 0.0;
};

/// Circles tangent to three given circles.  Subtracting pairs of tangency
/// equations
///   (x - x_i)^2 + (y - y_i)^2 = (r + s_i r_i)^2
/// leaves two linear equations; the center is expressed affinely in r and
/// one quadratic in r remains.  Pass std::nullopt for signs to enumerate
/// all eight tangency cases; duplicates across cases are merged and output
/// is sorted by radius, then center.
inline std::vector<Apollonius2Solution> apollonius_circles(
        const Circle2D& c1, const Circle2D& c2, const Circle2D& c3,
        std::optional<TangencySigns<3>> signs = std::nullopt,
        const Tolerances& tol = {}) {
    using namespace apollonius_detail;
    std::array<Circle2D, 3> given = {c1, c2, c3};
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = i + 1; j < 3; ++j)
            if (std::fabs(given[i].cx - given[j].cx) < tol.abs_eps &&
                std::fabs(given[i].cy - given[j].cy) < tol.abs_eps &&
                std::fabs(given[i].r - given[j].r) < tol.abs_eps)
                throw InvalidInput("apollonius_circles: given circles must be distinct");

    double scale = 1.0;
    for (const Circle2D& c : given)
        scale = std::max({scale, std::fabs(c.cx), std::fabs(c.cy), c.r});

    // rows: subtract equation 1 from equations 2 and 3
    double m11 = 2.0 * (c2.cx - c1.cx), m12 = 2.0 * (c2.cy - c1.cy);
    double m21 = 2.0 * (c3.cx - c1.cx), m22 = 2.0 * (c3.cy - c1.cy);
    double det = m11 * m22 - m12 * m21;
    if (std::fabs(det) < 1e-12 * scale * scale)
        throw DegenerateConfiguration(
            "apollonius_circles: centers are collinear or coincident");

    auto pow2 = [](double v) { return v * v; };
    double k2 = (pow2(c2.cx) + pow2(c2.cy) - pow2(c2.r)) -
                (pow2(c1.cx) + pow2(c1.cy) - pow2(c1.r));
    double k3 = (pow2(c3.cx) + pow2(c3.cy) - pow2(c3.r)) -
                (pow2(c1.cx) + pow2(c1.cy) - pow2(c1.r));

    std::vector<Apollonius2Solution> out;
    std::vector<TangencySigns<3>> cases;
    if (signs) {
        validate_signs(*signs);
        cases.push_back(*signs);
    } else {
        for (int m = 0; m < 8; ++m)
            cases.push_back({m & 1 ? -1 : 1, m & 2 ? -1 : 1, m & 4 ? -1 : 1});
    }

    for (const auto& sc : cases) {
        // M [x y]^T = (k - r*w): center = p + r*q
        double w2 = 2.0 * (sc[1] * c2.r - sc[0] * c1.r);
        double w3 = 2.0 * (sc[2] * c3.r - sc[0] * c1.r);
        double px = (k2 * m22 - k3 * m12) / det;
        double py = (k3 * m11 - k2 * m21) / det;
        double qx = (-w2 * m22 + w3 * m12) / det;
        double qy = (-w3 * m11 + w2 * m21) / det;

        // substitute into the first tangency equation
        double ex = px - c1.cx, ey = py - c1.cy;
        double qa = qx * qx + qy * qy - 1.0;
        double qb = 2.0 * (ex * qx + ey * qy - sc[0] * c1.r);
        double qc = ex * ex + ey * ey - c1.r * c1.r;
        for (double r : solve_quadratic(qa, qb, qc, 1.0)) {
            if (r < -1e-10 * scale || !std::isfinite(r)) continue;
            r = std::max(0.0, r);
            Circle2D cand(px + r * qx, py + r * qy, r);
            double res = tangency_residual(cand, given, sc);
            if (res > std::max(1e-9, 1e-12 * scale)) continue;
            // a circle coinciding with a given one is not tangent to it
            bool coincident = false;
            for (const Circle2D& g : given)
                if (std::fabs(cand.cx - g.cx) < 1e-9 * scale &&
                    std::fabs(cand.cy - g.cy) < 1e-9 * scale &&
                    std::fabs(cand.r - g.r) < 1e-9 * scale)
                    coincident = true;
            if (coincident) continue;
            bool dup = false;
            for (const auto& s : out)
                if (std::fabs(s.circle.cx - cand.cx) < 1e-8 * scale &&
                    std::fabs(s.circle.cy - cand.cy) < 1e-8 * scale &&
                    std::fabs(s.circle.r - cand.r) < 1e-8 * scale)
                    dup = true;
            if (!dup) out.push_back({cand, sc, res});
        }
    }

    if (out.empty())
        throw NoSolution("apollonius_circles: no tangent circle for the requested signs");
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.circle.r != b.circle.r) return a.circle.r < b.circle.r;
        if (a.circle.cx != b.circle.cx) return a.circle.cx < b.circle.cx;
        return a.circle.cy < b.circle.cy;
    });
    return out;
}

/// Spheres tangent to four given spheres; same elimination with three
/// linear equations.  Coplanar centers are reported as degenerate.
inline std::vector<Apollonius3Solution> tangent_spheres(
        const Sphere3D& s1, const Sphere3D& s2, const Sphere3D& s3, const Sphere3D& s4,
        std::optional<TangencySigns<4>> signs = std::nullopt,
        const Tolerances& tol = {}) {
    using namespace apollonius_detail;
    std::array<Sphere3D, 4> given = {s1, s2, s3, s4};
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = i + 1; j < 4; ++j)
            if (std::fabs(given[i].cx - given[j].cx) < tol.abs_eps &&
                std::fabs(given[i].cy - given[j].cy) < tol.abs_eps &&
                std::fabs(given[i].cz - given[j].cz) < tol.abs_eps &&
                std::fabs(given[i].r - given[j].r) < tol.abs_eps)
                throw InvalidInput("tangent_spheres: given spheres must be distinct");

    double scale = 1.0;
    for (const Sphere3D& s : given)
        scale = std::max({scale, std::fabs(s.cx), std::fabs(s.cy), std::fabs(s.cz), s.r});

    Vec3 d2{s2.cx - s1.cx, s2.cy - s1.cy, s2.cz - s1.cz};
    Vec3 d3{s3.cx - s1.cx, s3.cy - s1.cy, s3.cz - s1.cz};
    Vec3 d4{s4.cx - s1.cx, s4.cy - s1.cy, s4.cz - s1.cz};
    double det = 8.0 * triple(d2, d3, d4);  // det of the doubled rows
    if (std::fabs(det) < 1e-12 * scale * scale * scale)
        throw DegenerateConfiguration("tangent_spheres: centers are coplanar");

    auto sq = [](const Sphere3D& s) {
        return s.cx * s.cx + s.cy * s.cy + s.cz * s.cz - s.r * s.r;
    };
    std::array<double, 3> k = {sq(s2) - sq(s1), sq(s3) - sq(s1), sq(s4) - sq(s1)};
    std::array<Vec3, 3> rows = {2.0 * d2, 2.0 * d3, 2.0 * d4};

    // Cramer solve of rows * v = rhs (column replacement).
    auto det3 = [](Vec3 a, Vec3 b, Vec3 c) {
        return a.x * (b.y * c.z - b.z * c.y) - a.y * (b.x * c.z - b.z * c.x) +
               a.z * (b.x * c.y - b.y * c.x);
    };
    auto solve3 = [&](std::array<double, 3> rhs) {
        Vec3 r0 = rows[0], r1 = rows[1], r2 = rows[2];
        double D = det3(r0, r1, r2);
        double dx = det3(Vec3{rhs[0], r0.y, r0.z}, Vec3{rhs[1], r1.y, r1.z},
                         Vec3{rhs[2], r2.y, r2.z});
        double dy = det3(Vec3{r0.x, rhs[0], r0.z}, Vec3{r1.x, rhs[1], r1.z},
                         Vec3{r2.x, rhs[2], r2.z});
        double dz = det3(Vec3{r0.x, r0.y, rhs[0]}, Vec3{r1.x, r1.y, rhs[1]},
                         Vec3{r2.x, r2.y, rhs[2]});
        return Vec3{dx / D, dy / D, dz / D};
    };

    std::vector<Apollonius3Solution> out;
    std::vector<TangencySigns<4>> cases;
    if (signs) {
        validate_signs(*signs);
        cases.push_back(*signs);
    } else {
        for (int m = 0; m < 16; ++m)
            cases.push_back({m & 1 ? -1 : 1, m & 2 ? -1 : 1, m & 4 ? -1 : 1, m & 8 ? -1 : 1});
    }

    for (const auto& sc : cases) {
        std::array<double, 3> w = {2.0 * (sc[1] * s2.r - sc[0] * s1.r),
                                   2.0 * (sc[2] * s3.r - sc[0] * s1.r),
                                   2.0 * (sc[3] * s4.r - sc[0] * s1.r)};
        Vec3 p = solve3(k);
        Vec3 q = solve3({-w[0], -w[1], -w[2]});

        Vec3 e = p - Vec3{s1.cx, s1.cy, s1.cz};
        double qa = dot(q, q) - 1.0;
        double qb = 2.0 * (dot(e, q) - sc[0] * s1.r);
        double qc = dot(e, e) - s1.r * s1.r;
        for (double r : solve_quadratic(qa, qb, qc, 1.0)) {
            if (r < -1e-10 * scale || !std::isfinite(r)) continue;
            r = std::max(0.0, r);
            Sphere3D cand(p.x + r * q.x, p.y + r * q.y, p.z + r * q.z, r);
            double res = tangency_residual(cand, given, sc);
            if (res > std::max(1e-9, 1e-12 * scale)) continue;
            bool coincident = false;
            for (const Sphere3D& g : given)
                if (std::fabs(cand.cx - g.cx) < 1e-9 * scale &&
                    std::fabs(cand.cy - g.cy) < 1e-9 * scale &&
                    std::fabs(cand.cz - g.cz) < 1e-9 * scale &&
                    std::fabs(cand.r - g.r) < 1e-9 * scale)
                    coincident = true;
            if (coincident) continue;
            bool dup = false;
            for (const auto& s : out)
                if (std::fabs(s.sphere.cx - cand.cx) < 1e-8 * scale &&
                    std::fabs(s.sphere.cy - cand.cy) < 1e-8 * scale &&
                    std::fabs(s.sphere.cz - cand.cz) < 1e-8 * scale &&
                    std::fabs(s.sphere.r - cand.r) < 1e-8 * scale)
                    dup = true;
            if (!dup) out.push_back({cand, sc, res});
        }
    }

    if (out.empty())
        throw NoSolution("tangent_spheres: no tangent sphere for the requested signs");
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.sphere.r != b.sphere.r) return a.sphere.r < b.sphere.r;
        if (a.sphere.cx != b.sphere.cx) return a.sphere.cx < b.sphere.cx;
        if (a.sphere.cy != b.sphere.cy) return a.sphere.cy < b.sphere.cy;
        return a.sphere.cz < b.sphere.cz;
    });
    return out;
}

}  // namespace sphaerica
