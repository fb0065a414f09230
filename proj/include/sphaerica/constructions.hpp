#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <string>

#include "sphaerica/angle.hpp"
#include "sphaerica/core.hpp"
#include "sphaerica/errors.hpp"
#include "sphaerica/hyperboloid.hpp"
#include "sphaerica/vec.hpp"

namespace sphaerica {

enum class Geometry { euclidean, spherical, hyperbolic };

inline const char* to_string(Geometry g) {
    switch (g) {
        case Geometry::euclidean: return "euclidean";
        case Geometry::spherical: return "spherical";
        case Geometry::hyperbolic: return "hyperbolic";
    }
    return "?";
}

/// The six cevian segment lengths about the common point O.
struct CevianLengths {
    double AO = 0.0, Oa = 0.0, BO = 0.0, Ob = 0.0, CO = 0.0, Oc = 0.0;

    std::array<double, 6> values() const { return {AO, Oa, BO, Ob, CO, Oc}; }

    void validate(Geometry geometry) const {
        for (double v : values())
            if (!(v > 0.0) || !std::isfinite(v))
                throw InvalidInput("CevianLengths: lengths must be positive");
        if (geometry == Geometry::spherical)
            for (double v : values())
                if (v >= kPi / 2.0)
                    throw QuarterSphereViolation(
                        "spherical cevian lengths must stay below pi/2");
    }
};

namespace cevian_detail {

// Points are Vec3 in the geometry's model: (x, y, 0) in the plane, unit
// vectors on the sphere, upper-sheet hyperboloid points for hyperbolic.

inline Vec3 ray_point(Geometry g, double theta, double s) {
    switch (g) {
        case Geometry::euclidean:
            return {s * std::cos(theta), s * std::sin(theta), 0.0};
        case Geometry::spherical:
            return {std::sin(s) * std::cos(theta), std::sin(s) * std::sin(theta),
                    std::cos(s)};
        case Geometry::hyperbolic:
            return hyperboloid_polar(s, theta);
    }
    return {};
}

inline double dist(Geometry g, Vec3 p, Vec3 q) {
    switch (g) {
        case Geometry::euclidean: return norm(p - q);
        case Geometry::spherical: return std::acos(clamp_unit(dot(p, q)));
        case Geometry::hyperbolic: return hyperbolic_distance(p, q);
    }
    return 0.0;
}

// Signed metric distance from x to the geodesic through p and q; returns
// a large sentinel when p and q fail to span one.
inline double signed_line_offset(Geometry g, Vec3 p, Vec3 q, Vec3 x) {
    switch (g) {
        case Geometry::euclidean: {
            Vec2 pp{p.x, p.y}, qq{q.x, q.y}, xx{x.x, x.y};
            double len = norm(qq - pp);
            if (len < 1e-13) return 1e6;
            return cross(qq - pp, xx - pp) / len;
        }
        case Geometry::spherical: {
            Vec3 n = cross(p, q);
            double len = norm(n);
            if (len < 1e-13) return 1e6;
            return std::asin(clamp_unit(dot(x, n) / len));
        }
        case Geometry::hyperbolic: {
            Vec3 n = minkowski_cross(p, q);
            double nn = minkowski_dot(n, n);
            if (!(nn > 1e-26)) return 1e6;
            return std::asinh(minkowski_dot(x, n) / std::sqrt(nn));
        }
    }
    return 1e6;
}

inline double line_distance(Geometry g, Vec3 p, Vec3 q, Vec3 x) {
    return std::fabs(signed_line_offset(g, p, q, x));
}

inline bool on_model(Geometry g, Vec3 p, double tol) {
    switch (g) {
        case Geometry::euclidean: return std::fabs(p.z) <= tol;
        case Geometry::spherical: return std::fabs(dot(p, p) - 1.0) <= tol;
        case Geometry::hyperbolic: return on_hyperboloid(p, tol);
    }
    return false;
}

inline double ratio_map(Geometry g, double num, double den) {
    switch (g) {
        case Geometry::euclidean: return num / den;
        case Geometry::spherical: return std::tan(num) / std::tan(den);
        case Geometry::hyperbolic: return std::tanh(num) / std::tanh(den);
    }
    return 0.0;
}

}  // namespace cevian_detail

/// Three concurrent cevians in one of the three geometries: vertices A, B,
/// C, feet a, b, c on the opposite sides, common point O, and the six
/// segment lengths.  Spherical configs must fit in a quarter sphere about
/// O (every length below pi/2).
struct CevianConfig {
    Geometry geometry = Geometry::euclidean;
    Vec3 A, B, C;  // vertices
    Vec3 a, b, c;  // feet: a on BC, b on AC, c on AB
    Vec3 O;
    CevianLengths lengths;

    void validate(const Tolerances& tol = {}) const {
        using namespace cevian_detail;
        lengths.validate(geometry);
        for (Vec3 p : {A, B, C, a, b, c, O})
            if (!on_model(geometry, p, 1e-9))
                throw InvalidConfig("CevianConfig: point off the geometry's model");

        auto check_len = [&](double stored, Vec3 p, Vec3 q, const char* name) {
            if (std::fabs(stored - dist(geometry, p, q)) > tol.residual_eps)
                throw InvalidConfig(std::string("CevianConfig: stored length ") + name +
                                    " disagrees with the points");
        };
        check_len(lengths.AO, A, O, "AO"); check_len(lengths.Oa, O, a, "Oa");
        check_len(lengths.BO, B, O, "BO"); check_len(lengths.Ob, O, b, "Ob");
        check_len(lengths.CO, C, O, "CO"); check_len(lengths.Oc, O, c, "Oc");

        auto check_on = [&](Vec3 p, Vec3 q, Vec3 x, const char* what) {
            if (line_distance(geometry, p, q, x) > tol.residual_eps)
                throw InvalidConfig(std::string("CevianConfig: ") + what);
        };
        check_on(A, O, a, "A, O, a are not collinear");
        check_on(B, O, b, "B, O, b are not collinear");
        check_on(C, O, c, "C, O, c are not collinear");
        check_on(B, C, a, "foot a is off side BC");
        check_on(A, C, b, "foot b is off side AC");
        check_on(A, B, c, "foot c is off side AB");
    }
};

/// LHS - RHS of the cevian identity r1 r2 r3 = r1 + r2 + r3 + 2 evaluated
/// on six lengths, with r_i = f(VO)/f(Ov) and f = id / tan / tanh by
/// geometry.
inline double cevian_identity_gap(const CevianLengths& lengths, Geometry geometry) {
    lengths.validate(geometry);
    using cevian_detail::ratio_map;
    double r1 = ratio_map(geometry, lengths.AO, lengths.Oa);
    double r2 = ratio_map(geometry, lengths.BO, lengths.Ob);
    double r3 = ratio_map(geometry, lengths.CO, lengths.Oc);
    return r1 * r2 * r3 - (r1 + r2 + r3 + 2.0);
}

/// Identity gap of a full configuration.  Euclidean ratios are signed
/// (negative when O lies outside the segment from vertex to foot), so the
/// identity also holds for exterior O.
inline double cevian_identity_gap(const CevianConfig& cfg, const Tolerances& tol = {}) {
    cfg.validate(tol);
    if (cfg.geometry != Geometry::euclidean)
        return cevian_identity_gap(cfg.lengths, cfg.geometry);

    auto signed_ratio = [](Vec3 V, Vec3 O, Vec3 foot) {
        Vec3 d = foot - V;
        double along = dot(d, d);
        double num = dot(O - V, d);
        double den = dot(foot - O, d);
        if (std::fabs(den) < 1e-300 * along)
            throw InvalidConfig("cevian_identity_gap: O coincides with a foot");
        return num / den;
    };
    double r1 = signed_ratio(cfg.A, cfg.O, cfg.a);
    double r2 = signed_ratio(cfg.B, cfg.O, cfg.b);
    double r3 = signed_ratio(cfg.C, cfg.O, cfg.c);
    return r1 * r2 * r3 - (r1 + r2 + r3 + 2.0);
}

/// Forward builder: given a triangle and an interior point O, drop the
/// three cevians and measure the six lengths.
inline CevianConfig cevian_config_from_triangle(Geometry geometry, Vec3 A, Vec3 B, Vec3 C,
                                                Vec3 O, const Tolerances& tol = {}) {
    using namespace cevian_detail;

    auto meet = [&](Vec3 p1, Vec3 q1, Vec3 p2, Vec3 q2) -> Vec3 {
        switch (geometry) {
            case Geometry::euclidean: {
                Vec2 u{q1.x - p1.x, q1.y - p1.y};
                Vec2 v{q2.x - p2.x, q2.y - p2.y};
                double det = cross(u, v);
                if (std::fabs(det) < 1e-13)
                    throw DegenerateInput("cevian foot: lines are parallel");
                Vec2 w{p2.x - p1.x, p2.y - p1.y};
                double t = cross(w, v) / det;
                return {p1.x + t * u.x, p1.y + t * u.y, 0.0};
            }
            case Geometry::spherical: {
                Vec3 v = cross(cross(p1, q1), cross(p2, q2));
                double n = norm(v);
                if (n < 1e-13)
                    throw DegenerateInput("cevian foot: great circles coincide");
                Vec3 x = (1.0 / n) * v;
                // Pick the intersection lying between p2 and q2.
                double base = dist(geometry, p2, q2);
                double d_plus = dist(geometry, p2, x) + dist(geometry, x, q2);
                double d_minus = dist(geometry, p2, -x) + dist(geometry, -x, q2);
                return std::fabs(d_plus - base) <= std::fabs(d_minus - base) ? x : -x;
            }
            case Geometry::hyperbolic:
                return geodesic_intersection(p1, q1, p2, q2);
        }
        return {};
    };

    CevianConfig cfg;
    cfg.geometry = geometry;
    cfg.A = A; cfg.B = B; cfg.C = C; cfg.O = O;
    cfg.a = meet(A, O, B, C);
    cfg.b = meet(B, O, A, C);
    cfg.c = meet(C, O, A, B);
    cfg.lengths = CevianLengths{dist(geometry, A, O), dist(geometry, O, cfg.a),
                                dist(geometry, B, O), dist(geometry, O, cfg.b),
                                dist(geometry, C, O), dist(geometry, O, cfg.c)};
    cfg.validate(tol);
    return cfg;
}

/// Converse construction: realize six lengths satisfying the identity as a
/// concurrent cevian configuration.  O sits at the model's base point, the
/// cevian through A is one geodesic with a on the opposite ray, and the
/// two free inter-ray angles are solved so that each foot lands on its
/// side.  Damped least squares with multistart on a 16x16 angle grid.
inline CevianConfig construct_triangle_from_cevians(const CevianLengths& lengths,
                                                    Geometry geometry,
                                                    const Tolerances& tol = {}) {
    using namespace cevian_detail;
    lengths.validate(geometry);
    if (std::fabs(cevian_identity_gap(lengths, geometry)) > 1e-9)
        throw IdentityViolated(
            "construct_triangle_from_cevians: lengths violate the cevian identity");

    auto residuals = [&](double t2, double t3, std::array<double, 3>& F) {
        Vec3 A = ray_point(geometry, 0.0, lengths.AO);
        Vec3 a = ray_point(geometry, kPi, lengths.Oa);
        Vec3 B = ray_point(geometry, t2, lengths.BO);
        Vec3 b = ray_point(geometry, t2 + kPi, lengths.Ob);
        Vec3 C = ray_point(geometry, t3, lengths.CO);
        Vec3 c = ray_point(geometry, t3 + kPi, lengths.Oc);
        F[0] = signed_line_offset(geometry, B, C, a);
        F[1] = signed_line_offset(geometry, A, C, b);
        F[2] = signed_line_offset(geometry, A, B, c);
    };

    auto try_from = [&](double t2, double t3) -> std::optional<std::array<double, 2>> {
        std::array<double, 3> F;
        double lambda = 1e-3;
        residuals(t2, t3, F);
        double cost = F[0] * F[0] + F[1] * F[1] + F[2] * F[2];
        for (int iter = 0; iter < 120; ++iter) {
            double fmax = std::max({std::fabs(F[0]), std::fabs(F[1]), std::fabs(F[2])});
            if (fmax < 1e-12) return std::array<double, 2>{t2, t3};
            // numeric Jacobian, central differences
            const double h = 1e-7;
            std::array<double, 3> fp, fm;
            double J[3][2];
            residuals(t2 + h, t3, fp); residuals(t2 - h, t3, fm);
            for (int k = 0; k < 3; ++k) J[k][0] = (fp[k] - fm[k]) / (2 * h);
            residuals(t2, t3 + h, fp); residuals(t2, t3 - h, fm);
            for (int k = 0; k < 3; ++k) J[k][1] = (fp[k] - fm[k]) / (2 * h);

            double a11 = 0, a12 = 0, a22 = 0, g1 = 0, g2 = 0;
            for (int k = 0; k < 3; ++k) {
                a11 += J[k][0] * J[k][0];
                a12 += J[k][0] * J[k][1];
                a22 += J[k][1] * J[k][1];
                g1 += J[k][0] * F[k];
                g2 += J[k][1] * F[k];
            }
            bool stepped = false;
            for (int dampings = 0; dampings < 12; ++dampings) {
                double d11 = a11 + lambda, d22 = a22 + lambda;
                double det = d11 * d22 - a12 * a12;
                if (std::fabs(det) > 1e-300) {
                    double s2 = (-g1 * d22 + g2 * a12) / det;
                    double s3 = (-g2 * d11 + g1 * a12) / det;
                    std::array<double, 3> Fn;
                    residuals(t2 + s2, t3 + s3, Fn);
                    double cn = Fn[0] * Fn[0] + Fn[1] * Fn[1] + Fn[2] * Fn[2];
                    if (cn < cost) {
                        t2 += s2; t3 += s3; F = Fn; cost = cn;
                        lambda = std::max(1e-12, lambda * 0.3);
                        stepped = true;
                        break;
                    }
                }
                lambda *= 10.0;
            }
            if (!stepped) return std::nullopt;
        }
        return std::nullopt;
    };

    const int grid = 16;
    for (int i = 1; i < grid; ++i) {
        for (int j = 1; j < grid; ++j) {
            if (i == j) continue;
            double t2 = kTwoPi * i / grid;
            double t3 = kTwoPi * j / grid;
            auto hit = try_from(t2, t3);
            if (!hit) continue;

            double s2 = (*hit)[0], s3 = (*hit)[1];
            CevianConfig cfg;
            cfg.geometry = geometry;
            cfg.lengths = lengths;
            cfg.A = ray_point(geometry, 0.0, lengths.AO);
            cfg.a = ray_point(geometry, kPi, lengths.Oa);
            cfg.B = ray_point(geometry, s2, lengths.BO);
            cfg.b = ray_point(geometry, s2 + kPi, lengths.Ob);
            cfg.C = ray_point(geometry, s3, lengths.CO);
            cfg.c = ray_point(geometry, s3 + kPi, lengths.Oc);
            cfg.O = ray_point(geometry, 0.0, 0.0);

            // Feet must land on the sides, not merely on their geodesics.
            auto between = [&](Vec3 p, Vec3 q, Vec3 x) {
                return std::fabs(dist(geometry, p, x) + dist(geometry, x, q) -
                                 dist(geometry, p, q)) <= 1e-7;
            };
            if (!between(cfg.B, cfg.C, cfg.a) || !between(cfg.A, cfg.C, cfg.b) ||
                !between(cfg.A, cfg.B, cfg.c))
                continue;
            try {
                cfg.validate(tol);
            } catch (const Error&) {
                continue;
            }
            return cfg;
        }
    }
    throw NoRealization("construct_triangle_from_cevians: no angle pair realizes the lengths");
}

/// Euler's quadrilateral relation: (sum of squared sides) minus
/// (sum of squared diagonals + 4 * squared distance between the diagonal
/// midpoints).  Identically zero up to rounding.
inline double quadrilateral_identity_gap(Vec2 p1, Vec2 p2, Vec2 p3, Vec2 p4) {
    auto sq = [](Vec2 v) { return dot(v, v); };
    double sides = sq(p2 - p1) + sq(p3 - p2) + sq(p4 - p3) + sq(p1 - p4);
    double diags = sq(p3 - p1) + sq(p4 - p2);
    Vec2 m13 = 0.5 * (p1 + p3);
    Vec2 m24 = 0.5 * (p2 + p4);
    return sides - (diags + 4.0 * sq(m13 - m24));
}

}  // namespace sphaerica
