#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "sphaerica/sphaerica.hpp"

// Independent oracles: everything here works from raw vector geometry and
// never calls the formula paths it is used to check.

namespace oracle {

using namespace sphaerica;

inline double shoelace(Vec2 a, Vec2 b, Vec2 c) {
    return 0.5 * std::fabs(cross(b - a, c - a));
}

/// Angle at vertex p between the great-circle arcs toward q and r,
/// measured in the tangent plane at p.
inline double vertex_angle(Vec3 p, Vec3 q, Vec3 r) {
    Vec3 u = q - dot(q, p) * p;
    Vec3 v = r - dot(r, p) * p;
    return std::acos(clamp_unit(dot(u, v) / (norm(u) * norm(v))));
}

/// Girard excess of the spherical triangle with the given vertices,
/// via tangent-plane vertex angles only.
inline double girard_from_vertices(Vec3 p, Vec3 q, Vec3 r) {
    return vertex_angle(p, q, r) + vertex_angle(q, r, p) + vertex_angle(r, p, q) - kPi;
}

/// Brute-force SSA oracle.  Given sides u (opposite the known angle U) and
/// v, construct the triangle concretely: the U-vertex at the north pole,
/// side v along one meridian, side w along the meridian at angle U.  Scan
/// w over (0, pi) for dist(B, C) = u and refine each bracket by bisection.
/// Returns the admissible third sides w.
inline std::vector<double> ssa_third_side_scan(double u, double v, double U,
                                               int samples = 1000000) {
    Vec3 C{std::sin(v), 0.0, std::cos(v)};
    auto gap = [&](double w) {
        Vec3 B{std::sin(w) * std::cos(U), std::sin(w) * std::sin(U), std::cos(w)};
        return dot(B, C) - std::cos(u);
    };
    std::vector<double> roots;
    double lo = 1e-9, hi = kPi - 1e-9;
    double step = (hi - lo) / samples;
    double prev = gap(lo);
    for (int i = 1; i <= samples; ++i) {
        double t = lo + i * step;
        double cur = gap(t);
        if ((prev > 0.0) != (cur > 0.0)) {
            double a = t - step, b = t, fa = prev;
            for (int it = 0; it < 80 && b - a > 1e-14; ++it) {
                double mid = 0.5 * (a + b);
                double fm = gap(mid);
                if ((fm > 0.0) == (fa > 0.0)) { a = mid; fa = fm; }
                else b = mid;
            }
            roots.push_back(0.5 * (a + b));
        }
        prev = cur;
    }
    return roots;
}

/// Great-circle destination point: start, initial bearing (clockwise from
/// north), central angle travelled.
inline GeoCoordinate destination(const GeoCoordinate& start, double bearing, double dist) {
    double lat = std::asin(clamp_unit(std::sin(start.latitude) * std::cos(dist) +
                                      std::cos(start.latitude) * std::sin(dist) *
                                          std::cos(bearing)));
    double lon = start.longitude +
                 std::atan2(std::sin(bearing) * std::sin(dist) * std::cos(start.latitude),
                            std::cos(dist) - std::sin(start.latitude) * std::sin(lat));
    lon = std::remainder(lon, kTwoPi);
    if (lon <= -kPi) lon += kTwoPi;
    return GeoCoordinate(lat, lon);
}

// ---- regular polyhedra, explicit coordinates ---------------------------

struct PolyhedronVertexCone {
    std::string name;
    Vec3 vertex;
    std::vector<Vec3> all_vertices;
};

inline std::vector<PolyhedronVertexCone> polyhedron_vertex_cones() {
    const double phi = 0.5 * (1.0 + std::sqrt(5.0));
    std::vector<PolyhedronVertexCone> out;

    out.push_back({"tetrahedron",
                   {1, 1, 1},
                   {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}}});

    std::vector<Vec3> cube;
    for (int sx : {-1, 1})
        for (int sy : {-1, 1})
            for (int sz : {-1, 1}) cube.push_back({double(sx), double(sy), double(sz)});
    out.push_back({"cube", {1, 1, 1}, cube});

    out.push_back({"octahedron",
                   {0, 0, 1},
                   {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}}});

    std::vector<Vec3> dodeca = cube;
    for (int s1 : {-1, 1})
        for (int s2 : {-1, 1}) {
            dodeca.push_back({0.0, s1 / phi, s2 * phi});
            dodeca.push_back({s1 / phi, s2 * phi, 0.0});
            dodeca.push_back({s1 * phi, 0.0, s2 / phi});
        }
    out.push_back({"dodecahedron", {1, 1, 1}, dodeca});

    std::vector<Vec3> icosa;
    for (int s1 : {-1, 1})
        for (int s2 : {-1, 1}) {
            icosa.push_back({0.0, double(s1), s2 * phi});
            icosa.push_back({double(s1), s2 * phi, 0.0});
            icosa.push_back({s1 * phi, 0.0, double(s2)});
        }
    out.push_back({"icosahedron", {0, 1, phi}, icosa});

    return out;
}

/// Solid angle at `vertex` of the polyhedron with the given vertex set:
/// find the nearest neighbours (one edge away), order their directions
/// around the cone axis, fan-triangulate the spherical polygon and sum the
/// Girard excesses computed from tangent-plane angles.
inline double vertex_cone_solid_angle(const PolyhedronVertexCone& cone) {
    std::vector<double> d2;
    for (const Vec3& w : cone.all_vertices) {
        Vec3 e = w - cone.vertex;
        double n = dot(e, e);
        if (n > 1e-12) d2.push_back(n);
    }
    double edge2 = *std::min_element(d2.begin(), d2.end());

    std::vector<Vec3> dirs;
    for (const Vec3& w : cone.all_vertices) {
        Vec3 e = w - cone.vertex;
        double n = dot(e, e);
        if (n > 1e-12 && n < edge2 * (1.0 + 1e-9))
            dirs.push_back((1.0 / std::sqrt(n)) * e);
    }

    Vec3 axis{0, 0, 0};
    for (const Vec3& u : dirs) axis = axis + u;
    axis = (1.0 / norm(axis)) * axis;
    Vec3 ref = std::fabs(axis.z) < 0.9 ? Vec3{0, 0, 1} : Vec3{1, 0, 0};
    Vec3 e1 = cross(axis, ref);
    e1 = (1.0 / norm(e1)) * e1;
    Vec3 e2 = cross(axis, e1);

    std::map<double, Vec3> ordered;
    for (const Vec3& u : dirs) ordered[std::atan2(dot(u, e2), dot(u, e1))] = u;
    std::vector<Vec3> ring;
    for (auto& [ang, u] : ordered) ring.push_back(u);

    double total = 0.0;
    for (size_t i = 1; i + 1 < ring.size(); ++i)
        total += girard_from_vertices(ring[0], ring[i], ring[i + 1]);
    return total;
}

/// Minimal XML well-formedness check: declaration, balanced tags, no
/// stray '<'.  Good enough to assert that emitted SVG parses.
inline bool xml_well_formed(const std::string& text) {
    size_t pos = 0;
    std::vector<std::string> stack;
    while (pos < text.size()) {
        size_t open = text.find('<', pos);
        if (open == std::string::npos) break;
        size_t close = text.find('>', open);
        if (close == std::string::npos) return false;
        std::string tag = text.substr(open + 1, close - open - 1);
        if (tag.empty()) return false;
        if (tag[0] == '?' || tag[0] == '!') {
            pos = close + 1;
            continue;
        }
        if (tag[0] == '/') {
            std::string name = tag.substr(1);
            if (stack.empty() || stack.back() != name) return false;
            stack.pop_back();
        } else if (tag.back() != '/') {
            std::string name = tag.substr(0, tag.find_first_of(" \t\n"));
            stack.push_back(name);
        }
        pos = close + 1;
    }
    return stack.empty();
}

}  // namespace oracle
