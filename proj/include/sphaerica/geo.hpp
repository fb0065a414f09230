#pragma once

#include <cmath>
#include <utility>

#include "sphaerica/angle.hpp"
#include "sphaerica/core.hpp"
#include "sphaerica/errors.hpp"

namespace sphaerica {

/// Geographic position in radians: latitude in [-pi/2, pi/2], longitude
/// in (-pi, pi].
struct GeoCoordinate {
    double latitude = 0.0;
    double longitude = 0.0;

    GeoCoordinate(double lat, double lon) : latitude(lat), longitude(lon) {
        if (!std::isfinite(lat) || !std::isfinite(lon))
            throw InvalidInput("GeoCoordinate: values must be finite");
        if (lat < -kPi / 2.0 || lat > kPi / 2.0)
            throw InvalidInput("GeoCoordinate: latitude outside [-pi/2, pi/2]");
        if (lon <= -kPi || lon > kPi)
            throw InvalidInput("GeoCoordinate: longitude outside (-pi, pi]");
    }

    SpherePoint to_sphere_point() const {
        return SpherePoint(std::cos(latitude) * std::cos(longitude),
                           std::cos(latitude) * std::sin(longitude),
                           std::sin(latitude));
    }
};

struct GeodesicDistance {
    Angle central_angle;
    double length_km = 0.0;
};

/// Great-circle distance on the pole triangle (sides = colatitudes,
/// included angle = longitude difference):
///   cos d = cos c1 cos c2 + sin c1 sin c2 cos(dlon).
/// Below a central angle of 1e-6 the cosine rule loses precision and the
/// chord form 2 asin(|p-q|/2) is used instead.
inline GeodesicDistance geodesic_distance(const GeoCoordinate& p, const GeoCoordinate& q,
                                          double radius_km) {
    if (!(radius_km > 0.0) || !std::isfinite(radius_km))
        throw InvalidInput("geodesic_distance: radius must be positive");
    double c1 = kPi / 2.0 - p.latitude;
    double c2 = kPi / 2.0 - q.latitude;
    double dlon = q.longitude - p.longitude;
    double d = std::acos(clamp_unit(std::cos(c1) * std::cos(c2) +
                                    std::sin(c1) * std::sin(c2) * std::cos(dlon)));
    if (d < 1e-6) {
        Vec3 u = p.to_sphere_point().vec();
        Vec3 v = q.to_sphere_point().vec();
        d = 2.0 * std::asin(clamp_unit(0.5 * norm(u - v)));
    }
    return {Angle(d), radius_km * d};
}

/// Azimuth of the great-circle departure at p toward q, clockwise from
/// north in [0, 2*pi).  This is the pole-triangle angle at p.
inline Angle initial_bearing(const GeoCoordinate& p, const GeoCoordinate& q,
                             const Tolerances& tol = {}) {
    if (kPi / 2.0 - std::fabs(p.latitude) < tol.abs_eps)
        throw DegenerateInput("initial_bearing: start point is a pole");
    // chord-based coincidence test: arccos is blind below ~1e-8
    Vec3 u = p.to_sphere_point().vec();
    Vec3 v = q.to_sphere_point().vec();
    if (norm(u - v) < tol.abs_eps || norm(u + v) < tol.abs_eps)
        throw DegenerateInput("initial_bearing: points coincident or antipodal");
    double dlon = q.longitude - p.longitude;
    double y = std::sin(dlon) * std::cos(q.latitude);
    double x = std::cos(p.latitude) * std::sin(q.latitude) -
               std::sin(p.latitude) * std::cos(q.latitude) * std::cos(dlon);
    double bearing = std::atan2(y, x);
    if (bearing < 0.0) bearing += kTwoPi;
    return Angle(bearing);
}

}  // namespace sphaerica
