#pragma once

#include <cmath>
#include <compare>
#include <numbers>

#include "sphaerica/errors.hpp"

namespace sphaerica {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// An angle in radians.  Construction rejects non-finite values; range
/// checks (e.g. the (0, pi) window for triangle elements) are applied by
/// the operations that need them, not here.
class Angle {
public:
    constexpr Angle() = default;

    explicit Angle(double radians) : rad_(radians) {
        if (!std::isfinite(radians))
            throw InvalidInput("Angle: value must be finite");
    }

    static Angle from_degrees(double deg) { return Angle(deg * kPi / 180.0); }

    double radians() const { return rad_; }
    double degrees() const { return rad_ * 180.0 / kPi; }

    /// True iff the value can serve as a triangle side or angle.
    bool is_triangle_element() const { return rad_ > 0.0 && rad_ < kPi; }

    friend Angle operator+(Angle p, Angle q) { return Angle(p.rad_ + q.rad_); }
    friend Angle operator-(Angle p, Angle q) { return Angle(p.rad_ - q.rad_); }
    friend Angle operator*(double s, Angle p) { return Angle(s * p.rad_); }
    friend auto operator<=>(Angle p, Angle q) = default;

private:
    double rad_ = 0.0;
};

inline double sin(Angle a) { return std::sin(a.radians()); }
inline double cos(Angle a) { return std::cos(a.radians()); }
inline double tan(Angle a) { return std::tan(a.radians()); }

/// Supplement pi - a; the workhorse of polar duality.
inline Angle supplement(Angle a) { return Angle(kPi - a.radians()); }

inline void require_triangle_element(Angle a, const char* name) {
    if (!a.is_triangle_element())
        throw InvalidInput(std::string(name) + " must lie in (0, pi)");
}

}  // namespace sphaerica
