#pragma once

#include <cmath>

#include "sphaerica/errors.hpp"

namespace sphaerica {

/// Circle in the plane; r = 0 denotes a point-circle.
struct Circle2D {
    double cx = 0.0;
    double cy = 0.0;
    double r = 0.0;

    Circle2D(double cx_, double cy_, double r_) : cx(cx_), cy(cy_), r(r_) {
        if (!std::isfinite(cx) || !std::isfinite(cy) || !std::isfinite(r) || r < 0.0)
            throw InvalidInput("Circle2D: radius must be finite and non-negative");
    }
};

struct Sphere3D {
    double cx = 0.0;
    double cy = 0.0;
    double cz = 0.0;
    double r = 0.0;

    Sphere3D(double cx_, double cy_, double cz_, double r_)
        : cx(cx_), cy(cy_), cz(cz_), r(r_) {
        if (!std::isfinite(cx) || !std::isfinite(cy) || !std::isfinite(cz) ||
            !std::isfinite(r) || r < 0.0)
            throw InvalidInput("Sphere3D: radius must be finite and non-negative");
    }
};

}  // namespace sphaerica
