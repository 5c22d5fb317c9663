#pragma once

#include <cmath>

namespace risamb {

inline constexpr double pi = 3.14159265358979323846;

inline double deg_to_rad(double deg) { return deg * pi / 180.0; }
inline double rad_to_deg(double rad) { return rad * 180.0 / pi; }

// Wrap an angle to the branch (-180, 180].
inline double wrap_deg(double deg) {
    double w = std::fmod(deg, 360.0);
    if (w <= -180.0) {
        w += 360.0;
    } else if (w > 180.0) {
        w -= 360.0;
    }
    return w;
}

// Wrap an angle to [0, 360).
inline double wrap_deg_positive(double deg) {
    double w = std::fmod(deg, 360.0);
    if (w < 0.0) w += 360.0;
    return w;
}

// Shortest angular distance between two angles, in [0, 180].
inline double circular_distance_deg(double a_deg, double b_deg) {
    return std::abs(wrap_deg(a_deg - b_deg));
}

} // namespace risamb
