#pragma once

#include <numbers>

namespace rlv {

inline constexpr double kG0 = 9.80665;          // m/s^2
inline constexpr double kSeaLevelPressure = 101325.0;  // Pa
inline constexpr double kPi = std::numbers::pi;
inline constexpr double kBar = 1.0e5;            // Pa

struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    constexpr bool contains(double x) const { return x >= lo && x <= hi; }
    constexpr double width() const { return hi - lo; }
};

}  // namespace rlv
