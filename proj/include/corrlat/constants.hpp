#ifndef CORRLAT_CONSTANTS_HPP
#define CORRLAT_CONSTANTS_HPP

namespace corrlat {

// SI values (CODATA 2018).
inline constexpr double kEpsilon0 = 8.8541878128e-12; // F/m
inline constexpr double kHbar     = 1.054571817e-34;  // J s
inline constexpr double kPi       = 3.14159265358979323846;

inline constexpr const char* kCodeVersion = "corrlat 1.0.0";

} // namespace corrlat

#endif
