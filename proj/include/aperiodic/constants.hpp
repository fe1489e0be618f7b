#pragma once

#include <numbers>

namespace aperiodic {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Golden ratio and its algebraic conjugate. The conjugate is written as
// 1 - phi so that -conjugate and phi - 1 are the same double.
inline constexpr double kGolden = std::numbers::phi;
inline constexpr double kGoldenConjugate = 1.0 - std::numbers::phi;

inline constexpr double kSqrt5 = 2.2360679774997896964;

// Shift of the positive branch of the shifted-halves set: 1 / (2 sqrt 2).
inline constexpr double kHalfShift = 0.35355339059327376220;

}  // namespace aperiodic
