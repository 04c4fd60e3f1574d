#pragma once

namespace polymin {

// Golden ratio constants used for interval magnification and subdivision.
inline constexpr double kGold = 0.61803398875;
inline constexpr double kCGold = 0.38196601125;

// Threshold ratio below which a residual gap at the domain boundary is
// snapped onto the boundary instead of taking a separate step.
inline constexpr double kMinRatio = kCGold * kCGold; // = 0.145898...

inline constexpr double kEps2 = 1e-12;

} // namespace polymin
