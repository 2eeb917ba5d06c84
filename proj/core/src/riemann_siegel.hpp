#pragma once

// Riemann-Siegel kernel shared by the public evaluators and the zero finder.

namespace closegap::detail {

/// Riemann-Siegel Z(t) for 200 <= t <= kMaxHeight; no argument checks.
double rs_hardy_z(double t);

/// Euler-Maclaurin Z(t) for 5 <= t < 1e4; no argument checks.
double em_hardy_z(double t);

/// Dispatches between the two by height.
double hardy_z_unchecked(double t);

inline constexpr double kRiemannSiegelFloor = 200.0;

}  // namespace closegap::detail
