#pragma once

#include <complex>
#include <cstdint>

namespace closegap {

/// Smallest height accepted by the public evaluators.
inline constexpr double kMinHeight = 10.0;
/// Largest height the precomputed Riemann-Siegel tables support.
inline constexpr double kMaxHeight = 1.1e7;

/// Riemann-Siegel phase theta(t) for t >= 10 from its asymptotic series,
/// carried through the t^-9 term so the truncation error stays below 1e-13.
double riemann_siegel_theta(double t);

/// theta(t) mod 2 pi in [0, 2 pi), reduced in extended precision before
/// rounding, so it stays accurate to ~1e-12 even where theta(t) ~ 1e8.
double riemann_siegel_theta_mod_2pi(double t);

/// theta(t) / (2 pi) in extended precision.
long double riemann_siegel_theta_turns(long double t);

/// Hardy's Z(t) = exp(i theta(t)) zeta(1/2 + i t), real for real t.
///
/// Heights below 200 use Euler-Maclaurin summation of zeta; above that the
/// Riemann-Siegel main sum with remainder terms C0..C3. Throws DomainError
/// for t < 10 or t > kMaxHeight.
double hardy_z(double t);

/// zeta(1/2 + i t) by Euler-Maclaurin summation; usable for 0 < t < ~1e4.
std::complex<double> zeta_critical_line(double t);

struct GramPoint {
    std::int64_t index;
    /// g_n with theta(g_n) = n pi
    double value;
};

/// The n-th Gram point, n >= -1 (g_{-1} ~ 9.667 lies below the evaluator
/// floor but is still returned).
GramPoint gram_point(std::int64_t n);

/// Largest n with g_n <= t.
std::int64_t gram_index_below(double t);

}  // namespace closegap
