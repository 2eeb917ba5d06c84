#pragma once

#include <string>
#include <utility>
#include <vector>

namespace closegap {

/// GUE Wigner surmise (32/pi^2) x^2 exp(-4x^2/pi), mean spacing 1.
/// Throws DomainError for x < 0.
double wigner_pdf(double x);

/// Closed-form integral of wigner_pdf over [0, x].
double wigner_cdf(double x);

/// Gauss-Legendre nodes and weights on [-1, 1].
std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n);

/// det(I - K_s) for the sine kernel sin(pi(u-v))/(pi(u-v)) on [0, s],
/// discretized with `order` Gauss-Legendre nodes. This is the probability
/// that an interval of length s holds no eigenvalue.
double sine_kernel_determinant(double s, int order = 40);

inline constexpr int kDefaultGaudinOrder = 40;
inline constexpr double kGaudinMaxX = 6.0;
inline constexpr double kGaudinStep = 1e-3;
inline constexpr double kGaudinStabilityTol = 1e-6;

/// Gaudin spacing density E''(x) by central differences of the determinant.
/// The result is compared with the one at order + 10; a disagreement above
/// 1e-6 throws QuadratureUnstable. Throws DomainError for x outside
/// [0, kGaudinMaxX] or order outside [20, 200].
double gaudin_pdf(double x, int order = kDefaultGaudinOrder);

/// Integral of the Gaudin density over [0, x], i.e. 1 + E'(x). Same checks
/// as gaudin_pdf.
double gaudin_cdf(double x, int order = kDefaultGaudinOrder);

enum class DensityKind { wigner, gaudin };

struct SpacingDensity {
    DensityKind kind = DensityKind::wigner;
    std::vector<double> x;
    std::vector<double> p;
};

struct Figure1Grid {
    SpacingDensity wigner;
    SpacingDensity gaudin;
    /// max |wigner - gaudin| over 101 equally spaced points of [0, 1/2].
    double max_discrepancy_half = 0.0;
};

inline constexpr int kDefaultGridPoints = 512;

/// `points` equally spaced abscissae on [0, x_max] for both densities.
/// Throws DomainError unless 0 < x_max <= 3 and points >= 10.
Figure1Grid figure1_grid(double x_max = 3.0, int points = kDefaultGridPoints);

/// CSV with header "x,wigner,gaudin".
std::string figure1_csv(const Figure1Grid& grid);

}  // namespace closegap
