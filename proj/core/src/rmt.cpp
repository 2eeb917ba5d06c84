#include "closegap/rmt.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>
#include <numbers>

#include "closegap/errors.hpp"

namespace closegap {

namespace {

constexpr double kPi = std::numbers::pi;

void check_order(int order) {
    if (order < 20 || order > 200) throw DomainError("Gaudin quadrature order must lie in [20, 200]");
}

void check_gaudin_x(double x) {
    if (!(x >= 0.0 && x <= kGaudinMaxX)) throw DomainError("Gaudin density is evaluated on [0, 6]");
}

const std::pair<std::vector<double>, std::vector<double>>& cached_nodes(int n) {
    static std::mutex mu;
    static std::map<int, std::pair<std::vector<double>, std::vector<double>>> cache;
    std::lock_guard lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, gauss_legendre(n)).first;
    return it->second;
}

// Leading terms of the density and its integral near 0, where the stencil
// would leave the domain
double small_x_pdf(double x) {
    const double x2 = x * x;
    return kPi * kPi / 3.0 * x2 - 2.0 * std::pow(kPi, 4) / 45.0 * x2 * x2;
}

double small_x_cdf(double x) {
    const double x3 = x * x * x;
    return kPi * kPi / 9.0 * x3 - 2.0 * std::pow(kPi, 4) / 225.0 * x3 * x * x;
}

double pdf_at_order(double x, int order) {
    const double h = kGaudinStep;
    if (x < 2.0 * h) return small_x_pdf(x);
    const double e = sine_kernel_determinant(x, order);
    const double e1p = sine_kernel_determinant(x + h, order), e1m = sine_kernel_determinant(x - h, order);
    const double e2p = sine_kernel_determinant(x + 2 * h, order), e2m = sine_kernel_determinant(x - 2 * h, order);
    return (-e2p + 16.0 * e1p - 30.0 * e + 16.0 * e1m - e2m) / (12.0 * h * h);
}

double cdf_at_order(double x, int order) {
    const double h = kGaudinStep;
    if (x < 2.0 * h) return small_x_cdf(x);
    const double e1p = sine_kernel_determinant(x + h, order), e1m = sine_kernel_determinant(x - h, order);
    const double e2p = sine_kernel_determinant(x + 2 * h, order), e2m = sine_kernel_determinant(x - 2 * h, order);
    return 1.0 + (-e2p + 8.0 * e1p - 8.0 * e1m + e2m) / (12.0 * h);
}

template <class F>
double stable(F&& f, double x, int order, const char* what) {
    const double a = f(x, order);
    const double b = f(x, order + 10);
    if (!(std::fabs(a - b) <= kGaudinStabilityTol)) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "%s(%.6g): orders %d and %d differ by %.3g", what, x, order, order + 10,
                      std::fabs(a - b));
        throw QuadratureUnstable(buf);
    }
    return a;
}

}  // namespace

double wigner_pdf(double x) {
    if (!(x >= 0.0)) throw DomainError("wigner_pdf: x must be nonnegative");
    return 32.0 / (kPi * kPi) * x * x * std::exp(-4.0 * x * x / kPi);
}

double wigner_cdf(double x) {
    if (!(x >= 0.0)) throw DomainError("wigner_cdf: x must be nonnegative");
    if (std::isinf(x)) return 1.0;
    return std::erf(2.0 * x / std::sqrt(kPi)) - 4.0 / kPi * x * std::exp(-4.0 * x * x / kPi);
}

std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n) {
    if (n < 1) throw DomainError("gauss_legendre: n must be positive");
    std::vector<double> x(n), w(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        long double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
        long double dp = 0;
        for (int it = 0; it < 100; ++it) {
            long double p0 = 1, p1 = z;
            for (int k = 2; k <= n; ++k) {
                const long double p2 = ((2 * k - 1) * z * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (z * p1 - p0) / (z * z - 1);
            const long double dz = p1 / dp;
            z -= dz;
            if (std::fabs(static_cast<double>(dz)) < 1e-19) break;
        }
        {
            long double p0 = 1, p1 = z;
            for (int k = 2; k <= n; ++k) {
                const long double p2 = ((2 * k - 1) * z * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (z * p1 - p0) / (z * z - 1);
        }
        const double wi = static_cast<double>(2.0L / ((1 - z * z) * dp * dp));
        x[i] = -static_cast<double>(z);
        x[n - 1 - i] = static_cast<double>(z);
        w[i] = w[n - 1 - i] = wi;
    }
    return {x, w};
}

double sine_kernel_determinant(double s, int order) {
    if (!(s >= 0.0)) throw DomainError("sine_kernel_determinant: s must be nonnegative");
    if (order < 1) throw DomainError("sine_kernel_determinant: order must be positive");
    if (s == 0.0) return 1.0;
    const auto& [nodes, weights] = cached_nodes(order);
    const int n = order;
    std::vector<double> u(n), sw(n);
    for (int i = 0; i < n; ++i) {
        u[i] = 0.5 * s * (nodes[i] + 1.0);
        sw[i] = std::sqrt(0.5 * s * weights[i]);
    }
    Eigen::MatrixXd m(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double d = kPi * (u[i] - u[j]);
            const double k = i == j ? 1.0 : std::sin(d) / d;
            m(i, j) = (i == j ? 1.0 : 0.0) - sw[i] * k * sw[j];
        }
    }
    return m.partialPivLu().determinant();
}

double gaudin_pdf(double x, int order) {
    check_gaudin_x(x);
    check_order(order);
    return stable(pdf_at_order, x, order, "gaudin_pdf");
}

double gaudin_cdf(double x, int order) {
    check_gaudin_x(x);
    check_order(order);
    return stable(cdf_at_order, x, order, "gaudin_cdf");
}

Figure1Grid figure1_grid(double x_max, int points) {
    if (!(x_max > 0.0 && x_max <= 3.0)) throw DomainError("figure1_grid: x_max must lie in (0, 3]");
    if (points < 10) throw DomainError("figure1_grid: need at least 10 points");
    Figure1Grid g;
    g.wigner.kind = DensityKind::wigner;
    g.gaudin.kind = DensityKind::gaudin;
    for (int i = 0; i < points; ++i) {
        const double x = x_max * i / (points - 1);
        g.wigner.x.push_back(x);
        g.gaudin.x.push_back(x);
        g.wigner.p.push_back(wigner_pdf(x));
        g.gaudin.p.push_back(gaudin_pdf(x));
    }
    for (int i = 0; i <= 100; ++i) {
        const double x = 0.005 * i;
        g.max_discrepancy_half = std::max(g.max_discrepancy_half, std::fabs(wigner_pdf(x) - gaudin_pdf(x)));
    }
    return g;
}

std::string figure1_csv(const Figure1Grid& grid) {
    std::string out = "x,wigner,gaudin\n";
    char buf[96];
    for (std::size_t i = 0; i < grid.wigner.x.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.6f,%.10f,%.10f\n", grid.wigner.x[i], grid.wigner.p[i], grid.gaudin.p[i]);
        out += buf;
    }
    return out;
}

}  // namespace closegap
