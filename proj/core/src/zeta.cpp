#include "closegap/zeta.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "closegap/bounds.hpp"
#include "closegap/errors.hpp"
#include "riemann_siegel.hpp"

namespace closegap {

namespace {

void check_height(double t, const char* who) {
    if (!(t >= kMinHeight) || !(t <= kMaxHeight))
        throw DomainError(std::string(who) + ": t = " + std::to_string(t) + " outside [10, 1.1e7]");
}

}  // namespace

long double riemann_siegel_theta_turns(long double t) {
    constexpr long double pi = std::numbers::pi_v<long double>;
    const long double L = std::log(t / (2 * pi));
    const long double r = 1 / t;
    const long double r2 = r * r;
    // 1/(48t) + 7/(5760t^3) + 31/(80640t^5) + 127/(430080t^7) + 511/(1216512t^9)
    const long double series =
        r * (1.0L / 48 + r2 * (7.0L / 5760 + r2 * (31.0L / 80640 + r2 * (127.0L / 430080 + r2 * (511.0L / 1216512)))));
    return t / (4 * pi) * (L - 1) - 1.0L / 16 + series / (2 * pi);
}

double riemann_siegel_theta(double t) {
    check_height(t, "riemann_siegel_theta");
    return static_cast<double>(2 * std::numbers::pi_v<long double> * riemann_siegel_theta_turns(t));
}

double riemann_siegel_theta_mod_2pi(double t) {
    check_height(t, "riemann_siegel_theta_mod_2pi");
    const long double turns = riemann_siegel_theta_turns(t);
    const long double frac = turns - std::floor(turns);
    return static_cast<double>(2 * std::numbers::pi_v<long double> * frac);
}

double hardy_z(double t) {
    check_height(t, "hardy_z");
    return detail::hardy_z_unchecked(t);
}

std::complex<double> zeta_critical_line(double t) {
    using cd = std::complex<double>;
    if (!(t > 0.0) || t > 1e4) throw DomainError("zeta_critical_line: t outside (0, 1e4]");
    static constexpr std::array<double, 14> b2k_over_fact{
        8.3333333333333333e-02,  -1.3888888888888889e-03, 3.3068783068783069e-05, -8.2671957671957672e-07,
        2.0876756987868099e-08,  -5.2841901386874932e-10, 1.3382536530684679e-11, -3.3896802963225827e-13,
        8.5860620562778452e-15,  -2.1748686985580619e-16, 5.5090028283602295e-18, -1.3954464685812523e-19,
        3.5347070396294675e-21,  -8.9535174270375469e-23};
    const cd s(0.5, t);
    const int N = std::max(20, static_cast<int>(std::ceil(t)));
    cd sum = 0.0;
    for (int n = 1; n < N; ++n) {
        const double ln = std::log(static_cast<double>(n));
        sum += std::polar(1.0 / std::sqrt(static_cast<double>(n)), -t * ln);
    }
    const double lnN = std::log(static_cast<double>(N));
    const cd n_minus_s = std::polar(1.0 / std::sqrt(static_cast<double>(N)), -t * lnN);
    sum += n_minus_s * static_cast<double>(N) / (s - 1.0) + 0.5 * n_minus_s;
    cd rising = s;                                       // s (s+1) ... (s+2k-2)
    double npow = 1.0 / static_cast<double>(N);          // N^{-(2k-1)}
    for (std::size_t k = 1; k <= b2k_over_fact.size(); ++k) {
        sum += b2k_over_fact[k - 1] * rising * n_minus_s * npow;
        rising *= (s + static_cast<double>(2 * k - 1)) * (s + static_cast<double>(2 * k));
        npow /= static_cast<double>(N) * N;
    }
    return sum;
}

GramPoint gram_point(std::int64_t n) {
    if (n < -1) throw DomainError("gram_point: index must be >= -1");
    constexpr long double pi = std::numbers::pi_v<long double>;
    long double g;
    if (n == -1) {
        g = 9.6669;
    } else if (n == 0) {
        g = 17.8456;
    } else {
        const double y = (static_cast<double>(n) + 0.125) / std::numbers::e;
        g = 2 * pi * (n + 0.125L) / lambert_w(y);
    }
    const long double target = n / 2.0L;
    for (int it = 0; it < 60; ++it) {
        const long double slope = std::log(g / (2 * pi)) / (4 * pi);  // d(theta/2pi)/dt
        const long double step = (riemann_siegel_theta_turns(g) - target) / slope;
        g -= step;
        if (std::fabs(step) <= 1e-16L * g) break;
    }
    return {n, static_cast<double>(g)};
}

std::int64_t gram_index_below(double t) {
    check_height(t, "gram_index_below");
    return static_cast<std::int64_t>(std::floor(2 * riemann_siegel_theta_turns(t)));
}

}  // namespace closegap
