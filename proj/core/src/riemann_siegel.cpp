#include "riemann_siegel.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <numbers>

#ifdef __FMA__
#include <immintrin.h>
#endif

#include "closegap/zeta.hpp"

namespace closegap::detail {

namespace {

constexpr int kMaxTerms = 1344;  // > sqrt(kMaxHeight / 2 pi)
constexpr int kPsiDegree = 72;   // Taylor degree of Psi about p = 1/2
constexpr int kSplitter = 134217729;  // 2^27 + 1

using v4d = double __attribute__((vector_size(32)));

// Veltkamp split: x = hi + lo with both halves holding <= 26 significant bits.
inline void split(double x, double& hi, double& lo) {
    const double c = kSplitter * x;
    hi = c - (c - x);
    lo = x - hi;
}

// This file builds with -ffp-contract=off, so that exact error terms stay
// exact. Fused operations are requested explicitly where the target has them.
#if defined(__FMA__) && defined(__AVX__)
#define CLOSEGAP_FUSED 1
inline double mul_add(double a, double b, double c) { return std::fma(a, b, c); }

inline v4d mul_add(v4d a, v4d b, v4d c) {
    return reinterpret_cast<v4d>(_mm256_fmadd_pd(reinterpret_cast<__m256d>(a), reinterpret_cast<__m256d>(b),
                                                 reinterpret_cast<__m256d>(c)));
}

inline v4d mul_add(v4d a, double b, v4d c) { return mul_add(a, v4d{b, b, b, b}, c); }
#else
template <class T, class U>
inline T mul_add(T a, U b, T c) {
    return a * b + c;
}
#endif

// Round-to-nearest-integer valid for |x| < 2^51; vectorizes without SSE4.1.
constexpr double kRoundMagic = 6755399441055744.0;  // 1.5 * 2^52

template <class T>
inline T round_nearest(T x) {
    return (x + kRoundMagic) - kRoundMagic;
}

// cos(2 pi u) for u in [-1/2, 1/2]: fold to [0, 1/4] turn and use the
// Taylor polynomial of cos on [0, pi/2] through x^20 (error < 2e-17).
template <class T>
inline T cos_2pi(T u) {
    const T v = u < 0 ? -u : u;
    const auto flip = v > 0.25;
    const T w = flip ? 0.5 - v : v;
    const T x = (2.0 * std::numbers::pi) * w;
    const T x2 = x * x;
    T p = x2 * (1.0 / 2432902008176640000.0) - 1.0 / 6402373705728000.0;
    for (const double c : {1.0 / 20922789888000.0, -1.0 / 87178291200.0, 1.0 / 479001600.0, -1.0 / 3628800.0,
                           1.0 / 40320.0, -1.0 / 720.0, 1.0 / 24.0, -0.5, 1.0})
        p = mul_add(p, x2, T{} + c);
    return flip ? -p : p;
}

struct Tables {
    // ln(n) / (2 pi) = hi + lo, with hi split once more for exact products;
    // index i holds n = i + 1.
    alignas(64) std::array<double, kMaxTerms + 4> log_h1{};
    alignas(64) std::array<double, kMaxTerms + 4> log_h2{};
    alignas(64) std::array<double, kMaxTerms + 4> log_hi{};
    alignas(64) std::array<double, kMaxTerms + 4> log_lo{};
    alignas(64) std::array<double, kMaxTerms + 4> inv_sqrt{};
    // Remainder coefficients C0..C3 as polynomials in z = p - 1/2.
    std::array<std::array<double, kPsiDegree + 1>, 4> c{};
};

// Taylor coefficients of Psi(z) = -cos(2 pi z^2 - 5 pi / 8) / cos(2 pi z)
// about z = 0, i.e. Psi(p) = cos(2 pi (p^2 - p - 1/16)) / cos(2 pi p) at
// p = z + 1/2. Psi is entire, so the Cauchy integral over |z| = 1 sampled by
// the trapezoidal rule converges geometrically. Nodes avoid the real axis,
// where numerator and denominator vanish together.
std::array<long double, kPsiDegree + 13> psi_taylor() {
    using cld = std::complex<long double>;
    constexpr int M = 512;
    constexpr long double pi = std::numbers::pi_v<long double>;
    std::array<long double, kPsiDegree + 13> coef{};
    std::array<cld, M> values{};
    for (int j = 0; j < M; ++j) {
        const long double phi = 2 * pi * (j + 0.5L) / M;
        const cld z = std::polar(1.0L, phi);
        values[j] = -std::cos(2 * pi * z * z - 5 * pi / 8) / std::cos(2 * pi * z);
    }
    for (std::size_t k = 0; k < coef.size(); ++k) {
        cld acc = 0;
        for (int j = 0; j < M; ++j) {
            const long double phi = 2 * pi * (j + 0.5L) / M;
            acc += values[j] * std::polar(1.0L, -static_cast<long double>(k) * phi);
        }
        coef[k] = acc.real() / M;
    }
    return coef;
}

Tables build_tables() {
    Tables tb;
    constexpr long double two_pi = 2 * std::numbers::pi_v<long double>;
    for (int i = 0; i < kMaxTerms; ++i) {
        const long double n = i + 1;
        const long double L = std::log(n) / two_pi;
        const double hi = static_cast<double>(L);
        tb.log_hi[i] = hi;
        tb.log_lo[i] = static_cast<double>(L - hi);
        split(hi, tb.log_h1[i], tb.log_h2[i]);
        tb.inv_sqrt[i] = static_cast<double>(1.0L / std::sqrt(n));
    }

    const auto a = psi_taylor();
    // deriv(m, j): coefficient of z^j in Psi^(m)(z)
    auto deriv = [&](int m, int j) -> long double {
        long double f = a[j + m];
        for (int q = 1; q <= m; ++q) f *= j + q;
        return f;
    };
    constexpr long double pi = std::numbers::pi_v<long double>;
    const long double pi2 = pi * pi, pi4 = pi2 * pi2, pi6 = pi4 * pi2;
    for (int j = 0; j <= kPsiDegree; ++j) {
        tb.c[0][j] = static_cast<double>(deriv(0, j));
        tb.c[1][j] = static_cast<double>(-deriv(3, j) / (96 * pi2));
        tb.c[2][j] = static_cast<double>(deriv(2, j) / (64 * pi2) + deriv(6, j) / (18432 * pi4));
        tb.c[3][j] = static_cast<double>(-deriv(1, j) / (64 * pi2) - deriv(5, j) / (3840 * pi4) -
                                         deriv(9, j) / (5308416 * pi6));
    }
    return tb;
}

const Tables& tables() {
    static const Tables tb = build_tables();
    return tb;
}

inline double horner(const std::array<double, kPsiDegree + 1>& c, double z) {
    double s = c[kPsiDegree];
    for (int j = kPsiDegree - 1; j >= 0; --j) s = s * z + c[j];
    return s;
}

// One term's contribution  n^{-1/2} cos(2 pi (theta_frac - frac(t ln(n) / 2 pi))).
// t * hi is formed exactly as p + e, by FMA or by Dekker's product on
// pre-split halves.
template <class T>
inline T term(T h1, T h2, T hi, T lo, T amp, double t, double t1, double t2, double th_frac) {
    const T p = t * hi;
#ifdef CLOSEGAP_FUSED
    const T e = mul_add(hi, t, -p);
    (void)h1, (void)h2, (void)t1, (void)t2;
#else
    const T e = ((t1 * h1 - p) + t1 * h2 + t2 * h1) + t2 * h2;
#endif
    const T f = p - round_nearest(p);
    T ph = th_frac - (f + (e + t * lo));
    ph = ph - round_nearest(ph);
    return amp * cos_2pi(ph);
}

}  // namespace

double rs_hardy_z(double t) {
    const Tables& tb = tables();
    constexpr double two_pi = 2.0 * std::numbers::pi;
    const double a = std::sqrt(t / two_pi);
    const int N = static_cast<int>(a);
    const double p = a - N;

    const long double th = riemann_siegel_theta_turns(t);
    const double th_frac = static_cast<double>(th - std::nearbyint(th));
    double t1, t2;
    split(t, t1, t2);

    v4d acc = {0.0, 0.0, 0.0, 0.0};
    int i = 0;
    for (; i + 4 <= N; i += 4) {
        v4d h1, h2, hi, lo, amp;
        __builtin_memcpy(&h1, &tb.log_h1[i], sizeof(v4d));
        __builtin_memcpy(&h2, &tb.log_h2[i], sizeof(v4d));
        __builtin_memcpy(&hi, &tb.log_hi[i], sizeof(v4d));
        __builtin_memcpy(&lo, &tb.log_lo[i], sizeof(v4d));
        __builtin_memcpy(&amp, &tb.inv_sqrt[i], sizeof(v4d));
        acc += term<v4d>(h1, h2, hi, lo, amp, t, t1, t2, th_frac);
    }
    double sum = (acc[0] + acc[1]) + (acc[2] + acc[3]);
    for (; i < N; ++i)
        sum += term<double>(tb.log_h1[i], tb.log_h2[i], tb.log_hi[i], tb.log_lo[i], tb.inv_sqrt[i], t, t1, t2,
                            th_frac);

    const double z = p - 0.5;
    const double inv_a = 1.0 / a;
    const double corr =
        horner(tb.c[0], z) + inv_a * (horner(tb.c[1], z) + inv_a * (horner(tb.c[2], z) + inv_a * horner(tb.c[3], z)));
    const double sign = (N % 2 == 1) ? 1.0 : -1.0;  // (-1)^(N-1)
    return 2.0 * sum + sign * corr / std::sqrt(a);
}

double em_hardy_z(double t) {
    const std::complex<double> zeta = zeta_critical_line(t);
    const long double th = riemann_siegel_theta_turns(t);
    const double ang = 2.0 * std::numbers::pi * static_cast<double>(th - std::nearbyint(th));
    return (std::polar(1.0, ang) * zeta).real();
}

double hardy_z_unchecked(double t) { return t < kRiemannSiegelFloor ? em_hardy_z(t) : rs_hardy_z(t); }

}  // namespace closegap::detail
