#include <gtest/gtest.h>

#include <cfloat>
#include <cmath>
#include <numbers>
#include <quadmath.h>

#include "closegap/errors.hpp"
#include "closegap/zeta.hpp"

using namespace closegap;

namespace {

// Im log Gamma(1/4 + i t / 2) - (t / 2) log pi in quad precision: Stirling's
// series after shifting the argument by 30, then the shift undone term by
// term with principal logarithms.
__float128 theta_oracle(double t) {
    const __complex128 z = 0.25Q + (static_cast<__float128>(t) / 2) * 1.0iQ;
    const int shift = 30;
    __complex128 w = z + shift;
    // B_2k / (2k (2k - 1))
    const __float128 c[] = {1.0Q / 12, -1.0Q / 360, 1.0Q / 1260, -1.0Q / 1680, 1.0Q / 1188, -691.0Q / 360360,
                            1.0Q / 156, -3617.0Q / 122400, 43867.0Q / 244188, -174611.0Q / 125400};
    __complex128 lg = (w - 0.5Q) * clogq(w) - w + 0.5Q * logq(2 * M_PIq);
    __complex128 wp = w;
    const __complex128 w2 = w * w;
    for (__float128 ck : c) {
        lg += ck / wp;
        wp *= w2;
    }
    for (int k = 0; k < shift; ++k) lg -= clogq(z + k);
    return cimagq(lg) - static_cast<__float128>(t) / 2 * logq(M_PIq);
}

struct Frozen {
    double t;
    double value;
};

// Z(t) at 30 digits, rounded to 17 significant digits
const Frozen kHardyZ[] = {
    {10, -1.5491945461810224},     {15, 0.71994239134213713},      {25.5, 0.70128902154377483},
    {50, -0.34073500595502498},    {100, 2.6926970566644635},      {150, -0.091010923267403593},
    {199.5, 5.9710861536496423},   {200.5, 3.5786759250688392},    {300, -0.77298701299230423},
    {1000, 0.99779463752158661},   {5000, -0.80425723635293985},   {12345.678, -0.87856159934681479},
    {1e5, 5.879592468681765},      {1e6, -2.8061338784306985},     {2.5e6, 8.5986506322907435},
    {5e6, -27.697570196845356},    {9.9e6, -6.2241185955487642},
};

// Error budget of the evaluator: Euler-Maclaurin below 200, Riemann-Siegel
// with four remainder terms above, whose truncation error decays like t^(-9/4).
double z_tolerance(double t) {
    if (t < 200) return 1e-11;
    return 3e-7 * std::pow(200.0 / t, 2.25) + 2e-10;
}

}  // namespace

TEST(Theta, MatchesQuadPrecisionGammaOracle) {
    for (double t : {10.0, 14.5, 30.0, 100.0, 1234.5, 1e4, 1e5, 1e6, 5e6, 1e7}) {
        const __float128 ref = theta_oracle(t);
        const double abs_tol = 1e-13 * std::max(1.0, std::fabs(static_cast<double>(ref)));
        EXPECT_NEAR(riemann_siegel_theta(t), static_cast<double>(ref), abs_tol) << t;
        const long double turns = riemann_siegel_theta_turns(t);
        const __float128 diff = static_cast<__float128>(turns) - ref / (2 * M_PIq);
        const double turns_tol = 4 * LDBL_EPSILON * std::fabs(static_cast<double>(turns)) + 1e-12;
        EXPECT_LT(static_cast<double>(fabsq(diff)), turns_tol) << t;
    }
}

TEST(Theta, ReductionModTwoPi) {
    for (double t : {10.0, 1e3, 1e5, 3e6, 1e7}) {
        const __float128 ref = theta_oracle(t);
        __float128 r = fmodq(ref, 2 * M_PIq);
        if (r < 0) r += 2 * M_PIq;
        double got = riemann_siegel_theta_mod_2pi(t);
        double diff = std::fabs(got - static_cast<double>(r));
        diff = std::min(diff, 2 * std::numbers::pi - diff);
        EXPECT_LT(diff, 1e-11) << t;
        EXPECT_GE(got, 0.0);
        EXPECT_LT(got, 2 * std::numbers::pi);
    }
}

TEST(HardyZ, MatchesFrozenHighPrecisionValues) {
    for (const auto& [t, z] : kHardyZ) EXPECT_NEAR(hardy_z(t), z, z_tolerance(t)) << t;
}

TEST(HardyZ, VanishesAtKnownZeros) {
    EXPECT_NEAR(hardy_z(14.134725141734693790), 0.0, 1e-12);
    EXPECT_NEAR(hardy_z(21.022039638771554993), 0.0, 1e-12);
    EXPECT_NEAR(hardy_z(101.31785100573139122), 0.0, 1e-12);
}

TEST(HardyZ, RejectsHeightsOutsideTables) {
    EXPECT_THROW(hardy_z(9.99), DomainError);
    EXPECT_THROW(hardy_z(-20), DomainError);
    EXPECT_THROW(hardy_z(1.2e7), DomainError);
    EXPECT_THROW(hardy_z(std::nan("")), DomainError);
    EXPECT_NO_THROW(hardy_z(kMaxHeight));
}

TEST(ZetaCriticalLine, MatchesFrozenValues) {
    const struct {
        double t, re, im;
    } ref[] = {{10, 1.5448952202967528, -0.11533646527127338},
               {30, -0.1206422875900437, -0.58369121476370629},
               {100, 2.6926198856813241, -0.020386029602598162},
               {1000, 0.35633436719439606, 0.93199783123299367}};
    for (const auto& r : ref) {
        const auto z = zeta_critical_line(r.t);
        EXPECT_NEAR(z.real(), r.re, 1e-11) << r.t;
        EXPECT_NEAR(z.imag(), r.im, 1e-11) << r.t;
    }
}

TEST(ZetaCriticalLine, ModulusEqualsAbsoluteZ) {
    for (double t = 10.5; t < 3000; t *= 1.37) EXPECT_NEAR(std::abs(zeta_critical_line(t)), std::fabs(hardy_z(t)), 5e-7);
}

TEST(GramPoints, MatchFrozenValues) {
    const struct {
        std::int64_t n;
        double g;
    } ref[] = {{0, 17.845599540410860817},    {1, 23.170282701246309279},     {10, 54.675237446853256266},
               {100, 238.58259051450292333},  {1000, 1421.2563890327501587}, {100000, 74921.895130070669309}};
    for (const auto& r : ref) {
        const GramPoint g = gram_point(r.n);
        EXPECT_EQ(g.index, r.n);
        EXPECT_NEAR(g.value, r.g, 1e-12 * r.g) << r.n;
    }
}

TEST(GramPoints, ThetaHitsMultiplesOfPi) {
    // double spacing times theta' stays below 1e-10 up to about 1e5
    for (std::int64_t n = -1; n < 20000; n += (n < 100 ? 1 : 97)) {
        const GramPoint g = gram_point(n);
        const __float128 th = theta_oracle(g.value);
        EXPECT_LT(fabsq(th - n * M_PIq), 1e-10Q) << n;
    }
}

TEST(GramPoints, IncreasingAndConsistentWithIndexBelow) {
    double prev = gram_point(-1).value;
    for (std::int64_t n = 0; n < 3000; ++n) {
        const double g = gram_point(n).value;
        ASSERT_GT(g, prev);
        ASSERT_EQ(gram_index_below(std::nextafter(g, 1e300)), n);
        ASSERT_EQ(gram_index_below(g - 1e-7), n - 1);
        prev = g;
    }
    for (double t : {1e5, 2e6, 4992381.0, 1e7}) {
        const std::int64_t n = gram_index_below(t);
        EXPECT_LE(gram_point(n).value, t);
        EXPECT_GT(gram_point(n + 1).value, t);
    }
}

TEST(GramPoints, RejectIndexBelowMinusOne) { EXPECT_THROW(gram_point(-2), DomainError); }
