#include "closegap/bounds.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "closegap/errors.hpp"

namespace closegap {

namespace {

void require_log_D(double log_D, const char* who) {
    if (!(log_D > 1.0)) throw DomainError(std::string(who) + ": need log D > 1");
}

void require_C_rho(double C, double rho, const char* who) {
    if (!(C > 0.0)) throw DomainError(std::string(who) + ": C must be positive");
    if (!(rho > 0.0 && rho < 1.0)) throw DomainError(std::string(who) + ": rho must lie in (0, 1)");
}

constexpr double kLn10 = std::numbers::ln10;
constexpr double kLn2 = std::numbers::ln2;

}  // namespace

LogSpaceValue LogSpaceValue::from_log10(double l10) { return {l10 * kLn10}; }

LogSpaceValue LogSpaceValue::from_linear(double x) {
    if (!(x > 0.0)) throw DomainError("LogSpaceValue: quantity must be positive");
    return {std::log(x)};
}

double LogSpaceValue::log10() const { return log_value / kLn10; }

std::optional<double> LogSpaceValue::linear() const {
    const double x = std::exp(log_value);
    if (!std::isfinite(x)) return std::nullopt;
    return x;
}

double lambert_w(double x) {
    if (!(x >= 0.0)) throw DomainError("lambert_w: x must be >= 0");
    if (x == 0.0) return 0.0;
    if (std::isinf(x)) return x;
    double w;
    if (x <= std::numbers::e) {
        // Halley on w e^w - x
        w = x < 0.5 ? x * (1.0 - x * (1.0 - 1.5 * x)) : 0.7 * std::log1p(x);
        for (int it = 0; it < 64; ++it) {
            const double ew = std::exp(w);
            const double f = w * ew - x;
            const double fp = ew * (w + 1.0);
            const double step = f / (fp - (w + 2.0) * f / (2.0 * w + 2.0));
            w -= step;
            if (std::fabs(step) <= 4 * std::numeric_limits<double>::epsilon() * std::fabs(w)) break;
        }
    } else {
        // Halley on w + log w - log x, which stays finite for huge x
        const double lx = std::log(x);
        const double llx = std::log(lx);
        w = lx - llx + llx / lx;
        for (int it = 0; it < 64; ++it) {
            const double g = w + std::log(w) - lx;
            const double gp = 1.0 + 1.0 / w;
            const double gpp = -1.0 / (w * w);
            const double step = 2.0 * g * gp / (2.0 * gp * gp - g * gpp);
            w -= step;
            if (std::fabs(step) <= 4 * std::numeric_limits<double>::epsilon() * std::fabs(w)) break;
        }
    }
    return w;
}

CiInterval ci_interval(double log_D, double log_h) {
    require_log_D(log_D, "ci_interval");
    if (!(log_h >= 0.0)) throw DomainError("ci_interval: need log h >= 0");
    const double ll = std::log(log_D);
    CiInterval out;
    out.log_lower = 20.0 * ll;
    out.log_upper = -30.0 / 17.0 * ll + 5.0 / 34.0 * log_D - 5.0 / 17.0 * log_h;
    out.nonempty = out.log_lower < out.log_upper;
    return out;
}

double ci_nonempty_threshold(double log_D) {
    require_log_D(log_D, "ci_nonempty_threshold");
    return 0.5 * log_D - 74.0 * std::log(log_D);
}

double contradiction_T_threshold(double C, double rho) {
    require_C_rho(C, rho, "contradiction_T_threshold");
    return std::pow(2.0 * std::numbers::pi * C / rho, 5.0);
}

double d_threshold_from_C(double C, double rho) {
    require_C_rho(C, rho, "d_threshold_from_C");
    return std::pow(2.0 * std::numbers::pi * C / rho, 0.25);
}

double genus_bound(double log_D) {
    require_log_D(log_D, "genus_bound");
    return log_D * kLn2 / lambert_w(log_D);
}

double principal_genus_bound(double log_D) {
    require_log_D(log_D, "principal_genus_bound");
    return kLn2 + (0.5 - kLn2 / lambert_w(log_D)) * log_D - 74.0 * std::log(log_D);
}

ReferenceBounds reference_bounds(double log_D, double epsilon) {
    require_log_D(log_D, "reference_bounds");
    return {epsilon, (0.5 - epsilon) * log_D, std::log(log_D)};
}

double bisect_log_D(double (*f)(double), double lo, double hi, double tol) {
    double flo = f(lo);
    const double fhi = f(hi);
    if ((flo < 0) == (fhi < 0)) throw DomainError("bisect_log_D: no sign change on the bracket");
    while (hi - lo > tol * std::max(1.0, std::fabs(hi))) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if ((fm < 0) == (flo < 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double ci_threshold_crossing() {
    // 1/2 L - 74 log L is negative from L ~ e up to the root near 1025 and
    // increasing beyond 148.
    return bisect_log_D(ci_nonempty_threshold, 148.0, 1e5);
}

double principal_genus_crossing() { return bisect_log_D(principal_genus_bound, 148.0, 1e6); }

BoundsReport bounds_report(double log_D, std::optional<double> log_h, std::optional<double> C,
                           std::optional<double> rho, double epsilon) {
    require_log_D(log_D, "bounds_report");
    BoundsReport r;
    r.D = LogSpaceValue::from_log(log_D);
    if (log_h) {
        r.h = LogSpaceValue::from_log(*log_h);
        r.interval = ci_interval(log_D, *log_h);
    }
    r.ci_bound = LogSpaceValue::from_log(ci_nonempty_threshold(log_D));
    r.g_bound = LogSpaceValue::from_log(genus_bound(log_D));
    r.pboun = LogSpaceValue::from_log(principal_genus_bound(log_D));
    r.reference = reference_bounds(log_D, epsilon);
    r.C = C;
    r.rho = rho;
    if (C) {
        const double rr = rho.value_or(0.11);
        r.rho = rr;
        r.log_T_threshold = contradiction_T_threshold(*C, rr);
        r.log_D_threshold = d_threshold_from_C(*C, rr);
    }
    return r;
}

}  // namespace closegap
