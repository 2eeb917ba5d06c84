#pragma once

#include <optional>

namespace closegap {

/// A positive quantity stored through its natural logarithm, so values such
/// as 10^10000 stay representable.
struct LogSpaceValue {
    double log_value = 0.0;

    static LogSpaceValue from_log(double l) { return {l}; }
    static LogSpaceValue from_log10(double l10);
    static LogSpaceValue from_linear(double x);

    double log10() const;
    /// exp(log_value), or nullopt when it overflows a double.
    std::optional<double> linear() const;

    LogSpaceValue pow(double e) const { return {log_value * e}; }
    friend LogSpaceValue operator*(LogSpaceValue x, LogSpaceValue y) { return {x.log_value + y.log_value}; }
    friend LogSpaceValue operator/(LogSpaceValue x, LogSpaceValue y) { return {x.log_value - y.log_value}; }
    friend bool operator<(LogSpaceValue x, LogSpaceValue y) { return x.log_value < y.log_value; }
};

/// Principal branch of Lambert W on x >= 0 by Halley iteration. Throws
/// DomainError for negative or NaN x.
double lambert_w(double x);

/// Bounds on log T from the interval (log D)^20 < log T <
/// (log D)^(-30/17) D^(5/34) h^(-5/17), returned as their logarithms.
struct CiInterval {
    double log_lower = 0.0;  ///< 20 log log D
    double log_upper = 0.0;  ///< -(30/17) log log D + (5/34) log D - (5/17) log h
    bool nonempty = false;
};

/// Throws DomainError if log_D <= 1 or log_h < 0.
CiInterval ci_interval(double log_D, double log_h);

/// log of D^(1/2) / (log D)^74, the class number threshold below which the
/// interval above is nonempty.
double ci_nonempty_threshold(double log_D);

/// log T threshold (2 pi C / rho)^5 beyond which C T (log T)^(4/5) falls
/// below rho (T / 2 pi) log T. C > 0, rho in (0, 1).
double contradiction_T_threshold(double C, double rho);

/// log D threshold (2 pi C / rho)^(1/4), from (log D)^20 < log T.
double d_threshold_from_C(double C, double rho);

/// log of exp(log D log 2 / W(log D)), an upper bound for 2^g.
double genus_bound(double log_D);

/// log of 2 D^(1/2 - log 2 / W(log D)) / (log D)^74, a lower bound for the
/// principal genus order under the contrapositive class number bound.
double principal_genus_bound(double log_D);

/// Shapes of the Siegel and Goldfeld-Gross-Zagier lower bounds with their
/// (ineffective or unspecified) constants left out.
struct ReferenceBounds {
    double epsilon = 0.0;
    double siegel_log = 0.0;  ///< log D^(1/2 - eps)
    double ggz_log = 0.0;     ///< log log D
};

ReferenceBounds reference_bounds(double log_D, double epsilon);

/// Largest root of f(log D) = 0 on [lo, hi] by bisection, assuming a single
/// sign change there. Used to locate where the thresholds cross 1.
double bisect_log_D(double (*f)(double), double lo, double hi, double tol = 1e-12);

/// log D at which ci_nonempty_threshold crosses 0 (the bound exceeds 1).
double ci_threshold_crossing();

/// log D at which principal_genus_bound crosses 0.
double principal_genus_crossing();

struct BoundsReport {
    LogSpaceValue D;
    std::optional<LogSpaceValue> h;
    std::optional<CiInterval> interval;  ///< present when h is given
    LogSpaceValue ci_bound;              ///< D^(1/2) / log^74 D
    LogSpaceValue g_bound;               ///< right side of 2^g < ...
    LogSpaceValue pboun;                 ///< lower bound for p(-D)
    ReferenceBounds reference;
    // Conditional on a hypothetical absolute constant C.
    std::optional<double> C;
    std::optional<double> rho;
    std::optional<double> log_T_threshold;
    std::optional<double> log_D_threshold;
};

BoundsReport bounds_report(double log_D, std::optional<double> log_h, std::optional<double> C,
                           std::optional<double> rho, double epsilon = 0.0);

}  // namespace closegap
