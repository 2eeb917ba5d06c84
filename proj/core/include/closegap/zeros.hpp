#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace closegap {

/// Evidence behind a Turing-method count. Anchors are good Gram points
/// g_a <= t_min and g_b >= t_max; N(g_a) = a + 1 and N(g_b) = b + 1 follow
/// from runs of Gram blocks obeying Rosser's rule on either side.
struct TuringCertificate {
    std::int64_t lower_index = 0;   ///< a; -1 denotes the floor t = 10, where N = 0
    std::int64_t upper_index = 0;   ///< b
    double lower_anchor = 0.0;      ///< g_a (or 10)
    double upper_anchor = 0.0;      ///< g_b
    bool lower_is_floor = false;
    int required_blocks = 0;        ///< K from Brent's form of Turing's bound
    int rosser_blocks_below = 0;    ///< consecutive Rosser blocks ending at g_a
    int rosser_blocks_above = 0;    ///< consecutive Rosser blocks starting at g_b
    std::int64_t zeros_below = 0;   ///< zeros found in (g_a, t_min)
    std::int64_t zeros_above = 0;   ///< zeros found in (t_max, g_b]
    std::int64_t gram_blocks = 0;   ///< Gram blocks processed in [g_a, g_b]
    std::int64_t gram_intervals = 0;      ///< b - a
    std::int64_t block_interval_total = 0;  ///< sum of block lengths in [g_a, g_b]
};

/// Strictly increasing ordinates of zeros 1/2 + it with t in [t_min, t_max].
class ZeroSequence {
public:
    ZeroSequence() = default;
    /// Validates ordering and range; throws MonotonicityError or RangeError.
    ZeroSequence(std::vector<double> ordinates, double t_min, double t_max, double precision,
                 bool certified = false, std::optional<TuringCertificate> certificate = std::nullopt);

    /// Empty sequence with no range (an empty zero table).
    static ZeroSequence degenerate_empty(double precision);

    const std::vector<double>& ordinates() const noexcept { return ordinates_; }
    std::span<const double> view() const noexcept { return ordinates_; }
    std::size_t size() const noexcept { return ordinates_.size(); }
    bool empty() const noexcept { return ordinates_.empty(); }
    double operator[](std::size_t i) const { return ordinates_[i]; }
    auto begin() const noexcept { return ordinates_.begin(); }
    auto end() const noexcept { return ordinates_.end(); }

    double t_min() const noexcept { return t_min_; }
    double t_max() const noexcept { return t_max_; }
    double precision() const noexcept { return precision_; }
    bool certified() const noexcept { return certified_; }
    /// True when the range is undefined (empty input table).
    bool degenerate() const noexcept { return degenerate_; }
    const std::optional<TuringCertificate>& certificate() const noexcept { return certificate_; }

    /// Number of ordinates <= t.
    std::size_t count_at_or_below(double t) const;

    /// Copy with ordinate i removed; the certificate is kept unchanged.
    ZeroSequence without(std::size_t i) const;

private:
    std::vector<double> ordinates_;
    double t_min_ = 0.0;
    double t_max_ = 0.0;
    double precision_ = 1e-6;
    bool certified_ = false;
    bool degenerate_ = false;
    std::optional<TuringCertificate> certificate_;
};

struct FindZerosOptions {
    /// Worker threads; 0 means std::thread::hardware_concurrency().
    unsigned threads = 0;
    /// Extra rounds of window extension before giving up on certification.
    int max_retries = 4;
};

/// Statistics gathered while locating zeros; useful for benchmarks.
struct FindZerosStats {
    std::int64_t z_evaluations = 0;
    std::int64_t gram_points = 0;
    std::int64_t blocks_subdivided = 0;
    std::int64_t blocks_extremum_search = 0;
};

/// All zeros of zeta on the critical line with t_min <= t <= t_max.
///
/// Z is sampled at Gram points; every Gram block short of sign changes is
/// subdivided uniformly by 4, 16 and 64, then searched around local minima
/// of |Z|. Each sign change is refined by Brent's method to a bracket of
/// width <= precision, and the count in a window around the range is
/// checked with Turing's method. t_min below 10 is clamped to 10 (there are
/// no zeros with 0 < t < 14). Throws DomainError for a range outside
/// [0, 1e7], t_max < 10 or precision < 1e-12, and CertificationFailure if
/// the count cannot be reconciled after `max_retries` window extensions.
ZeroSequence find_zeros(double t_min, double t_max, double precision = 1e-9, const FindZerosOptions& opts = {},
                        FindZerosStats* stats = nullptr);

/// Re-checks the Turing certificate of `zs` against its ordinates: the
/// Rosser-block runs must meet the required length, and the ordinates plus
/// the recorded zeros outside [t_min, t_max] must equal b - a.
bool turing_certify(const ZeroSequence& zs);

/// Exact N(T) from a certified run of the engine over [10, T].
std::int64_t count_N(double T, const FindZerosOptions& opts = {});

/// The simplified asymptotic (T / 2 pi) log T.
double asymptotic_N(double T);

/// Number of Gram blocks K that Brent's form of Turing's method needs near
/// height t: K >= 0.0061 log^2 t + 0.08 log t.
int turing_required_blocks(double t);

}  // namespace closegap
