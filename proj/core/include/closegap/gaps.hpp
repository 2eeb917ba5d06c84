#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "closegap/zeros.hpp"

namespace closegap {

/// A zero t and the nearest zero t_next above it.
struct GapRecord {
    double t = 0.0;
    double t_next = 0.0;
    double gap = 0.0;             ///< t_next - t
    double normalized_gap = 0.0;  ///< gap log(t) / 2 pi, mean 1
};

/// One record per consecutive pair; throws TooFewZeros for fewer than two.
std::vector<GapRecord> build_gaps(const ZeroSequence& zs);

/// (pi / log t) (1 - 1 / sqrt(log t)), evaluated at the lower ordinate.
double close_threshold(double t);

/// gap <= close_threshold(t), boundary included.
bool is_close(const GapRecord& rec);

struct GapRow {
    double T = 0.0;
    std::int64_t N = 0;
    std::int64_t close_count = 0;
    /// close_count / N rounded half-even to 5 decimals (0 when N = 0).
    double proportion = 0.0;
    std::string proportion_text;
    /// N = 0, so the proportion is undefined.
    bool degenerate = false;
    /// The highest zero <= T has no successor in the data, so its gap was
    /// not tested.
    bool tail_gap_unknown = false;
};

struct GapTable {
    std::vector<GapRow> rows;  ///< sorted by T
};

/// close / N rounded half-even to 5 decimals, as text "0.xxxxx".
std::string proportion_5dp(std::int64_t close, std::int64_t N);

/// For each T: N = #{t <= T}, close_count = #{records with t <= T that are
/// close}. Throws RangeError if T exceeds the data's coverage.
GapTable proportion_table(const ZeroSequence& zs, std::span<const double> checkpoints);

/// The ten heights of the published proportion table; the last is 4992381.
std::vector<double> default_checkpoints();

/// Zeros with 2 <= t <= T whose gap to the next zero is close.
ZeroSequence select_R(const ZeroSequence& zs, double T);

/// Greedy left-to-right subsequence whose consecutive members differ by at
/// least min_spacing (> 0).
ZeroSequence select_well_spaced(const ZeroSequence& zs, double min_spacing);

/// Zeros with t <= T and t_next - t <= pi (1 - alpha) / log t, thinned
/// greedily to unit spacing.
ZeroSequence select_S(const ZeroSequence& zs, double alpha, double T);

/// sin(x) / x with sinc(0) = 1.
double sinc(double x);

/// |sin((t - t') log t) / ((t - t') log t)|
double sine_kernel_term(double t, double t_next);

/// Sum of sine_kernel_term over `selected`, with t' the successor of each
/// selected zero inside `full`. Throws MissingSuccessor if a selected zero
/// is absent from `full` or is its last element.
double sine_kernel_sum(const ZeroSequence& selected, const ZeroSequence& full);

}  // namespace closegap
