#include "closegap/gaps.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "closegap/errors.hpp"

namespace closegap {

std::vector<GapRecord> build_gaps(const ZeroSequence& zs) {
    if (zs.size() < 2) throw TooFewZeros("build_gaps: need at least two zeros");
    std::vector<GapRecord> out;
    out.reserve(zs.size() - 1);
    for (std::size_t i = 0; i + 1 < zs.size(); ++i) {
        const double t = zs[i], u = zs[i + 1];
        const double gap = u - t;
        out.push_back({t, u, gap, gap * std::log(t) / (2.0 * std::numbers::pi)});
    }
    return out;
}

double close_threshold(double t) {
    const double l = std::log(t);
    return std::numbers::pi / l * (1.0 - 1.0 / std::sqrt(l));
}

bool is_close(const GapRecord& rec) { return rec.gap <= close_threshold(rec.t); }

std::string proportion_5dp(std::int64_t close, std::int64_t N) {
    if (N <= 0) return "0.00000";
    const __int128 scaled = static_cast<__int128>(close) * 100000;
    std::int64_t q = static_cast<std::int64_t>(scaled / N);
    const std::int64_t r = static_cast<std::int64_t>(scaled % N);
    if (2 * static_cast<__int128>(r) > N || (2 * static_cast<__int128>(r) == N && (q & 1))) ++q;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%lld.%05lld", static_cast<long long>(q / 100000),
                  static_cast<long long>(q % 100000));
    return buf;
}

GapTable proportion_table(const ZeroSequence& zs, std::span<const double> checkpoints) {
    std::vector<double> Ts(checkpoints.begin(), checkpoints.end());
    std::sort(Ts.begin(), Ts.end());
    GapTable table;
    if (Ts.empty()) return table;
    if (zs.degenerate() || Ts.back() > zs.t_max())
        throw RangeError("proportion_table: checkpoint beyond the zero data's coverage");

    // prefix count of close records by index of the lower zero
    const std::size_t n = zs.size();
    std::vector<std::int64_t> close_prefix(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const bool close = i + 1 < n && zs[i] >= 2.0 && (zs[i + 1] - zs[i]) <= close_threshold(zs[i]);
        close_prefix[i + 1] = close_prefix[i] + close;
    }
    for (double T : Ts) {
        GapRow row;
        row.T = T;
        const std::size_t N = zs.count_at_or_below(T);
        row.N = static_cast<std::int64_t>(N);
        row.close_count = close_prefix[N];
        row.degenerate = N == 0;
        row.tail_gap_unknown = N > 0 && N == n;
        row.proportion_text = proportion_5dp(row.close_count, row.N);
        row.proportion = std::stod(row.proportion_text);
        table.rows.push_back(std::move(row));
    }
    return table;
}

std::vector<double> default_checkpoints() {
    return {500000, 1000000, 1500000, 2000000, 2500000, 3000000, 3500000, 4000000, 4500000, 4992381.};
}

ZeroSequence select_R(const ZeroSequence& zs, double T) {
    if (zs.degenerate() || T > zs.t_max()) throw RangeError("select_R: T beyond the zero data's coverage");
    std::vector<double> out;
    for (std::size_t i = 0; i + 1 < zs.size() && zs[i] <= T; ++i) {
        const double t = zs[i];
        if (t >= 2.0 && zs[i + 1] - t <= close_threshold(t)) out.push_back(t);
    }
    return ZeroSequence(std::move(out), zs.t_min(), std::min(T, zs.t_max()), zs.precision(), false);
}

ZeroSequence select_well_spaced(const ZeroSequence& zs, double min_spacing) {
    if (!(min_spacing > 0.0)) throw DomainError("select_well_spaced: spacing must be positive");
    std::vector<double> out;
    for (double t : zs)
        if (out.empty() || t - out.back() >= min_spacing) out.push_back(t);
    if (zs.degenerate()) return ZeroSequence::degenerate_empty(zs.precision());
    return ZeroSequence(std::move(out), zs.t_min(), zs.t_max(), zs.precision(), false);
}

ZeroSequence select_S(const ZeroSequence& zs, double alpha, double T) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("select_S: alpha must lie in (0, 1)");
    if (zs.degenerate() || T > zs.t_max()) throw RangeError("select_S: T beyond the zero data's coverage");
    std::vector<double> out;
    for (std::size_t i = 0; i + 1 < zs.size() && zs[i] <= T; ++i) {
        const double t = zs[i];
        if (t < 2.0) continue;
        const bool close = zs[i + 1] - t <= std::numbers::pi * (1.0 - alpha) / std::log(t);
        if (close && (out.empty() || t - out.back() >= 1.0)) out.push_back(t);
    }
    return ZeroSequence(std::move(out), zs.t_min(), std::min(T, zs.t_max()), zs.precision(), false);
}

double sinc(double x) {
    if (std::fabs(x) < 1e-4) {
        const double x2 = x * x;
        return 1.0 - x2 / 6.0 * (1.0 - x2 / 20.0);
    }
    return std::sin(x) / x;
}

double sine_kernel_term(double t, double t_next) { return std::fabs(sinc((t - t_next) * std::log(t))); }

double sine_kernel_sum(const ZeroSequence& selected, const ZeroSequence& full) {
    double sum = 0.0;
    for (double t : selected) {
        const auto it = std::lower_bound(full.begin(), full.end(), t);
        if (it == full.end() || *it != t) throw MissingSuccessor("sine_kernel_sum: selected zero not in the full set");
        if (it + 1 == full.end()) throw MissingSuccessor("sine_kernel_sum: selected zero has no successor");
        sum += sine_kernel_term(t, *(it + 1));
    }
    return sum;
}

}  // namespace closegap
