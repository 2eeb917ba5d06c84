#pragma once

#include <filesystem>
#include <iosfwd>
#include <string_view>

#include "closegap/zeros.hpp"

namespace closegap {

/// Default precision of a table without a `# precision=` header.
inline constexpr double kDefaultTablePrecision = 1e-6;

/// Parses a zero table: optional `#` header lines of key=value pairs (only
/// `precision` is recognized), then one decimal ordinate per line, strictly
/// increasing. The result is not certified; an empty table yields a
/// degenerate sequence. Throws ParseError or MonotonicityError.
ZeroSequence ingest_zeros(std::istream& in);
ZeroSequence ingest_zeros_text(std::string_view text);
ZeroSequence read_zero_table(const std::filesystem::path& path);

/// Fractional digits used for ordinates: at least 9, more when the
/// precision asks for it (capped at 12).
int ordinate_digits(double precision);

void write_zero_table(std::ostream& out, const ZeroSequence& zs);
void write_zero_table(const std::filesystem::path& path, const ZeroSequence& zs);

}  // namespace closegap
