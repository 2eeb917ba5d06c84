#include "closegap/zero_table.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "closegap/errors.hpp"

namespace closegap {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

}  // namespace

int ordinate_digits(double precision) {
    const int wanted = static_cast<int>(std::ceil(-std::log10(precision) - 1e-9));
    return std::clamp(wanted, 9, 12);
}

ZeroSequence ingest_zeros_text(std::string_view text) {
    double precision = kDefaultTablePrecision;
    std::vector<double> ords;
    std::size_t line_no = 0;
    bool in_header = true;
    while (!text.empty()) {
        const std::size_t nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
        ++line_no;
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '#') {
            if (!in_header) continue;
            std::string_view body = trim(line.substr(1));
            const std::size_t eq = body.find('=');
            if (eq == std::string_view::npos) continue;
            const std::string_view key = trim(body.substr(0, eq));
            const std::string_view val = trim(body.substr(eq + 1));
            if (key == "precision") {
                double p = 0;
                auto [ptr, ec] = std::from_chars(val.data(), val.data() + val.size(), p);
                if (ec != std::errc() || ptr != val.data() + val.size() || !(p > 0))
                    throw ParseError(line_no, "bad precision value '" + std::string(val) + "'");
                precision = p;
            }
            continue;
        }
        in_header = false;
        double t = 0;
        auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), t, std::chars_format::fixed);
        if (ec != std::errc() || ptr != line.data() + line.size() || !std::isfinite(t))
            throw ParseError(line_no, "not a decimal ordinate: '" + std::string(line) + "'");
        if (!ords.empty() && !(t > ords.back())) throw MonotonicityError(ords.size(), line_no);
        ords.push_back(t);
    }
    if (ords.empty()) return ZeroSequence::degenerate_empty(precision);
    const double lo = ords.front(), hi = ords.back();
    return ZeroSequence(std::move(ords), lo, hi, precision, false);
}

ZeroSequence ingest_zeros(std::istream& in) {
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return ingest_zeros_text(text);
}

ZeroSequence read_zero_table(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open zero table " + path.string());
    return ingest_zeros(in);
}

void write_zero_table(std::ostream& out, const ZeroSequence& zs) {
    char buf[64];
    auto [pend, pec] = std::to_chars(buf, buf + sizeof buf, zs.precision());
    out << "# precision=" << std::string_view(buf, static_cast<std::size_t>(pend - buf)) << '\n';
    const int digits = ordinate_digits(zs.precision());
    std::string chunk;
    chunk.reserve(1 << 20);
    for (double t : zs) {
        auto [end, ec] = std::to_chars(buf, buf + sizeof buf, t, std::chars_format::fixed, digits);
        chunk.append(buf, end);
        chunk.push_back('\n');
        if (chunk.size() > (1 << 20) - 64) {
            out << chunk;
            chunk.clear();
        }
    }
    out << chunk;
}

void write_zero_table(const std::filesystem::path& path, const ZeroSequence& zs) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write zero table " + path.string());
    write_zero_table(out, zs);
    if (!out) throw IoError("error writing zero table " + path.string());
}

}  // namespace closegap
