#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace closegap::cli {

enum class Command { zeros, gaps, classgroup, rmt, bounds };

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int failure = 1;
inline constexpr int usage = 2;
inline constexpr int not_fundamental = 3;
inline constexpr int certification = 4;
inline constexpr int range = 5;
inline constexpr int quadrature = 6;
inline constexpr int domain = 7;
inline constexpr int input = 8;
}  // namespace exit_code

/// Text appended to --help listing the exit codes.
std::string exit_code_help();

struct RunConfig {
    Command command = Command::zeros;
    double t_min = 0.0;
    std::optional<double> t_max;
    double precision = 1e-9;
    unsigned threads = 0;
    std::vector<double> checkpoints;  ///< empty selects the default table heights
    bool compute = false;
    std::string zeros_file;
    std::optional<std::string> D;  ///< decimal digits
    std::optional<double> log10_D;
    std::optional<double> h;
    std::optional<double> C;
    std::optional<double> rho;
    double epsilon = 0.0;
    double x_max = 3.0;
    int steps = 512;
    std::string out;  ///< empty writes the primary output to `out` stream
};

/// Parses "a,b c" into heights; throws std::invalid_argument on bad or
/// empty input.
std::vector<double> parse_checkpoints(const std::string& text);

/// Natural log of a positive decimal integer of any length.
double log_of_decimal(const std::string& digits);

/// Runs one command. Primary output (table, CSV, JSON) goes to the file
/// named by config.out, or to `out` when that is empty; summaries go to
/// `out` in the first case and to `err` in the second. Returns an exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace closegap::cli
