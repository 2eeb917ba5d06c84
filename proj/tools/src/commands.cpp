#include "commands.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

#include "closegap/bounds.hpp"
#include "closegap/class_group.hpp"
#include "closegap/errors.hpp"
#include "closegap/gaps.hpp"
#include "closegap/rmt.hpp"
#include "closegap/zero_table.hpp"
#include "closegap/zeros.hpp"

namespace closegap::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

std::string shortest(double x) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

std::string fixed(double x, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, x);
    return buf;
}

// Sends the primary payload to the --out file or to `out`, and returns the
// stream that should carry the human-readable summary.
class Sink {
public:
    Sink(const std::string& path, std::ostream& out, std::ostream& err) : out_(out), err_(err), to_file_(!path.empty()) {
        if (to_file_) {
            file_.open(path, std::ios::binary);
            if (!file_) throw IoError("cannot open " + path + " for writing");
        }
    }
    std::ostream& data() { return to_file_ ? static_cast<std::ostream&>(file_) : out_; }
    std::ostream& summary() { return to_file_ ? out_ : err_; }
    void close() {
        if (to_file_) {
            file_.close();
            if (!file_) throw IoError("write failed");
        }
    }

private:
    std::ostream& out_;
    std::ostream& err_;
    bool to_file_;
    std::ofstream file_;
};

ordered_json log_value_json(double log_value) {
    ordered_json j;
    j["log"] = log_value;
    j["log10"] = log_value / std::log(10.0);
    const auto lin = LogSpaceValue::from_log(log_value).linear();
    j["linear"] = lin ? ordered_json(*lin) : ordered_json(nullptr);
    return j;
}

int cmd_zeros(const RunConfig& c, std::ostream& out, std::ostream& err) {
    if (!c.t_max) throw UsageError("zeros: --t-max is required");
    const auto start = std::chrono::steady_clock::now();
    FindZerosOptions opts;
    opts.threads = c.threads;
    const ZeroSequence zs = find_zeros(c.t_min, *c.t_max, c.precision, opts);
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    Sink sink(c.out, out, err);
    write_zero_table(sink.data(), zs);
    sink.close();
    std::ostream& s = sink.summary();
    s << "zeros: " << zs.size() << " in [" << shortest(zs.t_min()) << ", " << shortest(zs.t_max()) << "]\n";
    s << "certified: " << (zs.certified() ? "yes" : "no");
    if (const auto& cert = zs.certificate())
        s << " (Gram anchors " << cert->lower_index << ".." << cert->upper_index << ", " << cert->required_blocks
          << " Rosser blocks required, " << cert->rosser_blocks_below << " below, " << cert->rosser_blocks_above
          << " above)";
    s << "\nwall time: " << fixed(wall, 3) << " s\n";
    return exit_code::ok;
}

int cmd_gaps(const RunConfig& c, std::ostream& out, std::ostream& err) {
    const std::vector<double> checkpoints = c.checkpoints.empty() ? default_checkpoints() : c.checkpoints;
    const double top = *std::max_element(checkpoints.begin(), checkpoints.end());
    ZeroSequence zs;
    if (!c.zeros_file.empty()) {
        zs = read_zero_table(c.zeros_file);
    } else if (c.compute) {
        FindZerosOptions opts;
        opts.threads = c.threads;
        // a little headroom so the highest zero below `top` has its successor
        zs = find_zeros(c.t_min, std::min(top + 10.0, 1e7), c.precision, opts);
    } else {
        throw UsageError("gaps: give --zeros-file or --compute");
    }
    const GapTable table = proportion_table(zs, checkpoints);
    Sink sink(c.out, out, err);
    sink.data() << "T,N(T),proportion,close_count\n";
    for (const GapRow& row : table.rows)
        sink.data() << shortest(row.T) << ',' << row.N << ',' << row.proportion_text << ',' << row.close_count << '\n';
    sink.close();
    for (const GapRow& row : table.rows) {
        if (row.degenerate) sink.summary() << "T=" << shortest(row.T) << ": no zeros at or below T\n";
        if (row.tail_gap_unknown)
            sink.summary() << "T=" << shortest(row.T) << ": highest zero has no successor in the data\n";
    }
    return exit_code::ok;
}

std::int64_t parse_small_D(const std::string& text) {
    std::int64_t d = 0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), d);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size())
        throw UsageError("classgroup: -D must be an integer below 2^63");
    return d < 0 ? -d : d;
}

std::string join(const std::vector<std::int64_t>& v, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(v[i]);
    }
    return s;
}

int cmd_classgroup(const RunConfig& c, std::ostream& out, std::ostream& err) {
    if (!c.D) throw UsageError("classgroup: -D is required");
    const auto D = make_fundamental_discriminant(parse_small_D(*c.D));
    const ClassGroupReport r = genus_report(D);

    std::ostringstream text;
    text << "discriminant: " << D.discriminant() << "\n";
    text << "class number h: " << r.h << "\n";
    text << "reduced forms:";
    for (const auto& f : r.classes) text << ' ' << f;
    text << "\nprime divisors g: " << r.g << "\n";
    text << "genera: " << r.num_genera << "\n";
    text << "principal genus order p: " << r.p << "\n";
    text << "group structure: ";
    for (std::size_t i = 0; i < r.group_structure.size(); ++i) text << (i ? " x " : "") << "C" << r.group_structure[i];
    text << "\n";
    for (std::size_t gi = 0; gi < r.genus_residues.size(); ++gi) {
        text << "genus " << gi << ":";
        for (std::size_t i = 0; i < r.classes.size(); ++i)
            if (r.genus_index[i] == static_cast<int>(gi)) text << ' ' << r.classes[i];
        text << "  represents mod " << D.d() << ": {" << join(r.genus_residues[gi], ", ") << "}\n";
    }

    if (c.out.empty()) {
        out << text.str();
        return exit_code::ok;
    }
    Sink sink(c.out, out, err);
    sink.data() << "a,b,c,genus,residues\n";
    for (std::size_t i = 0; i < r.classes.size(); ++i) {
        const auto& f = r.classes[i];
        sink.data() << f.a() << ',' << f.b() << ',' << f.c() << ',' << r.genus_index[i] << ','
                    << join(r.genus_residues[r.genus_index[i]], " ") << '\n';
    }
    sink.close();
    sink.summary() << text.str();
    return exit_code::ok;
}

int cmd_rmt(const RunConfig& c, std::ostream& out, std::ostream& err) {
    const Figure1Grid grid = figure1_grid(c.x_max, c.steps);
    const double w = wigner_cdf(0.5);
    const double g = gaudin_cdf(0.5);
    Sink sink(c.out, out, err);
    sink.data() << figure1_csv(grid);
    sink.close();
    std::ostream& s = sink.summary();
    s << "wigner integral over [0, 1/2]: " << fixed(w, 5) << " (" << fixed(w, 10) << ")\n";
    s << "gaudin integral over [0, 1/2]: " << fixed(g, 5) << " (" << fixed(g, 10) << ")\n";
    s << "max |wigner - gaudin| on [0, 1/2]: " << fixed(grid.max_discrepancy_half, 6) << "\n";
    return exit_code::ok;
}

int cmd_bounds(const RunConfig& c, std::ostream& out, std::ostream& err) {
    if (c.D && c.log10_D) throw UsageError("bounds: give -D or --log10-D, not both");
    std::optional<double> log_D;
    if (c.D) log_D = log_of_decimal(*c.D);
    if (c.log10_D) log_D = *c.log10_D * std::log(10.0);
    if (c.h && !(*c.h >= 1.0)) throw DomainError("bounds: h must be at least 1");
    if (c.rho && !c.C) throw UsageError("bounds: --rho needs --C");
    if (!log_D && !c.C) throw UsageError("bounds: give -D, --log10-D or --C");

    ordered_json j;
    if (log_D) {
        const std::optional<double> log_h = c.h ? std::optional<double>(std::log(*c.h)) : std::nullopt;
        const BoundsReport r = bounds_report(*log_D, log_h, std::nullopt, std::nullopt, c.epsilon);
        j["D"] = log_value_json(r.D.log_value);
        j["h"] = r.h ? log_value_json(r.h->log_value) : ordered_json(nullptr);
        if (r.interval) {
            ordered_json iv;
            iv["log_T_lower"] = log_value_json(r.interval->log_lower);
            iv["log_T_upper"] = log_value_json(r.interval->log_upper);
            iv["nonempty"] = r.interval->nonempty;
            j["interval"] = iv;
        } else {
            j["interval"] = nullptr;
        }
        j["ci_bound"] = log_value_json(r.ci_bound.log_value);
        j["ci_bound_exceeds_one"] = r.ci_bound.log_value > 0.0;
        j["g_bound"] = log_value_json(r.g_bound.log_value);
        j["pboun"] = log_value_json(r.pboun.log_value);
        ordered_json ref;
        ref["epsilon"] = r.reference.epsilon;
        ref["siegel_shape"] = log_value_json(r.reference.siegel_log);
        ref["ggz_shape"] = r.reference.ggz_log;
        ref["note"] = "shapes only; the constants are ineffective or unspecified";
        j["reference_bounds"] = ref;
    }
    j["ci_bound_crossing_log10_D"] = ci_threshold_crossing() / std::log(10.0);
    j["pboun_crossing_log10_D"] = principal_genus_crossing() / std::log(10.0);
    if (c.C) {
        const double rho = c.rho.value_or(0.11);
        ordered_json cond;
        cond["C"] = *c.C;
        cond["rho"] = rho;
        const double log_T = contradiction_T_threshold(*c.C, rho);
        cond["note"] = "conditional on the hypothetical constant C";
        cond["T_threshold"] = log_value_json(log_T);
        cond["D_threshold"] = log_value_json(d_threshold_from_C(*c.C, rho));
        j["conditional_on_C"] = cond;
    }
    Sink sink(c.out, out, err);
    sink.data() << j.dump(2) << '\n';
    sink.close();
    return exit_code::ok;
}

}  // namespace

std::string exit_code_help() {
    return "Exit codes:\n"
           "  0  success\n"
           "  1  unexpected failure\n"
           "  2  usage error\n"
           "  3  discriminant is not fundamental\n"
           "  4  zero count could not be certified\n"
           "  5  height outside the zero data\n"
           "  6  Gaudin quadrature unstable\n"
           "  7  argument outside the domain of a computation\n"
           "  8  unreadable or malformed input or output file\n";
}

std::vector<double> parse_checkpoints(const std::string& text) {
    std::vector<double> v;
    std::string s = text;
    std::replace(s.begin(), s.end(), ',', ' ');
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) {
        double x = 0.0;
        const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), x);
        if (res.ec != std::errc() || res.ptr != tok.data() + tok.size() || !(x > 0.0))
            throw std::invalid_argument("bad checkpoint '" + tok + "'");
        v.push_back(x);
    }
    if (v.empty()) throw std::invalid_argument("empty checkpoint list");
    return v;
}

double log_of_decimal(const std::string& digits) {
    std::size_t i = 0;
    while (i < digits.size() && digits[i] == '0') ++i;
    const std::string s = digits.substr(i);
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
        throw std::invalid_argument("-D must be a positive decimal integer");
    const std::size_t lead = std::min<std::size_t>(s.size(), 17);
    double mantissa = 0.0;
    std::from_chars(s.data(), s.data() + lead, mantissa);
    return std::log(mantissa) + static_cast<double>(s.size() - lead) * std::log(10.0);
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        switch (config.command) {
            case Command::zeros: return cmd_zeros(config, out, err);
            case Command::gaps: return cmd_gaps(config, out, err);
            case Command::classgroup: return cmd_classgroup(config, out, err);
            case Command::rmt: return cmd_rmt(config, out, err);
            case Command::bounds: return cmd_bounds(config, out, err);
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return exit_code::usage;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << '\n';
        return exit_code::usage;
    } catch (const NotFundamental& e) {
        err << "not fundamental: " << e.what() << '\n';
        return exit_code::not_fundamental;
    } catch (const CertificationFailure& e) {
        err << "certification failed: " << e.what() << '\n';
        return exit_code::certification;
    } catch (const RangeError& e) {
        err << "range error: " << e.what() << '\n';
        return exit_code::range;
    } catch (const QuadratureUnstable& e) {
        err << "quadrature unstable: " << e.what() << '\n';
        return exit_code::quadrature;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << '\n';
        return exit_code::domain;
    } catch (const ParseError& e) {
        err << "malformed zero table: " << e.what() << '\n';
        return exit_code::input;
    } catch (const MonotonicityError& e) {
        err << "malformed zero table: " << e.what() << '\n';
        return exit_code::input;
    } catch (const IoError& e) {
        err << "i/o error: " << e.what() << '\n';
        return exit_code::input;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::failure;
    }
    return exit_code::failure;
}

}  // namespace closegap::cli
