#include <CLI11.hpp>
#include <iostream>
#include <string>

#include "commands.hpp"

namespace cli = closegap::cli;

int main(int argc, char** argv) {
    CLI::App app{"Zeros of zeta, close gaps, class groups and related bounds"};
    app.footer(cli::exit_code_help());
    app.require_subcommand(1);

    cli::RunConfig cfg;
    std::string checkpoints;
    double t_max = 0.0, log10_D = 0.0, h = 0.0, C = 0.0, rho = 0.0;
    std::string D;

    auto* zeros = app.add_subcommand("zeros", "Locate and certify zeros on the critical line, write a zero table");
    zeros->add_option("--t-min", cfg.t_min, "Lower height")->capture_default_str();
    zeros->add_option("--t-max", t_max, "Upper height")->required();
    zeros->add_option("--precision", cfg.precision, "Bracket width for each ordinate")->capture_default_str();
    zeros->add_option("--threads", cfg.threads, "Worker threads (0 = all cores)")->capture_default_str();
    zeros->add_option("--out", cfg.out, "Output file (default stdout)");

    auto* gaps = app.add_subcommand("gaps", "Proportion of zeros with a close successor at each height");
    gaps->add_option("--checkpoints", checkpoints, "Heights, comma separated (default: the ten table heights)");
    auto* zf = gaps->add_option("--zeros-file", cfg.zeros_file, "Zero table to read");
    gaps->add_flag("--compute", cfg.compute, "Compute the zeros instead of reading them")->excludes(zf);
    gaps->add_option("--t-min", cfg.t_min, "Lower height when computing")->capture_default_str();
    gaps->add_option("--precision", cfg.precision, "Bracket width when computing")->capture_default_str();
    gaps->add_option("--threads", cfg.threads, "Worker threads when computing")->capture_default_str();
    gaps->add_option("--out", cfg.out, "Output CSV (default stdout)");

    auto* cg = app.add_subcommand("classgroup", "Class group and genus structure of discriminant -D");
    cg->add_option("-D", D, "Positive d with -d a fundamental discriminant")->required();
    cg->add_option("--out", cfg.out, "Output CSV of classes (summary still printed)");

    auto* rmt = app.add_subcommand("rmt", "Wigner and Gaudin spacing densities and their integrals over [0, 1/2]");
    rmt->add_option("--x-max", cfg.x_max, "Grid upper end, at most 3")->capture_default_str();
    rmt->add_option("--steps", cfg.steps, "Grid points")->capture_default_str();
    rmt->add_option("--out", cfg.out, "Output CSV (default stdout)");

    auto* bounds = app.add_subcommand("bounds", "Class number and height thresholds in log space (JSON)");
    bounds->set_help_flag("--help", "Print this help message and exit");
    auto* dopt = bounds->add_option("-D", D, "D as decimal digits");
    bounds->add_option("--log10-D", log10_D, "D as log10 D")->excludes(dopt);
    bounds->add_option("--h", h, "Class number h(-D)");
    auto* copt = bounds->add_option("--C", C, "Hypothetical absolute constant C");
    bounds->add_option("--rho", rho, "Close-zero proportion replacing 0.11")->needs(copt);
    bounds->add_option("--epsilon", cfg.epsilon, "Exponent loss in the Siegel-shape display")->capture_default_str();
    bounds->add_option("--out", cfg.out, "Output JSON (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : cli::exit_code::usage;
    }

    if (zeros->parsed()) {
        cfg.command = cli::Command::zeros;
        cfg.t_max = t_max;
    } else if (gaps->parsed()) {
        cfg.command = cli::Command::gaps;
        if (gaps->count("--checkpoints")) {
            try {
                cfg.checkpoints = cli::parse_checkpoints(checkpoints);
            } catch (const std::exception& e) {
                std::cerr << "usage error: " << e.what() << '\n';
                return cli::exit_code::usage;
            }
        }
    } else if (cg->parsed()) {
        cfg.command = cli::Command::classgroup;
        cfg.D = D;
    } else if (rmt->parsed()) {
        cfg.command = cli::Command::rmt;
    } else {
        cfg.command = cli::Command::bounds;
        if (bounds->count("-D")) cfg.D = D;
        if (bounds->count("--log10-D")) cfg.log10_D = log10_D;
        if (bounds->count("--h")) cfg.h = h;
        if (bounds->count("--C")) cfg.C = C;
        if (bounds->count("--rho")) cfg.rho = rho;
    }
    return cli::run(cfg, std::cout, std::cerr);
}
