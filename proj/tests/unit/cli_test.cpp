#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "closegap/zero_table.hpp"
#include "commands.hpp"

namespace cli = closegap::cli;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(const cli::RunConfig& c) {
    std::ostringstream out, err;
    const int code = cli::run(c, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) { return std::filesystem::temp_directory_path() / name; }

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST(CliZeros, WritesTableAndSummary) {
    cli::RunConfig c;
    c.command = cli::Command::zeros;
    c.t_max = 100;
    const Result r = run(c);
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(closegap::ingest_zeros_text(r.out).size(), 29u);
    EXPECT_NE(r.err.find("zeros: 29"), std::string::npos);
    EXPECT_NE(r.err.find("certified: yes"), std::string::npos);
}

TEST(CliZeros, FileOutputRoundTripsAndIgnoresThreadCount) {
    cli::RunConfig c;
    c.command = cli::Command::zeros;
    c.t_min = 1000;
    c.t_max = 3000;
    c.threads = 1;
    c.out = temp_file("closegap_cli_a.txt").string();
    ASSERT_EQ(run(c).code, 0);
    c.threads = 3;
    c.out = temp_file("closegap_cli_b.txt").string();
    ASSERT_EQ(run(c).code, 0);
    const std::string a = slurp(temp_file("closegap_cli_a.txt"));
    EXPECT_EQ(a, slurp(temp_file("closegap_cli_b.txt")));
    std::ostringstream again;
    closegap::write_zero_table(again, closegap::ingest_zeros_text(a));
    EXPECT_EQ(again.str(), a);
    std::filesystem::remove(temp_file("closegap_cli_a.txt"));
    std::filesystem::remove(temp_file("closegap_cli_b.txt"));
}

TEST(CliZeros, BelowFloorIsDomainError) {
    cli::RunConfig c;
    c.command = cli::Command::zeros;
    c.t_max = 5;
    EXPECT_EQ(run(c).code, cli::exit_code::domain);
    c.t_max.reset();
    EXPECT_EQ(run(c).code, cli::exit_code::usage);
}

TEST(CliGaps, ComputedTableHasHeaderAndRows) {
    cli::RunConfig c;
    c.command = cli::Command::gaps;
    c.compute = true;
    c.precision = 1e-6;
    c.checkpoints = {1000, 10000};
    const Result r = run(c);
    ASSERT_EQ(r.code, 0) << r.err;
    std::istringstream in(r.out);
    std::string header, row1, row2;
    std::getline(in, header);
    std::getline(in, row1);
    std::getline(in, row2);
    EXPECT_EQ(header, "T,N(T),proportion,close_count");
    EXPECT_EQ(row1.rfind("1000,649,0.", 0), 0u);
    EXPECT_EQ(row2.rfind("10000,10142,0.", 0), 0u);
}

TEST(CliGaps, ErrorsMapToExitCodes) {
    cli::RunConfig c;
    c.command = cli::Command::gaps;
    EXPECT_EQ(run(c).code, cli::exit_code::usage);
    c.zeros_file = "/nonexistent/zeros.txt";
    EXPECT_EQ(run(c).code, cli::exit_code::input);

    const auto path = temp_file("closegap_cli_small.txt");
    std::ofstream(path) << "# precision=1e-9\n14.134725142\n21.022039639\n25.010857580\n";
    c.zeros_file = path.string();
    c.checkpoints = {100};
    EXPECT_EQ(run(c).code, cli::exit_code::range);
    c.checkpoints = {22};
    const Result ok = run(c);
    EXPECT_EQ(ok.code, 0);
    EXPECT_NE(ok.out.find("22,2,"), std::string::npos);

    std::ofstream(path) << "14.1\n13.0\n";
    EXPECT_EQ(run(c).code, cli::exit_code::input);
    std::filesystem::remove(path);
}

TEST(CliGaps, CheckpointParsing) {
    EXPECT_EQ(cli::parse_checkpoints("1000000"), (std::vector<double>{1000000}));
    EXPECT_EQ(cli::parse_checkpoints("500000, 4992381."), (std::vector<double>{500000, 4992381}));
    EXPECT_THROW(cli::parse_checkpoints(""), std::invalid_argument);
    EXPECT_THROW(cli::parse_checkpoints(" , "), std::invalid_argument);
    EXPECT_THROW(cli::parse_checkpoints("12x"), std::invalid_argument);
    EXPECT_THROW(cli::parse_checkpoints("-5"), std::invalid_argument);
}

TEST(CliClassgroup, WorkedExample) {
    cli::RunConfig c;
    c.command = cli::Command::classgroup;
    c.D = "39";
    const Result r = run(c);
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("class number h: 4"), std::string::npos);
    EXPECT_NE(r.out.find("reduced forms: (1,1,10) (2,-1,5) (2,1,5) (3,3,4)"), std::string::npos);
    EXPECT_NE(r.out.find("genera: 2"), std::string::npos);
    EXPECT_NE(r.out.find("group structure: C4"), std::string::npos);
    EXPECT_NE(r.out.find("{1, 4, 10, 16, 22, 25}"), std::string::npos);
    EXPECT_NE(r.out.find("{2, 5, 8, 11, 20, 32}"), std::string::npos);
}

TEST(CliClassgroup, CsvAndErrors) {
    cli::RunConfig c;
    c.command = cli::Command::classgroup;
    c.D = "163";
    const Result r163 = run(c);
    EXPECT_NE(r163.out.find("class number h: 1"), std::string::npos);
    c.D = "9";
    EXPECT_EQ(run(c).code, cli::exit_code::not_fundamental);
    c.D = "2";
    EXPECT_EQ(run(c).code, cli::exit_code::domain);
    c.D = "abc";
    EXPECT_EQ(run(c).code, cli::exit_code::usage);
    c.D = "39";
    c.out = temp_file("closegap_cli_cg.csv").string();
    ASSERT_EQ(run(c).code, 0);
    EXPECT_EQ(slurp(c.out),
              "a,b,c,genus,residues\n"
              "1,1,10,0,1 4 10 16 22 25\n"
              "2,-1,5,1,2 5 8 11 20 32\n"
              "2,1,5,1,2 5 8 11 20 32\n"
              "3,3,4,0,1 4 10 16 22 25\n");
    std::filesystem::remove(c.out);
}

TEST(CliRmt, CsvAndIntegrals) {
    cli::RunConfig c;
    c.command = cli::Command::rmt;
    c.x_max = 3;
    c.steps = 512;
    const Result r = run(c);
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 513);
    EXPECT_NE(r.out.find("\n0.000000,0.0000000000,"), std::string::npos);
    EXPECT_NE(r.err.find("wigner integral over [0, 1/2]: 0.11200"), std::string::npos);
    EXPECT_NE(r.err.find("gaudin integral over [0, 1/2]: 0.11"), std::string::npos);
    c.steps = 5;
    EXPECT_EQ(run(c).code, cli::exit_code::domain);
}

TEST(CliBounds, NonemptyIntervalAtFiveHundredDigits) {
    cli::RunConfig c;
    c.command = cli::Command::bounds;
    c.log10_D = 500;
    c.h = 1;
    const Result r = run(c);
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_TRUE(j["interval"]["nonempty"].get<bool>());
    EXPECT_TRUE(j["D"]["linear"].is_null());
    EXPECT_NEAR(j["D"]["log10"].get<double>(), 500, 1e-9);
    EXPECT_FALSE(j.contains("conditional_on_C"));
}

TEST(CliBounds, ThresholdBelowOneAt445Digits) {
    cli::RunConfig c;
    c.command = cli::Command::bounds;
    c.log10_D = 445;
    c.h = 1;
    const auto j = nlohmann::json::parse(run(c).out);
    EXPECT_LT(j["ci_bound"]["log"].get<double>(), 0);
    EXPECT_FALSE(j["ci_bound_exceeds_one"].get<bool>());
    const double crossing = j["ci_bound_crossing_log10_D"].get<double>();
    EXPECT_GT(crossing, 445);
    EXPECT_LT(crossing, 446);
}

TEST(CliBounds, ConditionalOnC) {
    cli::RunConfig c;
    c.command = cli::Command::bounds;
    c.C = 0.0175;
    c.rho = 0.11;
    const auto j = nlohmann::json::parse(run(c).out);
    const auto& cond = j["conditional_on_C"];
    EXPECT_NEAR(cond["T_threshold"]["log"].get<double>(), std::pow(2 * M_PI * 0.0175 / 0.11, 5), 1e-14);
    EXPECT_NEAR(cond["T_threshold"]["linear"].get<double>(), std::exp(1.0), 0.01);
    EXPECT_NE(cond["note"].get<std::string>().find("conditional"), std::string::npos);
}

TEST(CliBounds, DigitsInputAndErrors) {
    cli::RunConfig c;
    c.command = cli::Command::bounds;
    c.D = "1" + std::string(500, '0');
    const auto j = nlohmann::json::parse(run(c).out);
    EXPECT_NEAR(j["D"]["log10"].get<double>(), 500, 1e-9);
    EXPECT_NEAR(cli::log_of_decimal("123456789012345678901234567890"), std::log(1.2345678901234568e29), 1e-12);
    c.log10_D = 10;
    EXPECT_EQ(run(c).code, cli::exit_code::usage);
    c.D.reset();
    c.log10_D = 0.2;
    EXPECT_EQ(run(c).code, cli::exit_code::domain);
    cli::RunConfig none;
    none.command = cli::Command::bounds;
    EXPECT_EQ(run(none).code, cli::exit_code::usage);
}

TEST(CliHelp, ListsExitCodes) {
    const std::string h = cli::exit_code_help();
    for (const char* code : {"0", "2", "3", "4", "5", "6", "7", "8"}) EXPECT_NE(h.find(std::string("  ") + code + "  "), std::string::npos);
}
