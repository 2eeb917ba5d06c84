#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "closegap/errors.hpp"
#include "closegap/zero_table.hpp"
#include "closegap/zeros.hpp"

using namespace closegap;

namespace {

std::string to_text(const ZeroSequence& zs) {
    std::ostringstream os;
    write_zero_table(os, zs);
    return os.str();
}

}  // namespace

TEST(ZeroTable, RoundTripIsByteExact) {
    const ZeroSequence zs = find_zeros(10, 2000, 1e-9);
    const std::string first = to_text(zs);
    const ZeroSequence back = ingest_zeros_text(first);
    EXPECT_EQ(to_text(back), first);
    ASSERT_EQ(back.size(), zs.size());
    for (std::size_t i = 0; i < zs.size(); ++i) EXPECT_NEAR(back[i], zs[i], 0.5e-9);
    EXPECT_DOUBLE_EQ(back.precision(), 1e-9);
    EXPECT_FALSE(back.certified());
}

TEST(ZeroTable, RoundTripThroughFile) {
    const ZeroSequence zs = find_zeros(100000, 100050, 1e-6);
    const auto path = std::filesystem::temp_directory_path() / "closegap_zero_table_test.txt";
    write_zero_table(path, zs);
    const ZeroSequence back = read_zero_table(path);
    std::ifstream in(path, std::ios::binary);
    std::stringstream raw;
    raw << in.rdbuf();
    EXPECT_EQ(to_text(back), raw.str());
    std::filesystem::remove(path);
}

TEST(ZeroTable, Format) {
    const ZeroSequence zs({14.134725141734693, 21.022039638771555}, 10, 25, 1e-9);
    EXPECT_EQ(to_text(zs), "# precision=1e-09\n14.134725142\n21.022039639\n");
    const ZeroSequence fine({14.134725141734693}, 10, 25, 1e-12);
    EXPECT_EQ(to_text(fine), "# precision=1e-12\n14.134725141735\n");
    EXPECT_EQ(ordinate_digits(1e-6), 9);
    EXPECT_EQ(ordinate_digits(1e-10), 10);
    EXPECT_EQ(ordinate_digits(1e-15), 12);
}

TEST(ZeroTable, AcceptsBlankLinesCommentsAndCRLF) {
    const ZeroSequence zs = ingest_zeros_text("# produced elsewhere\r\n# precision = 1e-7\r\n\r\n14.1347\r\n  21.0220 \n");
    ASSERT_EQ(zs.size(), 2u);
    EXPECT_DOUBLE_EQ(zs[0], 14.1347);
    EXPECT_DOUBLE_EQ(zs.precision(), 1e-7);
    EXPECT_DOUBLE_EQ(zs.t_min(), 14.1347);
    EXPECT_DOUBLE_EQ(zs.t_max(), 21.0220);
}

TEST(ZeroTable, MissingPrecisionUsesDefault) {
    EXPECT_DOUBLE_EQ(ingest_zeros_text("14.1\n21.0\n").precision(), kDefaultTablePrecision);
}

TEST(ZeroTable, EmptyTableIsDegenerate) {
    const ZeroSequence zs = ingest_zeros_text("# precision=1e-9\n\n");
    EXPECT_TRUE(zs.degenerate());
    EXPECT_TRUE(zs.empty());
}

TEST(ZeroTable, ParseErrorsReportLine) {
    try {
        ingest_zeros_text("# precision=1e-9\n14.1\nabc\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3u);
    }
    EXPECT_THROW(ingest_zeros_text("14.1 21.0\n"), ParseError);
    EXPECT_THROW(ingest_zeros_text("1.41e1\n"), ParseError);
    EXPECT_THROW(ingest_zeros_text("# precision=zero\n14.1\n"), ParseError);
}

TEST(ZeroTable, MonotonicityErrorReportsIndexAndLine) {
    try {
        ingest_zeros_text("14.1\n\n21.0\n21.0\n");
        FAIL();
    } catch (const MonotonicityError& e) {
        EXPECT_EQ(e.index(), 2u);
        EXPECT_EQ(e.line(), 4u);
    }
}

TEST(ZeroTable, MissingFileIsAnIoError) {
    EXPECT_THROW(read_zero_table("/nonexistent/dir/zeros.txt"), IoError);
}
