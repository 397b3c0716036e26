#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>

#include "gda/trace.hpp"
#include "helpers.hpp"

namespace fs = std::filesystem;

TEST_SUITE_BEGIN("trace");

namespace {

fs::path temp_dir() {
    const auto dir = fs::temp_directory_path() / "gda-trace-tests";
    fs::create_directories(dir);
    return dir;
}

fs::path write_file(const std::string& name, const std::string& content) {
    const auto path = temp_dir() / name;
    std::ofstream out(path, std::ios::binary);
    out << content;
    return path;
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

gda::TraceErrorKind kind_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const gda::TraceError& e) {
        return e.kind();
    }
    FAIL("expected a TraceError");
    return gda::TraceErrorKind::io;
}

const gda::SystemConfig kConfig = helpers::make_config(2, 1);

}  // namespace

TEST_CASE("well-formed pue trace loads with the right shape and values") {
    const auto path = write_file("ok_pue.csv",
                                 "slot,dc0,dc1\n"
                                 "0,1.25,1.5\n"
                                 "1,1.3,1.45\n"
                                 "2,1.1,1.2\n");
    const auto series = gda::load_trace(path, gda::TraceKind::pue, kConfig);
    CHECK(series.kind == gda::TraceKind::pue);
    CHECK(series.values.rows() == 3);
    CHECK(series.values.cols() == 2);
    CHECK(series.values(0, 0) == 1.25);
    CHECK(series.values(2, 1) == 1.2);
}

TEST_CASE("pue below one is a range error naming the location") {
    const auto path = write_file("bad_range.csv",
                                 "slot,dc0,dc1\n"
                                 "0,1.25,1.5\n"
                                 "1,0.8,1.45\n");
    CHECK(kind_of([&] { (void)gda::load_trace(path, gda::TraceKind::pue, kConfig); }) ==
          gda::TraceErrorKind::range);
    try {
        (void)gda::load_trace(path, gda::TraceKind::pue, kConfig);
    } catch (const gda::TraceError& e) {
        CHECK(e.line() == 3);
        CHECK(std::string(e.what()).find("column 1") != std::string::npos);
    }
}

TEST_CASE("negative price is a range error, zero price is fine") {
    const auto bad = write_file("bad_price.csv", "slot,dc0,dc1\n0,5.0,-0.1\n");
    CHECK(kind_of([&] { (void)gda::load_trace(bad, gda::TraceKind::price_weight, kConfig); }) ==
          gda::TraceErrorKind::range);
    const auto ok = write_file("zero_price.csv", "slot,dc0,dc1\n0,0,0\n");
    CHECK(gda::load_trace(ok, gda::TraceKind::price_weight, kConfig).values(0, 1) == 0.0);
}

TEST_CASE("an extra column is a shape error, in data rows and in the header") {
    const auto wide_row = write_file("wide_row.csv",
                                     "slot,dc0,dc1\n"
                                     "0,1.1,1.2,1.3\n");
    CHECK(kind_of([&] { (void)gda::load_trace(wide_row, gda::TraceKind::pue, kConfig); }) ==
          gda::TraceErrorKind::shape);
    const auto wide_header = write_file("wide_header.csv", "slot,dc0,dc1,dc2\n0,1.1,1.2\n");
    CHECK(kind_of([&] { (void)gda::load_trace(wide_header, gda::TraceKind::pue, kConfig); }) ==
          gda::TraceErrorKind::shape);
}

TEST_CASE("a hole in the slot sequence is a gap error") {
    const auto skipped = write_file("gap.csv",
                                    "slot,dc0,dc1\n"
                                    "0,1.1,1.2\n"
                                    "2,1.1,1.2\n");
    CHECK(kind_of([&] { (void)gda::load_trace(skipped, gda::TraceKind::pue, kConfig); }) ==
          gda::TraceErrorKind::gap);

    const auto late_start = write_file("late_start.csv", "slot,dc0,dc1\n1,1.1,1.2\n");
    CHECK(kind_of([&] { (void)gda::load_trace(late_start, gda::TraceKind::pue, kConfig); }) ==
          gda::TraceErrorKind::gap);
}

TEST_CASE("junk cells are parse errors carrying the line number") {
    const auto junk = write_file("junk.csv",
                                 "slot,dc0,dc1\n"
                                 "0,1.1,1.2\n"
                                 "1,oops,1.2\n");
    try {
        (void)gda::load_trace(junk, gda::TraceKind::pue, kConfig);
        FAIL("expected a TraceError");
    } catch (const gda::TraceError& e) {
        CHECK(e.kind() == gda::TraceErrorKind::parse);
        CHECK(e.line() == 3);
        CHECK(std::string(e.what()).find("oops") != std::string::npos);
    }
}

TEST_CASE("missing header or wrong first column is a parse error") {
    const auto headerless = write_file("headerless.csv", "0,1.1,1.2\n");
    CHECK(kind_of([&] { (void)gda::load_trace(headerless, gda::TraceKind::pue, kConfig); }) ==
          gda::TraceErrorKind::parse);
    const auto empty = write_file("empty.csv", "");
    CHECK(kind_of([&] { (void)gda::load_trace(empty, gda::TraceKind::pue, kConfig); }) ==
          gda::TraceErrorKind::parse);
}

TEST_CASE("a missing file is an io error") {
    CHECK(kind_of([&] {
              (void)gda::load_trace(temp_dir() / "no_such_file.csv", gda::TraceKind::pue,
                                    kConfig);
          }) == gda::TraceErrorKind::io);
}

TEST_CASE("load then write reproduces the file byte for byte") {
    // Values chosen to be fixed points of shortest round-trip formatting.
    const std::string original =
        "slot,dc0,dc1\n"
        "0,1.25,1.5\n"
        "1,1.3,1.45\n"
        "2,1.0625,1.2\n";
    const auto path = write_file("roundtrip.csv", original);
    const auto series = gda::load_trace(path, gda::TraceKind::pue, kConfig);
    const auto out_path = temp_dir() / "roundtrip_out.csv";
    gda::write_trace(out_path, series, kConfig.dc_ids);
    CHECK(read_file(out_path) == original);
}

TEST_CASE("write then load is the identity on the series") {
    gda::RandomStream stream(31);
    gda::TraceSeries series{gda::TraceKind::price_weight, gda::Matrix(5, 2)};
    for (std::size_t t = 0; t < 5; ++t)
        for (std::size_t j = 0; j < 2; ++j)
            series.values(t, j) = stream.uniform_in(0.0, 99.0);

    const auto path = temp_dir() / "written.csv";
    gda::write_trace(path, series, kConfig.dc_ids);
    const auto reloaded = gda::load_trace(path, gda::TraceKind::price_weight, kConfig);
    CHECK(reloaded.values == series.values);

    // And a second write emits identical bytes.
    const auto again = temp_dir() / "written_again.csv";
    gda::write_trace(again, reloaded, kConfig.dc_ids);
    CHECK(read_file(again) == read_file(path));
}

TEST_CASE("crlf line endings parse like lf") {
    const auto path = write_file("crlf.csv", "slot,dc0,dc1\r\n0,1.25,1.5\r\n");
    const auto series = gda::load_trace(path, gda::TraceKind::pue, kConfig);
    CHECK(series.values(0, 1) == 1.5);
}

TEST_CASE("writer refuses mismatched dc id lists") {
    gda::TraceSeries series{gda::TraceKind::pue, gda::Matrix(1, 2, 1.0)};
    CHECK_THROWS_AS(gda::write_trace(temp_dir() / "bad.csv", series, {"only-one"}),
                    gda::TraceError);
}

TEST_SUITE_END();
