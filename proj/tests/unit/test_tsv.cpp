#include <doctest.h>

#include <cstdlib>

#include "influence/tsv.hpp"
#include "test_util.hpp"

using namespace influence::tsv;

TEST_CASE("split and join fields") {
    auto fields = split_fields("a\tb\t\tc");
    REQUIRE(fields.size() == 4);
    CHECK(fields[0] == "a");
    CHECK(fields[2] == "");
    CHECK(join_fields({"a", "b", "", "c"}) == "a\tb\t\tc");
    CHECK(split_fields("").size() == 1);
}

TEST_CASE("read_lines strips carriage returns and keeps blanks") {
    testutil::TempDir dir;
    auto path = dir.file("lines.txt");
    testutil::write_file(path, "one\r\ntwo\n\nthree");
    auto lines = read_lines(path);
    REQUIRE(lines.size() == 4);
    CHECK(lines[0] == "one");
    CHECK(lines[1] == "two");
    CHECK(lines[2] == "");
    CHECK(lines[3] == "three");
}

TEST_CASE("strict numeric parsing") {
    CHECK(parse_double("1.5").value() == 1.5);
    CHECK(parse_double("-2e3").value() == -2000.0);
    CHECK_FALSE(parse_double("").has_value());
    CHECK_FALSE(parse_double("abc").has_value());
    CHECK_FALSE(parse_double("1.5x").has_value());
    CHECK_FALSE(parse_double(" 1.5").has_value());

    CHECK(parse_int("42").value() == 42);
    CHECK(parse_int("-7").value() == -7);
    CHECK_FALSE(parse_int("").has_value());
    CHECK_FALSE(parse_int("4.2").has_value());
    CHECK_FALSE(parse_int("9x").has_value());
}

TEST_CASE("format_double round trips exactly") {
    const double values[] = {0.0,    1.0,     0.1,       1.0 / 3.0, 2.0 / 3.0,
                             1e300,  -1e-300, 0.6180339887498949,
                             12345.0, -0.625};
    for (double v : values) {
        std::string text = format_double(v);
        double back = std::strtod(text.c_str(), nullptr);
        CHECK(back == v);
    }
    CHECK(format_double(2.0) == "2");
    CHECK(format_double(0.5) == "0.5");
}
