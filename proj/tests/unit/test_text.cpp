#include <doctest.h>

#include "influence/text.hpp"

using namespace influence::text;

TEST_CASE("utf8 decode and encode round trip") {
    const std::string samples[] = {"hello", "Ñandú", "日本語", "mix 😀 emoji", ""};
    for (const auto& s : samples) {
        auto points = decode_utf8(s);
        CHECK(encode_utf8(points) == s);
    }
}

TEST_CASE("utf8 decoder replaces invalid bytes") {
    std::string bad = "a\xFFz";
    auto points = decode_utf8(bad);
    REQUIRE(points.size() == 3);
    CHECK(points[0] == U'a');
    CHECK(points[1] == 0xFFFD);
    CHECK(points[2] == U'z');

    std::string truncated = "\xE6\x97";
    auto t = decode_utf8(truncated);
    REQUIRE(t.size() == 1);
    CHECK(t[0] == 0xFFFD);

    std::string overlong = "\xC0\xAF";
    auto o = decode_utf8(overlong);
    for (char32_t cp : o) CHECK(cp == 0xFFFD);
}

TEST_CASE("codepoint count") {
    CHECK(codepoint_count("") == 0);
    CHECK(codepoint_count("abc") == 3);
    CHECK(codepoint_count("ñu") == 2);
    CHECK(codepoint_count("日本語") == 3);
}

TEST_CASE("lowercase handles ascii and non ascii letters") {
    CHECK(to_lower(U'A') == U'a');
    CHECK(to_lower(U'z') == U'z');
    CHECK(to_lower(U'Ñ') == U'ñ');
    CHECK(to_lower(U'Д') == U'д');
    CHECK(to_lower(U'7') == U'7');
    CHECK(to_lower(std::string("HOLA Ñandú ДА")) == "hola ñandú да");
}

TEST_CASE("punctuation and symbol classification") {
    CHECK(is_punct_or_symbol(U'.'));
    CHECK(is_punct_or_symbol(U','));
    CHECK(is_punct_or_symbol(U'!'));
    CHECK(is_punct_or_symbol(U'@'));
    CHECK(is_punct_or_symbol(U'#'));
    CHECK(is_punct_or_symbol(U'$'));
    CHECK(is_punct_or_symbol(U'€'));
    CHECK(is_punct_or_symbol(U'¡'));
    CHECK(is_punct_or_symbol(0x1F600));  // emoji
    CHECK_FALSE(is_punct_or_symbol(U'a'));
    CHECK_FALSE(is_punct_or_symbol(U'ñ'));
    CHECK_FALSE(is_punct_or_symbol(U'9'));
    CHECK_FALSE(is_punct_or_symbol(U'語'));
}

TEST_CASE("whitespace classification") {
    CHECK(is_space(U' '));
    CHECK(is_space(U'\t'));
    CHECK(is_space(U'\n'));
    CHECK(is_space(0x00A0));
    CHECK(is_space(0x2003));
    CHECK_FALSE(is_space(U'a'));
    CHECK_FALSE(is_space(U'_'));
}
