#include <doctest.h>

#include "influence/preprocess.hpp"
#include "test_util.hpp"

using namespace influence;

TEST_CASE("occurrence tokens lowercase, strip and filter") {
    auto tokens = tokenize_occurrence("Check http://x.co @Bob!! #Cars rock, don't stop; a an");
    CHECK(tokens == std::vector<std::string>{"check", "@bob", "#cars", "rock", "dont",
                                             "stop"});
}

TEST_CASE("occurrence tokens keep one marker only") {
    CHECK(tokenize_occurrence("@ab ok") == std::vector<std::string>{"@ab"});
    CHECK(tokenize_occurrence("#x yz") == std::vector<std::string>{"#x"});
    CHECK(tokenize_occurrence("##double") == std::vector<std::string>{"#double"});
    CHECK(tokenize_occurrence("@@!") == std::vector<std::string>{});
    CHECK(tokenize_occurrence("ab cd efg") == std::vector<std::string>{"efg"});
}

TEST_CASE("occurrence tokens drop url chunks") {
    auto tokens = tokenize_occurrence("read https://example.com/a?b=1 now www.foo.es HTTP://UP");
    CHECK(tokens == std::vector<std::string>{"read", "now"});
}

TEST_CASE("occurrence tokens handle non ascii text") {
    CHECK(tokenize_occurrence("Ñandú corre rápido…") ==
          std::vector<std::string>{"ñandú", "corre", "rápido"});
    CHECK(tokenize_occurrence("１２３ 日本語です") ==
          std::vector<std::string>{"１２３", "日本語です"});
}

TEST_CASE("cooccurrence tokens strip markers and stop words") {
    StopList stops = {"the", "and"};
    CHECK(tokenize_cooccurrence("The car AND the road", stops) ==
          std::vector<std::string>{"car", "road"});
    CHECK(tokenize_cooccurrence("@bob loves #cars", stops) ==
          std::vector<std::string>{"bob", "loves", "cars"});
    // The marker comes off before the length check.
    CHECK(tokenize_cooccurrence("#ab stays? no", stops) ==
          std::vector<std::string>{"stays"});
    CHECK(tokenize_cooccurrence("visit http://a.co today", stops) ==
          std::vector<std::string>{"visit", "today"});
}

TEST_CASE("entities are pulled out of the text") {
    auto e = extract_entities("Hey @Ana and @bob see #Turbo #GP http://x.co/Y");
    CHECK(e.mentions == std::vector<std::string>{"ana", "bob"});
    CHECK(e.hashtags == std::vector<std::string>{"turbo", "gp"});
    CHECK(e.urls == std::vector<std::string>{"http://x.co/y"});

    auto none = extract_entities("plain words only");
    CHECK(none.mentions.empty());
    CHECK(none.hashtags.empty());
    CHECK(none.urls.empty());
}

TEST_CASE("stoplist files load with comments skipped") {
    testutil::TempDir dir;
    auto path = dir.file("stops.txt");
    testutil::write_file(path, "# comment\nthe\n\nand\nTHE\n");
    auto stops = load_stoplist(path);
    CHECK(stops.size() == 2);
    CHECK(stops.count("the") == 1);
    CHECK(stops.count("and") == 1);
}

TEST_CASE("builtin stoplists cover both languages") {
    auto en = builtin_stoplist(Language::en);
    auto es = builtin_stoplist(Language::es);
    CHECK(en.count("the") == 1);
    CHECK(en.count("and") == 1);
    CHECK(es.count("de") == 1);
    CHECK(es.count("la") == 1);
    CHECK(builtin_stoplist(Language::other).empty());

    auto merged = merge_stoplists(en, es);
    CHECK(merged.size() == en.size() + es.size());
    CHECK(merged.count("the") == 1);
    CHECK(merged.count("de") == 1);
}

TEST_CASE("shipped stoplist files match the builtin lists") {
    auto en_file = load_stoplist(testutil::data_file("stoplists/en.txt"));
    auto es_file = load_stoplist(testutil::data_file("stoplists/es.txt"));
    CHECK(en_file == builtin_stoplist(Language::en));
    CHECK(es_file == builtin_stoplist(Language::es));
}
