#include <doctest.h>

#include <algorithm>

#include "influence/corpus.hpp"
#include "influence/error.hpp"
#include "test_util.hpp"

using namespace influence;
using testutil::TempDir;
using testutil::write_file;

namespace {

const char* kLabels =
    "user_id\tdomain\tlabel\tsplit\n"
    "u1\tautomotive\tinfluencer\ttrain\n"
    "u2\tautomotive\tnon_influencer\ttrain\n"
    "u3\tautomotive\tinfluencer\ttest\n"
    "u4\tbanking\tnon_influencer\ttrain\n";

const char* kTweetsTsv =
    "t1\tu1\ten\t1000\t\t\t0\tEngines roar loudly\n"
    "t2\tu1\tes\t2000\t40.4\t-3.7\t0\tMotores y ruedas\n"
    "t3\tu2\ten\t\t\t\t1\tRT @u1 Engines roar loudly\n"
    "t4\tu3\tother\t4000\t\t\t0\t12345 67890\n"
    "t5\tu4\ten\t5000\t\t\t0\tBanks and loans\n";

std::string labels_path(const TempDir& dir) {
    auto p = dir.file("labels.tsv");
    write_file(p, kLabels);
    return p;
}

std::string tweets_path(const TempDir& dir, const std::string& content) {
    auto p = dir.file("tweets.tsv");
    write_file(p, content);
    return p;
}

}  // namespace

TEST_CASE("loads tab separated tweets and labels") {
    TempDir dir;
    LoadReport report;
    auto corpus = load_corpus(tweets_path(dir, kTweetsTsv), labels_path(dir), {}, &report);

    CHECK(report.tweets_loaded == 5);
    CHECK(report.users_loaded == 4);
    CHECK(report.malformed.empty());
    CHECK(corpus.tweet_count() == 5);
    CHECK(corpus.user_count() == 4);

    const Tweet& t2 = corpus.tweet("t2");
    CHECK(t2.user_id == "u1");
    CHECK(t2.language == Language::es);
    CHECK(t2.timestamp.value() == 2000);
    REQUIRE(t2.geolocation.has_value());
    CHECK(t2.geolocation->lat == 40.4);
    CHECK(t2.geolocation->lon == -3.7);
    CHECK_FALSE(t2.is_retweet);

    const Tweet& t3 = corpus.tweet("t3");
    CHECK(t3.is_retweet);
    CHECK_FALSE(t3.timestamp.has_value());

    const UserRecord& u1 = corpus.user("u1");
    CHECK(u1.label == Label::influencer);
    CHECK(u1.tweet_ids == std::vector<std::string>{"t1", "t2"});
    CHECK(corpus.user("u4").domain == Domain::banking);
    CHECK(corpus.has_user("u2"));
    CHECK_FALSE(corpus.has_user("nobody"));
}

TEST_CASE("loads JSON lines tweets with entities") {
    TempDir dir;
    std::string jsonl =
        R"({"tweet_id": "t1", "user_id": "u1", "language": "en", "text": "Go #Fast", "hashtags": ["Fast"], "mentions": [], "urls": []})"
        "\n"
        R"({"tweet_id": 42, "user_id": "u2", "text": "numeric ids work", "timestamp": 123, "is_retweet": true})"
        "\n";
    auto p = dir.file("tweets.jsonl");
    write_file(p, jsonl);

    LoadReport report;
    auto corpus = load_corpus(p, labels_path(dir), {}, &report);
    CHECK(report.malformed.empty());
    CHECK(corpus.tweet_count() == 2);

    const Tweet& t1 = corpus.tweet("t1");
    CHECK(t1.entities_present);
    CHECK(t1.hashtags == std::vector<std::string>{"fast"});
    CHECK(t1.mentions.empty());

    const Tweet& t42 = corpus.tweet("42");
    CHECK(t42.user_id == "u2");
    CHECK(t42.is_retweet);
    CHECK(t42.timestamp.value() == 123);
    CHECK_FALSE(t42.entities_present);
    CHECK(t42.language == Language::other);
}

TEST_CASE("malformed rows are collected with file and line") {
    TempDir dir;
    std::string bad =
        "t1\tu1\ten\t1000\t\t\t0\tfine\n"
        "t2\tu1\tzz\t1000\t\t\t0\tbad language\n"
        "t3\tu1\ten\tnoon\t\t\t0\tbad timestamp\n"
        "t4\tu1\ten\t1000\t40.4\t\t0\tlat without lon\n"
        "t5\tu1\ten\t1000\t\t\t7\tbad flag\n"
        "t6\tu1\ten\t1000\t0\ttoo few\n"
        "t7\tu1\ten\t1000\t\t\t0\t" +
        std::string(561, 'x') + "\n";
    LoadReport report;
    auto corpus = load_corpus(tweets_path(dir, bad), labels_path(dir), {}, &report);
    CHECK(corpus.tweet_count() == 1);
    REQUIRE(report.malformed.size() == 6);
    CHECK(report.malformed[0].line == 2);
    CHECK(report.malformed[0].reason.find("language") != std::string::npos);
    CHECK(report.malformed[5].reason.find("560") != std::string::npos);

    LoadOptions strict;
    strict.strict = true;
    CHECK_THROWS_AS(load_corpus(tweets_path(dir, bad), labels_path(dir), strict, nullptr),
                    DataError);
}

TEST_CASE("duplicate and orphan tweets are hard errors") {
    TempDir dir;
    std::string dup =
        "t1\tu1\ten\t\t\t\t0\tfirst\n"
        "t1\tu2\ten\t\t\t\t0\tsecond\n";
    CHECK_THROWS_WITH_AS(load_corpus(tweets_path(dir, dup), labels_path(dir), {}, nullptr),
                         doctest::Contains("duplicate tweet 't1'"), DataError);

    std::string orphan = "t9\tghost\ten\t\t\t\t0\twho wrote this\n";
    CHECK_THROWS_WITH_AS(
        load_corpus(tweets_path(dir, orphan), labels_path(dir), {}, nullptr),
        doctest::Contains("unknown user 'ghost'"), DataError);
}

TEST_CASE("duplicate users in the labels table are rejected") {
    TempDir dir;
    auto labels = dir.file("labels.tsv");
    write_file(labels,
               "user_id\tdomain\tlabel\tsplit\n"
               "u1\tautomotive\tinfluencer\ttrain\n"
               "u1\tbanking\tnon_influencer\ttest\n");
    auto tweets = tweets_path(dir, "");
    CHECK_THROWS_WITH_AS(load_corpus(tweets, labels, {}, nullptr),
                         doctest::Contains("duplicate user 'u1'"), DataError);
}

TEST_CASE("manifest mismatches become warnings") {
    TempDir dir;
    auto manifest = dir.file("manifest.tsv");
    write_file(manifest,
               "domain\tsplit\tusers\n"
               "automotive\ttrain\t2\n"
               "banking\ttrain\t9\n");
    LoadOptions options;
    options.manifest_path = manifest;
    LoadReport report;
    load_corpus(tweets_path(dir, kTweetsTsv), labels_path(dir), options, &report);
    REQUIRE(report.warnings.size() == 1);
    CHECK(report.warnings[0].find("banking train") != std::string::npos);
    CHECK(report.warnings[0].find("9") != std::string::npos);
}

TEST_CASE("digest ignores input row order") {
    TempDir dir;
    auto corpus_a = load_corpus(tweets_path(dir, kTweetsTsv), labels_path(dir));

    std::string reordered =
        "t5\tu4\ten\t5000\t\t\t0\tBanks and loans\n"
        "t3\tu2\ten\t\t\t\t1\tRT @u1 Engines roar loudly\n"
        "t1\tu1\ten\t1000\t\t\t0\tEngines roar loudly\n"
        "t4\tu3\tother\t4000\t\t\t0\t12345 67890\n"
        "t2\tu1\tes\t2000\t40.4\t-3.7\t0\tMotores y ruedas\n";
    TempDir dir2;
    auto corpus_b = load_corpus(tweets_path(dir2, reordered), labels_path(dir2));

    CHECK(corpus_a.digest() == corpus_b.digest());
    CHECK(corpus_a.digest() != 0);
}

TEST_CASE("save and reload reproduces the corpus") {
    TempDir dir;
    auto corpus = load_corpus(tweets_path(dir, kTweetsTsv), labels_path(dir));

    auto tweets_out = dir.file("round.jsonl");
    auto labels_out = dir.file("round_labels.tsv");
    save_corpus(corpus, tweets_out, labels_out);
    auto again = load_corpus(tweets_out, labels_out);

    CHECK(again.digest() == corpus.digest());
    CHECK(again.tweet_count() == corpus.tweet_count());
    CHECK(again.user_count() == corpus.user_count());
    CHECK(again.tweet("t2").geolocation->lon == -3.7);
}

TEST_CASE("partition filters by domain, split and language") {
    TempDir dir;
    auto corpus = load_corpus(tweets_path(dir, kTweetsTsv), labels_path(dir));

    auto train = partition(corpus, Domain::automotive, Split::train);
    CHECK(train.user_ids() == std::vector<std::string>{"u1", "u2"});
    CHECK(train.tweet_count() == 3);
    CHECK(train.tweets_of("u1").size() == 2);
    CHECK(train.tweets_of("u3").empty());

    auto train_en = partition(corpus, Domain::automotive, Split::train, Language::en);
    CHECK(train_en.tweet_count() == 2);
    CHECK(train_en.tweets_of("u1").size() == 1);
    CHECK(train_en.tweets_of("u1")[0]->tweet_id == "t1");
    // Users stay in the slice even when the language filter leaves them
    // without tweets.
    CHECK(train_en.user_ids() == std::vector<std::string>{"u1", "u2"});

    auto test = partition(corpus, Domain::automotive, Split::test);
    CHECK(test.user_ids() == std::vector<std::string>{"u3"});

    auto narrowed = partition(train, Domain::automotive, Split::train, Language::es);
    CHECK(narrowed.tweet_count() == 1);

    auto same = partition(train_en, Domain::automotive, Split::train);
    CHECK(same.tweet_count() == train_en.tweet_count());
    CHECK_THROWS_WITH_AS(partition(train_en, Domain::automotive, Split::train, Language::es),
                         doctest::Contains("cannot narrow"), DataError);
}

TEST_CASE("profile table parses optional columns") {
    TempDir dir;
    auto p = dir.file("profiles.tsv");
    write_file(p,
               "user_id\tfollower_count\tfollowee_count\tmutual_count\thas_picture\t"
               "recent_follower_ids\tklout_score\n"
               "u1\t100\t50\t25\t1\t11,12,13\t61.5\n"
               "u2\t\t\t\t\t\t\n");
    auto profiles = load_profiles(p);
    REQUIRE(profiles.size() == 2);
    CHECK(profiles.at("u1").follower_count.value() == 100);
    CHECK(profiles.at("u1").mutual_count.value() == 25);
    CHECK(profiles.at("u1").has_picture.value());
    CHECK(profiles.at("u1").recent_follower_ids ==
          std::vector<std::int64_t>{11, 12, 13});
    CHECK(profiles.at("u1").klout_score.value() == 61.5);
    CHECK_FALSE(profiles.at("u2").follower_count.has_value());
    CHECK_FALSE(profiles.at("u2").has_picture.has_value());
}

TEST_CASE("profile table rejects inconsistent rows") {
    TempDir dir;
    auto bad_mutual = dir.file("bad_mutual.tsv");
    write_file(bad_mutual,
               "user_id\tfollower_count\tfollowee_count\tmutual_count\n"
               "u1\t10\t5\t7\n");
    CHECK_THROWS_WITH_AS(load_profiles(bad_mutual), doctest::Contains("mutual_count"),
                         DataError);

    auto bad_column = dir.file("bad_column.tsv");
    write_file(bad_column, "user_id\tshoe_size\nu1\t43\n");
    CHECK_THROWS_WITH_AS(load_profiles(bad_column), doctest::Contains("shoe_size"),
                         DataError);

    auto dup = dir.file("dup.tsv");
    write_file(dup, "user_id\tfollower_count\nu1\t1\nu1\t2\n");
    CHECK_THROWS_WITH_AS(load_profiles(dup), doctest::Contains("duplicate user"),
                         DataError);

    auto too_many = dir.file("too_many.tsv");
    std::string row = "u1\t";
    for (std::size_t i = 0; i < kMaxRecentIds + 1; ++i) {
        if (i) row += ',';
        row += std::to_string(i);
    }
    write_file(too_many, "user_id\trecent_follower_ids\n" + row + "\n");
    CHECK_THROWS_WITH_AS(load_profiles(too_many), doctest::Contains("limit"), DataError);
}
