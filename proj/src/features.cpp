#include "influence/features.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_set>

#include "influence/parallel.hpp"
#include "influence/preprocess.hpp"
#include "influence/text.hpp"
#include "influence/tsv.hpp"

namespace influence {

namespace {

bool looks_like_retweet(const std::string& text) {
    if (text.size() < 4) return false;
    return (text[0] == 'R' || text[0] == 'r') && (text[1] == 'T' || text[1] == 't') &&
           text[2] == ' ' && text[3] == '@';
}

std::size_t word_count(const std::string& text) {
    auto codepoints = text::decode_utf8(text);
    std::size_t words = 0;
    bool in_word = false;
    for (char32_t c : codepoints) {
        if (text::is_space(c)) {
            in_word = false;
        } else if (!in_word) {
            in_word = true;
            ++words;
        }
    }
    return words;
}

double population_sd(const std::vector<double>& values) {
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= values.size();
    double variance = 0.0;
    for (double v : values) variance += (v - mean) * (v - mean);
    return std::sqrt(variance / values.size());
}

std::optional<double> id_spread(const std::vector<std::int64_t>& ids) {
    if (ids.empty()) return std::nullopt;
    std::vector<double> values(ids.begin(), ids.end());
    return population_sd(values);
}

// Rounded to three decimals so float jitter does not split one place into
// many.
std::pair<std::int64_t, std::int64_t> geo_key(const Geolocation& g) {
    return {std::llround(g.lat * 1000.0), std::llround(g.lon * 1000.0)};
}

UserFeatures features_of(const std::string& user_id,
                         const std::vector<const Tweet*>& tweets,
                         const ProfileTable& profiles, const FeatureOptions& options) {
    UserFeatures f;
    f.user_id = user_id;
    f.tweet_count = tweets.size();

    std::vector<std::int64_t> timestamps;
    std::set<std::pair<std::int64_t, std::int64_t>> places;
    std::size_t geolocated = 0;
    std::unordered_set<std::string> mentioned, hashtags, urls;
    std::size_t mention_total = 0, hashtag_total = 0, url_total = 0;
    std::size_t tweets_with_mention = 0, tweets_with_hashtag = 0, tweets_with_url = 0;
    std::uint64_t chars_total = 0, words_total = 0;
    for (const Tweet* t : tweets) {
        if (t->timestamp) timestamps.push_back(*t->timestamp);
        if (t->geolocation) {
            ++geolocated;
            places.insert(geo_key(*t->geolocation));
        }
        if (t->is_retweet ||
            (options.retweet_text_heuristic && looks_like_retweet(t->text))) {
            ++f.retweet_count;
        }
        Entities extracted;
        const Entities* entities = &extracted;
        if (t->entities_present) {
            extracted.mentions = t->mentions;
            extracted.hashtags = t->hashtags;
            extracted.urls = t->urls;
        } else {
            extracted = extract_entities(t->text);
        }
        mention_total += entities->mentions.size();
        hashtag_total += entities->hashtags.size();
        url_total += entities->urls.size();
        if (!entities->mentions.empty()) ++tweets_with_mention;
        if (!entities->hashtags.empty()) ++tweets_with_hashtag;
        if (!entities->urls.empty()) ++tweets_with_url;
        mentioned.insert(entities->mentions.begin(), entities->mentions.end());
        hashtags.insert(entities->hashtags.begin(), entities->hashtags.end());
        urls.insert(entities->urls.begin(), entities->urls.end());
        chars_total += text::codepoint_count(t->text);
        words_total += word_count(t->text);
    }

    f.distinct_geolocations = places.size();
    f.distinct_mentioned_users = mentioned.size();
    f.unique_hashtags = hashtags.size();

    if (!tweets.empty()) {
        double n = static_cast<double>(tweets.size());
        f.geolocated_proportion = geolocated / n;
        f.retweet_proportion = f.retweet_count / n;
        f.mentions_per_tweet = mention_total / n;
        f.unique_mentions_per_tweet = mentioned.size() / n;
        f.mention_tweet_proportion = tweets_with_mention / n;
        f.avg_tweet_length_chars = chars_total / n;
        f.avg_tweet_length_words = words_total / n;
        f.hashtags_per_tweet = hashtag_total / n;
        f.unique_hashtags_per_tweet = hashtags.size() / n;
        f.hashtag_tweet_proportion = tweets_with_hashtag / n;
        f.urls_per_tweet = url_total / n;
        f.unique_urls_per_tweet = urls.size() / n;
        f.url_tweet_proportion = tweets_with_url / n;
    }

    if (timestamps.size() >= 2) {
        std::sort(timestamps.begin(), timestamps.end());
        std::vector<double> gaps;
        gaps.reserve(timestamps.size() - 1);
        std::int64_t lowest = 0, highest = 0;
        for (std::size_t i = 1; i < timestamps.size(); ++i) {
            std::int64_t gap = timestamps[i] - timestamps[i - 1];
            if (i == 1 || gap < lowest) lowest = gap;
            if (i == 1 || gap > highest) highest = gap;
            gaps.push_back(static_cast<double>(gap));
        }
        double mean = 0.0;
        for (double g : gaps) mean += g;
        f.delay_avg = mean / gaps.size();
        f.delay_sd = population_sd(gaps);
        f.delay_min = lowest;
        f.delay_max = highest;
    }

    auto it = profiles.find(user_id);
    if (it != profiles.end()) {
        const ProfileMetadata& p = it->second;
        f.follower_id_sd = id_spread(p.recent_follower_ids);
        f.followee_id_sd = id_spread(p.recent_followee_ids);
        f.has_picture = p.has_picture;
        f.is_verified = p.is_verified;
        f.allows_contributions = p.allows_contributions;
        f.has_webpage = p.has_webpage;
        f.description_length = p.description_length;
        f.follower_count = p.follower_count;
        f.followee_count = p.followee_count;
        f.mutual_count = p.mutual_count;
        f.favorites_given = p.favorites_given;
        f.favorites_received = p.favorites_received;
        f.web_search_results = p.web_search_results;
        f.klout_score = p.klout_score;
    }
    return f;
}

void push_int(std::vector<std::string>& row, std::uint64_t v) {
    row.push_back(std::to_string(v));
}

void push_opt_double(std::vector<std::string>& row, const std::optional<double>& v) {
    row.push_back(v ? tsv::format_double(*v) : std::string());
}

void push_opt_int(std::vector<std::string>& row, const std::optional<std::int64_t>& v) {
    row.push_back(v ? std::to_string(*v) : std::string());
}

void push_opt_bool(std::vector<std::string>& row, const std::optional<bool>& v) {
    row.push_back(v ? (*v ? "1" : "0") : std::string());
}

}  // namespace

std::vector<UserFeatures> extract_features(const CorpusView& view,
                                           const ProfileTable& profiles,
                                           const FeatureOptions& options,
                                           unsigned jobs) {
    const auto& ids = view.user_ids();
    std::vector<UserFeatures> rows(ids.size());
    parallel_for(ids.size(), jobs, [&](std::size_t i) {
        rows[i] = features_of(ids[i], view.tweets_of(ids[i]), profiles, options);
    });
    return rows;
}

const std::vector<std::string>& feature_columns() {
    static const std::vector<std::string> columns = {
        "user_id",
        "tweet_count",
        "delay_avg",
        "delay_sd",
        "delay_min",
        "delay_max",
        "distinct_geolocations",
        "geolocated_proportion",
        "retweet_count",
        "retweet_proportion",
        "mentions_per_tweet",
        "unique_mentions_per_tweet",
        "mention_tweet_proportion",
        "distinct_mentioned_users",
        "avg_tweet_length_chars",
        "avg_tweet_length_words",
        "unique_hashtags",
        "hashtags_per_tweet",
        "unique_hashtags_per_tweet",
        "hashtag_tweet_proportion",
        "urls_per_tweet",
        "unique_urls_per_tweet",
        "url_tweet_proportion",
        "follower_id_sd",
        "followee_id_sd",
        "has_picture",
        "is_verified",
        "allows_contributions",
        "has_webpage",
        "description_length",
        "follower_count",
        "followee_count",
        "mutual_count",
        "favorites_given",
        "favorites_received",
        "web_search_results",
        "klout_score",
    };
    return columns;
}

std::vector<std::string> feature_row(const UserFeatures& f) {
    std::vector<std::string> row;
    row.reserve(feature_columns().size());
    row.push_back(f.user_id);
    push_int(row, f.tweet_count);
    push_opt_double(row, f.delay_avg);
    push_opt_double(row, f.delay_sd);
    push_opt_int(row, f.delay_min);
    push_opt_int(row, f.delay_max);
    push_int(row, f.distinct_geolocations);
    push_opt_double(row, f.geolocated_proportion);
    push_int(row, f.retweet_count);
    push_opt_double(row, f.retweet_proportion);
    push_opt_double(row, f.mentions_per_tweet);
    push_opt_double(row, f.unique_mentions_per_tweet);
    push_opt_double(row, f.mention_tweet_proportion);
    push_int(row, f.distinct_mentioned_users);
    push_opt_double(row, f.avg_tweet_length_chars);
    push_opt_double(row, f.avg_tweet_length_words);
    push_int(row, f.unique_hashtags);
    push_opt_double(row, f.hashtags_per_tweet);
    push_opt_double(row, f.unique_hashtags_per_tweet);
    push_opt_double(row, f.hashtag_tweet_proportion);
    push_opt_double(row, f.urls_per_tweet);
    push_opt_double(row, f.unique_urls_per_tweet);
    push_opt_double(row, f.url_tweet_proportion);
    push_opt_double(row, f.follower_id_sd);
    push_opt_double(row, f.followee_id_sd);
    push_opt_bool(row, f.has_picture);
    push_opt_bool(row, f.is_verified);
    push_opt_bool(row, f.allows_contributions);
    push_opt_bool(row, f.has_webpage);
    push_opt_int(row, f.description_length);
    push_opt_int(row, f.follower_count);
    push_opt_int(row, f.followee_count);
    push_opt_int(row, f.mutual_count);
    push_opt_int(row, f.favorites_given);
    push_opt_int(row, f.favorites_received);
    push_opt_int(row, f.web_search_results);
    push_opt_double(row, f.klout_score);
    return row;
}

std::string_view to_string(BaselineKind k) {
    return k == BaselineKind::followers ? "followers" : "tweet_count";
}

std::optional<BaselineKind> parse_baseline(std::string_view s) {
    if (s == "followers") return BaselineKind::followers;
    if (s == "tweet_count") return BaselineKind::tweet_count;
    return std::nullopt;
}

BaselineResult baseline_rank(const CorpusView& view, BaselineKind kind,
                             const ProfileTable& profiles) {
    BaselineResult result;
    result.list.domain = view.domain();
    for (const auto& uid : view.user_ids()) {
        double score = 0.0;
        if (kind == BaselineKind::tweet_count) {
            score = static_cast<double>(view.tweets_of(uid).size());
        } else {
            auto it = profiles.find(uid);
            if (it != profiles.end() && it->second.follower_count) {
                score = static_cast<double>(*it->second.follower_count);
            } else {
                result.missing.push_back(uid);
            }
        }
        result.list.entries.push_back({uid, score, Label::unknown});
    }
    std::sort(result.list.entries.begin(), result.list.entries.end(),
              [](const RankedEntry& a, const RankedEntry& b) {
                  if (a.score != b.score) return a.score > b.score;
                  return a.user_id < b.user_id;
              });
    return result;
}

}  // namespace influence
