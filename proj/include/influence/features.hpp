#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "influence/corpus.hpp"
#include "influence/prediction.hpp"
#include "influence/profile_metadata.hpp"

namespace influence {

// Per-user scalar features. Ratios over tweets are absent for users without
// tweets; delay statistics need at least two timestamped tweets; the id
// spread and profile fields need metadata.
struct UserFeatures {
    std::string user_id;
    std::uint64_t tweet_count = 0;

    std::optional<double> delay_avg;
    std::optional<double> delay_sd;
    std::optional<std::int64_t> delay_min;
    std::optional<std::int64_t> delay_max;

    std::uint64_t distinct_geolocations = 0;
    std::optional<double> geolocated_proportion;

    std::uint64_t retweet_count = 0;
    std::optional<double> retweet_proportion;

    std::optional<double> mentions_per_tweet;
    std::optional<double> unique_mentions_per_tweet;
    std::optional<double> mention_tweet_proportion;
    std::uint64_t distinct_mentioned_users = 0;

    std::optional<double> avg_tweet_length_chars;
    std::optional<double> avg_tweet_length_words;

    std::uint64_t unique_hashtags = 0;
    std::optional<double> hashtags_per_tweet;
    std::optional<double> unique_hashtags_per_tweet;
    std::optional<double> hashtag_tweet_proportion;

    std::optional<double> urls_per_tweet;
    std::optional<double> unique_urls_per_tweet;
    std::optional<double> url_tweet_proportion;

    std::optional<double> follower_id_sd;
    std::optional<double> followee_id_sd;

    std::optional<bool> has_picture;
    std::optional<bool> is_verified;
    std::optional<bool> allows_contributions;
    std::optional<bool> has_webpage;
    std::optional<std::int64_t> description_length;
    std::optional<std::int64_t> follower_count;
    std::optional<std::int64_t> followee_count;
    std::optional<std::int64_t> mutual_count;
    std::optional<std::int64_t> favorites_given;
    std::optional<std::int64_t> favorites_received;
    std::optional<std::int64_t> web_search_results;
    std::optional<double> klout_score;
};

struct FeatureOptions {
    // Also treat tweets whose text starts with 'RT @' as retweets, not just
    // those flagged in the record.
    bool retweet_text_heuristic = true;
};

using ProfileTable = std::unordered_map<std::string, ProfileMetadata>;

std::vector<UserFeatures> extract_features(const CorpusView& view,
                                           const ProfileTable& profiles = {},
                                           const FeatureOptions& options = {},
                                           unsigned jobs = 1);

// Column names in export order; feature_row yields the matching cells with
// absent values as empty strings.
const std::vector<std::string>& feature_columns();
std::vector<std::string> feature_row(const UserFeatures& features);

enum class BaselineKind { followers, tweet_count };

std::string_view to_string(BaselineKind k);
std::optional<BaselineKind> parse_baseline(std::string_view s);

struct BaselineResult {
    RankedList list;
    std::vector<std::string> missing;   // users scored 0 for lack of data
};

// Ranks users by follower count or tweet count; users without the metric
// score 0 and are reported in missing.
BaselineResult baseline_rank(const CorpusView& view, BaselineKind kind,
                             const ProfileTable& profiles = {});

}  // namespace influence
