#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace influence {

// Account-level fields that cannot be derived from tweet content. All fields
// are optional because real metadata tables are sparse; absent values stay
// absent instead of being fabricated.
struct ProfileMetadata {
    std::optional<bool> has_picture;
    std::optional<bool> is_verified;
    std::optional<bool> allows_contributions;
    std::optional<bool> has_webpage;
    std::optional<std::int64_t> description_length;
    std::optional<std::int64_t> follower_count;
    std::optional<std::int64_t> followee_count;
    std::optional<std::int64_t> mutual_count;
    std::vector<std::int64_t> recent_follower_ids;   // at most 5000
    std::vector<std::int64_t> recent_followee_ids;   // at most 5000
    std::optional<std::int64_t> favorites_given;
    std::optional<std::int64_t> favorites_received;
    std::optional<std::int64_t> web_search_results;
    std::optional<double> klout_score;

    bool operator==(const ProfileMetadata&) const = default;
};

inline constexpr std::size_t kMaxRecentIds = 5000;

}  // namespace influence
