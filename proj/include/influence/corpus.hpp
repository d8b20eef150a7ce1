#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "influence/profile_metadata.hpp"

namespace influence {

enum class Domain { automotive, banking };
enum class Split { train, test };
enum class Language { en, es, other };
enum class Label { influencer, non_influencer, unknown };

std::string_view to_string(Domain d);
std::string_view to_string(Split s);
std::string_view to_string(Language l);
std::string_view to_string(Label l);

std::optional<Domain> parse_domain(std::string_view s);
std::optional<Split> parse_split(std::string_view s);
std::optional<Language> parse_language(std::string_view s);
std::optional<Label> parse_label(std::string_view s);

struct Geolocation {
    double lat = 0.0;
    double lon = 0.0;

    bool operator==(const Geolocation&) const = default;
};

struct Tweet {
    std::string tweet_id;
    std::string user_id;
    std::string text;
    Language language = Language::other;
    std::optional<std::int64_t> timestamp;   // seconds since epoch
    std::optional<Geolocation> geolocation;
    bool is_retweet = false;
    // Entity lists are lowercased and keep their input order. When a record
    // does not carry them they are filled lazily from the text.
    std::vector<std::string> mentions;
    std::vector<std::string> hashtags;
    std::vector<std::string> urls;
    bool entities_present = false;
};

struct UserRecord {
    std::string user_id;
    Domain domain = Domain::automotive;
    Label label = Label::unknown;
    Split split = Split::train;
    std::vector<std::string> tweet_ids;   // sorted, rebuilt by Corpus
};

// One skipped input row: where it was and why.
struct MalformedRow {
    std::string file;
    std::size_t line = 0;
    std::string reason;
};

struct LoadReport {
    std::size_t tweets_loaded = 0;
    std::size_t users_loaded = 0;
    std::vector<MalformedRow> malformed;
    std::vector<std::string> warnings;
};

struct LoadOptions {
    // Manifest with expected per-(domain, split) user counts; mismatches
    // become warnings, not errors.
    std::optional<std::string> manifest_path;
    // In strict mode any malformed row aborts the load instead of being
    // collected in the report.
    bool strict = false;
};

// Immutable tweet/user store. Lookup tables are hash maps; every accessor
// that enumerates returns a deterministic (sorted) order.
class Corpus {
  public:
    Corpus() = default;
    Corpus(std::vector<Tweet> tweets, std::vector<UserRecord> users);

    const Tweet& tweet(const std::string& tweet_id) const;
    const UserRecord& user(const std::string& user_id) const;
    bool has_user(const std::string& user_id) const;

    const std::vector<std::string>& tweet_ids() const { return tweet_order_; }
    const std::vector<std::string>& user_ids() const { return user_order_; }

    std::size_t tweet_count() const { return tweets_.size(); }
    std::size_t user_count() const { return users_.size(); }

    // FNV-1a over the canonical serialized form; stable across processes.
    std::uint64_t digest() const { return digest_; }

  private:
    std::unordered_map<std::string, Tweet> tweets_;
    std::unordered_map<std::string, UserRecord> users_;
    std::vector<std::string> tweet_order_;   // sorted tweet ids
    std::vector<std::string> user_order_;    // sorted user ids
    std::uint64_t digest_ = 0;

    friend class CorpusView;
};

// A (domain, split[, language]) slice of a corpus. Holds no tweet data,
// only sorted user ids and per-user tweet pointers filtered to the slice.
class CorpusView {
  public:
    CorpusView() = default;
    CorpusView(const Corpus& corpus, Domain domain, Split split,
               std::optional<Language> language = std::nullopt);

    const Corpus& corpus() const { return *corpus_; }
    Domain domain() const { return domain_; }
    Split split() const { return split_; }
    std::optional<Language> language() const { return language_; }

    const std::vector<std::string>& user_ids() const { return user_ids_; }
    // Tweets of one user within the slice, ordered by tweet id. Users with
    // no matching tweets yield an empty list but stay in user_ids().
    const std::vector<const Tweet*>& tweets_of(const std::string& user_id) const;
    std::size_t tweet_count() const { return tweet_count_; }

  private:
    const Corpus* corpus_ = nullptr;
    Domain domain_ = Domain::automotive;
    Split split_ = Split::train;
    std::optional<Language> language_;
    std::vector<std::string> user_ids_;
    std::unordered_map<std::string, std::vector<const Tweet*>> tweets_by_user_;
    std::size_t tweet_count_ = 0;

    static const std::vector<const Tweet*> kNoTweets;
};

// Reads tweets (TSV or JSONL, sniffed from the first byte) plus a labels
// table. Duplicate tweet ids and tweets referencing unknown users are hard
// errors; anything recoverable lands in the report.
Corpus load_corpus(const std::string& tweets_path, const std::string& labels_path,
                   const LoadOptions& options = {}, LoadReport* report = nullptr);

// Writes the corpus back out as JSONL tweets plus a labels TSV. Loading the
// written pair reproduces the corpus exactly (same digest).
void save_corpus(const Corpus& corpus, const std::string& tweets_path,
                 const std::string& labels_path);

CorpusView partition(const Corpus& corpus, Domain domain, Split split,
                     std::optional<Language> language = std::nullopt);
// Narrowing an existing view; partitioning a view by its own parameters is
// the identity.
CorpusView partition(const CorpusView& view, Domain domain, Split split,
                     std::optional<Language> language = std::nullopt);

// Optional per-user metadata table (TSV keyed by user_id).
std::unordered_map<std::string, ProfileMetadata> load_profiles(const std::string& path);

}  // namespace influence
