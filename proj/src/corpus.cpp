#include "influence/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "influence/digest.hpp"
#include "influence/error.hpp"
#include "influence/text.hpp"
#include "influence/tsv.hpp"

namespace influence {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

constexpr std::size_t kMaxTextBytes = 560;
constexpr char kSep = '\x1f';

std::optional<bool> parse_bool(std::string_view s) {
    if (s == "0" || s == "false") return false;
    if (s == "1" || s == "true") return true;
    return std::nullopt;
}

void fail_or_report(const std::string& file, std::size_t line, std::string reason,
                    const LoadOptions& options, LoadReport* report) {
    if (options.strict) {
        throw DataError(file + ":" + std::to_string(line) + ": " + reason);
    }
    if (report) report->malformed.push_back({file, line, std::move(reason)});
}

// Reads a text file line by line, stripping one trailing '\r'. Returns false
// at end of file.
class LineReader {
  public:
    explicit LineReader(const std::string& path) : path_(path), in_(path) {
        if (!in_) throw DataError("cannot open " + path);
    }

    bool next(std::string& line) {
        if (!std::getline(in_, line)) return false;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        ++line_no_;
        return true;
    }

    std::size_t line_no() const { return line_no_; }
    const std::string& path() const { return path_; }

  private:
    std::string path_;
    std::ifstream in_;
    std::size_t line_no_ = 0;
};

bool blank_or_comment(const std::string& line) {
    return line.empty() || line[0] == '#';
}

std::vector<std::string> lower_all(std::vector<std::string> v) {
    for (auto& s : v) s = text::to_lower(s);
    return v;
}

std::optional<Tweet> parse_tweet_tsv(const std::string& file, std::size_t line_no,
                                     const std::string& line, const LoadOptions& options,
                                     LoadReport* report) {
    auto fields = tsv::split_fields(line);
    if (fields.size() != 8) {
        fail_or_report(file, line_no,
                       "expected 8 fields, got " + std::to_string(fields.size()),
                       options, report);
        return std::nullopt;
    }
    Tweet t;
    t.tweet_id = std::string(fields[0]);
    t.user_id = std::string(fields[1]);
    if (t.tweet_id.empty() || t.user_id.empty()) {
        fail_or_report(file, line_no, "empty tweet or user id", options, report);
        return std::nullopt;
    }
    auto lang = parse_language(fields[2]);
    if (!lang) {
        fail_or_report(file, line_no,
                       "unknown language '" + std::string(fields[2]) + "'", options,
                       report);
        return std::nullopt;
    }
    t.language = *lang;
    if (!fields[3].empty()) {
        auto ts = tsv::parse_int(fields[3]);
        if (!ts) {
            fail_or_report(file, line_no, "bad timestamp", options, report);
            return std::nullopt;
        }
        t.timestamp = *ts;
    }
    if (fields[4].empty() != fields[5].empty()) {
        fail_or_report(file, line_no, "latitude and longitude must come together",
                       options, report);
        return std::nullopt;
    }
    if (!fields[4].empty()) {
        auto lat = tsv::parse_double(fields[4]);
        auto lon = tsv::parse_double(fields[5]);
        if (!lat || !lon) {
            fail_or_report(file, line_no, "bad geolocation", options, report);
            return std::nullopt;
        }
        t.geolocation = Geolocation{*lat, *lon};
    }
    auto rt = parse_bool(fields[6]);
    if (!rt) {
        fail_or_report(file, line_no, "bad is_retweet flag", options, report);
        return std::nullopt;
    }
    t.is_retweet = *rt;
    t.text = std::string(fields[7]);
    if (t.text.size() > kMaxTextBytes) {
        fail_or_report(file, line_no, "text exceeds " + std::to_string(kMaxTextBytes) +
                                          " bytes", options, report);
        return std::nullopt;
    }
    return t;
}

std::optional<std::string> json_id(const json& j, const char* key) {
    if (!j.contains(key)) return std::nullopt;
    const auto& v = j.at(key);
    if (v.is_string()) {
        auto s = v.get<std::string>();
        if (s.empty()) return std::nullopt;
        return s;
    }
    if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
    if (v.is_number_unsigned()) return std::to_string(v.get<std::uint64_t>());
    return std::nullopt;
}

std::optional<Tweet> parse_tweet_json(const std::string& file, std::size_t line_no,
                                      const std::string& line, const LoadOptions& options,
                                      LoadReport* report) {
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) {
        fail_or_report(file, line_no, "invalid JSON record", options, report);
        return std::nullopt;
    }
    Tweet t;
    auto tid = json_id(j, "tweet_id");
    auto uid = json_id(j, "user_id");
    if (!tid || !uid) {
        fail_or_report(file, line_no, "missing tweet_id or user_id", options, report);
        return std::nullopt;
    }
    t.tweet_id = *tid;
    t.user_id = *uid;
    if (!j.contains("text") || !j.at("text").is_string()) {
        fail_or_report(file, line_no, "missing text", options, report);
        return std::nullopt;
    }
    t.text = j.at("text").get<std::string>();
    if (t.text.size() > kMaxTextBytes) {
        fail_or_report(file, line_no, "text exceeds " + std::to_string(kMaxTextBytes) +
                                          " bytes", options, report);
        return std::nullopt;
    }
    if (j.contains("language")) {
        if (!j.at("language").is_string()) {
            fail_or_report(file, line_no, "language must be a string", options, report);
            return std::nullopt;
        }
        auto lang = parse_language(j.at("language").get<std::string>());
        if (!lang) {
            fail_or_report(file, line_no,
                           "unknown language '" + j.at("language").get<std::string>() +
                               "'", options, report);
            return std::nullopt;
        }
        t.language = *lang;
    }
    if (j.contains("timestamp")) {
        if (!j.at("timestamp").is_number_integer() &&
            !j.at("timestamp").is_number_unsigned()) {
            fail_or_report(file, line_no, "timestamp must be an integer", options,
                           report);
            return std::nullopt;
        }
        t.timestamp = j.at("timestamp").get<std::int64_t>();
    }
    if (j.contains("lat") != j.contains("lon")) {
        fail_or_report(file, line_no, "latitude and longitude must come together",
                       options, report);
        return std::nullopt;
    }
    if (j.contains("lat")) {
        if (!j.at("lat").is_number() || !j.at("lon").is_number()) {
            fail_or_report(file, line_no, "bad geolocation", options, report);
            return std::nullopt;
        }
        t.geolocation = Geolocation{j.at("lat").get<double>(), j.at("lon").get<double>()};
    }
    if (j.contains("is_retweet")) {
        if (!j.at("is_retweet").is_boolean()) {
            fail_or_report(file, line_no, "is_retweet must be a boolean", options,
                           report);
            return std::nullopt;
        }
        t.is_retweet = j.at("is_retweet").get<bool>();
    }
    for (const char* key : {"mentions", "hashtags", "urls"}) {
        if (!j.contains(key)) continue;
        const auto& arr = j.at(key);
        if (!arr.is_array()) {
            fail_or_report(file, line_no, std::string(key) + " must be an array",
                           options, report);
            return std::nullopt;
        }
        std::vector<std::string> items;
        for (const auto& e : arr) {
            if (!e.is_string()) {
                fail_or_report(file, line_no,
                               std::string(key) + " entries must be strings", options,
                               report);
                return std::nullopt;
            }
            items.push_back(e.get<std::string>());
        }
        items = lower_all(std::move(items));
        t.entities_present = true;
        if (key == std::string_view("mentions")) t.mentions = std::move(items);
        else if (key == std::string_view("hashtags")) t.hashtags = std::move(items);
        else t.urls = std::move(items);
    }
    return t;
}

std::vector<UserRecord> load_labels(const std::string& path, const LoadOptions& options,
                                    LoadReport* report) {
    LineReader reader(path);
    std::string line;
    bool saw_header = false;
    std::vector<UserRecord> users;
    std::unordered_map<std::string, std::size_t> seen;
    while (reader.next(line)) {
        if (blank_or_comment(line)) continue;
        if (!saw_header) {
            if (line != "user_id\tdomain\tlabel\tsplit") {
                throw DataError(path + ": expected header 'user_id\tdomain\tlabel\tsplit'");
            }
            saw_header = true;
            continue;
        }
        auto fields = tsv::split_fields(line);
        if (fields.size() != 4) {
            fail_or_report(path, reader.line_no(),
                           "expected 4 fields, got " + std::to_string(fields.size()),
                           options, report);
            continue;
        }
        UserRecord u;
        u.user_id = std::string(fields[0]);
        if (u.user_id.empty()) {
            fail_or_report(path, reader.line_no(), "empty user id", options, report);
            continue;
        }
        auto domain = parse_domain(fields[1]);
        auto label = parse_label(fields[2]);
        auto split = parse_split(fields[3]);
        if (!domain || !label || !split) {
            fail_or_report(path, reader.line_no(), "bad domain, label or split", options,
                           report);
            continue;
        }
        u.domain = *domain;
        u.label = *label;
        u.split = *split;
        auto [it, inserted] = seen.emplace(u.user_id, reader.line_no());
        if (!inserted) {
            throw DataError(path + ":" + std::to_string(reader.line_no()) +
                            ": duplicate user '" + u.user_id + "' (first at line " +
                            std::to_string(it->second) + ")");
        }
        users.push_back(std::move(u));
    }
    if (!saw_header) throw DataError(path + ": missing header");
    return users;
}

void check_manifest(const std::string& path, const std::vector<UserRecord>& users,
                    LoadReport* report) {
    LineReader reader(path);
    std::map<std::pair<Domain, Split>, std::size_t> counts;
    for (const auto& u : users) ++counts[{u.domain, u.split}];
    std::string line;
    bool saw_header = false;
    while (reader.next(line)) {
        if (blank_or_comment(line)) continue;
        if (!saw_header) {
            if (line != "domain\tsplit\tusers") {
                throw DataError(path + ": expected header 'domain\tsplit\tusers'");
            }
            saw_header = true;
            continue;
        }
        auto fields = tsv::split_fields(line);
        if (fields.size() != 3) {
            throw DataError(path + ":" + std::to_string(reader.line_no()) +
                            ": expected 3 fields");
        }
        auto domain = parse_domain(fields[0]);
        auto split = parse_split(fields[1]);
        auto expected = tsv::parse_int(fields[2]);
        if (!domain || !split || !expected || *expected < 0) {
            throw DataError(path + ":" + std::to_string(reader.line_no()) +
                            ": bad manifest row");
        }
        std::size_t actual = counts[{*domain, *split}];
        if (actual != static_cast<std::size_t>(*expected) && report) {
            std::ostringstream msg;
            msg << "manifest: " << to_string(*domain) << ' ' << to_string(*split)
                << " expected " << *expected << " users, loaded " << actual;
            report->warnings.push_back(msg.str());
        }
    }
    if (!saw_header) throw DataError(path + ": missing header");
}

void hash_optional_int(Fnv1a& h, const std::optional<std::int64_t>& v) {
    h.update(v ? std::to_string(*v) : std::string());
    h.update(std::string_view(&kSep, 1));
}

}  // namespace

std::string_view to_string(Domain d) {
    return d == Domain::automotive ? "automotive" : "banking";
}

std::string_view to_string(Split s) { return s == Split::train ? "train" : "test"; }

std::string_view to_string(Language l) {
    switch (l) {
        case Language::en: return "en";
        case Language::es: return "es";
        default: return "other";
    }
}

std::string_view to_string(Label l) {
    switch (l) {
        case Label::influencer: return "influencer";
        case Label::non_influencer: return "non_influencer";
        default: return "unknown";
    }
}

std::optional<Domain> parse_domain(std::string_view s) {
    if (s == "automotive") return Domain::automotive;
    if (s == "banking") return Domain::banking;
    return std::nullopt;
}

std::optional<Split> parse_split(std::string_view s) {
    if (s == "train") return Split::train;
    if (s == "test") return Split::test;
    return std::nullopt;
}

std::optional<Language> parse_language(std::string_view s) {
    if (s == "en") return Language::en;
    if (s == "es") return Language::es;
    if (s == "other" || s.empty()) return Language::other;
    return std::nullopt;
}

std::optional<Label> parse_label(std::string_view s) {
    if (s == "influencer") return Label::influencer;
    if (s == "non_influencer") return Label::non_influencer;
    if (s == "unknown") return Label::unknown;
    return std::nullopt;
}

Corpus::Corpus(std::vector<Tweet> tweets, std::vector<UserRecord> users) {
    for (auto& u : users) {
        u.tweet_ids.clear();
        auto [it, inserted] = users_.emplace(u.user_id, std::move(u));
        if (!inserted) throw DataError("duplicate user '" + it->first + "'");
        user_order_.push_back(it->first);
    }
    for (auto& t : tweets) {
        auto user_it = users_.find(t.user_id);
        if (user_it == users_.end()) {
            throw DataError("tweet '" + t.tweet_id + "' references unknown user '" +
                            t.user_id + "'");
        }
        auto [it, inserted] = tweets_.emplace(t.tweet_id, std::move(t));
        if (!inserted) throw DataError("duplicate tweet '" + it->first + "'");
        tweet_order_.push_back(it->first);
        user_it->second.tweet_ids.push_back(it->first);
    }
    std::sort(tweet_order_.begin(), tweet_order_.end());
    std::sort(user_order_.begin(), user_order_.end());
    for (auto& [id, u] : users_) std::sort(u.tweet_ids.begin(), u.tweet_ids.end());

    Fnv1a h;
    auto sep = std::string_view(&kSep, 1);
    for (const auto& id : tweet_order_) {
        const Tweet& t = tweets_.at(id);
        h.update("T");
        h.update(sep);
        h.update(t.tweet_id);
        h.update(sep);
        h.update(t.user_id);
        h.update(sep);
        h.update(to_string(t.language));
        h.update(sep);
        hash_optional_int(h, t.timestamp);
        if (t.geolocation) {
            h.update(tsv::format_double(t.geolocation->lat));
            h.update(",");
            h.update(tsv::format_double(t.geolocation->lon));
        }
        h.update(sep);
        h.update(t.is_retweet ? "1" : "0");
        h.update(sep);
        h.update(t.text);
        h.update(sep);
        if (t.entities_present) {
            for (const auto* list : {&t.mentions, &t.hashtags, &t.urls}) {
                for (const auto& e : *list) {
                    h.update(e);
                    h.update(sep);
                }
                h.update(sep);
            }
        }
        h.update("\n");
    }
    for (const auto& id : user_order_) {
        const UserRecord& u = users_.at(id);
        h.update("U");
        h.update(sep);
        h.update(u.user_id);
        h.update(sep);
        h.update(to_string(u.domain));
        h.update(sep);
        h.update(to_string(u.label));
        h.update(sep);
        h.update(to_string(u.split));
        h.update("\n");
    }
    digest_ = h.value();
}

const Tweet& Corpus::tweet(const std::string& tweet_id) const {
    auto it = tweets_.find(tweet_id);
    if (it == tweets_.end()) throw DataError("unknown tweet '" + tweet_id + "'");
    return it->second;
}

const UserRecord& Corpus::user(const std::string& user_id) const {
    auto it = users_.find(user_id);
    if (it == users_.end()) throw DataError("unknown user '" + user_id + "'");
    return it->second;
}

bool Corpus::has_user(const std::string& user_id) const {
    return users_.count(user_id) != 0;
}

const std::vector<const Tweet*> CorpusView::kNoTweets;

CorpusView::CorpusView(const Corpus& corpus, Domain domain, Split split,
                       std::optional<Language> language)
    : corpus_(&corpus), domain_(domain), split_(split), language_(language) {
    for (const auto& uid : corpus.user_ids()) {
        const UserRecord& u = corpus.user(uid);
        if (u.domain != domain || u.split != split) continue;
        user_ids_.push_back(uid);
        auto& list = tweets_by_user_[uid];
        for (const auto& tid : u.tweet_ids) {
            const Tweet& t = corpus.tweet(tid);
            if (language && t.language != *language) continue;
            list.push_back(&t);
        }
        tweet_count_ += list.size();
    }
}

const std::vector<const Tweet*>& CorpusView::tweets_of(const std::string& user_id) const {
    auto it = tweets_by_user_.find(user_id);
    return it == tweets_by_user_.end() ? kNoTweets : it->second;
}

Corpus load_corpus(const std::string& tweets_path, const std::string& labels_path,
                   const LoadOptions& options, LoadReport* report) {
    auto users = load_labels(labels_path, options, report);
    std::unordered_map<std::string, Split> known_users;
    for (const auto& u : users) known_users.emplace(u.user_id, u.split);

    LineReader reader(tweets_path);
    std::string line;
    std::vector<Tweet> tweets;
    std::unordered_map<std::string, std::size_t> seen;
    bool json_form = false;
    bool sniffed = false;
    while (reader.next(line)) {
        if (blank_or_comment(line)) continue;
        if (!sniffed) {
            auto pos = line.find_first_not_of(" \t");
            json_form = pos != std::string::npos && line[pos] == '{';
            sniffed = true;
        }
        auto tweet = json_form
                         ? parse_tweet_json(tweets_path, reader.line_no(), line, options,
                                            report)
                         : parse_tweet_tsv(tweets_path, reader.line_no(), line, options,
                                           report);
        if (!tweet) continue;
        auto [it, inserted] = seen.emplace(tweet->tweet_id, reader.line_no());
        if (!inserted) {
            throw DataError(tweets_path + ":" + std::to_string(reader.line_no()) +
                            ": duplicate tweet '" + tweet->tweet_id +
                            "' (first at line " + std::to_string(it->second) + ")");
        }
        if (!known_users.count(tweet->user_id)) {
            throw DataError(tweets_path + ":" + std::to_string(reader.line_no()) +
                            ": tweet '" + tweet->tweet_id +
                            "' references unknown user '" + tweet->user_id + "'");
        }
        tweets.push_back(std::move(*tweet));
    }

    if (options.manifest_path) check_manifest(*options.manifest_path, users, report);
    if (report) {
        report->tweets_loaded = tweets.size();
        report->users_loaded = users.size();
    }
    return Corpus(std::move(tweets), std::move(users));
}

void save_corpus(const Corpus& corpus, const std::string& tweets_path,
                 const std::string& labels_path) {
    std::ofstream tweets_out(tweets_path);
    if (!tweets_out) throw DataError("cannot write " + tweets_path);
    for (const auto& tid : corpus.tweet_ids()) {
        const Tweet& t = corpus.tweet(tid);
        ordered_json j;
        j["tweet_id"] = t.tweet_id;
        j["user_id"] = t.user_id;
        j["language"] = std::string(to_string(t.language));
        if (t.timestamp) j["timestamp"] = *t.timestamp;
        if (t.geolocation) {
            j["lat"] = t.geolocation->lat;
            j["lon"] = t.geolocation->lon;
        }
        j["is_retweet"] = t.is_retweet;
        j["text"] = t.text;
        if (t.entities_present) {
            j["mentions"] = t.mentions;
            j["hashtags"] = t.hashtags;
            j["urls"] = t.urls;
        }
        tweets_out << j.dump() << '\n';
    }
    if (!tweets_out.flush()) throw DataError("cannot write " + tweets_path);

    std::ofstream labels_out(labels_path);
    if (!labels_out) throw DataError("cannot write " + labels_path);
    labels_out << "user_id\tdomain\tlabel\tsplit\n";
    for (const auto& uid : corpus.user_ids()) {
        const UserRecord& u = corpus.user(uid);
        labels_out << u.user_id << '\t' << to_string(u.domain) << '\t'
                   << to_string(u.label) << '\t' << to_string(u.split) << '\n';
    }
    if (!labels_out.flush()) throw DataError("cannot write " + labels_path);
}

CorpusView partition(const Corpus& corpus, Domain domain, Split split,
                     std::optional<Language> language) {
    return CorpusView(corpus, domain, split, language);
}

CorpusView partition(const CorpusView& view, Domain domain, Split split,
                     std::optional<Language> language) {
    // A language filter already applied to the view stays in effect, so
    // re-partitioning with the same arguments is the identity.
    if (view.domain() == domain && view.split() == split) {
        if (view.language() && language && *view.language() != *language) {
            throw DataError("cannot narrow a " +
                            std::string(to_string(*view.language())) + " slice to " +
                            std::string(to_string(*language)));
        }
        if (!language) language = view.language();
    }
    return CorpusView(view.corpus(), domain, split, language);
}

std::unordered_map<std::string, ProfileMetadata> load_profiles(const std::string& path) {
    LineReader reader(path);
    std::string line;
    bool saw_header = false;
    std::vector<std::string> columns;
    std::unordered_map<std::string, ProfileMetadata> profiles;

    auto parse_id_list = [&](std::string_view cell, const std::string& user,
                             const char* what) {
        std::vector<std::int64_t> ids;
        std::size_t start = 0;
        while (start <= cell.size()) {
            auto end = cell.find(',', start);
            if (end == std::string_view::npos) end = cell.size();
            auto piece = cell.substr(start, end - start);
            if (!piece.empty()) {
                auto v = tsv::parse_int(piece);
                if (!v) {
                    throw DataError(path + ": user '" + user + "': bad id in " + what);
                }
                ids.push_back(*v);
            }
            start = end + 1;
        }
        if (ids.size() > kMaxRecentIds) {
            throw DataError(path + ": user '" + user + "': " + what + " holds " +
                            std::to_string(ids.size()) + " ids, limit is " +
                            std::to_string(kMaxRecentIds));
        }
        return ids;
    };

    while (reader.next(line)) {
        if (blank_or_comment(line)) continue;
        auto fields = tsv::split_fields(line);
        if (!saw_header) {
            static const std::vector<std::string> kKnown = {
                "user_id",          "has_picture",
                "is_verified",      "allows_contributions",
                "has_webpage",      "description_length",
                "follower_count",   "followee_count",
                "mutual_count",     "recent_follower_ids",
                "recent_followee_ids", "favorites_given",
                "favorites_received", "web_search_results",
                "klout_score"};
            for (auto f : fields) {
                std::string name(f);
                if (std::find(kKnown.begin(), kKnown.end(), name) == kKnown.end()) {
                    throw DataError(path + ": unknown column '" + name + "'");
                }
                columns.push_back(name);
            }
            if (std::find(columns.begin(), columns.end(), "user_id") == columns.end()) {
                throw DataError(path + ": header lacks user_id column");
            }
            saw_header = true;
            continue;
        }
        if (fields.size() != columns.size()) {
            throw DataError(path + ":" + std::to_string(reader.line_no()) +
                            ": expected " + std::to_string(columns.size()) + " fields");
        }
        std::string user_id;
        ProfileMetadata p;
        for (std::size_t i = 0; i < columns.size(); ++i) {
            const auto& col = columns[i];
            auto cell = fields[i];
            if (col == "user_id") {
                user_id = std::string(cell);
                continue;
            }
            if (cell.empty()) continue;
            auto want_bool = [&]() {
                auto b = parse_bool(cell);
                if (!b) {
                    throw DataError(path + ":" + std::to_string(reader.line_no()) +
                                    ": bad boolean in " + col);
                }
                return *b;
            };
            auto want_int = [&]() {
                auto v = tsv::parse_int(cell);
                if (!v) {
                    throw DataError(path + ":" + std::to_string(reader.line_no()) +
                                    ": bad integer in " + col);
                }
                return *v;
            };
            if (col == "has_picture") p.has_picture = want_bool();
            else if (col == "is_verified") p.is_verified = want_bool();
            else if (col == "allows_contributions") p.allows_contributions = want_bool();
            else if (col == "has_webpage") p.has_webpage = want_bool();
            else if (col == "description_length") p.description_length = want_int();
            else if (col == "follower_count") p.follower_count = want_int();
            else if (col == "followee_count") p.followee_count = want_int();
            else if (col == "mutual_count") p.mutual_count = want_int();
            else if (col == "recent_follower_ids")
                p.recent_follower_ids = parse_id_list(cell, user_id, "recent_follower_ids");
            else if (col == "recent_followee_ids")
                p.recent_followee_ids = parse_id_list(cell, user_id, "recent_followee_ids");
            else if (col == "favorites_given") p.favorites_given = want_int();
            else if (col == "favorites_received") p.favorites_received = want_int();
            else if (col == "web_search_results") p.web_search_results = want_int();
            else if (col == "klout_score") {
                auto v = tsv::parse_double(cell);
                if (!v) {
                    throw DataError(path + ":" + std::to_string(reader.line_no()) +
                                    ": bad number in klout_score");
                }
                p.klout_score = *v;
            }
        }
        if (user_id.empty()) {
            throw DataError(path + ":" + std::to_string(reader.line_no()) +
                            ": empty user id");
        }
        if (p.mutual_count && p.follower_count && p.followee_count &&
            *p.mutual_count > std::min(*p.follower_count, *p.followee_count)) {
            throw DataError(path + ": user '" + user_id +
                            "': mutual_count exceeds follower or followee count");
        }
        if (!profiles.emplace(user_id, std::move(p)).second) {
            throw DataError(path + ": duplicate user '" + user_id + "'");
        }
    }
    if (!saw_header) throw DataError(path + ": missing header");
    return profiles;
}

}  // namespace influence
