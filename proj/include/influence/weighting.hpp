#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "influence/corpus.hpp"

namespace influence {

// The classification task is binary; the purity measure generalizes to any
// class count but everything here works over these two.
inline constexpr std::array<Label, 2> kClasses = {Label::influencer,
                                                  Label::non_influencer};
inline constexpr std::size_t kClassCount = kClasses.size();

// Index of a label within kClasses; throws DataError for unknown.
std::size_t class_index(Label label);

enum class LogBase { natural, base10, base2 };

// What to do with terms that never occurred in training. skip drops them;
// smoothed gives them weight TF * log(N) / |C| so they still dilute the
// document norm without ever matching a class profile.
enum class UnseenPolicy { skip, smoothed };

struct WeightingOptions {
    LogBase log_base = LogBase::natural;
    UnseenPolicy unseen = UnseenPolicy::skip;

    bool operator==(const WeightingOptions&) const = default;
};

struct TrainingDoc {
    std::vector<std::string> tokens;
    Label label = Label::unknown;
};

struct TermEntry {
    std::string term;
    std::array<std::uint32_t, kClassCount> df_by_class{};
};

// Document frequencies per term and class over a training collection. The
// overall document frequency of a term is the sum over classes, so both
// purity and inverse document frequency derive from the same counts.
class TermStats {
  public:
    TermStats() = default;
    // doc_count is the number of training documents; entries carry per-class
    // document frequencies. Validates 1 <= DF(i) <= doc_count.
    TermStats(std::size_t doc_count, std::vector<TermEntry> entries);

    // Each document contributes once per distinct term. Throws on an empty
    // collection or on documents with labels outside kClasses.
    static TermStats from_documents(const std::vector<TrainingDoc>& docs);

    std::size_t doc_count() const { return doc_count_; }
    std::size_t vocabulary_size() const { return df_.size(); }
    bool contains(const std::string& term) const { return df_.count(term) != 0; }

    std::uint32_t df(const std::string& term) const;
    std::uint32_t df_class(const std::string& term, Label label) const;

    // log(N / DF); nullopt for unseen terms.
    std::optional<double> idf(const std::string& term,
                              LogBase base = LogBase::natural) const;
    // Sum over classes of (DF_c / DF)^2, in [1/|C|, 1]; 1 means the term
    // occurs in a single class only. nullopt for unseen terms.
    std::optional<double> gini(const std::string& term) const;

    std::vector<std::string> vocabulary() const;   // sorted
    std::vector<TermEntry> entries() const;        // sorted by term

  private:
    std::size_t doc_count_ = 0;
    std::unordered_map<std::string, std::array<std::uint32_t, kClassCount>> df_;
};

// Sparse vector with entries sorted by term, zero weights removed and the
// Euclidean norm cached. Sorted order makes every accumulation reproducible.
class WeightedVector {
  public:
    WeightedVector() = default;
    explicit WeightedVector(std::vector<std::pair<std::string, double>> entries);

    const std::vector<std::pair<std::string, double>>& entries() const {
        return entries_;
    }
    double norm() const { return norm_; }
    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }

  private:
    std::vector<std::pair<std::string, double>> entries_;
    double norm_ = 0.0;
};

// Term weight TF * IDF * G for one document.
WeightedVector weight_document(const std::vector<std::string>& tokens,
                               const TermStats& stats,
                               const WeightingOptions& options = {});

// Class profile with term weight DF_c * IDF * G over terms the class has
// seen at least once.
WeightedVector weight_class(Label label, const TermStats& stats,
                            const WeightingOptions& options = {});

// Cosine similarity over shared terms; 0 when either vector has norm 0.
double cosine(const WeightedVector& a, const WeightedVector& b);

double apply_log(double x, LogBase base);

std::string_view to_string(LogBase base);
std::string_view to_string(UnseenPolicy policy);
std::optional<LogBase> parse_log_base(std::string_view s);
std::optional<UnseenPolicy> parse_unseen_policy(std::string_view s);

}  // namespace influence
