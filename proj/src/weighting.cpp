#include "influence/weighting.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "influence/error.hpp"

namespace influence {

std::size_t class_index(Label label) {
    for (std::size_t i = 0; i < kClasses.size(); ++i) {
        if (kClasses[i] == label) return i;
    }
    throw DataError("label '" + std::string(to_string(label)) +
                    "' is not a classification target");
}

double apply_log(double x, LogBase base) {
    switch (base) {
        case LogBase::base10: return std::log10(x);
        case LogBase::base2: return std::log2(x);
        default: return std::log(x);
    }
}

TermStats::TermStats(std::size_t doc_count, std::vector<TermEntry> entries)
    : doc_count_(doc_count) {
    for (auto& e : entries) {
        std::uint64_t df = 0;
        for (auto c : e.df_by_class) df += c;
        if (df == 0 || df > doc_count_) {
            throw DataError("term '" + e.term + "' has document frequency " +
                            std::to_string(df) + " outside 1.." +
                            std::to_string(doc_count_));
        }
        if (!df_.emplace(std::move(e.term), e.df_by_class).second) {
            throw DataError("duplicate term in statistics");
        }
    }
}

TermStats TermStats::from_documents(const std::vector<TrainingDoc>& docs) {
    if (docs.empty()) throw DataError("cannot build term statistics without documents");
    TermStats stats;
    stats.doc_count_ = docs.size();
    std::vector<std::string> distinct;
    for (const auto& doc : docs) {
        std::size_t cls = class_index(doc.label);
        distinct.assign(doc.tokens.begin(), doc.tokens.end());
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        for (const auto& term : distinct) ++stats.df_[term][cls];
    }
    return stats;
}

std::uint32_t TermStats::df(const std::string& term) const {
    auto it = df_.find(term);
    if (it == df_.end()) return 0;
    std::uint32_t sum = 0;
    for (auto c : it->second) sum += c;
    return sum;
}

std::uint32_t TermStats::df_class(const std::string& term, Label label) const {
    auto it = df_.find(term);
    return it == df_.end() ? 0 : it->second[class_index(label)];
}

std::optional<double> TermStats::idf(const std::string& term, LogBase base) const {
    std::uint32_t frequency = df(term);
    if (frequency == 0) return std::nullopt;
    return apply_log(static_cast<double>(doc_count_) / frequency, base);
}

std::optional<double> TermStats::gini(const std::string& term) const {
    auto it = df_.find(term);
    if (it == df_.end()) return std::nullopt;
    double total = 0;
    for (auto c : it->second) total += c;
    double sum = 0;
    for (auto c : it->second) {
        double share = c / total;
        sum += share * share;
    }
    return sum;
}

std::vector<std::string> TermStats::vocabulary() const {
    std::vector<std::string> terms;
    terms.reserve(df_.size());
    for (const auto& [term, counts] : df_) terms.push_back(term);
    std::sort(terms.begin(), terms.end());
    return terms;
}

std::vector<TermEntry> TermStats::entries() const {
    std::vector<TermEntry> out;
    out.reserve(df_.size());
    for (const auto& [term, counts] : df_) out.push_back({term, counts});
    std::sort(out.begin(), out.end(),
              [](const TermEntry& a, const TermEntry& b) { return a.term < b.term; });
    return out;
}

WeightedVector::WeightedVector(std::vector<std::pair<std::string, double>> entries) {
    std::sort(entries.begin(), entries.end());
    for (auto& [term, weight] : entries) {
        if (weight == 0.0) continue;
        if (!entries_.empty() && entries_.back().first == term) {
            throw DataError("duplicate term '" + term + "' in weighted vector");
        }
        entries_.emplace_back(std::move(term), weight);
    }
    double sum = 0.0;
    for (const auto& [term, weight] : entries_) sum += weight * weight;
    norm_ = std::sqrt(sum);
}

WeightedVector weight_document(const std::vector<std::string>& tokens,
                               const TermStats& stats,
                               const WeightingOptions& options) {
    std::map<std::string, std::uint32_t> tf;
    for (const auto& token : tokens) ++tf[token];

    std::vector<std::pair<std::string, double>> entries;
    entries.reserve(tf.size());
    for (const auto& [term, count] : tf) {
        auto idf = stats.idf(term, options.log_base);
        if (idf) {
            entries.emplace_back(term, count * *idf * *stats.gini(term));
        } else if (options.unseen == UnseenPolicy::smoothed) {
            double weight = count *
                            apply_log(static_cast<double>(stats.doc_count()),
                                      options.log_base) /
                            kClassCount;
            entries.emplace_back(term, weight);
        }
    }
    return WeightedVector(std::move(entries));
}

WeightedVector weight_class(Label label, const TermStats& stats,
                            const WeightingOptions& options) {
    std::vector<std::pair<std::string, double>> entries;
    for (auto& e : stats.entries()) {
        std::uint32_t df_c = e.df_by_class[class_index(label)];
        if (df_c == 0) continue;
        entries.emplace_back(e.term, df_c * *stats.idf(e.term, options.log_base) *
                                         *stats.gini(e.term));
    }
    return WeightedVector(std::move(entries));
}

std::string_view to_string(LogBase base) {
    switch (base) {
        case LogBase::base10: return "base10";
        case LogBase::base2: return "base2";
        default: return "natural";
    }
}

std::string_view to_string(UnseenPolicy policy) {
    return policy == UnseenPolicy::smoothed ? "smoothed" : "skip";
}

std::optional<LogBase> parse_log_base(std::string_view s) {
    if (s == "natural") return LogBase::natural;
    if (s == "base10") return LogBase::base10;
    if (s == "base2") return LogBase::base2;
    return std::nullopt;
}

std::optional<UnseenPolicy> parse_unseen_policy(std::string_view s) {
    if (s == "skip") return UnseenPolicy::skip;
    if (s == "smoothed") return UnseenPolicy::smoothed;
    return std::nullopt;
}

double cosine(const WeightedVector& a, const WeightedVector& b) {
    if (a.norm() == 0.0 || b.norm() == 0.0) return 0.0;
    double dot = 0.0;
    auto ia = a.entries().begin();
    auto ib = b.entries().begin();
    while (ia != a.entries().end() && ib != b.entries().end()) {
        if (ia->first < ib->first) ++ia;
        else if (ib->first < ia->first) ++ib;
        else {
            dot += ia->second * ib->second;
            ++ia;
            ++ib;
        }
    }
    return dot / (a.norm() * b.norm());
}

}  // namespace influence
