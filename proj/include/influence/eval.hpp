#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "influence/corpus.hpp"
#include "influence/prediction.hpp"
#include "influence/weighting.hpp"

namespace influence {

// Average precision of one ranked list: the mean over reference influencers
// of precision at each influencer position; 0 when the reference holds no
// influencer. The ranked users and the reference must cover the same set.
double mean_average_precision(const RankedList& list,
                              const std::unordered_map<std::string, Label>& reference);

struct ClassMetrics {
    double precision = 0.0;
    double recall = 0.0;
    double f = 0.0;
};

// Per-class precision, recall and F1, indexed like kClasses; every ratio
// with a zero denominator is 0.
std::array<ClassMetrics, kClassCount> classification_metrics(
    const std::vector<Prediction>& predictions,
    const std::unordered_map<std::string, Label>& reference);

double macro_f(const std::vector<Prediction>& predictions,
               const std::unordered_map<std::string, Label>& reference);

// Macro F and mean per-class recall of a constant majority-class answer
// (ties favour non_influencer).
std::pair<double, double> majority_baseline(
    const std::unordered_map<std::string, Label>& reference);

struct DomainEval {
    double map = 0.0;
    double macro_f = 0.0;
    std::array<ClassMetrics, kClassCount> per_class{};
    // The all-majority-class reference points: its actual macro F, plus its
    // mean per-class recall (the 0.5 convention).
    double majority_macro_f = 0.0;
    double majority_mean_recall = 0.0;
    std::optional<double> followers_baseline_map;
};

DomainEval evaluate_run(const RankedList& ranking,
                        const std::vector<Prediction>& predictions,
                        const std::unordered_map<std::string, Label>& reference,
                        const std::optional<RankedList>& followers_baseline =
                            std::nullopt);

// Reference labels of a slice; throws if any user lacks one.
std::unordered_map<std::string, Label> reference_labels(const CorpusView& view);

struct EvalReport {
    std::map<Domain, DomainEval> domains;
    double average_map = 0.0;       // mean over the domains present
    double average_macro_f = 0.0;
};

EvalReport make_report(const std::map<Domain, DomainEval>& domains);

// Key-value text form; header_line, when given, becomes line one verbatim.
void write_report(const std::string& path, const EvalReport& report,
                  const std::string& header_line = "");
EvalReport read_report(const std::string& path);

}  // namespace influence
