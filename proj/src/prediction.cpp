#include "influence/prediction.hpp"

#include <algorithm>

namespace influence {

RankedList make_ranked_list(Domain domain, const std::vector<Prediction>& predictions) {
    RankedList list;
    list.domain = domain;
    list.entries.reserve(predictions.size());
    for (const auto& p : predictions) {
        list.entries.push_back({p.user_id, p.rank_score, p.predicted_class});
    }
    std::sort(list.entries.begin(), list.entries.end(),
              [](const RankedEntry& a, const RankedEntry& b) {
                  if (a.score != b.score) return a.score > b.score;
                  return a.user_id < b.user_id;
              });
    return list;
}

}  // namespace influence
