#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "influence/corpus.hpp"
#include "influence/prediction.hpp"
#include "influence/preprocess.hpp"

namespace influence {

struct CooccurrenceOptions {
    // Unordered adjacent pairs by default; ordered keeps (first, second).
    bool ordered_pairs = false;
    // Adjacency never spans two tweets unless this is set.
    bool cross_tweet_boundaries = false;

    bool operator==(const CooccurrenceOptions&) const = default;
};

// Terms as nodes, adjacency in a token stream as edges with an integer
// co-occurrence count. Every token becomes a node even without edges.
class CooccurrenceGraph {
  public:
    using EdgeKey = std::pair<std::uint32_t, std::uint32_t>;

    CooccurrenceGraph() = default;
    CooccurrenceGraph(std::vector<std::string> nodes,
                      std::map<EdgeKey, std::uint32_t> edges, bool ordered);

    const std::vector<std::string>& nodes() const { return nodes_; }   // sorted
    std::size_t node_count() const { return nodes_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    bool ordered() const { return ordered_; }

    std::optional<std::uint32_t> node_index(const std::string& term) const;
    const std::map<EdgeKey, std::uint32_t>& edges() const { return edges_; }
    // Per node: (neighbor index, weight), sorted by neighbor. Symmetric
    // regardless of edge orientation.
    const std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>>&
    adjacency() const {
        return adjacency_;
    }

  private:
    std::vector<std::string> nodes_;
    std::unordered_map<std::string, std::uint32_t> index_;
    std::map<EdgeKey, std::uint32_t> edges_;
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> adjacency_;
    bool ordered_ = false;
};

// One token stream per tweet. Identical adjacent tokens produce no edge.
CooccurrenceGraph build_cooccurrence(
    const std::vector<std::vector<std::string>>& token_streams,
    const CooccurrenceOptions& options = {});

// Euclidean distance over the union of term-pair keys; a pair absent from
// one graph counts as weight 0. Both graphs must share the orientation
// setting.
double euclidean_distance(const CooccurrenceGraph& a, const CooccurrenceGraph& b);

struct UserGraph {
    std::string user_id;
    Label label = Label::unknown;
    CooccurrenceGraph graph;
};

// Graph over the co-occurrence tokens of all tweets in the slice, per user.
std::vector<UserGraph> build_user_graphs(const CorpusView& view, const StopList& stops,
                                         const CooccurrenceOptions& options = {},
                                         unsigned jobs = 1);

// Nearest neighbours by graph distance, similarity 1 / (1 + distance). The
// predicted class carries the larger summed similarity among the k nearest
// (ties resolve to the majority class); the rank score is the summed
// similarity of influencer neighbours. k larger than the training set is
// clamped.
Prediction knn_predict(const std::string& user_id, const CooccurrenceGraph& graph,
                       const std::vector<UserGraph>& training, unsigned k);

std::vector<Prediction> knn_classify_all(const std::vector<UserGraph>& test,
                                         const std::vector<UserGraph>& training,
                                         unsigned k, unsigned jobs = 1);

}  // namespace influence
