#include "influence/cooccurrence.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "influence/error.hpp"
#include "influence/parallel.hpp"
#include "influence/weighting.hpp"

namespace influence {

namespace {

using NamePair = std::pair<const std::string*, const std::string*>;

NamePair edge_names(const CooccurrenceGraph& g, const CooccurrenceGraph::EdgeKey& key) {
    return {&g.nodes()[key.first], &g.nodes()[key.second]};
}

bool name_less(const NamePair& a, const NamePair& b) {
    if (*a.first != *b.first) return *a.first < *b.first;
    return *a.second < *b.second;
}

}  // namespace

CooccurrenceGraph::CooccurrenceGraph(std::vector<std::string> nodes,
                                     std::map<EdgeKey, std::uint32_t> edges,
                                     bool ordered)
    : nodes_(std::move(nodes)), edges_(std::move(edges)), ordered_(ordered) {
    for (std::uint32_t i = 0; i < nodes_.size(); ++i) {
        if (i > 0 && nodes_[i - 1] >= nodes_[i]) {
            throw DataError("graph nodes must be sorted and distinct");
        }
        index_.emplace(nodes_[i], i);
    }
    adjacency_.resize(nodes_.size());
    for (const auto& [key, weight] : edges_) {
        auto [a, b] = key;
        if (a >= nodes_.size() || b >= nodes_.size() || a == b) {
            throw DataError("graph edge references a bad node index");
        }
        if (!ordered_ && a > b) {
            throw DataError("unordered graph edges must be keyed (low, high)");
        }
        adjacency_[a].emplace_back(b, weight);
        adjacency_[b].emplace_back(a, weight);
    }
    for (auto& list : adjacency_) {
        std::sort(list.begin(), list.end());
        // Ordered graphs may carry both (a, b) and (b, a); traversal treats
        // them as one neighbour.
        list.erase(std::unique(list.begin(), list.end(),
                               [](const auto& x, const auto& y) {
                                   return x.first == y.first;
                               }),
                   list.end());
    }
}

std::optional<std::uint32_t> CooccurrenceGraph::node_index(const std::string& term) const {
    auto it = index_.find(term);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

CooccurrenceGraph build_cooccurrence(
    const std::vector<std::vector<std::string>>& token_streams,
    const CooccurrenceOptions& options) {
    std::vector<std::string> nodes;
    for (const auto& stream : token_streams) {
        nodes.insert(nodes.end(), stream.begin(), stream.end());
    }
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());

    std::unordered_map<std::string, std::uint32_t> index;
    for (std::uint32_t i = 0; i < nodes.size(); ++i) index.emplace(nodes[i], i);

    std::map<CooccurrenceGraph::EdgeKey, std::uint32_t> edges;
    auto add_pair = [&](const std::string& a, const std::string& b) {
        if (a == b) return;
        std::uint32_t ia = index.at(a);
        std::uint32_t ib = index.at(b);
        if (!options.ordered_pairs && ia > ib) std::swap(ia, ib);
        ++edges[{ia, ib}];
    };

    if (options.cross_tweet_boundaries) {
        std::vector<std::string> merged;
        for (const auto& stream : token_streams) {
            merged.insert(merged.end(), stream.begin(), stream.end());
        }
        for (std::size_t i = 0; i + 1 < merged.size(); ++i) {
            add_pair(merged[i], merged[i + 1]);
        }
    } else {
        for (const auto& stream : token_streams) {
            for (std::size_t i = 0; i + 1 < stream.size(); ++i) {
                add_pair(stream[i], stream[i + 1]);
            }
        }
    }
    return CooccurrenceGraph(std::move(nodes), std::move(edges), options.ordered_pairs);
}

double euclidean_distance(const CooccurrenceGraph& a, const CooccurrenceGraph& b) {
    if (a.ordered() != b.ordered()) {
        throw DataError("cannot compare graphs with different edge orientation");
    }
    // Sorted node names make index order equal name order, so both edge maps
    // iterate in name-pair order and a merge join covers the key union.
    unsigned __int128 sum = 0;
    auto square_into = [&sum](std::uint32_t w) {
        sum += static_cast<unsigned __int128>(w) * w;
    };
    auto ia = a.edges().begin();
    auto ib = b.edges().begin();
    while (ia != a.edges().end() && ib != b.edges().end()) {
        NamePair na = edge_names(a, ia->first);
        NamePair nb = edge_names(b, ib->first);
        if (name_less(na, nb)) {
            square_into(ia->second);
            ++ia;
        } else if (name_less(nb, na)) {
            square_into(ib->second);
            ++ib;
        } else {
            std::uint32_t d = ia->second > ib->second ? ia->second - ib->second
                                                      : ib->second - ia->second;
            square_into(d);
            ++ia;
            ++ib;
        }
    }
    for (; ia != a.edges().end(); ++ia) square_into(ia->second);
    for (; ib != b.edges().end(); ++ib) square_into(ib->second);
    return std::sqrt(static_cast<double>(sum));
}

std::vector<UserGraph> build_user_graphs(const CorpusView& view, const StopList& stops,
                                         const CooccurrenceOptions& options,
                                         unsigned jobs) {
    const auto& ids = view.user_ids();
    std::vector<UserGraph> graphs(ids.size());
    parallel_for(ids.size(), jobs, [&](std::size_t i) {
        const auto& uid = ids[i];
        std::vector<std::vector<std::string>> streams;
        for (const Tweet* t : view.tweets_of(uid)) {
            streams.push_back(tokenize_cooccurrence(t->text, stops));
        }
        graphs[i] = {uid, view.corpus().user(uid).label,
                     build_cooccurrence(streams, options)};
    });
    return graphs;
}

Prediction knn_predict(const std::string& user_id, const CooccurrenceGraph& graph,
                       const std::vector<UserGraph>& training, unsigned k) {
    if (k < 1) throw DataError("k must be at least 1");
    if (training.empty()) throw DataError("no training graphs");
    if (k > training.size()) k = static_cast<unsigned>(training.size());

    struct Neighbour {
        double distance;
        const UserGraph* graph;
    };
    std::vector<Neighbour> neighbours;
    neighbours.reserve(training.size());
    for (const auto& tg : training) {
        neighbours.push_back({euclidean_distance(graph, tg.graph), &tg});
    }
    std::sort(neighbours.begin(), neighbours.end(),
              [](const Neighbour& x, const Neighbour& y) {
                  if (x.distance != y.distance) return x.distance < y.distance;
                  return x.graph->user_id < y.graph->user_id;
              });

    std::array<double, kClassCount> sums{};
    for (unsigned i = 0; i < k; ++i) {
        double similarity = 1.0 / (1.0 + neighbours[i].distance);
        sums[class_index(neighbours[i].graph->label)] += similarity;
    }

    Prediction p;
    p.user_id = user_id;
    p.rank_score = sums[class_index(Label::influencer)];
    p.predicted_class = sums[class_index(Label::influencer)] >
                                sums[class_index(Label::non_influencer)]
                            ? Label::influencer
                            : Label::non_influencer;
    return p;
}

std::vector<Prediction> knn_classify_all(const std::vector<UserGraph>& test,
                                         const std::vector<UserGraph>& training,
                                         unsigned k, unsigned jobs) {
    std::vector<Prediction> predictions(test.size());
    parallel_for(test.size(), jobs, [&](std::size_t i) {
        predictions[i] = knn_predict(test[i].user_id, test[i].graph, training, k);
    });
    return predictions;
}

}  // namespace influence
