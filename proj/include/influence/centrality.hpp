#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "influence/cooccurrence.hpp"

namespace influence {

// Node-level measures over the binarized graph (any positive co-occurrence
// count is an edge). The last three need a community partition.
enum class Measure {
    degree,
    betweenness,
    closeness,
    eigenvector,
    subgraph,
    eccentricity,
    transitivity,
    embeddedness,
    within_module_degree,
    participation,
};

const std::vector<Measure>& all_measures();
std::string_view to_string(Measure m);
std::optional<Measure> parse_measure(std::string_view s);
bool needs_partition(Measure m);

struct CommunityPartition {
    std::vector<std::uint32_t> assignment;   // community per node index
    std::uint32_t community_count = 0;
};

// One value per node, aligned with graph.nodes(). Conventions for
// degenerate cases: an isolated node has closeness, eccentricity,
// transitivity, embeddedness and participation 0; a one-class community
// spread gives within-module degree 0 when its deviation is 0.
std::vector<double> centrality(const CooccurrenceGraph& graph, Measure measure,
                               const CommunityPartition* partition = nullptr);

// Mean over nodes; 0 for an empty graph.
double summarize_mean(const std::vector<double>& values);

// Seeded asynchronous label propagation: every node starts in its own
// community, repeatedly adopts the most frequent label among neighbours
// (ties pick the smallest label) in shuffled order until stable. Labels are
// renumbered densely by node order.
CommunityPartition partition_communities(const CooccurrenceGraph& graph,
                                         std::uint64_t seed = 0);

// Lines of 'term<TAB>community_index'. Every graph node must appear; terms
// the graph lacks are ignored, indices are renumbered densely.
CommunityPartition load_partition(const std::string& path,
                                  const CooccurrenceGraph& graph);
void save_partition(const std::string& path, const CooccurrenceGraph& graph,
                    const CommunityPartition& partition);

}  // namespace influence
