#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "panther/rng.hpp"

namespace panther {

using VertexId = std::uint32_t;

// Undirected weighted network in CSR form. Immutable after construction;
// safe for concurrent reads. Adjacency lists are sorted by neighbor id and
// each vertex carries prefix sums of its incident weights so a weighted
// transition draw is a single binary search.
class WeightedGraph {
public:
    WeightedGraph() = default;

    std::size_t vertex_count() const { return labels_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    std::size_t degree(VertexId v) const {
        return offsets_[v + 1] - offsets_[v];
    }

    std::span<const VertexId> neighbors(VertexId v) const {
        return {neighbors_.data() + offsets_[v], degree(v)};
    }

    std::span<const double> neighbor_weights(VertexId v) const {
        return {weights_.data() + offsets_[v], degree(v)};
    }

    // Prefix sums of neighbor weights; last entry equals weight_sum(v).
    std::span<const double> cumulative_weights(VertexId v) const {
        return {cumulative_.data() + offsets_[v], degree(v)};
    }

    double weight_sum(VertexId v) const {
        const std::size_t d = degree(v);
        return d == 0 ? 0.0 : cumulative_[offsets_[v] + d - 1];
    }

    bool has_edge(VertexId u, VertexId v) const;
    double edge_weight(VertexId u, VertexId v) const;  // 0 when absent

    // True when every edge weight is exactly 1, in which case transitions
    // are uniform over the neighborhood.
    bool unit_weights() const { return unit_weights_; }

    const std::string& label(VertexId v) const { return labels_[v]; }
    std::optional<VertexId> find_vertex(std::string_view label) const;

    // Normalized transition distribution out of v (Sum of values is 1 for
    // non-isolated v; empty for isolated v).
    std::vector<std::pair<VertexId, double>> transition_probabilities(VertexId v) const;

private:
    friend class GraphBuilder;

    std::vector<std::uint64_t> offsets_;  // size |V|+1
    std::vector<VertexId> neighbors_;
    std::vector<double> weights_;
    std::vector<double> cumulative_;
    std::vector<std::string> labels_;
    std::unordered_map<std::string, VertexId> label_to_id_;
    std::size_t edge_count_ = 0;
    bool unit_weights_ = true;
};

// Accumulates labeled edges, then builds the CSR graph. Duplicate edges
// (in either orientation) have their weights summed; self loops are kept
// and count as a single undirected edge.
class GraphBuilder {
public:
    VertexId add_vertex(std::string_view label);
    void add_edge(std::string_view u, std::string_view v, double weight = 1.0);
    void add_edge(VertexId u, VertexId v, double weight = 1.0);

    std::size_t vertex_count() const { return labels_.size(); }

    WeightedGraph build();

private:
    std::unordered_map<std::string, VertexId> label_to_id_;
    std::vector<std::string> labels_;
    std::unordered_map<std::uint64_t, double> edge_weights_;  // key packs (min,max)
};

// Parses "u v [w]" lines; '#' starts a comment line; labels are arbitrary
// whitespace-free strings mapped to dense ids in order of first appearance.
// With weighted=false any third column is ignored and all weights are 1.
// Throws IngestError (with line number) on malformed lines or weights <= 0.
WeightedGraph load_edge_list(std::istream& in, bool weighted = true);

// Writes one "u v w" line per undirected edge (u id <= v id). Reloading the
// output reproduces the same graph up to label-to-id assignment order.
void write_edge_list(const WeightedGraph& g, std::ostream& out);

// One weighted transition step from v. Returns the sampled neighbor, or
// nullopt when v has no neighbors. Throws std::invalid_argument for an
// out-of-range vertex id.
std::optional<VertexId> transition_sample(const WeightedGraph& g, VertexId v, Rng& rng);

}  // namespace panther
