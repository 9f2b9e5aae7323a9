#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "panther/graph.hpp"

namespace panther {

// Error bound, confidence and path length driving the sample-size formula.
struct SamplingBudget {
    double epsilon = 0.1;
    double delta = 0.1;
    double c = 0.5;
    std::uint32_t path_length = 5;  // T

    void validate() const;
};

// Number of random paths guaranteeing an epsilon-approximation of every
// pairwise path similarity with probability >= 1-delta:
//   ceil( (c / eps^2) * (log2(T*(T-1)/2) + 1 + ln(1/delta)) )
// Independent of graph size. Throws std::invalid_argument for T < 2 or
// out-of-range budget fields.
std::uint64_t required_sample_size(const SamplingBudget& budget);

// R sampled walks plus the vertex-to-path inverted index. Paths are stored
// back to back; posting lists are deduplicated per path and sorted by path
// id. Immutable once built; safe for concurrent reads.
struct PathIndex {
    std::uint64_t sample_size = 0;   // R
    std::uint32_t path_length = 0;   // T
    std::uint64_t seed = 0;
    std::uint64_t vertex_count = 0;

    std::vector<std::uint64_t> path_offsets;    // size R+1
    std::vector<VertexId> path_vertices;
    std::vector<std::uint64_t> inverted_offsets;  // size |V|+1
    std::vector<std::uint32_t> inverted_paths;    // path ids, ascending per vertex

    std::span<const VertexId> path(std::uint32_t path_id) const {
        return {path_vertices.data() + path_offsets[path_id],
                static_cast<std::size_t>(path_offsets[path_id + 1] - path_offsets[path_id])};
    }

    // Posting list P_v: ids of paths containing v, each at most once.
    std::span<const std::uint32_t> paths_containing(VertexId v) const {
        return {inverted_paths.data() + inverted_offsets[v],
                static_cast<std::size_t>(inverted_offsets[v + 1] - inverted_offsets[v])};
    }

    // Builds the inverted index for an explicit path list. Used by tests and
    // by deserialization; generate_paths is the production entry point.
    static PathIndex from_paths(const std::vector<std::vector<VertexId>>& paths,
                                std::uint64_t vertex_count, std::uint32_t path_length,
                                std::uint64_t seed);
};

// Draws R random T-step walks: uniform start vertex, then weighted
// transitions. A walk that reaches a vertex with no neighbors is kept
// truncated. Deterministic for a fixed seed regardless of thread count
// (paths are generated in fixed blocks seeded by seed XOR block id).
// Throws std::invalid_argument when R == 0, T == 0, |V| == 0 or R exceeds
// the 32-bit path-id space.
PathIndex generate_paths(const WeightedGraph& g, std::uint64_t R, std::uint32_t T,
                         std::uint64_t seed, unsigned threads = 1);

// Shared run parameters with the empirical defaults; epsilon falls back to
// sqrt(1/|E|) for the graph at hand when unset.
struct PantherConfig {
    std::optional<double> epsilon;
    double delta = 0.1;
    double c = 0.5;
    std::uint32_t path_length = 5;   // T
    std::uint32_t dimension = 50;    // D (feature vectors)
    std::uint64_t seed = 1;
    unsigned threads = 1;
    std::optional<std::uint64_t> sample_size;  // overrides the formula when set
};

// Resolved budget for a graph: config epsilon or the sqrt(1/|E|) default.
// Throws std::invalid_argument when no epsilon is set and |E| < 2 (the
// default would fall outside (0,1)).
SamplingBudget resolve_budget(const PantherConfig& config, const WeightedGraph& g);

std::uint64_t resolve_sample_size(const PantherConfig& config, const WeightedGraph& g);

}  // namespace panther
