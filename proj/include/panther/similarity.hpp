#pragma once

#include <cstdint>
#include <vector>

#include "panther/sampling.hpp"

namespace panther {

// Sampled path similarity between two vertices: the fraction of sampled
// paths containing both. co_count is the exact integer numerator.
struct SimilarityScore {
    VertexId query = 0;
    VertexId target = 0;
    std::uint64_t co_count = 0;
    double value = 0.0;
};

struct TopKResult {
    VertexId query = 0;
    std::vector<std::pair<VertexId, double>> entries;  // (vertex, score), best first
};

// |P_u intersect P_v| / R via a sorted posting-list merge. Symmetric.
// Throws std::invalid_argument when u == v (self similarity is excluded
// from the public contract) or when an id is out of range.
SimilarityScore similarity(const PathIndex& idx, VertexId u, VertexId v);

// Co-occurrence counts of v against every other vertex sharing a sampled
// path with it, sorted by vertex id. The integer counts are the exact
// numerators of the similarity estimates.
std::vector<std::pair<VertexId, std::uint32_t>> cooccurrence_counts(const PathIndex& idx,
                                                                    VertexId v);

// Top-k co-occurring vertices of v by sampled similarity, selected with a
// bounded heap; ties broken by ascending vertex id, v itself excluded.
// Fewer than k candidates simply yields a shorter result.
TopKResult top_k(const PathIndex& idx, VertexId v, std::size_t k);

}  // namespace panther
