#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "panther/graph.hpp"
#include "panther/pantherpp.hpp"
#include "panther/similarity.hpp"

namespace panther {

// Exact distribution of the random T-walk, computed by full enumeration.
// Brute-force references for tests and the oracle CLI; none of this is a
// performance path.

// at(u,v) is the exact probability that one sampled walk (uniform start,
// weighted transitions, truncating at dead ends) contains both u and v;
// the diagonal at(v,v) is the probability the walk touches v at all.
struct ExactPathTable {
    std::uint32_t path_length = 0;
    std::uint64_t vertex_count = 0;
    std::vector<double> pair_mass;  // packed upper triangle incl. diagonal
    double total_mass = 0.0;        // sum over all enumerated walks, should be 1

    double at(VertexId u, VertexId v) const;
};

// Enumerates every walk of length T. Refuses graphs with |V| * avg_deg^T
// beyond 1e7 enumeration steps (OracleTooLargeError).
ExactPathTable exact_path_table(const WeightedGraph& g, std::uint32_t T);

double exact_path_similarity(const WeightedGraph& g, std::uint32_t T, VertexId u, VertexId v);

// |N(u) and N(v)| / |N(u) or N(v)|; defined as 0 when both neighborhoods
// are empty.
double jaccard(const WeightedGraph& g, VertexId u, VertexId v);

// Top-k vertices by Jaccard similarity to v (ties by ascending id, v and
// zero-score vertices excluded).
TopKResult jaccard_top_k(const WeightedGraph& g, VertexId v, std::size_t k);

// Exhaustive Euclidean k-NN over the feature rows with the same ordering
// contract as the kd-tree index.
TopKResult brute_force_knn(const FeatureMatrix& vectors, std::span<const double> query,
                           std::size_t k, std::optional<VertexId> exclude = std::nullopt);

}  // namespace panther
