#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "panther/kdtree.hpp"
#include "panther/sampling.hpp"
#include "panther/similarity.hpp"

namespace panther {

// Per-vertex structural feature vectors: the D largest sampled similarity
// scores of each vertex, sorted non-increasing and zero-padded. Row v is
// theta(v).
struct FeatureMatrix {
    std::uint32_t dimension = 0;      // D
    std::uint64_t vertex_count = 0;
    std::vector<double> values;       // row-major, vertex_count * dimension

    std::span<const double> row(VertexId v) const {
        return {values.data() + static_cast<std::size_t>(v) * dimension, dimension};
    }
};

// Builds theta(v) for every vertex from the sampled paths. Vertices with no
// co-occurrences (or no sampled paths) get the all-zero vector. The vertex's
// own similarity to itself is excluded.
FeatureMatrix build_feature_vectors(const PathIndex& idx, std::uint32_t dimension,
                                    unsigned threads = 1);

// Reciprocal Euclidean distance; identical vectors map to +infinity, which
// sorts above every finite similarity. Throws on dimension mismatch.
double reciprocal_euclidean(std::span<const double> a, std::span<const double> b);

// Feature vectors plus an exact kd-tree for Euclidean k-NN queries.
// Immutable after construction; safe for concurrent queries.
class VectorIndex {
public:
    explicit VectorIndex(FeatureMatrix vectors);

    const FeatureMatrix& vectors() const { return vectors_; }
    std::uint32_t dimension() const { return vectors_.dimension; }
    std::uint64_t size() const { return vectors_.vertex_count; }

    // k nearest rows to the query point, scored by reciprocal distance;
    // exclude skips one vertex id (the query's own row for in-index queries).
    TopKResult nearest(std::span<const double> query, std::size_t k,
                       std::optional<VertexId> exclude = std::nullopt) const;

private:
    FeatureMatrix vectors_;
    KdTree tree_;
};

// Top-k structurally similar vertices of query_vertex within its own index;
// the query's row is excluded from the result.
TopKResult top_k_pp(const VectorIndex& index, VertexId query_vertex, std::size_t k);

// Nearest vertices of index_b to the feature vector of query_in_a. Both
// indexes must share the same dimension D.
TopKResult cross_network_top_k(const VectorIndex& index_a, const VectorIndex& index_b,
                               VertexId query_in_a, std::size_t k);

}  // namespace panther
