#include "panther/pantherpp.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

namespace panther {

namespace {

// Top-D counts of one vertex, written as scores into dst (length D).
void fill_vector(const PathIndex& idx, VertexId v, std::uint32_t dimension, double* dst,
                 std::vector<std::uint32_t>& counts, std::vector<VertexId>& touched) {
    touched.clear();
    for (const std::uint32_t path_id : idx.paths_containing(v)) {
        const auto path = idx.path(path_id);
        for (std::size_t i = 0; i < path.size(); ++i) {
            const VertexId j = path[i];
            if (j == v) continue;
            bool repeat = false;
            for (std::size_t l = 0; l < i; ++l) {
                if (path[l] == j) {
                    repeat = true;
                    break;
                }
            }
            if (repeat) continue;
            if (counts[j] == 0) touched.push_back(j);
            ++counts[j];
        }
    }

    std::vector<std::uint32_t> values;
    values.reserve(touched.size());
    for (const VertexId j : touched) {
        values.push_back(counts[j]);
        counts[j] = 0;  // reset scratch for the next vertex
    }

    const std::size_t keep = std::min<std::size_t>(dimension, values.size());
    std::partial_sort(values.begin(), values.begin() + keep, values.end(),
                      std::greater<std::uint32_t>());

    const auto r = static_cast<double>(idx.sample_size);
    for (std::size_t d = 0; d < keep; ++d) dst[d] = static_cast<double>(values[d]) / r;
    for (std::size_t d = keep; d < dimension; ++d) dst[d] = 0.0;
}

}  // namespace

FeatureMatrix build_feature_vectors(const PathIndex& idx, std::uint32_t dimension,
                                    unsigned threads) {
    if (dimension == 0) throw std::invalid_argument("build_feature_vectors: D must be positive");
    FeatureMatrix m;
    m.dimension = dimension;
    m.vertex_count = idx.vertex_count;
    m.values.assign(static_cast<std::size_t>(idx.vertex_count) * dimension, 0.0);

    const auto worker = [&](std::atomic<std::uint64_t>& next) {
        std::vector<std::uint32_t> counts(idx.vertex_count, 0);
        std::vector<VertexId> touched;
        constexpr std::uint64_t chunk = 64;
        for (;;) {
            const std::uint64_t begin = next.fetch_add(chunk);
            if (begin >= idx.vertex_count) return;
            const std::uint64_t end = std::min(begin + chunk, idx.vertex_count);
            for (std::uint64_t v = begin; v < end; ++v) {
                fill_vector(idx, static_cast<VertexId>(v), dimension,
                            m.values.data() + v * dimension, counts, touched);
            }
        }
    };

    std::atomic<std::uint64_t> next{0};
    if (threads <= 1 || idx.vertex_count < 128) {
        worker(next);
    } else {
        std::vector<std::thread> pool;
        const unsigned count = std::min<std::uint64_t>(threads, idx.vertex_count);
        pool.reserve(count);
        for (unsigned t = 0; t < count; ++t) pool.emplace_back([&] { worker(next); });
        for (auto& t : pool) t.join();
    }
    return m;
}

double reciprocal_euclidean(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("reciprocal_euclidean: dimension mismatch");
    }
    double dist2 = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double diff = a[i] - b[i];
        dist2 += diff * diff;
    }
    if (dist2 == 0.0) return std::numeric_limits<double>::infinity();
    return 1.0 / std::sqrt(dist2);
}

VectorIndex::VectorIndex(FeatureMatrix vectors)
    : vectors_(std::move(vectors)), tree_(vectors_.values, vectors_.dimension) {}

TopKResult VectorIndex::nearest(std::span<const double> query, std::size_t k,
                                std::optional<VertexId> exclude) const {
    const auto neighbors = tree_.nearest(query, k, exclude);
    TopKResult result;
    result.query = exclude.value_or(0);
    result.entries.reserve(neighbors.size());
    for (const auto& n : neighbors) {
        const double score = n.distance == 0.0 ? std::numeric_limits<double>::infinity()
                                               : 1.0 / n.distance;
        result.entries.emplace_back(static_cast<VertexId>(n.id), score);
    }
    return result;
}

TopKResult top_k_pp(const VectorIndex& index, VertexId query_vertex, std::size_t k) {
    if (query_vertex >= index.size()) {
        throw std::invalid_argument("top_k_pp: query vertex out of range");
    }
    auto result = index.nearest(index.vectors().row(query_vertex), k, query_vertex);
    result.query = query_vertex;
    return result;
}

TopKResult cross_network_top_k(const VectorIndex& index_a, const VectorIndex& index_b,
                               VertexId query_in_a, std::size_t k) {
    if (index_a.dimension() != index_b.dimension()) {
        throw std::invalid_argument("cross_network_top_k: indexes have different dimensions");
    }
    if (query_in_a >= index_a.size()) {
        throw std::invalid_argument("cross_network_top_k: query vertex out of range");
    }
    auto result = index_b.nearest(index_a.vectors().row(query_in_a), k);
    result.query = query_in_a;
    return result;
}

}  // namespace panther
