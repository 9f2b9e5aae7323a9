#include "panther/exact_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "panther/errors.hpp"

namespace panther {

namespace {

std::size_t tri_index(std::uint64_t n, VertexId u, VertexId v) {
    if (u > v) std::swap(u, v);
    // row-major packed upper triangle including the diagonal
    return static_cast<std::size_t>(u) * n - static_cast<std::size_t>(u) * (u + 1) / 2 + v;
}

void check_vertex(const WeightedGraph& g, VertexId v) {
    if (v >= g.vertex_count()) {
        throw std::invalid_argument("vertex id " + std::to_string(v) + " out of range");
    }
}

struct Enumerator {
    const WeightedGraph& g;
    std::uint32_t T;
    ExactPathTable& table;
    std::vector<VertexId> walk;
    std::vector<VertexId> unique_scratch;

    void record(double mass) {
        table.total_mass += mass;
        unique_scratch.clear();
        for (const VertexId v : walk) {
            if (std::find(unique_scratch.begin(), unique_scratch.end(), v) == unique_scratch.end()) {
                unique_scratch.push_back(v);
            }
        }
        for (std::size_t i = 0; i < unique_scratch.size(); ++i) {
            for (std::size_t j = i; j < unique_scratch.size(); ++j) {
                table.pair_mass[tri_index(table.vertex_count, unique_scratch[i], unique_scratch[j])] +=
                    mass;
            }
        }
    }

    void extend(VertexId v, std::uint32_t steps_left, double mass) {
        if (steps_left == 0 || g.degree(v) == 0) {
            // complete walk, or truncated at a dead end
            record(mass);
            return;
        }
        const double total = g.weight_sum(v);
        const auto nbrs = g.neighbors(v);
        const auto ws = g.neighbor_weights(v);
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            walk.push_back(nbrs[i]);
            extend(nbrs[i], steps_left - 1, mass * (ws[i] / total));
            walk.pop_back();
        }
    }
};

}  // namespace

double ExactPathTable::at(VertexId u, VertexId v) const {
    if (u >= vertex_count || v >= vertex_count) {
        throw std::invalid_argument("ExactPathTable::at: vertex id out of range");
    }
    return pair_mass[tri_index(vertex_count, u, v)];
}

ExactPathTable exact_path_table(const WeightedGraph& g, std::uint32_t T) {
    const std::uint64_t n = g.vertex_count();
    if (n == 0) throw std::invalid_argument("exact_path_table: graph is empty");
    if (T == 0) throw std::invalid_argument("exact_path_table: T must be positive");

    std::uint64_t degree_sum = 0;
    for (VertexId v = 0; v < n; ++v) degree_sum += g.degree(v);
    const double avg_degree = static_cast<double>(degree_sum) / static_cast<double>(n);
    const double estimated_walks = static_cast<double>(n) * std::pow(avg_degree, T);
    if (estimated_walks > 1e7) {
        throw OracleTooLargeError("exact enumeration budget exceeded: |V|*d^T ~ " +
                                  std::to_string(estimated_walks));
    }

    ExactPathTable table;
    table.path_length = T;
    table.vertex_count = n;
    table.pair_mass.assign(static_cast<std::size_t>(n) * (n + 1) / 2, 0.0);

    Enumerator e{g, T, table, {}, {}};
    const double start_mass = 1.0 / static_cast<double>(n);
    for (VertexId v = 0; v < n; ++v) {
        e.walk.assign(1, v);
        e.extend(v, T, start_mass);
    }
    return table;
}

double exact_path_similarity(const WeightedGraph& g, std::uint32_t T, VertexId u, VertexId v) {
    check_vertex(g, u);
    check_vertex(g, v);
    return exact_path_table(g, T).at(u, v);
}

double jaccard(const WeightedGraph& g, VertexId u, VertexId v) {
    check_vertex(g, u);
    check_vertex(g, v);
    const auto nu = g.neighbors(u);
    const auto nv = g.neighbors(v);
    std::size_t common = 0;
    std::size_t i = 0, j = 0;
    while (i < nu.size() && j < nv.size()) {
        if (nu[i] < nv[j]) {
            ++i;
        } else if (nu[i] > nv[j]) {
            ++j;
        } else {
            ++common;
            ++i;
            ++j;
        }
    }
    const std::size_t unioned = nu.size() + nv.size() - common;
    if (unioned == 0) return 0.0;
    return static_cast<double>(common) / static_cast<double>(unioned);
}

TopKResult jaccard_top_k(const WeightedGraph& g, VertexId v, std::size_t k) {
    check_vertex(g, v);
    std::vector<std::pair<VertexId, double>> scored;
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
        if (u == v) continue;
        const double s = jaccard(g, v, u);
        if (s > 0.0) scored.emplace_back(u, s);
    }
    std::sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    if (scored.size() > k) scored.resize(k);
    return {v, std::move(scored)};
}

TopKResult brute_force_knn(const FeatureMatrix& vectors, std::span<const double> query,
                           std::size_t k, std::optional<VertexId> exclude) {
    if (query.size() != vectors.dimension) {
        throw std::invalid_argument("brute_force_knn: query dimension mismatch");
    }
    std::vector<std::pair<double, VertexId>> scored;  // (dist^2, id)
    scored.reserve(vectors.vertex_count);
    for (VertexId v = 0; v < vectors.vertex_count; ++v) {
        if (exclude && *exclude == v) continue;
        const auto row = vectors.row(v);
        double dist2 = 0.0;
        for (std::size_t d = 0; d < row.size(); ++d) {
            const double diff = query[d] - row[d];
            dist2 += diff * diff;
        }
        scored.emplace_back(dist2, v);
    }
    const std::size_t keep = std::min(k, scored.size());
    std::partial_sort(scored.begin(), scored.begin() + keep, scored.end());
    scored.resize(keep);

    TopKResult result;
    result.query = exclude.value_or(0);
    result.entries.reserve(keep);
    for (const auto& [dist2, id] : scored) {
        const double dist = std::sqrt(dist2);
        const double score =
            dist == 0.0 ? std::numeric_limits<double>::infinity() : 1.0 / dist;
        result.entries.emplace_back(id, score);
    }
    return result;
}

}  // namespace panther
