#include "panther/sampling.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

namespace panther {

void SamplingBudget::validate() const {
    if (!(epsilon > 0.0 && epsilon < 1.0)) {
        throw std::invalid_argument("budget: epsilon must lie in (0,1)");
    }
    if (!(delta > 0.0 && delta < 1.0)) {
        throw std::invalid_argument("budget: delta must lie in (0,1)");
    }
    if (!(c > 0.0) || !std::isfinite(c)) {
        throw std::invalid_argument("budget: c must be a positive finite constant");
    }
    if (path_length < 2) {
        throw std::invalid_argument("budget: path length T must be >= 2");
    }
}

std::uint64_t required_sample_size(const SamplingBudget& budget) {
    budget.validate();
    const double t = static_cast<double>(budget.path_length);
    const double pair_ranges = t * (t - 1.0) / 2.0;  // C(T,2)
    const double bound = (budget.c / (budget.epsilon * budget.epsilon)) *
                         (std::log2(pair_ranges) + 1.0 + std::log(1.0 / budget.delta));
    const double rounded = std::ceil(bound);
    if (!std::isfinite(rounded) || rounded < 1.0 || rounded > 9.0e18) {
        throw std::invalid_argument("budget: required sample size out of range");
    }
    return static_cast<std::uint64_t>(rounded);
}

namespace {

constexpr std::uint64_t kBlockSize = 4096;

struct PathBlock {
    std::vector<VertexId> vertices;
    std::vector<std::uint32_t> lengths;
};

void sample_block(const WeightedGraph& g, std::uint64_t block_id, std::uint64_t count,
                  std::uint32_t T, std::uint64_t mixed_seed, PathBlock& out) {
    Rng rng(mixed_seed ^ block_id);
    const std::uint64_t n = g.vertex_count();
    out.vertices.reserve(count * (T + 1));
    out.lengths.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        auto v = static_cast<VertexId>(rng.uniform_below(n));
        std::uint32_t len = 1;
        out.vertices.push_back(v);
        for (std::uint32_t step = 0; step < T; ++step) {
            const auto next = transition_sample(g, v, rng);
            if (!next) break;  // dead end: keep the truncated walk
            v = *next;
            out.vertices.push_back(v);
            ++len;
        }
        out.lengths.push_back(len);
    }
}

// Appends the unique vertices of [first, last) to sink. Paths are short, so
// a quadratic scan beats sorting or hashing here.
template <typename Fn>
void for_each_unique_vertex(std::span<const VertexId> path, Fn&& fn) {
    for (std::size_t i = 0; i < path.size(); ++i) {
        bool seen = false;
        for (std::size_t j = 0; j < i; ++j) {
            if (path[j] == path[i]) {
                seen = true;
                break;
            }
        }
        if (!seen) fn(path[i]);
    }
}

void build_inverted_index(PathIndex& idx) {
    const std::uint64_t n = idx.vertex_count;
    idx.inverted_offsets.assign(n + 1, 0);
    for (std::uint32_t p = 0; p < idx.sample_size; ++p) {
        for_each_unique_vertex(idx.path(p), [&](VertexId v) { ++idx.inverted_offsets[v + 1]; });
    }
    for (std::uint64_t v = 0; v < n; ++v) idx.inverted_offsets[v + 1] += idx.inverted_offsets[v];

    idx.inverted_paths.resize(idx.inverted_offsets[n]);
    std::vector<std::uint64_t> cursor(idx.inverted_offsets.begin(), idx.inverted_offsets.end() - 1);
    for (std::uint32_t p = 0; p < idx.sample_size; ++p) {
        for_each_unique_vertex(idx.path(p), [&](VertexId v) { idx.inverted_paths[cursor[v]++] = p; });
    }
}

}  // namespace

PathIndex PathIndex::from_paths(const std::vector<std::vector<VertexId>>& paths,
                                std::uint64_t vertex_count, std::uint32_t path_length,
                                std::uint64_t seed) {
    PathIndex idx;
    idx.sample_size = paths.size();
    idx.path_length = path_length;
    idx.seed = seed;
    idx.vertex_count = vertex_count;
    idx.path_offsets.reserve(paths.size() + 1);
    idx.path_offsets.push_back(0);
    for (const auto& p : paths) {
        for (VertexId v : p) {
            if (v >= vertex_count) throw std::invalid_argument("from_paths: vertex id out of range");
            idx.path_vertices.push_back(v);
        }
        idx.path_offsets.push_back(idx.path_vertices.size());
    }
    build_inverted_index(idx);
    return idx;
}

PathIndex generate_paths(const WeightedGraph& g, std::uint64_t R, std::uint32_t T,
                         std::uint64_t seed, unsigned threads) {
    if (g.vertex_count() == 0) throw std::invalid_argument("generate_paths: graph is empty");
    if (R == 0) throw std::invalid_argument("generate_paths: R must be positive");
    if (T == 0) throw std::invalid_argument("generate_paths: T must be positive");
    if (R > std::numeric_limits<std::uint32_t>::max()) {
        throw std::invalid_argument("generate_paths: R exceeds 32-bit path-id space");
    }

    const std::uint64_t num_blocks = (R + kBlockSize - 1) / kBlockSize;
    const std::uint64_t mixed_seed = mix_seed(seed);
    std::vector<PathBlock> blocks(num_blocks);

    const auto block_count = [&](std::uint64_t b) {
        return std::min(kBlockSize, R - b * kBlockSize);
    };

    if (threads <= 1 || num_blocks == 1) {
        for (std::uint64_t b = 0; b < num_blocks; ++b) {
            sample_block(g, b, block_count(b), T, mixed_seed, blocks[b]);
        }
    } else {
        std::atomic<std::uint64_t> next_block{0};
        const unsigned worker_count = std::min<std::uint64_t>(threads, num_blocks);
        std::vector<std::thread> workers;
        workers.reserve(worker_count);
        for (unsigned w = 0; w < worker_count; ++w) {
            workers.emplace_back([&] {
                for (;;) {
                    const std::uint64_t b = next_block.fetch_add(1);
                    if (b >= num_blocks) return;
                    sample_block(g, b, block_count(b), T, mixed_seed, blocks[b]);
                }
            });
        }
        for (auto& w : workers) w.join();
    }

    PathIndex idx;
    idx.sample_size = R;
    idx.path_length = T;
    idx.seed = seed;
    idx.vertex_count = g.vertex_count();

    std::uint64_t total_vertices = 0;
    for (const auto& b : blocks) total_vertices += b.vertices.size();
    idx.path_offsets.reserve(R + 1);
    idx.path_offsets.push_back(0);
    idx.path_vertices.reserve(total_vertices);
    for (auto& b : blocks) {
        std::size_t pos = 0;
        for (const std::uint32_t len : b.lengths) {
            idx.path_vertices.insert(idx.path_vertices.end(), b.vertices.begin() + pos,
                                     b.vertices.begin() + pos + len);
            pos += len;
            idx.path_offsets.push_back(idx.path_vertices.size());
        }
        b.vertices.clear();
        b.vertices.shrink_to_fit();
    }

    build_inverted_index(idx);
    return idx;
}

SamplingBudget resolve_budget(const PantherConfig& config, const WeightedGraph& g) {
    SamplingBudget budget;
    budget.delta = config.delta;
    budget.c = config.c;
    budget.path_length = config.path_length;
    if (config.epsilon) {
        budget.epsilon = *config.epsilon;
    } else {
        if (g.edge_count() < 2) {
            throw std::invalid_argument(
                "default epsilon sqrt(1/|E|) needs |E| >= 2; pass epsilon explicitly");
        }
        budget.epsilon = std::sqrt(1.0 / static_cast<double>(g.edge_count()));
    }
    budget.validate();
    return budget;
}

std::uint64_t resolve_sample_size(const PantherConfig& config, const WeightedGraph& g) {
    if (config.sample_size) {
        if (*config.sample_size == 0) throw std::invalid_argument("sample size must be positive");
        return *config.sample_size;
    }
    return required_sample_size(resolve_budget(config, g));
}

}  // namespace panther
