#include "panther/eval.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace panther {

std::size_t common_neighbor_count(const WeightedGraph& g, VertexId u, VertexId v) {
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
    return common;
}

std::vector<VertexId> default_seed_set(const WeightedGraph& g, std::uint64_t seed) {
    const std::uint64_t n = g.vertex_count();
    std::vector<VertexId> all(n);
    std::iota(all.begin(), all.end(), 0u);
    constexpr std::uint64_t kCap = 1000;
    if (n <= kCap) return all;
    // seeded partial Fisher-Yates
    Rng rng(seed);
    for (std::uint64_t i = 0; i < kCap; ++i) {
        const std::uint64_t j = i + rng.uniform_below(n - i);
        std::swap(all[i], all[j]);
    }
    all.resize(kCap);
    std::sort(all.begin(), all.end());
    return all;
}

EvalScore common_neighbor_score(const WeightedGraph& g, const std::string& algorithm_name,
                                const TopKProvider& provider, std::span<const VertexId> seeds,
                                std::size_t k, std::size_t trials, std::uint64_t seed) {
    const std::uint64_t n = g.vertex_count();
    if (seeds.empty()) throw std::invalid_argument("common_neighbor_score: empty seed set");
    if (k == 0 || k >= n) {
        throw std::invalid_argument("common_neighbor_score: require 1 <= k < |V|");
    }
    if (trials == 0) throw std::invalid_argument("common_neighbor_score: trials must be positive");

    double f_alg = 0.0;
    for (const VertexId u : seeds) {
        const TopKResult r = provider(u, k);
        for (const auto& [v, score] : r.entries) {
            f_alg += static_cast<double>(common_neighbor_count(g, u, v));
        }
    }

    // Random baseline: k distinct non-query vertices per seed, per trial.
    Rng rng(seed);
    std::vector<double> trial_sums(trials, 0.0);
    std::vector<VertexId> pool(n);
    for (std::size_t t = 0; t < trials; ++t) {
        double sum = 0.0;
        for (const VertexId u : seeds) {
            std::iota(pool.begin(), pool.end(), 0u);
            std::swap(pool[u], pool[n - 1]);  // exclude the query vertex
            const std::uint64_t avail = n - 1;
            for (std::size_t i = 0; i < k; ++i) {
                const std::uint64_t j = i + rng.uniform_below(avail - i);
                std::swap(pool[i], pool[j]);
                sum += static_cast<double>(common_neighbor_count(g, u, pool[i]));
            }
        }
        trial_sums[t] = sum;
    }

    const double mean =
        std::accumulate(trial_sums.begin(), trial_sums.end(), 0.0) / static_cast<double>(trials);
    double variance = 0.0;
    for (const double s : trial_sums) variance += (s - mean) * (s - mean);
    variance = trials > 1 ? variance / static_cast<double>(trials - 1) : 0.0;
    const double stderr_mean = std::sqrt(variance / static_cast<double>(trials));

    const double denom = static_cast<double>(seeds.size()) * static_cast<double>(k);
    EvalScore out;
    out.algorithm = algorithm_name;
    out.k = k;
    out.f_alg = f_alg;
    out.f_random = mean;
    out.f_random_stderr = stderr_mean;
    out.score = (f_alg - mean) / denom;
    out.score_stderr = stderr_mean / denom;
    return out;
}

ResolutionReport identity_resolution(const FeatureMatrix& vectors_a, const VectorIndex& index_b,
                                     const std::vector<std::pair<VertexId, VertexId>>& mapping,
                                     std::vector<std::size_t> ks) {
    if (mapping.empty()) throw std::invalid_argument("identity_resolution: empty mapping");
    if (ks.empty()) throw std::invalid_argument("identity_resolution: empty k sweep");
    std::sort(ks.begin(), ks.end());
    const std::size_t k_max = ks.back();

    std::vector<std::size_t> hits(ks.size(), 0);
    for (const auto& [u, counterpart] : mapping) {
        const auto result = index_b.nearest(vectors_a.row(u), k_max);
        std::size_t rank = 0;  // 0 = not found within k_max
        for (std::size_t i = 0; i < result.entries.size(); ++i) {
            if (result.entries[i].first == counterpart) {
                rank = i + 1;
                break;
            }
        }
        if (rank == 0) continue;
        for (std::size_t i = 0; i < ks.size(); ++i) {
            if (rank <= ks[i]) ++hits[i];
        }
    }

    ResolutionReport report;
    report.ks = std::move(ks);
    report.hit_rates.reserve(report.ks.size());
    for (const std::size_t h : hits) {
        report.hit_rates.push_back(static_cast<double>(h) / static_cast<double>(mapping.size()));
    }
    return report;
}

ResolutionReport identity_resolution(const WeightedGraph& a, const WeightedGraph& b,
                                     const std::vector<std::pair<VertexId, VertexId>>& mapping,
                                     std::vector<std::size_t> ks, const PantherConfig& config) {
    const auto build_index = [&](const WeightedGraph& g) {
        const std::uint64_t r = resolve_sample_size(config, g);
        const PathIndex idx = generate_paths(g, r, config.path_length, config.seed, config.threads);
        return VectorIndex(build_feature_vectors(idx, config.dimension, config.threads));
    };
    const VectorIndex index_a = build_index(a);
    const VectorIndex index_b = build_index(b);
    return identity_resolution(index_a.vectors(), index_b, mapping, std::move(ks));
}

WeightedGraph erdos_renyi(std::uint64_t n, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("erdos_renyi: p must lie in [0,1]");
    GraphBuilder builder;
    for (std::uint64_t v = 0; v < n; ++v) builder.add_vertex(std::to_string(v));
    Rng rng(seed);
    for (std::uint64_t u = 0; u < n; ++u) {
        for (std::uint64_t v = u + 1; v < n; ++v) {
            if (rng.next_double01() < p) {
                builder.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v));
            }
        }
    }
    return builder.build();
}

WeightedGraph preferential_attachment(std::uint64_t n, std::uint32_t m, std::uint64_t seed) {
    if (m == 0) throw std::invalid_argument("preferential_attachment: m must be positive");
    if (n <= m) throw std::invalid_argument("preferential_attachment: need n > m");
    GraphBuilder builder;
    for (std::uint64_t v = 0; v < n; ++v) builder.add_vertex(std::to_string(v));

    // endpoint pool: each vertex appears once per incident edge end, so a
    // uniform draw is degree-proportional
    std::vector<VertexId> pool;
    pool.reserve(2 * (static_cast<std::size_t>(m) * (m - 1) / 2 + (n - m) * m));
    for (std::uint32_t u = 0; u < m; ++u) {
        for (std::uint32_t v = u + 1; v < m; ++v) {
            builder.add_edge(u, v);
            pool.push_back(u);
            pool.push_back(v);
        }
    }
    if (m == 1) pool.push_back(0);  // degenerate seed: lone vertex, no edges yet

    Rng rng(seed);
    std::vector<VertexId> targets;
    for (std::uint64_t v = m; v < n; ++v) {
        targets.clear();
        while (targets.size() < m) {
            const VertexId t = pool[rng.uniform_below(pool.size())];
            if (std::find(targets.begin(), targets.end(), t) == targets.end()) {
                targets.push_back(t);
            }
        }
        for (const VertexId t : targets) {
            builder.add_edge(static_cast<VertexId>(v), t);
            pool.push_back(static_cast<VertexId>(v));
            pool.push_back(t);
        }
    }
    return builder.build();
}

TwoCopies two_copies_perturbed(std::uint64_t n, std::uint32_t m, double rho, std::uint64_t seed) {
    if (!(rho >= 0.0 && rho <= 1.0)) {
        throw std::invalid_argument("two_copies_perturbed: rho must lie in [0,1]");
    }
    TwoCopies out;
    out.original = preferential_attachment(n, m, seed);

    // collect the undirected edge set of the original
    std::vector<std::pair<VertexId, VertexId>> edges;
    edges.reserve(out.original.edge_count());
    for (VertexId u = 0; u < n; ++u) {
        for (const VertexId v : out.original.neighbors(u)) {
            if (v >= u) edges.emplace_back(u, v);
        }
    }

    Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
    const auto rewire_count =
        static_cast<std::size_t>(std::llround(rho * static_cast<double>(edges.size())));
    // choose distinct edges to rewire via partial shuffle
    for (std::size_t i = 0; i < rewire_count; ++i) {
        const std::size_t j = i + rng.uniform_below(edges.size() - i);
        std::swap(edges[i], edges[j]);
    }

    const auto has = [&edges](VertexId a, VertexId b) {
        if (a > b) std::swap(a, b);
        return std::find(edges.begin(), edges.end(), std::make_pair(a, b)) != edges.end();
    };
    for (std::size_t i = 0; i < rewire_count; ++i) {
        const VertexId keep = edges[i].first;
        for (int attempt = 0; attempt < 64; ++attempt) {
            const auto candidate = static_cast<VertexId>(rng.uniform_below(n));
            if (candidate == keep || has(keep, candidate)) continue;
            edges[i] = keep <= candidate ? std::make_pair(keep, candidate)
                                         : std::make_pair(candidate, keep);
            break;
        }
    }

    GraphBuilder builder;
    for (std::uint64_t v = 0; v < n; ++v) builder.add_vertex(std::to_string(v));
    for (const auto& [u, v] : edges) builder.add_edge(u, v);
    out.perturbed = builder.build();

    out.mapping.reserve(n);
    for (std::uint64_t v = 0; v < n; ++v) {
        out.mapping.emplace_back(static_cast<VertexId>(v), static_cast<VertexId>(v));
    }
    return out;
}

}  // namespace panther
