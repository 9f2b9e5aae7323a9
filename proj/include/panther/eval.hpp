#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "panther/graph.hpp"
#include "panther/pantherpp.hpp"
#include "panther/sampling.hpp"
#include "panther/similarity.hpp"

namespace panther {

// Accuracy protocols at desk scale: the common-neighbor approximation score
// and the cross-network identity-resolution hit rate, plus the synthetic
// graphs they run on.

using TopKProvider = std::function<TopKResult(VertexId, std::size_t)>;

struct EvalScore {
    std::string algorithm;
    std::size_t k = 0;
    double f_alg = 0.0;
    double f_random = 0.0;          // mean over the seeded random trials
    double f_random_stderr = 0.0;   // standard error of that mean
    double score = 0.0;             // (f_alg - f_random) / (|S| * k)
    double score_stderr = 0.0;      // f_random_stderr / (|S| * k)
};

// Sums the common-neighbor counts g(u,v) over each seed's top-k result and
// compares against uniform random k-selections (trials seeded draws of k
// distinct non-query vertices). Throws std::invalid_argument when seeds is
// empty or k >= |V|.
EvalScore common_neighbor_score(const WeightedGraph& g, const std::string& algorithm_name,
                                const TopKProvider& provider, std::span<const VertexId> seeds,
                                std::size_t k, std::size_t trials, std::uint64_t seed);

std::size_t common_neighbor_count(const WeightedGraph& g, VertexId u, VertexId v);

// Default seed set for the protocol: every vertex on small graphs, a seeded
// uniform sample of 1000 beyond that.
std::vector<VertexId> default_seed_set(const WeightedGraph& g, std::uint64_t seed);

struct ResolutionReport {
    std::vector<std::size_t> ks;      // ascending
    std::vector<double> hit_rates;    // aligned with ks, non-decreasing
};

// Cross-network identity resolution: for each (u in A, u' in B) pair of the
// ground-truth mapping, queries the top-max(ks) vertices of B for u and
// records at which rank u' appears. hit_rates[i] is the fraction of queries
// whose counterpart ranked within ks[i]. Runs the full Panther++ pipeline
// on each network with per-network budgets from config.
ResolutionReport identity_resolution(const WeightedGraph& a, const WeightedGraph& b,
                                     const std::vector<std::pair<VertexId, VertexId>>& mapping,
                                     std::vector<std::size_t> ks, const PantherConfig& config);

// Same protocol against prebuilt vectors/indexes (used by tests and the CLI
// when sidecar files are supplied).
ResolutionReport identity_resolution(const FeatureMatrix& vectors_a, const VectorIndex& index_b,
                                     const std::vector<std::pair<VertexId, VertexId>>& mapping,
                                     std::vector<std::size_t> ks);

// ---- synthetic graphs ------------------------------------------------

// G(n, p): every unordered pair independently an edge. Vertices labeled by
// decimal id; may contain isolated vertices.
WeightedGraph erdos_renyi(std::uint64_t n, double p, std::uint64_t seed);

// Preferential attachment: complete graph on the first m vertices, then
// each arrival attaches to m distinct existing vertices chosen with
// probability proportional to degree. |E| = C(m,2) + (n-m)*m.
WeightedGraph preferential_attachment(std::uint64_t n, std::uint32_t m, std::uint64_t seed);

struct TwoCopies {
    WeightedGraph original;
    WeightedGraph perturbed;
    std::vector<std::pair<VertexId, VertexId>> mapping;  // ground truth, original -> copy
};

// A preferential-attachment base graph and a copy with round(rho*|E|) edges
// rewired to random endpoints. rho = 0 yields an isomorphic copy under the
// identity mapping.
TwoCopies two_copies_perturbed(std::uint64_t n, std::uint32_t m, double rho, std::uint64_t seed);

}  // namespace panther
