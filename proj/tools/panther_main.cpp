// panther: random-path-sampling top-k vertex similarity for large networks.
// Subcommands: sample, topk, topk-pp, oracle, eval cn, eval resolve, synth,
// bench. TSV results go to stdout, logs and the resolved configuration to
// stderr. Exit codes: 0 success, 1 usage error, 2 data error.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "panther/errors.hpp"
#include "panther/eval.hpp"
#include "panther/exact_oracle.hpp"
#include "panther/graph.hpp"
#include "panther/pantherpp.hpp"
#include "panther/sampling.hpp"
#include "panther/serialize.hpp"
#include "panther/similarity.hpp"

namespace {

using namespace panther;

struct CommonOptions {
    std::string graph_path;
    std::string graph_b_path;
    bool unweighted = false;
    double epsilon = 0.0;  // 0 = default sqrt(1/|E|)
    double delta = 0.1;
    double c = 0.5;
    std::uint32_t path_length = 5;
    std::uint32_t dimension = 50;
    std::uint64_t sample_override = 0;  // 0 = use the formula
    std::uint64_t seed = 1;
    unsigned threads = 0;  // 0 = hardware concurrency
    std::string paths_file;
    std::string vectors_file;
    std::string vectors_file_b;

    PantherConfig config() const {
        PantherConfig cfg;
        if (epsilon > 0.0) cfg.epsilon = epsilon;
        cfg.delta = delta;
        cfg.c = c;
        cfg.path_length = path_length;
        cfg.dimension = dimension;
        cfg.seed = seed;
        cfg.threads = resolved_threads();
        if (sample_override > 0) cfg.sample_size = sample_override;
        return cfg;
    }

    unsigned resolved_threads() const {
        if (threads > 0) return threads;
        const unsigned hw = std::thread::hardware_concurrency();
        return hw > 0 ? hw : 1;
    }
};

void add_budget_options(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--epsilon", opts.epsilon, "error bound in (0,1); default sqrt(1/|E|)");
    cmd->add_option("--delta", opts.delta, "failure probability in (0,1)")->capture_default_str();
    cmd->add_option("--c", opts.c, "universal sampling constant")->capture_default_str();
    cmd->add_option("--T", opts.path_length, "random walk length")->capture_default_str();
    cmd->add_option("--R", opts.sample_override, "explicit path count (overrides the formula)");
    cmd->add_option("--seed", opts.seed, "RNG seed")->capture_default_str();
    cmd->add_option("--threads", opts.threads, "worker threads (0 = all cores)");
}

// Binary snapshots start with the "PTNG" magic; anything else is parsed as
// an edge-list text file.
WeightedGraph load_graph_file(const std::string& path, bool unweighted) {
    std::ifstream probe(path, std::ios::binary);
    if (!probe) throw DataError("cannot open graph file '" + path + "'");
    char magic[4] = {};
    probe.read(magic, 4);
    if (probe.gcount() == 4 && magic[0] == 'P' && magic[1] == 'T' && magic[2] == 'N' &&
        magic[3] == 'G') {
        probe.seekg(0);
        return load_graph(probe);
    }
    probe.close();
    std::ifstream in(path);
    if (!in) throw DataError("cannot open graph file '" + path + "'");
    try {
        return load_edge_list(in, !unweighted);
    } catch (const IngestError& e) {
        throw DataError(path + ": " + e.what());
    }
}

VertexId require_vertex(const WeightedGraph& g, const std::string& label) {
    const auto id = g.find_vertex(label);
    if (!id) throw DataError("query label '" + label + "' not found in graph");
    return *id;
}

void echo_graph(const WeightedGraph& g, const std::string& path) {
    std::fprintf(stderr, "# graph=%s vertices=%zu edges=%zu\n", path.c_str(), g.vertex_count(),
                 g.edge_count());
}

void echo_budget(const CommonOptions& opts, const WeightedGraph& g, std::uint64_t r,
                 bool epsilon_defaulted) {
    std::fprintf(stderr,
                 "# epsilon=%.6g%s delta=%.6g c=%.6g T=%u R=%llu D=%u seed=%llu threads=%u\n",
                 epsilon_defaulted ? std::sqrt(1.0 / static_cast<double>(g.edge_count()))
                                   : opts.epsilon,
                 epsilon_defaulted ? " (default sqrt(1/|E|))" : "", opts.delta, opts.c,
                 opts.path_length, static_cast<unsigned long long>(r), opts.dimension,
                 static_cast<unsigned long long>(opts.seed), opts.resolved_threads());
}

// Loads the paths sidecar when it exists, otherwise samples (and saves when
// a sidecar path was given).
PathIndex obtain_path_index(const CommonOptions& opts, const WeightedGraph& g,
                            const std::string& paths_file) {
    if (!paths_file.empty() && std::filesystem::exists(paths_file)) {
        PathIndex idx = load_path_index_file(paths_file);
        if (idx.vertex_count != g.vertex_count()) {
            throw DataError("paths file '" + paths_file +
                            "' was built for a different graph (vertex count mismatch)");
        }
        std::fprintf(stderr, "# paths=%s (loaded) R=%llu T=%u seed=%llu\n", paths_file.c_str(),
                     static_cast<unsigned long long>(idx.sample_size), idx.path_length,
                     static_cast<unsigned long long>(idx.seed));
        return idx;
    }
    const PantherConfig cfg = opts.config();
    const std::uint64_t r = resolve_sample_size(cfg, g);
    echo_budget(opts, g, r, !cfg.epsilon.has_value());
    PathIndex idx = generate_paths(g, r, cfg.path_length, cfg.seed, cfg.threads);
    if (!paths_file.empty()) {
        save_path_index_file(idx, paths_file);
        std::fprintf(stderr, "# paths=%s (saved)\n", paths_file.c_str());
    }
    return idx;
}

FeatureMatrix obtain_vectors(const CommonOptions& opts, const WeightedGraph& g,
                             const std::string& vectors_file, const std::string& paths_file) {
    if (!vectors_file.empty() && std::filesystem::exists(vectors_file)) {
        FeatureMatrix m = load_feature_matrix_file(vectors_file);
        if (m.vertex_count != g.vertex_count()) {
            throw DataError("vectors file '" + vectors_file +
                            "' was built for a different graph (vertex count mismatch)");
        }
        std::fprintf(stderr, "# vectors=%s (loaded) D=%u\n", vectors_file.c_str(), m.dimension);
        return m;
    }
    const PathIndex idx = obtain_path_index(opts, g, paths_file);
    FeatureMatrix m = build_feature_vectors(idx, opts.dimension, opts.resolved_threads());
    if (!vectors_file.empty()) {
        save_feature_matrix_file(m, vectors_file);
        std::fprintf(stderr, "# vectors=%s (saved)\n", vectors_file.c_str());
    }
    return m;
}

void print_topk(const WeightedGraph& g, const WeightedGraph& target_graph,
                const TopKResult& result) {
    for (std::size_t i = 0; i < result.entries.size(); ++i) {
        std::printf("%s\t%zu\t%s\t%.6f\n", g.label(result.query).c_str(), i + 1,
                    target_graph.label(result.entries[i].first).c_str(),
                    result.entries[i].second);
    }
}

int run_sample(const CommonOptions& opts, const std::string& snapshot_path) {
    const WeightedGraph g = load_graph_file(opts.graph_path, opts.unweighted);
    echo_graph(g, opts.graph_path);
    if (!snapshot_path.empty()) {
        std::ofstream out(snapshot_path, std::ios::binary | std::ios::trunc);
        if (!out) throw DataError("cannot open '" + snapshot_path + "' for writing");
        save_graph(g, out);
        std::fprintf(stderr, "# graph-snapshot=%s (saved)\n", snapshot_path.c_str());
    }
    const PantherConfig cfg = opts.config();
    const std::uint64_t r = resolve_sample_size(cfg, g);
    echo_budget(opts, g, r, !cfg.epsilon.has_value());
    const PathIndex idx = generate_paths(g, r, cfg.path_length, cfg.seed, cfg.threads);
    save_path_index_file(idx, opts.paths_file);
    std::fprintf(stderr, "# paths=%s (saved)\n", opts.paths_file.c_str());
    return 0;
}

int run_topk(const CommonOptions& opts, const std::string& query, std::size_t k) {
    const WeightedGraph g = load_graph_file(opts.graph_path, opts.unweighted);
    echo_graph(g, opts.graph_path);
    const VertexId v = require_vertex(g, query);
    const PathIndex idx = obtain_path_index(opts, g, opts.paths_file);
    print_topk(g, g, top_k(idx, v, k));
    return 0;
}

int run_topk_pp(const CommonOptions& opts, const std::string& query, std::size_t k) {
    const WeightedGraph g = load_graph_file(opts.graph_path, opts.unweighted);
    echo_graph(g, opts.graph_path);
    const VertexId v = require_vertex(g, query);
    FeatureMatrix vectors_a = obtain_vectors(opts, g, opts.vectors_file, opts.paths_file);

    if (opts.graph_b_path.empty()) {
        const VectorIndex index(std::move(vectors_a));
        print_topk(g, g, top_k_pp(index, v, k));
        return 0;
    }

    const WeightedGraph gb = load_graph_file(opts.graph_b_path, opts.unweighted);
    echo_graph(gb, opts.graph_b_path);
    FeatureMatrix vectors_b = obtain_vectors(opts, gb, opts.vectors_file_b, "");
    const VectorIndex index_a(std::move(vectors_a));
    const VectorIndex index_b(std::move(vectors_b));
    print_topk(g, gb, cross_network_top_k(index_a, index_b, v, k));
    return 0;
}

int run_oracle(const CommonOptions& opts) {
    const WeightedGraph g = load_graph_file(opts.graph_path, opts.unweighted);
    echo_graph(g, opts.graph_path);
    const ExactPathTable table = exact_path_table(g, opts.path_length);
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
        for (VertexId v = u; v < g.vertex_count(); ++v) {
            std::printf("%s\t%s\t%.9f\n", g.label(u).c_str(), g.label(v).c_str(), table.at(u, v));
        }
    }
    return 0;
}

int run_eval_cn(const CommonOptions& opts, const std::string& algo, std::size_t k,
                std::size_t trials) {
    const WeightedGraph g = load_graph_file(opts.graph_path, opts.unweighted);
    echo_graph(g, opts.graph_path);
    const std::vector<VertexId> seeds = default_seed_set(g, opts.seed);

    TopKProvider provider;
    if (algo == "panther") {
        const auto idx = std::make_shared<PathIndex>(obtain_path_index(opts, g, opts.paths_file));
        provider = [idx](VertexId v, std::size_t kk) { return top_k(*idx, v, kk); };
    } else if (algo == "pantherpp") {
        const auto index = std::make_shared<VectorIndex>(
            obtain_vectors(opts, g, opts.vectors_file, opts.paths_file));
        provider = [index](VertexId v, std::size_t kk) { return top_k_pp(*index, v, kk); };
    } else if (algo == "jaccard") {
        provider = [&g](VertexId v, std::size_t kk) { return jaccard_top_k(g, v, kk); };
    } else if (algo == "random") {
        const std::uint64_t provider_seed = opts.seed ^ 0x5bd1e995u;
        const std::uint64_t n = g.vertex_count();
        provider = [provider_seed, n](VertexId v, std::size_t kk) {
            Rng rng(provider_seed + v);
            std::vector<VertexId> pool(n);
            std::iota(pool.begin(), pool.end(), 0u);
            std::swap(pool[v], pool[n - 1]);
            TopKResult r{v, {}};
            for (std::size_t i = 0; i < std::min<std::size_t>(kk, n - 1); ++i) {
                const std::uint64_t j = i + rng.uniform_below((n - 1) - i);
                std::swap(pool[i], pool[j]);
                r.entries.emplace_back(pool[i], 0.0);
            }
            return r;
        };
    } else {
        throw std::invalid_argument("unknown --algo '" + algo +
                                    "' (expected panther|pantherpp|jaccard|random)");
    }

    const EvalScore s =
        common_neighbor_score(g, algo, provider, seeds, k, trials, opts.seed ^ 0xC0FFEEULL);
    std::printf("algorithm\tk\tf_alg\tf_random\tf_random_stderr\tscore\tscore_stderr\n");
    std::printf("%s\t%zu\t%.6f\t%.6f\t%.6f\t%.6f\t%.6f\n", s.algorithm.c_str(), s.k, s.f_alg,
                s.f_random, s.f_random_stderr, s.score, s.score_stderr);
    return 0;
}

std::vector<std::pair<VertexId, VertexId>> load_mapping(const std::string& path,
                                                        const WeightedGraph& a,
                                                        const WeightedGraph& b) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open mapping file '" + path + "'");
    std::vector<std::pair<VertexId, VertexId>> mapping;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        std::istringstream fields(line);
        std::string la, lb, extra;
        if (!(fields >> la)) continue;
        if (la.front() == '#') continue;
        if (!(fields >> lb) || (fields >> extra)) {
            throw DataError(path + " line " + std::to_string(line_number) +
                            ": expected 'labelA labelB'");
        }
        const auto ia = a.find_vertex(la);
        const auto ib = b.find_vertex(lb);
        if (!ia) throw DataError(path + ": label '" + la + "' not in graph A");
        if (!ib) throw DataError(path + ": label '" + lb + "' not in graph B");
        mapping.emplace_back(*ia, *ib);
    }
    if (mapping.empty()) throw DataError(path + ": empty mapping");
    return mapping;
}

int run_eval_resolve(const CommonOptions& opts, const std::string& mapping_path,
                     std::vector<std::size_t> ks) {
    const WeightedGraph a = load_graph_file(opts.graph_path, opts.unweighted);
    const WeightedGraph b = load_graph_file(opts.graph_b_path, opts.unweighted);
    echo_graph(a, opts.graph_path);
    echo_graph(b, opts.graph_b_path);
    const auto mapping = load_mapping(mapping_path, a, b);
    const ResolutionReport report = identity_resolution(a, b, mapping, std::move(ks), opts.config());
    std::printf("k\thit_rate\n");
    for (std::size_t i = 0; i < report.ks.size(); ++i) {
        std::printf("%zu\t%.6f\n", report.ks[i], report.hit_rates[i]);
    }
    return 0;
}

int run_synth(const std::string& kind, std::uint64_t n, double p, std::uint32_t m, double rho,
              std::uint64_t seed, const std::string& out_path) {
    if (kind == "two-copies-perturbed") {
        if (out_path.empty()) {
            throw std::invalid_argument("synth two-copies-perturbed requires --out PREFIX");
        }
        const TwoCopies copies = two_copies_perturbed(n, m, rho, seed);
        const auto write = [](const WeightedGraph& g, const std::string& path) {
            std::ofstream out(path, std::ios::trunc);
            if (!out) throw DataError("cannot open '" + path + "' for writing");
            write_edge_list(g, out);
        };
        write(copies.original, out_path + "_a.el");
        write(copies.perturbed, out_path + "_b.el");
        std::ofstream map_out(out_path + "_map.tsv", std::ios::trunc);
        if (!map_out) throw DataError("cannot open '" + out_path + "_map.tsv' for writing");
        for (const auto& [u, v] : copies.mapping) {
            map_out << copies.original.label(u) << '\t' << copies.perturbed.label(v) << '\n';
        }
        std::fprintf(stderr, "# wrote %s_a.el %s_b.el %s_map.tsv\n", out_path.c_str(),
                     out_path.c_str(), out_path.c_str());
        return 0;
    }

    WeightedGraph g;
    if (kind == "erdos-renyi") {
        g = erdos_renyi(n, p, seed);
    } else if (kind == "preferential-attachment") {
        g = preferential_attachment(n, m, seed);
    } else {
        throw std::invalid_argument("unknown --kind '" + kind + "'");
    }
    std::fprintf(stderr, "# synth kind=%s vertices=%zu edges=%zu seed=%llu\n", kind.c_str(),
                 g.vertex_count(), g.edge_count(), static_cast<unsigned long long>(seed));
    if (out_path.empty()) {
        write_edge_list(g, std::cout);
    } else {
        std::ofstream out(out_path, std::ios::trunc);
        if (!out) throw DataError("cannot open '" + out_path + "' for writing");
        write_edge_list(g, out);
    }
    return 0;
}

int run_bench(const CommonOptions& opts, std::size_t queries, std::size_t k) {
    const WeightedGraph g = load_graph_file(opts.graph_path, opts.unweighted);
    echo_graph(g, opts.graph_path);
    const PantherConfig cfg = opts.config();
    const std::uint64_t r = resolve_sample_size(cfg, g);
    echo_budget(opts, g, r, !cfg.epsilon.has_value());

    const auto t0 = std::chrono::steady_clock::now();
    const PathIndex idx = generate_paths(g, r, cfg.path_length, cfg.seed, cfg.threads);
    const auto t1 = std::chrono::steady_clock::now();
    const double sample_seconds = std::chrono::duration<double>(t1 - t0).count();

    Rng rng(cfg.seed ^ 0xBE7CULL);
    const auto t2 = std::chrono::steady_clock::now();
    std::size_t total_entries = 0;
    for (std::size_t q = 0; q < queries; ++q) {
        const auto v = static_cast<VertexId>(rng.uniform_below(g.vertex_count()));
        total_entries += top_k(idx, v, k).entries.size();
    }
    const auto t3 = std::chrono::steady_clock::now();
    const double query_seconds = std::chrono::duration<double>(t3 - t2).count();

    std::printf("metric\tvalue\n");
    std::printf("paths_per_second\t%.1f\n", static_cast<double>(r) / sample_seconds);
    std::printf("queries_per_second\t%.1f\n", static_cast<double>(queries) / query_seconds);
    std::fprintf(stderr, "# sampled %llu paths in %.3fs; %zu queries in %.3fs (%zu entries)\n",
                 static_cast<unsigned long long>(r), sample_seconds, queries, query_seconds,
                 total_entries);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"random-path sampling top-k vertex similarity"};
    app.require_subcommand(1);

    CommonOptions opts;
    std::string query;
    std::size_t k = 5;

    // sample
    auto* sample_cmd = app.add_subcommand("sample", "sample random paths and save the index");
    sample_cmd->add_option("--graph", opts.graph_path, "edge list or graph snapshot")->required();
    sample_cmd->add_flag("--unweighted", opts.unweighted, "ignore weight columns");
    std::string snapshot_path;
    sample_cmd->add_option("--graph-snapshot", snapshot_path, "also save a binary graph snapshot");
    sample_cmd->add_option("--paths-file", opts.paths_file, "output path index file")->required();
    add_budget_options(sample_cmd, opts);

    // topk
    auto* topk_cmd = app.add_subcommand("topk", "top-k similar vertices by sampled path similarity");
    topk_cmd->add_option("--graph", opts.graph_path)->required();
    topk_cmd->add_flag("--unweighted", opts.unweighted);
    topk_cmd->add_option("--query", query, "query vertex label")->required();
    topk_cmd->add_option("--k", k, "result size")->required();
    topk_cmd->add_option("--paths-file", opts.paths_file, "path index sidecar (loaded if present)");
    add_budget_options(topk_cmd, opts);

    // topk-pp
    auto* pp_cmd = app.add_subcommand("topk-pp",
                                      "top-k structurally similar vertices via feature vectors");
    pp_cmd->add_option("--graph", opts.graph_path)->required();
    pp_cmd->add_option("--graph-b", opts.graph_b_path, "second network for cross-network queries");
    pp_cmd->add_flag("--unweighted", opts.unweighted);
    pp_cmd->add_option("--query", query, "query vertex label (in --graph)")->required();
    pp_cmd->add_option("--k", k, "result size")->required();
    pp_cmd->add_option("--D", opts.dimension, "feature vector dimension")->capture_default_str();
    pp_cmd->add_option("--paths-file", opts.paths_file, "path index sidecar for --graph");
    pp_cmd->add_option("--vectors-file", opts.vectors_file, "feature vector sidecar for --graph");
    pp_cmd->add_option("--vectors-file-b", opts.vectors_file_b,
                       "feature vector sidecar for --graph-b");
    add_budget_options(pp_cmd, opts);

    // oracle
    auto* oracle_cmd = app.add_subcommand("oracle", "exact pair table by full path enumeration");
    oracle_cmd->add_option("--graph", opts.graph_path)->required();
    oracle_cmd->add_flag("--unweighted", opts.unweighted);
    oracle_cmd->add_option("--T", opts.path_length, "walk length")->capture_default_str();

    // eval
    auto* eval_cmd = app.add_subcommand("eval", "accuracy protocols");
    eval_cmd->require_subcommand(1);
    auto* cn_cmd = eval_cmd->add_subcommand("cn", "common-neighbor approximation score");
    std::string algo = "panther";
    std::size_t trials = 100;
    cn_cmd->add_option("--graph", opts.graph_path)->required();
    cn_cmd->add_flag("--unweighted", opts.unweighted);
    cn_cmd->add_option("--algo", algo, "panther|pantherpp|jaccard|random")->capture_default_str();
    cn_cmd->add_option("--k", k, "result size")->required();
    cn_cmd->add_option("--trials", trials, "random baseline trials")->capture_default_str();
    cn_cmd->add_option("--D", opts.dimension)->capture_default_str();
    cn_cmd->add_option("--paths-file", opts.paths_file);
    cn_cmd->add_option("--vectors-file", opts.vectors_file);
    add_budget_options(cn_cmd, opts);

    auto* resolve_cmd = eval_cmd->add_subcommand("resolve", "cross-network identity resolution");
    std::string mapping_path;
    std::vector<std::size_t> ks{1, 5, 10, 20};
    resolve_cmd->add_option("--graph-a", opts.graph_path)->required();
    resolve_cmd->add_option("--graph-b", opts.graph_b_path)->required();
    resolve_cmd->add_flag("--unweighted", opts.unweighted);
    resolve_cmd->add_option("--mapping", mapping_path, "ground-truth 'labelA\\tlabelB' lines")
        ->required();
    resolve_cmd->add_option("--ks", ks, "k sweep")->delimiter(',')->capture_default_str();
    resolve_cmd->add_option("--D", opts.dimension)->capture_default_str();
    add_budget_options(resolve_cmd, opts);

    // synth
    auto* synth_cmd = app.add_subcommand("synth", "generate synthetic edge lists");
    std::string kind;
    std::uint64_t n = 0;
    double p = 0.1;
    std::uint32_t m = 3;
    double rho = 0.0;
    std::string out_path;
    synth_cmd
        ->add_option("--kind", kind, "erdos-renyi|preferential-attachment|two-copies-perturbed")
        ->required();
    synth_cmd->add_option("--n", n, "vertex count")->required();
    synth_cmd->add_option("--p", p, "edge probability (erdos-renyi)")->capture_default_str();
    synth_cmd->add_option("--m", m, "attachment degree (preferential/two-copies)")
        ->capture_default_str();
    synth_cmd->add_option("--rho", rho, "rewired edge fraction (two-copies)")
        ->capture_default_str();
    std::uint64_t synth_seed = 1;
    synth_cmd->add_option("--seed", synth_seed, "RNG seed")->capture_default_str();
    synth_cmd->add_option("--out", out_path, "output file (or prefix for two-copies)");

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "measure sampling and query throughput");
    std::size_t bench_queries = 200;
    bench_cmd->add_option("--graph", opts.graph_path)->required();
    bench_cmd->add_flag("--unweighted", opts.unweighted);
    bench_cmd->add_option("--queries", bench_queries, "query count")->capture_default_str();
    bench_cmd->add_option("--k", k, "result size")->capture_default_str();
    add_budget_options(bench_cmd, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (sample_cmd->parsed()) return run_sample(opts, snapshot_path);
        if (topk_cmd->parsed()) return run_topk(opts, query, k);
        if (pp_cmd->parsed()) return run_topk_pp(opts, query, k);
        if (oracle_cmd->parsed()) return run_oracle(opts);
        if (eval_cmd->parsed() && cn_cmd->parsed()) return run_eval_cn(opts, algo, k, trials);
        if (eval_cmd->parsed() && resolve_cmd->parsed()) {
            return run_eval_resolve(opts, mapping_path, ks);
        }
        if (synth_cmd->parsed()) return run_synth(kind, n, p, m, rho, synth_seed, out_path);
        if (bench_cmd->parsed()) return run_bench(opts, bench_queries, k);
        std::fprintf(stderr, "error: no subcommand\n");
        return 1;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
