// Acceptance suite: eight end-to-end criteria with one PASS/FAIL line each.
// Needs the CLI binary path in $PANTHER_CLI for the determinism checks.

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "panther/eval.hpp"
#include "panther/exact_oracle.hpp"
#include "panther/graph.hpp"
#include "panther/pantherpp.hpp"
#include "panther/sampling.hpp"
#include "panther/similarity.hpp"

using namespace panther;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void report(int criterion, bool pass, const std::string& what, const std::string& detail) {
    std::printf("%s: criterion %d - %s (%s)\n", pass ? "PASS" : "FAIL", criterion, what.c_str(),
                detail.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

unsigned hw_threads() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

WeightedGraph complete_graph(int n) {
    GraphBuilder b;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) b.add_edge(std::to_string(u), std::to_string(v));
    }
    return b.build();
}

WeightedGraph path_graph(int n) {
    GraphBuilder b;
    for (int i = 0; i + 1 < n; ++i) b.add_edge(std::to_string(i), std::to_string(i + 1));
    return b.build();
}

WeightedGraph barbell6() {
    GraphBuilder b;
    b.add_edge("a0", "a1");
    b.add_edge("a1", "a2");
    b.add_edge("a2", "a0");
    b.add_edge("b0", "b1");
    b.add_edge("b1", "b2");
    b.add_edge("b2", "b0");
    b.add_edge("a0", "b0");
    return b.build();
}

// --- criterion 1: sample-size formula -----------------------------------

void criterion_sample_size() {
    const SamplingBudget budget{0.1, 0.1, 0.5, 5};
    const std::uint64_t first = required_sample_size(budget);
    bool stable = true;
    // no |V| input exists; recompute across the sweep and across repeats
    for (std::uint64_t v = 10; v <= 1000000; v *= 10) {
        if (required_sample_size(budget) != first) stable = false;
    }
    for (int i = 0; i < 1000; ++i) {
        if (required_sample_size(budget) != first) stable = false;
    }
    // the resolved size on real graphs of different sizes agrees too
    PantherConfig cfg;
    cfg.epsilon = 0.1;
    const auto small = preferential_attachment(10, 2, 1);
    const auto large = preferential_attachment(2000, 2, 1);
    const bool graph_free = resolve_sample_size(cfg, small) == first &&
                            resolve_sample_size(cfg, large) == first;
    report(1, first == 332 && stable && graph_free, "sample-size formula",
           "R(c=0.5,eps=0.1,delta=0.1,T=5)=" + std::to_string(first) +
               ", stable across runs and |V| sweep 10..1e6");
}

// --- criterion 2: epsilon-approximation ---------------------------------

void criterion_epsilon_approximation() {
    struct Combo {
        std::string name;
        WeightedGraph graph;
    };
    const std::vector<Combo> graphs = [] {
        std::vector<Combo> v;
        v.push_back({"K3", complete_graph(3)});
        v.push_back({"K4", complete_graph(4)});
        v.push_back({"P5", path_graph(5)});
        v.push_back({"barbell6", barbell6()});
        return v;
    }();

    const double eps = 0.05;
    constexpr int kRuns = 200;
    // binomial slack: delta*runs + 3*sqrt(delta*(1-delta)*runs)
    const int allowed = static_cast<int>(
        std::floor(0.1 * kRuns + 3.0 * std::sqrt(0.1 * 0.9 * kRuns)));

    const auto t0 = std::chrono::steady_clock::now();
    bool pass = true;
    std::string detail;
    for (const auto& combo : graphs) {
        for (const std::uint32_t T : {2u, 3u, 4u}) {
            const std::uint64_t r = required_sample_size({eps, 0.1, 0.5, T});
            const auto exact = exact_path_table(combo.graph, T);
            const auto n = static_cast<VertexId>(combo.graph.vertex_count());
            int failures = 0;
            for (int run = 0; run < kRuns; ++run) {
                const auto idx =
                    generate_paths(combo.graph, r, T, 0xACC0 + 1315423911u * run + 7 * T);
                double max_err = 0.0;
                for (VertexId u = 0; u < n; ++u) {
                    for (VertexId v = u + 1; v < n; ++v) {
                        const double est = similarity(idx, u, v).value;
                        max_err = std::max(max_err, std::abs(est - exact.at(u, v)));
                    }
                }
                if (max_err > eps) ++failures;
            }
            if (failures > allowed) pass = false;
            detail += combo.name + "/T=" + std::to_string(T) + ":" + std::to_string(failures) +
                      " ";
        }
    }
    detail += "failures of " + std::to_string(kRuns) + " runs each, allowed <= " +
              std::to_string(allowed) + ", " + std::to_string(seconds_since(t0)) + "s";
    report(2, pass, "estimator epsilon-approximation vs exact oracle", detail);
}

// --- criterion 3: K3 convergence -----------------------------------------

void criterion_k3_convergence() {
    const auto g = complete_graph(3);
    const auto exact = exact_path_table(g, 2);
    const auto idx = generate_paths(g, 100000, 2, 330);
    bool pass = std::abs(exact.at(0, 1) - 2.0 / 3.0) < 1e-12;
    double worst = 0.0;
    for (VertexId u = 0; u < 3; ++u) {
        for (VertexId v = u + 1; v < 3; ++v) {
            worst = std::max(worst, std::abs(similarity(idx, u, v).value - 2.0 / 3.0));
        }
    }
    pass = pass && worst < 0.01;
    char buf[128];
    std::snprintf(buf, sizeof(buf), "max |estimate - 2/3| = %.5f at R=1e5, T=2", worst);
    report(3, pass, "K3 pair similarity converges to 2/3", buf);
}

// --- criterion 4: kd-tree exactness --------------------------------------

void criterion_kdtree_exactness() {
    Rng rng(0x4D7);
    int mismatches = 0;
    constexpr int kInstances = 100;
    for (int instance = 0; instance < kInstances; ++instance) {
        FeatureMatrix m;
        m.dimension = 50;
        m.vertex_count = 500;
        m.values.resize(500 * 50);
        for (auto& x : m.values) x = rng.next_double01();
        if (instance % 4 == 0) {
            // force distance ties with duplicated rows
            for (int d = 0; d < 25; ++d) {
                const auto dst = 1 + rng.uniform_below(499);
                const auto src = rng.uniform_below(dst);
                std::copy_n(m.values.begin() + src * 50, 50, m.values.begin() + dst * 50);
            }
        }
        const VectorIndex index(m);
        for (const std::size_t k : {std::size_t{1}, std::size_t{5}, std::size_t{50}}) {
            const auto q = static_cast<VertexId>(rng.uniform_below(500));
            const auto fast = top_k_pp(index, q, k);
            const auto slow = brute_force_knn(m, m.row(q), k, q);
            if (fast.entries.size() != slow.entries.size()) {
                ++mismatches;
                continue;
            }
            for (std::size_t i = 0; i < fast.entries.size(); ++i) {
                if (fast.entries[i].first != slow.entries[i].first ||
                    fast.entries[i].second != slow.entries[i].second) {
                    ++mismatches;
                    break;
                }
            }
        }
    }
    report(4, mismatches == 0, "kd-tree equals brute-force k-NN",
           std::to_string(kInstances) + " instances (n=500, D=50, k in {1,5,50}), " +
               std::to_string(mismatches) + " mismatches");
}

// --- criterion 5: identity resolution ------------------------------------

void criterion_identity_resolution() {
    const auto copies = two_copies_perturbed(200, 3, 0.05, 0x1D);
    PantherConfig cfg;  // defaults: eps = sqrt(1/|E|), T=5, D=50
    cfg.seed = 41;
    cfg.threads = hw_threads();
    const std::vector<std::size_t> ks{1, 5, 10, 20, 50, 100, 200};
    const auto report_data =
        identity_resolution(copies.original, copies.perturbed, copies.mapping, ks, cfg);

    double hit20 = 0.0;
    bool monotone = true;
    for (std::size_t i = 0; i < report_data.ks.size(); ++i) {
        if (report_data.ks[i] == 20) hit20 = report_data.hit_rates[i];
        if (i > 0 && report_data.hit_rates[i] < report_data.hit_rates[i - 1]) monotone = false;
    }
    const double random_rate = 20.0 / 200.0;
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "hit@20=%.3f vs random %.3f (factor %.2f, need >= 3), curve monotone=%s", hit20,
                  random_rate, hit20 / random_rate, monotone ? "yes" : "no");
    report(5, hit20 >= 3.0 * random_rate && monotone,
           "cross-network identity resolution on a perturbed copy", buf);
}

// --- criterion 6: common-neighbor score ----------------------------------

void criterion_common_neighbor_score() {
    const auto g = preferential_attachment(500, 3, 500);
    PantherConfig cfg;
    cfg.seed = 61;
    cfg.threads = hw_threads();
    const std::uint64_t r = resolve_sample_size(cfg, g);
    const auto idx = generate_paths(g, r, cfg.path_length, cfg.seed, cfg.threads);
    const VectorIndex index(build_feature_vectors(idx, cfg.dimension, cfg.threads));

    const TopKProvider panther_provider = [&idx](VertexId v, std::size_t k) {
        return top_k(idx, v, k);
    };
    const TopKProvider pp_provider = [&index](VertexId v, std::size_t k) {
        return top_k_pp(index, v, k);
    };
    const auto seeds = default_seed_set(g, 1);
    const auto panther_score =
        common_neighbor_score(g, "panther", panther_provider, seeds, 10, 100, 600);
    const auto pp_score = common_neighbor_score(g, "pantherpp", pp_provider, seeds, 10, 100, 600);

    const bool above_noise = panther_score.score > 5.0 * panther_score.score_stderr;
    const bool ordering = panther_score.score > pp_score.score;
    char buf[200];
    std::snprintf(buf, sizeof(buf),
                  "panther score=%.4f (5*SE=%.4f), panther++ score=%.4f; ordering %s",
                  panther_score.score, 5.0 * panther_score.score_stderr, pp_score.score,
                  ordering ? "holds" : "violated");
    report(6, above_noise && ordering, "common-neighbor protocol scores", buf);
}

// --- criterion 7: scaling --------------------------------------------------

void criterion_scaling() {
    const auto t_build = std::chrono::steady_clock::now();
    const auto g = preferential_attachment(200000, 5, 0x5CA1E);
    std::fprintf(stderr, "# scaling graph: %zu vertices, %zu edges (built in %.1fs)\n",
                 g.vertex_count(), g.edge_count(), seconds_since(t_build));

    // linearity: best-of-3 single-threaded wall times at R and 4R. The base
    // R is large enough that the posting arrays of both runs are past the
    // cache- and TLB-resident regime, where per-path cost is still settling.
    const std::uint64_t r_small = 1200000;
    const auto time_generation = [&](std::uint64_t r) {
        double best = 1e100;
        for (int rep = 0; rep < 3; ++rep) {
            const auto t0 = std::chrono::steady_clock::now();
            const auto idx = generate_paths(g, r, 5, 99 + rep, 1);
            best = std::min(best, seconds_since(t0));
        }
        return best;
    };
    const double t_small = time_generation(r_small);
    const double t_large = time_generation(4 * r_small);
    const double ratio = t_large / t_small;
    const bool linear = ratio >= 3.0 && ratio <= 5.0;

    // query latency at the full default budget
    PantherConfig cfg;
    cfg.seed = 7;
    cfg.threads = hw_threads();
    const std::uint64_t r_full = resolve_sample_size(cfg, g);
    const auto idx = generate_paths(g, r_full, cfg.path_length, cfg.seed, cfg.threads);
    Rng rng(321);
    constexpr int kQueries = 200;
    const auto tq = std::chrono::steady_clock::now();
    std::size_t sink = 0;
    for (int q = 0; q < kQueries; ++q) {
        const auto v = static_cast<VertexId>(rng.uniform_below(g.vertex_count()));
        sink += top_k(idx, v, 10).entries.size();
    }
    const double avg_ms = seconds_since(tq) * 1000.0 / kQueries;
    const bool fast_queries = avg_ms < 10.0;

    char buf[240];
    std::snprintf(buf, sizeof(buf),
                  "t(R)=%.3fs t(4R)=%.3fs ratio=%.2f (need 3..5); avg top-k latency %.3fms "
                  "at R=%llu (need < 10ms, %zu entries)",
                  t_small, t_large, ratio, avg_ms,
                  static_cast<unsigned long long>(r_full), sink);
    report(7, linear && fast_queries, "sampling scales linearly and queries stay fast", buf);
}

// --- criterion 8: CLI determinism ------------------------------------------

struct CliRun {
    int exit_code = -1;
    std::string output;
};

CliRun run_cli(const std::string& cli, const std::string& args) {
    const std::string command = cli + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return {};
    CliRun result;
    char buf[4096];
    for (;;) {
        const std::size_t got = fread(buf, 1, sizeof(buf), pipe);
        if (got == 0) break;
        result.output.append(buf, got);
    }
    result.exit_code = WEXITSTATUS(pclose(pipe));
    return result;
}

void criterion_cli_determinism() {
    const char* cli_env = std::getenv("PANTHER_CLI");
    if (!cli_env) {
        report(8, false, "CLI determinism", "PANTHER_CLI not set");
        return;
    }
    const std::string cli = cli_env;
    const fs::path dir =
        fs::temp_directory_path() / ("panther_accept_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    const auto file = [&dir](const std::string& name) { return (dir / name).string(); };

    bool pass = true;
    std::string detail;
    const auto check_twice = [&](const std::string& name, const std::string& args) {
        const auto a = run_cli(cli, args);
        const auto b = run_cli(cli, args);
        const bool ok = a.exit_code == 0 && b.exit_code == 0 && a.output == b.output &&
                        !a.output.empty();
        if (!ok) {
            pass = false;
            detail += name + " differs or failed (exit " + std::to_string(a.exit_code) + "); ";
        }
        return a.output;
    };

    // a small deterministic graph to work on
    const auto graph_text =
        check_twice("synth", "synth --kind preferential-attachment --n 60 --m 2 --seed 12");
    std::ofstream(file("g.el")) << graph_text;

    check_twice("topk", "topk --graph " + file("g.el") + " --query 0 --k 5 --seed 7");
    check_twice("topk-pp",
                "topk-pp --graph " + file("g.el") + " --query 0 --k 5 --D 20 --seed 7");
    check_twice("oracle-k3", [&] {
        std::ofstream(file("k3.el")) << "a b\nb c\nc a\n";
        return "oracle --graph " + file("k3.el") + " --T 3";
    }());
    check_twice("eval-cn-jaccard",
                "eval cn --graph " + file("g.el") + " --algo jaccard --k 5 --trials 40 --seed 3");
    check_twice("eval-cn-panther",
                "eval cn --graph " + file("g.el") + " --algo panther --k 5 --trials 40 --seed 3");

    // persistence round trip: sample + sidecar query == one-shot query
    const auto sampled = run_cli(cli, "sample --graph " + file("g.el") + " --paths-file " +
                                          file("p.bin") + " --epsilon 0.1 --seed 9");
    const auto from_file =
        run_cli(cli, "topk --graph " + file("g.el") + " --paths-file " + file("p.bin") +
                         " --query 1 --k 5 --seed 9");
    const auto one_shot = run_cli(cli, "topk --graph " + file("g.el") +
                                           " --query 1 --k 5 --epsilon 0.1 --seed 9");
    if (sampled.exit_code != 0 || from_file.exit_code != 0 || one_shot.exit_code != 0 ||
        from_file.output != one_shot.output || from_file.output.empty()) {
        pass = false;
        detail += "sidecar round trip differs; ";
    }

    // cross-network query over a synthesized pair
    const auto pair_prefix = file("pair");
    run_cli(cli, "synth --kind two-copies-perturbed --n 40 --m 2 --rho 0.05 --seed 5 --out " +
                     pair_prefix);
    check_twice("topk-pp-cross", "topk-pp --graph " + pair_prefix + "_a.el --graph-b " +
                                     pair_prefix + "_b.el --query 0 --k 5 --epsilon 0.1 --seed 6");
    check_twice("eval-resolve", "eval resolve --graph-a " + pair_prefix + "_a.el --graph-b " +
                                    pair_prefix + "_b.el --mapping " + pair_prefix +
                                    "_map.tsv --ks 1,5,10 --epsilon 0.1 --seed 6");

    std::error_code ec;
    fs::remove_all(dir, ec);
    if (detail.empty()) detail = "all CLI invocations byte-identical across two runs";
    report(8, pass, "CLI determinism", detail);
}

}  // namespace

int main() {
    const auto t0 = std::chrono::steady_clock::now();
    criterion_sample_size();
    criterion_epsilon_approximation();
    criterion_k3_convergence();
    criterion_kdtree_exactness();
    criterion_identity_resolution();
    criterion_common_neighbor_score();
    criterion_scaling();
    criterion_cli_determinism();
    std::printf("%d of 8 criteria passed in %.1fs\n", 8 - g_failures, seconds_since(t0));
    return g_failures == 0 ? 0 : 1;
}
