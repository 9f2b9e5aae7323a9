#include "panther/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <stdexcept>

#include "panther/errors.hpp"

namespace panther {

namespace {

std::uint64_t edge_key(VertexId u, VertexId v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | v;
}

void check_vertex(const WeightedGraph& g, VertexId v) {
    if (v >= g.vertex_count()) {
        throw std::invalid_argument("vertex id " + std::to_string(v) +
                                    " out of range [0, " + std::to_string(g.vertex_count()) + ")");
    }
}

}  // namespace

bool WeightedGraph::has_edge(VertexId u, VertexId v) const {
    const auto nbrs = neighbors(u);
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

double WeightedGraph::edge_weight(VertexId u, VertexId v) const {
    const auto nbrs = neighbors(u);
    const auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v);
    if (it == nbrs.end() || *it != v) return 0.0;
    return weights_[offsets_[u] + static_cast<std::size_t>(it - nbrs.begin())];
}

std::optional<VertexId> WeightedGraph::find_vertex(std::string_view label) const {
    const auto it = label_to_id_.find(std::string(label));
    if (it == label_to_id_.end()) return std::nullopt;
    return it->second;
}

std::vector<std::pair<VertexId, double>> WeightedGraph::transition_probabilities(VertexId v) const {
    check_vertex(*this, v);
    std::vector<std::pair<VertexId, double>> out;
    const auto nbrs = neighbors(v);
    if (nbrs.empty()) return out;
    out.reserve(nbrs.size());
    if (unit_weights_) {
        const double p = 1.0 / static_cast<double>(nbrs.size());
        for (VertexId j : nbrs) out.emplace_back(j, p);
        return out;
    }
    const double total = weight_sum(v);
    const auto ws = neighbor_weights(v);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
        out.emplace_back(nbrs[i], ws[i] / total);
    }
    return out;
}

VertexId GraphBuilder::add_vertex(std::string_view label) {
    const auto [it, inserted] = label_to_id_.try_emplace(std::string(label),
                                                         static_cast<VertexId>(labels_.size()));
    if (inserted) labels_.emplace_back(label);
    return it->second;
}

void GraphBuilder::add_edge(std::string_view u, std::string_view v, double weight) {
    const VertexId iu = add_vertex(u);  // ids follow first appearance, left to right
    const VertexId iv = add_vertex(v);
    add_edge(iu, iv, weight);
}

void GraphBuilder::add_edge(VertexId u, VertexId v, double weight) {
    if (u >= labels_.size() || v >= labels_.size()) {
        throw std::invalid_argument("add_edge: unknown vertex id");
    }
    if (!(weight > 0.0) || !std::isfinite(weight)) {
        throw std::invalid_argument("add_edge: edge weight must be a positive finite number");
    }
    edge_weights_[edge_key(u, v)] += weight;
}

WeightedGraph GraphBuilder::build() {
    WeightedGraph g;
    const std::size_t n = labels_.size();
    g.labels_ = std::move(labels_);
    g.label_to_id_ = std::move(label_to_id_);
    g.edge_count_ = edge_weights_.size();

    std::vector<std::uint64_t> deg(n, 0);
    for (const auto& [key, w] : edge_weights_) {
        const auto u = static_cast<VertexId>(key >> 32);
        const auto v = static_cast<VertexId>(key & 0xffffffffULL);
        ++deg[u];
        if (u != v) ++deg[v];
    }

    g.offsets_.assign(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] = g.offsets_[i] + deg[i];
    const std::size_t slots = g.offsets_[n];
    g.neighbors_.resize(slots);
    g.weights_.resize(slots);

    std::vector<std::uint64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const auto& [key, w] : edge_weights_) {
        const auto u = static_cast<VertexId>(key >> 32);
        const auto v = static_cast<VertexId>(key & 0xffffffffULL);
        g.neighbors_[cursor[u]] = v;
        g.weights_[cursor[u]] = w;
        ++cursor[u];
        if (u != v) {
            g.neighbors_[cursor[v]] = u;
            g.weights_[cursor[v]] = w;
            ++cursor[v];
        }
    }

    // Sort each adjacency list by neighbor id, keeping weights aligned.
    std::vector<std::pair<VertexId, double>> scratch;
    for (std::size_t v = 0; v < n; ++v) {
        const std::size_t lo = g.offsets_[v], hi = g.offsets_[v + 1];
        scratch.clear();
        for (std::size_t i = lo; i < hi; ++i) scratch.emplace_back(g.neighbors_[i], g.weights_[i]);
        std::sort(scratch.begin(), scratch.end());
        for (std::size_t i = lo; i < hi; ++i) {
            g.neighbors_[i] = scratch[i - lo].first;
            g.weights_[i] = scratch[i - lo].second;
        }
    }

    g.cumulative_.resize(slots);
    g.unit_weights_ = true;
    for (std::size_t v = 0; v < n; ++v) {
        double run = 0.0;
        for (std::size_t i = g.offsets_[v]; i < g.offsets_[v + 1]; ++i) {
            run += g.weights_[i];
            g.cumulative_[i] = run;
            if (g.weights_[i] != 1.0) g.unit_weights_ = false;
        }
    }

    edge_weights_.clear();
    return g;
}

namespace {

bool parse_weight(std::string_view token, double& out) {
    const char* first = token.data();
    const char* last = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last && std::isfinite(out);
}

}  // namespace

WeightedGraph load_edge_list(std::istream& in, bool weighted) {
    GraphBuilder builder;
    std::string line;
    std::size_t line_number = 0;
    std::vector<std::string_view> fields;

    while (std::getline(in, line)) {
        ++line_number;
        fields.clear();
        std::size_t pos = 0;
        while (pos < line.size()) {
            while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
            const std::size_t start = pos;
            while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
            if (pos > start) fields.emplace_back(line.data() + start, pos - start);
        }
        if (fields.empty()) continue;
        if (fields[0].front() == '#') continue;

        if (fields.size() < 2 || fields.size() > 3) {
            throw IngestError("expected 'u v [w]', got " + std::to_string(fields.size()) + " fields",
                              line_number);
        }
        double weight = 1.0;
        if (fields.size() == 3 && weighted) {
            if (!parse_weight(fields[2], weight)) {
                throw IngestError("non-numeric edge weight '" + std::string(fields[2]) + "'",
                                  line_number);
            }
            if (weight <= 0.0) {
                throw IngestError("edge weight must be positive, got " + std::string(fields[2]),
                                  line_number);
            }
        }
        builder.add_edge(fields[0], fields[1], weight);
    }
    return builder.build();
}

void write_edge_list(const WeightedGraph& g, std::ostream& out) {
    char buf[64];
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
        const auto nbrs = g.neighbors(u);
        const auto ws = g.neighbor_weights(u);
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            if (nbrs[i] < u) continue;  // emit each undirected edge once
            std::snprintf(buf, sizeof(buf), "%.17g", ws[i]);
            out << g.label(u) << ' ' << g.label(nbrs[i]) << ' ' << buf << '\n';
        }
    }
}

std::optional<VertexId> transition_sample(const WeightedGraph& g, VertexId v, Rng& rng) {
    check_vertex(g, v);
    const std::size_t d = g.degree(v);
    if (d == 0) return std::nullopt;
    const auto nbrs = g.neighbors(v);
    if (g.unit_weights()) {
        return nbrs[rng.uniform_below(d)];
    }
    const auto cum = g.cumulative_weights(v);
    const double r = rng.next_double01() * cum.back();
    const auto it = std::upper_bound(cum.begin(), cum.end(), r);
    std::size_t idx = static_cast<std::size_t>(it - cum.begin());
    if (idx >= d) idx = d - 1;  // guards the r==total rounding edge
    return nbrs[idx];
}

}  // namespace panther
