#include "panther/similarity.hpp"

#include <algorithm>
#include <stdexcept>

namespace panther {

namespace {

void check_vertex(const PathIndex& idx, VertexId v) {
    if (v >= idx.vertex_count) {
        throw std::invalid_argument("vertex id " + std::to_string(v) + " out of range");
    }
}

// (count desc, id asc) ordering shared by the heap and the final sort.
bool better(std::uint32_t count_a, VertexId a, std::uint32_t count_b, VertexId b) {
    if (count_a != count_b) return count_a > count_b;
    return a < b;
}

}  // namespace

SimilarityScore similarity(const PathIndex& idx, VertexId u, VertexId v) {
    check_vertex(idx, u);
    check_vertex(idx, v);
    if (u == v) throw std::invalid_argument("similarity: self query is not defined");

    const auto pu = idx.paths_containing(u);
    const auto pv = idx.paths_containing(v);
    std::uint64_t common = 0;
    std::size_t i = 0, j = 0;
    while (i < pu.size() && j < pv.size()) {
        if (pu[i] < pv[j]) {
            ++i;
        } else if (pu[i] > pv[j]) {
            ++j;
        } else {
            ++common;
            ++i;
            ++j;
        }
    }
    return {u, v, common, static_cast<double>(common) / static_cast<double>(idx.sample_size)};
}

std::vector<std::pair<VertexId, std::uint32_t>> cooccurrence_counts(const PathIndex& idx,
                                                                    VertexId v) {
    check_vertex(idx, v);
    // Dense per-thread scratch, kept zeroed between calls by resetting only
    // the touched entries: query cost stays linear in |P_v| * (T+1) instead
    // of paying an O(|V|) clear per query.
    thread_local std::vector<std::uint32_t> counts;
    thread_local std::vector<VertexId> touched;
    if (counts.size() < idx.vertex_count) counts.resize(idx.vertex_count, 0);
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
    std::sort(touched.begin(), touched.end());
    std::vector<std::pair<VertexId, std::uint32_t>> out;
    out.reserve(touched.size());
    for (const VertexId j : touched) {
        out.emplace_back(j, counts[j]);
        counts[j] = 0;
    }
    return out;
}

TopKResult top_k(const PathIndex& idx, VertexId v, std::size_t k) {
    if (k == 0) throw std::invalid_argument("top_k: k must be positive");
    const auto counts = cooccurrence_counts(idx, v);

    // Bounded min-heap over (count, id); heap top is the current worst.
    const auto worse = [](const std::pair<VertexId, std::uint32_t>& a,
                          const std::pair<VertexId, std::uint32_t>& b) {
        return better(a.second, a.first, b.second, b.first);
    };
    std::vector<std::pair<VertexId, std::uint32_t>> heap;
    heap.reserve(std::min(k, counts.size()) + 1);
    for (const auto& entry : counts) {
        if (heap.size() < k) {
            heap.push_back(entry);
            std::push_heap(heap.begin(), heap.end(), worse);
        } else if (better(entry.second, entry.first, heap.front().second, heap.front().first)) {
            std::pop_heap(heap.begin(), heap.end(), worse);
            heap.back() = entry;
            std::push_heap(heap.begin(), heap.end(), worse);
        }
    }

    std::sort(heap.begin(), heap.end(),
              [](const auto& a, const auto& b) { return better(a.second, a.first, b.second, b.first); });

    TopKResult result;
    result.query = v;
    result.entries.reserve(heap.size());
    const auto r = static_cast<double>(idx.sample_size);
    for (const auto& [vertex, count] : heap) {
        result.entries.emplace_back(vertex, static_cast<double>(count) / r);
    }
    return result;
}

}  // namespace panther
