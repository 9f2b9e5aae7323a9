#include "panther/kdtree.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace panther {

namespace {

// Total order on (squared distance, id); unique ids make knn answers unique.
bool closer(double dist_a, std::uint32_t a, double dist_b, std::uint32_t b) {
    if (dist_a != dist_b) return dist_a < dist_b;
    return a < b;
}

}  // namespace

KdTree::KdTree(std::span<const double> points, std::size_t dim) : points_(points), dim_(dim) {
    if (dim == 0) throw std::invalid_argument("KdTree: dimension must be positive");
    if (points.size() % dim != 0) throw std::invalid_argument("KdTree: point array not a multiple of dim");
    const std::size_t n = points.size() / dim;
    ids_.resize(n);
    std::iota(ids_.begin(), ids_.end(), 0u);
    nodes_.reserve(n);
    if (n > 0) root_ = build(ids_.data(), ids_.data() + n, 0);
}

std::int32_t KdTree::build(std::uint32_t* first, std::uint32_t* last, std::size_t depth) {
    if (first == last) return -1;
    const std::size_t axis = depth % dim_;
    std::uint32_t* mid = first + (last - first) / 2;
    std::nth_element(first, mid, last, [&](std::uint32_t a, std::uint32_t b) {
        const double ca = coord(a)[axis], cb = coord(b)[axis];
        if (ca != cb) return ca < cb;
        return a < b;
    });
    const auto node_index = static_cast<std::int32_t>(nodes_.size());
    nodes_.push_back(Node{*mid, -1, -1});
    const std::int32_t left = build(first, mid, depth + 1);
    const std::int32_t right = build(mid + 1, last, depth + 1);
    nodes_[node_index].left = left;
    nodes_[node_index].right = right;
    return node_index;
}

std::vector<KdTree::Neighbor> KdTree::nearest(std::span<const double> query, std::size_t k,
                                              std::optional<std::uint32_t> exclude) const {
    if (query.size() != dim_) throw std::invalid_argument("KdTree: query dimension mismatch");
    std::vector<std::pair<double, std::uint32_t>> heap;  // max-heap on (dist^2, id)
    if (k == 0 || root_ < 0) return {};
    heap.reserve(k + 1);

    const auto heap_worse = [](const std::pair<double, std::uint32_t>& a,
                               const std::pair<double, std::uint32_t>& b) {
        return closer(a.first, a.second, b.first, b.second);
    };

    // Recursive descent, near side first; the far side is pruned once the
    // heap is full and the splitting plane is strictly farther than the
    // current worst (equal-distance candidates may still win on id).
    const auto visit = [&](auto&& self, std::int32_t node_index, std::size_t depth) -> void {
        if (node_index < 0) return;
        const Node& node = nodes_[node_index];
        const auto point = coord(node.point);

        if (!exclude || *exclude != node.point) {
            double dist2 = 0.0;
            for (std::size_t d = 0; d < dim_; ++d) {
                const double diff = query[d] - point[d];
                dist2 += diff * diff;
            }
            if (heap.size() < k) {
                heap.emplace_back(dist2, node.point);
                std::push_heap(heap.begin(), heap.end(), heap_worse);
            } else if (closer(dist2, node.point, heap.front().first, heap.front().second)) {
                std::pop_heap(heap.begin(), heap.end(), heap_worse);
                heap.back() = {dist2, node.point};
                std::push_heap(heap.begin(), heap.end(), heap_worse);
            }
        }

        const std::size_t axis = depth % dim_;
        const double plane_delta = query[axis] - point[axis];
        const std::int32_t near = plane_delta < 0.0 ? node.left : node.right;
        const std::int32_t far = plane_delta < 0.0 ? node.right : node.left;
        self(self, near, depth + 1);
        if (heap.size() < k || plane_delta * plane_delta <= heap.front().first) {
            self(self, far, depth + 1);
        }
    };
    visit(visit, root_, 0);

    std::sort(heap.begin(), heap.end(), heap_worse);
    std::vector<Neighbor> out;
    out.reserve(heap.size());
    for (const auto& [dist2, id] : heap) out.push_back({id, std::sqrt(dist2)});
    return out;
}

}  // namespace panther
