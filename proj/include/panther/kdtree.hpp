#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace panther {

// Exact k-nearest-neighbor kd-tree over n points of dimension dim stored
// row-major in a flat array that must outlive the tree. Splitting cycles
// through dimensions by depth (depth % dim) with a median split; queries
// return exactly the brute-force answer, distance ties broken by ascending
// point id.
class KdTree {
public:
    KdTree(std::span<const double> points, std::size_t dim);

    std::size_t size() const { return ids_.size(); }
    std::size_t dimension() const { return dim_; }

    struct Neighbor {
        std::uint32_t id;
        double distance;  // Euclidean
    };

    // k nearest neighbors of query, nearest first; exclude (when set) is
    // skipped entirely. Fewer than k points yields a shorter result.
    std::vector<Neighbor> nearest(std::span<const double> query, std::size_t k,
                                  std::optional<std::uint32_t> exclude = std::nullopt) const;

private:
    struct Node {
        std::uint32_t point;  // id of the point stored at this node
        std::int32_t left = -1;
        std::int32_t right = -1;
    };

    std::span<const double> coord(std::uint32_t id) const {
        return {points_.data() + static_cast<std::size_t>(id) * dim_, dim_};
    }

    std::int32_t build(std::uint32_t* first, std::uint32_t* last, std::size_t depth);

    std::span<const double> points_;
    std::size_t dim_;
    std::vector<Node> nodes_;
    std::vector<std::uint32_t> ids_;
    std::int32_t root_ = -1;
};

}  // namespace panther
