#ifndef THOMPSON_MATCHING_HPP
#define THOMPSON_MATCHING_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "thompson/tree.hpp"

namespace thompson {

using Point = std::uint32_t;

/// Fixed-point-free involution on the axis points {0, ..., k}.
class Matching {
public:
    /// Throws unless `partner` is a fixed-point-free involution.
    explicit Matching(std::vector<Point> partner);

    static Matching from_pairs(std::size_t size, std::span<const std::pair<Point, Point>> pairs);

    std::size_t size() const noexcept { return partner_.size(); }
    Point operator()(Point p) const { return partner_.at(p); }
    const std::vector<Point>& partners() const noexcept { return partner_; }

    /// Unordered pairs as (min, max), sorted by min.
    std::vector<std::pair<Point, Point>> pairs() const;

    /// `(0,2)(1,6)(3,5)(4,7)`: pairs sorted by their smaller point.
    std::string to_string() const;

    friend bool operator==(const Matching&, const Matching&) = default;

private:
    std::vector<Point> partner_;
};

std::ostream& operator<<(std::ostream& os, const Matching& m);

/// Endpoint of the path that starts at leaf `leaf` (1-based) of a ternary
/// tree, or 0 when the path leaves through the root.
Point trace_path(const std::vector<PlanarTree::Node>& nodes, Point leaf);

/// Tangled matching of a ternary tree: pairs path endpoints, 0 being the root.
Matching tree_matching(const PlanarTree& tree);

/// Closed form of `tree_matching(make_vine(carets, ternary))`.
Matching vine_matching(std::size_t carets);

}  // namespace thompson

#endif  // THOMPSON_MATCHING_HPP
