#include "thompson/matching.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace thompson {

namespace {

constexpr std::uint8_t kLeft = 0;
constexpr std::uint8_t kMiddle = 1;
constexpr std::uint8_t kRight = 2;

Point walk_up(const std::vector<PlanarTree::Node>& nodes, std::int32_t at);

}  // namespace

Matching::Matching(std::vector<Point> partner) : partner_(std::move(partner)) {
    for (std::size_t i = 0; i < partner_.size(); ++i) {
        const Point j = partner_[i];
        if (j >= partner_.size()) throw std::invalid_argument("matching: partner out of range");
        if (j == i) throw std::invalid_argument("matching: fixed point " + std::to_string(i));
        if (partner_[j] != i) throw std::invalid_argument("matching: not an involution at " + std::to_string(i));
    }
}

Matching Matching::from_pairs(std::size_t size, std::span<const std::pair<Point, Point>> pairs) {
    constexpr Point unset = ~Point{0};
    std::vector<Point> partner(size, unset);
    for (const auto& [a, b] : pairs) {
        if (a >= size || b >= size) throw std::invalid_argument("matching: pair out of range");
        if (partner[a] != unset || partner[b] != unset) {
            throw std::invalid_argument("matching: point used twice");
        }
        partner[a] = b;
        partner[b] = a;
    }
    if (std::find(partner.begin(), partner.end(), unset) != partner.end()) {
        throw std::invalid_argument("matching: not every point is paired");
    }
    return Matching(std::move(partner));
}

std::vector<std::pair<Point, Point>> Matching::pairs() const {
    std::vector<std::pair<Point, Point>> out;
    out.reserve(partner_.size() / 2);
    for (Point i = 0; i < partner_.size(); ++i) {
        if (i < partner_[i]) out.emplace_back(i, partner_[i]);
    }
    return out;
}

std::string Matching::to_string() const {
    std::string s;
    for (const auto& [a, b] : pairs()) {
        s += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    }
    return s;
}

std::ostream& operator<<(std::ostream& os, const Matching& m) { return os << m.to_string(); }

Point trace_path(const std::vector<PlanarTree::Node>& nodes, Point leaf) {
    auto it = std::find_if(nodes.begin(), nodes.end(), [&](const auto& n) { return n.leaf == leaf; });
    if (leaf == 0 || it == nodes.end()) throw std::out_of_range("trace_path: no leaf " + std::to_string(leaf));
    return walk_up(nodes, static_cast<std::int32_t>(it - nodes.begin()));
}

namespace {

Point walk_up(const std::vector<PlanarTree::Node>& nodes, std::int32_t at) {
    bool ascending = true;
    // Every edge is crossed at most once in each direction.
    const std::size_t bound = 2 * nodes.size() + 2;
    for (std::size_t step = 0; step < bound; ++step) {
        const auto& node = nodes[static_cast<std::size_t>(at)];
        if (ascending) {
            if (node.parent < 0) return 0;
            const auto& parent = nodes[static_cast<std::size_t>(node.parent)];
            switch (node.slot) {
                case kLeft:
                    at = parent.children[kRight];
                    ascending = false;
                    break;
                case kRight:
                    at = parent.children[kLeft];
                    ascending = false;
                    break;
                case kMiddle:
                    at = node.parent;
                    break;
                default:
                    throw std::logic_error("trace_path: bad child slot");
            }
        } else {
            if (node.is_leaf()) return node.leaf;
            at = node.children[kMiddle];
        }
    }
    throw std::logic_error("trace_path: walk did not terminate (malformed tree)");
}

}  // namespace

Matching tree_matching(const PlanarTree& tree) {
    if (tree.arity() != Arity::ternary) throw std::invalid_argument("tree_matching: ternary tree required");
    const auto nodes = tree.nodes();
    const std::size_t k = tree.leaf_count();
    std::vector<Point> partner(k + 1, 0);
    bool root_seen = false;
    for (std::size_t id = 0; id < nodes.size(); ++id) {
        if (!nodes[id].is_leaf()) continue;
        const Point leaf = nodes[id].leaf;
        const Point end = walk_up(nodes, static_cast<std::int32_t>(id));
        partner[leaf] = end;
        if (end == 0) {
            if (root_seen) throw std::logic_error("tree_matching: two paths reach the root");
            root_seen = true;
            partner[0] = leaf;
        }
    }
    if (!root_seen) throw std::logic_error("tree_matching: no path reaches the root");
    return Matching(std::move(partner));
}

Matching vine_matching(std::size_t carets) {
    if (carets == 0) return Matching({1, 0});
    const auto c = static_cast<Point>(carets);
    std::vector<std::pair<Point, Point>> pairs;
    pairs.reserve(carets + 1);
    pairs.emplace_back(0, 2);
    for (Point i = 1; i < c; ++i) pairs.emplace_back(2 * i - 1, 2 * i + 2);
    pairs.emplace_back(2 * c - 1, 2 * c + 1);
    return Matching::from_pairs(2 * carets + 2, pairs);
}

}  // namespace thompson
