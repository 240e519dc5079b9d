#include "thompson/tree_pair.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace thompson {

namespace {

struct ExposedCaret {
    std::size_t first_leaf;  // 0-based leaf offset of its leftmost child
    std::size_t position;    // token position of the caret
};

// Carets whose children are all leaves, in left-to-right order.
std::vector<ExposedCaret> exposed_carets(const std::vector<Token>& t, unsigned arity) {
    std::vector<ExposedCaret> out;
    std::size_t leaves = 0;
    for (std::size_t pos = 0; pos < t.size(); ++pos) {
        if (t[pos] == Token::leaf) {
            ++leaves;
            continue;
        }
        if (pos + arity >= t.size()) continue;
        bool all_leaves = true;
        for (unsigned k = 1; k <= arity; ++k) all_leaves = all_leaves && t[pos + k] == Token::leaf;
        if (all_leaves) out.push_back({leaves, pos});
    }
    return out;
}

// Collapses the carets starting at the given token positions into single leaves.
std::vector<Token> collapse(const std::vector<Token>& t, const std::vector<std::size_t>& at,
                            unsigned arity) {
    std::vector<Token> out;
    out.reserve(t.size() - at.size() * arity);
    std::size_t next = 0;
    for (std::size_t pos = 0; pos < t.size(); ++pos) {
        if (next < at.size() && at[next] == pos) {
            out.push_back(Token::leaf);
            pos += arity;
            ++next;
        } else {
            out.push_back(t[pos]);
        }
    }
    return out;
}

// Matched opposing carets as (top position, bottom position) lists.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> opposing(const PlanarTree& top,
                                                                       const PlanarTree& bottom) {
    const unsigned n = children_of(top.arity());
    const auto a = exposed_carets(top.preorder(), n);
    const auto b = exposed_carets(bottom.preorder(), n);
    std::vector<std::size_t> top_at;
    std::vector<std::size_t> bottom_at;
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first_leaf < b[j].first_leaf) {
            ++i;
        } else if (b[j].first_leaf < a[i].first_leaf) {
            ++j;
        } else {
            top_at.push_back(a[i++].position);
            bottom_at.push_back(b[j++].position);
        }
    }
    return {std::move(top_at), std::move(bottom_at)};
}

}  // namespace

TreePair::TreePair(PlanarTree top, PlanarTree bottom) : top_(std::move(top)), bottom_(std::move(bottom)) {
    if (top_.arity() != bottom_.arity()) throw std::invalid_argument("tree pair: arity mismatch");
    if (top_.leaf_count() != bottom_.leaf_count()) {
        throw std::invalid_argument("tree pair: leaf counts differ (" + std::to_string(top_.leaf_count()) +
                                    " vs " + std::to_string(bottom_.leaf_count()) + ")");
    }
}

TreePair TreePair::identity(Arity arity) { return TreePair(PlanarTree(arity), PlanarTree(arity)); }

TreePair TreePair::parse(std::string_view text, std::optional<Arity> fallback) {
    const auto bar = text.find('|');
    if (bar == std::string_view::npos) throw std::invalid_argument("tree pair needs the form top|bottom");
    auto top = PlanarTree::parse(text.substr(0, bar), fallback);
    auto bottom = PlanarTree::parse(text.substr(bar + 1), fallback);
    // A bare leaf adopts the other side's arity.
    if (top.is_leaf() && !bottom.is_leaf()) top = PlanarTree(bottom.arity());
    if (bottom.is_leaf() && !top.is_leaf()) bottom = PlanarTree(top.arity());
    return TreePair(std::move(top), std::move(bottom));
}

bool TreePair::is_reduced() const { return opposing(top_, bottom_).first.empty(); }

std::string TreePair::to_string() const { return top_.to_string() + "|" + bottom_.to_string(); }

std::ostream& operator<<(std::ostream& os, const TreePair& p) { return os << p.to_string(); }

TreePair generator(int index, Arity arity) {
    if (index < 0) throw std::invalid_argument("generator index must be non-negative");
    const auto i = static_cast<std::size_t>(index);
    const std::size_t carets = arity == Arity::ternary ? i / 2 + 1 : i + 1;
    PlanarTree caret = make_vine(1, arity);
    PlanarTree top = graft(make_vine(carets, arity), i + 1, caret);
    return TreePair(std::move(top), make_vine(carets + 1, arity));
}

TreePair reduce(const TreePair& p) {
    const unsigned n = children_of(p.arity());
    PlanarTree top = p.top();
    PlanarTree bottom = p.bottom();
    for (;;) {
        auto [top_at, bottom_at] = opposing(top, bottom);
        if (top_at.empty()) break;
        top = PlanarTree::from_preorder(p.arity(), collapse(top.preorder(), top_at, n));
        bottom = PlanarTree::from_preorder(p.arity(), collapse(bottom.preorder(), bottom_at, n));
    }
    return TreePair(std::move(top), std::move(bottom));
}

TreePair multiply_unreduced(const TreePair& p, const TreePair& q) {
    if (p.arity() != q.arity()) throw std::invalid_argument("multiply: arity mismatch");
    const Refinement r = common_refinement(p.bottom(), q.top());
    return TreePair(substitute_leaves(p.top(), r.first_scions), substitute_leaves(q.bottom(), r.second_scions));
}

TreePair multiply(const TreePair& p, const TreePair& q) { return reduce(multiply_unreduced(p, q)); }

TreePair expand_leaf(const TreePair& p, std::size_t leaf_index) {
    const PlanarTree caret = make_vine(1, p.arity());
    return TreePair(graft(p.top(), leaf_index, caret), graft(p.bottom(), leaf_index, caret));
}

TreePair iota(const TreePair& binary) { return TreePair(iota(binary.top()), iota(binary.bottom())); }

}  // namespace thompson
