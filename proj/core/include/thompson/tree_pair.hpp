#ifndef THOMPSON_TREE_PAIR_HPP
#define THOMPSON_TREE_PAIR_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "thompson/tree.hpp"

namespace thompson {

/**
 * Tree diagram (top, bottom) representing an element of F (binary) or F_3
 * (ternary). Both trees share an arity and a leaf count. Text form is
 * `top|bottom`.
 */
class TreePair {
public:
    TreePair(PlanarTree top, PlanarTree bottom);

    static TreePair identity(Arity arity);
    static TreePair parse(std::string_view text, std::optional<Arity> fallback = {});

    const PlanarTree& top() const noexcept { return top_; }
    const PlanarTree& bottom() const noexcept { return bottom_; }
    Arity arity() const noexcept { return top_.arity(); }
    std::size_t leaf_count() const noexcept { return top_.leaf_count(); }
    std::size_t caret_count() const noexcept { return top_.caret_count() + bottom_.caret_count(); }

    /// No pair of opposing carets remains.
    bool is_reduced() const;

    TreePair inverse() const { return TreePair(bottom_, top_); }

    std::string to_string() const;

    friend bool operator==(const TreePair&, const TreePair&) = default;

private:
    PlanarTree top_;
    PlanarTree bottom_;
};

std::ostream& operator<<(std::ostream& os, const TreePair& p);

/// y_i (binary) or x_i (ternary). Throws on a negative index.
TreePair generator(int index, Arity arity);

/// Removes opposing caret pairs, scanning left to right, until none remain.
TreePair reduce(const TreePair& p);

/// (A, B) * (C, D) computed on the common refinement of B and C, not reduced.
TreePair multiply_unreduced(const TreePair& p, const TreePair& q);

/// Reduced product.
TreePair multiply(const TreePair& p, const TreePair& q);

/// Adds one opposing caret pair at leaf `leaf_index` (1-based) of both trees.
TreePair expand_leaf(const TreePair& p, std::size_t leaf_index);

/// Applies the binary-to-ternary embedding to both trees.
TreePair iota(const TreePair& binary);

}  // namespace thompson

#endif  // THOMPSON_TREE_PAIR_HPP
