#ifndef THOMPSON_TREE_HPP
#define THOMPSON_TREE_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace thompson {

/// Number of children of every caret: 2 for F, 3 for F_3.
enum class Arity : std::uint8_t { binary = 2, ternary = 3 };

constexpr unsigned children_of(Arity a) noexcept { return static_cast<unsigned>(a); }

enum class Token : std::uint8_t { leaf, caret };

/**
 * Rooted planar tree in which every caret has the same arity.
 *
 * Stored as its preorder token sequence; the planar structure is recovered
 * from the sequence alone because every caret has exactly `arity` children.
 * Leaves are numbered 1..k from left to right, which is preorder order.
 *
 * Text form: a leaf is `.`, a caret is `(` followed by its children and `)`.
 */
class PlanarTree {
public:
    /// Explicit node layout, indexed by preorder position.
    struct Node {
        std::int32_t parent = -1;
        std::uint8_t slot = 0;  // position among the parent's children
        std::array<std::int32_t, 3> children{-1, -1, -1};
        std::uint32_t leaf = 0;  // 1-based leaf number, 0 for carets

        bool is_leaf() const noexcept { return leaf != 0; }
    };

    /// A single leaf.
    explicit PlanarTree(Arity arity = Arity::ternary);

    /// Validates that `preorder` describes exactly one complete tree.
    static PlanarTree from_preorder(Arity arity, std::vector<Token> preorder);

    /// A caret whose children are the given subtrees (size must equal the arity).
    static PlanarTree join(std::span<const PlanarTree> children);

    /// Parses the `.`/`(...)` form. Arity is inferred from the first caret;
    /// `fallback` is used for a bare leaf and must agree when given.
    static PlanarTree parse(std::string_view text, std::optional<Arity> fallback = {});

    Arity arity() const noexcept { return arity_; }
    std::size_t caret_count() const noexcept { return carets_; }
    std::size_t leaf_count() const noexcept { return carets_ * (children_of(arity_) - 1) + 1; }
    bool is_leaf() const noexcept { return carets_ == 0; }

    const std::vector<Token>& preorder() const noexcept { return preorder_; }
    std::vector<Node> nodes() const;

    std::string to_string() const;

    friend bool operator==(const PlanarTree&, const PlanarTree&) = default;

private:
    PlanarTree(Arity arity, std::vector<Token> preorder, std::size_t carets);

    Arity arity_;
    std::vector<Token> preorder_;
    std::size_t carets_ = 0;
};

std::ostream& operator<<(std::ostream& os, const PlanarTree& t);

/// Right vine with `carets` carets: each caret hangs off the rightmost child
/// of the previous one.
PlanarTree make_vine(std::size_t carets, Arity arity);

/// True if `t` is a right vine (a single leaf counts).
bool is_right_vine(const PlanarTree& t);

/// Replaces leaf `leaf_index` (1-based) of `host` by `scion`.
PlanarTree graft(const PlanarTree& host, std::size_t leaf_index, const PlanarTree& scion);

/// Replaces the i-th leaf of `host` by `scions[i]` for every leaf at once.
PlanarTree substitute_leaves(const PlanarTree& host, std::span<const PlanarTree> scions);

/// Smallest tree containing both inputs as rooted prefixes, together with the
/// subtree of the refinement that hangs below each leaf of either input.
struct Refinement {
    PlanarTree tree;
    std::vector<PlanarTree> first_scions;
    std::vector<PlanarTree> second_scions;
};

Refinement common_refinement(const PlanarTree& first, const PlanarTree& second);

/// Binary to ternary embedding: caret(L, R) becomes caret(L', leaf, R').
PlanarTree iota(const PlanarTree& binary);

}  // namespace thompson

#endif  // THOMPSON_TREE_HPP
