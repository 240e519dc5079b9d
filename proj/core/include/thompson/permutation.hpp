#ifndef THOMPSON_PERMUTATION_HPP
#define THOMPSON_PERMUTATION_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "thompson/matching.hpp"
#include "thompson/tree_pair.hpp"
#include "thompson/word.hpp"

namespace thompson {

/**
 * Cycle decomposition obtained by alternating the top and bottom matchings.
 *
 * Cycles are listed by increasing minimum and each starts at its minimum,
 * which is also the point where the component is oriented upward.
 */
class ThompsonPermutation {
public:
    using Cycle = std::vector<Point>;

    ThompsonPermutation() = default;
    ThompsonPermutation(std::size_t points, std::vector<Cycle> cycles);

    std::size_t point_count() const noexcept { return points_; }
    std::size_t orbit_count() const noexcept { return cycles_.size(); }
    const std::vector<Cycle>& cycles() const noexcept { return cycles_; }

    /// Index of the cycle containing `p`.
    std::size_t cycle_of(Point p) const;
    /// Successor of `p` in its cycle.
    Point operator()(Point p) const;

    /// `(0,2)(1,6,3,5,7,4)`.
    std::string to_string() const;

    friend bool operator==(const ThompsonPermutation&, const ThompsonPermutation&) = default;

private:
    std::size_t points_ = 0;
    std::vector<Cycle> cycles_;
};

std::ostream& operator<<(std::ostream& os, const ThompsonPermutation& p);

/// Starting from the smallest unused point s, emits s, plus(s), minus(plus(s)), ...
ThompsonPermutation thompson_permutation(const Matching& plus, const Matching& minus);

/// Number of cycles of `thompson_permutation(plus, minus)` without storing them.
std::size_t count_orbits(const Matching& plus, const Matching& minus);

/// Permutation of the given representative as is; binary pairs go through iota
/// first. Unreduced pairs are accepted and count their extra split circles.
ThompsonPermutation permutation_of_pair(const TreePair& p);

/// Permutation of the reduced representative of a positive element.
ThompsonPermutation permutation_of_element(const PositiveWord& w);

/// Number of link components of the closure of a positive element.
std::size_t orbit_count(const PositiveWord& w);

/// Same count as `orbit_count`, computed from `positive_pair` and the closed
/// form of the vine matching. This is the path used by the enumeration engine.
std::size_t positive_orbit_count(const PositiveWord& w);

/// Reverses the orientation of the component through axis point `point` by
/// grafting a copy of x_0 (y_0 for binary pairs) at the glued leaf pair that
/// is leftmost on that component.
///
/// The component through point 0 has its orientation pinned by the closure
/// arc; for it the copy goes at `point` itself, which keeps the orbit count.
/// Throws std::out_of_range when `point` is not in 1..k.
TreePair reverse_component(const TreePair& p, Point point);

}  // namespace thompson

#endif  // THOMPSON_PERMUTATION_HPP
