#ifndef THOMPSON_DIAGRAM_HPP
#define THOMPSON_DIAGRAM_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "thompson/matching.hpp"
#include "thompson/tree_pair.hpp"

namespace thompson {

enum class Port : std::uint8_t { parent = 0, left = 1, middle = 2, right = 3 };
enum class Half : std::uint8_t { top = 0, bottom = 1 };

/// Which of the two strands at a caret crossing is drawn on top.
enum class CrossingConvention : std::uint8_t { left_right_over, middle_parent_over };

CrossingConvention parse_crossing_convention(std::string_view token);

/**
 * Closure of a ternary tree diagram as a 4-valent diagram.
 *
 * Every caret becomes a crossing with ports parent/left/middle/right; the
 * left-right ports form one strand and the parent-middle ports the other.
 * Axis point i (1..k) glues leaf i of the top tree to leaf i of the bottom
 * tree, and axis point 0 carries the arc joining the two roots.
 *
 * Strand ends are integers: crossing c, port p is `4c + p`; axis point i on
 * half h is `4C + 2i + h` where C is the crossing count.
 */
class LinkDiagram {
public:
    using End = std::uint32_t;
    static constexpr End kDangling = ~End{0};

    struct Crossing {
        Half half = Half::top;
        std::uint32_t node = 0;  // preorder position of the caret in its tree
        bool left_right_over = true;
    };

    /// `links` pairs up strand ends along edges; it is validated on traversal.
    LinkDiagram(std::vector<Crossing> crossings, std::size_t points, std::vector<End> links);

    std::size_t crossing_count() const noexcept { return crossings_.size(); }
    std::size_t point_count() const noexcept { return points_; }
    std::size_t end_count() const noexcept { return links_.size(); }
    const std::vector<Crossing>& crossings() const noexcept { return crossings_; }

    End crossing_end(std::size_t crossing, Port port) const noexcept;
    End axis_end(Point point, Half half) const noexcept;
    bool is_axis(End e) const noexcept { return e >= 4 * crossings_.size(); }
    std::size_t crossing_of(End e) const noexcept { return e / 4; }
    Port port_of(End e) const noexcept { return static_cast<Port>(e % 4); }
    Point point_of(End e) const noexcept;

    /// Partner across an edge; throws on a dangling end.
    End link(End e) const;
    /// Continuation of the strand through a crossing or across the axis.
    End through(End e) const noexcept;

    /// Same diagram with every over/under choice swapped.
    LinkDiagram mirrored() const;

private:
    std::vector<Crossing> crossings_;
    std::size_t points_;
    std::vector<End> links_;
};

struct DiagramOptions {
    /// Accept pairs that still contain opposing carets.
    bool allow_unreduced = false;
    CrossingConvention convention = CrossingConvention::left_right_over;
};

/// Binary pairs are lifted through iota. Throws on unreduced input unless
/// `options.allow_unreduced` is set.
LinkDiagram build_diagram(const TreePair& p, const DiagramOptions& options = {});

/// Number of closed curves; over/under information is ignored.
std::size_t trace_components(const LinkDiagram& d);

enum class CodeFormat : std::uint8_t { pd, gauss };

CodeFormat parse_code_format(std::string_view token);

/// One passage of an oriented component through a crossing.
struct Passage {
    std::uint32_t crossing;
    Port entry;
    Port exit;
};

struct OrientedComponent {
    Point start;                    // leftmost axis point, left upward
    std::vector<Point> axis_points;  // in traversal order
    std::vector<Passage> passages;
};

/// Components ordered by leftmost axis point, each oriented upward there.
std::vector<OrientedComponent> oriented_components(const LinkDiagram& d);

/// +1 or -1 for a right- or left-handed crossing under the standard orientation.
int crossing_sign(const LinkDiagram& d, std::size_t crossing, const std::vector<OrientedComponent>& components);

/// PD: header `components=N crossings=M`, then one `X[a,b,c,d]` per crossing
/// starting at the incoming under-strand and going counterclockwise.
/// Gauss: same header, then one line of `O+k`/`U-k` tokens per component.
std::string export_code(const LinkDiagram& d, CodeFormat format);

}  // namespace thompson

#endif  // THOMPSON_DIAGRAM_HPP
