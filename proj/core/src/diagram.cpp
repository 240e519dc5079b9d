#include "thompson/diagram.hpp"

#include <sstream>
#include <stdexcept>

namespace thompson {

namespace {

struct Vec {
    int x;
    int y;
};

// Port directions around a caret vertex. Top carets open downward toward the
// axis, bottom carets open upward.
Vec port_direction(Half half, Port port) {
    const int up = half == Half::top ? 1 : -1;
    switch (port) {
        case Port::parent:
            return {0, up};
        case Port::left:
            return {-1, -up};
        case Port::middle:
            return {0, -up};
        case Port::right:
            return {1, -up};
    }
    return {0, 0};
}

// Ports in counterclockwise order starting from the parent.
std::array<Port, 4> counterclockwise(Half half) {
    if (half == Half::top) return {Port::parent, Port::left, Port::middle, Port::right};
    return {Port::parent, Port::right, Port::middle, Port::left};
}

bool is_left_right(Port p) { return p == Port::left || p == Port::right; }

bool is_over(const LinkDiagram::Crossing& c, Port strand_port) {
    return is_left_right(strand_port) == c.left_right_over;
}

// Entry and exit port of each strand at every crossing.
struct StrandPass {
    Port entry = Port::parent;
    Port exit = Port::parent;
    bool seen = false;
};

std::vector<std::array<StrandPass, 2>> strand_passes(const LinkDiagram& d,
                                                     const std::vector<OrientedComponent>& components) {
    std::vector<std::array<StrandPass, 2>> out(d.crossing_count());
    for (const auto& comp : components) {
        for (const auto& pass : comp.passages) {
            auto& slot = out[pass.crossing][is_left_right(pass.entry) ? 1 : 0];
            slot = {pass.entry, pass.exit, true};
        }
    }
    return out;
}

}  // namespace

CrossingConvention parse_crossing_convention(std::string_view token) {
    if (token == "left-right-over" || token == "standard") return CrossingConvention::left_right_over;
    if (token == "middle-parent-over" || token == "flipped") return CrossingConvention::middle_parent_over;
    throw std::invalid_argument("unknown crossing convention '" + std::string(token) + "'");
}

LinkDiagram::LinkDiagram(std::vector<Crossing> crossings, std::size_t points, std::vector<End> links)
    : crossings_(std::move(crossings)), points_(points), links_(std::move(links)) {
    if (links_.size() != 4 * crossings_.size() + 2 * points_) {
        throw std::invalid_argument("link diagram: wrong number of strand ends");
    }
}

LinkDiagram::End LinkDiagram::crossing_end(std::size_t crossing, Port port) const noexcept {
    return static_cast<End>(4 * crossing + static_cast<std::size_t>(port));
}

LinkDiagram::End LinkDiagram::axis_end(Point point, Half half) const noexcept {
    return static_cast<End>(4 * crossings_.size() + 2 * point + static_cast<std::size_t>(half));
}

Point LinkDiagram::point_of(End e) const noexcept {
    return static_cast<Point>((e - 4 * crossings_.size()) / 2);
}

LinkDiagram::End LinkDiagram::link(End e) const {
    const End f = links_.at(e);
    if (f == kDangling || f >= links_.size() || links_[f] != e) {
        throw std::logic_error("link diagram: dangling strand end " + std::to_string(e));
    }
    return f;
}

LinkDiagram::End LinkDiagram::through(End e) const noexcept {
    // parent<->middle and left<->right differ in bit 1; axis halves in bit 0.
    return is_axis(e) ? (e ^ 1U) : (e ^ 2U);
}

LinkDiagram LinkDiagram::mirrored() const {
    auto flipped = crossings_;
    for (auto& c : flipped) c.left_right_over = !c.left_right_over;
    return LinkDiagram(std::move(flipped), points_, links_);
}

LinkDiagram build_diagram(const TreePair& input, const DiagramOptions& options) {
    const TreePair p = input.arity() == Arity::binary ? iota(input) : input;
    if (!options.allow_unreduced && !p.is_reduced()) {
        throw std::invalid_argument("build_diagram: pair is not reduced");
    }
    const bool lr_over = options.convention == CrossingConvention::left_right_over;
    const std::size_t points = p.leaf_count() + 1;

    std::vector<LinkDiagram::Crossing> crossings;
    crossings.reserve(p.caret_count());
    const std::array<std::vector<PlanarTree::Node>, 2> layouts{p.top().nodes(), p.bottom().nodes()};
    std::array<std::vector<std::uint32_t>, 2> crossing_id;
    for (Half half : {Half::top, Half::bottom}) {
        const auto h = static_cast<std::size_t>(half);
        crossing_id[h].assign(layouts[h].size(), 0);
        for (std::size_t n = 0; n < layouts[h].size(); ++n) {
            if (layouts[h][n].is_leaf()) continue;
            crossing_id[h][n] = static_cast<std::uint32_t>(crossings.size());
            crossings.push_back({half, static_cast<std::uint32_t>(n), lr_over});
        }
    }

    const std::size_t c_count = crossings.size();
    std::vector<LinkDiagram::End> links(4 * c_count + 2 * points, LinkDiagram::kDangling);
    auto crossing_end = [](std::size_t c, Port port) {
        return static_cast<LinkDiagram::End>(4 * c + static_cast<std::size_t>(port));
    };
    auto axis_end = [&](std::size_t point, Half half) {
        return static_cast<LinkDiagram::End>(4 * c_count + 2 * point + static_cast<std::size_t>(half));
    };
    auto connect = [&](LinkDiagram::End a, LinkDiagram::End b) {
        links[a] = b;
        links[b] = a;
    };
    constexpr std::array<Port, 3> child_port{Port::left, Port::middle, Port::right};

    for (Half half : {Half::top, Half::bottom}) {
        const auto h = static_cast<std::size_t>(half);
        const auto& nodes = layouts[h];
        for (std::size_t n = 0; n < nodes.size(); ++n) {
            const auto& node = nodes[n];
            // Lower end of the edge above `node`.
            const LinkDiagram::End below =
                node.is_leaf() ? axis_end(node.leaf, half) : crossing_end(crossing_id[h][n], Port::parent);
            // Upper end: the parent's child port, or the root arc through point 0.
            const LinkDiagram::End above =
                node.parent < 0 ? axis_end(0, half)
                                : crossing_end(crossing_id[h][static_cast<std::size_t>(node.parent)],
                                               child_port[node.slot]);
            connect(below, above);
        }
    }
    return LinkDiagram(std::move(crossings), points, std::move(links));
}

std::size_t trace_components(const LinkDiagram& d) {
    std::vector<bool> visited(d.end_count(), false);
    std::size_t components = 0;
    for (LinkDiagram::End start = 0; start < d.end_count(); ++start) {
        if (visited[start]) continue;
        ++components;
        LinkDiagram::End at = start;
        do {
            visited[at] = true;
            const LinkDiagram::End next = d.link(at);
            visited[next] = true;
            at = d.through(next);
        } while (at != start);
    }
    return components;
}

CodeFormat parse_code_format(std::string_view token) {
    if (token == "pd") return CodeFormat::pd;
    if (token == "gauss") return CodeFormat::gauss;
    throw std::invalid_argument("unsupported diagram code format '" + std::string(token) + "'");
}

std::vector<OrientedComponent> oriented_components(const LinkDiagram& d) {
    std::vector<bool> visited(d.end_count(), false);
    std::vector<OrientedComponent> out;
    for (Point s = 0; s < d.point_count(); ++s) {
        const LinkDiagram::End start = d.axis_end(s, Half::top);
        if (visited[start]) continue;
        OrientedComponent comp{s, {}, {}};
        LinkDiagram::End at = start;
        comp.axis_points.push_back(s);
        do {
            visited[at] = true;
            const LinkDiagram::End arrive = d.link(at);
            visited[arrive] = true;
            at = d.through(arrive);
            if (d.is_axis(arrive)) {
                if (at != start) comp.axis_points.push_back(d.point_of(arrive));
            } else {
                comp.passages.push_back({static_cast<std::uint32_t>(d.crossing_of(arrive)), d.port_of(arrive),
                                         d.port_of(at)});
            }
        } while (at != start);
        out.push_back(std::move(comp));
    }
    return out;
}

int crossing_sign(const LinkDiagram& d, std::size_t crossing, const std::vector<OrientedComponent>& components) {
    const auto passes = strand_passes(d, components);
    const auto& c = d.crossings().at(crossing);
    const auto& pm = passes[crossing][0];
    const auto& lr = passes[crossing][1];
    if (!pm.seen || !lr.seen) throw std::logic_error("crossing_sign: crossing not traversed");
    auto direction = [&](const StrandPass& s) {
        const Vec in = port_direction(c.half, s.entry);
        const Vec out = port_direction(c.half, s.exit);
        return Vec{out.x - in.x, out.y - in.y};
    };
    const Vec over = direction(c.left_right_over ? lr : pm);
    const Vec under = direction(c.left_right_over ? pm : lr);
    return over.x * under.y - over.y * under.x > 0 ? 1 : -1;
}

std::string export_code(const LinkDiagram& d, CodeFormat format) {
    const auto components = oriented_components(d);
    std::ostringstream os;
    os << "components=" << components.size() << " crossings=" << d.crossing_count() << '\n';

    if (format == CodeFormat::gauss) {
        std::vector<int> signs(d.crossing_count());
        for (std::size_t c = 0; c < d.crossing_count(); ++c) signs[c] = crossing_sign(d, c, components);
        for (const auto& comp : components) {
            for (std::size_t i = 0; i < comp.passages.size(); ++i) {
                const auto& pass = comp.passages[i];
                const auto& c = d.crossings()[pass.crossing];
                if (i != 0) os << ' ';
                os << (is_over(c, pass.entry) ? 'O' : 'U') << (signs[pass.crossing] > 0 ? '+' : '-')
                   << (pass.crossing + 1);
            }
            os << '\n';
        }
        return os.str();
    }

    // Edge labels per crossing port, numbered along each oriented component.
    std::vector<std::array<std::uint32_t, 4>> label(d.crossing_count());
    std::uint32_t base = 0;
    for (const auto& comp : components) {
        const auto m = static_cast<std::uint32_t>(comp.passages.size());
        for (std::uint32_t i = 0; i < m; ++i) {
            const auto& pass = comp.passages[i];
            label[pass.crossing][static_cast<std::size_t>(pass.entry)] = base + i + 1;
            label[pass.crossing][static_cast<std::size_t>(pass.exit)] = base + (i + 1) % m + 1;
        }
        base += m;
    }
    const auto passes = strand_passes(d, components);
    for (std::size_t c = 0; c < d.crossing_count(); ++c) {
        const auto& crossing = d.crossings()[c];
        const auto& under = crossing.left_right_over ? passes[c][0] : passes[c][1];
        const auto order = counterclockwise(crossing.half);
        std::size_t first = 0;
        while (order[first] != under.entry) ++first;
        os << "X[";
        for (std::size_t k = 0; k < 4; ++k) {
            if (k != 0) os << ',';
            os << label[c][static_cast<std::size_t>(order[(first + k) % 4])];
        }
        os << "]\n";
    }
    return os.str();
}

}  // namespace thompson
