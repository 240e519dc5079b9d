#include "thompson/permutation.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace thompson {

namespace {

void check_compatible(const Matching& plus, const Matching& minus) {
    if (plus.size() != minus.size()) {
        throw std::invalid_argument("thompson_permutation: matchings of size " + std::to_string(plus.size()) +
                                    " and " + std::to_string(minus.size()));
    }
}

TreePair as_ternary(const TreePair& p) { return p.arity() == Arity::binary ? iota(p) : p; }

}  // namespace

ThompsonPermutation::ThompsonPermutation(std::size_t points, std::vector<Cycle> cycles)
    : points_(points), cycles_(std::move(cycles)) {}

std::size_t ThompsonPermutation::cycle_of(Point p) const {
    for (std::size_t c = 0; c < cycles_.size(); ++c) {
        if (std::find(cycles_[c].begin(), cycles_[c].end(), p) != cycles_[c].end()) return c;
    }
    throw std::out_of_range("point " + std::to_string(p) + " not in permutation");
}

Point ThompsonPermutation::operator()(Point p) const {
    const auto& cycle = cycles_[cycle_of(p)];
    const auto it = std::find(cycle.begin(), cycle.end(), p);
    return std::next(it) == cycle.end() ? cycle.front() : *std::next(it);
}

std::string ThompsonPermutation::to_string() const {
    std::string s;
    for (const auto& cycle : cycles_) {
        s.push_back('(');
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            if (i != 0) s.push_back(',');
            s += std::to_string(cycle[i]);
        }
        s.push_back(')');
    }
    return s;
}

std::ostream& operator<<(std::ostream& os, const ThompsonPermutation& p) { return os << p.to_string(); }

ThompsonPermutation thompson_permutation(const Matching& plus, const Matching& minus) {
    check_compatible(plus, minus);
    const std::size_t n = plus.size();
    std::vector<bool> used(n, false);
    std::vector<ThompsonPermutation::Cycle> cycles;
    for (Point start = 0; start < n; ++start) {
        if (used[start]) continue;
        ThompsonPermutation::Cycle cycle{start};
        used[start] = true;
        Point at = start;
        for (;;) {
            at = plus(at);
            cycle.push_back(at);
            used[at] = true;
            at = minus(at);
            if (at == start) break;
            cycle.push_back(at);
            used[at] = true;
        }
        cycles.push_back(std::move(cycle));
    }
    return ThompsonPermutation(n, std::move(cycles));
}

std::size_t count_orbits(const Matching& plus, const Matching& minus) {
    check_compatible(plus, minus);
    const std::size_t n = plus.size();
    std::vector<bool> used(n, false);
    std::size_t orbits = 0;
    for (Point start = 0; start < n; ++start) {
        if (used[start]) continue;
        ++orbits;
        Point at = start;
        do {
            used[at] = true;
            at = plus(at);
            used[at] = true;
            at = minus(at);
        } while (at != start);
    }
    return orbits;
}

ThompsonPermutation permutation_of_pair(const TreePair& p) {
    const TreePair t = as_ternary(p);
    return thompson_permutation(tree_matching(t.top()), tree_matching(t.bottom()));
}

ThompsonPermutation permutation_of_element(const PositiveWord& w) {
    return permutation_of_pair(reduce(word_to_pair(w)));
}

std::size_t orbit_count(const PositiveWord& w) {
    const TreePair p = reduce(word_to_pair(w));
    return count_orbits(tree_matching(p.top()), tree_matching(p.bottom()));
}

std::size_t positive_orbit_count(const PositiveWord& w) {
    const TreePair p = positive_pair(w);
    if (!is_right_vine(p.bottom())) {
        throw std::logic_error("positive element " + w.to_string() + " has a non-vine bottom tree");
    }
    return count_orbits(tree_matching(p.top()), vine_matching(p.bottom().caret_count()));
}

TreePair reverse_component(const TreePair& p, Point point) {
    const TreePair t = as_ternary(p);
    if (point < 1 || point > t.leaf_count()) {
        throw std::out_of_range("reverse_component: point " + std::to_string(point) + " outside 1.." +
                                std::to_string(t.leaf_count()));
    }
    const ThompsonPermutation perm = permutation_of_pair(t);
    const auto& cycle = perm.cycles()[perm.cycle_of(point)];
    // The component through 0 keeps its orientation; graft where asked.
    const Point at = cycle.front() == 0 ? point : cycle.front();
    const TreePair x0 = generator(0, Arity::ternary);
    return TreePair(graft(t.top(), at, x0.top()), graft(t.bottom(), at, x0.bottom()));
}

}  // namespace thompson
