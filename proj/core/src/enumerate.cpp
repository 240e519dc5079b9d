#include "thompson/enumerate.hpp"

#include <random>
#include <stdexcept>
#include <string>

namespace thompson {

std::uint64_t Grid::size() const {
    const std::uint64_t base = std::uint64_t{height} + 1;
    std::uint64_t n = 1;
    for (std::size_t i = 0; i < width; ++i) {
        if (n > UINT64_MAX / base) throw std::overflow_error("grid size exceeds 2^64");
        n *= base;
    }
    return n;
}

PositiveWord Grid::at(std::uint64_t index) const {
    const std::uint64_t base = std::uint64_t{height} + 1;
    std::vector<PositiveWord::Exponent> e(width, 0);
    for (std::size_t i = width; i-- > 0;) {
        e[i] = static_cast<PositiveWord::Exponent>(index % base);
        index /= base;
    }
    return PositiveWord(std::move(e));
}

Grid make_grid(std::size_t width, PositiveWord::Exponent height) {
    if (width == 0) throw std::invalid_argument("grid width must be at least 1");
    return Grid{width, height};
}

void for_each_element(const Grid& grid, std::uint64_t first, std::uint64_t last,
                      const std::function<void(const PositiveWord&)>& visit) {
    if (first >= last) return;
    std::vector<PositiveWord::Exponent> e = grid.at(first).exponents();
    for (std::uint64_t index = first;;) {
        visit(PositiveWord(e));
        if (++index == last) break;
        // Odometer step, last coordinate fastest.
        std::size_t i = e.size();
        while (i-- > 0) {
            if (e[i] < grid.height) {
                ++e[i];
                break;
            }
            e[i] = 0;
        }
    }
}

std::vector<PositiveWord> enumerate_elements(std::size_t width, PositiveWord::Exponent height) {
    const Grid grid = make_grid(width, height);
    std::vector<PositiveWord> out;
    out.reserve(grid.size());
    for_each_element(grid, 0, grid.size(), [&](const PositiveWord& w) { out.push_back(w); });
    return out;
}

std::vector<PositiveWord> random_elements(std::size_t width, PositiveWord::Exponent height, std::size_t count,
                                          std::uint64_t seed) {
    const Grid grid = make_grid(width, height);
    std::mt19937_64 engine(seed);
    const std::uint64_t bound = std::uint64_t{grid.height} + 1;
    std::vector<PositiveWord> out;
    out.reserve(count);
    for (std::size_t n = 0; n < count; ++n) {
        std::vector<PositiveWord::Exponent> e(width);
        for (auto& a : e) a = static_cast<PositiveWord::Exponent>(uniform_below(bound, engine));
        out.emplace_back(std::move(e));
    }
    return out;
}

}  // namespace thompson
