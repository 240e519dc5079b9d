#ifndef THOMPSON_ENUMERATE_HPP
#define THOMPSON_ENUMERATE_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "thompson/word.hpp"

namespace thompson {

/// Exponent tuples of length `width` with entries in 0..height.
struct Grid {
    std::size_t width = 1;
    PositiveWord::Exponent height = 0;

    /// (height + 1)^width; throws std::overflow_error past 2^64.
    std::uint64_t size() const;
    /// Element at lexicographic position `index` (first exponent most significant).
    PositiveWord at(std::uint64_t index) const;
};

/// Throws std::invalid_argument for width 0.
Grid make_grid(std::size_t width, PositiveWord::Exponent height);

/// Visits grid elements with index in [first, last) in lexicographic order.
void for_each_element(const Grid& grid, std::uint64_t first, std::uint64_t last,
                      const std::function<void(const PositiveWord&)>& visit);

/// Every tuple in {0..h}^w exactly once, lexicographically, zero tuple first.
std::vector<PositiveWord> enumerate_elements(std::size_t width, PositiveWord::Exponent height);

/// Uniform in 0..bound-1 from a 64-bit engine: draws below (2^64 mod bound)
/// are rejected so every residue is equally likely.
template <class Engine>
std::uint64_t uniform_below(std::uint64_t bound, Engine& engine) {
    const std::uint64_t reject_below = (0 - bound) % bound;
    for (;;) {
        const std::uint64_t x = engine();
        if (x >= reject_below) return x % bound;
    }
}

/// `count` independent uniform tuples from {0..h}^w. The stream is
/// std::mt19937_64 seeded with `seed`, coordinates drawn in order through
/// `uniform_below`, so the output is identical on every platform.
std::vector<PositiveWord> random_elements(std::size_t width, PositiveWord::Exponent height, std::size_t count,
                                          std::uint64_t seed);

}  // namespace thompson

#endif  // THOMPSON_ENUMERATE_HPP
