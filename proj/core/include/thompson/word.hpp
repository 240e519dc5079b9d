#ifndef THOMPSON_WORD_HPP
#define THOMPSON_WORD_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "thompson/tree_pair.hpp"

namespace thompson {

/**
 * Positive element x_0^{a_0} x_1^{a_1} ... of F_3 given by its exponents.
 *
 * Trailing zeros are allowed and do not change the element; `canonical()`
 * strips them. Text form is a comma-separated list such as `1,0,2`; the
 * empty string is the identity.
 */
class PositiveWord {
public:
    using Exponent = std::uint32_t;

    PositiveWord() = default;
    explicit PositiveWord(std::vector<Exponent> exponents) : exponents_(std::move(exponents)) {}

    static PositiveWord parse(std::string_view text);

    const std::vector<Exponent>& exponents() const noexcept { return exponents_; }

    PositiveWord canonical() const;

    /// Exponent count of the canonical form (0 for the identity).
    std::size_t length() const;
    /// Largest generator index n with a_n > 0; 0 for the identity.
    std::size_t width() const;
    /// max_i a_i.
    Exponent height() const;
    std::uint64_t letter_count() const;
    bool is_identity() const;

    std::string to_string() const;

    friend bool operator==(const PositiveWord&, const PositiveWord&) = default;
    friend auto operator<=>(const PositiveWord&, const PositiveWord&) = default;

private:
    std::vector<Exponent> exponents_;
};

std::ostream& operator<<(std::ostream& os, const PositiveWord& w);

/// Left-to-right product of generator pairs through `multiply`; reduced.
TreePair word_to_pair(const PositiveWord& w);

/// Same element as `word_to_pair`, built by grafting one caret per letter
/// onto the top tree while the bottom tree stays a right vine.
TreePair positive_pair(const PositiveWord& w);

}  // namespace thompson

#endif  // THOMPSON_WORD_HPP
