#include "thompson/word.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <stdexcept>

namespace thompson {

PositiveWord PositiveWord::parse(std::string_view text) {
    std::vector<Exponent> out;
    if (text.empty()) return PositiveWord{};
    std::size_t start = 0;
    for (;;) {
        const auto comma = text.find(',', start);
        const auto token = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
        Exponent value = 0;
        const auto* first = token.data();
        const auto* last = token.data() + token.size();
        const auto [ptr, ec] = std::from_chars(first, last, value);
        if (token.empty() || ec != std::errc{} || ptr != last) {
            throw std::invalid_argument("invalid exponent '" + std::string(token) + "'");
        }
        out.push_back(value);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return PositiveWord(std::move(out));
}

PositiveWord PositiveWord::canonical() const {
    return PositiveWord(std::vector<Exponent>(exponents_.begin(), exponents_.begin() + static_cast<std::ptrdiff_t>(length())));
}

std::size_t PositiveWord::length() const {
    std::size_t n = exponents_.size();
    while (n > 0 && exponents_[n - 1] == 0) --n;
    return n;
}

std::size_t PositiveWord::width() const {
    const std::size_t n = length();
    return n == 0 ? 0 : n - 1;
}

PositiveWord::Exponent PositiveWord::height() const {
    return exponents_.empty() ? 0 : *std::max_element(exponents_.begin(), exponents_.end());
}

std::uint64_t PositiveWord::letter_count() const {
    std::uint64_t total = 0;
    for (Exponent a : exponents_) total += a;
    return total;
}

bool PositiveWord::is_identity() const { return length() == 0; }

std::string PositiveWord::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
        if (i != 0) s.push_back(',');
        s += std::to_string(exponents_[i]);
    }
    return s;
}

std::ostream& operator<<(std::ostream& os, const PositiveWord& w) { return os << w.to_string(); }

TreePair word_to_pair(const PositiveWord& w) {
    TreePair acc = TreePair::identity(Arity::ternary);
    const auto& e = w.exponents();
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        const TreePair g = generator(static_cast<int>(i), Arity::ternary);
        for (PositiveWord::Exponent r = 0; r < e[i]; ++r) acc = multiply(acc, g);
    }
    return acc;
}

TreePair positive_pair(const PositiveWord& w) {
    const PlanarTree caret = make_vine(1, Arity::ternary);
    PlanarTree top(Arity::ternary);
    std::size_t vine = 0;  // carets in the bottom vine
    const auto& e = w.exponents();
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        for (PositiveWord::Exponent r = 0; r < e[i]; ++r) {
            // x_i needs the first i/2 + 1 vine carets below the current element.
            const std::size_t needed = i / 2 + 1;
            if (vine < needed) {
                top = graft(top, top.leaf_count(), make_vine(needed - vine, Arity::ternary));
                vine = needed;
            }
            top = graft(top, i + 1, caret);
            ++vine;
        }
    }
    return reduce(TreePair(std::move(top), make_vine(vine, Arity::ternary)));
}

}  // namespace thompson
