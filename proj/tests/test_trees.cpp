#include <doctest.h>

#include <random>
#include <stdexcept>

#include "oracle.hpp"
#include "thompson/enumerate.hpp"
#include "thompson/tree.hpp"
#include "thompson/tree_pair.hpp"
#include "thompson/word.hpp"

using namespace thompson;

namespace {

TreePair x(int i) { return generator(i, Arity::ternary); }
TreePair y(int i) { return generator(i, Arity::binary); }

TreePair word_in(const std::vector<int>& letters, Arity arity) {
    TreePair p = TreePair::identity(arity);
    for (int i : letters) p = multiply(p, generator(i, arity));
    return p;
}

}  // namespace

TEST_SUITE("trees") {

TEST_CASE("parse and print round trip") {
    for (const char* text : {".", "(...)", "(..)", "((...)..)", "(.(..))", "(..((...)..))"}) {
        CHECK(PlanarTree::parse(text).to_string() == text);
    }
    CHECK(PlanarTree::parse(".").arity() == Arity::ternary);
    CHECK(PlanarTree::parse(".", Arity::binary).arity() == Arity::binary);
    CHECK(TreePair::parse("((...)..)|(..(...))").to_string() == "((...)..)|(..(...))");
}

TEST_CASE("parse rejects malformed text") {
    CHECK_THROWS_AS(PlanarTree::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(PlanarTree::parse("(.."), std::invalid_argument);
    CHECK_THROWS_AS(PlanarTree::parse("(....)"), std::invalid_argument);
    CHECK_THROWS_AS(PlanarTree::parse("((..)...)"), std::invalid_argument);
    CHECK_THROWS_AS(PlanarTree::parse("(...)."), std::invalid_argument);
    CHECK_THROWS_AS(PlanarTree::parse("(.x.)"), std::invalid_argument);
    CHECK_THROWS_AS(TreePair::parse("(...)"), std::invalid_argument);
    CHECK_THROWS_AS(TreePair::parse("(...)|."), std::invalid_argument);
    CHECK_THROWS_AS(TreePair::parse("(..)|(...)"), std::invalid_argument);
}

TEST_CASE("from_preorder validates token streams") {
    CHECK_THROWS_AS(PlanarTree::from_preorder(Arity::ternary, {}), std::invalid_argument);
    CHECK_THROWS_AS(PlanarTree::from_preorder(Arity::ternary, {Token::caret, Token::leaf}), std::invalid_argument);
    CHECK_THROWS_AS(PlanarTree::from_preorder(Arity::binary, {Token::leaf, Token::leaf}), std::invalid_argument);
    CHECK(PlanarTree::from_preorder(Arity::binary, {Token::caret, Token::leaf, Token::leaf}).leaf_count() == 2);
}

TEST_CASE("make_vine") {
    const PlanarTree v0 = make_vine(0, Arity::ternary);
    CHECK(v0.is_leaf());
    CHECK(v0.leaf_count() == 1);

    const PlanarTree v2 = make_vine(2, Arity::ternary);
    CHECK(v2.to_string() == "(..(...))");
    CHECK(v2.leaf_count() == 5);

    const PlanarTree b3 = make_vine(3, Arity::binary);
    CHECK(b3.to_string() == "(.(.(..)))");
    CHECK(b3.leaf_count() == 4);

    for (std::size_t c = 0; c < 20; ++c) {
        CHECK(is_right_vine(make_vine(c, Arity::ternary)));
        CHECK(is_right_vine(make_vine(c, Arity::binary)));
    }
    CHECK_FALSE(is_right_vine(PlanarTree::parse("((...)..)")));
}

TEST_CASE("leaf and caret counts follow the arity formulas") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t c = rng() % 15;
        const PlanarTree t = oracle::random_tree(rng, c, Arity::ternary);
        CHECK(t.caret_count() == c);
        CHECK(t.leaf_count() == 2 * c + 1);
        const PlanarTree b = oracle::random_tree(rng, c, Arity::binary);
        CHECK(b.leaf_count() == c + 1);
        CHECK(b.preorder().size() == 2 * c + 1);
    }
}

TEST_CASE("generators have the expected shapes") {
    CHECK(x(0).to_string() == "((...)..)|(..(...))");
    CHECK(x(1).to_string() == "(.(...).)|(..(...))");
    CHECK(x(2).to_string() == "(..((...)..))|(..(..(...)))");
    CHECK(x(0).leaf_count() == 5);
    CHECK(x(1).leaf_count() == 5);
    CHECK(x(2).leaf_count() == 7);
    CHECK(y(0).to_string() == "((..).)|(.(..))");
    CHECK(y(1).to_string() == "(.((..).))|(.(.(..)))");
    for (int i = 0; i < 12; ++i) {
        CHECK(x(i).is_reduced());
        CHECK(y(i).is_reduced());
        CHECK(is_right_vine(x(i).bottom()));
    }
    CHECK_THROWS_AS(generator(-1, Arity::ternary), std::invalid_argument);
}

TEST_CASE("graft") {
    const PlanarTree t = PlanarTree::parse("(.(...).)");
    CHECK(graft(PlanarTree(), 1, t) == t);

    const PlanarTree caret = make_vine(1, Arity::ternary);
    CHECK(graft(caret, 1, caret) == x(0).top());
    CHECK(graft(caret, 3, caret) == make_vine(2, Arity::ternary));
    CHECK(graft(caret, 2, caret).to_string() == "(.(...).)");

    CHECK_THROWS_AS(graft(caret, 0, caret), std::out_of_range);
    CHECK_THROWS_AS(graft(caret, 4, caret), std::out_of_range);
    CHECK_THROWS_AS(graft(caret, 1, make_vine(1, Arity::binary)), std::invalid_argument);
}

TEST_CASE("common refinement contains both trees") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const PlanarTree a = oracle::random_tree(rng, rng() % 7, Arity::ternary);
        const PlanarTree b = oracle::random_tree(rng, rng() % 7, Arity::ternary);
        const Refinement r = common_refinement(a, b);
        CHECK(substitute_leaves(a, r.first_scions) == r.tree);
        CHECK(substitute_leaves(b, r.second_scions) == r.tree);
        CHECK(r.tree.caret_count() <= a.caret_count() + b.caret_count());
    }
}

TEST_CASE("multiply: unit and inverse laws") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        for (Arity arity : {Arity::ternary, Arity::binary}) {
            const TreePair g = oracle::random_pair(rng, 1 + rng() % 6, arity);
            const TreePair e = TreePair::identity(arity);
            CHECK(multiply(g, e) == reduce(g));
            CHECK(multiply(e, g) == reduce(g));
            CHECK(multiply(g, g.inverse()) == e);
            CHECK(multiply(TreePair(g.top(), g.bottom()), TreePair(g.bottom(), g.top())) == e);
        }
    }
    CHECK_THROWS_AS(multiply(x(0), y(0)), std::invalid_argument);
}

TEST_CASE("multiply matches composition of interval maps") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const Arity arity = trial % 2 == 0 ? Arity::ternary : Arity::binary;
        const TreePair p = oracle::random_pair(rng, rng() % 6, arity);
        const TreePair q = oracle::random_pair(rng, rng() % 6, arity);
        const TreePair pq = multiply(p, q);
        CHECK(pq.is_reduced());
        CHECK(oracle::composes(p, q, pq));
        CHECK(oracle::same_map(multiply_unreduced(p, q), pq));
    }
}

TEST_CASE("multiply is associative") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        const Arity arity = trial % 2 == 0 ? Arity::ternary : Arity::binary;
        const TreePair a = oracle::random_pair(rng, rng() % 5, arity);
        const TreePair b = oracle::random_pair(rng, rng() % 5, arity);
        const TreePair c = oracle::random_pair(rng, rng() % 5, arity);
        CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
    }
}

TEST_CASE("presentation relations") {
    for (int n = 1; n <= 6; ++n) {
        for (int l = 0; l < n; ++l) {
            CAPTURE(n);
            CAPTURE(l);
            CHECK(multiply(x(n), x(l)) == multiply(x(l), x(n + 2)));
            CHECK(multiply(y(n), y(l)) == multiply(y(l), y(n + 1)));
        }
    }
    CHECK(reduce(multiply_unreduced(x(1), x(0))) == reduce(multiply_unreduced(x(0), x(3))));
}

TEST_CASE("reduce") {
    const TreePair caret(make_vine(1, Arity::ternary), make_vine(1, Arity::ternary));
    CHECK(reduce(caret) == TreePair::identity(Arity::ternary));
    CHECK(reduce(x(0)) == x(0));
    CHECK(reduce(expand_leaf(x(0), 5)) == x(0));
    CHECK(expand_leaf(x(0), 5).leaf_count() == 7);
    CHECK_FALSE(expand_leaf(x(0), 5).is_reduced());
    CHECK_THROWS_AS(expand_leaf(x(0), 6), std::out_of_range);

    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        const Arity arity = trial % 2 == 0 ? Arity::ternary : Arity::binary;
        const TreePair p = oracle::random_pair(rng, rng() % 8, arity);
        const TreePair r = reduce(p);
        CHECK(r.is_reduced());
        CHECK(reduce(r) == r);
        CHECK(oracle::same_map(p, r));
        const std::size_t leaf = 1 + rng() % r.leaf_count();
        CHECK(reduce(expand_leaf(r, leaf)) == r);
    }
}

TEST_CASE("iota") {
    CHECK(iota(TreePair::identity(Arity::binary)) == TreePair::identity(Arity::ternary));
    for (int i = 0; i <= 4; ++i) CHECK(iota(y(i)) == x(2 * i));
    CHECK(iota(PlanarTree::parse("(..)", Arity::binary)).to_string() == "(...)");
    CHECK_THROWS_AS(iota(x(0)), std::invalid_argument);
}

TEST_CASE("iota is a monoid morphism on short words in y0, y1") {
    std::vector<std::vector<int>> words{{}};
    for (std::size_t len = 1; len <= 4; ++len) {
        std::vector<std::vector<int>> next;
        for (const auto& w : words) {
            if (w.size() + 1 != len) continue;
            for (int g : {0, 1}) {
                auto v = w;
                v.push_back(g);
                next.push_back(v);
            }
        }
        words.insert(words.end(), next.begin(), next.end());
    }
    CHECK(words.size() == 31);
    for (const auto& w : words) {
        std::vector<int> doubled;
        for (int g : w) doubled.push_back(2 * g);
        CHECK(iota(word_in(w, Arity::binary)) == word_in(doubled, Arity::ternary));
    }
}

TEST_CASE("PositiveWord parsing and measures") {
    CHECK(PositiveWord::parse("").is_identity());
    CHECK(PositiveWord::parse("0,0,1").exponents() == std::vector<PositiveWord::Exponent>{0, 0, 1});
    CHECK(PositiveWord::parse("3,0,2,0,0").canonical() == PositiveWord::parse("3,0,2"));
    const PositiveWord w = PositiveWord::parse("3,0,2,0");
    CHECK(w.length() == 3);
    CHECK(w.width() == 2);
    CHECK(w.height() == 3);
    CHECK(w.letter_count() == 5);
    CHECK(w.to_string() == "3,0,2,0");
    CHECK(PositiveWord::parse("0,0").is_identity());

    CHECK_THROWS_WITH_AS(PositiveWord::parse("1,x,2"), doctest::Contains("'x'"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(PositiveWord::parse("1,,2"), doctest::Contains("''"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(PositiveWord::parse("-1"), doctest::Contains("'-1'"), std::invalid_argument);
    CHECK_THROWS_AS(PositiveWord::parse("99999999999"), std::invalid_argument);
}

TEST_CASE("word_to_pair") {
    CHECK(word_to_pair(PositiveWord{}) == TreePair::identity(Arity::ternary));
    CHECK(word_to_pair(PositiveWord::parse("1")) == x(0));
    CHECK(word_to_pair(PositiveWord::parse("0,0,1")) == x(2));
    CHECK(word_to_pair(PositiveWord::parse("0,0,1")).leaf_count() == 7);
}

TEST_CASE("word_to_pair matches the product of generator maps") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 100; ++trial) {
        const PositiveWord w = oracle::random_word(rng, 4, 3);
        TreePair expected = TreePair::identity(Arity::ternary);
        for (std::size_t i = 0; i < w.exponents().size(); ++i) {
            for (PositiveWord::Exponent k = 0; k < w.exponents()[i]; ++k) {
                const TreePair g = x(static_cast<int>(i));
                const TreePair next = multiply_unreduced(expected, g);
                CHECK(oracle::composes(expected, g, next));
                expected = next;
            }
        }
        CHECK(oracle::same_map(word_to_pair(w), expected));
        CHECK(word_to_pair(w) == reduce(expected));
    }
}

TEST_CASE("positive_pair agrees with the generic product on whole grids") {
    for (std::size_t w = 1; w <= 4; ++w) {
        for (PositiveWord::Exponent h = 0; h <= 3; ++h) {
            if (w == 4 && h == 3) continue;
            for (const auto& word : enumerate_elements(w, h)) {
                const TreePair fast = positive_pair(word);
                CHECK(is_right_vine(fast.bottom()));
                CHECK(fast == word_to_pair(word));
            }
        }
    }
}

}  // TEST_SUITE
