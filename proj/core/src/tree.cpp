#include "thompson/tree.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace thompson {

namespace {

std::size_t count_carets(const std::vector<Token>& t) {
    return static_cast<std::size_t>(std::count(t.begin(), t.end(), Token::caret));
}

// One past the last token of the subtree rooted at `pos`.
std::size_t subtree_end(std::span<const Token> t, std::size_t pos, unsigned arity) {
    std::size_t pending = 1;
    while (pending != 0) {
        if (t[pos] == Token::caret) {
            pending += arity - 1;
        } else {
            --pending;
        }
        ++pos;
    }
    return pos;
}

// Token position of the 1-based leaf `leaf_index`.
std::size_t leaf_position(const std::vector<Token>& t, std::size_t leaf_index) {
    std::size_t seen = 0;
    for (std::size_t pos = 0; pos < t.size(); ++pos) {
        if (t[pos] == Token::leaf && ++seen == leaf_index) return pos;
    }
    throw std::out_of_range("leaf index " + std::to_string(leaf_index) + " out of range");
}

void refine(std::span<const Token> a, std::size_t& i, std::span<const Token> b, std::size_t& j,
            Arity arity, std::vector<Token>& out, std::vector<PlanarTree>& a_scions,
            std::vector<PlanarTree>& b_scions) {
    const unsigned n = children_of(arity);
    const bool a_caret = a[i] == Token::caret;
    const bool b_caret = b[j] == Token::caret;
    if (a_caret && b_caret) {
        out.push_back(Token::caret);
        ++i;
        ++j;
        for (unsigned k = 0; k < n; ++k) refine(a, i, b, j, arity, out, a_scions, b_scions);
        return;
    }
    if (!a_caret && !b_caret) {
        out.push_back(Token::leaf);
        a_scions.emplace_back(arity);
        b_scions.emplace_back(arity);
        ++i;
        ++j;
        return;
    }
    // Exactly one side has a caret here; the other side's leaf receives it.
    auto& deep = a_caret ? a : b;
    auto& deep_pos = a_caret ? i : j;
    auto& shallow_pos = a_caret ? j : i;
    auto& deep_scions = a_caret ? a_scions : b_scions;
    auto& shallow_scions = a_caret ? b_scions : a_scions;

    const std::size_t end = subtree_end(deep, deep_pos, n);
    std::vector<Token> sub(deep.begin() + static_cast<std::ptrdiff_t>(deep_pos),
                           deep.begin() + static_cast<std::ptrdiff_t>(end));
    out.insert(out.end(), sub.begin(), sub.end());
    for (std::size_t p = deep_pos; p < end; ++p) {
        if (deep[p] == Token::leaf) deep_scions.emplace_back(arity);
    }
    shallow_scions.push_back(PlanarTree::from_preorder(arity, std::move(sub)));
    deep_pos = end;
    ++shallow_pos;
}

void embed(std::span<const Token> t, std::size_t& pos, std::vector<Token>& out) {
    if (t[pos++] == Token::leaf) {
        out.push_back(Token::leaf);
        return;
    }
    out.push_back(Token::caret);
    embed(t, pos, out);
    out.push_back(Token::leaf);
    embed(t, pos, out);
}

}  // namespace

PlanarTree::PlanarTree(Arity arity) : arity_(arity), preorder_{Token::leaf}, carets_(0) {}

PlanarTree::PlanarTree(Arity arity, std::vector<Token> preorder, std::size_t carets)
    : arity_(arity), preorder_(std::move(preorder)), carets_(carets) {}

PlanarTree PlanarTree::from_preorder(Arity arity, std::vector<Token> preorder) {
    if (preorder.empty()) throw std::invalid_argument("empty preorder sequence");
    const unsigned n = children_of(arity);
    std::size_t pending = 1;
    for (std::size_t pos = 0; pos < preorder.size(); ++pos) {
        if (pending == 0) throw std::invalid_argument("trailing tokens after a complete tree");
        if (preorder[pos] == Token::caret) {
            pending += n - 1;
        } else {
            --pending;
        }
    }
    if (pending != 0) throw std::invalid_argument("incomplete preorder sequence");
    const std::size_t carets = count_carets(preorder);
    return PlanarTree(arity, std::move(preorder), carets);
}

PlanarTree PlanarTree::join(std::span<const PlanarTree> children) {
    if (children.size() != 2 && children.size() != 3) {
        throw std::invalid_argument("a caret has 2 or 3 children");
    }
    const auto arity = static_cast<Arity>(children.size());
    std::vector<Token> tokens{Token::caret};
    std::size_t carets = 1;
    for (const auto& c : children) {
        if (c.arity() != arity) throw std::invalid_argument("arity mismatch in join");
        tokens.insert(tokens.end(), c.preorder_.begin(), c.preorder_.end());
        carets += c.carets_;
    }
    return PlanarTree(arity, std::move(tokens), carets);
}

PlanarTree PlanarTree::parse(std::string_view text, std::optional<Arity> fallback) {
    std::vector<Token> tokens;
    // Children counted per open caret.
    std::vector<unsigned> open;
    std::optional<Arity> arity;
    bool complete = false;

    auto fail = [&](std::size_t at, const std::string& why) {
        throw std::invalid_argument("tree parse error at offset " + std::to_string(at) + ": " + why);
    };

    for (std::size_t at = 0; at < text.size(); ++at) {
        if (complete) fail(at, "trailing characters");
        const char ch = text[at];
        if (ch == '.' || ch == '(') {
            if (!open.empty()) ++open.back();
            if (ch == '.') {
                tokens.push_back(Token::leaf);
                if (open.empty()) complete = true;
            } else {
                tokens.push_back(Token::caret);
                open.push_back(0);
            }
        } else if (ch == ')') {
            if (open.empty()) fail(at, "unbalanced ')'");
            const unsigned k = open.back();
            if (k != 2 && k != 3) fail(at, "caret with " + std::to_string(k) + " children");
            if (arity && children_of(*arity) != k) fail(at, "mixed caret arities");
            arity = static_cast<Arity>(k);
            open.pop_back();
            if (open.empty()) complete = true;
        } else {
            fail(at, std::string("unexpected character '") + ch + "'");
        }
    }
    if (!complete) fail(text.size(), "incomplete tree");
    if (arity && fallback && *arity != *fallback) {
        throw std::invalid_argument("tree arity does not match the requested arity");
    }
    const Arity resolved = arity.value_or(fallback.value_or(Arity::ternary));
    const std::size_t carets = count_carets(tokens);
    return PlanarTree(resolved, std::move(tokens), carets);
}

std::vector<PlanarTree::Node> PlanarTree::nodes() const {
    std::vector<Node> out(preorder_.size());
    const unsigned n = children_of(arity_);
    // Carets still waiting for children, with the next slot to fill.
    std::vector<std::pair<std::int32_t, std::uint8_t>> stack;
    std::uint32_t leaves = 0;
    for (std::size_t pos = 0; pos < preorder_.size(); ++pos) {
        const auto id = static_cast<std::int32_t>(pos);
        if (!stack.empty()) {
            auto& [parent, slot] = stack.back();
            out[pos].parent = parent;
            out[pos].slot = slot;
            out[static_cast<std::size_t>(parent)].children[slot] = id;
            if (++slot == n) stack.pop_back();
        }
        if (preorder_[pos] == Token::leaf) {
            out[pos].leaf = ++leaves;
        } else {
            stack.emplace_back(id, 0);
        }
    }
    return out;
}

std::string PlanarTree::to_string() const {
    std::string s;
    s.reserve(preorder_.size() + carets_);
    const unsigned n = children_of(arity_);
    std::vector<unsigned> remaining;
    for (Token tok : preorder_) {
        if (tok == Token::caret) {
            s.push_back('(');
            remaining.push_back(n);
            continue;
        }
        s.push_back('.');
        while (!remaining.empty() && --remaining.back() == 0) {
            s.push_back(')');
            remaining.pop_back();
        }
    }
    return s;
}

std::ostream& operator<<(std::ostream& os, const PlanarTree& t) { return os << t.to_string(); }

PlanarTree make_vine(std::size_t carets, Arity arity) {
    std::vector<Token> tokens;
    tokens.reserve(carets * children_of(arity) + 1);
    for (std::size_t c = 0; c < carets; ++c) {
        tokens.push_back(Token::caret);
        tokens.insert(tokens.end(), children_of(arity) - 1, Token::leaf);
    }
    tokens.push_back(Token::leaf);
    return PlanarTree::from_preorder(arity, std::move(tokens));
}

bool is_right_vine(const PlanarTree& t) {
    const auto& p = t.preorder();
    const std::size_t stride = children_of(t.arity());
    const std::size_t c = t.caret_count();
    if (p.size() != c * stride + 1) return false;
    for (std::size_t pos = 0; pos < p.size(); ++pos) {
        const bool caret_slot = pos % stride == 0 && pos != p.size() - 1;
        if ((p[pos] == Token::caret) != caret_slot) return false;
    }
    return true;
}

PlanarTree graft(const PlanarTree& host, std::size_t leaf_index, const PlanarTree& scion) {
    if (host.arity() != scion.arity()) throw std::invalid_argument("graft: arity mismatch");
    if (leaf_index < 1 || leaf_index > host.leaf_count()) {
        throw std::out_of_range("graft: leaf index " + std::to_string(leaf_index) +
                                " outside 1.." + std::to_string(host.leaf_count()));
    }
    const auto& h = host.preorder();
    const std::size_t at = leaf_position(h, leaf_index);
    std::vector<Token> tokens;
    tokens.reserve(h.size() + scion.preorder().size() - 1);
    tokens.insert(tokens.end(), h.begin(), h.begin() + static_cast<std::ptrdiff_t>(at));
    tokens.insert(tokens.end(), scion.preorder().begin(), scion.preorder().end());
    tokens.insert(tokens.end(), h.begin() + static_cast<std::ptrdiff_t>(at) + 1, h.end());
    return PlanarTree::from_preorder(host.arity(), std::move(tokens));
}

PlanarTree substitute_leaves(const PlanarTree& host, std::span<const PlanarTree> scions) {
    if (scions.size() != host.leaf_count()) {
        throw std::invalid_argument("substitute_leaves: need one scion per leaf");
    }
    std::vector<Token> tokens;
    std::size_t next = 0;
    for (Token tok : host.preorder()) {
        if (tok == Token::caret) {
            tokens.push_back(tok);
            continue;
        }
        const auto& s = scions[next++];
        if (s.arity() != host.arity()) throw std::invalid_argument("substitute_leaves: arity mismatch");
        tokens.insert(tokens.end(), s.preorder().begin(), s.preorder().end());
    }
    return PlanarTree::from_preorder(host.arity(), std::move(tokens));
}

Refinement common_refinement(const PlanarTree& first, const PlanarTree& second) {
    if (first.arity() != second.arity()) throw std::invalid_argument("refinement: arity mismatch");
    std::vector<Token> out;
    std::vector<PlanarTree> a_scions;
    std::vector<PlanarTree> b_scions;
    std::size_t i = 0;
    std::size_t j = 0;
    refine(first.preorder(), i, second.preorder(), j, first.arity(), out, a_scions, b_scions);
    return Refinement{PlanarTree::from_preorder(first.arity(), std::move(out)), std::move(a_scions),
                      std::move(b_scions)};
}

PlanarTree iota(const PlanarTree& binary) {
    if (binary.arity() != Arity::binary) throw std::invalid_argument("iota: input must be binary");
    std::vector<Token> out;
    out.reserve(binary.preorder().size() + binary.caret_count());
    std::size_t pos = 0;
    embed(binary.preorder(), pos, out);
    return PlanarTree::from_preorder(Arity::ternary, std::move(out));
}

}  // namespace thompson
