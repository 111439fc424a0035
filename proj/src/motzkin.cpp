#include "gaussrig/motzkin.hpp"

#include <algorithm>
#include <cassert>
#include <ostream>
#include <stdexcept>

namespace gaussrig {

struct MotzkinTree::Node {
    Kind kind;
    std::shared_ptr<const Node> a;  // Unary child or Binary left
    std::shared_ptr<const Node> b;  // Binary right
    std::size_t size;
};

namespace {

const std::shared_ptr<const MotzkinTree::Node>& leaf_node() {
    static const auto node = std::make_shared<const MotzkinTree::Node>(
        MotzkinTree::Node{MotzkinTree::Kind::Leaf, nullptr, nullptr, 0});
    return node;
}

}  // namespace

MotzkinTree::MotzkinTree() : node_(leaf_node()) {}
MotzkinTree::MotzkinTree(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

MotzkinTree MotzkinTree::leaf() { return MotzkinTree(); }

MotzkinTree MotzkinTree::unary(MotzkinTree child) {
    auto size = child.size() + 1;
    return MotzkinTree(std::make_shared<const Node>(
        Node{Kind::Unary, std::move(child.node_), nullptr, size}));
}

MotzkinTree MotzkinTree::binary(MotzkinTree left, MotzkinTree right) {
    // Size is the edge count: a binary node contributes two edges, so the
    // counts by size are exactly the Motzkin numbers (X = 1 + X + X^2).
    auto size = left.size() + right.size() + 2;
    return MotzkinTree(std::make_shared<const Node>(
        Node{Kind::Binary, std::move(left.node_), std::move(right.node_), size}));
}

MotzkinTree::Kind MotzkinTree::kind() const noexcept { return node_->kind; }
std::size_t MotzkinTree::size() const noexcept { return node_->size; }

MotzkinTree MotzkinTree::child() const {
    if (kind() != Kind::Unary) throw std::logic_error("child() on a non-unary tree");
    return MotzkinTree(node_->a);
}

MotzkinTree MotzkinTree::left() const {
    if (kind() != Kind::Binary) throw std::logic_error("left() on a non-binary tree");
    return MotzkinTree(node_->a);
}

MotzkinTree MotzkinTree::right() const {
    if (kind() != Kind::Binary) throw std::logic_error("right() on a non-binary tree");
    return MotzkinTree(node_->b);
}

namespace {

bool tree_equal(const MotzkinTree::Node* x, const MotzkinTree::Node* y) {
    if (x == y) return true;
    if (x->kind != y->kind || x->size != y->size) return false;
    switch (x->kind) {
        case MotzkinTree::Kind::Leaf: return true;
        case MotzkinTree::Kind::Unary: return tree_equal(x->a.get(), y->a.get());
        case MotzkinTree::Kind::Binary:
            return tree_equal(x->a.get(), y->a.get()) && tree_equal(x->b.get(), y->b.get());
    }
    return false;
}

// Strict-weak structural order: Leaf < Unary < Binary, then children.
int tree_cmp(const MotzkinTree::Node* x, const MotzkinTree::Node* y) {
    if (x == y) return 0;
    if (x->kind != y->kind) return x->kind < y->kind ? -1 : 1;
    switch (x->kind) {
        case MotzkinTree::Kind::Leaf: return 0;
        case MotzkinTree::Kind::Unary: return tree_cmp(x->a.get(), y->a.get());
        case MotzkinTree::Kind::Binary: {
            int c = tree_cmp(x->a.get(), y->a.get());
            return c != 0 ? c : tree_cmp(x->b.get(), y->b.get());
        }
    }
    return 0;
}

}  // namespace

bool operator==(const MotzkinTree& a, const MotzkinTree& b) {
    return tree_equal(a.node_.get(), b.node_.get());
}

bool operator<(const MotzkinTree& a, const MotzkinTree& b) {
    return tree_cmp(a.node_.get(), b.node_.get()) < 0;
}

namespace {

void tree_str(const MotzkinTree& t, std::string& out) {
    switch (t.kind()) {
        case MotzkinTree::Kind::Leaf: out += 'e'; return;
        case MotzkinTree::Kind::Unary:
            out += "s(";
            tree_str(t.child(), out);
            out += ')';
            return;
        case MotzkinTree::Kind::Binary:
            out += "m(";
            tree_str(t.left(), out);
            out += ',';
            tree_str(t.right(), out);
            out += ')';
            return;
    }
}

struct TreeScanner {
    std::string_view text;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& message) {
        std::string token;
        if (pos < text.size()) token = std::string(1, text[pos]);
        throw ParseError(message, pos, std::move(token));
    }

    void expect(char c) {
        if (pos >= text.size() || text[pos] != c)
            fail(std::string("expected '") + c + "'");
        ++pos;
    }

    MotzkinTree tree() {
        if (pos >= text.size()) fail("expected a tree");
        switch (text[pos]) {
            case 'e': ++pos; return MotzkinTree::leaf();
            case 's': {
                ++pos;
                expect('(');
                MotzkinTree c = tree();
                expect(')');
                return MotzkinTree::unary(std::move(c));
            }
            case 'm': {
                ++pos;
                expect('(');
                MotzkinTree l = tree();
                expect(',');
                MotzkinTree r = tree();
                expect(')');
                return MotzkinTree::binary(std::move(l), std::move(r));
            }
            default: fail("expected 'e', 's' or 'm'");
        }
    }

    std::size_t nat() {
        if (pos >= text.size() || !('0' <= text[pos] && text[pos] <= '9'))
            fail("expected a number");
        std::size_t start = pos;
        while (pos < text.size() && '0' <= text[pos] && text[pos] <= '9') ++pos;
        return checked_index(BigInt(std::string(text.substr(start, pos - start))));
    }
};

}  // namespace

std::string MotzkinTree::str() const {
    std::string out;
    tree_str(*this, out);
    return out;
}

MotzkinTree MotzkinTree::parse(std::string_view text) {
    TreeScanner s{text};
    MotzkinTree t = s.tree();
    if (s.pos != text.size()) s.fail("trailing text after tree");
    return t;
}

std::vector<std::vector<MotzkinTree>> enumerate_by_size(std::size_t max_size) {
    std::vector<std::vector<MotzkinTree>> levels(max_size + 1);
    levels[0] = {MotzkinTree::leaf()};
    for (std::size_t n = 1; n <= max_size; ++n) {
        std::vector<MotzkinTree>& level = levels[n];
        for (const MotzkinTree& t : levels[n - 1]) level.push_back(MotzkinTree::unary(t));
        for (std::size_t k = 0; n >= 2 && k <= n - 2; ++k) {
            for (const MotzkinTree& l : levels[k])
                for (const MotzkinTree& r : levels[n - 2 - k])
                    level.push_back(MotzkinTree::binary(l, r));
        }
        std::sort(level.begin(), level.end());
    }
    return levels;
}

std::vector<MotzkinTree> enumerate(std::size_t max_size) {
    std::vector<MotzkinTree> out;
    for (auto& level : enumerate_by_size(max_size))
        out.insert(out.end(), level.begin(), level.end());
    return out;
}

namespace {

void validate_value(const TypeValue& v) {
    if (v.trees.size() != v.exponent)
        throw std::invalid_argument("value of x^" + std::to_string(v.exponent) + " needs " +
                                    std::to_string(v.exponent) + " trees, got " +
                                    std::to_string(v.trees.size()));
    if (v.type_of.coeff(v.exponent) <= v.copy)
        throw std::invalid_argument("copy " + std::to_string(v.copy) + " of x^" +
                                    std::to_string(v.exponent) + " does not exist in " +
                                    to_string(v.type_of));
}

}  // namespace

TypeValue TypeValue::make(NatPoly type_of, std::size_t exponent, std::size_t copy,
                          std::vector<MotzkinTree> trees) {
    TypeValue v{std::move(type_of), exponent, copy, std::move(trees)};
    validate_value(v);
    return v;
}

std::string TypeValue::str() const {
    std::string out = std::to_string(exponent) + "#" + std::to_string(copy) + ":[";
    for (std::size_t i = 0; i < trees.size(); ++i) {
        if (i) out += ',';
        tree_str(trees[i], out);
    }
    return out + "]";
}

TypeValue TypeValue::parse(std::string_view text, const NatPoly& type_of) {
    TreeScanner s{text};
    std::size_t exponent = s.nat();
    s.expect('#');
    std::size_t copy = s.nat();
    s.expect(':');
    s.expect('[');
    std::vector<MotzkinTree> trees;
    if (s.pos < text.size() && text[s.pos] != ']') {
        trees.push_back(s.tree());
        while (s.pos < text.size() && text[s.pos] == ',') {
            ++s.pos;
            trees.push_back(s.tree());
        }
    }
    s.expect(']');
    if (s.pos != text.size()) s.fail("trailing text after value");
    return make(type_of, exponent, copy, std::move(trees));
}

std::vector<TypeValue> enumerate_values(const NatPoly& type_of, std::size_t max_total) {
    const std::vector<MotzkinTree> flat = enumerate(max_total);  // size-ascending
    std::vector<TypeValue> out;
    std::vector<MotzkinTree> cur;

    auto tuples = [&](auto&& self, std::size_t k, std::size_t budget,
                      auto&& emit) -> void {
        if (k == 0) {
            emit(cur);
            return;
        }
        for (const MotzkinTree& t : flat) {
            if (t.size() > budget) break;
            cur.push_back(t);
            self(self, k - 1, budget - t.size(), emit);
            cur.pop_back();
        }
    };

    for (std::size_t e = 0; e < type_of.coeffs().size(); ++e) {
        const std::size_t copies = checked_index(type_of.coeff(e));
        for (std::size_t c = 0; c < copies; ++c) {
            tuples(tuples, e, max_total, [&](const std::vector<MotzkinTree>& trees) {
                out.push_back(TypeValue{type_of, e, c, trees});
            });
        }
    }
    return out;
}

TypeValue step_value(const Step& s, const NatPoly& source, const TypeValue& v) {
    if (v.type_of != source)
        throw std::invalid_argument("value has type " + to_string(v.type_of) +
                                    ", step expects " + to_string(source));
    validate_value(v);
    NatPoly target = apply_step(source, s);  // validates the step itself
    const std::size_t k = s.pivot;

    TypeValue out = v;
    out.type_of = std::move(target);

    if (s.dir == StepDir::Unfold) {
        if (v.exponent != k + 1) return out;
        if (v.copy != s.copy) {
            if (v.copy > s.copy) out.copy = v.copy - 1;
            return out;
        }
        // The unfolded copy: route by the last tree of the tuple.
        const MotzkinTree last = v.trees.back();
        out.trees.pop_back();
        switch (last.kind()) {
            case MotzkinTree::Kind::Leaf:
                out.exponent = k;
                out.copy = checked_index(source.coeff(k));
                break;
            case MotzkinTree::Kind::Unary:
                out.copy = checked_index(source.coeff(k + 1)) - 1;
                out.trees.push_back(last.child());
                break;
            case MotzkinTree::Kind::Binary:
                out.exponent = k + 2;
                out.copy = checked_index(source.coeff(k + 2));
                out.trees.push_back(last.left());
                out.trees.push_back(last.right());
                break;
        }
        return out;
    }

    // Fold: the last copies of x^k, x^{k+1}, x^{k+2} merge into a new
    // x^{k+1} copy inserted at index s.copy.
    if (v.exponent == k && BigInt(v.copy) == source.coeff(k) - 1) {
        out.exponent = k + 1;
        out.copy = s.copy;
        out.trees.push_back(MotzkinTree::leaf());
    } else if (v.exponent == k + 1 && BigInt(v.copy) == source.coeff(k + 1) - 1) {
        out.copy = s.copy;
        out.trees.back() = MotzkinTree::unary(out.trees.back());
    } else if (v.exponent == k + 2 && BigInt(v.copy) == source.coeff(k + 2) - 1) {
        out.exponent = k + 1;
        out.copy = s.copy;
        MotzkinTree right = std::move(out.trees.back());
        out.trees.pop_back();
        MotzkinTree left = std::move(out.trees.back());
        out.trees.pop_back();
        out.trees.push_back(MotzkinTree::binary(std::move(left), std::move(right)));
    } else if (v.exponent == k + 1 && v.copy >= s.copy) {
        out.copy = v.copy + 1;
    }
    return out;
}

Bijection::Bijection(Derivation d) : derivation_(std::move(d)) {
    chain_.reserve(derivation_.steps.size() + 1);
    chain_.push_back(derivation_.start);
    for (const Step& s : derivation_.steps) chain_.push_back(apply_step(chain_.back(), s));
    if (chain_.back() != derivation_.end)
        throw std::invalid_argument("derivation does not replay to its stated end");
}

TypeValue Bijection::forward(TypeValue v) const {
    for (std::size_t i = 0; i < derivation_.steps.size(); ++i)
        v = step_value(derivation_.steps[i], chain_[i], v);
    return v;
}

TypeValue Bijection::backward(TypeValue v) const {
    for (std::size_t i = derivation_.steps.size(); i-- > 0;)
        v = step_value(inverse_step(derivation_.steps[i]), chain_[i + 1], v);
    return v;
}

Bijection compile(Derivation d) { return Bijection(std::move(d)); }

NatPoly u_type() { return NatPoly({2, 0, 1}); }
TypeValue u_o1() { return TypeValue{u_type(), 0, 0, {}}; }
TypeValue u_o2() { return TypeValue{u_type(), 0, 1, {}}; }
TypeValue u_pair(MotzkinTree first, MotzkinTree second) {
    return TypeValue{u_type(), 2, 0, {std::move(first), std::move(second)}};
}

TypeValue fold1(const std::array<MotzkinTree, 4>& v) {
    using K = MotzkinTree::Kind;
    const MotzkinTree& t1 = v[0];
    const MotzkinTree& t2 = v[1];
    const MotzkinTree& t3 = v[2];
    const MotzkinTree& t4 = v[3];
    const MotzkinTree e = MotzkinTree::leaf();
    auto s = [](MotzkinTree t) { return MotzkinTree::unary(std::move(t)); };
    auto m = [](MotzkinTree a, MotzkinTree b) {
        return MotzkinTree::binary(std::move(a), std::move(b));
    };

    if (t1.kind() == K::Unary) return u_pair(m(m(t1.child(), t2), t3), t4);
    if (t1.kind() == K::Binary) return u_pair(m(s(m(t1, t2)), t3), t4);
    if (t2.kind() == K::Unary) return u_pair(m(s(m(e, t2.child())), t3), t4);
    if (t2.kind() == K::Binary) return u_pair(m(s(m(s(t2.left()), t2.right())), t3), t4);
    if (t3.kind() == K::Unary) return u_pair(m(s(e), t3.child()), t4);
    if (t3.kind() == K::Binary) return u_pair(m(s(s(t3.left())), t3.right()), t4);
    switch (t4.kind()) {
        case K::Leaf: return u_o1();
        case K::Unary: {
            const MotzkinTree& w = t4.child();
            switch (w.kind()) {
                case K::Leaf: return u_o2();
                case K::Unary: return u_pair(e, w.child());
                case K::Binary: return u_pair(s(w.left()), w.right());
            }
            break;
        }
        case K::Binary: return u_pair(m(e, t4.left()), t4.right());
    }
    throw std::logic_error("unreachable fold1 case");
}

std::array<MotzkinTree, 4> fold1_inv(const TypeValue& u) {
    using K = MotzkinTree::Kind;
    if (u.type_of != u_type())
        throw std::invalid_argument("fold1_inv expects a value of " + to_string(u_type()));
    validate_value(u);
    const MotzkinTree e = MotzkinTree::leaf();
    auto s = [](MotzkinTree t) { return MotzkinTree::unary(std::move(t)); };
    auto m = [](MotzkinTree a, MotzkinTree b) {
        return MotzkinTree::binary(std::move(a), std::move(b));
    };

    if (u.exponent == 0) {
        if (u.copy == 0) return {e, e, e, e};
        return {e, e, e, s(e)};
    }
    const MotzkinTree& u1 = u.trees[0];
    const MotzkinTree& w = u.trees[1];
    if (u1.kind() == K::Leaf) return {e, e, e, s(s(w))};
    if (u1.kind() == K::Unary) return {e, e, e, s(m(u1.child(), w))};
    const MotzkinTree& a = u1.left();
    const MotzkinTree& b = u1.right();
    if (a.kind() == K::Leaf) return {e, e, e, m(b, w)};
    if (a.kind() == K::Binary) return {s(a.left()), a.right(), b, w};
    const MotzkinTree& c = a.child();
    if (c.kind() == K::Leaf) return {e, e, s(b), w};
    if (c.kind() == K::Unary) return {e, e, m(c.child(), b), w};
    const MotzkinTree& d1 = c.left();
    const MotzkinTree& d2 = c.right();
    if (d1.kind() == K::Leaf) return {e, s(d2), b, w};
    if (d1.kind() == K::Unary) return {e, m(d1.child(), d2), b, w};
    return {d1, d2, b, w};
}

MotzkinTree fold2(const MotzkinTree& t, const TypeValue& u) {
    using K = MotzkinTree::Kind;
    if (u.type_of != u_type())
        throw std::invalid_argument("fold2 expects a value of " + to_string(u_type()));
    validate_value(u);
    if (u.exponent == 0 && u.copy == 0) return MotzkinTree::unary(t);
    if (u.exponent == 0) {
        switch (t.kind()) {
            case K::Leaf: return t;
            case K::Unary: return MotzkinTree::binary(MotzkinTree::leaf(), t.child());
            case K::Binary:
                return MotzkinTree::binary(MotzkinTree::unary(t.left()), t.right());
        }
    }
    return MotzkinTree::binary(MotzkinTree::binary(t, u.trees[0]), u.trees[1]);
}

std::pair<MotzkinTree, TypeValue> fold2_inv(const MotzkinTree& t) {
    using K = MotzkinTree::Kind;
    switch (t.kind()) {
        case K::Leaf: return {t, u_o2()};
        case K::Unary: return {t.child(), u_o1()};
        case K::Binary: break;
    }
    const MotzkinTree& l = t.left();
    const MotzkinTree& r = t.right();
    switch (l.kind()) {
        case K::Leaf: return {MotzkinTree::unary(r), u_o2()};
        case K::Unary: return {MotzkinTree::binary(l.child(), r), u_o2()};
        case K::Binary: return {l.left(), u_pair(l.right(), r)};
    }
    throw std::logic_error("unreachable fold2_inv case");
}

MotzkinTree fold5(const std::array<MotzkinTree, 5>& v) {
    return fold2(v[0], fold1({v[1], v[2], v[3], v[4]}));
}

std::array<MotzkinTree, 5> fold5_inv(const MotzkinTree& t) {
    auto [head, u] = fold2_inv(t);
    auto tail = fold1_inv(u);
    return {std::move(head), std::move(tail[0]), std::move(tail[1]), std::move(tail[2]),
            std::move(tail[3])};
}

std::ostream& operator<<(std::ostream& os, const MotzkinTree& t) { return os << t.str(); }
std::ostream& operator<<(std::ostream& os, const TypeValue& v) { return os << v.str(); }

}  // namespace gaussrig
