#pragma once

#include "gaussrig/derivation.hpp"
#include "gaussrig/polynomial.hpp"

#include <array>
#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gaussrig {

/// Unlabelled unary/binary tree (Motzkin tree). Immutable; subtrees are
/// shared, so copies are cheap.
class MotzkinTree {
public:
    enum class Kind { Leaf, Unary, Binary };
    struct Node;  // defined in the implementation; opaque to callers

    /// A leaf; size 0.
    MotzkinTree();

    static MotzkinTree leaf();
    static MotzkinTree unary(MotzkinTree child);
    static MotzkinTree binary(MotzkinTree left, MotzkinTree right);

    Kind kind() const noexcept;
    /// Edge count: 0 for a leaf, 1 + |child| for unary, 2 + |left| + |right|
    /// for binary. Counts by size are the Motzkin numbers.
    std::size_t size() const noexcept;

    MotzkinTree child() const;  // pre: Unary
    MotzkinTree left() const;   // pre: Binary
    MotzkinTree right() const;  // pre: Binary

    /// Text form matching the constructors: e, s(<tree>), m(<tree>,<tree>).
    std::string str() const;
    static MotzkinTree parse(std::string_view text);

    friend bool operator==(const MotzkinTree& a, const MotzkinTree& b);
    /// Structural order: Leaf < Unary < Binary, then children
    /// lexicographically.
    friend bool operator<(const MotzkinTree& a, const MotzkinTree& b);

private:
    explicit MotzkinTree(std::shared_ptr<const Node> node);
    std::shared_ptr<const Node> node_;
};

/// Trees grouped by size: result[n] holds every tree of size n exactly
/// once, sorted in the structural order.
std::vector<std::vector<MotzkinTree>> enumerate_by_size(std::size_t max_size);

/// Every tree of size <= max_size exactly once, by size then structural
/// order.
std::vector<MotzkinTree> enumerate(std::size_t max_size);

/// A value of the type denoted by a polynomial: the polynomial sum picks a
/// summand (exponent and copy index below its multiplicity), and a value of
/// x^k is a k-tuple of trees.
struct TypeValue {
    NatPoly type_of;
    std::size_t exponent = 0;
    std::size_t copy = 0;
    std::vector<MotzkinTree> trees;

    /// Validates the invariants (copy < multiplicity, one tree per degree).
    static TypeValue make(NatPoly type_of, std::size_t exponent, std::size_t copy,
                          std::vector<MotzkinTree> trees);

    /// "<exponent>#<copy>:[<tree>,...]"
    std::string str() const;
    /// Parses the text form and validates it against `type_of`.
    static TypeValue parse(std::string_view text, const NatPoly& type_of);

    friend bool operator==(const TypeValue&, const TypeValue&) = default;
};

/// Every value of the given type whose trees have total size <= max_total,
/// in deterministic order (exponent, copy, then tuples lexicographically by
/// the enumeration order).
std::vector<TypeValue> enumerate_values(const NatPoly& type_of, std::size_t max_total);

/// Transports a value across one derivation step: source must be v.type_of
/// and s must apply to source. The unfolded summand routes by its last tree
/// (Leaf to the new x^k copy, Unary to the kept x^{k+1} copy, Binary to the
/// new x^{k+2} copy); a fold constructs that tree back. All other values
/// only have their copy index reindexed.
TypeValue step_value(const Step& s, const NatPoly& source, const TypeValue& v);

/// A verified derivation compiled to a pair of mutually inverse total maps
/// between the value spaces of its endpoints.
class Bijection {
public:
    /// Validates the derivation with check(); throws std::invalid_argument
    /// when it does not replay.
    explicit Bijection(Derivation d);

    const NatPoly& source() const noexcept { return chain_.front(); }
    const NatPoly& target() const noexcept { return chain_.back(); }
    const Derivation& derivation() const noexcept { return derivation_; }

    TypeValue forward(TypeValue v) const;
    TypeValue backward(TypeValue v) const;

private:
    Derivation derivation_;
    std::vector<NatPoly> chain_;  // intermediate polynomials, start to end
};

Bijection compile(Derivation d);

/// Values of the two-point-plus-pair type 2 + x^2 (named U in the source
/// datatype it mirrors): two nullary summands o1, o2 and a pair summand.
NatPoly u_type();
TypeValue u_o1();
TypeValue u_o2();
TypeValue u_pair(MotzkinTree first, MotzkinTree second);

/// The hand-written bijection X^4 = U (11 structural cases) and its
/// inverse.
TypeValue fold1(const std::array<MotzkinTree, 4>& v);
std::array<MotzkinTree, 4> fold1_inv(const TypeValue& u);

/// The hand-written bijection X * U = X (5 structural cases) and its
/// inverse.
MotzkinTree fold2(const MotzkinTree& t, const TypeValue& u);
std::pair<MotzkinTree, TypeValue> fold2_inv(const MotzkinTree& t);

/// The composite bijection X^5 = X: fold2 after fold1 on the tail.
MotzkinTree fold5(const std::array<MotzkinTree, 5>& v);
std::array<MotzkinTree, 5> fold5_inv(const MotzkinTree& t);

std::ostream& operator<<(std::ostream& os, const MotzkinTree& t);
std::ostream& operator<<(std::ostream& os, const TypeValue& v);

}  // namespace gaussrig
