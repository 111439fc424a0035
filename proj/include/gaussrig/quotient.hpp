#pragma once

#include "gaussrig/polynomial.hpp"

#include <string>
#include <variant>

namespace gaussrig {

/// Element of the quotient rig N[x]/(x ~ 1+x+x^2), in its canonical
/// decomposition: constants keep their natural-number identity, every
/// non-constant class is determined by its value at the imaginary unit.
class RigElement {
public:
    static RigElement nat(BigInt n);
    static RigElement gauss(GaussInt g);

    bool is_nat() const noexcept { return std::holds_alternative<BigInt>(v_); }
    bool is_gauss() const noexcept { return !is_nat(); }

    const BigInt& nat_value() const;     // pre: is_nat()
    const GaussInt& gauss_value() const; // pre: is_gauss()

    /// "nat:<n>" or "gauss:<m>+<n>i" with the sign folded in ("gauss:2-3i").
    std::string str() const;

    friend bool operator==(const RigElement&, const RigElement&) = default;

private:
    std::variant<BigInt, GaussInt> v_;
};

/// Canonical semantic value of a polynomial: Nat for constants, Gauss
/// (evaluation at i) for everything else.
RigElement canon(const NatPoly& p);

/// Decides the word problem: p and q denote the same rig element?
bool decide_equal(const NatPoly& p, const NatPoly& q);

/// Canonical representative polynomial of the non-constant class with the
/// given value at i. Satisfies canon(embed_gauss(g)) == gauss(g).
NatPoly embed_gauss(const GaussInt& g);

RigElement rig_add(const RigElement& a, const RigElement& b);
RigElement rig_mul(const RigElement& a, const RigElement& b);

/// Additive inverse, which exists exactly for the non-constant classes;
/// throws std::invalid_argument on a Nat element.
RigElement ring_neg(const RigElement& a);

/// The class of 1 + x^2, the additive unit of the ring part.
RigElement zero_bar();
/// The class of 2 + x^2.
RigElement one_bar();
/// The class of x^2; rig_mul(neg_one(), one_bar()) == neg_one().
RigElement neg_one();

std::ostream& operator<<(std::ostream& os, const RigElement& e);

}  // namespace gaussrig
