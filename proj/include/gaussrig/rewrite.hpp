#pragma once

#include "gaussrig/polynomial.hpp"

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace gaussrig {

/// The five rewrite rules, oriented to shrink the value at 2:
///   R1:    x^4       -> 2 + x^2
///   R2:    x + x^3   -> 1 + x^2
///   R3(n): x^n + 1 + x^2 -> x^n   for n in {1,2,3}
/// each closed under scaling by x^m and under additive context.
enum class RuleId { R1, R2, R3_1, R3_2, R3_3 };

std::string rule_name(RuleId id);  // "R1", "R2", "R3(1)", ...

struct Rule {
    RuleId id;
    NatPoly lhs;
    NatPoly rhs;
};

/// The rules in strategy order.
const std::vector<Rule>& rule_set();

/// A rule scaled by x^scale. Applies to p when lhs() is a sub-multiset of p.
struct RuleInstance {
    RuleId rule;
    std::size_t scale;

    NatPoly lhs() const;
    NatPoly rhs() const;

    friend bool operator==(const RuleInstance&, const RuleInstance&) = default;
};

/// All instances applicable to p, ordered by rule then ascending scale.
std::vector<RuleInstance> applicable_instances(const NatPoly& p);

bool applies(const RuleInstance& inst, const NatPoly& p);

/// One rewrite step p -> p - lhs + rhs; throws std::invalid_argument when
/// the instance does not apply. Every step strictly shrinks measure().
NatPoly apply(const NatPoly& p, const RuleInstance& inst);

/// The termination measure: evaluation at 2. Constant on no rule's
/// boundary: every rule application strictly decreases it.
BigInt measure(const NatPoly& p);

/// Fully reduces p under the deterministic strategy (R1 at the highest
/// scale first, then R2, then R3(1), R3(2), R3(3), each preferring higher
/// scales). Equal multiplicities of one instance are contracted in a single
/// batch, so the whole reduction runs in time polynomial in the bit-size of
/// p rather than in the number of individual steps.
NatPoly normalize(const NatPoly& p);

/// Single-step variant that reports every individual rewrite to `sink`.
/// Slower: only for traces and cross-checks.
NatPoly normalize_traced(
    const NatPoly& p,
    const std::function<void(const NatPoly& before, const RuleInstance&, const NatPoly& after)>&
        sink);

/// "<before>  --[R2,m=0]-->  <after>"
std::string trace_line(const NatPoly& before, const RuleInstance& inst, const NatPoly& after);

/// The six shapes a normal form can take. Parameters: Constant holds the
/// value in m; OnePlusXSquared is (m+1) + x^2; Linear is m + n*x (n >= 1);
/// Cubic is m + n*x^3 (n >= 1); QuadLinear is m*x^2 + n*x (m >= 1);
/// QuadCubic is m*x^2 + n*x^3 (m, n >= 1).
struct NormalFormClass {
    enum class Tag { Constant, OnePlusXSquared, Linear, Cubic, QuadLinear, QuadCubic };
    Tag tag;
    BigInt m;
    BigInt n;

    friend bool operator==(const NormalFormClass&, const NormalFormClass&) = default;
};

/// Classifies an irreducible polynomial; throws std::invalid_argument if
/// some rule still applies.
NormalFormClass classify(const NatPoly& p);

/// The reduct of a + b*x + c*x^2 + d*x^3 after exhausting R2, in closed
/// form: (a + min(b,d)) + (b-d)x + (c + min(b,d))x^2 + (d-b)x^3 with
/// truncating subtraction. normalize() of the result equals normalize() of
/// the input; only R3 steps can remain.
NatPoly reduce_cubic_closed_form(const BigInt& a, const BigInt& b, const BigInt& c,
                                 const BigInt& d);

/// Overlapping pair of distinct rule instances: the peak is the smallest
/// polynomial containing both left-hand sides (pointwise max of the two
/// lhs multisets).
struct CriticalPair {
    RuleInstance left;
    RuleInstance right;
    NatPoly peak;
    NatPoly reduct_left;   // peak rewritten by `left`
    NatPoly reduct_right;  // peak rewritten by `right`
    NatPoly nf_left;
    NatPoly nf_right;
    bool joinable;  // nf_left == nf_right
};

/// All overlapping pairs whose peak has degree <= max_degree, in
/// deterministic order.
std::vector<CriticalPair> critical_pairs(std::size_t max_degree);

}  // namespace gaussrig
