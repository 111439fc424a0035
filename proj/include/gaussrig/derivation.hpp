#pragma once

#include "gaussrig/polynomial.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gaussrig {

/// Primitive proof step on the monomial multiset of a polynomial.
///
/// Unfold at pivot k replaces one copy of x^{k+1} by x^k + x^{k+1} + x^{k+2};
/// Fold at pivot k does the opposite. `copy` selects which copy of x^{k+1}
/// is rewritten when it occurs with multiplicity > 1; copies are indexed
/// 0-based in a fixed (exponent, copy) ordering of the multiset.
///
/// Copy-reindexing convention (pinned so that Unfold(k,c) and Fold(k,c) are
/// exact inverses on values, see the motzkin module): Unfold removes copy c
/// of x^{k+1} (higher copies shift down) and appends the three produced
/// copies at the end of their exponents' copy lists; Fold consumes the last
/// copy of each of x^k, x^{k+1}, x^{k+2} and inserts the produced x^{k+1}
/// copy at index c (copies >= c shift up).
enum class StepDir { Unfold, Fold };

struct Step {
    StepDir dir;
    std::size_t pivot;
    std::size_t copy;

    friend bool operator==(const Step&, const Step&) = default;
};

/// A machine-checkable certificate that start and end denote the same
/// element of the quotient rig.
struct Derivation {
    NatPoly start;
    std::vector<Step> steps;
    NatPoly end;

    std::size_t length() const noexcept { return steps.size(); }

    friend bool operator==(const Derivation&, const Derivation&) = default;
};

/// Thrown by derive() when the inputs are not equal in the quotient.
class NotEquivalentError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Applies one step; throws std::invalid_argument (pivot monomial missing,
/// fold triple missing, or copy out of range) when the step is invalid.
NatPoly apply_step(const NatPoly& p, const Step& s);

/// Non-throwing variant; on failure optionally reports why.
std::optional<NatPoly> try_apply_step(const NatPoly& p, const Step& s,
                                      std::string* why = nullptr);

/// The inverse step: same pivot and copy, direction flipped.
Step inverse_step(const Step& s);

/// Same derivation run backwards; always checker-valid when d is.
Derivation reversed(const Derivation& d);

struct CheckResult {
    bool ok;
    std::size_t failed_step;  // index of the first bad step; steps.size() on
                              // endpoint mismatch; unspecified when ok
    std::string reason;
};

/// Replays d from its start: every step must apply and the result must
/// equal d.end exactly.
CheckResult check(const Derivation& d);

/// x^n + x^{n+2}  =>  1 + x^2, in 2n steps (unfold below the current
/// exponent, then fold, walking the pair down to the constants).
Derivation lemma_monomial_absorb(std::size_t n);

/// p + 1 + x^2  =>  p, for non-constant p (throws std::invalid_argument on
/// constants, for which the claim is false). 2n+1 steps where x^{n+1} is
/// the lowest non-constant monomial of p.
Derivation lemma_plus_zero(const NatPoly& p);

/// p * (1 + x^2)  =>  1 + x^2, for p != 0 (throws std::invalid_argument on
/// zero). Absorbs each monomial copy of p, then merges the resulting copies
/// of 1 + x^2 pairwise.
Derivation lemma_times_zero(const NatPoly& p);

/// Constructs a checker-valid derivation p => q whenever the two are equal
/// in the quotient, via exact division of p - q by 1 + x^2; throws
/// NotEquivalentError otherwise. Length is not minimized.
Derivation derive(const NatPoly& p, const NatPoly& q);

/// Bidirectional breadth-first search over single steps (copy indices
/// canonicalized to 0). Returns a shortest derivation of length <=
/// step_budget, or nullopt when none exists within the budget or the inputs
/// are not equal.
std::optional<Derivation> derive_bfs(const NatPoly& p, const NatPoly& q,
                                     std::size_t step_budget);

/// Derivation file format: one JSON object with fields "start", "end"
/// (polynomial strings) and "steps" (array of {dir, pivot, copy}). Emission
/// is byte-stable; parsing tolerates arbitrary whitespace.
std::string to_json(const Derivation& d);
Derivation derivation_from_json(std::string_view text);

}  // namespace gaussrig
