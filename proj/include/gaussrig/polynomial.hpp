#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gaussrig {

using BigInt = boost::multiprecision::cpp_int;

/// Thrown by the text parsers. `position` is a byte offset into the input,
/// `token` the offending piece of text (empty when the input ended early).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position, std::string token);

    std::size_t position() const noexcept { return position_; }
    const std::string& token() const noexcept { return token_; }

private:
    std::size_t position_;
    std::string token_;
};

/// Polynomial with natural-number coefficients, stored densely: coeff(k) is
/// the coefficient of x^k and doubles as the multiplicity of x^k when the
/// polynomial is read as a multiset of monomials. Canonical invariant: zero
/// is the empty coefficient vector, otherwise the top coefficient is >= 1.
class NatPoly {
public:
    NatPoly() = default;

    /// Takes coefficients in ascending-exponent order; trailing zeros are
    /// trimmed. Throws std::invalid_argument on a negative coefficient.
    explicit NatPoly(std::vector<BigInt> coeffs);

    static NatPoly constant(BigInt n);
    static NatPoly monomial(std::size_t exponent, BigInt coefficient = 1);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }

    /// Degree of a non-zero polynomial; throws std::logic_error on zero.
    std::size_t degree() const;

    /// Coefficient of x^k; zero beyond the degree.
    const BigInt& coeff(std::size_t k) const noexcept;

    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }

    /// Number of monomial copies, i.e. the sum of all coefficients.
    BigInt monomial_count() const;

    friend bool operator==(const NatPoly&, const NatPoly&) = default;

    /// Total order (degree, then lexicographic on coefficients descending
    /// from the top); used for deterministic iteration and map keys.
    friend bool operator<(const NatPoly& a, const NatPoly& b);

private:
    std::vector<BigInt> coeffs_;
};

/// Polynomial with integer coefficients; same dense canonical layout.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs);
    explicit IntPoly(const NatPoly& p);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    std::size_t degree() const;
    const BigInt& coeff(std::size_t k) const noexcept;
    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }

    friend bool operator==(const IntPoly&, const IntPoly&) = default;

private:
    std::vector<BigInt> coeffs_;
};

/// Gaussian integer re + im*i with exact integer parts.
struct GaussInt {
    BigInt re;
    BigInt im;

    friend bool operator==(const GaussInt&, const GaussInt&) = default;

    /// Compact form: "0", "3", "-i", "1-2i", "2+i", "5i".
    std::string str() const;
};

GaussInt operator+(const GaussInt& a, const GaussInt& b);
GaussInt operator-(const GaussInt& a, const GaussInt& b);
GaussInt operator*(const GaussInt& a, const GaussInt& b);
GaussInt operator-(const GaussInt& a);

NatPoly operator+(const NatPoly& a, const NatPoly& b);
NatPoly operator*(const NatPoly& a, const NatPoly& b);
NatPoly pow(const NatPoly& base, std::size_t exponent);

IntPoly operator+(const IntPoly& a, const IntPoly& b);
IntPoly operator-(const IntPoly& a, const IntPoly& b);
IntPoly operator*(const IntPoly& a, const IntPoly& b);
IntPoly operator-(const IntPoly& a);

/// Difference p - q as an integer polynomial.
IntPoly sub(const NatPoly& p, const NatPoly& q);

/// Exact evaluation at the imaginary unit.
GaussInt eval_at_i(const NatPoly& p);
GaussInt eval_at_i(const IntPoly& p);

/// Exact evaluation at 2 (the rewrite-termination measure).
BigInt eval_at_two(const NatPoly& p);

struct DivisionResult {
    IntPoly quotient;
    IntPoly remainder;  // degree <= 1
};

/// Exact long division by 1 + x^2 (monic, so stays in integers).
DivisionResult divide_by_one_plus_x_squared(const IntPoly& p);

/// Splits p as p1 - p2 with p1, p2 natural and of disjoint support.
std::pair<NatPoly, NatPoly> pos_neg_split(const IntPoly& p);

/// Narrowing to a container index; throws std::overflow_error when n is
/// negative or exceeds size_t.
std::size_t checked_index(const BigInt& n);

/// Grammar: poly := term ('+' term)*, term := nat | nat? 'x' ('^' nat)?.
/// Whitespace is insignificant. Throws ParseError with position and token.
NatPoly parse_nat_poly(std::string_view text);

/// Canonical form: ascending exponents, " + " separators, coefficient 1
/// elided ("2 + x^2", "16x", "2x + x^3"); zero prints as "0".
std::string to_string(const NatPoly& p);
std::string to_string(const IntPoly& p);

std::ostream& operator<<(std::ostream& os, const NatPoly& p);
std::ostream& operator<<(std::ostream& os, const IntPoly& p);
std::ostream& operator<<(std::ostream& os, const GaussInt& g);

}  // namespace gaussrig
