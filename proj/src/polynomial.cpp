#include "gaussrig/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <ostream>

namespace gaussrig {

namespace {

void trim(std::vector<BigInt>& coeffs) {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

const BigInt kZero = 0;

std::string big_str(const BigInt& n) { return n.str(); }

}  // namespace

ParseError::ParseError(const std::string& message, std::size_t position, std::string token)
    : std::runtime_error(message + " at position " + std::to_string(position) +
                         (token.empty() ? std::string(" (end of input)")
                                        : " near '" + token + "'")),
      position_(position),
      token_(std::move(token)) {}

NatPoly::NatPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    for (const BigInt& c : coeffs_) {
        if (c < 0)
            throw std::invalid_argument("natural polynomial coefficient is negative: " +
                                        big_str(c));
    }
    trim(coeffs_);
}

NatPoly NatPoly::constant(BigInt n) {
    std::vector<BigInt> c;
    if (n != 0) c.push_back(std::move(n));
    return NatPoly(std::move(c));
}

NatPoly NatPoly::monomial(std::size_t exponent, BigInt coefficient) {
    std::vector<BigInt> c;
    if (coefficient != 0) {
        c.resize(exponent + 1);
        c[exponent] = std::move(coefficient);
    }
    return NatPoly(std::move(c));
}

std::size_t NatPoly::degree() const {
    if (is_zero()) throw std::logic_error("degree of the zero polynomial");
    return coeffs_.size() - 1;
}

const BigInt& NatPoly::coeff(std::size_t k) const noexcept {
    return k < coeffs_.size() ? coeffs_[k] : kZero;
}

BigInt NatPoly::monomial_count() const {
    BigInt total = 0;
    for (const BigInt& c : coeffs_) total += c;
    return total;
}

bool operator<(const NatPoly& a, const NatPoly& b) {
    if (a.coeffs_.size() != b.coeffs_.size()) return a.coeffs_.size() < b.coeffs_.size();
    for (std::size_t k = a.coeffs_.size(); k-- > 0;) {
        if (a.coeffs_[k] != b.coeffs_[k]) return a.coeffs_[k] < b.coeffs_[k];
    }
    return false;
}

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(coeffs_); }

IntPoly::IntPoly(const NatPoly& p) : coeffs_(p.coeffs()) {}

std::size_t IntPoly::degree() const {
    if (is_zero()) throw std::logic_error("degree of the zero polynomial");
    return coeffs_.size() - 1;
}

const BigInt& IntPoly::coeff(std::size_t k) const noexcept {
    return k < coeffs_.size() ? coeffs_[k] : kZero;
}

std::string GaussInt::str() const {
    if (re == 0 && im == 0) return "0";
    std::string s;
    if (re != 0) s = re.str();
    if (im != 0) {
        if (im > 0 && !s.empty()) s += "+";
        if (im == 1)
            s += "i";
        else if (im == -1)
            s += "-i";
        else
            s += im.str() + "i";
    }
    return s;
}

GaussInt operator+(const GaussInt& a, const GaussInt& b) { return {a.re + b.re, a.im + b.im}; }
GaussInt operator-(const GaussInt& a, const GaussInt& b) { return {a.re - b.re, a.im - b.im}; }
GaussInt operator*(const GaussInt& a, const GaussInt& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
GaussInt operator-(const GaussInt& a) { return {-a.re, -a.im}; }

namespace {

std::vector<BigInt> add_vectors(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
    std::vector<BigInt> out(std::max(a.size(), b.size()));
    for (std::size_t k = 0; k < out.size(); ++k) {
        if (k < a.size()) out[k] += a[k];
        if (k < b.size()) out[k] += b[k];
    }
    return out;
}

std::vector<BigInt> mul_vectors(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<BigInt> out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

}  // namespace

NatPoly operator+(const NatPoly& a, const NatPoly& b) {
    return NatPoly(add_vectors(a.coeffs(), b.coeffs()));
}

NatPoly operator*(const NatPoly& a, const NatPoly& b) {
    return NatPoly(mul_vectors(a.coeffs(), b.coeffs()));
}

NatPoly pow(const NatPoly& base, std::size_t exponent) {
    NatPoly result = NatPoly::constant(1);
    for (std::size_t k = 0; k < exponent; ++k) result = result * base;
    return result;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    return IntPoly(add_vectors(a.coeffs(), b.coeffs()));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<BigInt> out(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.coeff(k) - b.coeff(k);
    return IntPoly(std::move(out));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    return IntPoly(mul_vectors(a.coeffs(), b.coeffs()));
}

IntPoly operator-(const IntPoly& a) {
    std::vector<BigInt> out = a.coeffs();
    for (BigInt& c : out) c = -c;
    return IntPoly(std::move(out));
}

IntPoly sub(const NatPoly& p, const NatPoly& q) { return IntPoly(p) - IntPoly(q); }

namespace {

template <typename Poly>
GaussInt eval_at_i_impl(const Poly& p) {
    GaussInt g{0, 0};
    const auto& c = p.coeffs();
    for (std::size_t k = 0; k < c.size(); ++k) {
        switch (k % 4) {
            case 0: g.re += c[k]; break;
            case 1: g.im += c[k]; break;
            case 2: g.re -= c[k]; break;
            case 3: g.im -= c[k]; break;
        }
    }
    return g;
}

}  // namespace

GaussInt eval_at_i(const NatPoly& p) { return eval_at_i_impl(p); }
GaussInt eval_at_i(const IntPoly& p) { return eval_at_i_impl(p); }

BigInt eval_at_two(const NatPoly& p) {
    BigInt acc = 0;
    const auto& c = p.coeffs();
    for (std::size_t k = c.size(); k-- > 0;) acc = acc * 2 + c[k];
    return acc;
}

DivisionResult divide_by_one_plus_x_squared(const IntPoly& p) {
    std::vector<BigInt> rem = p.coeffs();
    std::vector<BigInt> quo(rem.size() > 2 ? rem.size() - 2 : 0);
    for (std::size_t e = rem.size(); e-- > 2;) {
        if (rem[e] == 0) continue;
        quo[e - 2] += rem[e];
        rem[e - 2] -= rem[e];
        rem[e] = 0;
    }
    rem.resize(std::min<std::size_t>(rem.size(), 2));
    return {IntPoly(std::move(quo)), IntPoly(std::move(rem))};
}

std::pair<NatPoly, NatPoly> pos_neg_split(const IntPoly& p) {
    std::vector<BigInt> pos(p.coeffs().size()), neg(p.coeffs().size());
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
        const BigInt& c = p.coeffs()[k];
        if (c > 0)
            pos[k] = c;
        else if (c < 0)
            neg[k] = -c;
    }
    return {NatPoly(std::move(pos)), NatPoly(std::move(neg))};
}

std::size_t checked_index(const BigInt& n) {
    if (n < 0 || n > std::numeric_limits<std::size_t>::max())
        throw std::overflow_error("value does not fit an index: " + n.str());
    return static_cast<std::size_t>(n);
}

namespace {

// Largest accepted exponent; keeps a typo like x^999999999999 from
// exhausting memory while still allowing the large stress inputs.
constexpr std::size_t kMaxExponent = 1000000;

struct Scanner {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() const { return text[pos]; }

    [[noreturn]] void fail(const std::string& message) {
        std::string token;
        if (pos < text.size()) token = std::string(1, text[pos]);
        throw ParseError(message, pos, std::move(token));
    }

    BigInt nat() {
        skip_ws();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            fail("expected a natural number");
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        return BigInt(std::string(text.substr(start, pos - start)));
    }

    std::size_t exponent() {
        std::size_t at = pos;
        BigInt e = nat();
        if (e > kMaxExponent) {
            throw ParseError("exponent too large", at, big_str(e));
        }
        return static_cast<std::size_t>(e);
    }
};

}  // namespace

NatPoly parse_nat_poly(std::string_view text) {
    Scanner s{text};
    std::vector<BigInt> coeffs;
    auto add_term = [&coeffs](std::size_t exp, const BigInt& c) {
        if (coeffs.size() <= exp) coeffs.resize(exp + 1);
        coeffs[exp] += c;
    };

    if (s.eof()) s.fail("empty polynomial");
    for (;;) {
        s.skip_ws();
        if (s.pos >= s.text.size()) s.fail("expected a term");
        BigInt coefficient = 1;
        bool saw_number = false;
        if (std::isdigit(static_cast<unsigned char>(s.peek()))) {
            coefficient = s.nat();
            saw_number = true;
        }
        s.skip_ws();
        std::size_t exp = 0;
        if (s.pos < s.text.size() && s.peek() == 'x') {
            ++s.pos;
            exp = 1;
            s.skip_ws();
            if (s.pos < s.text.size() && s.peek() == '^') {
                ++s.pos;
                exp = s.exponent();
            }
        } else if (!saw_number) {
            s.fail("expected a term");
        }
        add_term(exp, coefficient);
        if (s.eof()) break;
        if (s.peek() != '+') s.fail("expected '+'");
        ++s.pos;
    }
    return NatPoly(std::move(coeffs));
}

namespace {

std::string format_term(std::size_t exp, const BigInt& c) {
    std::string out;
    if (exp == 0) return c.str();
    if (c != 1) out += c.str();
    out += "x";
    if (exp != 1) out += "^" + std::to_string(exp);
    return out;
}

}  // namespace

std::string to_string(const NatPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
        const BigInt& c = p.coeffs()[k];
        if (c == 0) continue;
        if (!out.empty()) out += " + ";
        out += format_term(k, c);
    }
    return out;
}

std::string to_string(const IntPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
        const BigInt& c = p.coeffs()[k];
        if (c == 0) continue;
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        out += format_term(k, mag);
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const NatPoly& p) { return os << to_string(p); }
std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << to_string(p); }
std::ostream& operator<<(std::ostream& os, const GaussInt& g) { return os << g.str(); }

}  // namespace gaussrig
