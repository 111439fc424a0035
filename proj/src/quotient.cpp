#include "gaussrig/quotient.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

namespace gaussrig {

RigElement RigElement::nat(BigInt n) {
    if (n < 0) throw std::invalid_argument("nat element must be non-negative: " + n.str());
    RigElement e;
    e.v_ = std::move(n);
    return e;
}

RigElement RigElement::gauss(GaussInt g) {
    RigElement e;
    e.v_ = std::move(g);
    return e;
}

const BigInt& RigElement::nat_value() const {
    if (!is_nat()) throw std::logic_error("nat_value() on a gauss element");
    return std::get<BigInt>(v_);
}

const GaussInt& RigElement::gauss_value() const {
    if (!is_gauss()) throw std::logic_error("gauss_value() on a nat element");
    return std::get<GaussInt>(v_);
}

std::string RigElement::str() const {
    if (is_nat()) return "nat:" + nat_value().str();
    const GaussInt& g = gauss_value();
    std::string s = "gauss:" + g.re.str();
    if (g.im >= 0) s += "+";
    return s + g.im.str() + "i";
}

RigElement canon(const NatPoly& p) {
    if (p.is_constant()) return RigElement::nat(p.coeff(0));
    return RigElement::gauss(eval_at_i(p));
}

bool decide_equal(const NatPoly& p, const NatPoly& q) { return canon(p) == canon(q); }

NatPoly embed_gauss(const GaussInt& g) {
    const BigInt& m = g.re;
    const BigInt& n = g.im;
    std::vector<BigInt> c(4);
    if (m >= 0 && n == 0) {
        c[0] = m + 1;
        c[2] = 1;
    } else if (m >= 0 && n > 0) {
        c[0] = m;
        c[1] = n;
    } else if (m >= 0 && n < 0) {
        c[0] = m;
        c[3] = -n;
    } else if (n >= 0) {  // m < 0
        c[2] = -m;
        c[1] = n;
    } else {  // m < 0, n < 0
        c[2] = -m;
        c[3] = -n;
    }
    return NatPoly(std::move(c));
}

RigElement rig_add(const RigElement& a, const RigElement& b) {
    if (a.is_nat() && b.is_nat()) return RigElement::nat(a.nat_value() + b.nat_value());
    if (a.is_nat()) {
        GaussInt g = b.gauss_value();
        g.re += a.nat_value();
        return RigElement::gauss(std::move(g));
    }
    if (b.is_nat()) return rig_add(b, a);
    return RigElement::gauss(a.gauss_value() + b.gauss_value());
}

RigElement rig_mul(const RigElement& a, const RigElement& b) {
    if (a.is_nat() && b.is_nat()) return RigElement::nat(a.nat_value() * b.nat_value());
    if (a.is_nat()) {
        const BigInt& n = a.nat_value();
        if (n == 0) return RigElement::nat(0);
        const GaussInt& g = b.gauss_value();
        return RigElement::gauss({n * g.re, n * g.im});
    }
    if (b.is_nat()) return rig_mul(b, a);
    return RigElement::gauss(a.gauss_value() * b.gauss_value());
}

RigElement ring_neg(const RigElement& a) {
    if (a.is_nat())
        throw std::invalid_argument(
            "no additive inverse: nat elements other than classes of the ring part "
            "cannot be negated");
    return rig_mul(neg_one(), a);
}

RigElement zero_bar() { return RigElement::gauss({0, 0}); }
RigElement one_bar() { return RigElement::gauss({1, 0}); }
RigElement neg_one() { return RigElement::gauss({-1, 0}); }

std::ostream& operator<<(std::ostream& os, const RigElement& e) { return os << e.str(); }

}  // namespace gaussrig
