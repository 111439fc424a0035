#include "gaussrig/rewrite.hpp"

#include <algorithm>
#include <cassert>
#include <optional>
#include <stdexcept>

namespace gaussrig {

std::string rule_name(RuleId id) {
    switch (id) {
        case RuleId::R1: return "R1";
        case RuleId::R2: return "R2";
        case RuleId::R3_1: return "R3(1)";
        case RuleId::R3_2: return "R3(2)";
        case RuleId::R3_3: return "R3(3)";
    }
    throw std::logic_error("unknown rule id");
}

const std::vector<Rule>& rule_set() {
    static const std::vector<Rule> rules = [] {
        auto nat = [](std::vector<BigInt> c) { return NatPoly(std::move(c)); };
        std::vector<Rule> r;
        r.push_back({RuleId::R1, nat({0, 0, 0, 0, 1}), nat({2, 0, 1})});
        r.push_back({RuleId::R2, nat({0, 1, 0, 1}), nat({1, 0, 1})});
        r.push_back({RuleId::R3_1, nat({1, 1, 1}), nat({0, 1})});
        r.push_back({RuleId::R3_2, nat({1, 0, 2}), nat({0, 0, 1})});
        r.push_back({RuleId::R3_3, nat({1, 0, 1, 1}), nat({0, 0, 0, 1})});
        return r;
    }();
    return rules;
}

namespace {

const Rule& rule_of(RuleId id) {
    for (const Rule& r : rule_set())
        if (r.id == id) return r;
    throw std::logic_error("unknown rule id");
}

NatPoly shift_up(const NatPoly& p, std::size_t m) {
    if (p.is_zero() || m == 0) return p;
    std::vector<BigInt> c(p.coeffs().size() + m);
    std::copy(p.coeffs().begin(), p.coeffs().end(), c.begin() + static_cast<std::ptrdiff_t>(m));
    return NatPoly(std::move(c));
}

}  // namespace

NatPoly RuleInstance::lhs() const { return shift_up(rule_of(rule).lhs, scale); }
NatPoly RuleInstance::rhs() const { return shift_up(rule_of(rule).rhs, scale); }

bool applies(const RuleInstance& inst, const NatPoly& p) {
    const NatPoly& lhs = rule_of(inst.rule).lhs;
    for (std::size_t e = 0; e < lhs.coeffs().size(); ++e) {
        if (lhs.coeff(e) > p.coeff(e + inst.scale)) return false;
    }
    return true;
}

std::vector<RuleInstance> applicable_instances(const NatPoly& p) {
    std::vector<RuleInstance> out;
    if (p.is_constant()) return out;
    const std::size_t deg = p.degree();
    for (const Rule& r : rule_set()) {
        const std::size_t lhs_deg = r.lhs.degree();
        if (lhs_deg > deg) continue;
        for (std::size_t m = 0; m <= deg - lhs_deg; ++m) {
            RuleInstance inst{r.id, m};
            if (applies(inst, p)) out.push_back(inst);
        }
    }
    return out;
}

NatPoly apply(const NatPoly& p, const RuleInstance& inst) {
    if (!applies(inst, p))
        throw std::invalid_argument("rule " + rule_name(inst.rule) + " at scale " +
                                    std::to_string(inst.scale) + " does not apply to " +
                                    to_string(p));
    const Rule& r = rule_of(inst.rule);
    std::vector<BigInt> c = p.coeffs();
    const std::size_t need = inst.scale + std::max(r.lhs.coeffs().size(), r.rhs.coeffs().size());
    if (c.size() < need) c.resize(need);
    for (std::size_t e = 0; e < r.lhs.coeffs().size(); ++e) c[e + inst.scale] -= r.lhs.coeff(e);
    for (std::size_t e = 0; e < r.rhs.coeffs().size(); ++e) c[e + inst.scale] += r.rhs.coeff(e);
    NatPoly result{std::move(c)};
    assert(measure(result) < measure(p));
    return result;
}

BigInt measure(const NatPoly& p) { return eval_at_two(p); }

NatPoly normalize(const NatPoly& p) {
    std::vector<BigInt> c = p.coeffs();
    // R1 phase, highest scale first. Eliminating the top exponent only feeds
    // exponents below it, so one descending sweep applies every R1 batch the
    // strategy would.
    for (std::size_t e = c.size(); e-- > 4;) {
        if (c[e] == 0) continue;
        BigInt k = std::move(c[e]);
        c[e] = 0;
        c[e - 2] += k;
        c[e - 4] += 2 * k;
    }
    c.resize(4);
    BigInt& a = c[0];
    BigInt& b = c[1];
    BigInt& q = c[2];
    BigInt& d = c[3];
    // R2 phase: scale 0 is the only instance at degree <= 3, and the R3
    // steps below never touch b or d, so one batch settles it for good.
    {
        BigInt k = std::min(b, d);
        if (k > 0) {
            b -= k;
            d -= k;
            a += k;
            q += k;
        }
    }
    // R3 phase: with min(b, d) == 0 the scaled R3 instances are impossible,
    // leaving the three scale-0 variants. Each batch runs its instance to
    // exhaustion; the loop exits after at most three rounds because every
    // branch leaves its own guard false for the rest of the reduction.
    for (;;) {
        if (a >= 1 && b >= 1 && q >= 1) {  // R3(1): 1 + x + x^2 -> x
            BigInt k = std::min(a, q);
            a -= k;
            q -= k;
            continue;
        }
        if (a >= 1 && q >= 2) {  // R3(2): 1 + 2x^2 -> x^2
            BigInt k = std::min(a, BigInt(q - 1));
            a -= k;
            q -= k;
            continue;
        }
        if (a >= 1 && q >= 1 && d >= 1) {  // R3(3): 1 + x^2 + x^3 -> x^3
            a -= 1;
            q -= 1;
            continue;
        }
        break;
    }
    return NatPoly(std::move(c));
}

namespace {

std::optional<RuleInstance> first_instance(const NatPoly& p) {
    if (p.is_constant()) return std::nullopt;
    const std::size_t deg = p.degree();
    for (const Rule& r : rule_set()) {
        const std::size_t lhs_deg = r.lhs.degree();
        if (lhs_deg > deg) continue;
        for (std::size_t m = deg - lhs_deg + 1; m-- > 0;) {
            RuleInstance inst{r.id, m};
            if (applies(inst, p)) return inst;
        }
    }
    return std::nullopt;
}

}  // namespace

NatPoly normalize_traced(
    const NatPoly& p,
    const std::function<void(const NatPoly&, const RuleInstance&, const NatPoly&)>& sink) {
    NatPoly cur = p;
    while (auto inst = first_instance(cur)) {
        NatPoly next = apply(cur, *inst);
        if (sink) sink(cur, *inst, next);
        cur = std::move(next);
    }
    return cur;
}

std::string trace_line(const NatPoly& before, const RuleInstance& inst, const NatPoly& after) {
    return to_string(before) + "  --[" + rule_name(inst.rule) + ",m=" +
           std::to_string(inst.scale) + "]-->  " + to_string(after);
}

NormalFormClass classify(const NatPoly& p) {
    if (first_instance(p))
        throw std::invalid_argument("not a normal form: " + to_string(p));
    const BigInt& a = p.coeff(0);
    const BigInt& b = p.coeff(1);
    const BigInt& q = p.coeff(2);
    const BigInt& d = p.coeff(3);
    using Tag = NormalFormClass::Tag;
    if (d > 0) {
        assert(b == 0);
        if (q > 0) {
            assert(a == 0);
            return {Tag::QuadCubic, q, d};
        }
        return {Tag::Cubic, a, d};
    }
    if (q > 0) {
        if (b > 0) {
            assert(a == 0);
            return {Tag::QuadLinear, q, b};
        }
        if (a > 0) {
            assert(q == 1);
            return {Tag::OnePlusXSquared, a - 1, 0};
        }
        return {Tag::QuadLinear, q, 0};
    }
    if (b > 0) return {Tag::Linear, a, b};
    return {Tag::Constant, a, 0};
}

NatPoly reduce_cubic_closed_form(const BigInt& a, const BigInt& b, const BigInt& c,
                                 const BigInt& d) {
    if (a < 0 || b < 0 || c < 0 || d < 0)
        throw std::invalid_argument("closed form needs natural coefficients");
    BigInt k = std::min(b, d);
    return NatPoly({a + k, b - k, c + k, d - k});
}

std::vector<CriticalPair> critical_pairs(std::size_t max_degree) {
    std::vector<RuleInstance> instances;
    for (const Rule& r : rule_set()) {
        const std::size_t lhs_deg = r.lhs.degree();
        if (lhs_deg > max_degree) continue;
        for (std::size_t m = 0; m + lhs_deg <= max_degree; ++m) instances.push_back({r.id, m});
    }
    std::vector<CriticalPair> out;
    for (std::size_t i = 0; i < instances.size(); ++i) {
        const NatPoly lhs_i = instances[i].lhs();
        for (std::size_t j = i + 1; j < instances.size(); ++j) {
            const NatPoly lhs_j = instances[j].lhs();
            bool overlap = false;
            std::vector<BigInt> peak(std::max(lhs_i.coeffs().size(), lhs_j.coeffs().size()));
            for (std::size_t e = 0; e < peak.size(); ++e) {
                const BigInt& ci = lhs_i.coeff(e);
                const BigInt& cj = lhs_j.coeff(e);
                peak[e] = std::max(ci, cj);
                if (ci > 0 && cj > 0) overlap = true;
            }
            if (!overlap) continue;
            CriticalPair cp;
            cp.left = instances[i];
            cp.right = instances[j];
            cp.peak = NatPoly(std::move(peak));
            cp.reduct_left = apply(cp.peak, cp.left);
            cp.reduct_right = apply(cp.peak, cp.right);
            cp.nf_left = normalize(cp.reduct_left);
            cp.nf_right = normalize(cp.reduct_right);
            cp.joinable = cp.nf_left == cp.nf_right;
            out.push_back(std::move(cp));
        }
    }
    return out;
}

}  // namespace gaussrig
