#include "gaussrig/derivation.hpp"

#include "gaussrig/quotient.hpp"

#include <json.hpp>

#include <algorithm>
#include <cassert>
#include <unordered_map>
#include <utility>

namespace gaussrig {

std::optional<NatPoly> try_apply_step(const NatPoly& p, const Step& s, std::string* why) {
    auto fail = [&](const char* reason) -> std::optional<NatPoly> {
        if (why) *why = reason;
        return std::nullopt;
    };
    const std::size_t k = s.pivot;
    if (s.dir == StepDir::Unfold) {
        if (p.coeff(k + 1) == 0) return fail("pivot monomial missing");
        if (p.coeff(k + 1) <= s.copy) return fail("copy out of range");
        std::vector<BigInt> c = p.coeffs();
        if (c.size() < k + 3) c.resize(k + 3);
        c[k] += 1;
        c[k + 2] += 1;
        return NatPoly(std::move(c));
    }
    if (p.coeff(k) == 0 || p.coeff(k + 1) == 0 || p.coeff(k + 2) == 0)
        return fail("fold triple missing");
    if (p.coeff(k + 1) <= s.copy) return fail("copy out of range");
    std::vector<BigInt> c = p.coeffs();
    c[k] -= 1;
    c[k + 2] -= 1;
    return NatPoly(std::move(c));
}

NatPoly apply_step(const NatPoly& p, const Step& s) {
    std::string why;
    auto r = try_apply_step(p, s, &why);
    if (!r)
        throw std::invalid_argument("invalid " +
                                    std::string(s.dir == StepDir::Unfold ? "unfold" : "fold") +
                                    " at pivot " + std::to_string(s.pivot) + ", copy " +
                                    std::to_string(s.copy) + ": " + why);
    return std::move(*r);
}

Step inverse_step(const Step& s) {
    return {s.dir == StepDir::Unfold ? StepDir::Fold : StepDir::Unfold, s.pivot, s.copy};
}

Derivation reversed(const Derivation& d) {
    std::vector<Step> steps(d.steps.rbegin(), d.steps.rend());
    for (Step& s : steps) s = inverse_step(s);
    return {d.end, std::move(steps), d.start};
}

CheckResult check(const Derivation& d) {
    NatPoly cur = d.start;
    for (std::size_t i = 0; i < d.steps.size(); ++i) {
        std::string why;
        auto next = try_apply_step(cur, d.steps[i], &why);
        if (!next) return {false, i, why};
        cur = std::move(*next);
    }
    if (cur != d.end)
        return {false, d.steps.size(),
                "endpoint mismatch: replay ends at " + to_string(cur) + ", expected " +
                    to_string(d.end)};
    return {true, 0, ""};
}

namespace {

// Builds the derivation by replaying the steps, so endpoints can never
// disagree with the step list.
Derivation replay(NatPoly start, std::vector<Step> steps) {
    NatPoly cur = start;
    for (const Step& s : steps) cur = apply_step(cur, s);
    return {std::move(start), std::move(steps), std::move(cur)};
}

// Steps of x^n + x^{n+2} => 1 + x^2: each round unfolds one exponent below
// the pair and folds at the pair, moving it down one degree.
std::vector<Step> absorb_steps(std::size_t n) {
    std::vector<Step> s;
    s.reserve(2 * n);
    for (std::size_t j = n; j >= 1; --j) {
        s.push_back({StepDir::Unfold, j - 1, 0});
        s.push_back({StepDir::Fold, j, 0});
    }
    return s;
}

std::vector<Step> reversed_steps(std::vector<Step> steps) {
    std::reverse(steps.begin(), steps.end());
    for (Step& s : steps) s = inverse_step(s);
    return steps;
}

void append(std::vector<Step>& into, std::vector<Step> more) {
    into.insert(into.end(), more.begin(), more.end());
}

// Steps of p + 1 + x^2 => p where x^{n+1} is the lowest non-constant
// monomial of p.
std::vector<Step> plus_zero_steps(const NatPoly& p) {
    if (p.is_constant())
        throw std::invalid_argument("adding the ring zero is only cancellable for "
                                    "non-constant polynomials, got " +
                                    to_string(p));
    std::size_t lowest = 1;
    while (p.coeff(lowest) == 0) ++lowest;
    const std::size_t n = lowest - 1;
    std::vector<Step> steps = reversed_steps(absorb_steps(n));
    steps.push_back({StepDir::Fold, n, 0});
    return steps;
}

// Steps of p * (1 + x^2) => 1 + x^2.
std::vector<Step> times_zero_steps(const NatPoly& p) {
    if (p.is_zero())
        throw std::invalid_argument("the zero polynomial does not multiply into the ring zero");
    std::vector<Step> steps;
    for (std::size_t e = 0; e < p.coeffs().size(); ++e) {
        const std::size_t copies = checked_index(p.coeff(e));
        for (std::size_t c = 0; c < copies; ++c) append(steps, absorb_steps(e));
    }
    const std::size_t total = checked_index(p.monomial_count());
    static const NatPoly ring_zero({1, 0, 1});
    for (std::size_t i = 1; i < total; ++i) append(steps, plus_zero_steps(ring_zero));
    return steps;
}

}  // namespace

Derivation lemma_monomial_absorb(std::size_t n) {
    NatPoly start = NatPoly::monomial(n) + NatPoly::monomial(n + 2);
    Derivation d = replay(std::move(start), absorb_steps(n));
    if (d.end != NatPoly({1, 0, 1})) throw std::logic_error("absorb lemma endpoint mismatch");
    return d;
}

Derivation lemma_plus_zero(const NatPoly& p) {
    std::vector<Step> steps = plus_zero_steps(p);
    Derivation d = replay(p + NatPoly({1, 0, 1}), std::move(steps));
    if (d.end != p) throw std::logic_error("plus-zero lemma endpoint mismatch");
    return d;
}

Derivation lemma_times_zero(const NatPoly& p) {
    std::vector<Step> steps = times_zero_steps(p);
    Derivation d = replay(p * NatPoly({1, 0, 1}), std::move(steps));
    if (d.end != NatPoly({1, 0, 1})) throw std::logic_error("times-zero lemma endpoint mismatch");
    return d;
}

Derivation derive(const NatPoly& p, const NatPoly& q) {
    if (p == q) return {p, {}, q};
    if (!decide_equal(p, q))
        throw NotEquivalentError("cannot derive " + to_string(p) + " => " + to_string(q) +
                                 ": the polynomials differ in the quotient (" +
                                 canon(p).str() + " vs " + canon(q).str() + ")");
    // Both are non-constant here: constants form singleton classes.
    auto division = divide_by_one_plus_x_squared(sub(p, q));
    if (!division.remainder.is_zero())
        throw std::logic_error("equal classes must divide exactly by 1 + x^2");
    auto [w1, w2] = pos_neg_split(division.quotient);
    const NatPoly x = NatPoly::monomial(1);
    const NatPoly r = (w1 + w2) * x;

    std::vector<Step> steps;
    // p => p + (1 + x^2)
    append(steps, reversed_steps(plus_zero_steps(p)));
    // ... => p + r + x^2 r
    append(steps, reversed_steps(times_zero_steps(r)));
    // Unfold every monomial copy of w2 x, turning p + w1 x + w2(1+x+x^2)
    // into its rearrangement q + w1(1+x+x^2) + w2 x (a polynomial identity,
    // not a step), then fold every monomial copy of w1 x away.
    for (std::size_t e = 0; e < w2.coeffs().size(); ++e) {
        const std::size_t copies = checked_index(w2.coeff(e));
        for (std::size_t c = 0; c < copies; ++c) steps.push_back({StepDir::Unfold, e, 0});
    }
    for (std::size_t e = 0; e < w1.coeffs().size(); ++e) {
        const std::size_t copies = checked_index(w1.coeff(e));
        for (std::size_t c = 0; c < copies; ++c) steps.push_back({StepDir::Fold, e, 0});
    }
    // q + r + x^2 r => q + (1 + x^2) => q
    append(steps, times_zero_steps(r));
    append(steps, plus_zero_steps(q));

    Derivation d = replay(p, std::move(steps));
    if (d.end != q) throw std::logic_error("derivation endpoint mismatch");
    return d;
}

namespace {

struct SearchNode {
    NatPoly poly;
    std::string parent_key;  // empty for the root
    Step via{};              // step applied to the parent to reach this node
    std::size_t depth = 0;
};

using SearchMap = std::unordered_map<std::string, SearchNode>;

std::vector<std::pair<Step, NatPoly>> neighbors(const NatPoly& p) {
    std::vector<std::pair<Step, NatPoly>> out;
    for (std::size_t e = 1; e <= p.coeffs().size(); ++e) {
        if (p.coeff(e) == 0) continue;
        Step s{StepDir::Unfold, e - 1, 0};
        out.emplace_back(s, apply_step(p, s));
    }
    for (std::size_t k = 0; k + 2 < p.coeffs().size() + 1; ++k) {
        if (p.coeff(k) == 0 || p.coeff(k + 1) == 0 || p.coeff(k + 2) == 0) continue;
        Step s{StepDir::Fold, k, 0};
        out.emplace_back(s, apply_step(p, s));
    }
    return out;
}

// Chain of steps from the root of `side` to `key`, root end first.
std::vector<Step> path_from_root(const SearchMap& side, std::string key) {
    std::vector<Step> out;
    for (;;) {
        const SearchNode& node = side.at(key);
        if (node.parent_key.empty()) break;
        out.push_back(node.via);
        key = node.parent_key;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

}  // namespace

std::optional<Derivation> derive_bfs(const NatPoly& p, const NatPoly& q,
                                     std::size_t step_budget) {
    if (p == q) return Derivation{p, {}, q};
    if (!decide_equal(p, q)) return std::nullopt;

    SearchMap visited_fwd, visited_bwd;
    std::vector<NatPoly> frontier_fwd{p}, frontier_bwd{q};
    std::size_t depth_fwd = 0, depth_bwd = 0;
    visited_fwd.emplace(to_string(p), SearchNode{p, "", {}, 0});
    visited_bwd.emplace(to_string(q), SearchNode{q, "", {}, 0});

    std::optional<std::pair<std::size_t, std::string>> best;  // (length, meet key)

    auto record_meet = [&](const std::string& key, std::size_t total) {
        if (!best || total < best->first) best = {total, key};
    };

    // Levels are expanded in full, so once best <= depth_fwd + depth_bwd + 1
    // no shorter meeting point can still appear.
    while (!frontier_fwd.empty() && !frontier_bwd.empty() &&
           depth_fwd + depth_bwd < step_budget &&
           (!best || depth_fwd + depth_bwd + 1 < best->first)) {
        const bool expand_fwd = frontier_fwd.size() <= frontier_bwd.size();
        SearchMap& mine = expand_fwd ? visited_fwd : visited_bwd;
        const SearchMap& other = expand_fwd ? visited_bwd : visited_fwd;
        std::vector<NatPoly>& frontier = expand_fwd ? frontier_fwd : frontier_bwd;
        const std::size_t new_depth = (expand_fwd ? depth_fwd : depth_bwd) + 1;

        std::vector<NatPoly> next;
        for (const NatPoly& node : frontier) {
            const std::string node_key = to_string(node);
            for (auto& [step, nb] : neighbors(node)) {
                std::string key = to_string(nb);
                auto [it, inserted] =
                    mine.emplace(std::move(key), SearchNode{nb, node_key, step, new_depth});
                if (!inserted) continue;
                next.push_back(nb);
                auto hit = other.find(it->first);
                if (hit != other.end()) record_meet(it->first, new_depth + hit->second.depth);
            }
        }
        frontier = std::move(next);
        (expand_fwd ? depth_fwd : depth_bwd) = new_depth;
    }

    if (!best || best->first > step_budget) return std::nullopt;

    std::vector<Step> steps = path_from_root(visited_fwd, best->second);
    std::vector<Step> back = path_from_root(visited_bwd, best->second);
    std::reverse(back.begin(), back.end());
    for (const Step& s : back) steps.push_back(inverse_step(s));

    Derivation d{p, std::move(steps), q};
    assert(check(d).ok);
    return d;
}

std::string to_json(const Derivation& d) {
    nlohmann::ordered_json j;
    j["start"] = to_string(d.start);
    j["end"] = to_string(d.end);
    nlohmann::ordered_json steps = nlohmann::ordered_json::array();
    for (const Step& s : d.steps) {
        nlohmann::ordered_json step;
        step["dir"] = s.dir == StepDir::Unfold ? "unfold" : "fold";
        step["pivot"] = s.pivot;
        step["copy"] = s.copy;
        steps.push_back(std::move(step));
    }
    j["steps"] = std::move(steps);
    return j.dump(2) + "\n";
}

Derivation derivation_from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("derivation file is not valid JSON: ") + e.what(),
                         e.byte, "");
    }
    auto expect = [&](bool cond, const std::string& what) {
        if (!cond) throw ParseError("derivation file: " + what, 0, "");
    };
    expect(j.is_object(), "top level must be an object");
    expect(j.contains("start") && j["start"].is_string(), "missing string field 'start'");
    expect(j.contains("end") && j["end"].is_string(), "missing string field 'end'");
    expect(j.contains("steps") && j["steps"].is_array(), "missing array field 'steps'");

    Derivation d;
    d.start = parse_nat_poly(j["start"].get<std::string>());
    d.end = parse_nat_poly(j["end"].get<std::string>());
    for (const auto& js : j["steps"]) {
        expect(js.is_object(), "each step must be an object");
        expect(js.contains("dir") && js["dir"].is_string(), "step missing string field 'dir'");
        expect(js.contains("pivot") && js["pivot"].is_number_unsigned(),
               "step missing natural field 'pivot'");
        expect(js.contains("copy") && js["copy"].is_number_unsigned(),
               "step missing natural field 'copy'");
        const std::string dir = js["dir"].get<std::string>();
        if (dir != "unfold" && dir != "fold")
            throw ParseError("derivation file: step dir must be 'unfold' or 'fold'", 0, dir);
        d.steps.push_back({dir == "unfold" ? StepDir::Unfold : StepDir::Fold,
                           js["pivot"].get<std::size_t>(), js["copy"].get<std::size_t>()});
    }
    return d;
}

}  // namespace gaussrig
