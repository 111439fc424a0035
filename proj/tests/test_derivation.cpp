#include "gaussrig/derivation.hpp"

#include "gaussrig/quotient.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <string>
#include <vector>

using namespace gaussrig;
using gaussrig::testing::all_polys;
using gaussrig::testing::make_rng;
using gaussrig::testing::random_nat_poly;
using gaussrig::testing::random_nonzero_nat_poly;

namespace {

NatPoly P(const std::string& text) { return parse_nat_poly(text); }

Step U(std::size_t pivot, std::size_t copy = 0) { return Step{StepDir::Unfold, pivot, copy}; }
Step F(std::size_t pivot, std::size_t copy = 0) { return Step{StepDir::Fold, pivot, copy}; }

// x => x^5 walked up one exponent at a time, twelve steps.
const Derivation& ladder_up_fixture() {
    static const Derivation d{
        P("x"),
        {U(0), U(1), F(0), U(2), F(1), U(3), F(1), U(3), F(2), U(4), F(3), F(4)},
        P("x^5")};
    return d;
}

// 2 + x^2 => x^4, nine steps.
const Derivation& two_to_fourth_fixture() {
    static const Derivation d{
        P("2 + x^2"),
        {U(1), F(0), U(2), F(0), U(2), F(1), U(3), F(2), F(3)},
        P("x^4")};
    return d;
}

}  // namespace

TEST_SUITE("derivation") {

TEST_CASE("apply_step: fixed examples") {
    CHECK(apply_step(P("x"), U(0)) == P("1 + x + x^2"));
    CHECK(apply_step(P("1 + x + x^2"), F(0)) == P("x"));
    CHECK(apply_step(P("1 + 2x + x^2 + x^3"), F(0)) == P("2x + x^3"));
    CHECK(apply_step(P("x^2"), U(1)) == P("x + x^2 + x^3"));
    CHECK(apply_step(P("1 + x + x^2"), F(0)) == P("x"));
    // Context monomials ride along untouched.
    CHECK(apply_step(P("7 + x"), U(0)) == P("8 + x + x^2"));
}

TEST_CASE("apply_step: copy index only selects, never changes the multiset") {
    NatPoly p = P("3x");
    // Unfolding any of the three copies of x yields the same multiset.
    CHECK(apply_step(p, U(0, 0)) == P("1 + 3x + x^2"));
    CHECK(apply_step(p, U(0, 0)) == apply_step(p, U(0, 2)));
    CHECK_THROWS_AS(apply_step(p, U(0, 3)), std::invalid_argument);
}

TEST_CASE("try_apply_step reports why a step fails") {
    std::string why;
    CHECK_FALSE(try_apply_step(P("1"), U(0), &why).has_value());
    CHECK(why.find("pivot monomial missing") != std::string::npos);

    CHECK_FALSE(try_apply_step(P("x"), F(0), &why).has_value());
    CHECK(why.find("fold triple missing") != std::string::npos);

    CHECK_FALSE(try_apply_step(P("x"), U(0, 1), &why).has_value());
    CHECK(why.find("copy out of range") != std::string::npos);

    CHECK_FALSE(try_apply_step(P("1 + x + x^2"), F(0, 1), &why).has_value());
    CHECK(why.find("copy out of range") != std::string::npos);

    auto ok = try_apply_step(P("x"), U(0), &why);
    REQUIRE(ok.has_value());
    CHECK(*ok == P("1 + x + x^2"));
}

TEST_CASE("apply_step throws with a descriptive message") {
    CHECK_THROWS_AS(apply_step(P("1"), U(0)), std::invalid_argument);
    CHECK_THROWS_AS(apply_step(P("x"), F(0)), std::invalid_argument);
    CHECK_THROWS_WITH_AS(apply_step(P("x"), U(5)),
                         doctest::Contains("pivot monomial missing"),
                         std::invalid_argument);
}

TEST_CASE("unfold and fold at the same pivot and copy are mutual inverses") {
    auto rng = make_rng(30);
    for (int trial = 0; trial < 300; ++trial) {
        NatPoly p = random_nat_poly(rng, 6, 3);
        for (std::size_t k = 0; k + 1 <= 6; ++k) {
            BigInt mult = p.coeff(k + 1);
            for (BigInt c = 0; c < mult; ++c) {
                Step u = U(k, checked_index(c));
                NatPoly q = apply_step(p, u);
                CHECK(apply_step(q, inverse_step(u)) == p);
            }
            // And the other way round, when a fold is possible.
            if (p.coeff(k) >= 1 && p.coeff(k + 1) >= 1 && p.coeff(k + 2) >= 1) {
                for (BigInt c = 0; c < p.coeff(k + 1); ++c) {
                    Step f = F(k, checked_index(c));
                    NatPoly q = apply_step(p, f);
                    CHECK(apply_step(q, inverse_step(f)) == p);
                }
            }
        }
    }
}

TEST_CASE("steps preserve the decided class") {
    auto rng = make_rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        NatPoly p = random_nat_poly(rng, 6, 3);
        for (std::size_t k = 0; k <= 5; ++k) {
            if (p.coeff(k + 1) >= 1) CHECK(decide_equal(p, apply_step(p, U(k))));
            if (p.coeff(k) >= 1 && p.coeff(k + 1) >= 1 && p.coeff(k + 2) >= 1)
                CHECK(decide_equal(p, apply_step(p, F(k))));
        }
    }
}

TEST_CASE("check accepts the transcribed ladder derivations") {
    CheckResult r1 = check(ladder_up_fixture());
    CHECK(r1.ok);
    CheckResult r2 = check(two_to_fourth_fixture());
    CHECK(r2.ok);
}

TEST_CASE("check reports the first failing step") {
    Derivation bad{P("x"), {U(0), F(3)}, P("x")};
    CheckResult r = check(bad);
    CHECK_FALSE(r.ok);
    CHECK(r.failed_step == 1);
    CHECK(r.reason.find("fold triple missing") != std::string::npos);
}

TEST_CASE("check reports endpoint mismatches after the last step") {
    Derivation bad{P("x"), {}, P("x^5")};
    CheckResult r = check(bad);
    CHECK_FALSE(r.ok);
    CHECK(r.failed_step == 0);
    CHECK(r.reason.find("endpoint mismatch") != std::string::npos);

    Derivation bad2{P("x"), {U(0)}, P("x")};
    CheckResult r2 = check(bad2);
    CHECK_FALSE(r2.ok);
    CHECK(r2.failed_step == 1);
}

TEST_CASE("reversed swaps endpoints and stays valid") {
    Derivation r = reversed(ladder_up_fixture());
    CHECK(r.start == P("x^5"));
    CHECK(r.end == P("x"));
    CHECK(r.length() == ladder_up_fixture().length());
    CHECK(check(r).ok);
    CHECK(reversed(r) == ladder_up_fixture());

    CHECK(check(reversed(two_to_fourth_fixture())).ok);
}

TEST_CASE("absorb lemma: x^n + x^{n+2} collapses to the embedded zero") {
    for (std::size_t n = 0; n <= 10; ++n) {
        Derivation d = lemma_monomial_absorb(n);
        CHECK(d.start == NatPoly::monomial(n) + NatPoly::monomial(n + 2));
        CHECK(d.end == P("1 + x^2"));
        CHECK(d.length() == 2 * n);
        CHECK(check(d).ok);
    }
}

TEST_CASE("plus-zero lemma: p + 1 + x^2 reduces to p") {
    Derivation d1 = lemma_plus_zero(P("x"));
    CHECK(d1.start == P("1 + x + x^2"));
    CHECK(d1.end == P("x"));
    CHECK(d1.steps == std::vector<Step>{F(0)});
    CHECK(check(d1).ok);

    auto rng = make_rng(32);
    for (int trial = 0; trial < 100; ++trial) {
        NatPoly p = random_nat_poly(rng, 6, 3);
        if (p.is_constant()) {
            CHECK_THROWS_AS(lemma_plus_zero(p), std::invalid_argument);
            continue;
        }
        Derivation d = lemma_plus_zero(p);
        CHECK(d.start == p + P("1 + x^2"));
        CHECK(d.end == p);
        CHECK(check(d).ok);
    }
    CHECK_THROWS_AS(lemma_plus_zero(P("0")), std::invalid_argument);
    CHECK_THROWS_AS(lemma_plus_zero(P("5")), std::invalid_argument);
}

TEST_CASE("times-zero lemma: p * (1 + x^2) collapses to 1 + x^2") {
    Derivation triv = lemma_times_zero(P("1"));
    CHECK(triv.start == P("1 + x^2"));
    CHECK(triv.end == P("1 + x^2"));
    CHECK(triv.length() == 0);

    auto rng = make_rng(33);
    for (int trial = 0; trial < 100; ++trial) {
        NatPoly p = random_nonzero_nat_poly(rng, 5, 3);
        Derivation d = lemma_times_zero(p);
        CHECK(d.start == p * P("1 + x^2"));
        CHECK(d.end == P("1 + x^2"));
        CHECK(check(d).ok);
    }
    CHECK_THROWS_AS(lemma_times_zero(P("0")), std::invalid_argument);
}

TEST_CASE("derive: fixed pairs") {
    Derivation d = derive(P("x"), P("x^5"));
    CHECK(d.start == P("x"));
    CHECK(d.end == P("x^5"));
    CHECK(check(d).ok);

    Derivation d2 = derive(P("2 + x^2"), P("x^4"));
    CHECK(d2.start == P("2 + x^2"));
    CHECK(d2.end == P("x^4"));
    CHECK(check(d2).ok);

    Derivation d3 = derive(P("1 + x + x^2"), P("x"));
    CHECK(check(d3).ok);

    CHECK(derive(P("x"), P("x")).length() == 0);
    CHECK(derive(P("0"), P("0")).length() == 0);
}

TEST_CASE("derive rejects unequal classes") {
    CHECK_THROWS_AS(derive(P("1"), P("2")), NotEquivalentError);
    CHECK_THROWS_AS(derive(P("x"), P("x^2")), NotEquivalentError);
    CHECK_THROWS_AS(derive(P("1"), P("1 + x^2")), NotEquivalentError);
    CHECK_THROWS_AS(derive(P("2"), P("x^4")), NotEquivalentError);
}

TEST_CASE("derive handles equal pairs built from a shared class") {
    auto rng = make_rng(34);
    std::uniform_int_distribution<long long> coord(-5, 5);
    for (int trial = 0; trial < 200; ++trial) {
        // Two representatives of the same class: the canonical embedding plus
        // (1 + x^2)-multiples of random padding.
        GaussInt g{coord(rng), coord(rng)};
        NatPoly base = embed_gauss(g);
        NatPoly pad1 = random_nat_poly(rng, 4, 2);
        NatPoly pad2 = random_nat_poly(rng, 4, 2);
        NatPoly p = base + pad1 * P("1 + x^2");
        NatPoly q = base + pad2 * P("1 + x^2");
        Derivation d = derive(p, q);
        CHECK(d.start == p);
        CHECK(d.end == q);
        CHECK(check(d).ok);
    }
}

TEST_CASE("derive handles product-shaped pairs") {
    auto rng = make_rng(35);
    for (int trial = 0; trial < 50; ++trial) {
        NatPoly a = random_nonzero_nat_poly(rng, 3, 2);
        NatPoly b = random_nonzero_nat_poly(rng, 3, 2);
        NatPoly p = a * b;
        // Padding by multiples of 1 + x^2 only preserves the class of a
        // non-constant polynomial (constants are singleton classes).
        if (p.is_constant()) continue;
        NatPoly q = p + random_nat_poly(rng, 3, 2) * P("1 + x^2");
        Derivation d = derive(p, q);
        CHECK(check(d).ok);
    }
}

TEST_CASE("derive_bfs finds short certificates") {
    auto d1 = derive_bfs(P("x"), P("x^5"), 16);
    REQUIRE(d1.has_value());
    CHECK(d1->start == P("x"));
    CHECK(d1->end == P("x^5"));
    CHECK(check(*d1).ok);
    // The hand-written ladder is already optimal.
    CHECK(d1->length() == 12);
    CHECK(d1->length() % 2 == 0);  // each step changes the monomial count by 2

    auto d2 = derive_bfs(P("2 + x^2"), P("x^4"), 12);
    REQUIRE(d2.has_value());
    CHECK(check(*d2).ok);
    CHECK(d2->length() == 9);
    CHECK(d2->length() % 2 == 1);

    auto d3 = derive_bfs(P("x"), P("x"), 4);
    REQUIRE(d3.has_value());
    CHECK(d3->length() == 0);
}

TEST_CASE("derive_bfs returns nothing for unequal or out-of-budget pairs") {
    CHECK_FALSE(derive_bfs(P("1"), P("2"), 20).has_value());
    CHECK_FALSE(derive_bfs(P("x"), P("x^2"), 20).has_value());
    // Equal pair, but the budget is below the distance.
    CHECK_FALSE(derive_bfs(P("x"), P("x^5"), 3).has_value());
}

TEST_CASE("derive_bfs result is never longer than the constructive derivation") {
    auto rng = make_rng(36);
    std::uniform_int_distribution<long long> coord(-2, 2);
    for (int trial = 0; trial < 20; ++trial) {
        GaussInt g{coord(rng), coord(rng)};
        NatPoly p = embed_gauss(g);
        NatPoly q = p + P("1 + x^2");
        Derivation long_d = derive(p, q);
        auto short_d = derive_bfs(p, q, 12);
        REQUIRE(short_d.has_value());
        CHECK(check(*short_d).ok);
        CHECK(short_d->length() <= long_d.length());
    }
}

TEST_CASE("derive and derive_bfs cover a small box exhaustively") {
    std::vector<NatPoly> polys = all_polys(2, 1);  // 8 polynomials
    for (const NatPoly& p : polys) {
        for (const NatPoly& q : polys) {
            if (decide_equal(p, q)) {
                Derivation d = derive(p, q);
                CHECK(check(d).ok);
                auto b = derive_bfs(p, q, 30);
                REQUIRE(b.has_value());
                CHECK(check(*b).ok);
            } else {
                CHECK_THROWS_AS(derive(p, q), NotEquivalentError);
                CHECK_FALSE(derive_bfs(p, q, 12).has_value());
            }
        }
    }
}

TEST_CASE("JSON emission: golden file body") {
    Derivation d{P("x"), {U(0)}, P("1 + x + x^2")};
    const std::string expected =
        "{\n"
        "  \"start\": \"x\",\n"
        "  \"end\": \"1 + x + x^2\",\n"
        "  \"steps\": [\n"
        "    {\n"
        "      \"dir\": \"unfold\",\n"
        "      \"pivot\": 0,\n"
        "      \"copy\": 0\n"
        "    }\n"
        "  ]\n"
        "}\n";
    CHECK(to_json(d) == expected);
}

TEST_CASE("JSON round-trips derivations exactly") {
    for (const Derivation& d : {ladder_up_fixture(), two_to_fourth_fixture(),
                                derive(P("x"), P("x^5"))}) {
        CHECK(derivation_from_json(to_json(d)) == d);
    }
    Derivation empty{P("0"), {}, P("0")};
    CHECK(derivation_from_json(to_json(empty)) == empty);
}

TEST_CASE("JSON parsing tolerates reordered keys and whitespace") {
    Derivation d = derivation_from_json(
        "  { \"steps\": [ {\"copy\":0, \"dir\":\"fold\", \"pivot\":1} ],"
        "    \"end\": \"x^2\", \"start\": \"x + x^2 + x^3\" }  ");
    CHECK(d.start == P("x + x^2 + x^3"));
    CHECK(d.end == P("x^2"));
    CHECK(d.steps == std::vector<Step>{F(1)});
}

TEST_CASE("JSON parsing rejects malformed input") {
    CHECK_THROWS_AS(derivation_from_json("not json"), ParseError);
    CHECK_THROWS_AS(derivation_from_json("[]"), ParseError);
    CHECK_THROWS_AS(derivation_from_json("{}"), ParseError);
    CHECK_THROWS_AS(derivation_from_json(
                        R"({"start":"x","end":"x","steps":[{"dir":"sideways","pivot":0,"copy":0}]})"),
                    ParseError);
    CHECK_THROWS_AS(derivation_from_json(
                        R"({"start":"x","end":"x","steps":[{"dir":"fold","copy":0}]})"),
                    ParseError);
    CHECK_THROWS_AS(derivation_from_json(R"({"start":"??","end":"x","steps":[]})"),
                    ParseError);
    CHECK_THROWS_AS(derivation_from_json(R"({"start":5,"end":"x","steps":[]})"),
                    ParseError);
}

}  // TEST_SUITE
