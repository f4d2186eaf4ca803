#include <catch_amalgamated.hpp>

#include "cimp/entail.hpp"
#include "cimp/error.hpp"
#include "cimp/rules.hpp"
#include "support/instances.hpp"
#include "support/oracles.hpp"

using namespace cimp;

namespace {

const ConstrainedImplication kHalfHalf({"a"}, {"b"}, Rational(1, 2), Rational(1, 2));

bool models_all(const FormalContext& k, const RuleSet& rules) {
    return std::all_of(rules.begin(), rules.end(), [&](const auto& r) { return holds(k, r); });
}

} // namespace

TEST_CASE("minimum support and surrogate values", "[entail]") {
    const RuleSet l{kHalfHalf};
    const auto half = solve_min_programs(l, ConstrainedImplication({"a"}, {"b"}, 0, Rational(1, 2)));
    CHECK(half.min_support == Rational(1, 2));
    CHECK(half.universe == std::vector<std::string>{"a", "b"});

    const auto strict = solve_min_programs(l, ConstrainedImplication({"a"}, {"b"}, 0, Rational(3, 4)));
    CHECK(strict.min_surrogate == Rational(-1, 4));
    // columns: {a} = 2, {a,b} = 3
    CHECK(strict.surrogate_argmin == SparseVector{{2, Rational(1, 2)}, {3, Rational(1, 2)}});

    const auto empty = solve_min_programs({}, ConstrainedImplication({"a"}, {"b"}, 0, 0));
    CHECK(empty.min_support == 0);
    CHECK(empty.min_surrogate == 0);
}

TEST_CASE("minima agree with vertex enumeration", "[entail][property]") {
    testing::Generator gen(101);
    for (int trial = 0; trial < 60; ++trial) {
        const auto inst = gen.instance(3, 2, 6);
        const auto got = solve_min_programs(inst.rules, inst.query);
        const auto a = testing::reference_matrix(got.universe, inst.rules);
        const auto b = testing::reference_rhs(inst.rules);
        const auto supp = testing::vertex_enumeration_min(
            a, b, testing::reference_objective(got.universe, b.size(), false, inst.query));
        const auto surr = testing::vertex_enumeration_min(
            a, b, testing::reference_objective(got.universe, b.size(), true, inst.query));
        REQUIRE(supp);
        REQUIRE(surr);
        CHECK(got.min_support == supp->value);
        CHECK(got.min_surrogate == surr->value);
    }
}

TEST_CASE("deciding entailment", "[entail]") {
    const RuleSet l{kHalfHalf};

    const auto weaker = decide_entailment(l, ConstrainedImplication({"a"}, {"b"}, Rational(1, 4), Rational(1, 2)));
    CHECK(weaker.entailed);
    CHECK_FALSE(weaker.failing_program);
    CHECK_FALSE(weaker.witness);

    const auto stronger = decide_entailment(l, ConstrainedImplication({"a"}, {"b"}, Rational(1, 2), Rational(3, 4)));
    CHECK_FALSE(stronger.entailed);
    CHECK(stronger.failing_program == FailingProgram::confidence);
    REQUIRE(stronger.witness);
    CHECK(*stronger.witness == FormalContext::from_intents({"o1", "o2"}, {"a", "b"}, {{"a"}, {"a", "b"}}));

    const RuleSet everyone_a{ConstrainedImplication({}, {"a"}, 1, 1)};
    CHECK(decide_entailment(everyone_a, ConstrainedImplication({"b"}, {"a"}, 0, 1)).entailed);

    // support equal to the minimum counts as entailed
    CHECK(decide_entailment(l, ConstrainedImplication({"a"}, {"b"}, Rational(1, 2), Rational(1, 2))).entailed);
    const auto too_much = decide_entailment(l, ConstrainedImplication({"a"}, {"b"}, Rational(3, 4), Rational(1, 2)));
    CHECK(too_much.failing_program == FailingProgram::support);
    REQUIRE(too_much.witness);
    CHECK(support(*too_much.witness, {"a"}) < Rational(3, 4));
}

TEST_CASE("rules without attributes are always entailed", "[entail]") {
    const RuleSet l{ConstrainedImplication({}, {}, 1, 1)};
    const auto v = decide_entailment(l, ConstrainedImplication({}, {}, 1, 1));
    CHECK(v.entailed);
    CHECK(v.min_support_value == 1);
    CHECK(v.min_surrogate_value == 0);
    CHECK_FALSE(brute_force_refute(l, ConstrainedImplication({}, {}, 1, 1), 3));
}

TEST_CASE("witness context from a frequency vector", "[entail]") {
    const std::vector<std::string> ab{"a", "b"};
    const auto k = witness_context({{3, Rational(1, 2)}, {2, Rational(1, 2)}}, ab);
    CHECK(k == FormalContext::from_intents({"o1", "o2"}, ab, {{"a"}, {"a", "b"}}));

    const auto full = witness_context({{3, Rational(1)}}, ab);
    CHECK(full.object_count() == 1);
    CHECK(full.intent_names(0) == AttrSet{"a", "b"});

    const auto thirds = witness_context({{0, Rational(1, 3)}, {1, Rational(1, 6)}, {3, Rational(1, 2)}}, ab);
    CHECK(thirds.object_count() == 6);
    CHECK(frequency_vector(thirds, ab) == SparseVector{{0, Rational(1, 3)}, {1, Rational(1, 6)}, {3, Rational(1, 2)}});

    CHECK_THROWS_AS(witness_context({{0, Rational(1, 2)}}, ab), Error);
    CHECK_THROWS_AS(witness_context({{0, Rational(3, 2)}, {1, Rational(-1, 2)}}, ab), Error);
    CHECK_THROWS_AS(witness_context({{4, Rational(1)}}, ab), Error);
    CHECK_THROWS_AS(witness_context({}, ab), Error);
}

TEST_CASE("brute-force refutation", "[entail]") {
    const RuleSet l{kHalfHalf};
    const auto found = brute_force_refute(l, ConstrainedImplication({"a"}, {"b"}, Rational(1, 2), Rational(3, 4)), 2);
    REQUIRE(found);
    CHECK(found->object_count() == 2);
    CHECK(models_all(*found, l));

    CHECK_FALSE(brute_force_refute({}, ConstrainedImplication({"a"}, {"a"}, 0, 0), 4));
    CHECK_FALSE(brute_force_refute({ConstrainedImplication({}, {"a"}, 1, 1)},
                                   ConstrainedImplication({"b"}, {"a"}, 0, 1), 4));
    CHECK_THROWS_AS(brute_force_refute(l, kHalfHalf, 0), Error);
    CHECK_THROWS_AS(brute_force_refute(l, kHalfHalf, 5, 10), LimitExceeded);
}

TEST_CASE("structural laws on random instances", "[entail][property]") {
    testing::Generator gen(202);
    int refuted = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const auto inst = gen.instance(3, 3, 6);
        const auto v = decide_entailment(inst.rules, inst.query);
        CHECK(v.entailed == (v.min_support_value >= inst.query.min_support() && v.min_surrogate_value.sign() >= 0));
        CHECK(v.witness.has_value() == !v.entailed);

        if (v.witness) {
            ++refuted;
            CHECK(models_all(*v.witness, inst.rules));
            CHECK_FALSE(holds(*v.witness, inst.query));
        }
        if (brute_force_refute(inst.rules, inst.query, 3))
            CHECK_FALSE(v.entailed);

        if (v.entailed) {
            const auto relaxed = inst.query.with_thresholds(inst.query.min_support() * gen.unit_rational(6),
                                                            inst.query.min_confidence() * gen.unit_rational(6));
            CHECK(decide_entailment(inst.rules, relaxed).entailed);
        }
        for (const auto& r : inst.rules)
            CHECK(decide_entailment(inst.rules, r).entailed);

        EntailOptions padded;
        padded.extra_attributes = {"zz", "b0"};
        const auto p = decide_entailment(inst.rules, inst.query, padded);
        CHECK(p.entailed == v.entailed);
        CHECK(p.min_support_value == v.min_support_value);
        CHECK(p.min_surrogate_value == v.min_surrogate_value);

        EntailOptions dense;
        dense.dense = true;
        const auto d = decide_entailment(inst.rules, inst.query, dense);
        CHECK(d.min_support_value == v.min_support_value);
        CHECK(d.min_surrogate_value == v.min_surrogate_value);
    }
    CHECK(refuted > 0);
}

TEST_CASE("dense mode honours the materialization cap", "[entail]") {
    EntailOptions opts;
    opts.dense = true;
    opts.max_materialize = 1;
    CHECK_THROWS_AS(decide_entailment({kHalfHalf}, kHalfHalf, opts), LimitExceeded);
}
