#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "lexrev/entrenchment.hpp"
#include "lexrev/logic.hpp"
#include "lexrev/ranked.hpp"
#include "lexrev/revision.hpp"
#include "lexrev/verify.hpp"

using namespace lexrev;

namespace {

Vocabulary bfp() { return Vocabulary({"b", "f", "p"}); }
Vocabulary pq() { return Vocabulary({"p", "q"}); }

WorldSet worldset(int n, std::initializer_list<World> worlds) {
    WorldSet s(n);
    for (World w : worlds) s.insert(w);
    return s;
}

RankedSequence penguin_chain() {
    return RankedSequence(3, {worldset(3, {0, 2, 3}), worldset(3, {1, 5}), worldset(3, {4, 7}),
                              worldset(3, {6})});
}

}  // namespace

TEST_CASE("revising the flat prior reproduces the input", "[revision]") {
    Rng rng(101);
    for (int i = 0; i < 25; ++i) {
        const RankedSequence v = random_upsilon_sequence(rng, 3);
        REQUIRE(revise(full_sequence(3), v) == v.canonical());
    }
}

TEST_CASE("an empty prior is overwhelmed by the input", "[revision]") {
    Rng rng(103);
    for (int i = 0; i < 25; ++i) {
        const RankedSequence v = random_upsilon_sequence(rng, 3);
        REQUIRE(revise(RankedSequence(3), v) == v.canonical());
    }
}

TEST_CASE("the penguin chain arises from one revision step", "[revision]") {
    const RankedSequence u(3, {worldset(3, {0, 2, 3, 4, 6, 7}), worldset(3, {1, 5})});
    const RankedSequence v(3, {worldset(3, {0, 1, 2, 3, 5}), worldset(3, {4, 7}), worldset(3, {6})});
    REQUIRE(revise(u, v) == penguin_chain());
}

TEST_CASE("revision rejects partial sequences", "[revision]") {
    const RankedSequence partial(3, {worldset(3, {0})});
    REQUIRE_THROWS_AS(revise(partial, full_sequence(3)), std::invalid_argument);
    REQUIRE_THROWS_AS(revise(full_sequence(3), partial), std::invalid_argument);
}

TEST_CASE("entrenchment revision lifts sequence revision", "[revision]") {
    const Vocabulary vocab = bfp();
    const EntrenchmentRelation initial = EntrenchmentRelation::initial(3);
    const EntrenchmentRelation absurd = EntrenchmentRelation::absurd(3);

    // an absurd prior adopts the input outright
    const EntrenchmentRelation input = entrenchment_from_set({parse_formula("b -> f", vocab)}, vocab);
    REQUIRE(revise(absurd, input) == input);

    // an absurd input wipes the prior
    REQUIRE(revise(initial, absurd).is_absurd());

    // revising the initial state by a single sentence splits the worlds
    const WorldSet s = models(parse_formula("b -> f", vocab), vocab);
    REQUIRE(revise(initial, input).carrier() == RankedSequence(3, {s, ~s}));
}

TEST_CASE("revision by sentence sets", "[revision]") {
    const Vocabulary vocab = bfp();
    const EntrenchmentRelation initial = EntrenchmentRelation::initial(3);

    REQUIRE(revise_by_set(initial, {}, vocab) == initial);
    REQUIRE(revise_by_set(initial, {parse_formula("p", vocab), parse_formula("!p", vocab)}, vocab)
                .is_absurd());

    const EntrenchmentRelation step1 = revise_by_set(initial, {parse_formula("b -> f", vocab)}, vocab);
    const EntrenchmentRelation step2 = revise_by_set(
        step1, {parse_formula("p -> b", vocab), parse_formula("p -> !f", vocab)}, vocab);
    REQUIRE(step2.carrier() == penguin_chain());
}

TEST_CASE("chain evaluation", "[revision]") {
    const RevisionChain trivial(full_sequence(3));
    REQUIRE(evaluate_chain(trivial) == full_sequence(3));

    // ((W) * A) * B == (W) * (A * B) on the penguin steps
    const Vocabulary vocab = bfp();
    const RankedSequence a = entrenchment_from_set({parse_formula("b -> f", vocab)}, vocab).carrier();
    const RankedSequence b =
        entrenchment_from_set({parse_formula("p -> b", vocab), parse_formula("p -> !f", vocab)}, vocab)
            .carrier();
    const RankedSequence left = revise(revise(full_sequence(3), a), b);
    const RankedSequence right = revise(full_sequence(3), revise(a, b));
    REQUIRE(left == right);
    REQUIRE(left == penguin_chain());
    REQUIRE(evaluate_chain(RevisionChain(full_sequence(3), {a, b})) == penguin_chain());

    // an empty step mid-chain stays well-defined: empty * X = X
    const RevisionChain with_empty(full_sequence(3), {RankedSequence(3), a});
    REQUIRE(evaluate_chain(with_empty) == a.canonical());

    const RankedSequence partial(3, {worldset(3, {0})});
    REQUIRE_THROWS_AS(evaluate_chain(RevisionChain(full_sequence(3), {partial})),
                      std::invalid_argument);
}

TEST_CASE("padding with empty layers never changes a revision", "[revision]") {
    Rng rng(107);
    for (int i = 0; i < 40; ++i) {
        if (auto failure = well_definedness_instance(rng)) {
            INFO(*failure);
            FAIL("well-definedness violated");
        }
    }
}

TEST_CASE("revision is associative when the middle is not empty", "[revision]") {
    Rng rng(109);
    for (int i = 0; i < 60; ++i) {
        if (auto failure = associativity_instance(rng)) {
            INFO(*failure);
            FAIL("associativity violated");
        }
    }
}

TEST_CASE("associativity can fail across an empty middle", "[revision]") {
    // (U * V) * X = X when V is empty, while U * (V * X) keeps U's say.
    const RankedSequence u(2, {worldset(2, {0}), worldset(2, {1, 2, 3})});
    const RankedSequence v(2);
    const RankedSequence x = full_sequence(2);
    REQUIRE(revise(revise(u, v), x) != revise(u, revise(v, x)));
}

TEST_CASE("revising by a consistent set then a subset forgets the rest", "[revision]") {
    Rng rng(113);
    for (int i = 0; i < 60; ++i) {
        if (auto failure = set_difference_instance(rng)) {
            INFO(*failure);
            FAIL("set-difference identity violated");
        }
    }
}

TEST_CASE("contradicted intermediate revisions leave no belief trace", "[revision]") {
    Rng rng(127);
    for (int i = 0; i < 60; ++i) {
        if (auto failure = dp_c2_instance(rng)) {
            INFO(*failure);
            FAIL("second-postulate check violated");
        }
    }
}

TEST_CASE("the first layer after revision comes from the input's best layer", "[revision]") {
    Rng rng(131);
    for (int i = 0; i < 50; ++i) {
        const RankedSequence u = random_upsilon_sequence(rng, 3);
        const RankedSequence v = random_full_sequence(rng, 3);
        const RankedSequence result = revise(u, v);
        REQUIRE(result.is_full());
        REQUIRE(result.layers().front().is_subset_of(v.canonical().layers().front()));
    }
}

TEST_CASE("revising a state by itself changes nothing", "[revision]") {
    Rng rng(193);
    for (int i = 0; i < 40; ++i) {
        const EntrenchmentRelation k = random_entrenchment(rng, 3, 15);
        REQUIRE(revise(k, k) == k);
    }
}

TEST_CASE("identical prior and input preserve the prior ordering everywhere", "[revision]") {
    const Vocabulary vocab = bfp();
    Rng rng(197);
    for (int i = 0; i < 20; ++i) {
        const EntrenchmentRelation k = random_entrenchment(rng, 3, 0);
        // with prior == input the agreement condition always holds, so the
        // preservation conclusion is exercised on every indifferent pair
        const RevisionPostulateReport report =
            check_revision_postulates(k, k, formula_sample(rng, vocab, 4), vocab);
        REQUIRE(report.ok());
        REQUIRE(report.e3_applicable);
    }
}

TEST_CASE("revision postulates hold on random pairs", "[revision]") {
    const Vocabulary vocab = bfp();
    Rng rng(137);
    for (int i = 0; i < 40; ++i) {
        const EntrenchmentRelation prior = random_entrenchment(rng, 3, 15);
        const EntrenchmentRelation input = random_entrenchment(rng, 3, 15);
        const RevisionPostulateReport report =
            check_revision_postulates(prior, input, formula_sample(rng, vocab, 4), vocab);
        INFO(report.summary(vocab));
        REQUIRE(report.ok());
        REQUIRE(report.e3_applicable == !input.is_absurd());
    }
}

TEST_CASE("strict input preferences survive revision", "[revision]") {
    const Vocabulary vocab = pq();
    const Formula p = parse_formula("p", vocab);
    const EntrenchmentRelation prior =
        revise_by_set(EntrenchmentRelation::initial(2), {p}, vocab);
    const EntrenchmentRelation input =
        revise_by_set(EntrenchmentRelation::initial(2), {!p}, vocab);

    REQUIRE(prior.believes(p, vocab));
    REQUIRE(input.less(p, !p, vocab));

    const EntrenchmentRelation revised = revise(prior, input);
    REQUIRE(revised.less(p, !p, vocab));
    REQUIRE(revised.believes(!p, vocab));
    REQUIRE_FALSE(revised.believes(p, vocab));

    const RevisionPostulateReport report =
        check_revision_postulates(prior, input, base_formula_sample(vocab), vocab);
    REQUIRE(report.ok());
}

TEST_CASE("revising by the absurd input leaves no strict pairs to preserve", "[revision]") {
    const Vocabulary vocab = pq();
    const EntrenchmentRelation prior = EntrenchmentRelation::initial(2);
    const EntrenchmentRelation input = EntrenchmentRelation::absurd(2);
    const RevisionPostulateReport report =
        check_revision_postulates(prior, input, base_formula_sample(vocab), vocab);
    REQUIRE(report.e1_ok);
    REQUIRE(report.e2_ok);
    REQUIRE_FALSE(report.e3_applicable);
}
