#pragma once

// Seeded randomized verification suites. Every suite is deterministic in its
// seed: instance i draws from a generator derived from (seed, i), so run
// order and count never change what an instance sees.

#include <cstdint>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "lexrev/defaults.hpp"
#include "lexrev/entrenchment.hpp"
#include "lexrev/logic.hpp"
#include "lexrev/ranked.hpp"
#include "lexrev/render.hpp"
#include "lexrev/revision.hpp"

namespace lexrev {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    std::uint32_t below(std::uint32_t n) { return n == 0 ? 0 : static_cast<std::uint32_t>(engine_() % n); }
    int range(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint32_t>(hi - lo + 1))); }
    bool percent(int p) { return below(100) < static_cast<std::uint32_t>(p); }

    static Rng for_instance(std::uint64_t seed, std::uint64_t instance) {
        return Rng(seed ^ (0x9E3779B97F4A7C15ULL * (instance + 1)));
    }

private:
    std::mt19937_64 engine_;
};

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

inline Formula random_formula(Rng& rng, const Vocabulary& vocab, int max_depth) {
    if (max_depth <= 0) {
        const std::uint32_t r = rng.below(8);
        if (r < 6) return Formula::variable(static_cast<int>(rng.below(static_cast<std::uint32_t>(vocab.size()))));
        return r == 6 ? Formula::verum() : Formula::falsum();
    }
    switch (rng.below(10)) {
        case 0:
        case 1:
        case 2: return random_formula(rng, vocab, 0);
        case 3:
        case 4: return !random_formula(rng, vocab, max_depth - 1);
        case 5:
        case 6: return random_formula(rng, vocab, max_depth - 1) & random_formula(rng, vocab, max_depth - 1);
        case 7:
        case 8: return random_formula(rng, vocab, max_depth - 1) | random_formula(rng, vocab, max_depth - 1);
        default: return implies(random_formula(rng, vocab, max_depth - 1), random_formula(rng, vocab, max_depth - 1));
    }
}

// Verum, falsum, every variable and its negation, and the pairwise
// conjunctions, disjunctions and implications of distinct variables.
inline std::vector<Formula> base_formula_sample(const Vocabulary& vocab) {
    std::vector<Formula> out{Formula::verum(), Formula::falsum()};
    for (int i = 0; i < vocab.size(); ++i) {
        out.push_back(Formula::variable(i));
        out.push_back(!Formula::variable(i));
    }
    for (int i = 0; i < vocab.size(); ++i)
        for (int j = i + 1; j < vocab.size(); ++j) {
            out.push_back(Formula::variable(i) & Formula::variable(j));
            out.push_back(Formula::variable(i) | Formula::variable(j));
            out.push_back(implies(Formula::variable(i), Formula::variable(j)));
        }
    return out;
}

inline std::vector<Formula> formula_sample(Rng& rng, const Vocabulary& vocab, int extra,
                                           int max_depth = 3) {
    std::vector<Formula> out = base_formula_sample(vocab);
    for (int i = 0; i < extra; ++i) out.push_back(random_formula(rng, vocab, max_depth));
    return dedup_formulas(out);
}

// All variables and their negations.
inline std::vector<Formula> literal_sample(const Vocabulary& vocab) {
    std::vector<Formula> out;
    for (int i = 0; i < vocab.size(); ++i) {
        out.push_back(Formula::variable(i));
        out.push_back(!Formula::variable(i));
    }
    return out;
}

// Every conjunction of literals over distinct variables (each variable
// absent, positive or negated), 3^n - 1 formulas in a fixed order.
inline std::vector<Formula> literal_conjunctions(const Vocabulary& vocab) {
    std::vector<Formula> out;
    std::uint64_t combinations = 1;
    for (int i = 0; i < vocab.size(); ++i) combinations *= 3;
    for (std::uint64_t code = 1; code < combinations; ++code) {
        Formula acc;
        std::uint64_t rest = code;
        for (int i = 0; i < vocab.size(); ++i) {
            const int state = static_cast<int>(rest % 3);
            rest /= 3;
            if (state == 0) continue;
            Formula lit = state == 1 ? Formula::variable(i) : !Formula::variable(i);
            acc = acc.valid() ? std::move(acc) & std::move(lit) : std::move(lit);
        }
        out.push_back(std::move(acc));
    }
    return out;
}

inline WorldSet random_worldset(Rng& rng, int num_vars) {
    WorldSet s(num_vars);
    const std::uint64_t worlds = std::uint64_t{1} << num_vars;
    for (World w = 0; w < worlds; ++w)
        if (rng.percent(50)) s.insert(w);
    return s;
}

// A full sequence: every world lands in one of up to max_layers layers; some
// layers may come out empty.
inline RankedSequence random_full_sequence(Rng& rng, int num_vars, int max_layers = 4) {
    const int layer_count = rng.range(1, max_layers);
    std::vector<WorldSet> layers(static_cast<std::size_t>(layer_count), WorldSet::none(num_vars));
    const std::uint64_t worlds = std::uint64_t{1} << num_vars;
    for (World w = 0; w < worlds; ++w)
        layers[rng.below(static_cast<std::uint32_t>(layer_count))].insert(w);
    return RankedSequence(num_vars, std::move(layers));
}

// A member of the full-or-empty class, occasionally the empty one, and
// occasionally padded with empty layers to exercise canonicalization.
inline RankedSequence random_upsilon_sequence(Rng& rng, int num_vars, int empty_percent = 12) {
    if (rng.percent(empty_percent)) {
        std::vector<WorldSet> layers(rng.below(3), WorldSet::none(num_vars));
        return RankedSequence(num_vars, std::move(layers));
    }
    RankedSequence full = random_full_sequence(rng, num_vars);
    if (rng.percent(30)) {
        std::vector<WorldSet> layers = full.layers();
        layers.insert(layers.begin() + rng.below(static_cast<std::uint32_t>(layers.size() + 1)),
                      WorldSet::none(num_vars));
        return RankedSequence(num_vars, std::move(layers));
    }
    return full;
}

inline EntrenchmentRelation random_entrenchment(Rng& rng, int num_vars, int absurd_percent = 10) {
    return EntrenchmentRelation(random_upsilon_sequence(rng, num_vars, absurd_percent));
}

inline Default random_default(Rng& rng, const Vocabulary& vocab, int max_depth = 2) {
    return Default{random_formula(rng, vocab, max_depth), random_formula(rng, vocab, max_depth)};
}

// Rejection-samples a base whose materials are consistent and whose
// specificity partition exists. Falls back to a trivially admissible
// singleton if the attempt budget runs out.
inline DefaultBase random_admissible_base(Rng& rng, const Vocabulary& vocab, int max_defaults = 5) {
    for (int attempt = 0; attempt < 400; ++attempt) {
        std::vector<Default> defaults;
        const int count = rng.range(1, max_defaults);
        for (int i = 0; i < count; ++i) defaults.push_back(random_default(rng, vocab));
        try {
            DefaultBase base(defaults);
            z_partition(base, vocab);
            return base;
        } catch (const std::runtime_error&) {
            continue;
        }
    }
    return DefaultBase({Default{Formula::variable(0), Formula::variable(0)}});
}

inline std::vector<Formula> random_sentence_set(Rng& rng, const Vocabulary& vocab, int max_size,
                                                int max_depth = 2, bool force_consistent = false) {
    for (int attempt = 0; attempt < 200; ++attempt) {
        std::vector<Formula> out;
        const int count = rng.range(0, max_size);
        for (int i = 0; i < count; ++i) out.push_back(random_formula(rng, vocab, max_depth));
        out = dedup_formulas(out);
        if (!force_consistent || is_consistent(out, vocab)) return out;
    }
    return {Formula::verum()};
}

inline Vocabulary small_vocabulary(int n) {
    static const std::vector<std::string> pool{"p", "q", "r", "s", "t"};
    return Vocabulary(std::vector<std::string>(pool.begin(), pool.begin() + n));
}

// ---------------------------------------------------------------------------
// Independent oracles used by the suites
// ---------------------------------------------------------------------------

// The cardinality-based strict precedence over a sentence set, evaluated by
// quantifier form: every subset consistent with !phi is outweighed by a
// larger subset consistent with !theta.
inline bool cardinality_strictly_precedes(const std::vector<Formula>& sentences,
                                          const Formula& theta, const Formula& phi,
                                          const Vocabulary& vocab) {
    const std::vector<Formula> items = dedup_formulas(sentences);
    if (!is_consistent(items, vocab)) return false;
    if (is_tautology(theta, vocab)) return false;

    const WorldSet not_theta = ~models(theta, vocab);
    const WorldSet not_phi = ~models(phi, vocab);
    std::vector<WorldSet> item_models;
    for (const Formula& f : items) item_models.push_back(models(f, vocab));
    const std::uint32_t limit = std::uint32_t{1} << items.size();

    auto subset_models = [&](std::uint32_t mask) {
        WorldSet acc = WorldSet::all(vocab.size());
        for (std::size_t i = 0; i < items.size(); ++i)
            if ((mask >> i) & 1) acc &= item_models[i];
        return acc;
    };

    for (std::uint32_t e1 = 0; e1 < limit; ++e1) {
        if ((subset_models(e1) & not_phi).empty()) continue;
        bool outweighed = false;
        for (std::uint32_t e2 = 0; e2 < limit && !outweighed; ++e2)
            if (std::popcount(e2) > std::popcount(e1) && !(subset_models(e2) & not_theta).empty())
                outweighed = true;
        if (!outweighed) return false;
    }
    return true;
}

// Entrenchment comparison read literally off the carrier's consequence
// relation: theta <= phi iff not(!theta | !phi |~ theta) or !phi |~ falsum.
inline bool entrenchment_leq_via_consequence(const EntrenchmentRelation& relation,
                                             const Formula& theta, const Formula& phi,
                                             const Vocabulary& vocab) {
    const RankedSequence& carrier = relation.carrier();
    const Formula disj = (!theta) | (!phi);
    return !carrier.infers(disj, theta, vocab) || carrier.infers(!phi, Formula::falsum(), vocab);
}

// ---------------------------------------------------------------------------
// Instance checks (one randomized scenario each; nullopt = pass)
// ---------------------------------------------------------------------------

using InstanceResult = std::optional<std::string>;

// Main theorem: the direct lexicographic closure and the revision-chain
// sequence answer every query identically.
inline InstanceResult main_theorem_instance(Rng& rng, std::size_t* queries_run = nullptr) {
    const Vocabulary vocab = small_vocabulary(rng.range(2, 4));
    const DefaultBase base = random_admissible_base(rng, vocab, 5);
    const LexOracle oracle(base, vocab);
    const RankedSequence chain = lex_sequence(oracle.partition(), vocab);

    std::vector<std::pair<Formula, Formula>> queries;
    const std::vector<Formula> conjunctions = literal_conjunctions(vocab);
    for (const Formula& a : conjunctions)
        for (const Formula& b : conjunctions) queries.emplace_back(a, b);
    for (std::size_t i = 0; i < 144; ++i)
        queries.emplace_back(random_formula(rng, vocab, 4), random_formula(rng, vocab, 4));

    for (const auto& [theta, phi] : queries) {
        const bool direct = oracle.infers(theta, phi, vocab);
        const bool via_chain = chain.infers(theta, phi, vocab);
        if (queries_run) ++*queries_run;
        if (direct != via_chain) {
            std::string desc = "base {";
            for (const Default& d : base.defaults()) desc += " " + d.to_string(vocab) + ";";
            desc += " } query " + theta.to_string(vocab) + " |~ " + phi.to_string(vocab) +
                    ": direct=" + (direct ? "YES" : "NO") + " chain=" + (via_chain ? "YES" : "NO");
            return desc;
        }
    }
    return std::nullopt;
}

// Rational postulates and consistency preservation of the lexicographic
// closure, checked on the direct construction.
inline InstanceResult rational_postulates_instance(Rng& rng) {
    const Vocabulary vocab = small_vocabulary(3);
    const DefaultBase base = random_admissible_base(rng, vocab, 4);
    const LexOracle oracle(base, vocab);
    auto infers = [&](const Formula& a, const Formula& b) { return oracle.infers(a, b, vocab); };
    auto describe = [&](const char* rule, const Formula& a, const Formula& b, const Formula& c) {
        std::string desc = std::string(rule) + " fails: theta=" + a.to_string(vocab) +
                           " phi=" + b.to_string(vocab) + " psi=" + c.to_string(vocab) + "; base {";
        for (const Default& d : base.defaults()) desc += " " + d.to_string(vocab) + ";";
        return desc + " }";
    };

    for (int trial = 0; trial < 24; ++trial) {
        const Formula theta = random_formula(rng, vocab, 3);
        const Formula phi = random_formula(rng, vocab, 3);
        const Formula psi = random_formula(rng, vocab, 3);

        // REF
        if (!infers(theta, theta)) return describe("REF", theta, theta, theta);
        // LLE: equivalent reformulations of the premise
        const Formula variant = trial % 2 == 0 ? !!theta : theta & Formula::verum();
        if (infers(theta, psi) != infers(variant, psi)) return describe("LLE", theta, variant, psi);
        // RW: weaken a consequence
        if (infers(theta, phi) && !infers(theta, phi | psi)) return describe("RW", theta, phi, psi);
        // AND
        if (infers(theta, phi) && infers(theta, psi) && !infers(theta, phi & psi))
            return describe("AND", theta, phi, psi);
        // OR
        if (infers(theta, psi) && infers(phi, psi) && !infers(theta | phi, psi))
            return describe("OR", theta, phi, psi);
        // CM
        if (infers(theta, phi) && infers(theta, psi) && !infers(theta & phi, psi))
            return describe("CM", theta, phi, psi);
        // RM
        if (!infers(theta, !phi) && infers(theta, psi) && !infers(theta & phi, psi))
            return describe("RM", theta, phi, psi);
        // consistency preservation
        if (infers(theta, Formula::falsum()) && !models(theta, vocab).empty())
            return describe("consistency-preservation", theta, theta, theta);
    }
    return std::nullopt;
}

// E-axioms hold for relations generated from sentence sets and from ranked
// sequences.
inline InstanceResult e_axioms_instance(Rng& rng) {
    const Vocabulary vocab = small_vocabulary(3);
    const std::vector<Formula> sample = formula_sample(rng, vocab, 4);

    const std::vector<Formula> sentences = random_sentence_set(rng, vocab, 4);
    const EAxiomReport from_set = check_e_axioms(entrenchment_from_set(sentences, vocab), sample, vocab);
    if (!from_set.ok()) return "set-generated relation: " + from_set.summary(vocab);

    const EntrenchmentRelation from_seq = random_entrenchment(rng, vocab.size());
    const EAxiomReport seq_report = check_e_axioms(from_seq, sample, vocab);
    if (!seq_report.ok()) return "sequence-generated relation: " + seq_report.summary(vocab);
    return std::nullopt;
}

inline InstanceResult revision_postulates_instance(Rng& rng) {
    const Vocabulary vocab = small_vocabulary(3);
    const EntrenchmentRelation prior = random_entrenchment(rng, vocab.size());
    const EntrenchmentRelation input = random_entrenchment(rng, vocab.size());
    const std::vector<Formula> sample = formula_sample(rng, vocab, 4);
    const RevisionPostulateReport report = check_revision_postulates(prior, input, sample, vocab);
    if (!report.ok()) return report.summary(vocab);
    return std::nullopt;
}

// Associativity of revision with a non-empty middle, at both levels.
inline InstanceResult associativity_instance(Rng& rng) {
    const int n = 3;
    const RankedSequence u = random_upsilon_sequence(rng, n);
    const RankedSequence v = random_full_sequence(rng, n);
    const RankedSequence w = random_upsilon_sequence(rng, n);

    const RankedSequence left = revise(revise(u, v), w);
    const RankedSequence right = revise(u, revise(v, w));
    if (left != right) return "sequence associativity fails";

    const EntrenchmentRelation a(u), b(v), c(w);
    if (revise(revise(a, b), c) != revise(a, revise(b, c)))
        return "entrenchment associativity fails";
    return std::nullopt;
}

// Padding carriers with empty layers never changes a revision result.
inline InstanceResult well_definedness_instance(Rng& rng) {
    const int n = 3;
    const RankedSequence u = random_upsilon_sequence(rng, n);
    const RankedSequence v = random_upsilon_sequence(rng, n);

    auto pad = [&](const RankedSequence& base) {
        std::vector<WorldSet> layers = base.layers();
        const int insertions = rng.range(1, 3);
        for (int i = 0; i < insertions; ++i)
            layers.insert(layers.begin() + rng.below(static_cast<std::uint32_t>(layers.size() + 1)),
                          WorldSet::none(n));
        return RankedSequence(n, std::move(layers));
    };

    const RankedSequence plain = revise(u, v);
    const RankedSequence padded = revise(pad(u), pad(v));
    if (plain != padded) return "padding with empty layers changed the revision result";
    return std::nullopt;
}

// Bridge checks: belief/inference correspondences and the equivalence of the
// rank comparator with the consequence reading of entrenchment.
inline InstanceResult bridge_instance(Rng& rng) {
    const Vocabulary vocab = small_vocabulary(3);
    const int n = vocab.size();
    const std::vector<Formula> sample = formula_sample(rng, vocab, 4);

    // top-inference matches belief
    const RankedSequence u = random_upsilon_sequence(rng, n);
    const EntrenchmentRelation r(u);
    for (const Formula& theta : sample)
        if (r.believes(theta, vocab) != u.infers(Formula::verum(), theta, vocab))
            return "belief mismatch at " + theta.to_string(vocab);

    // revising a full prior by a single sentence believes exactly what the
    // prior infers from it
    const RankedSequence full = random_full_sequence(rng, n);
    const EntrenchmentRelation full_rel(full);
    for (int trial = 0; trial < 8; ++trial) {
        const Formula theta = random_formula(rng, vocab, 2);
        const Formula phi = random_formula(rng, vocab, 2);
        const EntrenchmentRelation revised = revise_by_set(full_rel, {theta}, vocab);
        if (revised.believes(phi, vocab) != full.infers(theta, phi, vocab))
            return "single-sentence revision belief mismatch at " + theta.to_string(vocab) + " / " +
                   phi.to_string(vocab);
    }

    // round trip: the consequence relation recovered from the entrenchment
    // relation of a sequence is the sequence's own
    for (const Formula& theta : sample)
        for (const Formula& phi : sample)
            if (r.consequence(theta, phi, vocab) != u.infers(theta, phi, vocab))
                return "round-trip mismatch at " + theta.to_string(vocab) + " / " + phi.to_string(vocab);

    // rank comparator agrees with the consequence reading
    for (const Formula& theta : sample)
        for (const Formula& phi : sample)
            if (r.leq(theta, phi, vocab) != entrenchment_leq_via_consequence(r, theta, phi, vocab))
                return "comparator mismatch at " + theta.to_string(vocab) + " / " + phi.to_string(vocab);

    // the belief set of a set-generated relation is the set's closure
    const std::vector<Formula> sentences = random_sentence_set(rng, vocab, 4);
    const EntrenchmentRelation from_set = entrenchment_from_set(sentences, vocab);
    for (const Formula& theta : sample)
        if (from_set.believes(theta, vocab) != entails(sentences, theta, vocab))
            return "belief-closure mismatch at " + theta.to_string(vocab);

    return std::nullopt;
}

// The set-generated strict order agrees with its quantifier form, and
// extends the inclusion-based order.
inline InstanceResult set_order_instance(Rng& rng) {
    const Vocabulary vocab = small_vocabulary(3);
    const std::vector<Formula> sentences = random_sentence_set(rng, vocab, 4);
    const EntrenchmentRelation relation = entrenchment_from_set(sentences, vocab);
    std::vector<Formula> sample = base_formula_sample(vocab);
    sample.push_back(random_formula(rng, vocab, 2));

    for (const Formula& theta : sample)
        for (const Formula& phi : sample) {
            const bool via_rank = relation.less(theta, phi, vocab);
            const bool via_quantifier = cardinality_strictly_precedes(sentences, theta, phi, vocab);
            if (via_rank != via_quantifier)
                return "cardinality order mismatch at " + theta.to_string(vocab) + " / " +
                       phi.to_string(vocab);
            if (inclusion_strictly_precedes(sentences, theta, phi, vocab) && !via_rank)
                return "inclusion order not extended at " + theta.to_string(vocab) + " / " +
                       phi.to_string(vocab);
        }
    return std::nullopt;
}

// Darwiche-Pearl C2 for single sentences: when the second input contradicts
// the first, the intermediate revision leaves no trace on the beliefs. The
// first input must be satisfiable; revising by an unsatisfiable sentence
// collapses the state and erases the prior for good.
inline InstanceResult dp_c2_instance(Rng& rng) {
    const Vocabulary vocab = small_vocabulary(3);
    const EntrenchmentRelation psi = random_entrenchment(rng, vocab.size());
    Formula theta = Formula::verum();
    for (int attempt = 0; attempt < 50; ++attempt) {
        Formula candidate = random_formula(rng, vocab, 2);
        if (!models(candidate, vocab).empty()) {
            theta = std::move(candidate);
            break;
        }
    }
    const Formula phi = random_formula(rng, vocab, 2) & !theta;

    const EntrenchmentRelation via_theta = revise_by_set(revise_by_set(psi, {theta}, vocab), {phi}, vocab);
    const EntrenchmentRelation direct = revise_by_set(psi, {phi}, vocab);

    if (via_theta.is_absurd() != direct.is_absurd())
        return "absurdity differs at theta=" + theta.to_string(vocab) + " phi=" + phi.to_string(vocab);
    if (!via_theta.is_absurd() && via_theta.belief_worlds() != direct.belief_worlds())
        return "belief sets differ at theta=" + theta.to_string(vocab) + " phi=" + phi.to_string(vocab);
    for (const Formula& f : base_formula_sample(vocab))
        if (via_theta.believes(f, vocab) != direct.believes(f, vocab))
            return "belief query differs at " + f.to_string(vocab);
    return std::nullopt;
}

// Revising by a consistent set then a subset equals revising by the
// difference then the subset.
inline InstanceResult set_difference_instance(Rng& rng) {
    const Vocabulary vocab = small_vocabulary(3);
    const EntrenchmentRelation prior = random_entrenchment(rng, vocab.size());
    const std::vector<Formula> e2 = random_sentence_set(rng, vocab, 5, 2, /*force_consistent=*/true);

    std::vector<Formula> e1, difference;
    for (const Formula& f : e2)
        (rng.percent(50) ? e1 : difference).push_back(f);

    const EntrenchmentRelation left = revise_by_set(revise_by_set(prior, e2, vocab), e1, vocab);
    const EntrenchmentRelation right = revise_by_set(revise_by_set(prior, difference, vocab), e1, vocab);
    if (left != right) {
        std::string desc = "set-difference identity fails for E2 = {";
        for (const Formula& f : e2) desc += " " + f.to_string(vocab) + ";";
        desc += " } E1 = {";
        for (const Formula& f : e1) desc += " " + f.to_string(vocab) + ";";
        return desc + " }";
    }
    return std::nullopt;
}

// The chain over cumulative strata equals the chain over plain strata.
inline InstanceResult cumulative_rewrite_instance(Rng& rng) {
    const Vocabulary vocab = small_vocabulary(3);
    const DefaultBase base = random_admissible_base(rng, vocab, 4);
    const ZPartition zp = z_partition(base, vocab);
    if (EntrenchmentRelation(lex_sequence(zp, vocab)) !=
        EntrenchmentRelation(cumulative_set_chain_sequence(zp, vocab))) {
        std::string desc = "cumulative rewrite fails for base {";
        for (const Default& d : base.defaults()) desc += " " + d.to_string(vocab) + ";";
        return desc + " }";
    }
    return std::nullopt;
}

// The user-facing identity: a lexicographic query equals belief after
// chaining the strata and then the premise.
inline InstanceResult belief_chain_instance(Rng& rng) {
    const Vocabulary vocab = small_vocabulary(3);
    const DefaultBase base = random_admissible_base(rng, vocab, 4);
    const LexOracle oracle(base, vocab);

    EntrenchmentRelation state = EntrenchmentRelation::initial(vocab.size());
    for (const std::vector<Default>& stratum : oracle.partition().strata) {
        std::vector<Formula> materials;
        for (const Default& d : stratum) materials.push_back(material(d));
        state = revise_by_set(state, materials, vocab);
    }
    for (int trial = 0; trial < 12; ++trial) {
        const Formula theta = random_formula(rng, vocab, 3);
        const Formula phi = random_formula(rng, vocab, 3);
        const bool direct = oracle.infers(theta, phi, vocab);
        const bool via_belief = revise_by_set(state, {theta}, vocab).believes(phi, vocab);
        if (direct != via_belief)
            return "belief-chain mismatch at " + theta.to_string(vocab) + " / " + phi.to_string(vocab);
    }
    return std::nullopt;
}

// Aggregate proposition suite: everything above that is not already its own
// acceptance criterion, one scenario each.
inline InstanceResult props_instance(Rng& rng) {
    if (auto r = rational_postulates_instance(rng)) return r;
    if (auto r = bridge_instance(rng)) return r;
    if (auto r = well_definedness_instance(rng)) return r;
    if (auto r = associativity_instance(rng)) return r;
    if (auto r = set_order_instance(rng)) return r;
    if (auto r = belief_chain_instance(rng)) return r;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Suite driver
// ---------------------------------------------------------------------------

struct SuiteOutcome {
    std::string suite;
    std::uint64_t seed = 0;
    int count = 0;
    int passed = 0;
    std::string first_counterexample;

    bool ok() const { return passed == count; }
};

template <typename InstanceFn>
SuiteOutcome run_instances(const std::string& name, std::uint64_t seed, int count, InstanceFn&& fn) {
    SuiteOutcome outcome;
    outcome.suite = name;
    outcome.seed = seed;
    outcome.count = count;
    for (int i = 0; i < count; ++i) {
        Rng rng = Rng::for_instance(seed, static_cast<std::uint64_t>(i));
        InstanceResult failure = fn(rng);
        if (!failure) {
            ++outcome.passed;
        } else if (outcome.first_counterexample.empty()) {
            outcome.first_counterexample = "instance " + std::to_string(i) + ": " + *failure;
        }
    }
    return outcome;
}

inline std::optional<SuiteOutcome> run_named_suite(const std::string& name, std::uint64_t seed,
                                                   int count) {
    if (name == "main-theorem")
        return run_instances(name, seed, count, [](Rng& rng) { return main_theorem_instance(rng); });
    if (name == "postulates")
        return run_instances(name, seed, count, revision_postulates_instance);
    if (name == "e-axioms")
        return run_instances(name, seed, count, e_axioms_instance);
    if (name == "props")
        return run_instances(name, seed, count, props_instance);
    if (name == "dp")
        return run_instances(name, seed, count, dp_c2_instance);
    if (name == "set-difference")
        return run_instances(name, seed, count, [](Rng& rng) -> InstanceResult {
            if (auto r = set_difference_instance(rng)) return r;
            return cumulative_rewrite_instance(rng);
        });
    return std::nullopt;
}

inline void print_suite_outcome(const SuiteOutcome& outcome, std::ostream& out) {
    out << "suite " << outcome.suite << ": seed=" << outcome.seed << " count=" << outcome.count
        << "\n";
    out << "pass " << outcome.passed << "/" << outcome.count << "\n";
    if (!outcome.first_counterexample.empty())
        out << "first counterexample: " << outcome.first_counterexample << "\n";
}

}  // namespace lexrev
