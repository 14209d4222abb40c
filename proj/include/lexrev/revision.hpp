#pragma once

// Sequence revision and its lift to entrenchment relations. Revising a full
// prior (U_0,...,U_k) by an input (V_0,...,V_m) reorders worlds by input
// rank first and prior rank second:
//   (U_0 cap V_0, ..., U_k cap V_0, U_0 cap V_1, ..., U_k cap V_m)
// An empty prior is overwhelmed and the result is just the input. Results
// are always stored canonicalized.

#include <cassert>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lexrev/entrenchment.hpp"
#include "lexrev/logic.hpp"
#include "lexrev/ranked.hpp"

namespace lexrev {

inline RankedSequence revise(const RankedSequence& u, const RankedSequence& v) {
    if (!u.in_upsilon() || !v.in_upsilon())
        throw std::invalid_argument("revision is defined on full or empty sequences only");
    if (!u.is_full()) return v.canonical();
    std::vector<WorldSet> out;
    out.reserve(u.layer_count() * v.layer_count());
    for (const WorldSet& vb : v.layers())
        for (const WorldSet& ua : u.layers()) out.push_back(ua & vb);
    return RankedSequence(u.num_vars(), std::move(out)).canonical();
}

inline EntrenchmentRelation revise(const EntrenchmentRelation& prior,
                                   const EntrenchmentRelation& input) {
    return EntrenchmentRelation(revise(prior.carrier(), input.carrier()));
}

// Revision by a set of sentences: convert the set to an entrenchment
// relation, then revise by that relation. Singletons stand in for single
// sentences.
inline EntrenchmentRelation revise_by_set(const EntrenchmentRelation& prior,
                                          const std::vector<Formula>& sentences,
                                          const Vocabulary& vocab) {
    return revise(prior, entrenchment_from_set(sentences, vocab));
}

struct RevisionChain {
    RankedSequence initial;
    std::vector<RankedSequence> steps;

    explicit RevisionChain(RankedSequence init) : initial(std::move(init)) {}
    RevisionChain(RankedSequence init, std::vector<RankedSequence> revision_steps)
        : initial(std::move(init)), steps(std::move(revision_steps)) {}
};

// Left fold of revise over the chain. In debug builds, when every step but
// possibly the last is non-empty, the right-associated evaluation is
// checked to agree.
inline RankedSequence evaluate_chain(const RevisionChain& chain) {
    if (!chain.initial.in_upsilon())
        throw std::invalid_argument("chain initial sequence must be full or empty");
    for (const RankedSequence& step : chain.steps)
        if (!step.in_upsilon())
            throw std::invalid_argument("chain steps must be full or empty");

    RankedSequence acc = chain.initial.canonical();
    for (const RankedSequence& step : chain.steps) acc = revise(acc, step);

#ifndef NDEBUG
    if (!chain.steps.empty()) {
        bool middles_nonempty = true;
        for (std::size_t i = 0; i + 1 < chain.steps.size(); ++i)
            if (chain.steps[i].is_empty()) middles_nonempty = false;
        if (middles_nonempty) {
            RankedSequence right = chain.steps.back().canonical();
            for (std::size_t i = chain.steps.size() - 1; i-- > 0;)
                right = revise(chain.steps[i], right);
            right = revise(chain.initial, right);
            assert(acc == right && "chain evaluation must be bracket independent");
        }
    }
#endif
    return acc;
}

struct PostulateWitness {
    std::string postulate;
    std::vector<Formula> formulas;
    std::string note;
};

struct RevisionPostulateReport {
    bool e1_ok = true;
    bool e2_ok = true;
    bool e3_ok = true;
    // E3 compares prior and revised orderings only for non-absurd input;
    // revising by the absurd relation wipes the prior outright.
    bool e3_applicable = true;
    std::vector<PostulateWitness> witnesses;

    bool ok() const { return e1_ok && e2_ok && e3_ok; }

    std::string summary(const Vocabulary& vocab) const {
        if (ok()) {
            std::string out = "E1*, E2* hold";
            out += e3_applicable ? ", E3* holds" : ", E3* not applicable (absurd input)";
            return out;
        }
        std::string out;
        for (const PostulateWitness& w : witnesses) {
            if (!out.empty()) out += "; ";
            out += w.postulate + " fails";
            for (const Formula& f : w.formulas) out += " [" + f.to_string(vocab) + "]";
            if (!w.note.empty()) out += " (" + w.note + ")";
        }
        return out;
    }
};

namespace detail {

// Per-world layer indices of a sequence; infinite for worlds outside every
// layer.
inline std::vector<Rank> world_ranks(const RankedSequence& seq) {
    const std::uint64_t worlds = std::uint64_t{1} << seq.num_vars();
    std::vector<Rank> out(static_cast<std::size_t>(worlds), Rank::infinite());
    const auto& layers = seq.layers();
    for (std::size_t i = 0; i < layers.size(); ++i)
        layers[i].for_each([&](World w) { out[w] = Rank::finite(static_cast<std::uint32_t>(i)); });
    return out;
}

}  // namespace detail

// Verifies, over the sampled sentences, the three postulates characterising
// this revision operation:
//   (E1*) the revised relation is an entrenchment relation;
//   (E2*) strict input preferences survive into the revised relation;
//   (E3*) whenever the input is indifferent between theta and phi, and prior
//         and input agree on every comparison with sentences entailed by
//         theta & phi that the input places strictly above theta, the
//         revised relation orders theta and phi exactly as the prior did.
// The E3* agreement condition is evaluated against the sample enriched with
// per-world test points, which makes it exact for carrier-backed relations.
inline RevisionPostulateReport check_revision_postulates(const EntrenchmentRelation& prior,
                                                         const EntrenchmentRelation& input,
                                                         const std::vector<Formula>& sample,
                                                         const Vocabulary& vocab) {
    RevisionPostulateReport report;
    const EntrenchmentRelation revised = revise(prior, input);
    const int n = vocab.size();

    // (E1*)
    const EAxiomReport axioms = check_e_axioms(revised, sample, vocab);
    if (!axioms.ok()) {
        report.e1_ok = false;
        report.witnesses.push_back({"E1*", {}, axioms.summary(vocab)});
    }

    // Negation-model sets and ranks for every sampled sentence under the
    // three relations involved.
    const std::size_t m = sample.size();
    std::vector<WorldSet> neg;
    neg.reserve(m);
    for (const Formula& f : sample) neg.push_back(~models(f, vocab));
    std::vector<Rank> rk_prior, rk_input, rk_revised;
    for (const WorldSet& s : neg) {
        rk_prior.push_back(prior.carrier().rank_of(s));
        rk_input.push_back(input.carrier().rank_of(s));
        rk_revised.push_back(revised.carrier().rank_of(s));
    }

    // (E2*)
    [&] {
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                const bool input_strict = !input.is_absurd() && rk_input[i] < rk_input[j];
                if (input_strict && !(rk_revised[i] < rk_revised[j])) {
                    report.e2_ok = false;
                    report.witnesses.push_back({"E2*", {sample[i], sample[j]}, ""});
                    return;
                }
            }
    }();

    // (E3*)
    if (input.is_absurd()) {
        report.e3_applicable = false;
        return report;
    }
    const std::vector<Rank> prior_world = detail::world_ranks(prior.carrier());
    const std::vector<Rank> input_world = detail::world_ranks(input.carrier());
    const std::uint64_t worlds = std::uint64_t{1} << n;

    // Agreement of prior and input at a comparison level (u_chi, v_chi):
    // every sampled sentence and every single-world sentence must fall on
    // the same side under both relations.
    auto levels_agree = [&](const Rank& u_chi, const Rank& v_chi) {
        const bool prior_absurd = prior.is_absurd();
        for (std::size_t l = 0; l < m; ++l) {
            const bool under_prior = prior_absurd || rk_prior[l] <= u_chi;
            const bool under_input = rk_input[l] <= v_chi;
            if (under_prior != under_input) return false;
        }
        for (std::uint64_t w = 0; w < worlds; ++w) {
            const bool under_prior = prior_absurd || prior_world[w] <= u_chi;
            const bool under_input = input_world[w] <= v_chi;
            if (under_prior != under_input) return false;
        }
        return true;
    };

    [&] {
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                if (!(rk_input[i] == rk_input[j])) continue;  // input must be indifferent

                // Does the condition hold? chi ranges over the sampled
                // sentences entailed by theta & phi that the input ranks
                // strictly above theta, plus the weakest such sentence.
                bool condition = true;
                for (std::size_t c = 0; c < m && condition; ++c) {
                    const bool entailed = neg[c].is_subset_of(neg[i] | neg[j]);
                    const bool above = rk_input[i] < rk_input[c];
                    if (entailed && above && !levels_agree(rk_prior[c], rk_input[c])) condition = false;
                }
                if (condition && !rk_input[i].is_infinite()) {
                    // Weakest candidate: negation worlds of theta or phi
                    // whose input rank exceeds the shared level.
                    WorldSet star = WorldSet::none(n);
                    (neg[i] | neg[j]).for_each([&](World w) {
                        if (rk_input[i] < input_world[w]) star.insert(w);
                    });
                    if (!star.empty()) {
                        const Rank u_star = prior.carrier().rank_of(star);
                        const Rank v_star = input.carrier().rank_of(star);
                        if (!levels_agree(u_star, v_star)) condition = false;
                    }
                }
                if (!condition) continue;

                const bool prior_leq = prior.is_absurd() || rk_prior[i] <= rk_prior[j];
                const bool revised_leq = revised.is_absurd() || rk_revised[i] <= rk_revised[j];
                if (prior_leq != revised_leq) {
                    report.e3_ok = false;
                    report.witnesses.push_back({"E3*", {sample[i], sample[j]}, ""});
                    return;
                }
            }
    }();

    return report;
}

}  // namespace lexrev
