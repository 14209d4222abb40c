#pragma once

// Epistemic entrenchment relations, represented by a canonical carrier
// sequence that is either full or empty. The relation compares sentences by
// the rank of their negations; the empty carrier yields the absurd relation
// in which every sentence is as entrenched as every other.

#include <concepts>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lexrev/logic.hpp"
#include "lexrev/ranked.hpp"

namespace lexrev {

class EntrenchmentRelation {
public:
    // Builds the relation induced by a full or empty sequence; rejects
    // partial sequences. The carrier is stored canonicalized, so relation
    // equality is carrier equality.
    explicit EntrenchmentRelation(const RankedSequence& u) : carrier_(u.canonical()) {
        if (u.classify() == Coverage::Partial)
            throw std::invalid_argument("entrenchment carrier must be full or empty");
    }

    // The initial state: every world equally plausible, only tautologies
    // believed.
    static EntrenchmentRelation initial(int num_vars) {
        return EntrenchmentRelation(full_sequence(num_vars));
    }

    static EntrenchmentRelation absurd(int num_vars) {
        return EntrenchmentRelation(RankedSequence(num_vars));
    }

    const RankedSequence& carrier() const { return carrier_; }
    int num_vars() const { return carrier_.num_vars(); }
    bool is_absurd() const { return carrier_.layer_count() == 0; }

    Rank negation_rank(const Formula& theta, const Vocabulary& vocab) const {
        return carrier_.rank_of(~models(theta, vocab));
    }

    // theta is at most as entrenched as phi. Equivalent to the consequence
    // reading "not(!theta | !phi |~ theta) or !phi |~ falsum" over the
    // carrier; on an empty carrier every pair is related.
    bool leq(const Formula& theta, const Formula& phi, const Vocabulary& vocab) const {
        if (is_absurd()) return true;
        return negation_rank(theta, vocab) <= negation_rank(phi, vocab);
    }

    bool less(const Formula& theta, const Formula& phi, const Vocabulary& vocab) const {
        return leq(theta, phi, vocab) && !leq(phi, theta, vocab);
    }

    // theta is in Bel: everything for the absurd relation, otherwise the
    // sentences true throughout the most plausible layer.
    bool believes(const Formula& theta, const Vocabulary& vocab) const {
        if (is_absurd()) return true;
        return carrier_.layers().front().is_subset_of(models(theta, vocab));
    }

    WorldSet belief_worlds() const {
        if (is_absurd()) return WorldSet::none(carrier_.num_vars());
        return carrier_.layers().front();
    }

    // The consequence relation read off the entrenchment ordering itself:
    // theta |~ phi iff !theta < !theta | phi, or true <= !theta.
    bool consequence(const Formula& theta, const Formula& phi, const Vocabulary& vocab) const {
        const Formula not_theta = !theta;
        return less(not_theta, not_theta | phi, vocab) || leq(Formula::verum(), not_theta, vocab);
    }

    bool operator==(const EntrenchmentRelation& other) const { return carrier_ == other.carrier_; }
    bool operator!=(const EntrenchmentRelation& other) const { return !(*this == other); }

private:
    RankedSequence carrier_;
};

inline EntrenchmentRelation entrenchment_from_sequence(const RankedSequence& u) {
    return EntrenchmentRelation(u);
}

// The relation generated from a finite sentence set: layer i of the carrier
// holds the worlds satisfying exactly |E| - i members of E, counting
// sentences by syntactic identity. An inconsistent set yields the absurd
// relation.
inline EntrenchmentRelation entrenchment_from_set(const std::vector<Formula>& sentences,
                                                  const Vocabulary& vocab) {
    const std::vector<Formula> items = dedup_formulas(sentences);
    const int n = vocab.size();
    if (!is_consistent(items, vocab)) return EntrenchmentRelation::absurd(n);

    const std::size_t k = items.size();
    std::vector<WorldSet> sets;
    sets.reserve(k);
    for (const Formula& f : items) sets.push_back(models(f, vocab));

    std::vector<std::uint32_t> satisfied(static_cast<std::size_t>(WorldSet::all(n).universe_size()), 0);
    for (const WorldSet& s : sets)
        s.for_each([&](World w) { ++satisfied[w]; });

    std::vector<WorldSet> layers(k + 1, WorldSet::none(n));
    for (World w = 0; w < satisfied.size(); ++w)
        layers[k - satisfied[w]].insert(w);
    return EntrenchmentRelation(RankedSequence(n, std::move(layers)));
}

struct EAxiomIssue {
    std::string axiom;
    std::vector<Formula> witness;
};

struct EAxiomReport {
    std::vector<EAxiomIssue> issues;
    bool ok() const { return issues.empty(); }

    std::string summary(const Vocabulary& vocab) const {
        if (ok()) return "all axioms hold on the sample";
        std::string out;
        for (const EAxiomIssue& issue : issues) {
            if (!out.empty()) out += "; ";
            out += issue.axiom + " fails at";
            for (const Formula& f : issue.witness) out += " [" + f.to_string(vocab) + "]";
        }
        return out;
    }
};

// Checks (E1) transitivity, (E2) dominance, (E3) conjunctiveness and (E4)
// maximality of an arbitrary binary relation over a finite sample. The
// sample is extended with verum and falsum if missing; the first witness
// per axiom is reported.
template <typename LeqFn>
    requires std::invocable<LeqFn&, const Formula&, const Formula&>
EAxiomReport check_e_axioms(LeqFn&& leq, std::vector<Formula> sample, const Vocabulary& vocab) {
    if (!structurally_contains(sample, Formula::verum())) sample.push_back(Formula::verum());
    if (!structurally_contains(sample, Formula::falsum())) sample.push_back(Formula::falsum());
    const std::size_t m = sample.size();
    EAxiomReport report;

    // (E1) transitivity
    [&] {
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b) {
                if (!leq(sample[a], sample[b])) continue;
                for (std::size_t c = 0; c < m; ++c)
                    if (leq(sample[b], sample[c]) && !leq(sample[a], sample[c])) {
                        report.issues.push_back({"E1", {sample[a], sample[b], sample[c]}});
                        return;
                    }
            }
    }();

    // (E2) dominance
    [&] {
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b)
                if (entails({sample[a]}, sample[b], vocab) && !leq(sample[a], sample[b])) {
                    report.issues.push_back({"E2", {sample[a], sample[b]}});
                    return;
                }
    }();

    // (E3) conjunctiveness
    [&] {
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b) {
                const Formula both = sample[a] & sample[b];
                if (!leq(sample[a], both) && !leq(sample[b], both)) {
                    report.issues.push_back({"E3", {sample[a], sample[b]}});
                    return;
                }
            }
    }();

    // (E4) maximality, applicable only when something is strictly above
    // falsum
    [&] {
        const Formula bottom = Formula::falsum();
        auto strictly = [&](const Formula& x, const Formula& y) { return leq(x, y) && !leq(y, x); };
        bool non_absurd = false;
        for (std::size_t a = 0; a < m && !non_absurd; ++a)
            if (strictly(bottom, sample[a])) non_absurd = true;
        if (!non_absurd) return;
        for (std::size_t b = 0; b < m; ++b) {
            bool below_all = true;
            for (std::size_t a = 0; a < m && below_all; ++a)
                if (!leq(sample[a], sample[b])) below_all = false;
            if (below_all && !is_tautology(sample[b], vocab)) {
                report.issues.push_back({"E4", {sample[b]}});
                return;
            }
        }
    }();

    return report;
}

inline EAxiomReport check_e_axioms(const EntrenchmentRelation& relation,
                                   const std::vector<Formula>& sample, const Vocabulary& vocab) {
    return check_e_axioms(
        [&](const Formula& a, const Formula& b) { return relation.leq(a, b, vocab); }, sample, vocab);
}

}  // namespace lexrev
