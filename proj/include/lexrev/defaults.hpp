#pragma once

// Default bases, the specificity partition, the lexicographic closure (both
// the direct subset-enumeration form and the revision-chain form), the
// rational closure, and the conjunction-chain comparison between them.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lexrev/entrenchment.hpp"
#include "lexrev/logic.hpp"
#include "lexrev/ranked.hpp"
#include "lexrev/revision.hpp"

namespace lexrev {

// A rule "if premise then normally conclusion"; distinct from the material
// implication premise -> conclusion.
struct Default {
    Formula premise;
    Formula conclusion;

    bool operator==(const Default& other) const {
        return premise == other.premise && conclusion == other.conclusion;
    }
    bool operator!=(const Default& other) const { return !(*this == other); }

    std::string to_string(const Vocabulary& vocab) const {
        return premise.to_string(vocab) + " => " + conclusion.to_string(vocab);
    }
};

inline Formula material(const Default& d) { return implies(d.premise, d.conclusion); }

inline bool contains_default(const std::vector<Default>& set, const Default& d) {
    return std::any_of(set.begin(), set.end(), [&](const Default& e) { return e == d; });
}

class DefaultBase {
public:
    static constexpr int default_max_defaults = 12;

    DefaultBase() = default;

    // Duplicates (by syntactic identity) are dropped at load; two defaults
    // over equivalent but distinct formulas stay distinct.
    explicit DefaultBase(const std::vector<Default>& defaults,
                         int max_defaults = default_max_defaults) {
        for (const Default& d : defaults)
            if (!contains_default(defaults_, d)) defaults_.push_back(d);
        if (static_cast<int>(defaults_.size()) > max_defaults)
            throw std::invalid_argument("default base exceeds the cap (" +
                                        std::to_string(max_defaults) + ")");
    }

    std::size_t size() const { return defaults_.size(); }
    bool empty() const { return defaults_.empty(); }
    const std::vector<Default>& defaults() const { return defaults_; }
    const Default& operator[](std::size_t i) const { return defaults_[i]; }

    std::vector<Formula> materials() const {
        std::vector<Formula> out;
        out.reserve(defaults_.size());
        for (const Default& d : defaults_) out.push_back(material(d));
        return out;
    }

private:
    std::vector<Default> defaults_;
};

class NotPartitionableError : public std::runtime_error {
public:
    explicit NotPartitionableError(const std::string& what) : std::runtime_error(what) {}
};

class InconsistentMaterialsError : public std::runtime_error {
public:
    explicit InconsistentMaterialsError(const std::string& what) : std::runtime_error(what) {}
};

// Specificity strata: each default in stratum i is tolerated by the union
// of strata i and above.
struct ZPartition {
    std::vector<std::vector<Default>> strata;

    std::size_t size() const { return strata.size(); }

    int stratum_of(const Default& d) const {
        for (std::size_t i = 0; i < strata.size(); ++i)
            if (contains_default(strata[i], d)) return static_cast<int>(i);
        return -1;
    }
};

// delta is tolerated by D when delta's premise and conclusion can hold
// jointly with every material counterpart of D.
inline bool tolerates(const std::vector<Default>& context, const Default& delta,
                      const Vocabulary& vocab) {
    WorldSet acc = models(delta.premise, vocab) & models(delta.conclusion, vocab);
    for (const Default& d : context) {
        acc &= models(material(d), vocab);
        if (acc.empty()) return false;
    }
    return !acc.empty();
}

// Greedy construction: stratum i collects the defaults tolerated by the
// remainder, which is then removed. Fails when the materials are jointly
// inconsistent, or when some stage tolerates nothing (possible even for
// consistent materials).
inline ZPartition z_partition(const DefaultBase& base, const Vocabulary& vocab) {
    if (!is_consistent(base.materials(), vocab))
        throw InconsistentMaterialsError("material counterparts are jointly inconsistent");

    ZPartition zp;
    std::vector<Default> remaining = base.defaults();
    while (!remaining.empty()) {
        std::vector<Default> tolerated;
        for (const Default& d : remaining)
            if (tolerates(remaining, d, vocab)) tolerated.push_back(d);
        if (tolerated.empty())
            throw NotPartitionableError("no remaining default is tolerated by the remainder");
        std::vector<Default> rest;
        for (const Default& d : remaining)
            if (!contains_default(tolerated, d)) rest.push_back(d);
        zp.strata.push_back(std::move(tolerated));
        remaining = std::move(rest);
    }
    return zp;
}

namespace detail {

// Per-stratum cardinalities |A cap Delta_i|, the comparison key of the
// lexicographic ordering.
inline std::vector<int> stratum_profile(const std::vector<Default>& subset, const ZPartition& zp) {
    std::vector<int> profile(zp.size(), 0);
    for (const Default& d : subset) {
        const int s = zp.stratum_of(d);
        if (s >= 0) ++profile[static_cast<std::size_t>(s)];
    }
    return profile;
}

// Strict comparison with the most specific stratum as the major key.
inline bool profile_less(const std::vector<int>& a, const std::vector<int>& b) {
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

}  // namespace detail

// A << B: some stratum count of A is smaller while all more specific strata
// tie.
inline bool lex_less(const std::vector<Default>& a, const std::vector<Default>& b,
                     const ZPartition& zp) {
    return detail::profile_less(detail::stratum_profile(a, zp), detail::stratum_profile(b, zp));
}

// A strict partial order on subsets of the base. The consequence family is
// parameterized by such an order; only the lexicographic one ships with a
// closure.
using SubsetOrder = std::function<bool(const std::vector<Default>&, const std::vector<Default>&)>;

// The order-maximal subsets consistent with theta, for an arbitrary strict
// subset order. Slower than the lexicographic fast path; intended for order
// experiments and for cross-checking it.
inline std::vector<std::vector<Default>> maximal_consistent_subsets(const DefaultBase& base,
                                                                    const Formula& theta,
                                                                    const SubsetOrder& less,
                                                                    const Vocabulary& vocab) {
    std::vector<WorldSet> material_models;
    for (const Default& d : base.defaults()) material_models.push_back(models(material(d), vocab));
    const WorldSet s_theta = models(theta, vocab);
    const std::uint32_t limit = std::uint32_t{1} << base.size();

    std::vector<std::uint32_t> consistent;
    for (std::uint32_t mask = 0; mask < limit; ++mask) {
        WorldSet acc = s_theta;
        for (std::size_t i = 0; i < base.size(); ++i)
            if ((mask >> i) & 1) acc &= material_models[i];
        if (!acc.empty()) consistent.push_back(mask);
    }

    auto subset_of = [&](std::uint32_t mask) {
        std::vector<Default> out;
        for (std::size_t i = 0; i < base.size(); ++i)
            if ((mask >> i) & 1) out.push_back(base[i]);
        return out;
    };

    std::vector<std::vector<Default>> out;
    for (std::uint32_t mask : consistent) {
        const std::vector<Default> candidate = subset_of(mask);
        bool dominated = false;
        for (std::uint32_t other : consistent)
            if (other != mask && less(candidate, subset_of(other))) {
                dominated = true;
                break;
            }
        if (!dominated) out.push_back(candidate);
    }
    return out;
}

// Shared machinery for lexicographic-closure queries against one base:
// material model sets and stratum indices are computed once, subset
// enumeration runs over bitmasks.
class LexOracle {
public:
    LexOracle(const DefaultBase& base, const ZPartition& zp, const Vocabulary& vocab)
        : base_(base), zp_(zp) {
        for (const Default& d : base_.defaults()) {
            material_models_.push_back(models(material(d), vocab));
            stratum_.push_back(zp_.stratum_of(d));
        }
    }

    LexOracle(const DefaultBase& base, const Vocabulary& vocab)
        : LexOracle(base, z_partition(base, vocab), vocab) {}

    const ZPartition& partition() const { return zp_; }
    const DefaultBase& base() const { return base_; }

    // All subset masks that are consistent with s_theta and maximal in the
    // lexicographic ordering among such subsets. Empty when s_theta itself
    // is empty.
    std::vector<std::uint32_t> maximal_masks(const WorldSet& s_theta) const {
        const std::size_t k = base_.size();
        const std::uint32_t limit = std::uint32_t{1} << k;
        std::vector<std::uint32_t> best_masks;
        std::vector<int> best_profile;
        for (std::uint32_t mask = 0; mask < limit; ++mask) {
            if (restricted_models(mask, s_theta).empty()) continue;
            std::vector<int> profile = mask_profile(mask);
            if (best_masks.empty() || detail::profile_less(best_profile, profile)) {
                best_profile = std::move(profile);
                best_masks.assign(1, mask);
            } else if (!detail::profile_less(profile, best_profile)) {
                best_masks.push_back(mask);  // tie
            }
        }
        return best_masks;
    }

    std::vector<std::vector<Default>> maximal_bases(const Formula& theta,
                                                    const Vocabulary& vocab) const {
        std::vector<std::vector<Default>> out;
        for (std::uint32_t mask : maximal_masks(models(theta, vocab))) out.push_back(subset(mask));
        return out;
    }

    // theta |~ phi in the lexicographic closure, by direct enumeration:
    // every maximal subset, together with theta, must entail phi.
    bool infers(const WorldSet& s_theta, const WorldSet& s_phi) const {
        for (std::uint32_t mask : maximal_masks(s_theta))
            if (!restricted_models(mask, s_theta).is_subset_of(s_phi)) return false;
        return true;
    }

    bool infers(const Formula& theta, const Formula& phi, const Vocabulary& vocab) const {
        return infers(models(theta, vocab), models(phi, vocab));
    }

    std::vector<Default> subset(std::uint32_t mask) const {
        std::vector<Default> out;
        for (std::size_t i = 0; i < base_.size(); ++i)
            if ((mask >> i) & 1) out.push_back(base_[i]);
        return out;
    }

private:
    WorldSet restricted_models(std::uint32_t mask, const WorldSet& s_theta) const {
        WorldSet acc = s_theta;
        for (std::size_t i = 0; i < base_.size(); ++i)
            if ((mask >> i) & 1) acc &= material_models_[i];
        return acc;
    }

    std::vector<int> mask_profile(std::uint32_t mask) const {
        std::vector<int> profile(zp_.size(), 0);
        for (std::size_t i = 0; i < base_.size(); ++i)
            if ((mask >> i) & 1) ++profile[static_cast<std::size_t>(stratum_[i])];
        return profile;
    }

    DefaultBase base_;
    ZPartition zp_;
    std::vector<WorldSet> material_models_;
    std::vector<int> stratum_;
};

inline std::vector<std::vector<Default>> lex_maximal_bases(const DefaultBase& base,
                                                           const ZPartition& zp,
                                                           const Formula& theta,
                                                           const Vocabulary& vocab) {
    return LexOracle(base, zp, vocab).maximal_bases(theta, vocab);
}

// Ground truth for the whole artifact: the lexicographic closure by
// exhaustive enumeration over subsets of the base.
inline bool lex_infers_direct(const DefaultBase& base, const Formula& theta, const Formula& phi,
                              const Vocabulary& vocab) {
    return LexOracle(base, vocab).infers(theta, phi, vocab);
}

// The revision-chain construction: start from the single-layer sequence and
// revise by the carrier of each stratum's material set, least specific
// first.
inline RankedSequence lex_sequence(const ZPartition& zp, const Vocabulary& vocab) {
    RevisionChain chain(full_sequence(vocab.size()));
    for (const std::vector<Default>& stratum : zp.strata) {
        std::vector<Formula> materials;
        materials.reserve(stratum.size());
        for (const Default& d : stratum) materials.push_back(material(d));
        chain.steps.push_back(entrenchment_from_set(materials, vocab).carrier());
    }
    return evaluate_chain(chain);
}

inline RankedSequence lex_sequence(const DefaultBase& base, const Vocabulary& vocab) {
    return lex_sequence(z_partition(base, vocab), vocab);
}

// Rational closure ranking: a world sits at 0 if it satisfies every
// material, otherwise one past the most specific stratum it violates.
inline RankedSequence rational_closure_sequence(const ZPartition& zp, const Vocabulary& vocab) {
    const int n = vocab.size();
    std::vector<std::vector<WorldSet>> stratum_models(zp.size());
    for (std::size_t s = 0; s < zp.size(); ++s)
        for (const Default& d : zp.strata[s]) stratum_models[s].push_back(models(material(d), vocab));

    std::vector<WorldSet> layers(zp.size() + 1, WorldSet::none(n));
    const std::uint64_t worlds = std::uint64_t{1} << n;
    for (World w = 0; w < worlds; ++w) {
        int highest_violated = -1;
        for (std::size_t s = 0; s < zp.size(); ++s)
            for (const WorldSet& sm : stratum_models[s])
                if (!sm.contains(w)) highest_violated = std::max(highest_violated, static_cast<int>(s));
        layers[static_cast<std::size_t>(highest_violated + 1)].insert(w);
    }
    return RankedSequence(n, std::move(layers)).canonical();
}

inline bool rational_closure_infers(const DefaultBase& base, const Formula& theta,
                                    const Formula& phi, const Vocabulary& vocab) {
    return rational_closure_sequence(z_partition(base, vocab), vocab).infers(theta, phi, vocab);
}

// The inclusion-based strict precedence generated by a sentence set: theta
// strictly precedes phi when E is consistent, theta is no tautology, and
// every subset of E consistent with !phi extends to a strict superset
// consistent with !theta.
inline bool inclusion_strictly_precedes(const std::vector<Formula>& sentences, const Formula& theta,
                                        const Formula& phi, const Vocabulary& vocab) {
    const std::vector<Formula> items = dedup_formulas(sentences);
    if (items.size() > 20) throw std::invalid_argument("sentence set too large to enumerate");
    if (!is_consistent(items, vocab)) return false;
    if (is_tautology(theta, vocab)) return false;

    const WorldSet not_theta = ~models(theta, vocab);
    const WorldSet not_phi = ~models(phi, vocab);
    std::vector<WorldSet> item_models;
    item_models.reserve(items.size());
    for (const Formula& f : items) item_models.push_back(models(f, vocab));

    const std::uint32_t limit = std::uint32_t{1} << items.size();
    auto subset_models = [&](std::uint32_t mask) {
        WorldSet acc = WorldSet::all(vocab.size());
        for (std::size_t i = 0; i < items.size(); ++i)
            if ((mask >> i) & 1) acc &= item_models[i];
        return acc;
    };

    for (std::uint32_t e1 = 0; e1 < limit; ++e1) {
        if (!(subset_models(e1) & not_phi).empty()) {
            bool extended = false;
            for (std::uint32_t e2 = 0; e2 < limit && !extended; ++e2) {
                const bool strict_superset = (e1 & e2) == e1 && e1 != e2;
                if (strict_superset && !(subset_models(e2) & not_theta).empty()) extended = true;
            }
            if (!extended) return false;
        }
    }
    return true;
}

// Conjunction of the given sentences in a fixed canonical order (sorted by
// rendered text), folded left.
inline Formula sorted_conjunction(std::vector<Formula> sentences, const Vocabulary& vocab) {
    if (sentences.empty()) return Formula::verum();
    std::sort(sentences.begin(), sentences.end(), [&](const Formula& a, const Formula& b) {
        return a.to_string(vocab) < b.to_string(vocab);
    });
    Formula acc = sentences.front();
    for (std::size_t i = 1; i < sentences.size(); ++i) acc = std::move(acc) & sentences[i];
    return acc;
}

// Cumulative strata Theta_i = union of strata i and above, for i = 0..n;
// Theta_0 is the whole base.
inline std::vector<std::vector<Default>> cumulative_strata(const ZPartition& zp) {
    std::vector<std::vector<Default>> out(zp.size());
    for (std::size_t i = zp.size(); i-- > 0;) {
        out[i] = zp.strata[i];
        if (i + 1 < zp.size()) out[i].insert(out[i].end(), out[i + 1].begin(), out[i + 1].end());
    }
    return out;
}

inline RankedSequence conjunction_chain_sequence(const ZPartition& zp, const Vocabulary& vocab) {
    RevisionChain chain(full_sequence(vocab.size()));
    for (const std::vector<Default>& theta_i : cumulative_strata(zp)) {
        std::vector<Formula> materials;
        materials.reserve(theta_i.size());
        for (const Default& d : theta_i) materials.push_back(material(d));
        chain.steps.push_back(
            entrenchment_from_set({sorted_conjunction(materials, vocab)}, vocab).carrier());
    }
    return evaluate_chain(chain);
}

inline RankedSequence cumulative_set_chain_sequence(const ZPartition& zp, const Vocabulary& vocab) {
    RevisionChain chain(full_sequence(vocab.size()));
    for (const std::vector<Default>& theta_i : cumulative_strata(zp)) {
        std::vector<Formula> materials;
        materials.reserve(theta_i.size());
        for (const Default& d : theta_i) materials.push_back(material(d));
        chain.steps.push_back(entrenchment_from_set(materials, vocab).carrier());
    }
    return evaluate_chain(chain);
}

struct ConjectureDivergence {
    Formula theta;
    Formula phi;
    bool conjunction_chain_answer;
    bool rational_closure_answer;
};

struct ConjectureReport {
    std::size_t queries = 0;
    std::size_t agreements = 0;
    std::vector<ConjectureDivergence> divergences;
    // Whether the chain over cumulative strata sets equals the chain over
    // the plain strata sets, as entrenchment relations.
    bool cumulative_rewrite_ok = false;

    bool full_agreement() const { return divergences.empty(); }
};

// Compares the consequence relation of the conjunction chain against the
// rational closure on the given queries, and checks the cumulative-set
// rewrite of the stratum chain. Divergences are findings, not failures.
inline ConjectureReport conjecture_check(const DefaultBase& base,
                                         const std::vector<std::pair<Formula, Formula>>& queries,
                                         const Vocabulary& vocab) {
    const ZPartition zp = z_partition(base, vocab);
    ConjectureReport report;

    const RankedSequence conj_seq = conjunction_chain_sequence(zp, vocab);
    const RankedSequence rational_seq = rational_closure_sequence(zp, vocab);
    for (const auto& [theta, phi] : queries) {
        const bool a = conj_seq.infers(theta, phi, vocab);
        const bool b = rational_seq.infers(theta, phi, vocab);
        ++report.queries;
        if (a == b)
            ++report.agreements;
        else
            report.divergences.push_back({theta, phi, a, b});
    }

    const RankedSequence plain = lex_sequence(zp, vocab);
    const RankedSequence cumulative = cumulative_set_chain_sequence(zp, vocab);
    report.cumulative_rewrite_ok =
        EntrenchmentRelation(plain) == EntrenchmentRelation(cumulative);
    return report;
}

}  // namespace lexrev
