#pragma once

// Textual rendering of worlds, sequences and entrenchment relations, shared
// by the CLI and the session transcripts. Worlds print as variable
// assignments in vocabulary order with negated literals prefixed by the
// negation sign; world lists are sorted by index.

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lexrev/entrenchment.hpp"
#include "lexrev/logic.hpp"
#include "lexrev/ranked.hpp"

namespace lexrev {

inline std::string world_to_string(World w, const Vocabulary& vocab) {
    std::string out;
    for (int i = 0; i < vocab.size(); ++i) {
        if (!out.empty()) out += ' ';
        if (!((w >> i) & 1)) out += "¬";
        out += vocab.name(i);
    }
    return out;
}

inline std::string worldset_to_string(const WorldSet& s, const Vocabulary& vocab) {
    std::string out = "{";
    bool first = true;
    s.for_each([&](World w) {
        if (!first) out += ", ";
        out += world_to_string(w, vocab);
        first = false;
    });
    out += "}";
    return out;
}

// [{...} ; {...} ; ...]; the empty sequence renders as [].
inline std::string sequence_to_string(const RankedSequence& u, const Vocabulary& vocab) {
    std::string out = "[";
    for (std::size_t i = 0; i < u.layer_count(); ++i) {
        if (i > 0) out += " ; ";
        out += worldset_to_string(u.layers()[i], vocab);
    }
    out += "]";
    return out;
}

// The carrier plus the induced total preorder on the given formulas, least
// entrenched first; sentences of equal entrenchment are grouped with "~",
// groups are separated by "<".
inline std::string entrenchment_to_string(const EntrenchmentRelation& relation,
                                          const std::vector<Formula>& formulas,
                                          const Vocabulary& vocab) {
    std::string out = "carrier " + sequence_to_string(relation.carrier(), vocab);
    if (formulas.empty()) return out;
    if (relation.is_absurd()) {
        out += "\norder: ";
        for (std::size_t i = 0; i < formulas.size(); ++i) {
            if (i > 0) out += " ~ ";
            out += formulas[i].to_string(vocab);
        }
        out += " (absurd)";
        return out;
    }

    // Group by the rank of the negation; infinite rank sorts last.
    std::map<std::pair<bool, std::uint32_t>, std::vector<std::string>> groups;
    for (const Formula& f : formulas) {
        const Rank r = relation.negation_rank(f, vocab);
        const std::pair<bool, std::uint32_t> key{r.is_infinite(), r.is_infinite() ? 0 : r.value()};
        groups[key].push_back(f.to_string(vocab));
    }
    out += "\norder: ";
    bool first_group = true;
    for (const auto& [key, texts] : groups) {
        if (!first_group) out += " < ";
        for (std::size_t i = 0; i < texts.size(); ++i) {
            if (i > 0) out += " ~ ";
            out += texts[i];
        }
        first_group = false;
    }
    return out;
}

}  // namespace lexrev
