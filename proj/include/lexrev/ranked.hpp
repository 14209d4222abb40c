#pragma once

// Ranked sequences: ordered lists of mutually disjoint world sets, the rank
// function they induce on formulas, and the rational consequence relation
// read off those ranks. Worlds outside every layer count as impossible.

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lexrev/logic.hpp"

namespace lexrev {

// A layer index or the distinguished infinite rank. Infinity compares
// strictly above every finite rank and equals itself.
class Rank {
public:
    static Rank finite(std::uint32_t value) { return Rank(value); }
    static Rank infinite() { return Rank(std::nullopt); }

    bool is_infinite() const { return !value_.has_value(); }
    std::uint32_t value() const {
        if (!value_) throw std::logic_error("infinite rank has no finite value");
        return *value_;
    }

    friend bool operator==(const Rank& a, const Rank& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Rank& a, const Rank& b) { return !(a == b); }
    friend bool operator<(const Rank& a, const Rank& b) {
        if (a.is_infinite()) return false;
        if (b.is_infinite()) return true;
        return *a.value_ < *b.value_;
    }
    friend bool operator<=(const Rank& a, const Rank& b) { return a == b || a < b; }
    friend bool operator>(const Rank& a, const Rank& b) { return b < a; }
    friend bool operator>=(const Rank& a, const Rank& b) { return b <= a; }

    std::string to_string() const { return value_ ? std::to_string(*value_) : "inf"; }

private:
    explicit Rank(std::optional<std::uint32_t> v) : value_(v) {}
    std::optional<std::uint32_t> value_;
};

enum class Coverage { Full, Empty, Partial };

class RankedSequence {
public:
    // The canonical empty sequence over a vocabulary width.
    explicit RankedSequence(int num_vars) : num_vars_(num_vars) {
        if (num_vars < 1) throw std::invalid_argument("ranked sequence requires at least one variable");
    }

    RankedSequence(int num_vars, std::vector<WorldSet> layers)
        : num_vars_(num_vars), layers_(std::move(layers)) {
        if (num_vars < 1) throw std::invalid_argument("ranked sequence requires at least one variable");
        WorldSet seen = WorldSet::none(num_vars_);
        for (const WorldSet& layer : layers_) {
            if (layer.num_vars() != num_vars_)
                throw std::invalid_argument("layer width does not match the sequence vocabulary");
            if (seen.intersects(layer))
                throw std::invalid_argument("ranked sequence layers must be pairwise disjoint");
            seen |= layer;
        }
    }

    int num_vars() const { return num_vars_; }
    const std::vector<WorldSet>& layers() const { return layers_; }
    std::size_t layer_count() const { return layers_.size(); }

    WorldSet covered() const {
        WorldSet acc = WorldSet::none(num_vars_);
        for (const WorldSet& layer : layers_) acc |= layer;
        return acc;
    }

    Coverage classify() const {
        const WorldSet u = covered();
        if (u.empty()) return Coverage::Empty;
        if (u == WorldSet::all(num_vars_)) return Coverage::Full;
        return Coverage::Partial;
    }

    bool is_full() const { return classify() == Coverage::Full; }
    bool is_empty() const { return covered().empty(); }
    bool in_upsilon() const { return classify() != Coverage::Partial; }

    // Drops empty layers, preserving order. Absolute rank values shift, but
    // the induced consequence relation does not.
    RankedSequence canonical() const {
        std::vector<WorldSet> kept;
        kept.reserve(layers_.size());
        for (const WorldSet& layer : layers_)
            if (!layer.empty()) kept.push_back(layer);
        return RankedSequence(num_vars_, std::move(kept));
    }

    // Least layer index meeting the given set of worlds.
    Rank rank_of(const WorldSet& s) const {
        for (std::size_t i = 0; i < layers_.size(); ++i)
            if (layers_[i].intersects(s)) return Rank::finite(static_cast<std::uint32_t>(i));
        return Rank::infinite();
    }

    Rank rank_of(const Formula& theta, const Vocabulary& vocab) const {
        return rank_of(models(theta, vocab));
    }

    // theta |~ phi: rank(theta) < rank(theta & !phi), or rank(theta) = inf.
    // The first clause covers rank(theta & !phi) = inf with rank(theta)
    // finite, since every finite rank compares below infinity.
    bool infers(const WorldSet& s_theta, const WorldSet& s_phi) const {
        const Rank rt = rank_of(s_theta);
        if (rt.is_infinite()) return true;
        return rt < rank_of(s_theta & ~s_phi);
    }

    bool infers(const Formula& theta, const Formula& phi, const Vocabulary& vocab) const {
        return infers(models(theta, vocab), models(phi, vocab));
    }

    bool operator==(const RankedSequence& other) const {
        return num_vars_ == other.num_vars_ && layers_ == other.layers_;
    }
    bool operator!=(const RankedSequence& other) const { return !(*this == other); }

private:
    int num_vars_;
    std::vector<WorldSet> layers_;
};

inline RankedSequence full_sequence(int num_vars) {
    return RankedSequence(num_vars, {WorldSet::all(num_vars)});
}

// Same consequence relation, decided on canonical forms. Defined on full or
// empty sequences only.
inline bool equivalent(const RankedSequence& u, const RankedSequence& v) {
    if (!u.in_upsilon() || !v.in_upsilon())
        throw std::invalid_argument("equivalence is defined on full or empty sequences only");
    return u.canonical() == v.canonical();
}

inline bool is_consistency_preserving(const RankedSequence& u) {
    return u.classify() == Coverage::Full;
}

}  // namespace lexrev
