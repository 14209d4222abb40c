#pragma once

// Finite propositional language: vocabulary, formula ASTs, world sets and
// classical entailment. Worlds are indices in [0, 2^n); bit i of a world
// index is the truth value of variable i.

#include <algorithm>
#include <bit>
#include <cassert>
#include <cctype>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace lexrev {

using World = std::uint32_t;

class Vocabulary {
public:
    static constexpr int default_max_vars = 16;

    explicit Vocabulary(std::vector<std::string> names, int max_vars = default_max_vars)
        : names_(std::move(names)) {
        if (names_.empty())
            throw std::invalid_argument("vocabulary must contain at least one variable");
        if (static_cast<int>(names_.size()) > max_vars)
            throw std::invalid_argument("vocabulary exceeds the variable cap (" +
                                        std::to_string(max_vars) + ")");
        for (std::size_t i = 0; i < names_.size(); ++i) {
            const std::string& name = names_[i];
            if (!valid_name(name))
                throw std::invalid_argument("invalid variable name '" + name + "'");
            if (!index_.emplace(name, static_cast<int>(i)).second)
                throw std::invalid_argument("duplicate variable name '" + name + "'");
        }
    }

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int i) const { return names_.at(static_cast<std::size_t>(i)); }
    const std::vector<std::string>& names() const { return names_; }

    std::optional<int> index_of(std::string_view name) const {
        auto it = index_.find(std::string(name));
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    std::uint64_t world_count() const { return std::uint64_t{1} << names_.size(); }

    static bool valid_name(std::string_view name) {
        if (name.empty()) return false;
        if (name == "true" || name == "false") return false;
        auto head = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; };
        auto tail = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
        if (!head(name.front())) return false;
        return std::all_of(name.begin() + 1, name.end(), tail);
    }

    bool operator==(const Vocabulary& other) const { return names_ == other.names_; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, int> index_;
};

enum class Connective { Var, Not, And, Or, Implies, Verum, Falsum };

// Immutable formula AST with shared substructure. Equality is structural:
// no normalization is ever applied, because downstream constructions count
// and compare sentences by syntactic form.
class Formula {
    struct Node;

public:
    Formula() = default;  // null handle, only produced internally

    static Formula variable(int index);
    static Formula verum();
    static Formula falsum();
    static Formula negation(Formula f);
    static Formula conjunction(Formula a, Formula b);
    static Formula disjunction(Formula a, Formula b);
    static Formula implication(Formula a, Formula b);

    bool valid() const { return node_ != nullptr; }
    Connective kind() const;
    int var_index() const;
    const Formula& lhs() const;
    const Formula& rhs() const;

    bool operator==(const Formula& other) const;
    bool operator!=(const Formula& other) const { return !(*this == other); }

    // Renders with the minimal parentheses the grammar needs, so that
    // parse_formula(to_string(f)) reproduces f node for node.
    std::string to_string(const Vocabulary& vocab) const {
        std::string out;
        render(vocab, 0, out);
        return out;
    }

private:
    explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    int precedence() const;
    void render(const Vocabulary& vocab, int min_prec, std::string& out) const;

    std::shared_ptr<const Node> node_;
};

struct Formula::Node {
    Connective kind;
    int var;
    Formula left;
    Formula right;
};

inline Formula Formula::variable(int index) {
    if (index < 0) throw std::invalid_argument("negative variable index");
    return Formula(std::make_shared<const Node>(Node{Connective::Var, index, {}, {}}));
}
inline Formula Formula::verum() {
    return Formula(std::make_shared<const Node>(Node{Connective::Verum, -1, {}, {}}));
}
inline Formula Formula::falsum() {
    return Formula(std::make_shared<const Node>(Node{Connective::Falsum, -1, {}, {}}));
}
inline Formula Formula::negation(Formula f) {
    return Formula(std::make_shared<const Node>(Node{Connective::Not, -1, std::move(f), {}}));
}
inline Formula Formula::conjunction(Formula a, Formula b) {
    return Formula(std::make_shared<const Node>(Node{Connective::And, -1, std::move(a), std::move(b)}));
}
inline Formula Formula::disjunction(Formula a, Formula b) {
    return Formula(std::make_shared<const Node>(Node{Connective::Or, -1, std::move(a), std::move(b)}));
}
inline Formula Formula::implication(Formula a, Formula b) {
    return Formula(std::make_shared<const Node>(Node{Connective::Implies, -1, std::move(a), std::move(b)}));
}

inline Connective Formula::kind() const { return node_->kind; }
inline int Formula::var_index() const { return node_->var; }
inline const Formula& Formula::lhs() const { return node_->left; }
inline const Formula& Formula::rhs() const { return node_->right; }

inline bool Formula::operator==(const Formula& other) const {
    if (node_ == other.node_) return true;
    if (!node_ || !other.node_) return false;
    if (node_->kind != other.node_->kind) return false;
    switch (node_->kind) {
        case Connective::Var: return node_->var == other.node_->var;
        case Connective::Verum:
        case Connective::Falsum: return true;
        case Connective::Not: return node_->left == other.node_->left;
        default: return node_->left == other.node_->left && node_->right == other.node_->right;
    }
}

// precedence: -> 1 (right assoc), | 2, & 3, ! 4, atoms 5
inline int Formula::precedence() const {
    switch (node_->kind) {
        case Connective::Implies: return 1;
        case Connective::Or: return 2;
        case Connective::And: return 3;
        case Connective::Not: return 4;
        default: return 5;
    }
}

inline void Formula::render(const Vocabulary& vocab, int min_prec, std::string& out) const {
    const int prec = precedence();
    const bool parens = prec < min_prec;
    if (parens) out += '(';
    switch (node_->kind) {
        case Connective::Var: out += vocab.name(node_->var); break;
        case Connective::Verum: out += "true"; break;
        case Connective::Falsum: out += "false"; break;
        case Connective::Not:
            out += '!';
            node_->left.render(vocab, 4, out);
            break;
        case Connective::And:
            node_->left.render(vocab, 3, out);
            out += " & ";
            node_->right.render(vocab, 4, out);
            break;
        case Connective::Or:
            node_->left.render(vocab, 2, out);
            out += " | ";
            node_->right.render(vocab, 3, out);
            break;
        case Connective::Implies:
            node_->left.render(vocab, 2, out);
            out += " -> ";
            node_->right.render(vocab, 1, out);
            break;
    }
    if (parens) out += ')';
}

inline Formula operator!(Formula f) { return Formula::negation(std::move(f)); }
inline Formula operator&(Formula a, Formula b) { return Formula::conjunction(std::move(a), std::move(b)); }
inline Formula operator|(Formula a, Formula b) { return Formula::disjunction(std::move(a), std::move(b)); }
inline Formula implies(Formula a, Formula b) { return Formula::implication(std::move(a), std::move(b)); }

// Characteristic function over the 2^n worlds of a vocabulary, stored as a
// packed bit vector. All set algebra keeps the unused high bits of the last
// word zero.
class WorldSet {
public:
    explicit WorldSet(int num_vars)
        : num_vars_(num_vars), bits_(word_count(num_vars), 0) {
        if (num_vars < 1 || num_vars > 25)
            throw std::invalid_argument("world set requires 1..25 variables");
    }

    static WorldSet none(int num_vars) { return WorldSet(num_vars); }

    static WorldSet all(int num_vars) {
        WorldSet s(num_vars);
        for (auto& w : s.bits_) w = ~std::uint64_t{0};
        s.mask_tail();
        return s;
    }

    // Worlds whose bit `var` is set.
    static WorldSet variable_mask(int num_vars, int var) {
        WorldSet s(num_vars);
        if (var < 0 || var >= num_vars) throw std::invalid_argument("variable index out of range");
        if (var < 6) {
            std::uint64_t pattern = 0;
            for (int b = 0; b < 64; ++b)
                if ((b >> var) & 1) pattern |= std::uint64_t{1} << b;
            for (auto& w : s.bits_) w = pattern;
        } else {
            for (std::size_t i = 0; i < s.bits_.size(); ++i)
                if ((i >> (var - 6)) & 1) s.bits_[i] = ~std::uint64_t{0};
        }
        s.mask_tail();
        return s;
    }

    int num_vars() const { return num_vars_; }
    std::uint64_t universe_size() const { return std::uint64_t{1} << num_vars_; }

    bool contains(World w) const {
        return (bits_[w >> 6] >> (w & 63)) & 1;
    }
    void insert(World w) {
        assert(w < universe_size());
        bits_[w >> 6] |= std::uint64_t{1} << (w & 63);
    }
    void erase(World w) { bits_[w >> 6] &= ~(std::uint64_t{1} << (w & 63)); }

    bool empty() const {
        return std::all_of(bits_.begin(), bits_.end(), [](std::uint64_t w) { return w == 0; });
    }
    std::uint64_t count() const {
        std::uint64_t n = 0;
        for (auto w : bits_) n += static_cast<std::uint64_t>(std::popcount(w));
        return n;
    }

    bool intersects(const WorldSet& other) const {
        assert(num_vars_ == other.num_vars_);
        for (std::size_t i = 0; i < bits_.size(); ++i)
            if (bits_[i] & other.bits_[i]) return true;
        return false;
    }

    bool is_subset_of(const WorldSet& other) const {
        assert(num_vars_ == other.num_vars_);
        for (std::size_t i = 0; i < bits_.size(); ++i)
            if (bits_[i] & ~other.bits_[i]) return false;
        return true;
    }

    WorldSet operator&(const WorldSet& other) const {
        WorldSet out(*this);
        for (std::size_t i = 0; i < bits_.size(); ++i) out.bits_[i] &= other.bits_[i];
        return out;
    }
    WorldSet operator|(const WorldSet& other) const {
        WorldSet out(*this);
        for (std::size_t i = 0; i < bits_.size(); ++i) out.bits_[i] |= other.bits_[i];
        return out;
    }
    WorldSet operator~() const {
        WorldSet out(*this);
        for (auto& w : out.bits_) w = ~w;
        out.mask_tail();
        return out;
    }
    WorldSet& operator&=(const WorldSet& other) {
        for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] &= other.bits_[i];
        return *this;
    }
    WorldSet& operator|=(const WorldSet& other) {
        for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] |= other.bits_[i];
        return *this;
    }

    bool operator==(const WorldSet& other) const {
        return num_vars_ == other.num_vars_ && bits_ == other.bits_;
    }
    bool operator!=(const WorldSet& other) const { return !(*this == other); }

    std::optional<World> first() const {
        for (std::size_t i = 0; i < bits_.size(); ++i)
            if (bits_[i])
                return static_cast<World>(i * 64 + std::countr_zero(bits_[i]));
        return std::nullopt;
    }

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t i = 0; i < bits_.size(); ++i) {
            std::uint64_t w = bits_[i];
            while (w) {
                const int b = std::countr_zero(w);
                fn(static_cast<World>(i * 64 + b));
                w &= w - 1;
            }
        }
    }

    std::vector<World> worlds() const {
        std::vector<World> out;
        out.reserve(count());
        for_each([&](World w) { out.push_back(w); });
        return out;
    }

private:
    static std::size_t word_count(int num_vars) {
        const std::uint64_t width = std::uint64_t{1} << num_vars;
        return static_cast<std::size_t>((width + 63) / 64);
    }

    void mask_tail() {
        if (num_vars_ < 6) {
            const std::uint64_t width = std::uint64_t{1} << num_vars_;
            bits_[0] &= (std::uint64_t{1} << width) - 1;
        }
    }

    int num_vars_;
    std::vector<std::uint64_t> bits_;
};

// S_phi, by structural recursion on the formula.
inline WorldSet models(const Formula& phi, const Vocabulary& vocab) {
    if (!phi.valid()) throw std::invalid_argument("null formula");
    switch (phi.kind()) {
        case Connective::Verum: return WorldSet::all(vocab.size());
        case Connective::Falsum: return WorldSet::none(vocab.size());
        case Connective::Var:
            if (phi.var_index() >= vocab.size())
                throw std::invalid_argument("variable index out of range for vocabulary");
            return WorldSet::variable_mask(vocab.size(), phi.var_index());
        case Connective::Not: return ~models(phi.lhs(), vocab);
        case Connective::And: return models(phi.lhs(), vocab) & models(phi.rhs(), vocab);
        case Connective::Or: return models(phi.lhs(), vocab) | models(phi.rhs(), vocab);
        case Connective::Implies: return ~models(phi.lhs(), vocab) | models(phi.rhs(), vocab);
    }
    throw std::logic_error("unreachable connective");
}

inline WorldSet models_of_all(const std::vector<Formula>& sentences, const Vocabulary& vocab) {
    WorldSet acc = WorldSet::all(vocab.size());
    for (const Formula& s : sentences) acc &= models(s, vocab);
    return acc;
}

// E |= phi. The empty premise set denotes W.
inline bool entails(const std::vector<Formula>& premises, const Formula& phi, const Vocabulary& vocab) {
    return models_of_all(premises, vocab).is_subset_of(models(phi, vocab));
}

inline bool is_consistent(const std::vector<Formula>& sentences, const Vocabulary& vocab) {
    return !models_of_all(sentences, vocab).empty();
}

inline bool is_tautology(const Formula& phi, const Vocabulary& vocab) {
    return models(phi, vocab) == WorldSet::all(vocab.size());
}

// sent_E(w): the members of E true at w.
inline std::vector<Formula> satisfied_sentences(World w, const std::vector<Formula>& sentences,
                                                const Vocabulary& vocab) {
    std::vector<Formula> out;
    for (const Formula& s : sentences)
        if (models(s, vocab).contains(w)) out.push_back(s);
    return out;
}

inline bool structurally_contains(const std::vector<Formula>& set, const Formula& f) {
    return std::any_of(set.begin(), set.end(), [&](const Formula& g) { return g == f; });
}

// Structural deduplication, preserving first-occurrence order.
inline std::vector<Formula> dedup_formulas(const std::vector<Formula>& in) {
    std::vector<Formula> out;
    for (const Formula& f : in)
        if (!structurally_contains(out, f)) out.push_back(f);
    return out;
}

// Conjunction of the literals describing world w, e.g. world 5 over {b,f,p}
// becomes b & !f & p.
inline Formula formula_for_world(World w, const Vocabulary& vocab) {
    Formula acc;
    for (int i = 0; i < vocab.size(); ++i) {
        Formula lit = ((w >> i) & 1) ? Formula::variable(i) : !Formula::variable(i);
        acc = acc.valid() ? std::move(acc) & std::move(lit) : std::move(lit);
    }
    return acc;
}

// Disjunction of world descriptions; the empty set renders as falsum. The
// disjunction tree is balanced so wide sets stay shallow.
inline Formula formula_for_worldset(const WorldSet& s, const Vocabulary& vocab) {
    std::vector<Formula> parts;
    s.for_each([&](World w) { parts.push_back(formula_for_world(w, vocab)); });
    if (parts.empty()) return Formula::falsum();
    while (parts.size() > 1) {
        std::vector<Formula> next;
        next.reserve(parts.size() / 2 + 1);
        for (std::size_t i = 0; i + 1 < parts.size(); i += 2)
            next.push_back(parts[i] | parts[i + 1]);
        if (parts.size() % 2) next.push_back(parts.back());
        parts = std::move(next);
    }
    return parts.front();
}

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

namespace detail {

struct Token {
    enum class Type { LParen, RParen, Bang, Amp, Pipe, Arrow, True, False, Ident, End };
    Type type;
    std::size_t pos;
    std::string text;
};

inline std::vector<Token> lex_formula(std::string_view text) {
    std::vector<Token> out;
    std::size_t i = 0;
    auto is_ident_head = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; };
    auto is_ident_tail = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
    while (i < text.size()) {
        const char c = text[i];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') { ++i; continue; }
        if (c == '(') { out.push_back({Token::Type::LParen, i, "("}); ++i; continue; }
        if (c == ')') { out.push_back({Token::Type::RParen, i, ")"}); ++i; continue; }
        if (c == '!') { out.push_back({Token::Type::Bang, i, "!"}); ++i; continue; }
        if (c == '&') { out.push_back({Token::Type::Amp, i, "&"}); ++i; continue; }
        if (c == '|') { out.push_back({Token::Type::Pipe, i, "|"}); ++i; continue; }
        if (c == '-') {
            if (i + 1 < text.size() && text[i + 1] == '>') {
                out.push_back({Token::Type::Arrow, i, "->"});
                i += 2;
                continue;
            }
            throw ParseError("syntax error at position " + std::to_string(i) + ": expected '->'", i);
        }
        if (is_ident_head(c)) {
            std::size_t j = i + 1;
            while (j < text.size() && is_ident_tail(text[j])) ++j;
            std::string word(text.substr(i, j - i));
            if (word == "true")
                out.push_back({Token::Type::True, i, std::move(word)});
            else if (word == "false")
                out.push_back({Token::Type::False, i, std::move(word)});
            else
                out.push_back({Token::Type::Ident, i, std::move(word)});
            i = j;
            continue;
        }
        throw ParseError("syntax error at position " + std::to_string(i) + ": unexpected character '" +
                             std::string(1, c) + "'",
                         i);
    }
    out.push_back({Token::Type::End, text.size(), ""});
    return out;
}

// Recursive descent over:  implies := or ('->' implies)?   (right assoc)
//                          or      := and ('|' and)*
//                          and     := unary ('&' unary)*
//                          unary   := '!' unary | atom
// Nesting is capped so hostile inputs cannot exhaust the stack.
class FormulaParser {
public:
    static constexpr int max_depth = 1000;

    FormulaParser(std::vector<Token> tokens, const Vocabulary& vocab)
        : tokens_(std::move(tokens)), vocab_(vocab) {}

    Formula parse_full() {
        Formula f = parse_implies();
        if (peek().type != Token::Type::End)
            throw ParseError("syntax error at position " + std::to_string(peek().pos) +
                                 ": unexpected trailing input",
                             peek().pos);
        return f;
    }

private:
    const Token& peek() const { return tokens_[cursor_]; }
    const Token& advance() { return tokens_[cursor_++]; }

    struct DepthGuard {
        explicit DepthGuard(FormulaParser& parser) : parser_(parser) {
            if (++parser_.depth_ > max_depth)
                throw ParseError("syntax error at position " + std::to_string(parser_.peek().pos) +
                                     ": formula nesting too deep",
                                 parser_.peek().pos);
        }
        ~DepthGuard() { --parser_.depth_; }
        FormulaParser& parser_;
    };

    Formula parse_implies() {
        DepthGuard guard(*this);
        Formula lhs = parse_or();
        if (peek().type == Token::Type::Arrow) {
            advance();
            return implies(std::move(lhs), parse_implies());
        }
        return lhs;
    }

    Formula parse_or() {
        Formula acc = parse_and();
        while (peek().type == Token::Type::Pipe) {
            advance();
            acc = std::move(acc) | parse_and();
        }
        return acc;
    }

    Formula parse_and() {
        Formula acc = parse_unary();
        while (peek().type == Token::Type::Amp) {
            advance();
            acc = std::move(acc) & parse_unary();
        }
        return acc;
    }

    Formula parse_unary() {
        DepthGuard guard(*this);
        if (peek().type == Token::Type::Bang) {
            advance();
            return !parse_unary();
        }
        return parse_atom();
    }

    Formula parse_atom() {
        const Token& t = peek();
        switch (t.type) {
            case Token::Type::True: advance(); return Formula::verum();
            case Token::Type::False: advance(); return Formula::falsum();
            case Token::Type::Ident: {
                auto idx = vocab_.index_of(t.text);
                if (!idx)
                    throw ParseError("unknown variable '" + t.text + "' at position " +
                                         std::to_string(t.pos),
                                     t.pos);
                advance();
                return Formula::variable(*idx);
            }
            case Token::Type::LParen: {
                advance();
                Formula inner = parse_implies();
                if (peek().type != Token::Type::RParen)
                    throw ParseError("syntax error at position " + std::to_string(peek().pos) +
                                         ": expected ')'",
                                     peek().pos);
                advance();
                return inner;
            }
            default:
                throw ParseError("syntax error at position " + std::to_string(t.pos) +
                                     ": expected a formula",
                                 t.pos);
        }
    }

    std::vector<Token> tokens_;
    const Vocabulary& vocab_;
    std::size_t cursor_ = 0;
    int depth_ = 0;
};

}  // namespace detail

// Grammar: ! binds tighter than &, & tighter than |, | tighter than the
// right-associative ->; atoms are true, false, variable names, (formula).
inline Formula parse_formula(std::string_view text, const Vocabulary& vocab) {
    detail::FormulaParser parser(detail::lex_formula(text), vocab);
    return parser.parse_full();
}

}  // namespace lexrev
