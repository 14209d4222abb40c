#pragma once

// Line-oriented revision sessions. A script declares its vocabulary, then
// revises and queries an entrenchment state that starts at the initial
// relation:
//
//   vars: b, f, p
//   revise {b -> f}
//   revise {p -> b; p -> !f}
//   query p |~ !f
//   show beliefs
//   show ranking
//   show entrench p f
//
// Output is deterministic; every query prints YES or NO.

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lexrev/entrenchment.hpp"
#include "lexrev/kb.hpp"
#include "lexrev/logic.hpp"
#include "lexrev/render.hpp"
#include "lexrev/revision.hpp"

namespace lexrev {

class SessionError : public std::runtime_error {
public:
    SessionError(const std::string& what, std::size_t line)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

struct SessionDirective {
    std::size_t line;
    std::string text;
};

// Session state: the vocabulary, the current relation, and the executed
// directives in order.
class Session {
public:
    explicit Session(Vocabulary vocab)
        : vocab_(std::move(vocab)), current_(EntrenchmentRelation::initial(vocab_.size())) {}

    const Vocabulary& vocab() const { return vocab_; }
    const EntrenchmentRelation& current() const { return current_; }
    const std::vector<SessionDirective>& transcript() const { return transcript_; }

    void revise_by(const std::vector<Formula>& sentences, const SessionDirective& directive) {
        current_ = revise_by_set(current_, sentences, vocab_);
        transcript_.push_back(directive);
    }

    bool query(const Formula& theta, const Formula& phi, const SessionDirective& directive) {
        transcript_.push_back(directive);
        return current_.carrier().infers(theta, phi, vocab_);
    }

    void record(const SessionDirective& directive) { transcript_.push_back(directive); }

private:
    Vocabulary vocab_;
    EntrenchmentRelation current_;
    std::vector<SessionDirective> transcript_;
};

namespace detail {

// Splits a directive tail holding exactly two formulas. The split point is
// the unique position where both halves parse; adjacent whitespace splits
// that yield the same pair count once.
inline std::pair<Formula, Formula> split_two_formulas(std::string_view text,
                                                      const Vocabulary& vocab, std::size_t line) {
    std::optional<std::pair<Formula, Formula>> found;
    const std::size_t semi = text.find(';');
    if (semi != std::string_view::npos) {
        try {
            return {parse_formula(trim(text.substr(0, semi)), vocab),
                    parse_formula(trim(text.substr(semi + 1)), vocab)};
        } catch (const ParseError& e) {
            throw SessionError(e.what(), line);
        }
    }
    for (std::size_t cut = 1; cut < text.size(); ++cut) {
        Formula a, b;
        try {
            a = parse_formula(text.substr(0, cut), vocab);
            b = parse_formula(text.substr(cut), vocab);
        } catch (const ParseError&) {
            continue;
        }
        if (found && !(found->first == a && found->second == b))
            throw SessionError("ambiguous formula pair; separate the formulas with ';'", line);
        if (!found) found.emplace(std::move(a), std::move(b));
    }
    if (!found) throw SessionError("expected two formulas", line);
    return *found;
}

}  // namespace detail

// Executes a session script against a fresh session, streaming the
// transcript output. Throws SessionError with the offending line number on
// malformed input.
inline void run_session_script(std::string_view text, std::ostream& out,
                               const KbLimits& limits = {}) {
    std::optional<Session> session;

    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(start, end - start);
        const bool last = end == text.size();
        start = end + 1;
        ++line_no;

        std::string_view line = detail::trim(raw);
        if (line.empty() || line.front() == '#') {
            if (last) break;
            continue;
        }

        if (line.rfind("vars:", 0) == 0) {
            if (session) throw SessionError("duplicate vars declaration", line_no);
            try {
                session.emplace(Vocabulary(detail::split_on(line.substr(5), ','), limits.max_vars));
            } catch (const std::invalid_argument& e) {
                throw SessionError(e.what(), line_no);
            }
        } else if (line.rfind("revise", 0) == 0) {
            if (!session) throw SessionError("directive before vars declaration", line_no);
            std::string_view body = detail::trim(line.substr(6));
            if (body.size() < 2 || body.front() != '{' || body.back() != '}')
                throw SessionError("expected revise {formula; formula; ...}", line_no);
            std::vector<Formula> sentences;
            std::string_view inner = detail::trim(body.substr(1, body.size() - 2));
            if (!inner.empty()) {
                for (const std::string& part : detail::split_on(inner, ';')) {
                    if (part.empty()) throw SessionError("empty formula in revise set", line_no);
                    try {
                        sentences.push_back(parse_formula(part, session->vocab()));
                    } catch (const ParseError& e) {
                        throw SessionError(e.what(), line_no);
                    }
                }
            }
            session->revise_by(sentences, {line_no, std::string(line)});
        } else if (line.rfind("query", 0) == 0) {
            if (!session) throw SessionError("directive before vars declaration", line_no);
            std::string_view body = detail::trim(line.substr(5));
            const std::size_t sep = body.find("|~");
            if (sep == std::string_view::npos)
                throw SessionError("expected query theta |~ phi", line_no);
            Formula theta, phi;
            try {
                theta = parse_formula(detail::trim(body.substr(0, sep)), session->vocab());
                phi = parse_formula(detail::trim(body.substr(sep + 2)), session->vocab());
            } catch (const ParseError& e) {
                throw SessionError(e.what(), line_no);
            }
            out << (session->query(theta, phi, {line_no, std::string(line)}) ? "YES" : "NO") << "\n";
        } else if (line == "show beliefs") {
            if (!session) throw SessionError("directive before vars declaration", line_no);
            session->record({line_no, std::string(line)});
            const EntrenchmentRelation& r = session->current();
            if (r.is_absurd()) {
                out << "Bel = L (absurd)\n";
            } else {
                out << "Bel = Cn("
                    << formula_for_worldset(r.belief_worlds(), session->vocab())
                           .to_string(session->vocab())
                    << ")\n";
            }
        } else if (line == "show ranking") {
            if (!session) throw SessionError("directive before vars declaration", line_no);
            session->record({line_no, std::string(line)});
            out << sequence_to_string(session->current().carrier(), session->vocab()) << "\n";
        } else if (line.rfind("show entrench", 0) == 0) {
            if (!session) throw SessionError("directive before vars declaration", line_no);
            session->record({line_no, std::string(line)});
            auto [theta, phi] =
                detail::split_two_formulas(detail::trim(line.substr(13)), session->vocab(), line_no);
            const bool le = session->current().leq(theta, phi, session->vocab());
            const bool ge = session->current().leq(phi, theta, session->vocab());
            const char* rel = le && ge ? "~" : (le ? "<" : ">");
            out << theta.to_string(session->vocab()) << " " << rel << " "
                << phi.to_string(session->vocab()) << "\n";
        } else {
            throw SessionError("unrecognized directive", line_no);
        }
        if (last) break;
    }

    if (!session) throw SessionError("missing vars declaration", line_no == 0 ? 1 : line_no);
}

}  // namespace lexrev
