#pragma once

// Knowledge-base file format:
//
//   vars: b, f, p
//   default: b => f
//   default: p => b
//   default: p => !f
//
// Lines starting with '#' are comments; formulas follow the usual grammar.

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lexrev/defaults.hpp"
#include "lexrev/logic.hpp"

namespace lexrev {

class KbError : public std::runtime_error {
public:
    KbError(const std::string& what, std::size_t line)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

struct KbLimits {
    int max_vars = Vocabulary::default_max_vars;
    int max_defaults = DefaultBase::default_max_defaults;
};

struct KnowledgeBase {
    Vocabulary vocab;
    DefaultBase base;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

inline std::vector<std::string> split_on(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.emplace_back(trim(s.substr(start, i - start)));
            start = i + 1;
        }
    }
    return out;
}

}  // namespace detail

inline KnowledgeBase parse_kb(std::string_view text, const KbLimits& limits = {}) {
    std::optional<Vocabulary> vocab;
    std::vector<Default> defaults;

    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(start, end - start);
        start = end + 1;
        ++line_no;

        std::string_view line = detail::trim(raw);
        if (line.empty() || line.front() == '#') {
            if (start > text.size()) break;
            continue;
        }

        if (line.rfind("vars:", 0) == 0) {
            if (vocab) throw KbError("duplicate vars declaration", line_no);
            std::vector<std::string> names = detail::split_on(line.substr(5), ',');
            try {
                vocab.emplace(std::move(names), limits.max_vars);
            } catch (const std::invalid_argument& e) {
                throw KbError(e.what(), line_no);
            }
        } else if (line.rfind("default:", 0) == 0) {
            if (!vocab) throw KbError("default before vars declaration", line_no);
            std::string_view body = detail::trim(line.substr(8));
            const std::size_t arrow = body.find("=>");
            if (arrow == std::string_view::npos)
                throw KbError("expected 'premise => conclusion'", line_no);
            try {
                Default d{parse_formula(detail::trim(body.substr(0, arrow)), *vocab),
                          parse_formula(detail::trim(body.substr(arrow + 2)), *vocab)};
                if (!contains_default(defaults, d)) defaults.push_back(d);
            } catch (const ParseError& e) {
                throw KbError(e.what(), line_no);
            }
        } else {
            throw KbError("unrecognized directive", line_no);
        }
        if (start > text.size()) break;
    }

    if (!vocab) throw KbError("missing vars declaration", line_no == 0 ? 1 : line_no);
    try {
        return KnowledgeBase{*vocab, DefaultBase(defaults, limits.max_defaults)};
    } catch (const std::invalid_argument& e) {
        throw KbError(e.what(), line_no);
    }
}

inline KnowledgeBase load_kb(const std::string& path, const KbLimits& limits = {}) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open knowledge base '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_kb(buf.str(), limits);
}

}  // namespace lexrev
