#pragma once

// Command implementations behind the CLI verbs. Each command writes its
// report to the given streams and returns the process exit status: 0 for
// YES/success, 1 for NO/suite failure, 2 for errors.

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "lexrev/defaults.hpp"
#include "lexrev/kb.hpp"
#include "lexrev/logic.hpp"
#include "lexrev/render.hpp"
#include "lexrev/session.hpp"
#include "lexrev/verify.hpp"

namespace lexrev {

enum class QueryEngine { LexDirect, LexRevision, Rational };

inline std::optional<QueryEngine> parse_engine(std::string_view name) {
    if (name == "lex-direct") return QueryEngine::LexDirect;
    if (name == "lex-revision") return QueryEngine::LexRevision;
    if (name == "rational") return QueryEngine::Rational;
    return std::nullopt;
}

inline std::string defaults_line(const std::vector<Default>& defaults, const Vocabulary& vocab) {
    std::string out;
    for (std::size_t i = 0; i < defaults.size(); ++i) {
        if (i > 0) out += ", ";
        out += defaults[i].to_string(vocab);
    }
    return out;
}

inline int cmd_partition(const std::string& kb_path, const KbLimits& limits, std::ostream& out,
                         std::ostream& err) {
    try {
        const KnowledgeBase kb = load_kb(kb_path, limits);
        const ZPartition zp = z_partition(kb.base, kb.vocab);
        if (zp.strata.empty()) {
            out << "(empty partition)\n";
            return 0;
        }
        for (std::size_t i = 0; i < zp.strata.size(); ++i)
            out << "Δ" << i << ": " << defaults_line(zp.strata[i], kb.vocab) << "\n";
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

inline int cmd_query(const std::string& kb_path, const std::string& theta_text,
                     const std::string& phi_text, QueryEngine engine, bool explain,
                     const KbLimits& limits, std::ostream& out, std::ostream& err) {
    try {
        const KnowledgeBase kb = load_kb(kb_path, limits);
        const Formula theta = parse_formula(theta_text, kb.vocab);
        const Formula phi = parse_formula(phi_text, kb.vocab);
        const ZPartition zp = z_partition(kb.base, kb.vocab);

        bool answer = false;
        std::ostringstream detail;
        if (engine == QueryEngine::LexDirect) {
            const LexOracle oracle(kb.base, zp, kb.vocab);
            answer = oracle.infers(theta, phi, kb.vocab);
            if (explain) {
                detail << "maximal bases for " << theta.to_string(kb.vocab) << ":\n";
                const auto bases = oracle.maximal_bases(theta, kb.vocab);
                if (bases.empty()) detail << "  (none: premise unsatisfiable)\n";
                for (const auto& subset : bases)
                    detail << "  {" << defaults_line(subset, kb.vocab) << "}\n";
            }
        } else {
            const RankedSequence seq = engine == QueryEngine::LexRevision
                                           ? lex_sequence(zp, kb.vocab)
                                           : rational_closure_sequence(zp, kb.vocab);
            answer = seq.infers(theta, phi, kb.vocab);
            if (explain) {
                detail << "sequence: " << sequence_to_string(seq, kb.vocab) << "\n";
                detail << "rank(" << theta.to_string(kb.vocab)
                       << ") = " << seq.rank_of(theta, kb.vocab).to_string() << ", rank("
                       << (theta & !phi).to_string(kb.vocab)
                       << ") = " << seq.rank_of(theta & !phi, kb.vocab).to_string() << "\n";
            }
        }
        out << (answer ? "YES" : "NO") << "\n" << detail.str();
        return answer ? 0 : 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

inline int cmd_session(const std::string& script_path, const KbLimits& limits, std::ostream& out,
                       std::ostream& err) {
    try {
        std::ifstream in(script_path);
        if (!in) throw std::runtime_error("cannot open session script '" + script_path + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        run_session_script(buf.str(), out, limits);
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

inline int cmd_verify(const std::string& suite, std::uint64_t seed, int count, std::ostream& out,
                      std::ostream& err) {
    const std::optional<SuiteOutcome> outcome = run_named_suite(suite, seed, count);
    if (!outcome) {
        err << "error: unknown suite '" << suite
            << "' (expected main-theorem, postulates, e-axioms, props, dp, set-difference)\n";
        return 2;
    }
    print_suite_outcome(*outcome, out);
    return outcome->ok() ? 0 : 1;
}

inline void print_conjecture_report(const std::string& label, const DefaultBase& base,
                                    const ConjectureReport& report, const Vocabulary& vocab,
                                    std::ostream& out) {
    const ZPartition zp = z_partition(base, vocab);
    out << label << ": defaults=" << base.size() << " strata=" << zp.size()
        << " queries=" << report.queries << " agree=" << report.agreements
        << " diverge=" << report.divergences.size()
        << " rewrite=" << (report.cumulative_rewrite_ok ? "ok" : "MISMATCH") << "\n";
    for (const ConjectureDivergence& d : report.divergences)
        out << "  diverge: " << d.theta.to_string(vocab) << " |~ " << d.phi.to_string(vocab)
            << " : conjunction-chain=" << (d.conjunction_chain_answer ? "YES" : "NO")
            << " rational=" << (d.rational_closure_answer ? "YES" : "NO") << "\n";
}

inline std::vector<std::pair<Formula, Formula>> literal_queries(const Vocabulary& vocab) {
    std::vector<std::pair<Formula, Formula>> out;
    const std::vector<Formula> literals = literal_sample(vocab);
    for (const Formula& a : literals)
        for (const Formula& b : literals) out.emplace_back(a, b);
    return out;
}

// With a knowledge base: report the conjunction-chain/rational-closure
// agreement on all literal queries. Without one: a seeded random sweep.
// Divergences are findings; only an inadmissible explicit base is an error.
inline int cmd_conjecture(const std::optional<std::string>& kb_path, std::uint64_t seed, int count,
                          const KbLimits& limits, std::ostream& out, std::ostream& err) {
    try {
        if (kb_path) {
            const KnowledgeBase kb = load_kb(*kb_path, limits);
            const ConjectureReport report =
                conjecture_check(kb.base, literal_queries(kb.vocab), kb.vocab);
            print_conjecture_report("base", kb.base, report, kb.vocab, out);
            out << "agreement: " << report.agreements << "/" << report.queries << "\n";
            return 0;
        }

        const Vocabulary vocab = small_vocabulary(3);
        const std::vector<std::pair<Formula, Formula>> queries = literal_queries(vocab);
        std::size_t total_queries = 0, total_agreements = 0, total_divergences = 0;
        int rewrites_ok = 0;
        for (int i = 0; i < count; ++i) {
            Rng rng = Rng::for_instance(seed, static_cast<std::uint64_t>(i));
            const DefaultBase base = random_admissible_base(rng, vocab, 4);
            const ConjectureReport report = conjecture_check(base, queries, vocab);
            print_conjecture_report("base " + std::to_string(i + 1), base, report, vocab, out);
            total_queries += report.queries;
            total_agreements += report.agreements;
            total_divergences += report.divergences.size();
            if (report.cumulative_rewrite_ok) ++rewrites_ok;
        }
        out << "sweep: bases=" << count << " queries=" << total_queries
            << " agreements=" << total_agreements << " divergences=" << total_divergences
            << " rewrite-ok=" << rewrites_ok << "/" << count << "\n";
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace lexrev
