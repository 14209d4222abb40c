#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "lexrev/cli.hpp"
#include "lexrev/kb.hpp"
#include "lexrev/render.hpp"
#include "lexrev/session.hpp"
#include "lexrev/verify.hpp"

using namespace lexrev;

namespace {

const char* penguin_kb_text =
    "# classic example\n"
    "vars: b, f, p\n"
    "default: b => f\n"
    "default: p => b\n"
    "default: p => !f\n";

std::string write_temp(const std::string& name, const std::string& content) {
    const std::filesystem::path path = std::filesystem::temp_directory_path() / ("lexrev_" + name);
    std::ofstream out(path);
    out << content;
    return path.string();
}

std::string run_session(const std::string& script) {
    std::ostringstream out;
    run_session_script(script, out);
    return out.str();
}

}  // namespace

TEST_CASE("knowledge base parsing", "[formats]") {
    const KnowledgeBase kb = parse_kb(penguin_kb_text);
    REQUIRE(kb.vocab.names() == std::vector<std::string>{"b", "f", "p"});
    REQUIRE(kb.base.size() == 3);
    REQUIRE(kb.base[0].premise == parse_formula("b", kb.vocab));
    REQUIRE(kb.base[2].conclusion == parse_formula("!f", kb.vocab));
}

TEST_CASE("knowledge base errors carry line numbers", "[formats]") {
    try {
        parse_kb("vars: p\ndefault: p =>\n");
        FAIL("expected a kb error");
    } catch (const KbError& e) {
        REQUIRE(e.line() == 2);
    }
    REQUIRE_THROWS_AS(parse_kb("default: p => q\nvars: p, q\n"), KbError);
    REQUIRE_THROWS_AS(parse_kb("# only comments\n"), KbError);
    REQUIRE_THROWS_AS(parse_kb("vars: p\nnonsense\n"), KbError);
    REQUIRE_THROWS_AS(parse_kb("vars: p\ndefault: p > q\n"), KbError);
    REQUIRE_THROWS_AS(parse_kb("vars: p, q, r\ndefault: p => q\n", KbLimits{2, 12}), KbError);
}

TEST_CASE("duplicate defaults collapse at load", "[formats]") {
    const KnowledgeBase kb =
        parse_kb("vars: p, q\ndefault: p => q\ndefault: p => q\ndefault: q => p\n");
    REQUIRE(kb.base.size() == 2);
}

TEST_CASE("knowledge bases round-trip through rendering", "[formats]") {
    Rng rng(179);
    const Vocabulary vocab = small_vocabulary(3);
    for (int i = 0; i < 15; ++i) {
        const DefaultBase base = random_admissible_base(rng, vocab, 4);
        std::string text = "vars: p, q, r\n";
        for (const Default& d : base.defaults()) text += "default: " + d.to_string(vocab) + "\n";
        const KnowledgeBase kb = parse_kb(text);
        REQUIRE(kb.base.defaults() == base.defaults());
    }
}

TEST_CASE("session transcript for the penguin chain", "[formats]") {
    const std::string script =
        "vars: b, f, p\n"
        "revise {b -> f}\n"
        "revise {p -> b; p -> !f}\n"
        "query p |~ !f\n";
    REQUIRE(run_session(script) == "YES\n");
}

TEST_CASE("session queries start from the flat state", "[formats]") {
    REQUIRE(run_session("vars: p, q\nquery p |~ q\n") == "NO\n");
    REQUIRE(run_session("vars: p, q\nquery p |~ p | q\n") == "YES\n");
}

TEST_CASE("session shows the absurd belief set", "[formats]") {
    REQUIRE(run_session("vars: p, q\nrevise {p; !p}\nshow beliefs\n") == "Bel = L (absurd)\n");
}

TEST_CASE("session show directives", "[formats]") {
    const std::string script =
        "vars: p, q\n"
        "revise {p}\n"
        "show beliefs\n"
        "show ranking\n"
        "show entrench q p | q\n"
        "show entrench p ; q\n";
    const std::string expected =
        "Bel = Cn(p & !q | p & q)\n"
        "[{p ¬q, p q} ; {¬p ¬q, ¬p q}]\n"
        "q < p | q\n"
        "p > q\n";
    REQUIRE(run_session(script) == expected);
}

TEST_CASE("session errors carry line numbers", "[formats]") {
    try {
        run_session("vars: p\nrevise {p\n");
        FAIL("expected a session error");
    } catch (const SessionError& e) {
        REQUIRE(e.line() == 2);
    }
    REQUIRE_THROWS_AS(run_session("query p |~ q\n"), SessionError);
    REQUIRE_THROWS_AS(run_session("vars: p\nquery p\n"), SessionError);
    REQUIRE_THROWS_AS(run_session("vars: p\nshow entrench p\n"), SessionError);
    REQUIRE_THROWS_AS(run_session("vars: p\nwobble\n"), SessionError);
    REQUIRE_THROWS_AS(run_session("vars: p\nvars: q\nquery p |~ p\n"), SessionError);
}

TEST_CASE("revising by the empty set changes nothing", "[formats]") {
    REQUIRE(run_session("vars: p, q\nrevise {p}\nrevise {}\nquery true |~ p\n") == "YES\n");
}

TEST_CASE("carriage returns and blank lines are tolerated", "[formats]") {
    const KnowledgeBase kb = parse_kb("vars: p, q\r\n\r\n# note\r\ndefault: p => q\r\n");
    REQUIRE(kb.base.size() == 1);
    REQUIRE(run_session("vars: p\r\n\r\nquery p |~ p\r\n") == "YES\n");
}

TEST_CASE("kb and session parsers survive arbitrary input", "[formats]") {
    const std::string pool = "pqr(){}!&|=>;:~#vars default revise query show \n\t";
    Rng rng(223);
    for (int i = 0; i < 600; ++i) {
        std::string text;
        const int len = rng.range(0, 120);
        for (int k = 0; k < len; ++k) text += pool[rng.below(static_cast<std::uint32_t>(pool.size()))];
        try {
            parse_kb(text);
        } catch (const KbError&) {
        }
        try {
            std::ostringstream sink;
            run_session_script(text, sink);
        } catch (const SessionError&) {
        }
    }
}

TEST_CASE("world and sequence rendering", "[formats]") {
    const Vocabulary vocab({"b", "f", "p"});
    REQUIRE(world_to_string(5, vocab) == "b ¬f p");
    REQUIRE(world_to_string(0, vocab) == "¬b ¬f ¬p");

    WorldSet s(3);
    s.insert(0);
    s.insert(5);
    REQUIRE(worldset_to_string(s, vocab) == "{¬b ¬f ¬p, b ¬f p}");
    REQUIRE(sequence_to_string(RankedSequence(3), vocab) == "[]");
}

TEST_CASE("entrenchment rendering sorts by entrenchment", "[formats]") {
    const Vocabulary vocab({"p", "q"});
    const Formula p = parse_formula("p", vocab);
    const Formula q = parse_formula("q", vocab);
    const EntrenchmentRelation r = entrenchment_from_set({p, q}, vocab);
    const std::string text = entrenchment_to_string(r, {p, q, p & q, Formula::verum()}, vocab);
    REQUIRE(text.find("order: p ~ q ~ p & q < true") != std::string::npos);
}

TEST_CASE("partition command output", "[formats]") {
    const std::string path = write_temp("penguin.kb", penguin_kb_text);
    std::ostringstream out, err;
    REQUIRE(cmd_partition(path, {}, out, err) == 0);
    REQUIRE(out.str() == "Δ0: b => f\nΔ1: p => b, p => !f\n");

    const std::string empty_path = write_temp("empty.kb", "vars: p\n");
    std::ostringstream out2, err2;
    REQUIRE(cmd_partition(empty_path, {}, out2, err2) == 0);
    REQUIRE(out2.str() == "(empty partition)\n");

    const std::string stuck_path =
        write_temp("stuck.kb", "vars: p, q\ndefault: p => q\ndefault: p => !q\n");
    std::ostringstream out3, err3;
    REQUIRE(cmd_partition(stuck_path, {}, out3, err3) == 2);
    REQUIRE(err3.str().find("tolerated") != std::string::npos);
}

TEST_CASE("query command answers and exit codes", "[formats]") {
    const std::string path = write_temp("penguin.kb", penguin_kb_text);

    for (const char* engine : {"lex-direct", "lex-revision", "rational"}) {
        std::ostringstream out, err;
        REQUIRE(cmd_query(path, "p", "!f", *parse_engine(engine), false, {}, out, err) == 0);
        REQUIRE(out.str() == "YES\n");
    }
    {
        std::ostringstream out, err;
        REQUIRE(cmd_query(path, "p", "f", QueryEngine::LexRevision, false, {}, out, err) == 1);
        REQUIRE(out.str() == "NO\n");
    }
    {
        std::ostringstream out, err;
        REQUIRE(cmd_query(path, "p &", "f", QueryEngine::LexDirect, false, {}, out, err) == 2);
        REQUIRE_FALSE(err.str().empty());
    }
    {
        const std::string stuck_path =
            write_temp("stuck2.kb", "vars: p, q\ndefault: p => q\ndefault: p => !q\n");
        std::ostringstream out, err;
        REQUIRE(cmd_query(stuck_path, "p", "q", QueryEngine::LexDirect, false, {}, out, err) == 2);
    }
}

TEST_CASE("query explanations", "[formats]") {
    const std::string path = write_temp("penguin.kb", penguin_kb_text);
    {
        std::ostringstream out, err;
        cmd_query(path, "p", "!f", QueryEngine::LexDirect, true, {}, out, err);
        REQUIRE(out.str().find("maximal bases for p:") != std::string::npos);
        REQUIRE(out.str().find("{p => b, p => !f}") != std::string::npos);
    }
    {
        std::ostringstream out, err;
        cmd_query(path, "p", "!f", QueryEngine::LexRevision, true, {}, out, err);
        REQUIRE(out.str().find("sequence: [") != std::string::npos);
        REQUIRE(out.str().find("rank(p) = 1") != std::string::npos);
    }
}

TEST_CASE("query engines agree on random knowledge bases", "[formats]") {
    Rng rng(181);
    const Vocabulary vocab = small_vocabulary(3);
    for (int i = 0; i < 10; ++i) {
        const DefaultBase base = random_admissible_base(rng, vocab, 4);
        std::string text = "vars: p, q, r\n";
        for (const Default& d : base.defaults()) text += "default: " + d.to_string(vocab) + "\n";
        const std::string path = write_temp("random.kb", text);
        for (int q = 0; q < 6; ++q) {
            const std::string theta = random_formula(rng, vocab, 2).to_string(vocab);
            const std::string phi = random_formula(rng, vocab, 2).to_string(vocab);
            std::ostringstream out1, out2, err;
            const int direct = cmd_query(path, theta, phi, QueryEngine::LexDirect, false, {}, out1, err);
            const int chained =
                cmd_query(path, theta, phi, QueryEngine::LexRevision, false, {}, out2, err);
            REQUIRE(direct == chained);
            REQUIRE(out1.str() == out2.str());
        }
    }
}

TEST_CASE("session command", "[formats]") {
    const std::string path = write_temp("session.txt",
                                        "vars: b, f, p\n"
                                        "revise {b -> f}\n"
                                        "revise {p -> b; p -> !f}\n"
                                        "query p |~ !f\n"
                                        "query b |~ f\n"
                                        "query p |~ f\n");
    std::ostringstream out, err;
    REQUIRE(cmd_session(path, {}, out, err) == 0);
    REQUIRE(out.str() == "YES\nYES\nNO\n");

    std::ostringstream out2, err2;
    REQUIRE(cmd_session("/nonexistent/script.txt", {}, out2, err2) == 2);

    const std::string bad = write_temp("bad_session.txt", "vars: p\nquery p |~\n");
    std::ostringstream out3, err3;
    REQUIRE(cmd_session(bad, {}, out3, err3) == 2);
    REQUIRE(err3.str().find("line 2") != std::string::npos);
}

TEST_CASE("verify command", "[formats]") {
    std::ostringstream out, err;
    REQUIRE(cmd_verify("props", 5, 3, out, err) == 0);
    REQUIRE(out.str().find("suite props: seed=5 count=3") != std::string::npos);
    REQUIRE(out.str().find("pass 3/3") != std::string::npos);

    std::ostringstream out2, err2;
    REQUIRE(cmd_verify("bogus", 1, 1, out2, err2) == 2);
}

TEST_CASE("verify output is deterministic", "[formats]") {
    std::ostringstream a, b, err;
    cmd_verify("e-axioms", 12, 8, a, err);
    cmd_verify("e-axioms", 12, 8, b, err);
    REQUIRE(a.str() == b.str());
}

TEST_CASE("conjecture command reports and is deterministic", "[formats]") {
    std::ostringstream a, b, err;
    REQUIRE(cmd_conjecture(std::nullopt, 7, 5, {}, a, err) == 0);
    REQUIRE(cmd_conjecture(std::nullopt, 7, 5, {}, b, err) == 0);
    REQUIRE(a.str() == b.str());
    REQUIRE(a.str().find("sweep: bases=5") != std::string::npos);

    const std::string path = write_temp("penguin.kb", penguin_kb_text);
    std::ostringstream out, err2;
    REQUIRE(cmd_conjecture(path, 1, 1, {}, out, err2) == 0);
    REQUIRE(out.str().find("agreement:") != std::string::npos);

    const std::string stuck_path =
        write_temp("stuck3.kb", "vars: p, q\ndefault: p => q\ndefault: p => !q\n");
    std::ostringstream out3, err3;
    REQUIRE(cmd_conjecture(stuck_path, 1, 1, {}, out3, err3) == 2);
}
