// lexrev: lexicographic default entailment and iterated entrenchment
// revision from the command line.
//
//   lexrev partition --kb penguin.kb
//   lexrev query --kb penguin.kb "p" "!f"
//   lexrev session script.txt
//   lexrev verify main-theorem --seed 1 --count 100
//   lexrev conjecture --seed 7 --count 50

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "lexrev/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"lexicographic default entailment via iterated entrenchment revision"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string kb_path;
    std::uint64_t seed = 1;
    int count = 100;
    bool explain = false;
    int max_vars = lexrev::Vocabulary::default_max_vars;
    app.add_option("--kb", kb_path, "knowledge base file");
    app.add_option("--seed", seed, "random seed for verification sweeps");
    app.add_option("--count", count, "instance count for verification sweeps");
    app.add_flag("--explain", explain, "print the reasoning behind a query answer");
    app.add_option("--max-vars", max_vars, "override the vocabulary size cap");

    CLI::App* partition = app.add_subcommand("partition", "print the specificity partition");

    std::string theta_text, phi_text;
    std::string engine_name = "lex-revision";
    CLI::App* query = app.add_subcommand("query", "answer theta |~ phi against a knowledge base");
    query->add_option("theta", theta_text, "premise formula")->required();
    query->add_option("phi", phi_text, "conclusion formula")->required();
    query->add_option("--engine", engine_name, "lex-direct, lex-revision or rational")
        ->check(CLI::IsMember({"lex-direct", "lex-revision", "rational"}));

    std::string script_path;
    CLI::App* session = app.add_subcommand("session", "run a revision session script");
    session->add_option("script", script_path, "session script file")->required();

    std::string suite_name;
    CLI::App* verify = app.add_subcommand("verify", "run a seeded verification suite");
    verify->add_option("suite", suite_name,
                       "main-theorem, postulates, e-axioms, props, dp or set-difference")
        ->required();

    CLI::App* conjecture = app.add_subcommand(
        "conjecture", "compare the conjunction chain against the rational closure");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const lexrev::KbLimits limits{max_vars, lexrev::DefaultBase::default_max_defaults};

    auto require_kb = [&](std::ostream& err) {
        if (kb_path.empty()) {
            err << "error: --kb <path> is required\n";
            return false;
        }
        return true;
    };

    if (partition->parsed()) {
        if (!require_kb(std::cerr)) return 2;
        return lexrev::cmd_partition(kb_path, limits, std::cout, std::cerr);
    }
    if (query->parsed()) {
        if (!require_kb(std::cerr)) return 2;
        return lexrev::cmd_query(kb_path, theta_text, phi_text, *lexrev::parse_engine(engine_name),
                                 explain, limits, std::cout, std::cerr);
    }
    if (session->parsed()) return lexrev::cmd_session(script_path, limits, std::cout, std::cerr);
    if (verify->parsed()) return lexrev::cmd_verify(suite_name, seed, count, std::cout, std::cerr);
    if (conjecture->parsed()) {
        std::optional<std::string> kb = kb_path.empty() ? std::nullopt
                                                        : std::optional<std::string>(kb_path);
        // The sweep default is 50 bases; an explicit --count wins.
        const int sweep_count = app.count("--count") > 0 ? count : 50;
        return lexrev::cmd_conjecture(kb, seed, sweep_count, limits, std::cout, std::cerr);
    }
    return 2;
}
