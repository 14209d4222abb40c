// Acceptance suite: runs every release criterion at full scale and prints
// one PASS/FAIL line per criterion. Exit status is 0 only if all pass.
//
//   ./acceptance          run everything
//   ./acceptance 3 5      run criteria 3 and 5 only

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lexrev/cli.hpp"
#include "lexrev/defaults.hpp"
#include "lexrev/kb.hpp"
#include "lexrev/logic.hpp"
#include "lexrev/verify.hpp"

using namespace lexrev;

namespace {

struct CriterionResult {
    bool pass = false;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt_seconds(double s) {
    std::ostringstream out;
    out.precision(2);
    out << std::fixed << s << "s";
    return out.str();
}

// 1. One hundred seeded admissible bases, at least 200 queries each: the
// direct closure and the revision chain must agree everywhere, within 60
// seconds.
CriterionResult criterion_main_theorem() {
    const auto start = Clock::now();
    std::size_t queries = 0;
    for (int i = 0; i < 100; ++i) {
        Rng rng = Rng::for_instance(1, static_cast<std::uint64_t>(i));
        std::size_t before = queries;
        if (auto failure = main_theorem_instance(rng, &queries))
            return {false, "instance " + std::to_string(i) + ": " + *failure};
        if (queries - before < 200)
            return {false, "instance " + std::to_string(i) + " ran only " +
                               std::to_string(queries - before) + " queries"};
    }
    const double elapsed = seconds_since(start);
    if (elapsed >= 60.0)
        return {false, "exceeded the 60s budget: " + fmt_seconds(elapsed)};
    return {true, "100 bases, " + std::to_string(queries) + " queries, 0 disagreements, " +
                      fmt_seconds(elapsed)};
}

// 2. The penguin base: partition, chain sequence and the four canonical
// answers, all frozen from the enumeration oracle.
CriterionResult criterion_penguin() {
    const Vocabulary vocab({"b", "f", "p"});
    auto d = [&](const char* text) {
        const std::string s(text);
        const std::size_t arrow = s.find("=>");
        return Default{parse_formula(s.substr(0, arrow), vocab),
                       parse_formula(s.substr(arrow + 2), vocab)};
    };
    const DefaultBase base({d("b => f"), d("p => b"), d("p => !f")});

    const ZPartition zp = z_partition(base, vocab);
    if (zp.size() != 2 || zp.strata[0] != std::vector<Default>{d("b => f")} ||
        zp.strata[1] != std::vector<Default>{d("p => b"), d("p => !f")})
        return {false, "unexpected specificity partition"};

    auto layer = [&](std::initializer_list<World> worlds) {
        WorldSet s(3);
        for (World w : worlds) s.insert(w);
        return s;
    };
    const RankedSequence expected(
        3, {layer({0, 2, 3}), layer({1, 5}), layer({4, 7}), layer({6})});
    if (lex_sequence(zp, vocab) != expected) return {false, "unexpected chain sequence"};

    const struct {
        const char* theta;
        const char* phi;
        bool expected;
    } queries[] = {
        {"p", "!f", true}, {"p", "b", true}, {"b", "f", true}, {"p", "f", false}};
    for (const auto& q : queries) {
        const Formula theta = parse_formula(q.theta, vocab);
        const Formula phi = parse_formula(q.phi, vocab);
        if (lex_infers_direct(base, theta, phi, vocab) != q.expected)
            return {false, std::string("direct answer wrong for ") + q.theta + " |~ " + q.phi};
        if (expected.infers(theta, phi, vocab) != q.expected)
            return {false, std::string("chain answer wrong for ") + q.theta + " |~ " + q.phi};
    }
    return {true, "partition, sequence and all four answers match"};
}

// 3. Rational postulates and consistency preservation of the closure.
CriterionResult criterion_rational_postulates() {
    const SuiteOutcome outcome =
        run_instances("rational-postulates", 2, 100, rational_postulates_instance);
    if (!outcome.ok()) return {false, outcome.first_counterexample};
    return {true, "100 bases x 24 sampled triples, 0 violations"};
}

// 4. E-axioms for set-generated and sequence-generated relations.
CriterionResult criterion_e_axioms() {
    const SuiteOutcome outcome = run_instances("e-axioms", 3, 200, e_axioms_instance);
    if (!outcome.ok()) return {false, outcome.first_counterexample};
    return {true, "200 instances, 0 violations"};
}

// 5. Revision postulates on 200 pairs plus associativity on 200 triples
// with a non-empty middle.
CriterionResult criterion_revision_postulates() {
    const SuiteOutcome postulates =
        run_instances("revision-postulates", 4, 200, revision_postulates_instance);
    if (!postulates.ok()) return {false, postulates.first_counterexample};
    const SuiteOutcome assoc = run_instances("associativity", 5, 200, associativity_instance);
    if (!assoc.ok()) return {false, assoc.first_counterexample};
    return {true, "200 pairs + 200 triples, 0 violations"};
}

// 6. Bridge checks: top-inference/belief, single-sentence revision belief,
// the consequence round trip, the comparator equivalence, and belief
// closure of set-generated relations.
CriterionResult criterion_bridge() {
    const SuiteOutcome outcome = run_instances("bridge", 6, 200, bridge_instance);
    if (!outcome.ok()) return {false, outcome.first_counterexample};
    return {true, "200 instances x 5 correspondences, 0 violations"};
}

// 7. Set-difference identity, the DP second postulate for consistent
// inputs, and the cumulative rewrite of the stratum chain.
CriterionResult criterion_section_six() {
    const SuiteOutcome diff = run_instances("set-difference", 7, 200, set_difference_instance);
    if (!diff.ok()) return {false, diff.first_counterexample};
    const SuiteOutcome dp = run_instances("dp", 8, 200, dp_c2_instance);
    if (!dp.ok()) return {false, dp.first_counterexample};
    const SuiteOutcome rewrite =
        run_instances("cumulative-rewrite", 9, 200, cumulative_rewrite_instance);
    if (!rewrite.ok()) return {false, rewrite.first_counterexample};
    return {true, "3 x 200 instances, 0 violations"};
}

// 8. The conjecture sweep completes on 50 bases, deterministically;
// agreement is reported, never asserted.
CriterionResult criterion_conjecture_sweep() {
    std::ostringstream first, second, err;
    if (cmd_conjecture(std::nullopt, 7, 50, {}, first, err) != 0)
        return {false, "sweep did not complete: " + err.str()};
    if (cmd_conjecture(std::nullopt, 7, 50, {}, second, err) != 0)
        return {false, "repeat sweep did not complete"};
    if (first.str() != second.str()) return {false, "sweep output is not deterministic"};

    const std::string report = first.str();
    const std::size_t mark = report.rfind("sweep:");
    if (mark == std::string::npos) return {false, "missing sweep summary"};
    std::string summary = report.substr(mark);
    if (!summary.empty() && summary.back() == '\n') summary.pop_back();
    return {true, "deterministic; " + summary};
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<std::pair<std::string, std::function<CriterionResult()>>> criteria = {
        {"main-theorem equivalence", criterion_main_theorem},
        {"penguin regression", criterion_penguin},
        {"rational postulates", criterion_rational_postulates},
        {"entrenchment axioms", criterion_e_axioms},
        {"revision postulates + associativity", criterion_revision_postulates},
        {"belief/consequence bridge", criterion_bridge},
        {"set revision properties", criterion_section_six},
        {"conjecture sweep", criterion_conjecture_sweep},
    };

    std::set<int> selected;
    for (int i = 1; i < argc; ++i) selected.insert(std::stoi(argv[i]));

    bool all_pass = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int id = static_cast<int>(i) + 1;
        if (!selected.empty() && !selected.count(id)) continue;
        const CriterionResult result = criteria[i].second();
        std::cout << "[" << id << "] " << criteria[i].first << ": "
                  << (result.pass ? "PASS" : "FAIL");
        if (!result.detail.empty()) std::cout << " (" << result.detail << ")";
        std::cout << "\n";
        if (!result.pass) all_pass = false;
    }
    return all_pass ? 0 : 1;
}
