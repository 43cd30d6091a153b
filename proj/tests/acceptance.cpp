// Acceptance suite: one line per criterion, exit status 1 if any fails.

#include "support.hpp"

#include "metacert/audit.hpp"
#include "metacert/axioms.hpp"
#include "metacert/cli.hpp"
#include "metacert/dsl.hpp"
#include "metacert/game.hpp"
#include "metacert/qualitative_types.hpp"
#include "metacert/signal.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace metacert;
using support::Mask;

namespace {

std::string data(const std::string& name) { return std::string{METACERT_TEST_DATA} + "/" + name; }

/// Collects the reasons a criterion fails.
struct Outcome {
    std::vector<std::string> failures;
    std::vector<std::string> notes;

    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            failures.push_back(what);
        }
    }
};

audit::ModelSource exhaustive(std::size_t n)
{
    audit::ModelSource s;
    s.mode = audit::SourceMode::exhaustive_kripke;
    s.states = n;
    return s;
}

audit::ModelSource sampled(std::size_t count, std::size_t states = 4, std::uint64_t seed = 1)
{
    audit::ModelSource s;
    s.mode = audit::SourceMode::sampled_monotone;
    s.states = states;
    s.count = count;
    s.seed = seed;
    return s;
}

audit::ModelSource games_exhaustive()
{
    audit::ModelSource s;
    s.mode = audit::SourceMode::exhaustive_games;
    s.states = 2;
    return s;
}

audit::ModelSource games_sampled(std::size_t count)
{
    audit::ModelSource s;
    s.mode = audit::SourceMode::sampled_games;
    s.states = 4;
    s.actions = 3;
    s.count = count;
    return s;
}

/// The standard sweep: every Kripke model on up to three states, then
/// 10,000 sampled monotone models.
std::vector<audit::ModelSource> standard_sweep()
{
    return {exhaustive(1), exhaustive(2), exhaustive(3), sampled(10000)};
}

std::string violations_text(const audit::AuditResult& r)
{
    std::ostringstream out;
    out << r.claim << " on " << r.source << ": " << r.violations_total << " violation(s)";
    for (const auto& d : r.directions) {
        if (d.violated > 0) {
            out << " [" << d.name << ": " << d.violated << "]";
        }
    }
    return out.str();
}

/// Zero violations of `claim` on every source.
void audit_clean(Outcome& o, const std::string& claim, const std::vector<audit::ModelSource>& sources,
                 std::size_t& instances)
{
    for (const auto& s : sources) {
        const auto r = audit::run_audit(claim, s);
        instances += r.instances;
        o.require(r.violations_total == 0, violations_text(r));
    }
}

// 1 -------------------------------------------------------------------------

Outcome worked_example()
{
    Outcome o;
    const auto model = support::worked_model();
    const auto& op = model.op(0);
    const Signal constant{{"a", "b"}, {0, 0, 0}, {{0}, {1}}};
    const Signal varying{{"a", "b"}, {0, 1, 0}, {{0}, {1}}};
    o.require(certain_of(op, constant).holds, "player 1 not certain of (a,a,a)");
    const auto report = certain_of(op, varying);
    o.require(!report.holds, "player 1 certain of (a,b,a)");
    o.require(report.failures.size() == 1, "expected exactly one certainty failure for (a,b,a)");
    if (report.failures.size() == 1) {
        const auto& f = report.failures.front();
        o.require(f.state == 2 && varying.family().at(f.observation) == ValueSet{0},
                  "certainty failure is not (w3, {a})");
    }
    for (Mask m = 0; m < 8; ++m) {
        const Event e{m, 3};
        const Mask expected = m == 7 ? 7 : (m & 0b011);
        o.require(op(e).mask() == expected, "B differs from the worked definition at " + model.space().format(e));
        o.require(common_belief(model, e) == op(e), "C differs from B_1 at " + model.space().format(e));
    }
    return o;
}

// 2 -------------------------------------------------------------------------

Outcome axiom_dictionary()
{
    Outcome o;
    const std::vector<std::pair<Axiom, FrameProperty>> dictionary{
        {Axiom::consistency, FrameProperty::serial},
        {Axiom::truth, FrameProperty::reflexive},
        {Axiom::positive_introspection, FrameProperty::transitive},
        {Axiom::negative_introspection, FrameProperty::euclidean},
    };
    std::size_t checked = 0;
    std::size_t mismatches = 0;
    for (const std::size_t n : {2, 3}) {
        const auto space = StateSpace::numbered(n);
        const auto all = audit::enumerate_correspondences(n);
        o.require(all.size() == (n == 2 ? 16u : 512u), "wrong correspondence count on " + std::to_string(n));
        for (const auto& b : all) {
            const auto op = from_correspondence(space, b);
            for (const auto& [axiom, property] : dictionary) {
                ++checked;
                if (check_axiom(op, axiom).holds != correspondence_property(b, property).holds) {
                    ++mismatches;
                }
            }
        }
    }
    o.require(mismatches == 0, std::to_string(mismatches) + " mismatches");
    o.notes.push_back(std::to_string(checked) + " verdict pairs");
    return o;
}

// 3 -------------------------------------------------------------------------

Outcome common_belief_iteration()
{
    Outcome o;
    std::size_t instances = 0;
    audit_clean(o, "common-belief-versus-iteration", {exhaustive(1), exhaustive(2), exhaustive(3), sampled(10000)},
                instances);

    // Two-state models against a direct fixed-point oracle.
    const auto space = StateSpace::numbered(2);
    std::size_t oracle_mismatches = 0;
    support::for_each_correspondence(2, [&](const std::vector<Mask>& b1) {
        support::for_each_correspondence(2, [&](const std::vector<Mask>& b2) {
            const BeliefModel model{space, {support::kripke_operator(space, b1, "1"),
                                            support::kripke_operator(space, b2, "2")}};
            const std::vector<std::vector<Mask>> tables{support::table_of(model.op(0)), support::table_of(model.op(1))};
            for (Mask m = 0; m < 4; ++m) {
                if (common_belief(model, Event{m, 2}).mask() != support::common_belief_oracle(tables, 2, m)) {
                    ++oracle_mismatches;
                }
            }
        });
    });
    o.require(oracle_mismatches == 0, std::to_string(oracle_mismatches) + " fixed-point oracle mismatches");

    const auto strict = audit::run_audit("strict-common-belief-inclusion", sampled(10000));
    o.require(strict.passed(), "no strict inclusion among sampled non-conjunctive models");
    o.notes.push_back(std::to_string(instances) + " models, " + std::to_string(strict.counterexamples_found) +
                      " strict inclusions");
    return o;
}

// 4 -------------------------------------------------------------------------

Outcome introspection_audits()
{
    Outcome o;
    const std::vector<std::string> claims{
        "pi-iff-certain-of-beta",
        "ni-iff-certain-of-neg-beta",
        "certain-of-atoms-implies-introspection",
        "truthful-certain-of-atoms-iff-ni",
        "logical-certain-of-atoms-iff-introspection",
        "positive-transfer-iff-certain-of-beta",
        "negative-transfer-iff-certain-of-neg-beta",
        "certain-of-atoms-implies-transfers",
        "truthful-certain-of-atoms-iff-transfers",
        "logical-certain-of-atoms-iff-transfers",
        "truthful-common-certainty-iff-identical-introspective",
        "logical-common-certainty-iff-beliefs-commonly-believed",
        "consistent-signal-certainty-transfers",
        "common-type-certainty-equalises-signal-certainty",
    };
    std::size_t instances = 0;
    for (const auto& claim : claims) {
        audit_clean(o, claim, standard_sweep(), instances);
    }
    o.notes.push_back(std::to_string(claims.size()) + " claims, " + std::to_string(instances) + " instances");
    return o;
}

// 5 -------------------------------------------------------------------------

Outcome counterexamples()
{
    Outcome o;
    for (const std::string claim : {"common-equals-mutual-without-common-certainty", "pi-without-ni-certain-of-beta-only"}) {
        std::size_t found = 0;
        for (const auto& s : standard_sweep()) {
            const auto r = audit::run_audit(claim, s);
            found += r.counterexamples_found;
            o.require(r.violations_total == 0, violations_text(r));
        }
        o.require(found > 0, "no instance found for " + claim);
        o.notes.push_back(claim + ": " + std::to_string(found));
    }
    audit::ModelSource worked;
    worked.mode = audit::SourceMode::from_files;
    worked.files = {data("example31.bm")};
    const auto r = audit::run_audit("pi-without-ni-certain-of-beta-only", worked);
    o.require(r.counterexamples_found > 0, "the three-state worked model does not qualify");
    return o;
}

// 6 -------------------------------------------------------------------------

Outcome rationality_audits()
{
    Outcome o;
    std::size_t instances = 0;
    const std::vector<audit::ModelSource> game_sources{games_exhaustive(), games_sampled(5000)};
    for (const std::string claim : {"own-rationality-correctly-believed", "kripke-rationality-belief",
                                    "common-rationality-survives-elimination", "elimination-order-independent"}) {
        audit_clean(o, claim, game_sources, instances);
    }
    audit_clean(o, "certainty-of-upward-family-gives-compatibility", standard_sweep(), instances);

    const auto pd = dsl::load_file(data("pd.bm"));
    const auto& g = pd.game->game();
    const auto trace = iesda(g);
    const auto defect = [&](PlayerIndex i) { return std::vector<ActionIndex>{g.action_index(i, "D")}; };
    o.require(trace.survivors.size() == 2 && trace.survivors[0] == defect(0) && trace.survivors[1] == defect(1),
              "prisoner's dilemma survivors are not {(D,D)}");
    o.require(iesda_order_independent(g, 50, 1), "prisoner's dilemma survivors depend on the order");
    o.notes.push_back(std::to_string(instances) + " instances");
    return o;
}

// 7 -------------------------------------------------------------------------

std::string read(const std::string& path)
{
    std::ifstream in{path, std::ios::binary};
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Outcome round_trips()
{
    Outcome o;
    std::size_t operators = 0;
    const auto type_round_trip = [&](const StateSpace& space, const BeliefOperator& op) {
        ++operators;
        const auto t = type_mapping_of(op);
        const auto back = operator_of(space, t);
        o.require(back == op && type_mapping_of(back) == t, "type mapping round trip differs");
    };
    for (const std::size_t n : {1, 2, 3}) {
        const auto space = StateSpace::numbered(n);
        for (const auto& b : audit::enumerate_correspondences(n)) {
            type_round_trip(space, from_correspondence(space, b));
        }
    }
    for (std::size_t n = 1; n <= 5; ++n) {
        const auto space = StateSpace::numbered(n);
        const auto ops = audit::sample_monotone_operators(n, 11 + n, 400);
        for (std::size_t k = 0; k < ops.size(); ++k) {
            type_round_trip(space, ops[k]);
            const BeliefModel model{space, {ops[k].with_owner("1"), ops[(k + 1) % ops.size()].with_owner("2")}};
            const auto text = dsl::serialize(dsl::document_of(model));
            const auto again = dsl::serialize(dsl::document_of(dsl::load_text(text).belief));
            o.require(text == again, "model serialization not stable");
        }
    }

    std::size_t documents = 0;
    for (const std::string name : {"example31.bm", "pd.bm", "no-conjunction.bm", "truthful-transfer.bm"}) {
        ++documents;
        const auto first = dsl::serialize(dsl::parse_model_spec(read(data(name))));
        const auto second = dsl::serialize(dsl::parse_model_spec(first));
        o.require(first == second, name + " parse/serialize not byte-stable");
        const auto loaded = dsl::load_text(first);
        const auto rebuilt = dsl::serialize(dsl::document_of(loaded.belief, loaded.signals,
                                                            loaded.game ? &*loaded.game : nullptr));
        o.require(dsl::serialize(dsl::document_of(dsl::load_text(rebuilt).belief)) ==
                      dsl::serialize(dsl::document_of(loaded.belief)),
                  name + " load/describe not stable");
    }

    const auto report = [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        const int code = cli::run_cli(args, out, err);
        return std::to_string(code) + "\n" + out.str();
    };
    std::size_t audits = 0;
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"audit", "--claim", "common-equals-mutual-without-common-certainty", "--mode", "sampled", "--states", "4", "--seed", "3",
              "--count", "3000", "--format", "json"},
             {"audit", "--claim", "truthful-certain-of-atoms-iff-transfers", "--mode", "sampled", "--states", "4",
              "--seed", "9", "--count", "3000", "--format", "json"},
             {"audit", "--claim", "own-rationality-fails-without-conjunction", "--mode", "sampled-games",
              "--states", "3", "--actions", "3", "--seed", "5", "--count", "2000", "--format", "json"},
         }) {
        ++audits;
        auto single = args;
        single.insert(single.end(), {"--threads", "1"});
        auto several = args;
        several.insert(several.end(), {"--threads", "3"});
        const auto a = report(single);
        o.require(a == report(single) && a == report(several), "audit report differs between runs: " + args[2]);
    }
    o.notes.push_back(std::to_string(operators) + " operators, " + std::to_string(documents) + " documents, " +
                      std::to_string(audits) + " repeated audits");
    return o;
}

} // namespace

int main()
{
    using Clock = std::chrono::steady_clock;
    struct Criterion {
        int number;
        std::string title;
        double budget_seconds;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "worked three-state example", 1, worked_example},
        {2, "axiom verdicts match frame properties", 10, axiom_dictionary},
        {3, "common belief fixed point versus iteration", 60, common_belief_iteration},
        {4, "introspection, transfer, common certainty and signal audits", 300, introspection_audits},
        {5, "counterexample searches", 300, counterexamples},
        {6, "rationality and elimination audits", 300, rationality_audits},
        {7, "round trips and deterministic reports", 300, round_trips},
    };

    bool all = true;
    for (const auto& c : criteria) {
        const auto start = Clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.failures.push_back(std::string{"exception: "} + e.what());
        }
        const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
        o.require(seconds < c.budget_seconds, "over the " + std::to_string(static_cast<int>(c.budget_seconds)) +
                                                  " s budget");
        const bool pass = o.failures.empty();
        all = all && pass;
        std::ostringstream line;
        line.precision(2);
        line << std::fixed << "criterion " << c.number << ": " << (pass ? "PASS" : "FAIL") << "  " << c.title
             << " (" << seconds << " s";
        for (const auto& n : o.notes) {
            line << "; " << n;
        }
        line << ")";
        std::cout << line.str() << "\n";
        for (const auto& f : o.failures) {
            std::cout << "    " << f << "\n";
        }
        std::cout.flush();
    }
    return all ? 0 : 1;
}
