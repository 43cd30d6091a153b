#include "support.hpp"

#include "metacert/audit.hpp"
#include "metacert/dsl.hpp"
#include "metacert/game.hpp"
#include "metacert/informativeness.hpp"
#include "metacert/qualitative_types.hpp"

#include <doctest.h>

#include <set>

using namespace metacert;
using namespace metacert::audit;
using support::Mask;

namespace {

std::string data(const std::string& name) { return std::string{METACERT_TEST_DATA} + "/" + name; }

ModelSource exhaustive(std::size_t n)
{
    ModelSource s;
    s.mode = SourceMode::exhaustive_kripke;
    s.states = n;
    return s;
}

ModelSource sampled(std::size_t count, std::uint64_t seed = 1, std::size_t states = 4)
{
    ModelSource s;
    s.mode = SourceMode::sampled_monotone;
    s.states = states;
    s.count = count;
    s.seed = seed;
    return s;
}

ModelSource files(std::vector<std::string> paths)
{
    ModelSource s;
    s.mode = SourceMode::from_files;
    s.files = std::move(paths);
    return s;
}

const DirectionTally& direction(const AuditResult& r, const std::string& name)
{
    for (const auto& d : r.directions) {
        if (d.name == name) {
            return d;
        }
    }
    FAIL("no direction " << name);
    throw std::logic_error("unreachable");
}

} // namespace

TEST_CASE("correspondence enumeration")
{
    CHECK(enumerate_correspondences(1).size() == 2);
    CHECK(enumerate_correspondences(2).size() == 16);
    CHECK(enumerate_correspondences(2, {FrameProperty::reflexive}).size() == 4);
    CHECK(enumerate_correspondences(3).size() == 512);
    // A serial correspondence picks one of the 7 non-empty sets per state.
    CHECK(enumerate_correspondences(3, {FrameProperty::serial}).size() == 343);

    const auto all = enumerate_correspondences(2);
    CHECK(all.front().sets() == std::vector<Event>{support::ev(2, 0), support::ev(2, 0)});
    CHECK(all[1].sets() == std::vector<Event>{support::ev(2, 1), support::ev(2, 0)});
    CHECK(all.back().sets() == std::vector<Event>{support::ev(2, 3), support::ev(2, 3)});
    std::set<std::vector<Mask>> distinct;
    for (const auto& b : all) {
        distinct.insert({b[0].mask(), b[1].mask()});
    }
    CHECK(distinct.size() == 16);

    // Reflexive and euclidean: exactly the partitions of three states.
    CHECK(enumerate_correspondences(3, {FrameProperty::reflexive, FrameProperty::euclidean}).size() == 5);
    CHECK_THROWS_AS((void)enumerate_correspondences(4), model_error);
    CHECK_THROWS_AS((void)enumerate_correspondences(0), model_error);
}

TEST_CASE("monotone sampling")
{
    const auto a = sample_monotone_operators(2, 7, 300);
    const auto b = sample_monotone_operators(2, 7, 300);
    REQUIRE(a.size() == 300);
    CHECK(a == b);
    CHECK(a != sample_monotone_operators(2, 8, 300));

    std::size_t kripke = 0;
    bool non_kripke = false;
    for (const auto& op : a) {
        CHECK(satisfies(op, Axiom::monotonicity));
        if (satisfies(op, Axiom::kripke)) {
            ++kripke;
        } else {
            non_kripke = true;
        }
    }
    CHECK(non_kripke);
    CHECK(kripke > 100);

    for (const auto& op : sample_monotone_operators(4, 3, 200)) {
        const auto table = support::table_of(op);
        for (Mask e = 0; e < 16; ++e) {
            for (Mask f = 0; f < 16; ++f) {
                if ((e & ~f) == 0) {
                    CHECK((table[e] & ~table[f]) == 0);
                }
            }
        }
    }
    CHECK_THROWS_AS((void)sample_monotone_operators(0, 1, 1), model_error);
}

TEST_CASE("claim registry")
{
    std::set<std::string> ids;
    for (const auto& c : claims()) {
        CHECK(ids.insert(c.id).second);
        CHECK_FALSE(c.statement.empty());
        CHECK(c.directions.size() == c.asserted.size());
        CHECK((c.expects_counterexample || !c.directions.empty()));
        CHECK(find_claim(c.id) == &c);
    }
    CHECK(ids.size() >= 30);
    REQUIRE(find_claim("pi-iff-certain-of-beta") != nullptr);
    CHECK(find_claim("pi-iff-certain-of-beta")->domain == ClaimDomain::belief);
    CHECK(find_claim("common-equals-mutual-without-common-certainty")->expects_counterexample);
    CHECK(find_claim("own-rationality-correctly-believed")->domain == ClaimDomain::game);
    CHECK(find_claim("common-rationality-survives-elimination")->domain == ClaimDomain::game);
    CHECK(find_claim("no-such-claim") == nullptr);
    CHECK_THROWS_AS((void)run_audit("no-such-claim", exhaustive(1)), model_error);

    CHECK(parse_source_mode("exhaustive") == SourceMode::exhaustive_kripke);
    CHECK(parse_source_mode("sampled") == SourceMode::sampled_monotone);
    CHECK(parse_source_mode("from-files") == SourceMode::from_files);
    CHECK_FALSE(parse_source_mode("random"));
}

TEST_CASE("source validation")
{
    CHECK_THROWS_AS((void)run_audit("truth-and-ni-imply-pi", exhaustive(4)), model_error);
    auto many = exhaustive(3);
    many.players = 3;
    CHECK_THROWS_AS((void)run_audit("truth-and-ni-imply-pi", many), model_error);
    CHECK_THROWS_AS((void)run_audit("own-rationality-correctly-believed", exhaustive(3)), model_error);
    CHECK_THROWS_AS((void)run_audit("truth-and-ni-imply-pi", sampled(0)), model_error);
    CHECK_THROWS_AS((void)run_audit("truth-and-ni-imply-pi", files({})), model_error);
    CHECK_THROWS_AS((void)run_audit("truth-and-ni-imply-pi", files({data("missing.bm")})), model_error);
    CHECK(exhaustive(3).describe() == "exhaustive-kripke states=3 players=2");
    CHECK(sampled(10, 5).describe() == "sampled-monotone states<=4 players=2 seed=5 count=10");
}

TEST_CASE("own-introspection audit over every three-state Kripke model")
{
    const auto r = run_audit("pi-iff-certain-of-beta", exhaustive(3));
    CHECK(r.claim == "pi-iff-certain-of-beta");
    CHECK(r.instances == 512 * 512);
    CHECK(r.passed());
    CHECK(r.violations_total == 0);
    for (const auto& d : r.directions) {
        CHECK(d.checked == 2 * r.instances);
        CHECK(d.confirmed > 0);
        CHECK(d.vacuous > 0);
        CHECK(d.confirmed + d.vacuous + d.violated == d.checked);
    }
}

TEST_CASE("lattice and frame audits")
{
    for (const char* id : {"truth-and-ni-imply-pi", "truth-implies-consistency", "kripke-implies-normal",
                           "frame-characterizations", "compatibility-lattice"}) {
        CAPTURE(id);
        CHECK(run_audit(id, exhaustive(2)).passed());
        CHECK(run_audit(id, sampled(300)).passed());
    }
    // Every Kripke operator is counted by each of the four dictionary entries.
    const auto frames = run_audit("frame-characterizations", exhaustive(2));
    CHECK(direction(frames, "pi-transitive").confirmed == 2 * 256);
}

TEST_CASE("searches")
{
    const auto converse = run_audit("common-equals-mutual-without-common-certainty", sampled(500));
    CHECK(converse.passed());
    CHECK(converse.counterexamples_found >= 1);
    REQUIRE_FALSE(converse.counterexamples.empty());
    const auto witness = dsl::load_text(converse.counterexamples.front().model);
    const auto report = meta_certainty_report(witness.belief);
    CHECK_FALSE(report.commonly_certain());
    CHECK(report.clause("common-equals-mutual").holds);

    // The worked three-state model is positively but not negatively introspective.
    const auto one_sided = run_audit("pi-without-ni-certain-of-beta-only", files({data("example31.bm")}));
    CHECK(one_sided.passed());
    CHECK(one_sided.counterexamples_found == 2);

    // Kripke operators are conjunctive, so these searches come back empty there.
    CHECK_FALSE(run_audit("strict-common-belief-inclusion", exhaustive(2)).passed());
    CHECK(run_audit("strict-common-belief-inclusion", sampled(10000)).passed());
}

TEST_CASE("signal transfer audits generate covered and uncovered families")
{
    const auto r = run_audit("consistent-signal-certainty-transfers", sampled(1500));
    CHECK(r.passed());
    CHECK(direction(r, "covered-family").confirmed > 0);
    CHECK_FALSE(direction(r, "uncovered-family").asserted);
    CHECK(direction(r, "uncovered-family").violated == r.counterexamples_found);
    REQUIRE(r.counterexamples_found > 0);
    const auto& found = r.counterexamples.front();
    CHECK(found.direction == "uncovered-family");
    const auto loaded = dsl::load_text(found.model);
    REQUIRE(loaded.signals.size() == 1);
    CHECK_FALSE(families::complements_covered(loaded.signals[0].signal.codomain().size(),
                                              loaded.signals[0].signal.family()));
    CHECK(run_audit("common-type-certainty-equalises-signal-certainty", sampled(1500)).passed());
}

TEST_CASE("audits are deterministic and independent of the thread count")
{
    for (const char* id : {"consistent-signal-certainty-transfers", "common-equals-mutual-without-common-certainty", "truthful-certain-of-atoms-iff-transfers"}) {
        CAPTURE(id);
        const auto one = run_audit(id, sampled(700, 11), {1, 3});
        const auto four = run_audit(id, sampled(700, 11), {4, 3});
        CHECK(one == four);
        CHECK(one == run_audit(id, sampled(700, 11), {1, 3}));
    }
    ModelSource games;
    games.mode = SourceMode::sampled_games;
    games.states = 3;
    games.count = 300;
    CHECK(run_audit("own-rationality-correctly-believed", games, {1, 3}) == run_audit("own-rationality-correctly-believed", games, {3, 3}));
    CHECK(run_audit("own-rationality-correctly-believed", games, {1, 3}).instances == 300);
}

TEST_CASE("exhaustive game enumeration")
{
    ModelSource s;
    s.mode = SourceMode::exhaustive_games;
    s.states = 1;
    const auto order = run_audit("elimination-order-independent", s);
    CHECK(order.instances == 81 * 4 * 4);
    CHECK(direction(order, "maximal-versus-seeded").checked == 81);
    CHECK(order.passed());

    // Belief-model modes stand for their game counterparts in game claims.
    CHECK(run_audit("own-rationality-correctly-believed", exhaustive(1)).source == "exhaustive-games states=1 players=2 actions=2");
    s.actions = 3;
    CHECK_THROWS_AS((void)run_audit("own-rationality-correctly-believed", s), model_error);

    s.actions = 2;
    for (const char* id : {"own-rationality-correctly-believed", "common-rationality-survives-elimination", "kripke-rationality-belief", "strategy-certainty-identities",
                           "rationality-monotonicity", "rationality-formulations-agree"}) {
        CAPTURE(id);
        CHECK(run_audit(id, s).passed());
    }
}

TEST_CASE("file sources")
{
    const auto pd = run_audit("common-rationality-survives-elimination", files({data("pd.bm"), data("example31.bm")}));
    CHECK(pd.instances == 1);
    CHECK(pd.passed());
    const auto beliefs = run_audit("pi-iff-certain-of-beta", files({data("pd.bm"), data("example31.bm")}));
    CHECK(beliefs.instances == 2);
}

TEST_CASE("finite conjunction is needed for correct belief in one's own rationality")
{
    const auto loaded = dsl::load_file(data("no-conjunction.bm"));
    REQUIRE(loaded.game);
    const auto& gm = *loaded.game;
    const auto table = support::table_of(gm.belief().op(0));

    // Independent reading of the file: player 1 is rational only at w1.
    Mask rational = 0;
    for (StateIndex s = 0; s < 2; ++s) {
        const ActionProfile played{gm.action_at(0, s), gm.action_at(1, s)};
        bool best = true;
        for (ActionIndex dev = 0; dev < 2; ++dev) {
            const ActionProfile alt{dev, played[1]};
            best = best && gm.game().rank(0, alt) <= gm.game().rank(0, played);
        }
        rational |= best ? Mask{1} << s : 0;
    }
    CHECK(rational == 1);
    CHECK(table[rational] == 3);
    CHECK((table[1] & table[2]) != table[0]);
    for (StateIndex s = 0; s < 2; ++s) {
        const Mask level = gm.plays(0, gm.action_at(0, s)).mask();
        CHECK((level & ~table[level]) == 0);
    }

    CHECK(strategy_certainty(gm, 0).certainty.holds);
    CHECK(compatible_with_informativeness(gm.belief().op(0)).holds);
    CHECK_FALSE(satisfies(gm.belief().op(0), Axiom::finite_conjunction));
    const auto check = correct_belief_in_own_rationality(gm, 0);
    CHECK_FALSE(check.holds);
    CHECK(check.witness == StateIndex{1});

    const auto r = run_audit("own-rationality-fails-without-conjunction", files({data("no-conjunction.bm")}));
    CHECK(r.counterexamples_found == 1);
    CHECK(run_audit("own-rationality-correctly-believed", files({data("no-conjunction.bm")})).passed());
}

TEST_CASE("a truthful observer with both transfers can miss another player's type atoms")
{
    const auto loaded = dsl::load_file(data("truthful-transfer.bm"));
    const auto& m = loaded.belief;
    const auto observer = support::table_of(m.op(1));
    const auto subject = support::table_of(m.op(0));
    for (Mask e = 0; e < 8; ++e) {
        CHECK((observer[e] & ~e) == 0);
        const Mask believed = subject[e];
        const Mask unbelieved = 7 & ~subject[e];
        CHECK((believed & ~observer[believed]) == 0);
        CHECK((unbelieved & ~observer[unbelieved]) == 0);
    }
    // w1 is the only state whose type believes no proper event, so {w1} is an atom.
    for (Mask e = 0; e < 7; ++e) {
        CHECK((subject[e] & 1) == 0);
    }
    CHECK(subject[6] == 2);
    CHECK(subject[5] == 4);
    CHECK(observer[1] == 0);

    CHECK(satisfies(m.op(1), Axiom::truth));
    CHECK_FALSE(satisfies(m.op(1), Axiom::finite_conjunction));
    CHECK_FALSE(certain_of_type_mapping(m, 1, 0, TypeFamilyKind::sigma_atoms).holds);

    const auto r = run_audit("truthful-certain-of-atoms-iff-transfers", files({data("truthful-transfer.bm")}));
    CHECK_FALSE(r.passed());
    CHECK(direction(r, "transfers-imply-certain").violated == 1);
    CHECK(direction(r, "certain-implies-transfers").violated == 0);
    CHECK(run_audit("logical-certain-of-atoms-iff-transfers", files({data("truthful-transfer.bm")})).passed());
}
