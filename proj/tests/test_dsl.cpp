#include "support.hpp"

#include "metacert/dsl.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace metacert;
using namespace metacert::dsl;
using support::Mask;

namespace {

std::string read(const std::string& name)
{
    std::ifstream in{std::string{METACERT_TEST_DATA} + "/" + name, std::ios::binary};
    REQUIRE(in);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

parse_error error_of(std::string_view text)
{
    try {
        (void)load_text(text);
    } catch (const parse_error& e) {
        return e;
    }
    FAIL("expected a parse error");
    throw std::logic_error("unreachable");
}

} // namespace

TEST_CASE("the worked example file round-trips byte for byte")
{
    const auto text = read("example31.bm");
    const auto doc = parse_model_spec(text);
    CHECK(serialize(doc) == text);
    const auto loaded = load(doc);
    CHECK(loaded.belief.op(0) == support::worked_operator());
    CHECK(loaded.belief.op(1) == support::worked_operator("2"));
    CHECK(loaded.belief.player_name(1) == "2");
    CHECK(loaded.signal("y").assignment() == std::vector<std::size_t>{0, 1, 0});
    CHECK(loaded.signal("x").family() == families::singletons(2));
    CHECK_THROWS_AS((void)loaded.signal("z"), model_error);
    CHECK_FALSE(loaded.game);
}

TEST_CASE("game files load and canonicalise idempotently")
{
    const auto text = read("pd.bm");
    const auto doc = parse_model_spec(text);
    const auto canonical = serialize(doc);
    CHECK(canonical != text);
    CHECK(serialize(parse_model_spec(canonical)) == canonical);
    CHECK(parse_model_spec(canonical) == doc);
    const auto loaded = load(doc);
    REQUIRE(loaded.game);
    const auto& g = loaded.game->game();
    CHECK(g.actions(0) == std::vector<std::string>{"C", "D"});
    CHECK(g.ranks(0) == std::vector<long>{3, 1, 4, 2});
    CHECK(g.ranks(1) == std::vector<long>{3, 4, 1, 2});
    CHECK(loaded.game->strategy(1) == std::vector<ActionIndex>{1, 1});
    CHECK(loaded.belief.op(0) == identity_operator(loaded.belief.space()));
}

TEST_CASE("document_of round-trips random models, signals and games")
{
    Rng rng{61};
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng.below(4);
        const auto space = StateSpace::numbered(n);
        std::vector<BeliefOperator> ops;
        for (std::size_t i = 0, k = 1 + rng.below(2); i < k; ++i) {
            const auto owner = std::to_string(i + 1);
            ops.push_back(rng.coin() ? support::kripke_operator(space, support::random_correspondence(rng, n), owner)
                                     : BeliefOperator::from_table(
                                           space, support::random_monotone_table(rng, n, rng.below(5)), owner));
        }
        const BeliefModel model{space, ops};
        std::vector<std::size_t> values(n);
        for (auto& v : values) {
            v = rng.below(3);
        }
        const std::vector<NamedSignal> signals{{"x", Signal{{"p", "q", "r"}, values, {{0}, {1, 2}, {}}}}};
        std::vector<std::vector<ActionIndex>> strategies;
        std::vector<std::vector<std::string>> actions;
        std::vector<std::string> ids;
        std::size_t profiles = 1;
        for (std::size_t i = 0; i < ops.size(); ++i) {
            ids.push_back(ops[i].owner());
            actions.push_back({"s", "t"});
            profiles *= 2;
            std::vector<ActionIndex> sigma(n);
            for (auto& a : sigma) {
                a = rng.below(2);
            }
            strategies.push_back(sigma);
        }
        std::vector<std::vector<long>> ranks(ops.size(), std::vector<long>(profiles));
        for (auto& r : ranks) {
            for (auto& v : r) {
                v = static_cast<long>(rng.below(7)) - 3;
            }
        }
        const GameModel gm{model, Game{ids, actions, ranks}, strategies};
        const auto doc = document_of(model, signals, &gm);
        const auto text = serialize(doc);
        CHECK(parse_model_spec(text) == doc);
        CHECK(serialize(parse_model_spec(text)) == text);
        const auto loaded = load_text(text);
        for (PlayerIndex i = 0; i < model.players(); ++i) {
            CHECK(loaded.belief.op(i) == model.op(i));
        }
        CHECK(loaded.signal("x") == signals[0].signal);
        REQUIRE(loaded.game);
        CHECK(loaded.game->game() == gm.game());
        for (PlayerIndex i = 0; i < model.players(); ++i) {
            CHECK(loaded.game->strategy(i) == gm.strategy(i));
        }
    }
}

TEST_CASE("syntax and lexical diagnostics")
{
    const auto empty = error_of("");
    CHECK(empty.kind() == ErrorKind::syntax);
    CHECK(empty.where().line == 1);
    CHECK(empty.where().column == 1);
    CHECK(std::string{empty.what()} == "1:1: syntax error: expected 'states' but found end of input");

    const auto lexical = error_of("states w1;\nplayer 1 { kripke { w1: {w1} @ } }");
    CHECK(lexical.kind() == ErrorKind::lexical);
    CHECK(lexical.where().line == 2);
    CHECK(lexical.where().column == 30);

    const auto missing_brace = error_of("states w1;\nplayer 1 { kripke { w1 {w1} } }");
    CHECK(missing_brace.kind() == ErrorKind::syntax);
    CHECK(missing_brace.message() == "expected ':' but found '{'");

    CHECK(error_of("states ;").kind() == ErrorKind::syntax);
    CHECK(error_of("states w1; signal").kind() == ErrorKind::syntax);
    CHECK(error_of("states w1; player 1 { modal { } }").kind() == ErrorKind::syntax);
    CHECK(error_of("states w1; player 1 { kripke { w1: {w1} } } game { } game { }").kind() == ErrorKind::syntax);
    CHECK(error_of("states w1; player 1 { kripke { w1: {w1} } } game { actions 1: a; rank 1: a = x; }").kind() ==
          ErrorKind::syntax);
}

TEST_CASE("semantic diagnostics")
{
    const auto missing = error_of("states w1 w2 w3;\nplayer 1 {\n  kripke { w1: {w1}; w2: {w2} }\n}");
    CHECK(missing.kind() == ErrorKind::semantic);
    CHECK(missing.message().find("'w3'") != std::string::npos);
    CHECK(missing.where().line == 2);

    const auto unknown = error_of("states w1;\nplayer 1 { kripke { w1: {w9} } }");
    CHECK(unknown.kind() == ErrorKind::semantic);
    CHECK(unknown.message() == "unknown state 'w9'");
    CHECK(unknown.where().column == 25);

    CHECK(error_of("states w1 w1; player 1 { kripke { w1: {} } }").message() == "duplicate state 'w1'");
    CHECK(error_of("states w1;").message() == "a model needs at least one player block");
    CHECK(error_of("states w1; player 1 { kripke { w1: {} } } player 1 { kripke { w1: {} } }").message() ==
          "duplicate player '1'");

    const auto partial = error_of("states w1 w2; player 1 { table { {}: {}; {w1}: {w1} } }");
    CHECK(partial.message().find("use 'core'") != std::string::npos);

    const auto non_monotone = error_of("states w1 w2; player 1 { table { {}: {}; {w1}: {w1}; {w2}: {}; {w1,w2}: {} } }");
    CHECK(non_monotone.kind() == ErrorKind::semantic);
    CHECK(non_monotone.message().find("{w1,w2}") != std::string::npos);

    CHECK(error_of("states w1; player 1 { kripke { w1: {} } } signal x : {a} { w1 -> b } family singletons")
              .message() == "unknown value of signal 'x' 'b'");
    CHECK(error_of("states w1 w2; player 1 { kripke { w1: {} w2: {} } } signal x : {a} { w1 -> a } family powerset")
              .message()
              .find("no value at state 'w2'") != std::string::npos);
    CHECK(error_of("states w1; player 1 { kripke { w1: {} } } game { actions 1: a; rank 1: a = 1; }").message() ==
          "game block has no strategy for player '1'");
    CHECK(error_of("states w1; player 1 { kripke { w1: {} } } game { actions 1: a b; rank 1: a = 1; "
                   "strategy 1 { w1 -> a } }")
              .message()
              .find("no rank") != std::string::npos);
    CHECK(error_of("states w1; player 1 { kripke { w1: {} } } game { actions 2: a; }").message() ==
          "unknown player '2'");
}

TEST_CASE("core blocks and free-form layout")
{
    const auto loaded = load_text("# comment line\nstates a b\n;player i{core{{a}:{a}}}player j{kripke{a:{a,b},b:{b}}}");
    const auto& op = loaded.belief.op(0);
    const auto& space = loaded.belief.space();
    CHECK(op(space.parse("{a}")) == space.parse("{a}"));
    CHECK(op(space.parse("{a,b}")) == space.parse("{a}"));
    CHECK(op(space.parse("{b}")).is_empty());
    CHECK(loaded.belief.player_index("j") == 1);
    const auto unicode = load_text("states ω1 ω2; player 1 { kripke { ω1: {ω1}; ω2: {ω2} } } "
                                   "signal s : {u v} { ω1→u; ω2 → v } family { {u} {v} }");
    CHECK(unicode.belief.space().name(0) == "ω1");
    CHECK(unicode.signal("s").assignment() == std::vector<std::size_t>{0, 1});
}
