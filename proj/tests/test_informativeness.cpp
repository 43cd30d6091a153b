#include "support.hpp"

#include "metacert/informativeness.hpp"

#include <doctest.h>

using namespace metacert;
using support::Mask;
using support::ev;

TEST_CASE("upward sets")
{
    const auto id = type_mapping_of(identity_operator(support::three()));
    for (StateIndex s = 0; s < 3; ++s) {
        CHECK(upward_set(id, s) == Event::singleton(3, s));
    }
    const auto worked = type_mapping_of(support::worked_operator());
    CHECK(upward_set(worked, 2) == Event::all(3));
    CHECK(upward_set(worked, 0) == ev(3, 1));
    CHECK(upward_set(worked, 1) == ev(3, 2));
    CHECK_THROWS_AS((void)upward_set(worked, 3), model_error);
    const InformativenessRelation rel{worked};
    CHECK(rel.is_preorder());
    CHECK(rel.at_least_as_informative(0, 2));
    CHECK_FALSE(rel.at_least_as_informative(2, 0));
}

TEST_CASE("compatibility examples")
{
    CHECK(compatible_with_informativeness(identity_operator(support::three())).holds);
    CHECK(compatible_with_informativeness(support::worked_operator()).holds);
    const auto all = BeliefOperator::from_table(support::three(), std::vector<Mask>(8, 7), "1");
    const auto r = compatible_with_informativeness(all);
    CHECK_FALSE(r.holds);
    REQUIRE(r.witness);
    CHECK(r.witness->events == std::vector<Event>{Event::none(3)});
    CHECK(r.witness->states == std::vector<StateIndex>{0});
    CHECK(r.property == "CompatibleWithInformativeness");
}

TEST_CASE("informativeness properties over every correspondence on three states")
{
    const auto space = support::three();
    std::size_t confirmed = 0;
    support::for_each_correspondence(3, [&](const std::vector<Mask>& b) {
        const auto op = support::kripke_operator(space, b, "1");
        const auto t = type_mapping_of(op);
        const InformativenessRelation rel{t};
        CHECK(rel.is_preorder());
        for (StateIndex s = 0; s < 3; ++s) {
            Mask expected = 0;
            for (StateIndex u = 0; u < 3; ++u) {
                if ((b[u] & ~b[s]) == 0) {
                    expected |= Mask{1} << u;
                }
            }
            CHECK(upward_set(t, s).mask() == expected);
            CHECK(rel.upward(s) == upward_set(t, s));
        }
        const bool compatible = compatible_with_informativeness(op).holds;
        if (satisfies(op, Axiom::consistency) && satisfies(op, Axiom::positive_introspection)) {
            CHECK(compatible);
        }
        const BeliefModel m{space, {op}};
        const auto v = compatibility_from_certainty(m, 0);
        CHECK(v.status != ImplicationStatus::violated);
        confirmed += v.status == ImplicationStatus::confirmed ? 1 : 0;
    });
    CHECK(confirmed > 0);
}

TEST_CASE("compatibility consequences on random monotone operators")
{
    Rng rng{41};
    for (int trial = 0; trial < 2000; ++trial) {
        const std::size_t n = 1 + rng.below(3);
        const auto op = BeliefOperator::from_table(StateSpace::numbered(n),
                                                   support::random_monotone_table(rng, n, rng.below(6)), "1");
        const auto t = type_mapping_of(op);
        CHECK(InformativenessRelation{t}.is_preorder());
        if (compatible_with_informativeness(op).holds) {
            CHECK(op(Event::none(n)).is_empty());
            if (satisfies(op, Axiom::finite_conjunction)) {
                CHECK(satisfies(op, Axiom::consistency));
            }
        }
        const BeliefModel m{StateSpace::numbered(n), {op}};
        CHECK(compatibility_from_certainty(m, 0).status != ImplicationStatus::violated);
    }
}

TEST_CASE("compatibility verdict statuses")
{
    const auto space = support::three();
    const auto id = compatibility_from_certainty(BeliefModel{space, {identity_operator(space)}}, 0);
    CHECK(id.upward_sets_are_events);
    CHECK(id.consistent_and_conjunctive);
    CHECK(id.certain_of_upward_family);
    CHECK(id.compatible);
    CHECK(id.status == ImplicationStatus::confirmed);
    const auto all = BeliefOperator::from_table(space, std::vector<Mask>(8, 7), "1");
    CHECK(compatibility_from_certainty(BeliefModel{space, {all}}, 0).status == ImplicationStatus::vacuous);
    CHECK(to_string(ImplicationStatus::violated) == "VIOLATED");
    CHECK(implication(true, false) == ImplicationStatus::violated);
}
