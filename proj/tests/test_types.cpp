#include "support.hpp"

#include "metacert/qualitative_types.hpp"

#include <doctest.h>

using namespace metacert;
using support::Mask;
using support::ev;

namespace {

// Every monotone operator on two states (table entries range over 4 events).
std::vector<BeliefOperator> all_monotone_two_state()
{
    const auto space = StateSpace::numbered(2);
    std::vector<BeliefOperator> out;
    for (Mask code = 0; code < 256; ++code) {
        std::vector<Mask> t{code & 3U, (code >> 2) & 3U, (code >> 4) & 3U, (code >> 6) & 3U};
        const bool monotone = (t[0] & ~t[1]) == 0 && (t[0] & ~t[2]) == 0 && (t[1] & ~t[3]) == 0 && (t[2] & ~t[3]) == 0;
        if (monotone) {
            out.push_back(BeliefOperator::from_table(space, t, "1"));
        }
    }
    return out;
}

BeliefOperator random_operator(Rng& rng, std::size_t n)
{
    const auto space = StateSpace::numbered(n);
    if (rng.chance(1, 3)) {
        return support::kripke_operator(space, support::random_correspondence(rng, n), "1");
    }
    auto table = support::random_monotone_table(rng, n, rng.below(7));
    if (rng.coin()) {
        table.back() = (Mask{1} << n) - 1;
    }
    if (rng.coin()) {
        for (Mask e = 0; e < table.size(); ++e) {
            table[e] &= e;
        }
    }
    return BeliefOperator::from_table(space, table, "1");
}

} // namespace

TEST_CASE("type mapping of the worked operator")
{
    const auto t = type_mapping_of(support::worked_operator());
    for_each_event(3, [&](Event e) {
        CHECK(t.at(2).believes(e) == e.is_full());
        CHECK(t.at(0).believes(e) == e.contains(0));
    });
    CHECK(t.believers(ev(3, 0b011)) == ev(3, 0b011));
    CHECK(t.at(0).kernel() == ev(3, 1));
    CHECK(t.at(2).kernel() == Event::all(3));
    CHECK(t.realized().size() == 3);
    CHECK(operator_of(support::three(), t) == support::worked_operator());
}

TEST_CASE("type mapping of the identity operator")
{
    const auto t = type_mapping_of(identity_operator(StateSpace::numbered(4)));
    for (StateIndex s = 0; s < 4; ++s) {
        for_each_event(4, [&](Event e) { CHECK(t.at(s).believes(e) == e.contains(s)); });
    }
}

TEST_CASE("operator_of construction")
{
    const auto space = support::three();
    QualitativeType top{3};
    for_each_event(3, [&](Event e) { top.set(e, true); });
    const auto all = operator_of(space, QualitativeTypeMapping{"1", {top, top, top}});
    for_each_event(3, [&](Event e) { CHECK(all(e).is_full()); });

    auto t = type_mapping_of(identity_operator(space)).types();
    t[0].set(Event::all(3), false);
    t[0].set(ev(3, 0b001), false);
    t[0].set(ev(3, 0b011), false);
    t[0].set(ev(3, 0b101), false);
    const auto weak = operator_of(space, QualitativeTypeMapping{"1", t});
    CHECK_FALSE(satisfies(weak, Axiom::necessitation));

    auto broken = type_mapping_of(identity_operator(space)).types();
    broken[0].set(Event::all(3), false);
    CHECK_THROWS_AS((void)operator_of(space, QualitativeTypeMapping{"1", broken}), model_error);
}

TEST_CASE("round trip and type-form axioms agree with operator form")
{
    Rng rng{31};
    for (int trial = 0; trial < 400; ++trial) {
        const std::size_t n = 1 + rng.below(4);
        const auto op = random_operator(rng, n);
        const auto t = type_mapping_of(op);
        CHECK(operator_of(StateSpace::numbered(n), t) == op);
        for (const auto a : all_axioms) {
            const auto type_form = check_type_axiom(t, a);
            const auto op_form = check_axiom(op, a);
            INFO(to_string(a));
            CHECK(type_form.holds == op_form.holds);
            CHECK(type_form.witness == op_form.witness);
        }
    }
}

TEST_CASE("worked type mapping axioms")
{
    const auto t = type_mapping_of(support::worked_operator());
    CHECK(check_type_axiom(t, Axiom::truth).holds);
    const auto ni = check_type_axiom(t, Axiom::negative_introspection);
    CHECK_FALSE(ni.holds);
    REQUIRE(ni.witness);
    CHECK(ni.witness->states == std::vector<StateIndex>{2});
    CHECK(ni.witness->events == std::vector<Event>{ev(3, 1)});
}

TEST_CASE("observation families")
{
    SUBCASE("one state")
    {
        const auto t = type_mapping_of(identity_operator(StateSpace::numbered(1)));
        const auto beta = observation_family(t, TypeFamilyKind::beta);
        CHECK(beta.members.size() == 2);
        CHECK(beta.realized.size() == 1);
    }
    SUBCASE("worked mapping")
    {
        const auto t = type_mapping_of(support::worked_operator());
        const auto atoms = observation_family(t, TypeFamilyKind::sigma_atoms);
        CHECK(atoms.members == std::vector<ValueSet>{{0}, {1}, {2}});
        const auto up = observation_family(t, TypeFamilyKind::upward);
        REQUIRE(up.members.size() == 3);
        CHECK(up.members[0] == ValueSet{0});
        CHECK(up.members[1] == ValueSet{1});
        CHECK(up.members[2] == ValueSet{0, 1, 2});
        const auto neg = observation_family(t, TypeFamilyKind::neg_beta);
        const auto beta = observation_family(t, TypeFamilyKind::beta);
        const auto both = observation_family(t, TypeFamilyKind::beta_and_neg);
        CHECK(both.members.size() <= beta.members.size() + neg.members.size());
        for (const auto& m : beta.members) {
            CHECK(std::find(both.members.begin(), both.members.end(), m) != both.members.end());
        }
        for (const auto& m : neg.members) {
            CHECK(std::find(both.members.begin(), both.members.end(), m) != both.members.end());
        }
    }
    CHECK(parse_type_family("betaAndNeg") == TypeFamilyKind::beta_and_neg);
    CHECK(to_string(TypeFamilyKind::neg_beta) == "negBeta");
    CHECK_THROWS_AS((void)parse_type_family("atoms"), model_error);
}

TEST_CASE("certainty of type mappings on fixed models")
{
    const auto worked = support::worked_model();
    CHECK(certain_of_type_mapping(worked, 0, 0, TypeFamilyKind::beta).holds);
    CHECK_FALSE(certain_of_type_mapping(worked, 0, 0, TypeFamilyKind::neg_beta).holds);
    const auto space = support::three();
    const BeliefModel identity{space, {identity_operator(space), identity_operator(space, "2")}};
    CHECK(certain_of_type_mapping(identity, 0, 1, TypeFamilyKind::sigma_atoms).holds);
    CHECK(commonly_certain_of_profile(identity));
    CHECK_FALSE(commonly_certain_of_profile(worked));
}

TEST_CASE("atom certainty equals certainty of every union of atoms")
{
    Rng rng{32};
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + rng.below(3);
        const auto observer = random_operator(rng, n);
        const auto subject = type_mapping_of(random_operator(rng, n));
        const auto atoms = type_signal(subject, TypeFamilyKind::sigma_atoms);
        const Signal unions{atoms.codomain(), atoms.assignment(), families::powerset(atoms.codomain().size())};
        CHECK(certain_of(observer, atoms).holds == certain_of(observer, unions).holds);
    }
}

TEST_CASE("introspection characterisations on every two-state monotone operator")
{
    const auto ops = all_monotone_two_state();
    CHECK(ops.size() == 36);
    for (const auto& op : ops) {
        const BeliefModel m{StateSpace::numbered(2), {op}};
        const bool pi = satisfies(op, Axiom::positive_introspection);
        const bool ni = satisfies(op, Axiom::negative_introspection);
        CHECK(certain_of_type_mapping(m, 0, 0, TypeFamilyKind::beta).holds == pi);
        CHECK(certain_of_type_mapping(m, 0, 0, TypeFamilyKind::neg_beta).holds == ni);
        const bool atoms = certain_of_type_mapping(m, 0, 0, TypeFamilyKind::sigma_atoms).holds;
        if (atoms) {
            CHECK((pi && ni));
        }
        if (satisfies(op, Axiom::truth)) {
            CHECK(atoms == ni);
        }
        if (satisfies(op, Axiom::consistency) && satisfies(op, Axiom::countable_conjunction)) {
            CHECK(atoms == (pi && ni));
        }
    }
}

TEST_CASE("meta-certainty report clauses")
{
    SUBCASE("worked model")
    {
        const auto r = meta_certainty_report(support::worked_model());
        CHECK_FALSE(r.commonly_certain());
        CHECK(r.clause("common-equals-mutual").holds);
        CHECK(r.clause("identical-operators").holds);
        CHECK(r.clause("positive-transfer(1,2)").holds);
        CHECK_FALSE(r.clause("negative-transfer(1,2)").holds);
        CHECK(r.clause("player-equals-common(1)").holds);
        CHECK_FALSE(r.clause("common-negative-introspection(2)").holds);
        REQUIRE(r.clause("negative-transfer(1,2)").witness);
    }
    SUBCASE("identity model")
    {
        const auto space = support::three();
        const auto r = meta_certainty_report(BeliefModel{space, {identity_operator(space), identity_operator(space, "2")}});
        for (const auto& c : r.clauses) {
            INFO(c.name);
            CHECK(c.holds);
        }
    }
    SUBCASE("different operators")
    {
        const auto space = support::three();
        const BeliefModel m{space, {identity_operator(space), support::worked_operator("2")}};
        const auto r = meta_certainty_report(m);
        CHECK_FALSE(r.clause("identical-operators").holds);
        CHECK_THROWS_AS((void)r.clause("no-such-clause"), model_error);
        CHECK(r.clauses.front().name == "common-certainty-of-profile");
    }
}
