#include "metacert/qualitative_types.hpp"

#include <algorithm>
#include <array>

namespace metacert {

QualitativeType::QualitativeType(std::size_t states)
    : states_{states}, words_((event_count(states) + 63) / 64, 0)
{
}

void QualitativeType::set(Event e, bool value)
{
    const auto bit = std::uint64_t{1} << (e.index() % 64);
    if (value) {
        words_[e.index() / 64] |= bit;
    } else {
        words_[e.index() / 64] &= ~bit;
    }
}

bool QualitativeType::pointwise_le(const QualitativeType& other) const
{
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if ((words_[w] & ~other.words_[w]) != 0) {
            return false;
        }
    }
    return true;
}

Event QualitativeType::kernel() const
{
    Event k = Event::all(states_);
    for_each_event(states_, [&](Event e) {
        if (believes(e)) {
            k &= e;
        }
    });
    return k;
}

QualitativeTypeMapping::QualitativeTypeMapping(std::string owner, std::vector<QualitativeType> types)
    : owner_{std::move(owner)}, types_{std::move(types)}
{
    if (types_.empty()) {
        throw model_error("type mapping needs at least one state");
    }
    for (const auto& t : types_) {
        if (t.states() != types_.size()) {
            throw model_error("every type must be defined on the mapping's own state space");
        }
    }
}

Event QualitativeTypeMapping::believers(Event e) const
{
    Event out = Event::none(states());
    for (StateIndex s = 0; s < states(); ++s) {
        if (types_[s].believes(e)) {
            out = out.with(s);
        }
    }
    return out;
}

RealizedTypes QualitativeTypeMapping::realized() const
{
    RealizedTypes r;
    r.class_of.resize(states());
    for (StateIndex s = 0; s < states(); ++s) {
        auto it = std::find_if(r.representative.begin(), r.representative.end(),
                               [&](StateIndex rep) { return types_[rep] == types_[s]; });
        if (it == r.representative.end()) {
            r.class_of[s] = r.representative.size();
            r.representative.push_back(s);
        } else {
            r.class_of[s] = static_cast<std::size_t>(it - r.representative.begin());
        }
    }
    return r;
}

QualitativeTypeMapping type_mapping_of(const BeliefOperator& op)
{
    if (!op.has_table()) {
        throw model_error("type mappings need a tabulated operator");
    }
    const std::size_t n = op.states();
    std::vector<QualitativeType> types(n, QualitativeType{n});
    for_each_event(n, [&](Event e) { for_each_state(op(e), [&](StateIndex s) { types[s].set(e, true); }); });
    return QualitativeTypeMapping{op.owner(), std::move(types)};
}

BeliefOperator operator_of(const StateSpace& space, const QualitativeTypeMapping& t)
{
    if (t.states() != space.size()) {
        throw model_error("type mapping and state space differ in size");
    }
    std::vector<Event::mask_type> table(event_count(space.size()));
    for_each_event(space.size(), [&](Event e) { table[e.index()] = t.believers(e).mask(); });
    return BeliefOperator::from_table(space, std::move(table), t.owner());
}

namespace {

AxiomReport type_fail(Axiom a, std::vector<Event> events, StateIndex s)
{
    return AxiomReport{std::string{to_string(a)}, false, Witness{std::move(events), {s}}};
}

AxiomReport type_pass(Axiom a) { return AxiomReport{std::string{to_string(a)}, true, std::nullopt}; }

// First event (ascending) with a state violating `ok(state, event)`.
template <typename Ok>
AxiomReport per_event_state(const QualitativeTypeMapping& t, Axiom a, Ok ok)
{
    const std::size_t n = t.states();
    for (std::size_t m = 0; m < event_count(n); ++m) {
        const Event e{static_cast<Event::mask_type>(m), n};
        for (StateIndex s = 0; s < n; ++s) {
            if (!ok(s, e)) {
                return type_fail(a, {e}, s);
            }
        }
    }
    return type_pass(a);
}

AxiomReport type_conjunction(const QualitativeTypeMapping& t, Axiom a)
{
    const std::size_t n = t.states();
    for (std::size_t m1 = 0; m1 < event_count(n); ++m1) {
        const Event e{static_cast<Event::mask_type>(m1), n};
        for (std::size_t m2 = m1 + 1; m2 < event_count(n); ++m2) {
            const Event f{static_cast<Event::mask_type>(m2), n};
            for (StateIndex s = 0; s < n; ++s) {
                const auto& mu = t.at(s);
                if (std::min(mu.believes(e), mu.believes(f)) > static_cast<int>(mu.believes(e & f))) {
                    return type_fail(a, {e, f}, s);
                }
            }
        }
    }
    return type_pass(a);
}

} // namespace

AxiomReport check_type_axiom(const QualitativeTypeMapping& t, Axiom axiom)
{
    const std::size_t n = t.states();
    switch (axiom) {
    case Axiom::monotonicity: {
        for (std::size_t m1 = 0; m1 < event_count(n); ++m1) {
            const Event e{static_cast<Event::mask_type>(m1), n};
            for (std::size_t m2 = m1; m2 < event_count(n); ++m2) {
                const Event f{static_cast<Event::mask_type>(m2), n};
                if (!e.subset_of(f)) {
                    continue;
                }
                for (StateIndex s = 0; s < n; ++s) {
                    if (t.at(s).believes(e) && !t.at(s).believes(f)) {
                        return type_fail(axiom, {e, f}, s);
                    }
                }
            }
        }
        return type_pass(axiom);
    }
    case Axiom::necessitation:
        for (StateIndex s = 0; s < n; ++s) {
            if (!t.at(s).believes(Event::all(n))) {
                return type_fail(axiom, {Event::all(n)}, s);
            }
        }
        return type_pass(axiom);
    case Axiom::finite_conjunction:
    case Axiom::countable_conjunction:
        return type_conjunction(t, axiom);
    case Axiom::kripke: {
        std::vector<Event> kernels;
        for (StateIndex s = 0; s < n; ++s) {
            kernels.push_back(t.at(s).kernel());
        }
        return per_event_state(t, axiom, [&](StateIndex s, Event e) {
            return t.at(s).believes(e) == kernels[s].subset_of(e);
        });
    }
    case Axiom::consistency:
        return per_event_state(t, axiom, [&](StateIndex s, Event e) {
            return !(t.at(s).believes(e) && t.at(s).believes(e.complement()));
        });
    case Axiom::truth:
        return per_event_state(t, axiom,
                               [&](StateIndex s, Event e) { return !t.at(s).believes(e) || e.contains(s); });
    case Axiom::positive_introspection:
        return per_event_state(t, axiom, [&](StateIndex s, Event e) {
            return !t.at(s).believes(e) || t.at(s).believes(t.believers(e));
        });
    case Axiom::negative_introspection:
        return per_event_state(t, axiom, [&](StateIndex s, Event e) {
            return t.at(s).believes(e) || t.at(s).believes(t.believers(e).complement());
        });
    }
    throw model_error("unhandled axiom");
}

namespace {

constexpr std::array<std::string_view, 5> family_names{"beta", "negBeta", "betaAndNeg", "sigmaAtoms", "upward"};

void add_unique(std::vector<ValueSet>& members, ValueSet set)
{
    if (std::find(members.begin(), members.end(), set) == members.end()) {
        members.push_back(std::move(set));
    }
}

} // namespace

std::string_view to_string(TypeFamilyKind kind) { return family_names[static_cast<std::size_t>(kind)]; }

TypeFamilyKind parse_type_family(std::string_view id)
{
    for (std::size_t i = 0; i < family_names.size(); ++i) {
        if (family_names[i] == id) {
            return static_cast<TypeFamilyKind>(i);
        }
    }
    throw model_error("unknown type observation family '" + std::string{id} + "'");
}

TypeObservationFamily observation_family(const QualitativeTypeMapping& t, TypeFamilyKind kind)
{
    TypeObservationFamily family{kind, t.realized(), {}};
    const auto& reps = family.realized.representative;
    const std::size_t n = t.states();
    auto beta = [&](Event e, bool negate) {
        ValueSet set;
        for (std::size_t c = 0; c < reps.size(); ++c) {
            if (t.at(reps[c]).believes(e) != negate) {
                set.push_back(c);
            }
        }
        return set;
    };
    switch (kind) {
    case TypeFamilyKind::beta:
    case TypeFamilyKind::neg_beta:
        for_each_event(n, [&](Event e) { add_unique(family.members, beta(e, kind == TypeFamilyKind::neg_beta)); });
        break;
    case TypeFamilyKind::beta_and_neg:
        for_each_event(n, [&](Event e) { add_unique(family.members, beta(e, false)); });
        for_each_event(n, [&](Event e) { add_unique(family.members, beta(e, true)); });
        break;
    case TypeFamilyKind::sigma_atoms:
        for (std::size_t c = 0; c < reps.size(); ++c) {
            family.members.push_back({c});
        }
        break;
    case TypeFamilyKind::upward:
        for (StateIndex s = 0; s < n; ++s) {
            ValueSet up;
            for (std::size_t c = 0; c < reps.size(); ++c) {
                if (t.at(s).pointwise_le(t.at(reps[c]))) {
                    up.push_back(c);
                }
            }
            add_unique(family.members, std::move(up));
        }
        break;
    }
    return family;
}

Signal type_signal(const QualitativeTypeMapping& t, TypeFamilyKind kind)
{
    auto family = observation_family(t, kind);
    std::vector<std::string> codomain;
    for (auto rep : family.realized.representative) {
        codomain.push_back("t(" + std::to_string(rep) + ")");
    }
    return Signal{std::move(codomain), family.realized.class_of, std::move(family.members)};
}

CertaintyReport certain_of_type_mapping(const BeliefModel& model, PlayerIndex observer, PlayerIndex subject,
                                        TypeFamilyKind kind)
{
    model.require_player(observer);
    model.require_player(subject);
    return certain_of(model.op(observer), type_signal(type_mapping_of(model.op(subject)), kind));
}

bool commonly_certain_of_profile(const BeliefModel& model)
{
    for (PlayerIndex j = 0; j < model.players(); ++j) {
        const auto x = type_signal(type_mapping_of(model.op(j)), TypeFamilyKind::sigma_atoms);
        if (!commonly_certain_of(model, x).holds) {
            return false;
        }
    }
    return true;
}

const Clause& MetaCertaintyReport::clause(std::string_view name) const
{
    for (const auto& c : clauses) {
        if (c.name == name) {
            return c;
        }
    }
    throw model_error("no clause named '" + std::string{name} + "'");
}

namespace {

// First event with a state in lhs(E) but outside rhs(E).
template <typename Lhs, typename Rhs>
Clause containment(std::string name, std::size_t n, Lhs lhs, Rhs rhs)
{
    Clause c{std::move(name), true, std::nullopt};
    for (std::size_t m = 0; m < event_count(n); ++m) {
        const Event e{static_cast<Event::mask_type>(m), n};
        const Event bad = lhs(e) - rhs(e);
        if (!bad.is_empty()) {
            c.holds = false;
            c.witness = Witness{{e}, {bad.first()}};
            break;
        }
    }
    return c;
}

template <typename Lhs, typename Rhs>
Clause equality(std::string name, std::size_t n, Lhs lhs, Rhs rhs)
{
    Clause c{std::move(name), true, std::nullopt};
    for (std::size_t m = 0; m < event_count(n); ++m) {
        const Event e{static_cast<Event::mask_type>(m), n};
        const Event l = lhs(e);
        const Event r = rhs(e);
        if (l != r) {
            c.holds = false;
            c.witness = Witness{{e}, {((l - r) | (r - l)).first()}};
            break;
        }
    }
    return c;
}

} // namespace

MetaCertaintyReport meta_certainty_report(const BeliefModel& model)
{
    const std::size_t n = model.states();
    const auto common = common_belief_table(model);
    auto C = [&](Event e) { return common[e.index()]; };
    MetaCertaintyReport report;

    Clause profile{"common-certainty-of-profile", true, std::nullopt};
    for (PlayerIndex j = 0; j < model.players() && profile.holds; ++j) {
        const auto x = type_signal(type_mapping_of(model.op(j)), TypeFamilyKind::sigma_atoms);
        for (StateIndex s = 0; s < n; ++s) {
            const Event atom = x.preimage_of({x.value(s)});
            if (!C(atom).contains(s)) {
                profile.holds = false;
                profile.witness = Witness{{atom}, {s}};
                break;
            }
        }
    }
    report.clauses.push_back(std::move(profile));

    for (PlayerIndex i = 0; i < model.players(); ++i) {
        for (PlayerIndex j = 0; j < model.players(); ++j) {
            const auto& bi = model.op(i);
            const auto& bj = model.op(j);
            const std::string pair = "(" + model.player_name(i) + "," + model.player_name(j) + ")";
            report.clauses.push_back(containment(
                "positive-transfer" + pair, n, [&](Event e) { return bj(e); }, [&](Event e) { return bi(bj(e)); }));
            report.clauses.push_back(containment(
                "negative-transfer" + pair, n, [&](Event e) { return bj.disbelief(e); },
                [&](Event e) { return bi(bj.disbelief(e)); }));
        }
    }

    Clause identical{"identical-operators", true, std::nullopt};
    for (PlayerIndex j = 1; j < model.players() && identical.holds; ++j) {
        auto c = equality(identical.name, n, [&](Event e) { return model.op(0)(e); },
                          [&](Event e) { return model.op(j)(e); });
        if (!c.holds) {
            identical = std::move(c);
        }
    }
    report.clauses.push_back(std::move(identical));

    report.clauses.push_back(equality(
        "common-equals-mutual", n, C, [&](Event e) { return mutual_belief(model, e); }));

    for (PlayerIndex i = 0; i < model.players(); ++i) {
        report.clauses.push_back(equality("player-equals-common(" + model.player_name(i) + ")", n,
                                          [&](Event e) { return model.op(i)(e); }, C));
    }
    for (PlayerIndex i = 0; i < model.players(); ++i) {
        const auto& bi = model.op(i);
        report.clauses.push_back(containment("common-positive-introspection(" + model.player_name(i) + ")", n,
                                             [&](Event e) { return bi(e); }, [&](Event e) { return C(bi(e)); }));
        report.clauses.push_back(containment("common-negative-introspection(" + model.player_name(i) + ")", n,
                                             [&](Event e) { return bi.disbelief(e); },
                                             [&](Event e) { return C(bi.disbelief(e)); }));
    }
    return report;
}

} // namespace metacert
