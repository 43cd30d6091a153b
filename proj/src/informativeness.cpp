#include "metacert/informativeness.hpp"

namespace metacert {

InformativenessRelation::InformativenessRelation(const QualitativeTypeMapping& t)
{
    const std::size_t n = t.states();
    upward_.assign(n, Event::none(n));
    for (StateIndex s = 0; s < n; ++s) {
        for (StateIndex u = 0; u < n; ++u) {
            if (t.at(s).pointwise_le(t.at(u))) {
                upward_[s] = upward_[s].with(u);
            }
        }
    }
}

bool InformativenessRelation::is_preorder() const
{
    for (StateIndex s = 0; s < states(); ++s) {
        if (!upward_[s].contains(s)) {
            return false;
        }
        bool transitive = true;
        // Anything above an element of up(s) is itself in up(s).
        for_each_state(upward_[s], [&](StateIndex u) { transitive = transitive && upward_[u].subset_of(upward_[s]); });
        if (!transitive) {
            return false;
        }
    }
    return true;
}

Event upward_set(const QualitativeTypeMapping& t, StateIndex s)
{
    if (s >= t.states()) {
        throw model_error("unknown state index " + std::to_string(s));
    }
    Event up = Event::none(t.states());
    for (StateIndex u = 0; u < t.states(); ++u) {
        if (t.at(s).pointwise_le(t.at(u))) {
            up = up.with(u);
        }
    }
    return up;
}

AxiomReport compatible_with_informativeness(const BeliefOperator& op)
{
    const auto t = type_mapping_of(op);
    const InformativenessRelation rel{t};
    const std::size_t n = op.states();
    AxiomReport report{"CompatibleWithInformativeness", true, std::nullopt};
    for (std::size_t m = 0; m < event_count(n) && report.holds; ++m) {
        const Event e{static_cast<Event::mask_type>(m), n};
        for_each_state(op(e), [&](StateIndex s) {
            if (report.holds && !rel.upward(s).intersects(e)) {
                report.holds = false;
                report.witness = Witness{{e}, {s}};
            }
        });
    }
    return report;
}

std::string_view to_string(ImplicationStatus status)
{
    switch (status) {
    case ImplicationStatus::vacuous: return "vacuous";
    case ImplicationStatus::confirmed: return "confirmed";
    case ImplicationStatus::violated: return "VIOLATED";
    }
    return "?";
}

CompatibilityVerdict compatibility_from_certainty(const BeliefModel& model, PlayerIndex player)
{
    model.require_player(player);
    const auto& op = model.op(player);
    CompatibilityVerdict v;
    v.consistent_and_conjunctive = satisfies(op, Axiom::consistency) && satisfies(op, Axiom::finite_conjunction);
    v.certain_of_upward_family = certain_of(op, type_signal(type_mapping_of(op), TypeFamilyKind::upward)).holds;
    v.compatible = compatible_with_informativeness(op).holds;
    v.status = implication(v.upward_sets_are_events && v.consistent_and_conjunctive && v.certain_of_upward_family,
                           v.compatible);
    return v;
}

} // namespace metacert
