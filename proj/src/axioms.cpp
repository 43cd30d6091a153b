#include "metacert/axioms.hpp"


namespace metacert {

namespace {

constexpr std::array<std::string_view, 9> axiom_names{
    "Monotonicity", "Necessitation", "FiniteConjunction", "CountableConjunction", "Kripke",
    "Consistency",  "TruthAxiom",    "PositiveIntrospection", "NegativeIntrospection",
};

constexpr std::array<std::string_view, 4> frame_names{"serial", "reflexive", "transitive", "euclidean"};

AxiomReport pass(Axiom a) { return AxiomReport{std::string{to_string(a)}, true, std::nullopt}; }

AxiomReport fail(Axiom a, std::vector<Event> events, Event failing)
{
    return AxiomReport{std::string{to_string(a)}, false, Witness{std::move(events), {failing.first()}}};
}

// Checks `lhs(E) subset of rhs(E)` for every E; reports the first E.
template <typename Lhs, typename Rhs>
AxiomReport per_event(const BeliefOperator& op, Axiom a, Lhs lhs, Rhs rhs)
{
    const std::size_t n = op.states();
    for (std::size_t m = 0; m < event_count(n); ++m) {
        const Event e{static_cast<Event::mask_type>(m), n};
        const Event bad = lhs(e) - rhs(e);
        if (!bad.is_empty()) {
            return fail(a, {e}, bad);
        }
    }
    return pass(a);
}

AxiomReport check_monotonicity(const BeliefOperator& op)
{
    const std::size_t n = op.states();
    const auto full = Event::full_mask(n);
    for (std::size_t m = 0; m < event_count(n); ++m) {
        const Event e{static_cast<Event::mask_type>(m), n};
        const Event be = op(e);
        // Supersets of e in ascending order: e | s for ascending submasks s of the complement.
        const auto rest = full & ~e.mask();
        Event::mask_type s = 0;
        while (true) {
            const Event f{e.mask() | s, n};
            const Event bad = be - op(f);
            if (!bad.is_empty()) {
                return fail(Axiom::monotonicity, {e, f}, bad);
            }
            if (s == rest) {
                break;
            }
            s = (s - rest) & rest;
        }
    }
    return pass(Axiom::monotonicity);
}

// Per-state filter test: whenever something is believed at w, the
// intersection of everything believed at w is believed at w.
std::optional<StateIndex> first_non_filter_state(const BeliefOperator& op)
{
    const auto possible = derive_correspondence(op);
    const std::size_t n = op.states();
    const Event somewhere = op(Event::all(n));
    for (StateIndex s = 0; s < n; ++s) {
        if (somewhere.contains(s) && !op(possible[s]).contains(s)) {
            return s;
        }
    }
    return std::nullopt;
}

AxiomReport conjunction_witness(const BeliefOperator& op, Axiom a)
{
    const std::size_t n = op.states();
    for (std::size_t m1 = 0; m1 < event_count(n); ++m1) {
        const Event e{static_cast<Event::mask_type>(m1), n};
        const Event be = op(e);
        if (be.is_empty()) {
            continue;
        }
        for (std::size_t m2 = m1 + 1; m2 < event_count(n); ++m2) {
            const Event f{static_cast<Event::mask_type>(m2), n};
            const Event bad = (be & op(f)) - op(e & f);
            if (!bad.is_empty()) {
                return fail(a, {e, f}, bad);
            }
        }
    }
    return pass(a);
}

AxiomReport check_conjunction(const BeliefOperator& op, Axiom a)
{
    if (!first_non_filter_state(op)) {
        return pass(a);
    }
    return conjunction_witness(op, a);
}

AxiomReport from_frame(const BeliefOperator& op, Axiom a)
{
    const auto& b = *op.correspondence();
    FrameProperty p{};
    switch (a) {
    case Axiom::consistency: p = FrameProperty::serial; break;
    case Axiom::truth: p = FrameProperty::reflexive; break;
    case Axiom::positive_introspection: p = FrameProperty::transitive; break;
    case Axiom::negative_introspection: p = FrameProperty::euclidean; break;
    default: return pass(a);
    }
    auto report = correspondence_property(b, p);
    report.property = std::string{to_string(a)};
    return report;
}

} // namespace

std::string_view to_string(Axiom a) { return axiom_names[static_cast<std::size_t>(a)]; }

Axiom parse_axiom(std::string_view id)
{
    for (std::size_t i = 0; i < axiom_names.size(); ++i) {
        if (axiom_names[i] == id) {
            return static_cast<Axiom>(i);
        }
    }
    throw model_error("unknown axiom '" + std::string{id} + "'");
}

std::string_view to_string(FrameProperty p) { return frame_names[static_cast<std::size_t>(p)]; }

FrameProperty parse_frame_property(std::string_view id)
{
    for (std::size_t i = 0; i < frame_names.size(); ++i) {
        if (frame_names[i] == id) {
            return static_cast<FrameProperty>(i);
        }
    }
    throw model_error("unknown frame property '" + std::string{id} + "'");
}

AxiomReport check_axiom(const BeliefOperator& op, Axiom axiom)
{
    if (!op.has_table()) {
        return from_frame(op, axiom);
    }
    const std::size_t n = op.states();
    const auto same = [](Event e) { return e; };
    switch (axiom) {
    case Axiom::monotonicity:
        return check_monotonicity(op);
    case Axiom::necessitation: {
        const Event full = Event::all(n);
        const Event bad = full - op(full);
        return bad.is_empty() ? pass(axiom) : fail(axiom, {full}, bad);
    }
    case Axiom::finite_conjunction:
    case Axiom::countable_conjunction:
        return check_conjunction(op, axiom);
    case Axiom::kripke: {
        const auto possible = derive_correspondence(op);
        for (std::size_t m = 0; m < event_count(n); ++m) {
            const Event e{static_cast<Event::mask_type>(m), n};
            Event formula = Event::none(n);
            for (StateIndex s = 0; s < n; ++s) {
                if (possible[s].subset_of(e)) {
                    formula = formula.with(s);
                }
            }
            const Event diff = (formula - op(e)) | (op(e) - formula);
            if (!diff.is_empty()) {
                return fail(axiom, {e}, diff);
            }
        }
        return pass(axiom);
    }
    case Axiom::consistency:
        return per_event(op, axiom, [&](Event e) { return op(e); }, [&](Event e) { return op.disbelief(e.complement()); });
    case Axiom::truth:
        return per_event(op, axiom, [&](Event e) { return op(e); }, same);
    case Axiom::positive_introspection:
        return per_event(op, axiom, [&](Event e) { return op(e); }, [&](Event e) { return op(op(e)); });
    case Axiom::negative_introspection:
        return per_event(op, axiom, [&](Event e) { return op.disbelief(e); },
                         [&](Event e) { return op(op.disbelief(e)); });
    }
    throw model_error("unhandled axiom");
}

AxiomReport check_axiom(const BeliefOperator& op, std::string_view axiom_id)
{
    return check_axiom(op, parse_axiom(axiom_id));
}

AxiomReport correspondence_property(const PossibilityCorrespondence& b, FrameProperty property)
{
    AxiomReport report{std::string{to_string(property)}, true, std::nullopt};
    auto fail_at = [&](std::vector<StateIndex> states) {
        report.holds = false;
        report.witness = Witness{{}, std::move(states)};
    };
    for (StateIndex s = 0; s < b.size() && report.holds; ++s) {
        switch (property) {
        case FrameProperty::serial:
            if (b[s].is_empty()) {
                fail_at({s});
            }
            break;
        case FrameProperty::reflexive:
            if (!b[s].contains(s)) {
                fail_at({s});
            }
            break;
        case FrameProperty::transitive:
        case FrameProperty::euclidean:
            for (StateIndex t = 0; t < b.size(); ++t) {
                if (!b[s].contains(t)) {
                    continue;
                }
                const bool ok = property == FrameProperty::transitive ? b[t].subset_of(b[s]) : b[s].subset_of(b[t]);
                if (!ok) {
                    fail_at({s, t});
                    break;
                }
            }
            break;
        }
    }
    return report;
}

} // namespace metacert
