#pragma once

#include "metacert/belief_operator.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace metacert {

enum class Axiom {
    monotonicity,
    necessitation,
    finite_conjunction,
    countable_conjunction,
    kripke,
    consistency,
    truth,
    positive_introspection,
    negative_introspection,
};

inline constexpr std::array<Axiom, 9> all_axioms{
    Axiom::monotonicity,          Axiom::necessitation, Axiom::finite_conjunction,
    Axiom::countable_conjunction, Axiom::kripke,        Axiom::consistency,
    Axiom::truth,                 Axiom::positive_introspection, Axiom::negative_introspection,
};

/// Stable identifiers: Monotonicity, Necessitation, FiniteConjunction,
/// CountableConjunction, Kripke, Consistency, TruthAxiom,
/// PositiveIntrospection, NegativeIntrospection.
[[nodiscard]] std::string_view to_string(Axiom a);
/// Throws model_error for unknown identifiers.
[[nodiscard]] Axiom parse_axiom(std::string_view id);

enum class FrameProperty { serial, reflexive, transitive, euclidean };

inline constexpr std::array<FrameProperty, 4> all_frame_properties{
    FrameProperty::serial, FrameProperty::reflexive, FrameProperty::transitive, FrameProperty::euclidean};

[[nodiscard]] std::string_view to_string(FrameProperty p);
[[nodiscard]] FrameProperty parse_frame_property(std::string_view id);

/// Falsifying data for a failed check.
///
/// Operator axioms report the smallest falsifying event (or event pair, for
/// Monotonicity and the conjunction axioms) in ascending mask order, then the
/// smallest failing state. Frame properties report states only: the failing
/// state, and for transitivity/euclideanness the offending successor.
struct Witness {
    std::vector<Event> events;
    std::vector<StateIndex> states;

    friend bool operator==(const Witness&, const Witness&) = default;
};

struct AxiomReport {
    std::string property;
    bool holds = true;
    std::optional<Witness> witness;
};

/// Decides an axiom by exhaustive quantification over the event algebra.
///
/// Countable Conjunction is decided as closure of each state's believed
/// family under arbitrary intersections, which on a finite algebra coincides
/// with Finite Conjunction; its witness is therefore a falsifying pair.
/// Operators too large for a table are Kripke by construction and are decided
/// through the frame dictionary of their correspondence.
[[nodiscard]] AxiomReport check_axiom(const BeliefOperator& op, Axiom axiom);
[[nodiscard]] AxiomReport check_axiom(const BeliefOperator& op, std::string_view axiom_id);

[[nodiscard]] AxiomReport correspondence_property(const PossibilityCorrespondence& b, FrameProperty property);

[[nodiscard]] inline bool satisfies(const BeliefOperator& op, Axiom axiom) { return check_axiom(op, axiom).holds; }

/// E is self-evident to the operator's owner: E is a subset of B(E).
[[nodiscard]] inline bool is_self_evident(const BeliefOperator& op, Event e) { return e.subset_of(op(e)); }

} // namespace metacert
