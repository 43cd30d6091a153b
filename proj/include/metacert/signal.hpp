#pragma once

#include "metacert/belief_model.hpp"

#include <span>
#include <string>
#include <vector>

namespace metacert {

/// A subset of a signal's codomain: sorted, duplicate-free value indices.
using ValueSet = std::vector<std::size_t>;

/// A state-indexed function into a finite codomain together with the family
/// of observable subsets of that codomain.
class Signal {
public:
    /// Throws model_error if the assignment leaves the codomain, the family is
    /// empty, or a family member is not a subset of the codomain.
    Signal(std::vector<std::string> codomain, std::vector<std::size_t> assignment, std::vector<ValueSet> family);

    [[nodiscard]] const std::vector<std::string>& codomain() const { return codomain_; }
    [[nodiscard]] std::size_t states() const { return assignment_.size(); }
    [[nodiscard]] std::size_t value(StateIndex s) const { return assignment_.at(s); }
    [[nodiscard]] const std::vector<std::size_t>& assignment() const { return assignment_; }
    [[nodiscard]] const std::vector<ValueSet>& family() const { return family_; }

    [[nodiscard]] bool observed_at(std::size_t observation, StateIndex s) const;
    /// States whose value lies in the observation.
    [[nodiscard]] Event preimage(std::size_t observation) const;
    [[nodiscard]] Event preimage_of(const ValueSet& values) const;

    friend bool operator==(const Signal&, const Signal&) = default;

private:
    std::vector<std::string> codomain_;
    std::vector<std::size_t> assignment_;
    std::vector<ValueSet> family_;
};

namespace families {

/// {{v} : v in X}
[[nodiscard]] std::vector<ValueSet> singletons(std::size_t codomain_size);
/// Every subset of X, the empty set included. Codomain size at most 16.
[[nodiscard]] std::vector<ValueSet> powerset(std::size_t codomain_size);
/// Every superset of some generator, in ascending bitmask order. Codomain size at most 16.
[[nodiscard]] std::vector<ValueSet> upward_closure(std::size_t codomain_size, const std::vector<ValueSet>& generators);
/// The family plus the complement of each member (duplicates dropped).
[[nodiscard]] std::vector<ValueSet> with_complements(std::size_t codomain_size, const std::vector<ValueSet>& family);
/// True when the complement of every member is a union of members.
[[nodiscard]] bool complements_covered(std::size_t codomain_size, const std::vector<ValueSet>& family);

} // namespace families

struct CertaintyFailure {
    StateIndex state = 0;
    std::size_t observation = 0; ///< index into the signal's family

    friend bool operator==(const CertaintyFailure&, const CertaintyFailure&) = default;
};

struct CertaintyReport {
    bool holds = true;
    /// Ordered by state, then by observation index.
    std::vector<CertaintyFailure> failures;
};

/// Whether `op`'s owner believes every true observation about x at s.
[[nodiscard]] bool certain_of_value_at(const BeliefOperator& op, const Signal& x, StateIndex s);
[[nodiscard]] bool certain_of_value_at(const BeliefModel& model, PlayerIndex player, const Signal& x, StateIndex s);

[[nodiscard]] CertaintyReport certain_of(const BeliefOperator& op, const Signal& x);
[[nodiscard]] CertaintyReport certain_of(const BeliefModel& model, PlayerIndex player, const Signal& x);

/// Every observed preimage is self-evident; equivalent to certain_of(...).holds.
[[nodiscard]] bool preimages_self_evident(const BeliefOperator& op, const Signal& x);

[[nodiscard]] bool commonly_certain_of_value_at(const BeliefModel& model, const Signal& x, StateIndex s);
[[nodiscard]] CertaintyReport commonly_certain_of(const BeliefModel& model, const Signal& x);

/// The product signal of a profile. Its family consists of one-coordinate
/// cylinders: for component k and F in that component's family, all tuples
/// whose k-th entry lies in F.
[[nodiscard]] Signal product_signal(std::span<const Signal> profile);
[[nodiscard]] bool certain_of_profile(const BeliefModel& model, PlayerIndex player, std::span<const Signal> profile);

/// Aumann-style measurability: b(w) lies inside the level set of x(w) at every
/// state. Only defined for Kripke operators whose correspondence is a
/// partition; throws model_error otherwise.
[[nodiscard]] bool partition_measurable(const BeliefModel& model, PlayerIndex player, const Signal& x);

/// Indicator of `B_j(E) <-> F` with the family {{0},{1}}.
[[nodiscard]] Signal belief_equivalence_indicator(const BeliefModel& model, PlayerIndex j, Event e, Event f);
/// Player i is certain that B_j(E) is the event F.
[[nodiscard]] CertaintyReport certain_that_belief_is(const BeliefModel& model, PlayerIndex i, PlayerIndex j, Event e,
                                                     Event f);

} // namespace metacert
