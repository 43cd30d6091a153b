#pragma once

#include "metacert/event.hpp"

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace metacert {

/// The set of states a player considers possible at each state.
///
/// No frame constraint is imposed; seriality, reflexivity and the rest are
/// checkable properties (see axioms.hpp).
class PossibilityCorrespondence {
public:
    PossibilityCorrespondence() = default;
    explicit PossibilityCorrespondence(std::vector<Event> possible) : possible_{std::move(possible)} {}

    [[nodiscard]] std::size_t size() const { return possible_.size(); }
    [[nodiscard]] Event operator[](StateIndex s) const { return possible_[s]; }
    [[nodiscard]] const std::vector<Event>& sets() const { return possible_; }

    friend bool operator==(const PossibilityCorrespondence&, const PossibilityCorrespondence&) = default;

private:
    std::vector<Event> possible_;
};

/// A monotone belief operator: a total map from events to events.
///
/// Up to `max_table_states` states the operator is stored as an explicit
/// table indexed by event mask. Operators built from a correspondence also
/// keep it; above the table bound they are evaluated from it directly.
/// Monotonicity is checked at construction, so every instance is monotone.
class BeliefOperator {
public:
    /// Validates totality and monotonicity; throws model_error naming a
    /// violating pair otherwise.
    static BeliefOperator from_table(const StateSpace& space, std::vector<Event::mask_type> table,
                                     std::string owner = {});

    [[nodiscard]] Event operator()(Event e) const
    {
        if (!table_.empty()) {
            return Event{table_[e.index()], n_};
        }
        return evaluate_kripke(e);
    }

    /// `not B(E)`.
    [[nodiscard]] Event disbelief(Event e) const { return (*this)(e).complement(); }

    [[nodiscard]] std::size_t states() const { return n_; }
    [[nodiscard]] const std::string& owner() const { return owner_; }
    [[nodiscard]] bool has_table() const { return !table_.empty(); }
    [[nodiscard]] std::span<const Event::mask_type> table() const { return table_; }
    [[nodiscard]] const std::optional<PossibilityCorrespondence>& correspondence() const { return correspondence_; }

    BeliefOperator with_owner(std::string owner) const
    {
        BeliefOperator copy = *this;
        copy.owner_ = std::move(owner);
        return copy;
    }

    /// Extensional equality; the owner does not participate.
    friend bool operator==(const BeliefOperator& a, const BeliefOperator& b);

private:
    friend BeliefOperator from_correspondence(const StateSpace&, PossibilityCorrespondence, std::string);

    BeliefOperator() = default;
    [[nodiscard]] Event evaluate_kripke(Event e) const;

    std::size_t n_ = 0;
    std::string owner_;
    std::vector<Event::mask_type> table_;
    std::optional<PossibilityCorrespondence> correspondence_;
};

/// B(E) = { w : b(w) is a subset of E }.
BeliefOperator from_correspondence(const StateSpace& space, PossibilityCorrespondence possible,
                                   std::string owner = {});

/// b(w) = intersection of every event believed at w (the full space when none is).
PossibilityCorrespondence derive_correspondence(const BeliefOperator& op);

/// Pointwise-smallest monotone operator extending a partial assignment:
/// B(F) = union of core(E) over assigned E contained in F.
BeliefOperator monotone_closure(const StateSpace& space, std::span<const std::pair<Event, Event>> core,
                                std::string owner = {});

/// The operator B(E) = E.
BeliefOperator identity_operator(const StateSpace& space, std::string owner = {});

} // namespace metacert
