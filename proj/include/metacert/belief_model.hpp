#pragma once

#include "metacert/axioms.hpp"
#include "metacert/belief_operator.hpp"

#include <string_view>
#include <vector>

namespace metacert {

using PlayerIndex = std::size_t;

/// A state space with one monotone belief operator per player.
///
/// The common belief operator is derived (see common_belief), never stored.
class BeliefModel {
public:
    BeliefModel(StateSpace space, std::vector<BeliefOperator> operators);

    [[nodiscard]] const StateSpace& space() const { return space_; }
    [[nodiscard]] std::size_t states() const { return space_.size(); }
    [[nodiscard]] std::size_t players() const { return operators_.size(); }
    [[nodiscard]] const BeliefOperator& op(PlayerIndex i) const { return operators_.at(i); }
    [[nodiscard]] const std::vector<BeliefOperator>& operators() const { return operators_; }
    [[nodiscard]] const std::string& player_name(PlayerIndex i) const { return operators_.at(i).owner(); }

    /// Throws model_error for unknown players.
    [[nodiscard]] PlayerIndex player_index(std::string_view name) const;
    /// Throws model_error unless `i` names a player of this model.
    void require_player(PlayerIndex i) const;
    /// Throws model_error unless `s` is a state of this model.
    void require_state(StateIndex s) const;

private:
    StateSpace space_;
    std::vector<BeliefOperator> operators_;
};

/// Intersection of every player's belief in E.
[[nodiscard]] Event mutual_belief(const BeliefModel& model, Event e);

/// E is a subset of the mutual belief in E.
[[nodiscard]] bool is_publicly_evident(const BeliefModel& model, Event e);

/// States at which E is common belief: the union of all publicly evident
/// events contained in the mutual belief of E.
[[nodiscard]] Event common_belief(const BeliefModel& model, Event e);

/// Intersection of the first `depth` powers of mutual belief applied to E.
[[nodiscard]] Event common_belief_iterated(const BeliefModel& model, Event e, std::size_t depth);

/// Tabulated common belief operator, one image per event.
[[nodiscard]] std::vector<Event> common_belief_table(const BeliefModel& model);

} // namespace metacert
