#include "metacert/belief_model.hpp"

namespace metacert {

BeliefModel::BeliefModel(StateSpace space, std::vector<BeliefOperator> operators)
    : space_{std::move(space)}, operators_{std::move(operators)}
{
    if (operators_.empty()) {
        throw model_error("a belief model needs at least one player");
    }
    for (std::size_t i = 0; i < operators_.size(); ++i) {
        if (operators_[i].states() != space_.size()) {
            throw model_error("operator of player '" + operators_[i].owner() + "' is defined on "
                              + std::to_string(operators_[i].states()) + " states; the space has "
                              + std::to_string(space_.size()));
        }
        if (operators_[i].owner().empty()) {
            operators_[i] = operators_[i].with_owner(std::to_string(i + 1));
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (operators_[i].owner() == operators_[j].owner()) {
                throw model_error("duplicate player '" + operators_[i].owner() + "'");
            }
        }
    }
}

PlayerIndex BeliefModel::player_index(std::string_view name) const
{
    for (PlayerIndex i = 0; i < operators_.size(); ++i) {
        if (operators_[i].owner() == name) {
            return i;
        }
    }
    throw model_error("unknown player '" + std::string{name} + "'");
}

void BeliefModel::require_player(PlayerIndex i) const
{
    if (i >= operators_.size()) {
        throw model_error("unknown player index " + std::to_string(i));
    }
}

void BeliefModel::require_state(StateIndex s) const
{
    if (s >= space_.size()) {
        throw model_error("unknown state index " + std::to_string(s));
    }
}

Event mutual_belief(const BeliefModel& model, Event e)
{
    Event result = Event::all(model.states());
    for (const auto& op : model.operators()) {
        result &= op(e);
    }
    return result;
}

bool is_publicly_evident(const BeliefModel& model, Event e) { return e.subset_of(mutual_belief(model, e)); }

Event common_belief(const BeliefModel& model, Event e)
{
    // Greatest fixed point of X -> B_I(E) & B_I(X), iterated down from the
    // full space. The iterates decrease (monotonicity), so the loop ends after
    // at most n+1 rounds. The limit X is publicly evident and inside B_I(E);
    // any publicly evident F inside B_I(E) stays below every iterate, so X is
    // the union of all such F, which is exactly the common belief event.
    const Event target = mutual_belief(model, e);
    Event current = Event::all(model.states());
    while (true) {
        const Event next = target & mutual_belief(model, current);
        if (next == current) {
            return current;
        }
        current = next;
    }
}

Event common_belief_iterated(const BeliefModel& model, Event e, std::size_t depth)
{
    if (depth == 0) {
        throw model_error("iteration depth must be positive");
    }
    Event power = e;
    Event result = Event::all(model.states());
    for (std::size_t k = 0; k < depth; ++k) {
        power = mutual_belief(model, power);
        result &= power;
    }
    return result;
}

std::vector<Event> common_belief_table(const BeliefModel& model)
{
    std::vector<Event> table;
    table.reserve(event_count(model.states()));
    for_each_event(model.states(), [&](Event e) { table.push_back(common_belief(model, e)); });
    return table;
}

} // namespace metacert
