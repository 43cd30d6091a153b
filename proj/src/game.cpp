#include "metacert/game.hpp"

#include "metacert/axioms.hpp"
#include "metacert/random.hpp"

#include <algorithm>

namespace metacert {

Game::Game(std::vector<std::string> players, std::vector<std::vector<std::string>> actions,
           std::vector<std::vector<long>> ranks)
    : players_(std::move(players)), actions_(std::move(actions)), ranks_(std::move(ranks))
{
    if (players_.empty()) {
        throw model_error("a game needs at least one player");
    }
    if (actions_.size() != players_.size() || ranks_.size() != players_.size()) {
        throw model_error("game has " + std::to_string(players_.size()) + " players but " +
                          std::to_string(actions_.size()) + " action lists and " + std::to_string(ranks_.size()) +
                          " rank tables");
    }
    for (std::size_t i = 0; i < players_.size(); ++i) {
        if (actions_[i].empty()) {
            throw model_error("player " + players_[i] + " has an empty action set");
        }
        for (std::size_t a = 0; a < actions_[i].size(); ++a) {
            if (std::find(actions_[i].begin(), actions_[i].begin() + static_cast<std::ptrdiff_t>(a),
                          actions_[i][a]) != actions_[i].begin() + static_cast<std::ptrdiff_t>(a)) {
                throw model_error("player " + players_[i] + " lists action " + actions_[i][a] + " twice");
            }
        }
        if (profile_count_ > (std::size_t{1} << 20) / actions_[i].size()) {
            throw model_error("game has too many action profiles");
        }
        profile_count_ *= actions_[i].size();
    }
    for (std::size_t i = 0; i < players_.size(); ++i) {
        if (ranks_[i].size() != profile_count_) {
            throw model_error("player " + players_[i] + " ranks " + std::to_string(ranks_[i].size()) +
                              " profiles, expected " + std::to_string(profile_count_));
        }
    }
}

ActionIndex Game::action_index(PlayerIndex i, std::string_view name) const
{
    const auto& list = actions_.at(i);
    const auto it = std::find(list.begin(), list.end(), name);
    if (it == list.end()) {
        throw model_error("player " + players_[i] + " has no action " + std::string(name));
    }
    return static_cast<ActionIndex>(it - list.begin());
}

std::size_t Game::profile_index(std::span<const ActionIndex> profile) const
{
    if (profile.size() != players_.size()) {
        throw model_error("profile has " + std::to_string(profile.size()) + " entries, expected " +
                          std::to_string(players_.size()));
    }
    std::size_t index = 0;
    for (std::size_t i = 0; i < profile.size(); ++i) {
        if (profile[i] >= actions_[i].size()) {
            throw model_error("action index " + std::to_string(profile[i]) + " out of range for player " +
                              players_[i]);
        }
        index = index * actions_[i].size() + profile[i];
    }
    return index;
}

ActionProfile Game::profile(std::size_t index) const
{
    if (index >= profile_count_) {
        throw model_error("profile index out of range");
    }
    ActionProfile p(players_.size());
    for (std::size_t k = players_.size(); k-- > 0;) {
        p[k] = index % actions_[k].size();
        index /= actions_[k].size();
    }
    return p;
}

long Game::rank_gap(PlayerIndex i, ActionIndex deviation, ActionIndex action, ActionProfile rest) const
{
    rest.at(i) = deviation;
    const long hi = rank(i, rest);
    rest[i] = action;
    return hi - rank(i, rest);
}

GameModel::GameModel(BeliefModel belief, Game game, std::vector<std::vector<ActionIndex>> strategies)
    : belief_(std::move(belief)), game_(std::move(game)), strategies_(std::move(strategies))
{
    if (game_.players() != belief_.players()) {
        throw model_error("game has " + std::to_string(game_.players()) + " players, belief model has " +
                          std::to_string(belief_.players()));
    }
    for (PlayerIndex i = 0; i < game_.players(); ++i) {
        if (game_.player_names()[i] != belief_.player_name(i)) {
            throw model_error("game player " + game_.player_names()[i] + " does not match belief player " +
                              belief_.player_name(i));
        }
    }
    if (strategies_.size() != game_.players()) {
        throw model_error("expected one strategy per player");
    }
    for (PlayerIndex i = 0; i < strategies_.size(); ++i) {
        if (strategies_[i].size() != belief_.states()) {
            throw model_error("strategy of player " + belief_.player_name(i) + " must assign an action to every state");
        }
        for (const auto a : strategies_[i]) {
            if (a >= game_.actions(i).size()) {
                throw model_error("strategy of player " + belief_.player_name(i) + " uses an unknown action");
            }
        }
    }
}

ActionProfile GameModel::profile_at(StateIndex s) const
{
    belief_.require_state(s);
    ActionProfile p(strategies_.size());
    for (PlayerIndex i = 0; i < strategies_.size(); ++i) {
        p[i] = strategies_[i][s];
    }
    return p;
}

Event GameModel::plays(PlayerIndex i, ActionIndex a) const
{
    Event e = Event::none(belief_.states());
    const auto& sigma = strategies_.at(i);
    for (StateIndex s = 0; s < sigma.size(); ++s) {
        if (sigma[s] == a) {
            e = e.with(s);
        }
    }
    return e;
}

namespace {

void require_action(const GameModel& gm, PlayerIndex i, ActionIndex a)
{
    if (a >= gm.game().actions(i).size()) {
        throw model_error("player " + gm.belief().player_name(i) + " has no action with index " + std::to_string(a));
    }
}

} // namespace

Event preference_event(const GameModel& gm, PlayerIndex i, ActionIndex deviation, ActionIndex action,
                       Preference relation)
{
    gm.belief().require_player(i);
    require_action(gm, i, deviation);
    require_action(gm, i, action);
    const std::size_t n = gm.belief().states();
    Event e = Event::none(n);
    for (StateIndex s = 0; s < n; ++s) {
        const long gap = gm.game().rank_gap(i, deviation, action, gm.profile_at(s));
        const bool in = relation == Preference::weak ? gap >= 0 : relation == Preference::strict ? gap > 0 : gap == 0;
        if (in) {
            e = e.with(s);
        }
    }
    return e;
}

Event rationality_event(const GameModel& gm, PlayerIndex i)
{
    const auto& op = gm.belief().op(i);
    const std::size_t actions = gm.game().actions(i).size();
    Event rational = Event::none(gm.belief().states());
    for (StateIndex s = 0; s < gm.belief().states(); ++s) {
        bool ok = true;
        for (ActionIndex dev = 0; dev < actions && ok; ++dev) {
            ok = !op(preference_event(gm, i, dev, gm.action_at(i, s), Preference::strict)).contains(s);
        }
        if (ok) {
            rational = rational.with(s);
        }
    }
    return rational;
}

Event rationality_event_restated(const GameModel& gm, PlayerIndex i)
{
    const auto& op = gm.belief().op(i);
    const std::size_t actions = gm.game().actions(i).size();
    Event rational = Event::none(gm.belief().states());
    for (StateIndex s = 0; s < gm.belief().states(); ++s) {
        bool ok = true;
        for (ActionIndex dev = 0; dev < actions && ok; ++dev) {
            const Event weakly_better = preference_event(gm, i, gm.action_at(i, s), dev, Preference::weak);
            ok = op.disbelief(weakly_better.complement()).contains(s);
        }
        if (ok) {
            rational = rational.with(s);
        }
    }
    return rational;
}

Signal strategy_signal(const GameModel& gm, PlayerIndex i)
{
    gm.belief().require_player(i);
    const auto& actions = gm.game().actions(i);
    return Signal{actions, gm.strategy(i), families::singletons(actions.size())};
}

StrategyCertaintyReport strategy_certainty(const GameModel& gm, PlayerIndex i)
{
    const auto& op = gm.belief().op(i);
    StrategyCertaintyReport r;
    r.certainty = certain_of(op, strategy_signal(gm, i));
    r.consistency = satisfies(op, Axiom::consistency);
    r.belief_fixes_level_sets = true;
    r.belief_fixes_complements = true;
    for (ActionIndex a = 0; a < gm.game().actions(i).size(); ++a) {
        const Event level = gm.plays(i, a);
        if (level.is_empty()) {
            continue;
        }
        r.belief_fixes_level_sets = r.belief_fixes_level_sets && op(level) == level;
        r.belief_fixes_complements = r.belief_fixes_complements && op(level.complement()) == level.complement();
    }
    r.necessitation = op(Event::all(gm.belief().states())).is_full();
    return r;
}

bool EliminationTrace::survives(std::span<const ActionIndex> profile) const
{
    if (profile.size() != survivors.size()) {
        return false;
    }
    for (std::size_t i = 0; i < profile.size(); ++i) {
        if (std::find(survivors[i].begin(), survivors[i].end(), profile[i]) == survivors[i].end()) {
            return false;
        }
    }
    return true;
}

namespace {

// Whether `dominator` beats `action` for player i against every surviving
// opponent profile.
bool strictly_dominates(const Game& game, const std::vector<std::vector<ActionIndex>>& alive, PlayerIndex i,
                        ActionIndex dominator, ActionIndex action)
{
    const std::size_t players = game.players();
    std::vector<std::size_t> digit(players, 0);
    ActionProfile p(players);
    while (true) {
        for (std::size_t k = 0; k < players; ++k) {
            p[k] = k == i ? 0 : alive[k][digit[k]];
        }
        if (game.rank_gap(i, dominator, action, p) <= 0) {
            return false;
        }
        std::size_t k = players;
        while (k-- > 0) {
            if (k == i) {
                continue;
            }
            if (++digit[k] < alive[k].size()) {
                break;
            }
            digit[k] = 0;
        }
        if (k == static_cast<std::size_t>(-1)) {
            return true;
        }
    }
}

std::vector<std::pair<PlayerIndex, ActionIndex>> dominated_actions(const Game& game,
                                                                   const std::vector<std::vector<ActionIndex>>& alive)
{
    std::vector<std::pair<PlayerIndex, ActionIndex>> out;
    for (PlayerIndex i = 0; i < game.players(); ++i) {
        for (const ActionIndex a : alive[i]) {
            for (const ActionIndex d : alive[i]) {
                if (d != a && strictly_dominates(game, alive, i, d, a)) {
                    out.emplace_back(i, a);
                    break;
                }
            }
        }
    }
    return out;
}

} // namespace

EliminationTrace iesda(const Game& game, EliminationOrder order)
{
    EliminationTrace trace;
    trace.survivors.resize(game.players());
    for (PlayerIndex i = 0; i < game.players(); ++i) {
        for (ActionIndex a = 0; a < game.actions(i).size(); ++a) {
            trace.survivors[i].push_back(a);
        }
    }
    Rng rng{order.seed};
    for (std::size_t round = 1;; ++round) {
        auto dominated = dominated_actions(game, trace.survivors);
        if (dominated.empty()) {
            break;
        }
        if (!order.maximal) {
            dominated = {dominated[rng.below(dominated.size())]};
        }
        for (const auto& [i, a] : dominated) {
            auto& alive = trace.survivors[i];
            alive.erase(std::find(alive.begin(), alive.end(), a));
            trace.removals.push_back({round, i, a});
        }
    }
    return trace;
}

bool iesda_order_independent(const Game& game, std::size_t orders, std::uint64_t base_seed)
{
    const auto reference = iesda(game).survivors;
    for (std::size_t k = 0; k < orders; ++k) {
        if (iesda(game, EliminationOrder::seeded(derive_seed(base_seed, k))).survivors != reference) {
            return false;
        }
    }
    return true;
}

RationalityBeliefCheck correct_belief_in_own_rationality(const GameModel& gm, PlayerIndex i)
{
    const Event rat = rationality_event(gm, i);
    const Event outside = gm.belief().op(i)(rat) - rat;
    if (outside.is_empty()) {
        return {};
    }
    return {false, outside.first()};
}

EpistemicIesdaVerdict epistemic_iesda_verdict(const GameModel& gm, StateIndex s)
{
    const auto& model = gm.belief();
    model.require_state(s);
    EpistemicIesdaVerdict v;
    v.common_belief_in_rationality = true;
    v.correct_beliefs = true;
    v.sufficient_conditions = true;
    for (PlayerIndex i = 0; i < model.players(); ++i) {
        v.common_belief_in_rationality =
            v.common_belief_in_rationality && common_belief(model, rationality_event(gm, i)).contains(s);
        v.correct_beliefs = v.correct_beliefs && correct_belief_in_own_rationality(gm, i).holds;
        if (v.sufficient_conditions) {
            const auto& op = model.op(i);
            v.sufficient_conditions = strategy_certainty(gm, i).certainty.holds &&
                                      satisfies(op, Axiom::finite_conjunction) &&
                                      compatible_with_informativeness(op).holds;
        }
    }
    v.survives = iesda(gm.game()).survives(gm.profile_at(s));
    v.status = implication(v.common_belief_in_rationality && v.correct_beliefs, v.survives);
    return v;
}

} // namespace metacert
