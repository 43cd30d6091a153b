#pragma once

#include "metacert/belief_model.hpp"
#include "metacert/informativeness.hpp"
#include "metacert/signal.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace metacert {

using ActionIndex = std::size_t;
/// One action per player, in player order.
using ActionProfile = std::vector<ActionIndex>;

/// A finite strategic game. Preferences are total preorders encoded as an
/// integer rank per action profile: higher is strictly preferred, equal ranks
/// are indifferent.
class Game {
public:
    Game(std::vector<std::string> players, std::vector<std::vector<std::string>> actions,
         std::vector<std::vector<long>> ranks);

    [[nodiscard]] std::size_t players() const { return players_.size(); }
    [[nodiscard]] const std::vector<std::string>& player_names() const { return players_; }
    [[nodiscard]] const std::vector<std::string>& actions(PlayerIndex i) const { return actions_.at(i); }
    [[nodiscard]] ActionIndex action_index(PlayerIndex i, std::string_view name) const;

    /// Profiles are numbered in mixed radix, player 0 most significant.
    [[nodiscard]] std::size_t profile_count() const { return profile_count_; }
    [[nodiscard]] std::size_t profile_index(std::span<const ActionIndex> profile) const;
    [[nodiscard]] ActionProfile profile(std::size_t index) const;

    [[nodiscard]] long rank(PlayerIndex i, std::span<const ActionIndex> profile) const
    {
        return ranks_[i][profile_index(profile)];
    }
    [[nodiscard]] const std::vector<long>& ranks(PlayerIndex i) const { return ranks_.at(i); }

    /// (deviation, rest) versus (action, rest) for player i, where `rest`
    /// is a full profile whose i-th entry is ignored.
    [[nodiscard]] long rank_gap(PlayerIndex i, ActionIndex deviation, ActionIndex action, ActionProfile rest) const;

    friend bool operator==(const Game&, const Game&) = default;

private:
    std::vector<std::string> players_;
    std::vector<std::vector<std::string>> actions_;
    std::vector<std::vector<long>> ranks_;
    std::size_t profile_count_ = 1;
};

/// A belief model of a game: beliefs plus one strategy per player.
class GameModel {
public:
    /// strategies[i][s] is player i's action at state s.
    GameModel(BeliefModel belief, Game game, std::vector<std::vector<ActionIndex>> strategies);

    [[nodiscard]] const BeliefModel& belief() const { return belief_; }
    [[nodiscard]] const Game& game() const { return game_; }
    [[nodiscard]] const std::vector<ActionIndex>& strategy(PlayerIndex i) const { return strategies_.at(i); }
    [[nodiscard]] ActionIndex action_at(PlayerIndex i, StateIndex s) const { return strategies_.at(i).at(s); }
    [[nodiscard]] ActionProfile profile_at(StateIndex s) const;
    /// States where player i plays `a`.
    [[nodiscard]] Event plays(PlayerIndex i, ActionIndex a) const;
    /// [sigma_i(s)]: states where player i plays what she plays at s.
    [[nodiscard]] Event level_set(PlayerIndex i, StateIndex s) const { return plays(i, action_at(i, s)); }

private:
    BeliefModel belief_;
    Game game_;
    std::vector<std::vector<ActionIndex>> strategies_;
};

enum class Preference { weak, strict, indifferent };

/// States where, given the others' strategies there, player i ranks
/// `deviation` against `action` according to `relation`.
[[nodiscard]] Event preference_event(const GameModel& gm, PlayerIndex i, ActionIndex deviation, ActionIndex action,
                                     Preference relation);

/// States where player i believes no deviation to be strictly better.
[[nodiscard]] Event rationality_event(const GameModel& gm, PlayerIndex i);
/// Same event via "for every deviation she does not believe that her action
/// is worse": w in not-B_i(not [sigma_i(w) >= a']) for all a'.
[[nodiscard]] Event rationality_event_restated(const GameModel& gm, PlayerIndex i);

/// Player i's strategy as a signal with the singleton family over her actions.
[[nodiscard]] Signal strategy_signal(const GameModel& gm, PlayerIndex i);

struct StrategyCertaintyReport {
    CertaintyReport certainty;
    bool consistency = false;
    /// Identities that follow from certainty under Consistency; reported as
    /// evaluated, whatever the premises.
    bool belief_fixes_level_sets = false;      ///< B([sigma(w)]) = [sigma(w)]
    bool belief_fixes_complements = false;     ///< B([sigma(w)]^c) = [sigma(w)]^c
    bool necessitation = false;                ///< B(Omega) = Omega
};

[[nodiscard]] StrategyCertaintyReport strategy_certainty(const GameModel& gm, PlayerIndex i);

struct Elimination {
    std::size_t round = 0;
    PlayerIndex player = 0;
    ActionIndex action = 0;

    friend bool operator==(const Elimination&, const Elimination&) = default;
};

struct EliminationTrace {
    std::vector<Elimination> removals;
    std::vector<std::vector<ActionIndex>> survivors;

    [[nodiscard]] bool survives(std::span<const ActionIndex> profile) const;
};

/// Maximal removes every dominated action each round; seeded removes one
/// randomly chosen dominated action per round.
struct EliminationOrder {
    bool maximal = true;
    std::uint64_t seed = 0;

    static EliminationOrder all_at_once() { return {true, 0}; }
    static EliminationOrder seeded(std::uint64_t seed) { return {false, seed}; }
};

/// Iterated elimination of actions strictly dominated by a surviving pure action.
[[nodiscard]] EliminationTrace iesda(const Game& game, EliminationOrder order = EliminationOrder::all_at_once());

/// Survivors agree between the maximal order and `orders` seeded orders.
[[nodiscard]] bool iesda_order_independent(const Game& game, std::size_t orders, std::uint64_t base_seed);

struct RationalityBeliefCheck {
    bool holds = true;
    std::optional<StateIndex> witness; ///< first state in B_i(RAT_i) outside RAT_i
};

[[nodiscard]] RationalityBeliefCheck correct_belief_in_own_rationality(const GameModel& gm, PlayerIndex i);

struct EpistemicIesdaVerdict {
    bool common_belief_in_rationality = false; ///< w in C(RAT_i) for every i
    bool correct_beliefs = false;              ///< B_i(RAT_i) inside RAT_i for every i
    /// Certainty of own strategy, compatibility and Finite Conjunction for every i.
    bool sufficient_conditions = false;
    bool survives = false;                     ///< sigma(w) survives maximal elimination
    ImplicationStatus status = ImplicationStatus::vacuous;
};

[[nodiscard]] EpistemicIesdaVerdict epistemic_iesda_verdict(const GameModel& gm, StateIndex s);

} // namespace metacert
