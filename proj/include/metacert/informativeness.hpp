#pragma once

#include "metacert/belief_model.hpp"
#include "metacert/qualitative_types.hpp"

#include <string_view>
#include <vector>

namespace metacert {

/// w' is at least as informative as w when t(w) <= t(w') pointwise.
class InformativenessRelation {
public:
    explicit InformativenessRelation(const QualitativeTypeMapping& t);

    [[nodiscard]] std::size_t states() const { return upward_.size(); }
    [[nodiscard]] bool at_least_as_informative(StateIndex better, StateIndex than) const
    {
        return upward_.at(than).contains(better);
    }
    /// States at least as informative as `s`.
    [[nodiscard]] Event upward(StateIndex s) const { return upward_.at(s); }
    [[nodiscard]] bool is_preorder() const;

private:
    std::vector<Event> upward_;
};

[[nodiscard]] Event upward_set(const QualitativeTypeMapping& t, StateIndex s);

/// Every event believed at w meets the upward set of w. Witness: the first
/// (event, state) pair, events ascending, with w in B(E) and no state of E at
/// least as informative as w.
[[nodiscard]] AxiomReport compatible_with_informativeness(const BeliefOperator& op);

enum class ImplicationStatus { vacuous, confirmed, violated };

[[nodiscard]] std::string_view to_string(ImplicationStatus status);

[[nodiscard]] inline ImplicationStatus implication(bool premise, bool conclusion)
{
    if (!premise) {
        return ImplicationStatus::vacuous;
    }
    return conclusion ? ImplicationStatus::confirmed : ImplicationStatus::violated;
}

/// Premises and conclusion of "certainty of one's own type mapping makes
/// beliefs compatible with informativeness".
struct CompatibilityVerdict {
    bool upward_sets_are_events = true; ///< always true on a power-set algebra
    bool consistent_and_conjunctive = false;
    bool certain_of_upward_family = false;
    bool compatible = false;
    ImplicationStatus status = ImplicationStatus::vacuous;
};

[[nodiscard]] CompatibilityVerdict compatibility_from_certainty(const BeliefModel& model, PlayerIndex player);

} // namespace metacert
