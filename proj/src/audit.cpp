#include "metacert/audit.hpp"

#include "metacert/dsl.hpp"
#include "metacert/game.hpp"
#include "metacert/informativeness.hpp"
#include "metacert/qualitative_types.hpp"
#include "metacert/random.hpp"
#include "metacert/signal.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <numeric>
#include <thread>

namespace metacert::audit {

namespace {

constexpr std::size_t max_instances = std::size_t{1} << 24;
constexpr std::size_t max_sampled_states = 8;
constexpr std::size_t elimination_orders = 50;

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::vector<std::string> player_ids(std::size_t players)
{
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < players; ++i) {
        ids.push_back(std::to_string(i + 1));
    }
    return ids;
}

Event random_event(Rng& rng, std::size_t n)
{
    return Event{static_cast<Event::mask_type>(rng.below(event_count(n))), n};
}

std::size_t checked_power(std::size_t base, std::size_t exponent)
{
    std::size_t result = 1;
    for (std::size_t k = 0; k < exponent; ++k) {
        if (result > max_instances / base) {
            return max_instances + 1;
        }
        result *= base;
    }
    return result;
}

BeliefOperator draw_operator(Rng& rng, const StateSpace& space, const std::string& owner)
{
    const std::size_t n = space.size();
    if (rng.coin()) {
        std::vector<Event> possible;
        const bool reflexive = rng.coin();
        for (StateIndex s = 0; s < n; ++s) {
            const Event b = random_event(rng, n);
            possible.push_back(reflexive ? b.with(s) : b);
        }
        return from_correspondence(space, PossibilityCorrespondence{std::move(possible)}, owner);
    }
    std::vector<std::pair<Event, Event>> core;
    const Event full = space.full();
    switch (rng.below(4)) {
    case 0:
        for (std::size_t k = rng.below(event_count(n) + 1); k > 0; --k) {
            const Event e = random_event(rng, n);
            core.emplace_back(e, random_event(rng, n));
        }
        break;
    case 1:
        for (std::size_t k = rng.below(event_count(n) + 1); k > 0; --k) {
            const Event e = random_event(rng, n);
            core.emplace_back(e, random_event(rng, n) & e);
        }
        if (rng.coin()) {
            core.emplace_back(full, full);
        }
        break;
    case 2:
        // Each state's believed events share a state, so no state believes
        // an event together with its complement.
        for (StateIndex s = 0; s < n; ++s) {
            if (!rng.chance(3, 4)) {
                continue;
            }
            const StateIndex centre = rng.below(n);
            for (std::size_t k = rng.between(1, 3); k > 0; --k) {
                core.emplace_back(random_event(rng, n).with(centre), space.singleton(s));
            }
        }
        break;
    default: {
        // Beliefs constant on the blocks of a partition, each block believing
        // itself: introspective in both directions.
        std::vector<std::size_t> label(n);
        for (auto& l : label) {
            l = rng.below(n);
        }
        for (std::size_t l = 0; l < n; ++l) {
            Event block = space.empty();
            for (StateIndex s = 0; s < n; ++s) {
                if (label[s] == l) {
                    block = block.with(s);
                }
            }
            if (block.is_empty()) {
                continue;
            }
            core.emplace_back(block, block);
            for (std::size_t k = rng.below(3); k > 0; --k) {
                core.emplace_back(random_event(rng, n), block);
            }
        }
        break;
    }
    }
    return monotone_closure(space, core, owner);
}

std::vector<BeliefOperator> draw_operators(Rng& rng, const StateSpace& space, std::size_t players)
{
    const auto ids = player_ids(players);
    std::vector<BeliefOperator> ops;
    if (players > 1 && rng.chance(1, 4)) {
        Rng replay = rng;
        for (const auto& id : ids) {
            replay = rng;
            ops.push_back(draw_operator(replay, space, id));
        }
        rng = replay;
        return ops;
    }
    for (const auto& id : ids) {
        ops.push_back(draw_operator(rng, space, id));
    }
    return ops;
}

/// Strategies constant on the classes linked by the derived correspondence
/// are often self-evident, so certainty premises hold regularly.
std::vector<ActionIndex> draw_strategy(Rng& rng, const BeliefOperator& op, std::size_t actions)
{
    const std::size_t n = op.states();
    std::vector<ActionIndex> sigma(n);
    switch (rng.below(3)) {
    case 0: {
        const ActionIndex a = rng.below(actions);
        std::fill(sigma.begin(), sigma.end(), a);
        break;
    }
    case 1: {
        std::vector<std::size_t> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        const std::function<std::size_t(std::size_t)> root = [&](std::size_t s) {
            return parent[s] == s ? s : parent[s] = root(parent[s]);
        };
        const auto b = derive_correspondence(op);
        for (StateIndex s = 0; s < n; ++s) {
            for (StateIndex t = 0; t < n; ++t) {
                if (b[s].contains(t)) {
                    parent[root(s)] = root(t);
                }
            }
        }
        std::vector<ActionIndex> of_class(n);
        for (auto& a : of_class) {
            a = rng.below(actions);
        }
        for (StateIndex s = 0; s < n; ++s) {
            sigma[s] = of_class[root(s)];
        }
        break;
    }
    default:
        for (auto& a : sigma) {
            a = rng.below(actions);
        }
        break;
    }
    return sigma;
}

// ---------------------------------------------------------------------------
// Instances and recording

struct Instance {
    std::size_t index = 0;
    std::uint64_t seed = 0;
    bool new_game = true;
    std::optional<BeliefModel> model;
    std::optional<GameModel> game;

    [[nodiscard]] const BeliefModel& belief() const { return game ? game->belief() : *model; }
};

struct Note {
    std::string text;
    std::vector<dsl::NamedSignal> signals = {};
};

class Recorder {
public:
    Recorder(const ClaimInfo& claim, std::size_t keep) : keep_{keep}
    {
        for (std::size_t d = 0; d < claim.directions.size(); ++d) {
            result_.directions.push_back({claim.directions[d], claim.asserted[d]});
        }
    }

    void begin(const Instance& instance)
    {
        current_ = &instance;
        ++result_.instances;
    }

    template <class N>
    void check(std::size_t d, bool premise, bool conclusion, N&& note)
    {
        auto& tally = result_.directions.at(d);
        ++tally.checked;
        if (!premise) {
            ++tally.vacuous;
            return;
        }
        if (conclusion) {
            ++tally.confirmed;
            return;
        }
        ++tally.violated;
        if (tally.asserted) {
            ++result_.violations_total;
            if (result_.violations.size() < keep_) {
                result_.violations.push_back(finding(tally.name, note()));
            }
        } else {
            ++result_.counterexamples_found;
            if (result_.counterexamples.size() < keep_) {
                result_.counterexamples.push_back(finding(tally.name, note()));
            }
        }
    }

    template <class N>
    void status(std::size_t d, ImplicationStatus s, N&& note)
    {
        check(d, s != ImplicationStatus::vacuous, s != ImplicationStatus::violated, std::forward<N>(note));
    }

    void vacuous(std::size_t d)
    {
        ++result_.directions.at(d).checked;
        ++result_.directions.at(d).vacuous;
    }

    template <class N>
    void found(N&& note)
    {
        ++result_.counterexamples_found;
        if (result_.counterexamples.size() < keep_) {
            result_.counterexamples.push_back(finding("search", note()));
        }
    }

    [[nodiscard]] AuditResult take() { return std::move(result_); }

private:
    Finding finding(const std::string& direction, const Note& note) const
    {
        const auto doc = dsl::document_of(current_->belief(), note.signals, current_->game ? &*current_->game : nullptr);
        return Finding{current_->index, direction, note.text, dsl::serialize(doc)};
    }

    std::size_t keep_;
    const Instance* current_ = nullptr;
    AuditResult result_;
};

// ---------------------------------------------------------------------------
// Claim evaluators

using Evaluator = void (*)(const Instance&, Recorder&);

bool has(const BeliefOperator& op, Axiom a) { return satisfies(op, a); }

bool all_have(const BeliefModel& m, std::initializer_list<Axiom> axioms)
{
    for (const auto& op : m.operators()) {
        for (const Axiom a : axioms) {
            if (!has(op, a)) {
                return false;
            }
        }
    }
    return true;
}

bool types_certain(const BeliefModel& m, PlayerIndex observer, PlayerIndex subject, TypeFamilyKind kind)
{
    return certain_of_type_mapping(m, observer, subject, kind).holds;
}

/// B_j(E) inside B_i(B_j(E)) for every E, or the same for disbelief.
bool transfer(const BeliefOperator& bi, const BeliefOperator& bj, bool negative)
{
    bool holds = true;
    for_each_event(bj.states(), [&](Event e) {
        const Event x = negative ? bj.disbelief(e) : bj(e);
        holds = holds && x.subset_of(bi(x));
    });
    return holds;
}

std::string label(const BeliefModel& m, PlayerIndex i) { return "player " + m.player_name(i); }

std::string label(const BeliefModel& m, PlayerIndex i, PlayerIndex j)
{
    return "players (" + m.player_name(i) + "," + m.player_name(j) + ")";
}

/// Tallies lhs => rhs as direction 0 and rhs => lhs as direction 1.
void iff(Recorder& r, bool premise, const std::string& who, const char* lhs_name, bool lhs, const char* rhs_name,
         bool rhs)
{
    const auto note = [&] {
        return Note{who + ": " + lhs_name + " " + yes_no(lhs) + ", " + rhs_name + " " + yes_no(rhs)};
    };
    r.check(0, premise && lhs, rhs, note);
    r.check(1, premise && rhs, lhs, note);
}

void own_beta(const Instance& in, Recorder& r)
{
    const auto& m = in.belief();
    for (PlayerIndex i = 0; i < m.players(); ++i) {
        iff(r, true, label(m, i), "certain of beta", types_certain(m, i, i, TypeFamilyKind::beta),
            "positive introspection", has(m.op(i), Axiom::positive_introspection));
    }
}

void own_neg_beta(const Instance& in, Recorder& r)
{
    const auto& m = in.belief();
    for (PlayerIndex i = 0; i < m.players(); ++i) {
        iff(r, true, label(m, i), "certain of negated beta", types_certain(m, i, i, TypeFamilyKind::neg_beta),
            "negative introspection", has(m.op(i), Axiom::negative_introspection));
    }
}

void own_atoms(const Instance& in, Recorder& r)
{
    const auto& m = in.belief();
    for (PlayerIndex i = 0; i < m.players(); ++i) {
        const bool cert = types_certain(m, i, i, TypeFamilyKind::sigma_atoms);
        const bool pi = has(m.op(i), Axiom::positive_introspection);
        const bool ni = has(m.op(i), Axiom::negative_introspection);
        r.check(0, cert, pi && ni, [&] {
            return Note{label(m, i) + ": certain of atoms, positive introspection " + yes_no(pi) +
                        ", negative introspection " + yes_no(ni)};
        });
    }
}

void own_atoms_truthful(const Instance& in, Recorder& r)
{
    const auto& m = in.belief();
    for (PlayerIndex i = 0; i < m.players(); ++i) {
        iff(r, has(m.op(i), Axiom::truth), label(m, i), "certain of atoms",
            types_certain(m, i, i, TypeFamilyKind::sigma_atoms), "negative introspection",
            has(m.op(i), Axiom::negative_introspection));
    }
}

void own_atoms_logical(const Instance& in, Recorder& r)
{
    const auto& m = in.belief();
    for (PlayerIndex i = 0; i < m.players(); ++i) {
        const auto& op = m.op(i);
        iff(r, has(op, Axiom::consistency) && has(op, Axiom::finite_conjunction), label(m, i), "certain of atoms",
            types_certain(m, i, i, TypeFamilyKind::sigma_atoms), "positive and negative introspection",
            has(op, Axiom::positive_introspection) && has(op, Axiom::negative_introspection));
    }
}

template <class F>
void for_pairs(const BeliefModel& m, F&& f)
{
    for (PlayerIndex i = 0; i < m.players(); ++i) {
        for (PlayerIndex j = 0; j < m.players(); ++j) {
            f(i, j);
        }
    }
}

void other_beta(const Instance& in, Recorder& r)
{
    const auto& m = in.belief();
    for_pairs(m, [&](PlayerIndex i, PlayerIndex j) {
        iff(r, true, label(m, i, j), "certain of beta", types_certain(m, i, j, TypeFamilyKind::beta),
            "positive transfer", transfer(m.op(i), m.op(j), false));
    });
}

void other_neg_beta(const Instance& in, Recorder& r)
{
    const auto& m = in.belief();
    for_pairs(m, [&](PlayerIndex i, PlayerIndex j) {
        iff(r, true, label(m, i, j), "certain of negated beta", types_certain(m, i, j, TypeFamilyKind::neg_beta),
            "negative transfer", transfer(m.op(i), m.op(j), true));
    });
}

void other_atoms(const Instance& in, Recorder& r)
{
    const auto& m = in.belief();
    for_pairs(m, [&](PlayerIndex i, PlayerIndex j) {
        const bool cert = types_certain(m, i, j, TypeFamilyKind::sigma_atoms);
        const bool pt = transfer(m.op(i), m.op(j), false);
        const bool nt = transfer(m.op(i), m.op(j), true);
        r.check(0, cert, pt && nt, [&] {
            return Note{label(m, i, j) + ": certain of atoms, positive transfer " + yes_no(pt) +
                        ", negative transfer " + yes_no(nt)};
        });
    });
}

void other_atoms_truthful(const Instance& in, Recorder& r)
{
    const auto& m = in.belief();
    for_pairs(m, [&](PlayerIndex i, PlayerIndex j) {
        iff(r, has(m.op(i), Axiom::truth), label(m, i, j), "certain of atoms",
            types_certain(m, i, j, TypeFamilyKind::sigma_atoms), "positive and negative transfer",
            transfer(m.op(i), m.op(j), false) && transfer(m.op(i), m.op(j), true));
    });
}

void other_atoms_truthful_negative_only(const Instance& in, Recorder& r)
{
    const auto& m = in.belief();
    for_pairs(m, [&](PlayerIndex i, PlayerIndex j) {
        if (has(m.op(i), Axiom::truth) && transfer(m.op(i), m.op(j), true) &&
            !types_certain(m, i, j, TypeFamilyKind::sigma_atoms)) {
            r.found([&] {
                return Note{label(m, i, j) + ": truthful observer with negative transfer, not certain of atoms"};
            });
        }
    });
}

void other_atoms_logical(const Instance& in, Recorder& r)
{
    const auto& m = in.belief();
    for_pairs(m, [&](PlayerIndex i, PlayerIndex j) {
        const auto& op = m.op(i);
        iff(r, has(op, Axiom::consistency) && has(op, Axiom::finite_conjunction), label(m, i, j),
            "certain of atoms", types_certain(m, i, j, TypeFamilyKind::sigma_atoms),
            "positive and negative transfer", transfer(op, m.op(j), false) && transfer(op, m.op(j), true));
    });
}

bool all_clauses(const MetaCertaintyReport& report, const BeliefModel& m, std::initializer_list<const char*> prefixes)
{
    for (PlayerIndex i = 0; i < m.players(); ++i) {
        for (const char* prefix : prefixes) {
            if (!report.clause(std::string{prefix} + "(" + m.player_name(i) + ")").holds) {
                return false;
            }
        }
    }
    return true;
}

void common_certainty_truthful(const Instance& in, Recorder& r)
{
    const auto& m = in.belief();
    if (!all_have(m, {Axiom::truth})) {
        for (std::size_t d = 0; d < 3; ++d) {
            r.vacuous(d);
        }
        return;
    }
    const auto report = meta_certainty_report(m);
    const bool cc = report.commonly_certain();
    const bool identical = report.clause("identical-operators").holds;
    const bool ni = all_have(m, {Axiom::negative_introspection});
    const bool belief_is_common = all_clauses(report, m, {"player-equals-common"});
    const auto note = [&] {
        return Note{"commonly certain " + yes_no(cc) + ", identical operators " + yes_no(identical) +
                    ", negative introspection " + yes_no(ni) + ", each belief equals common belief " +
                    yes_no(belief_is_common)};
    };
    r.check(0, cc, identical && ni, note);
    r.check(1, identical && ni, cc, note);
    r.check(2, cc, belief_is_common, note);
}

void common_certainty_logical(const Instance& in, Recorder& r)
{
    const auto& m = in.belief();
    if (!all_have(m, {Axiom::consistency, Axiom::finite_conjunction})) {
        for (std::size_t d = 0; d < 3; ++d) {
            r.vacuous(d);
        }
        return;
    }
    const auto report = meta_certainty_report(m);
    const bool cc = report.commonly_certain();
    const bool introspection =
        all_clauses(report, m, {"common-positive-introspection", "common-negative-introspection"});
    const bool common_is_mutual = report.clause("common-equals-mutual").holds;
    const auto note = [&] {
        return Note{"commonly certain " + yes_no(cc) + ", beliefs commonly believed " + yes_no(introspection) +
                    ", common belief equals mutual belief " + yes_no(common_is_mutual)};
    };
    r.check(0, cc, introspection, note);
    r.check(1, introspection, cc, note);
    r.check(2, cc, common_is_mutual, note);
}

void common_is_mutual_without_certainty(const Instance& in, Recorder& r)
{
    const auto& m = in.belief();
    if (!all_have(m, {Axiom::consistency, Axiom::finite_conjunction})) {
        return;
    }
    const auto report = meta_certainty_report(m);
    if (report.clause("common-equals-mutual").holds && !report.commonly_certain()) {
        r.found([] { return Note{"common belief equals mutual belief, profile not commonly certain"}; });
    }
}

void introspective_one_sided(const Instance& in, Recorder& r)
{
    const auto& m = in.belief();
    for (PlayerIndex i = 0; i < m.players(); ++i) {
        const auto& op = m.op(i);
        if (has(op, Axiom::positive_introspection) && !has(op, Axiom::negative_introspection) &&
            types_certain(m, i, i, TypeFamilyKind::beta) && !types_certain(m, i, i, TypeFamilyKind::neg_beta)) {
            r.found([&] { return Note{label(m, i) + ": certain of beta, not of negated beta"}; });
        }
    }
}

Signal random_signal(Rng& rng, std::size_t n, std::size_t codomain)
{
    std::vector<std::string> values;
    for (std::size_t v = 0; v < codomain; ++v) {
        values.push_back(std::string(1, static_cast<char>('a' + v)));
    }
    std::vector<std::size_t> assignment(n);
    for (auto& v : assignment) {
        v = rng.below(codomain);
    }
    return Signal{values, assignment, families::singletons(codomain)};
}

ValueSet random_value_set(Rng& rng, std::size_t codomain)
{
    ValueSet set;
    const std::size_t bits = 1 + rng.below((std::size_t{1} << codomain) - 1);
    for (std::size_t v = 0; v < codomain; ++v) {
        if ((bits >> v) & 1U) {
            set.push_back(v);
        }
    }
    return set;
}

/// Signals whose family covers every member's complement by members.
std::vector<dsl::NamedSignal> covered_signals(Rng& rng, std::size_t n)
{
    std::vector<dsl::NamedSignal> out;
    for (std::size_t k = 0; k < 2; ++k) {
        const std::size_t m = rng.between(1, 3);
        auto x = random_signal(rng, n, m);
        auto family = families::singletons(m);
        if (rng.coin()) {
            family.push_back(random_value_set(rng, m));
        }
        out.push_back({"x" + std::to_string(k + 1),
                       Signal{x.codomain(), x.assignment(), families::with_complements(m, family)}});
    }
    return out;
}

/// Signals whose family misses some member's complement.
std::vector<dsl::NamedSignal> uncovered_signals(Rng& rng, std::size_t n)
{
    std::vector<dsl::NamedSignal> out;
    for (std::size_t k = 0; k < 2; ++k) {
        const std::size_t m = rng.between(2, 3);
        auto x = random_signal(rng, n, m);
        std::vector<ValueSet> family{random_value_set(rng, m)};
        if (rng.coin()) {
            family.push_back(random_value_set(rng, m));
        }
        if (families::complements_covered(m, family)) {
            continue;
        }
        out.push_back({"y" + std::to_string(k + 1), Signal{x.codomain(), x.assignment(), family}});
    }
    return out;
}

void signal_transfer(const Instance& in, Recorder& r)
{
    const auto& m = in.belief();
    Rng rng{derive_seed(in.seed, 4)};
    const auto covered = covered_signals(rng, m.states());
    const auto uncovered = uncovered_signals(rng, m.states());
    const bool consistent = all_have(m, {Axiom::consistency});
    for (PlayerIndex i = 0; i < m.players(); ++i) {
        for (PlayerIndex j = 0; j < m.players(); ++j) {
            if (i == j) {
                continue;
            }
            const bool types = consistent && types_certain(m, j, i, TypeFamilyKind::sigma_atoms);
            for (std::size_t d = 0; d < 2; ++d) {
                for (const auto& named : d == 0 ? covered : uncovered) {
                    const bool ci = certain_of(m, i, named.signal).holds;
                    const bool cj = certain_of(m, j, named.signal).holds;
                    r.check(d, types && ci, cj, [&] {
                        return Note{label(m, i, j) + ": " + m.player_name(j) + " certain of " + m.player_name(i) +
                                        "'s type atoms and " + m.player_name(i) + " certain of " + named.name +
                                        ", " + m.player_name(j) + " not",
                                    {named}};
                    });
                }
            }
        }
    }
}

void signal_agreement(const Instance& in, Recorder& r)
{
    const auto& m = in.belief();
    Rng rng{derive_seed(in.seed, 4)};
    const auto covered = covered_signals(rng, m.states());
    const bool premise = all_have(m, {Axiom::consistency}) && commonly_certain_of_profile(m);
    for (PlayerIndex i = 0; i < m.players(); ++i) {
        for (PlayerIndex j = 0; j < m.players(); ++j) {
            if (i == j) {
                continue;
            }
            for (const auto& named : covered) {
                if (!premise) {
                    r.vacuous(0);
                    continue;
                }
                const bool ci = certain_of(m, i, named.signal).holds;
                const bool cj = certain_of(m, j, named.signal).holds;
                r.check(0, ci, cj, [&] {
                    return Note{label(m, i, j) + ": profile commonly certain, " + m.player_name(i) +
                                    " certain of " + named.name + ", " + m.player_name(j) + " not",
                                {named}};
                });
            }
        }
    }
}

void compatibility(const Instance& in, Recorder& r)
{
    const auto& m = in.belief();
    for (PlayerIndex i = 0; i < m.players(); ++i) {
        const auto v = compatibility_from_certainty(m, i);
        r.status(0, v.status, [&] {
            return Note{label(m, i) + ": consistent and conjunctive, certain of the upward family, not compatible"};
        });
    }
}

template <class F>
void per_operator(const Instance& in, Recorder& r, F&& f)
{
    const auto& m = in.belief();
    for (PlayerIndex i = 0; i < m.players(); ++i) {
        f(m.op(i), label(m, i), r);
    }
}

void truth_ni_pi(const Instance& in, Recorder& r)
{
    per_operator(in, r, [](const BeliefOperator& op, const std::string& who, Recorder& rec) {
        rec.check(0, has(op, Axiom::truth) && has(op, Axiom::negative_introspection),
                  has(op, Axiom::positive_introspection),
                  [&] { return Note{who + ": truth and negative introspection without positive introspection"}; });
    });
}

void truth_consistency(const Instance& in, Recorder& r)
{
    per_operator(in, r, [](const BeliefOperator& op, const std::string& who, Recorder& rec) {
        rec.check(0, has(op, Axiom::truth), has(op, Axiom::consistency),
                  [&] { return Note{who + ": truth without consistency"}; });
    });
}

void kripke_normal(const Instance& in, Recorder& r)
{
    per_operator(in, r, [](const BeliefOperator& op, const std::string& who, Recorder& rec) {
        rec.check(0, has(op, Axiom::kripke),
                  has(op, Axiom::necessitation) && has(op, Axiom::finite_conjunction) &&
                      has(op, Axiom::countable_conjunction),
                  [&] { return Note{who + ": Kripke property without necessitation or conjunction"}; });
    });
}

void frame_characterizations(const Instance& in, Recorder& r)
{
    static constexpr std::array<std::pair<Axiom, FrameProperty>, 4> dictionary{{
        {Axiom::consistency, FrameProperty::serial},
        {Axiom::truth, FrameProperty::reflexive},
        {Axiom::positive_introspection, FrameProperty::transitive},
        {Axiom::negative_introspection, FrameProperty::euclidean},
    }};
    per_operator(in, r, [](const BeliefOperator& op, const std::string& who, Recorder& rec) {
        const bool kripke = has(op, Axiom::kripke);
        const auto b = kripke ? derive_correspondence(op) : PossibilityCorrespondence{};
        for (std::size_t d = 0; d < dictionary.size(); ++d) {
            if (!kripke) {
                rec.vacuous(d);
                continue;
            }
            const auto [axiom, property] = dictionary[d];
            const bool a = has(op, axiom);
            const bool p = correspondence_property(b, property).holds;
            rec.check(d, true, a == p, [&] {
                return Note{who + ": " + std::string{to_string(axiom)} + " " + yes_no(a) + ", " +
                            std::string{to_string(property)} + " " + yes_no(p)};
            });
        }
    });
}

void compatibility_lattice(const Instance& in, Recorder& r)
{
    per_operator(in, r, [](const BeliefOperator& op, const std::string& who, Recorder& rec) {
        const bool compatible = compatible_with_informativeness(op).holds;
        const bool empty = op(Event::none(op.states())).is_empty();
        const bool consistent = has(op, Axiom::consistency);
        const auto note = [&] {
            return Note{who + ": compatible " + yes_no(compatible) + ", believes nothing impossible " +
                        yes_no(empty) + ", consistent " + yes_no(consistent)};
        };
        rec.check(0, has(op, Axiom::kripke) && consistent && has(op, Axiom::positive_introspection), compatible,
                  note);
        rec.check(1, compatible, empty, note);
        rec.check(2, compatible && has(op, Axiom::finite_conjunction), consistent, note);
    });
}

void constant_signals(const Instance& in, Recorder& r)
{
    const auto& m = in.belief();
    const Signal constant{{"a"}, std::vector<std::size_t>(m.states(), 0), families::singletons(1)};
    for (PlayerIndex i = 0; i < m.players(); ++i) {
        iff(r, true, label(m, i), "certain of a constant signal", certain_of(m, i, constant).holds, "necessitation",
            has(m.op(i), Axiom::necessitation));
    }
}

void partition_measurability(const Instance& in, Recorder& r)
{
    const auto& m = in.belief();
    Rng rng{derive_seed(in.seed, 5)};
    for (PlayerIndex i = 0; i < m.players(); ++i) {
        const auto& op = m.op(i);
        const bool partitional = has(op, Axiom::kripke) && has(op, Axiom::truth) &&
                                 has(op, Axiom::positive_introspection) && has(op, Axiom::negative_introspection);
        for (std::size_t k = 0; k < 2; ++k) {
            const dsl::NamedSignal named{"x", random_signal(rng, m.states(), rng.between(1, 3))};
            if (!partitional) {
                r.vacuous(0);
                r.vacuous(1);
                continue;
            }
            const bool cert = certain_of(m, i, named.signal).holds;
            const bool measurable = partition_measurable(m, i, named.signal);
            const auto note = [&] {
                return Note{label(m, i) + ": certain " + yes_no(cert) + ", measurable " + yes_no(measurable), {named}};
            };
            r.check(0, cert, measurable, note);
            r.check(1, measurable, cert, note);
        }
    }
}

std::size_t iteration_depth(const BeliefModel& m) { return event_count(m.states()) + 1; }

void common_belief_iteration(const Instance& in, Recorder& r)
{
    const auto& m = in.belief();
    const auto common = common_belief_table(m);
    const bool conjunctive = all_have(m, {Axiom::finite_conjunction});
    const std::size_t depth = iteration_depth(m);
    for_each_event(m.states(), [&](Event e) {
        const Event c = common[e.index()];
        const Event iterated = common_belief_iterated(m, e, depth);
        const auto note = [&] {
            return Note{"event " + m.space().format(e) + ": common belief " + m.space().format(c) + ", iterated " +
                        m.space().format(iterated)};
        };
        r.check(0, true, c.subset_of(iterated), note);
        r.check(1, conjunctive, c == iterated, note);
    });
}

void strict_common_belief(const Instance& in, Recorder& r)
{
    const auto& m = in.belief();
    const auto common = common_belief_table(m);
    const std::size_t depth = iteration_depth(m);
    bool done = false;
    for_each_event(m.states(), [&](Event e) {
        const Event iterated = common_belief_iterated(m, e, depth);
        if (!done && common[e.index()] != iterated) {
            done = true;
            r.found([&] {
                return Note{"event " + m.space().format(e) + ": common belief " +
                            m.space().format(common[e.index()]) + " strictly inside iterated " +
                            m.space().format(iterated)};
            });
        }
    });
}

// Game claims ---------------------------------------------------------------

template <class F>
void per_game_player(const Instance& in, Recorder& r, F&& f)
{
    const auto& gm = *in.game;
    for (PlayerIndex i = 0; i < gm.game().players(); ++i) {
        f(gm, i, label(gm.belief(), i), r);
    }
}

void own_rationality(const Instance& in, Recorder& r)
{
    per_game_player(in, r, [](const GameModel& gm, PlayerIndex i, const std::string& who, Recorder& rec) {
        const auto& op = gm.belief().op(i);
        const bool premise = strategy_certainty(gm, i).certainty.holds &&
                             compatible_with_informativeness(op).holds && has(op, Axiom::finite_conjunction);
        if (!premise) {
            rec.vacuous(0);
            return;
        }
        const auto check = correct_belief_in_own_rationality(gm, i);
        rec.check(0, true, check.holds, [&] {
            return Note{who + ": believes own rationality at " + gm.belief().space().name(*check.witness) +
                        " while irrational there"};
        });
    });
}

void own_rationality_without_conjunction(const Instance& in, Recorder& r)
{
    per_game_player(in, r, [](const GameModel& gm, PlayerIndex i, const std::string& who, Recorder& rec) {
        const auto& op = gm.belief().op(i);
        if (!strategy_certainty(gm, i).certainty.holds || !compatible_with_informativeness(op).holds ||
            has(op, Axiom::finite_conjunction)) {
            return;
        }
        const auto check = correct_belief_in_own_rationality(gm, i);
        if (!check.holds) {
            rec.found([&] {
                return Note{who + ": certain of own strategy and compatible, not conjunctive; believes own "
                                  "rationality at " +
                            gm.belief().space().name(*check.witness) + " while irrational there"};
            });
        }
    });
}

void kripke_rationality(const Instance& in, Recorder& r)
{
    per_game_player(in, r, [](const GameModel& gm, PlayerIndex i, const std::string& who, Recorder& rec) {
        const auto& op = gm.belief().op(i);
        const bool certain = strategy_certainty(gm, i).certainty.holds;
        const bool kripke = has(op, Axiom::kripke);
        const Event rat = rationality_event(gm, i);
        const Event believed = op(rat);
        const auto note = [&] {
            return Note{who + ": rationality " + gm.belief().space().format(rat) + ", believed at " +
                        gm.belief().space().format(believed)};
        };
        rec.check(0,
                  certain && kripke && has(op, Axiom::consistency) && has(op, Axiom::positive_introspection),
                  believed.subset_of(rat), note);
        rec.check(1, certain && kripke && has(op, Axiom::negative_introspection), rat.subset_of(believed), note);
    });
}

void epistemic_elimination(const Instance& in, Recorder& r)
{
    const auto& gm = *in.game;
    for (StateIndex s = 0; s < gm.belief().states(); ++s) {
        const auto v = epistemic_iesda_verdict(gm, s);
        r.status(0, v.status, [&] {
            return Note{"state " + gm.belief().space().name(s) +
                        ": rationality commonly and correctly believed, profile eliminated"};
        });
    }
}

void order_independence(const Instance& in, Recorder& r)
{
    if (!in.new_game) {
        return;
    }
    r.check(0, true, iesda_order_independent(in.game->game(), elimination_orders, in.seed),
            [] { return Note{"survivors depend on the elimination order"}; });
}

void strategy_identities(const Instance& in, Recorder& r)
{
    per_game_player(in, r, [](const GameModel& gm, PlayerIndex i, const std::string& who, Recorder& rec) {
        const auto rep = strategy_certainty(gm, i);
        rec.check(0, rep.consistency && rep.certainty.holds,
                  rep.belief_fixes_level_sets && rep.belief_fixes_complements && rep.necessitation, [&] {
                      return Note{who + ": fixes level sets " + yes_no(rep.belief_fixes_level_sets) +
                                  ", fixes complements " + yes_no(rep.belief_fixes_complements) +
                                  ", necessitation " + yes_no(rep.necessitation)};
                  });
    });
}

void rationality_monotonicity(const Instance& in, Recorder& r)
{
    const auto& gm = *in.game;
    const auto& m = gm.belief();
    std::vector<Event> rat;
    Event all = m.space().full();
    for (PlayerIndex i = 0; i < m.players(); ++i) {
        rat.push_back(rationality_event(gm, i));
        all &= rat.back();
    }
    Event each_common = m.space().full();
    for (const Event e : rat) {
        each_common &= common_belief(m, e);
    }
    const Event common_all = common_belief(m, all);
    r.check(0, true, common_all.subset_of(each_common), [&] {
        return Note{"common belief in joint rationality " + m.space().format(common_all) + ", in each " +
                    m.space().format(each_common)};
    });
    for (PlayerIndex i = 0; i < m.players(); ++i) {
        r.check(1, true, m.op(i)(all).subset_of(m.op(i)(rat[i])),
                [&] { return Note{label(m, i) + ": believes joint rationality but not own"}; });
    }
}

void rationality_restated(const Instance& in, Recorder& r)
{
    per_game_player(in, r, [](const GameModel& gm, PlayerIndex i, const std::string& who, Recorder& rec) {
        const Event a = rationality_event(gm, i);
        const Event b = rationality_event_restated(gm, i);
        rec.check(0, true, a == b, [&] {
            return Note{who + ": " + gm.belief().space().format(a) + " versus " + gm.belief().space().format(b)};
        });
    });
}

// ---------------------------------------------------------------------------
// Registry

struct ClaimDef {
    ClaimInfo info;
    Evaluator evaluate = nullptr;
};

ClaimDef implication(std::string id, std::string statement, Evaluator f,
                     std::vector<std::string> directions, ClaimDomain domain = ClaimDomain::belief)
{
    ClaimDef def;
    def.info.id = std::move(id);
    def.info.statement = std::move(statement);
    def.info.domain = domain;
    def.info.asserted.assign(directions.size(), true);
    def.info.directions = std::move(directions);
    def.evaluate = f;
    return def;
}

ClaimDef search(std::string id, std::string statement, Evaluator f,
                ClaimDomain domain = ClaimDomain::belief)
{
    auto def = implication(std::move(id), std::move(statement), f, {}, domain);
    def.info.expects_counterexample = true;
    return def;
}

const std::vector<ClaimDef>& registry()
{
    static const std::vector<ClaimDef> defs = [] {
        const auto game = ClaimDomain::game;
        std::vector<ClaimDef> d;
        d.push_back(implication("pi-iff-certain-of-beta",
                                "a player is certain of her own type mapping with respect to the belief-event "
                                "family iff her beliefs are positively introspective",
                                own_beta, {"certain-implies-pi", "pi-implies-certain"}));
        d.push_back(implication("ni-iff-certain-of-neg-beta",
                                "a player is certain of her own type mapping with respect to the complemented "
                                "belief-event family iff her beliefs are negatively introspective",
                                own_neg_beta, {"certain-implies-ni", "ni-implies-certain"}));
        d.push_back(implication("certain-of-atoms-implies-introspection",
                                "certainty of one's own type atoms implies positive and negative introspection",
                                own_atoms, {"certain-implies-pi-and-ni"}));
        d.push_back(implication("truthful-certain-of-atoms-iff-ni",
                                "under Truth, certainty of one's own type atoms is equivalent to negative "
                                "introspection",
                                own_atoms_truthful, {"certain-implies-ni", "ni-implies-certain"}));
        d.push_back(implication("logical-certain-of-atoms-iff-introspection",
                                "under Consistency and Finite Conjunction, certainty of one's own type atoms is "
                                "equivalent to positive and negative introspection",
                                own_atoms_logical,
                                {"certain-implies-pi-and-ni", "pi-and-ni-imply-certain"}));
        d.push_back(implication("positive-transfer-iff-certain-of-beta",
                                "i is certain of j's type mapping with respect to the belief-event family iff "
                                "B_j(E) is contained in B_i(B_j(E)) for every E",
                                other_beta, {"certain-implies-transfer", "transfer-implies-certain"}));
        d.push_back(implication("negative-transfer-iff-certain-of-neg-beta",
                                "i is certain of j's type mapping with respect to the complemented family iff "
                                "the complement of B_j(E) is contained in B_i of that complement for every E",
                                other_neg_beta,
                                {"certain-implies-transfer", "transfer-implies-certain"}));
        d.push_back(implication("certain-of-atoms-implies-transfers",
                                "certainty of j's type atoms implies both positive and negative transfer from j "
                                "to i",
                                other_atoms, {"certain-implies-transfers"}));
        d.push_back(implication("truthful-certain-of-atoms-iff-transfers",
                                "when i's beliefs are truthful, i is certain of j's type atoms iff both transfers "
                                "from j to i hold",
                                other_atoms_truthful,
                                {"certain-implies-transfers", "transfers-imply-certain"}));
        d.push_back(search("truthful-negative-transfer-without-atom-certainty",
                           "a truthful observer with negative transfer from j that is not certain of j's type "
                           "atoms exists",
                           other_atoms_truthful_negative_only));
        d.push_back(implication("logical-certain-of-atoms-iff-transfers",
                                "when i's beliefs are consistent and finitely conjunctive, i is certain of j's type "
                                "atoms iff both transfers from j to i hold",
                                other_atoms_logical,
                                {"certain-implies-transfers", "transfers-imply-certain"}));
        d.push_back(implication("truthful-common-certainty-iff-identical-introspective",
                                "with truthful beliefs, the players are commonly certain of the type profile iff "
                                "all operators coincide and satisfy negative introspection; each belief then "
                                "equals common belief",
                                common_certainty_truthful,
                                {"certainty-implies-identical-and-ni", "identical-and-ni-imply-certainty",
                                 "certainty-implies-belief-is-common"}));
        d.push_back(implication("logical-common-certainty-iff-beliefs-commonly-believed",
                                "with consistent and conjunctive beliefs, the players are commonly certain of the "
                                "type profile iff every belief and disbelief of every player is common belief "
                                "wherever it holds; common belief then equals mutual belief",
                                common_certainty_logical,
                                {"certainty-implies-common-introspection", "common-introspection-implies-certainty",
                                 "certainty-implies-common-equals-mutual"}));
        d.push_back(search("common-equals-mutual-without-common-certainty",
                           "a consistent conjunctive model whose common belief equals mutual belief while the "
                           "type profile is not commonly certain exists",
                           common_is_mutual_without_certainty));
        d.push_back(search("pi-without-ni-certain-of-beta-only",
                           "a positively but not negatively introspective player certain of the belief-event "
                           "family but not of its complements exists",
                           introspective_one_sided));
        {
            auto def = implication("consistent-signal-certainty-transfers",
                                   "with consistent beliefs and a family covering complements, if i is certain of "
                                   "x and j is certain of i's type atoms then j is certain of x",
                                   signal_transfer,
                                   {"covered-family", "uncovered-family"});
            def.info.asserted[1] = false;
            d.push_back(std::move(def));
        }
        d.push_back(implication("common-type-certainty-equalises-signal-certainty",
                                "with consistent beliefs, a family covering complements and a commonly certain "
                                "type profile, i is certain of x iff j is",
                                signal_agreement, {"i-certain-implies-j-certain"}));
        d.push_back(implication("certainty-of-upward-family-gives-compatibility",
                                "a consistent, finitely conjunctive player certain of her type mapping with "
                                "respect to the upward family is compatible with informativeness",
                                compatibility, {"implication"}));
        d.push_back(implication("truth-and-ni-imply-pi",
                                "Truth and Negative Introspection yield Positive Introspection", truth_ni_pi,
                                {"implication"}));
        d.push_back(implication("truth-implies-consistency", "Truth yields Consistency", truth_consistency,
                                {"implication"}));
        d.push_back(implication("kripke-implies-normal",
                                "the Kripke property yields Necessitation, Finite and Countable Conjunction", kripke_normal, {"implication"}));
        d.push_back(implication("frame-characterizations",
                                "for Kripke operators, Consistency, Truth, Positive and Negative Introspection hold "
                                "iff the possibility correspondence is serial, reflexive, transitive and euclidean",
                                frame_characterizations,
                                {"consistency-serial", "truth-reflexive", "pi-transitive", "ni-euclidean"}));
        d.push_back(implication("compatibility-lattice",
                                "Kripke, consistent and positively introspective beliefs are compatible with "
                                "informativeness; compatibility yields B(empty)=empty, and with Finite Conjunction "
                                "Consistency",
                                compatibility_lattice,
                                {"kripke-consistent-pi-imply-compatible", "compatible-implies-empty-disbelief",
                                 "compatible-conjunctive-implies-consistent"}));
        d.push_back(implication("constant-signal-certainty-iff-necessitation",
                                "a player is certain of every constant signal iff her beliefs satisfy Necessitation",
                                constant_signals, {"certain-implies-necessitation", "necessitation-implies-certain"}));
        d.push_back(implication("partitional-certainty-iff-measurability",
                                "with partitional beliefs, certainty of a signal with the singleton family is "
                                "measurability with respect to the partition",
                                partition_measurability, {"certain-implies-measurable", "measurable-implies-certain"}));
        d.push_back(implication("common-belief-versus-iteration",
                                "common belief is contained in the intersection of iterated mutual beliefs, with "
                                "equality under Finite Conjunction",
                                common_belief_iteration, {"fixpoint-within-iteration", "conjunctive-equality"}));
        d.push_back(search("strict-common-belief-inclusion",
                           "a model where common belief is strictly smaller than iterated mutual belief exists",
                           strict_common_belief));
        d.push_back(implication("own-rationality-correctly-believed",
                                "a player certain of her own strategy, compatible with informativeness and finitely "
                                "conjunctive correctly believes her own rationality",
                                own_rationality, {"implication"}, game));
        d.push_back(search("own-rationality-fails-without-conjunction",
                           "a player certain of her own strategy and compatible with informativeness but not "
                           "finitely conjunctive who wrongly believes her own rationality exists",
                           own_rationality_without_conjunction, game));
        d.push_back(implication("kripke-rationality-belief",
                                "Kripke beliefs with certainty of one's own strategy: Consistency and Positive "
                                "Introspection give B(RAT) inside RAT; Negative Introspection gives RAT inside B(RAT)",
                                kripke_rationality, {"consistent-pi-correct", "ni-self-evident"}, game));
        d.push_back(implication("common-rationality-survives-elimination",
                                "if every player correctly believes her own rationality and every player's "
                                "rationality is common belief at a state, the profile played there survives "
                                "iterated elimination of strictly dominated actions",
                                epistemic_elimination, {"implication"}, game));
        d.push_back(implication("elimination-order-independent",
                                "the surviving profiles do not depend on the elimination order", order_independence, {"maximal-versus-seeded"}, game));
        d.push_back(implication("strategy-certainty-identities",
                                "under Consistency, certainty of one's own strategy makes level sets and their "
                                "complements fixed points of belief and yields Necessitation",
                                strategy_identities, {"implication"}, game));
        d.push_back(implication("rationality-monotonicity",
                                "common belief and individual belief in joint rationality imply those in each "
                                "player's own rationality",
                                rationality_monotonicity, {"common-belief", "own-belief"}, game));
        d.push_back(implication("rationality-formulations-agree",
                                "rationality defined through strict preference agrees with its restatement "
                                "through disbelief in weak preference",
                                rationality_restated, {"agreement"}, game));
        return d;
    }();
    return defs;
}

const ClaimDef* find_def(std::string_view id)
{
    for (const auto& def : registry()) {
        if (def.info.id == id) {
            return &def;
        }
    }
    return nullptr;
}

// ---------------------------------------------------------------------------
// Sources

class Stream {
public:
    Stream(const ModelSource& source, ClaimDomain domain) : source_{source}, domain_{domain}
    {
        source.validate();
        switch (source.mode) {
        case SourceMode::exhaustive_kripke: {
            const auto space = StateSpace::numbered(source.states);
            const auto ids = player_ids(source.players);
            const auto all = enumerate_correspondences(source.states);
            operators_.resize(source.players);
            for (std::size_t i = 0; i < source.players; ++i) {
                for (const auto& b : all) {
                    operators_[i].push_back(from_correspondence(space, b, ids[i]));
                }
            }
            size_ = checked_power(all.size(), source.players);
            break;
        }
        case SourceMode::exhaustive_games: {
            const auto space = StateSpace::numbered(source.states);
            const auto all = enumerate_correspondences(source.states);
            operators_.resize(2);
            for (std::size_t i = 0; i < 2; ++i) {
                for (const auto& b : all) {
                    operators_[i].push_back(from_correspondence(space, b, std::to_string(i + 1)));
                }
            }
            for (std::size_t code = 0; code < 81; ++code) {
                games_.push_back(comparison_game(code));
            }
            strategies_ = std::size_t{1} << source.states;
            per_game_ = all.size() * all.size() * strategies_ * strategies_;
            size_ = games_.size() * per_game_;
            break;
        }
        case SourceMode::from_files:
            for (const auto& path : source.files) {
                auto loaded = dsl::load_file(path);
                if (domain == ClaimDomain::game && !loaded.game) {
                    continue;
                }
                files_.push_back(std::move(loaded));
            }
            size_ = files_.size();
            break;
        default:
            size_ = source.count;
            break;
        }
    }

    [[nodiscard]] std::size_t size() const { return size_; }

    [[nodiscard]] Instance make(std::size_t index) const
    {
        Instance in;
        in.index = index;
        in.seed = derive_seed(source_.seed, index);
        switch (source_.mode) {
        case SourceMode::exhaustive_kripke: {
            const auto space = StateSpace::numbered(source_.states);
            std::vector<BeliefOperator> ops;
            std::size_t rest = index;
            for (const auto& per_player : operators_) {
                ops.push_back(per_player[rest % per_player.size()]);
                rest /= per_player.size();
            }
            in.model.emplace(space, std::move(ops));
            break;
        }
        case SourceMode::exhaustive_games: {
            const std::size_t k = operators_[0].size();
            const std::size_t rest = index % per_game_;
            in.new_game = rest == 0;
            const std::size_t beliefs = rest / (strategies_ * strategies_);
            const std::size_t plays = rest % (strategies_ * strategies_);
            std::vector<std::vector<ActionIndex>> sigma(2, std::vector<ActionIndex>(source_.states));
            for (StateIndex s = 0; s < source_.states; ++s) {
                sigma[0][s] = ((plays % strategies_) >> s) & 1U;
                sigma[1][s] = ((plays / strategies_) >> s) & 1U;
            }
            BeliefModel model{StateSpace::numbered(source_.states),
                              {operators_[0][beliefs % k], operators_[1][beliefs / k]}};
            in.game.emplace(std::move(model), games_[index / per_game_], std::move(sigma));
            break;
        }
        case SourceMode::sampled_monotone: {
            Rng rng{in.seed};
            const auto space = StateSpace::numbered(rng.between(1, source_.states));
            auto ops = draw_operators(rng, space, source_.players);
            in.model.emplace(space, std::move(ops));
            break;
        }
        case SourceMode::sampled_games: {
            Rng rng{in.seed};
            const auto space = StateSpace::numbered(rng.between(1, source_.states));
            auto ops = draw_operators(rng, space, source_.players);
            const auto ids = player_ids(source_.players);
            std::vector<std::vector<std::string>> actions;
            std::size_t profiles = 1;
            for (std::size_t i = 0; i < source_.players; ++i) {
                const std::size_t k = rng.between(std::min<std::size_t>(2, source_.actions), source_.actions);
                std::vector<std::string> names;
                for (std::size_t a = 0; a < k; ++a) {
                    names.push_back(std::string(1, static_cast<char>('a' + a)));
                }
                profiles *= k;
                actions.push_back(std::move(names));
            }
            std::vector<std::vector<long>> ranks(source_.players, std::vector<long>(profiles));
            for (auto& r : ranks) {
                for (auto& v : r) {
                    v = static_cast<long>(rng.below(4));
                }
            }
            std::vector<std::vector<ActionIndex>> sigma;
            for (std::size_t i = 0; i < source_.players; ++i) {
                sigma.push_back(draw_strategy(rng, ops[i], actions[i].size()));
            }
            Game g{ids, std::move(actions), std::move(ranks)};
            in.game.emplace(BeliefModel{space, std::move(ops)}, std::move(g), std::move(sigma));
            break;
        }
        case SourceMode::from_files: {
            const auto& f = files_[index];
            if (f.game) {
                in.game.emplace(*f.game);
            } else {
                in.model.emplace(f.belief);
            }
            break;
        }
        }
        if (domain_ == ClaimDomain::game && !in.game) {
            throw model_error("claim needs game models");
        }
        return in;
    }

private:
    /// Two players with actions c and d; each player's digit pattern says,
    /// per opponent action, whether d is worse than, tied with or better than c.
    static Game comparison_game(std::size_t code)
    {
        std::vector<std::vector<long>> ranks(2, std::vector<long>(4));
        const std::size_t digits[2] = {code % 9, code / 9};
        for (ActionIndex a = 0; a < 2; ++a) {
            for (ActionIndex b = 0; b < 2; ++b) {
                const std::size_t profile = a * 2 + b;
                ranks[0][profile] = a == 0 ? 1 : static_cast<long>((digits[0] / (b == 0 ? 1 : 3)) % 3);
                ranks[1][profile] = b == 0 ? 1 : static_cast<long>((digits[1] / (a == 0 ? 1 : 3)) % 3);
            }
        }
        return Game{{"1", "2"}, {{"c", "d"}, {"c", "d"}}, ranks};
    }

    ModelSource source_;
    ClaimDomain domain_;
    std::size_t size_ = 0;
    std::vector<std::vector<BeliefOperator>> operators_;
    std::vector<Game> games_;
    std::size_t strategies_ = 0;
    std::size_t per_game_ = 1;
    std::vector<dsl::LoadedModel> files_;
};

void merge(AuditResult& into, AuditResult&& part, std::size_t keep)
{
    into.instances += part.instances;
    for (std::size_t d = 0; d < into.directions.size(); ++d) {
        auto& t = into.directions[d];
        const auto& p = part.directions[d];
        t.checked += p.checked;
        t.vacuous += p.vacuous;
        t.confirmed += p.confirmed;
        t.violated += p.violated;
    }
    into.violations_total += part.violations_total;
    into.counterexamples_found += part.counterexamples_found;
    for (auto& f : part.violations) {
        if (into.violations.size() < keep) {
            into.violations.push_back(std::move(f));
        }
    }
    for (auto& f : part.counterexamples) {
        if (into.counterexamples.size() < keep) {
            into.counterexamples.push_back(std::move(f));
        }
    }
}

} // namespace

std::vector<PossibilityCorrespondence> enumerate_correspondences(std::size_t n,
                                                                 const std::vector<FrameProperty>& filters)
{
    if (n == 0 || n > 3) {
        throw model_error("correspondence enumeration supports 1 to 3 states, not " + std::to_string(n));
    }
    const std::size_t count = std::size_t{1} << (n * n);
    const Event::mask_type full = Event::full_mask(n);
    std::vector<PossibilityCorrespondence> out;
    for (std::size_t code = 0; code < count; ++code) {
        std::vector<Event> possible;
        for (StateIndex s = 0; s < n; ++s) {
            possible.emplace_back(static_cast<Event::mask_type>(code >> (s * n)) & full, n);
        }
        PossibilityCorrespondence b{std::move(possible)};
        const bool keep = std::all_of(filters.begin(), filters.end(),
                                      [&](FrameProperty p) { return correspondence_property(b, p).holds; });
        if (keep) {
            out.push_back(std::move(b));
        }
    }
    return out;
}

std::vector<BeliefOperator> sample_monotone_operators(std::size_t n, std::uint64_t seed, std::size_t count)
{
    if (n == 0 || n > max_table_states) {
        throw model_error("sampling supports 1 to " + std::to_string(max_table_states) + " states");
    }
    const auto space = StateSpace::numbered(n);
    std::vector<BeliefOperator> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        Rng rng{derive_seed(seed, k)};
        out.push_back(draw_operator(rng, space, {}));
    }
    return out;
}

std::string_view to_string(SourceMode mode)
{
    switch (mode) {
    case SourceMode::exhaustive_kripke:
        return "exhaustive-kripke";
    case SourceMode::sampled_monotone:
        return "sampled-monotone";
    case SourceMode::exhaustive_games:
        return "exhaustive-games";
    case SourceMode::sampled_games:
        return "sampled-games";
    case SourceMode::from_files:
        return "from-files";
    }
    return "?";
}

std::optional<SourceMode> parse_source_mode(std::string_view name)
{
    if (name == "exhaustive") {
        return SourceMode::exhaustive_kripke;
    }
    if (name == "sampled") {
        return SourceMode::sampled_monotone;
    }
    for (const auto mode : {SourceMode::exhaustive_kripke, SourceMode::sampled_monotone, SourceMode::exhaustive_games,
                            SourceMode::sampled_games, SourceMode::from_files}) {
        if (to_string(mode) == name) {
            return mode;
        }
    }
    return std::nullopt;
}

void ModelSource::validate() const
{
    const auto fail = [&](const std::string& why) {
        throw model_error(std::string{to_string(mode)} + ": " + why);
    };
    switch (mode) {
    case SourceMode::exhaustive_kripke:
        if (states < 1 || states > 3) {
            fail("states must be 1 to 3");
        }
        if (players < 1 || checked_power(std::size_t{1} << (states * states), players) > max_instances) {
            fail("too many models for " + std::to_string(players) + " players");
        }
        break;
    case SourceMode::exhaustive_games:
        if (states < 1 || states > 2) {
            fail("states must be 1 or 2");
        }
        if (players != 2 || actions != 2) {
            fail("games are enumerated for 2 players with 2 actions each");
        }
        break;
    case SourceMode::sampled_monotone:
    case SourceMode::sampled_games:
        if (states < 1 || states > max_sampled_states) {
            fail("states must be 1 to " + std::to_string(max_sampled_states));
        }
        if (players < 1 || players > 4) {
            fail("players must be 1 to 4");
        }
        if (mode == SourceMode::sampled_games && (actions < 1 || actions > 4)) {
            fail("actions must be 1 to 4");
        }
        if (count < 1 || count > max_instances) {
            fail("count must be 1 to " + std::to_string(max_instances));
        }
        break;
    case SourceMode::from_files:
        if (files.empty()) {
            fail("no files given");
        }
        break;
    }
}

std::string ModelSource::describe() const
{
    std::string out{to_string(mode)};
    switch (mode) {
    case SourceMode::exhaustive_kripke:
        return out + " states=" + std::to_string(states) + " players=" + std::to_string(players);
    case SourceMode::exhaustive_games:
        return out + " states=" + std::to_string(states) + " players=2 actions=2";
    case SourceMode::sampled_monotone:
        return out + " states<=" + std::to_string(states) + " players=" + std::to_string(players) +
               " seed=" + std::to_string(seed) + " count=" + std::to_string(count);
    case SourceMode::sampled_games:
        return out + " states<=" + std::to_string(states) + " players=" + std::to_string(players) +
               " actions<=" + std::to_string(actions) + " seed=" + std::to_string(seed) +
               " count=" + std::to_string(count);
    case SourceMode::from_files:
        for (const auto& f : files) {
            out += " " + f;
        }
        return out;
    }
    return out;
}

const std::vector<ClaimInfo>& claims()
{
    static const std::vector<ClaimInfo> infos = [] {
        std::vector<ClaimInfo> out;
        for (const auto& def : registry()) {
            out.push_back(def.info);
        }
        return out;
    }();
    return infos;
}

const ClaimInfo* find_claim(std::string_view id)
{
    const auto* def = find_def(id);
    return def ? &claims()[static_cast<std::size_t>(def - registry().data())] : nullptr;
}

AuditResult run_audit(std::string_view claim, const ModelSource& requested, const AuditOptions& options)
{
    const auto* def = find_def(claim);
    if (!def) {
        throw model_error("unknown claim '" + std::string{claim} + "'");
    }
    ModelSource source = requested;
    if (def->info.domain == ClaimDomain::game) {
        if (source.mode == SourceMode::exhaustive_kripke) {
            source.mode = SourceMode::exhaustive_games;
        } else if (source.mode == SourceMode::sampled_monotone) {
            source.mode = SourceMode::sampled_games;
        }
    }
    const Stream stream{source, def->info.domain};

    const std::size_t total = stream.size();
    const std::size_t threads =
        std::max<std::size_t>(1, options.threads ? options.threads : std::thread::hardware_concurrency());
    const std::size_t chunk = std::clamp<std::size_t>(total / (threads * 8), 1, 4096);
    const std::size_t chunks = (total + chunk - 1) / chunk;

    std::vector<AuditResult> parts(chunks);
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    const auto work = [&] {
        try {
            for (std::size_t c = next++; c < chunks; c = next++) {
                Recorder recorder{def->info, options.keep_findings};
                for (std::size_t index = c * chunk; index < std::min(total, (c + 1) * chunk); ++index) {
                    const Instance in = stream.make(index);
                    recorder.begin(in);
                    def->evaluate(in, recorder);
                }
                parts[c] = recorder.take();
            }
        } catch (...) {
            const std::lock_guard lock{error_mutex};
            if (!error) {
                error = std::current_exception();
            }
            next = chunks;
        }
    };
    if (threads == 1 || chunks == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < std::min(threads, chunks); ++t) {
            pool.emplace_back(work);
        }
        for (auto& t : pool) {
            t.join();
        }
    }
    if (error) {
        std::rethrow_exception(error);
    }

    AuditResult result = Recorder{def->info, 0}.take();
    result.claim = def->info.id;
    result.statement = def->info.statement;
    result.source = source.describe();
    result.expects_counterexample = def->info.expects_counterexample;
    for (auto& part : parts) {
        merge(result, std::move(part), options.keep_findings);
    }
    return result;
}

} // namespace metacert::audit
