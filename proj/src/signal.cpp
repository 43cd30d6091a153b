#include "metacert/signal.hpp"

#include <algorithm>

namespace metacert {

namespace {

constexpr std::size_t max_product_codomain = std::size_t{1} << 16;

std::uint32_t to_bits(const ValueSet& values)
{
    std::uint32_t bits = 0;
    for (auto v : values) {
        bits |= std::uint32_t{1} << v;
    }
    return bits;
}

ValueSet from_bits(std::uint32_t bits, std::size_t k)
{
    ValueSet out;
    for (std::size_t v = 0; v < k; ++v) {
        if ((bits >> v) & 1U) {
            out.push_back(v);
        }
    }
    return out;
}

void require_small_codomain(std::size_t k)
{
    if (k > 16) {
        throw model_error("family constructor supports codomains of at most 16 values");
    }
}

} // namespace

Signal::Signal(std::vector<std::string> codomain, std::vector<std::size_t> assignment, std::vector<ValueSet> family)
    : codomain_{std::move(codomain)}, assignment_{std::move(assignment)}, family_{std::move(family)}
{
    if (codomain_.empty()) {
        throw model_error("signal codomain must be non-empty");
    }
    if (assignment_.empty() || assignment_.size() > max_states) {
        throw model_error("signal must assign a value to every state of a supported space");
    }
    if (family_.empty()) {
        throw model_error("signal observation family must be non-empty");
    }
    for (auto v : assignment_) {
        if (v >= codomain_.size()) {
            throw model_error("signal assigns a value outside its codomain");
        }
    }
    for (auto& f : family_) {
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
        if (!f.empty() && f.back() >= codomain_.size()) {
            throw model_error("observation is not a subset of the signal's codomain");
        }
    }
}

bool Signal::observed_at(std::size_t observation, StateIndex s) const
{
    const auto& f = family_.at(observation);
    return std::binary_search(f.begin(), f.end(), assignment_.at(s));
}

Event Signal::preimage(std::size_t observation) const { return preimage_of(family_.at(observation)); }

Event Signal::preimage_of(const ValueSet& values) const
{
    Event e = Event::none(states());
    for (StateIndex s = 0; s < states(); ++s) {
        if (std::binary_search(values.begin(), values.end(), assignment_[s])) {
            e = e.with(s);
        }
    }
    return e;
}

namespace families {

std::vector<ValueSet> singletons(std::size_t codomain_size)
{
    std::vector<ValueSet> out;
    for (std::size_t v = 0; v < codomain_size; ++v) {
        out.push_back({v});
    }
    return out;
}

std::vector<ValueSet> powerset(std::size_t codomain_size)
{
    require_small_codomain(codomain_size);
    std::vector<ValueSet> out;
    for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << codomain_size); ++bits) {
        out.push_back(from_bits(bits, codomain_size));
    }
    return out;
}

std::vector<ValueSet> upward_closure(std::size_t codomain_size, const std::vector<ValueSet>& generators)
{
    require_small_codomain(codomain_size);
    std::vector<std::uint32_t> gens;
    for (const auto& g : generators) {
        gens.push_back(to_bits(g));
    }
    std::vector<ValueSet> out;
    for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << codomain_size); ++bits) {
        if (std::any_of(gens.begin(), gens.end(), [&](std::uint32_t g) { return (g & ~bits) == 0; })) {
            out.push_back(from_bits(bits, codomain_size));
        }
    }
    return out;
}

std::vector<ValueSet> with_complements(std::size_t codomain_size, const std::vector<ValueSet>& family)
{
    std::vector<ValueSet> out = family;
    for (const auto& f : family) {
        ValueSet complement;
        for (std::size_t v = 0; v < codomain_size; ++v) {
            if (!std::binary_search(f.begin(), f.end(), v)) {
                complement.push_back(v);
            }
        }
        if (std::find(out.begin(), out.end(), complement) == out.end()) {
            out.push_back(std::move(complement));
        }
    }
    return out;
}

bool complements_covered(std::size_t codomain_size, const std::vector<ValueSet>& family)
{
    for (const auto& f : family) {
        for (std::size_t v = 0; v < codomain_size; ++v) {
            if (std::binary_search(f.begin(), f.end(), v)) {
                continue;
            }
            // Some member must contain v while avoiding f entirely.
            const bool covered = std::any_of(family.begin(), family.end(), [&](const ValueSet& g) {
                if (!std::binary_search(g.begin(), g.end(), v)) {
                    return false;
                }
                return std::none_of(g.begin(), g.end(),
                                    [&](std::size_t w) { return std::binary_search(f.begin(), f.end(), w); });
            });
            if (!covered) {
                return false;
            }
        }
    }
    return true;
}

} // namespace families

bool certain_of_value_at(const BeliefOperator& op, const Signal& x, StateIndex s)
{
    for (std::size_t f = 0; f < x.family().size(); ++f) {
        if (x.observed_at(f, s) && !op(x.preimage(f)).contains(s)) {
            return false;
        }
    }
    return true;
}

bool certain_of_value_at(const BeliefModel& model, PlayerIndex player, const Signal& x, StateIndex s)
{
    model.require_player(player);
    model.require_state(s);
    return certain_of_value_at(model.op(player), x, s);
}

CertaintyReport certain_of(const BeliefOperator& op, const Signal& x)
{
    if (x.states() != op.states()) {
        throw model_error("signal and operator live on different state spaces");
    }
    std::vector<Event> believed;
    believed.reserve(x.family().size());
    for (std::size_t f = 0; f < x.family().size(); ++f) {
        believed.push_back(op(x.preimage(f)));
    }
    CertaintyReport report;
    for (StateIndex s = 0; s < x.states(); ++s) {
        for (std::size_t f = 0; f < x.family().size(); ++f) {
            if (x.observed_at(f, s) && !believed[f].contains(s)) {
                report.holds = false;
                report.failures.push_back({s, f});
            }
        }
    }
    return report;
}

CertaintyReport certain_of(const BeliefModel& model, PlayerIndex player, const Signal& x)
{
    model.require_player(player);
    return certain_of(model.op(player), x);
}

bool preimages_self_evident(const BeliefOperator& op, const Signal& x)
{
    for (std::size_t f = 0; f < x.family().size(); ++f) {
        if (!is_self_evident(op, x.preimage(f))) {
            return false;
        }
    }
    return true;
}

bool commonly_certain_of_value_at(const BeliefModel& model, const Signal& x, StateIndex s)
{
    model.require_state(s);
    for (std::size_t f = 0; f < x.family().size(); ++f) {
        if (x.observed_at(f, s) && !common_belief(model, x.preimage(f)).contains(s)) {
            return false;
        }
    }
    return true;
}

CertaintyReport commonly_certain_of(const BeliefModel& model, const Signal& x)
{
    if (x.states() != model.states()) {
        throw model_error("signal and model live on different state spaces");
    }
    std::vector<Event> common;
    for (std::size_t f = 0; f < x.family().size(); ++f) {
        common.push_back(common_belief(model, x.preimage(f)));
    }
    CertaintyReport report;
    for (StateIndex s = 0; s < x.states(); ++s) {
        for (std::size_t f = 0; f < x.family().size(); ++f) {
            if (x.observed_at(f, s) && !common[f].contains(s)) {
                report.holds = false;
                report.failures.push_back({s, f});
            }
        }
    }
    return report;
}

Signal product_signal(std::span<const Signal> profile)
{
    if (profile.empty()) {
        throw model_error("a signal profile needs at least one signal");
    }
    const std::size_t n = profile.front().states();
    std::size_t total = 1;
    for (const auto& x : profile) {
        if (x.states() != n) {
            throw model_error("signals of a profile must share the state space");
        }
        total *= x.codomain().size();
        if (total > max_product_codomain) {
            throw model_error("product codomain too large");
        }
    }
    // Mixed radix with the first component most significant.
    std::vector<std::string> codomain(total);
    for (std::size_t code = 0; code < total; ++code) {
        std::string name = "(";
        std::size_t rest = code;
        std::vector<std::size_t> digits(profile.size());
        for (std::size_t k = profile.size(); k-- > 0;) {
            digits[k] = rest % profile[k].codomain().size();
            rest /= profile[k].codomain().size();
        }
        for (std::size_t k = 0; k < profile.size(); ++k) {
            name += (k ? "," : "") + profile[k].codomain()[digits[k]];
        }
        codomain[code] = name + ")";
    }
    std::vector<std::size_t> assignment(n, 0);
    for (StateIndex s = 0; s < n; ++s) {
        for (const auto& x : profile) {
            assignment[s] = assignment[s] * x.codomain().size() + x.value(s);
        }
    }
    std::vector<ValueSet> family;
    std::size_t stride = total;
    for (const auto& x : profile) {
        const std::size_t k = x.codomain().size();
        stride /= k;
        for (const auto& f : x.family()) {
            ValueSet cylinder;
            for (std::size_t code = 0; code < total; ++code) {
                if (std::binary_search(f.begin(), f.end(), (code / stride) % k)) {
                    cylinder.push_back(code);
                }
            }
            family.push_back(std::move(cylinder));
        }
    }
    return Signal{std::move(codomain), std::move(assignment), std::move(family)};
}

bool certain_of_profile(const BeliefModel& model, PlayerIndex player, std::span<const Signal> profile)
{
    return certain_of(model, player, product_signal(profile)).holds;
}

bool partition_measurable(const BeliefModel& model, PlayerIndex player, const Signal& x)
{
    model.require_player(player);
    const auto& op = model.op(player);
    const auto b = derive_correspondence(op);
    for (auto p : {FrameProperty::reflexive, FrameProperty::transitive, FrameProperty::euclidean}) {
        if (!correspondence_property(b, p).holds) {
            throw model_error("measurability check needs a partitional possibility correspondence; player '"
                              + op.owner() + "' is not " + std::string{to_string(p)});
        }
    }
    if (!check_axiom(op, Axiom::kripke).holds) {
        throw model_error("measurability check needs an operator induced by its possibility correspondence");
    }
    for (StateIndex s = 0; s < x.states(); ++s) {
        const Event level = x.preimage_of({x.value(s)});
        if (!b[s].subset_of(level)) {
            return false;
        }
    }
    return true;
}

Signal belief_equivalence_indicator(const BeliefModel& model, PlayerIndex j, Event e, Event f)
{
    model.require_player(j);
    const Event belief = model.op(j)(e);
    const Event equivalent = (belief.complement() | f) & (f.complement() | belief);
    std::vector<std::size_t> assignment(model.states());
    for (StateIndex s = 0; s < model.states(); ++s) {
        assignment[s] = equivalent.contains(s) ? 1 : 0;
    }
    return Signal{{"0", "1"}, std::move(assignment), families::singletons(2)};
}

CertaintyReport certain_that_belief_is(const BeliefModel& model, PlayerIndex i, PlayerIndex j, Event e, Event f)
{
    return certain_of(model, i, belief_equivalence_indicator(model, j, e, f));
}

} // namespace metacert
