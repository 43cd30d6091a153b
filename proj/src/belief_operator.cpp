#include "metacert/belief_operator.hpp"

namespace metacert {

namespace {

void require_table_size(const StateSpace& space)
{
    if (space.size() > max_table_states) {
        throw model_error("explicit operator tables support at most " + std::to_string(max_table_states)
                          + " states; use a possibility correspondence for larger spaces");
    }
}

} // namespace

BeliefOperator BeliefOperator::from_table(const StateSpace& space, std::vector<Event::mask_type> table,
                                          std::string owner)
{
    require_table_size(space);
    const std::size_t n = space.size();
    if (table.size() != event_count(n)) {
        throw model_error("operator table has " + std::to_string(table.size()) + " entries; expected "
                          + std::to_string(event_count(n)));
    }
    const auto full = Event::full_mask(n);
    for (std::size_t m = 0; m < table.size(); ++m) {
        if ((table[m] & ~full) != 0) {
            throw model_error("operator image of " + space.format(Event{static_cast<Event::mask_type>(m), n})
                              + " refers to states outside the space");
        }
    }
    // Checking single-state extensions is enough: subset chains are built from them.
    for (std::size_t m = 0; m < table.size(); ++m) {
        for (std::size_t s = 0; s < n; ++s) {
            const std::size_t super = m | (std::size_t{1} << s);
            if (super != m && (table[m] & ~table[super]) != 0) {
                const Event e{static_cast<Event::mask_type>(m), n};
                const Event f{static_cast<Event::mask_type>(super), n};
                throw model_error("operator is not monotone: " + space.format(e) + " is a subset of "
                                  + space.format(f) + " but B" + space.format(e) + " = "
                                  + space.format(Event{table[m], n}) + " is not a subset of B"
                                  + space.format(f) + " = " + space.format(Event{table[super], n}));
            }
        }
    }
    BeliefOperator op;
    op.n_ = n;
    op.owner_ = std::move(owner);
    op.table_ = std::move(table);
    return op;
}

Event BeliefOperator::evaluate_kripke(Event e) const
{
    Event result = Event::none(n_);
    const auto& b = correspondence_->sets();
    for (StateIndex s = 0; s < n_; ++s) {
        if (b[s].subset_of(e)) {
            result = result.with(s);
        }
    }
    return result;
}

bool operator==(const BeliefOperator& a, const BeliefOperator& b)
{
    if (a.n_ != b.n_) {
        return false;
    }
    if (a.has_table() && b.has_table()) {
        return a.table_ == b.table_;
    }
    if (a.correspondence_ && b.correspondence_) {
        return *a.correspondence_ == *b.correspondence_;
    }
    // One side is correspondence-only, so both are too large to tabulate and
    // the tabulated side cannot exist.
    return false;
}

BeliefOperator from_correspondence(const StateSpace& space, PossibilityCorrespondence possible, std::string owner)
{
    const std::size_t n = space.size();
    if (possible.size() != n) {
        throw model_error("possibility correspondence covers " + std::to_string(possible.size())
                          + " states; the space has " + std::to_string(n));
    }
    for (StateIndex s = 0; s < n; ++s) {
        if (possible[s].universe() != n || (possible[s].mask() & ~Event::full_mask(n)) != 0) {
            throw model_error("possibility set of state '" + space.name(s) + "' references unknown states");
        }
    }
    BeliefOperator op;
    op.n_ = n;
    op.owner_ = std::move(owner);
    op.correspondence_ = std::move(possible);
    if (n <= max_table_states) {
        op.table_.resize(event_count(n));
        for_each_event(n, [&](Event e) { op.table_[e.index()] = op.evaluate_kripke(e).mask(); });
    }
    return op;
}

PossibilityCorrespondence derive_correspondence(const BeliefOperator& op)
{
    if (!op.has_table()) {
        return *op.correspondence();
    }
    const std::size_t n = op.states();
    std::vector<Event> possible(n, Event::all(n));
    for_each_event(n, [&](Event e) {
        for_each_state(op(e), [&](StateIndex s) { possible[s] &= e; });
    });
    return PossibilityCorrespondence{std::move(possible)};
}

BeliefOperator monotone_closure(const StateSpace& space, std::span<const std::pair<Event, Event>> core,
                                std::string owner)
{
    require_table_size(space);
    const std::size_t n = space.size();
    std::vector<Event::mask_type> table(event_count(n), 0);
    for (const auto& [event, image] : core) {
        if (event.universe() != n || image.universe() != n) {
            throw model_error("core entry refers to a different state space");
        }
        table[event.index()] |= image.mask();
    }
    // Superset OR-sum: after processing bit s, table[m] covers all assigned
    // subsets of m that differ from m only in the processed bits.
    for (std::size_t s = 0; s < n; ++s) {
        const std::size_t bit = std::size_t{1} << s;
        for (std::size_t m = 0; m < table.size(); ++m) {
            if (m & bit) {
                table[m] |= table[m ^ bit];
            }
        }
    }
    return BeliefOperator::from_table(space, std::move(table), std::move(owner));
}

BeliefOperator identity_operator(const StateSpace& space, std::string owner)
{
    std::vector<Event> possible;
    possible.reserve(space.size());
    for (StateIndex s = 0; s < space.size(); ++s) {
        possible.push_back(space.singleton(s));
    }
    return from_correspondence(space, PossibilityCorrespondence{std::move(possible)}, std::move(owner));
}

} // namespace metacert
