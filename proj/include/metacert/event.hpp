#pragma once

#include <cassert>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace metacert {

/// Raised when a model, operator, signal or game is ill-formed.
class model_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using StateIndex = std::size_t;

/// Largest state count for which operators carry an explicit 2^n table.
inline constexpr std::size_t max_table_states = 16;
/// Largest state count accepted at all (correspondence-only operators).
inline constexpr std::size_t max_states = 24;

/// A subset of a finite state space, one bit per state.
///
/// The event remembers the size of the space it lives in so that complements
/// are well defined without a reference to the space.
class Event {
public:
    using mask_type = std::uint32_t;

    constexpr Event() = default;
    constexpr Event(mask_type bits, std::size_t universe)
        : bits_{bits & full_mask(universe)}, universe_{static_cast<std::uint8_t>(universe)}
    {
        assert(universe <= max_states);
    }

    static constexpr Event none(std::size_t universe) { return Event{0, universe}; }
    static constexpr Event all(std::size_t universe) { return Event{full_mask(universe), universe}; }
    static constexpr Event singleton(std::size_t universe, StateIndex s)
    {
        return Event{mask_type{1} << s, universe};
    }

    static constexpr mask_type full_mask(std::size_t universe)
    {
        return universe >= 32 ? ~mask_type{0} : (mask_type{1} << universe) - 1;
    }

    [[nodiscard]] constexpr mask_type mask() const { return bits_; }
    [[nodiscard]] constexpr std::size_t universe() const { return universe_; }
    /// Position of the event in the canonical enumeration (ascending mask).
    [[nodiscard]] constexpr std::size_t index() const { return bits_; }

    [[nodiscard]] constexpr bool contains(StateIndex s) const { return (bits_ >> s) & 1U; }
    [[nodiscard]] constexpr bool is_empty() const { return bits_ == 0; }
    [[nodiscard]] constexpr bool is_full() const { return bits_ == full_mask(universe_); }
    [[nodiscard]] constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
    [[nodiscard]] constexpr bool subset_of(Event other) const { return (bits_ & ~other.bits_) == 0; }
    [[nodiscard]] constexpr bool intersects(Event other) const { return (bits_ & other.bits_) != 0; }

    [[nodiscard]] constexpr Event complement() const { return Event{~bits_, universe_}; }
    [[nodiscard]] constexpr Event with(StateIndex s) const { return Event{bits_ | (mask_type{1} << s), universe_}; }
    [[nodiscard]] constexpr Event without(StateIndex s) const { return Event{bits_ & ~(mask_type{1} << s), universe_}; }

    /// Lowest state in the event; the event must be non-empty.
    [[nodiscard]] constexpr StateIndex first() const { return static_cast<StateIndex>(std::countr_zero(bits_)); }

    friend constexpr Event operator&(Event a, Event b) { return Event{a.bits_ & b.bits_, a.universe_}; }
    friend constexpr Event operator|(Event a, Event b) { return Event{a.bits_ | b.bits_, a.universe_}; }
    friend constexpr Event operator-(Event a, Event b) { return Event{a.bits_ & ~b.bits_, a.universe_}; }
    Event& operator&=(Event o) { return *this = *this & o; }
    Event& operator|=(Event o) { return *this = *this | o; }

    friend constexpr bool operator==(Event, Event) = default;
    friend constexpr bool operator<(Event a, Event b) { return a.bits_ < b.bits_; }

private:
    mask_type bits_ = 0;
    std::uint8_t universe_ = 0;
};

/// Number of events (the size of the power set) of an n-state space.
[[nodiscard]] constexpr std::size_t event_count(std::size_t n) { return std::size_t{1} << n; }

/// Calls `f(Event)` for every event of an n-state space in ascending mask order.
template <typename F>
void for_each_event(std::size_t n, F&& f)
{
    const std::size_t count = event_count(n);
    for (std::size_t m = 0; m < count; ++m) {
        f(Event{static_cast<Event::mask_type>(m), n});
    }
}

/// Calls `f(StateIndex)` for every member of `e` in ascending order.
template <typename F>
void for_each_state(Event e, F&& f)
{
    for (auto bits = e.mask(); bits != 0; bits &= bits - 1) {
        f(static_cast<StateIndex>(std::countr_zero(bits)));
    }
}

/// The ordered, named state space. The event algebra is always the full power set.
class StateSpace {
public:
    explicit StateSpace(std::vector<std::string> names);

    /// A space of `n` states named `<prefix>1 .. <prefix>n`.
    static StateSpace numbered(std::size_t n, std::string_view prefix = "w");

    [[nodiscard]] std::size_t size() const { return names_.size(); }
    [[nodiscard]] const std::string& name(StateIndex s) const { return names_.at(s); }
    [[nodiscard]] const std::vector<std::string>& names() const { return names_; }

    [[nodiscard]] std::optional<StateIndex> find(std::string_view name) const;
    /// Throws model_error for unknown names.
    [[nodiscard]] StateIndex index_of(std::string_view name) const;

    [[nodiscard]] Event empty() const { return Event::none(size()); }
    [[nodiscard]] Event full() const { return Event::all(size()); }
    [[nodiscard]] Event singleton(StateIndex s) const { return Event::singleton(size(), s); }
    [[nodiscard]] Event event(const std::vector<std::string>& members) const;

    /// Brace notation used everywhere: `{w1,w3}`, `{}` for the empty event.
    [[nodiscard]] std::string format(Event e) const;
    /// Inverse of `format`; accepts whitespace and an optional trailing comma.
    [[nodiscard]] Event parse(std::string_view text) const;

    friend bool operator==(const StateSpace&, const StateSpace&) = default;

private:
    std::vector<std::string> names_;
};

} // namespace metacert
