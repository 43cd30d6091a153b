#pragma once

// Shared fixtures and brute-force oracles. The oracles restate definitions
// directly over masks so that they share no code with the library.

#include "metacert/belief_model.hpp"
#include "metacert/random.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace support {

using metacert::BeliefModel;
using metacert::BeliefOperator;
using metacert::Event;
using metacert::StateSpace;
using Mask = std::uint32_t;

inline StateSpace three() { return StateSpace::numbered(3); }

/// B(E) = E minus w3 for E other than the whole space, B(Omega) = Omega.
inline BeliefOperator worked_operator(const std::string& owner = "1")
{
    std::vector<Mask> table(8);
    for (Mask m = 0; m < 8; ++m) {
        table[m] = m == 7 ? 7 : (m & 0b011);
    }
    return BeliefOperator::from_table(three(), table, owner);
}

inline BeliefModel worked_model()
{
    return BeliefModel{three(), {worked_operator("1"), worked_operator("2")}};
}

inline Event ev(std::size_t n, Mask m) { return Event{m, n}; }

/// {w : b(w) inside E} evaluated bit by bit.
inline Mask kripke_image(const std::vector<Mask>& b, Mask e)
{
    Mask out = 0;
    for (std::size_t s = 0; s < b.size(); ++s) {
        if ((b[s] & ~e) == 0) {
            out |= Mask{1} << s;
        }
    }
    return out;
}

inline std::vector<Mask> table_of(const BeliefOperator& op)
{
    std::vector<Mask> t(std::size_t{1} << op.states());
    for (Mask m = 0; m < t.size(); ++m) {
        t[m] = op(Event{m, op.states()}).mask();
    }
    return t;
}

/// Union of every F with F inside B_I(E) and F inside B_I(F).
inline Mask common_belief_oracle(const std::vector<std::vector<Mask>>& tables, std::size_t n, Mask e)
{
    const auto mutual = [&](Mask x) {
        Mask r = (Mask{1} << n) - 1;
        for (const auto& t : tables) {
            r &= t[x];
        }
        return r;
    };
    Mask out = 0;
    const Mask be = mutual(e);
    for (Mask f = 0; f < (Mask{1} << n); ++f) {
        if ((f & ~be) == 0 && (f & ~mutual(f)) == 0) {
            out |= f;
        }
    }
    return out;
}

/// A random monotone table: upward closure of random (E, image) pairs.
inline std::vector<Mask> random_monotone_table(metacert::Rng& rng, std::size_t n, std::size_t pairs)
{
    const Mask events = Mask{1} << n;
    std::vector<Mask> t(events, 0);
    for (std::size_t k = 0; k < pairs; ++k) {
        const auto e = static_cast<Mask>(rng.below(events));
        const auto img = static_cast<Mask>(rng.below(events));
        for (Mask f = 0; f < events; ++f) {
            if ((e & ~f) == 0) {
                t[f] |= img;
            }
        }
    }
    return t;
}

inline std::vector<Mask> random_correspondence(metacert::Rng& rng, std::size_t n)
{
    std::vector<Mask> b(n);
    for (auto& x : b) {
        x = static_cast<Mask>(rng.below(std::size_t{1} << n));
    }
    return b;
}

inline BeliefOperator kripke_operator(const StateSpace& space, const std::vector<Mask>& b, const std::string& owner)
{
    std::vector<Event> sets;
    for (const auto x : b) {
        sets.emplace_back(x, space.size());
    }
    return metacert::from_correspondence(space, metacert::PossibilityCorrespondence{sets}, owner);
}

/// Calls f on every correspondence over n states (each b(w) any subset).
inline void for_each_correspondence(std::size_t n, const std::function<void(const std::vector<Mask>&)>& f)
{
    const std::size_t sets = std::size_t{1} << n;
    std::size_t total = 1;
    for (std::size_t k = 0; k < n; ++k) {
        total *= sets;
    }
    std::vector<Mask> b(n);
    for (std::size_t code = 0; code < total; ++code) {
        std::size_t c = code;
        for (std::size_t s = 0; s < n; ++s) {
            b[s] = static_cast<Mask>(c % sets);
            c /= sets;
        }
        f(b);
    }
}

} // namespace support
