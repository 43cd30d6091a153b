#include "metacert/event.hpp"

#include <algorithm>
#include <cctype>

namespace metacert {

StateSpace::StateSpace(std::vector<std::string> names) : names_{std::move(names)}
{
    if (names_.empty()) {
        throw model_error("state space must contain at least one state");
    }
    if (names_.size() > max_states) {
        throw model_error("state space has " + std::to_string(names_.size()) + " states; at most "
                          + std::to_string(max_states) + " are supported");
    }
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i].empty()) {
            throw model_error("state names must be non-empty");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (names_[i] == names_[j]) {
                throw model_error("duplicate state '" + names_[i] + "'");
            }
        }
    }
}

StateSpace StateSpace::numbered(std::size_t n, std::string_view prefix)
{
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) {
        names.push_back(std::string{prefix} + std::to_string(i));
    }
    return StateSpace{std::move(names)};
}

std::optional<StateIndex> StateSpace::find(std::string_view name) const
{
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) {
        return std::nullopt;
    }
    return static_cast<StateIndex>(it - names_.begin());
}

StateIndex StateSpace::index_of(std::string_view name) const
{
    if (auto s = find(name)) {
        return *s;
    }
    throw model_error("unknown state '" + std::string{name} + "'");
}

Event StateSpace::event(const std::vector<std::string>& members) const
{
    Event e = empty();
    for (const auto& m : members) {
        e = e.with(index_of(m));
    }
    return e;
}

std::string StateSpace::format(Event e) const
{
    std::string out = "{";
    bool first = true;
    for_each_state(e, [&](StateIndex s) {
        if (!first) {
            out += ',';
        }
        out += names_[s];
        first = false;
    });
    out += '}';
    return out;
}

Event StateSpace::parse(std::string_view text) const
{
    auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
    while (!text.empty() && is_space(text.front())) {
        text.remove_prefix(1);
    }
    while (!text.empty() && is_space(text.back())) {
        text.remove_suffix(1);
    }
    if (text.size() < 2 || text.front() != '{' || text.back() != '}') {
        throw model_error("event must be written in brace notation, e.g. {w1,w2}");
    }
    text = text.substr(1, text.size() - 2);
    Event e = empty();
    std::string current;
    auto flush = [&] {
        if (!current.empty()) {
            e = e.with(index_of(current));
            current.clear();
        }
    };
    for (char c : text) {
        if (c == ',' || is_space(c)) {
            flush();
        } else {
            current += c;
        }
    }
    flush();
    return e;
}

} // namespace metacert
