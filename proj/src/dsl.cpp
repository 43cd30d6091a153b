#include "metacert/dsl.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace metacert::dsl {

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::lexical: return "lexical";
    case ErrorKind::syntax: return "syntax";
    case ErrorKind::semantic: return "semantic";
    }
    return "?";
}

parse_error::parse_error(ErrorKind kind, SourceLoc loc, const std::string& message)
    : std::runtime_error(std::to_string(loc.line) + ":" + std::to_string(loc.column) + ": " +
                         std::string{to_string(kind)} + " error: " + message),
      kind_{kind}, loc_{loc}, message_{message}
{
}

namespace {

// ---------------------------------------------------------------- lexer

enum class Tok { word, lbrace, rbrace, colon, semicolon, comma, equals, arrow, end };

struct Token {
    Tok kind = Tok::end;
    std::string text;
    SourceLoc loc;
};

std::string describe(const Token& t)
{
    switch (t.kind) {
    case Tok::word: return "'" + t.text + "'";
    case Tok::lbrace: return "'{'";
    case Tok::rbrace: return "'}'";
    case Tok::colon: return "':'";
    case Tok::semicolon: return "';'";
    case Tok::comma: return "','";
    case Tok::equals: return "'='";
    case Tok::arrow: return "'->'";
    case Tok::end: return "end of input";
    }
    return "?";
}

constexpr std::string_view unicode_arrow = "\xE2\x86\x92";

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_{text} {}

    std::vector<Token> run()
    {
        std::vector<Token> out;
        while (true) {
            skip_space();
            const SourceLoc loc{line_, column_};
            if (pos_ >= text_.size()) {
                out.push_back({Tok::end, "", loc});
                return out;
            }
            const char c = text_[pos_];
            if (text_.substr(pos_, 2) == "->" || text_.substr(pos_, 3) == unicode_arrow) {
                advance(text_[pos_] == '-' ? 2 : 3, 1);
                out.push_back({Tok::arrow, "->", loc});
                continue;
            }
            const auto punct = punctuation(c);
            if (punct) {
                advance(1, 1);
                out.push_back({*punct, std::string(1, c), loc});
                continue;
            }
            if (c == '-' && pos_ + 1 < text_.size() && is_digit(text_[pos_ + 1])) {
                std::size_t end = pos_ + 1;
                while (end < text_.size() && word_char(end)) {
                    ++end;
                }
                out.push_back({Tok::word, std::string(text_.substr(pos_, end - pos_)), loc});
                advance_word(end);
                continue;
            }
            if (!word_char(pos_)) {
                throw parse_error(ErrorKind::lexical, loc, "unexpected character '" + std::string(1, c) + "'");
            }
            std::size_t end = pos_;
            while (end < text_.size() && word_char(end)) {
                ++end;
            }
            out.push_back({Tok::word, std::string(text_.substr(pos_, end - pos_)), loc});
            advance_word(end);
        }
    }

private:
    static bool is_digit(char c) { return c >= '0' && c <= '9'; }

    static std::optional<Tok> punctuation(char c)
    {
        switch (c) {
        case '{': return Tok::lbrace;
        case '}': return Tok::rbrace;
        case ':': return Tok::colon;
        case ';': return Tok::semicolon;
        case ',': return Tok::comma;
        case '=': return Tok::equals;
        default: return std::nullopt;
        }
    }

    bool word_char(std::size_t at) const
    {
        const auto c = static_cast<unsigned char>(text_[at]);
        if (c >= 0x80) {
            return text_.substr(at, 3) != unicode_arrow;
        }
        return std::isalnum(c) != 0 || c == '_' || c == '\'' || c == '.';
    }

    void skip_space()
    {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') {
                    advance(1, 1);
                }
            } else if (c == '\n') {
                ++pos_;
                ++line_;
                column_ = 1;
            } else if (std::isspace(static_cast<unsigned char>(c)) != 0) {
                advance(1, 1);
            } else {
                return;
            }
        }
    }

    void advance(std::size_t bytes, std::size_t columns)
    {
        pos_ += bytes;
        column_ += columns;
    }

    // Columns count code points, so continuation bytes do not advance them.
    void advance_word(std::size_t end)
    {
        for (; pos_ < end; ++pos_) {
            if ((static_cast<unsigned char>(text_[pos_]) & 0xC0) != 0x80) {
                ++column_;
            }
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
};

// --------------------------------------------------------------- parser

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : tokens_{std::move(tokens)} {}

    ModelSpecDocument document()
    {
        ModelSpecDocument doc;
        doc.states_loc = peek().loc;
        expect_keyword("states");
        while (peek().kind == Tok::word) {
            doc.states.push_back(take().text);
        }
        if (doc.states.empty()) {
            fail("expected at least one state name");
        }
        expect(Tok::semicolon);
        while (peek().kind != Tok::end) {
            const Token& t = peek();
            if (is_keyword(t, "player")) {
                doc.players.push_back(player());
            } else if (is_keyword(t, "signal")) {
                doc.signals.push_back(signal());
            } else if (is_keyword(t, "game")) {
                if (doc.game) {
                    fail("a document holds at most one game block");
                }
                doc.game = game();
            } else {
                fail("expected 'player', 'signal' or 'game' but found " + describe(t));
            }
        }
        return doc;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& take() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

    static bool is_keyword(const Token& t, std::string_view kw) { return t.kind == Tok::word && t.text == kw; }

    [[noreturn]] void fail(const std::string& message) const
    {
        throw parse_error(ErrorKind::syntax, peek().loc, message);
    }

    const Token& expect(Tok kind)
    {
        if (peek().kind != kind) {
            fail("expected " + describe(Token{kind, kind == Tok::word ? "name" : "", {}}) + " but found " +
                 describe(peek()));
        }
        return take();
    }

    void expect_keyword(std::string_view kw)
    {
        if (!is_keyword(peek(), kw)) {
            fail("expected '" + std::string{kw} + "' but found " + describe(peek()));
        }
        take();
    }

    std::string word(std::string_view what)
    {
        if (peek().kind != Tok::word) {
            fail("expected " + std::string{what} + " but found " + describe(peek()));
        }
        return take().text;
    }

    void optional_separator()
    {
        if (peek().kind == Tok::semicolon || peek().kind == Tok::comma) {
            take();
        }
    }

    SetLiteral set()
    {
        SetLiteral s;
        s.loc = peek().loc;
        expect(Tok::lbrace);
        while (peek().kind != Tok::rbrace) {
            s.items.push_back(word("a name or '}'"));
            if (peek().kind == Tok::comma) {
                take();
            }
        }
        take();
        return s;
    }

    Arrow arrow()
    {
        Arrow a;
        a.loc = peek().loc;
        a.from = word("a state name");
        expect(Tok::arrow);
        a.to = word("a value after '->'");
        optional_separator();
        return a;
    }

    PlayerBlock player()
    {
        PlayerBlock p;
        p.loc = peek().loc;
        take();
        p.id = word("a player id");
        expect(Tok::lbrace);
        const Token& form = peek();
        if (is_keyword(form, "kripke")) {
            p.form = OperatorForm::kripke;
        } else if (is_keyword(form, "table")) {
            p.form = OperatorForm::table;
        } else if (is_keyword(form, "core")) {
            p.form = OperatorForm::core;
        } else {
            fail("expected 'kripke', 'table' or 'core' but found " + describe(form));
        }
        take();
        expect(Tok::lbrace);
        while (peek().kind != Tok::rbrace) {
            if (p.form == OperatorForm::kripke) {
                KripkeEntry e;
                e.loc = peek().loc;
                e.state = word("a state name or '}'");
                expect(Tok::colon);
                e.possible = set();
                p.kripke.push_back(std::move(e));
            } else {
                TableEntry e;
                e.loc = peek().loc;
                if (peek().kind != Tok::lbrace) {
                    fail("expected an event or '}' but found " + describe(peek()));
                }
                e.event = set();
                expect(Tok::colon);
                e.image = set();
                p.entries.push_back(std::move(e));
            }
            optional_separator();
        }
        take();
        expect(Tok::rbrace);
        return p;
    }

    SignalBlock signal()
    {
        SignalBlock s;
        s.loc = peek().loc;
        take();
        s.name = word("a signal name");
        expect(Tok::colon);
        s.codomain = set();
        expect(Tok::lbrace);
        while (peek().kind != Tok::rbrace) {
            s.assignment.push_back(arrow());
        }
        take();
        expect_keyword("family");
        if (is_keyword(peek(), "singletons")) {
            take();
            s.family_form = FamilyForm::singletons;
        } else if (is_keyword(peek(), "powerset")) {
            take();
            s.family_form = FamilyForm::powerset;
        } else {
            expect(Tok::lbrace);
            while (peek().kind != Tok::rbrace) {
                s.family.push_back(set());
                if (peek().kind == Tok::comma) {
                    take();
                }
            }
            take();
        }
        optional_separator();
        return s;
    }

    GameBlock game()
    {
        GameBlock g;
        g.loc = peek().loc;
        take();
        expect(Tok::lbrace);
        while (peek().kind != Tok::rbrace) {
            const SourceLoc loc = peek().loc;
            if (is_keyword(peek(), "actions")) {
                take();
                ActionsDecl a;
                a.loc = loc;
                a.player = word("a player id");
                expect(Tok::colon);
                while (peek().kind == Tok::word) {
                    a.actions.push_back(take().text);
                }
                expect(Tok::semicolon);
                g.actions.push_back(std::move(a));
            } else if (is_keyword(peek(), "rank")) {
                take();
                RankDecl r;
                r.loc = loc;
                r.player = word("a player id");
                expect(Tok::colon);
                while (peek().kind == Tok::word) {
                    r.profile.push_back(take().text);
                }
                expect(Tok::equals);
                const Token& value = peek();
                const std::string text = word("an integer rank");
                const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), r.rank);
                if (ec != std::errc{} || ptr != text.data() + text.size()) {
                    throw parse_error(ErrorKind::syntax, value.loc, "expected an integer rank but found '" + text + "'");
                }
                optional_separator();
                g.ranks.push_back(std::move(r));
            } else if (is_keyword(peek(), "strategy")) {
                take();
                StrategyDecl s;
                s.loc = loc;
                s.player = word("a player id");
                expect(Tok::lbrace);
                while (peek().kind != Tok::rbrace) {
                    s.moves.push_back(arrow());
                }
                take();
                optional_separator();
                g.strategies.push_back(std::move(s));
            } else {
                fail("expected 'actions', 'rank', 'strategy' or '}' but found " + describe(peek()));
            }
        }
        take();
        return g;
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

// ----------------------------------------------------------- serializer

std::string format_set(const SetLiteral& s)
{
    std::string out = "{";
    for (std::size_t k = 0; k < s.items.size(); ++k) {
        out += (k ? "," : "") + s.items[k];
    }
    return out + "}";
}

// ------------------------------------------------------------ semantics

[[noreturn]] void semantic(SourceLoc loc, const std::string& message)
{
    throw parse_error(ErrorKind::semantic, loc, message);
}

Event resolve_set(const StateSpace& space, const SetLiteral& s)
{
    Event e = Event::none(space.size());
    for (const auto& name : s.items) {
        const auto index = space.find(name);
        if (!index) {
            semantic(s.loc, "unknown state '" + name + "'");
        }
        if (e.contains(*index)) {
            semantic(s.loc, "state '" + name + "' listed twice");
        }
        e = e.with(*index);
    }
    return e;
}

std::size_t index_in(const std::vector<std::string>& names, const std::string& name, SourceLoc loc,
                     const std::string& what)
{
    const auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) {
        semantic(loc, "unknown " + what + " '" + name + "'");
    }
    return static_cast<std::size_t>(it - names.begin());
}

std::vector<std::string> distinct_names(const std::vector<std::string>& names, SourceLoc loc, const std::string& what)
{
    std::set<std::string> seen;
    for (const auto& n : names) {
        if (!seen.insert(n).second) {
            semantic(loc, "duplicate " + what + " '" + n + "'");
        }
    }
    return names;
}

BeliefOperator load_operator(const StateSpace& space, const PlayerBlock& p)
{
    const std::size_t n = space.size();
    try {
        if (p.form == OperatorForm::kripke) {
            std::vector<std::optional<Event>> possible(n);
            for (const auto& e : p.kripke) {
                const auto s = space.find(e.state);
                if (!s) {
                    semantic(e.loc, "unknown state '" + e.state + "'");
                }
                if (possible[*s]) {
                    semantic(e.loc, "kripke block of player '" + p.id + "' lists state '" + e.state + "' twice");
                }
                possible[*s] = resolve_set(space, e.possible);
            }
            std::vector<Event> sets;
            for (StateIndex s = 0; s < n; ++s) {
                if (!possible[s]) {
                    semantic(p.loc, "kripke block of player '" + p.id + "' has no entry for state '" + space.name(s) +
                                        "'");
                }
                sets.push_back(*possible[s]);
            }
            return from_correspondence(space, PossibilityCorrespondence{sets}, p.id);
        }
        if (n > max_table_states) {
            semantic(p.loc, "table and core forms support at most " + std::to_string(max_table_states) + " states");
        }
        std::vector<std::pair<Event, Event>> pairs;
        std::vector<bool> seen(event_count(n), false);
        for (const auto& e : p.entries) {
            const Event event = resolve_set(space, e.event);
            if (seen[event.index()]) {
                semantic(e.loc, "event " + space.format(event) + " assigned twice for player '" + p.id + "'");
            }
            seen[event.index()] = true;
            pairs.emplace_back(event, resolve_set(space, e.image));
        }
        if (p.form == OperatorForm::core) {
            return monotone_closure(space, pairs, p.id);
        }
        if (pairs.size() != event_count(n)) {
            semantic(p.loc, "table of player '" + p.id + "' assigns " + std::to_string(pairs.size()) + " of " +
                                std::to_string(event_count(n)) + " events; use 'core' for partial tables");
        }
        std::vector<Event::mask_type> table(event_count(n));
        for (const auto& [e, img] : pairs) {
            table[e.index()] = img.mask();
        }
        return BeliefOperator::from_table(space, std::move(table), p.id);
    } catch (const model_error& err) {
        semantic(p.loc, err.what());
    }
}

Signal load_signal(const StateSpace& space, const SignalBlock& b)
{
    const auto codomain = distinct_names(b.codomain.items, b.codomain.loc, "value");
    if (codomain.empty()) {
        semantic(b.codomain.loc, "signal '" + b.name + "' has an empty codomain");
    }
    std::vector<std::optional<std::size_t>> values(space.size());
    for (const auto& a : b.assignment) {
        const auto s = space.find(a.from);
        if (!s) {
            semantic(a.loc, "unknown state '" + a.from + "'");
        }
        if (values[*s]) {
            semantic(a.loc, "signal '" + b.name + "' assigns state '" + a.from + "' twice");
        }
        values[*s] = index_in(codomain, a.to, a.loc, "value of signal '" + b.name + "'");
    }
    std::vector<std::size_t> assignment;
    for (StateIndex s = 0; s < space.size(); ++s) {
        if (!values[s]) {
            semantic(b.loc, "signal '" + b.name + "' has no value at state '" + space.name(s) + "'");
        }
        assignment.push_back(*values[s]);
    }
    std::vector<ValueSet> family;
    switch (b.family_form) {
    case FamilyForm::singletons: family = families::singletons(codomain.size()); break;
    case FamilyForm::powerset:
        if (codomain.size() > 16) {
            semantic(b.loc, "powerset families need a codomain of at most 16 values");
        }
        family = families::powerset(codomain.size());
        break;
    case FamilyForm::explicit_sets:
        for (const auto& f : b.family) {
            ValueSet v;
            for (const auto& item : f.items) {
                v.push_back(index_in(codomain, item, f.loc, "value of signal '" + b.name + "'"));
            }
            std::sort(v.begin(), v.end());
            if (std::adjacent_find(v.begin(), v.end()) != v.end()) {
                semantic(f.loc, "observation lists a value twice");
            }
            family.push_back(std::move(v));
        }
        break;
    }
    try {
        return Signal{codomain, std::move(assignment), std::move(family)};
    } catch (const model_error& err) {
        semantic(b.loc, err.what());
    }
}

GameModel load_game(const BeliefModel& belief, const GameBlock& g)
{
    const std::size_t players = belief.players();
    std::vector<std::string> ids;
    for (PlayerIndex i = 0; i < players; ++i) {
        ids.push_back(belief.player_name(i));
    }
    std::vector<std::optional<std::vector<std::string>>> actions(players);
    for (const auto& a : g.actions) {
        const auto i = index_in(ids, a.player, a.loc, "player");
        if (actions[i]) {
            semantic(a.loc, "actions of player '" + a.player + "' declared twice");
        }
        if (a.actions.empty()) {
            semantic(a.loc, "player '" + a.player + "' needs at least one action");
        }
        actions[i] = distinct_names(a.actions, a.loc, "action");
    }
    std::vector<std::vector<std::string>> action_lists;
    std::size_t profiles = 1;
    for (PlayerIndex i = 0; i < players; ++i) {
        if (!actions[i]) {
            semantic(g.loc, "game block declares no actions for player '" + ids[i] + "'");
        }
        action_lists.push_back(*actions[i]);
        profiles *= actions[i]->size();
        if (profiles > (std::size_t{1} << 20)) {
            semantic(g.loc, "game has too many action profiles");
        }
    }
    std::vector<std::vector<std::optional<long>>> ranks(players, std::vector<std::optional<long>>(profiles));
    for (const auto& r : g.ranks) {
        const auto i = index_in(ids, r.player, r.loc, "player");
        if (r.profile.size() != players) {
            semantic(r.loc, "profile lists " + std::to_string(r.profile.size()) + " actions, expected " +
                                std::to_string(players));
        }
        std::size_t index = 0;
        for (PlayerIndex k = 0; k < players; ++k) {
            index = index * action_lists[k].size() +
                    index_in(action_lists[k], r.profile[k], r.loc, "action of player '" + ids[k] + "'");
        }
        if (ranks[i][index]) {
            semantic(r.loc, "rank of player '" + r.player + "' given twice for the same profile");
        }
        ranks[i][index] = r.rank;
    }
    std::vector<std::vector<long>> rank_table(players);
    for (PlayerIndex i = 0; i < players; ++i) {
        for (std::size_t p = 0; p < profiles; ++p) {
            if (!ranks[i][p]) {
                semantic(g.loc, "player '" + ids[i] + "' has no rank for profile " + std::to_string(p + 1) + " of " +
                                    std::to_string(profiles));
            }
            rank_table[i].push_back(*ranks[i][p]);
        }
    }
    const auto& space = belief.space();
    std::vector<std::optional<std::vector<ActionIndex>>> strategies(players);
    for (const auto& s : g.strategies) {
        const auto i = index_in(ids, s.player, s.loc, "player");
        if (strategies[i]) {
            semantic(s.loc, "strategy of player '" + s.player + "' given twice");
        }
        std::vector<std::optional<ActionIndex>> moves(space.size());
        for (const auto& m : s.moves) {
            const auto st = space.find(m.from);
            if (!st) {
                semantic(m.loc, "unknown state '" + m.from + "'");
            }
            if (moves[*st]) {
                semantic(m.loc, "strategy of player '" + s.player + "' assigns state '" + m.from + "' twice");
            }
            moves[*st] = index_in(action_lists[i], m.to, m.loc, "action of player '" + s.player + "'");
        }
        std::vector<ActionIndex> sigma;
        for (StateIndex st = 0; st < space.size(); ++st) {
            if (!moves[st]) {
                semantic(s.loc, "strategy of player '" + s.player + "' has no action at state '" + space.name(st) + "'");
            }
            sigma.push_back(*moves[st]);
        }
        strategies[i] = std::move(sigma);
    }
    std::vector<std::vector<ActionIndex>> strategy_list;
    for (PlayerIndex i = 0; i < players; ++i) {
        if (!strategies[i]) {
            semantic(g.loc, "game block has no strategy for player '" + ids[i] + "'");
        }
        strategy_list.push_back(*strategies[i]);
    }
    return GameModel{belief, Game{ids, action_lists, rank_table}, strategy_list};
}

SetLiteral literal_of(const StateSpace& space, Event e)
{
    SetLiteral s;
    for_each_state(e, [&](StateIndex i) { s.items.push_back(space.name(i)); });
    return s;
}

} // namespace

ModelSpecDocument parse_model_spec(std::string_view text)
{
    return Parser{Lexer{text}.run()}.document();
}

std::string serialize(const ModelSpecDocument& doc)
{
    std::ostringstream out;
    out << "states";
    for (const auto& s : doc.states) {
        out << ' ' << s;
    }
    out << ";\n";
    for (const auto& p : doc.players) {
        out << "\nplayer " << p.id << " {\n  "
            << (p.form == OperatorForm::kripke ? "kripke" : p.form == OperatorForm::table ? "table" : "core")
            << " {\n";
        for (const auto& e : p.kripke) {
            out << "    " << e.state << ": " << format_set(e.possible) << ";\n";
        }
        for (const auto& e : p.entries) {
            out << "    " << format_set(e.event) << ": " << format_set(e.image) << ";\n";
        }
        out << "  }\n}\n";
    }
    for (const auto& s : doc.signals) {
        out << "\nsignal " << s.name << " : " << format_set(s.codomain) << " {\n";
        for (const auto& a : s.assignment) {
            out << "  " << a.from << " -> " << a.to << ";\n";
        }
        out << "} family ";
        switch (s.family_form) {
        case FamilyForm::singletons: out << "singletons"; break;
        case FamilyForm::powerset: out << "powerset"; break;
        case FamilyForm::explicit_sets:
            out << '{';
            for (std::size_t k = 0; k < s.family.size(); ++k) {
                out << (k ? ", " : "") << format_set(s.family[k]);
            }
            out << '}';
            break;
        }
        out << '\n';
    }
    if (doc.game) {
        out << "\ngame {\n";
        for (const auto& a : doc.game->actions) {
            out << "  actions " << a.player << ':';
            for (const auto& x : a.actions) {
                out << ' ' << x;
            }
            out << ";\n";
        }
        for (const auto& r : doc.game->ranks) {
            out << "  rank " << r.player << ':';
            for (const auto& x : r.profile) {
                out << ' ' << x;
            }
            out << " = " << r.rank << ";\n";
        }
        for (const auto& s : doc.game->strategies) {
            out << "  strategy " << s.player << " {";
            for (const auto& m : s.moves) {
                out << ' ' << m.from << " -> " << m.to << ';';
            }
            out << " }\n";
        }
        out << "}\n";
    }
    return out.str();
}

const Signal& LoadedModel::signal(std::string_view name) const
{
    for (const auto& s : signals) {
        if (s.name == name) {
            return s.signal;
        }
    }
    throw model_error("no signal named '" + std::string{name} + "'");
}

LoadedModel load(const ModelSpecDocument& doc)
{
    distinct_names(doc.states, doc.states_loc, "state");
    if (doc.states.size() > max_states) {
        semantic(doc.states_loc, "at most " + std::to_string(max_states) + " states are supported");
    }
    const StateSpace space{doc.states};
    if (doc.players.empty()) {
        semantic(doc.states_loc, "a model needs at least one player block");
    }
    std::vector<BeliefOperator> ops;
    std::set<std::string> ids;
    for (const auto& p : doc.players) {
        if (!ids.insert(p.id).second) {
            semantic(p.loc, "duplicate player '" + p.id + "'");
        }
        ops.push_back(load_operator(space, p));
    }
    LoadedModel loaded{BeliefModel{space, std::move(ops)}, {}, std::nullopt};
    std::set<std::string> names;
    for (const auto& s : doc.signals) {
        if (!names.insert(s.name).second) {
            semantic(s.loc, "duplicate signal '" + s.name + "'");
        }
        loaded.signals.push_back({s.name, load_signal(space, s)});
    }
    if (doc.game) {
        loaded.game = load_game(loaded.belief, *doc.game);
    }
    return loaded;
}

LoadedModel load_text(std::string_view text) { return load(parse_model_spec(text)); }

LoadedModel load_file(const std::string& path)
{
    std::ifstream in{path, std::ios::binary};
    if (!in) {
        throw model_error("cannot read '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return load_text(buffer.str());
}

ModelSpecDocument document_of(const BeliefModel& model, const std::vector<NamedSignal>& signals, const GameModel* game)
{
    const auto& space = model.space();
    ModelSpecDocument doc;
    doc.states = space.names();
    for (PlayerIndex i = 0; i < model.players(); ++i) {
        const auto& op = model.op(i);
        PlayerBlock p;
        p.id = op.owner();
        if (op.correspondence()) {
            p.form = OperatorForm::kripke;
            for (StateIndex s = 0; s < space.size(); ++s) {
                p.kripke.push_back({space.name(s), literal_of(space, (*op.correspondence())[s]), {}});
            }
        } else {
            p.form = OperatorForm::table;
            for_each_event(space.size(), [&](Event e) {
                p.entries.push_back({literal_of(space, e), literal_of(space, op(e)), {}});
            });
        }
        doc.players.push_back(std::move(p));
    }
    for (const auto& [name, x] : signals) {
        SignalBlock b;
        b.name = name;
        b.codomain.items = x.codomain();
        for (StateIndex s = 0; s < space.size(); ++s) {
            b.assignment.push_back({space.name(s), x.codomain()[x.value(s)], {}});
        }
        for (const auto& f : x.family()) {
            SetLiteral lit;
            for (const auto v : f) {
                lit.items.push_back(x.codomain()[v]);
            }
            b.family.push_back(std::move(lit));
        }
        doc.signals.push_back(std::move(b));
    }
    if (game) {
        const auto& g = game->game();
        GameBlock block;
        for (PlayerIndex i = 0; i < g.players(); ++i) {
            block.actions.push_back({g.player_names()[i], g.actions(i), {}});
        }
        for (PlayerIndex i = 0; i < g.players(); ++i) {
            for (std::size_t p = 0; p < g.profile_count(); ++p) {
                RankDecl r;
                r.player = g.player_names()[i];
                const auto profile = g.profile(p);
                for (PlayerIndex k = 0; k < g.players(); ++k) {
                    r.profile.push_back(g.actions(k)[profile[k]]);
                }
                r.rank = g.ranks(i)[p];
                block.ranks.push_back(std::move(r));
            }
        }
        for (PlayerIndex i = 0; i < g.players(); ++i) {
            StrategyDecl s;
            s.player = g.player_names()[i];
            for (StateIndex st = 0; st < space.size(); ++st) {
                s.moves.push_back({space.name(st), g.actions(i)[game->action_at(i, st)], {}});
            }
            block.strategies.push_back(std::move(s));
        }
        doc.game = std::move(block);
    }
    return doc;
}

ModelSpecDocument document_of(const GameModel& game) { return document_of(game.belief(), {}, &game); }

} // namespace metacert::dsl
