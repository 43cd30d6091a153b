#pragma once

#include "metacert/belief_model.hpp"
#include "metacert/game.hpp"
#include "metacert/signal.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace metacert::dsl {

/// Where a construct starts in the source text (1-based). Locations are
/// diagnostics only: they never affect document equality.
struct SourceLoc {
    std::size_t line = 1;
    std::size_t column = 1;

    friend bool operator==(const SourceLoc&, const SourceLoc&) { return true; }
};

enum class ErrorKind { lexical, syntax, semantic };

[[nodiscard]] std::string_view to_string(ErrorKind kind);

class parse_error : public std::runtime_error {
public:
    parse_error(ErrorKind kind, SourceLoc loc, const std::string& message);

    [[nodiscard]] ErrorKind kind() const { return kind_; }
    [[nodiscard]] SourceLoc where() const { return loc_; }
    [[nodiscard]] const std::string& message() const { return message_; }

private:
    ErrorKind kind_;
    SourceLoc loc_;
    std::string message_;
};

/// `{a, b}` as written: names in source order.
struct SetLiteral {
    std::vector<std::string> items;
    SourceLoc loc;

    friend bool operator==(const SetLiteral&, const SetLiteral&) = default;
};

struct KripkeEntry {
    std::string state;
    SetLiteral possible;
    SourceLoc loc;

    friend bool operator==(const KripkeEntry&, const KripkeEntry&) = default;
};

struct TableEntry {
    SetLiteral event;
    SetLiteral image;
    SourceLoc loc;

    friend bool operator==(const TableEntry&, const TableEntry&) = default;
};

enum class OperatorForm { kripke, table, core };

struct PlayerBlock {
    std::string id;
    OperatorForm form = OperatorForm::kripke;
    std::vector<KripkeEntry> kripke;  ///< used by the kripke form
    std::vector<TableEntry> entries;  ///< used by the table and core forms
    SourceLoc loc;

    friend bool operator==(const PlayerBlock&, const PlayerBlock&) = default;
};

/// `state -> value` or `state -> action`.
struct Arrow {
    std::string from;
    std::string to;
    SourceLoc loc;

    friend bool operator==(const Arrow&, const Arrow&) = default;
};

enum class FamilyForm { explicit_sets, singletons, powerset };

struct SignalBlock {
    std::string name;
    SetLiteral codomain;
    std::vector<Arrow> assignment;
    FamilyForm family_form = FamilyForm::explicit_sets;
    std::vector<SetLiteral> family;
    SourceLoc loc;

    friend bool operator==(const SignalBlock&, const SignalBlock&) = default;
};

struct ActionsDecl {
    std::string player;
    std::vector<std::string> actions;
    SourceLoc loc;

    friend bool operator==(const ActionsDecl&, const ActionsDecl&) = default;
};

struct RankDecl {
    std::string player;
    std::vector<std::string> profile; ///< one action per player, in player order
    long rank = 0;
    SourceLoc loc;

    friend bool operator==(const RankDecl&, const RankDecl&) = default;
};

struct StrategyDecl {
    std::string player;
    std::vector<Arrow> moves;
    SourceLoc loc;

    friend bool operator==(const StrategyDecl&, const StrategyDecl&) = default;
};

struct GameBlock {
    std::vector<ActionsDecl> actions;
    std::vector<RankDecl> ranks;
    std::vector<StrategyDecl> strategies;
    SourceLoc loc;

    friend bool operator==(const GameBlock&, const GameBlock&) = default;
};

struct ModelSpecDocument {
    std::vector<std::string> states;
    SourceLoc states_loc;
    std::vector<PlayerBlock> players;
    std::vector<SignalBlock> signals;
    std::optional<GameBlock> game;

    friend bool operator==(const ModelSpecDocument&, const ModelSpecDocument&) = default;
};

/// Throws parse_error (lexical or syntax) at the first offending token.
[[nodiscard]] ModelSpecDocument parse_model_spec(std::string_view text);

/// Canonical text; parse_model_spec(serialize(d)) == d.
[[nodiscard]] std::string serialize(const ModelSpecDocument& doc);

struct NamedSignal {
    std::string name;
    Signal signal;
};

/// A document resolved into checked model objects.
struct LoadedModel {
    BeliefModel belief;
    std::vector<NamedSignal> signals;
    std::optional<GameModel> game;

    /// Throws model_error for unknown names.
    [[nodiscard]] const Signal& signal(std::string_view name) const;
};

/// Throws parse_error (semantic) for the first invalid construct.
[[nodiscard]] LoadedModel load(const ModelSpecDocument& doc);
[[nodiscard]] LoadedModel load_text(std::string_view text);
/// Reads and loads a file; I/O failures surface as model_error.
[[nodiscard]] LoadedModel load_file(const std::string& path);

/// Describes existing objects as a document. Kripke operators that keep
/// their correspondence are written in kripke form, all others as full tables.
[[nodiscard]] ModelSpecDocument document_of(const BeliefModel& model, const std::vector<NamedSignal>& signals = {},
                                            const GameModel* game = nullptr);
[[nodiscard]] ModelSpecDocument document_of(const GameModel& game);

} // namespace metacert::dsl
