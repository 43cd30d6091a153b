#include "metacert/cli.hpp"

#include "metacert/audit.hpp"
#include "metacert/axioms.hpp"
#include "metacert/dsl.hpp"
#include "metacert/game.hpp"
#include "metacert/informativeness.hpp"
#include "metacert/qualitative_types.hpp"
#include "metacert/signal.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <array>
#include <fstream>
#include <numeric>
#include <sstream>

namespace metacert::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::array<Axiom, 9> all_axioms{
    Axiom::monotonicity, Axiom::necessitation, Axiom::finite_conjunction,
    Axiom::countable_conjunction, Axiom::kripke, Axiom::consistency,
    Axiom::truth, Axiom::positive_introspection, Axiom::negative_introspection,
};

/// A finished command: the JSON tree and its text rendering.
struct Report {
    Json json;
    std::string text;
    int exit = success;
};

class Marks {
public:
    explicit Marks(bool color) : color_{color} {}

    [[nodiscard]] std::string operator()(bool ok) const
    {
        if (!color_) {
            return ok ? "✓" : "✗";
        }
        return ok ? "\033[32m✓\033[0m" : "\033[31m✗\033[0m";
    }

private:
    bool color_;
};

Json header(std::string_view check, bool pass)
{
    Json j;
    j["tool-version"] = tool_version;
    j["check"] = check;
    j["verdict"] = pass ? "pass" : "fail";
    j["witnesses"] = Json::array();
    return j;
}

void finish(Report& r, std::string_view check, bool pass, Json body, Json witnesses = Json::array())
{
    r.json = header(check, pass);
    r.json["witnesses"] = std::move(witnesses);
    for (auto& [key, value] : body.items()) {
        r.json[key] = value;
    }
    r.exit = pass ? success : violated;
}

Json witness_json(const StateSpace& space, const Witness& w)
{
    Json states = Json::array();
    for (const auto s : w.states) {
        states.push_back(space.name(s));
    }
    Json events = Json::array();
    for (const auto e : w.events) {
        events.push_back(space.format(e));
    }
    return Json{{"states", states}, {"events", events}};
}

std::string witness_text(const StateSpace& space, const Witness& w)
{
    std::string out;
    for (const auto s : w.states) {
        out += (out.empty() ? "" : ",") + space.name(s);
    }
    for (const auto e : w.events) {
        out += "/" + space.format(e);
    }
    return out;
}

std::vector<PlayerIndex> selected_players(const BeliefModel& m, const std::string& player)
{
    if (!player.empty()) {
        return {m.player_index(player)};
    }
    std::vector<PlayerIndex> all(m.players());
    std::iota(all.begin(), all.end(), PlayerIndex{0});
    return all;
}

std::string value_set_text(const Signal& x, const ValueSet& values)
{
    std::string out = "{";
    for (std::size_t k = 0; k < values.size(); ++k) {
        out += (k ? "," : "") + x.codomain().at(values[k]);
    }
    return out + "}";
}

// ---------------------------------------------------------------------------

struct AxiomsArgs {
    std::string file;
    std::string player;
    std::vector<std::string> require;
};

Report axioms(const AxiomsArgs& a, const Marks& mark)
{
    const auto loaded = dsl::load_file(a.file);
    const auto& m = loaded.belief;
    std::vector<Axiom> required;
    for (const auto& id : a.require) {
        required.push_back(parse_axiom(id));
    }
    Report r;
    std::ostringstream text;
    Json players = Json::array();
    Json witnesses = Json::array();
    bool pass = true;
    for (const auto i : selected_players(m, a.player)) {
        text << "player " << m.player_name(i) << "\n";
        Json rows = Json::array();
        for (const auto axiom : all_axioms) {
            const auto report = check_axiom(m.op(i), axiom);
            Json row{{"axiom", report.property}, {"holds", report.holds}};
            text << "  " << mark(report.holds) << " " << report.property;
            if (report.witness) {
                row["witness"] = witness_json(m.space(), *report.witness);
                Json w{{"player", m.player_name(i)}, {"axiom", report.property}};
                w.update(witness_json(m.space(), *report.witness));
                witnesses.push_back(w);
                text << "  witness " << witness_text(m.space(), *report.witness);
            }
            text << "\n";
            rows.push_back(row);
            if (!report.holds && std::find(required.begin(), required.end(), axiom) != required.end()) {
                pass = false;
            }
        }
        players.push_back(Json{{"player", m.player_name(i)}, {"axioms", rows}});
    }
    Json req = Json::array();
    for (const auto axiom : required) {
        req.push_back(to_string(axiom));
    }
    finish(r, "axioms", pass, Json{{"file", a.file}, {"required", req}, {"players", players}}, witnesses);
    if (!required.empty()) {
        text << (pass ? "all required axioms hold\n" : "a required axiom fails\n");
    }
    r.text = text.str();
    return r;
}

struct CommonBeliefArgs {
    std::string file;
    std::string event;
};

Report common_belief_report(const CommonBeliefArgs& a, const Marks&)
{
    const auto loaded = dsl::load_file(a.file);
    const auto& m = loaded.belief;
    const auto& space = m.space();
    const Event e = space.parse(a.event);
    const Event c = common_belief(m, e);
    const Event mutual = mutual_belief(m, e);
    Json beliefs = Json::object();
    std::ostringstream text;
    text << "event " << space.format(e) << "\n";
    for (PlayerIndex i = 0; i < m.players(); ++i) {
        beliefs[m.player_name(i)] = space.format(m.op(i)(e));
        text << "  B_" << m.player_name(i) << " = " << space.format(m.op(i)(e)) << "\n";
    }
    text << "  mutual belief = " << space.format(mutual) << "\n";
    text << "  common belief = " << space.format(c) << "\n";
    text << "  publicly evident: " << (is_publicly_evident(m, e) ? "yes" : "no") << "\n";
    Report r;
    finish(r, "common-belief", true,
           Json{{"file", a.file},
                {"event", space.format(e)},
                {"beliefs", beliefs},
                {"mutual-belief", space.format(mutual)},
                {"common-belief", space.format(c)},
                {"publicly-evident", is_publicly_evident(m, e)}});
    r.text = text.str();
    return r;
}

struct CertaintyArgs {
    std::string file;
    std::string signal;
    std::string player;
    bool common = false;
};

Report certainty(const CertaintyArgs& a, const Marks& mark)
{
    const auto loaded = dsl::load_file(a.file);
    const auto& m = loaded.belief;
    const auto& x = loaded.signal(a.signal);
    std::ostringstream text;
    Json rows = Json::array();
    Json witnesses = Json::array();
    bool pass = true;
    const auto add = [&](const std::string& who, const CertaintyReport& report) {
        pass = pass && report.holds;
        const std::string certain = who == "common" ? "commonly certain of " : "certain of ";
        text << mark(report.holds) << " " << (who == "common" ? "players" : who)
             << (report.holds ? " " : " not ") << certain << a.signal << "\n";
        Json failures = Json::array();
        for (const auto& f : report.failures) {
            const auto observation = value_set_text(x, x.family().at(f.observation));
            text << "    at " << m.space().name(f.state) << " observing " << observation << "\n";
            Json fj{{"state", m.space().name(f.state)}, {"observation", observation}};
            failures.push_back(fj);
            fj["who"] = who;
            witnesses.push_back(fj);
        }
        rows.push_back(Json{{"who", who}, {"certain", report.holds}, {"failures", failures}});
    };
    if (a.common) {
        add("common", commonly_certain_of(m, x));
    } else {
        for (const auto i : selected_players(m, a.player)) {
            add("player " + m.player_name(i), certain_of(m, i, x));
        }
    }
    Report r;
    finish(r, "certainty", pass, Json{{"file", a.file}, {"signal", a.signal}, {"results", rows}}, witnesses);
    r.text = text.str();
    return r;
}

Report meta(const std::string& file, const Marks& mark)
{
    const auto loaded = dsl::load_file(file);
    const auto& m = loaded.belief;
    const auto report = meta_certainty_report(m);
    std::ostringstream text;
    Json clauses = Json::array();
    Json witnesses = Json::array();
    for (const auto& c : report.clauses) {
        text << mark(c.holds) << " " << c.name;
        Json row{{"clause", c.name}, {"holds", c.holds}};
        if (c.witness) {
            text << "  witness " << witness_text(m.space(), *c.witness);
            row["witness"] = witness_json(m.space(), *c.witness);
            Json w{{"clause", c.name}};
            w.update(witness_json(m.space(), *c.witness));
            witnesses.push_back(w);
        }
        text << "\n";
        clauses.push_back(row);
    }
    Report r;
    finish(r, "meta", report.commonly_certain(),
           Json{{"file", file}, {"commonly-certain", report.commonly_certain()}, {"clauses", clauses}}, witnesses);
    r.text = text.str();
    return r;
}

struct GameArgs {
    std::string file;
    std::string state;
};

std::string profile_text(const Game& g, const std::vector<ActionIndex>& profile)
{
    std::string out = "(";
    for (PlayerIndex i = 0; i < profile.size(); ++i) {
        out += (i ? "," : "") + g.actions(i).at(profile[i]);
    }
    return out + ")";
}

Report game(const GameArgs& a, const Marks& mark)
{
    const auto loaded = dsl::load_file(a.file);
    if (!loaded.game) {
        throw model_error(a.file + " has no game block");
    }
    const auto& gm = *loaded.game;
    const auto& g = gm.game();
    const auto& m = gm.belief();
    const auto& space = m.space();
    std::ostringstream text;

    Json players = Json::array();
    for (PlayerIndex i = 0; i < g.players(); ++i) {
        const Event rat = rationality_event(gm, i);
        const auto sc = strategy_certainty(gm, i);
        const bool compatible = compatible_with_informativeness(m.op(i)).holds;
        const bool conjunctive = satisfies(m.op(i), Axiom::finite_conjunction);
        const auto correct = correct_belief_in_own_rationality(gm, i);
        text << "player " << m.player_name(i) << "\n"
             << "  rational at " << space.format(rat) << ", believed rational at " << space.format(m.op(i)(rat))
             << "\n"
             << "  " << mark(sc.certainty.holds) << " certain of own strategy\n"
             << "  " << mark(compatible) << " compatible with informativeness\n"
             << "  " << mark(conjunctive) << " finite conjunction\n"
             << "  " << mark(correct.holds) << " correctly believes own rationality";
        if (correct.witness) {
            text << " (fails at " << space.name(*correct.witness) << ")";
        }
        text << "\n";
        Json pj{{"player", m.player_name(i)},
                {"rationality", space.format(rat)},
                {"believed-rationality", space.format(m.op(i)(rat))},
                {"certain-of-strategy", sc.certainty.holds},
                {"compatible", compatible},
                {"finite-conjunction", conjunctive},
                {"correct-belief-in-rationality", correct.holds}};
        pj["correct-belief-witness"] = correct.witness ? Json(space.name(*correct.witness)) : Json(nullptr);
        players.push_back(pj);
    }

    const auto trace = iesda(g);
    Json survivors = Json::array();
    text << "surviving actions";
    for (PlayerIndex i = 0; i < g.players(); ++i) {
        Json acts = Json::array();
        for (const auto act : trace.survivors[i]) {
            acts.push_back(g.actions(i).at(act));
        }
        survivors.push_back(Json{{"player", m.player_name(i)}, {"actions", acts}});
        text << " " << m.player_name(i) << ":" << acts.dump();
    }
    text << "\n";
    Json removals = Json::array();
    for (const auto& e : trace.removals) {
        removals.push_back(Json{{"round", e.round}, {"player", m.player_name(e.player)},
                                {"action", g.actions(e.player).at(e.action)}});
    }

    std::vector<StateIndex> states;
    if (a.state.empty()) {
        states.resize(space.size());
        std::iota(states.begin(), states.end(), StateIndex{0});
    } else {
        states.push_back(space.index_of(a.state));
    }
    bool pass = true;
    Json verdicts = Json::array();
    Json witnesses = Json::array();
    for (const auto s : states) {
        const auto v = epistemic_iesda_verdict(gm, s);
        const auto played = profile_text(g, gm.profile_at(s));
        const bool ok = v.status != ImplicationStatus::violated;
        pass = pass && ok;
        text << mark(ok) << " state " << space.name(s) << " plays " << played << ": common belief in rationality "
             << (v.common_belief_in_rationality ? "yes" : "no") << ", correct beliefs "
             << (v.correct_beliefs ? "yes" : "no") << ", survives " << (v.survives ? "yes" : "no") << " ["
             << to_string(v.status) << "]\n";
        Json vj{{"state", space.name(s)},
                {"profile", played},
                {"common-belief-in-rationality", v.common_belief_in_rationality},
                {"correct-beliefs", v.correct_beliefs},
                {"sufficient-conditions", v.sufficient_conditions},
                {"survives", v.survives},
                {"status", to_string(v.status)}};
        if (!ok) {
            witnesses.push_back(vj);
        }
        verdicts.push_back(std::move(vj));
    }
    Report r;
    finish(r, "game", pass,
           Json{{"file", a.file},
                {"players", players},
                {"iesda", Json{{"survivors", survivors}, {"removals", removals}}},
                {"verdicts", verdicts}},
           witnesses);
    r.text = text.str();
    return r;
}

struct AuditArgs {
    std::string claim;
    std::string mode = "exhaustive";
    std::size_t states = 2;
    std::size_t players = 2;
    std::size_t actions = 2;
    std::uint64_t seed = 1;
    std::size_t count = 1000;
    std::size_t threads = 0;
    std::size_t keep = 3;
    std::vector<std::string> files;
    bool list = false;
};

Report list_claims()
{
    Json rows = Json::array();
    std::ostringstream text;
    for (const auto& c : audit::claims()) {
        Json dirs = Json::array();
        for (const auto& d : c.directions) {
            dirs.push_back(d);
        }
        rows.push_back(Json{{"id", c.id},
                            {"domain", c.domain == audit::ClaimDomain::game ? "game" : "belief"},
                            {"kind", c.expects_counterexample ? "search" : "implication"},
                            {"statement", c.statement},
                            {"directions", dirs}});
        text << c.id << (c.expects_counterexample ? " (search)" : "") << "\n    " << c.statement << "\n";
    }
    Report r;
    finish(r, "claims", true, Json{{"claims", rows}});
    r.text = text.str();
    return r;
}

Json finding_json(const audit::Finding& f, std::string_view kind)
{
    return Json{{"kind", kind}, {"instance", f.instance}, {"direction", f.direction}, {"detail", f.detail},
                {"model", f.model}};
}

Report audit_report(const AuditArgs& a, const Marks& mark)
{
    if (a.list) {
        return list_claims();
    }
    if (a.claim.empty()) {
        throw model_error("audit needs --claim (or --list)");
    }
    const auto mode = audit::parse_source_mode(a.mode);
    if (!mode) {
        throw model_error("unknown mode '" + a.mode + "'");
    }
    audit::ModelSource source;
    source.mode = *mode;
    source.states = a.states;
    source.players = a.players;
    source.actions = a.actions;
    source.seed = a.seed;
    source.count = a.count;
    source.files = a.files;
    const auto result = audit::run_audit(a.claim, source, {a.threads, a.keep});

    std::ostringstream text;
    text << mark(result.passed()) << " " << result.claim << "\n"
         << "  " << result.statement << "\n"
         << "  source: " << result.source << "\n"
         << "  instances: " << result.instances << "\n";
    Json directions = Json::array();
    for (const auto& d : result.directions) {
        text << "  " << d.name << (d.asserted ? "" : " (exploratory)") << ": confirmed " << d.confirmed
             << ", vacuous " << d.vacuous << ", violated " << d.violated << "\n";
        directions.push_back(Json{{"direction", d.name},
                                  {"asserted", d.asserted},
                                  {"checked", d.checked},
                                  {"vacuous", d.vacuous},
                                  {"confirmed", d.confirmed},
                                  {"violated", d.violated}});
    }
    if (result.expects_counterexample || result.counterexamples_found > 0) {
        text << "  counterexamples found: " << result.counterexamples_found << "\n";
    }
    Json witnesses = Json::array();
    for (const auto& f : result.violations) {
        witnesses.push_back(finding_json(f, "violation"));
        text << "  violation at instance " << f.instance << " (" << f.direction << "): " << f.detail << "\n"
             << f.model;
    }
    for (const auto& f : result.counterexamples) {
        witnesses.push_back(finding_json(f, "counterexample"));
        text << "  counterexample at instance " << f.instance << " (" << f.direction << "): " << f.detail << "\n"
             << f.model;
    }
    Report r;
    finish(r, "audit", result.passed(),
           Json{{"claim", result.claim},
                {"statement", result.statement},
                {"source", result.source},
                {"instances", result.instances},
                {"directions", directions},
                {"violations", result.violations_total},
                {"expects-counterexample", result.expects_counterexample},
                {"counterexamples", result.counterexamples_found}},
           witnesses);
    r.text = text.str();
    return r;
}

struct EnumerateArgs {
    std::size_t states = 2;
    std::vector<std::string> filters;
};

Report enumerate(const EnumerateArgs& a)
{
    std::vector<FrameProperty> filters;
    for (const auto& f : a.filters) {
        filters.push_back(parse_frame_property(f));
    }
    const auto all = audit::enumerate_correspondences(a.states, filters);
    const auto space = StateSpace::numbered(a.states);
    Json rows = Json::array();
    std::ostringstream text;
    for (const auto& b : all) {
        Json row = Json::object();
        std::string line;
        for (StateIndex s = 0; s < space.size(); ++s) {
            row[space.name(s)] = space.format(b[s]);
            line += (s ? "  " : "") + space.name(s) + ": " + space.format(b[s]);
        }
        rows.push_back(row);
        text << line << "\n";
    }
    text << all.size() << " correspondences\n";
    Json filter_json = Json::array();
    for (const auto f : filters) {
        filter_json.push_back(to_string(f));
    }
    Report r;
    finish(r, "enumerate", true,
           Json{{"states", a.states}, {"filters", filter_json}, {"count", all.size()}, {"correspondences", rows}});
    r.text = text.str();
    return r;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, Terminal terminal)
{
    CLI::App app{"Finite belief-model checker for certainty, common belief and rationality", "metacert"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string{tool_version});
    std::string format = "text";
    std::string out_path;
    app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--out", out_path, "Write the report to this file");

    AxiomsArgs axioms_args;
    auto* axioms_cmd = app.add_subcommand("axioms", "Check every axiom for each player's operator");
    axioms_cmd->add_option("file", axioms_args.file, "Model file")->required();
    axioms_cmd->add_option("--player", axioms_args.player, "Only this player");
    axioms_cmd->add_option("--require", axioms_args.require, "Fail (exit 1) unless these axioms hold");

    CommonBeliefArgs cb_args;
    auto* cb_cmd = app.add_subcommand("common-belief", "Individual, mutual and common belief in an event");
    cb_cmd->add_option("file", cb_args.file, "Model file")->required();
    cb_cmd->add_option("--event", cb_args.event, "Event in brace notation, e.g. {w1,w2}")->required();

    CertaintyArgs cert_args;
    auto* cert_cmd = app.add_subcommand("certainty", "Certainty of a signal declared in the model file");
    cert_cmd->add_option("file", cert_args.file, "Model file")->required();
    cert_cmd->add_option("--signal", cert_args.signal, "Signal name")->required();
    auto* player_opt = cert_cmd->add_option("--player", cert_args.player, "Only this player");
    cert_cmd->add_flag("--common", cert_args.common, "Common certainty")->excludes(player_opt);

    std::string meta_file;
    auto* meta_cmd = app.add_subcommand("meta", "Common certainty of the profile of type mappings");
    meta_cmd->add_option("file", meta_file, "Model file")->required();

    GameArgs game_args;
    auto* game_cmd = app.add_subcommand("game", "Rationality, strategy certainty and elimination of dominated actions");
    game_cmd->add_option("file", game_args.file, "Model file with a game block")->required();
    game_cmd->add_option("--state", game_args.state, "Only this state");

    AuditArgs audit_args;
    auto* audit_cmd = app.add_subcommand("audit", "Audit a claim over a source of models");
    audit_cmd->add_option("--claim", audit_args.claim, "Claim id");
    audit_cmd->add_flag("--list", audit_args.list, "List the claim ids");
    audit_cmd->add_option("--mode", audit_args.mode,
                          "exhaustive, sampled, exhaustive-kripke, sampled-monotone, exhaustive-games, "
                          "sampled-games or from-files");
    audit_cmd->add_option("--states", audit_args.states, "State count (upper bound when sampling)");
    audit_cmd->add_option("--players", audit_args.players, "Player count");
    audit_cmd->add_option("--actions", audit_args.actions, "Actions per player (upper bound when sampling)");
    audit_cmd->add_option("--seed", audit_args.seed, "Sampling seed");
    audit_cmd->add_option("--count", audit_args.count, "Sampled instances");
    audit_cmd->add_option("--threads", audit_args.threads, "Worker threads (0: one per core)");
    audit_cmd->add_option("--keep", audit_args.keep, "Findings kept per kind");
    audit_cmd->add_option("--file", audit_args.files, "Model files for from-files");

    EnumerateArgs enum_args;
    auto* enum_cmd = app.add_subcommand("enumerate", "List possibility correspondences on up to 3 states");
    enum_cmd->add_option("--states", enum_args.states, "State count")->required();
    enum_cmd->add_option("--filter", enum_args.filters, "serial, reflexive, transitive or euclidean");

    for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; })) {
        sub->fallthrough();
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return success;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return success;
    } catch (const CLI::CallForVersion&) {
        out << tool_version << "\n";
        return success;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return input_error;
    }

    const Marks marks{terminal.color && format == "text" && out_path.empty()};
    Report report;
    try {
        if (axioms_cmd->parsed()) {
            report = axioms(axioms_args, marks);
        } else if (cb_cmd->parsed()) {
            report = common_belief_report(cb_args, marks);
        } else if (cert_cmd->parsed()) {
            report = certainty(cert_args, marks);
        } else if (meta_cmd->parsed()) {
            report = meta(meta_file, marks);
        } else if (game_cmd->parsed()) {
            report = game(game_args, marks);
        } else if (audit_cmd->parsed()) {
            report = audit_report(audit_args, marks);
        } else {
            report = enumerate(enum_args);
        }
    } catch (const dsl::parse_error& e) {
        std::string file;
        for (const auto* path : {&axioms_args.file, &cb_args.file, &cert_args.file, &meta_file, &game_args.file}) {
            file = path->empty() ? file : *path;
        }
        err << "error: " << (file.empty() ? "" : file + ":") << e.what() << "\n";
        return input_error;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return input_error;
    }

    const std::string rendered = format == "json" ? report.json.dump(2) + "\n" : report.text;
    if (out_path.empty()) {
        out << rendered;
    } else {
        std::ofstream file{out_path, std::ios::binary};
        if (!(file << rendered)) {
            err << "error: cannot write " << out_path << "\n";
            return input_error;
        }
    }
    return report.exit;
}

} // namespace metacert::cli
