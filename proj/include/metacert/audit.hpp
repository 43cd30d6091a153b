#pragma once

#include "metacert/axioms.hpp"
#include "metacert/belief_model.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace metacert::audit {

/// Correspondences on n <= 3 states, each b(w) ranging over all subsets,
/// in mixed-radix order (state 1 least significant), filtered by frame
/// properties.
[[nodiscard]] std::vector<PossibilityCorrespondence> enumerate_correspondences(
    std::size_t n, const std::vector<FrameProperty>& filters = {});

/// Deterministic stream of monotone operators. Each draw is, with equal
/// odds, the Kripke operator of a random correspondence or the monotone
/// closure of a random core; cores come in plain, truthful, consistent and
/// block-introspective flavours so that axiom-laden premises occur often.
[[nodiscard]] std::vector<BeliefOperator> sample_monotone_operators(std::size_t n, std::uint64_t seed,
                                                                    std::size_t count);

enum class SourceMode { exhaustive_kripke, sampled_monotone, exhaustive_games, sampled_games, from_files };

[[nodiscard]] std::string_view to_string(SourceMode mode);
/// Accepts the mode names above with dashes, plus "exhaustive" and
/// "sampled" for the two belief-model modes. Game claims read the
/// belief-model modes as their game counterparts.
[[nodiscard]] std::optional<SourceMode> parse_source_mode(std::string_view name);

/// Where audit instances come from.
///
/// Exhaustive modes enumerate every model with exactly `states` states and
/// `players` players (beliefs: all Kripke operators; games additionally all
/// strict/tie comparison patterns for two actions and every strategy
/// profile). Sampled modes draw `count` instances whose state count is
/// uniform in [1, states].
struct ModelSource {
    SourceMode mode = SourceMode::exhaustive_kripke;
    std::size_t states = 2;
    std::size_t players = 2;
    std::size_t actions = 2;
    std::uint64_t seed = 1;
    std::size_t count = 1000;
    std::vector<std::string> files;

    /// Throws model_error when the bounds are outside the supported range.
    void validate() const;
    [[nodiscard]] std::string describe() const;
};

enum class ClaimDomain { belief, game };

struct ClaimInfo {
    std::string id;
    std::string statement;
    ClaimDomain domain = ClaimDomain::belief;
    /// Implications tallied separately; unasserted ones are exploratory.
    std::vector<std::string> directions;
    std::vector<bool> asserted;
    /// The claim is a search that must turn up at least one instance.
    bool expects_counterexample = false;
};

[[nodiscard]] const std::vector<ClaimInfo>& claims();
/// nullptr when the id is unknown.
[[nodiscard]] const ClaimInfo* find_claim(std::string_view id);

struct DirectionTally {
    std::string name;
    bool asserted = true;
    std::size_t checked = 0;
    std::size_t vacuous = 0;
    std::size_t confirmed = 0;
    std::size_t violated = 0;

    friend bool operator==(const DirectionTally&, const DirectionTally&) = default;
};

/// A recorded instance: a violation or a counterexample found by a search.
struct Finding {
    std::size_t instance = 0;
    std::string direction;
    std::string detail;
    std::string model; ///< the instance as a model file

    friend bool operator==(const Finding&, const Finding&) = default;
};

struct AuditResult {
    std::string claim;
    std::string statement;
    std::string source;
    std::size_t instances = 0;
    std::vector<DirectionTally> directions;
    std::size_t violations_total = 0;
    std::vector<Finding> violations;        ///< the first few, in instance order
    bool expects_counterexample = false;
    std::size_t counterexamples_found = 0;
    std::vector<Finding> counterexamples;   ///< the first few, in instance order

    [[nodiscard]] bool passed() const
    {
        return violations_total == 0 && (!expects_counterexample || counterexamples_found > 0);
    }

    friend bool operator==(const AuditResult&, const AuditResult&) = default;
};

struct AuditOptions {
    std::size_t threads = 0;      ///< 0: one per hardware thread
    std::size_t keep_findings = 3;
};

/// Evaluates a claim on every instance of the source. The result does not
/// depend on the thread count. Throws model_error for unknown claims,
/// unsupported sources or unreadable files.
[[nodiscard]] AuditResult run_audit(std::string_view claim, const ModelSource& source, const AuditOptions& options = {});

} // namespace metacert::audit
