#pragma once

#include "metacert/axioms.hpp"
#include "metacert/belief_model.hpp"
#include "metacert/signal.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace metacert {

/// A binary set function on the event algebra: which events are believed.
/// Equality is extensional.
class QualitativeType {
public:
    QualitativeType() = default;
    explicit QualitativeType(std::size_t states);

    [[nodiscard]] std::size_t states() const { return states_; }
    [[nodiscard]] bool believes(Event e) const { return (words_[e.index() / 64] >> (e.index() % 64)) & 1U; }
    void set(Event e, bool value);

    /// Pointwise order: every event believed here is believed by `other`.
    [[nodiscard]] bool pointwise_le(const QualitativeType& other) const;
    /// Intersection of all believed events (the full space when none is).
    [[nodiscard]] Event kernel() const;

    friend bool operator==(const QualitativeType&, const QualitativeType&) = default;

private:
    std::size_t states_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Distinct types actually taken by a mapping. Class c is represented by the
/// first state carrying it, classes numbered in order of first appearance.
struct RealizedTypes {
    std::vector<StateIndex> representative;
    std::vector<std::size_t> class_of;

    [[nodiscard]] std::size_t size() const { return representative.size(); }
};

/// A player's belief-generating map: the qualitative type at every state.
class QualitativeTypeMapping {
public:
    QualitativeTypeMapping(std::string owner, std::vector<QualitativeType> types);

    [[nodiscard]] const std::string& owner() const { return owner_; }
    [[nodiscard]] std::size_t states() const { return types_.size(); }
    [[nodiscard]] const QualitativeType& at(StateIndex s) const { return types_.at(s); }
    [[nodiscard]] const std::vector<QualitativeType>& types() const { return types_; }

    /// States whose type believes E (the pullback of beta_E).
    [[nodiscard]] Event believers(Event e) const;
    [[nodiscard]] RealizedTypes realized() const;

    friend bool operator==(const QualitativeTypeMapping&, const QualitativeTypeMapping&) = default;

private:
    std::string owner_;
    std::vector<QualitativeType> types_;
};

/// t(w)(E) = 1 iff w is in B(E).
[[nodiscard]] QualitativeTypeMapping type_mapping_of(const BeliefOperator& op);
/// B(E) = { w : t(w)(E) = 1 }; throws model_error naming a violating pair when
/// the induced operator is not monotone.
[[nodiscard]] BeliefOperator operator_of(const StateSpace& space, const QualitativeTypeMapping& t);

/// Decides an axiom in its type form; verdicts and witnesses agree with
/// check_axiom on operator_of(t).
[[nodiscard]] AxiomReport check_type_axiom(const QualitativeTypeMapping& t, Axiom axiom);

enum class TypeFamilyKind {
    beta,        ///< beta_E for every event E
    neg_beta,    ///< complements of the beta_E
    beta_and_neg,
    sigma_atoms, ///< atoms of the generated sigma-algebra on realized types
    upward,      ///< per state, all realized types at least as informative
};

[[nodiscard]] std::string_view to_string(TypeFamilyKind kind);
[[nodiscard]] TypeFamilyKind parse_type_family(std::string_view id);

/// A family of subsets of the realized types (indices as in RealizedTypes).
/// Members are de-duplicated, kept in order of first construction.
struct TypeObservationFamily {
    TypeFamilyKind kind{};
    RealizedTypes realized;
    std::vector<ValueSet> members;
};

/// Only realized types are ever materialised. Certainty with respect to the
/// whole generated sigma-algebra is decided on its atoms: every member,
/// restricted to realized types, is a union of atoms, and under monotonicity
/// believing the atom of the true type implies believing any union holding it.
[[nodiscard]] TypeObservationFamily observation_family(const QualitativeTypeMapping& t, TypeFamilyKind kind);

/// The mapping as a signal into its realized types with the given family.
[[nodiscard]] Signal type_signal(const QualitativeTypeMapping& t, TypeFamilyKind kind);

/// Whether `observer` is certain of `subject`'s type mapping.
[[nodiscard]] CertaintyReport certain_of_type_mapping(const BeliefModel& model, PlayerIndex observer,
                                                      PlayerIndex subject, TypeFamilyKind kind);

/// Common certainty of every player's type mapping (w.r.t. sigma atoms).
[[nodiscard]] bool commonly_certain_of_profile(const BeliefModel& model);

struct Clause {
    std::string name;
    bool holds = true;
    std::optional<Witness> witness;
};

/// Structured account of how far the players are commonly certain of the model.
///
/// Clauses, in order:
///   common-certainty-of-profile
///   positive-transfer(i,j), negative-transfer(i,j) for every ordered pair:
///       B_j(E) subset of B_i B_j(E), and not-B_j(E) subset of B_i(not-B_j(E))
///   identical-operators
///   common-equals-mutual
///   player-equals-common(i)
///   common-positive-introspection(i), common-negative-introspection(i):
///       B_i(E) subset of C B_i(E), and not-B_i(E) subset of C(not-B_i(E))
struct MetaCertaintyReport {
    std::vector<Clause> clauses;

    [[nodiscard]] const Clause& clause(std::string_view name) const;
    [[nodiscard]] bool commonly_certain() const { return clauses.front().holds; }
};

[[nodiscard]] MetaCertaintyReport meta_certainty_report(const BeliefModel& model);

} // namespace metacert
