#pragma once

// Relationship checks between ontology expressions. Each check turns a link
// into proof obligations, discharges them with the bounded reasoner and
// aggregates the verdicts without overclaiming.

#include <optional>
#include <string>
#include <vector>

#include "dol/reasoner.hpp"
#include "dol/structuring.hpp"

namespace dol {

enum class ObligationKind {
  EntailmentGoal,   // translated source axiom follows from the target
  ExpansionGoal,    // every base model of one domain size expands
  DefinitionGoal,   // one new axiom is an explicit definition
  RoundTripGoal,    // bridge definitions rebuild one side's relations
  ConsistencyGoal,  // the combined modules have a model
  WitnessSearch,    // some base model has no expansion
};

std::string_view to_string(ObligationKind kind);

struct ProofObligation {
  ObligationKind kind = ObligationKind::EntailmentGoal;
  std::string link;
  /// Human-readable origin, e.g. "source axiom 2" or "base models of size 3".
  std::string origin;
  /// Source (or extension) axiom this obligation comes from.
  std::optional<std::size_t> axiom_index;
  /// Domain size for per-size obligations.
  std::optional<int> domain_size;
  std::optional<Sentence> goal;
};

struct ObligationResult {
  ProofObligation obligation;
  /// Proved / NoCounterexampleUpTo when the obligation holds, Disproved (with
  /// a witness where one exists) when it fails. WitnessSearch uses
  /// ModelFound / NoModelUpTo.
  Verdict verdict;
  /// Reason for a failure that has no model witness.
  std::string note;
};

enum class OverallStatus { Verified, VerifiedUpToBound, Refuted, NoWitnessUpTo };

std::string_view to_string(OverallStatus status);

struct NotDefinitionalInfo {
  /// Offending axiom of the flattened extension (or bridge); empty when a
  /// new symbol has no definition at all.
  std::optional<std::size_t> axiom_index;
  std::string reason;
};

struct RelationshipReport {
  std::string link;
  LinkKind kind = LinkKind::Interpretation;
  std::vector<ObligationResult> obligations;
  /// Expansion obligations of an interpretation marked `conservative`.
  std::vector<ObligationResult> conservativity;
  OverallStatus overall = OverallStatus::Verified;
  /// Set for VerifiedUpToBound and bounded NoWitnessUpTo.
  std::optional<int> bound;
  /// Counterexample for Refuted, evidence for a nonconservativity witness.
  std::optional<FiniteModel> witness;
  /// Index into `obligations` (or `conservativity`, after them) of the
  /// obligation the witness refutes.
  std::optional<std::size_t> failed_obligation;
  std::optional<NotDefinitionalInfo> not_definitional;
  std::vector<std::string> notes;

  bool succeeded() const noexcept {
    return overall == OverallStatus::Verified || overall == OverallStatus::VerifiedUpToBound;
  }
};

/// ∀x⃗ (s(x⃗) ↔ φ): `args` are the variables in the order s applies them.
struct Definition {
  Name symbol;
  std::vector<Name> args;
  Formula definiens;
};

/// The definition expressed by `sentence`, or the reason it is not one.
/// `base` is the vocabulary the definiens may use; the defined symbol must
/// not belong to it.
struct DefinitionCheck {
  std::optional<Definition> definition;
  std::string reason;
};
DefinitionCheck extract_definition(const Sentence& sentence, const Signature& base);

/// Relation defined by `def` over `model`, which must interpret the
/// definiens' vocabulary.
Relation evaluate_definition(const Definition& def, const FiniteModel& model);

/// Every translated source axiom must follow from the target. With the
/// `conservative` marker, every source model must also expand along the
/// morphism to a target model. Throws MorphismIllFormed.
RelationshipReport check_interpretation(const LinkDef& link, const Environment& env, const Bound& bound);

/// Every base model up to the bound expands to an extension model.
/// Throws SignatureNotIncluded.
RelationshipReport check_conservative_extension(const OntologyExpr& base, const OntologyExpr& ext,
                                                const Environment& env, const Bound& bound,
                                                const std::string& link = {});

/// Syntactic: every new axiom explicitly defines a new symbol over the base
/// vocabulary, and each new symbol is defined once. A failure is reported as
/// Refuted with `not_definitional` set. Throws SignatureNotIncluded.
RelationshipReport check_definitional_extension(const OntologyExpr& base, const OntologyExpr& ext,
                                                const Environment& env, const std::string& link = {});

/// Verified with a non-expandable base model as evidence, else NoWitnessUpTo.
RelationshipReport check_nonconservativity_witness(const OntologyExpr& base, const OntologyExpr& ext,
                                                   const Environment& env, const Bound& bound,
                                                   const std::string& link = {});

/// Interpretations in both directions (each into the other side extended by
/// its bridge), plus round trips through the bridge definitions for every
/// model of each side up to the bound.
RelationshipReport check_definable_equivalence(const LinkDef& link, const Environment& env, const Bound& bound);

/// The claim is that the two modules are jointly inconsistent: no model up
/// to the bound verifies it, a model refutes it.
RelationshipReport check_module_inconsistency(const OntologyExpr& a, const OntologyExpr& b,
                                              const Environment& env, const Bound& bound,
                                              const std::string& link = {});

/// Dispatches on the link kind.
RelationshipReport verify_link(const LinkDef& link, const Environment& env, const Bound& bound);

/// Reports for the given links in the given order; links are checked
/// concurrently.
std::vector<RelationshipReport> verify_links(const std::vector<const LinkDef*>& links, const Environment& env,
                                             const Bound& bound);

}  // namespace dol
