#pragma once

// Basic-logic layer: vocabularies, sentence trees for the four registered
// logics, theories, finite models and signature morphisms.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "dol/error.hpp"

namespace dol {

enum class LogicId { Prop, EL, FOLEQ, CLSub };

std::string_view to_string(LogicId id);
std::optional<LogicId> logic_from_token(std::string_view token);
/// Prop and EL are separate logics; FOLEQ and CLSub share the CLIF-style AST.
bool is_first_order(LogicId id);

/// Absolute IRI. Construction validates that a scheme separator is present.
class Iri {
 public:
  Iri() = default;
  explicit Iri(std::string value);

  static bool is_absolute(std::string_view text);

  const std::string& str() const noexcept { return value_; }
  bool empty() const noexcept { return value_.empty(); }

  friend auto operator<=>(const Iri&, const Iri&) = default;

 private:
  std::string value_;
};

/// Predicate, constant and variable names. Bare CLIF names stay as written;
/// CURIE names are expanded to the full IRI string by the parsers.
using Name = std::string;

// ---------------------------------------------------------------------------
// First-order formulas (also the AST of Prop sentences, with 0-ary atoms).

struct Term {
  enum class Kind { Variable, Constant };
  Kind kind = Kind::Variable;
  Name name;

  static Term variable(Name n) { return {Kind::Variable, std::move(n)}; }
  static Term constant(Name n) { return {Kind::Constant, std::move(n)}; }
  bool is_variable() const noexcept { return kind == Kind::Variable; }

  friend auto operator<=>(const Term&, const Term&) = default;
};

enum class Connective { True, False, Atom, Equal, Not, And, Or, Implies, Iff, Forall, Exists };

class Formula {
 public:
  static Formula truth();
  static Formula falsity();
  static Formula atom(Name predicate, std::vector<Term> args = {});
  static Formula equal(Term lhs, Term rhs);
  static Formula negation(Formula f);
  static Formula conjunction(std::vector<Formula> operands);
  static Formula disjunction(std::vector<Formula> operands);
  static Formula implication(Formula lhs, Formula rhs);
  static Formula biconditional(Formula lhs, Formula rhs);
  static Formula forall(std::vector<Name> variables, Formula body);
  static Formula exists(std::vector<Name> variables, Formula body);

  Connective op() const noexcept { return node_->op; }
  /// Atom only.
  const Name& predicate() const noexcept { return node_->predicate; }
  /// Atom and Equal.
  const std::vector<Term>& args() const noexcept { return node_->args; }
  /// Not, And, Or, Implies, Iff and the quantifier body (one operand).
  const std::vector<Formula>& operands() const noexcept { return node_->operands; }
  /// Forall and Exists.
  const std::vector<Name>& variables() const noexcept { return node_->variables; }

  bool is_quantifier() const noexcept {
    return op() == Connective::Forall || op() == Connective::Exists;
  }

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node {
    Connective op;
    Name predicate;
    std::vector<Term> args;
    std::vector<Formula> operands;
    std::vector<Name> variables;
  };
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula make(Node node);

  std::shared_ptr<const Node> node_;
};

// ---------------------------------------------------------------------------
// EL concepts and subsumptions.

enum class ConceptKind { Top, Name, Intersection, Existential };

class Concept {
 public:
  static Concept top();
  static Concept named(Name name);
  static Concept intersection(std::vector<Concept> operands);
  static Concept existential(Name role, Concept filler);

  ConceptKind kind() const noexcept { return node_->kind; }
  /// Concept name (Name) or role name (Existential).
  const Name& name() const noexcept { return node_->name; }
  /// Intersection operands, or the single Existential filler.
  const std::vector<Concept>& operands() const noexcept { return node_->operands; }

  friend bool operator==(const Concept& a, const Concept& b);

 private:
  struct Node {
    ConceptKind kind;
    Name name;
    std::vector<Concept> operands;
  };
  explicit Concept(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

struct Subsumption {
  Concept sub;
  Concept super;

  friend bool operator==(const Subsumption&, const Subsumption&) = default;
};

// ---------------------------------------------------------------------------

class Sentence {
 public:
  Sentence(LogicId logic, Formula formula);
  Sentence(Subsumption subsumption);

  LogicId logic() const noexcept { return logic_; }
  bool is_subsumption() const noexcept { return std::holds_alternative<Subsumption>(body_); }
  const Formula& formula() const { return std::get<Formula>(body_); }
  const Subsumption& subsumption() const { return std::get<Subsumption>(body_); }

  /// Same AST relabelled with another logic tag (FOLEQ <-> CLSub, Prop -> FOLEQ).
  Sentence with_logic(LogicId logic) const;

  friend bool operator==(const Sentence&, const Sentence&) = default;

 private:
  LogicId logic_;
  std::variant<Formula, Subsumption> body_;
};

class Signature {
 public:
  Signature() = default;
  explicit Signature(LogicId logic) : logic_(logic) {}

  LogicId logic() const noexcept { return logic_; }
  const std::map<Name, int>& predicates() const noexcept { return predicates_; }
  const std::set<Name>& constants() const noexcept { return constants_; }

  /// Throws ArityClash on a conflicting arity or a name already used as a
  /// constant, UnsupportedFeature when the logic does not admit the arity.
  void add_predicate(const Name& name, int arity);
  void add_constant(const Name& name);

  std::optional<int> arity(const Name& name) const;
  bool has_predicate(const Name& name) const { return predicates_.contains(name); }
  bool has_constant(const Name& name) const { return constants_.contains(name); }
  bool empty() const noexcept { return predicates_.empty() && constants_.empty(); }
  /// Vocabulary inclusion, ignoring the logic tag.
  bool includes(const Signature& other) const;

  Signature with_logic(LogicId logic) const;

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  LogicId logic_ = LogicId::FOLEQ;
  std::map<Name, int> predicates_;
  std::set<Name> constants_;
};

/// Vocabulary used by one sentence, in the sentence's own logic.
Signature symbols_of(const Sentence& sentence);

struct Theory {
  Signature signature;
  std::vector<Sentence> axioms;
  std::optional<Iri> origin;

  LogicId logic() const noexcept { return signature.logic(); }

  /// Checks that every axiom shares the signature's logic and only uses
  /// declared symbols. Throws LogicMismatch / UndeclaredSymbol.
  void validate() const;

  friend bool operator==(const Theory&, const Theory&) = default;
};

/// Theory whose signature is exactly the vocabulary of `axioms`, plus `extra`.
Theory theory_from_axioms(LogicId logic, std::vector<Sentence> axioms,
                          const Signature* extra = nullptr);

// ---------------------------------------------------------------------------

/// Interpretation of one predicate over the domain 0..domain_size-1, stored as
/// a dense table indexed by tuples in lexicographic order.
class Relation {
 public:
  Relation() = default;
  Relation(int arity, int domain_size);

  int arity() const noexcept { return arity_; }
  int domain_size() const noexcept { return domain_size_; }
  std::size_t cell_count() const noexcept { return cells_.size(); }

  bool contains(std::span<const int> tuple) const;
  void insert(std::span<const int> tuple);
  void erase(std::span<const int> tuple);
  bool cell(std::size_t index) const { return cells_[index] != 0; }
  void set_cell(std::size_t index, bool value) { cells_[index] = value ? 1 : 0; }

  /// Members in lexicographic order.
  std::vector<std::vector<int>> tuples() const;
  std::size_t index_of(std::span<const int> tuple) const;
  std::vector<int> tuple_at(std::size_t index) const;

  friend bool operator==(const Relation&, const Relation&) = default;
  friend auto operator<=>(const Relation&, const Relation&) = default;

 private:
  int arity_ = 0;
  int domain_size_ = 1;
  std::vector<std::uint8_t> cells_;
};

struct FiniteModel {
  int domain_size = 1;
  std::map<Name, Relation> relations;
  std::map<Name, int> constants;

  /// Model with every predicate empty and every constant mapped to 0.
  static FiniteModel empty_over(const Signature& sig, int domain_size);

  /// Throws UndeclaredSymbol if a signature symbol is uninterpreted and
  /// ArityClash if a table disagrees with the declared arity.
  void check_interprets(const Signature& sig) const;

  friend bool operator==(const FiniteModel&, const FiniteModel&) = default;
  friend auto operator<=>(const FiniteModel&, const FiniteModel&) = default;
};

// ---------------------------------------------------------------------------

class SignatureMorphism {
 public:
  /// Validates totality, arity preservation and that images are declared in
  /// the target. Throws MorphismIllFormed.
  SignatureMorphism(Signature source, Signature target, std::map<Name, Name> predicate_map,
                    std::map<Name, Name> constant_map);

  static SignatureMorphism identity(const Signature& sig);
  /// Explicit pairs win; every other source symbol maps to the same name in
  /// the target.
  static SignatureMorphism from_symbol_map(const Signature& source, const Signature& target,
                                           const std::vector<std::pair<Name, Name>>& pairs);

  const Signature& source() const noexcept { return source_; }
  const Signature& target() const noexcept { return target_; }
  const std::map<Name, Name>& predicate_map() const noexcept { return predicate_map_; }
  const std::map<Name, Name>& constant_map() const noexcept { return constant_map_; }

  /// `then` applied after `*this`.
  SignatureMorphism compose(const SignatureMorphism& then) const;

 private:
  Signature source_;
  Signature target_;
  std::map<Name, Name> predicate_map_;
  std::map<Name, Name> constant_map_;
};

}  // namespace dol
