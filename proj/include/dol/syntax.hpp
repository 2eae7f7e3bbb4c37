#pragma once

// DOL text syntax: documents, structured ontology expressions and links, plus
// the embedded basic-logic serializations (CLIF subset, line-oriented
// propositional and EL syntaxes).

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "dol/logic.hpp"

namespace dol {

enum class Serialization { Clif, PropText, ElText };

std::string_view to_string(Serialization s);

// Registry metadata: logic and serialization IRIs live under
// http://purl.net/dol/logics/ and http://purl.net/dol/serializations/.
inline constexpr std::string_view kLogicBase = "http://purl.net/dol/logics/";
inline constexpr std::string_view kSerializationBase = "http://purl.net/dol/serializations/";

Iri logic_iri(LogicId id);
/// Throws UnknownLogic.
LogicId logic_from_iri(const Iri& iri);
Iri serialization_iri(Serialization s);
/// Throws UnknownLogic (unknown serialization).
Serialization serialization_from_iri(const Iri& iri);
Serialization default_serialization(LogicId id);
bool logic_accepts(LogicId logic, Serialization s);

/// Prefix bindings in declaration order. The empty string names the default
/// prefix ":".
class PrefixMap {
 public:
  /// Throws SyntaxError when `prefix` is already bound.
  void bind(std::string prefix, Iri iri);
  const Iri* find(std::string_view prefix) const;
  const std::vector<std::pair<std::string, Iri>>& bindings() const noexcept { return bindings_; }

  /// Shortest CURIE for `iri` (longest matching namespace), or nullopt.
  std::optional<std::string> compact(const std::string& iri) const;

  friend bool operator==(const PrefixMap&, const PrefixMap&) = default;

 private:
  std::vector<std::pair<std::string, Iri>> bindings_;
};

/// Expands `prefix:local` or `<absolute-iri>`. Throws UnknownPrefix or
/// SyntaxError.
Iri expand_curie(const PrefixMap& prefixes, std::string_view token);

// ---------------------------------------------------------------------------
// Structured ontology expressions.

struct OntologyExpr;

struct BasicOntology {
  /// `(cl-imports ...)` forms lifted out of a CLIF block, in source order.
  std::vector<Iri> imports;
  Theory theory;
};
struct OntologyRef {
  Iri iri;
};
struct ImportRef {
  Iri iri;
};
struct ExtensionExpr {
  std::shared_ptr<const OntologyExpr> left;
  std::shared_ptr<const OntologyExpr> right;
};
struct UnionExpr {
  std::shared_ptr<const OntologyExpr> left;
  std::shared_ptr<const OntologyExpr> right;
};

struct OntologyExpr {
  std::variant<BasicOntology, OntologyRef, ImportRef, ExtensionExpr, UnionExpr> node;
  SourcePos pos{};

  static OntologyExpr basic(Theory theory, std::vector<Iri> imports = {});
  static OntologyExpr ref(Iri iri);
  static OntologyExpr import(Iri iri);
  static OntologyExpr extension(OntologyExpr left, OntologyExpr right);
  static OntologyExpr union_of(OntologyExpr left, OntologyExpr right);

  /// Structural equality; positions are ignored.
  friend bool operator==(const OntologyExpr& a, const OntologyExpr& b);
};

using SymbolMap = std::vector<std::pair<Name, Name>>;

struct OntologyDef {
  Iri name;
  OntologyExpr body;
  LogicId logic = LogicId::CLSub;
  Serialization serialization = Serialization::Clif;
  SourcePos pos{};

  friend bool operator==(const OntologyDef& a, const OntologyDef& b);
};

enum class LinkKind {
  Interpretation,
  ConservativeExtension,
  DefinitionalExtension,
  NonconservativeExtension,
  DefinableEquivalence,
  ModuleInconsistency,
};

std::string_view to_string(LinkKind kind);

struct LinkDef {
  std::string name;
  LinkKind kind = LinkKind::Interpretation;
  OntologyExpr source;
  OntologyExpr target;
  /// Omitted means identity on shared names.
  std::optional<SymbolMap> symbol_map;
  /// Equivalence only: the map from target symbols back to source symbols.
  std::optional<SymbolMap> reverse_map;
  /// Equivalence only: theories defining source symbols over the target
  /// vocabulary, and target symbols over the source vocabulary.
  std::optional<OntologyExpr> forward_bridge;
  std::optional<OntologyExpr> backward_bridge;
  /// Interpretation markers.
  bool conservative = false;
  bool faithful = false;
  SourcePos pos{};

  friend bool operator==(const LinkDef& a, const LinkDef& b);
};

using DocumentItem = std::variant<OntologyDef, LinkDef>;

struct DolDocument {
  PrefixMap prefixes;
  LogicId default_logic = LogicId::CLSub;
  Serialization default_serialization = Serialization::Clif;
  std::vector<DocumentItem> items;

  std::vector<const OntologyDef*> ontologies() const;
  std::vector<const LinkDef*> links() const;
  const OntologyDef* find_ontology(const Iri& name) const;
  const LinkDef* find_link(std::string_view name) const;

  friend bool operator==(const DolDocument&, const DolDocument&) = default;
};

// ---------------------------------------------------------------------------
// Parsers. All errors are DolError with a position.

DolDocument parse_dol(std::string_view text);

enum class SignatureMode { Inferred, Declared };

struct ClifText {
  Theory theory;
  std::vector<Iri> imports;

  OntologyExpr to_expr() const { return OntologyExpr::basic(theory, imports); }
};

/// In Declared mode every applied symbol must appear in `declared` with the
/// same arity; in Inferred mode the signature is built from the text.
ClifText parse_clif(std::string_view text, SignatureMode mode = SignatureMode::Inferred,
                    LogicId logic = LogicId::CLSub, const PrefixMap* prefixes = nullptr,
                    const Signature* declared = nullptr);

Theory parse_prop(std::string_view text);
Theory parse_el(std::string_view text);

// Printers. Output is deterministic and reparses to an equal value.

std::string print_dol(const DolDocument& doc);
std::string print_theory(const Theory& theory);
std::string print_sentence(const Sentence& sentence, const PrefixMap* prefixes = nullptr);
std::string print_expr(const OntologyExpr& expr, const PrefixMap& prefixes);

}  // namespace dol
