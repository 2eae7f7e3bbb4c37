#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "dol/repo_store.hpp"
#include "dol/syntax.hpp"
#include "dol/translation.hpp"

namespace dol {

/// Name lookup for references: document bindings first, then the store.
/// Frozen after construction; lookups are thread-safe.
class Environment {
 public:
  Environment() = default;
  explicit Environment(const RepoStore* store) : store_(store) {}
  static Environment from_document(const DolDocument& doc, const RepoStore* store = nullptr);

  void bind(const Iri& name, OntologyExpr body);
  bool binds(const Iri& name) const { return bindings_.contains(name.str()); }
  const RepoStore* store() const noexcept { return store_; }

  /// Throws UnresolvedReference.
  std::shared_ptr<const OntologyExpr> lookup(const Iri& name) const;

 private:
  std::map<std::string, std::shared_ptr<const OntologyExpr>> bindings_;
  const RepoStore* store_ = nullptr;
};

/// One theory in one logic with the union of the constituents' vocabulary
/// and their axioms, left operand first, duplicates dropped. Without a
/// target the result lands in the least common target of the parts.
/// Throws UnresolvedReference, CyclicImport, NoCommonTarget, NoPath,
/// ArityClash.
Theory flatten(const OntologyExpr& expr, const Environment& env,
               std::optional<LogicId> target = std::nullopt,
               const TranslationGraph& graph = TranslationGraph::core());

/// Every ontology reached through references and imports, each listed after
/// its own dependencies. Throws CyclicImport.
std::vector<Iri> dependency_closure(const OntologyExpr& expr, const Environment& env);

}  // namespace dol
