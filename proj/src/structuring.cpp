#include "dol/structuring.hpp"

#include <algorithm>

#include "dol/semantics.hpp"

namespace dol {

Environment Environment::from_document(const DolDocument& doc, const RepoStore* store) {
  Environment env(store);
  for (const auto* def : doc.ontologies()) env.bind(def->name, def->body);
  return env;
}

void Environment::bind(const Iri& name, OntologyExpr body) {
  bindings_[name.str()] = std::make_shared<const OntologyExpr>(std::move(body));
}

std::shared_ptr<const OntologyExpr> Environment::lookup(const Iri& name) const {
  if (auto it = bindings_.find(name.str()); it != bindings_.end()) return it->second;
  if (store_) return store_->resolve(name);
  throw DolError(ErrorKind::UnresolvedReference, "cannot resolve <" + name.str() + ">");
}

namespace {

class Flattener {
 public:
  Flattener(const Environment& env, const TranslationGraph& graph) : env_(env), graph_(graph) {}

  Theory run(const OntologyExpr& e) {
    return std::visit(
        [&](const auto& node) -> Theory {
          using T = std::decay_t<decltype(node)>;
          if constexpr (std::is_same_v<T, BasicOntology>) {
            if (node.imports.empty()) return node.theory;
            std::vector<Theory> parts;
            for (const auto& iri : node.imports) parts.push_back(reference(iri, e.pos));
            parts.push_back(node.theory);
            Theory out = combine(parts);
            out.origin = node.theory.origin;
            return out;
          } else if constexpr (std::is_same_v<T, OntologyRef> || std::is_same_v<T, ImportRef>) {
            return reference(node.iri, e.pos);
          } else {
            return combine({run(*node.left), run(*node.right)});
          }
        },
        e.node);
  }

 private:
  Theory reference(const Iri& iri, SourcePos pos) {
    if (auto it = std::find(stack_.begin(), stack_.end(), iri); it != stack_.end()) {
      std::string cycle;
      for (auto jt = it; jt != stack_.end(); ++jt) cycle += jt->str() + " -> ";
      throw DolError(ErrorKind::CyclicImport, "cyclic import: " + cycle + iri.str(), pos);
    }
    if (auto it = memo_.find(iri.str()); it != memo_.end()) return it->second;
    std::shared_ptr<const OntologyExpr> body;
    try {
      body = env_.lookup(iri);
    } catch (const DolError& err) {
      if (err.kind() == ErrorKind::UnresolvedReference && !err.position()) {
        throw DolError(err.kind(), err.message(), pos);
      }
      throw;
    }
    stack_.push_back(iri);
    Theory t = run(*body);
    stack_.pop_back();
    t.origin = iri;
    memo_.emplace(iri.str(), t);
    return t;
  }

  Theory combine(const std::vector<Theory>& parts) {
    std::vector<LogicId> logics;
    for (const auto& p : parts) logics.push_back(p.logic());
    const LogicId target = graph_.least_common_target(logics);
    Theory out;
    out.signature = Signature(target);
    for (const auto& p : parts) {
      Theory t = translate_to(p, target, graph_);
      out.signature = signature_union(out.signature, t.signature);
      for (auto& ax : t.axioms) {
        if (std::find(out.axioms.begin(), out.axioms.end(), ax) == out.axioms.end()) {
          out.axioms.push_back(std::move(ax));
        }
      }
    }
    return out;
  }

  const Environment& env_;
  const TranslationGraph& graph_;
  std::vector<Iri> stack_;
  std::map<std::string, Theory> memo_;
};

void visit_dependencies(const OntologyExpr& e, const Environment& env, std::vector<Iri>& stack,
                        std::vector<Iri>& out) {
  auto reference = [&](const Iri& iri) {
    if (auto it = std::find(stack.begin(), stack.end(), iri); it != stack.end()) {
      std::string cycle;
      for (auto jt = it; jt != stack.end(); ++jt) cycle += jt->str() + " -> ";
      throw DolError(ErrorKind::CyclicImport, "cyclic import: " + cycle + iri.str(), e.pos);
    }
    if (std::find(out.begin(), out.end(), iri) != out.end()) return;
    const auto body = env.lookup(iri);
    stack.push_back(iri);
    visit_dependencies(*body, env, stack, out);
    stack.pop_back();
    out.push_back(iri);
  };
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, BasicOntology>) {
          for (const auto& iri : node.imports) reference(iri);
        } else if constexpr (std::is_same_v<T, OntologyRef> || std::is_same_v<T, ImportRef>) {
          reference(node.iri);
        } else {
          visit_dependencies(*node.left, env, stack, out);
          visit_dependencies(*node.right, env, stack, out);
        }
      },
      e.node);
}

}  // namespace

Theory flatten(const OntologyExpr& expr, const Environment& env, std::optional<LogicId> target,
               const TranslationGraph& graph) {
  Flattener f(env, graph);
  Theory t = f.run(expr);
  if (target && *target != t.logic()) t = translate_to(t, *target, graph);
  return t;
}

std::vector<Iri> dependency_closure(const OntologyExpr& expr, const Environment& env) {
  std::vector<Iri> stack;
  std::vector<Iri> out;
  visit_dependencies(expr, env, stack, out);
  return out;
}

}  // namespace dol
