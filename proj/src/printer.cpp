#include "clif_reader.hpp"
#include "dol/syntax.hpp"
#include "line_syntax.hpp"

namespace dol {

namespace {

std::string iri_text(const Iri& iri, const PrefixMap& prefixes) {
  if (auto curie = prefixes.compact(iri.str())) return *curie;
  return "<" + iri.str() + ">";
}

std::string symbol_text(const Name& name, const PrefixMap& prefixes) {
  if (Iri::is_absolute(name)) return iri_text(Iri(name), prefixes);
  return name;
}

std::string indent_lines(const std::string& text) {
  std::string out;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    out += "\n  ";
    out += text.substr(start, end - start);
    start = end + 1;
  }
  return out;
}

std::string basic_text(const BasicOntology& b, const PrefixMap& prefixes) {
  const Theory& t = b.theory;
  if (is_first_order(t.logic())) {
    if (b.imports.empty() && t.axioms.empty()) return "{| |}";
    std::string body;
    for (const auto& iri : b.imports) {
      body += "(cl-imports " + detail::clif_name(iri.str(), &prefixes) + ")\n";
    }
    for (const auto& ax : t.axioms) body += detail::print_clif_formula(ax.formula(), &prefixes) + "\n";
    return indent_lines(body);
  }
  std::string body = detail::print_line_declarations(t);
  for (const auto& ax : t.axioms) body += print_sentence(ax) + "\n";
  if (body.empty()) return "{| |}";
  return "{|" + indent_lines(body) + "\n|}";
}

enum class Level { Then, And, Primary };

std::string expr_text(const OntologyExpr& e, const PrefixMap& prefixes, Level level) {
  return std::visit(
      [&](const auto& node) -> std::string {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, BasicOntology>) {
          return basic_text(node, prefixes);
        } else if constexpr (std::is_same_v<T, OntologyRef>) {
          return iri_text(node.iri, prefixes);
        } else if constexpr (std::is_same_v<T, ImportRef>) {
          return indent_lines("(cl-imports " + detail::clif_name(node.iri.str(), &prefixes) + ")");
        } else if constexpr (std::is_same_v<T, ExtensionExpr>) {
          std::string s = expr_text(*node.left, prefixes, Level::Then) + " then " +
                          expr_text(*node.right, prefixes, Level::And);
          return level == Level::Then ? s : "{" + s + "}";
        } else {
          std::string s = expr_text(*node.left, prefixes, Level::And) + " and " +
                          expr_text(*node.right, prefixes, Level::Primary);
          return level == Level::Primary ? "{" + s + "}" : s;
        }
      },
      e.node);
}

std::string map_text(const SymbolMap& map, const PrefixMap& prefixes) {
  std::string out;
  for (std::size_t i = 0; i < map.size(); ++i) {
    if (i) out += ", ";
    out += symbol_text(map[i].first, prefixes) + " |-> " + symbol_text(map[i].second, prefixes);
  }
  return out;
}

std::string link_text(const LinkDef& l, const PrefixMap& prefixes) {
  std::string out;
  auto ex = [&](const OntologyExpr& e) { return expr_text(e, prefixes, Level::Then); };
  switch (l.kind) {
    case LinkKind::Interpretation:
      out = "interpretation " + l.name + " : " + ex(l.source) + " to " + ex(l.target);
      if (l.conservative) out += " conservative";
      if (l.faithful) out += " faithful";
      break;
    case LinkKind::ConservativeExtension:
    case LinkKind::DefinitionalExtension:
    case LinkKind::NonconservativeExtension: {
      const char* flavor = l.kind == LinkKind::ConservativeExtension   ? "conservative"
                           : l.kind == LinkKind::DefinitionalExtension ? "definitional"
                                                                       : "nonconservative";
      out = "extension " + l.name + " : " + ex(l.source) + " to " + ex(l.target) + " " + flavor;
      break;
    }
    case LinkKind::DefinableEquivalence:
      out = "equivalence " + l.name + " : " + ex(l.source) + " <-> " + ex(l.target);
      if (l.forward_bridge && l.backward_bridge) {
        out += " via " + ex(*l.forward_bridge) + ", " + ex(*l.backward_bridge);
      }
      break;
    case LinkKind::ModuleInconsistency:
      out = "inconsistency " + l.name + " : " + ex(l.source) + " <-> " + ex(l.target);
      break;
  }
  if (l.symbol_map && l.kind != LinkKind::ModuleInconsistency) {
    out += " = " + map_text(*l.symbol_map, prefixes);
    if (l.kind == LinkKind::DefinableEquivalence && l.reverse_map) {
      out += " ; " + map_text(*l.reverse_map, prefixes);
    }
  }
  return out;
}

}  // namespace

std::string print_sentence(const Sentence& sentence, const PrefixMap* prefixes) {
  if (sentence.is_subsumption()) return detail::print_subsumption(sentence.subsumption());
  if (sentence.logic() == LogicId::Prop) return detail::print_prop_formula(sentence.formula());
  return detail::print_clif_formula(sentence.formula(), prefixes);
}

std::string print_theory(const Theory& theory) {
  std::string out;
  if (!is_first_order(theory.logic())) out += detail::print_line_declarations(theory);
  for (const auto& ax : theory.axioms) out += print_sentence(ax) + "\n";
  return out;
}

std::string print_expr(const OntologyExpr& expr, const PrefixMap& prefixes) {
  return expr_text(expr, prefixes, Level::Then);
}

std::string print_dol(const DolDocument& doc) {
  std::string out;
  const PrefixMap& prefixes = doc.prefixes;
  if (!prefixes.bindings().empty()) {
    out += "%prefix(";
    for (const auto& [name, iri] : prefixes.bindings()) out += "\n  " + name + ": <" + iri.str() + ">";
    out += "\n)%\n\n";
  }
  std::optional<std::pair<LogicId, Serialization>> context;
  auto emit_logic = [&](LogicId logic, Serialization ser) {
    out += "logic " + iri_text(logic_iri(logic), prefixes) + " syntax " +
           iri_text(serialization_iri(ser), prefixes) + "\n\n";
    context = std::make_pair(logic, ser);
  };
  emit_logic(doc.default_logic, doc.default_serialization);
  for (const auto& item : doc.items) {
    if (const auto* def = std::get_if<OntologyDef>(&item)) {
      if (context != std::make_pair(def->logic, def->serialization)) emit_logic(def->logic, def->serialization);
      const std::string body = print_expr(def->body, prefixes);
      out += "ontology " + iri_text(def->name, prefixes) + " =" + (body.starts_with('\n') ? "" : " ") +
             body + "\n\n";
    } else {
      out += link_text(std::get<LinkDef>(item), prefixes) + "\n\n";
    }
  }
  while (out.ends_with("\n\n")) out.pop_back();
  return out;
}

}  // namespace dol
