#include <algorithm>

#include "dol/syntax.hpp"
#include "text_cursor.hpp"

namespace dol {

namespace detail {

void validate_utf8(std::string_view text, SourcePos start) {
  Cursor cur(text, start);
  while (!cur.eof()) {
    const auto b = static_cast<unsigned char>(cur.peek());
    std::size_t len = 0;
    std::uint32_t min = 0;
    if (b < 0x80) {
      if (b == 0) cur.fail(ErrorKind::SyntaxError, "NUL byte in input");
      cur.advance();
      continue;
    } else if ((b & 0xE0) == 0xC0) {
      len = 2;
      min = 0x80;
    } else if ((b & 0xF0) == 0xE0) {
      len = 3;
      min = 0x800;
    } else if ((b & 0xF8) == 0xF0) {
      len = 4;
      min = 0x10000;
    } else {
      cur.fail(ErrorKind::SyntaxError, "invalid UTF-8 byte " + describe_char(static_cast<char>(b)));
    }
    std::uint32_t cp = b & (0xFF >> (len + 1));
    for (std::size_t i = 1; i < len; ++i) {
      const auto c = static_cast<unsigned char>(cur.peek(i));
      if ((c & 0xC0) != 0x80) cur.fail(ErrorKind::SyntaxError, "truncated UTF-8 sequence");
      cp = (cp << 6) | (c & 0x3F);
    }
    if (cp < min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
      cur.fail(ErrorKind::SyntaxError, "invalid UTF-8 sequence");
    }
    cur.advance(len);
  }
}

std::string describe_char(char c) {
  const auto u = static_cast<unsigned char>(c);
  if (u >= 0x21 && u < 0x7F) return std::string("'") + c + "'";
  static constexpr char kHex[] = "0123456789abcdef";
  return std::string("0x") + kHex[u >> 4] + kHex[u & 0xF];
}

}  // namespace detail

std::string_view to_string(Serialization s) {
  switch (s) {
    case Serialization::Clif: return "CommonLogic/CLIF";
    case Serialization::PropText: return "Propositional/Text";
    case Serialization::ElText: return "EL/Text";
  }
  return "?";
}

namespace {

std::string_view logic_local_name(LogicId id) {
  switch (id) {
    case LogicId::Prop: return "Propositional";
    case LogicId::EL: return "EL";
    case LogicId::FOLEQ: return "FOL";
    case LogicId::CLSub: return "CommonLogic";
  }
  return "?";
}

constexpr LogicId kAllLogics[] = {LogicId::Prop, LogicId::EL, LogicId::FOLEQ, LogicId::CLSub};
constexpr Serialization kAllSerializations[] = {Serialization::Clif, Serialization::PropText,
                                                Serialization::ElText};

}  // namespace

Iri logic_iri(LogicId id) { return Iri(std::string(kLogicBase) + std::string(logic_local_name(id))); }

LogicId logic_from_iri(const Iri& iri) {
  for (LogicId id : kAllLogics) {
    if (logic_iri(id) == iri) return id;
  }
  throw DolError(ErrorKind::UnknownLogic, "unknown logic <" + iri.str() + ">");
}

Iri serialization_iri(Serialization s) {
  return Iri(std::string(kSerializationBase) + std::string(to_string(s)));
}

Serialization serialization_from_iri(const Iri& iri) {
  for (Serialization s : kAllSerializations) {
    if (serialization_iri(s) == iri) return s;
  }
  throw DolError(ErrorKind::UnknownLogic, "unknown serialization <" + iri.str() + ">");
}

Serialization default_serialization(LogicId id) {
  switch (id) {
    case LogicId::Prop: return Serialization::PropText;
    case LogicId::EL: return Serialization::ElText;
    default: return Serialization::Clif;
  }
}

bool logic_accepts(LogicId logic, Serialization s) { return default_serialization(logic) == s; }

// ---------------------------------------------------------------------------

void PrefixMap::bind(std::string prefix, Iri iri) {
  if (find(prefix)) {
    throw DolError(ErrorKind::SyntaxError, "prefix '" + prefix + ":' is already bound");
  }
  bindings_.emplace_back(std::move(prefix), std::move(iri));
}

const Iri* PrefixMap::find(std::string_view prefix) const {
  for (const auto& [name, iri] : bindings_) {
    if (name == prefix) return &iri;
  }
  return nullptr;
}

namespace {

bool valid_local_part(std::string_view local) {
  return std::all_of(local.begin(), local.end(), [](char c) {
    const auto u = static_cast<unsigned char>(c);
    if (u >= 0x80) return true;
    return std::isalnum(u) || c == '_' || c == '-' || c == '.' || c == '/' || c == '#' || c == '~';
  });
}

bool valid_prefix_name(std::string_view name) {
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.';
  });
}

}  // namespace

std::optional<std::string> PrefixMap::compact(const std::string& iri) const {
  const std::pair<std::string, Iri>* best = nullptr;
  for (const auto& binding : bindings_) {
    const auto& ns = binding.second.str();
    if (iri.size() > ns.size() && iri.starts_with(ns) && valid_local_part(iri.substr(ns.size())) &&
        (!best || ns.size() > best->second.str().size())) {
      best = &binding;
    }
  }
  if (!best) return std::nullopt;
  return best->first + ":" + iri.substr(best->second.str().size());
}

Iri expand_curie(const PrefixMap& prefixes, std::string_view token) {
  if (token.size() >= 2 && token.front() == '<' && token.back() == '>') {
    std::string iri(token.substr(1, token.size() - 2));
    if (!Iri::is_absolute(iri)) {
      throw DolError(ErrorKind::SyntaxError, "IRI is not absolute: " + std::string(token));
    }
    return Iri(std::move(iri));
  }
  const auto colon = token.find(':');
  if (colon == std::string_view::npos) {
    throw DolError(ErrorKind::SyntaxError, "expected a CURIE or <IRI>, found '" + std::string(token) + "'");
  }
  const std::string_view prefix = token.substr(0, colon);
  const std::string_view local = token.substr(colon + 1);
  if (!valid_prefix_name(prefix)) {
    throw DolError(ErrorKind::SyntaxError, "malformed prefix in '" + std::string(token) + "'");
  }
  const Iri* ns = prefixes.find(prefix);
  if (!ns) throw DolError(ErrorKind::UnknownPrefix, "unknown prefix '" + std::string(prefix) + ":'");
  std::string full = ns->str() + std::string(local);
  if (!Iri::is_absolute(full)) {
    throw DolError(ErrorKind::SyntaxError, "expansion of '" + std::string(token) + "' is not absolute");
  }
  return Iri(std::move(full));
}

// ---------------------------------------------------------------------------

OntologyExpr OntologyExpr::basic(Theory theory, std::vector<Iri> imports) {
  return OntologyExpr{BasicOntology{std::move(imports), std::move(theory)}};
}
OntologyExpr OntologyExpr::ref(Iri iri) { return OntologyExpr{OntologyRef{std::move(iri)}}; }
OntologyExpr OntologyExpr::import(Iri iri) { return OntologyExpr{ImportRef{std::move(iri)}}; }

OntologyExpr OntologyExpr::extension(OntologyExpr left, OntologyExpr right) {
  const SourcePos pos = left.pos;
  return OntologyExpr{ExtensionExpr{std::make_shared<const OntologyExpr>(std::move(left)),
                                    std::make_shared<const OntologyExpr>(std::move(right))},
                      pos};
}

OntologyExpr OntologyExpr::union_of(OntologyExpr left, OntologyExpr right) {
  const SourcePos pos = left.pos;
  return OntologyExpr{UnionExpr{std::make_shared<const OntologyExpr>(std::move(left)),
                                std::make_shared<const OntologyExpr>(std::move(right))},
                      pos};
}

bool operator==(const OntologyExpr& a, const OntologyExpr& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, BasicOntology>) {
          return x.imports == y.imports && x.theory == y.theory;
        } else if constexpr (std::is_same_v<T, OntologyRef> || std::is_same_v<T, ImportRef>) {
          return x.iri == y.iri;
        } else {
          return *x.left == *y.left && *x.right == *y.right;
        }
      },
      a.node);
}

bool operator==(const OntologyDef& a, const OntologyDef& b) {
  return a.name == b.name && a.body == b.body && a.logic == b.logic &&
         a.serialization == b.serialization;
}

std::string_view to_string(LinkKind kind) {
  switch (kind) {
    case LinkKind::Interpretation: return "interpretation";
    case LinkKind::ConservativeExtension: return "conservative-extension";
    case LinkKind::DefinitionalExtension: return "definitional-extension";
    case LinkKind::NonconservativeExtension: return "nonconservative-extension";
    case LinkKind::DefinableEquivalence: return "definable-equivalence";
    case LinkKind::ModuleInconsistency: return "module-inconsistency";
  }
  return "?";
}

bool operator==(const LinkDef& a, const LinkDef& b) {
  return a.name == b.name && a.kind == b.kind && a.source == b.source && a.target == b.target &&
         a.symbol_map == b.symbol_map && a.reverse_map == b.reverse_map &&
         a.forward_bridge == b.forward_bridge && a.backward_bridge == b.backward_bridge &&
         a.conservative == b.conservative && a.faithful == b.faithful;
}

std::vector<const OntologyDef*> DolDocument::ontologies() const {
  std::vector<const OntologyDef*> out;
  for (const auto& item : items) {
    if (const auto* def = std::get_if<OntologyDef>(&item)) out.push_back(def);
  }
  return out;
}

std::vector<const LinkDef*> DolDocument::links() const {
  std::vector<const LinkDef*> out;
  for (const auto& item : items) {
    if (const auto* link = std::get_if<LinkDef>(&item)) out.push_back(link);
  }
  return out;
}

const OntologyDef* DolDocument::find_ontology(const Iri& name) const {
  for (const auto* def : ontologies()) {
    if (def->name == name) return def;
  }
  return nullptr;
}

const LinkDef* DolDocument::find_link(std::string_view name) const {
  for (const auto* link : links()) {
    if (link->name == name) return link;
  }
  return nullptr;
}

}  // namespace dol
