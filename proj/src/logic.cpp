#include "dol/logic.hpp"

#include <algorithm>
#include <cctype>

namespace dol {

std::string_view to_string(LogicId id) {
  switch (id) {
    case LogicId::Prop: return "Prop";
    case LogicId::EL: return "EL";
    case LogicId::FOLEQ: return "FOLEQ";
    case LogicId::CLSub: return "CLSub";
  }
  return "?";
}

std::optional<LogicId> logic_from_token(std::string_view token) {
  for (LogicId id : {LogicId::Prop, LogicId::EL, LogicId::FOLEQ, LogicId::CLSub}) {
    if (to_string(id) == token) return id;
  }
  return std::nullopt;
}

bool is_first_order(LogicId id) { return id == LogicId::FOLEQ || id == LogicId::CLSub; }

// ---------------------------------------------------------------------------

bool Iri::is_absolute(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos || colon == 0) return false;
  if (!std::isalpha(static_cast<unsigned char>(text[0]))) return false;
  for (std::size_t i = 1; i < colon; ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (!std::isalnum(c) && c != '+' && c != '-' && c != '.') return false;
  }
  return std::none_of(text.begin(), text.end(),
                      [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
}

Iri::Iri(std::string value) : value_(std::move(value)) {
  if (!is_absolute(value_)) {
    throw DolError(ErrorKind::SyntaxError, "not an absolute IRI: '" + value_ + "'");
  }
}

// ---------------------------------------------------------------------------

Formula Formula::make(Node node) { return Formula(std::make_shared<const Node>(std::move(node))); }

Formula Formula::truth() { return make({Connective::True, {}, {}, {}, {}}); }
Formula Formula::falsity() { return make({Connective::False, {}, {}, {}, {}}); }

Formula Formula::atom(Name predicate, std::vector<Term> args) {
  return make({Connective::Atom, std::move(predicate), std::move(args), {}, {}});
}

Formula Formula::equal(Term lhs, Term rhs) {
  return make({Connective::Equal, {}, {std::move(lhs), std::move(rhs)}, {}, {}});
}

Formula Formula::negation(Formula f) { return make({Connective::Not, {}, {}, {std::move(f)}, {}}); }

Formula Formula::conjunction(std::vector<Formula> operands) {
  return make({Connective::And, {}, {}, std::move(operands), {}});
}

Formula Formula::disjunction(std::vector<Formula> operands) {
  return make({Connective::Or, {}, {}, std::move(operands), {}});
}

Formula Formula::implication(Formula lhs, Formula rhs) {
  return make({Connective::Implies, {}, {}, {std::move(lhs), std::move(rhs)}, {}});
}

Formula Formula::biconditional(Formula lhs, Formula rhs) {
  return make({Connective::Iff, {}, {}, {std::move(lhs), std::move(rhs)}, {}});
}

Formula Formula::forall(std::vector<Name> variables, Formula body) {
  return make({Connective::Forall, {}, {}, {std::move(body)}, std::move(variables)});
}

Formula Formula::exists(std::vector<Name> variables, Formula body) {
  return make({Connective::Exists, {}, {}, {std::move(body)}, std::move(variables)});
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  return x.op == y.op && x.predicate == y.predicate && x.args == y.args &&
         x.variables == y.variables && x.operands == y.operands;
}

// ---------------------------------------------------------------------------

Concept Concept::top() { return Concept(std::make_shared<const Node>(Node{ConceptKind::Top, {}, {}})); }

Concept Concept::named(Name name) {
  return Concept(std::make_shared<const Node>(Node{ConceptKind::Name, std::move(name), {}}));
}

Concept Concept::intersection(std::vector<Concept> operands) {
  return Concept(
      std::make_shared<const Node>(Node{ConceptKind::Intersection, {}, std::move(operands)}));
}

Concept Concept::existential(Name role, Concept filler) {
  return Concept(std::make_shared<const Node>(
      Node{ConceptKind::Existential, std::move(role), {std::move(filler)}}));
}

bool operator==(const Concept& a, const Concept& b) {
  if (a.node_ == b.node_) return true;
  return a.node_->kind == b.node_->kind && a.node_->name == b.node_->name &&
         a.node_->operands == b.node_->operands;
}

// ---------------------------------------------------------------------------

Sentence::Sentence(LogicId logic, Formula formula) : logic_(logic), body_(std::move(formula)) {
  if (logic == LogicId::EL) {
    throw DolError(ErrorKind::LogicMismatch, "EL sentences are subsumptions, not formulas");
  }
}

Sentence::Sentence(Subsumption subsumption) : logic_(LogicId::EL), body_(std::move(subsumption)) {}

Sentence Sentence::with_logic(LogicId logic) const {
  if (is_subsumption() || logic == LogicId::EL) {
    if (logic != logic_) {
      throw DolError(ErrorKind::LogicMismatch, "cannot relabel between EL and formula logics");
    }
    return *this;
  }
  return Sentence(logic, formula());
}

// ---------------------------------------------------------------------------

void Signature::add_predicate(const Name& name, int arity) {
  if (arity < 0) throw DolError(ErrorKind::ArityClash, "negative arity for '" + name + "'");
  if (logic_ == LogicId::Prop && arity != 0) {
    throw DolError(ErrorKind::UnsupportedFeature,
                   "propositional signatures admit only 0-ary symbols ('" + name + "')");
  }
  if (logic_ == LogicId::EL && arity != 1 && arity != 2) {
    throw DolError(ErrorKind::UnsupportedFeature,
                   "EL signatures admit only concepts and roles ('" + name + "')");
  }
  if (constants_.contains(name)) {
    throw DolError(ErrorKind::ArityClash, "'" + name + "' is used both as constant and predicate");
  }
  auto [it, inserted] = predicates_.emplace(name, arity);
  if (!inserted && it->second != arity) {
    throw DolError(ErrorKind::ArityClash, "'" + name + "' used with arities " +
                                              std::to_string(it->second) + " and " +
                                              std::to_string(arity));
  }
}

void Signature::add_constant(const Name& name) {
  if (logic_ == LogicId::Prop || logic_ == LogicId::EL) {
    throw DolError(ErrorKind::UnsupportedFeature,
                   std::string(to_string(logic_)) + " signatures have no constants ('" + name + "')");
  }
  if (predicates_.contains(name)) {
    throw DolError(ErrorKind::ArityClash, "'" + name + "' is used both as predicate and constant");
  }
  constants_.insert(name);
}

std::optional<int> Signature::arity(const Name& name) const {
  auto it = predicates_.find(name);
  if (it == predicates_.end()) return std::nullopt;
  return it->second;
}

bool Signature::includes(const Signature& other) const {
  for (const auto& [name, arity] : other.predicates_) {
    auto it = predicates_.find(name);
    if (it == predicates_.end() || it->second != arity) return false;
  }
  return std::includes(constants_.begin(), constants_.end(), other.constants_.begin(),
                       other.constants_.end());
}

Signature Signature::with_logic(LogicId logic) const {
  Signature out(logic);
  for (const auto& [name, arity] : predicates_) out.add_predicate(name, arity);
  for (const auto& c : constants_) out.add_constant(c);
  return out;
}

namespace {

void collect(const Formula& f, Signature& sig) {
  switch (f.op()) {
    case Connective::Atom:
      sig.add_predicate(f.predicate(), static_cast<int>(f.args().size()));
      [[fallthrough]];
    case Connective::Equal:
      for (const auto& t : f.args()) {
        if (!t.is_variable()) sig.add_constant(t.name);
      }
      break;
    default:
      for (const auto& sub : f.operands()) collect(sub, sig);
  }
}

void collect(const Concept& c, Signature& sig) {
  switch (c.kind()) {
    case ConceptKind::Top: break;
    case ConceptKind::Name: sig.add_predicate(c.name(), 1); break;
    case ConceptKind::Existential: sig.add_predicate(c.name(), 2); [[fallthrough]];
    case ConceptKind::Intersection:
      for (const auto& sub : c.operands()) collect(sub, sig);
      break;
  }
}

}  // namespace

Signature symbols_of(const Sentence& sentence) {
  Signature sig(sentence.logic());
  if (sentence.is_subsumption()) {
    collect(sentence.subsumption().sub, sig);
    collect(sentence.subsumption().super, sig);
  } else {
    collect(sentence.formula(), sig);
  }
  return sig;
}

void Theory::validate() const {
  for (std::size_t i = 0; i < axioms.size(); ++i) {
    const auto& ax = axioms[i];
    if (ax.logic() != signature.logic()) {
      throw DolError(ErrorKind::LogicMismatch, "axiom " + std::to_string(i) + " is in " +
                                                   std::string(to_string(ax.logic())) +
                                                   " but the theory is in " +
                                                   std::string(to_string(signature.logic())));
    }
    const Signature used = symbols_of(ax);
    for (const auto& [name, arity] : used.predicates()) {
      if (signature.arity(name) != arity) {
        throw DolError(ErrorKind::UndeclaredSymbol,
                       "'" + name + "/" + std::to_string(arity) + "' is not declared");
      }
    }
    for (const auto& c : used.constants()) {
      if (!signature.has_constant(c)) {
        throw DolError(ErrorKind::UndeclaredSymbol, "constant '" + c + "' is not declared");
      }
    }
  }
}

Theory theory_from_axioms(LogicId logic, std::vector<Sentence> axioms, const Signature* extra) {
  Theory t;
  t.signature = Signature(logic);
  if (extra) {
    for (const auto& [name, arity] : extra->predicates()) t.signature.add_predicate(name, arity);
    for (const auto& c : extra->constants()) t.signature.add_constant(c);
  }
  for (const auto& ax : axioms) {
    if (ax.logic() != logic) {
      throw DolError(ErrorKind::LogicMismatch, "axiom logic differs from theory logic");
    }
    const Signature used = symbols_of(ax);
    for (const auto& [name, arity] : used.predicates()) t.signature.add_predicate(name, arity);
    for (const auto& c : used.constants()) t.signature.add_constant(c);
  }
  t.axioms = std::move(axioms);
  return t;
}

// ---------------------------------------------------------------------------

Relation::Relation(int arity, int domain_size) : arity_(arity), domain_size_(domain_size) {
  std::size_t cells = 1;
  for (int i = 0; i < arity; ++i) cells *= static_cast<std::size_t>(domain_size);
  cells_.assign(cells, 0);
}

std::size_t Relation::index_of(std::span<const int> tuple) const {
  std::size_t index = 0;
  for (int v : tuple) index = index * static_cast<std::size_t>(domain_size_) + static_cast<std::size_t>(v);
  return index;
}

std::vector<int> Relation::tuple_at(std::size_t index) const {
  std::vector<int> tuple(static_cast<std::size_t>(arity_));
  for (int i = arity_ - 1; i >= 0; --i) {
    tuple[static_cast<std::size_t>(i)] = static_cast<int>(index % static_cast<std::size_t>(domain_size_));
    index /= static_cast<std::size_t>(domain_size_);
  }
  return tuple;
}

bool Relation::contains(std::span<const int> tuple) const {
  if (static_cast<int>(tuple.size()) != arity_) {
    throw DolError(ErrorKind::ArityClash, "tuple length does not match relation arity");
  }
  for (int v : tuple) {
    if (v < 0 || v >= domain_size_) return false;
  }
  return cells_[index_of(tuple)] != 0;
}

void Relation::insert(std::span<const int> tuple) {
  if (static_cast<int>(tuple.size()) != arity_) {
    throw DolError(ErrorKind::ArityClash, "tuple length does not match relation arity");
  }
  for (int v : tuple) {
    if (v < 0 || v >= domain_size_) {
      throw DolError(ErrorKind::UndeclaredSymbol, "tuple component outside the domain");
    }
  }
  cells_[index_of(tuple)] = 1;
}

void Relation::erase(std::span<const int> tuple) {
  if (contains(tuple)) cells_[index_of(tuple)] = 0;
}

std::vector<std::vector<int>> Relation::tuples() const {
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (cells_[i]) out.push_back(tuple_at(i));
  }
  return out;
}

FiniteModel FiniteModel::empty_over(const Signature& sig, int domain_size) {
  FiniteModel m;
  m.domain_size = domain_size;
  for (const auto& [name, arity] : sig.predicates()) m.relations.emplace(name, Relation(arity, domain_size));
  for (const auto& c : sig.constants()) m.constants.emplace(c, 0);
  return m;
}

void FiniteModel::check_interprets(const Signature& sig) const {
  for (const auto& [name, arity] : sig.predicates()) {
    auto it = relations.find(name);
    if (it == relations.end()) {
      throw DolError(ErrorKind::UndeclaredSymbol, "model does not interpret '" + name + "'");
    }
    if (it->second.arity() != arity) {
      throw DolError(ErrorKind::ArityClash, "model interprets '" + name + "' with arity " +
                                                std::to_string(it->second.arity()));
    }
  }
  for (const auto& c : sig.constants()) {
    if (!constants.contains(c)) {
      throw DolError(ErrorKind::UndeclaredSymbol, "model does not interpret constant '" + c + "'");
    }
  }
}

// ---------------------------------------------------------------------------

SignatureMorphism::SignatureMorphism(Signature source, Signature target,
                                     std::map<Name, Name> predicate_map,
                                     std::map<Name, Name> constant_map)
    : source_(std::move(source)),
      target_(std::move(target)),
      predicate_map_(std::move(predicate_map)),
      constant_map_(std::move(constant_map)) {
  if (source_.logic() != target_.logic()) {
    throw DolError(ErrorKind::MorphismIllFormed, "morphism source and target are in different logics");
  }
  for (const auto& [name, arity] : source_.predicates()) {
    auto it = predicate_map_.find(name);
    if (it == predicate_map_.end()) {
      throw DolError(ErrorKind::MorphismIllFormed, "unmapped source symbol '" + name + "'");
    }
    auto target_arity = target_.arity(it->second);
    if (!target_arity) {
      throw DolError(ErrorKind::MorphismIllFormed,
                     "image '" + it->second + "' of '" + name + "' is not declared in the target");
    }
    if (*target_arity != arity) {
      throw DolError(ErrorKind::MorphismIllFormed, "'" + name + "' and its image '" + it->second +
                                                       "' have different arities");
    }
  }
  for (const auto& c : source_.constants()) {
    auto it = constant_map_.find(c);
    if (it == constant_map_.end()) {
      throw DolError(ErrorKind::MorphismIllFormed, "unmapped source constant '" + c + "'");
    }
    if (!target_.has_constant(it->second)) {
      throw DolError(ErrorKind::MorphismIllFormed,
                     "image '" + it->second + "' of constant '" + c + "' is not declared in the target");
    }
  }
  std::erase_if(predicate_map_, [&](const auto& kv) { return !source_.has_predicate(kv.first); });
  std::erase_if(constant_map_, [&](const auto& kv) { return !source_.has_constant(kv.first); });
}

SignatureMorphism SignatureMorphism::identity(const Signature& sig) {
  std::map<Name, Name> preds;
  std::map<Name, Name> consts;
  for (const auto& [name, arity] : sig.predicates()) preds.emplace(name, name);
  for (const auto& c : sig.constants()) consts.emplace(c, c);
  return SignatureMorphism(sig, sig, std::move(preds), std::move(consts));
}

SignatureMorphism SignatureMorphism::from_symbol_map(
    const Signature& source, const Signature& target,
    const std::vector<std::pair<Name, Name>>& pairs) {
  std::map<Name, Name> explicit_map;
  for (const auto& [from, to] : pairs) {
    if (!source.has_predicate(from) && !source.has_constant(from)) {
      throw DolError(ErrorKind::MorphismIllFormed,
                     "symbol map mentions '" + from + "', which is not in the source signature");
    }
    auto [it, inserted] = explicit_map.emplace(from, to);
    if (!inserted && it->second != to) {
      throw DolError(ErrorKind::MorphismIllFormed, "'" + from + "' is mapped twice");
    }
  }
  std::map<Name, Name> preds;
  std::map<Name, Name> consts;
  auto image = [&](const Name& n) {
    auto it = explicit_map.find(n);
    return it == explicit_map.end() ? n : it->second;
  };
  for (const auto& [name, arity] : source.predicates()) preds.emplace(name, image(name));
  for (const auto& c : source.constants()) consts.emplace(c, image(c));
  return SignatureMorphism(source, target, std::move(preds), std::move(consts));
}

SignatureMorphism SignatureMorphism::compose(const SignatureMorphism& then) const {
  if (!(target_ == then.source_)) {
    throw DolError(ErrorKind::MorphismIllFormed, "morphisms do not compose");
  }
  std::map<Name, Name> preds;
  std::map<Name, Name> consts;
  for (const auto& [from, mid] : predicate_map_) preds.emplace(from, then.predicate_map_.at(mid));
  for (const auto& [from, mid] : constant_map_) consts.emplace(from, then.constant_map_.at(mid));
  return SignatureMorphism(source_, then.target_, std::move(preds), std::move(consts));
}

}  // namespace dol
