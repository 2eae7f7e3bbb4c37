#include "dol/verification.hpp"

#include <algorithm>
#include <functional>
#include <future>

#include "dol/semantics.hpp"

namespace dol {

std::string_view to_string(ObligationKind kind) {
  switch (kind) {
    case ObligationKind::EntailmentGoal: return "EntailmentGoal";
    case ObligationKind::ExpansionGoal: return "ExpansionGoal";
    case ObligationKind::DefinitionGoal: return "DefinitionGoal";
    case ObligationKind::RoundTripGoal: return "RoundTripGoal";
    case ObligationKind::ConsistencyGoal: return "ConsistencyGoal";
    case ObligationKind::WitnessSearch: return "WitnessSearch";
  }
  return "?";
}

std::string_view to_string(OverallStatus status) {
  switch (status) {
    case OverallStatus::Verified: return "Verified";
    case OverallStatus::VerifiedUpToBound: return "VerifiedUpToBound";
    case OverallStatus::Refuted: return "Refuted";
    case OverallStatus::NoWitnessUpTo: return "NoWitnessUpTo";
  }
  return "?";
}

namespace {

using Task = std::function<ObligationResult()>;

// Runs independent obligations concurrently; results keep task order.
std::vector<ObligationResult> discharge(std::vector<Task> tasks) {
  std::vector<std::future<ObligationResult>> futures;
  futures.reserve(tasks.size());
  for (auto& t : tasks) futures.push_back(std::async(std::launch::async, std::move(t)));
  std::vector<ObligationResult> out;
  out.reserve(futures.size());
  for (auto& f : futures) out.push_back(f.get());
  return out;
}

// Refuted by the first failed obligation; otherwise bounded if any
// obligation only holds up to a domain size.
void aggregate(RelationshipReport& r) {
  std::vector<const ObligationResult*> all;
  for (const auto& o : r.obligations) all.push_back(&o);
  for (const auto& o : r.conservativity) all.push_back(&o);
  std::optional<int> bounded;
  for (std::size_t i = 0; i < all.size(); ++i) {
    const Verdict& v = all[i]->verdict;
    if (v.status == VerdictStatus::Disproved) {
      r.overall = OverallStatus::Refuted;
      r.witness = v.witness;
      r.failed_obligation = i;
      r.bound.reset();
      return;
    }
    if (v.status == VerdictStatus::NoCounterexampleUpTo) {
      bounded = std::max(bounded.value_or(0), v.searched_up_to.value_or(v.bound_used.max_domain_size));
    }
  }
  r.overall = bounded ? OverallStatus::VerifiedUpToBound : OverallStatus::Verified;
  r.bound = bounded;
}

Verdict holds(bool complete, int size, const Bound& bound) {
  Verdict v;
  v.bound_used = bound;
  v.status = complete ? VerdictStatus::Proved : VerdictStatus::NoCounterexampleUpTo;
  if (!complete) v.searched_up_to = size;
  return v;
}

Verdict fails(std::optional<FiniteModel> witness, const Bound& bound) {
  Verdict v;
  v.bound_used = bound;
  v.status = VerdictStatus::Disproved;
  v.witness = std::move(witness);
  return v;
}

int max_size(const Theory& t, const Bound& bound) { return t.logic() == LogicId::Prop ? 1 : bound.max_domain_size; }

// Both theories moved into their least common target logic.
std::pair<Theory, Theory> common_pair(const Theory& a, const Theory& b) {
  const LogicId target = TranslationGraph::core().least_common_target({a.logic(), b.logic()});
  return {translate_to(a, target), translate_to(b, target)};
}

std::pair<Theory, Theory> flatten_pair(const OntologyExpr& a, const OntologyExpr& b, const Environment& env) {
  return common_pair(flatten(a, env), flatten(b, env));
}

SignatureMorphism base_morphism(const Theory& base, const Theory& ext, const std::optional<SymbolMap>& map) {
  if (!map && !ext.signature.includes(base.signature)) {
    std::string missing;
    for (const auto& [name, arity] : base.signature.predicates()) {
      if (ext.signature.arity(name) != arity) missing += (missing.empty() ? "" : ", ") + name;
    }
    for (const auto& c : base.signature.constants()) {
      if (!ext.signature.has_constant(c)) missing += (missing.empty() ? "" : ", ") + c;
    }
    throw DolError(ErrorKind::SignatureNotIncluded,
                   "the extension does not contain the base symbols: " + missing);
  }
  return SignatureMorphism::from_symbol_map(base.signature, ext.signature, map.value_or(SymbolMap{}));
}

// Interpretation of `model` read forward along `m`: each target symbol takes
// the value of its preimage. Nullopt when two preimages disagree.
std::optional<FiniteModel> push_forward(const FiniteModel& model, const SignatureMorphism& m) {
  FiniteModel out;
  out.domain_size = model.domain_size;
  for (const auto& [from, to] : m.predicate_map()) {
    const Relation& r = model.relations.at(from);
    auto [it, inserted] = out.relations.emplace(to, r);
    if (!inserted && !(it->second == r)) return std::nullopt;
  }
  for (const auto& [from, to] : m.constant_map()) {
    const int v = model.constants.at(from);
    auto [it, inserted] = out.constants.emplace(to, v);
    if (!inserted && it->second != v) return std::nullopt;
  }
  return out;
}

// Does every model of `base` of this size expand along `m` to a model of `ext`?
ObligationResult expansion_obligation(const std::string& link, const Theory& base, const Theory& ext,
                                      const SignatureMorphism& m, int size, const Bound& bound) {
  ProofObligation ob;
  ob.kind = ObligationKind::ExpansionGoal;
  ob.link = link;
  ob.domain_size = size;
  ob.origin = base.logic() == LogicId::Prop ? "all base models" : "base models of size " + std::to_string(size);
  std::optional<FiniteModel> stuck;
  enumerate_models(base, size, [&](const FiniteModel& model) {
    auto fixed = push_forward(model, m);
    if (fixed && find_expansion(ext, *fixed)) return true;
    stuck = model;
    return false;
  });
  if (stuck) {
    return {ob, fails(std::move(stuck), bound), "this base model has no expansion to a model of the extension"};
  }
  return {ob, holds(base.logic() == LogicId::Prop, size, bound), {}};
}

std::vector<Task> expansion_tasks(const std::string& link, const Theory& base, const Theory& ext,
                                  const SignatureMorphism& m, const Bound& bound) {
  std::vector<Task> tasks;
  for (int n = 1; n <= max_size(base, bound); ++n) {
    tasks.push_back([=] { return expansion_obligation(link, base, ext, m, n, bound); });
  }
  return tasks;
}

RelationshipReport interpretation_report(const std::string& link, LinkKind kind, const Theory& source,
                                         const Theory& target, const std::optional<SymbolMap>& map,
                                         const Bound& bound, const std::string& label) {
  auto [src, tgt] = common_pair(source, target);
  const SignatureMorphism m = SignatureMorphism::from_symbol_map(src.signature, tgt.signature, map.value_or(SymbolMap{}));
  RelationshipReport r;
  r.link = link;
  r.kind = kind;
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < src.axioms.size(); ++i) {
    ProofObligation ob;
    ob.kind = ObligationKind::EntailmentGoal;
    ob.link = link;
    ob.origin = label + "source axiom " + std::to_string(i);
    ob.axiom_index = i;
    ob.goal = translate_sentence(m, src.axioms[i]);
    tasks.push_back([ob, tgt = tgt, bound] { return ObligationResult{ob, bounded_entailment(tgt, *ob.goal, bound), {}}; });
  }
  r.obligations = discharge(std::move(tasks));
  return r;
}

// Interprets each predicate of `sig` in `source` through `defs`, copying
// symbols that are shared and undefined. Nullopt plus a reason when a symbol
// cannot be rebuilt.
std::optional<FiniteModel> rebuild(const Signature& sig, const FiniteModel& source,
                                   const std::vector<Definition>& defs, std::string& reason) {
  FiniteModel out;
  out.domain_size = source.domain_size;
  for (const auto& [name, arity] : sig.predicates()) {
    auto def = std::find_if(defs.begin(), defs.end(), [&](const Definition& d) { return d.symbol == name; });
    if (def != defs.end()) {
      out.relations[name] = evaluate_definition(*def, source);
    } else if (auto it = source.relations.find(name); it != source.relations.end()) {
      out.relations[name] = it->second;
    } else {
      reason = "no bridge definition for '" + name + "'";
      return std::nullopt;
    }
  }
  for (const auto& c : sig.constants()) {
    auto it = source.constants.find(c);
    if (it == source.constants.end()) {
      reason = "no bridge value for constant '" + c + "'";
      return std::nullopt;
    }
    out.constants[c] = it->second;
  }
  return out;
}

ObligationResult round_trip(const std::string& link, const std::string& side, const Theory& theory,
                            const Signature& other, const std::vector<Definition>& there,
                            const std::vector<Definition>& back, const Bound& bound) {
  ProofObligation ob;
  ob.kind = ObligationKind::RoundTripGoal;
  ob.link = link;
  ob.origin = "round trip from " + side;
  std::optional<FiniteModel> broken;
  std::string reason;
  const int max = max_size(theory, bound);
  for (int n = 1; n <= max && !broken && reason.empty(); ++n) {
    enumerate_models(theory, n, [&](const FiniteModel& model) {
      auto mid = rebuild(other, model, there, reason);
      auto again = mid ? rebuild(theory.signature, *mid, back, reason) : std::nullopt;
      if (!again) return false;
      for (const auto& [name, rel] : again->relations) {
        if (!(model.relations.at(name) == rel)) {
          reason = "'" + name + "' is not reconstructed";
          broken = model;
          return false;
        }
      }
      return true;
    });
  }
  if (!reason.empty()) return {ob, fails(std::move(broken), bound), reason};
  return {ob, holds(theory.logic() == LogicId::Prop, max, bound), {}};
}

void collect_symbols(const Formula& f, std::set<std::pair<Name, int>>& preds, std::set<Name>& consts) {
  switch (f.op()) {
    case Connective::Atom:
      preds.emplace(f.predicate(), static_cast<int>(f.args().size()));
      [[fallthrough]];
    case Connective::Equal:
      for (const auto& t : f.args()) {
        if (!t.is_variable()) consts.insert(t.name);
      }
      break;
    default:
      for (const auto& op : f.operands()) collect_symbols(op, preds, consts);
  }
}

std::optional<std::string> try_side(const Formula& defined, const Formula& definiens, const std::vector<Name>& vars,
                                    const Signature& base, std::optional<Definition>& out) {
  if (defined.op() != Connective::Atom) return "the biconditional has no atom naming the defined symbol";
  const Name& s = defined.predicate();
  if (base.has_predicate(s) || base.has_constant(s)) return "'" + s + "' is not a new symbol";
  std::vector<Name> args;
  for (const auto& t : defined.args()) {
    if (!t.is_variable()) return "'" + s + "' is applied to the constant '" + t.name + "'";
    if (std::find(args.begin(), args.end(), t.name) != args.end()) {
      return "'" + s + "' repeats the variable '" + t.name + "'";
    }
    args.push_back(t.name);
  }
  std::vector<Name> sorted_args = args;
  std::vector<Name> sorted_vars = vars;
  std::sort(sorted_args.begin(), sorted_args.end());
  std::sort(sorted_vars.begin(), sorted_vars.end());
  if (sorted_args != sorted_vars) return "the quantified variables are not exactly the arguments of '" + s + "'";
  std::set<std::pair<Name, int>> preds;
  std::set<Name> consts;
  collect_symbols(definiens, preds, consts);
  for (const auto& [p, arity] : preds) {
    if (p == s) return "the definiens mentions the new symbol '" + s + "'";
  }
  for (const auto& [p, arity] : preds) {
    if (base.arity(p) != arity) return "the definiens uses '" + p + "', which is not a base symbol";
  }
  for (const auto& c : consts) {
    if (!base.has_constant(c)) return "the definiens uses '" + c + "', which is not a base constant";
  }
  out = Definition{s, std::move(args), definiens};
  return std::nullopt;
}

// Definitions in `bridge`, each over `base`. Fills `failure` on the first
// axiom that is not one.
std::vector<Definition> bridge_definitions(const Theory& bridge, const Signature& base,
                                           std::optional<NotDefinitionalInfo>& failure, const std::string& label) {
  std::vector<Definition> defs;
  for (std::size_t i = 0; i < bridge.axioms.size(); ++i) {
    DefinitionCheck check = extract_definition(bridge.axioms[i], base);
    if (!check.definition) {
      if (!failure) failure = NotDefinitionalInfo{i, label + ": " + check.reason};
      continue;
    }
    defs.push_back(std::move(*check.definition));
  }
  return defs;
}

}  // namespace

DefinitionCheck extract_definition(const Sentence& sentence, const Signature& base) {
  DefinitionCheck result;
  if (sentence.is_subsumption()) {
    result.reason = "a subsumption is not an explicit definition";
    return result;
  }
  Formula f = sentence.formula();
  std::vector<Name> vars;
  while (f.op() == Connective::Forall) {
    vars.insert(vars.end(), f.variables().begin(), f.variables().end());
    f = f.operands()[0];
  }
  if (f.op() != Connective::Iff) {
    result.reason = "not of the form forall x (s(x) iff phi)";
    return result;
  }
  auto reason = try_side(f.operands()[0], f.operands()[1], vars, base, result.definition);
  if (reason && try_side(f.operands()[1], f.operands()[0], vars, base, result.definition)) {
    result.reason = *reason;
  }
  return result;
}

Relation evaluate_definition(const Definition& def, const FiniteModel& model) {
  Relation r(static_cast<int>(def.args.size()), model.domain_size);
  std::map<Name, int> assignment;
  for (std::size_t i = 0; i < r.cell_count(); ++i) {
    const std::vector<int> tuple = r.tuple_at(i);
    for (std::size_t k = 0; k < tuple.size(); ++k) assignment[def.args[k]] = tuple[k];
    r.set_cell(i, evaluate(model, def.definiens, assignment));
  }
  return r;
}

RelationshipReport check_interpretation(const LinkDef& link, const Environment& env, const Bound& bound) {
  const Theory source = flatten(link.source, env);
  const Theory target = flatten(link.target, env);
  RelationshipReport r =
      interpretation_report(link.name, LinkKind::Interpretation, source, target, link.symbol_map, bound, "");
  if (link.conservative) {
    auto [src, tgt] = common_pair(source, target);
    const SignatureMorphism m =
        SignatureMorphism::from_symbol_map(src.signature, tgt.signature, link.symbol_map.value_or(SymbolMap{}));
    r.conservativity = discharge(expansion_tasks(link.name, src, tgt, m, bound));
  }
  if (link.faithful) {
    r.notes.push_back("faithfulness is not checked separately; only the interpretation obligations were discharged");
  }
  aggregate(r);
  return r;
}

namespace {

RelationshipReport conservative_report(const OntologyExpr& base_expr, const OntologyExpr& ext_expr,
                                       const std::optional<SymbolMap>& map, const Environment& env,
                                       const Bound& bound, const std::string& link) {
  auto [base, ext] = flatten_pair(base_expr, ext_expr, env);
  const SignatureMorphism m = base_morphism(base, ext, map);
  RelationshipReport r;
  r.link = link;
  r.kind = LinkKind::ConservativeExtension;
  r.obligations = discharge(expansion_tasks(link, base, ext, m, bound));
  aggregate(r);
  return r;
}

RelationshipReport definitional_report(const OntologyExpr& base_expr, const OntologyExpr& ext_expr,
                                       const std::optional<SymbolMap>& map, const Environment& env,
                                       const std::string& link) {
  auto [base, ext] = flatten_pair(base_expr, ext_expr, env);
  const SignatureMorphism m = base_morphism(base, ext, map);
  // The base as seen inside the extension's vocabulary.
  Signature vocabulary(ext.logic());
  for (const auto& [from, to] : m.predicate_map()) vocabulary.add_predicate(to, *base.signature.arity(from));
  for (const auto& [from, to] : m.constant_map()) vocabulary.add_constant(to);
  std::vector<Sentence> base_axioms;
  for (const auto& ax : base.axioms) base_axioms.push_back(translate_sentence(m, ax));

  RelationshipReport r;
  r.link = link;
  r.kind = LinkKind::DefinitionalExtension;
  std::set<Name> defined;
  for (std::size_t i = 0; i < ext.axioms.size(); ++i) {
    if (std::find(base_axioms.begin(), base_axioms.end(), ext.axioms[i]) != base_axioms.end()) continue;
    ProofObligation ob;
    ob.kind = ObligationKind::DefinitionGoal;
    ob.link = link;
    ob.origin = "extension axiom " + std::to_string(i);
    ob.axiom_index = i;
    ob.goal = ext.axioms[i];
    DefinitionCheck check = extract_definition(ext.axioms[i], vocabulary);
    std::string reason = check.reason;
    if (check.definition && !defined.insert(check.definition->symbol).second) {
      reason = "'" + check.definition->symbol + "' is defined more than once";
    }
    if (reason.empty()) {
      r.obligations.push_back({ob, holds(true, 1, Bound()), {}});
    } else {
      r.obligations.push_back({ob, fails(std::nullopt, Bound()), reason});
      if (!r.not_definitional) r.not_definitional = NotDefinitionalInfo{i, reason};
    }
  }
  for (const auto& [name, arity] : ext.signature.predicates()) {
    if (!vocabulary.has_predicate(name) && !defined.contains(name) && !r.not_definitional) {
      r.not_definitional = NotDefinitionalInfo{std::nullopt, "new symbol '" + name + "' has no definition"};
    }
  }
  for (const auto& c : ext.signature.constants()) {
    if (!vocabulary.has_constant(c) && !r.not_definitional) {
      r.not_definitional = NotDefinitionalInfo{std::nullopt, "new constant '" + c + "' cannot be defined"};
    }
  }
  aggregate(r);
  if (r.not_definitional) r.overall = OverallStatus::Refuted;
  return r;
}

RelationshipReport nonconservativity_report(const OntologyExpr& base_expr, const OntologyExpr& ext_expr,
                                            const std::optional<SymbolMap>& map, const Environment& env,
                                            const Bound& bound, const std::string& link) {
  auto [base, ext] = flatten_pair(base_expr, ext_expr, env);
  const SignatureMorphism m = base_morphism(base, ext, map);
  ProofObligation ob;
  ob.kind = ObligationKind::WitnessSearch;
  ob.link = link;
  ob.origin = "base model without expansion";
  Verdict v;
  v.bound_used = bound;
  const int max = max_size(base, bound);
  for (int n = 1; n <= max && !v.witness; ++n) {
    enumerate_models(base, n, [&](const FiniteModel& model) {
      auto fixed = push_forward(model, m);
      if (fixed && find_expansion(ext, *fixed)) return true;
      v.witness = model;
      return false;
    });
  }
  RelationshipReport r;
  r.link = link;
  r.kind = LinkKind::NonconservativeExtension;
  if (v.witness) {
    v.status = VerdictStatus::ModelFound;
    if (base.logic() != LogicId::Prop) v.searched_up_to = v.witness->domain_size;
    r.overall = OverallStatus::Verified;
    r.witness = v.witness;
  } else {
    v.status = VerdictStatus::NoModelUpTo;
    if (base.logic() != LogicId::Prop) v.searched_up_to = max;
    r.overall = OverallStatus::NoWitnessUpTo;
    r.bound = v.searched_up_to;
  }
  r.obligations.push_back({ob, v, {}});
  return r;
}

}  // namespace

RelationshipReport check_conservative_extension(const OntologyExpr& base, const OntologyExpr& ext,
                                                const Environment& env, const Bound& bound, const std::string& link) {
  return conservative_report(base, ext, std::nullopt, env, bound, link);
}

RelationshipReport check_definitional_extension(const OntologyExpr& base, const OntologyExpr& ext,
                                                const Environment& env, const std::string& link) {
  return definitional_report(base, ext, std::nullopt, env, link);
}

RelationshipReport check_nonconservativity_witness(const OntologyExpr& base, const OntologyExpr& ext,
                                                   const Environment& env, const Bound& bound,
                                                   const std::string& link) {
  return nonconservativity_report(base, ext, std::nullopt, env, bound, link);
}

RelationshipReport check_definable_equivalence(const LinkDef& link, const Environment& env, const Bound& bound) {
  const Theory a = flatten(link.source, env);
  const Theory b = flatten(link.target, env);
  const bool bridged = link.forward_bridge && link.backward_bridge;
  const Theory a_side = bridged ? flatten(OntologyExpr::extension(link.source, *link.backward_bridge), env) : a;
  const Theory b_side = bridged ? flatten(OntologyExpr::extension(link.target, *link.forward_bridge), env) : b;

  RelationshipReport forward =
      interpretation_report(link.name, LinkKind::DefinableEquivalence, a, b_side, link.symbol_map, bound, "forward ");
  RelationshipReport backward =
      interpretation_report(link.name, LinkKind::DefinableEquivalence, b, a_side, link.reverse_map, bound, "backward ");

  RelationshipReport r;
  r.link = link.name;
  r.kind = LinkKind::DefinableEquivalence;
  r.obligations = std::move(forward.obligations);
  for (auto& o : backward.obligations) r.obligations.push_back(std::move(o));

  if (bridged) {
    std::optional<NotDefinitionalInfo> failure;
    const Theory fwd = flatten(*link.forward_bridge, env);
    const Theory bwd = flatten(*link.backward_bridge, env);
    // forward bridge: a's symbols over b; backward bridge: b's symbols over a.
    const auto a_over_b = bridge_definitions(fwd, b.signature, failure, "forward bridge");
    const auto b_over_a = bridge_definitions(bwd, a.signature, failure, "backward bridge");
    if (failure) {
      r.not_definitional = failure;
    } else {
      auto [ca, cb] = common_pair(a, b);
      r.obligations.push_back(round_trip(link.name, "source", ca, cb.signature, b_over_a, a_over_b, bound));
      r.obligations.push_back(round_trip(link.name, "target", cb, ca.signature, a_over_b, b_over_a, bound));
    }
    if (link.symbol_map || link.reverse_map) {
      r.notes.push_back("round trips compare symbols by name; the symbol maps apply to the interpretations only");
    }
  } else {
    r.notes.push_back("no bridge theories given; round trips are the identity");
  }
  aggregate(r);
  if (r.not_definitional) r.overall = OverallStatus::Refuted;
  return r;
}

RelationshipReport check_module_inconsistency(const OntologyExpr& a, const OntologyExpr& b,
                                              const Environment& env, const Bound& bound, const std::string& link) {
  const Theory joint = flatten(OntologyExpr::union_of(a, b), env);
  ProofObligation ob;
  ob.kind = ObligationKind::ConsistencyGoal;
  ob.link = link;
  ob.origin = "union of both modules";
  Verdict v = check_consistency(joint, bound);
  RelationshipReport r;
  r.link = link;
  r.kind = LinkKind::ModuleInconsistency;
  if (v.status == VerdictStatus::ModelFound) {
    r.overall = OverallStatus::Refuted;
    r.witness = v.witness;
    r.failed_obligation = 0;
  } else if (v.searched_up_to) {
    r.overall = OverallStatus::VerifiedUpToBound;
    r.bound = v.searched_up_to;
  } else {
    r.overall = OverallStatus::Verified;
  }
  r.obligations.push_back({ob, std::move(v), {}});
  return r;
}

RelationshipReport verify_link(const LinkDef& link, const Environment& env, const Bound& bound) {
  switch (link.kind) {
    case LinkKind::Interpretation: return check_interpretation(link, env, bound);
    case LinkKind::ConservativeExtension:
      return conservative_report(link.source, link.target, link.symbol_map, env, bound, link.name);
    case LinkKind::DefinitionalExtension:
      return definitional_report(link.source, link.target, link.symbol_map, env, link.name);
    case LinkKind::NonconservativeExtension:
      return nonconservativity_report(link.source, link.target, link.symbol_map, env, bound, link.name);
    case LinkKind::DefinableEquivalence: return check_definable_equivalence(link, env, bound);
    case LinkKind::ModuleInconsistency:
      return check_module_inconsistency(link.source, link.target, env, bound, link.name);
  }
  throw DolError(ErrorKind::NonconformantDocument, "unknown link kind");
}

std::vector<RelationshipReport> verify_links(const std::vector<const LinkDef*>& links, const Environment& env,
                                             const Bound& bound) {
  std::vector<std::future<RelationshipReport>> futures;
  for (const LinkDef* link : links) {
    futures.push_back(std::async(std::launch::async, [link, &env, bound] { return verify_link(*link, env, bound); }));
  }
  std::vector<RelationshipReport> out;
  for (auto& f : futures) out.push_back(f.get());
  return out;
}

}  // namespace dol
