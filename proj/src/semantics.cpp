#include "dol/semantics.hpp"

#include <array>

namespace dol {

namespace {

Name fresh_variable(std::size_t depth) {
  static constexpr std::array<const char*, 6> kNames = {"x", "y", "z", "u", "v", "w"};
  if (depth < kNames.size()) return kNames[depth];
  return "x" + std::to_string(depth);
}

Formula concept_reading_at(const Concept& c, const Name& var, std::size_t depth) {
  switch (c.kind()) {
    case ConceptKind::Top: return Formula::truth();
    case ConceptKind::Name: return Formula::atom(c.name(), {Term::variable(var)});
    case ConceptKind::Intersection: {
      std::vector<Formula> parts;
      parts.reserve(c.operands().size());
      for (const auto& op : c.operands()) parts.push_back(concept_reading_at(op, var, depth));
      return Formula::conjunction(std::move(parts));
    }
    case ConceptKind::Existential: {
      const Name next = fresh_variable(depth + 1);
      auto edge = Formula::atom(c.name(), {Term::variable(var), Term::variable(next)});
      return Formula::exists(
          {next}, Formula::conjunction({edge, concept_reading_at(c.operands().front(), next, depth + 1)}));
    }
  }
  return Formula::truth();
}

std::size_t concept_depth(const Name& var) {
  static constexpr std::array<const char*, 6> kNames = {"x", "y", "z", "u", "v", "w"};
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (var == kNames[i]) return i;
  }
  if (var.size() > 1 && var[0] == 'x') {
    try {
      return static_cast<std::size_t>(std::stoul(var.substr(1)));
    } catch (const std::exception&) {
    }
  }
  return 0;
}

// Formula compiled against one model: variables become slots, predicates
// become table pointers.
class CompiledFormula {
 public:
  CompiledFormula(const FiniteModel& model, const Formula& f,
                  const std::map<Name, int>& free_vars)
      : model_(model) {
    std::map<Name, int> scope;
    for (const auto& [name, value] : free_vars) {
      scope[name] = static_cast<int>(initial_.size());
      initial_.push_back(value);
    }
    slot_count_ = static_cast<int>(initial_.size());
    root_ = compile(f, scope);
  }

  bool run() const {
    std::vector<int> env(static_cast<std::size_t>(slot_count_), 0);
    std::copy(initial_.begin(), initial_.end(), env.begin());
    std::vector<int> scratch;
    return eval(root_, env, scratch);
  }

 private:
  struct Arg {
    bool is_slot;
    int value;  // slot index or domain element
  };
  struct Node {
    Connective op;
    const Relation* relation = nullptr;
    std::vector<Arg> args;
    std::vector<int> children;
    std::vector<int> slots;
  };

  int compile(const Formula& f, std::map<Name, int>& scope) {
    Node node;
    node.op = f.op();
    switch (f.op()) {
      case Connective::Atom: {
        auto it = model_.relations.find(f.predicate());
        if (it == model_.relations.end()) {
          throw DolError(ErrorKind::UndeclaredSymbol,
                         "model does not interpret '" + f.predicate() + "'");
        }
        if (it->second.arity() != static_cast<int>(f.args().size())) {
          throw DolError(ErrorKind::ArityClash, "'" + f.predicate() + "' applied to " +
                                                    std::to_string(f.args().size()) +
                                                    " arguments but interpreted with arity " +
                                                    std::to_string(it->second.arity()));
        }
        node.relation = &it->second;
        node.args = compile_args(f.args(), scope);
        break;
      }
      case Connective::Equal: node.args = compile_args(f.args(), scope); break;
      case Connective::Forall:
      case Connective::Exists: {
        std::map<Name, int> inner = scope;
        for (const auto& v : f.variables()) {
          inner[v] = slot_count_;
          node.slots.push_back(slot_count_++);
        }
        node.children.push_back(compile(f.operands().front(), inner));
        break;
      }
      default:
        for (const auto& sub : f.operands()) node.children.push_back(compile(sub, scope));
    }
    nodes_.push_back(std::move(node));
    return static_cast<int>(nodes_.size()) - 1;
  }

  std::vector<Arg> compile_args(const std::vector<Term>& terms, const std::map<Name, int>& scope) {
    std::vector<Arg> out;
    for (const auto& t : terms) {
      if (t.is_variable()) {
        auto it = scope.find(t.name);
        if (it == scope.end()) {
          throw DolError(ErrorKind::UndeclaredSymbol, "unbound variable '" + t.name + "'");
        }
        out.push_back({true, it->second});
      } else {
        auto it = model_.constants.find(t.name);
        if (it == model_.constants.end()) {
          throw DolError(ErrorKind::UndeclaredSymbol, "model does not interpret constant '" + t.name + "'");
        }
        out.push_back({false, it->second});
      }
    }
    return out;
  }

  static int value(const Arg& a, const std::vector<int>& env) {
    return a.is_slot ? env[static_cast<std::size_t>(a.value)] : a.value;
  }

  bool eval(int index, std::vector<int>& env, std::vector<int>& scratch) const {
    const Node& n = nodes_[static_cast<std::size_t>(index)];
    switch (n.op) {
      case Connective::True: return true;
      case Connective::False: return false;
      case Connective::Atom: {
        std::size_t cell = 0;
        const auto d = static_cast<std::size_t>(model_.domain_size);
        for (const auto& a : n.args) cell = cell * d + static_cast<std::size_t>(value(a, env));
        return n.relation->cell(cell);
      }
      case Connective::Equal: return value(n.args[0], env) == value(n.args[1], env);
      case Connective::Not: return !eval(n.children[0], env, scratch);
      case Connective::And:
        for (int c : n.children) {
          if (!eval(c, env, scratch)) return false;
        }
        return true;
      case Connective::Or:
        for (int c : n.children) {
          if (eval(c, env, scratch)) return true;
        }
        return false;
      case Connective::Implies:
        return !eval(n.children[0], env, scratch) || eval(n.children[1], env, scratch);
      case Connective::Iff: return eval(n.children[0], env, scratch) == eval(n.children[1], env, scratch);
      case Connective::Forall:
      case Connective::Exists: return quantify(n, 0, env, scratch);
    }
    return false;
  }

  bool quantify(const Node& n, std::size_t k, std::vector<int>& env, std::vector<int>& scratch) const {
    const bool universal = n.op == Connective::Forall;
    if (k == n.slots.size()) return eval(n.children[0], env, scratch);
    const auto slot = static_cast<std::size_t>(n.slots[k]);
    for (int v = 0; v < model_.domain_size; ++v) {
      env[slot] = v;
      const bool r = quantify(n, k + 1, env, scratch);
      if (universal && !r) return false;
      if (!universal && r) return true;
    }
    return universal;
  }

  const FiniteModel& model_;
  std::vector<Node> nodes_;
  std::vector<int> initial_;
  int slot_count_ = 0;
  int root_ = 0;
};

Term rename_term(const Term& t, const SignatureMorphism& m) {
  if (t.is_variable()) return t;
  auto it = m.constant_map().find(t.name);
  if (it == m.constant_map().end()) {
    throw DolError(ErrorKind::UndeclaredSymbol, "constant '" + t.name + "' is outside the morphism's domain");
  }
  return Term::constant(it->second);
}

const Name& rename_predicate(const Name& p, const SignatureMorphism& m) {
  auto it = m.predicate_map().find(p);
  if (it == m.predicate_map().end()) {
    throw DolError(ErrorKind::UndeclaredSymbol, "'" + p + "' is outside the morphism's domain");
  }
  return it->second;
}

Formula rename(const Formula& f, const SignatureMorphism& m) {
  switch (f.op()) {
    case Connective::True:
    case Connective::False: return f;
    case Connective::Atom: {
      std::vector<Term> args;
      for (const auto& t : f.args()) args.push_back(rename_term(t, m));
      return Formula::atom(rename_predicate(f.predicate(), m), std::move(args));
    }
    case Connective::Equal: return Formula::equal(rename_term(f.args()[0], m), rename_term(f.args()[1], m));
    case Connective::Not: return Formula::negation(rename(f.operands()[0], m));
    case Connective::And:
    case Connective::Or: {
      std::vector<Formula> ops;
      for (const auto& sub : f.operands()) ops.push_back(rename(sub, m));
      return f.op() == Connective::And ? Formula::conjunction(std::move(ops))
                                       : Formula::disjunction(std::move(ops));
    }
    case Connective::Implies:
      return Formula::implication(rename(f.operands()[0], m), rename(f.operands()[1], m));
    case Connective::Iff:
      return Formula::biconditional(rename(f.operands()[0], m), rename(f.operands()[1], m));
    case Connective::Forall: return Formula::forall(f.variables(), rename(f.operands()[0], m));
    case Connective::Exists: return Formula::exists(f.variables(), rename(f.operands()[0], m));
  }
  return f;
}

Concept rename(const Concept& c, const SignatureMorphism& m) {
  switch (c.kind()) {
    case ConceptKind::Top: return c;
    case ConceptKind::Name: return Concept::named(rename_predicate(c.name(), m));
    case ConceptKind::Intersection: {
      std::vector<Concept> ops;
      for (const auto& sub : c.operands()) ops.push_back(rename(sub, m));
      return Concept::intersection(std::move(ops));
    }
    case ConceptKind::Existential:
      return Concept::existential(rename_predicate(c.name(), m), rename(c.operands().front(), m));
  }
  return c;
}

}  // namespace

Formula concept_reading(const Concept& c, const Name& var) {
  return concept_reading_at(c, var, concept_depth(var));
}

Formula first_order_reading(const Sentence& sentence) {
  if (!sentence.is_subsumption()) return sentence.formula();
  const auto& s = sentence.subsumption();
  return Formula::forall({"x"}, Formula::implication(concept_reading(s.sub, "x"),
                                                     concept_reading(s.super, "x")));
}

bool evaluate(const FiniteModel& model, const Formula& formula, const std::map<Name, int>& assignment) {
  return CompiledFormula(model, formula, assignment).run();
}

bool satisfies(const FiniteModel& model, const Sentence& sentence) {
  return evaluate(model, first_order_reading(sentence));
}

Sentence translate_sentence(const SignatureMorphism& morphism, const Sentence& sentence) {
  if (sentence.logic() != morphism.source().logic()) {
    throw DolError(ErrorKind::LogicMismatch, "sentence logic differs from the morphism's logic");
  }
  if (sentence.is_subsumption()) {
    const auto& s = sentence.subsumption();
    return Sentence(Subsumption{rename(s.sub, morphism), rename(s.super, morphism)});
  }
  return Sentence(morphism.target().logic(), rename(sentence.formula(), morphism));
}

FiniteModel reduct(const SignatureMorphism& morphism, const FiniteModel& model) {
  FiniteModel out;
  out.domain_size = model.domain_size;
  for (const auto& [name, image] : morphism.predicate_map()) {
    auto it = model.relations.find(image);
    if (it == model.relations.end()) {
      throw DolError(ErrorKind::UndeclaredSymbol, "model does not interpret '" + image + "'");
    }
    out.relations.emplace(name, it->second);
  }
  for (const auto& [name, image] : morphism.constant_map()) {
    auto it = model.constants.find(image);
    if (it == model.constants.end()) {
      throw DolError(ErrorKind::UndeclaredSymbol, "model does not interpret constant '" + image + "'");
    }
    out.constants.emplace(name, it->second);
  }
  return out;
}

Signature signature_union(const Signature& a, const Signature& b) {
  if (a.logic() != b.logic()) {
    throw DolError(ErrorKind::LogicMismatch, "cannot unite signatures of " +
                                                 std::string(to_string(a.logic())) + " and " +
                                                 std::string(to_string(b.logic())));
  }
  Signature out = a;
  for (const auto& [name, arity] : b.predicates()) out.add_predicate(name, arity);
  for (const auto& c : b.constants()) out.add_constant(c);
  return out;
}

}  // namespace dol
