#include "grounding.hpp"

#include <algorithm>

namespace dol::detail {

Circuit::Circuit(int cells) : cells_(cells) {}

Lit Circuit::conj(std::vector<Lit> lits) {
  std::sort(lits.begin(), lits.end());
  lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
  std::vector<Lit> kept;
  for (std::size_t i = 0; i < lits.size(); ++i) {
    if (lits[i] == kFalse) return kFalse;
    if (lits[i] == kTrue) continue;
    if (i + 1 < lits.size() && lits[i + 1] == negate(lits[i])) return kFalse;
    kept.push_back(lits[i]);
  }
  if (kept.empty()) return kTrue;
  if (kept.size() == 1) return kept[0];
  auto [it, inserted] = cache_.emplace(kept, 0);
  if (inserted) {
    it->second = 1 + cells_ + static_cast<int>(gates_.size());
    gates_.push_back(std::move(kept));
  }
  return pos_lit(it->second);
}

Lit Circuit::disj(std::vector<Lit> lits) {
  for (Lit& l : lits) l = negate(l);
  return negate(conj(std::move(lits)));
}

Lit Circuit::iff(Lit a, Lit b) { return disj({conj({a, b}), conj({negate(a), negate(b)})}); }

void Circuit::encode(Lit root, SatSolver& solver) const {
  solver.add_clause({kTrue});
  const int first_gate = 1 + cells_;
  std::vector<bool> seen(gates_.size(), false);
  std::vector<int> stack;
  auto push = [&](Lit l) {
    const int node = lit_var(l);
    if (node >= first_gate && !seen[static_cast<std::size_t>(node - first_gate)]) {
      seen[static_cast<std::size_t>(node - first_gate)] = true;
      stack.push_back(node);
    }
  };
  push(root);
  while (!stack.empty()) {
    const int node = stack.back();
    stack.pop_back();
    const auto& children = gates_[static_cast<std::size_t>(node - first_gate)];
    std::vector<Lit> back{pos_lit(node)};
    for (Lit c : children) {
      solver.add_clause({neg_lit(node), c});
      back.push_back(negate(c));
      push(c);
    }
    solver.add_clause(std::move(back));
  }
  solver.add_clause({root});
}

namespace {

class Grounder {
 public:
  Grounder(const GroundProblem& p, int n, const std::map<Name, int>& constants)
      : problem_(p), n_(n), constants_(constants) {
    int offset = 0;
    for (const auto& [name, arity] : p.vocabulary.predicates()) {
      if (p.fixed && p.fixed->relations.contains(name)) continue;
      int cells = 1;
      for (int i = 0; i < arity; ++i) cells *= n;
      offsets_[name] = offset;
      order_.push_back({name, arity});
      offset += cells;
    }
    cells_ = offset;
    circuit_.emplace(cells_);
  }

  int cells() const noexcept { return cells_; }
  Circuit& circuit() { return *circuit_; }
  const std::vector<std::pair<Name, int>>& order() const noexcept { return order_; }

  Lit ground_all() {
    std::vector<Lit> parts;
    for (const auto& f : problem_.formulas) {
      const Lit l = ground(f);
      if (l == Circuit::kFalse) return l;
      parts.push_back(l);
    }
    return circuit_->conj(std::move(parts));
  }

 private:
  int term_value(const Term& t) const {
    if (t.is_variable()) {
      for (auto it = env_.rbegin(); it != env_.rend(); ++it) {
        if (it->first == t.name) return it->second;
      }
      throw DolError(ErrorKind::UndeclaredSymbol, "free variable '" + t.name + "'");
    }
    auto it = constants_.find(t.name);
    if (it == constants_.end()) throw DolError(ErrorKind::UndeclaredSymbol, "uninterpreted constant '" + t.name + "'");
    return it->second;
  }

  Lit ground(const Formula& f) {
    switch (f.op()) {
      case Connective::True: return Circuit::kTrue;
      case Connective::False: return Circuit::kFalse;
      case Connective::Atom: {
        std::vector<int> tuple;
        tuple.reserve(f.args().size());
        for (const auto& t : f.args()) tuple.push_back(term_value(t));
        if (problem_.fixed) {
          if (auto it = problem_.fixed->relations.find(f.predicate()); it != problem_.fixed->relations.end()) {
            return it->second.contains(tuple) ? Circuit::kTrue : Circuit::kFalse;
          }
        }
        auto it = offsets_.find(f.predicate());
        if (it == offsets_.end()) {
          throw DolError(ErrorKind::UndeclaredSymbol, "predicate '" + f.predicate() + "' is not in the vocabulary");
        }
        std::size_t index = 0;
        for (int v : tuple) index = index * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
        return circuit_->cell(it->second + static_cast<int>(index));
      }
      case Connective::Equal:
        return term_value(f.args()[0]) == term_value(f.args()[1]) ? Circuit::kTrue : Circuit::kFalse;
      case Connective::Not: return negate(ground(f.operands()[0]));
      case Connective::And:
      case Connective::Or: {
        const bool is_and = f.op() == Connective::And;
        const Lit absorbing = is_and ? Circuit::kFalse : Circuit::kTrue;
        std::vector<Lit> parts;
        for (const auto& op : f.operands()) {
          const Lit l = ground(op);
          if (l == absorbing) return absorbing;
          parts.push_back(l);
        }
        return is_and ? circuit_->conj(std::move(parts)) : circuit_->disj(std::move(parts));
      }
      case Connective::Implies: {
        const Lit a = ground(f.operands()[0]);
        if (a == Circuit::kFalse) return Circuit::kTrue;
        return circuit_->disj({negate(a), ground(f.operands()[1])});
      }
      case Connective::Iff: return circuit_->iff(ground(f.operands()[0]), ground(f.operands()[1]));
      case Connective::Forall:
      case Connective::Exists: {
        const bool universal = f.op() == Connective::Forall;
        const Lit absorbing = universal ? Circuit::kFalse : Circuit::kTrue;
        const auto& vars = f.variables();
        if (vars.empty()) return ground(f.operands()[0]);
        const std::size_t base = env_.size();
        for (const auto& v : vars) env_.emplace_back(v, 0);
        std::vector<Lit> parts;
        bool absorbed = false;
        while (true) {
          const Lit l = ground(f.operands()[0]);
          if (l == absorbing) {
            absorbed = true;
            break;
          }
          parts.push_back(l);
          // Odometer over the bound variables, last variable fastest.
          std::size_t k = env_.size();
          while (k > base) {
            --k;
            if (++env_[k].second < n_) break;
            env_[k].second = 0;
          }
          if (k == base && env_[base].second == 0) break;
        }
        env_.resize(base);
        if (absorbed) return absorbing;
        return universal ? circuit_->conj(std::move(parts)) : circuit_->disj(std::move(parts));
      }
    }
    return Circuit::kFalse;
  }

  const GroundProblem& problem_;
  int n_;
  const std::map<Name, int>& constants_;
  std::map<Name, int> offsets_;
  std::vector<std::pair<Name, int>> order_;
  int cells_ = 0;
  std::optional<Circuit> circuit_;
  std::vector<std::pair<Name, int>> env_;
};

}  // namespace

void enumerate_ground(const GroundProblem& problem, int n,
                      const std::function<bool(const FiniteModel&)>& visit) {
  std::vector<Name> free_constants;
  std::map<Name, int> constants;
  for (const auto& c : problem.vocabulary.constants()) {
    if (problem.fixed) {
      if (auto it = problem.fixed->constants.find(c); it != problem.fixed->constants.end()) {
        constants[c] = it->second;
        continue;
      }
    }
    free_constants.push_back(c);
    constants[c] = 0;
  }

  while (true) {
    Grounder g(problem, n, constants);
    const Lit root = g.ground_all();
    bool stop = false;
    if (root != Circuit::kFalse) {
      SatSolver solver(g.circuit().node_count());
      g.circuit().encode(root, solver);
      solver.enumerate(1 + g.cells(), [&](const std::vector<std::int8_t>& values) {
        FiniteModel m;
        m.domain_size = n;
        m.constants = constants;
        if (problem.fixed) m.relations = problem.fixed->relations;
        int var = 1;
        for (const auto& [name, arity] : g.order()) {
          Relation r(arity, n);
          for (std::size_t i = 0; i < r.cell_count(); ++i) r.set_cell(i, values[static_cast<std::size_t>(var++)] == 1);
          m.relations[name] = std::move(r);
        }
        if (!visit(m)) stop = true;
        return !stop;
      });
    }
    if (stop) return;
    std::size_t k = free_constants.size();
    while (k > 0) {
      --k;
      if (++constants[free_constants[k]] < n) break;
      constants[free_constants[k]] = 0;
    }
    if (free_constants.empty() || (k == 0 && constants[free_constants[0]] == 0)) return;
  }
}

}  // namespace dol::detail
