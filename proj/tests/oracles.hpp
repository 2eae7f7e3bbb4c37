#pragma once

// Brute-force reference implementations used to derive expected values in
// tests. Deliberately naive and independent of the library's evaluator,
// grounder and solver: structures are plain tuple sets and every
// interpretation is visited.

#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "dol/logic.hpp"

namespace oracle {

using dol::Concept;
using dol::ConceptKind;
using dol::Connective;
using dol::Formula;
using dol::Name;

struct Structure {
  int n = 1;
  std::map<Name, std::set<std::vector<int>>> rels;
  std::map<Name, int> consts;
};

inline Structure from_model(const dol::FiniteModel& m) {
  Structure s;
  s.n = m.domain_size;
  for (const auto& [name, rel] : m.relations) {
    auto& set = s.rels[name];
    const std::size_t cells = rel.cell_count();
    for (std::size_t i = 0; i < cells; ++i) {
      if (!rel.cell(i)) continue;
      // Decode the lexicographic cell index by hand.
      std::vector<int> t(static_cast<std::size_t>(rel.arity()));
      std::size_t rest = i;
      for (int k = rel.arity() - 1; k >= 0; --k) {
        t[static_cast<std::size_t>(k)] = static_cast<int>(rest % static_cast<std::size_t>(m.domain_size));
        rest /= static_cast<std::size_t>(m.domain_size);
      }
      set.insert(t);
    }
  }
  s.consts = m.constants;
  return s;
}

inline int term_value(const Structure& s, const dol::Term& t, const std::map<Name, int>& env) {
  if (t.is_variable()) return env.at(t.name);
  return s.consts.at(t.name);
}

inline bool eval(const Structure& s, const Formula& f, std::map<Name, int> env = {}) {
  switch (f.op()) {
    case Connective::True: return true;
    case Connective::False: return false;
    case Connective::Atom: {
      std::vector<int> t;
      for (const auto& a : f.args()) t.push_back(term_value(s, a, env));
      auto it = s.rels.find(f.predicate());
      return it != s.rels.end() && it->second.count(t) > 0;
    }
    case Connective::Equal: return term_value(s, f.args()[0], env) == term_value(s, f.args()[1], env);
    case Connective::Not: return !eval(s, f.operands()[0], env);
    case Connective::And:
      for (const auto& o : f.operands()) {
        if (!eval(s, o, env)) return false;
      }
      return true;
    case Connective::Or:
      for (const auto& o : f.operands()) {
        if (eval(s, o, env)) return true;
      }
      return false;
    case Connective::Implies: return !eval(s, f.operands()[0], env) || eval(s, f.operands()[1], env);
    case Connective::Iff: return eval(s, f.operands()[0], env) == eval(s, f.operands()[1], env);
    case Connective::Forall:
    case Connective::Exists: {
      const bool universal = f.op() == Connective::Forall;
      // Recursive expansion, one variable at a time.
      std::function<bool(std::size_t)> go = [&](std::size_t i) -> bool {
        if (i == f.variables().size()) return eval(s, f.operands()[0], env);
        for (int v = 0; v < s.n; ++v) {
          env[f.variables()[i]] = v;
          const bool r = go(i + 1);
          if (universal && !r) return false;
          if (!universal && r) return true;
        }
        return universal;
      };
      return go(0);
    }
  }
  return false;
}

/// Extension of an EL concept, computed set-theoretically.
inline std::set<int> extension(const Structure& s, const Concept& c) {
  std::set<int> out;
  switch (c.kind()) {
    case ConceptKind::Top:
      for (int i = 0; i < s.n; ++i) out.insert(i);
      break;
    case ConceptKind::Name:
      if (auto it = s.rels.find(c.name()); it != s.rels.end()) {
        for (const auto& t : it->second) out.insert(t[0]);
      }
      break;
    case ConceptKind::Intersection: {
      for (int i = 0; i < s.n; ++i) out.insert(i);
      for (const auto& op : c.operands()) {
        std::set<int> keep;
        const auto e = extension(s, op);
        for (int x : out) {
          if (e.count(x)) keep.insert(x);
        }
        out = keep;
      }
      break;
    }
    case ConceptKind::Existential: {
      const auto filler = extension(s, c.operands()[0]);
      if (auto it = s.rels.find(c.name()); it != s.rels.end()) {
        for (const auto& t : it->second) {
          if (filler.count(t[1])) out.insert(t[0]);
        }
      }
      break;
    }
  }
  return out;
}

inline bool holds(const Structure& s, const dol::Subsumption& sub) {
  const auto a = extension(s, sub.sub);
  const auto b = extension(s, sub.super);
  for (int x : a) {
    if (!b.count(x)) return false;
  }
  return true;
}

inline bool holds(const Structure& s, const dol::Sentence& sentence) {
  return sentence.is_subsumption() ? holds(s, sentence.subsumption()) : eval(s, sentence.formula());
}

/// Every structure with `n` elements over the given predicates and
/// constants, visited by counting through all cell bitmasks.
inline void for_each_structure(const std::vector<std::pair<Name, int>>& preds, const std::vector<Name>& consts, int n,
                               const std::function<void(const Structure&)>& visit) {
  std::vector<std::vector<std::vector<int>>> cells;
  std::size_t total = 0;
  for (const auto& [name, arity] : preds) {
    std::vector<std::vector<int>> tuples{{}};
    for (int k = 0; k < arity; ++k) {
      std::vector<std::vector<int>> next;
      for (const auto& t : tuples) {
        for (int v = 0; v < n; ++v) {
          auto u = t;
          u.push_back(v);
          next.push_back(u);
        }
      }
      tuples = next;
    }
    total += tuples.size();
    cells.push_back(tuples);
  }
  std::size_t const_combos = 1;
  for (std::size_t i = 0; i < consts.size(); ++i) const_combos *= static_cast<std::size_t>(n);
  for (std::size_t cc = 0; cc < const_combos; ++cc) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << total); ++mask) {
      Structure s;
      s.n = n;
      std::size_t bit = 0;
      for (std::size_t p = 0; p < preds.size(); ++p) {
        auto& set = s.rels[preds[p].first];
        for (const auto& t : cells[p]) {
          if (mask >> bit & 1) set.insert(t);
          ++bit;
        }
      }
      std::size_t rest = cc;
      for (const auto& c : consts) {
        s.consts[c] = static_cast<int>(rest % static_cast<std::size_t>(n));
        rest /= static_cast<std::size_t>(n);
      }
      visit(s);
    }
  }
}

inline std::vector<std::pair<Name, int>> predicate_list(const dol::Signature& sig) {
  return {sig.predicates().begin(), sig.predicates().end()};
}

/// Number of n-element structures satisfying every sentence.
inline std::size_t count_models(const dol::Signature& sig, const std::vector<dol::Sentence>& axioms, int n) {
  std::size_t count = 0;
  const std::vector<Name> consts(sig.constants().begin(), sig.constants().end());
  for_each_structure(predicate_list(sig), consts, n, [&](const Structure& s) {
    for (const auto& ax : axioms) {
      if (!holds(s, ax)) return;
    }
    ++count;
  });
  return count;
}

/// Binary relations on {0..n-1} as bitmasks, filtered by order properties
/// written out directly.
inline std::size_t count_orders(int n, bool linear) {
  auto has = [n](std::uint32_t mask, int x, int y) { return (mask >> (x * n + y) & 1) != 0; };
  std::size_t count = 0;
  for (std::uint32_t mask = 0; mask < (1u << (n * n)); ++mask) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      ok = has(mask, x, x);
      for (int y = 0; y < n && ok; ++y) {
        if (x != y && has(mask, x, y) && has(mask, y, x)) ok = false;
        if (linear && x != y && !has(mask, x, y) && !has(mask, y, x)) ok = false;
        for (int z = 0; z < n && ok; ++z) {
          if (has(mask, x, y) && has(mask, y, z) && !has(mask, x, z)) ok = false;
        }
      }
    }
    if (ok) ++count;
  }
  return count;
}

/// Propositional entailment by truth table over `atoms`.
inline bool truth_table_entails(const std::vector<Formula>& premises, const Formula& goal,
                                const std::vector<Name>& atoms) {
  for (std::uint32_t mask = 0; mask < (1u << atoms.size()); ++mask) {
    Structure s;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if (mask >> i & 1) s.rels[atoms[i]].insert(std::vector<int>{});
    }
    bool premises_hold = true;
    for (const auto& p : premises) premises_hold = premises_hold && eval(s, p);
    if (premises_hold && !eval(s, goal)) return false;
  }
  return true;
}

/// Can `base` be expanded by relations for `fresh` so that every formula
/// holds? Tries every interpretation of the fresh predicates.
inline bool expandable(const Structure& base, const std::vector<std::pair<Name, int>>& fresh,
                       const std::vector<Formula>& formulas) {
  bool found = false;
  for_each_structure(fresh, {}, base.n, [&](const Structure& extra) {
    if (found) return;
    Structure s = base;
    for (const auto& [name, set] : extra.rels) s.rels[name] = set;
    for (const auto& f : formulas) {
      if (!eval(s, f)) return;
    }
    found = true;
  });
  return found;
}

// --- random sentences -----------------------------------------------------------

inline Formula random_prop(std::mt19937& rng, const std::vector<Name>& atoms, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 7);
  const int k = pick(rng);
  if (k == 0 || k == 1) {
    std::uniform_int_distribution<std::size_t> a(0, atoms.size() - 1);
    return Formula::atom(atoms[a(rng)]);
  }
  auto sub = [&] { return random_prop(rng, atoms, depth - 1); };
  switch (k) {
    case 2: return Formula::negation(sub());
    case 3: return Formula::conjunction({sub(), sub()});
    case 4: return Formula::disjunction({sub(), sub()});
    case 5: return Formula::implication(sub(), sub());
    case 6: return Formula::biconditional(sub(), sub());
    default: return std::uniform_int_distribution<int>(0, 1)(rng) ? Formula::truth() : Formula::falsity();
  }
}

inline Concept random_concept(std::mt19937& rng, const std::vector<Name>& concepts, const Name& role, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 4);
  switch (pick(rng)) {
    case 0: return Concept::top();
    case 1: {
      std::uniform_int_distribution<std::size_t> a(0, concepts.size() - 1);
      return Concept::named(concepts[a(rng)]);
    }
    case 2:
    case 3:
      return Concept::intersection({random_concept(rng, concepts, role, depth - 1),
                                    random_concept(rng, concepts, role, depth - 1)});
    default: return Concept::existential(role, random_concept(rng, concepts, role, depth - 1));
  }
}

/// Closed first-order formula over unary P, Q, binary R and constant c.
inline Formula random_fol(std::mt19937& rng, int depth, std::vector<Name> bound = {}) {
  auto term = [&]() {
    std::uniform_int_distribution<std::size_t> pick(0, bound.size());
    const std::size_t i = pick(rng);
    return i == bound.size() ? dol::Term::constant("c") : dol::Term::variable(bound[i]);
  };
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 2 : 8);
  switch (pick(rng)) {
    case 0: return Formula::atom(std::uniform_int_distribution<int>(0, 1)(rng) ? "P" : "Q", {term()});
    case 1: return Formula::atom("R", {term(), term()});
    case 2: return Formula::equal(term(), term());
    case 3: return Formula::negation(random_fol(rng, depth - 1, bound));
    case 4: return Formula::conjunction({random_fol(rng, depth - 1, bound), random_fol(rng, depth - 1, bound)});
    case 5: return Formula::disjunction({random_fol(rng, depth - 1, bound), random_fol(rng, depth - 1, bound)});
    case 6: return Formula::implication(random_fol(rng, depth - 1, bound), random_fol(rng, depth - 1, bound));
    default: {
      const Name v = "v" + std::to_string(bound.size());
      bound.push_back(v);
      Formula body = random_fol(rng, depth - 1, bound);
      return pick(rng) % 2 ? Formula::forall({v}, body) : Formula::exists({v}, body);
    }
  }
}

}  // namespace oracle
