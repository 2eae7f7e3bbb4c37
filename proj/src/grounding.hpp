#pragma once

// Grounds first-order formulas over a fixed finite domain into a
// hash-consed and-inverter circuit, and encodes that circuit as CNF.

#include <map>
#include <vector>

#include "dol/logic.hpp"
#include "sat_solver.hpp"

namespace dol::detail {

/// Node 0 is the constant true; nodes 1..cells are relation cells; the rest
/// are AND gates. Literals use the SatSolver encoding over node ids.
class Circuit {
 public:
  static constexpr Lit kTrue = 0;
  static constexpr Lit kFalse = 1;

  explicit Circuit(int cells);

  Lit cell(int index) const { return pos_lit(index + 1); }
  Lit conj(std::vector<Lit> lits);
  Lit disj(std::vector<Lit> lits);
  Lit iff(Lit a, Lit b);

  int node_count() const noexcept { return 1 + cells_ + static_cast<int>(gates_.size()); }

  /// Tseitin clauses for every gate reachable from `root`, plus `root` itself
  /// as a unit. Variables 1..cells stay the cell variables.
  void encode(Lit root, SatSolver& solver) const;

 private:
  int cells_;
  std::vector<std::vector<Lit>> gates_;
  std::map<std::vector<Lit>, int> cache_;
};

/// A finite-domain satisfiability problem: the conjunction of `formulas`
/// over the vocabulary `vocabulary`, where predicates and constants listed
/// in `fixed` keep the interpretation given there.
struct GroundProblem {
  Signature vocabulary;
  std::vector<Formula> formulas;
  const FiniteModel* fixed = nullptr;
};

/// Enumerates models of size `n` in canonical order: constants in lexicographic
/// order of their values (first constant most significant), then relation
/// cells ordered by predicate name and tuple. Stops when `visit` returns false.
void enumerate_ground(const GroundProblem& problem, int n,
                      const std::function<bool(const FiniteModel&)>& visit);

}  // namespace dol::detail
