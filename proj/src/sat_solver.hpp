#pragma once

// Small DPLL solver with two watched literals and chronological
// backtracking. Built for exhaustive model enumeration, not for hard
// instances: there is no clause learning.

#include <cstdint>
#include <functional>
#include <vector>

namespace dol::detail {

/// Literal encoding: 2 * var + (negated ? 1 : 0).
using Lit = int;
inline Lit pos_lit(int var) { return 2 * var; }
inline Lit neg_lit(int var) { return 2 * var + 1; }
inline int lit_var(Lit l) { return l >> 1; }
inline Lit negate(Lit l) { return l ^ 1; }

class SatSolver {
 public:
  explicit SatSolver(int num_vars);

  int num_vars() const noexcept { return static_cast<int>(value_.size()); }
  void add_clause(std::vector<Lit> clause);

  /// Calls `on_model` for every assignment of variables [0, primary) that
  /// extends to a satisfying assignment, in lexicographic order with variable
  /// 0 most significant and false < true. Stops early when `on_model`
  /// returns false. The vector holds 0/1 per variable.
  void enumerate(int primary, const std::function<bool(const std::vector<std::int8_t>&)>& on_model);

 private:
  std::int8_t lit_value(Lit l) const {
    const std::int8_t v = value_[static_cast<std::size_t>(lit_var(l))];
    return v < 0 ? v : static_cast<std::int8_t>(v ^ (l & 1));
  }
  void assign(Lit l);
  bool propagate();
  void undo_to(std::size_t trail_size);
  bool backtrack(bool skip_aux);

  std::vector<std::int8_t> value_;
  std::vector<std::vector<Lit>> clauses_;
  std::vector<std::vector<int>> watches_;
  std::vector<Lit> units_;
  bool empty_clause_ = false;

  std::vector<Lit> trail_;
  std::size_t qhead_ = 0;
  struct Level {
    std::size_t trail_start;
    bool flipped;
    bool aux;
  };
  std::vector<Level> levels_;
};

}  // namespace dol::detail
