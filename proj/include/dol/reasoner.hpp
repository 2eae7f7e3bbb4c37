#pragma once

// Bounded finite-model reasoning. Complete for propositional theories;
// for first-order theories every answer is relative to the domain-size bound.

#include <functional>
#include <optional>
#include <vector>

#include "dol/logic.hpp"

namespace dol {

struct Bound {
  int max_domain_size = 3;
  /// Cap on enumerated models per domain size.
  std::optional<std::size_t> max_models;

  /// Throws std::invalid_argument unless max_domain_size >= 1.
  Bound(int max_size = 3, std::optional<std::size_t> cap = std::nullopt);
};

enum class VerdictStatus { Proved, Disproved, NoCounterexampleUpTo, ModelFound, NoModelUpTo };

std::string_view to_string(VerdictStatus status);

struct Verdict {
  VerdictStatus status = VerdictStatus::NoModelUpTo;
  /// Countermodel for Disproved, model for ModelFound.
  std::optional<FiniteModel> witness;
  /// Largest domain size searched; empty when the answer is complete
  /// (propositional theories).
  std::optional<int> searched_up_to;
  Bound bound_used;
};

/// Models of `theory` with exactly `domain_size` elements, in canonical
/// order: constants first, then predicate tables by predicate name, each
/// table compared cell by cell in lexicographic tuple order with false
/// before true. Propositional theories always use one element. Stop by
/// returning false from `visit`.
void enumerate_models(const Theory& theory, int domain_size,
                      const std::function<bool(const FiniteModel&)>& visit);
std::vector<FiniteModel> enumerate_models(const Theory& theory, int domain_size,
                                          std::optional<std::size_t> max_models = std::nullopt);
std::size_t count_models(const Theory& theory, int domain_size);

/// Prop: Proved or Disproved. First-order: the least countermodel of size
/// up to the bound (Disproved), else NoCounterexampleUpTo.
Verdict bounded_entailment(const Theory& theory, const Sentence& goal, const Bound& bound = Bound());

/// ModelFound at the least domain size that admits a model, else NoModelUpTo.
Verdict check_consistency(const Theory& theory, const Bound& bound = Bound());

/// Least model of `theory` agreeing with `base` on every symbol `base`
/// interprets, over the same domain; nullopt if there is none.
std::optional<FiniteModel> find_expansion(const Theory& theory, const FiniteModel& base);

}  // namespace dol
