#include "dol/reasoner.hpp"

#include <stdexcept>

#include "dol/semantics.hpp"
#include "grounding.hpp"

namespace dol {

Bound::Bound(int max_size, std::optional<std::size_t> cap) : max_domain_size(max_size), max_models(cap) {
  if (max_size < 1) throw std::invalid_argument("bound must be at least 1");
}

std::string_view to_string(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::Proved: return "Proved";
    case VerdictStatus::Disproved: return "Disproved";
    case VerdictStatus::NoCounterexampleUpTo: return "NoCounterexampleUpTo";
    case VerdictStatus::ModelFound: return "ModelFound";
    case VerdictStatus::NoModelUpTo: return "NoModelUpTo";
  }
  return "?";
}

namespace {

// Vocabulary without a logic restriction, so that readings of EL and Prop
// sentences can share it.
void add_vocabulary(Signature& into, const Signature& from) {
  for (const auto& [name, arity] : from.predicates()) into.add_predicate(name, arity);
  for (const auto& c : from.constants()) into.add_constant(c);
}

detail::GroundProblem problem_for(const Theory& theory) {
  detail::GroundProblem p;
  p.vocabulary = Signature(LogicId::FOLEQ);
  add_vocabulary(p.vocabulary, theory.signature);
  for (const auto& ax : theory.axioms) {
    add_vocabulary(p.vocabulary, symbols_of(ax));
    p.formulas.push_back(first_order_reading(ax));
  }
  return p;
}

std::optional<FiniteModel> first_model(const detail::GroundProblem& p, int n) {
  std::optional<FiniteModel> found;
  detail::enumerate_ground(p, n, [&](const FiniteModel& m) {
    found = m;
    return false;
  });
  return found;
}

}  // namespace

void enumerate_models(const Theory& theory, int domain_size,
                      const std::function<bool(const FiniteModel&)>& visit) {
  if (domain_size < 1) throw std::invalid_argument("domain size must be at least 1");
  const int n = theory.logic() == LogicId::Prop ? 1 : domain_size;
  detail::enumerate_ground(problem_for(theory), n, visit);
}

std::vector<FiniteModel> enumerate_models(const Theory& theory, int domain_size,
                                          std::optional<std::size_t> max_models) {
  std::vector<FiniteModel> out;
  if (max_models && *max_models == 0) return out;
  enumerate_models(theory, domain_size, [&](const FiniteModel& m) {
    out.push_back(m);
    return !max_models || out.size() < *max_models;
  });
  return out;
}

std::size_t count_models(const Theory& theory, int domain_size) {
  std::size_t count = 0;
  enumerate_models(theory, domain_size, [&](const FiniteModel&) {
    ++count;
    return true;
  });
  return count;
}

Verdict bounded_entailment(const Theory& theory, const Sentence& goal, const Bound& bound) {
  detail::GroundProblem p = problem_for(theory);
  add_vocabulary(p.vocabulary, symbols_of(goal));
  p.formulas.push_back(Formula::negation(first_order_reading(goal)));

  Verdict v;
  v.bound_used = bound;
  const bool complete = theory.logic() == LogicId::Prop && goal.logic() == LogicId::Prop;
  const int max = complete ? 1 : bound.max_domain_size;
  for (int n = 1; n <= max; ++n) {
    if (auto m = first_model(p, n)) {
      v.status = VerdictStatus::Disproved;
      v.witness = std::move(m);
      if (!complete) v.searched_up_to = n;
      return v;
    }
  }
  v.status = complete ? VerdictStatus::Proved : VerdictStatus::NoCounterexampleUpTo;
  if (!complete) v.searched_up_to = max;
  return v;
}

Verdict check_consistency(const Theory& theory, const Bound& bound) {
  const detail::GroundProblem p = problem_for(theory);
  Verdict v;
  v.bound_used = bound;
  const bool complete = theory.logic() == LogicId::Prop;
  const int max = complete ? 1 : bound.max_domain_size;
  for (int n = 1; n <= max; ++n) {
    if (auto m = first_model(p, n)) {
      v.status = VerdictStatus::ModelFound;
      v.witness = std::move(m);
      if (!complete) v.searched_up_to = n;
      return v;
    }
  }
  v.status = VerdictStatus::NoModelUpTo;
  if (!complete) v.searched_up_to = max;
  return v;
}

std::optional<FiniteModel> find_expansion(const Theory& theory, const FiniteModel& base) {
  detail::GroundProblem p = problem_for(theory);
  for (const auto& [name, rel] : base.relations) {
    if (!p.vocabulary.has_predicate(name)) p.vocabulary.add_predicate(name, rel.arity());
  }
  for (const auto& [name, value] : base.constants) {
    if (!p.vocabulary.has_constant(name)) p.vocabulary.add_constant(name);
  }
  p.fixed = &base;
  return first_model(p, base.domain_size);
}

}  // namespace dol
