#pragma once

#include <functional>
#include <vector>

#include "dol/logic.hpp"

namespace dol {

/// One edge of the logic graph: a signature map, a sentence map, and the
/// model reduct in the opposite direction.
struct LogicTranslation {
  LogicId source;
  LogicId target;
  std::string name;
  std::function<Signature(const Signature&)> sig_map;
  std::function<Sentence(const Sentence&)> sen_map;
  std::function<FiniteModel(const FiniteModel&)> model_reduct;
};

/// Adjacent steps compose: target of step i is the source of step i+1.
struct TranslationPath {
  LogicId from;
  std::vector<LogicTranslation> steps;

  LogicId to() const noexcept { return steps.empty() ? from : steps.back().target; }
  bool empty() const noexcept { return steps.empty(); }
};

/// Registered logics and translations. Immutable once built; queries are
/// pure.
class TranslationGraph {
 public:
  /// Prop→FOLEQ, EL→FOLEQ, FOLEQ→CLSub over the four built-in logics.
  static const TranslationGraph& core();

  TranslationGraph() = default;
  void register_logic(LogicId id);
  void register_translation(LogicTranslation tr);

  const std::vector<LogicId>& logics() const noexcept { return logics_; }
  const std::vector<LogicTranslation>& translations() const noexcept { return edges_; }
  bool is_registered(LogicId id) const;

  /// Shortest path; ties broken by the lexicographic order of the
  /// intermediate logic tokens. Throws NoPath.
  TranslationPath find_path(LogicId from, LogicId to) const;

  /// Registered logic reachable from every input with minimal total path
  /// length (ties: lexicographic token order). Throws NoCommonTarget.
  LogicId least_common_target(const std::vector<LogicId>& logics) const;

 private:
  std::vector<LogicId> logics_;
  std::vector<LogicTranslation> edges_;
};

/// Throws LogicMismatch if `theory` is not in `tr.source`.
Theory translate_theory(const LogicTranslation& tr, const Theory& theory);
Theory translate_theory(const TranslationPath& path, const Theory& theory);

/// Reduct of a target-logic model back along every step of the path.
FiniteModel reduct_along(const TranslationPath& path, const FiniteModel& model);

/// Translates `theory` into `target` along the core graph's shortest path.
Theory translate_to(const Theory& theory, LogicId target,
                    const TranslationGraph& graph = TranslationGraph::core());
Sentence translate_to(const Sentence& sentence, LogicId target,
                      const TranslationGraph& graph = TranslationGraph::core());

}  // namespace dol
