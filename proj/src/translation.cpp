#include "dol/translation.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>

#include "dol/semantics.hpp"

namespace dol {

namespace {

LogicTranslation prop_to_fol() {
  return LogicTranslation{
      LogicId::Prop, LogicId::FOLEQ, "Prop2FOL",
      [](const Signature& s) { return s.with_logic(LogicId::FOLEQ); },
      [](const Sentence& s) { return s.with_logic(LogicId::FOLEQ); },
      [](const FiniteModel& m) { return m; }};
}

LogicTranslation el_to_fol() {
  return LogicTranslation{
      LogicId::EL, LogicId::FOLEQ, "EL2FOL",
      [](const Signature& s) { return s.with_logic(LogicId::FOLEQ); },
      [](const Sentence& s) { return Sentence(LogicId::FOLEQ, first_order_reading(s)); },
      [](const FiniteModel& m) { return m; }};
}

LogicTranslation fol_to_cl() {
  return LogicTranslation{
      LogicId::FOLEQ, LogicId::CLSub, "FOL2CL",
      [](const Signature& s) { return s.with_logic(LogicId::CLSub); },
      [](const Sentence& s) { return s.with_logic(LogicId::CLSub); },
      [](const FiniteModel& m) { return m; }};
}

std::string path_key(const std::vector<LogicId>& nodes) {
  std::string key;
  for (std::size_t i = 1; i + 1 < nodes.size(); ++i) {
    key += to_string(nodes[i]);
    key += '\x01';
  }
  return key;
}

}  // namespace

const TranslationGraph& TranslationGraph::core() {
  static const TranslationGraph graph = [] {
    TranslationGraph g;
    for (LogicId id : {LogicId::Prop, LogicId::EL, LogicId::FOLEQ, LogicId::CLSub}) g.register_logic(id);
    g.register_translation(prop_to_fol());
    g.register_translation(el_to_fol());
    g.register_translation(fol_to_cl());
    return g;
  }();
  return graph;
}

void TranslationGraph::register_logic(LogicId id) {
  if (!is_registered(id)) logics_.push_back(id);
}

void TranslationGraph::register_translation(LogicTranslation tr) {
  if (!is_registered(tr.source) || !is_registered(tr.target)) {
    throw DolError(ErrorKind::UnknownLogic, "translation " + tr.name + " connects an unregistered logic");
  }
  edges_.push_back(std::move(tr));
}

bool TranslationGraph::is_registered(LogicId id) const {
  return std::find(logics_.begin(), logics_.end(), id) != logics_.end();
}

TranslationPath TranslationGraph::find_path(LogicId from, LogicId to) const {
  for (LogicId id : {from, to}) {
    if (!is_registered(id)) {
      throw DolError(ErrorKind::UnknownLogic, "logic " + std::string(to_string(id)) + " is not registered");
    }
  }
  // Breadth-first search over node sequences; among equally short paths the
  // one whose intermediate tokens compare least wins.
  struct Partial {
    std::vector<LogicId> nodes;
    std::vector<std::size_t> edges;
  };
  std::deque<Partial> frontier{{{from}, {}}};
  std::map<LogicId, std::size_t> depth{{from, 0}};
  std::optional<Partial> best;
  while (!frontier.empty()) {
    Partial p = std::move(frontier.front());
    frontier.pop_front();
    if (best && p.edges.size() > best->edges.size()) break;
    if (p.nodes.back() == to) {
      if (!best || path_key(p.nodes) < path_key(best->nodes)) best = p;
      continue;
    }
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      if (edges_[i].source != p.nodes.back()) continue;
      const LogicId next = edges_[i].target;
      auto it = depth.find(next);
      if (it != depth.end() && it->second < p.edges.size() + 1) continue;
      depth[next] = p.edges.size() + 1;
      Partial q = p;
      q.nodes.push_back(next);
      q.edges.push_back(i);
      frontier.push_back(std::move(q));
    }
  }
  if (!best) {
    throw DolError(ErrorKind::NoPath, "no translation path from " + std::string(to_string(from)) +
                                          " to " + std::string(to_string(to)));
  }
  TranslationPath path{from, {}};
  for (std::size_t i : best->edges) path.steps.push_back(edges_[i]);
  return path;
}

LogicId TranslationGraph::least_common_target(const std::vector<LogicId>& logics) const {
  if (logics.empty()) throw DolError(ErrorKind::NoCommonTarget, "no logics given");
  std::optional<LogicId> best;
  std::size_t best_cost = std::numeric_limits<std::size_t>::max();
  for (LogicId candidate : logics_) {
    std::size_t cost = 0;
    bool reachable = true;
    for (LogicId source : logics) {
      try {
        cost += find_path(source, candidate).steps.size();
      } catch (const DolError& e) {
        if (e.kind() != ErrorKind::NoPath) throw;
        reachable = false;
        break;
      }
    }
    if (!reachable) continue;
    if (cost < best_cost || (cost == best_cost && to_string(candidate) < to_string(*best))) {
      best = candidate;
      best_cost = cost;
    }
  }
  if (!best) {
    std::string names;
    for (LogicId l : logics) names += std::string(names.empty() ? "" : ", ") + std::string(to_string(l));
    throw DolError(ErrorKind::NoCommonTarget, "no registered logic is reachable from {" + names + "}");
  }
  return *best;
}

Theory translate_theory(const LogicTranslation& tr, const Theory& theory) {
  if (theory.logic() != tr.source) {
    throw DolError(ErrorKind::LogicMismatch, "translation " + tr.name + " expects " +
                                                 std::string(to_string(tr.source)) + ", got " +
                                                 std::string(to_string(theory.logic())));
  }
  Theory out;
  out.signature = tr.sig_map(theory.signature);
  out.origin = theory.origin;
  out.axioms.reserve(theory.axioms.size());
  for (const auto& ax : theory.axioms) out.axioms.push_back(tr.sen_map(ax));
  return out;
}

Theory translate_theory(const TranslationPath& path, const Theory& theory) {
  if (theory.logic() != path.from) {
    throw DolError(ErrorKind::LogicMismatch, "path starts at " + std::string(to_string(path.from)) +
                                                 ", theory is in " + std::string(to_string(theory.logic())));
  }
  Theory out = theory;
  for (const auto& step : path.steps) out = translate_theory(step, out);
  return out;
}

FiniteModel reduct_along(const TranslationPath& path, const FiniteModel& model) {
  FiniteModel out = model;
  for (auto it = path.steps.rbegin(); it != path.steps.rend(); ++it) out = it->model_reduct(out);
  return out;
}

Theory translate_to(const Theory& theory, LogicId target, const TranslationGraph& graph) {
  return translate_theory(graph.find_path(theory.logic(), target), theory);
}

Sentence translate_to(const Sentence& sentence, LogicId target, const TranslationGraph& graph) {
  Sentence out = sentence;
  for (const auto& step : graph.find_path(sentence.logic(), target).steps) out = step.sen_map(out);
  return out;
}

}  // namespace dol
