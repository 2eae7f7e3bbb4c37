#include "sat_solver.hpp"

#include <algorithm>

namespace dol::detail {

SatSolver::SatSolver(int num_vars)
    : value_(static_cast<std::size_t>(num_vars), -1), watches_(2 * static_cast<std::size_t>(num_vars)) {}

void SatSolver::add_clause(std::vector<Lit> clause) {
  std::sort(clause.begin(), clause.end());
  clause.erase(std::unique(clause.begin(), clause.end()), clause.end());
  for (std::size_t i = 1; i < clause.size(); ++i) {
    if (clause[i] == negate(clause[i - 1])) return;  // tautology
  }
  if (clause.empty()) {
    empty_clause_ = true;
  } else if (clause.size() == 1) {
    units_.push_back(clause[0]);
  } else {
    const int id = static_cast<int>(clauses_.size());
    watches_[static_cast<std::size_t>(clause[0])].push_back(id);
    watches_[static_cast<std::size_t>(clause[1])].push_back(id);
    clauses_.push_back(std::move(clause));
  }
}

void SatSolver::assign(Lit l) {
  value_[static_cast<std::size_t>(lit_var(l))] = static_cast<std::int8_t>((l & 1) ^ 1);
  trail_.push_back(l);
}

// Returns false on conflict.
bool SatSolver::propagate() {
  while (qhead_ < trail_.size()) {
    const Lit false_lit = negate(trail_[qhead_++]);
    auto& ws = watches_[static_cast<std::size_t>(false_lit)];
    std::size_t keep = 0;
    bool conflict = false;
    for (std::size_t i = 0; i < ws.size(); ++i) {
      const int cid = ws[i];
      if (conflict) {
        ws[keep++] = cid;
        continue;
      }
      auto& c = clauses_[static_cast<std::size_t>(cid)];
      if (c[0] == false_lit) std::swap(c[0], c[1]);
      if (lit_value(c[0]) == 1) {
        ws[keep++] = cid;
        continue;
      }
      bool moved = false;
      for (std::size_t k = 2; k < c.size(); ++k) {
        if (lit_value(c[k]) != 0) {
          std::swap(c[1], c[k]);
          watches_[static_cast<std::size_t>(c[1])].push_back(cid);
          moved = true;
          break;
        }
      }
      if (moved) continue;
      ws[keep++] = cid;
      if (lit_value(c[0]) == 0) {
        conflict = true;
      } else {
        assign(c[0]);
      }
    }
    ws.resize(keep);
    if (conflict) return false;
  }
  return true;
}

void SatSolver::undo_to(std::size_t trail_size) {
  while (trail_.size() > trail_size) {
    value_[static_cast<std::size_t>(lit_var(trail_.back()))] = -1;
    trail_.pop_back();
  }
  qhead_ = std::min(qhead_, trail_size);
}

// Flips the most recent unflipped decision. With `skip_aux`, decisions on
// auxiliary variables are discarded rather than flipped: once a model has
// been reported their other value would only repeat it.
bool SatSolver::backtrack(bool skip_aux) {
  while (!levels_.empty()) {
    Level& lv = levels_.back();
    if (lv.flipped || (skip_aux && lv.aux)) {
      undo_to(lv.trail_start);
      levels_.pop_back();
      continue;
    }
    const Lit decision = trail_[lv.trail_start];
    undo_to(lv.trail_start);
    lv.flipped = true;
    assign(negate(decision));
    return true;
  }
  return false;
}

void SatSolver::enumerate(int primary, const std::function<bool(const std::vector<std::int8_t>&)>& on_model) {
  if (empty_clause_) return;
  std::fill(value_.begin(), value_.end(), -1);
  trail_.clear();
  levels_.clear();
  qhead_ = 0;
  for (Lit u : units_) {
    const auto v = lit_value(u);
    if (v == 0) return;
    if (v < 0) assign(u);
  }
  if (!propagate()) return;

  const int n = num_vars();
  while (true) {
    if (!propagate()) {
      if (!backtrack(false)) return;
      continue;
    }
    int next = -1;
    bool aux = false;
    for (int v = 0; v < n; ++v) {
      if (value_[static_cast<std::size_t>(v)] < 0) {
        next = v;
        aux = v >= primary;
        break;
      }
    }
    if (next < 0) {
      if (!on_model(value_)) return;
      if (!backtrack(true)) return;
      continue;
    }
    levels_.push_back({trail_.size(), false, aux});
    assign(neg_lit(next));
  }
}

}  // namespace dol::detail
