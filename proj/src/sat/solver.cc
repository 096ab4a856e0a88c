// Copyright 2026 The rfx Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rfx/sat/solver.h"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <random>
#include <string>

namespace rfx::sat {

const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::kSat:
      return "SAT";
    case SolveStatus::kUnsat:
      return "UNSAT";
    case SolveStatus::kTimeout:
      return "TIMEOUT";
  }
  return "?";
}

namespace {

// Internal literal code: 2 * var + sign, var 0-based, sign 1 = negative.
using Lit = int;
constexpr Lit kNoLit = -1;
constexpr int kNoReason = -1;

inline int var_of(Lit l) { return l >> 1; }
inline bool sign_of(Lit l) { return (l & 1) != 0; }
inline Lit make_lit(int var, bool negative) { return 2 * var + (negative ? 1 : 0); }
inline Lit neg(Lit l) { return l ^ 1; }

inline Lit encode(Literal l) { return make_lit(l.var() - 1, !l.positive()); }
inline Literal decode(Lit l) { return Literal(var_of(l) + 1, !sign_of(l)); }

enum : std::int8_t { kFalse = -1, kUndef = 0, kTrue = 1 };

double luby(double y, int x) {
  int size = 1, seq = 0;
  while (size < x + 1) {
    ++seq;
    size = 2 * size + 1;
  }
  while (size - 1 != x) {
    size = (size - 1) >> 1;
    --seq;
    x = x % size;
  }
  return std::pow(y, seq);
}

}  // namespace

class Solver::Impl {
 public:
  explicit Impl(SolverOptions options)
      : opts_(options), rng_(options.seed) {}

  int new_var() {
    const int v = static_cast<int>(assigns_.size());
    assigns_.push_back(kUndef);
    level_.push_back(0);
    reason_.push_back(kNoReason);
    activity_.push_back(0.0);
    polarity_.push_back(1);  // branch negative first
    seen_.push_back(0);
    heap_index_.push_back(-1);
    watches_.emplace_back();
    watches_.emplace_back();
    heap_insert(v);
    return v + 1;
  }

  void ensure_vars(int count) {
    while (static_cast<int>(assigns_.size()) < count) new_var();
  }

  int var_count() const { return static_cast<int>(assigns_.size()); }

  bool add_clause(std::span<const Literal> clause) {
    if (!ok_) return false;
    cancel_until(0);
    std::vector<Lit> lits;
    lits.reserve(clause.size());
    for (Literal l : clause) {
      if (l.var() < 1) throw LogicError("solver variables are 1-based");
      ensure_vars(l.var());
      lits.push_back(encode(l));
    }
    std::sort(lits.begin(), lits.end());
    std::vector<Lit> kept;
    Lit prev = kNoLit;
    for (Lit l : lits) {
      if (l == prev) continue;
      if (prev != kNoLit && l == neg(prev)) return true;  // tautology
      if (value(l) == kTrue) return true;
      if (value(l) != kFalse) kept.push_back(l);
      prev = l;
    }
    if (kept.empty()) {
      ok_ = false;
      return false;
    }
    if (kept.size() == 1) {
      enqueue(kept[0], kNoReason);
      ok_ = propagate() == kNoReason;
      return ok_;
    }
    const int cref = alloc_clause(std::move(kept), false);
    attach(cref);
    ++original_clauses_;
    return true;
  }

  SolveStatus solve(std::span<const Literal> assumptions,
                    const Deadline& deadline) {
    ++stats_.solves;
    model_.clear();
    failed_.clear();
    if (!ok_) return SolveStatus::kUnsat;
    assumptions_.clear();
    for (Literal l : assumptions) {
      if (l.var() < 1) throw LogicError("solver variables are 1-based");
      ensure_vars(l.var());
      assumptions_.push_back(encode(l));
    }
    if (deadline.expired()) return SolveStatus::kTimeout;
    deadline_ = &deadline;
    max_learnts_ = std::max(2000.0, original_clauses_ / 3.0);
    SolveStatus status = SolveStatus::kTimeout;
    for (int restart = 0;; ++restart) {
      const double budget = luby(2.0, restart) * opts_.restart_base;
      const auto r = search(static_cast<long>(budget));
      if (r == SearchResult::kSat) {
        status = SolveStatus::kSat;
        break;
      }
      if (r == SearchResult::kUnsat) {
        status = SolveStatus::kUnsat;
        break;
      }
      if (r == SearchResult::kTimeout) break;
      ++stats_.restarts;
      max_learnts_ *= 1.1;
    }
    cancel_until(0);
    deadline_ = nullptr;
    return status;
  }

  bool model_value(int var) const {
    if (var < 1 || var > static_cast<int>(model_.size())) {
      throw LogicError("no model value for variable " + std::to_string(var));
    }
    return model_[var - 1] != 0;
  }
  const std::vector<std::uint8_t>& model() const { return model_; }
  const std::vector<Literal>& failed() const { return failed_; }
  const Stats& stats() const { return stats_; }

 private:
  enum class SearchResult { kSat, kUnsat, kRestart, kTimeout };

  struct ClauseRec {
    std::vector<Lit> lits;
    double activity = 0.0;
    bool learnt = false;
    bool deleted = false;
  };
  struct Watcher {
    int cref;
    Lit blocker;
  };

  std::int8_t value(Lit l) const {
    const std::int8_t v = assigns_[var_of(l)];
    return sign_of(l) ? static_cast<std::int8_t>(-v) : v;
  }
  int decision_level() const { return static_cast<int>(trail_lim_.size()); }

  int alloc_clause(std::vector<Lit> lits, bool learnt) {
    int cref;
    if (!free_slots_.empty()) {
      cref = free_slots_.back();
      free_slots_.pop_back();
      clauses_[cref] = ClauseRec{std::move(lits), 0.0, learnt, false};
    } else {
      cref = static_cast<int>(clauses_.size());
      clauses_.push_back(ClauseRec{std::move(lits), 0.0, learnt, false});
    }
    if (learnt) learnts_.push_back(cref);
    return cref;
  }

  void attach(int cref) {
    const auto& c = clauses_[cref].lits;
    watches_[neg(c[0])].push_back({cref, c[1]});
    watches_[neg(c[1])].push_back({cref, c[0]});
  }

  void detach(int cref) {
    const auto& c = clauses_[cref].lits;
    for (Lit w : {neg(c[0]), neg(c[1])}) {
      auto& ws = watches_[w];
      for (std::size_t i = 0; i < ws.size(); ++i) {
        if (ws[i].cref == cref) {
          ws[i] = ws.back();
          ws.pop_back();
          break;
        }
      }
    }
  }

  void free_clause(int cref) {
    clauses_[cref].deleted = true;
    clauses_[cref].lits.clear();
    clauses_[cref].lits.shrink_to_fit();
    free_slots_.push_back(cref);
  }

  void enqueue(Lit l, int reason) {
    const int v = var_of(l);
    assigns_[v] = sign_of(l) ? kFalse : kTrue;
    level_[v] = decision_level();
    reason_[v] = reason;
    trail_.push_back(l);
  }

  void new_decision_level() {
    trail_lim_.push_back(static_cast<int>(trail_.size()));
  }

  void cancel_until(int level) {
    if (decision_level() <= level) return;
    for (int i = static_cast<int>(trail_.size()) - 1; i >= trail_lim_[level];
         --i) {
      const int v = var_of(trail_[i]);
      assigns_[v] = kUndef;
      reason_[v] = kNoReason;
      polarity_[v] = sign_of(trail_[i]) ? 1 : 0;
      if (heap_index_[v] < 0) heap_insert(v);
    }
    trail_.resize(trail_lim_[level]);
    trail_lim_.resize(level);
    qhead_ = std::min<int>(qhead_, static_cast<int>(trail_.size()));
  }

  // Returns the conflicting clause, or kNoReason.
  int propagate() {
    int conflict = kNoReason;
    while (qhead_ < static_cast<int>(trail_.size())) {
      const Lit p = trail_[qhead_++];
      const Lit false_lit = neg(p);
      auto& ws = watches_[p];
      ++stats_.propagations;
      std::size_t i = 0, j = 0;
      const std::size_t end = ws.size();
      while (i < end) {
        const Watcher w = ws[i];
        if (value(w.blocker) == kTrue) {
          ws[j++] = ws[i++];
          continue;
        }
        auto& c = clauses_[w.cref].lits;
        if (c[0] == false_lit) std::swap(c[0], c[1]);
        ++i;
        const Lit first = c[0];
        if (first != w.blocker && value(first) == kTrue) {
          ws[j++] = {w.cref, first};
          continue;
        }
        bool moved = false;
        for (std::size_t k = 2; k < c.size(); ++k) {
          if (value(c[k]) != kFalse) {
            std::swap(c[1], c[k]);
            watches_[neg(c[1])].push_back({w.cref, first});
            moved = true;
            break;
          }
        }
        if (moved) continue;
        ws[j++] = {w.cref, first};
        if (value(first) == kFalse) {
          conflict = w.cref;
          qhead_ = static_cast<int>(trail_.size());
          while (i < end) ws[j++] = ws[i++];
        } else {
          enqueue(first, w.cref);
        }
      }
      ws.resize(j);
      if (conflict != kNoReason) break;
    }
    return conflict;
  }

  void bump_var(int v) {
    activity_[v] += var_inc_;
    if (activity_[v] > 1e100) {
      for (double& a : activity_) a *= 1e-100;
      var_inc_ *= 1e-100;
    }
    if (heap_index_[v] >= 0) heap_up(heap_index_[v]);
  }

  void bump_clause(int cref) {
    ClauseRec& c = clauses_[cref];
    c.activity += clause_inc_;
    if (c.activity > 1e20) {
      for (int l : learnts_) clauses_[l].activity *= 1e-20;
      clause_inc_ *= 1e-20;
    }
  }

  unsigned abstract_level(int v) const { return 1u << (level_[v] & 31); }

  bool literal_redundant(Lit p, unsigned abstract_levels,
                         std::vector<Lit>& to_clear) {
    analyze_stack_.clear();
    analyze_stack_.push_back(p);
    const std::size_t top = to_clear.size();
    while (!analyze_stack_.empty()) {
      const int r = reason_[var_of(analyze_stack_.back())];
      analyze_stack_.pop_back();
      const auto& c = clauses_[r].lits;
      for (std::size_t i = 1; i < c.size(); ++i) {
        const int v = var_of(c[i]);
        if (seen_[v] || level_[v] == 0) continue;
        if (reason_[v] != kNoReason && (abstract_level(v) & abstract_levels)) {
          seen_[v] = 1;
          analyze_stack_.push_back(c[i]);
          to_clear.push_back(c[i]);
        } else {
          for (std::size_t k = top; k < to_clear.size(); ++k) {
            seen_[var_of(to_clear[k])] = 0;
          }
          to_clear.resize(top);
          return false;
        }
      }
    }
    return true;
  }

  void analyze(int conflict, std::vector<Lit>& learnt, int& backtrack_level) {
    learnt.clear();
    learnt.push_back(kNoLit);
    int path_count = 0;
    Lit p = kNoLit;
    int index = static_cast<int>(trail_.size()) - 1;
    do {
      ClauseRec& c = clauses_[conflict];
      if (c.learnt) bump_clause(conflict);
      for (std::size_t j = (p == kNoLit) ? 0 : 1; j < c.lits.size(); ++j) {
        const Lit q = c.lits[j];
        const int v = var_of(q);
        if (seen_[v] || level_[v] == 0) continue;
        bump_var(v);
        seen_[v] = 1;
        if (level_[v] >= decision_level()) {
          ++path_count;
        } else {
          learnt.push_back(q);
        }
      }
      while (!seen_[var_of(trail_[index--])]) {
      }
      p = trail_[index + 1];
      conflict = reason_[var_of(p)];
      seen_[var_of(p)] = 0;
      --path_count;
    } while (path_count > 0);
    learnt[0] = neg(p);

    // Recursive minimization.
    std::vector<Lit> to_clear(learnt.begin(), learnt.end());
    unsigned levels = 0;
    for (std::size_t i = 1; i < learnt.size(); ++i) {
      levels |= abstract_level(var_of(learnt[i]));
    }
    std::size_t kept = 1;
    for (std::size_t i = 1; i < learnt.size(); ++i) {
      const int v = var_of(learnt[i]);
      if (reason_[v] == kNoReason ||
          !literal_redundant(learnt[i], levels, to_clear)) {
        learnt[kept++] = learnt[i];
      }
    }
    learnt.resize(kept);

    backtrack_level = 0;
    if (learnt.size() > 1) {
      std::size_t max_i = 1;
      for (std::size_t i = 2; i < learnt.size(); ++i) {
        if (level_[var_of(learnt[i])] > level_[var_of(learnt[max_i])]) {
          max_i = i;
        }
      }
      std::swap(learnt[1], learnt[max_i]);
      backtrack_level = level_[var_of(learnt[1])];
    }
    for (Lit l : to_clear) seen_[var_of(l)] = 0;
  }

  // `p` is an assumption found false: collect the assumptions it depends on.
  void analyze_final(Lit p) {
    failed_.clear();
    failed_.push_back(decode(p));
    if (decision_level() == 0) return;
    seen_[var_of(p)] = 1;
    for (int i = static_cast<int>(trail_.size()) - 1; i >= trail_lim_[0];
         --i) {
      const int v = var_of(trail_[i]);
      if (!seen_[v]) continue;
      if (reason_[v] == kNoReason) {
        // A decision below the assumption levels is itself an assumption.
        failed_.push_back(decode(trail_[i]));
      } else {
        const auto& c = clauses_[reason_[v]].lits;
        for (std::size_t k = 1; k < c.size(); ++k) {
          if (level_[var_of(c[k])] > 0) seen_[var_of(c[k])] = 1;
        }
      }
      seen_[v] = 0;
    }
    seen_[var_of(p)] = 0;
  }

  bool locked(int cref) const {
    const auto& c = clauses_[cref].lits;
    const int v = var_of(c[0]);
    return reason_[v] == cref && value(c[0]) == kTrue;
  }

  void reduce_db() {
    std::sort(learnts_.begin(), learnts_.end(), [&](int a, int b) {
      const auto& ca = clauses_[a];
      const auto& cb = clauses_[b];
      const bool bin_a = ca.lits.size() <= 2, bin_b = cb.lits.size() <= 2;
      if (bin_a != bin_b) return bin_b;
      if (ca.activity != cb.activity) return ca.activity < cb.activity;
      return a < b;
    });
    const double extra = clause_inc_ / std::max<std::size_t>(learnts_.size(), 1);
    std::vector<int> kept;
    kept.reserve(learnts_.size());
    for (std::size_t i = 0; i < learnts_.size(); ++i) {
      const int cref = learnts_[i];
      const ClauseRec& c = clauses_[cref];
      const bool removable =
          c.lits.size() > 2 && !locked(cref) &&
          (i < learnts_.size() / 2 || c.activity < extra);
      if (removable) {
        detach(cref);
        free_clause(cref);
      } else {
        kept.push_back(cref);
      }
    }
    learnts_ = std::move(kept);
  }

  Lit pick_branch() {
    if (opts_.random_decision_freq > 0.0 && !heap_.empty()) {
      std::uniform_real_distribution<double> coin(0.0, 1.0);
      if (coin(rng_) < opts_.random_decision_freq) {
        std::uniform_int_distribution<std::size_t> pick(0, heap_.size() - 1);
        const int v = heap_[pick(rng_)];
        if (assigns_[v] == kUndef) return make_lit(v, polarity_[v] != 0);
      }
    }
    while (!heap_.empty()) {
      const int v = heap_pop();
      if (assigns_[v] == kUndef) return make_lit(v, polarity_[v] != 0);
    }
    return kNoLit;
  }

  SearchResult search(long conflict_budget) {
    long conflicts_here = 0;
    std::vector<Lit> learnt;
    unsigned tick = 0;
    for (;;) {
      const int conflict = propagate();
      if (conflict != kNoReason) {
        ++stats_.conflicts;
        ++conflicts_here;
        if (decision_level() == 0) {
          ok_ = false;
          return SearchResult::kUnsat;
        }
        int backtrack_level = 0;
        analyze(conflict, learnt, backtrack_level);
        cancel_until(backtrack_level);
        if (learnt.size() == 1) {
          enqueue(learnt[0], kNoReason);
        } else {
          const int cref = alloc_clause(learnt, true);
          attach(cref);
          bump_clause(cref);
          enqueue(learnt[0], cref);
        }
        var_inc_ /= opts_.var_decay;
        clause_inc_ /= opts_.clause_decay;
        if ((stats_.conflicts & 63) == 0 && deadline_->expired()) {
          return SearchResult::kTimeout;
        }
        continue;
      }
      if (conflicts_here >= conflict_budget) {
        cancel_until(0);
        return SearchResult::kRestart;
      }
      if ((++tick & 255) == 0 && deadline_->expired()) {
        return SearchResult::kTimeout;
      }
      if (static_cast<double>(learnts_.size()) -
              static_cast<double>(trail_.size()) >= max_learnts_) {
        reduce_db();
      }
      Lit next = kNoLit;
      while (decision_level() < static_cast<int>(assumptions_.size())) {
        const Lit p = assumptions_[decision_level()];
        if (value(p) == kTrue) {
          new_decision_level();
        } else if (value(p) == kFalse) {
          analyze_final(p);
          return SearchResult::kUnsat;
        } else {
          next = p;
          break;
        }
      }
      if (next == kNoLit) {
        ++stats_.decisions;
        next = pick_branch();
        if (next == kNoLit) {
          model_.assign(assigns_.size(), 0);
          for (std::size_t v = 0; v < assigns_.size(); ++v) {
            model_[v] = assigns_[v] == kTrue ? 1 : 0;
          }
          return SearchResult::kSat;
        }
      }
      new_decision_level();
      enqueue(next, kNoReason);
    }
  }

  // Max-heap on activity; ties go to the lower variable index.
  bool heap_less(int a, int b) const {
    if (activity_[a] != activity_[b]) return activity_[a] > activity_[b];
    return a < b;
  }
  void heap_insert(int v) {
    heap_index_[v] = static_cast<int>(heap_.size());
    heap_.push_back(v);
    heap_up(heap_index_[v]);
  }
  void heap_up(int i) {
    const int v = heap_[i];
    while (i > 0) {
      const int parent = (i - 1) / 2;
      if (!heap_less(v, heap_[parent])) break;
      heap_[i] = heap_[parent];
      heap_index_[heap_[i]] = i;
      i = parent;
    }
    heap_[i] = v;
    heap_index_[v] = i;
  }
  void heap_down(int i) {
    const int v = heap_[i];
    const int size = static_cast<int>(heap_.size());
    for (;;) {
      int child = 2 * i + 1;
      if (child >= size) break;
      if (child + 1 < size && heap_less(heap_[child + 1], heap_[child])) {
        ++child;
      }
      if (!heap_less(heap_[child], v)) break;
      heap_[i] = heap_[child];
      heap_index_[heap_[i]] = i;
      i = child;
    }
    heap_[i] = v;
    heap_index_[v] = i;
  }
  int heap_pop() {
    const int top = heap_[0];
    heap_index_[top] = -1;
    const int last = heap_.back();
    heap_.pop_back();
    if (!heap_.empty()) {
      heap_[0] = last;
      heap_index_[last] = 0;
      heap_down(0);
    }
    return top;
  }

  SolverOptions opts_;
  std::mt19937_64 rng_;
  bool ok_ = true;

  std::vector<ClauseRec> clauses_;
  std::vector<int> free_slots_;
  std::vector<int> learnts_;
  std::vector<std::vector<Watcher>> watches_;
  long original_clauses_ = 0;

  std::vector<std::int8_t> assigns_;
  std::vector<int> level_;
  std::vector<int> reason_;
  std::vector<double> activity_;
  std::vector<std::uint8_t> polarity_;
  std::vector<std::uint8_t> seen_;
  std::vector<int> heap_;
  std::vector<int> heap_index_;

  std::vector<Lit> trail_;
  std::vector<int> trail_lim_;
  int qhead_ = 0;

  std::vector<Lit> assumptions_;
  std::vector<Lit> analyze_stack_;
  double var_inc_ = 1.0;
  double clause_inc_ = 1.0;
  double max_learnts_ = 0.0;
  const Deadline* deadline_ = nullptr;

  std::vector<std::uint8_t> model_;
  std::vector<Literal> failed_;
  Stats stats_;
};

Solver::Solver(SolverOptions options)
    : impl_(std::make_unique<Impl>(options)) {}
Solver::~Solver() = default;
Solver::Solver(Solver&&) noexcept = default;
Solver& Solver::operator=(Solver&&) noexcept = default;

int Solver::new_var() { return impl_->new_var(); }
void Solver::ensure_vars(int count) { impl_->ensure_vars(count); }
int Solver::var_count() const { return impl_->var_count(); }
bool Solver::add_clause(std::span<const Literal> clause) {
  return impl_->add_clause(clause);
}
SolveStatus Solver::solve(std::span<const Literal> assumptions,
                          const Deadline& deadline) {
  return impl_->solve(assumptions, deadline);
}
bool Solver::model_value(int var) const { return impl_->model_value(var); }
const std::vector<std::uint8_t>& Solver::model() const {
  return impl_->model();
}
const std::vector<Literal>& Solver::failed_assumptions() const {
  return impl_->failed();
}
const Solver::Stats& Solver::stats() const { return impl_->stats(); }

}  // namespace rfx::sat
