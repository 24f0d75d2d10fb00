// Copyright 2026 The svaforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Two-valued cycle simulator and property evaluator. Every cycle records two
// snapshots: `pre` (inputs applied, combinational logic settled, clock edge
// not yet taken) and `post` (edge taken, combinational logic settled again).
// Edge-sensitive blocks fire once per cycle: right-hand sides read the pre
// snapshot, nonblocking targets update the post snapshot. Combinational
// outputs hold their last value while no block drives them.
//
// Property sampling: a clocked property reads its antecedent from pre[c];
// the consequent at c+delay compares left-hand sides on post against
// right-hand sides on pre, so `q == d` style checks see the value that was
// clocked in. Unclocked properties read everything from the settled post
// snapshot of one cycle. $past(e, n) looks n cycles back within the same
// snapshot family; cycles it cannot reach are skipped, and a skipped or
// vacuous cycle never fails.

#ifndef SVAFORGE_SIM_HPP_
#define SVAFORGE_SIM_HPP_

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "svaforge/ast.hpp"
#include "svaforge/eval.hpp"
#include "svaforge/util.hpp"
#include "svaforge/rng.hpp"

namespace svaforge {

struct StimulusPlan {
  int cycles = 1000;
  uint64_t seed = 0;
  // Chance per cycle (after the two startup cycles) that a reset input is
  // driven to its active level again.
  double reset_active_prob = 0.05;
};

struct Trace {
  std::vector<std::string> names;
  std::vector<int> widths;
  std::unordered_map<std::string, int> index;
  std::vector<std::vector<Value>> pre;
  std::vector<std::vector<Value>> post;

  int cycles() const { return static_cast<int>(pre.size()); }
  int sig(const std::string& name) const {
    auto it = index.find(name);
    return it == index.end() ? -1 : it->second;
  }
};

inline bool traces_equal(const Trace& a, const Trace& b) {
  if (a.names != b.names || a.pre.size() != b.pre.size()) return false;
  auto rows_equal = [](const std::vector<std::vector<Value>>& x,
                       const std::vector<std::vector<Value>>& y) {
    for (size_t c = 0; c < x.size(); ++c)
      for (size_t i = 0; i < x[c].size(); ++i)
        if (x[c][i].bits != y[c][i].bits || x[c][i].width != y[c][i].width) return false;
    return true;
  };
  return rows_equal(a.pre, b.pre) && rows_equal(a.post, b.post);
}

namespace detail {

// Reads one working row, with history served from earlier post rows.
class RowEnv final : public EvalEnv {
 public:
  RowEnv(const Trace& t, const std::vector<Value>& row,
         const std::vector<std::vector<Value>>& history, int cycle)
      : t_(t), row_(row), history_(history), cycle_(cycle) {}

  std::optional<Value> get(const std::string& name, int back) const override {
    int i = t_.sig(name);
    if (i < 0) return std::nullopt;
    if (back == 0) return row_[i];
    return history_[cycle_ - back][i];
  }
  bool can_look_back(int back) const override { return cycle_ - back >= 0; }

 private:
  const Trace& t_;
  const std::vector<Value>& row_;
  const std::vector<std::vector<Value>>& history_;
  int cycle_;
};

struct PendingWrite {
  int sig;
  Value value;
};

inline void write_signal(const Trace& t, std::vector<Value>& row, const ExprPtr& lhs,
                         Value v, std::vector<PendingWrite>* nba) {
  int i = t.sig(lhs->name);
  if (i < 0) throw EvalError("UnboundIdentifier", "assignment to undeclared '" + lhs->name + "'");
  Value out;
  if (lhs->index) {
    int bit = *lhs->index;
    if (bit >= t.widths[i])
      throw EvalError("BitSelectOutOfRange", lhs->name + "[" + std::to_string(bit) + "]");
    uint64_t b = resize_value(v, 1).bits;
    out = {(row[i].bits & ~(1ULL << bit)) | (b << bit), t.widths[i]};
  } else {
    out = resize_value(v, t.widths[i]);
  }
  if (nba) nba->push_back({i, out});
  else row[i] = out;
}

inline void exec_stmts(const std::vector<StmtPtr>& stmts, const Trace& t,
                       std::vector<Value>& row,
                       const std::vector<std::vector<Value>>& history, int cycle,
                       std::vector<PendingWrite>* nba);

inline void exec_stmt(const Stmt& s, const Trace& t, std::vector<Value>& row,
                      const std::vector<std::vector<Value>>& history, int cycle,
                      std::vector<PendingWrite>* nba) {
  RowEnv env(t, row, history, cycle);
  switch (s.kind) {
    case StmtKind::Assign: {
      Value v = eval_expr(s.rhs, env);
      // Nonblocking semantics only matter at the clock edge; combinational
      // blocks apply every write immediately.
      write_signal(t, row, s.lhs, v, s.nonblocking && nba ? nba : nullptr);
      break;
    }
    case StmtKind::If: {
      for (const auto& arm : s.arms) {
        if (eval_expr(arm.cond, env).truthy()) {
          exec_stmts(arm.body, t, row, history, cycle, nba);
          return;
        }
      }
      if (s.else_body) exec_stmts(*s.else_body, t, row, history, cycle, nba);
      break;
    }
    case StmtKind::Case: {
      Value sel = eval_expr(s.selector, env);
      for (const auto& arm : s.case_arms) {
        for (const auto& label : arm.labels) {
          auto [x, y] = align(sel, eval_expr(label, env));
          if (x.bits == y.bits) {
            exec_stmts(arm.body, t, row, history, cycle, nba);
            return;
          }
        }
      }
      if (s.default_body) exec_stmts(*s.default_body, t, row, history, cycle, nba);
      break;
    }
    case StmtKind::Block:
      exec_stmts(s.stmts, t, row, history, cycle, nba);
      break;
  }
}

inline void exec_stmts(const std::vector<StmtPtr>& stmts, const Trace& t,
                       std::vector<Value>& row,
                       const std::vector<std::vector<Value>>& history, int cycle,
                       std::vector<PendingWrite>* nba) {
  for (const auto& s : stmts)
    if (s) exec_stmt(*s, t, row, history, cycle, nba);
}

inline void settle_comb(const RtlModule& m, const Trace& t, std::vector<Value>& row,
                        const std::vector<std::vector<Value>>& history, int cycle) {
  for (int round = 0; round < 16; ++round) {
    std::vector<Value> before = row;
    for (const auto& b : m.always_blocks)
      if (b.kind == AlwaysKind::AlwaysComb)
        exec_stmts(b.body, t, row, history, cycle, nullptr);
    bool stable = true;
    for (size_t i = 0; i < row.size(); ++i)
      if (row[i].bits != before[i].bits) stable = false;
    if (stable) return;
  }
  throw Error("CombLoopDetected", "combinational logic did not settle in 16 rounds");
}

struct StimulusRoles {
  std::set<std::string> clocks;
  std::set<std::string> resets_low;
  std::set<std::string> resets_high;
};

inline StimulusRoles classify_inputs(const RtlModule& m) {
  StimulusRoles roles;
  for (const auto& b : m.always_blocks) {
    if (b.kind == AlwaysKind::AlwaysComb) continue;
    bool clock_taken = false;
    for (const auto& s : b.sensitivity) {
      if (s.edge == EdgeKind::Posedge && !clock_taken) {
        roles.clocks.insert(s.signal);
        clock_taken = true;
      } else if (s.edge == EdgeKind::Posedge) {
        roles.resets_high.insert(s.signal);
      } else if (s.edge == EdgeKind::Negedge) {
        roles.resets_low.insert(s.signal);
      }
    }
  }
  return roles;
}

}  // namespace detail

// Runs the module for plan.cycles cycles under random stimulus. Declared
// inputs are redrawn uniformly every cycle, except clocks (implicit, held 0)
// and reset inputs: a signal under negedge (or extra posedge) sensitivity is
// held active for the first two cycles and reasserted with small probability
// afterwards.
inline Trace simulate(const RtlModule& m, const StimulusPlan& plan) {
  Trace t;
  for (const auto& d : m.decls) {
    t.index[d.name] = static_cast<int>(t.names.size());
    t.names.push_back(d.name);
    t.widths.push_back(d.width);
  }
  detail::StimulusRoles roles = detail::classify_inputs(m);
  Rng rng(plan.seed);

  std::vector<Value> state(t.names.size());
  for (size_t i = 0; i < state.size(); ++i) state[i] = {0, t.widths[i]};

  t.pre.reserve(plan.cycles);
  t.post.reserve(plan.cycles);
  for (int c = 0; c < plan.cycles; ++c) {
    std::vector<Value> cur = state;
    for (size_t i = 0; i < m.decls.size(); ++i) {
      const Decl& d = m.decls[i];
      if (d.direction != Direction::Input) continue;
      int w = d.width;
      if (roles.clocks.count(d.name)) {
        cur[i] = {0, w};
      } else if (roles.resets_low.count(d.name)) {
        bool active = c < 2 || rng.chance(plan.reset_active_prob);
        cur[i] = {active ? 0ULL : width_mask(w), w};
      } else if (roles.resets_high.count(d.name)) {
        bool active = c < 2 || rng.chance(plan.reset_active_prob);
        cur[i] = {active ? width_mask(w) : 0ULL, w};
      } else {
        uint64_t v = w >= 64 ? rng.next() : rng.below(1ULL << w);
        cur[i] = {v, w};
      }
    }
    detail::settle_comb(m, t, cur, t.post, c);
    t.pre.push_back(cur);

    // Clock edge: every edge-sensitive block fires, right-hand sides and
    // guards reading the pre snapshot.
    std::vector<Value> next = cur;
    std::vector<detail::PendingWrite> nba;
    for (const auto& b : m.always_blocks) {
      if (b.kind == AlwaysKind::AlwaysComb) continue;
      std::vector<Value> view = cur;
      detail::exec_stmts(b.body, t, view, t.post, c, &nba);
      // Blocking writes inside an edge block persist past the edge.
      for (size_t i = 0; i < view.size(); ++i)
        if (view[i].bits != cur[i].bits) next[i] = view[i];
    }
    for (const auto& w : nba) next[w.sig] = w.value;
    detail::settle_comb(m, t, next, t.post, c);
    t.post.push_back(next);
    state = next;
  }
  return t;
}

struct PropertyEvalResult {
  int evaluated = 0;  // cycles where the property was checked
  int triggered = 0;  // checked cycles with a true antecedent
  int skipped = 0;  // disabled cycles and cycles without enough history
  std::vector<int> failure_cycles;

  int failures() const { return static_cast<int>(failure_cycles.size()); }
  bool holds() const { return failure_cycles.empty(); }
  bool non_vacuous() const { return holds() && triggered >= 1; }
};

namespace detail {

class TraceEnv final : public EvalEnv {
 public:
  TraceEnv(const Trace& t, bool post_rows, int cycle)
      : t_(t), rows_(post_rows ? t.post : t.pre), cycle_(cycle) {}

  std::optional<Value> get(const std::string& name, int back) const override {
    int i = t_.sig(name);
    if (i < 0) return std::nullopt;
    return rows_[cycle_ - back][i];
  }
  bool can_look_back(int back) const override { return cycle_ - back >= 0; }

 private:
  const Trace& t_;
  const std::vector<std::vector<Value>>& rows_;
  int cycle_;
};

// Conjunction terms whose top operator is a comparison split their operands
// across the two snapshots (left on lhs_env, right on rhs_env); anything
// else evaluates wholly on lhs_env.
inline bool eval_consequent(const ExprPtr& e, const EvalEnv& lhs_env, const EvalEnv& rhs_env) {
  if (e->kind == ExprKind::Binary) {
    switch (e->bop) {
      case BinaryOp::LogicAnd:
        return eval_consequent(e->a, lhs_env, rhs_env) &&
               eval_consequent(e->b, lhs_env, rhs_env);
      case BinaryOp::Eq:
      case BinaryOp::Ne:
      case BinaryOp::Lt:
      case BinaryOp::Le:
      case BinaryOp::Gt:
      case BinaryOp::Ge: {
        auto [x, y] = align(eval_expr(e->a, lhs_env), eval_expr(e->b, rhs_env));
        switch (e->bop) {
          case BinaryOp::Eq: return x.bits == y.bits;
          case BinaryOp::Ne: return x.bits != y.bits;
          case BinaryOp::Lt: return x.bits < y.bits;
          case BinaryOp::Le: return x.bits <= y.bits;
          case BinaryOp::Gt: return x.bits > y.bits;
          default: return x.bits >= y.bits;
        }
      }
      default: break;
    }
  }
  return eval_expr(e, lhs_env).truthy();
}

}  // namespace detail

// Columnar debug dump: one line per cycle, post-edge values, signals in
// declaration order.
inline std::string dump_trace(const Trace& t) {
  std::string out = "cycle";
  for (const auto& n : t.names) out += " " + n;
  out += "\n";
  for (int c = 0; c < t.cycles(); ++c) {
    out += std::to_string(c);
    for (size_t i = 0; i < t.names.size(); ++i)
      out += " " + std::to_string(t.post[c][i].bits);
    out += "\n";
  }
  return out;
}

inline PropertyEvalResult eval_property(const Trace& t, const Property& p) {
  PropertyEvalResult r;
  const bool clocked = p.clocking.has_value();
  for (int c = 0; c < t.cycles(); ++c) {
    if (c + p.delay >= t.cycles()) {
      // The consequent row lies past the end of the trace.
      ++r.skipped;
      continue;
    }
    int evaluated_before = r.evaluated;
    int triggered_before = r.triggered;
    try {
      detail::TraceEnv ante_env(t, /*post_rows=*/!clocked, c);
      if (p.disable_iff && eval_expr(p.disable_iff, ante_env).truthy()) {
        ++r.skipped;
        continue;
      }
      bool active = eval_expr(p.antecedent, ante_env).truthy();
      ++r.evaluated;
      if (!active) continue;
      ++r.triggered;
      int cc = c + p.delay;
      detail::TraceEnv lhs_env(t, /*post_rows=*/true, cc);
      detail::TraceEnv rhs_env(t, /*post_rows=*/!clocked, cc);
      if (!detail::eval_consequent(p.consequent, lhs_env, rhs_env))
        r.failure_cycles.push_back(c);
    } catch (const EvalError& e) {
      if (e.code() == "PastDepthExceedsTrace") {
        // The attempt never completed; it counts only as skipped.
        r.evaluated = evaluated_before;
        r.triggered = triggered_before;
        ++r.skipped;
        continue;
      }
      throw;
    }
  }
  return r;
}

}  // namespace svaforge

#endif  // SVAFORGE_SIM_HPP_
