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
// Oracle assertion synthesis. Walks the conditional structure of an always
// block and emits one implication property per assignment-bearing path:
// the antecedent is the path condition (each taken guard, plus the negation
// of every earlier guard in its chain, ANDed left to right), the consequent
// equates every left-hand side on the path with its right-hand side. Paths
// that assign nothing emit nothing.

#ifndef SVAFORGE_SYNTH_HPP_
#define SVAFORGE_SYNTH_HPP_

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "svaforge/ast.hpp"
#include "svaforge/print.hpp"
#include "svaforge/rng.hpp"
#include "svaforge/util.hpp"

namespace svaforge {

struct AssignPair {
  ExprPtr lhs;
  ExprPtr rhs;
  Span span;
};

struct PathAssertion {
  ExprPtr path_condition;  // conjunction of the path's guard terms
  std::vector<AssignPair> assignments;
  Span source_span;  // covers the path's guards and assignments
  Property property;
};

struct SynthOptions {
  uint64_t name_seed = 0;
  std::optional<Clocking> clock_hint;
};

namespace detail {

inline std::string name_suffix(uint64_t seed, int index) {
  uint64_t v = derive_seed(seed, index);
  std::string s;
  for (int i = 0; i < 6; ++i) {
    int d = static_cast<int>(v % 36);
    v /= 36;
    s += d < 26 ? static_cast<char>('a' + d) : static_cast<char>('0' + d - 26);
  }
  return s;
}

inline bool name_contains(const std::string& name, const char* needle) {
  std::string low;
  for (char c : name) low += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return low.find(needle) != std::string::npos;
}

inline bool expr_mentions_reset(const ExprPtr& e) {
  if (!e) return false;
  if (e->kind == ExprKind::Ident &&
      (name_contains(e->name, "rst") || name_contains(e->name, "reset")))
    return true;
  return expr_mentions_reset(e->a) || expr_mentions_reset(e->b) || expr_mentions_reset(e->c);
}

inline bool expr_contains_ternary(const ExprPtr& e) {
  if (!e) return false;
  if (e->kind == ExprKind::Ternary) return true;
  return expr_contains_ternary(e->a) || expr_contains_ternary(e->b) ||
         expr_contains_ternary(e->c);
}

inline Span span_union(Span a, Span b) {
  if (!a.valid()) return b;
  if (!b.valid()) return a;
  return {std::min(a.begin, b.begin), std::max(a.end, b.end)};
}

// One assignment-bearing path discovered by the walker, before a Property is
// attached to it.
struct RawPath {
  std::vector<ExprPtr> terms;
  std::vector<AssignPair> assignments;
  Span span;
  bool from_case = false;
};

// Region without a fallback arm, remembered for optional stability output.
struct OpenRegion {
  std::vector<ExprPtr> terms;  // path condition of the not-taken path
  std::vector<std::string> assigned;  // signals the region can write
  bool from_case = false;
};

class PathWalker {
 public:
  std::vector<RawPath> paths;
  std::vector<OpenRegion> open_regions;

  void walk(const std::vector<StmtPtr>& stmts, std::vector<ExprPtr> terms, Span guard_span,
            bool from_case) {
    std::vector<StmtPtr> flat = flatten(stmts);
    bool direct_emitted = false;
    for (const auto& s : flat) {
      if (!s) continue;
      switch (s->kind) {
        case StmtKind::Assign:
          if (!direct_emitted) {
            emit_direct(flat, terms, guard_span, from_case);
            direct_emitted = true;
          }
          break;
        case StmtKind::If: walk_if(*s, terms, guard_span); break;
        case StmtKind::Case: walk_case(*s, terms, guard_span); break;
        case StmtKind::Block: break;  // flattened away
      }
    }
  }

 private:
  static std::vector<StmtPtr> flatten(const std::vector<StmtPtr>& stmts) {
    std::vector<StmtPtr> out;
    for (const auto& s : stmts) {
      if (s && s->kind == StmtKind::Block) {
        auto inner = flatten(s->stmts);
        out.insert(out.end(), inner.begin(), inner.end());
      } else if (s) {
        out.push_back(s);
      }
    }
    return out;
  }

  void emit_direct(const std::vector<StmtPtr>& flat, const std::vector<ExprPtr>& terms,
                   Span guard_span, bool from_case) {
    RawPath p;
    p.terms = terms;
    p.span = guard_span;
    p.from_case = from_case;
    for (const auto& s : flat) {
      if (!s || s->kind != StmtKind::Assign) continue;
      if (expr_contains_ternary(s->rhs))
        throw Error("UnsupportedStmt", "ternary right-hand side cannot feed a property");
      p.assignments.push_back({s->lhs, s->rhs, s->span});
      p.span = span_union(p.span, s->span);
    }
    // A signal assigned twice on one path keeps only its final value.
    std::map<std::string, size_t> last;
    for (size_t i = 0; i < p.assignments.size(); ++i)
      last[pretty_print_expr(p.assignments[i].lhs)] = i;
    std::vector<AssignPair> kept;
    for (size_t i = 0; i < p.assignments.size(); ++i)
      if (last[pretty_print_expr(p.assignments[i].lhs)] == i) kept.push_back(p.assignments[i]);
    p.assignments = std::move(kept);
    paths.push_back(std::move(p));
  }

  void walk_if(const Stmt& s, const std::vector<ExprPtr>& terms, Span guard_span) {
    std::vector<ExprPtr> negated;
    Span chain_span = guard_span;
    for (const auto& arm : s.arms) {
      if (expr_contains_ternary(arm.cond))
        throw Error("UnsupportedStmt", "ternary condition cannot feed a property");
      chain_span = span_union(chain_span, arm.cond->span);
      std::vector<ExprPtr> arm_terms = terms;
      arm_terms.insert(arm_terms.end(), negated.begin(), negated.end());
      arm_terms.push_back(arm.cond);
      walk(arm.body, std::move(arm_terms), chain_span, false);
      negated.push_back(negate_expr(arm.cond));
    }
    std::vector<ExprPtr> else_terms = terms;
    else_terms.insert(else_terms.end(), negated.begin(), negated.end());
    if (s.else_body) {
      walk(*s.else_body, std::move(else_terms), chain_span, false);
    } else {
      OpenRegion r;
      r.terms = std::move(else_terms);
      collect_assigned(s, r.assigned);
      open_regions.push_back(std::move(r));
    }
  }

  void walk_case(const Stmt& s, const std::vector<ExprPtr>& terms, Span guard_span) {
    if (expr_contains_ternary(s.selector))
      throw Error("UnsupportedStmt", "ternary selector cannot feed a property");
    Span sel_span = span_union(guard_span, s.selector->span);
    std::vector<ExprPtr> all_ne;
    for (const auto& arm : s.case_arms) {
      ExprPtr match;
      Span arm_span = sel_span;
      for (const auto& label : arm.labels) {
        ExprPtr eq = Expr::binary(BinaryOp::Eq, s.selector, label);
        match = match ? Expr::binary(BinaryOp::LogicOr, match, eq) : eq;
        arm_span = span_union(arm_span, label->span);
        all_ne.push_back(Expr::binary(BinaryOp::Ne, s.selector, label));
      }
      std::vector<ExprPtr> arm_terms = terms;
      arm_terms.push_back(match);
      walk(arm.body, std::move(arm_terms), arm_span, true);
    }
    std::vector<ExprPtr> default_terms = terms;
    default_terms.insert(default_terms.end(), all_ne.begin(), all_ne.end());
    if (s.default_body) {
      walk(*s.default_body, std::move(default_terms), sel_span, true);
    } else {
      OpenRegion r;
      r.terms = std::move(default_terms);
      r.from_case = true;
      collect_assigned(s, r.assigned);
      open_regions.push_back(std::move(r));
    }
  }

  static void collect_assigned(const Stmt& s, std::vector<std::string>& out) {
    auto add = [&out](const ExprPtr& lhs) {
      std::string name = pretty_print_expr(lhs);
      if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
    };
    switch (s.kind) {
      case StmtKind::Assign: add(s.lhs); break;
      case StmtKind::If:
        for (const auto& arm : s.arms)
          for (const auto& c : arm.body) collect_assigned(*c, out);
        if (s.else_body)
          for (const auto& c : *s.else_body) collect_assigned(*c, out);
        break;
      case StmtKind::Case:
        for (const auto& arm : s.case_arms)
          for (const auto& c : arm.body) collect_assigned(*c, out);
        if (s.default_body)
          for (const auto& c : *s.default_body) collect_assigned(*c, out);
        break;
      case StmtKind::Block:
        for (const auto& c : s.stmts) collect_assigned(*c, out);
        break;
    }
  }
};

inline std::optional<Clocking> block_clock(const AlwaysBlock& block,
                                           const std::optional<Clocking>& hint) {
  if (block.kind == AlwaysKind::AlwaysComb) return std::nullopt;
  if (hint) return hint;
  for (const auto& s : block.sensitivity)
    if (s.edge == EdgeKind::Posedge) return Clocking{EdgeKind::Posedge, s.signal};
  bool any_edge = false;
  for (const auto& s : block.sensitivity)
    if (s.edge != EdgeKind::Level) any_edge = true;
  if (any_edge)
    throw Error("NoClockFound", "edge-sensitive block has no posedge clock");
  return std::nullopt;
}

inline std::string category_of(const ExprPtr& path_condition,
                               const std::vector<AssignPair>& assignments, bool from_case) {
  if (expr_mentions_reset(path_condition)) return "Reset";
  for (const auto& a : assignments)
    if (a.lhs && name_contains(a.lhs->name, "err")) return "Err";
  return from_case ? "Case" : "Cond";
}

}  // namespace detail

// Derives one oracle property per assignment-bearing path of the block.
// Edge-sensitive blocks get a clocking event on their posedge clock (or on
// clock_hint); combinational blocks get none.
inline std::vector<PathAssertion> synthesize(const AlwaysBlock& block,
                                             const SynthOptions& opts = {}) {
  std::optional<Clocking> clock = detail::block_clock(block, opts.clock_hint);
  detail::PathWalker walker;
  walker.walk(block.body, {}, Span{}, false);

  std::vector<PathAssertion> out;
  int index = 0;
  for (auto& raw : walker.paths) {
    PathAssertion pa;
    pa.path_condition = conjunction(raw.terms);
    pa.assignments = std::move(raw.assignments);
    pa.source_span = raw.span;

    Property p;
    std::string cat = detail::category_of(pa.path_condition, pa.assignments, raw.from_case);
    p.name = std::string(clock ? "Sync" : "Async") + cat +
             detail::name_suffix(opts.name_seed, index);
    p.clocking = clock;
    p.antecedent = pa.path_condition;
    p.delay = 0;
    std::vector<ExprPtr> equalities;
    equalities.reserve(pa.assignments.size());
    for (const auto& a : pa.assignments)
      equalities.push_back(Expr::binary(BinaryOp::Eq, a.lhs, a.rhs));
    p.consequent = conjunction(equalities);
    p.span = pa.source_span;
    pa.property = std::move(p);
    out.push_back(std::move(pa));
    ++index;
  }
  return out;
}

// Optional companions for regions without a fallback arm: when no arm fires,
// every signal the region can write must hold its value.
inline std::vector<Property> stability_properties(const AlwaysBlock& block,
                                                  const SynthOptions& opts = {}) {
  std::optional<Clocking> clock = detail::block_clock(block, opts.clock_hint);
  detail::PathWalker walker;
  walker.walk(block.body, {}, Span{}, false);

  std::vector<Property> out;
  int index = 0;
  for (const auto& region : walker.open_regions) {
    if (region.assigned.empty()) continue;
    Property p;
    ExprPtr cond = conjunction(region.terms);
    p.name = std::string(clock ? "Sync" : "Async") + "Stable" +
             detail::name_suffix(derive_seed(opts.name_seed, 0x5741), index);
    p.clocking = clock;
    p.antecedent = cond;
    p.delay = 0;
    std::vector<ExprPtr> holds;
    for (const auto& name : region.assigned) {
      ExprPtr sig = Expr::ident(name);
      holds.push_back(Expr::binary(BinaryOp::Eq, sig, Expr::past(sig, 1)));
    }
    p.consequent = conjunction(holds);
    out.push_back(std::move(p));
    ++index;
  }
  return out;
}

// The reference antecedent for the path containing `span`: the smallest
// assignment-bearing path whose source span covers it.
inline ExprPtr oracle_antecedent(const AlwaysBlock& block, Span span) {
  detail::PathWalker walker;
  walker.walk(block.body, {}, Span{}, false);
  const detail::RawPath* best = nullptr;
  for (const auto& p : walker.paths) {
    if (!p.span.valid()) continue;
    if (p.span.begin <= span.begin && span.end <= p.span.end) {
      if (!best || (p.span.end - p.span.begin) < (best->span.end - best->span.begin))
        best = &p;
    }
  }
  if (!best) throw Error("SpanNotOnPath", "span is not inside any assignment-bearing path");
  return conjunction(best->terms);
}

// Concatenates pretty-printed properties, one paragraph each.
inline std::string print_assertion_file(const std::vector<Property>& properties) {
  std::string out;
  for (size_t i = 0; i < properties.size(); ++i) {
    if (i) out += "\n";
    out += pretty_print_property(properties[i]);
  }
  return out;
}

inline std::string print_assertion_file(const std::vector<PathAssertion>& paths) {
  std::vector<Property> props;
  props.reserve(paths.size());
  for (const auto& p : paths) props.push_back(p.property);
  return print_assertion_file(props);
}

}  // namespace svaforge

#endif  // SVAFORGE_SYNTH_HPP_
