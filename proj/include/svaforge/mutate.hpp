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
// Mutation engine: enumerates every applicable single-site code change and
// produces one mutated module per site. Each mutant differs from the
// original at exactly one AST node (BranchAssignSwap touches the two nodes
// it exchanges). Mutants come back ordered by (site offset, operator name).

#ifndef SVAFORGE_MUTATE_HPP_
#define SVAFORGE_MUTATE_HPP_

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "svaforge/ast.hpp"
#include "svaforge/print.hpp"

namespace svaforge {

enum class MutOp {
  NegateCond,
  RelOpSwap,
  LogicOpSwap,
  ConstPerturb,
  BranchAssignSwap,
  StuckTrue,
  StuckFalse,
};

inline const char* mut_op_name(MutOp op) {
  switch (op) {
    case MutOp::NegateCond: return "NegateCond";
    case MutOp::RelOpSwap: return "RelOpSwap";
    case MutOp::LogicOpSwap: return "LogicOpSwap";
    case MutOp::ConstPerturb: return "ConstPerturb";
    case MutOp::BranchAssignSwap: return "BranchAssignSwap";
    case MutOp::StuckTrue: return "StuckTrue";
    case MutOp::StuckFalse: return "StuckFalse";
  }
  return "?";
}

inline std::set<MutOp> all_mut_ops() {
  return {MutOp::NegateCond,   MutOp::RelOpSwap,  MutOp::LogicOpSwap,
          MutOp::ConstPerturb, MutOp::BranchAssignSwap,
          MutOp::StuckTrue,    MutOp::StuckFalse};
}

inline std::optional<MutOp> mut_op_from_name(const std::string& name) {
  for (MutOp op : all_mut_ops())
    if (name == mut_op_name(op)) return op;
  return std::nullopt;
}

struct Mutant {
  MutOp op = MutOp::NegateCond;
  Span site;
  RtlModule module;
  std::string description;
};

namespace detail {

inline std::optional<BinaryOp> relop_swap(BinaryOp op) {
  switch (op) {
    case BinaryOp::Eq: return BinaryOp::Ne;
    case BinaryOp::Ne: return BinaryOp::Eq;
    case BinaryOp::Lt: return BinaryOp::Ge;
    case BinaryOp::Ge: return BinaryOp::Lt;
    case BinaryOp::Le: return BinaryOp::Gt;
    case BinaryOp::Gt: return BinaryOp::Le;
    default: return std::nullopt;
  }
}

// Lowest-bit flip; fills become explicit single bits so the flip is visible.
inline ExprPtr perturb_literal(const Expr& e) {
  ExprPtr out;
  if (e.base == LiteralBase::Fill) {
    out = Expr::bit(e.value == 0);
  } else {
    uint64_t v = e.value ^ 1ULL;
    if (e.width) v &= width_mask(*e.width);
    out = Expr::literal(e.width, e.base, v);
  }
  const_cast<Expr*>(out.get())->span = e.span;
  return out;
}

inline uint64_t literal_compare_key(const Expr& e) {
  if (e.base == LiteralBase::Fill) return e.value ? ~0ULL : 0ULL;
  return e.value;
}

// The walk visits candidate sites in one fixed order. Pass 1 (target < 0)
// records them; pass 2 rebuilds the tree with site `target` mutated.
class MutWalker {
 public:
  struct Site {
    MutOp op;
    Span span;
    int id;  // position in walk order
    std::string description;
  };

  std::vector<Site> sites;
  int target = -1;
  MutOp target_op = MutOp::NegateCond;

  ExprPtr walk_expr(const ExprPtr& e, const std::vector<ExprPtr>* sibling_labels) {
    if (!e) return e;
    ExprPtr result = e;
    if (e->kind == ExprKind::Literal) {
      bool collides = false;
      if (sibling_labels) {
        uint64_t flipped = literal_compare_key(*perturb_literal(*e));
        for (const auto& l : *sibling_labels)
          if (l.get() != e.get() && l->kind == ExprKind::Literal &&
              literal_compare_key(*l) == flipped)
            collides = true;
      }
      if (!collides) {
        if (visit(MutOp::ConstPerturb, e->span, "flip low bit of " + pretty_print_expr(e)))
          return perturb_literal(*e);
      }
      return e;
    }
    if (e->kind == ExprKind::Binary) {
      if (auto swapped = relop_swap(e->bop)) {
        if (visit(MutOp::RelOpSwap, e->span,
                  binary_op_text(e->bop) + std::string(" to ") + binary_op_text(*swapped))) {
          auto r = Expr::binary(*swapped, e->a, e->b);
          const_cast<Expr*>(r.get())->span = e->span;
          return r;
        }
      }
      if (e->bop == BinaryOp::LogicAnd || e->bop == BinaryOp::LogicOr) {
        BinaryOp other = e->bop == BinaryOp::LogicAnd ? BinaryOp::LogicOr : BinaryOp::LogicAnd;
        if (visit(MutOp::LogicOpSwap, e->span,
                  binary_op_text(e->bop) + std::string(" to ") + binary_op_text(other))) {
          auto r = Expr::binary(other, e->a, e->b);
          const_cast<Expr*>(r.get())->span = e->span;
          return r;
        }
      }
    }
    ExprPtr a = walk_expr(e->a, nullptr);
    ExprPtr b = walk_expr(e->b, nullptr);
    ExprPtr c = walk_expr(e->c, nullptr);
    if (a != e->a || b != e->b || c != e->c) {
      auto r = std::make_shared<Expr>(*e);
      r->a = a;
      r->b = b;
      r->c = c;
      result = r;
    }
    return result;
  }

  ExprPtr walk_guard(const ExprPtr& cond) {
    if (visit(MutOp::NegateCond, cond->span, "negate " + pretty_print_expr(cond))) {
      auto r = Expr::unary(UnaryOp::LogicNot, cond);
      const_cast<Expr*>(r.get())->span = cond->span;
      return r;
    }
    if (visit(MutOp::StuckTrue, cond->span, "force guard true")) {
      auto r = Expr::bit(true);
      const_cast<Expr*>(r.get())->span = cond->span;
      return r;
    }
    if (visit(MutOp::StuckFalse, cond->span, "force guard false")) {
      auto r = Expr::bit(false);
      const_cast<Expr*>(r.get())->span = cond->span;
      return r;
    }
    return walk_expr(cond, nullptr);
  }

  std::vector<StmtPtr> walk_stmts(const std::vector<StmtPtr>& stmts) {
    std::vector<StmtPtr> out;
    out.reserve(stmts.size());
    bool changed = false;
    for (const auto& s : stmts) {
      StmtPtr n = walk_stmt(s);
      if (n != s) changed = true;
      out.push_back(n);
    }
    return changed ? out : stmts;
  }

  StmtPtr walk_stmt(const StmtPtr& s) {
    if (!s) return s;
    switch (s->kind) {
      case StmtKind::Assign: {
        ExprPtr rhs = walk_expr(s->rhs, nullptr);
        if (rhs == s->rhs) return s;
        auto n = std::make_shared<Stmt>(*s);
        n->rhs = rhs;
        return n;
      }
      case StmtKind::If: {
        auto n = std::make_shared<Stmt>(*s);
        bool changed = false;
        for (auto& arm : n->arms) {
          ExprPtr cond = walk_guard(arm.cond);
          if (cond != arm.cond) changed = true;
          arm.cond = cond;
          auto body = walk_stmts(arm.body);
          if (body != arm.body) changed = true;
          arm.body = std::move(body);
        }
        if (n->else_body) {
          auto body = walk_stmts(*n->else_body);
          if (body != *n->else_body) changed = true;
          n->else_body = std::move(body);
        }
        changed |= walk_swap_sites(*n);
        return changed ? StmtPtr(n) : s;
      }
      case StmtKind::Case: {
        auto n = std::make_shared<Stmt>(*s);
        bool changed = false;
        ExprPtr sel = walk_expr(n->selector, nullptr);
        if (sel != n->selector) changed = true;
        n->selector = sel;
        std::vector<ExprPtr> all_labels;
        for (const auto& arm : n->case_arms)
          all_labels.insert(all_labels.end(), arm.labels.begin(), arm.labels.end());
        for (auto& arm : n->case_arms) {
          for (auto& label : arm.labels) {
            ExprPtr l = walk_expr(label, &all_labels);
            if (l != label) changed = true;
            label = l;
          }
          auto body = walk_stmts(arm.body);
          if (body != arm.body) changed = true;
          arm.body = std::move(body);
        }
        if (n->default_body) {
          auto body = walk_stmts(*n->default_body);
          if (body != *n->default_body) changed = true;
          n->default_body = std::move(body);
        }
        changed |= walk_swap_sites(*n);
        return changed ? StmtPtr(n) : s;
      }
      case StmtKind::Block: {
        auto body = walk_stmts(s->stmts);
        if (body == s->stmts) return s;
        auto n = std::make_shared<Stmt>(*s);
        n->stmts = std::move(body);
        return n;
      }
    }
    return s;
  }

 private:
  bool visit(MutOp op, Span span, std::string description) {
    int id = next_id_++;
    if (target < 0) {
      sites.push_back({op, span, id, std::move(description)});
      return false;
    }
    return id == target && op == target_op;
  }

  // RHS exchange between two bodies of one region that assign the same
  // signal. The mutation rewrites both assignments, so it is handled at the
  // region node rather than per expression.
  bool walk_swap_sites(Stmt& region) {
    std::vector<std::vector<StmtPtr>*> bodies;
    if (region.kind == StmtKind::If) {
      for (auto& arm : region.arms) bodies.push_back(&arm.body);
      if (region.else_body) bodies.push_back(&*region.else_body);
    } else {
      for (auto& arm : region.case_arms) bodies.push_back(&arm.body);
      if (region.default_body) bodies.push_back(&*region.default_body);
    }
    bool changed = false;
    for (size_t i = 0; i < bodies.size(); ++i) {
      for (size_t j = i + 1; j < bodies.size(); ++j) {
        for (size_t ai = 0; ai < bodies[i]->size(); ++ai) {
          const StmtPtr& x = (*bodies[i])[ai];
          if (!x || x->kind != StmtKind::Assign) continue;
          std::string lhs = pretty_print_expr(x->lhs);
          for (size_t aj = 0; aj < bodies[j]->size(); ++aj) {
            const StmtPtr& y = (*bodies[j])[aj];
            if (!y || y->kind != StmtKind::Assign) continue;
            if (pretty_print_expr(y->lhs) != lhs) continue;
            if (structural_equal(x->rhs, y->rhs)) continue;  // swap is a no-op
            Span site{std::min(x->span.begin, y->span.begin),
                      std::max(x->span.end, y->span.end)};
            if (visit(MutOp::BranchAssignSwap, site, "exchange values of " + lhs)) {
              auto nx = std::make_shared<Stmt>(*x);
              auto ny = std::make_shared<Stmt>(*y);
              std::swap(nx->rhs, ny->rhs);
              (*bodies[i])[ai] = nx;
              (*bodies[j])[aj] = ny;
              changed = true;
            }
            break;  // first matching assignment in body j
          }
        }
      }
    }
    return changed;
  }

  int next_id_ = 0;
};

inline RtlModule apply_mutation(const RtlModule& m, int target, MutOp op) {
  MutWalker w;
  w.target = target;
  w.target_op = op;
  RtlModule out = m;
  for (auto& b : out.always_blocks) b.body = w.walk_stmts(b.body);
  return out;
}

}  // namespace detail

// Enumerates every applicable mutant of the module. The seed parameter is
// accepted for interface stability; enumeration itself is exhaustive and
// deterministic.
inline std::vector<Mutant> mutate(const RtlModule& m,
                                  const std::set<MutOp>& ops = all_mut_ops(),
                                  uint64_t seed = 0) {
  (void)seed;
  detail::MutWalker scan;
  {
    RtlModule scratch = m;
    for (auto& b : scratch.always_blocks) b.body = scan.walk_stmts(b.body);
  }
  std::vector<detail::MutWalker::Site> sites;
  for (const auto& s : scan.sites)
    if (ops.count(s.op)) sites.push_back(s);
  std::stable_sort(sites.begin(), sites.end(),
                   [](const detail::MutWalker::Site& a, const detail::MutWalker::Site& b) {
                     if (a.span.begin != b.span.begin) return a.span.begin < b.span.begin;
                     return std::string(mut_op_name(a.op)) < mut_op_name(b.op);
                   });
  std::vector<Mutant> out;
  out.reserve(sites.size());
  for (const auto& s : sites) {
    Mutant mu;
    mu.op = s.op;
    mu.site = s.span;
    mu.description = s.description;
    mu.module = detail::apply_mutation(m, s.id, s.op);
    out.push_back(std::move(mu));
  }
  return out;
}

}  // namespace svaforge

#endif  // SVAFORGE_MUTATE_HPP_
