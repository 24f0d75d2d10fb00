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
// AST for the synthesizable SystemVerilog subset this toolkit understands:
// expressions, procedural statements, always blocks, modules, and assertion
// properties. Nodes are immutable and shared through shared_ptr<const>, so
// subtrees can be reused freely (path conditions reuse guard expressions).

#ifndef SVAFORGE_AST_HPP_
#define SVAFORGE_AST_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "svaforge/util.hpp"

namespace svaforge {

// Byte range in the normalized source text, half-open. begin < 0 means the
// node was built programmatically and has no source location.
struct Span {
  int begin = -1;
  int end = -1;
  bool valid() const { return begin >= 0; }
};

// ---------------------------------------------------------------------------
// Values

// Two-valued bit vector, width 1..64. width == 0 marks a fill literal ('0 or
// '1) that has not been given a context width yet; bits is then 0 or 1 and
// means "all zeros" / "all ones".
struct Value {
  uint64_t bits = 0;
  int width = 1;

  bool is_fill() const { return width == 0; }
  bool truthy() const { return bits != 0; }
};

inline uint64_t width_mask(int width) {
  return width >= 64 ? ~0ULL : ((1ULL << width) - 1);
}

// Zero-extends or truncates to the given width; expands fill values.
inline Value resize_value(Value v, int width) {
  if (v.is_fill()) return {v.bits ? width_mask(width) : 0, width};
  return {v.bits & width_mask(width), width};
}

// ---------------------------------------------------------------------------
// Expressions

enum class ExprKind { Ident, Literal, Cast, Unary, Binary, Ternary, Past, Stable };
enum class LiteralBase { Bin, Hex, Dec, Fill };
enum class UnaryOp { LogicNot, BitNot, ReduceOr, Minus };
enum class BinaryOp {
  LogicAnd, LogicOr,
  Eq, Ne, Lt, Le, Gt, Ge,
  Add, Sub,
  BitAnd, BitOr, BitXor,
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  ExprKind kind;
  Span span;

  // Ident: name plus optional constant bit select. A non-constant select is
  // folded into the name by the parser ("bus[i]") and treated as atomic.
  std::string name;
  std::optional<int> index;

  // Literal: width empty for unsized decimals and fill literals.
  std::optional<int> width;
  LiteralBase base = LiteralBase::Dec;
  uint64_t value = 0;

  // Cast: width'(operand), operand in a.
  int cast_width = 0;

  UnaryOp uop = UnaryOp::LogicNot;
  BinaryOp bop = BinaryOp::LogicAnd;
  ExprPtr a, b, c;  // operands: unary/cast/past/stable use a; ternary uses a?b:c

  int past_depth = 1;

  static ExprPtr ident(std::string name, std::optional<int> index = std::nullopt) {
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::Ident;
    e->name = std::move(name);
    e->index = index;
    return e;
  }
  static ExprPtr literal(std::optional<int> width, LiteralBase base, uint64_t value) {
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::Literal;
    e->width = width;
    e->base = base;
    e->value = value;
    return e;
  }
  // '0 and '1
  static ExprPtr fill(bool ones) {
    return literal(std::nullopt, LiteralBase::Fill, ones ? 1 : 0);
  }
  static ExprPtr bit(bool one) { return literal(1, LiteralBase::Bin, one ? 1 : 0); }
  static ExprPtr cast(int width, ExprPtr inner) {
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::Cast;
    e->cast_width = width;
    e->a = std::move(inner);
    return e;
  }
  static ExprPtr unary(UnaryOp op, ExprPtr operand) {
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::Unary;
    e->uop = op;
    e->a = std::move(operand);
    return e;
  }
  static ExprPtr binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs) {
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::Binary;
    e->bop = op;
    e->a = std::move(lhs);
    e->b = std::move(rhs);
    return e;
  }
  static ExprPtr ternary(ExprPtr cond, ExprPtr then_v, ExprPtr else_v) {
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::Ternary;
    e->a = std::move(cond);
    e->b = std::move(then_v);
    e->c = std::move(else_v);
    return e;
  }
  static ExprPtr past(ExprPtr operand, int depth) {
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::Past;
    e->a = std::move(operand);
    e->past_depth = depth;
    return e;
  }
  static ExprPtr stable(ExprPtr operand) {
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::Stable;
    e->a = std::move(operand);
    return e;
  }
};

inline bool structural_equal(const ExprPtr& x, const ExprPtr& y) {
  if (x == y) return true;
  if (!x || !y) return false;
  if (x->kind != y->kind) return false;
  switch (x->kind) {
    case ExprKind::Ident:
      return x->name == y->name && x->index == y->index;
    case ExprKind::Literal:
      return x->width == y->width && x->base == y->base && x->value == y->value;
    case ExprKind::Cast:
      return x->cast_width == y->cast_width && structural_equal(x->a, y->a);
    case ExprKind::Unary:
      return x->uop == y->uop && structural_equal(x->a, y->a);
    case ExprKind::Binary:
      return x->bop == y->bop && structural_equal(x->a, y->a) && structural_equal(x->b, y->b);
    case ExprKind::Ternary:
      return structural_equal(x->a, y->a) && structural_equal(x->b, y->b) &&
             structural_equal(x->c, y->c);
    case ExprKind::Past:
      return x->past_depth == y->past_depth && structural_equal(x->a, y->a);
    case ExprKind::Stable:
      return structural_equal(x->a, y->a);
  }
  return false;
}

// Boolean negation with simplification. Double negation collapses (both !x
// and the 1-bit idiom ~x), De Morgan pushes through &&/||, and comparisons
// flip operators. This is what makes path conditions read the way designers
// write them: not(!rst_ni) is rst_ni, not(a && !b) is (!a || b).
inline ExprPtr negate_expr(const ExprPtr& e) {
  if (e->kind == ExprKind::Unary &&
      (e->uop == UnaryOp::LogicNot || e->uop == UnaryOp::BitNot)) {
    return e->a;
  }
  if (e->kind == ExprKind::Binary) {
    switch (e->bop) {
      case BinaryOp::LogicAnd:
        return Expr::binary(BinaryOp::LogicOr, negate_expr(e->a), negate_expr(e->b));
      case BinaryOp::LogicOr:
        return Expr::binary(BinaryOp::LogicAnd, negate_expr(e->a), negate_expr(e->b));
      case BinaryOp::Eq: return Expr::binary(BinaryOp::Ne, e->a, e->b);
      case BinaryOp::Ne: return Expr::binary(BinaryOp::Eq, e->a, e->b);
      case BinaryOp::Lt: return Expr::binary(BinaryOp::Ge, e->a, e->b);
      case BinaryOp::Ge: return Expr::binary(BinaryOp::Lt, e->a, e->b);
      case BinaryOp::Le: return Expr::binary(BinaryOp::Gt, e->a, e->b);
      case BinaryOp::Gt: return Expr::binary(BinaryOp::Le, e->a, e->b);
      default: break;
    }
  }
  return Expr::unary(UnaryOp::LogicNot, e);
}

// Left-associative conjunction of terms; empty list yields constant 1'b1.
inline ExprPtr conjunction(const std::vector<ExprPtr>& terms) {
  if (terms.empty()) return Expr::bit(true);
  ExprPtr acc = terms[0];
  for (size_t i = 1; i < terms.size(); ++i)
    acc = Expr::binary(BinaryOp::LogicAnd, acc, terms[i]);
  return acc;
}

// Left-associative disjunction; empty list yields constant 1'b0.
inline ExprPtr disjunction(const std::vector<ExprPtr>& terms) {
  if (terms.empty()) return Expr::bit(false);
  ExprPtr acc = terms[0];
  for (size_t i = 1; i < terms.size(); ++i)
    acc = Expr::binary(BinaryOp::LogicOr, acc, terms[i]);
  return acc;
}

inline void collect_idents(const ExprPtr& e, std::set<std::string>& out) {
  if (!e) return;
  if (e->kind == ExprKind::Ident) out.insert(e->name);
  collect_idents(e->a, out);
  collect_idents(e->b, out);
  collect_idents(e->c, out);
}

// ---------------------------------------------------------------------------
// Statements

enum class StmtKind { Assign, If, Case, Block };

struct Stmt;
using StmtPtr = std::shared_ptr<const Stmt>;

struct IfArm {
  ExprPtr cond;
  std::vector<StmtPtr> body;
};

struct CaseArm {
  std::vector<ExprPtr> labels;  // nonempty, sized literals
  std::vector<StmtPtr> body;
};

struct Stmt {
  StmtKind kind;
  Span span;

  // Assign
  ExprPtr lhs;  // Ident expression
  ExprPtr rhs;
  bool nonblocking = false;

  // If: arms[0] is the leading "if", later arms are "else if".
  std::vector<IfArm> arms;
  std::optional<std::vector<StmtPtr>> else_body;

  // Case
  ExprPtr selector;
  std::vector<CaseArm> case_arms;
  std::optional<std::vector<StmtPtr>> default_body;

  // Block
  std::vector<StmtPtr> stmts;

  static StmtPtr assign(ExprPtr lhs, ExprPtr rhs, bool nonblocking) {
    auto s = std::make_shared<Stmt>();
    s->kind = StmtKind::Assign;
    s->lhs = std::move(lhs);
    s->rhs = std::move(rhs);
    s->nonblocking = nonblocking;
    return s;
  }
  static StmtPtr if_stmt(std::vector<IfArm> arms,
                         std::optional<std::vector<StmtPtr>> else_body) {
    auto s = std::make_shared<Stmt>();
    s->kind = StmtKind::If;
    s->arms = std::move(arms);
    s->else_body = std::move(else_body);
    return s;
  }
  static StmtPtr case_stmt(ExprPtr selector, std::vector<CaseArm> arms,
                           std::optional<std::vector<StmtPtr>> default_body) {
    auto s = std::make_shared<Stmt>();
    s->kind = StmtKind::Case;
    s->selector = std::move(selector);
    s->case_arms = std::move(arms);
    s->default_body = std::move(default_body);
    return s;
  }
  static StmtPtr block(std::vector<StmtPtr> stmts) {
    auto s = std::make_shared<Stmt>();
    s->kind = StmtKind::Block;
    s->stmts = std::move(stmts);
    return s;
  }
};

inline bool structural_equal(const StmtPtr& x, const StmtPtr& y);

inline bool structural_equal(const std::vector<StmtPtr>& x, const std::vector<StmtPtr>& y) {
  if (x.size() != y.size()) return false;
  for (size_t i = 0; i < x.size(); ++i)
    if (!structural_equal(x[i], y[i])) return false;
  return true;
}

inline bool structural_equal(const StmtPtr& x, const StmtPtr& y) {
  if (x == y) return true;
  if (!x || !y || x->kind != y->kind) return false;
  switch (x->kind) {
    case StmtKind::Assign:
      return x->nonblocking == y->nonblocking && structural_equal(x->lhs, y->lhs) &&
             structural_equal(x->rhs, y->rhs);
    case StmtKind::If: {
      if (x->arms.size() != y->arms.size()) return false;
      for (size_t i = 0; i < x->arms.size(); ++i) {
        if (!structural_equal(x->arms[i].cond, y->arms[i].cond)) return false;
        if (!structural_equal(x->arms[i].body, y->arms[i].body)) return false;
      }
      if (x->else_body.has_value() != y->else_body.has_value()) return false;
      return !x->else_body || structural_equal(*x->else_body, *y->else_body);
    }
    case StmtKind::Case: {
      if (!structural_equal(x->selector, y->selector)) return false;
      if (x->case_arms.size() != y->case_arms.size()) return false;
      for (size_t i = 0; i < x->case_arms.size(); ++i) {
        const auto& ax = x->case_arms[i];
        const auto& ay = y->case_arms[i];
        if (ax.labels.size() != ay.labels.size()) return false;
        for (size_t j = 0; j < ax.labels.size(); ++j)
          if (!structural_equal(ax.labels[j], ay.labels[j])) return false;
        if (!structural_equal(ax.body, ay.body)) return false;
      }
      if (x->default_body.has_value() != y->default_body.has_value()) return false;
      return !x->default_body || structural_equal(*x->default_body, *y->default_body);
    }
    case StmtKind::Block:
      return structural_equal(x->stmts, y->stmts);
  }
  return false;
}

// ---------------------------------------------------------------------------
// Blocks, modules, properties

enum class AlwaysKind { Always, AlwaysFf, AlwaysComb };
enum class EdgeKind { Posedge, Negedge, Level };

struct SensItem {
  EdgeKind edge = EdgeKind::Level;
  std::string signal;
  bool operator==(const SensItem& o) const { return edge == o.edge && signal == o.signal; }
};

struct AlwaysBlock {
  AlwaysKind kind = AlwaysKind::AlwaysComb;
  std::vector<SensItem> sensitivity;  // empty for always_comb
  std::vector<StmtPtr> body;
  Span span;
};

inline bool structural_equal(const AlwaysBlock& x, const AlwaysBlock& y) {
  return x.kind == y.kind && x.sensitivity == y.sensitivity &&
         structural_equal(x.body, y.body);
}

enum class Direction { Input, Output, Internal };

struct Decl {
  std::string name;
  int width = 1;
  Direction direction = Direction::Internal;
  bool operator==(const Decl& o) const {
    return name == o.name && width == o.width && direction == o.direction;
  }
};

// ifdef region observed during preprocessing (offsets in the original text).
struct PpRegion {
  std::string macro;
  Span then_span;
  std::optional<Span> else_span;
};

struct RtlModule {
  std::string name;
  std::vector<Decl> decls;
  std::vector<AlwaysBlock> always_blocks;
  // Module items the subset does not model (instantiations, continuous
  // assigns); kept verbatim so printing does not lose them.
  std::vector<std::string> instantiations;
  std::vector<PpRegion> pp_regions;

  const Decl* find_decl(const std::string& n) const {
    for (const auto& d : decls)
      if (d.name == n) return &d;
    return nullptr;
  }
};

// Equality over the modeled content; pp_regions are provenance notes and do
// not survive printing (the printed text is post-preprocessing).
inline bool structural_equal(const RtlModule& x, const RtlModule& y) {
  if (x.name != y.name || x.decls != y.decls) return false;
  if (x.always_blocks.size() != y.always_blocks.size()) return false;
  for (size_t i = 0; i < x.always_blocks.size(); ++i)
    if (!structural_equal(x.always_blocks[i], y.always_blocks[i])) return false;
  return x.instantiations == y.instantiations;
}

struct Clocking {
  EdgeKind edge = EdgeKind::Posedge;
  std::string signal;
  bool operator==(const Clocking& o) const { return edge == o.edge && signal == o.signal; }
};

// An implication property: antecedent |-> ##delay consequent, with optional
// clocking and disable iff. Ternaries are legal in RTL expressions but not
// here; the parser and the synthesizer both enforce that.
struct Property {
  std::string name;
  std::optional<Clocking> clocking;
  ExprPtr disable_iff;  // null when absent
  ExprPtr antecedent;
  int delay = 0;
  ExprPtr consequent;
  Span span;
};

inline bool structural_equal(const Property& x, const Property& y) {
  if (x.name != y.name || x.clocking != y.clocking || x.delay != y.delay) return false;
  if ((x.disable_iff == nullptr) != (y.disable_iff == nullptr)) return false;
  if (x.disable_iff && !structural_equal(x.disable_iff, y.disable_iff)) return false;
  return structural_equal(x.antecedent, y.antecedent) &&
         structural_equal(x.consequent, y.consequent);
}

}  // namespace svaforge

#endif  // SVAFORGE_AST_HPP_
