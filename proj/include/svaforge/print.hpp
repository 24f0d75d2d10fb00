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
// Canonical pretty-printers. The contract that everything downstream leans
// on: parse(pretty_print(x)) is structurally identical to x. Parentheses are
// emitted from operator precedence (plus a few readability extras); since
// parentheses never create AST nodes, extras are harmless.

#ifndef SVAFORGE_PRINT_HPP_
#define SVAFORGE_PRINT_HPP_

#include <string>

#include "svaforge/ast.hpp"

namespace svaforge {

inline int binary_precedence(BinaryOp op) {
  switch (op) {
    case BinaryOp::LogicOr: return 1;
    case BinaryOp::LogicAnd: return 2;
    case BinaryOp::BitOr: return 3;
    case BinaryOp::BitXor: return 4;
    case BinaryOp::BitAnd: return 5;
    case BinaryOp::Eq:
    case BinaryOp::Ne: return 6;
    case BinaryOp::Lt:
    case BinaryOp::Le:
    case BinaryOp::Gt:
    case BinaryOp::Ge: return 7;
    case BinaryOp::Add:
    case BinaryOp::Sub: return 8;
  }
  return 0;
}

inline const char* binary_op_text(BinaryOp op) {
  switch (op) {
    case BinaryOp::LogicAnd: return "&&";
    case BinaryOp::LogicOr: return "||";
    case BinaryOp::Eq: return "==";
    case BinaryOp::Ne: return "!=";
    case BinaryOp::Lt: return "<";
    case BinaryOp::Le: return "<=";
    case BinaryOp::Gt: return ">";
    case BinaryOp::Ge: return ">=";
    case BinaryOp::Add: return "+";
    case BinaryOp::Sub: return "-";
    case BinaryOp::BitAnd: return "&";
    case BinaryOp::BitOr: return "|";
    case BinaryOp::BitXor: return "^";
  }
  return "?";
}

namespace detail {
constexpr int kTernaryPrec = 0;
constexpr int kUnaryPrec = 9;

inline std::string print_literal(const Expr& e) {
  if (e.base == LiteralBase::Fill) return e.value ? "'1" : "'0";
  if (!e.width) return std::to_string(e.value);
  int w = *e.width;
  std::string s = std::to_string(w);
  switch (e.base) {
    case LiteralBase::Bin: {
      s += "'b";
      std::string bits;
      for (int i = w - 1; i >= 0; --i) bits += ((e.value >> i) & 1) ? '1' : '0';
      s += bits;
      break;
    }
    case LiteralBase::Hex: {
      s += "'h";
      int digits = (w + 3) / 4;
      std::string hex;
      for (int i = digits - 1; i >= 0; --i) {
        int nib = static_cast<int>((e.value >> (4 * i)) & 0xf);
        hex += "0123456789abcdef"[nib];
      }
      s += hex;
      break;
    }
    case LiteralBase::Dec:
      s += "'d" + std::to_string(e.value);
      break;
    case LiteralBase::Fill:
      break;  // handled above
  }
  return s;
}

// parent_prec: precedence of the enclosing operator (0 = none).
// right_operand: true when this node is the right child of a same-precedence
// binary parent; left-associative grammars need parentheses there.
inline std::string print_expr_prec(const ExprPtr& e, int parent_prec, bool right_operand) {
  std::string s;
  int my_prec = 100;
  switch (e->kind) {
    case ExprKind::Ident:
      s = e->name;
      if (e->index) s += "[" + std::to_string(*e->index) + "]";
      break;
    case ExprKind::Literal:
      s = print_literal(*e);
      break;
    case ExprKind::Cast:
      s = std::to_string(e->cast_width) + "'(" + print_expr_prec(e->a, 0, false) + ")";
      break;
    case ExprKind::Past:
      s = "$past(" + print_expr_prec(e->a, 0, false);
      if (e->past_depth != 1) s += ", " + std::to_string(e->past_depth);
      s += ")";
      break;
    case ExprKind::Stable:
      s = "$stable(" + print_expr_prec(e->a, 0, false) + ")";
      break;
    case ExprKind::Unary: {
      my_prec = kUnaryPrec;
      const char* op = e->uop == UnaryOp::LogicNot ? "!"
                       : e->uop == UnaryOp::BitNot ? "~"
                       : e->uop == UnaryOp::ReduceOr ? "|"
                                                     : "-";
      if (e->uop == UnaryOp::ReduceOr) {
        // Reduction OR is always parenthesized so it can never fuse with a
        // neighboring binary |.
        s = "(|" + print_expr_prec(e->a, kUnaryPrec, false) + ")";
        my_prec = 100;
      } else {
        s = std::string(op) + print_expr_prec(e->a, kUnaryPrec, false);
      }
      break;
    }
    case ExprKind::Binary: {
      my_prec = binary_precedence(e->bop);
      s = print_expr_prec(e->a, my_prec, false);
      s += " ";
      s += binary_op_text(e->bop);
      s += " ";
      s += print_expr_prec(e->b, my_prec, true);
      break;
    }
    case ExprKind::Ternary: {
      my_prec = kTernaryPrec;
      s = print_expr_prec(e->a, kTernaryPrec + 1, false) + " ? " +
          print_expr_prec(e->b, kTernaryPrec + 1, false) + " : " +
          print_expr_prec(e->c, kTernaryPrec, true);
      break;
    }
  }
  bool need_parens = my_prec < parent_prec || (my_prec == parent_prec && right_operand);
  return need_parens ? "(" + s + ")" : s;
}
}  // namespace detail

inline std::string pretty_print_expr(const ExprPtr& e) {
  return detail::print_expr_prec(e, 0, false);
}

namespace detail {

inline void print_stmts(const std::vector<StmtPtr>& stmts, int indent, std::string& out);

inline void print_stmt(const StmtPtr& s, int indent, std::string& out) {
  std::string pad(indent, ' ');
  switch (s->kind) {
    case StmtKind::Assign:
      out += pad + pretty_print_expr(s->lhs) + (s->nonblocking ? " <= " : " = ") +
             pretty_print_expr(s->rhs) + ";\n";
      break;
    case StmtKind::If: {
      for (size_t i = 0; i < s->arms.size(); ++i) {
        out += (i == 0 ? pad + "if (" : "else if (");
        out += pretty_print_expr(s->arms[i].cond) + ") begin\n";
        print_stmts(s->arms[i].body, indent + 2, out);
        out += pad + "end ";
      }
      if (s->else_body) {
        out += "else begin\n";
        print_stmts(*s->else_body, indent + 2, out);
        out += pad + "end\n";
      } else {
        // trim the trailing space after the final "end"
        out.back() = '\n';
      }
      break;
    }
    case StmtKind::Case: {
      out += pad + "case (" + pretty_print_expr(s->selector) + ")\n";
      std::string apad(indent + 2, ' ');
      for (const auto& arm : s->case_arms) {
        out += apad;
        for (size_t i = 0; i < arm.labels.size(); ++i) {
          if (i) out += ", ";
          out += pretty_print_expr(arm.labels[i]);
        }
        out += ": begin\n";
        print_stmts(arm.body, indent + 4, out);
        out += apad + "end\n";
      }
      if (s->default_body) {
        out += apad + "default: begin\n";
        print_stmts(*s->default_body, indent + 4, out);
        out += apad + "end\n";
      }
      out += pad + "endcase\n";
      break;
    }
    case StmtKind::Block:
      out += pad + "begin\n";
      print_stmts(s->stmts, indent + 2, out);
      out += pad + "end\n";
      break;
  }
}

inline void print_stmts(const std::vector<StmtPtr>& stmts, int indent, std::string& out) {
  for (const auto& s : stmts) print_stmt(s, indent, out);
}

inline std::string print_sensitivity(const std::vector<SensItem>& sens) {
  std::string s = "@(";
  for (size_t i = 0; i < sens.size(); ++i) {
    if (i) s += " or ";
    switch (sens[i].edge) {
      case EdgeKind::Posedge: s += "posedge "; break;
      case EdgeKind::Negedge: s += "negedge "; break;
      case EdgeKind::Level: break;
    }
    s += sens[i].signal;
  }
  return s + ")";
}

}  // namespace detail

inline std::string pretty_print_always(const AlwaysBlock& b, int indent = 2) {
  std::string pad(indent, ' ');
  std::string out = pad;
  switch (b.kind) {
    case AlwaysKind::Always:
      out += "always " + detail::print_sensitivity(b.sensitivity);
      break;
    case AlwaysKind::AlwaysFf:
      out += "always_ff " + detail::print_sensitivity(b.sensitivity);
      break;
    case AlwaysKind::AlwaysComb:
      out += "always_comb";
      break;
  }
  out += " begin\n";
  detail::print_stmts(b.body, indent + 2, out);
  out += pad + "end\n";
  return out;
}

inline std::string pretty_print_module(const RtlModule& m) {
  std::string out = "module " + m.name;
  std::vector<const Decl*> ports, internals;
  for (const auto& d : m.decls)
    (d.direction == Direction::Internal ? internals : ports).push_back(&d);
  if (!ports.empty()) {
    out += " (\n";
    for (size_t i = 0; i < ports.size(); ++i) {
      const Decl& d = *ports[i];
      out += "  ";
      out += d.direction == Direction::Input ? "input logic " : "output logic ";
      if (d.width > 1) out += "[" + std::to_string(d.width - 1) + ":0] ";
      out += d.name;
      out += (i + 1 < ports.size()) ? ",\n" : "\n";
    }
    out += ");\n";
  } else {
    out += ";\n";
  }
  for (const Decl* d : internals) {
    out += "  logic ";
    if (d->width > 1) out += "[" + std::to_string(d->width - 1) + ":0] ";
    out += d->name + ";\n";
  }
  for (const auto& b : m.always_blocks) out += pretty_print_always(b);
  for (const auto& inst : m.instantiations) out += "  " + inst + "\n";
  out += "endmodule\n";
  return out;
}

// property <name>; [@(<edge> <signal>)] [disable iff (<e>)]
//   (<antecedent terms>) |-> [##N] <consequent>; endproperty
// Top-level && terms of the antecedent are individually parenthesized; that
// is the house style for path conditions and costs nothing structurally.
inline std::string pretty_print_property(const Property& p) {
  std::string out = "property " + p.name + "; ";
  if (p.clocking) {
    out += "@(";
    out += p.clocking->edge == EdgeKind::Posedge ? "posedge " : "negedge ";
    out += p.clocking->signal + ") ";
  }
  if (p.disable_iff) out += "disable iff (" + pretty_print_expr(p.disable_iff) + ") ";
  std::vector<ExprPtr> terms;
  for (ExprPtr e = p.antecedent;;) {
    if (e->kind == ExprKind::Binary && e->bop == BinaryOp::LogicAnd) {
      terms.insert(terms.begin(), e->b);
      e = e->a;
    } else {
      terms.insert(terms.begin(), e);
      break;
    }
  }
  for (size_t i = 0; i < terms.size(); ++i) {
    if (i) out += " && ";
    out += "(" + pretty_print_expr(terms[i]) + ")";
  }
  out += " |-> ";
  if (p.delay > 0) out += "##" + std::to_string(p.delay) + " ";
  out += pretty_print_expr(p.consequent);
  out += "; endproperty";
  return out;
}

}  // namespace svaforge

#endif  // SVAFORGE_PRINT_HPP_
