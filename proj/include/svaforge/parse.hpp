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
// Recursive-descent parsers for the RTL subset and for assertion files.
// Both are best-effort: errors produce diagnostics and the parser resyncs,
// so one bad construct does not take the rest of the file down. Diagnostics
// come back ordered by byte offset. Module items the subset does not model
// (instantiations, continuous assigns, inline assertions) are preserved as
// opaque text so printing stays lossless.

#ifndef SVAFORGE_PARSE_HPP_
#define SVAFORGE_PARSE_HPP_

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "svaforge/ast.hpp"
#include "svaforge/lex.hpp"
#include "svaforge/preprocess.hpp"
#include "svaforge/print.hpp"
#include "svaforge/util.hpp"

namespace svaforge {

struct Diagnostic {
  std::string code;
  std::string message;
  int offset = 0;
  bool is_error = true;
};

inline std::string format_diagnostic(const Diagnostic& d) {
  return (d.is_error ? "error " : "warning ") + d.code + " at byte " +
         std::to_string(d.offset) + ": " + d.message;
}

struct ParsedFile {
  std::vector<RtlModule> modules;
  std::vector<Diagnostic> diagnostics;

  bool has_errors() const {
    for (const auto& d : diagnostics)
      if (d.is_error) return true;
    return false;
  }
};

struct PropertySet {
  std::vector<Property> properties;  // the ones that parsed cleanly
  std::vector<Diagnostic> diagnostics;
  int declared_units = 0;  // every `property`/`assert property` opener
};

namespace detail {

class Parser {
 public:
  Parser(const std::string& src, std::vector<Diagnostic>& diags)
      : src_(src), toks_(lex(src)), diags_(diags) {}

  // ---- token plumbing ----
  const Token& cur() const { return toks_[p_]; }
  const Token& at(size_t k) const {
    return toks_[std::min(p_ + k, toks_.size() - 1)];
  }
  void advance() {
    if (p_ + 1 < toks_.size()) ++p_;
  }
  bool done() const { return cur().kind == Tok::End; }
  int tok_end(const Token& t) const { return t.pos + static_cast<int>(t.text.size()); }

  bool eat(Tok k) {
    if (cur().kind != k) return false;
    advance();
    return true;
  }
  bool eat_kw(const char* kw) {
    if (!cur().is_ident(kw)) return false;
    advance();
    return true;
  }
  bool expect(Tok k, const char* what) {
    if (eat(k)) return true;
    error("E_EXPECTED_TOKEN", std::string("expected ") + what + " before '" +
                                   (cur().text.empty() ? "<eof>" : cur().text) + "'");
    return false;
  }

  void error(const std::string& code, const std::string& msg) { error(code, msg, cur().pos); }
  void error(const std::string& code, const std::string& msg, int offset) {
    diags_.push_back({code, msg, offset, true});
  }
  void warn(const std::string& code, const std::string& msg, int offset) {
    diags_.push_back({code, msg, offset, false});
  }

  // ---- expressions ----
  // allow_ternary: RTL expressions may use ?:, property expressions may not.
  // Inside properties a bare '=' is a hard error; the caller inspects
  // assign_offset() afterwards to attribute it to antecedent or consequent.
  ExprPtr parse_expression(bool allow_ternary) {
    assign_offset_ = -1;
    ExprPtr e = parse_binary(1, allow_ternary);
    if (!e) return nullptr;
    if (allow_ternary && cur().kind == Tok::Question) {
      advance();
      ExprPtr then_v = parse_expression(true);
      if (!expect(Tok::Colon, "':' of ternary")) return nullptr;
      ExprPtr else_v = parse_expression(true);
      if (!then_v || !else_v) return nullptr;
      auto t = Expr::ternary(e, then_v, else_v);
      const_cast<Expr*>(t.get())->span = {e->span.begin, else_v->span.end};
      return t;
    }
    return e;
  }

  int assign_offset() const { return assign_offset_; }

  ExprPtr parse_binary(int min_prec, bool allow_ternary) {
    ExprPtr lhs = parse_unary(allow_ternary);
    if (!lhs) return nullptr;
    for (;;) {
      if (cur().kind == Tok::Assign && assign_offset_ < 0) {
        // Not an operator in any expression context; remembered so property
        // parsing can report E_ASSIGN_IN_ANTECEDENT/CONSEQUENT precisely.
        assign_offset_ = cur().pos;
        return lhs;
      }
      std::optional<BinaryOp> op = binary_op_of(cur());
      if (!op) return lhs;
      int prec = binary_precedence(*op);
      if (prec < min_prec) return lhs;
      if (cur().text.size() == 3)
        warn("W_FOURSTATE_OP", "4-state operator '" + cur().text + "' treated as '" +
                                   cur().text.substr(0, 2) + "'", cur().pos);
      advance();
      ExprPtr rhs = parse_binary(prec + 1, allow_ternary);
      if (!rhs) return nullptr;
      auto e = Expr::binary(*op, lhs, rhs);
      const_cast<Expr*>(e.get())->span = {lhs->span.begin, rhs->span.end};
      lhs = e;
    }
  }

  ExprPtr parse_unary(bool allow_ternary) {
    const Token& t = cur();
    std::optional<UnaryOp> op;
    switch (t.kind) {
      case Tok::Bang: op = UnaryOp::LogicNot; break;
      case Tok::Tilde: op = UnaryOp::BitNot; break;
      case Tok::Minus: op = UnaryOp::Minus; break;
      case Tok::Pipe: op = UnaryOp::ReduceOr; break;
      default: break;
    }
    if (op) {
      int begin = t.pos;
      advance();
      ExprPtr inner = parse_unary(allow_ternary);
      if (!inner) return nullptr;
      auto e = Expr::unary(*op, inner);
      const_cast<Expr*>(e.get())->span = {begin, inner->span.end};
      return e;
    }
    return parse_primary(allow_ternary);
  }

  ExprPtr parse_primary(bool allow_ternary) {
    const Token& t = cur();
    int begin = t.pos;
    switch (t.kind) {
      case Tok::LParen: {
        advance();
        ExprPtr inner = parse_expression(allow_ternary);
        if (!inner) return nullptr;
        if (cur().kind != Tok::RParen) {
          if (assign_offset_ < 0)
            error("E_UNBALANCED_PARENS", "missing ')'", begin);
          return inner;
        }
        advance();
        return inner;  // parentheses do not create nodes
      }
      case Tok::Ident: {
        if (t.text == "$past" || t.text == "$stable") {
          bool is_past = t.text == "$past";
          advance();
          if (!expect(Tok::LParen, "'('")) return nullptr;
          ExprPtr inner = parse_expression(allow_ternary);
          if (!inner) return nullptr;
          int depth = 1;
          if (is_past && eat(Tok::Comma)) {
            if (cur().kind == Tok::Number && cur().lit_valid && cur().lit_value >= 1) {
              depth = static_cast<int>(cur().lit_value);
              advance();
            } else {
              error("E_BAD_LITERAL", "$past depth must be a positive integer");
              return nullptr;
            }
          }
          int end_pos = tok_end(cur());
          if (!expect(Tok::RParen, "')'")) return nullptr;
          auto e = is_past ? Expr::past(inner, depth) : Expr::stable(inner);
          const_cast<Expr*>(e.get())->span = {begin, end_pos};
          return e;
        }
        if (is_sv_keyword(t.text)) {
          error("E_EXPECTED_TOKEN", "expected expression, found keyword '" + t.text + "'");
          return nullptr;
        }
        std::string name = t.text;
        advance();
        std::optional<int> index;
        int end_pos = begin + static_cast<int>(name.size());
        if (cur().kind == Tok::LBracket) {
          advance();
          if (cur().kind == Tok::Number && cur().lit_valid) {
            index = static_cast<int>(cur().lit_value);
            advance();
          } else if (cur().kind == Tok::Ident && !is_sv_keyword(cur().text)) {
            // Symbolic select (bus[i]); folded into the name and treated as
            // an atomic identifier.
            name += "[" + cur().text + "]";
            advance();
          } else {
            error("E_EXPECTED_TOKEN", "expected bit index");
            return nullptr;
          }
          end_pos = tok_end(cur());
          if (!expect(Tok::RBracket, "']'")) return nullptr;
        }
        auto e = Expr::ident(name, index);
        const_cast<Expr*>(e.get())->span = {begin, end_pos};
        return e;
      }
      case Tok::Number: {
        if (!t.lit_valid) {
          error("E_BAD_LITERAL", "bad numeric literal '" + t.text + "'");
          advance();
          return nullptr;
        }
        if (at(1).kind == Tok::CastTick) {
          // width'(expr)
          int width = static_cast<int>(t.lit_value);
          if (width < 1 || width > 64) {
            error("E_BAD_LITERAL", "cast width must be 1..64");
            advance();
            return nullptr;
          }
          advance();  // number
          advance();  // '
          if (!expect(Tok::LParen, "'(' of cast")) return nullptr;
          ExprPtr inner = parse_expression(allow_ternary);
          if (!inner) return nullptr;
          int end_pos = tok_end(cur());
          if (!expect(Tok::RParen, "')' of cast")) return nullptr;
          auto e = Expr::cast(width, inner);
          const_cast<Expr*>(e.get())->span = {begin, end_pos};
          return e;
        }
        auto e = Expr::literal(std::nullopt, LiteralBase::Dec, t.lit_value);
        const_cast<Expr*>(e.get())->span = {begin, tok_end(t)};
        advance();
        return e;
      }
      case Tok::BasedLiteral: {
        if (!t.lit_valid) {
          error("E_BAD_LITERAL", "bad literal '" + t.text + "'");
          advance();
          return nullptr;
        }
        // Unsized based literals ('b101) are normalized to plain decimals;
        // the base is display-only and width-free bases do not round-trip.
        LiteralBase base = t.lit_width ? t.lit_base : LiteralBase::Dec;
        if (t.lit_base == LiteralBase::Fill) base = LiteralBase::Fill;
        auto e = Expr::literal(t.lit_width, base, t.lit_value);
        const_cast<Expr*>(e.get())->span = {begin, tok_end(t)};
        advance();
        return e;
      }
      default:
        error("E_EXPECTED_TOKEN", "expected expression before '" +
                                      (t.text.empty() ? "<eof>" : t.text) + "'");
        return nullptr;
    }
  }

  static std::optional<BinaryOp> binary_op_of(const Token& t) {
    switch (t.kind) {
      case Tok::AndAnd: return BinaryOp::LogicAnd;
      case Tok::OrOr: return BinaryOp::LogicOr;
      case Tok::Eq: return BinaryOp::Eq;
      case Tok::Ne: return BinaryOp::Ne;
      case Tok::Lt: return BinaryOp::Lt;
      case Tok::Le: return BinaryOp::Le;
      case Tok::Gt: return BinaryOp::Gt;
      case Tok::Ge: return BinaryOp::Ge;
      case Tok::Plus: return BinaryOp::Add;
      case Tok::Minus: return BinaryOp::Sub;
      case Tok::Amp: return BinaryOp::BitAnd;
      case Tok::Pipe: return BinaryOp::BitOr;
      case Tok::Caret: return BinaryOp::BitXor;
      default: return std::nullopt;
    }
  }

  // ---- statements ----

  // Leaves p_ after the statement; returns null after reporting + resync.
  StmtPtr parse_stmt() {
    eat_kw("unique");
    eat_kw("priority");
    const Token& t = cur();
    int begin = t.pos;
    if (t.is_ident("begin")) {
      advance();
      if (eat(Tok::Colon)) eat(Tok::Ident);  // block label
      std::vector<StmtPtr> stmts;
      while (!done() && !cur().is_ident("end")) {
        StmtPtr s = parse_stmt();
        if (s) stmts.push_back(s);
      }
      if (done()) {
        error("E_UNBALANCED_BEGIN_END", "'begin' without matching 'end'", begin);
        return nullptr;
      }
      int end_pos = tok_end(cur());
      advance();  // end
      if (eat(Tok::Colon)) eat(Tok::Ident);
      auto s = Stmt::block(std::move(stmts));
      const_cast<Stmt*>(s.get())->span = {begin, end_pos};
      return s;
    }
    if (t.is_ident("if")) return parse_if(begin);
    if (t.is_ident("case") || t.is_ident("casez") || t.is_ident("casex"))
      return parse_case(begin);
    if (t.kind == Tok::Semi) {
      advance();
      return nullptr;  // empty statement
    }
    if (t.kind == Tok::Ident && !is_sv_keyword(t.text)) return parse_assign(begin);
    error("E_UNKNOWN_TOKEN", "unexpected '" + (t.text.empty() ? "<eof>" : t.text) +
                                 "' in statement position");
    resync_stmt();
    return nullptr;
  }

  // A statement used as an if/case body, flattened to a list: begin/end
  // contributes its children, a single statement contributes itself.
  std::vector<StmtPtr> parse_body() {
    const bool block = cur().is_ident("begin");
    StmtPtr s = parse_stmt();
    if (!s) return {};
    if (block && s->kind == StmtKind::Block) return s->stmts;
    return {s};
  }

  StmtPtr parse_if(int begin) {
    advance();  // if
    std::vector<IfArm> arms;
    std::optional<std::vector<StmtPtr>> else_body;
    int end_pos = begin;
    for (;;) {
      if (!expect(Tok::LParen, "'(' after if")) {
        resync_stmt();
        return nullptr;
      }
      ExprPtr cond = parse_expression(true);
      if (!cond) {
        resync_stmt();
        return nullptr;
      }
      if (!expect(Tok::RParen, "')' after if condition")) {
        resync_stmt();
        return nullptr;
      }
      size_t before = p_;
      std::vector<StmtPtr> body = parse_body();
      if (body.empty() && p_ == before) return nullptr;
      end_pos = body.empty() ? tok_end(cur()) : body.back()->span.end;
      arms.push_back({cond, std::move(body)});
      if (!cur().is_ident("else")) break;
      advance();  // else
      if (cur().is_ident("if")) {
        advance();
        continue;
      }
      size_t before_else = p_;
      std::vector<StmtPtr> eb = parse_body();
      if (eb.empty() && p_ == before_else) return nullptr;
      if (!eb.empty()) end_pos = eb.back()->span.end;
      else_body = std::move(eb);
      break;
    }
    auto s = Stmt::if_stmt(std::move(arms), std::move(else_body));
    const_cast<Stmt*>(s.get())->span = {begin, end_pos};
    return s;
  }

  StmtPtr parse_case(int begin) {
    advance();  // case / casez / casex
    if (!expect(Tok::LParen, "'(' after case")) {
      resync_stmt();
      return nullptr;
    }
    ExprPtr selector = parse_expression(true);
    if (!selector || !expect(Tok::RParen, "')' after case selector")) {
      resync_stmt();
      return nullptr;
    }
    std::vector<CaseArm> arms;
    std::optional<std::vector<StmtPtr>> default_body;
    while (!done() && !cur().is_ident("endcase")) {
      if (cur().is_ident("default")) {
        advance();
        eat(Tok::Colon);
        default_body = parse_body();
        continue;
      }
      std::vector<ExprPtr> labels;
      for (;;) {
        ExprPtr label = parse_expression(false);
        if (!label) {
          resync_stmt();
          break;
        }
        labels.push_back(label);
        if (!eat(Tok::Comma)) break;
      }
      if (labels.empty()) break;
      if (!expect(Tok::Colon, "':' after case label")) {
        resync_stmt();
        continue;
      }
      CaseArm arm;
      arm.labels = std::move(labels);
      arm.body = parse_body();
      arms.push_back(std::move(arm));
    }
    if (done()) {
      error("E_UNBALANCED_BEGIN_END", "'case' without 'endcase'", begin);
      return nullptr;
    }
    int end_pos = tok_end(cur());
    advance();  // endcase
    auto s = Stmt::case_stmt(selector, std::move(arms), std::move(default_body));
    const_cast<Stmt*>(s.get())->span = {begin, end_pos};
    return s;
  }

  StmtPtr parse_assign(int begin) {
    ExprPtr lhs = parse_primary(false);
    if (!lhs || lhs->kind != ExprKind::Ident) {
      error("E_EXPECTED_TOKEN", "assignment target must be an identifier", begin);
      resync_stmt();
      return nullptr;
    }
    bool nonblocking;
    if (eat(Tok::Le)) nonblocking = true;
    else if (eat(Tok::Assign)) nonblocking = false;
    else {
      error("E_EXPECTED_TOKEN", "expected '=' or '<=' in assignment");
      resync_stmt();
      return nullptr;
    }
    ExprPtr rhs = parse_expression(true);
    if (!rhs) {
      resync_stmt();
      return nullptr;
    }
    int end_pos = tok_end(cur());
    if (!expect(Tok::Semi, "';' after assignment")) resync_stmt();
    auto s = Stmt::assign(lhs, rhs, nonblocking);
    const_cast<Stmt*>(s.get())->span = {begin, end_pos};
    return s;
  }

  void resync_stmt() {
    while (!done()) {
      if (cur().kind == Tok::Semi) {
        advance();
        return;
      }
      if (cur().is_ident("end") || cur().is_ident("endcase") ||
          cur().is_ident("endmodule") || cur().is_ident("else"))
        return;
      advance();
    }
  }

  const std::string& src_;
  std::vector<Token> toks_;
  size_t p_ = 0;
  std::vector<Diagnostic>& diags_;
  int assign_offset_ = -1;
};

// ---- module-level parsing ----

class ModuleParser : public Parser {
 public:
  using Parser::Parser;

  std::vector<RtlModule> parse_modules() {
    std::vector<RtlModule> modules;
    bool saw_module = false;
    while (!done()) {
      if (cur().is_ident("module")) {
        saw_module = true;
        auto m = parse_module_body();
        if (m) modules.push_back(std::move(*m));
      } else {
        advance();
      }
    }
    if (!saw_module)
      error("E_NO_MODULE_HEADER", "no module header found", 0);
    return modules;
  }

 private:
  std::optional<RtlModule> parse_module_body() {
    advance();  // module
    RtlModule m;
    if (cur().kind == Tok::Ident && !is_sv_keyword(cur().text)) {
      m.name = cur().text;
      advance();
    } else {
      error("E_EXPECTED_TOKEN", "expected module name");
      return std::nullopt;
    }
    if (cur().kind == Tok::DelayHash || cur().text == "#") skip_balanced_parens();
    std::vector<std::string> pending_ports;
    if (eat(Tok::LParen)) parse_port_list(m, pending_ports);
    expect(Tok::Semi, "';' after module header");

    while (!done() && !cur().is_ident("endmodule")) parse_item(m);
    if (done()) {
      error("E_UNBALANCED_BEGIN_END", "'module' without 'endmodule'", 0);
    } else {
      advance();  // endmodule
    }
    // Ports named in the header but never given a direction declaration
    // default to 1-bit inputs.
    for (const auto& name : pending_ports)
      if (!m.find_decl(name)) m.decls.push_back({name, 1, Direction::Input});
    flag_undeclared(m);
    return m;
  }

  void parse_port_list(RtlModule& m, std::vector<std::string>& pending) {
    // ANSI declarations or bare non-ANSI names, comma separated.
    while (!done() && cur().kind != Tok::RParen) {
      Direction dir = Direction::Internal;
      bool has_dir = false;
      if (eat_kw("input")) { dir = Direction::Input; has_dir = true; }
      else if (eat_kw("output")) { dir = Direction::Output; has_dir = true; }
      else if (eat_kw("inout")) { dir = Direction::Input; has_dir = true; }
      eat_kw("logic") || eat_kw("reg") || eat_kw("wire") || eat_kw("bit");
      eat_kw("signed") || eat_kw("unsigned");
      int width = parse_optional_range();
      if (cur().kind == Tok::Ident && !is_sv_keyword(cur().text)) {
        if (has_dir) m.decls.push_back({cur().text, width, dir});
        else pending.push_back(cur().text);
        advance();
      } else {
        error("E_EXPECTED_TOKEN", "expected port name");
        while (!done() && cur().kind != Tok::Comma && cur().kind != Tok::RParen) advance();
      }
      if (!eat(Tok::Comma)) break;
    }
    expect(Tok::RParen, "')' after port list");
  }

  int parse_optional_range() {
    if (cur().kind != Tok::LBracket) return 1;
    int begin = cur().pos;
    advance();
    if (cur().kind == Tok::Number && cur().lit_valid && at(1).kind == Tok::Colon &&
        at(2).kind == Tok::Number && at(2).lit_valid) {
      long long msb = static_cast<long long>(cur().lit_value);
      long long lsb = static_cast<long long>(at(2).lit_value);
      advance();
      advance();
      advance();
      expect(Tok::RBracket, "']' after range");
      long long w = (msb > lsb ? msb - lsb : lsb - msb) + 1;
      if (w < 1 || w > 64) {
        warn("W_NONCONST_RANGE", "range wider than 64 bits clamped", begin);
        return 64;
      }
      return static_cast<int>(w);
    }
    warn("W_NONCONST_RANGE", "non-constant range treated as width 1", begin);
    while (!done() && cur().kind != Tok::RBracket) advance();
    eat(Tok::RBracket);
    return 1;
  }

  void parse_item(RtlModule& m) {
    const Token& t = cur();
    if (t.is_ident("input") || t.is_ident("output") || t.is_ident("inout")) {
      Direction dir = t.text == "output" ? Direction::Output : Direction::Input;
      advance();
      parse_decl_tail(m, dir);
      return;
    }
    if (t.is_ident("logic") || t.is_ident("reg") || t.is_ident("wire") || t.is_ident("bit")) {
      advance();
      parse_decl_tail(m, Direction::Internal, /*consumed_type=*/true);
      return;
    }
    if (t.is_ident("parameter") || t.is_ident("localparam") || t.is_ident("typedef") ||
        t.is_ident("genvar") || t.is_ident("import")) {
      skip_to_semi();
      return;
    }
    if (t.is_ident("always") || t.is_ident("always_ff") || t.is_ident("always_comb") ||
        t.is_ident("always_latch")) {
      parse_always(m);
      return;
    }
    if (t.is_ident("assign") || t.is_ident("property") || t.is_ident("assert") ||
        t.is_ident("initial") || t.is_ident("final")) {
      capture_opaque(m);
      return;
    }
    if (t.kind == Tok::Ident && !is_sv_keyword(t.text) && at(1).kind == Tok::Ident &&
        !is_sv_keyword(at(1).text)) {
      // module_type instance_name ( ... ) ;
      capture_opaque(m);
      return;
    }
    if (t.kind == Tok::Semi) {
      advance();
      return;
    }
    error("E_UNKNOWN_TOKEN",
          "unexpected '" + (t.text.empty() ? "<eof>" : t.text) + "' at module level");
    skip_to_semi();
  }

  void parse_decl_tail(RtlModule& m, Direction dir, bool consumed_type = false) {
    if (!consumed_type) {
      eat_kw("logic") || eat_kw("reg") || eat_kw("wire") || eat_kw("bit");
    }
    eat_kw("signed") || eat_kw("unsigned");
    int width = parse_optional_range();
    for (;;) {
      if (cur().kind == Tok::Ident && !is_sv_keyword(cur().text)) {
        m.decls.push_back({cur().text, width, dir});
        advance();
      } else {
        error("E_EXPECTED_TOKEN", "expected signal name in declaration");
        skip_to_semi();
        return;
      }
      if (eat(Tok::Comma)) continue;
      break;
    }
    expect(Tok::Semi, "';' after declaration");
  }

  void parse_always(RtlModule& m) {
    AlwaysBlock b;
    b.span.begin = cur().pos;
    std::string kw = cur().text;
    advance();
    if (kw == "always_comb" || kw == "always_latch") {
      b.kind = AlwaysKind::AlwaysComb;
      if (kw == "always_latch")
        warn("W_LEVEL_SENSITIVITY", "always_latch treated as always_comb", b.span.begin);
    } else {
      b.kind = kw == "always_ff" ? AlwaysKind::AlwaysFf : AlwaysKind::Always;
      if (eat(Tok::At)) {
        if (cur().kind == Tok::Star) {
          advance();
          b.kind = AlwaysKind::AlwaysComb;
        } else if (eat(Tok::LParen)) {
          if (cur().kind == Tok::Star) {
            advance();
            b.kind = AlwaysKind::AlwaysComb;
          } else {
            parse_sensitivity(b);
          }
          expect(Tok::RParen, "')' after sensitivity list");
        } else {
          error("E_EXPECTED_TOKEN", "expected sensitivity list after '@'");
        }
      }
      bool has_edge = false;
      for (const auto& s : b.sensitivity)
        if (s.edge != EdgeKind::Level) has_edge = true;
      if (!has_edge && b.kind != AlwaysKind::AlwaysComb) {
        warn("W_LEVEL_SENSITIVITY",
             "always block without edge sensitivity treated as combinational",
             b.span.begin);
        b.kind = AlwaysKind::AlwaysComb;
        b.sensitivity.clear();
      }
    }
    b.body = parse_body();
    b.span.end = b.body.empty() ? b.span.begin : b.body.back()->span.end;
    m.always_blocks.push_back(std::move(b));
  }

  void parse_sensitivity(AlwaysBlock& b) {
    for (;;) {
      SensItem item;
      if (eat_kw("posedge")) item.edge = EdgeKind::Posedge;
      else if (eat_kw("negedge")) item.edge = EdgeKind::Negedge;
      else item.edge = EdgeKind::Level;
      if (cur().kind == Tok::Ident && !is_sv_keyword(cur().text)) {
        item.signal = cur().text;
        advance();
        b.sensitivity.push_back(item);
      } else {
        error("E_EXPECTED_TOKEN", "expected signal in sensitivity list");
        return;
      }
      if (eat_kw("or") || eat(Tok::Comma)) continue;
      return;
    }
  }

  // Captures one unmodeled item verbatim: from the current token through its
  // closing ';' (or matching end keyword for property/initial items).
  void capture_opaque(RtlModule& m) {
    int begin = cur().pos;
    if (cur().is_ident("property")) {
      while (!done() && !cur().is_ident("endproperty")) advance();
      int end = done() ? static_cast<int>(src_.size()) : tok_end(cur());
      if (!done()) advance();
      m.instantiations.push_back(trim(src_.substr(begin, end - begin)));
      return;
    }
    if (cur().is_ident("initial") || cur().is_ident("final")) {
      advance();
      if (cur().is_ident("begin")) {
        int depth = 0;
        while (!done()) {
          if (cur().is_ident("begin")) ++depth;
          if (cur().is_ident("end") && --depth == 0) break;
          advance();
        }
        int end = done() ? static_cast<int>(src_.size()) : tok_end(cur());
        if (!done()) advance();
        m.instantiations.push_back(trim(src_.substr(begin, end - begin)));
        return;
      }
      // single-statement initial: fall through to ';' scan
    }
    int depth = 0;
    while (!done()) {
      if (cur().kind == Tok::LParen) ++depth;
      if (cur().kind == Tok::RParen) --depth;
      if (cur().kind == Tok::Semi && depth <= 0) break;
      advance();
    }
    int end = done() ? static_cast<int>(src_.size()) : tok_end(cur());
    if (!done()) advance();  // ;
    m.instantiations.push_back(trim(src_.substr(begin, end - begin)));
  }

  void skip_to_semi() {
    while (!done() && cur().kind != Tok::Semi) advance();
    eat(Tok::Semi);
  }

  void skip_balanced_parens() {
    // #( ... ) parameter lists
    advance();  // #
    if (cur().kind != Tok::LParen) return;
    int depth = 0;
    while (!done()) {
      if (cur().kind == Tok::LParen) ++depth;
      if (cur().kind == Tok::RParen && --depth == 0) {
        advance();
        return;
      }
      advance();
    }
  }

  void flag_undeclared(RtlModule& m) {
    std::set<std::string> used;
    for (const auto& b : m.always_blocks) {
      for (const auto& s : b.sensitivity) used.insert(s.signal);
      collect_stmt_idents(b.body, used);
    }
    for (const auto& name : used) {
      if (!m.find_decl(name))
        warn("W_UNDECLARED_IDENT", "identifier '" + name + "' is not declared", 0);
    }
  }

 public:
  static void collect_stmt_idents(const std::vector<StmtPtr>& stmts,
                                  std::set<std::string>& out) {
    for (const auto& s : stmts) {
      if (!s) continue;
      switch (s->kind) {
        case StmtKind::Assign:
          collect_idents(s->lhs, out);
          collect_idents(s->rhs, out);
          break;
        case StmtKind::If:
          for (const auto& arm : s->arms) {
            collect_idents(arm.cond, out);
            collect_stmt_idents(arm.body, out);
          }
          if (s->else_body) collect_stmt_idents(*s->else_body, out);
          break;
        case StmtKind::Case:
          collect_idents(s->selector, out);
          for (const auto& arm : s->case_arms) {
            for (const auto& l : arm.labels) collect_idents(l, out);
            collect_stmt_idents(arm.body, out);
          }
          if (s->default_body) collect_stmt_idents(*s->default_body, out);
          break;
        case StmtKind::Block:
          collect_stmt_idents(s->stmts, out);
          break;
      }
    }
  }
};

}  // namespace detail

// Parses a source file (preprocessing it first with the given define set).
inline ParsedFile parse_file(const std::string& src, const std::set<std::string>& defines = {}) {
  ParsedFile out;
  PreprocessResult pp = preprocess(src, defines);
  for (const auto& err : pp.errors)
    out.diagnostics.push_back({"E_PREPROCESS", err, 0, true});
  detail::ModuleParser parser(pp.text, out.diagnostics);
  out.modules = parser.parse_modules();
  for (auto& m : out.modules) m.pp_regions = pp.regions;
  std::stable_sort(out.diagnostics.begin(), out.diagnostics.end(),
                   [](const Diagnostic& a, const Diagnostic& b) { return a.offset < b.offset; });
  return out;
}

// First module of the file (nullopt when the file has none).
inline std::pair<std::optional<RtlModule>, std::vector<Diagnostic>> parse_module(
    const std::string& src, const std::set<std::string>& defines = {}) {
  ParsedFile f = parse_file(src, defines);
  if (f.modules.empty()) return {std::nullopt, f.diagnostics};
  return {std::move(f.modules[0]), f.diagnostics};
}

// Identifiers referenced inside always blocks with no matching declaration.
inline std::vector<std::string> undeclared_idents(const RtlModule& m) {
  std::set<std::string> used;
  for (const auto& b : m.always_blocks) {
    for (const auto& s : b.sensitivity) used.insert(s.signal);
    detail::ModuleParser::collect_stmt_idents(b.body, used);
  }
  std::vector<std::string> out;
  for (const auto& name : used)
    if (!m.find_decl(name)) out.push_back(name);
  return out;
}

namespace detail {

class PropertyParser : public Parser {
 public:
  using Parser::Parser;

  PropertySet parse_all() {
    PropertySet out;
    out.diagnostics = {};  // filled through diags_ reference by the base class
    int anon = 0;
    while (!done()) {
      if (cur().is_ident("property")) {
        ++out.declared_units;
        auto p = parse_named_property();
        if (p) out.properties.push_back(std::move(*p));
        continue;
      }
      if (cur().is_ident("assert") && at(1).is_ident("property")) {
        ++out.declared_units;
        std::string label = "assert_" + std::to_string(anon++);
        if (!pending_label_.empty()) {
          label = pending_label_;
          pending_label_.clear();
        }
        auto p = parse_assert_property(label);
        if (p) out.properties.push_back(std::move(*p));
        continue;
      }
      if (cur().kind == Tok::Ident && at(1).kind == Tok::Colon && at(2).is_ident("assert")) {
        pending_label_ = cur().text;
        advance();
        advance();
        continue;
      }
      advance();  // tolerated junk between units
    }
    return out;
  }

 private:
  std::string pending_label_;

  std::optional<Property> parse_named_property() {
    int begin = cur().pos;
    advance();  // property
    Property p;
    p.span.begin = begin;
    if (cur().kind == Tok::Ident && !is_sv_keyword(cur().text)) {
      p.name = cur().text;
      advance();
    } else {
      error("E_EXPECTED_TOKEN", "expected property name");
      resync_property();
      return std::nullopt;
    }
    if (!expect(Tok::Semi, "';' after property name")) {
      resync_property();
      return std::nullopt;
    }
    if (!parse_property_body(p)) {
      resync_property();
      return std::nullopt;
    }
    eat(Tok::Semi);
    if (!cur().is_ident("endproperty")) {
      error("E_MISSING_ENDPROPERTY",
            "property '" + p.name + "' is not closed by 'endproperty'", begin);
      resync_property();
      return std::nullopt;
    }
    p.span.end = tok_end(cur());
    advance();
    return p;
  }

  std::optional<Property> parse_assert_property(const std::string& name) {
    int begin = cur().pos;
    advance();  // assert
    advance();  // property
    Property p;
    p.name = name;
    p.span.begin = begin;
    if (!expect(Tok::LParen, "'(' after assert property")) {
      skip_past_semi();
      return std::nullopt;
    }
    if (!parse_property_body(p)) {
      skip_past_semi();
      return std::nullopt;
    }
    if (!expect(Tok::RParen, "')' closing assert property")) {
      skip_past_semi();
      return std::nullopt;
    }
    if (eat_kw("else")) skip_action_call();
    p.span.end = tok_end(cur());
    eat(Tok::Semi);
    return p;
  }

  // clocking / disable iff / antecedent |-> [##N] consequent
  bool parse_property_body(Property& p) {
    if (cur().kind == Tok::At) {
      advance();
      if (!expect(Tok::LParen, "'(' after '@'")) return false;
      Clocking clk;
      if (eat_kw("posedge")) clk.edge = EdgeKind::Posedge;
      else if (eat_kw("negedge")) clk.edge = EdgeKind::Negedge;
      else {
        error("E_EXPECTED_TOKEN", "expected posedge/negedge in property clocking");
        return false;
      }
      if (cur().kind == Tok::Ident && !is_sv_keyword(cur().text)) {
        clk.signal = cur().text;
        advance();
      } else {
        error("E_EXPECTED_TOKEN", "expected clock signal");
        return false;
      }
      if (!expect(Tok::RParen, "')' after clocking")) return false;
      p.clocking = clk;
    }
    if (cur().is_ident("disable")) {
      advance();
      if (!eat_kw("iff")) {
        error("E_EXPECTED_TOKEN", "expected 'iff' after 'disable'");
        return false;
      }
      if (!expect(Tok::LParen, "'(' after disable iff")) return false;
      p.disable_iff = parse_expression(false);
      if (!p.disable_iff) return false;
      if (!expect(Tok::RParen, "')' after disable iff")) return false;
    }

    ExprPtr first = parse_expression(false);
    if (!first) return false;
    if (assign_offset() >= 0) {
      error("E_ASSIGN_IN_ANTECEDENT", "'=' is not a comparison; use '=='", assign_offset());
      return false;
    }
    if (cur().kind == Tok::Question) {
      error("E_TERNARY_IN_PROPERTY", "ternary operator is not allowed in properties");
      return false;
    }
    if (cur().kind != Tok::Implies && cur().kind != Tok::ImpliesNext) {
      // No implication: a plain boolean property. Treated as always-enabled.
      p.antecedent = Expr::bit(true);
      p.delay = 0;
      p.consequent = first;
      return true;
    }
    p.antecedent = first;
    p.delay = 0;
    for (;;) {
      if (cur().kind == Tok::ImpliesNext) {
        warn("E_NONOVERLAP_IMPLICATION_WARN",
             "'|=>' normalized to '|-> ##1'", cur().pos);
        p.delay += 1;
      }
      advance();  // |-> or |=>
      if (cur().kind == Tok::DelayHash) {
        advance();
        if (cur().kind == Tok::Number && cur().lit_valid) {
          p.delay += static_cast<int>(cur().lit_value);
          advance();
        } else {
          error("E_BAD_LITERAL", "expected cycle count after '##'");
          return false;
        }
      }
      ExprPtr expr = parse_expression(false);
      if (!expr) return false;
      if (assign_offset() >= 0) {
        error("E_ASSIGN_IN_CONSEQUENT",
              "'=' is not a comparison; use '==' in the consequent", assign_offset());
        return false;
      }
      if (cur().kind == Tok::Question) {
        error("E_TERNARY_IN_PROPERTY", "ternary operator is not allowed in properties");
        return false;
      }
      if (cur().kind == Tok::Implies || cur().kind == Tok::ImpliesNext) {
        // Chained implication a |-> b |-> c is boolean-equivalent to
        // (a && b) |-> c for boolean b; normalize that way.
        p.antecedent = Expr::binary(BinaryOp::LogicAnd, p.antecedent, expr);
        continue;
      }
      p.consequent = expr;
      return true;
    }
  }

  void skip_action_call() {
    // $error("...") / $fatal(...): discard.
    if (cur().kind == Tok::Ident && !cur().text.empty() && cur().text[0] == '$') advance();
    if (cur().kind == Tok::LParen) {
      int depth = 0;
      while (!done()) {
        if (cur().kind == Tok::LParen) ++depth;
        if (cur().kind == Tok::RParen && --depth == 0) {
          advance();
          return;
        }
        advance();
      }
    }
  }

  void resync_property() {
    while (!done()) {
      if (cur().is_ident("endproperty")) {
        advance();
        return;
      }
      if (cur().is_ident("property") || cur().is_ident("assert")) return;
      advance();
    }
  }

  void skip_past_semi() {
    while (!done() && cur().kind != Tok::Semi) advance();
    eat(Tok::Semi);
  }
};

}  // namespace detail

// Parses an assertion file: named property...endproperty units and inline
// `assert property (...)` statements, in any mix. Properties with errors are
// excluded from the result but still counted in declared_units.
inline PropertySet parse_properties(const std::string& src) {
  std::vector<Diagnostic> diags;
  detail::PropertyParser parser(src, diags);
  PropertySet out = parser.parse_all();
  out.diagnostics = std::move(diags);
  std::stable_sort(out.diagnostics.begin(), out.diagnostics.end(),
                   [](const Diagnostic& a, const Diagnostic& b) { return a.offset < b.offset; });
  return out;
}

}  // namespace svaforge

#endif  // SVAFORGE_PARSE_HPP_
