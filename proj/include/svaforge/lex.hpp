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

#ifndef SVAFORGE_LEX_HPP_
#define SVAFORGE_LEX_HPP_

#include <cctype>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "svaforge/ast.hpp"

namespace svaforge {

inline bool is_sv_keyword(const std::string& s) {
  static const std::unordered_set<std::string> kKeywords = {
      "module", "endmodule", "input", "output", "inout",
      "logic", "reg", "wire", "bit", "byte", "int", "integer", "longint",
      "shortint", "signed", "unsigned", "parameter", "localparam", "assign",
      "always", "always_ff", "always_comb", "always_latch", "initial", "final",
      "begin", "end", "if", "else", "case", "casez", "casex", "endcase",
      "default", "unique", "priority", "posedge", "negedge", "edge", "or",
      "and", "not", "for", "while", "do", "repeat", "forever", "foreach",
      "function", "endfunction", "task", "endtask", "return", "void",
      "generate", "endgenerate", "genvar", "typedef", "enum", "struct",
      "union", "packed", "interface", "endinterface", "modport", "package",
      "endpackage", "import", "export", "property", "endproperty", "sequence",
      "endsequence", "assert", "assume", "cover", "expect", "disable", "iff",
      "wait", "event", "string", "real", "time", "automatic", "static",
      "const", "ref", "inside", "with", "this", "super", "new", "class",
      "endclass", "extends", "virtual", "local", "protected", "rand",
      "randc", "constraint",
  };
  return kKeywords.count(s) != 0;
}

// Matches [A-Za-z_][A-Za-z0-9_$]*, the identifier shape both the lexer and
// the identifier-pool cleaner accept.
inline bool is_valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$'))
      return false;
  }
  return true;
}

enum class Tok {
  End, Ident, Number, BasedLiteral, String,
  LParen, RParen, LBracket, RBracket, LBrace, RBrace,
  Semi, Colon, Comma, Dot, At, Question,
  Implies,      // |->
  ImpliesNext,  // |=>
  DelayHash,    // ##
  Assign,       // =
  Eq, Ne, Lt, Le, Gt, Ge,
  AndAnd, OrOr, Amp, Pipe, Caret, Tilde, Bang,
  Plus, Minus, Star, Slash,
  CastTick,  // the ' of width'(expr)
  Unknown,
};

struct Token {
  Tok kind = Tok::End;
  std::string text;
  int pos = 0;  // byte offset of the first character

  // Payload for Number / BasedLiteral.
  bool lit_valid = true;
  std::optional<int> lit_width;
  LiteralBase lit_base = LiteralBase::Dec;
  uint64_t lit_value = 0;

  bool is_ident(const char* s) const { return kind == Tok::Ident && text == s; }
};

// Tokenizes normalized source text. Comments and whitespace are skipped.
// Invalid numeric literals become BasedLiteral tokens with lit_valid=false so
// the parser can report E_BAD_LITERAL at the right offset. Characters with
// no token produce Unknown.
inline std::vector<Token> lex(const std::string& src) {
  std::vector<Token> out;
  size_t i = 0;
  const size_t n = src.size();

  auto peek = [&](size_t k) -> char { return i + k < n ? src[i + k] : '\0'; };
  auto push = [&](Tok kind, size_t len) {
    Token t;
    t.kind = kind;
    t.text = src.substr(i, len);
    t.pos = static_cast<int>(i);
    out.push_back(t);
    i += len;
  };

  auto lex_based_body = [&](Token& t, size_t start) {
    // At src[start] == '\''; consumes the body and fills the literal payload.
    size_t j = start + 1;
    if (j < n && (src[j] == 's' || src[j] == 'S')) ++j;  // signed marker, tolerated
    char base_c = j < n ? static_cast<char>(std::tolower(src[j])) : '\0';
    LiteralBase base;
    if (base_c == 'b') base = LiteralBase::Bin;
    else if (base_c == 'h') base = LiteralBase::Hex;
    else if (base_c == 'd') base = LiteralBase::Dec;
    else {
      t.lit_valid = false;
      t.text = src.substr(t.pos, j + 1 - t.pos);
      i = j + (j < n ? 1 : 0);
      return;
    }
    ++j;
    size_t digits_start = j;
    while (j < n && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
    std::string digits = src.substr(digits_start, j - digits_start);
    t.text = src.substr(t.pos, j - t.pos);
    i = j;
    t.lit_base = base;
    uint64_t v = 0;
    bool ok = !digits.empty();
    int radix = base == LiteralBase::Bin ? 2 : base == LiteralBase::Hex ? 16 : 10;
    for (char c : digits) {
      if (c == '_') continue;
      int d;
      if (c >= '0' && c <= '9') d = c - '0';
      else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
      else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
      else { ok = false; break; }
      if (d >= radix) { ok = false; break; }
      if (v > (~0ULL - d) / radix) { ok = false; break; }  // 64-bit overflow
      v = v * radix + d;
    }
    t.lit_valid = ok;
    t.lit_value = v;
    if (t.lit_width && ok) t.lit_value &= width_mask(*t.lit_width);
  };

  while (i < n) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
    if (c == '/' && peek(1) == '/') {
      while (i < n && src[i] != '\n') ++i;
      continue;
    }
    if (c == '/' && peek(1) == '*') {
      i += 2;
      while (i + 1 < n && !(src[i] == '*' && src[i + 1] == '/')) ++i;
      i = std::min(n, i + 2);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$') {
      size_t j = i;
      while (j < n && (std::isalnum(static_cast<unsigned char>(src[j])) ||
                       src[j] == '_' || src[j] == '$'))
        ++j;
      push(Tok::Ident, j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < n && (std::isdigit(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      std::string digits = src.substr(i, j - i);
      uint64_t v = 0;
      bool ok = true;
      for (char d : digits) {
        if (d == '_') continue;
        if (v > (~0ULL - (d - '0')) / 10) { ok = false; break; }
        v = v * 10 + (d - '0');
      }
      if (j < n && src[j] == '\'' && j + 1 < n && src[j + 1] != '(') {
        // sized based literal: 5'b10011
        Token t;
        t.kind = Tok::BasedLiteral;
        t.pos = static_cast<int>(i);
        t.lit_width = ok && v >= 1 && v <= 64 ? std::optional<int>(static_cast<int>(v))
                                              : std::nullopt;
        if (!t.lit_width) t.lit_valid = false;
        lex_based_body(t, j);
        if (!t.lit_width) t.lit_valid = false;
        out.push_back(t);
        continue;
      }
      Token t;
      t.kind = Tok::Number;
      t.text = digits;
      t.pos = static_cast<int>(i);
      t.lit_valid = ok;
      t.lit_base = LiteralBase::Dec;
      t.lit_value = v;
      out.push_back(t);
      i = j;
      continue;
    }
    if (c == '\'') {
      if (peek(1) == '(') { push(Tok::CastTick, 1); continue; }
      if (peek(1) == '0' || peek(1) == '1') {
        Token t;
        t.kind = Tok::BasedLiteral;
        t.pos = static_cast<int>(i);
        t.text = src.substr(i, 2);
        t.lit_base = LiteralBase::Fill;
        t.lit_value = peek(1) - '0';
        out.push_back(t);
        i += 2;
        continue;
      }
      Token t;
      t.kind = Tok::BasedLiteral;
      t.pos = static_cast<int>(i);
      lex_based_body(t, i);
      out.push_back(t);
      continue;
    }
    if (c == '"') {
      size_t j = i + 1;
      while (j < n && src[j] != '"') j += (src[j] == '\\' && j + 1 < n) ? 2 : 1;
      push(Tok::String, std::min(n, j + 1) - i);
      continue;
    }
    switch (c) {
      case '(': push(Tok::LParen, 1); continue;
      case ')': push(Tok::RParen, 1); continue;
      case '[': push(Tok::LBracket, 1); continue;
      case ']': push(Tok::RBracket, 1); continue;
      case '{': push(Tok::LBrace, 1); continue;
      case '}': push(Tok::RBrace, 1); continue;
      case ';': push(Tok::Semi, 1); continue;
      case ':': push(Tok::Colon, 1); continue;
      case ',': push(Tok::Comma, 1); continue;
      case '.': push(Tok::Dot, 1); continue;
      case '@': push(Tok::At, 1); continue;
      case '?': push(Tok::Question, 1); continue;
      case '~': push(Tok::Tilde, 1); continue;
      case '^': push(Tok::Caret, 1); continue;
      case '+': push(Tok::Plus, 1); continue;
      case '-': push(Tok::Minus, 1); continue;
      case '*': push(Tok::Star, 1); continue;
      case '/': push(Tok::Slash, 1); continue;
      case '#':
        if (peek(1) == '#') { push(Tok::DelayHash, 2); continue; }
        push(Tok::Unknown, 1);
        continue;
      case '=':
        if (peek(1) == '=' && peek(2) == '=') { push(Tok::Eq, 3); continue; }  // ===
        if (peek(1) == '=') { push(Tok::Eq, 2); continue; }
        push(Tok::Assign, 1);
        continue;
      case '!':
        if (peek(1) == '=' && peek(2) == '=') { push(Tok::Ne, 3); continue; }  // !==
        if (peek(1) == '=') { push(Tok::Ne, 2); continue; }
        push(Tok::Bang, 1);
        continue;
      case '<':
        if (peek(1) == '=') { push(Tok::Le, 2); continue; }
        push(Tok::Lt, 1);
        continue;
      case '>':
        if (peek(1) == '=') { push(Tok::Ge, 2); continue; }
        push(Tok::Gt, 1);
        continue;
      case '&':
        if (peek(1) == '&') { push(Tok::AndAnd, 2); continue; }
        push(Tok::Amp, 1);
        continue;
      case '|':
        if (peek(1) == '-' && peek(2) == '>') { push(Tok::Implies, 3); continue; }
        if (peek(1) == '=' && peek(2) == '>') { push(Tok::ImpliesNext, 3); continue; }
        if (peek(1) == '|') { push(Tok::OrOr, 2); continue; }
        push(Tok::Pipe, 1);
        continue;
      default:
        push(Tok::Unknown, 1);
        continue;
    }
  }
  Token end;
  end.kind = Tok::End;
  end.pos = static_cast<int>(n);
  out.push_back(end);
  return out;
}

// Whitespace-insensitive comparison used by round-trip tests and golden
// checks: two sources are token-equal when their token texts match pairwise.
inline bool token_stream_equal(const std::string& a, const std::string& b) {
  auto ta = lex(a);
  auto tb = lex(b);
  if (ta.size() != tb.size()) return false;
  for (size_t i = 0; i < ta.size(); ++i)
    if (ta[i].kind != tb[i].kind || ta[i].text != tb[i].text) return false;
  return true;
}

}  // namespace svaforge

#endif  // SVAFORGE_LEX_HPP_
