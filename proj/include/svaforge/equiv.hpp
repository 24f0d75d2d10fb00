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

#ifndef SVAFORGE_EQUIV_HPP_
#define SVAFORGE_EQUIV_HPP_

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "svaforge/ast.hpp"
#include "svaforge/print.hpp"
#include "svaforge/util.hpp"

namespace svaforge {

// Boolean-equivalence checking for antecedents: expressions are normalized
// to formulas over atomic propositions, then compared by truth table over
// the union of their atoms. Atoms are keyed by canonical printed text, with
// a few normalizations so the same test written different ways shares one
// atom:
//   x, x != 0, |x, x == 1'b1   -> x          (truthiness)
//   x == 0, x != 1'b1           -> !x
//   a > b  -> b < a;  a >= b -> !(a < b);  a <= b -> !(b < a)
//   a == b -> one atom with operands in printed order; != is its negation
// Distinct atoms are enumerated independently, so correlated comparisons
// (e.g. sel == 1 and sel == 2) can make semantically equal formulas compare
// unequal; that direction errs toward "not equivalent" only.

namespace detail {

class AtomTable {
 public:
  int intern(const std::string& key) {
    auto it = index_.find(key);
    if (it != index_.end()) return it->second;
    int id = static_cast<int>(keys_.size());
    keys_.push_back(key);
    index_.emplace(key, id);
    return id;
  }
  size_t size() const { return keys_.size(); }
  const std::vector<std::string>& keys() const { return keys_; }

 private:
  std::vector<std::string> keys_;
  std::map<std::string, int> index_;
};

struct NormExpr {
  enum Kind { True, False, Atom, Not, And, Or } kind = True;
  int atom = -1;
  std::vector<NormExpr> kids;

  static NormExpr constant(bool v) {
    NormExpr n;
    n.kind = v ? True : False;
    return n;
  }
  static NormExpr leaf(int id) {
    NormExpr n;
    n.kind = Atom;
    n.atom = id;
    return n;
  }
  static NormExpr invert(NormExpr inner) {
    NormExpr n;
    n.kind = Not;
    n.kids.push_back(std::move(inner));
    return n;
  }
  static NormExpr join(Kind k, NormExpr lhs, NormExpr rhs) {
    NormExpr n;
    n.kind = k;
    n.kids.push_back(std::move(lhs));
    n.kids.push_back(std::move(rhs));
    return n;
  }
};

inline bool literal_is_zero(const ExprPtr& e) {
  return e->kind == ExprKind::Literal && e->value == 0;
}

// Only an explicit 1-bit one (1'b1) qualifies; '1 adapts to the compared
// width and is not a truthiness test in general.
inline bool literal_is_one_bit_one(const ExprPtr& e) {
  return e->kind == ExprKind::Literal && e->base != LiteralBase::Fill &&
         e->width.has_value() && *e->width == 1 && e->value == 1;
}

inline NormExpr normalize_bool(const ExprPtr& e, AtomTable& atoms);

inline NormExpr atom_for(const ExprPtr& e, AtomTable& atoms) {
  return NormExpr::leaf(atoms.intern(pretty_print_expr(e)));
}

inline NormExpr ordered_compare_atom(const ExprPtr& lhs, const ExprPtr& rhs,
                                     const char* op, AtomTable& atoms) {
  std::string a = pretty_print_expr(lhs);
  std::string b = pretty_print_expr(rhs);
  if (b < a) std::swap(a, b);
  return NormExpr::leaf(atoms.intern(a + " " + op + " " + b));
}

inline NormExpr less_atom(const ExprPtr& lhs, const ExprPtr& rhs,
                          AtomTable& atoms) {
  return NormExpr::leaf(atoms.intern(pretty_print_expr(lhs) + " < " +
                                     pretty_print_expr(rhs)));
}

inline NormExpr normalize_bool(const ExprPtr& e, AtomTable& atoms) {
  switch (e->kind) {
    case ExprKind::Literal:
      return NormExpr::constant(e->value != 0);
    case ExprKind::Unary:
      switch (e->uop) {
        case UnaryOp::LogicNot:
        case UnaryOp::BitNot:
          return NormExpr::invert(normalize_bool(e->a, atoms));
        case UnaryOp::ReduceOr:
          return normalize_bool(e->a, atoms);
        case UnaryOp::Minus:
          return atom_for(e, atoms);
      }
      return atom_for(e, atoms);
    case ExprKind::Binary:
      switch (e->bop) {
        case BinaryOp::LogicAnd:
          return NormExpr::join(NormExpr::And, normalize_bool(e->a, atoms),
                                normalize_bool(e->b, atoms));
        case BinaryOp::LogicOr:
          return NormExpr::join(NormExpr::Or, normalize_bool(e->a, atoms),
                                normalize_bool(e->b, atoms));
        case BinaryOp::Eq:
          if (literal_is_zero(e->b)) {
            return NormExpr::invert(normalize_bool(e->a, atoms));
          }
          if (literal_is_zero(e->a)) {
            return NormExpr::invert(normalize_bool(e->b, atoms));
          }
          if (literal_is_one_bit_one(e->b)) return normalize_bool(e->a, atoms);
          if (literal_is_one_bit_one(e->a)) return normalize_bool(e->b, atoms);
          return ordered_compare_atom(e->a, e->b, "==", atoms);
        case BinaryOp::Ne:
          if (literal_is_zero(e->b)) return normalize_bool(e->a, atoms);
          if (literal_is_zero(e->a)) return normalize_bool(e->b, atoms);
          if (literal_is_one_bit_one(e->b)) {
            return NormExpr::invert(normalize_bool(e->a, atoms));
          }
          if (literal_is_one_bit_one(e->a)) {
            return NormExpr::invert(normalize_bool(e->b, atoms));
          }
          return NormExpr::invert(ordered_compare_atom(e->a, e->b, "==", atoms));
        case BinaryOp::Lt:
          return less_atom(e->a, e->b, atoms);
        case BinaryOp::Gt:
          return less_atom(e->b, e->a, atoms);
        case BinaryOp::Ge:
          return NormExpr::invert(less_atom(e->a, e->b, atoms));
        case BinaryOp::Le:
          return NormExpr::invert(less_atom(e->b, e->a, atoms));
        default:
          return atom_for(e, atoms);
      }
    case ExprKind::Ident:
    case ExprKind::Cast:
    case ExprKind::Ternary:
    case ExprKind::Past:
    case ExprKind::Stable:
      return atom_for(e, atoms);
  }
  return atom_for(e, atoms);
}

inline bool eval_norm(const NormExpr& n, uint64_t assignment) {
  switch (n.kind) {
    case NormExpr::True:
      return true;
    case NormExpr::False:
      return false;
    case NormExpr::Atom:
      return (assignment >> n.atom) & 1u;
    case NormExpr::Not:
      return !eval_norm(n.kids[0], assignment);
    case NormExpr::And:
      return eval_norm(n.kids[0], assignment) &&
             eval_norm(n.kids[1], assignment);
    case NormExpr::Or:
      return eval_norm(n.kids[0], assignment) ||
             eval_norm(n.kids[1], assignment);
  }
  return false;
}

inline void check_atom_budget(const AtomTable& atoms, int max_atoms) {
  if (static_cast<int>(atoms.size()) > max_atoms) {
    throw Error("AtomBudgetExceeded",
                "equivalence check needs " + std::to_string(atoms.size()) +
                    " atoms, budget is " + std::to_string(max_atoms));
  }
}

}  // namespace detail

// The atom keys a boolean expression decomposes into, for overlap scoring.
inline std::set<std::string> atom_keys(const ExprPtr& e) {
  detail::AtomTable atoms;
  detail::normalize_bool(e, atoms);
  return {atoms.keys().begin(), atoms.keys().end()};
}

// True when the two expressions agree on every assignment of their shared
// atom set. Throws AtomBudgetExceeded beyond max_atoms.
inline bool equivalent(const ExprPtr& a, const ExprPtr& b, int max_atoms = 20) {
  detail::AtomTable atoms;
  detail::NormExpr na = detail::normalize_bool(a, atoms);
  detail::NormExpr nb = detail::normalize_bool(b, atoms);
  detail::check_atom_budget(atoms, max_atoms);
  uint64_t count = uint64_t{1} << atoms.size();
  for (uint64_t m = 0; m < count; ++m) {
    if (detail::eval_norm(na, m) != detail::eval_norm(nb, m)) return false;
  }
  return true;
}

// True when `a` implies `b` under every assignment.
inline bool implies(const ExprPtr& a, const ExprPtr& b, int max_atoms = 20) {
  detail::AtomTable atoms;
  detail::NormExpr na = detail::normalize_bool(a, atoms);
  detail::NormExpr nb = detail::normalize_bool(b, atoms);
  detail::check_atom_budget(atoms, max_atoms);
  uint64_t count = uint64_t{1} << atoms.size();
  for (uint64_t m = 0; m < count; ++m) {
    if (detail::eval_norm(na, m) && !detail::eval_norm(nb, m)) return false;
  }
  return true;
}

}  // namespace svaforge

#endif  // SVAFORGE_EQUIV_HPP_
