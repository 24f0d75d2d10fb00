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
// Two-valued expression evaluation. No X/Z: every signal always holds a
// definite value. Width rules: operands zero-extend to the wider side,
// arithmetic wraps at that width, comparisons and logical connectives
// produce 1-bit results. Fill literals ('0/'1) adapt to the other operand.

#ifndef SVAFORGE_EVAL_HPP_
#define SVAFORGE_EVAL_HPP_

#include <algorithm>
#include <optional>
#include <string>
#include <unordered_map>

#include "svaforge/ast.hpp"

namespace svaforge {

class EvalError : public Error {
 public:
  using Error::Error;
};

// Evaluation environment. cycles_back = 0 reads the current cycle; $past and
// $stable ask for earlier cycles, which only trace-backed environments can
// answer (see sim.hpp). A plain map environment refuses any look-back.
class EvalEnv {
 public:
  virtual ~EvalEnv() = default;
  virtual std::optional<Value> get(const std::string& name, int cycles_back) const = 0;
  virtual bool can_look_back(int cycles_back) const { return cycles_back == 0; }
};

class MapEnv : public EvalEnv {
 public:
  MapEnv() = default;
  explicit MapEnv(std::unordered_map<std::string, Value> values)
      : values_(std::move(values)) {}
  void set(const std::string& name, Value v) { values_[name] = v; }
  std::optional<Value> get(const std::string& name, int cycles_back) const override {
    if (cycles_back != 0) return std::nullopt;
    auto it = values_.find(name);
    if (it == values_.end()) return std::nullopt;
    return it->second;
  }

 private:
  std::unordered_map<std::string, Value> values_;
};

namespace detail {

// Gives both operands a common width (max of the two, fills adapt).
inline std::pair<Value, Value> align(Value x, Value y) {
  if (x.is_fill() && y.is_fill()) return {resize_value(x, 1), resize_value(y, 1)};
  if (x.is_fill()) x = resize_value(x, y.width);
  if (y.is_fill()) y = resize_value(y, x.width);
  int w = std::max(x.width, y.width);
  return {resize_value(x, w), resize_value(y, w)};
}

}  // namespace detail

inline Value eval_expr(const ExprPtr& e, const EvalEnv& env, int cycles_back = 0) {
  switch (e->kind) {
    case ExprKind::Ident: {
      auto v = env.get(e->name, cycles_back);
      if (!v) throw EvalError("UnboundIdentifier", "unbound identifier: " + e->name);
      if (e->index) {
        if (*e->index >= v->width)
          throw EvalError("BitSelectOutOfRange",
                          e->name + "[" + std::to_string(*e->index) + "] exceeds width " +
                              std::to_string(v->width));
        return {(v->bits >> *e->index) & 1, 1};
      }
      return *v;
    }
    case ExprKind::Literal:
      if (e->base == LiteralBase::Fill) return {e->value, 0};
      return {e->value & width_mask(e->width.value_or(64)), e->width.value_or(32)};
    case ExprKind::Cast:
      return resize_value(eval_expr(e->a, env, cycles_back), e->cast_width);
    case ExprKind::Unary: {
      Value v = eval_expr(e->a, env, cycles_back);
      if (v.is_fill()) v = resize_value(v, 1);
      switch (e->uop) {
        case UnaryOp::LogicNot: return {v.truthy() ? 0ULL : 1ULL, 1};
        case UnaryOp::ReduceOr: return {v.truthy() ? 1ULL : 0ULL, 1};
        case UnaryOp::BitNot: return {~v.bits & width_mask(v.width), v.width};
        case UnaryOp::Minus: return {(0 - v.bits) & width_mask(v.width), v.width};
      }
      return v;
    }
    case ExprKind::Binary: {
      // Logical connectives short-circuit; everything else aligns widths.
      if (e->bop == BinaryOp::LogicAnd) {
        if (!eval_expr(e->a, env, cycles_back).truthy()) return {0, 1};
        return {eval_expr(e->b, env, cycles_back).truthy() ? 1ULL : 0ULL, 1};
      }
      if (e->bop == BinaryOp::LogicOr) {
        if (eval_expr(e->a, env, cycles_back).truthy()) return {1, 1};
        return {eval_expr(e->b, env, cycles_back).truthy() ? 1ULL : 0ULL, 1};
      }
      auto [x, y] = detail::align(eval_expr(e->a, env, cycles_back),
                                  eval_expr(e->b, env, cycles_back));
      switch (e->bop) {
        case BinaryOp::Eq: return {x.bits == y.bits ? 1ULL : 0ULL, 1};
        case BinaryOp::Ne: return {x.bits != y.bits ? 1ULL : 0ULL, 1};
        case BinaryOp::Lt: return {x.bits < y.bits ? 1ULL : 0ULL, 1};
        case BinaryOp::Le: return {x.bits <= y.bits ? 1ULL : 0ULL, 1};
        case BinaryOp::Gt: return {x.bits > y.bits ? 1ULL : 0ULL, 1};
        case BinaryOp::Ge: return {x.bits >= y.bits ? 1ULL : 0ULL, 1};
        case BinaryOp::Add: return {(x.bits + y.bits) & width_mask(x.width), x.width};
        case BinaryOp::Sub: return {(x.bits - y.bits) & width_mask(x.width), x.width};
        case BinaryOp::BitAnd: return {x.bits & y.bits, x.width};
        case BinaryOp::BitOr: return {x.bits | y.bits, x.width};
        case BinaryOp::BitXor: return {x.bits ^ y.bits, x.width};
        default: break;
      }
      return {0, 1};
    }
    case ExprKind::Ternary:
      return eval_expr(e->a, env, cycles_back).truthy()
                 ? eval_expr(e->b, env, cycles_back)
                 : eval_expr(e->c, env, cycles_back);
    case ExprKind::Past: {
      int back = cycles_back + e->past_depth;
      if (!env.can_look_back(back))
        throw EvalError("PastDepthExceedsTrace",
                        "$past depth " + std::to_string(e->past_depth) +
                            " reaches before the start of the trace");
      return eval_expr(e->a, env, back);
    }
    case ExprKind::Stable: {
      int back = cycles_back + 1;
      if (!env.can_look_back(back))
        throw EvalError("PastDepthExceedsTrace",
                        "$stable needs one cycle of history");
      auto [x, y] = detail::align(eval_expr(e->a, env, cycles_back),
                                  eval_expr(e->a, env, back));
      return {x.bits == y.bits ? 1ULL : 0ULL, 1};
    }
  }
  return {0, 1};
}

}  // namespace svaforge

#endif  // SVAFORGE_EVAL_HPP_
