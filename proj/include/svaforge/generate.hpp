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

#ifndef SVAFORGE_GENERATE_HPP_
#define SVAFORGE_GENERATE_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "svaforge/ast.hpp"
#include "svaforge/eval.hpp"
#include "svaforge/pool.hpp"
#include "svaforge/print.hpp"
#include "svaforge/rng.hpp"
#include "svaforge/synth.hpp"
#include "svaforge/util.hpp"

namespace svaforge {

enum class Category { IfElse, CaseStmt, Combined };

inline const char* category_name(Category c) {
  switch (c) {
    case Category::IfElse:
      return "if_else";
    case Category::CaseStmt:
      return "case_stmt";
    case Category::Combined:
      return "combined";
  }
  return "";
}

inline Category category_from_name(const std::string& name) {
  if (name == "if_else") return Category::IfElse;
  if (name == "case_stmt") return Category::CaseStmt;
  if (name == "combined") return Category::Combined;
  throw Error("BadCategory", "unknown sample category: " + name);
}

struct GenConfig {
  int sample_count = 20000;
  double ratio_if_else = 0.52;
  double ratio_case_stmt = 0.28;
  double ratio_combined = 0.20;
  double sync_fraction = 0.5;
  int max_nesting = 3;
  int long_condition_min_atoms = 4;
  IdentifierPool pool;
  uint64_t master_seed = 0;
};

inline void validate(const GenConfig& config) {
  double sum = config.ratio_if_else + config.ratio_case_stmt + config.ratio_combined;
  if (std::abs(sum - 1.0) > 1e-9) {
    throw Error("BadRatios", "category ratios must sum to 1");
  }
  if (config.sample_count < 0) {
    throw Error("BadSampleCount", "sample_count must be >= 0");
  }
  if (config.sync_fraction < 0.0 || config.sync_fraction > 1.0) {
    throw Error("BadSyncFraction", "sync_fraction must be in [0, 1]");
  }
  if (config.max_nesting < 3) {
    throw Error("BadNesting", "max_nesting must be >= 3");
  }
}

// Ground truth recorded while a block is built: one entry per
// assignment-bearing leaf path, in the order the assertion synthesizer
// enumerates paths. `probability` is the per-cycle chance the path is taken
// under the stimulus model (uniform independent inputs, resets active 5% of
// cycles), kept so generation can enforce its own non-vacuity floor.
struct GenBranch {
  ExprPtr path_condition;
  std::vector<std::pair<ExprPtr, ExprPtr>> assignments;
  double probability = 0.0;
};

struct GenTrace {
  std::vector<GenBranch> branches;
};

struct DatasetSample {
  std::string prompt;
  std::string response;
  Category category = Category::IfElse;
  bool sync = false;
  uint64_t seed = 0;
  int n_assertions = 0;
};

namespace gen_detail {

// Chance that a 1-bit-atom condition evaluates true under independent
// uniform inputs, by enumeration over its distinct identifiers.
inline double guard_probability(const ExprPtr& e) {
  std::set<std::string> names;
  collect_idents(e, names);
  std::vector<std::string> v(names.begin(), names.end());
  if (v.size() > 12) {
    throw Error("GenInvariant", "guard references too many signals");
  }
  uint32_t count = 1u << v.size();
  uint32_t hits = 0;
  for (uint32_t m = 0; m < count; ++m) {
    MapEnv env;
    for (size_t i = 0; i < v.size(); ++i) {
      env.set(v[i], Value{(m >> i) & 1u, 1});
    }
    if (eval_expr(e, env).truthy()) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(count);
}

inline ExprPtr condition_atom(const std::string& name, Rng& rng) {
  switch (rng.below(4)) {
    case 0:
      return Expr::ident(name);
    case 1:
      return Expr::unary(UnaryOp::LogicNot, Expr::ident(name));
    case 2:
      return Expr::binary(BinaryOp::Eq, Expr::ident(name),
                          Expr::bit(rng.below(2) == 1));
    default:
      return Expr::binary(BinaryOp::Ne, Expr::ident(name),
                          Expr::bit(rng.below(2) == 1));
  }
}

// Builds a boolean tree with exactly `atoms` leaves, operators drawn
// uniformly from {&&, ||}. `pick` supplies the identifier for each leaf.
template <typename PickName>
ExprPtr condition_tree(int atoms, Rng& rng, PickName pick) {
  if (atoms <= 1) return condition_atom(pick(), rng);
  int left = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(atoms - 1)));
  ExprPtr a = condition_tree(left, rng, pick);
  ExprPtr b = condition_tree(atoms - left, rng, pick);
  BinaryOp op = rng.below(2) == 0 ? BinaryOp::LogicAnd : BinaryOp::LogicOr;
  return Expr::binary(op, std::move(a), std::move(b));
}

// Per-cycle chance a reset input sits at its active level, mirroring
// StimulusPlan's default.
constexpr double kResetActiveProb = 0.05;
// Every recorded path must fire at least this often per cycle; with the
// default 1000-cycle stimulus that keeps vacuous oracle properties out of
// reach of any plausible seed.
constexpr double kPathProbFloor = 1.0 / 64.0;

struct Target {
  std::string name;
  int width = 1;
};

// Shared state for one block build.
struct Builder {
  Rng rng;
  bool sync = false;
  int long_atoms = 4;

  std::vector<std::string> avail;  // shuffled unused pool names
  size_t next_avail = 0;
  std::vector<std::string> atom_names;  // pool names used as condition atoms

  RtlModule module;
  GenTrace trace;
  std::vector<Target> all_targets;

  explicit Builder(uint64_t seed) : rng(seed) {}

  std::string take_unique() {
    if (next_avail >= avail.size()) {
      throw Error("PoolTooSmall", "identifier pool exhausted");
    }
    return avail[next_avail++];
  }

  // Returns a 1-bit input name for a condition atom, preferring a fresh pool
  // name and falling back to reusing one not in `exclude` (a reused atom in
  // the same path would make the path unsatisfiable).
  std::string take_atom(const std::set<std::string>& exclude) {
    if (next_avail < avail.size()) {
      std::string name = avail[next_avail++];
      declare(name, 1, Direction::Input);
      atom_names.push_back(name);
      return name;
    }
    std::vector<std::string> usable;
    for (const auto& n : atom_names) {
      if (!exclude.count(n)) usable.push_back(n);
    }
    if (usable.empty()) {
      throw Error("PoolTooSmall", "identifier pool exhausted");
    }
    return usable[rng.below(usable.size())];
  }

  void declare(const std::string& name, int width, Direction dir) {
    Decl d;
    d.name = name;
    d.width = width;
    d.direction = dir;
    module.decls.push_back(d);
  }
};

// One guard whose satisfaction probability is known exactly.
struct Guard {
  ExprPtr cond;
  double prob = 0.0;
};

// Draws a guard over fresh/reused atoms, redrawing its shape until the
// probability lands in [1/4, 3/4] so later arms and else paths keep mass.
inline Guard draw_guard(Builder& b, int atoms, std::set<std::string>& exclude) {
  std::vector<std::string> names;
  for (int i = 0; i < atoms; ++i) {
    std::string n = b.take_atom(exclude);
    exclude.insert(n);
    names.push_back(n);
  }
  Guard g;
  for (int attempt = 0; attempt < 64; ++attempt) {
    size_t cursor = 0;
    g.cond = condition_tree(static_cast<int>(names.size()), b.rng,
                            [&]() { return names[cursor++ % names.size()]; });
    g.prob = guard_probability(g.cond);
    if (g.prob >= 0.25 && g.prob <= 0.75) return g;
  }
  // Enumeration over <= 2 atoms always admits a balanced shape; for larger
  // chains fall back to a single-atom guard.
  g.cond = condition_atom(names[0], b.rng);
  g.prob = guard_probability(g.cond);
  return g;
}

// Values and sources planned for one region's targets across its bodies.
struct RegionPlan {
  std::vector<Target> targets;
  // literal_values[t][body]; the body holding a signal RHS keeps a value
  // too, it just goes unused.
  std::vector<std::vector<uint64_t>> literal_values;
  int signal_body = -1;     // body index whose first target copies a signal
  std::string signal_name;  // that signal, declared as an input
};

inline ExprPtr sized_literal(int width, uint64_t value) {
  return Expr::literal(width, width <= 4 ? LiteralBase::Bin : LiteralBase::Hex,
                       value);
}

// Plans targets for a region with `bodies` assigning bodies: 1-2 fresh
// internal signals, distinct nonzero literal values per body, and at most
// one body copying an input signal instead (only when the region has a
// second target, so every body retains a literal to mutate).
inline RegionPlan plan_region(Builder& b, int bodies) {
  RegionPlan plan;
  int n_targets = 1 + static_cast<int>(b.rng.below(2));
  bool want_signal = n_targets == 2 && bodies >= 2 && b.rng.chance(0.3);
  for (int t = 0; t < n_targets; ++t) {
    Target tgt;
    tgt.name = b.take_unique();
    int min_width = bodies <= 1 ? 1 : (bodies == 2 ? 2 : 3);
    if (want_signal && t == 0) min_width = std::max(min_width, 2);
    tgt.width = static_cast<int>(b.rng.range(min_width, 32));
    b.declare(tgt.name, tgt.width, Direction::Internal);
    b.all_targets.push_back(tgt);
    plan.targets.push_back(tgt);

    uint64_t space = uint64_t{1} << std::min(tgt.width, 16);
    std::set<uint64_t> used = {0};  // zero is reserved for reset arms
    std::vector<uint64_t> values;
    for (int body = 0; body < bodies; ++body) {
      uint64_t v;
      do {
        v = b.rng.below(space);
      } while (used.count(v));
      used.insert(v);
      values.push_back(v);
    }
    plan.literal_values.push_back(std::move(values));
  }
  if (want_signal) {
    plan.signal_body = static_cast<int>(b.rng.below(static_cast<uint64_t>(bodies)));
    plan.signal_name = b.take_unique();
    b.declare(plan.signal_name, plan.targets[0].width, Direction::Input);
  }
  return plan;
}

// Emits the assignments of one body and appends the matching ground-truth
// branch. `terms` is the full root-to-leaf condition list.
inline std::vector<StmtPtr> emit_body(Builder& b, const RegionPlan& plan,
                                      int body,
                                      const std::vector<ExprPtr>& terms,
                                      double probability) {
  std::vector<StmtPtr> stmts;
  GenBranch branch;
  branch.path_condition = conjunction(terms);
  branch.probability = probability;
  for (size_t t = 0; t < plan.targets.size(); ++t) {
    ExprPtr lhs = Expr::ident(plan.targets[t].name);
    ExprPtr rhs;
    if (t == 0 && body == plan.signal_body) {
      rhs = Expr::ident(plan.signal_name);
    } else {
      rhs = sized_literal(plan.targets[t].width, plan.literal_values[t][body]);
    }
    stmts.push_back(Stmt::assign(lhs, rhs, b.sync));
    branch.assignments.emplace_back(std::move(lhs), std::move(rhs));
  }
  if (branch.probability < kPathProbFloor - 1e-12) {
    throw Error("GenInvariant", "generated path fires too rarely");
  }
  b.trace.branches.push_back(std::move(branch));
  return stmts;
}

inline std::set<std::string> term_names(const std::vector<ExprPtr>& terms) {
  std::set<std::string> names;
  for (const auto& t : terms) collect_idents(t, names);
  return names;
}

// Builds an if/else-if chain. `levels_below` asks for that many further
// nested chain levels hanging off arm 0. `entry_prob` is the chance per
// cycle that control reaches this region.
inline StmtPtr build_if_chain(Builder& b, int levels_below, double entry_prob,
                              std::vector<ExprPtr> terms, int depth) {
  bool nest = levels_below > 0;
  int n_arms;
  if (nest) {
    n_arms = 2 + static_cast<int>(b.rng.below(2));  // nested arm + 1-2 real
  } else if (depth == 0) {
    n_arms = 1 + static_cast<int>(b.rng.below(4));
  } else {
    n_arms = 1 + static_cast<int>(b.rng.below(2));
  }
  bool has_else = nest || b.rng.chance(0.6);

  // Rich multi-atom guards are reserved for short root chains; everywhere
  // else single-atom guards keep every path above the probability floor.
  bool rich = depth == 0 && !nest && n_arms <= 2;

  int assigning = (n_arms - (nest ? 1 : 0)) + (has_else ? 1 : 0);
  RegionPlan plan = plan_region(b, assigning);

  std::vector<IfArm> arms;
  std::vector<ExprPtr> prefix = std::move(terms);
  double remaining = entry_prob;
  int body = 0;
  for (int i = 0; i < n_arms; ++i) {
    std::set<std::string> exclude = term_names(prefix);
    int atoms = 1;
    if (rich && !(nest && i == 0)) {
      atoms = b.rng.chance(0.4) ? b.long_atoms
                                : 1 + static_cast<int>(b.rng.below(2));
    }
    Guard g = draw_guard(b, atoms, exclude);
    std::vector<ExprPtr> arm_terms = prefix;
    arm_terms.push_back(g.cond);
    IfArm arm;
    arm.cond = g.cond;
    if (nest && i == 0) {
      arm.body.push_back(build_if_chain(b, levels_below - 1,
                                        remaining * g.prob,
                                        std::move(arm_terms), depth + 1));
    } else {
      arm.body = emit_body(b, plan, body++, arm_terms, remaining * g.prob);
    }
    arms.push_back(std::move(arm));
    prefix.push_back(negate_expr(g.cond));
    remaining *= 1.0 - g.prob;
  }
  std::optional<std::vector<StmtPtr>> else_body;
  if (has_else) {
    else_body = emit_body(b, plan, body++, prefix, remaining);
  }
  return Stmt::if_stmt(std::move(arms), std::move(else_body));
}

// Builds a case region over a fresh selector; in combined mode every
// labeled arm wraps its assignments in a short inner if chain.
inline StmtPtr build_case(Builder& b, bool combined, double entry_prob,
                          const std::vector<ExprPtr>& terms) {
  bool has_default = b.rng.chance(0.5);
  int width;
  int labels_per_arm;
  if (combined) {
    width = static_cast<int>(b.rng.range(3, has_default ? 4 : 7));
    labels_per_arm = width > 3 ? 1 << (width - 3) : 1;
  } else {
    width = static_cast<int>(b.rng.range(3, has_default ? 6 : 8));
    labels_per_arm = width > 5 ? 1 << (width - 5) : 1;
  }
  int n_arms = 2 + static_cast<int>(b.rng.below(5));
  int space = 1 << width;
  while (n_arms * labels_per_arm > space - 1) --n_arms;

  std::string sel = b.take_unique();
  b.declare(sel, width, Direction::Input);

  // Distinct labels via a partial shuffle of the value space.
  std::vector<uint64_t> values(space);
  for (int i = 0; i < space; ++i) values[i] = static_cast<uint64_t>(i);
  int need = n_arms * labels_per_arm;
  for (int i = 0; i < need; ++i) {
    size_t j = i + b.rng.below(static_cast<uint64_t>(space - i));
    std::swap(values[i], values[j]);
  }

  RegionPlan plan;
  if (!combined) {
    plan = plan_region(b, n_arms + (has_default ? 1 : 0));
  } else if (has_default) {
    plan = plan_region(b, 1);  // combined: only the default assigns directly
  }


  std::vector<CaseArm> arms;
  std::vector<ExprPtr> negated = terms;
  int label_at = 0;
  int body = 0;
  for (int i = 0; i < n_arms; ++i) {
    CaseArm arm;
    ExprPtr match;
    for (int k = 0; k < labels_per_arm; ++k) {
      ExprPtr label = sized_literal(width, values[label_at++]);
      arm.labels.push_back(label);
      ExprPtr eq = Expr::binary(BinaryOp::Eq, Expr::ident(sel), label);
      match = match ? Expr::binary(BinaryOp::LogicOr, std::move(match), eq) : eq;
      negated.push_back(Expr::binary(BinaryOp::Ne, Expr::ident(sel), label));
    }
    std::vector<ExprPtr> arm_terms = terms;
    arm_terms.push_back(match);
    double arm_prob =
        entry_prob * labels_per_arm / static_cast<double>(space);
    if (combined) {
      arm.body.push_back(
          build_if_chain(b, 0, arm_prob, std::move(arm_terms), 1));
    } else {
      arm.body = emit_body(b, plan, body++, arm_terms, arm_prob);
    }
    arms.push_back(std::move(arm));
  }
  std::optional<std::vector<StmtPtr>> default_body;
  if (has_default) {
    double default_prob =
        entry_prob * (space - need) / static_cast<double>(space);
    default_body = emit_body(b, plan, body++, negated, default_prob);
  }
  return Stmt::case_stmt(Expr::ident(sel), std::move(arms),
                         std::move(default_body));
}

}  // namespace gen_detail

// Random boolean condition with exactly `atoms` leaf atoms over pool names.
inline ExprPtr gen_condition(const IdentifierPool& pool, int atoms,
                             uint64_t seed) {
  if (pool.empty()) throw Error("EmptyPool", "identifier pool is empty");
  if (atoms < 1) throw Error("BadAtomCount", "atoms must be >= 1");
  Rng rng(seed);
  std::vector<std::string> names = pool.names();
  return gen_detail::condition_tree(
      atoms, rng, [&]() { return names[rng.below(names.size())]; });
}

// Generates one module holding one always block of the given category,
// together with the ground-truth branch record.
inline std::pair<RtlModule, GenTrace> gen_block(Category category, bool sync,
                                                const IdentifierPool& pool,
                                                uint64_t seed,
                                                int max_nesting = 3,
                                                int long_condition_min_atoms = 4) {
  // clk_i and rst_ni belong to the block itself; mined pools may carry them.
  std::vector<std::string> usable = pool.names();
  usable.erase(std::remove_if(usable.begin(), usable.end(),
                              [](const std::string& n) {
                                return n == "clk_i" || n == "rst_ni";
                              }),
               usable.end());
  if (usable.size() < 8) {
    throw Error("PoolTooSmall", "gen_block needs at least 8 pool names");
  }
  gen_detail::Builder b(derive_seed(seed, 1));
  b.sync = sync;
  b.long_atoms = long_condition_min_atoms;
  b.module.name = "blk_" + detail::name_suffix(seed, 0);

  // Deterministic shuffle of the pool names.
  b.avail = std::move(usable);
  for (size_t i = b.avail.size(); i > 1; --i) {
    std::swap(b.avail[i - 1], b.avail[b.rng.below(i)]);
  }

  bool reset = false;
  AlwaysBlock block;
  if (sync) {
    b.declare("clk_i", 1, Direction::Input);
    block.kind = b.rng.below(2) == 0 ? AlwaysKind::Always : AlwaysKind::AlwaysFf;
    block.sensitivity.push_back({EdgeKind::Posedge, "clk_i"});
    reset = b.rng.chance(0.5);
    if (reset) {
      b.declare("rst_ni", 1, Direction::Input);
      block.sensitivity.push_back({EdgeKind::Negedge, "rst_ni"});
    }
  } else {
    block.kind = AlwaysKind::AlwaysComb;
  }

  int levels = 1;
  if (category == Category::IfElse) {
    if (b.rng.chance(0.25)) {
      levels = std::min(3, max_nesting);
    } else if (b.rng.chance(0.25)) {
      levels = 2;
    }
  }

  double entry = reset ? 1.0 - gen_detail::kResetActiveProb : 1.0;
  std::vector<ExprPtr> terms;
  ExprPtr reset_guard;
  if (reset) {
    reset_guard = Expr::unary(UnaryOp::BitNot, Expr::ident("rst_ni"));
    terms.push_back(negate_expr(reset_guard));
  }

  StmtPtr body;
  switch (category) {
    case Category::IfElse:
      body = gen_detail::build_if_chain(b, levels - 1, entry, terms, 0);
      break;
    case Category::CaseStmt:
      body = gen_detail::build_case(b, false, entry, terms);
      break;
    case Category::Combined:
      body = gen_detail::build_case(b, true, entry, terms);
      break;
  }

  if (reset) {
    // Reset wrapper: the reset arm clears every target, the else branch holds
    // the real structure. The reset branch is recorded first to match path
    // enumeration order.
    GenBranch reset_branch;
    reset_branch.path_condition = reset_guard;
    reset_branch.probability = gen_detail::kResetActiveProb;
    std::vector<StmtPtr> reset_body;
    for (const auto& tgt : b.all_targets) {
      ExprPtr lhs = Expr::ident(tgt.name);
      ExprPtr rhs = Expr::fill(false);
      reset_body.push_back(Stmt::assign(lhs, rhs, b.sync));
      reset_branch.assignments.emplace_back(std::move(lhs), std::move(rhs));
    }
    b.trace.branches.insert(b.trace.branches.begin(), std::move(reset_branch));
    std::vector<IfArm> arms;
    arms.push_back({reset_guard, std::move(reset_body)});
    std::vector<StmtPtr> else_body;
    else_body.push_back(std::move(body));
    body = Stmt::if_stmt(std::move(arms), std::move(else_body));
  }

  block.body.push_back(std::move(body));
  b.module.always_blocks.push_back(std::move(block));
  return {std::move(b.module), std::move(b.trace)};
}

namespace gen_detail {

// Optional delayed check: a second property on the first literal-valued
// path, asserting the assigned value is still visible one cycle later
// through $past.
inline std::optional<Property> delayed_property(
    const std::vector<PathAssertion>& paths, uint64_t seed) {
  for (const auto& pa : paths) {
    for (const auto& ap : pa.assignments) {
      if (ap.rhs->kind != ExprKind::Literal) continue;
      Property p = pa.property;
      p.name = "SyncDelay" + detail::name_suffix(seed, static_cast<int>(paths.size()));
      p.delay = 1;
      p.consequent =
          Expr::binary(BinaryOp::Eq, Expr::past(ap.lhs, 1), ap.rhs);
      return p;
    }
  }
  return std::nullopt;
}

}  // namespace gen_detail

struct CategoryCounts {
  int if_else = 0;
  int case_stmt = 0;
  int combined = 0;
};

// Largest-remainder apportionment of sample_count over the three ratios.
inline CategoryCounts category_counts(const GenConfig& config) {
  double shares[3] = {config.ratio_if_else * config.sample_count,
                      config.ratio_case_stmt * config.sample_count,
                      config.ratio_combined * config.sample_count};
  int base[3];
  double frac[3];
  int assigned = 0;
  for (int i = 0; i < 3; ++i) {
    base[i] = static_cast<int>(std::floor(shares[i]));
    frac[i] = shares[i] - base[i];
    assigned += base[i];
  }
  int order[3] = {0, 1, 2};
  std::stable_sort(order, order + 3, [&](int a, int b) { return frac[a] > frac[b]; });
  for (int k = 0; k < config.sample_count - assigned; ++k) ++base[order[k]];
  return {base[0], base[1], base[2]};
}

// Synchronous share of `total`, with the odd sample going to sync.
inline int sync_share(int total, double sync_fraction) {
  return total - static_cast<int>(std::floor(total * (1.0 - sync_fraction)));
}

inline constexpr const char* kSyncPromptPrefix =
    "Generate a list of synchronous SystemVerilog assertions executing at "
    "(posedge clk_i) from the following code:\n";
inline constexpr const char* kAsyncPromptPrefix =
    "Generate a list of asynchronous SystemVerilog Assertions from the "
    "following code:\n";

// Builds the sample at dataset index `index` for the given config.
inline DatasetSample make_sample(const GenConfig& config, Category category,
                                 bool sync, uint64_t index) {
  uint64_t seed = derive_seed(config.master_seed, static_cast<int>(index));
  auto [module, trace] = gen_block(category, sync, config.pool, seed,
                                   config.max_nesting,
                                   config.long_condition_min_atoms);
  (void)trace;
  SynthOptions opts;
  opts.name_seed = seed;
  std::vector<Property> props;
  std::vector<PathAssertion> paths;
  for (const auto& block : module.always_blocks) {
    for (auto& pa : synthesize(block, opts)) paths.push_back(std::move(pa));
  }
  for (const auto& pa : paths) props.push_back(pa.property);
  if (sync && Rng(derive_seed(seed, 0xDE1A)).chance(0.10)) {
    if (auto delayed = gen_detail::delayed_property(paths, seed)) {
      props.push_back(std::move(*delayed));
    }
  }

  DatasetSample sample;
  sample.category = category;
  sample.sync = sync;
  sample.seed = seed;
  sample.n_assertions = static_cast<int>(props.size());
  sample.prompt = (sync ? kSyncPromptPrefix : kAsyncPromptPrefix) +
                  pretty_print_module(module);
  sample.response = print_assertion_file(props);
  return sample;
}

// Generates the full dataset in index order: categories in contiguous
// blocks (if_else, case_stmt, combined), synchronous samples first within
// each block.
inline std::vector<DatasetSample> assemble(const GenConfig& config) {
  validate(config);
  CategoryCounts counts = category_counts(config);
  std::vector<DatasetSample> samples;
  samples.reserve(static_cast<size_t>(config.sample_count));
  uint64_t index = 0;
  const std::pair<Category, int> layout[3] = {
      {Category::IfElse, counts.if_else},
      {Category::CaseStmt, counts.case_stmt},
      {Category::Combined, counts.combined},
  };
  for (const auto& [category, total] : layout) {
    int n_sync = sync_share(total, config.sync_fraction);
    for (int i = 0; i < total; ++i) {
      samples.push_back(make_sample(config, category, i < n_sync, index));
      ++index;
    }
  }
  return samples;
}

inline nlohmann::ordered_json sample_to_json(const DatasetSample& s) {
  nlohmann::ordered_json j;
  j["prompt"] = s.prompt;
  j["response"] = s.response;
  j["meta"] = nlohmann::ordered_json{{"category", category_name(s.category)},
                                     {"sync", s.sync},
                                     {"seed", s.seed},
                                     {"n_assertions", s.n_assertions}};
  return j;
}

inline std::string dataset_to_jsonl(const std::vector<DatasetSample>& samples) {
  std::string out;
  for (const auto& s : samples) {
    out += sample_to_json(s).dump();
    out += '\n';
  }
  return out;
}

}  // namespace svaforge

#endif  // SVAFORGE_GENERATE_HPP_
