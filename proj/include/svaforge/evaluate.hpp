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

#ifndef SVAFORGE_EVALUATE_HPP_
#define SVAFORGE_EVALUATE_HPP_

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "svaforge/equiv.hpp"
#include "svaforge/mutate.hpp"
#include "svaforge/parse.hpp"
#include "svaforge/sim.hpp"
#include "svaforge/synth.hpp"

namespace svaforge {

// ---------------------------------------------------------------------------
// Syntax checking

struct SyntaxReport {
  int declared = 0;  // property/assert-property units, parseable or not
  int accepted = 0;
  double pct = 0.0;  // 100 * accepted / declared; 0 when nothing declared
  bool empty_input = false;
  std::vector<Property> properties;
  std::vector<Diagnostic> diagnostics;
};

inline SyntaxReport check_syntax(const std::string& assertion_src) {
  PropertySet set = parse_properties(assertion_src);
  SyntaxReport report;
  report.declared = set.declared_units;
  report.accepted = static_cast<int>(set.properties.size());
  report.properties = std::move(set.properties);
  report.diagnostics = std::move(set.diagnostics);
  if (report.declared > 0) {
    report.pct = 100.0 * report.accepted / report.declared;
  } else {
    report.empty_input = true;
  }
  return report;
}

// ---------------------------------------------------------------------------
// Functional correctness

struct FunctionalOptions {
  StimulusPlan plan;
  std::set<MutOp> ops = all_mut_ops();
  int max_atoms = 20;
};

struct AssertionVerdict {
  std::string name;
  bool functional = false;
  bool holds_non_vacuous = false;   // criterion (a)
  bool antecedent_equivalent = false;  // criterion (b)
  bool kills_mutant = false;        // criterion (c)
  bool atom_budget_exceeded = false;  // (b) skipped when set
  int matched_path = -1;  // index into the oracle path list, -1 = none
  int triggered = 0;
  std::string reason;  // empty when functional
};

struct EvalReport {
  int generated = 0;
  double syntactically_correct_pct = 0.0;
  double functionally_correct_pct = 0.0;
  double cpc_pct = 0.0;
  bool no_paths = false;
  std::vector<AssertionVerdict> verdicts;
};

struct CpcReport {
  int total = 0;
  int covered = 0;
  double pct = 0.0;
  bool no_paths = false;
};

namespace detail {

inline bool spans_overlap(Span a, Span b) {
  return a.valid() && b.valid() && a.begin < b.end && b.begin < a.end;
}

// Signals on the left side of the consequent's comparison terms; terms that
// are not comparisons contribute all their identifiers.
inline void consequent_lhs_signals(const ExprPtr& e, std::set<std::string>& out) {
  if (!e) return;
  if (e->kind == ExprKind::Binary) {
    switch (e->bop) {
      case BinaryOp::LogicAnd:
        consequent_lhs_signals(e->a, out);
        consequent_lhs_signals(e->b, out);
        return;
      case BinaryOp::Eq:
      case BinaryOp::Ne:
      case BinaryOp::Lt:
      case BinaryOp::Le:
      case BinaryOp::Gt:
      case BinaryOp::Ge:
        collect_idents(e->a, out);
        return;
      default:
        break;
    }
  }
  collect_idents(e, out);
}

// Oracle paths plus the per-path data matching needs.
struct OraclePaths {
  std::vector<PathAssertion> paths;
  std::vector<std::set<std::string>> lhs_names;
  std::vector<std::set<std::string>> cond_atoms;
};

inline OraclePaths collect_oracle_paths(const RtlModule& m) {
  OraclePaths out;
  SynthOptions opts;
  for (const auto& block : m.always_blocks) {
    for (auto& pa : synthesize(block, opts)) {
      std::set<std::string> lhs;
      for (const auto& ap : pa.assignments) collect_idents(ap.lhs, lhs);
      out.lhs_names.push_back(std::move(lhs));
      out.cond_atoms.push_back(atom_keys(pa.path_condition));
      out.paths.push_back(std::move(pa));
    }
  }
  return out;
}

// Best-overlap candidates for a property: consequent LHS overlap dominates,
// antecedent atom overlap breaks ties. All paths sharing the best nonzero
// score are returned in path order; the atoms of sibling arms coincide (the
// guard appears plain in one condition and negated in the next), so the final
// pick among them is the caller's equivalence test.
inline std::vector<int> match_tier(const Property& p, const OraclePaths& oracle) {
  std::set<std::string> lhs;
  consequent_lhs_signals(p.consequent, lhs);
  std::set<std::string> atoms = atom_keys(p.antecedent);
  std::vector<int> tier;
  size_t best_score = 0;
  for (size_t i = 0; i < oracle.paths.size(); ++i) {
    size_t lhs_hits = 0;
    for (const auto& name : lhs) {
      if (oracle.lhs_names[i].count(name)) ++lhs_hits;
    }
    size_t atom_hits = 0;
    for (const auto& key : atoms) {
      if (oracle.cond_atoms[i].count(key)) ++atom_hits;
    }
    size_t score = lhs_hits * 1000 + atom_hits;
    if (score == 0) continue;
    if (score > best_score) {
      best_score = score;
      tier.clear();
    }
    if (score == best_score) tier.push_back(static_cast<int>(i));
  }
  return tier;
}

struct MutantTrace {
  Span site;
  Trace trace;
};

// Simulates every mutant and keeps the behavior-changing ones. Mutants whose
// mutated design fails to simulate cannot be compared and are dropped.
inline std::vector<MutantTrace> behavior_changing_mutants(
    const RtlModule& m, const Trace& original, const FunctionalOptions& opts) {
  std::vector<MutantTrace> out;
  for (const auto& mut : mutate(m, opts.ops)) {
    try {
      Trace t = simulate(mut.module, opts.plan);
      if (!traces_equal(original, t)) out.push_back({mut.site, std::move(t)});
    } catch (const Error&) {
    }
  }
  return out;
}

}  // namespace detail

// Grades each property against the design: (a) it holds non-vacuously on the
// original trace, (b) its antecedent is equivalent to the condition of the
// oracle path it matches, and (c) at least one behavior-changing mutant
// overlapping that path's span makes it fail. When the equivalence check
// exceeds the atom budget, (b) is skipped and flagged.
inline EvalReport eval_functional(const RtlModule& m,
                                  const std::vector<Property>& props,
                                  const FunctionalOptions& opts = {}) {
  EvalReport report;
  report.generated = static_cast<int>(props.size());
  detail::OraclePaths oracle = detail::collect_oracle_paths(m);
  Trace original = simulate(m, opts.plan);
  std::vector<detail::MutantTrace> mutants =
      detail::behavior_changing_mutants(m, original, opts);

  int functional = 0;
  for (const auto& p : props) {
    AssertionVerdict v;
    v.name = p.name;

    PropertyEvalResult run = eval_property(original, p);
    v.triggered = run.triggered;
    v.holds_non_vacuous = run.non_vacuous();

    std::vector<int> tier = detail::match_tier(p, oracle);
    v.matched_path = tier.empty() ? -1 : tier.front();
    for (int idx : tier) {
      bool eq = false;
      try {
        eq = equivalent(p.antecedent, oracle.paths[idx].path_condition,
                        opts.max_atoms);
      } catch (const Error& e) {
        if (e.code() != "AtomBudgetExceeded") throw;
        v.atom_budget_exceeded = true;
        break;
      }
      if (eq) {
        v.antecedent_equivalent = true;
        v.matched_path = idx;
        break;
      }
    }
    if (v.matched_path >= 0) {
      const PathAssertion& path = oracle.paths[v.matched_path];
      for (const auto& mt : mutants) {
        if (!detail::spans_overlap(mt.site, path.source_span)) continue;
        if (eval_property(mt.trace, p).failures() > 0) {
          v.kills_mutant = true;
          break;
        }
      }
    }

    bool b_ok = v.antecedent_equivalent || v.atom_budget_exceeded;
    v.functional = v.holds_non_vacuous && b_ok && v.kills_mutant;
    if (!v.functional) {
      if (!run.holds()) {
        v.reason = "fails on original trace";
      } else if (!v.holds_non_vacuous) {
        v.reason = "vacuous on original trace";
      } else if (v.matched_path < 0) {
        v.reason = "matches no assignment path";
      } else if (!b_ok) {
        const PathAssertion& path = oracle.paths[v.matched_path];
        bool narrower = implies(path.path_condition, p.antecedent, opts.max_atoms) &&
                        !implies(p.antecedent, path.path_condition, opts.max_atoms);
        v.reason = narrower ? "antecedent omits guarding condition"
                            : "antecedent differs from path condition";
      } else {
        v.reason = "kills no behavior-changing mutant";
      }
    }
    if (v.functional) ++functional;
    report.verdicts.push_back(std::move(v));
  }

  if (report.generated > 0) {
    report.syntactically_correct_pct = 100.0;
    report.functionally_correct_pct = 100.0 * functional / report.generated;
  }
  report.no_paths = oracle.paths.empty();
  return report;
}

// Grades raw assertion text end to end: syntax, functional criteria, and
// CPC, with percentages relative to the declared unit count so the verdict
// matches what check_syntax reported.
inline EvalReport evaluate_assertions(const RtlModule& m,
                                      const std::string& assertion_src,
                                      const FunctionalOptions& opts = {});

// Complete Path Coverage: the fraction of assignment-bearing paths whose
// condition is equivalent to some accepted property's antecedent. A design
// with no such paths scores 100 with the no-paths flag set.
inline CpcReport cpc(const RtlModule& m, const std::vector<Property>& props,
                     int max_atoms = 20) {
  detail::OraclePaths oracle = detail::collect_oracle_paths(m);
  CpcReport report;
  report.total = static_cast<int>(oracle.paths.size());
  if (report.total == 0) {
    report.no_paths = true;
    report.pct = 100.0;
    return report;
  }
  for (const auto& path : oracle.paths) {
    for (const auto& p : props) {
      bool eq = false;
      try {
        eq = equivalent(path.path_condition, p.antecedent, max_atoms);
      } catch (const Error& e) {
        if (e.code() != "AtomBudgetExceeded") throw;
      }
      if (eq) {
        ++report.covered;
        break;
      }
    }
  }
  report.pct = 100.0 * report.covered / report.total;
  return report;
}

inline EvalReport evaluate_assertions(const RtlModule& m,
                                      const std::string& assertion_src,
                                      const FunctionalOptions& opts) {
  SyntaxReport syn = check_syntax(assertion_src);
  EvalReport report = eval_functional(m, syn.properties, opts);
  int functional = 0;
  for (const auto& v : report.verdicts) {
    if (v.functional) ++functional;
  }
  report.generated = syn.declared;
  if (syn.declared > 0) {
    report.syntactically_correct_pct = 100.0 * syn.accepted / syn.declared;
    report.functionally_correct_pct = 100.0 * functional / syn.declared;
  } else {
    report.syntactically_correct_pct = 0.0;
    report.functionally_correct_pct = 0.0;
  }
  report.cpc_pct = cpc(m, syn.properties, opts.max_atoms).pct;
  return report;
}

}  // namespace svaforge

#endif  // SVAFORGE_EVALUATE_HPP_
