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

// Metric tests: n-gram leakage scoring, boolean equivalence, syntax
// percentages, the functional-correctness criteria, and path coverage.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "svaforge/equiv.hpp"
#include "svaforge/evaluate.hpp"
#include "svaforge/ngram.hpp"
#include "svaforge/parse.hpp"
#include "svaforge/synth.hpp"

namespace svaforge {
namespace {

// ---------------------------------------------------------------------------
// n-gram sets

TEST(NgramTest, WindowCountLaw) {
  NGramSet distinct = ngrams("abcdef", 2);
  EXPECT_EQ(distinct.size(), 5u);
  NGramSet repeated = ngrams("aaaa", 2);
  EXPECT_EQ(repeated.size(), 1u);
  EXPECT_TRUE(repeated.contains("aa"));
}

TEST(NgramTest, InputShorterThanNIsEmpty) {
  EXPECT_EQ(ngrams("", 13).size(), 0u);
  EXPECT_EQ(ngrams("AAAAAAAAAAAA", 13).size(), 0u);
}

TEST(NgramTest, ThirteenIdenticalBytesOneGram) {
  std::string a(13, 'A');
  NGramSet set = ngrams(a, 13);
  EXPECT_EQ(set.size(), 1u);
  EXPECT_TRUE(set.contains(a));
  EXPECT_FALSE(set.contains(std::string(13, 'B')));
}

TEST(NgramTest, SizeBelowOneRejected) {
  try {
    NGramSet set(0);
    FAIL() << "expected BadNGramSize";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), std::string("BadNGramSize"));
  }
}

// ---------------------------------------------------------------------------
// overlap

TEST(OverlapTest, IdenticalCorporaScoreOne) {
  std::string corpus = "always_ff @(posedge clk_i) begin q <= d; end";
  OverlapReport r = overlap(corpus, corpus);
  EXPECT_DOUBLE_EQ(r.score, 1.0);
  EXPECT_EQ(r.n1, r.n2);
  EXPECT_EQ(r.intersection, r.union_size);
  EXPECT_FALSE(r.degenerate);
}

TEST(OverlapTest, DisjointAlphabetsScoreZero) {
  OverlapReport r = overlap(std::string(40, 'A'), std::string(40, 'B'));
  EXPECT_DOUBLE_EQ(r.score, 0.0);
  EXPECT_EQ(r.intersection, 0u);
  EXPECT_FALSE(r.degenerate);
}

TEST(OverlapTest, SingleTrailingByteDifferenceScoresHalf) {
  std::string a(14, 'A');
  std::string b = "AAAAAAAAAAAAAB";
  OverlapReport r = overlap(a, b);
  EXPECT_EQ(r.n1, 1u);
  EXPECT_EQ(r.n2, 2u);
  EXPECT_EQ(r.intersection, 1u);
  EXPECT_EQ(r.union_size, 2u);
  EXPECT_DOUBLE_EQ(r.score, 0.5);
}

TEST(OverlapTest, SymmetricAndBounded) {
  std::string a = "module m; always_comb begin x = y; end endmodule";
  std::string b = "module n; always_comb begin x = z + y; end endmodule";
  OverlapReport ab = overlap(a, b);
  OverlapReport ba = overlap(b, a);
  EXPECT_DOUBLE_EQ(ab.score, ba.score);
  EXPECT_GE(ab.score, 0.0);
  EXPECT_LE(ab.score, 1.0);
}

TEST(OverlapTest, EmptyUnionIsDegenerateZero) {
  OverlapReport r = overlap("short", "tiny");
  EXPECT_TRUE(r.degenerate);
  EXPECT_DOUBLE_EQ(r.score, 0.0);
  EXPECT_EQ(r.union_size, 0u);
}

TEST(OverlapTest, CustomGramSize) {
  // bigrams: {ab, bc} vs {bc, cd} share one of three distinct grams.
  OverlapReport r = overlap("abc", "bcd", 2);
  EXPECT_EQ(r.intersection, 1u);
  EXPECT_EQ(r.union_size, 3u);
  EXPECT_NEAR(r.score, 1.0 / 3.0, 1e-12);
}

TEST(CorpusTest, FilesJoinSortedWithSeparator) {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "svaforge_corpus_test";
  fs::remove_all(dir);
  fs::create_directories(dir);
  std::ofstream(dir / "b.sv") << "bbb";
  std::ofstream(dir / "a.sv") << "aaa";

  std::string expected("aaa\0bbb", 7);
  EXPECT_EQ(corpus_from_files({(dir / "b.sv").string(), (dir / "a.sv").string()}),
            expected);
  EXPECT_EQ(corpus_from_dir(dir.string()), expected);
  fs::remove_all(dir);
}

// ---------------------------------------------------------------------------
// equivalence

ExprPtr id(std::string name) { return Expr::ident(std::move(name)); }

TEST(EquivTest, ZeroComparisonsFoldToTruthiness) {
  EXPECT_TRUE(equivalent(Expr::binary(BinaryOp::Eq, id("x"), Expr::bit(false)),
                         Expr::unary(UnaryOp::LogicNot, id("x"))));
  EXPECT_TRUE(equivalent(Expr::binary(BinaryOp::Ne, id("x"), Expr::fill(false)),
                         id("x")));
}

TEST(EquivTest, ExplicitOneBitOneFoldsButFillDoesNot) {
  EXPECT_TRUE(equivalent(Expr::binary(BinaryOp::Eq, id("x"), Expr::bit(true)),
                         id("x")));
  // x == '1 stays an opaque atom: for multi-bit x it is not truthiness.
  EXPECT_FALSE(equivalent(Expr::binary(BinaryOp::Eq, id("x"), Expr::fill(true)),
                          id("x")));
}

TEST(EquivTest, ComparisonFamilyNormalizes) {
  EXPECT_TRUE(equivalent(Expr::binary(BinaryOp::Gt, id("a"), id("b")),
                         Expr::binary(BinaryOp::Lt, id("b"), id("a"))));
  EXPECT_TRUE(equivalent(
      Expr::binary(BinaryOp::Ge, id("a"), id("b")),
      Expr::unary(UnaryOp::LogicNot, Expr::binary(BinaryOp::Lt, id("a"), id("b")))));
  EXPECT_TRUE(equivalent(
      Expr::binary(BinaryOp::Le, id("a"), id("b")),
      Expr::unary(UnaryOp::LogicNot, Expr::binary(BinaryOp::Lt, id("b"), id("a")))));
}

TEST(EquivTest, EqualityOperandOrderIrrelevant) {
  EXPECT_TRUE(equivalent(Expr::binary(BinaryOp::Eq, id("a"), id("b")),
                         Expr::binary(BinaryOp::Eq, id("b"), id("a"))));
  EXPECT_TRUE(equivalent(Expr::binary(BinaryOp::Ne, id("a"), id("b")),
                         Expr::unary(UnaryOp::LogicNot,
                                     Expr::binary(BinaryOp::Eq, id("b"), id("a")))));
}

TEST(EquivTest, BooleanAlgebraHolds) {
  ExprPtr a = id("a");
  ExprPtr b = id("b");
  EXPECT_TRUE(equivalent(
      Expr::unary(UnaryOp::LogicNot, Expr::unary(UnaryOp::LogicNot, a)), a));
  EXPECT_TRUE(equivalent(
      Expr::unary(UnaryOp::LogicNot, Expr::binary(BinaryOp::LogicAnd, a, b)),
      Expr::binary(BinaryOp::LogicOr, Expr::unary(UnaryOp::LogicNot, a),
                   Expr::unary(UnaryOp::LogicNot, b))));
  EXPECT_FALSE(equivalent(a, b));
}

TEST(EquivTest, ImpliesIsDirectional) {
  ExprPtr conj = Expr::binary(BinaryOp::LogicAnd, id("a"), id("b"));
  EXPECT_TRUE(implies(conj, id("a")));
  EXPECT_FALSE(implies(id("a"), conj));
}

TEST(EquivTest, AtomBudgetEnforced) {
  std::vector<ExprPtr> terms;
  for (int i = 0; i < 21; ++i) terms.push_back(id("s" + std::to_string(i)));
  ExprPtr wide = disjunction(terms);
  try {
    equivalent(wide, wide, 20);
    FAIL() << "expected AtomBudgetExceeded";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), std::string("AtomBudgetExceeded"));
  }
  EXPECT_TRUE(equivalent(wide, wide, 21));
}

TEST(EquivTest, AtomKeysNameTheLeaves) {
  ExprPtr e = Expr::binary(BinaryOp::LogicAnd, id("a"),
                           Expr::unary(UnaryOp::LogicNot, id("b")));
  std::set<std::string> keys = atom_keys(e);
  EXPECT_EQ(keys, (std::set<std::string>{"a", "b"}));
  EXPECT_EQ(atom_keys(Expr::binary(BinaryOp::Eq, id("a"), id("b"))).size(), 1u);
}

// ---------------------------------------------------------------------------
// syntax checking

constexpr const char* kTimerAssertions = R"(property ResetTimer1;
@(posedge clk_aon_i)
(!rst_aon_ni)|->wakeup_timer_cnt_q=1'b0;
endproperty
property ResetTimer2;
@(posedge clk_aon_i)(wakeup_timer_cnt_clr||cfg_fsm_rst_i||trigger_h2l)|->wakeup_timer_cnt_q=='0;
endproperty
)";

TEST(CheckSyntaxTest, HalfAcceptedFile) {
  SyntaxReport r = check_syntax(kTimerAssertions);
  EXPECT_EQ(r.declared, 2);
  EXPECT_EQ(r.accepted, 1);
  EXPECT_DOUBLE_EQ(r.pct, 50.0);
  EXPECT_FALSE(r.empty_input);
  ASSERT_EQ(r.properties.size(), 1u);
  EXPECT_EQ(r.properties[0].name, "ResetTimer2");
  bool rejected_consequent_assign = false;
  for (const auto& d : r.diagnostics) {
    if (d.code == "E_ASSIGN_IN_CONSEQUENT") rejected_consequent_assign = true;
  }
  EXPECT_TRUE(rejected_consequent_assign);
}

TEST(CheckSyntaxTest, EmptyInputFlagged) {
  SyntaxReport r = check_syntax("");
  EXPECT_EQ(r.declared, 0);
  EXPECT_DOUBLE_EQ(r.pct, 0.0);
  EXPECT_TRUE(r.empty_input);
}

TEST(CheckSyntaxTest, AllValidIsHundred) {
  SyntaxReport r = check_syntax(R"(property P0;
  @(posedge clk_i) a |-> b == 1'b1;
endproperty
property P1;
  @(posedge clk_i) !a |-> b == 1'b0;
endproperty
)");
  EXPECT_EQ(r.declared, 2);
  EXPECT_EQ(r.accepted, 2);
  EXPECT_DOUBLE_EQ(r.pct, 100.0);
}

// ---------------------------------------------------------------------------
// functional correctness

constexpr const char* kResetClearChain = R"(module timer (
  input logic clk_aon_i,
  input logic rst_aon_ni,
  input logic wakeup_timer_cnt_clr,
  input logic cfg_fsm_rst_i,
  input logic trigger_h2l,
  input logic [7:0] wakeup_timer_cnt_d,
  output logic [7:0] wakeup_timer_cnt_q
);
  always_ff @(posedge clk_aon_i or negedge rst_aon_ni) begin
    if (!rst_aon_ni) begin
      wakeup_timer_cnt_q <= '0;
    end
    else if (wakeup_timer_cnt_clr || cfg_fsm_rst_i || trigger_h2l) begin
      wakeup_timer_cnt_q <= '0;
    end else begin
      wakeup_timer_cnt_q <= wakeup_timer_cnt_d;
    end
  end
endmodule
)";

RtlModule parse_one(const std::string& src) {
  ParsedFile f = parse_file(src);
  EXPECT_EQ(f.modules.size(), 1u);
  return f.modules[0];
}

std::vector<Property> oracle_properties(const RtlModule& m) {
  std::vector<Property> props;
  for (const auto& block : m.always_blocks) {
    for (const auto& pa : synthesize(block)) props.push_back(pa.property);
  }
  return props;
}

FunctionalOptions fast_options() {
  FunctionalOptions opts;
  opts.plan.cycles = 300;
  opts.plan.seed = 7;
  return opts;
}

TEST(EvalFunctionalTest, OracleSetPassesAllCriteria) {
  RtlModule m = parse_one(kResetClearChain);
  EvalReport r = eval_functional(m, oracle_properties(m), fast_options());
  EXPECT_DOUBLE_EQ(r.functionally_correct_pct, 100.0);
  for (const auto& v : r.verdicts) {
    EXPECT_TRUE(v.functional) << v.name << ": " << v.reason;
    EXPECT_TRUE(v.holds_non_vacuous) << v.name;
    EXPECT_TRUE(v.antecedent_equivalent) << v.name;
    EXPECT_TRUE(v.kills_mutant) << v.name;
    EXPECT_GE(v.triggered, 1) << v.name;
  }
}

TEST(EvalFunctionalTest, MissingGuardReportedAsOmission) {
  RtlModule m = parse_one(kResetClearChain);
  SyntaxReport syn = check_syntax(kTimerAssertions);
  ASSERT_EQ(syn.properties.size(), 1u);
  EvalReport r = eval_functional(m, syn.properties, fast_options());
  ASSERT_EQ(r.verdicts.size(), 1u);
  const AssertionVerdict& v = r.verdicts[0];
  EXPECT_FALSE(v.functional);
  EXPECT_TRUE(v.holds_non_vacuous);
  EXPECT_FALSE(v.antecedent_equivalent);
  EXPECT_EQ(v.reason, "antecedent omits guarding condition");
}

TEST(EvalFunctionalTest, TautologyMatchesNoPath) {
  RtlModule m = parse_one(kResetClearChain);
  Property taut;
  taut.name = "Taut";
  taut.clocking = Clocking{EdgeKind::Posedge, "clk_aon_i"};
  taut.antecedent = Expr::bit(true);
  taut.consequent = Expr::bit(true);
  EvalReport r = eval_functional(m, {taut}, fast_options());
  ASSERT_EQ(r.verdicts.size(), 1u);
  const AssertionVerdict& v = r.verdicts[0];
  EXPECT_FALSE(v.functional);
  EXPECT_TRUE(v.holds_non_vacuous);
  EXPECT_EQ(v.matched_path, -1);
  EXPECT_FALSE(v.kills_mutant);
  EXPECT_EQ(v.reason, "matches no assignment path");
}

TEST(EvalFunctionalTest, FailingPropertyReported) {
  RtlModule m = parse_one(kResetClearChain);
  Property p;
  p.name = "WrongValue";
  p.clocking = Clocking{EdgeKind::Posedge, "clk_aon_i"};
  p.antecedent = Expr::bit(true);
  p.consequent = Expr::binary(BinaryOp::Eq, id("wakeup_timer_cnt_q"),
                              Expr::literal(8, LiteralBase::Hex, 0x5a));
  EvalReport r = eval_functional(m, {p}, fast_options());
  ASSERT_EQ(r.verdicts.size(), 1u);
  EXPECT_FALSE(r.verdicts[0].functional);
  EXPECT_EQ(r.verdicts[0].reason, "fails on original trace");
}

TEST(EvalFunctionalTest, NeverTriggeredIsVacuous) {
  RtlModule m = parse_one(kResetClearChain);
  Property p;
  p.name = "Contradiction";
  p.clocking = Clocking{EdgeKind::Posedge, "clk_aon_i"};
  p.antecedent = Expr::binary(BinaryOp::LogicAnd, id("rst_aon_ni"),
                              Expr::unary(UnaryOp::LogicNot, id("rst_aon_ni")));
  p.consequent = Expr::binary(BinaryOp::Eq, id("wakeup_timer_cnt_q"),
                              Expr::fill(false));
  EvalReport r = eval_functional(m, {p}, fast_options());
  ASSERT_EQ(r.verdicts.size(), 1u);
  EXPECT_FALSE(r.verdicts[0].functional);
  EXPECT_EQ(r.verdicts[0].triggered, 0);
  EXPECT_EQ(r.verdicts[0].reason, "vacuous on original trace");
}

TEST(EvalFunctionalTest, UnfalsifiableConsequentKillsNothing) {
  RtlModule m = parse_one(kResetClearChain);
  std::vector<PathAssertion> paths = synthesize(m.always_blocks[0]);
  ASSERT_EQ(paths.size(), 3u);
  Property p = paths[1].property;
  p.consequent = Expr::bit(true);
  EvalReport r = eval_functional(m, {p}, fast_options());
  ASSERT_EQ(r.verdicts.size(), 1u);
  const AssertionVerdict& v = r.verdicts[0];
  EXPECT_FALSE(v.functional);
  EXPECT_TRUE(v.holds_non_vacuous);
  EXPECT_TRUE(v.antecedent_equivalent);
  EXPECT_FALSE(v.kills_mutant);
  EXPECT_EQ(v.reason, "kills no behavior-changing mutant");
}

TEST(EvalFunctionalTest, AtomBudgetSkipsEquivalence) {
  std::string src = "module wide (\n  input logic clk_i,\n";
  for (int i = 0; i < 21; ++i) {
    src += "  input logic s" + std::to_string(i) + ",\n";
  }
  src += R"(  output logic q
);
  always_ff @(posedge clk_i) begin
    if (s0) begin
      q <= 1'b1;
    end else begin
      q <= 1'b0;
    end
  end
endmodule
)";
  RtlModule m = parse_one(src);
  Property p;
  p.name = "WideAntecedent";
  p.clocking = Clocking{EdgeKind::Posedge, "clk_i"};
  std::vector<ExprPtr> terms;
  for (int i = 0; i < 21; ++i) terms.push_back(id("s" + std::to_string(i)));
  p.antecedent = disjunction(terms);
  p.consequent = Expr::bit(true);
  EvalReport r = eval_functional(m, {p}, fast_options());
  ASSERT_EQ(r.verdicts.size(), 1u);
  const AssertionVerdict& v = r.verdicts[0];
  EXPECT_TRUE(v.atom_budget_exceeded);
  EXPECT_FALSE(v.antecedent_equivalent);
  EXPECT_FALSE(v.functional);
  EXPECT_EQ(v.reason, "kills no behavior-changing mutant");
}

TEST(EvalFunctionalTest, MonotoneInOperatorSet) {
  RtlModule m = parse_one(kResetClearChain);
  std::vector<Property> props = oracle_properties(m);
  FunctionalOptions full = fast_options();
  EvalReport full_report = eval_functional(m, props, full);
  for (MutOp op : all_mut_ops()) {
    FunctionalOptions narrow = fast_options();
    narrow.ops = {op};
    EvalReport narrow_report = eval_functional(m, props, narrow);
    for (size_t i = 0; i < props.size(); ++i) {
      if (narrow_report.verdicts[i].functional) {
        EXPECT_TRUE(full_report.verdicts[i].functional)
            << props[i].name << " under " << mut_op_name(op);
      }
    }
  }
}

TEST(EvalFunctionalTest, ReportIsDeterministic) {
  RtlModule m = parse_one(kResetClearChain);
  std::vector<Property> props = oracle_properties(m);
  EvalReport a = eval_functional(m, props, fast_options());
  EvalReport b = eval_functional(m, props, fast_options());
  ASSERT_EQ(a.verdicts.size(), b.verdicts.size());
  for (size_t i = 0; i < a.verdicts.size(); ++i) {
    EXPECT_EQ(a.verdicts[i].functional, b.verdicts[i].functional);
    EXPECT_EQ(a.verdicts[i].matched_path, b.verdicts[i].matched_path);
    EXPECT_EQ(a.verdicts[i].triggered, b.verdicts[i].triggered);
    EXPECT_EQ(a.verdicts[i].reason, b.verdicts[i].reason);
  }
}

// ---------------------------------------------------------------------------
// complete path coverage

constexpr const char* kNestedReleaseCounter = R"(module rel (
  input logic rst_ni,
  input logic monitor_enable,
  input logic monitor_enable_q,
  input logic multi_controller_enable_i,
  input logic bus_release_cnt_load,
  input logic bus_release_cnt_dec,
  input logic [29:0] bus_release_cnt_sel,
  input logic [31:0] bus_inactive_timeout_i,
  output logic [29:0] bus_release_cnt
);
  always_comb begin
    if (!rst_ni) begin
      bus_release_cnt <= '0;
    end else if (monitor_enable &&!monitor_enable_q) begin
      if (multi_controller_enable_i) begin
        bus_release_cnt <= 30'(bus_inactive_timeout_i);
      end
    end else if (bus_release_cnt_load) begin
      bus_release_cnt <= bus_release_cnt_sel;
    end else if (bus_release_cnt_dec && (bus_release_cnt!= '0)) begin
      bus_release_cnt <= bus_release_cnt - 1'b1;
    end
  end
endmodule
)";

TEST(CpcTest, OracleCoversEveryPath) {
  RtlModule m = parse_one(kResetClearChain);
  CpcReport r = cpc(m, oracle_properties(m));
  EXPECT_EQ(r.total, 3);
  EXPECT_EQ(r.covered, 3);
  EXPECT_DOUBLE_EQ(r.pct, 100.0);
  EXPECT_FALSE(r.no_paths);
}

TEST(CpcTest, DroppedPropertyDropsCoverage) {
  RtlModule m = parse_one(R"(module m (
  input logic clk_i,
  input logic a,
  output logic q
);
  always_ff @(posedge clk_i) begin
    if (a) begin
      q <= 1'b1;
    end else begin
      q <= 1'b0;
    end
  end
endmodule
)");
  std::vector<Property> props = oracle_properties(m);
  ASSERT_EQ(props.size(), 2u);
  EXPECT_DOUBLE_EQ(cpc(m, props).pct, 100.0);
  props.pop_back();
  CpcReport r = cpc(m, props);
  EXPECT_EQ(r.total, 2);
  EXPECT_EQ(r.covered, 1);
  EXPECT_DOUBLE_EQ(r.pct, 50.0);
}

TEST(CpcTest, NestedChainHasFourPaths) {
  RtlModule m = parse_one(kNestedReleaseCounter);
  CpcReport r = cpc(m, oracle_properties(m));
  EXPECT_EQ(r.total, 4);
  EXPECT_DOUBLE_EQ(r.pct, 100.0);
}

TEST(CpcTest, NoPropertiesScoresZero) {
  RtlModule m = parse_one(kResetClearChain);
  CpcReport r = cpc(m, {});
  EXPECT_EQ(r.covered, 0);
  EXPECT_DOUBLE_EQ(r.pct, 0.0);
}

TEST(CpcTest, NoPathsReportsFullCoverage) {
  RtlModule m = parse_one(R"(module empty (
  input logic clk_i,
  input logic d,
  output logic q
);
endmodule
)");
  CpcReport r = cpc(m, {});
  EXPECT_EQ(r.total, 0);
  EXPECT_TRUE(r.no_paths);
  EXPECT_DOUBLE_EQ(r.pct, 100.0);
}

// ---------------------------------------------------------------------------
// end-to-end grading

TEST(EvaluateAssertionsTest, DeclaredUnitsAreTheDenominator) {
  RtlModule m = parse_one(kResetClearChain);
  FunctionalOptions opts = fast_options();
  EvalReport r = evaluate_assertions(m, kTimerAssertions, opts);
  EXPECT_EQ(r.generated, 2);
  EXPECT_DOUBLE_EQ(r.syntactically_correct_pct, 50.0);
  EXPECT_DOUBLE_EQ(r.functionally_correct_pct, 0.0);
  EXPECT_DOUBLE_EQ(r.cpc_pct, 0.0);
}

TEST(EvaluateAssertionsTest, OracleTextScoresEverythingFull) {
  RtlModule m = parse_one(kResetClearChain);
  std::vector<PathAssertion> paths = synthesize(m.always_blocks[0]);
  std::string text = print_assertion_file(paths);
  FunctionalOptions opts = fast_options();
  EvalReport r = evaluate_assertions(m, text, opts);
  EXPECT_EQ(r.generated, 3);
  EXPECT_DOUBLE_EQ(r.syntactically_correct_pct, 100.0);
  EXPECT_DOUBLE_EQ(r.functionally_correct_pct, 100.0);
  EXPECT_DOUBLE_EQ(r.cpc_pct, 100.0);
}

}  // namespace
}  // namespace svaforge
