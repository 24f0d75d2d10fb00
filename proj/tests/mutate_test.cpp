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

// Mutation operator tests: site enumeration, the canonical single-guard
// fixture, operator-specific skip rules, and mutant well-formedness.

#include <map>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "svaforge/mutate.hpp"
#include "svaforge/parse.hpp"
#include "svaforge/print.hpp"

namespace svaforge {
namespace {

RtlModule parse_one(const std::string& src) {
  ParsedFile f = parse_file(src);
  EXPECT_EQ(f.modules.size(), 1u) << src;
  return f.modules[0];
}

std::map<std::string, int> op_histogram(const std::vector<Mutant>& muts) {
  std::map<std::string, int> h;
  for (const auto& m : muts) ++h[mut_op_name(m.op)];
  return h;
}

constexpr const char* kSingleGuard = R"(module m (
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
)";

TEST(MutateTest, SingleGuardYieldsExactlySixMutants) {
  std::vector<Mutant> muts = mutate(parse_one(kSingleGuard));
  std::map<std::string, int> h = op_histogram(muts);
  EXPECT_EQ(muts.size(), 6u);
  EXPECT_EQ(h["NegateCond"], 1);
  EXPECT_EQ(h["RelOpSwap"], 0);
  EXPECT_EQ(h["LogicOpSwap"], 0);
  EXPECT_EQ(h["ConstPerturb"], 2);
  EXPECT_EQ(h["BranchAssignSwap"], 1);
  EXPECT_EQ(h["StuckTrue"], 1);
  EXPECT_EQ(h["StuckFalse"], 1);
}

TEST(MutateTest, DeterministicOrderBySiteThenOp) {
  std::vector<Mutant> a = mutate(parse_one(kSingleGuard));
  std::vector<Mutant> b = mutate(parse_one(kSingleGuard));
  ASSERT_EQ(a.size(), b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].op, b[i].op);
    EXPECT_EQ(a[i].site.begin, b[i].site.begin);
    EXPECT_EQ(a[i].description, b[i].description);
  }
  for (size_t i = 1; i < a.size(); ++i) {
    bool ordered =
        a[i - 1].site.begin < a[i].site.begin ||
        (a[i - 1].site.begin == a[i].site.begin &&
         std::string(mut_op_name(a[i - 1].op)) <= mut_op_name(a[i].op));
    EXPECT_TRUE(ordered) << i;
  }
}

TEST(MutateTest, NegateCondWrapsGuard) {
  std::vector<Mutant> muts =
      mutate(parse_one(kSingleGuard), {MutOp::NegateCond});
  ASSERT_EQ(muts.size(), 1u);
  const auto& arm = muts[0].module.always_blocks[0].body[0]->arms[0];
  EXPECT_EQ(pretty_print_expr(arm.cond), "!a");
}

TEST(MutateTest, StuckReplacesGuardWithConstant) {
  std::vector<Mutant> t = mutate(parse_one(kSingleGuard), {MutOp::StuckTrue});
  std::vector<Mutant> f = mutate(parse_one(kSingleGuard), {MutOp::StuckFalse});
  ASSERT_EQ(t.size(), 1u);
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(pretty_print_expr(t[0].module.always_blocks[0].body[0]->arms[0].cond),
            "1'b1");
  EXPECT_EQ(pretty_print_expr(f[0].module.always_blocks[0].body[0]->arms[0].cond),
            "1'b0");
}

TEST(MutateTest, ConstPerturbFlipsLowestBit) {
  RtlModule m = parse_one(R"(module m (
  input logic en,
  output logic [3:0] q
);
  always_comb begin
    if (en) begin
      q = 4'ha;
    end else begin
      q = 4'h0;
    end
  end
endmodule
)");
  std::vector<Mutant> muts = mutate(m, {MutOp::ConstPerturb});
  ASSERT_EQ(muts.size(), 2u);
  EXPECT_EQ(pretty_print_expr(
                muts[0].module.always_blocks[0].body[0]->arms[0].body[0]->rhs),
            "4'hb");
}

TEST(MutateTest, ConstPerturbOnFillLiterals) {
  RtlModule m = parse_one(R"(module m (
  input logic en,
  output logic [3:0] q
);
  always_comb begin
    if (en) begin
      q = '0;
    end else begin
      q = '1;
    end
  end
endmodule
)");
  std::vector<Mutant> muts = mutate(m, {MutOp::ConstPerturb});
  ASSERT_EQ(muts.size(), 2u);
  EXPECT_EQ(pretty_print_expr(
                muts[0].module.always_blocks[0].body[0]->arms[0].body[0]->rhs),
            "1'b1");
  EXPECT_EQ(pretty_print_expr(
                muts[1].module.always_blocks[0].body[0]->else_body->at(0)->rhs),
            "1'b0");
}

TEST(MutateTest, ConstPerturbSkipsCaseLabelCollisions) {
  // Perturbing label 2'b00 would collide with sibling label 2'b01: skipped.
  // Perturbing 2'b11 lands on 2'b10, which no other label uses: kept.
  RtlModule m = parse_one(R"(module m (
  input logic [1:0] sel,
  output logic q
);
  always_comb begin
    case (sel)
      2'b00: q = 1'b0;
      2'b01: q = 1'b1;
      2'b11: q = 1'b1;
    endcase
  end
endmodule
)");
  std::vector<Mutant> muts = mutate(m, {MutOp::ConstPerturb});
  // Six literal sites: labels 2'b00 and 2'b01 flip onto each other and are
  // skipped, label 2'b11 flips to the unused 2'b10, and the three assignment
  // literals are always legal.
  EXPECT_EQ(muts.size(), 4u);
  int label_mutants = 0;
  for (const auto& mut : muts) {
    const auto& stmt = mut.module.always_blocks[0].body[0];
    for (const auto& arm : stmt->case_arms) {
      for (const auto& l : arm.labels) {
        if (pretty_print_expr(l) == "2'b10") ++label_mutants;
      }
    }
  }
  EXPECT_EQ(label_mutants, 1);
}

TEST(MutateTest, RelOpSwapCoversComparisonFamily) {
  RtlModule m = parse_one(R"(module m (
  input logic [3:0] a,
  input logic [3:0] b,
  output logic q
);
  always_comb begin
    if (a == b) begin
      q = 1'b1;
    end else if (a < b) begin
      q = 1'b0;
    end else begin
      q = 1'b1;
    end
  end
endmodule
)");
  std::vector<Mutant> muts = mutate(m, {MutOp::RelOpSwap});
  ASSERT_EQ(muts.size(), 2u);
  EXPECT_EQ(pretty_print_expr(
                muts[0].module.always_blocks[0].body[0]->arms[0].cond),
            "a != b");
  EXPECT_EQ(pretty_print_expr(
                muts[1].module.always_blocks[0].body[0]->arms[1].cond),
            "a >= b");
}

TEST(MutateTest, LogicOpSwapFlipsConnectives) {
  RtlModule m = parse_one(R"(module m (
  input logic a,
  input logic b,
  output logic q
);
  always_comb begin
    if (a && b) begin
      q = 1'b1;
    end else begin
      q = 1'b0;
    end
  end
endmodule
)");
  std::vector<Mutant> muts = mutate(m, {MutOp::LogicOpSwap});
  ASSERT_EQ(muts.size(), 1u);
  EXPECT_EQ(pretty_print_expr(
                muts[0].module.always_blocks[0].body[0]->arms[0].cond),
            "a || b");
}

TEST(MutateTest, BranchAssignSwapSkipsEqualRhs) {
  RtlModule m = parse_one(R"(module m (
  input logic en,
  output logic [3:0] q
);
  always_comb begin
    if (en) begin
      q = 4'h3;
    end else begin
      q = 4'h3;
    end
  end
endmodule
)");
  EXPECT_TRUE(mutate(m, {MutOp::BranchAssignSwap}).empty());
}

TEST(MutateTest, BranchAssignSwapExchangesRhs) {
  std::vector<Mutant> muts =
      mutate(parse_one(kSingleGuard), {MutOp::BranchAssignSwap});
  ASSERT_EQ(muts.size(), 1u);
  const auto& stmt = muts[0].module.always_blocks[0].body[0];
  EXPECT_EQ(pretty_print_expr(stmt->arms[0].body[0]->rhs), "1'b0");
  EXPECT_EQ(pretty_print_expr(stmt->else_body->at(0)->rhs), "1'b1");
}

TEST(MutateTest, SitesCarryValidSpans) {
  for (const auto& mut : mutate(parse_one(kSingleGuard))) {
    EXPECT_TRUE(mut.site.valid()) << mut.description;
    EXPECT_LT(mut.site.begin, mut.site.end) << mut.description;
  }
}

TEST(MutateTest, MutantsPrintAndReparse) {
  std::vector<Mutant> muts = mutate(parse_one(kSingleGuard));
  for (const auto& mut : muts) {
    std::string text = pretty_print_module(mut.module);
    ParsedFile f = parse_file(text);
    ASSERT_EQ(f.modules.size(), 1u) << text;
    EXPECT_EQ(pretty_print_module(f.modules[0]), text);
  }
}

TEST(MutateTest, OriginalModuleUntouched) {
  RtlModule m = parse_one(kSingleGuard);
  std::string before = pretty_print_module(m);
  mutate(m);
  EXPECT_EQ(pretty_print_module(m), before);
}

TEST(MutOpNameTest, RoundTrip) {
  for (MutOp op : all_mut_ops()) {
    auto back = mut_op_from_name(mut_op_name(op));
    ASSERT_TRUE(back.has_value());
    EXPECT_EQ(*back, op);
  }
  EXPECT_FALSE(mut_op_from_name("NoSuchOp").has_value());
}

}  // namespace
}  // namespace svaforge
