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

// Identifier pool lifecycle: mining from RTL, cleaning, synthetic pools,
// corruption for robustness experiments, and file round-trips.

#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "svaforge/pool.hpp"
#include "svaforge/util.hpp"

namespace svaforge {
namespace {

IdentifierPool pool_of(const std::vector<std::string>& names) {
  IdentifierPool p;
  for (const auto& n : names) p.entries.push_back({n, "test"});
  return p;
}

TEST(CleanTest, DropsInvalidDuplicateAndInconsistent) {
  IdentifierPool dirty = pool_of({"reg_a", "reg-a!", "reg_a", "REG_A"});
  auto [cleaned, summary] = clean(dirty);
  EXPECT_EQ(cleaned.names(), std::vector<std::string>{"reg_a"});
  EXPECT_EQ(summary.invalid_dropped, 1);
  EXPECT_EQ(summary.duplicates_dropped, 1);
  EXPECT_EQ(summary.inconsistent_dropped, 1);
  EXPECT_TRUE(cleaned.validated);
  EXPECT_TRUE(cleaned.deduplicated);
  EXPECT_TRUE(cleaned.consistent);
}

TEST(CleanTest, FirstSpellingWins) {
  auto [cleaned, summary] = clean(pool_of({"CTRL_EN", "ctrl_en", "Ctrl_En"}));
  EXPECT_EQ(cleaned.names(), std::vector<std::string>{"CTRL_EN"});
  EXPECT_EQ(summary.inconsistent_dropped, 2);
}

TEST(CleanTest, KeywordsAreInvalid) {
  auto [cleaned, summary] = clean(pool_of({"module", "begin", "cnt_q"}));
  EXPECT_EQ(cleaned.names(), std::vector<std::string>{"cnt_q"});
  EXPECT_EQ(summary.invalid_dropped, 2);
}

TEST(CleanTest, Idempotent) {
  auto first = clean(pool_of({"a", "A", "a", "b!", "c"}));
  auto second = clean(first.first);
  EXPECT_EQ(second.first.names(), first.first.names());
  EXPECT_EQ(second.second.invalid_dropped, 0);
  EXPECT_EQ(second.second.duplicates_dropped, 0);
  EXPECT_EQ(second.second.inconsistent_dropped, 0);
}

TEST(CleanSelectiveTest, RulesRunIndependently) {
  IdentifierPool dirty = pool_of({"x_q", "x_q", "X_Q", "y-y"});

  auto [dup_only, s1] = clean_selective(dirty, false, true, false);
  EXPECT_EQ(dup_only.names(),
            (std::vector<std::string>{"x_q", "X_Q", "y-y"}));
  EXPECT_TRUE(dup_only.deduplicated);
  EXPECT_FALSE(dup_only.validated);
  EXPECT_FALSE(dup_only.consistent);

  auto [valid_only, s2] = clean_selective(dirty, true, false, false);
  EXPECT_EQ(valid_only.names(),
            (std::vector<std::string>{"x_q", "x_q", "X_Q"}));

  auto [consistent_only, s3] = clean_selective(dirty, false, false, true);
  // Exact repeats are duplicates, not case collisions; with dedup off they
  // stay.
  EXPECT_EQ(consistent_only.names(),
            (std::vector<std::string>{"x_q", "x_q", "y-y"}));
}

TEST(MineTest, CollectsDeclNamesInOrder) {
  std::string path = "/tmp/svaforge_mine_test.sv";
  write_file(path, R"(module m1 (
  input logic clk_i,
  output logic [3:0] data_q
);
  logic state_q;
endmodule

module m2 (
  input logic enable_i
);
endmodule
)");
  MineResult r = mine({path});
  EXPECT_TRUE(r.errors.empty());
  EXPECT_EQ(r.pool.names(),
            (std::vector<std::string>{"clk_i", "data_q", "state_q",
                                      "enable_i"}));
  for (const auto& e : r.pool.entries) {
    EXPECT_EQ(e.source, "mined:" + path);
  }
  std::remove(path.c_str());
}

TEST(MineTest, UnparseableFileRecordedAndSkipped) {
  std::string good = "/tmp/svaforge_mine_good.sv";
  std::string bad = "/tmp/svaforge_mine_bad.sv";
  write_file(good, "module ok (\n  input logic a_i\n);\nendmodule\n");
  write_file(bad, "this is not verilog at all\n");
  MineResult r = mine({good, bad});
  EXPECT_EQ(r.pool.names(), std::vector<std::string>{"a_i"});
  ASSERT_EQ(r.errors.size(), 1u);
  EXPECT_NE(r.errors[0].find(bad), std::string::npos);
  std::remove(good.c_str());
  std::remove(bad.c_str());
}

TEST(SynthesizePoolTest, DistinctValidNames) {
  IdentifierPool p = synthesize_pool(1000, 7);
  EXPECT_EQ(p.size(), 1000u);
  std::set<std::string> uniq;
  for (const auto& name : p.names()) {
    EXPECT_TRUE(is_valid_identifier(name)) << name;
    uniq.insert(name);
  }
  EXPECT_EQ(uniq.size(), 1000u);
  EXPECT_TRUE(p.validated);
  EXPECT_TRUE(p.deduplicated);
  EXPECT_TRUE(p.consistent);
}

TEST(SynthesizePoolTest, Deterministic) {
  EXPECT_EQ(synthesize_pool(64, 9).names(), synthesize_pool(64, 9).names());
  EXPECT_NE(synthesize_pool(64, 9).names(), synthesize_pool(64, 10).names());
}

TEST(CorruptTest, InvalidCharsRoundTrip) {
  IdentifierPool p = synthesize_pool(40, 3);
  IdentifierPool dirty = corrupt(p, CorruptMode::InvalidChars, 0.25, 11);
  EXPECT_EQ(dirty.size(), 50u);
  EXPECT_FALSE(dirty.validated);
  auto [cleaned, summary] = clean(dirty);
  EXPECT_EQ(cleaned.names(), p.names());
  EXPECT_EQ(summary.invalid_dropped, 10);
}

TEST(CorruptTest, DuplicatesRoundTrip) {
  IdentifierPool p = synthesize_pool(40, 3);
  IdentifierPool dirty = corrupt(p, CorruptMode::Duplicates, 0.25, 11);
  EXPECT_EQ(dirty.size(), 50u);
  EXPECT_FALSE(dirty.deduplicated);
  auto [cleaned, summary] = clean(dirty);
  EXPECT_EQ(cleaned.names(), p.names());
  EXPECT_EQ(summary.duplicates_dropped, 10);
}

TEST(CorruptTest, InconsistentRoundTrip) {
  IdentifierPool p = synthesize_pool(40, 3);
  IdentifierPool dirty = corrupt(p, CorruptMode::Inconsistent, 0.25, 11);
  EXPECT_EQ(dirty.size(), 50u);
  EXPECT_FALSE(dirty.consistent);
  auto [cleaned, summary] = clean(dirty);
  EXPECT_EQ(cleaned.names(), p.names());
  EXPECT_EQ(summary.inconsistent_dropped + summary.duplicates_dropped, 10);
}

TEST(CorruptTest, CountIsCeiled) {
  IdentifierPool p = synthesize_pool(10, 3);
  EXPECT_EQ(corrupt(p, CorruptMode::Duplicates, 0.01, 1).size(), 11u);
  EXPECT_EQ(corrupt(p, CorruptMode::Duplicates, 0.0, 1).size(), 10u);
}

TEST(CorruptTest, EmptyPoolThrows) {
  IdentifierPool empty;
  EXPECT_THROW(corrupt(empty, CorruptMode::Duplicates, 0.5, 1), Error);
}

TEST(PoolFileTest, SaveLoadRoundTrip) {
  IdentifierPool p;
  p.entries.push_back({"cnt_q", "mined:a.sv"});
  p.entries.push_back({"state_q", "mined:a.sv"});
  p.entries.push_back({"tx_en", "synthetic"});
  std::string path = "/tmp/svaforge_pool_test.txt";
  save_pool(p, path);
  IdentifierPool q = load_pool(path);
  ASSERT_EQ(q.size(), 3u);
  EXPECT_EQ(q.names(), p.names());
  EXPECT_EQ(q.entries[0].source, "mined:a.sv");
  EXPECT_EQ(q.entries[2].source, "synthetic");
  std::remove(path.c_str());
}

TEST(PoolFileTest, UntaggedNamesGetDefaultSource) {
  std::string path = "/tmp/svaforge_pool_untagged.txt";
  write_file(path, "alpha\nbeta\n");
  IdentifierPool p = load_pool(path);
  ASSERT_EQ(p.size(), 2u);
  EXPECT_EQ(p.entries[0].source, "mined:" + path);
  std::remove(path.c_str());
}

TEST(PoolFileTest, SourceHistogram) {
  IdentifierPool p;
  p.entries.push_back({"a", "x"});
  p.entries.push_back({"b", "x"});
  p.entries.push_back({"c", "y"});
  auto h = source_histogram(p);
  EXPECT_EQ(h["x"], 2);
  EXPECT_EQ(h["y"], 1);
}

}  // namespace
}  // namespace svaforge
