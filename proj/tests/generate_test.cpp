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

// Dataset generator tests: apportionment, config validation, block
// construction, ground-truth agreement with the assertion synthesizer, and
// the JSONL serialization contract.

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gtest/gtest.h"
#include "json.hpp"
#include "svaforge/equiv.hpp"
#include "svaforge/evaluate.hpp"
#include "svaforge/generate.hpp"
#include "svaforge/parse.hpp"
#include "svaforge/pool.hpp"
#include "svaforge/print.hpp"
#include "svaforge/synth.hpp"

namespace svaforge {
namespace {

GenConfig small_config(int count, uint64_t master_seed) {
  GenConfig config;
  config.sample_count = count;
  config.master_seed = master_seed;
  config.pool = synthesize_pool(64, derive_seed(master_seed, 0));
  return config;
}

// ---------------------------------------------------------------------------
// apportionment

TEST(CategoryCountsTest, DefaultRatiosAtTwentyThousand) {
  GenConfig config;
  config.sample_count = 20000;
  CategoryCounts c = category_counts(config);
  EXPECT_EQ(c.if_else, 10400);
  EXPECT_EQ(c.case_stmt, 5600);
  EXPECT_EQ(c.combined, 4000);
}

TEST(CategoryCountsTest, LargestRemainderBreaksFractions) {
  GenConfig config;
  config.sample_count = 10;
  CategoryCounts c = category_counts(config);
  EXPECT_EQ(c.if_else, 5);
  EXPECT_EQ(c.case_stmt, 3);
  EXPECT_EQ(c.combined, 2);
}

TEST(CategoryCountsTest, CountsAlwaysSumToTotal) {
  for (int n = 0; n <= 50; ++n) {
    GenConfig config;
    config.sample_count = n;
    CategoryCounts c = category_counts(config);
    EXPECT_EQ(c.if_else + c.case_stmt + c.combined, n) << n;
    EXPECT_GE(c.if_else, 0);
    EXPECT_GE(c.case_stmt, 0);
    EXPECT_GE(c.combined, 0);
  }
}

TEST(SyncShareTest, OddSampleGoesSynchronous) {
  EXPECT_EQ(sync_share(10, 0.5), 5);
  EXPECT_EQ(sync_share(11, 0.5), 6);
  EXPECT_EQ(sync_share(10, 0.0), 0);
  EXPECT_EQ(sync_share(10, 1.0), 10);
  EXPECT_EQ(sync_share(0, 0.5), 0);
}

// ---------------------------------------------------------------------------
// config validation

TEST(ValidateTest, DefaultsAreValid) {
  GenConfig config;
  EXPECT_NO_THROW(validate(config));
}

TEST(ValidateTest, RejectsBadInputs) {
  auto expect_code = [](GenConfig config, const char* code) {
    try {
      validate(config);
      FAIL() << "expected " << code;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), std::string(code));
    }
  };
  GenConfig bad_ratios;
  bad_ratios.ratio_if_else = 0.5;
  bad_ratios.ratio_case_stmt = 0.3;
  bad_ratios.ratio_combined = 0.3;
  expect_code(bad_ratios, "BadRatios");

  GenConfig bad_count;
  bad_count.sample_count = -1;
  expect_code(bad_count, "BadSampleCount");

  GenConfig bad_sync;
  bad_sync.sync_fraction = 1.5;
  expect_code(bad_sync, "BadSyncFraction");

  GenConfig bad_nesting;
  bad_nesting.max_nesting = 2;
  expect_code(bad_nesting, "BadNesting");
}

// ---------------------------------------------------------------------------
// condition generation

TEST(GenConditionTest, DeterministicAndBounded) {
  IdentifierPool pool = synthesize_pool(32, 5);
  ExprPtr a = gen_condition(pool, 4, 77);
  ExprPtr b = gen_condition(pool, 4, 77);
  EXPECT_TRUE(structural_equal(a, b));
  std::set<std::string> keys = atom_keys(a);
  EXPECT_GE(keys.size(), 1u);
  EXPECT_LE(keys.size(), 4u);
}

TEST(GenConditionTest, RejectsDegenerateInputs) {
  IdentifierPool pool = synthesize_pool(8, 5);
  try {
    gen_condition(IdentifierPool{}, 2, 0);
    FAIL() << "expected EmptyPool";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), std::string("EmptyPool"));
  }
  try {
    gen_condition(pool, 0, 0);
    FAIL() << "expected BadAtomCount";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), std::string("BadAtomCount"));
  }
}

// ---------------------------------------------------------------------------
// block generation

TEST(GenBlockTest, DeterministicPerSeed) {
  IdentifierPool pool = synthesize_pool(64, 3);
  auto [m1, t1] = gen_block(Category::IfElse, true, pool, 11);
  auto [m2, t2] = gen_block(Category::IfElse, true, pool, 11);
  EXPECT_EQ(pretty_print_module(m1), pretty_print_module(m2));
  EXPECT_EQ(t1.branches.size(), t2.branches.size());
  auto [m3, t3] = gen_block(Category::IfElse, true, pool, 12);
  EXPECT_NE(pretty_print_module(m1), pretty_print_module(m3));
}

TEST(GenBlockTest, SmallPoolRejected) {
  try {
    gen_block(Category::IfElse, true, synthesize_pool(7, 3), 0);
    FAIL() << "expected PoolTooSmall";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), std::string("PoolTooSmall"));
  }
}

TEST(GenBlockTest, ClockAndResetNamesAreReserved) {
  IdentifierPool pool;
  pool.entries.push_back({"clk_i", "mined:a.sv"});
  pool.entries.push_back({"rst_ni", "mined:a.sv"});
  for (int i = 0; i < 30; ++i) {
    pool.entries.push_back({"mined_sig_" + std::to_string(i), "mined:a.sv"});
  }
  for (uint64_t seed = 0; seed < 8; ++seed) {
    auto [m, trace] = gen_block(Category::IfElse, true, pool, seed);
    std::map<std::string, int> decl_counts;
    for (const auto& d : m.decls) ++decl_counts[d.name];
    for (const auto& [name, count] : decl_counts) {
      EXPECT_EQ(count, 1) << name << " declared twice at seed " << seed;
    }
  }

  IdentifierPool short_pool;
  short_pool.entries.push_back({"clk_i", "mined:a.sv"});
  for (const char* name : {"req_val", "ack_val", "dat_word", "sel_line",
                           "busy_flag", "done_flag", "cnt_word"}) {
    short_pool.entries.push_back({name, "mined:a.sv"});
  }
  EXPECT_THROW(gen_block(Category::IfElse, true, short_pool, 0), Error);
}

TEST(GenBlockTest, SyncBlocksAreClocked) {
  IdentifierPool pool = synthesize_pool(64, 3);
  auto [sync_m, sync_t] = gen_block(Category::CaseStmt, true, pool, 21);
  ASSERT_EQ(sync_m.always_blocks.size(), 1u);
  const AlwaysBlock& sync_block = sync_m.always_blocks[0];
  ASSERT_FALSE(sync_block.sensitivity.empty());
  EXPECT_EQ(sync_block.sensitivity[0].edge, EdgeKind::Posedge);
  EXPECT_EQ(sync_block.sensitivity[0].signal, "clk_i");

  auto [comb_m, comb_t] = gen_block(Category::CaseStmt, false, pool, 21);
  ASSERT_EQ(comb_m.always_blocks.size(), 1u);
  EXPECT_EQ(comb_m.always_blocks[0].kind, AlwaysKind::AlwaysComb);
  for (const auto& d : comb_m.decls) EXPECT_NE(d.name, "clk_i");
}

TEST(GenBlockTest, PrintedModuleReparsesCleanly) {
  IdentifierPool pool = synthesize_pool(64, 3);
  for (Category cat : {Category::IfElse, Category::CaseStmt, Category::Combined}) {
    for (bool sync : {false, true}) {
      for (uint64_t seed = 0; seed < 8; ++seed) {
        auto [m, trace] = gen_block(cat, sync, pool, seed);
        std::string text = pretty_print_module(m);
        ParsedFile f = parse_file(text);
        EXPECT_FALSE(f.has_errors()) << text;
        ASSERT_EQ(f.modules.size(), 1u);
        EXPECT_EQ(pretty_print_module(f.modules[0]), text);
      }
    }
  }
}

TEST(GenBlockTest, GroundTruthMatchesSynthesizer) {
  IdentifierPool pool = synthesize_pool(64, 3);
  for (Category cat : {Category::IfElse, Category::CaseStmt, Category::Combined}) {
    for (bool sync : {false, true}) {
      for (uint64_t seed = 100; seed < 112; ++seed) {
        auto [m, trace] = gen_block(cat, sync, pool, seed);
        ASSERT_EQ(m.always_blocks.size(), 1u);
        std::vector<PathAssertion> paths = synthesize(m.always_blocks[0]);
        ASSERT_EQ(paths.size(), trace.branches.size())
            << pretty_print_module(m);
        for (size_t i = 0; i < paths.size(); ++i) {
          EXPECT_TRUE(structural_equal(paths[i].path_condition,
                                       trace.branches[i].path_condition))
              << pretty_print_expr(paths[i].path_condition) << " vs "
              << pretty_print_expr(trace.branches[i].path_condition);
          EXPECT_EQ(paths[i].assignments.size(),
                    trace.branches[i].assignments.size());
        }
      }
    }
  }
}

TEST(GenBlockTest, EveryPathClearsProbabilityFloor) {
  IdentifierPool pool = synthesize_pool(64, 3);
  for (Category cat : {Category::IfElse, Category::CaseStmt, Category::Combined}) {
    for (uint64_t seed = 200; seed < 220; ++seed) {
      auto [m, trace] = gen_block(cat, true, pool, seed);
      for (const auto& branch : trace.branches) {
        EXPECT_GE(branch.probability, gen_detail::kPathProbFloor - 1e-12)
            << pretty_print_module(m);
      }
    }
  }
}

// ---------------------------------------------------------------------------
// dataset assembly

TEST(AssembleTest, LayoutIsContiguousSyncFirst) {
  GenConfig config = small_config(100, 42);
  std::vector<DatasetSample> samples = assemble(config);
  ASSERT_EQ(samples.size(), 100u);

  CategoryCounts counts = category_counts(config);
  EXPECT_EQ(counts.if_else, 52);
  EXPECT_EQ(counts.case_stmt, 28);
  EXPECT_EQ(counts.combined, 20);

  int offset = 0;
  for (const auto& [category, total] :
       std::vector<std::pair<Category, int>>{{Category::IfElse, counts.if_else},
                                             {Category::CaseStmt, counts.case_stmt},
                                             {Category::Combined, counts.combined}}) {
    int n_sync = sync_share(total, config.sync_fraction);
    for (int i = 0; i < total; ++i) {
      const DatasetSample& s = samples[offset + i];
      EXPECT_EQ(s.category, category) << offset + i;
      EXPECT_EQ(s.sync, i < n_sync) << offset + i;
    }
    offset += total;
  }
}

TEST(AssembleTest, SeedsDeriveFromDatasetIndex) {
  GenConfig config = small_config(20, 9);
  std::vector<DatasetSample> samples = assemble(config);
  for (size_t i = 0; i < samples.size(); ++i) {
    EXPECT_EQ(samples[i].seed, derive_seed(config.master_seed, static_cast<int>(i)));
  }
}

TEST(AssembleTest, SampleInvariantsHold) {
  GenConfig config = small_config(100, 42);
  std::vector<DatasetSample> samples = assemble(config);

  std::set<std::string> allowed{"clk_i", "rst_ni"};
  for (const auto& name : config.pool.names()) allowed.insert(name);

  int delayed = 0;
  for (const auto& s : samples) {
    const char* prefix = s.sync ? kSyncPromptPrefix : kAsyncPromptPrefix;
    EXPECT_EQ(s.prompt.rfind(prefix, 0), 0u);

    std::string code = s.prompt.substr(std::string(prefix).size());
    ParsedFile f = parse_file(code);
    EXPECT_FALSE(f.has_errors());
    ASSERT_EQ(f.modules.size(), 1u);

    SyntaxReport syn = check_syntax(s.response);
    EXPECT_EQ(syn.declared, s.n_assertions);
    EXPECT_EQ(syn.accepted, s.n_assertions);
    EXPECT_DOUBLE_EQ(syn.pct, 100.0);
    EXPECT_GE(s.n_assertions, 1);

    for (const auto& p : syn.properties) {
      std::set<std::string> idents;
      collect_idents(p.antecedent, idents);
      collect_idents(p.consequent, idents);
      for (const auto& name : idents) {
        EXPECT_TRUE(allowed.count(name)) << name << " in " << p.name;
      }
      if (p.name.rfind("SyncDelay", 0) == 0) {
        EXPECT_TRUE(s.sync);
        EXPECT_EQ(p.delay, 1);
        ++delayed;
      }
    }
  }
  EXPECT_GE(delayed, 1);
  EXPECT_LE(delayed, 15);
}

TEST(AssembleTest, DeterministicAcrossRuns) {
  GenConfig config = small_config(30, 123);
  std::string a = dataset_to_jsonl(assemble(config));
  std::string b = dataset_to_jsonl(assemble(config));
  EXPECT_EQ(a, b);
}

// ---------------------------------------------------------------------------
// serialization

TEST(DatasetJsonTest, FieldOrderIsStable) {
  DatasetSample s;
  s.prompt = "p";
  s.response = "r";
  s.category = Category::CaseStmt;
  s.sync = true;
  s.seed = 7;
  s.n_assertions = 2;
  std::string line = sample_to_json(s).dump();
  EXPECT_EQ(line,
            R"({"prompt":"p","response":"r","meta":{"category":"case_stmt",)"
            R"("sync":true,"seed":7,"n_assertions":2}})");
}

TEST(DatasetJsonTest, JsonlOneLinePerSample) {
  GenConfig config = small_config(5, 3);
  std::vector<DatasetSample> samples = assemble(config);
  std::string jsonl = dataset_to_jsonl(samples);
  ASSERT_FALSE(jsonl.empty());
  EXPECT_EQ(jsonl.back(), '\n');

  int lines = 0;
  size_t start = 0;
  while (start < jsonl.size()) {
    size_t end = jsonl.find('\n', start);
    ASSERT_NE(end, std::string::npos);
    std::string line = jsonl.substr(start, end - start);
    nlohmann::json parsed = nlohmann::json::parse(line);
    EXPECT_TRUE(parsed.contains("prompt"));
    EXPECT_TRUE(parsed.contains("response"));
    EXPECT_TRUE(parsed["meta"].contains("seed"));
    ++lines;
    start = end + 1;
  }
  EXPECT_EQ(lines, 5);
}

TEST(DatasetJsonTest, CategoryNamesRoundTrip) {
  for (Category c : {Category::IfElse, Category::CaseStmt, Category::Combined}) {
    EXPECT_EQ(category_from_name(category_name(c)), c);
  }
}

}  // namespace
}  // namespace svaforge
