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

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "svaforge/svaforge.hpp"

namespace {

using nlohmann::ordered_json;

void emit_json(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

// Parses an RTL file and returns the requested module (or the only one).
svaforge::RtlModule load_module(const std::string& path,
                                const std::string& module_name) {
  std::string src = svaforge::read_text_file(path);
  svaforge::ParsedFile parsed = svaforge::parse_file(src);
  for (const auto& d : parsed.diagnostics) {
    std::cerr << path << ": " << svaforge::format_diagnostic(d) << "\n";
  }
  if (parsed.modules.empty()) {
    throw svaforge::Error("NoModule", path + " contains no parseable module");
  }
  if (module_name.empty()) return parsed.modules.front();
  for (auto& m : parsed.modules) {
    if (m.name == module_name) return m;
  }
  throw svaforge::Error("NoModule", path + " has no module " + module_name);
}

std::string read_corpus(const std::string& path) {
  if (std::filesystem::is_directory(path)) {
    return svaforge::corpus_from_dir(path);
  }
  return svaforge::read_file_raw(path);
}

std::set<svaforge::MutOp> parse_ops(const std::string& list) {
  if (list.empty()) return svaforge::all_mut_ops();
  std::set<svaforge::MutOp> ops;
  size_t pos = 0;
  while (pos <= list.size()) {
    size_t comma = list.find(',', pos);
    std::string name = svaforge::trim(
        list.substr(pos, comma == std::string::npos ? std::string::npos
                                                    : comma - pos));
    if (!name.empty()) {
      auto op = svaforge::mut_op_from_name(name);
      if (!op) {
        throw svaforge::Error("BadOperator", "unknown mutation operator: " + name);
      }
      ops.insert(*op);
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (ops.empty()) throw svaforge::Error("BadOperator", "empty operator list");
  return ops;
}

ordered_json syntax_report_json(const svaforge::SyntaxReport& report) {
  ordered_json diags = ordered_json::array();
  for (const auto& d : report.diagnostics) {
    diags.push_back(ordered_json{{"severity", d.is_error ? "error" : "warning"},
                                 {"code", d.code},
                                 {"offset", d.offset},
                                 {"message", d.message}});
  }
  return ordered_json{{"declared", report.declared},
                      {"accepted", report.accepted},
                      {"syntactically_correct_pct", report.pct},
                      {"empty_input", report.empty_input},
                      {"diagnostics", diags}};
}

ordered_json eval_report_json(const svaforge::EvalReport& report) {
  ordered_json verdicts = ordered_json::array();
  for (const auto& v : report.verdicts) {
    verdicts.push_back(ordered_json{
        {"name", v.name},
        {"functional", v.functional},
        {"holds_non_vacuous", v.holds_non_vacuous},
        {"antecedent_equivalent", v.antecedent_equivalent},
        {"kills_mutant", v.kills_mutant},
        {"atom_budget_exceeded", v.atom_budget_exceeded},
        {"matched_path", v.matched_path},
        {"triggered", v.triggered},
        {"reason", v.reason}});
  }
  return ordered_json{
      {"generated", report.generated},
      {"syntactically_correct_pct", report.syntactically_correct_pct},
      {"functionally_correct_pct", report.functionally_correct_pct},
      {"cpc_pct", report.cpc_pct},
      {"no_paths", report.no_paths},
      {"verdicts", verdicts}};
}

int cmd_mine_vars(const std::vector<std::string>& paths, bool keep_duplicates,
                  bool keep_invalid, bool keep_inconsistent,
                  const std::string& out) {
  svaforge::MineResult mined = svaforge::mine(paths);
  for (const auto& err : mined.errors) std::cerr << "skipped " << err << "\n";
  auto [pool, summary] = svaforge::clean_selective(
      mined.pool, !keep_invalid, !keep_duplicates, !keep_inconsistent);
  svaforge::save_pool(pool, out);
  std::cerr << "mined " << mined.pool.size() << " names from " << paths.size()
            << " files; kept " << pool.size() << " (dropped "
            << summary.invalid_dropped << " invalid, "
            << summary.duplicates_dropped << " duplicate, "
            << summary.inconsistent_dropped << " inconsistent)\n";
  return 0;
}

int cmd_gen(int count, uint64_t seed, const std::string& ratios,
            double sync_ratio, const std::string& vars_file,
            int synthetic_vars, const std::string& out, bool json) {
  svaforge::GenConfig config;
  config.sample_count = count;
  config.master_seed = seed;
  config.sync_fraction = sync_ratio;
  if (!ratios.empty()) {
    double r[3];
    if (std::sscanf(ratios.c_str(), "%lf,%lf,%lf", &r[0], &r[1], &r[2]) != 3) {
      throw svaforge::Error("BadRatios", "--ratios expects a,b,c");
    }
    config.ratio_if_else = r[0];
    config.ratio_case_stmt = r[1];
    config.ratio_combined = r[2];
  }
  if (!vars_file.empty()) {
    config.pool = svaforge::clean(svaforge::load_pool(vars_file)).first;
  } else {
    config.pool = svaforge::synthesize_pool(synthetic_vars,
                                            svaforge::derive_seed(seed, 0));
  }

  std::vector<svaforge::DatasetSample> samples = svaforge::assemble(config);
  svaforge::write_file(out, svaforge::dataset_to_jsonl(samples));

  svaforge::CategoryCounts counts = svaforge::category_counts(config);
  int sync_total = 0;
  for (const auto& s : samples) sync_total += s.sync ? 1 : 0;
  ordered_json summary{{"samples", static_cast<int>(samples.size())},
                       {"if_else", counts.if_else},
                       {"case_stmt", counts.case_stmt},
                       {"combined", counts.combined},
                       {"sync", sync_total},
                       {"async", static_cast<int>(samples.size()) - sync_total},
                       {"out", out}};
  if (json) {
    emit_json(summary);
  } else {
    std::cerr << "wrote " << samples.size() << " samples to " << out << " ("
              << counts.if_else << " if_else, " << counts.case_stmt
              << " case_stmt, " << counts.combined << " combined; "
              << sync_total << " sync)\n";
  }
  return 0;
}

int cmd_synth(const std::string& file, const std::string& module_name,
              const std::string& out, bool stability, uint64_t name_seed) {
  svaforge::RtlModule m = load_module(file, module_name);
  svaforge::SynthOptions opts;
  opts.name_seed = name_seed;
  std::vector<svaforge::Property> props;
  for (const auto& block : m.always_blocks) {
    for (const auto& pa : svaforge::synthesize(block, opts)) {
      props.push_back(pa.property);
    }
    if (stability) {
      for (auto& p : svaforge::stability_properties(block, opts)) {
        props.push_back(std::move(p));
      }
    }
  }
  svaforge::write_file(out, svaforge::print_assertion_file(props));
  std::cerr << "wrote " << props.size() << " properties to " << out << "\n";
  return 0;
}

int cmd_check(const std::string& file, bool json) {
  svaforge::SyntaxReport report =
      svaforge::check_syntax(svaforge::read_text_file(file));
  if (json) {
    emit_json(syntax_report_json(report));
  } else {
    for (const auto& d : report.diagnostics) {
      std::cerr << file << ": " << svaforge::format_diagnostic(d) << "\n";
    }
    std::cout << "declared " << report.declared << ", accepted "
              << report.accepted << ", syntactically correct " << report.pct
              << "%\n";
  }
  return 0;
}

int cmd_eval(const std::string& rtl_file, const std::string& sva_file,
             const std::string& module_name, int cycles, uint64_t seed,
             const std::string& ops, bool json) {
  svaforge::RtlModule m = load_module(rtl_file, module_name);
  svaforge::FunctionalOptions opts;
  opts.plan.cycles = cycles;
  opts.plan.seed = seed;
  opts.ops = parse_ops(ops);
  svaforge::EvalReport report = svaforge::evaluate_assertions(
      m, svaforge::read_text_file(sva_file), opts);
  if (json) {
    emit_json(eval_report_json(report));
  } else {
    std::cout << "generated " << report.generated << ", syntactic "
              << report.syntactically_correct_pct << "%, functional "
              << report.functionally_correct_pct << "%, cpc "
              << report.cpc_pct << "%\n";
    for (const auto& v : report.verdicts) {
      std::cout << "  " << v.name << ": "
                << (v.functional ? "functional" : v.reason) << "\n";
    }
  }
  return 0;
}

int cmd_coverage(const std::string& rtl_file, const std::string& sva_file,
                 const std::string& module_name, bool json) {
  svaforge::RtlModule m = load_module(rtl_file, module_name);
  svaforge::SyntaxReport syn =
      svaforge::check_syntax(svaforge::read_text_file(sva_file));
  svaforge::CpcReport report = svaforge::cpc(m, syn.properties);
  if (json) {
    emit_json(ordered_json{{"total_paths", report.total},
                           {"covered_paths", report.covered},
                           {"cpc_pct", report.pct},
                           {"no_paths", report.no_paths}});
  } else {
    std::cout << "paths " << report.total << ", covered " << report.covered
              << ", cpc " << report.pct << "%\n";
  }
  return 0;
}

int cmd_leakage(const std::string& a, const std::string& b, int n, bool json) {
  svaforge::OverlapReport report =
      svaforge::overlap(read_corpus(a), read_corpus(b), n);
  if (json) {
    emit_json(ordered_json{{"score", report.score},
                           {"n1", report.n1},
                           {"n2", report.n2},
                           {"intersection", report.intersection},
                           {"union", report.union_size},
                           {"degenerate", report.degenerate}});
  } else {
    std::cout << "overlap " << report.score << " (|N1| " << report.n1
              << ", |N2| " << report.n2 << ", intersection "
              << report.intersection << ")\n";
  }
  return 0;
}

int cmd_contaminate(const std::string& file, int ifdefs, int instances,
                    uint64_t seed, const std::string& out) {
  std::string text = svaforge::read_text_file(file);
  svaforge::write_file(out,
                       svaforge::contaminate(text, ifdefs, instances, seed));
  std::cerr << "wrote contaminated file to " << out << " (" << ifdefs
            << " ifdef blocks, " << instances << " instances)\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"svaforge: synthetic RTL assertion corpus generator and checker"};
  app.require_subcommand(1);
  app.set_config("--config");

  // mine-vars
  auto* mine = app.add_subcommand("mine-vars", "Mine identifier names from RTL files");
  std::vector<std::string> mine_paths;
  bool keep_duplicates = false, keep_invalid = false, keep_inconsistent = false;
  std::string mine_out;
  mine->add_option("paths", mine_paths, "RTL source files")->required();
  mine->add_flag("--keep-duplicates", keep_duplicates, "Skip duplicate removal");
  mine->add_flag("--keep-invalid", keep_invalid, "Skip invalid-name removal");
  mine->add_flag("--keep-inconsistent", keep_inconsistent,
                 "Skip case-inconsistency removal");
  mine->add_option("--out", mine_out, "Pool file to write")->required();

  // gen
  auto* gen = app.add_subcommand("gen", "Generate the prompt/response dataset");
  int gen_count = 20000;
  uint64_t gen_seed = 0;
  std::string gen_ratios, gen_vars, gen_out;
  double gen_sync_ratio = 0.5;
  int gen_synth_vars = 64;
  bool gen_json = false;
  gen->add_option("--count", gen_count, "Number of samples");
  gen->add_option("--seed", gen_seed, "Master seed")->required();
  gen->add_option("--ratios", gen_ratios, "if_else,case_stmt,combined ratios");
  gen->add_option("--sync-ratio", gen_sync_ratio, "Synchronous fraction");
  gen->add_option("--vars", gen_vars, "Identifier pool file");
  gen->add_option("--synthetic-vars", gen_synth_vars,
                  "Size of the synthetic identifier pool");
  gen->add_option("--out", gen_out, "JSONL output path")->required();
  gen->add_flag("--json", gen_json, "Print the summary as JSON on stdout");

  // synth
  auto* synth = app.add_subcommand("synth", "Synthesize assertions from RTL");
  std::string synth_file, synth_module, synth_out;
  bool synth_stability = false;
  uint64_t synth_name_seed = 0;
  synth->add_option("file", synth_file, "RTL source file")->required();
  synth->add_option("--module", synth_module, "Module name (default: first)");
  synth->add_option("--out", synth_out, "Assertion file to write")->required();
  synth->add_flag("--stability", synth_stability,
                  "Also emit stability properties for unassigned paths");
  synth->add_option("--name-seed", synth_name_seed, "Property name seed");

  // check
  auto* check = app.add_subcommand("check", "Syntax-check an assertion file");
  std::string check_file;
  bool check_json = false;
  check->add_option("file", check_file, "Assertion file")->required();
  check->add_flag("--json", check_json, "JSON report on stdout");

  // eval
  auto* eval = app.add_subcommand("eval", "Evaluate assertions against a design");
  std::string eval_rtl, eval_sva, eval_module, eval_ops;
  int eval_cycles = 1000;
  uint64_t eval_seed = 0;
  bool eval_json = false;
  eval->add_option("rtl", eval_rtl, "RTL source file")->required();
  eval->add_option("sva", eval_sva, "Assertion file")->required();
  eval->add_option("--module", eval_module, "Module name (default: first)");
  eval->add_option("--cycles", eval_cycles, "Stimulus length");
  eval->add_option("--seed", eval_seed, "Stimulus seed")->required();
  eval->add_option("--ops", eval_ops, "Comma-separated mutation operators");
  eval->add_flag("--json", eval_json, "JSON report on stdout");

  // coverage
  auto* coverage = app.add_subcommand("coverage", "Complete Path Coverage report");
  std::string cov_rtl, cov_sva, cov_module;
  bool cov_json = false;
  coverage->add_option("rtl", cov_rtl, "RTL source file")->required();
  coverage->add_option("sva", cov_sva, "Assertion file")->required();
  coverage->add_option("--module", cov_module, "Module name (default: first)");
  coverage->add_flag("--json", cov_json, "JSON report on stdout");

  // leakage
  auto* leakage = app.add_subcommand("leakage", "13-gram corpus overlap");
  std::string leak_a, leak_b;
  int leak_n = 13;
  bool leak_json = false;
  leakage->add_option("corpus_a", leak_a, "File or directory")->required();
  leakage->add_option("corpus_b", leak_b, "File or directory")->required();
  leakage->add_option("--n", leak_n, "Gram size in bytes");
  leakage->add_flag("--json", leak_json, "JSON report on stdout");

  // contaminate
  auto* contam = app.add_subcommand("contaminate",
                                    "Inject ifdef blocks and dummy instances");
  std::string contam_file, contam_out;
  int contam_ifdefs = 10, contam_instances = 10;
  uint64_t contam_seed = 0;
  contam->add_option("file", contam_file, "RTL source file")->required();
  contam->add_option("--ifdefs", contam_ifdefs, "Number of ifdef blocks");
  contam->add_option("--instances", contam_instances, "Number of dummy instances");
  contam->add_option("--seed", contam_seed, "Insertion seed")->required();
  contam->add_option("--out", contam_out, "Output path")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (mine->parsed()) {
      return cmd_mine_vars(mine_paths, keep_duplicates, keep_invalid,
                           keep_inconsistent, mine_out);
    }
    if (gen->parsed()) {
      return cmd_gen(gen_count, gen_seed, gen_ratios, gen_sync_ratio, gen_vars,
                     gen_synth_vars, gen_out, gen_json);
    }
    if (synth->parsed()) {
      return cmd_synth(synth_file, synth_module, synth_out, synth_stability,
                       synth_name_seed);
    }
    if (check->parsed()) return cmd_check(check_file, check_json);
    if (eval->parsed()) {
      return cmd_eval(eval_rtl, eval_sva, eval_module, eval_cycles, eval_seed,
                      eval_ops, eval_json);
    }
    if (coverage->parsed()) {
      return cmd_coverage(cov_rtl, cov_sva, cov_module, cov_json);
    }
    if (leakage->parsed()) return cmd_leakage(leak_a, leak_b, leak_n, leak_json);
    if (contam->parsed()) {
      return cmd_contaminate(contam_file, contam_ifdefs, contam_instances,
                             contam_seed, contam_out);
    }
  } catch (const svaforge::Error& e) {
    std::cerr << "error [" << e.code() << "]: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
