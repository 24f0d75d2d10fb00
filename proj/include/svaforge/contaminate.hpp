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
// Contamination injector: dilutes a module with k `ifdef-guarded duplicates
// of its own assignments plus k dummy instantiations. The guarded text is a
// copy, never the original statement, so preprocessing with an empty define
// set gives back a module whose derived assertions are unchanged; with the
// macros defined, the duplicates are last-write-identical no-ops.

#ifndef SVAFORGE_CONTAMINATE_HPP_
#define SVAFORGE_CONTAMINATE_HPP_

#include <algorithm>
#include <string>
#include <vector>

#include "svaforge/ast.hpp"
#include "svaforge/parse.hpp"
#include "svaforge/rng.hpp"
#include "svaforge/util.hpp"

namespace svaforge {

namespace detail {

inline void collect_assign_spans(const std::vector<StmtPtr>& stmts, std::vector<Span>& out) {
  for (const auto& s : stmts) {
    if (!s) continue;
    switch (s->kind) {
      case StmtKind::Assign:
        if (s->span.valid()) out.push_back(s->span);
        break;
      case StmtKind::If:
        for (const auto& arm : s->arms) collect_assign_spans(arm.body, out);
        if (s->else_body) collect_assign_spans(*s->else_body, out);
        break;
      case StmtKind::Case:
        for (const auto& arm : s->case_arms) collect_assign_spans(arm.body, out);
        if (s->default_body) collect_assign_spans(*s->default_body, out);
        break;
      case StmtKind::Block:
        collect_assign_spans(s->stmts, out);
        break;
    }
  }
}

}  // namespace detail

// Returns src with n_ifdefs `ifdef SYNTH_<i> blocks (each holding a copy of
// one of the module's own assignments) and n_instances dummy instantiations
// added. Deterministic per seed. Throws ParseFailure when src has no module.
inline std::string contaminate(const std::string& src, int n_ifdefs,
                               int n_instances, uint64_t seed) {
  std::string text = normalize_text(src);
  if (n_ifdefs <= 0 && n_instances <= 0) return text;
  // Work on the preprocessed body so statement spans line up with `text`.
  text = preprocess(text, {}).text;
  ParsedFile parsed = parse_file(text);
  if (parsed.modules.empty())
    throw Error("ParseFailure", "contamination input does not parse as a module");

  std::vector<Span> candidates;
  for (const auto& m : parsed.modules)
    for (const auto& b : m.always_blocks) detail::collect_assign_spans(b.body, candidates);
  if (candidates.empty() && n_ifdefs > 0)
    throw Error("ParseFailure", "module has no assignments to duplicate");

  size_t module_end = text.rfind("endmodule");
  if (module_end == std::string::npos)
    throw Error("ParseFailure", "no endmodule in contamination input");

  struct Insertion {
    size_t offset;
    std::string payload;
  };
  std::vector<Insertion> inserts;
  Rng rng(seed);
  for (int i = 0; i < n_ifdefs; ++i) {
    const Span& span = candidates[rng.below(candidates.size())];
    std::string stmt = text.substr(span.begin, span.end - span.begin);
    // Duplicate goes directly after its original, inside the same body, so
    // with the macro defined it re-runs the same write last and changes
    // nothing.
    std::string payload =
        "\n`ifdef SYNTH_" + std::to_string(i) + "\n" + stmt + "\n`endif\n";
    inserts.push_back({static_cast<size_t>(span.end), std::move(payload)});
  }
  std::string dummies;
  for (int i = 0; i < n_instances; ++i)
    dummies += "  dummy_mod u_dummy_" + std::to_string(i) + " (.a(1'b0));\n";
  if (!dummies.empty()) inserts.push_back({module_end, std::move(dummies)});

  std::stable_sort(inserts.begin(), inserts.end(),
                   [](const Insertion& a, const Insertion& b) { return a.offset > b.offset; });
  for (const auto& ins : inserts) text.insert(ins.offset, ins.payload);
  return text;
}

}  // namespace svaforge

#endif  // SVAFORGE_CONTAMINATE_HPP_
