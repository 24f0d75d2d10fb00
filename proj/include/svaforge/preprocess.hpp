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
// Conditional-compilation preprocessing: `ifdef / `ifndef / `else / `endif
// with nesting. Directive lines never reach the parser; other backtick
// directives (`define, `include, ...) are dropped as well; the toolkit's
// define set comes in as an explicit parameter. Inactive regions are
// removed. Offsets in the output refer to the preprocessed text; the
// returned regions carry original-text spans for bookkeeping.

#ifndef SVAFORGE_PREPROCESS_HPP_
#define SVAFORGE_PREPROCESS_HPP_

#include <set>
#include <string>
#include <vector>

#include "svaforge/ast.hpp"
#include "svaforge/util.hpp"

namespace svaforge {

struct PreprocessResult {
  std::string text;
  std::vector<PpRegion> regions;
  std::vector<std::string> errors;  // e.g. unterminated ifdef
};

inline PreprocessResult preprocess(const std::string& src,
                                   const std::set<std::string>& defines) {
  PreprocessResult result;
  struct Frame {
    std::string macro;
    int then_begin = 0;
    int else_begin = -1;
    bool taking_then = false;   // condition was true
    bool parent_active = true;  // enclosing region active
    int directive_pos = 0;
  };
  std::vector<Frame> stack;
  auto active = [&]() {
    for (const auto& f : stack) {
      bool branch_active = f.else_begin < 0 ? f.taking_then : !f.taking_then;
      if (!f.parent_active || !branch_active) return false;
    }
    return true;
  };

  size_t i = 0;
  while (i <= src.size()) {
    size_t eol = src.find('\n', i);
    bool last = eol == std::string::npos;
    std::string line = src.substr(i, last ? std::string::npos : eol - i);
    std::string stripped = trim(line);
    if (!stripped.empty() && stripped[0] == '`') {
      size_t sp = stripped.find_first_of(" \t");
      std::string directive = stripped.substr(1, sp == std::string::npos ? std::string::npos : sp - 1);
      std::string arg = sp == std::string::npos ? "" : trim(stripped.substr(sp));
      if (directive == "ifdef" || directive == "ifndef") {
        Frame f;
        f.macro = arg;
        f.taking_then = (defines.count(arg) != 0) == (directive == "ifdef");
        f.parent_active = active();
        f.directive_pos = static_cast<int>(i);
        f.then_begin = static_cast<int>(last ? src.size() : eol + 1);
        stack.push_back(f);
      } else if (directive == "else") {
        if (stack.empty()) {
          result.errors.push_back("`else without `ifdef at offset " + std::to_string(i));
        } else {
          stack.back().else_begin = static_cast<int>(last ? src.size() : eol + 1);
        }
      } else if (directive == "endif") {
        if (stack.empty()) {
          result.errors.push_back("`endif without `ifdef at offset " + std::to_string(i));
        } else {
          Frame f = stack.back();
          stack.pop_back();
          PpRegion region;
          region.macro = f.macro;
          int end = static_cast<int>(i);
          if (f.else_begin >= 0) {
            region.then_span = {f.then_begin, f.else_begin};
            region.else_span = Span{f.else_begin, end};
          } else {
            region.then_span = {f.then_begin, end};
          }
          result.regions.push_back(region);
        }
      }
      // Any other directive line (`define, `include, `timescale, ...) is
      // dropped without note.
    } else if (active()) {
      result.text += line;
      result.text += '\n';
    }
    if (last) break;
    i = eol + 1;
  }
  for (const auto& f : stack) {
    result.errors.push_back("UnterminatedIfdef: `ifdef " + f.macro + " at offset " +
                            std::to_string(f.directive_pos) + " has no `endif");
  }
  return result;
}

}  // namespace svaforge

#endif  // SVAFORGE_PREPROCESS_HPP_
