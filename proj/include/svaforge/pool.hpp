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

#ifndef SVAFORGE_POOL_HPP_
#define SVAFORGE_POOL_HPP_

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "svaforge/lex.hpp"
#include "svaforge/parse.hpp"
#include "svaforge/rng.hpp"
#include "svaforge/util.hpp"

namespace svaforge {

// One pool entry. `source` is either "synthetic" or "mined:<path>".
struct PoolEntry {
  std::string name;
  std::string source;
};

// Ordered list of identifier names plus cleanliness flags. The flags record
// which guarantees currently hold; mine() produces a raw pool with all three
// false, clean() turns all three on.
struct IdentifierPool {
  std::vector<PoolEntry> entries;
  bool deduplicated = false;
  bool validated = false;
  bool consistent = false;

  size_t size() const { return entries.size(); }
  bool empty() const { return entries.empty(); }

  std::vector<std::string> names() const {
    std::vector<std::string> out;
    out.reserve(entries.size());
    for (const auto& e : entries) out.push_back(e.name);
    return out;
  }
};

struct MineResult {
  IdentifierPool pool;
  // One message per file that failed to parse; such files are skipped.
  std::vector<std::string> errors;
};

// Per-source name counts, for histogram-style reporting.
inline std::map<std::string, int> source_histogram(const IdentifierPool& pool) {
  std::map<std::string, int> counts;
  for (const auto& e : pool.entries) ++counts[e.source];
  return counts;
}

// Extracts declared signal and port names from RTL files, in file order then
// declaration order. Files whose parse yields no module are recorded in
// `errors` and skipped; duplicates across and within files are kept.
inline MineResult mine(const std::vector<std::string>& paths) {
  MineResult result;
  for (const auto& path : paths) {
    std::string text;
    try {
      text = read_text_file(path);
    } catch (const Error& e) {
      result.errors.push_back(path + ": " + e.what());
      continue;
    }
    ParsedFile parsed = parse_file(text);
    if (parsed.modules.empty()) {
      std::string why = "no module found";
      for (const auto& d : parsed.diagnostics) {
        if (d.is_error) {
          why = d.code;
          break;
        }
      }
      result.errors.push_back(path + ": " + why);
      continue;
    }
    for (const auto& m : parsed.modules) {
      for (const auto& d : m.decls) {
        result.pool.entries.push_back({d.name, "mined:" + path});
      }
    }
  }
  return result;
}

struct CleanSummary {
  int invalid_dropped = 0;
  int duplicates_dropped = 0;
  int inconsistent_dropped = 0;
};

// Applies the requested cleaning rules in order per entry: drop names that
// are not valid identifiers or are reserved keywords, drop exact repeats of
// an earlier entry, and drop names that differ from an earlier entry only by
// case. First occurrence wins; surviving order is preserved.
inline std::pair<IdentifierPool, CleanSummary> clean_selective(
    const IdentifierPool& pool, bool drop_invalid, bool drop_duplicates,
    bool drop_inconsistent) {
  IdentifierPool out = pool;
  out.entries.clear();
  CleanSummary summary;
  std::set<std::string> seen;
  std::set<std::string> seen_folded;
  for (const auto& e : pool.entries) {
    if (drop_invalid && (!is_valid_identifier(e.name) || is_sv_keyword(e.name))) {
      ++summary.invalid_dropped;
      continue;
    }
    std::string folded = e.name;
    std::transform(folded.begin(), folded.end(), folded.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (drop_duplicates && seen.count(e.name)) {
      ++summary.duplicates_dropped;
      continue;
    }
    if (drop_inconsistent && !seen.count(e.name) && seen_folded.count(folded)) {
      ++summary.inconsistent_dropped;
      continue;
    }
    seen.insert(e.name);
    seen_folded.insert(folded);
    out.entries.push_back(e);
  }
  if (drop_invalid) out.validated = true;
  if (drop_duplicates) out.deduplicated = true;
  if (drop_inconsistent) out.consistent = true;
  return {out, summary};
}

// Full cleaning: all three rules.
inline std::pair<IdentifierPool, CleanSummary> clean(const IdentifierPool& pool) {
  return clean_selective(pool, true, true, true);
}

namespace detail {

inline const std::vector<std::string>& name_prefixes() {
  static const std::vector<std::string> kPrefixes = {
      "reg", "ctrl", "temp", "cfg",  "hw", "core",
      "chip", "fsm",  "tx",   "rx",  "flag_register"};
  return kPrefixes;
}

}  // namespace detail

// Generates n distinct names of the form <prefix>_<suffix>, prefix uniform
// over a fixed hardware-flavored list and suffix a 1-3 character base-36
// string. Collisions are re-drawn, so the result is duplicate-free.
inline IdentifierPool synthesize_pool(int n, uint64_t seed) {
  IdentifierPool pool;
  pool.deduplicated = true;
  pool.validated = true;
  pool.consistent = true;
  if (n <= 0) return pool;
  static const char kBase36[] = "0123456789abcdefghijklmnopqrstuvwxyz";
  Rng rng(seed);
  std::set<std::string> used;
  const auto& prefixes = detail::name_prefixes();
  while (static_cast<int>(pool.entries.size()) < n) {
    std::string name = prefixes[rng.below(prefixes.size())];
    name += '_';
    uint64_t len = rng.range(1, 3);
    for (uint64_t i = 0; i < len; ++i) name += kBase36[rng.below(36)];
    if (!used.insert(name).second) continue;
    pool.entries.push_back({name, "synthetic"});
  }
  return pool;
}

enum class CorruptMode { InvalidChars, Duplicates, Inconsistent };

inline const char* corrupt_mode_name(CorruptMode mode) {
  switch (mode) {
    case CorruptMode::InvalidChars:
      return "invalid_chars";
    case CorruptMode::Duplicates:
      return "duplicates";
    case CorruptMode::Inconsistent:
      return "inconsistent";
  }
  return "";
}

// Appends ceil(rate*n) dirty copies of existing entries: names with an
// injected illegal character, exact duplicates, or case-flipped variants.
// Originals are kept, so clean() recovers the input name set. The flag
// corresponding to the mode is cleared on the result.
inline IdentifierPool corrupt(const IdentifierPool& pool, CorruptMode mode,
                              double rate, uint64_t seed) {
  if (pool.empty() && rate > 0) {
    throw Error("EmptyPool", "cannot corrupt an empty pool");
  }
  IdentifierPool out = pool;
  size_t n = pool.entries.size();
  size_t extra = static_cast<size_t>(std::ceil(rate * static_cast<double>(n)));
  if (extra == 0) return out;
  static const char kJunk[] = "-!#@";
  Rng rng(seed);
  for (size_t i = 0; i < extra; ++i) {
    PoolEntry copy = pool.entries[rng.below(n)];
    switch (mode) {
      case CorruptMode::InvalidChars: {
        size_t at = rng.below(copy.name.size() + 1);
        copy.name.insert(copy.name.begin() + at, kJunk[rng.below(4)]);
        out.validated = false;
        break;
      }
      case CorruptMode::Duplicates:
        out.deduplicated = false;
        break;
      case CorruptMode::Inconsistent: {
        bool changed = false;
        for (auto& c : copy.name) {
          if (std::isalpha(static_cast<unsigned char>(c))) {
            c = std::islower(static_cast<unsigned char>(c))
                    ? static_cast<char>(std::toupper(c))
                    : static_cast<char>(std::tolower(c));
            changed = true;
          }
        }
        // A name with no letters cannot collide by case; keep it as a plain
        // duplicate so the entry count stays what the caller asked for.
        if (!changed) out.deduplicated = false;
        out.consistent = false;
        break;
      }
    }
    out.entries.push_back(std::move(copy));
  }
  return out;
}

// Pool file format: one name per line; `# source: <tag>` comment lines set
// the source recorded for the names that follow.
inline void save_pool(const IdentifierPool& pool, const std::string& path) {
  std::string text;
  std::string current;
  for (const auto& e : pool.entries) {
    if (e.source != current) {
      current = e.source;
      text += "# source: " + current + "\n";
    }
    text += e.name + "\n";
  }
  write_file(path, text);
}

inline IdentifierPool load_pool(const std::string& path) {
  IdentifierPool pool;
  std::string text = read_text_file(path);
  std::string current = "mined:" + path;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    std::string line = trim(text.substr(
        pos, eol == std::string::npos ? std::string::npos : eol - pos));
    if (!line.empty()) {
      if (line[0] == '#') {
        std::string tag = trim(line.substr(1));
        if (starts_with(tag, "source:")) current = trim(tag.substr(7));
      } else {
        pool.entries.push_back({line, current});
      }
    }
    if (eol == std::string::npos) break;
    pos = eol + 1;
  }
  return pool;
}

}  // namespace svaforge

#endif  // SVAFORGE_POOL_HPP_
