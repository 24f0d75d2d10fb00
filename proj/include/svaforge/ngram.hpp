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

#ifndef SVAFORGE_NGRAM_HPP_
#define SVAFORGE_NGRAM_HPP_

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "svaforge/rng.hpp"
#include "svaforge/util.hpp"

namespace svaforge {

// Set of fixed-length byte windows. Grams are stored by 64-bit hash with one
// exemplar gram per hash; membership requires the stored bytes to match, and
// grams whose hash collides with a different gram go to an exact overflow
// set, so hash collisions can never inflate an intersection.
class NGramSet {
 public:
  explicit NGramSet(int n = 13) : n_(n) {
    if (n < 1) throw Error("BadNGramSize", "n-gram size must be >= 1");
  }

  int n() const { return n_; }
  size_t size() const { return primary_.size() + overflow_.size(); }

  void insert(std::string_view gram) {
    uint64_t h = hash_bytes(gram.data(), gram.size());
    auto [it, added] = primary_.try_emplace(h, gram);
    if (!added && it->second != gram) overflow_.insert(std::string(gram));
  }

  bool contains(std::string_view gram) const {
    uint64_t h = hash_bytes(gram.data(), gram.size());
    auto it = primary_.find(h);
    if (it != primary_.end() && it->second == gram) return true;
    return overflow_.count(std::string(gram)) > 0;
  }

  // Visits every stored gram once, in unspecified order.
  template <typename Fn>
  void for_each(Fn fn) const {
    for (const auto& [h, gram] : primary_) fn(gram);
    for (const auto& gram : overflow_) fn(gram);
  }

 private:
  int n_;
  std::unordered_map<uint64_t, std::string> primary_;
  std::set<std::string> overflow_;
};

// All L-n+1 contiguous windows of `bytes`; empty set when the input is
// shorter than n.
inline NGramSet ngrams(std::string_view bytes, int n) {
  NGramSet set(n);
  if (bytes.size() < static_cast<size_t>(n)) return set;
  for (size_t i = 0; i + n <= bytes.size(); ++i) {
    set.insert(bytes.substr(i, n));
  }
  return set;
}

struct OverlapReport {
  double score = 0.0;
  uint64_t n1 = 0;
  uint64_t n2 = 0;
  uint64_t intersection = 0;
  uint64_t union_size = 0;
  bool degenerate = false;
};

// Jaccard similarity of the two corpora's n-gram sets. An empty union (both
// inputs shorter than n) is reported as score 0 with the degenerate flag.
inline OverlapReport overlap(std::string_view a, std::string_view b, int n = 13) {
  NGramSet ga = ngrams(a, n);
  NGramSet gb = ngrams(b, n);
  OverlapReport report;
  report.n1 = ga.size();
  report.n2 = gb.size();
  const NGramSet& small = ga.size() <= gb.size() ? ga : gb;
  const NGramSet& large = ga.size() <= gb.size() ? gb : ga;
  uint64_t inter = 0;
  small.for_each([&](const std::string& gram) {
    if (large.contains(gram)) ++inter;
  });
  report.intersection = inter;
  report.union_size = report.n1 + report.n2 - inter;
  if (report.union_size == 0) {
    report.degenerate = true;
    report.score = 0.0;
  } else {
    report.score = static_cast<double>(inter) /
                   static_cast<double>(report.union_size);
  }
  return report;
}

// Concatenates the given files in sorted path order with a single 0x00 byte
// between consecutive files, so windows spanning a boundary never match any
// real content.
inline std::string corpus_from_files(std::vector<std::string> paths) {
  std::sort(paths.begin(), paths.end());
  std::string corpus;
  for (size_t i = 0; i < paths.size(); ++i) {
    if (i > 0) corpus += '\0';
    corpus += read_file_raw(paths[i]);
  }
  return corpus;
}

inline std::string corpus_from_dir(const std::string& root) {
  return corpus_from_files(list_files_sorted(root));
}

}  // namespace svaforge

#endif  // SVAFORGE_NGRAM_HPP_
