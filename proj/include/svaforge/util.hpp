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

#ifndef SVAFORGE_UTIL_HPP_
#define SVAFORGE_UTIL_HPP_

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace svaforge {

// Thrown for unusable inputs (missing file, empty pool, no clock, ...).
// Carries a stable machine-readable code alongside the human message.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

// Normalizes line endings (\r\n and bare \r become \n) and replaces bytes
// that do not form valid UTF-8 sequences with '?'. All byte offsets reported
// by the toolkit refer to the normalized text.
inline std::string normalize_text(const std::string& raw) {
  std::string out;
  out.reserve(raw.size());
  size_t i = 0;
  auto cont = [&](size_t k, size_t n) {
    for (size_t j = 1; j <= n; ++j) {
      if (k + j >= raw.size() || (static_cast<uint8_t>(raw[k + j]) & 0xc0) != 0x80)
        return false;
    }
    return true;
  };
  while (i < raw.size()) {
    uint8_t c = static_cast<uint8_t>(raw[i]);
    if (c == '\r') {
      out += '\n';
      i += (i + 1 < raw.size() && raw[i + 1] == '\n') ? 2 : 1;
    } else if (c < 0x80) {
      out += static_cast<char>(c);
      ++i;
    } else if ((c & 0xe0) == 0xc0 && cont(i, 1)) {
      out.append(raw, i, 2);
      i += 2;
    } else if ((c & 0xf0) == 0xe0 && cont(i, 2)) {
      out.append(raw, i, 3);
      i += 3;
    } else if ((c & 0xf8) == 0xf0 && cont(i, 3)) {
      out.append(raw, i, 4);
      i += 4;
    } else {
      out += '?';
      ++i;
    }
  }
  return out;
}

inline std::string read_file_raw(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("FileNotFound", "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Reads a source file and applies the normalization above.
inline std::string read_text_file(const std::string& path) {
  return normalize_text(read_file_raw(path));
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("FileWriteFailed", "cannot write " + path);
  out << content;
}

// Recursively lists regular files under root, paths sorted lexicographically.
inline std::vector<std::string> list_files_sorted(const std::string& root) {
  namespace fs = std::filesystem;
  std::vector<std::string> paths;
  if (fs::is_regular_file(root)) {
    paths.push_back(root);
    return paths;
  }
  if (!fs::is_directory(root)) throw Error("FileNotFound", "no such directory: " + root);
  for (const auto& entry : fs::recursive_directory_iterator(root)) {
    if (entry.is_regular_file()) paths.push_back(entry.path().string());
  }
  std::sort(paths.begin(), paths.end());
  return paths;
}

inline bool starts_with(const std::string& s, const std::string& prefix) {
  return s.size() >= prefix.size() && s.compare(0, prefix.size(), prefix) == 0;
}

inline std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\n");
  return s.substr(b, e - b + 1);
}

}  // namespace svaforge

#endif  // SVAFORGE_UTIL_HPP_
