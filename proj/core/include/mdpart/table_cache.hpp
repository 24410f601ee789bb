// Copyright 2026 The mdpart Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MDPART_TABLE_CACHE_HPP
#define MDPART_TABLE_CACHE_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "mdpart/rational.hpp"

namespace mdpart {

// On-disk store of count tables, one JSON file per (kind, r, punctual):
//
//   {"kind": "layered", "r": 3, "punctual": false, "algorithm_version": 1,
//    "n_max": 12, "counts": ["1", "1", "3", ...]}
//
// A file holds the longest prefix computed so far. Files written by another
// algorithm version are ignored and replaced. Writes go to a temporary file
// in the same directory followed by a rename, so concurrent processes sharing
// a directory never observe a torn file.
class TableCache {
 public:
  /// Environment variable naming the default cache directory.
  static constexpr const char *kEnvVar = "MDPART_CACHE_DIR";

  explicit TableCache(std::filesystem::path dir, int algorithm_version);

  /// Cache rooted at $MDPART_CACHE_DIR, if set and nonempty.
  static std::optional<TableCache> from_environment(int algorithm_version);

  const std::filesystem::path &directory() const { return dir_; }

  /// Stored prefix, or empty when absent, unreadable or stale.
  std::vector<BigInt> load(const std::string &kind, int r, bool punctual) const;

  /// Stores `counts` if it extends what is on disk. Throws InvariantViolation
  /// when the new table disagrees with the stored prefix.
  void store(const std::string &kind, int r, bool punctual, const std::vector<BigInt> &counts) const;

  std::filesystem::path path_for(const std::string &kind, int r, bool punctual) const;

 private:
  std::filesystem::path dir_;
  int version_;
};

}  // namespace mdpart

#endif  // MDPART_TABLE_CACHE_HPP
