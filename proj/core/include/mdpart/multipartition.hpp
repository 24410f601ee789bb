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

#ifndef MDPART_MULTIPARTITION_HPP
#define MDPART_MULTIPARTITION_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "mdpart/rational.hpp"
#include "mdpart/series.hpp"

namespace mdpart {

class TableCache;

/// A point of (Z>=0)^(r-1) indexing the entries of an r-dimensional partition.
struct MultiIndex {
  std::vector<std::uint32_t> coords;

  bool is_origin() const;
  /// Componentwise <=; the order every monotonicity check uses.
  bool componentwise_le(const MultiIndex &other) const;

  friend auto operator<=>(const MultiIndex &, const MultiIndex &) = default;
  friend bool operator==(const MultiIndex &, const MultiIndex &) = default;
};

// A finitely supported, weakly decreasing array of positive integers indexed
// by (Z>=0)^(r-1). Punctual partitions have no entry at the origin and only
// compare entries away from it. Zero entries are never stored.
struct MultiPartition {
  int dim = 2;
  bool punctual = false;
  std::map<MultiIndex, std::uint64_t> entries;
  std::uint64_t weight = 0;

  friend bool operator==(const MultiPartition &, const MultiPartition &) = default;
};

/// Checks index arity, positivity, weight and monotonicity.
bool is_valid_partition(const MultiPartition &p);

struct CountOptions {
  /// Worker threads for the layered counter; 0 is treated as 1.
  unsigned threads = 1;
  /// Optional persistent store of previously computed tables.
  const TableCache *cache = nullptr;
};

/// Bumped whenever the layered counter could produce different tables.
inline constexpr int kLayeredAlgorithmVersion = 1;

/// P_r(n) for n = 0..n_max (punctual: the punctual counts), computed by the
/// layered recursion: an r-dimensional partition is a weakly decreasing chain
/// of (r-1)-dimensional layers along the first index axis, memoized on
/// (bounding layer, remaining weight). Results do not depend on `threads`.
std::vector<BigInt> partition_counts(int r, int n_max, bool punctual, const CountOptions &options = {});

BigInt count_partitions(int r, int n, const CountOptions &options = {});
BigInt count_punctual(int r, int n, const CountOptions &options = {});

/// sum_n P_r(n) q^n (or the punctual counts) through the given order.
Series partition_series(int r, std::size_t order, bool punctual, const CountOptions &options = {});

/// Visits every partition of n once, in generation order.
void for_each_partition(int r, int n, bool punctual, const std::function<void(const MultiPartition &)> &visit);

/// Every partition of n, sorted lexicographically by the ordered list of
/// (index, entry) pairs.
std::vector<MultiPartition> enumerate_partitions(int r, int n, bool punctual);

}  // namespace mdpart

#endif  // MDPART_MULTIPARTITION_HPP
