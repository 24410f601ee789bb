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

#include "mdpart/multipartition.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>

#include "mdpart/error.hpp"
#include "mdpart/table_cache.hpp"
#include "parallel.hpp"

namespace mdpart {

bool MultiIndex::is_origin() const
{
  return std::all_of(coords.begin(), coords.end(), [](std::uint32_t x) { return x == 0; });
}

bool MultiIndex::componentwise_le(const MultiIndex &other) const
{
  if (coords.size() != other.coords.size()) {
    return false;
  }
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] > other.coords[i]) {
      return false;
    }
  }
  return true;
}

bool is_valid_partition(const MultiPartition &p)
{
  if (p.dim < 2) {
    return false;
  }
  const auto arity = static_cast<std::size_t>(p.dim - 1);
  std::uint64_t sum = 0;
  for (const auto &[index, value] : p.entries) {
    if (index.coords.size() != arity || value == 0) {
      return false;
    }
    if (p.punctual && index.is_origin()) {
      return false;
    }
    sum += value;
  }
  if (sum != p.weight) {
    return false;
  }
  // Covering relations suffice: inside the punctual domain every i <= j is
  // joined by unit steps that never pass through the origin.
  for (const auto &[index, value] : p.entries) {
    for (std::size_t axis = 0; axis < arity; ++axis) {
      if (index.coords[axis] == 0) {
        continue;
      }
      MultiIndex below = index;
      --below.coords[axis];
      if (p.punctual && below.is_origin()) {
        continue;
      }
      const auto it = p.entries.find(below);
      if (it == p.entries.end() || it->second < value) {
        return false;
      }
    }
  }
  return true;
}

namespace {

using Layer = std::vector<std::uint16_t>;

void require_arguments(int r, int n)
{
  if (r < 2) {
    throw InvalidArgument("r must satisfy r >= 2 (got " + std::to_string(r) + ")");
  }
  if (n < 0) {
    throw InvalidArgument("n must satisfy n >= 0 (got " + std::to_string(n) + ")");
  }
  if (n > std::numeric_limits<std::uint16_t>::max() - 1) {
    throw InvalidArgument("n is too large for the layered counter (got " + std::to_string(n) + ")");
  }
}

// Index cells of one layer: the points x of (Z>=0)^d with prod(x_i + 1) <= bound,
// in lexicographic order, so every predecessor x - e_i precedes x. Any cell
// carrying a nonzero entry of a partition of weight < bound lies in this set.
struct LayerGeometry {
  std::vector<std::vector<std::uint32_t>> cells;
  std::vector<std::vector<std::uint32_t>> preds;

  LayerGeometry(int d, std::uint64_t bound)
  {
    std::vector<std::uint32_t> prefix;
    generate(static_cast<std::size_t>(d), bound, 1, prefix);
    std::map<std::vector<std::uint32_t>, std::uint32_t> index;
    for (std::uint32_t i = 0; i < cells.size(); ++i) {
      index.emplace(cells[i], i);
    }
    preds.resize(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
      for (std::size_t axis = 0; axis < cells[i].size(); ++axis) {
        if (cells[i][axis] == 0) {
          continue;
        }
        auto below = cells[i];
        --below[axis];
        preds[i].push_back(index.at(below));
      }
    }
  }

  std::size_t size() const { return cells.size(); }

 private:
  void generate(std::size_t d, std::uint64_t bound, std::uint64_t product, std::vector<std::uint32_t> &prefix)
  {
    if (prefix.size() == d) {
      cells.push_back(prefix);
      return;
    }
    for (std::uint32_t x = 0; product * (x + 1) <= bound; ++x) {
      prefix.push_back(x);
      generate(d, bound, product * (x + 1), prefix);
      prefix.pop_back();
    }
  }
};

// Enumerates layers mu <= bound (pointwise), weakly decreasing along the
// layer geometry, with total weight <= budget. With skip_origin the origin
// cell is held at 0 and ignored by the monotonicity constraints.
template <typename Visit>
class SublayerWalker {
 public:
  SublayerWalker(const LayerGeometry &geo, const Layer &bound, unsigned budget, bool skip_origin, Visit &visit)
      : geo_(geo), bound_(bound), budget_(budget), skip_origin_(skip_origin), cur_(geo.size(), 0), visit_(visit)
  {
  }

  void run() { step(0, 0); }

 private:
  // Cells at index >= c are zero on entry. Cells whose limit is 0 are
  // skipped without branching.
  void step(std::size_t c, unsigned used)
  {
    const std::size_t n = geo_.size();
    unsigned limit = 0;
    for (;; ++c) {
      if (c == n || used == budget_) {
        visit_(static_cast<const Layer &>(cur_), used);
        return;
      }
      limit = limit_at(c, used);
      if (limit != 0) {
        break;
      }
    }
    for (unsigned v = 0; v <= limit; ++v) {
      cur_[c] = static_cast<std::uint16_t>(v);
      step(c + 1, used + v);
    }
    cur_[c] = 0;
  }

  unsigned limit_at(std::size_t c, unsigned used) const
  {
    if (skip_origin_ && c == 0) {
      return 0;
    }
    unsigned limit = std::min<unsigned>(bound_[c], budget_ - used);
    for (const auto p : geo_.preds[c]) {
      if (skip_origin_ && p == 0) {
        continue;
      }
      limit = std::min<unsigned>(limit, cur_[p]);
    }
    return limit;
  }

  const LayerGeometry &geo_;
  const Layer &bound_;
  unsigned budget_;
  bool skip_origin_;
  Layer cur_;
  Visit &visit_;
};

template <typename Visit>
void for_each_sublayer(const LayerGeometry &geo, const Layer &bound, unsigned budget, bool skip_origin, Visit &&visit)
{
  SublayerWalker<std::remove_reference_t<Visit>> walker(geo, bound, budget, skip_origin, visit);
  walker.run();
}

// (bounding layer, remaining weight) -> number of chains. Sharded so that
// workers rarely contend; concurrent inserts of one key carry equal values.
class ChainMemo {
 public:
  std::optional<BigInt> find(const std::u16string &key)
  {
    auto &shard = shard_for(key);
    std::lock_guard lock(shard.mutex);
    const auto it = shard.map.find(key);
    if (it == shard.map.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  void insert(std::u16string key, const BigInt &value)
  {
    auto &shard = shard_for(key);
    std::lock_guard lock(shard.mutex);
    shard.map.try_emplace(std::move(key), value);
  }

 private:
  struct Shard {
    std::mutex mutex;
    std::unordered_map<std::u16string, BigInt> map;
  };

  Shard &shard_for(const std::u16string &key) { return shards_[std::hash<std::u16string>{}(key) % shards_.size()]; }

  std::array<Shard, 64> shards_;
};

class LayeredCounter {
 public:
  LayeredCounter(int r, int n_max) : geo_(r - 2, static_cast<std::uint64_t>(n_max) + 1), n_max_(n_max) {}

  std::vector<BigInt> counts(bool punctual, unsigned threads)
  {
    const auto n_max = static_cast<unsigned>(n_max_);
    const Layer cap(geo_.size(), static_cast<std::uint16_t>(n_max));

    // The first layer along the first index axis; for punctual partitions it
    // misses the origin, and the layer after it is unbounded there.
    std::vector<std::pair<Layer, unsigned>> first_layers;
    for_each_sublayer(geo_, cap, n_max, punctual, [&](const Layer &mu, unsigned weight) {
      if (weight > 0 || punctual) {
        first_layers.emplace_back(mu, weight);
      }
    });

    const unsigned workers = std::max(1U, threads);
    std::vector<std::vector<BigInt>> partial(workers, std::vector<BigInt>(n_max + 1));
    detail::parallel_for(first_layers.size(), workers, [&](std::size_t task, unsigned worker) {
      auto bound = first_layers[task].first;
      const unsigned weight = first_layers[task].second;
      if (punctual) {
        bound[0] = static_cast<std::uint16_t>(n_max);
      }
      for (unsigned w = 0; weight + w <= n_max; ++w) {
        partial[worker][weight + w] += chains(bound, w);
      }
    });

    std::vector<BigInt> total(n_max + 1);
    if (!punctual) {
      total[0] = 1;
    }
    for (const auto &p : partial) {
      for (std::size_t i = 0; i <= n_max; ++i) {
        total[i] += p[i];
      }
    }
    return total;
  }

 private:
  // Number of weakly decreasing chains of nonempty layers, each <= bound,
  // of total weight w.
  BigInt chains(const Layer &bound, unsigned w)
  {
    if (w == 0) {
      return 1;
    }
    Layer clamped(bound.size());
    std::size_t used_len = 0;
    for (std::size_t i = 0; i < bound.size(); ++i) {
      clamped[i] = static_cast<std::uint16_t>(std::min<unsigned>(bound[i], w));
      if (clamped[i] != 0) {
        used_len = i + 1;
      }
    }
    std::u16string key;
    key.reserve(used_len + 1);
    key.push_back(static_cast<char16_t>(w));
    for (std::size_t i = 0; i < used_len; ++i) {
      key.push_back(static_cast<char16_t>(clamped[i]));
    }
    if (auto hit = memo_.find(key)) {
      return *hit;
    }
    BigInt total = 0;
    for_each_sublayer(geo_, clamped, w, false, [&](const Layer &mu, unsigned weight) {
      if (weight > 0) {
        total += chains(mu, w - weight);
      }
    });
    memo_.insert(std::move(key), total);
    return total;
  }

  LayerGeometry geo_;
  int n_max_;
  ChainMemo memo_;
};

}  // namespace

std::vector<BigInt> partition_counts(int r, int n_max, bool punctual, const CountOptions &options)
{
  require_arguments(r, n_max);
  const auto needed = static_cast<std::size_t>(n_max) + 1;
  static constexpr const char *kKind = "layered";
  if (options.cache != nullptr) {
    auto cached = options.cache->load(kKind, r, punctual);
    if (cached.size() >= needed) {
      cached.resize(needed);
      return cached;
    }
  }
  LayeredCounter counter(r, n_max);
  auto counts = counter.counts(punctual, options.threads);
  if (options.cache != nullptr) {
    options.cache->store(kKind, r, punctual, counts);
  }
  return counts;
}

BigInt count_partitions(int r, int n, const CountOptions &options)
{
  return partition_counts(r, n, false, options).back();
}

BigInt count_punctual(int r, int n, const CountOptions &options)
{
  return partition_counts(r, n, true, options).back();
}

Series partition_series(int r, std::size_t order, bool punctual, const CountOptions &options)
{
  if (order > static_cast<std::size_t>(std::numeric_limits<int>::max())) {
    throw InvalidArgument("series order too large");
  }
  return Series::from_integers(partition_counts(r, static_cast<int>(order), punctual, options));
}

void for_each_partition(int r, int n, bool punctual, const std::function<void(const MultiPartition &)> &visit)
{
  require_arguments(r, n);
  const LayerGeometry geo(r - 2, static_cast<std::uint64_t>(n) + 1);
  MultiPartition current;
  current.dim = r;
  current.punctual = punctual;
  current.weight = static_cast<std::uint64_t>(n);

  std::function<void(std::uint32_t, const Layer &, unsigned)> descend = [&](std::uint32_t depth, const Layer &bound,
                                                                            unsigned remaining) {
    if (remaining == 0) {
      visit(current);
      return;
    }
    const bool first_punctual = punctual && depth == 0;
    std::vector<std::pair<Layer, unsigned>> layers;
    for_each_sublayer(geo, bound, remaining, first_punctual, [&](const Layer &mu, unsigned weight) {
      if (weight > 0 || first_punctual) {
        layers.emplace_back(mu, weight);
      }
    });
    for (auto &[mu, weight] : layers) {
      std::vector<MultiIndex> added;
      for (std::size_t c = 0; c < geo.size(); ++c) {
        if (mu[c] == 0) {
          continue;
        }
        MultiIndex index;
        index.coords.reserve(geo.cells[c].size() + 1);
        index.coords.push_back(depth);
        index.coords.insert(index.coords.end(), geo.cells[c].begin(), geo.cells[c].end());
        current.entries.emplace(index, mu[c]);
        added.push_back(std::move(index));
      }
      Layer next = mu;
      if (first_punctual) {
        next[0] = static_cast<std::uint16_t>(n);
      }
      descend(depth + 1, next, remaining - weight);
      for (const auto &index : added) {
        current.entries.erase(index);
      }
    }
  };

  const Layer cap(geo.size(), static_cast<std::uint16_t>(n));
  descend(0, cap, static_cast<unsigned>(n));
}

std::vector<MultiPartition> enumerate_partitions(int r, int n, bool punctual)
{
  std::vector<MultiPartition> out;
  for_each_partition(r, n, punctual, [&](const MultiPartition &p) { out.push_back(p); });
  std::sort(out.begin(), out.end(),
            [](const MultiPartition &a, const MultiPartition &b) { return a.entries < b.entries; });
  return out;
}

}  // namespace mdpart
