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

#include "mdpart/staircase.hpp"

#include <algorithm>
#include <memory>
#include <string>
#include <unordered_set>
#include <utility>

#include "mdpart/error.hpp"
#include "parallel.hpp"

namespace mdpart {

bool in_punctual_region(const Exponent &e)
{
  if (e.empty()) {
    return false;
  }
  return std::any_of(e.begin(), e.end() - 1, [](std::uint32_t x) { return x != 0; });
}

bool is_staircase(const StaircaseIdeal &ideal)
{
  if (ideal.dim < 1 || (ideal.punctual && ideal.dim < 2)) {
    return false;
  }
  for (const auto &box : ideal.diagram) {
    if (box.size() != static_cast<std::size_t>(ideal.dim)) {
      return false;
    }
    if (ideal.punctual && !in_punctual_region(box)) {
      return false;
    }
    for (std::size_t axis = 0; axis < box.size(); ++axis) {
      if (box[axis] == 0) {
        continue;
      }
      Exponent below = box;
      --below[axis];
      if (ideal.punctual && !in_punctual_region(below)) {
        continue;
      }
      if (!ideal.diagram.contains(below)) {
        return false;
      }
    }
  }
  return true;
}

namespace {

void require_arguments(int r, int n, bool punctual)
{
  if (r < 1 || (punctual && r < 2)) {
    throw InvalidArgument(std::string("r must satisfy r >= ") + (punctual ? "2" : "1") + " (got " +
                          std::to_string(r) + ")");
  }
  if (n < 0) {
    throw InvalidArgument("n must satisfy n >= 0 (got " + std::to_string(n) + ")");
  }
}

// Depth-first growth of staircases one box at a time. Boxes are packed into
// integer keys in row-major order on a grid of side n_max + 1, which makes
// key order coincide with lexicographic order of exponents. A box is added
// only if its key exceeds the last added key and all its predecessors inside
// the region are present; every prefix of a lexicographically sorted
// downward-closed set is again downward closed, so each diagram is reached
// along exactly one path.
class StaircaseSearch {
 public:
  StaircaseSearch(int r, int n_max, bool punctual)
      : r_(static_cast<std::size_t>(r)), n_max_(static_cast<std::uint32_t>(n_max)), punctual_(punctual)
  {
    const std::uint64_t side = static_cast<std::uint64_t>(n_max) + 1;
    strides_.assign(r_, 1);
    unsigned __int128 cells = 1;
    for (std::size_t i = r_; i-- > 0;) {
      strides_[i] = static_cast<std::uint64_t>(cells);
      cells *= side;
      if (cells > (static_cast<unsigned __int128>(1) << 62)) {
        throw InvalidArgument("staircase search grid too large for r=" + std::to_string(r) +
                              ", n=" + std::to_string(n_max));
      }
    }
    if (cells <= kDenseLimit) {
      dense_.assign(static_cast<std::size_t>(cells), 0);
    }
    if (punctual_) {
      for (std::size_t i = 0; i + 1 < r_; ++i) {
        Exponent e(r_, 0);
        e[i] = 1;
        roots_.push_back(e);
      }
    } else {
      roots_.emplace_back(r_, 0);
    }
    std::sort(roots_.begin(), roots_.end());
  }

  std::uint64_t key(const Exponent &e) const
  {
    std::uint64_t k = 0;
    for (std::size_t i = 0; i < r_; ++i) {
      k += e[i] * strides_[i];
    }
    return k;
  }

  Exponent decode(std::uint64_t k) const
  {
    Exponent e(r_);
    for (std::size_t i = 0; i < r_; ++i) {
      e[i] = static_cast<std::uint32_t>(k / strides_[i]);
      k %= strides_[i];
    }
    return e;
  }

  std::size_t depth() const { return keys_.size(); }
  const std::vector<std::uint64_t> &keys() const { return keys_; }

  void push(const Exponent &e)
  {
    const auto k = key(e);
    set_occupied(k, true);
    keys_.push_back(k);
    coords_.insert(coords_.end(), e.begin(), e.end());
  }

  void pop()
  {
    set_occupied(keys_.back(), false);
    keys_.pop_back();
    coords_.resize(coords_.size() - r_);
  }

  // Calls on_node(search) for the current diagram and every extension up to
  // max_depth boxes. on_node returns false to stop descending below a node.
  template <typename OnNode>
  void walk(std::size_t max_depth, OnNode &&on_node)
  {
    if (!on_node(*this) || depth() >= max_depth) {
      return;
    }
    for (const auto &c : candidates()) {
      push(c);
      walk(max_depth, on_node);
      pop();
    }
  }

  // Addable boxes with key greater than the last one, in increasing order.
  std::vector<Exponent> candidates() const
  {
    const std::uint64_t last = keys_.empty() ? 0 : keys_.back();
    const bool any = !keys_.empty();
    std::vector<std::pair<std::uint64_t, Exponent>> found;
    auto consider = [&](const Exponent &c) {
      const auto k = key(c);
      if (any && k <= last) {
        return;
      }
      if (addable(c)) {
        found.emplace_back(k, c);
      }
    };
    for (const auto &root : roots_) {
      consider(root);
    }
    Exponent c(r_);
    for (std::size_t b = 0; b < keys_.size(); ++b) {
      for (std::size_t axis = 0; axis < r_; ++axis) {
        std::copy_n(coords_.begin() + static_cast<std::ptrdiff_t>(b * r_), r_, c.begin());
        if (c[axis] >= n_max_) {
          continue;
        }
        ++c[axis];
        consider(c);
      }
    }
    std::sort(found.begin(), found.end(), [](const auto &a, const auto &b) { return a.first < b.first; });
    found.erase(std::unique(found.begin(), found.end(), [](const auto &a, const auto &b) { return a.first == b.first; }),
                found.end());
    std::vector<Exponent> out;
    out.reserve(found.size());
    for (auto &f : found) {
      out.push_back(std::move(f.second));
    }
    return out;
  }

 private:
  static constexpr unsigned __int128 kDenseLimit = static_cast<unsigned __int128>(1) << 25;

  bool occupied(std::uint64_t k) const
  {
    if (!dense_.empty()) {
      return dense_[static_cast<std::size_t>(k)] != 0;
    }
    return sparse_.contains(k);
  }

  void set_occupied(std::uint64_t k, bool value)
  {
    if (!dense_.empty()) {
      dense_[static_cast<std::size_t>(k)] = value ? 1 : 0;
    } else if (value) {
      sparse_.insert(k);
    } else {
      sparse_.erase(k);
    }
  }

  bool addable(const Exponent &c) const
  {
    if (punctual_ && !in_punctual_region(c)) {
      return false;
    }
    const auto k = key(c);
    if (occupied(k)) {
      return false;
    }
    for (std::size_t axis = 0; axis < r_; ++axis) {
      if (c[axis] == 0) {
        continue;
      }
      if (punctual_ && axis + 1 < r_ && c[axis] == 1) {
        // c - e_axis leaves the region when axis was the only nonzero one.
        bool other = false;
        for (std::size_t j = 0; j + 1 < r_; ++j) {
          if (j != axis && c[j] != 0) {
            other = true;
            break;
          }
        }
        if (!other) {
          continue;
        }
      }
      if (!occupied(k - strides_[axis])) {
        return false;
      }
    }
    return true;
  }

  std::size_t r_;
  std::uint32_t n_max_;
  bool punctual_;
  std::vector<std::uint64_t> strides_;
  std::vector<std::uint8_t> dense_;
  std::unordered_set<std::uint64_t> sparse_;
  std::vector<Exponent> roots_;
  std::vector<std::uint64_t> keys_;
  std::vector<std::uint32_t> coords_;
};

constexpr std::size_t kSplitDepth = 3;

// Box sequences of length min(n_max, kSplitDepth), in search order.
std::vector<std::vector<std::uint64_t>> split_prefixes(StaircaseSearch &search, std::size_t split)
{
  std::vector<std::vector<std::uint64_t>> prefixes;
  search.walk(split, [&](const StaircaseSearch &s) {
    if (s.depth() == split) {
      prefixes.push_back(s.keys());
      return false;
    }
    return true;
  });
  return prefixes;
}

void restore(StaircaseSearch &search, const std::vector<std::uint64_t> &prefix)
{
  for (const auto k : prefix) {
    search.push(search.decode(k));
  }
}

}  // namespace

std::vector<BigInt> oracle_counts(int r, int n_max, bool punctual, unsigned threads)
{
  require_arguments(r, n_max, punctual);
  const auto max_depth = static_cast<std::size_t>(n_max);
  const std::size_t split = std::min(max_depth, kSplitDepth);

  StaircaseSearch root(r, n_max, punctual);
  std::vector<std::uint64_t> shallow(max_depth + 1, 0);
  root.walk(split, [&](const StaircaseSearch &s) {
    if (s.depth() < split) {
      ++shallow[s.depth()];
    }
    return true;
  });
  const auto prefixes = split_prefixes(root, split);

  const unsigned workers = std::max(1U, threads);
  std::vector<std::vector<std::uint64_t>> partial(workers, std::vector<std::uint64_t>(max_depth + 1, 0));
  std::vector<std::unique_ptr<StaircaseSearch>> searches(workers);
  detail::parallel_for(prefixes.size(), workers, [&](std::size_t task, unsigned worker) {
    if (!searches[worker]) {
      searches[worker] = std::make_unique<StaircaseSearch>(r, n_max, punctual);
    }
    auto &search = *searches[worker];
    restore(search, prefixes[task]);
    auto &counts = partial[worker];
    search.walk(max_depth, [&](const StaircaseSearch &s) {
      ++counts[s.depth()];
      return true;
    });
    while (search.depth() > 0) {
      search.pop();
    }
  });

  std::vector<BigInt> out(max_depth + 1);
  for (std::size_t d = 0; d <= max_depth; ++d) {
    std::uint64_t total = shallow[d];
    for (const auto &p : partial) {
      total += p[d];
    }
    out[d] = BigInt(std::to_string(total));
  }
  return out;
}

BigInt oracle_count(int r, int n, bool punctual, unsigned threads)
{
  return oracle_counts(r, n, punctual, threads).back();
}

std::vector<StaircaseIdeal> enumerate_ideals(int r, int n, bool punctual, unsigned threads)
{
  require_arguments(r, n, punctual);
  const auto target = static_cast<std::size_t>(n);
  const std::size_t split = std::min(target, kSplitDepth);

  StaircaseSearch root(r, n, punctual);
  const auto prefixes = split_prefixes(root, split);

  const unsigned workers = std::max(1U, threads);
  std::vector<std::vector<std::vector<std::uint64_t>>> per_prefix(prefixes.size());
  std::vector<std::unique_ptr<StaircaseSearch>> searches(workers);
  detail::parallel_for(prefixes.size(), workers, [&](std::size_t task, unsigned worker) {
    if (!searches[worker]) {
      searches[worker] = std::make_unique<StaircaseSearch>(r, n, punctual);
    }
    auto &search = *searches[worker];
    restore(search, prefixes[task]);
    search.walk(target, [&](const StaircaseSearch &s) {
      if (s.depth() == target) {
        per_prefix[task].push_back(s.keys());
      }
      return true;
    });
    while (search.depth() > 0) {
      search.pop();
    }
  });

  std::vector<StaircaseIdeal> out;
  for (const auto &group : per_prefix) {
    for (const auto &keys : group) {
      StaircaseIdeal ideal;
      ideal.dim = r;
      ideal.punctual = punctual;
      for (const auto k : keys) {
        ideal.diagram.insert(root.decode(k));
      }
      out.push_back(std::move(ideal));
    }
  }
  return out;
}

MultiPartition ideal_to_partition(const StaircaseIdeal &ideal)
{
  if (ideal.dim < 2) {
    throw InvalidArgument("partitions need r >= 2 (got " + std::to_string(ideal.dim) + ")");
  }
  MultiPartition p;
  p.dim = ideal.dim;
  p.punctual = ideal.punctual;
  for (const auto &box : ideal.diagram) {
    MultiIndex column{std::vector<std::uint32_t>(box.begin(), box.end() - 1)};
    if (p.entries.contains(column)) {
      continue;
    }
    Exponent probe = box;
    probe.back() = 0;
    std::uint32_t height = 0;
    while (ideal.diagram.contains(probe)) {
      ++height;
      probe.back() = height;
    }
    if (height > 0) {
      p.entries.emplace(std::move(column), height);
      p.weight += height;
    }
  }
  return p;
}

StaircaseIdeal partition_to_ideal(const MultiPartition &p)
{
  StaircaseIdeal ideal;
  ideal.dim = p.dim;
  ideal.punctual = p.punctual;
  for (const auto &[index, value] : p.entries) {
    Exponent box(index.coords.begin(), index.coords.end());
    box.push_back(0);
    for (std::uint64_t h = 0; h < value; ++h) {
      box.back() = static_cast<std::uint32_t>(h);
      ideal.diagram.insert(box);
    }
  }
  return ideal;
}

std::vector<Exponent> minimal_generators(const StaircaseIdeal &ideal)
{
  const auto r = static_cast<std::size_t>(ideal.dim);
  std::set<Exponent> candidates;
  if (ideal.punctual) {
    for (std::size_t i = 0; i + 1 < r; ++i) {
      Exponent e(r, 0);
      e[i] = 1;
      candidates.insert(e);
    }
  } else {
    candidates.insert(Exponent(r, 0));
  }
  for (const auto &box : ideal.diagram) {
    for (std::size_t axis = 0; axis < r; ++axis) {
      Exponent e = box;
      ++e[axis];
      candidates.insert(std::move(e));
    }
  }
  // m is a minimal generator iff m is in I and each m / z_i is not.
  std::vector<Exponent> out;
  for (const auto &m : candidates) {
    if (ideal.diagram.contains(m)) {
      continue;
    }
    bool minimal = true;
    for (std::size_t axis = 0; axis < r && minimal; ++axis) {
      if (m[axis] == 0) {
        continue;
      }
      Exponent below = m;
      --below[axis];
      const bool below_in_ideal =
          !ideal.diagram.contains(below) && (!ideal.punctual || in_punctual_region(below));
      minimal = !below_in_ideal;
    }
    if (minimal) {
      out.push_back(m);
    }
  }
  return out;
}

}  // namespace mdpart
