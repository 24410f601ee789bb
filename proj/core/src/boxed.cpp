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

#include "mdpart/boxed.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "mdpart/error.hpp"

namespace mdpart {

namespace {

void require_box(const BoxSpec &box)
{
  if (box.rows < 1 || box.columns < 1 || box.entry_cap < 0) {
    throw InvalidArgument("box needs k >= 1, l >= 1, n >= 0 (got k=" + std::to_string(box.rows) +
                          ", l=" + std::to_string(box.columns) + ", n=" + std::to_string(box.entry_cap) + ")");
  }
}

Series shifted(const Series &s, std::size_t by)
{
  return Series::monomial(1, by, s.order()) * s;
}

// Row-by-row enumeration of k x l arrays, weakly decreasing along rows and
// columns, entries <= cap, counted by weight up to `order`. In punctual mode
// the origin cell is deleted; it is modelled as holding the cap, which
// constrains nothing since every entry is <= cap anyway, and is not weighed.
class BoxWalker {
 public:
  BoxWalker(const BoxSpec &box, std::size_t order, bool punctual)
      : k_(box.rows),
        l_(box.columns),
        cap_(box.entry_cap),
        order_(static_cast<std::int64_t>(order)),
        punctual_(punctual),
        grid_(static_cast<std::size_t>(box.rows) * static_cast<std::size_t>(box.columns), 0),
        length_(static_cast<std::size_t>(box.rows), 0),
        counts_(order + 1, 0)
  {
  }

  std::vector<std::uint64_t> run()
  {
    cell(0, 0, 0);
    return counts_;
  }

 private:
  int &at(int i, int j) { return grid_[static_cast<std::size_t>(i) * static_cast<std::size_t>(l_) + static_cast<std::size_t>(j)]; }

  void leaf(std::int64_t used) { ++counts_[static_cast<std::size_t>(used)]; }

  // Row i ends after j nonzero cells.
  void end_row(int i, int j, std::int64_t used)
  {
    length_[static_cast<std::size_t>(i)] = j;
    if (j == 0 || i + 1 == k_) {
      leaf(used);
      return;
    }
    cell(i + 1, 0, used);
  }

  void cell(int i, int j, std::int64_t used)
  {
    const int row_limit = i == 0 ? l_ : length_[static_cast<std::size_t>(i - 1)];
    if (j >= row_limit) {
      end_row(i, j, used);
      return;
    }
    if (punctual_ && i == 0 && j == 0) {
      at(0, 0) = cap_;
      cell(0, 1, used);
      return;
    }
    std::int64_t limit = std::min<std::int64_t>(cap_, order_ - used);
    if (i > 0) {
      limit = std::min<std::int64_t>(limit, at(i - 1, j));
    }
    if (j > 0) {
      limit = std::min<std::int64_t>(limit, at(i, j - 1));
    }
    end_row(i, j, used);
    for (std::int64_t v = 1; v <= limit; ++v) {
      at(i, j) = static_cast<int>(v);
      cell(i, j + 1, used + v);
    }
    at(i, j) = 0;
  }

  int k_;
  int l_;
  int cap_;
  std::int64_t order_;
  bool punctual_;
  std::vector<int> grid_;
  std::vector<int> length_;
  std::vector<std::uint64_t> counts_;
};

Series to_series(const std::vector<std::uint64_t> &counts)
{
  std::vector<Rational> c;
  c.reserve(counts.size());
  for (const auto x : counts) {
    c.emplace_back(BigInt(std::to_string(x)));
  }
  return Series(std::move(c));
}

}  // namespace

Series pochhammer(int i, std::size_t order)
{
  if (i < 0) {
    throw InvalidArgument("q-Pochhammer index must be >= 0 (got " + std::to_string(i) + ")");
  }
  Series out = Series::constant(1, order);
  for (int j = 1; j <= i; ++j) {
    out = out * (Series::constant(1, order) - Series::monomial(1, static_cast<std::size_t>(j), order));
  }
  return out;
}

Series pi_closed(const BoxSpec &box, std::size_t order)
{
  require_box(box);
  const int k = box.rows;
  const int l = box.columns;
  const int n = box.entry_cap;
  Series num = Series::constant(1, order);
  Series den = Series::constant(1, order);
  for (int i = 1; i <= k - 1; ++i) {
    num = num * pochhammer(i, order);
  }
  for (int i = n + l; i <= n + l + k - 1; ++i) {
    num = num * pochhammer(i, order);
  }
  for (int i = l; i <= l + k - 1; ++i) {
    den = den * pochhammer(i, order);
  }
  for (int i = n; i <= n + k - 1; ++i) {
    den = den * pochhammer(i, order);
  }
  Series out = num * inverse(den);
  for (std::size_t m = 0; m <= order; ++m) {
    if (!is_integer(out[m]) || out[m] < 0) {
      throw InvariantViolation("boxed product formula produced coefficient " + to_string(out[m]) + " at q^" +
                               std::to_string(m));
    }
  }
  return out;
}

Series pi_brute(const BoxSpec &box, std::size_t order)
{
  require_box(box);
  return to_series(BoxWalker(box, order, false).run());
}

Series tilde_pi_brute(const BoxSpec &box, std::size_t order)
{
  require_box(box);
  return to_series(BoxWalker(box, order, true).run());
}

Series pi_profile(int columns, const std::vector<int> &profile, std::size_t order)
{
  if (columns < 1) {
    throw InvalidArgument("profile recursion needs l >= 1 (got " + std::to_string(columns) + ")");
  }
  if (profile.empty()) {
    throw InvalidArgument("profile needs at least one row");
  }
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (profile[i] < 0) {
      throw InvalidArgument("profile entries must be >= 0");
    }
    if (i > 0 && profile[i] > profile[i - 1]) {
      throw NonMonotoneProfile("profile must be weakly decreasing (entry " + std::to_string(i) + " is " +
                               std::to_string(profile[i]) + " after " + std::to_string(profile[i - 1]) + ")");
    }
  }

  std::map<std::pair<int, std::vector<int>>, Series> memo;
  auto recurse = [&](auto &self, int l, const std::vector<int> &first) -> Series {
    std::size_t weight = 0;
    for (const auto x : first) {
      weight += static_cast<std::size_t>(x);
    }
    if (l == 1 || weight > order) {
      return Series::monomial(1, weight, order);
    }
    const auto key = std::make_pair(l, first);
    if (const auto it = memo.find(key); it != memo.end()) {
      return it->second;
    }
    // Second column m with m_i <= n_i and m_1 >= ... >= m_k >= 0.
    Series sum(order);
    std::vector<int> next(first.size(), 0);
    auto nest = [&](auto &nest_self, std::size_t idx, int lower) -> void {
      for (int v = lower; v <= first[idx]; ++v) {
        next[idx] = v;
        if (idx == 0) {
          sum = sum + self(self, l - 1, next);
        } else {
          nest_self(nest_self, idx - 1, v);
        }
      }
    };
    nest(nest, first.size() - 1, 0);
    Series out = shifted(sum, weight);
    memo.emplace(key, out);
    return out;
  };
  return recurse(recurse, columns, profile);
}

bool verify_constant_profile(const BoxSpec &box, std::size_t order)
{
  require_box(box);
  const std::vector<int> profile(static_cast<std::size_t>(box.rows), box.entry_cap);
  const Series lhs = pi_profile(box.columns + 1, profile, order);
  const auto kn = static_cast<std::size_t>(box.rows) * static_cast<std::size_t>(box.entry_cap);
  return lhs == shifted(pi_closed(box, order), kn);
}

Series tilde_pi(const BoxSpec &box, std::size_t order)
{
  require_box(box);
  if (box.entry_cap == 0) {
    return Series::constant(1, order);
  }
  const auto n = static_cast<std::size_t>(box.entry_cap);
  const Series diff = pi_closed(box, order + n) - pi_closed({box.rows, box.columns, box.entry_cap - 1}, order + n);
  for (std::size_t m = 0; m < n; ++m) {
    if (diff[m] != 0) {
      throw DivisibilityFailure("pi(n) - pi(n-1) has nonzero coefficient " + to_string(diff[m]) + " at q^" +
                                std::to_string(m) + " below q^" + std::to_string(n));
    }
  }
  std::vector<Rational> out(order + 1);
  for (std::size_t m = 0; m <= order; ++m) {
    out[m] = diff[m + n];
  }
  return Series(std::move(out));
}

bool stabilized_ratio_check(std::size_t order)
{
  const int bound = static_cast<int>(order) + 1;
  const BoxSpec box{bound, bound, bound};
  const Series plain = pi_brute(box, order);
  const Series punctual = tilde_pi_brute(box, order);
  const Series one_minus_q = Series::constant(1, order) - Series::monomial(1, 1, order);
  return punctual * one_minus_q == plain;
}

}  // namespace mdpart
