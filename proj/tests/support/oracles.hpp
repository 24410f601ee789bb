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

// Brute-force reference implementations used only by the tests. They share
// no code with the library's search, recursion or series machinery.

#ifndef MDPART_TESTS_ORACLES_HPP
#define MDPART_TESTS_ORACLES_HPP

#include <cstdint>
#include <set>
#include <vector>

namespace oracle {

using Box = std::vector<int>;
using Diagram = std::set<Box>;

inline bool in_region(const Box &b, bool punctual)
{
  if (!punctual) {
    return true;
  }
  for (std::size_t i = 0; i + 1 < b.size(); ++i) {
    if (b[i] != 0) {
      return true;
    }
  }
  return false;
}

// Level-by-level growth of downward-closed sets, deduplicated by value.
// levels[m] holds every diagram of size m.
inline std::vector<std::set<Diagram>> order_ideals(int r, int n_max, bool punctual)
{
  std::vector<std::set<Diagram>> levels(static_cast<std::size_t>(n_max) + 1);
  levels[0].insert(Diagram{});
  for (int m = 0; m < n_max; ++m) {
    for (const auto &d : levels[static_cast<std::size_t>(m)]) {
      std::set<Box> frontier;
      if (punctual) {
        for (int i = 0; i + 1 < r; ++i) {
          Box e(static_cast<std::size_t>(r), 0);
          e[static_cast<std::size_t>(i)] = 1;
          frontier.insert(e);
        }
      } else {
        frontier.insert(Box(static_cast<std::size_t>(r), 0));
      }
      for (const auto &b : d) {
        for (int i = 0; i < r; ++i) {
          Box c = b;
          ++c[static_cast<std::size_t>(i)];
          frontier.insert(c);
        }
      }
      for (const auto &c : frontier) {
        if (d.count(c) != 0 || !in_region(c, punctual)) {
          continue;
        }
        bool ok = true;
        for (int i = 0; i < r && ok; ++i) {
          if (c[static_cast<std::size_t>(i)] == 0) {
            continue;
          }
          Box p = c;
          --p[static_cast<std::size_t>(i)];
          if (in_region(p, punctual) && d.count(p) == 0) {
            ok = false;
          }
        }
        if (ok) {
          Diagram next = d;
          next.insert(c);
          levels[static_cast<std::size_t>(m) + 1].insert(std::move(next));
        }
      }
    }
  }
  return levels;
}

inline std::vector<std::int64_t> order_ideal_counts(int r, int n_max, bool punctual)
{
  std::vector<std::int64_t> out;
  for (const auto &level : order_ideals(r, n_max, punctual)) {
    out.push_back(static_cast<std::int64_t>(level.size()));
  }
  return out;
}

// Every k x l array with entries in [0, cap], filtered for monotonicity by an
// odometer. With punctual set the origin cell is excluded from the array.
inline std::vector<std::int64_t> boxed_counts(int k, int l, int cap, bool punctual)
{
  const int cells = k * l;
  std::vector<std::int64_t> counts(static_cast<std::size_t>(cells * cap) + 1, 0);
  std::vector<int> a(static_cast<std::size_t>(cells), 0);
  auto at = [&](int i, int j) { return a[static_cast<std::size_t>(i * l + j)]; };
  while (true) {
    bool ok = true;
    if (punctual && a[0] != 0) {
      ok = false;
    }
    for (int i = 0; i < k && ok; ++i) {
      for (int j = 0; j < l && ok; ++j) {
        if (punctual && i == 0 && j == 0) {
          continue;
        }
        if (i > 0 && !(punctual && i == 1 && j == 0) && at(i, j) > at(i - 1, j)) {
          ok = false;
        }
        if (j > 0 && !(punctual && i == 0 && j == 1) && at(i, j) > at(i, j - 1)) {
          ok = false;
        }
      }
    }
    if (ok) {
      int w = 0;
      for (const int x : a) {
        w += x;
      }
      ++counts[static_cast<std::size_t>(w)];
    }
    int pos = 0;
    while (pos < cells && a[static_cast<std::size_t>(pos)] == cap) {
      a[static_cast<std::size_t>(pos)] = 0;
      ++pos;
    }
    if (pos == cells) {
      break;
    }
    ++a[static_cast<std::size_t>(pos)];
  }
  return counts;
}

// prod_{m>=1} (1 - q^m)^(-e(m)) through q^order with machine integers, by
// repeated multiplication with geometric series (or (1 - q^m) factors for
// negative exponents).
template <typename Exponent>
std::vector<std::int64_t> euler_product(int order, Exponent e)
{
  std::vector<std::int64_t> f(static_cast<std::size_t>(order) + 1, 0);
  f[0] = 1;
  for (int m = 1; m <= order; ++m) {
    const std::int64_t times = e(m);
    for (std::int64_t t = 0; t < (times < 0 ? -times : times); ++t) {
      if (times > 0) {
        for (int i = m; i <= order; ++i) {
          f[static_cast<std::size_t>(i)] += f[static_cast<std::size_t>(i - m)];
        }
      } else {
        for (int i = order; i >= m; --i) {
          f[static_cast<std::size_t>(i)] -= f[static_cast<std::size_t>(i - m)];
        }
      }
    }
  }
  return f;
}

}  // namespace oracle

#endif  // MDPART_TESTS_ORACLES_HPP
