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

#include <doctest.h>

#include <set>
#include <vector>

#include "mdpart/error.hpp"
#include "mdpart/staircase.hpp"
#include "oracles.hpp"

using mdpart::BigInt;
using mdpart::Exponent;
using mdpart::MultiIndex;
using mdpart::MultiPartition;
using mdpart::StaircaseIdeal;

namespace {

StaircaseIdeal ideal(int r, bool punctual, std::set<Exponent> diagram)
{
  return StaircaseIdeal{r, punctual, std::move(diagram)};
}

std::vector<BigInt> big(const std::vector<std::int64_t> &values)
{
  std::vector<BigInt> out;
  for (const auto v : values) {
    out.emplace_back(static_cast<long>(v));
  }
  return out;
}

}  // namespace

TEST_CASE("enumeration examples")
{
  for (int n = 0; n <= 6; ++n) {
    const auto line = mdpart::enumerate_ideals(1, n, false);
    REQUIRE(line.size() == 1);
    std::set<Exponent> expected;
    for (std::uint32_t i = 0; i < static_cast<std::uint32_t>(n); ++i) {
      expected.insert({i});
    }
    CHECK(line[0].diagram == expected);
  }
  CHECK(mdpart::enumerate_ideals(2, 3, false).size() == 3);
  CHECK(mdpart::enumerate_ideals(3, 2, true).size() == 5);
  CHECK(mdpart::oracle_count(3, 0, false) == 1);
  CHECK(mdpart::oracle_count(3, 4, false) == 13);
  CHECK(mdpart::oracle_count(4, 2, true) == 9);
}

TEST_CASE("argument errors")
{
  CHECK_THROWS_AS(mdpart::enumerate_ideals(0, 2, false), mdpart::InvalidArgument);
  CHECK_THROWS_AS(mdpart::enumerate_ideals(1, 2, true), mdpart::InvalidArgument);
  CHECK_THROWS_AS(mdpart::oracle_count(3, -1, false), mdpart::InvalidArgument);
}

TEST_CASE("enumerated diagrams match the order-ideal oracle exactly")
{
  for (int r = 1; r <= 4; ++r) {
    for (const bool punctual : {false, true}) {
      if (punctual && r < 2) {
        continue;
      }
      const int n_max = r <= 2 ? 8 : (r == 3 ? 6 : 5);
      const auto levels = oracle::order_ideals(r, n_max, punctual);
      for (int n = 0; n <= n_max; ++n) {
        std::set<oracle::Diagram> ours;
        for (const auto &I : mdpart::enumerate_ideals(r, n, punctual)) {
          CHECK(mdpart::is_staircase(I));
          CHECK(I.colength() == static_cast<std::size_t>(n));
          oracle::Diagram d;
          for (const auto &e : I.diagram) {
            d.insert(oracle::Box(e.begin(), e.end()));
          }
          ours.insert(d);
        }
        CHECK(ours == levels[static_cast<std::size_t>(n)]);
      }
    }
  }
}

TEST_CASE("DFS counts match frozen oracle tables")
{
  CHECK(mdpart::oracle_counts(2, 20, false) ==
        big({1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176, 231, 297, 385, 490, 627}));
  CHECK(mdpart::oracle_counts(3, 12, false) == big({1, 1, 3, 6, 13, 24, 48, 86, 160, 282, 500, 859, 1479}));
  CHECK(mdpart::oracle_counts(3, 12, true) == big({1, 2, 5, 11, 24, 48, 96, 182, 342, 624, 1124, 1983, 3462}));
  CHECK(mdpart::oracle_counts(4, 9, false) == big({1, 1, 4, 10, 26, 59, 140, 307, 684, 1464}));
  CHECK(mdpart::oracle_counts(4, 7, true) == big({1, 3, 9, 25, 66, 165, 402, 943}));
}

TEST_CASE("parallel enumeration is deterministic")
{
  CHECK(mdpart::enumerate_ideals(3, 7, true, 1) == mdpart::enumerate_ideals(3, 7, true, 6));
  CHECK(mdpart::oracle_counts(4, 7, false, 1) == mdpart::oracle_counts(4, 7, false, 8));
}

TEST_CASE("punctual diagrams avoid the z_r axis")
{
  for (const auto &I : mdpart::enumerate_ideals(3, 5, true)) {
    for (const auto &e : I.diagram) {
      CHECK(mdpart::in_punctual_region(e));
    }
  }
}

TEST_CASE("ideal to partition")
{
  const MultiPartition single = mdpart::ideal_to_partition(ideal(2, false, {{0, 0}}));
  CHECK(single.entries == std::map<MultiIndex, std::uint64_t>{{MultiIndex{{0}}, 1}});
  CHECK(single.weight == 1);

  const MultiPartition two = mdpart::ideal_to_partition(ideal(2, false, {{0, 0}, {1, 0}}));
  CHECK(two.entries == std::map<MultiIndex, std::uint64_t>{{MultiIndex{{0}}, 1}, {MultiIndex{{1}}, 1}});

  const MultiPartition empty = mdpart::ideal_to_partition(ideal(3, false, {}));
  CHECK(empty.entries.empty());
  CHECK(empty.weight == 0);
}

TEST_CASE("partition to ideal")
{
  MultiPartition p;
  p.dim = 2;
  CHECK(mdpart::partition_to_ideal(p).diagram.empty());
  p.entries[MultiIndex{{0}}] = 2;
  p.weight = 2;
  CHECK(mdpart::partition_to_ideal(p).diagram == std::set<Exponent>{{0, 0}, {0, 1}});
}

TEST_CASE("the correspondence is a bijection")
{
  for (int r = 2; r <= 4; ++r) {
    for (const bool punctual : {false, true}) {
      for (int n = 0; n <= 8; ++n) {
        std::set<std::map<MultiIndex, std::uint64_t>> images;
        const auto ideals = mdpart::enumerate_ideals(r, n, punctual);
        for (const auto &I : ideals) {
          const MultiPartition p = mdpart::ideal_to_partition(I);
          CHECK(mdpart::is_valid_partition(p));
          CHECK(p.punctual == punctual);
          CHECK(mdpart::partition_to_ideal(p) == I);
          images.insert(p.entries);
        }
        CHECK(images.size() == ideals.size());
      }
    }
  }
  for (const auto &p : mdpart::enumerate_partitions(3, 4, false)) {
    CHECK(mdpart::ideal_to_partition(mdpart::partition_to_ideal(p)) == p);
  }
}

TEST_CASE("minimal generators")
{
  CHECK(mdpart::minimal_generators(ideal(2, false, {})) == std::vector<Exponent>{{0, 0}});
  CHECK(mdpart::minimal_generators(ideal(2, false, {{0, 0}, {1, 0}})) == std::vector<Exponent>{{0, 1}, {2, 0}});
  CHECK(mdpart::minimal_generators(ideal(3, false, {{0, 0, 0}})) ==
        std::vector<Exponent>{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
  // Inside (z_1, z_2), removing z_1 leaves the ideal (z_2, z_1 z_3, z_1^2).
  CHECK(mdpart::minimal_generators(ideal(3, true, {{1, 0, 0}})) ==
        std::vector<Exponent>{{0, 1, 0}, {1, 0, 1}, {2, 0, 0}});
}
