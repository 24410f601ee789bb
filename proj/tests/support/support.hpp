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

#ifndef MDPART_TESTS_SUPPORT_HPP
#define MDPART_TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "mdpart/rational.hpp"
#include "mdpart/series.hpp"

namespace testing_support {

inline mdpart::Series ints(std::initializer_list<long> values)
{
  std::vector<mdpart::Rational> c;
  for (const long v : values) {
    c.emplace_back(v);
  }
  return mdpart::Series(std::move(c));
}

inline mdpart::Series ints(const std::vector<std::int64_t> &values)
{
  std::vector<mdpart::Rational> c;
  for (const auto v : values) {
    c.emplace_back(static_cast<long>(v));
  }
  return mdpart::Series(std::move(c));
}

// Random series with small rational coefficients and a chosen constant term.
inline mdpart::Series random_series(std::mt19937 &rng, std::size_t order, const mdpart::Rational &constant)
{
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<unsigned long> den(1, 6);
  std::vector<mdpart::Rational> c(order + 1);
  c[0] = constant;
  for (std::size_t i = 1; i <= order; ++i) {
    c[i] = mdpart::make_rational(num(rng), den(rng));
  }
  return mdpart::Series(std::move(c));
}

}  // namespace testing_support

#endif  // MDPART_TESTS_SUPPORT_HPP
