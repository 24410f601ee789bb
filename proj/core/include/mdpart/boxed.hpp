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

#ifndef MDPART_BOXED_HPP
#define MDPART_BOXED_HPP

#include <cstddef>
#include <vector>

#include "mdpart/series.hpp"

namespace mdpart {

// Plane partitions confined to k rows, l columns and entries <= n, and the
// q-series identities relating them to punctual plane partitions. The
// infinite limits k, l, n -> infinity are realized formally: the coefficient
// of q^m stops changing once k, l and n all exceed m.

struct BoxSpec {
  int rows = 1;
  int columns = 1;
  int entry_cap = 0;
};

/// (q)_i = (1-q)(1-q^2)...(1-q^i), with (q)_0 = 1.
Series pochhammer(int i, std::size_t order);

/// Product formula for the boxed generating function pi_{k,l}(n; q),
/// evaluated by exact series division. Throws InvariantViolation if the
/// quotient is not a nonnegative integer series.
Series pi_closed(const BoxSpec &box, std::size_t order);

/// Same generating function by direct enumeration of the boxed arrays.
Series pi_brute(const BoxSpec &box, std::size_t order);

/// pi_l(n_1, ..., n_k; q): plane partitions with at most l columns whose
/// first column is (n_1, ..., n_k), from the column recursion with
/// pi_1(n_1..n_k) = q^(n_1 + ... + n_k). Throws NonMonotoneProfile.
Series pi_profile(int columns, const std::vector<int> &profile, std::size_t order);

/// pi_{l+1}(n, ..., n) == q^(kn) * pi_{k,l}(n) through the order.
bool verify_constant_profile(const BoxSpec &box, std::size_t order);

/// Punctual boxed series q^-n [pi_{k,l}(n) - pi_{k,l}(n-1)]; 1 when n = 0.
/// Throws DivisibilityFailure if the difference is not divisible by q^n.
Series tilde_pi(const BoxSpec &box, std::size_t order);

/// Punctual boxed series by enumerating arrays with the origin cell removed.
Series tilde_pi_brute(const BoxSpec &box, std::size_t order);

/// Checks punctual * (1 - q) == plain for the r = 3 series through the
/// order, both sides enumerated in a box with k = l = n = order + 1.
bool stabilized_ratio_check(std::size_t order);

}  // namespace mdpart

#endif  // MDPART_BOXED_HPP
