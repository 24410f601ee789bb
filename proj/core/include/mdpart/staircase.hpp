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

#ifndef MDPART_STAIRCASE_HPP
#define MDPART_STAIRCASE_HPP

#include <cstddef>
#include <cstdint>
#include <set>
#include <vector>

#include "mdpart/multipartition.hpp"
#include "mdpart/rational.hpp"

namespace mdpart {

/// Exponent vector (i_1, ..., i_r) of the monomial z_1^i_1 ... z_r^i_r.
using Exponent = std::vector<std::uint32_t>;

// A monomial ideal I of C[z_1..z_r], stored as its staircase: the exponents
// of the standard monomials not in I. For the punctual variant the ideal lies
// inside (z_1, ..., z_{r-1}) and the staircase is taken inside that ideal,
// i.e. within the region where (i_1, ..., i_{r-1}) is not all zero.
struct StaircaseIdeal {
  int dim = 1;
  bool punctual = false;
  std::set<Exponent> diagram;

  std::size_t colength() const { return diagram.size(); }

  friend bool operator==(const StaircaseIdeal &, const StaircaseIdeal &) = default;
};

/// True when some of the first r-1 coordinates is nonzero.
bool in_punctual_region(const Exponent &e);

/// Checks arity, region and downward closure within the region.
bool is_staircase(const StaircaseIdeal &ideal);

/// All staircases of size n: the torus-fixed points of Hilb^n(C^r, O), or
/// of the punctual moduli space when `punctual` is set. Produced by a
/// depth-first search that adds boxes in increasing lexicographic order, so
/// every diagram arises from exactly one box sequence. The result is in
/// lexicographic order of those sequences regardless of `threads`.
std::vector<StaircaseIdeal> enumerate_ideals(int r, int n, bool punctual, unsigned threads = 1);

/// Number of staircases of each size 0..n_max, from the same search.
std::vector<BigInt> oracle_counts(int r, int n_max, bool punctual, unsigned threads = 1);

BigInt oracle_count(int r, int n, bool punctual, unsigned threads = 1);

/// Column heights: entry at (i_1..i_{r-1}) is min{ i_r : z^i in I }.
MultiPartition ideal_to_partition(const StaircaseIdeal &ideal);

/// Ideal generated by z_1^i_1 ... z_{r-1}^i_{r-1} z_r^{n_i}; inverse of the above.
StaircaseIdeal partition_to_ideal(const MultiPartition &p);

/// Minimal monomial generators of the ideal, sorted lexicographically.
std::vector<Exponent> minimal_generators(const StaircaseIdeal &ideal);

}  // namespace mdpart

#endif  // MDPART_STAIRCASE_HPP
