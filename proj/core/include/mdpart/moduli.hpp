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

#ifndef MDPART_MODULI_HPP
#define MDPART_MODULI_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "mdpart/multipartition.hpp"
#include "mdpart/rational_function.hpp"
#include "mdpart/series.hpp"

namespace mdpart {

// Euler-number data of a fibration X -> S whose fibers are smooth curves
// of genus g, with r = dim X.
struct FibrationData {
  int r = 3;
  int genus = 1;
  std::int64_t chi_x = 0;
  std::int64_t chi_s = 1;
  /// K_X = 0; forces genus 1.
  bool kx_zero = false;

  /// Throws InvalidArgument on r < 2, genus < 0, or kx_zero with genus != 1.
  void validate() const;
};

enum class Verdict { HoldsThroughOrder, FirstMismatch, ReconstructionFailed };

std::string to_string(Verdict v);

struct Mismatch {
  std::size_t n = 0;
  Rational lhs;
  Rational rhs;
};

using ParameterValue = std::variant<std::int64_t, bool>;

struct ConjectureReport {
  /// "pwp" or "euler".
  std::string conjecture;
  std::vector<std::pair<std::string, ParameterValue>> parameters;
  std::size_t order = 0;
  Verdict verdict = Verdict::HoldsThroughOrder;
  std::optional<Mismatch> first_mismatch;
  /// Euler check: the reconstructed reduced partition function.
  std::optional<RationalFunction> rational_function;
  /// Euler check only.
  std::optional<SymmetryReport> symmetry;
  /// Euler check: whether q -> 1/q symmetry is conjectured (K_X = 0).
  bool symmetry_claimed = false;
  /// pwp check: (lhs, rhs) coefficient pairs for n = 0..order.
  std::vector<std::pair<Rational, Rational>> pairs;
  std::string note;
};

/// h_r(q) at s = t = 1: plog of the r-dimensional partition series.
Series h_series(int r, std::size_t order, const CountOptions &options = {});

/// c_r(q) at s = t = 1: plog of the punctual partition series.
Series c_series(int r, std::size_t order, const CountOptions &options = {});

/// sum_n chi(X^[n]) q^n = pexp(chi_X * h_r).
Series hilbert_euler_series(int r, std::int64_t chi_x, std::size_t order, const CountOptions &options = {});

/// punctual series / partition series.
Series punctual_ratio(int r, std::size_t order, const CountOptions &options = {});

/// sum_n chi(M_n) q^n = hilbert series * chi_S * ratio^(2 - 2g).
Series moduli_euler_series(const FibrationData &fd, std::size_t order, const CountOptions &options = {});

/// Moduli series divided by the Hilbert series.
Series reduced_partition_function(const FibrationData &fd, std::size_t order, const CountOptions &options = {});

/// floor(order / 2) - 1, clamped at 0.
std::size_t default_degree_bound(std::size_t order);

/// Reconstructs the reduced partition function as a rational function and
/// tests its q -> 1/q symmetry. A successful reconstruction is evidence
/// through the order, not a proof of rationality. Reconstruction failure is
/// recorded in the report.
ConjectureReport check_conj_euler(const FibrationData &fd, std::size_t order, std::size_t num_deg,
                                  std::size_t den_deg, const CountOptions &options = {});

/// Compares the punctual series with partition series * (1-q)^-(r-2)
/// coefficientwise and reports the first disagreement, if any.
ConjectureReport check_pwp(int r, std::size_t order, const CountOptions &options = {});

}  // namespace mdpart

#endif  // MDPART_MODULI_HPP
