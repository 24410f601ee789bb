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

#ifndef MDPART_SERIES_HPP
#define MDPART_SERIES_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "mdpart/rational.hpp"

namespace mdpart {

// Formal power series in q truncated at an explicit order N: the
// coefficients of q^0..q^N are stored, everything above is unknown.
//
// Binary operations return a series whose order is the minimum of the
// operands' orders. Nothing ever promotes the order silently.
class Series {
 public:
  /// The zero series of the given order.
  explicit Series(std::size_t order);

  /// Takes coefficients of q^0..q^N; the vector must be nonempty.
  explicit Series(std::vector<Rational> coeffs);

  static Series from_integers(const std::vector<BigInt> &coeffs);
  static Series constant(const Rational &c, std::size_t order);
  /// c * q^k truncated at order (zero when k > order).
  static Series monomial(const Rational &c, std::size_t k, std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  const Rational &operator[](std::size_t i) const { return coeffs_[i]; }
  std::span<const Rational> coefficients() const { return coeffs_; }

  Series truncated(std::size_t order) const;
  bool is_zero() const;

  friend bool operator==(const Series &, const Series &) = default;

 private:
  std::vector<Rational> coeffs_;
};

Series operator+(const Series &a, const Series &b);
Series operator-(const Series &a, const Series &b);
Series operator-(const Series &a);
Series operator*(const Series &a, const Series &b);
Series operator*(const Rational &c, const Series &a);

/// Multiplicative inverse; throws NotInvertible for a zero constant term.
Series inverse(const Series &a);

/// a^e for any integer e; negative e requires an invertible series.
Series power(const Series &a, std::int64_t e);

/// a(q^k); throws InvalidArgument for k < 1.
Series substitute_power(const Series &a, std::int64_t k);

/// Formal exp; the constant term must be 0.
Series formal_exp(const Series &a);

/// Formal log; the constant term must be 1.
Series formal_log(const Series &a);

/// Plethystic exponential exp(sum_{n>=1} f(q^n)/n); f(0) must be 0.
Series pexp(const Series &f);

/// Inverse of pexp. g(0) must be 1. Computed as
/// sum_n mu(n)/n * (log g)(q^n) with mu the Moebius function.
Series plog(const Series &g);

/// Moebius function for n >= 1.
int moebius(std::int64_t n);

}  // namespace mdpart

#endif  // MDPART_SERIES_HPP
