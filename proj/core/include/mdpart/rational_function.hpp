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

#ifndef MDPART_RATIONAL_FUNCTION_HPP
#define MDPART_RATIONAL_FUNCTION_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mdpart/rational.hpp"
#include "mdpart/series.hpp"

namespace mdpart {

// Dense univariate polynomial in q. Trailing zero coefficients are always
// trimmed, so the zero polynomial has no coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial constant(const Rational &c);

  std::int64_t degree() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of q^i; zero past the degree.
  Rational coeff(std::size_t i) const;
  const std::vector<Rational> &coefficients() const { return coeffs_; }
  const Rational &leading() const { return coeffs_.back(); }

  /// Lowest power of q with a nonzero coefficient; -1 for zero.
  std::int64_t valuation() const;

  /// q^deg * p(1/q).
  Polynomial reversed() const;

  friend bool operator==(const Polynomial &, const Polynomial &) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

Polynomial operator+(const Polynomial &a, const Polynomial &b);
Polynomial operator-(const Polynomial &a, const Polynomial &b);
Polynomial operator*(const Polynomial &a, const Polynomial &b);
Polynomial operator*(const Rational &c, const Polynomial &a);

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};
DivMod divmod(const Polynomial &a, const Polynomial &b);

/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial &a, const Polynomial &b);

std::string to_string(const Polynomial &p);

// numerator / denominator in lowest terms, denominator constant term 1.
struct RationalFunction {
  Polynomial numerator;
  Polynomial denominator;

  /// Taylor expansion through the given order.
  Series expand(std::size_t order) const;

  friend bool operator==(const RationalFunction &, const RationalFunction &) = default;
};

/// Cancels the gcd and scales the denominator to constant term 1, or to
/// leading coefficient 1 when it vanishes at q = 0.
RationalFunction normalized(const Polynomial &num, const Polynomial &den);

std::string to_string(const RationalFunction &f);

/// Finds p/q with deg p <= max_num_deg, deg q <= max_den_deg whose expansion
/// agrees with every stored coefficient of the series. Lower total degree
/// wins. Throws InsufficientOrder when max_num_deg + max_den_deg + 1 exceeds
/// the series order, NoMatch when no candidate fits.
RationalFunction rational_reconstruct(const Series &series, std::size_t max_num_deg,
                                      std::size_t max_den_deg);

struct SymmetryReport {
  bool symmetric = false;
  /// k with f(1/q) = q^k f(q), when such a k exists.
  std::optional<std::int64_t> defect_power;

  friend bool operator==(const SymmetryReport &, const SymmetryReport &) = default;
};

/// Exact test of f(1/q) = q^k f(q) by cross-multiplying reversed
/// polynomials. f must be in lowest terms.
SymmetryReport check_q_inversion_symmetry(const RationalFunction &f);

}  // namespace mdpart

#endif  // MDPART_RATIONAL_FUNCTION_HPP
