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

#include "mdpart/rational_function.hpp"

#include <algorithm>
#include <utility>

#include "mdpart/error.hpp"

namespace mdpart {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::constant(const Rational &c) { return Polynomial(std::vector<Rational>{c}); }

void Polynomial::trim()
{
  while (!coeffs_.empty() && coeffs_.back() == 0) {
    coeffs_.pop_back();
  }
}

Rational Polynomial::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

std::int64_t Polynomial::valuation() const
{
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) {
      return static_cast<std::int64_t>(i);
    }
  }
  return -1;
}

Polynomial Polynomial::reversed() const
{
  return Polynomial(std::vector<Rational>(coeffs_.rbegin(), coeffs_.rend()));
}

Polynomial operator+(const Polynomial &a, const Polynomial &b)
{
  std::vector<Rational> out(std::max(a.coefficients().size(), b.coefficients().size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = a.coeff(i) + b.coeff(i);
  }
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial &a, const Polynomial &b) { return a + Rational(-1) * b; }

Polynomial operator*(const Polynomial &a, const Polynomial &b)
{
  if (a.is_zero() || b.is_zero()) {
    return {};
  }
  const auto &ac = a.coefficients();
  const auto &bc = b.coefficients();
  std::vector<Rational> out(ac.size() + bc.size() - 1);
  for (std::size_t i = 0; i < ac.size(); ++i) {
    for (std::size_t j = 0; j < bc.size(); ++j) {
      out[i + j] += ac[i] * bc[j];
    }
  }
  return Polynomial(std::move(out));
}

Polynomial operator*(const Rational &c, const Polynomial &a)
{
  std::vector<Rational> out(a.coefficients());
  for (auto &x : out) {
    x *= c;
  }
  return Polynomial(std::move(out));
}

DivMod divmod(const Polynomial &a, const Polynomial &b)
{
  if (b.is_zero()) {
    throw InvalidArgument("polynomial division by zero");
  }
  std::vector<Rational> rem(a.coefficients());
  const auto db = static_cast<std::size_t>(b.degree());
  if (rem.size() <= db) {
    return {Polynomial(), a};
  }
  std::vector<Rational> quot(rem.size() - db);
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Rational c = rem[k + db] / b.leading();
    quot[k] = c;
    if (c == 0) {
      continue;
    }
    for (std::size_t j = 0; j <= db; ++j) {
      rem[k + j] -= c * b.coefficients()[j];
    }
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(const Polynomial &a, const Polynomial &b)
{
  Polynomial x = a;
  Polynomial y = b;
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) {
    return x;
  }
  return Rational(1 / x.leading()) * x;
}

std::string to_string(const Polynomial &p)
{
  if (p.is_zero()) {
    return "0";
  }
  std::string out;
  const auto &c = p.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) {
      continue;
    }
    Rational mag = abs(c[i]);
    const bool negative = c[i] < 0;
    if (out.empty()) {
      out += negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    if (i == 0) {
      out += to_string(mag);
      continue;
    }
    if (mag != 1) {
      out += to_string(mag) + "*";
    }
    out += "q";
    if (i > 1) {
      out += "^" + std::to_string(i);
    }
  }
  return out;
}

Series RationalFunction::expand(std::size_t order) const
{
  std::vector<Rational> num(order + 1);
  std::vector<Rational> den(order + 1);
  for (std::size_t i = 0; i <= order; ++i) {
    num[i] = numerator.coeff(i);
    den[i] = denominator.coeff(i);
  }
  return Series(std::move(num)) * inverse(Series(std::move(den)));
}

RationalFunction normalized(const Polynomial &num, const Polynomial &den)
{
  if (den.is_zero()) {
    throw InvalidArgument("denominator must be nonzero");
  }
  const Polynomial g = gcd(num, den);
  Polynomial p = num;
  Polynomial q = den;
  if (!g.is_zero() && g.degree() > 0) {
    p = divmod(num, g).quotient;
    q = divmod(den, g).quotient;
  }
  const Rational scale = 1 / (q.coeff(0) != 0 ? q.coeff(0) : q.leading());
  return {scale * p, scale * q};
}

std::string to_string(const RationalFunction &f)
{
  if (f.denominator == Polynomial::constant(1)) {
    return to_string(f.numerator);
  }
  return "(" + to_string(f.numerator) + ")/(" + to_string(f.denominator) + ")";
}

namespace {

using Row = std::vector<BigInt>;

void remove_content(Row &row)
{
  BigInt g = 0;
  for (const auto &x : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  }
  if (g > 1) {
    for (auto &x : row) {
      mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    }
  }
}

// Solves the augmented system [A | b] with integer-preserving elimination.
// Free variables are set to zero. Empty optional when inconsistent.
std::optional<std::vector<Rational>> solve_augmented(const std::vector<std::vector<Rational>> &rows,
                                                     std::size_t unknowns)
{
  std::vector<Row> m;
  m.reserve(rows.size());
  for (const auto &r : rows) {
    BigInt l = 1;
    for (const auto &x : r) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
    }
    Row ir;
    ir.reserve(r.size());
    for (const auto &x : r) {
      ir.push_back(x.get_num() * (l / x.get_den()));
    }
    remove_content(ir);
    m.push_back(std::move(ir));
  }

  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < unknowns && rank < m.size(); ++col) {
    std::size_t sel = rank;
    while (sel < m.size() && m[sel][col] == 0) {
      ++sel;
    }
    if (sel == m.size()) {
      continue;
    }
    std::swap(m[rank], m[sel]);
    const BigInt p = m[rank][col];
    for (std::size_t i = rank + 1; i < m.size(); ++i) {
      if (m[i][col] == 0) {
        continue;
      }
      const BigInt a = m[i][col];
      for (std::size_t j = col; j <= unknowns; ++j) {
        m[i][j] = p * m[i][j] - a * m[rank][j];
      }
      remove_content(m[i]);
    }
    pivot_cols.push_back(col);
    ++rank;
  }
  for (std::size_t i = rank; i < m.size(); ++i) {
    if (m[i][unknowns] != 0) {
      return std::nullopt;
    }
  }

  std::vector<Rational> x(unknowns);
  for (std::size_t k = rank; k-- > 0;) {
    const auto col = pivot_cols[k];
    Rational acc(m[k][unknowns]);
    for (std::size_t j = col + 1; j < unknowns; ++j) {
      if (m[k][j] != 0) {
        acc -= Rational(m[k][j]) * x[j];
      }
    }
    x[col] = acc / Rational(m[k][col]);
  }
  return x;
}

std::optional<RationalFunction> try_pade(const Series &a, std::size_t dn, std::size_t dd)
{
  const auto n = a.order();
  auto coeff = [&](std::int64_t i) -> Rational { return i < 0 ? Rational(0) : a[static_cast<std::size_t>(i)]; };

  std::vector<Rational> den(dd + 1);
  den[0] = 1;
  if (dd > 0) {
    std::vector<std::vector<Rational>> rows;
    for (std::size_t m = dn + 1; m <= n; ++m) {
      std::vector<Rational> row(dd + 1);
      for (std::size_t j = 1; j <= dd; ++j) {
        row[j - 1] = coeff(static_cast<std::int64_t>(m) - static_cast<std::int64_t>(j));
      }
      row[dd] = -a[m];
      rows.push_back(std::move(row));
    }
    auto sol = solve_augmented(rows, dd);
    if (!sol) {
      return std::nullopt;
    }
    for (std::size_t j = 1; j <= dd; ++j) {
      den[j] = (*sol)[j - 1];
    }
  } else {
    for (std::size_t m = dn + 1; m <= n; ++m) {
      if (a[m] != 0) {
        return std::nullopt;
      }
    }
  }

  std::vector<Rational> num(dn + 1);
  for (std::size_t i = 0; i <= dn; ++i) {
    for (std::size_t j = 0; j <= std::min(i, dd); ++j) {
      num[i] += den[j] * a[i - j];
    }
  }
  return normalized(Polynomial(std::move(num)), Polynomial(std::move(den)));
}

}  // namespace

RationalFunction rational_reconstruct(const Series &series, std::size_t max_num_deg, std::size_t max_den_deg)
{
  if (max_num_deg + max_den_deg + 1 > series.order()) {
    throw InsufficientOrder("degree bounds (" + std::to_string(max_num_deg) + ", " + std::to_string(max_den_deg) +
                            ") need order >= " + std::to_string(max_num_deg + max_den_deg + 1) + ", series has order " +
                            std::to_string(series.order()));
  }
  for (std::size_t total = 0; total <= max_num_deg + max_den_deg; ++total) {
    for (std::size_t dd = 0; dd <= std::min(total, max_den_deg); ++dd) {
      const auto dn = total - dd;
      if (dn > max_num_deg) {
        continue;
      }
      if (auto f = try_pade(series, dn, dd)) {
        return *f;
      }
    }
  }
  throw NoMatch("no rational function with numerator degree <= " + std::to_string(max_num_deg) +
                " and denominator degree <= " + std::to_string(max_den_deg) + " matches the series");
}

SymmetryReport check_q_inversion_symmetry(const RationalFunction &f)
{
  if (f.numerator.is_zero()) {
    return {true, 0};
  }
  // f(1/q) = q^(dQ - dP) P~(q) / Q~(q), with ~ the coefficient reversal.
  const Polynomial lhs = f.numerator.reversed() * f.denominator;
  const Polynomial rhs = f.numerator * f.denominator.reversed();
  const auto vl = lhs.valuation();
  const auto vr = rhs.valuation();
  auto strip = [](const Polynomial &p, std::int64_t v) {
    const auto &c = p.coefficients();
    return Polynomial(std::vector<Rational>(c.begin() + v, c.end()));
  };
  if (strip(lhs, vl) != strip(rhs, vr)) {
    return {false, std::nullopt};
  }
  const std::int64_t k = f.denominator.degree() - f.numerator.degree() + vl - vr;
  return {k == 0, k};
}

}  // namespace mdpart
