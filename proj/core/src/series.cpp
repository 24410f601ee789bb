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

#include "mdpart/series.hpp"

#include <algorithm>
#include <string>

#include "mdpart/error.hpp"

namespace mdpart {

Series::Series(std::size_t order) : coeffs_(order + 1) {}

Series::Series(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
  if (coeffs_.empty()) {
    throw InvalidArgument("a truncated series needs at least one coefficient");
  }
}

Series Series::from_integers(const std::vector<BigInt> &coeffs)
{
  std::vector<Rational> out;
  out.reserve(coeffs.size());
  for (const auto &c : coeffs) {
    out.emplace_back(c);
  }
  return Series(std::move(out));
}

Series Series::constant(const Rational &c, std::size_t order)
{
  Series s(order);
  s.coeffs_[0] = c;
  return s;
}

Series Series::monomial(const Rational &c, std::size_t k, std::size_t order)
{
  Series s(order);
  if (k <= order) {
    s.coeffs_[k] = c;
  }
  return s;
}

Series Series::truncated(std::size_t order) const
{
  if (order > this->order()) {
    throw InvalidArgument("cannot truncate a series of order " + std::to_string(this->order()) +
                          " to the higher order " + std::to_string(order));
  }
  return Series(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

bool Series::is_zero() const
{
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational &c) { return c == 0; });
}

Series operator+(const Series &a, const Series &b)
{
  const auto n = std::min(a.order(), b.order());
  std::vector<Rational> out(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    out[i] = a[i] + b[i];
  }
  return Series(std::move(out));
}

Series operator-(const Series &a, const Series &b)
{
  const auto n = std::min(a.order(), b.order());
  std::vector<Rational> out(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    out[i] = a[i] - b[i];
  }
  return Series(std::move(out));
}

Series operator-(const Series &a)
{
  std::vector<Rational> out(a.order() + 1);
  for (std::size_t i = 0; i <= a.order(); ++i) {
    out[i] = -a[i];
  }
  return Series(std::move(out));
}

Series operator*(const Series &a, const Series &b)
{
  const auto n = std::min(a.order(), b.order());
  std::vector<Rational> out(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    if (a[i] == 0) {
      continue;
    }
    for (std::size_t j = 0; i + j <= n; ++j) {
      if (b[j] != 0) {
        out[i + j] += a[i] * b[j];
      }
    }
  }
  return Series(std::move(out));
}

Series operator*(const Rational &c, const Series &a)
{
  std::vector<Rational> out(a.order() + 1);
  for (std::size_t i = 0; i <= a.order(); ++i) {
    out[i] = c * a[i];
  }
  return Series(std::move(out));
}

Series inverse(const Series &a)
{
  if (a[0] == 0) {
    throw NotInvertible("series with zero constant term has no inverse");
  }
  const auto n = a.order();
  std::vector<Rational> out(n + 1);
  const Rational inv0 = 1 / a[0];
  out[0] = inv0;
  for (std::size_t k = 1; k <= n; ++k) {
    Rational acc = 0;
    for (std::size_t j = 1; j <= k; ++j) {
      if (a[j] != 0) {
        acc += a[j] * out[k - j];
      }
    }
    out[k] = -acc * inv0;
  }
  return Series(std::move(out));
}

Series power(const Series &a, std::int64_t e)
{
  if (e < 0) {
    if (a[0] == 0) {
      throw NotInvertible("negative power of a series with zero constant term");
    }
    return power(inverse(a), -e);
  }
  Series result = Series::constant(1, a.order());
  Series base = a;
  auto k = static_cast<std::uint64_t>(e);
  while (k != 0) {
    if (k & 1U) {
      result = result * base;
    }
    k >>= 1U;
    if (k != 0) {
      base = base * base;
    }
  }
  return result;
}

Series substitute_power(const Series &a, std::int64_t k)
{
  if (k < 1) {
    throw InvalidArgument("substitution q -> q^k needs k >= 1, got " + std::to_string(k));
  }
  const auto step = static_cast<std::size_t>(k);
  std::vector<Rational> out(a.order() + 1);
  for (std::size_t m = 0; m * step <= a.order(); ++m) {
    out[m * step] = a[m];
  }
  return Series(std::move(out));
}

// n g_n = sum_{k=1}^n k a_k g_{n-k}
Series formal_exp(const Series &a)
{
  if (a[0] != 0) {
    throw InvalidConstantTerm("exp needs constant term 0, got " + to_string(a[0]));
  }
  const auto n = a.order();
  std::vector<Rational> g(n + 1);
  g[0] = 1;
  for (std::size_t m = 1; m <= n; ++m) {
    Rational acc = 0;
    for (std::size_t k = 1; k <= m; ++k) {
      if (a[k] != 0) {
        acc += Rational(static_cast<unsigned long>(k)) * a[k] * g[m - k];
      }
    }
    g[m] = acc / Rational(static_cast<unsigned long>(m));
  }
  return Series(std::move(g));
}

// n a_n = n g_n - sum_{k=1}^{n-1} k a_k g_{n-k}
Series formal_log(const Series &g)
{
  if (g[0] != 1) {
    throw InvalidConstantTerm("log needs constant term 1, got " + to_string(g[0]));
  }
  const auto n = g.order();
  std::vector<Rational> a(n + 1);
  for (std::size_t m = 1; m <= n; ++m) {
    Rational acc = Rational(static_cast<unsigned long>(m)) * g[m];
    for (std::size_t k = 1; k < m; ++k) {
      if (a[k] != 0) {
        acc -= Rational(static_cast<unsigned long>(k)) * a[k] * g[m - k];
      }
    }
    a[m] = acc / Rational(static_cast<unsigned long>(m));
  }
  return Series(std::move(a));
}

Series pexp(const Series &f)
{
  if (f[0] != 0) {
    throw InvalidConstantTerm("plethystic exponential needs constant term 0, got " + to_string(f[0]));
  }
  const auto n = f.order();
  std::vector<Rational> sum(n + 1);
  for (std::size_t d = 1; d <= n; ++d) {
    const Rational weight(1UL, static_cast<unsigned long>(d));
    for (std::size_t m = 1; m * d <= n; ++m) {
      if (f[m] != 0) {
        sum[m * d] += weight * f[m];
      }
    }
  }
  return formal_exp(Series(std::move(sum)));
}

Series plog(const Series &g)
{
  if (g[0] != 1) {
    throw InvalidConstantTerm("plethystic logarithm needs constant term 1, got " + to_string(g[0]));
  }
  const Series lg = formal_log(g);
  const auto n = g.order();
  std::vector<Rational> h(n + 1);
  for (std::size_t d = 1; d <= n; ++d) {
    const int mu = moebius(static_cast<std::int64_t>(d));
    if (mu == 0) {
      continue;
    }
    const Rational weight(mu, static_cast<unsigned long>(d));
    for (std::size_t m = 1; m * d <= n; ++m) {
      if (lg[m] != 0) {
        h[m * d] += weight * lg[m];
      }
    }
  }
  return Series(std::move(h));
}

int moebius(std::int64_t n)
{
  if (n < 1) {
    throw InvalidArgument("Moebius function is defined for n >= 1");
  }
  int sign = 1;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) {
        return 0;
      }
      sign = -sign;
    }
  }
  if (n > 1) {
    sign = -sign;
  }
  return sign;
}

}  // namespace mdpart
