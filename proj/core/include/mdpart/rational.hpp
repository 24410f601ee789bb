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

#ifndef MDPART_RATIONAL_HPP
#define MDPART_RATIONAL_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace mdpart {

/// Arbitrary-precision integer.
using BigInt = mpz_class;

/// Exact rational number. GMP keeps every arithmetic result in lowest terms
/// with a positive denominator; values built from a numerator/denominator
/// pair must go through make_rational().
using Rational = mpq_class;

Rational make_rational(const BigInt &num, const BigInt &den);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational &x);

/// Always "p/q", including "p/1" for integers.
std::string to_fraction_string(const Rational &x);

std::string to_string(const BigInt &x);

/// Accepts "p" or "p/q" with an optional leading sign; throws InvalidArgument.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational &x);

}  // namespace mdpart

#endif  // MDPART_RATIONAL_HPP
