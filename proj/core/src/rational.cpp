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

#include "mdpart/rational.hpp"

#include <cctype>

#include "mdpart/error.hpp"

namespace mdpart {

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole)
{
  std::size_t pos = 0;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    ++pos;
  }
  if (pos == text.size()) {
    throw InvalidArgument("malformed rational: '" + std::string(whole) + "'");
  }
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw InvalidArgument("malformed rational: '" + std::string(whole) + "'");
    }
  }
  std::string digits(text);
  if (digits.front() == '+') {
    digits.erase(0, 1);
  }
  return BigInt(digits, 10);
}

}  // namespace

Rational make_rational(const BigInt &num, const BigInt &den)
{
  if (den == 0) {
    throw InvalidArgument("rational with zero denominator");
  }
  Rational x(num, den);
  x.canonicalize();
  return x;
}

std::string to_string(const Rational &x)
{
  if (x.get_den() == 1) {
    return x.get_num().get_str();
  }
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string to_fraction_string(const Rational &x)
{
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string to_string(const BigInt &x) { return x.get_str(); }

Rational parse_rational(std::string_view text)
{
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text, text));
  }
  const BigInt num = parse_integer(text.substr(0, slash), text);
  const auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
    throw InvalidArgument("malformed rational: '" + std::string(text) + "'");
  }
  return make_rational(num, parse_integer(den_text, text));
}

bool is_integer(const Rational &x) { return x.get_den() == 1; }

}  // namespace mdpart
