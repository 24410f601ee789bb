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

#include "mdpart/serialize.hpp"

#include <string>
#include <vector>

#include "mdpart/error.hpp"

namespace mdpart {

namespace {

ordered_json coefficient_array(std::span<const Rational> coeffs)
{
  ordered_json out = ordered_json::array();
  for (const auto &c : coeffs) {
    out.push_back(to_fraction_string(c));
  }
  return out;
}

std::vector<Rational> parse_coefficients(const nlohmann::json &j)
{
  if (!j.is_array()) {
    throw InvalidArgument("expected an array of coefficient strings");
  }
  std::vector<Rational> out;
  out.reserve(j.size());
  for (const auto &c : j) {
    if (!c.is_string()) {
      throw InvalidArgument("coefficients must be strings, got " + c.dump());
    }
    out.push_back(parse_rational(c.get<std::string>()));
  }
  return out;
}

}  // namespace

ordered_json to_json(const Series &s)
{
  ordered_json out;
  out["order"] = s.order();
  out["coefficients"] = coefficient_array(s.coefficients());
  return out;
}

Series series_from_json(const nlohmann::json &j)
{
  if (!j.is_object() || !j.contains("order") || !j.contains("coefficients")) {
    throw InvalidArgument("series JSON needs 'order' and 'coefficients'");
  }
  auto coeffs = parse_coefficients(j.at("coefficients"));
  const auto order = j.at("order").get<std::size_t>();
  if (coeffs.size() != order + 1) {
    throw InvalidArgument("series JSON has " + std::to_string(coeffs.size()) + " coefficients for order " +
                          std::to_string(order));
  }
  return Series(std::move(coeffs));
}

ordered_json to_json(const RationalFunction &f)
{
  ordered_json out;
  out["numerator"] = coefficient_array(f.numerator.coefficients());
  out["denominator"] = coefficient_array(f.denominator.coefficients());
  return out;
}

RationalFunction rational_function_from_json(const nlohmann::json &j)
{
  if (!j.is_object() || !j.contains("numerator") || !j.contains("denominator")) {
    throw InvalidArgument("rational function JSON needs 'numerator' and 'denominator'");
  }
  return {Polynomial(parse_coefficients(j.at("numerator"))), Polynomial(parse_coefficients(j.at("denominator")))};
}

ordered_json diagram_to_json(const StaircaseIdeal &ideal)
{
  ordered_json out = ordered_json::array();
  for (const auto &box : ideal.diagram) {
    out.push_back(box);
  }
  return out;
}

StaircaseIdeal diagram_from_json(const nlohmann::json &j, int dim, bool punctual)
{
  StaircaseIdeal ideal;
  ideal.dim = dim;
  ideal.punctual = punctual;
  for (const auto &box : j) {
    auto e = box.get<Exponent>();
    if (e.size() != static_cast<std::size_t>(dim)) {
      throw InvalidArgument("diagram box " + box.dump() + " does not have " + std::to_string(dim) + " coordinates");
    }
    ideal.diagram.insert(std::move(e));
  }
  return ideal;
}

ordered_json to_json(const ConjectureReport &report)
{
  ordered_json out;
  out["conjecture"] = report.conjecture;
  ordered_json params = ordered_json::object();
  for (const auto &[name, value] : report.parameters) {
    std::visit([&](const auto &v) { params[name] = v; }, value);
  }
  out["parameters"] = params;
  out["order"] = report.order;
  out["verdict"] = to_string(report.verdict);
  if (report.first_mismatch) {
    out["first_mismatch"] = {{"n", report.first_mismatch->n},
                             {"lhs", to_string(report.first_mismatch->lhs)},
                             {"rhs", to_string(report.first_mismatch->rhs)}};
  }
  if (report.rational_function) {
    out["rational_function"] = to_json(*report.rational_function);
    out["rational_function_text"] = to_string(*report.rational_function);
  }
  if (report.symmetry) {
    ordered_json sym;
    sym["symmetric"] = report.symmetry->symmetric;
    if (report.symmetry->defect_power) {
      sym["defect_power"] = *report.symmetry->defect_power;
    } else {
      sym["defect_power"] = nullptr;
    }
    out["symmetry"] = sym;
  } else {
    out["symmetry"] = nullptr;
  }
  out["symmetry_claimed"] = report.symmetry_claimed;
  if (!report.pairs.empty()) {
    ordered_json pairs = ordered_json::array();
    for (const auto &[lhs, rhs] : report.pairs) {
      pairs.push_back({to_string(lhs), to_string(rhs)});
    }
    out["pairs"] = pairs;
  }
  out["note"] = report.note;
  return out;
}

}  // namespace mdpart
