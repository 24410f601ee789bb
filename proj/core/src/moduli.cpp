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

#include "mdpart/moduli.hpp"

#include <string>

#include "mdpart/error.hpp"

namespace mdpart {

void FibrationData::validate() const
{
  if (r < 2) {
    throw InvalidArgument("r must satisfy r >= 2 (got " + std::to_string(r) + ")");
  }
  if (genus < 0) {
    throw InvalidArgument("genus must be >= 0 (got " + std::to_string(genus) + ")");
  }
  if (kx_zero && genus != 1) {
    throw InvalidArgument("K_X = 0 forces genus 1 (got genus " + std::to_string(genus) + ")");
  }
}

std::string to_string(Verdict v)
{
  switch (v) {
    case Verdict::HoldsThroughOrder:
      return "holds-through-order";
    case Verdict::FirstMismatch:
      return "first-mismatch";
    case Verdict::ReconstructionFailed:
      return "reconstruction-failed";
  }
  return "unknown";
}

Series h_series(int r, std::size_t order, const CountOptions &options)
{
  return plog(partition_series(r, order, false, options));
}

Series c_series(int r, std::size_t order, const CountOptions &options)
{
  return plog(partition_series(r, order, true, options));
}

Series hilbert_euler_series(int r, std::int64_t chi_x, std::size_t order, const CountOptions &options)
{
  return pexp(Rational(static_cast<long>(chi_x)) * h_series(r, order, options));
}

Series punctual_ratio(int r, std::size_t order, const CountOptions &options)
{
  return partition_series(r, order, true, options) * inverse(partition_series(r, order, false, options));
}

Series moduli_euler_series(const FibrationData &fd, std::size_t order, const CountOptions &options)
{
  fd.validate();
  const Series hilbert = hilbert_euler_series(fd.r, fd.chi_x, order, options);
  const Series ratio = punctual_ratio(fd.r, order, options);
  return Rational(static_cast<long>(fd.chi_s)) * (hilbert * power(ratio, 2 - 2 * static_cast<std::int64_t>(fd.genus)));
}

Series reduced_partition_function(const FibrationData &fd, std::size_t order, const CountOptions &options)
{
  fd.validate();
  return moduli_euler_series(fd, order, options) * inverse(hilbert_euler_series(fd.r, fd.chi_x, order, options));
}

std::size_t default_degree_bound(std::size_t order) { return order >= 4 ? order / 2 - 1 : 0; }

ConjectureReport check_conj_euler(const FibrationData &fd, std::size_t order, std::size_t num_deg,
                                  std::size_t den_deg, const CountOptions &options)
{
  fd.validate();
  ConjectureReport report;
  report.conjecture = "euler";
  report.parameters = {{"r", std::int64_t{fd.r}},
                       {"genus", std::int64_t{fd.genus}},
                       {"chi_x", fd.chi_x},
                       {"chi_s", fd.chi_s},
                       {"kx_zero", fd.kx_zero},
                       {"num_deg", static_cast<std::int64_t>(num_deg)},
                       {"den_deg", static_cast<std::int64_t>(den_deg)}};
  report.order = order;
  report.symmetry_claimed = fd.kx_zero;

  const Series reduced = reduced_partition_function(fd, order, options);
  try {
    const RationalFunction f = rational_reconstruct(reduced, num_deg, den_deg);
    if (f.expand(order) != reduced) {
      throw InvariantViolation("reconstructed rational function does not re-expand to the series");
    }
    report.verdict = Verdict::HoldsThroughOrder;
    report.symmetry = check_q_inversion_symmetry(f);
    report.rational_function = f;
    report.note = "rational function matches every coefficient through q^" + std::to_string(order) +
                  "; this is evidence, not a proof of rationality";
  } catch (const NoMatch &e) {
    report.verdict = Verdict::ReconstructionFailed;
    report.note = e.what();
  } catch (const InsufficientOrder &e) {
    report.verdict = Verdict::ReconstructionFailed;
    report.note = e.what();
  }
  return report;
}

ConjectureReport check_pwp(int r, std::size_t order, const CountOptions &options)
{
  if (r < 2) {
    throw InvalidArgument("r must satisfy r >= 2 (got " + std::to_string(r) + ")");
  }
  ConjectureReport report;
  report.conjecture = "pwp";
  report.parameters = {{"r", std::int64_t{r}}};
  report.order = order;

  const Series lhs = partition_series(r, order, true, options);
  const Series one_minus_q = Series::constant(1, order) - Series::monomial(1, 1, order);
  const Series rhs = partition_series(r, order, false, options) * power(one_minus_q, -(r - 2));
  for (std::size_t n = 0; n <= order; ++n) {
    report.pairs.emplace_back(lhs[n], rhs[n]);
    if (!report.first_mismatch && lhs[n] != rhs[n]) {
      report.first_mismatch = Mismatch{n, lhs[n], rhs[n]};
    }
  }
  report.verdict = report.first_mismatch ? Verdict::FirstMismatch : Verdict::HoldsThroughOrder;
  report.note = "punctual series compared with partition series / (1-q)^" + std::to_string(r - 2) +
                " coefficientwise through q^" + std::to_string(order);
  return report;
}

}  // namespace mdpart
