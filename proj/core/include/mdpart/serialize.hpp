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

#ifndef MDPART_SERIALIZE_HPP
#define MDPART_SERIALIZE_HPP

#include <nlohmann/json.hpp>

#include "mdpart/moduli.hpp"
#include "mdpart/rational_function.hpp"
#include "mdpart/series.hpp"
#include "mdpart/staircase.hpp"

namespace mdpart {

using ordered_json = nlohmann::ordered_json;

// Coefficients are always exact strings "numerator/denominator".

/// {"order": N, "coefficients": ["1/1", "-2/3", ...]}
ordered_json to_json(const Series &s);
Series series_from_json(const nlohmann::json &j);

/// {"numerator": [...], "denominator": [...]}, ascending powers of q.
ordered_json to_json(const RationalFunction &f);
RationalFunction rational_function_from_json(const nlohmann::json &j);

/// Array of exponent tuples in lexicographic order.
ordered_json diagram_to_json(const StaircaseIdeal &ideal);
StaircaseIdeal diagram_from_json(const nlohmann::json &j, int dim, bool punctual);

/// {conjecture, parameters, order, verdict, first_mismatch?, rational_function?,
///  symmetry, symmetry_claimed, pairs, note}
ordered_json to_json(const ConjectureReport &report);

}  // namespace mdpart

#endif  // MDPART_SERIALIZE_HPP
