// Copyright 2026 The oraclec authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <cstdint>
#include <utility>

#include "oraclec/truth_table.hpp"

namespace oraclec {

/*! \brief Input permutation, input negations and an output negation.
 *
 * Applying the transform to the canonical table reproduces the table it was
 * derived from: canonical input j is wired to variable perm[j], complemented
 * when bit j of input_negation is set, and the output is complemented when
 * output_negation holds.
 */
struct npn_transform {
  std::array<uint8_t, 4> perm{0, 1, 2, 3};
  uint8_t input_negation = 0;
  bool output_negation = false;
};

/*! \brief Applies a transform to a 4-variable table. */
uint16_t npn_apply(const npn_transform& t, uint16_t table);

npn_transform npn_invert(const npn_transform& t);

/*! \brief Exhaustive NPN canonicalization over all 4! * 2^4 * 2 transforms.
 *
 * Returns the numerically smallest table in the orbit together with the
 * transform that maps the canonical table back onto the input.
 */
std::pair<uint16_t, npn_transform> npn_canonicalize(uint16_t table);

/*! \brief Convenience wrapper for tables with at most 4 variables; smaller
 * tables are padded with vacuous variables. */
std::pair<truth_table, npn_transform> npn_canonicalize(const truth_table& t);

} // namespace oraclec
