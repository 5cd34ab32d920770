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

#include <cstdint>
#include <optional>
#include <vector>

#include "oraclec/truth_table.hpp"
#include "oraclec/xag.hpp"

namespace oraclec {

/*! \brief A root node together with a dominating leaf set and the function
 * the root computes over those leaves (leaf i is variable i, ascending). */
struct cut {
  uint32_t root = 0;
  std::vector<uint32_t> leaves;
  truth_table table;
};

namespace cut_detail {

/*! \brief Sorted union of two leaf sets, or nothing if it exceeds the bound. */
std::optional<std::vector<uint32_t>> merge_leaves(const std::vector<uint32_t>& a,
                                                  const std::vector<uint32_t>& b, uint32_t bound);

} // namespace cut_detail

/*! \brief Bottom-up cut enumeration.
 *
 * Every node receives its trivial cut first, followed by up to
 * `cuts_per_node` non-trivial cuts with at most `cut_size` leaves, obtained
 * by merging fanin cut sets.  Candidate cuts are ordered by leaf count, then
 * lexicographically, so the result is deterministic.
 */
std::vector<std::vector<cut>> enumerate_cuts(const xag& g, uint32_t cut_size, uint32_t cuts_per_node);

} // namespace oraclec
