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

#include "oraclec/database.hpp"
#include "oraclec/xag.hpp"

namespace oraclec {

struct optimize_options {
  uint32_t cut_size = 4;          // bounded by the database arity
  uint32_t cuts_per_node = 12;
  uint32_t collapse_threshold = 8;
  bool run_collapse = true;
  bool run_rewrite = true;
  uint32_t max_rewrite_rounds = 4;
};

/*! \brief One topological rewriting pass.
 *
 * For every gate and every non-trivial cut, the cut function is matched
 * against the database; the substitution with the best strictly positive AND
 * gain is applied (ties: smaller template XOR count, then first found).  A
 * substitution is kept only if the live AND count actually drops, so the
 * result never has more AND gates than the input and computes the same
 * functions.
 */
xag cut_rewrite(const xag& g, const xag_database& db, uint32_t cut_size = 4, uint32_t cuts_per_node = 12);

/*! \brief Collapses every output into its truth table and rebuilds it.
 *
 * Subfunctions with more than 4 support variables are split as
 * f = f0 xor (x and (f1 xor f0)), one AND per split; 4-variable leaves come
 * from the database.  Requires at most 8 primary inputs.
 */
xag collapse_resynthesize(const xag& g, const xag_database& db);

/*! \brief Default pipeline: collapse when small enough, then rewrite until
 * the AND count stops improving (at most max_rewrite_rounds rounds).  The
 * AND count never increases across stages. */
xag optimize(const xag& g, const xag_database& db, const optimize_options& opts = {});

} // namespace oraclec
