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
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "oraclec/npn.hpp"
#include "oraclec/truth_table.hpp"
#include "oraclec/xag.hpp"

namespace oraclec {

class database_incomplete : public std::runtime_error {
public:
  explicit database_incomplete(uint16_t class_rep)
      : std::runtime_error("no XAG template for class " + std::to_string(class_rep)),
        class_rep(class_rep) {}
  uint16_t class_rep;
};

class database_format_error : public std::runtime_error {
public:
  explicit database_format_error(const std::string& message) : std::runtime_error(message) {}
};

/*! \brief XOR of a subset of {x0..x3, p1..p3} plus an optional constant 1. */
struct affine_form {
  uint16_t terms = 0;  // bits 0..3 select inputs, bits 4..6 select AND outputs
  bool constant = false;
  bool operator==(const affine_form&) const = default;
};

/*! \brief A 4-input XAG structure: AND gate i multiplies two affine
 * combinations of the inputs and earlier AND outputs; the output is one more
 * affine combination. */
struct xag_template {
  uint32_t num_ands = 0;
  std::array<std::pair<affine_form, affine_form>, 3> ands{};
  affine_form output{};

  /*! \brief XOR gates needed when instantiated, before sharing. */
  uint32_t xor_cost() const;
  bool operator==(const xag_template&) const = default;
};

/*! \brief Evaluates a template over all 16 input rows. */
uint16_t template_table(const xag_template& t);

/*! \brief Searches for a template matching `t` with at most `budget` AND
 * gates (budget <= 3); budgets are tried in ascending order, so a returned
 * template has minimal AND count.  The enumeration order of affine
 * coefficient vectors is fixed, so results are reproducible. */
std::optional<xag_template> exact_synthesize(const truth_table& t, uint32_t budget);

/*! \brief Mapping from canonical 4-variable classes to AND-minimal templates. */
class xag_database {
public:
  const xag_template& entry(uint16_t canonical_table) const {
    const auto it = entries.find(canonical_table);
    if (it == entries.end()) {
      throw database_incomplete(canonical_table);
    }
    return it->second;
  }

  size_t size() const { return entries.size(); }

  /*! \brief Builds a signal computing `t` (at most 4 variables) over the
   * given leaf signals; missing leaves may be constants. */
  signal instantiate(xag& g, const truth_table& t, const std::array<signal, 4>& leaves) const;

  std::map<uint16_t, xag_template> entries;
};

/*! \brief Instantiates a template over explicit input signals. */
signal instantiate_template(xag& g, const xag_template& t, const std::array<signal, 4>& inputs);

/*! \brief Synthesizes templates for all 4-variable NPN classes.
 *
 * Throws database_incomplete if any class needs more than 3 AND gates, which
 * cannot happen for 4-variable functions.
 */
xag_database build_database();

std::string serialize_database(const xag_database& db);
xag_database deserialize_database(const std::string& text);

/*! \brief Loads the cached database, rebuilding and rewriting the cache when
 * the file is absent, stale or corrupt. */
xag_database load_or_build_database(const std::string& path, bool force_rebuild = false);

} // namespace oraclec
