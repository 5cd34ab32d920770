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

#include <string>
#include <vector>

#include "oraclec/circuit.hpp"
#include "oraclec/xag.hpp"

namespace oraclec {

class invalid_name : public std::runtime_error {
public:
  explicit invalid_name(const std::string& name)
      : std::runtime_error("'" + name + "' is not a valid function name"), name(name) {}
  std::string name;
};

struct emit_config {
  std::string function_name = "oracle";
  std::string indent = "  ";
};

/*! \brief Renders the circuit as QIR-flavored LLVM text.
 *
 * The emitted function is `@<name>__body` with one `%Qubit*` parameter per
 * input and output qubit; helpers are allocated with
 * `__quantum__rt__qubit_allocate` and released in reverse order.  Output is
 * deterministic: identical circuits produce identical bytes.
 */
std::string emit_qir(const reversible_circuit& c, const emit_config& cfg);

/*! \brief Graphviz rendering of a network; gate nodes are labelled with
 * their operator and complemented signals are drawn dashed. */
std::string emit_dot(const xag& g);

/*! \brief Structural well-formedness checks on emitted LLVM text: balanced
 * parentheses, valid identifiers, symbols declared before use, matching
 * allocate/release.  Returns human-readable problems; empty means clean. */
std::vector<std::string> lint_qir(const std::string& text);

} // namespace oraclec
