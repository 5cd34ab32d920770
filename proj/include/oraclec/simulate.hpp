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
#include <functional>
#include <string>
#include <vector>

#include "oraclec/circuit.hpp"
#include "oraclec/ir.hpp"
#include "oraclec/xag.hpp"

namespace oraclec {

class too_large : public std::runtime_error {
public:
  too_large(const std::string& what) : std::runtime_error(what) {}
};

/*! \brief One classical bit per qubit, in qubit-id order. */
using bit_state = std::vector<uint8_t>;

/*! \brief Applies the gates in order; X/CNOT/CCNOT are classical on basis
 * states, so the whole run is a bit permutation. */
bit_state run_circuit(const reversible_circuit& c, bit_state state);

/*! \brief Ground-truth evaluation of the IR, independent of the XAG path. */
std::vector<bool> interpret_ir(const checked_function& f, const std::vector<bool>& inputs);

enum class failure_kind : uint8_t { output, input_preserved, helper_zero };

std::string to_string(failure_kind k);

struct verification_failure {
  uint64_t input = 0;        // x as a bit mask, input i at bit i
  uint64_t output_init = 0;  // b as a bit mask
  uint64_t expected = 0;
  uint64_t got = 0;
  failure_kind which = failure_kind::output;
};

struct verification_report {
  uint64_t checked_assignments = 0;
  std::vector<verification_failure> failures;

  bool pass() const { return failures.empty(); }
  std::string to_text() const;
  std::string to_json() const;
};

using oracle_reference = std::function<std::vector<bool>(uint64_t x)>;

/*! \brief Exhaustive oracle check: for every input x and output
 * initialization b (all-zeros and all-ones, or all 2^m values when m <= 4),
 * the circuit must map |x>|b>|0> to |x>|b xor f(x)>|0>.
 *
 * Requires n <= 16 and n+m+h <= 24; otherwise too_large is thrown and the
 * caller may fall back to the sampled variant.
 */
verification_report verify_oracle(const reversible_circuit& c, const oracle_reference& f);
verification_report verify_oracle(const reversible_circuit& c, const checked_function& f);
verification_report verify_oracle(const reversible_circuit& c, const xag& g);

/*! \brief Seeded random verification for circuits beyond the exhaustive
 * bounds. */
verification_report verify_oracle_sampled(const reversible_circuit& c, const oracle_reference& f,
                                          uint64_t num_samples, uint64_t seed);

} // namespace oraclec
