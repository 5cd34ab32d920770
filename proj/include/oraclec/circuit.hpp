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
#include <stdexcept>
#include <vector>

#include "oraclec/xag.hpp"

namespace oraclec {

class empty_term_set : public std::runtime_error {
public:
  empty_term_set()
      : std::runtime_error("internal error: AND fanin reduced to a constant during compilation") {}
};

enum class gate_kind : uint8_t { x, cnot, ccnot };

/*! \brief An X, CNOT or CCNOT gate; controls and target are distinct. */
struct rev_gate {
  gate_kind kind = gate_kind::x;
  uint32_t control0 = 0;  // unused for x
  uint32_t control1 = 0;  // unused for x and cnot
  uint32_t target = 0;

  static rev_gate make_x(uint32_t t) { return {gate_kind::x, 0, 0, t}; }
  static rev_gate make_cnot(uint32_t c, uint32_t t) { return {gate_kind::cnot, c, 0, t}; }
  static rev_gate make_ccnot(uint32_t c0, uint32_t c1, uint32_t t) { return {gate_kind::ccnot, c0, c1, t}; }
  bool operator==(const rev_gate&) const = default;
};

/*! \brief Gate list over input, output and helper qubits.
 *
 * Qubit ids are dense and assigned in register order: inputs first, then
 * outputs, then helpers.  The gate list splits into a compute segment, the
 * output copy-out, and the mirrored uncompute segment.
 */
struct reversible_circuit {
  uint32_t num_inputs = 0;
  uint32_t num_outputs = 0;
  uint32_t num_helpers = 0;
  std::vector<rev_gate> gates;
  size_t compute_size = 0;  // gates [0, compute_size) compute the AND helpers
  size_t copyout_size = 0;  // gates [compute_size, compute_size + copyout_size)

  uint32_t num_qubits() const { return num_inputs + num_outputs + num_helpers; }
  uint32_t input_qubit(uint32_t i) const { return i; }
  uint32_t output_qubit(uint32_t j) const { return num_inputs + j; }
  uint32_t helper_qubit(uint32_t h) const { return num_inputs + num_outputs + h; }
};

/*! \brief XOR-only fanin cone of a signal, flattened to a set of PI and AND
 * nodes plus a parity constant.  XOR of the terms plus the constant equals
 * the signal's function; repeated terms cancel. */
struct linear_form {
  std::vector<uint32_t> terms;  // node indices, ascending
  bool constant = false;
};

linear_form linear_fanin(const xag& g, signal s);

/*! \brief Compiles an XAG into a circuit for |x>|b> -> |x>|b xor f(x)>.
 *
 * Per AND gate, the two linear fanins are accumulated in place onto two
 * existing qubits with CNOT chains, a Toffoli writes the product into a fresh
 * helper, and the chains are undone immediately.  Outputs are copied out with
 * CNOTs, then the whole compute segment is replayed in reverse to return the
 * helpers to zero.
 */
reversible_circuit compile(const xag& g);

struct circuit_stats {
  uint64_t cnot_count = 0;
  uint64_t ccnot_count = 0;
  uint64_t x_count = 0;
  uint32_t qubit_count = 0;
};

circuit_stats stats(const reversible_circuit& c);

} // namespace oraclec
