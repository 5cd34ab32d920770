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

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "oraclec/simulate.hpp"

namespace oraclec {

bit_state run_circuit(const reversible_circuit& c, bit_state state) {
  if (state.size() != c.num_qubits()) {
    throw std::invalid_argument("run_circuit: state size does not match qubit count");
  }
  for (const auto& gate : c.gates) {
    switch (gate.kind) {
    case gate_kind::x:
      state[gate.target] ^= 1u;
      break;
    case gate_kind::cnot:
      state[gate.target] ^= state[gate.control0];
      break;
    case gate_kind::ccnot:
      state[gate.target] ^= state[gate.control0] & state[gate.control1];
      break;
    }
  }
  return state;
}

std::vector<bool> interpret_ir(const checked_function& cf, const std::vector<bool>& inputs) {
  const ir_function& f = cf.fn;
  if (inputs.size() != f.params.size()) {
    throw std::invalid_argument("interpret_ir: input count does not match parameters");
  }
  std::map<std::string, bool> values;
  std::map<std::string, std::pair<bool, bool>> slots;  // stored?, value
  for (size_t i = 0; i < f.params.size(); ++i) {
    values[f.params[i]] = inputs[i];
  }
  const auto operand_value = [&](const ir_operand& op) {
    return op.is_constant ? op.constant : values.at(op.name);
  };

  uint32_t current = 0;
  uint32_t previous = UINT32_MAX;
  while (true) {
    const ir_block& b = f.blocks[current];
    for (const auto& inst : b.instructions) {
      switch (inst.op) {
      case ir_opcode::op_and:
        values[inst.result] = operand_value(inst.operands[0]) && operand_value(inst.operands[1]);
        break;
      case ir_opcode::op_or:
        values[inst.result] = operand_value(inst.operands[0]) || operand_value(inst.operands[1]);
        break;
      case ir_opcode::op_xor:
        values[inst.result] = operand_value(inst.operands[0]) != operand_value(inst.operands[1]);
        break;
      case ir_opcode::op_icmp_eq:
        values[inst.result] = operand_value(inst.operands[0]) == operand_value(inst.operands[1]);
        break;
      case ir_opcode::op_icmp_ne:
        values[inst.result] = operand_value(inst.operands[0]) != operand_value(inst.operands[1]);
        break;
      case ir_opcode::op_select:
        values[inst.result] = operand_value(inst.operands[0]) ? operand_value(inst.operands[1])
                                                              : operand_value(inst.operands[2]);
        break;
      case ir_opcode::op_alloca:
        slots[inst.result] = {false, false};
        break;
      case ir_opcode::op_load: {
        const auto it = slots.find(inst.slot);
        if (it == slots.end() || !it->second.first) {
          throw load_of_uninitialized_slot(inst.slot);
        }
        values[inst.result] = it->second.second;
        break;
      }
      case ir_opcode::op_store:
        slots[inst.slot] = {true, operand_value(inst.operands[0])};
        break;
      case ir_opcode::op_phi: {
        const auto& pred_label = f.blocks[previous].label;
        bool found = false;
        for (size_t i = 0; i < inst.phi_labels.size(); ++i) {
          if (inst.phi_labels[i] == pred_label) {
            values[inst.result] = operand_value(inst.operands[i]);
            found = true;
            break;
          }
        }
        if (!found) {
          throw malformed_function("phi %" + inst.result + " has no incoming value for " + pred_label);
        }
        break;
      }
      }
    }
    const auto& t = b.terminator;
    if (t.k == ir_terminator::kind::ret) {
      std::vector<bool> result;
      for (const auto& v : t.ret_values) {
        result.push_back(operand_value(v));
      }
      return result;
    }
    previous = current;
    if (t.k == ir_terminator::kind::branch) {
      current = cf.block_index(t.then_label);
    } else {
      current = cf.block_index(operand_value(t.cond) ? t.then_label : t.else_label);
    }
  }
}

std::string to_string(failure_kind k) {
  switch (k) {
  case failure_kind::output:
    return "output";
  case failure_kind::input_preserved:
    return "input-preserved";
  case failure_kind::helper_zero:
    return "helper-zero";
  }
  return "?";
}

std::string verification_report::to_text() const {
  std::ostringstream os;
  if (pass()) {
    os << "verification passed: " << checked_assignments << " assignments checked";
    return os.str();
  }
  os << "verification FAILED: " << failures.size() << " failure(s) over " << checked_assignments
     << " assignments";
  const size_t shown = std::min<size_t>(failures.size(), 8u);
  for (size_t i = 0; i < shown; ++i) {
    const auto& f = failures[i];
    os << "\n  x=" << f.input << " b=" << f.output_init << " kind=" << to_string(f.which)
       << " expected=" << f.expected << " got=" << f.got;
  }
  if (shown < failures.size()) {
    os << "\n  ... " << (failures.size() - shown) << " more";
  }
  return os.str();
}

std::string verification_report::to_json() const {
  nlohmann::json j;
  j["checked_assignments"] = checked_assignments;
  j["pass"] = pass();
  j["failures"] = nlohmann::json::array();
  for (const auto& f : failures) {
    j["failures"].push_back({{"x", f.input},
                             {"b", f.output_init},
                             {"expected", f.expected},
                             {"got", f.got},
                             {"which", to_string(f.which)}});
  }
  return j.dump();
}

namespace {

void check_one(const reversible_circuit& c, const oracle_reference& f, uint64_t x, uint64_t b,
               verification_report& report) {
  bit_state init(c.num_qubits(), 0u);
  for (uint32_t i = 0; i < c.num_inputs; ++i) {
    init[c.input_qubit(i)] = (x >> i) & 1u;
  }
  for (uint32_t j = 0; j < c.num_outputs; ++j) {
    init[c.output_qubit(j)] = (b >> j) & 1u;
  }
  const auto final_state = run_circuit(c, init);
  ++report.checked_assignments;

  const auto fx = f(x);
  uint64_t expected_out = 0;
  uint64_t got_out = 0;
  for (uint32_t j = 0; j < c.num_outputs; ++j) {
    const bool e = (((b >> j) & 1u) != 0u) != fx[j];
    expected_out |= static_cast<uint64_t>(e) << j;
    got_out |= static_cast<uint64_t>(final_state[c.output_qubit(j)]) << j;
  }
  if (expected_out != got_out) {
    report.failures.push_back({x, b, expected_out, got_out, failure_kind::output});
  }

  uint64_t got_in = 0;
  for (uint32_t i = 0; i < c.num_inputs; ++i) {
    got_in |= static_cast<uint64_t>(final_state[c.input_qubit(i)]) << i;
  }
  if (got_in != x) {
    report.failures.push_back({x, b, x, got_in, failure_kind::input_preserved});
  }

  uint64_t got_helpers = 0;
  for (uint32_t h = 0; h < c.num_helpers; ++h) {
    got_helpers |= static_cast<uint64_t>(final_state[c.helper_qubit(h)]) << h;
  }
  if (got_helpers != 0u) {
    report.failures.push_back({x, b, 0u, got_helpers, failure_kind::helper_zero});
  }
}

std::vector<uint64_t> output_inits(const reversible_circuit& c) {
  if (c.num_outputs <= 4u) {
    std::vector<uint64_t> all;
    for (uint64_t b = 0; b < (1ull << c.num_outputs); ++b) {
      all.push_back(b);
    }
    return all;
  }
  const uint64_t ones = (1ull << c.num_outputs) - 1u;
  return {0u, ones};
}

} // namespace

verification_report verify_oracle(const reversible_circuit& c, const oracle_reference& f) {
  if (c.num_inputs > 16u || c.num_qubits() > 24u) {
    throw too_large("verify_oracle: exhaustive bounds are n <= 16 and n+m+h <= 24");
  }
  verification_report report;
  const auto inits = output_inits(c);
  for (uint64_t x = 0; x < (1ull << c.num_inputs); ++x) {
    for (const auto b : inits) {
      check_one(c, f, x, b, report);
    }
  }
  return report;
}

verification_report verify_oracle(const reversible_circuit& c, const checked_function& f) {
  return verify_oracle(c, oracle_reference([&f, &c](uint64_t x) {
                         std::vector<bool> inputs(c.num_inputs);
                         for (uint32_t i = 0; i < c.num_inputs; ++i) {
                           inputs[i] = (x >> i) & 1u;
                         }
                         return interpret_ir(f, inputs);
                       }));
}

verification_report verify_oracle(const reversible_circuit& c, const xag& g) {
  return verify_oracle(c, oracle_reference([&g, &c](uint64_t x) {
                         std::vector<bool> inputs(c.num_inputs);
                         for (uint32_t i = 0; i < c.num_inputs; ++i) {
                           inputs[i] = (x >> i) & 1u;
                         }
                         return g.simulate(inputs);
                       }));
}

verification_report verify_oracle_sampled(const reversible_circuit& c, const oracle_reference& f,
                                          uint64_t num_samples, uint64_t seed) {
  std::mt19937_64 rng(seed);
  verification_report report;
  const uint64_t x_mask = c.num_inputs >= 64u ? ~0ull : (1ull << c.num_inputs) - 1u;
  const uint64_t b_mask = c.num_outputs >= 64u ? ~0ull : (1ull << c.num_outputs) - 1u;
  for (uint64_t i = 0; i < num_samples; ++i) {
    check_one(c, f, rng() & x_mask, rng() & b_mask, report);
  }
  return report;
}

} // namespace oraclec
