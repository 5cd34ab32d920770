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
#include <set>
#include <unordered_map>

#include "oraclec/ir.hpp"

namespace oraclec {

namespace {

// A slot definition along one path.  A slot is poisoned while some path from
// the entry reaches it without a store; loading a poisoned slot is an error.
struct slot_state {
  signal sig{};
  bool poison = true;
};

} // namespace

xag ir_to_xag(const checked_function& cf) {
  const ir_function& f = cf.fn;
  xag g(static_cast<uint32_t>(f.params.size()));

  std::unordered_map<std::string, signal> values;
  for (uint32_t i = 0; i < f.params.size(); ++i) {
    values.emplace(f.params[i], g.pi(i));
  }
  const auto operand_signal = [&](const ir_operand& op) {
    return op.is_constant ? g.constant(op.constant) : values.at(op.name);
  };

  const auto n = static_cast<uint32_t>(f.blocks.size());
  std::vector<signal> reach(n, g.constant(false));
  std::vector<std::map<std::string, slot_state>> slot_out(n);
  std::map<std::pair<uint32_t, uint32_t>, signal> edge_cond;

  std::vector<signal> ret_signals;

  for (const auto bi : cf.rpo) {
    const ir_block& b = f.blocks[bi];
    std::map<std::string, slot_state> slots;

    if (bi == 0) {
      reach[bi] = g.constant(true);
    } else {
      const auto& ps = cf.preds[bi];
      signal r = g.constant(false);
      for (const auto p : ps) {
        r = g.create_or(r, edge_cond.at({p, bi}));
      }
      reach[bi] = r;

      if (ps.size() == 1) {
        slots = slot_out[ps[0]];
      } else {
        // Merge versioned slot definitions.  Predecessors are folded in
        // order of first appearance in the source; versions that differ
        // become MUX operations keyed on the predecessor reaching condition.
        std::set<std::string> names;
        for (const auto p : ps) {
          for (const auto& [name, state] : slot_out[p]) {
            (void)state;
            names.insert(name);
          }
        }
        for (const auto& name : names) {
          slot_state merged;
          bool anywhere_poison = false;
          bool first = true;
          for (const auto p : ps) {
            const auto it = slot_out[p].find(name);
            if (it == slot_out[p].end() || it->second.poison) {
              anywhere_poison = true;
              break;
            }
            if (first) {
              merged = it->second;
              first = false;
            } else if (!(merged.sig == it->second.sig)) {
              merged.sig = g.create_mux(edge_cond.at({p, bi}), it->second.sig, merged.sig);
            }
          }
          merged.poison = anywhere_poison;
          slots.emplace(name, merged);
        }
      }
    }

    for (const auto& inst : b.instructions) {
      switch (inst.op) {
      case ir_opcode::op_and:
        values[inst.result] = g.create_and(operand_signal(inst.operands[0]), operand_signal(inst.operands[1]));
        break;
      case ir_opcode::op_or:
        values[inst.result] = g.create_or(operand_signal(inst.operands[0]), operand_signal(inst.operands[1]));
        break;
      case ir_opcode::op_xor:
        values[inst.result] = g.create_xor(operand_signal(inst.operands[0]), operand_signal(inst.operands[1]));
        break;
      case ir_opcode::op_icmp_eq:
        values[inst.result] =
            !g.create_xor(operand_signal(inst.operands[0]), operand_signal(inst.operands[1]));
        break;
      case ir_opcode::op_icmp_ne:
        values[inst.result] = g.create_xor(operand_signal(inst.operands[0]), operand_signal(inst.operands[1]));
        break;
      case ir_opcode::op_select:
        values[inst.result] = g.create_mux(operand_signal(inst.operands[0]), operand_signal(inst.operands[1]),
                                           operand_signal(inst.operands[2]));
        break;
      case ir_opcode::op_alloca:
        slots[inst.result] = slot_state{};  // declared, not yet stored
        break;
      case ir_opcode::op_load: {
        const auto it = slots.find(inst.slot);
        if (it == slots.end() || it->second.poison) {
          throw load_of_uninitialized_slot(inst.slot);
        }
        values[inst.result] = it->second.sig;
        break;
      }
      case ir_opcode::op_store:
        slots[inst.slot] = slot_state{operand_signal(inst.operands[0]), false};
        break;
      case ir_opcode::op_phi: {
        // Incoming values are folded like slot merges, in predecessor source
        // order, with the MUX keyed on the edge's reaching condition.
        std::vector<std::pair<uint32_t, signal>> incoming;
        for (size_t i = 0; i < inst.operands.size(); ++i) {
          incoming.emplace_back(cf.block_index(inst.phi_labels[i]), operand_signal(inst.operands[i]));
        }
        std::sort(incoming.begin(), incoming.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        signal current = incoming.front().second;
        for (size_t i = 1; i < incoming.size(); ++i) {
          if (!(current == incoming[i].second)) {
            current = g.create_mux(edge_cond.at({incoming[i].first, bi}), incoming[i].second, current);
          }
        }
        values[inst.result] = current;
        break;
      }
      }
    }

    const auto& t = b.terminator;
    switch (t.k) {
    case ir_terminator::kind::branch:
      edge_cond[{bi, cf.block_index(t.then_label)}] = reach[bi];
      break;
    case ir_terminator::kind::cond_branch: {
      const auto cond = operand_signal(t.cond);
      const auto then_index = cf.block_index(t.then_label);
      const auto else_index = cf.block_index(t.else_label);
      if (then_index == else_index) {
        edge_cond[{bi, then_index}] = reach[bi];
      } else {
        edge_cond[{bi, then_index}] = g.create_and(reach[bi], cond);
        edge_cond[{bi, else_index}] = g.create_and(reach[bi], !cond);
      }
      break;
    }
    case ir_terminator::kind::ret:
      for (const auto& v : t.ret_values) {
        ret_signals.push_back(operand_signal(v));
      }
      break;
    }

    slot_out[bi] = std::move(slots);
  }

  for (const auto s : ret_signals) {
    g.create_po(s);
  }
  return g;
}

} // namespace oraclec
