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

#include "oraclec/ir.hpp"

namespace oraclec {

namespace {

std::vector<uint32_t> successors(const ir_function& f, const std::map<std::string, uint32_t>& index,
                                 uint32_t bi) {
  const auto& t = f.blocks[bi].terminator;
  switch (t.k) {
  case ir_terminator::kind::branch:
    return {index.at(t.then_label)};
  case ir_terminator::kind::cond_branch:
    return {index.at(t.then_label), index.at(t.else_label)};
  case ir_terminator::kind::ret:
    return {};
  }
  return {};
}

enum class name_kind : uint8_t { bit, slot };

} // namespace

uint32_t checked_function::block_index(const std::string& label) const {
  for (uint32_t i = 0; i < fn.blocks.size(); ++i) {
    if (fn.blocks[i].label == label) {
      return i;
    }
  }
  throw std::out_of_range("unknown block label " + label);
}

checked_function validate(const ir_function& f) {
  if (f.params.size() > 16u) {
    throw too_many_inputs(f.params.size());
  }

  std::map<std::string, uint32_t> index;
  for (uint32_t i = 0; i < f.blocks.size(); ++i) {
    index.emplace(f.blocks[i].label, i);
  }

  // DFS from the entry block.  Back edges mean a cycle; the post-order,
  // reversed, is the block schedule.  Successors are visited in reverse
  // terminator order so that then-branches come first in the result.
  const auto n = static_cast<uint32_t>(f.blocks.size());
  std::vector<uint8_t> state(n, 0);  // 0 unvisited, 1 on stack, 2 done
  std::vector<uint32_t> post;
  std::vector<uint32_t> dfs_stack;
  const auto dfs = [&](auto&& self, uint32_t bi) -> void {
    state[bi] = 1;
    dfs_stack.push_back(bi);
    auto succ = successors(f, index, bi);
    std::reverse(succ.begin(), succ.end());
    for (const auto s : succ) {
      if (state[s] == 1) {
        std::vector<std::string> labels;
        const auto it = std::find(dfs_stack.begin(), dfs_stack.end(), s);
        for (auto jt = it; jt != dfs_stack.end(); ++jt) {
          labels.push_back(f.blocks[*jt].label);
        }
        throw cyclic_control_flow(labels);
      }
      if (state[s] == 0) {
        self(self, s);
      }
    }
    state[bi] = 2;
    dfs_stack.pop_back();
    post.push_back(bi);
  };
  dfs(dfs, 0);

  for (uint32_t bi = 0; bi < n; ++bi) {
    if (state[bi] != 2) {
      throw malformed_function("block " + f.blocks[bi].label + " is unreachable from the entry");
    }
  }

  uint32_t num_rets = 0;
  for (const auto& b : f.blocks) {
    if (b.terminator.k == ir_terminator::kind::ret) {
      ++num_rets;
    }
  }
  if (num_rets != 1) {
    throw malformed_function("function " + f.name + " must have exactly one ret block, found " +
                             std::to_string(num_rets));
  }

  checked_function cf;
  cf.fn = f;
  cf.rpo.assign(post.rbegin(), post.rend());
  cf.preds.assign(n, {});
  for (uint32_t bi = 0; bi < n; ++bi) {
    for (const auto s : successors(f, index, bi)) {
      auto& p = cf.preds[s];
      if (std::find(p.begin(), p.end(), bi) == p.end()) {
        p.push_back(bi);
      }
    }
  }
  for (auto& p : cf.preds) {
    std::sort(p.begin(), p.end());  // source order of first appearance
  }

  // Def-before-use along every path: a name is available in a block only if
  // it is defined in every predecessor.
  std::map<std::string, name_kind> kind;
  for (const auto& p : f.params) {
    kind.emplace(p, name_kind::bit);
  }
  for (const auto& b : f.blocks) {
    for (const auto& inst : b.instructions) {
      if (!inst.result.empty()) {
        if (!kind.emplace(inst.result, inst.op == ir_opcode::op_alloca ? name_kind::slot : name_kind::bit).second) {
          throw malformed_function("value %" + inst.result + " is defined more than once");
        }
      }
    }
  }

  const auto check_bit_use = [&](const ir_operand& op, const std::set<std::string>& defs) {
    if (op.is_constant) {
      return;
    }
    const auto it = kind.find(op.name);
    if (it == kind.end() || !defs.count(op.name)) {
      throw use_before_def(op.name);
    }
    if (it->second != name_kind::bit) {
      throw non_boolean_value(op.name);
    }
  };
  const auto check_slot_use = [&](const std::string& slot, const std::set<std::string>& defs) {
    const auto it = kind.find(slot);
    if (it == kind.end() || !defs.count(slot)) {
      throw use_before_def(slot);
    }
    if (it->second != name_kind::slot) {
      throw non_boolean_value(slot);
    }
  };

  std::vector<std::set<std::string>> defs_out(n);
  std::vector<uint8_t> processed(n, 0);
  for (const auto bi : cf.rpo) {
    std::set<std::string> defs;
    if (bi == 0) {
      defs.insert(f.params.begin(), f.params.end());
    } else {
      bool first = true;
      for (const auto p : cf.preds[bi]) {
        if (!processed[p]) {
          continue;  // cannot happen on a DAG; defensive for degenerate orders
        }
        if (first) {
          defs = defs_out[p];
          first = false;
        } else {
          std::set<std::string> meet;
          std::set_intersection(defs.begin(), defs.end(), defs_out[p].begin(), defs_out[p].end(),
                                std::inserter(meet, meet.begin()));
          defs = std::move(meet);
        }
      }
    }
    const auto& b = f.blocks[bi];
    for (const auto& inst : b.instructions) {
      switch (inst.op) {
      case ir_opcode::op_phi: {
        std::vector<uint32_t> seen;
        for (size_t i = 0; i < inst.operands.size(); ++i) {
          const auto pit = index.find(inst.phi_labels[i]);
          if (pit == index.end() ||
              std::find(cf.preds[bi].begin(), cf.preds[bi].end(), pit->second) == cf.preds[bi].end()) {
            throw malformed_function("phi %" + inst.result + " names non-predecessor " + inst.phi_labels[i]);
          }
          seen.push_back(pit->second);
          check_bit_use(inst.operands[i], defs_out[pit->second]);
        }
        std::sort(seen.begin(), seen.end());
        seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
        if (seen.size() != cf.preds[bi].size()) {
          throw malformed_function("phi %" + inst.result + " does not cover all predecessors");
        }
        break;
      }
      case ir_opcode::op_load:
        check_slot_use(inst.slot, defs);
        break;
      case ir_opcode::op_store:
        check_bit_use(inst.operands[0], defs);
        check_slot_use(inst.slot, defs);
        break;
      default:
        for (const auto& op : inst.operands) {
          check_bit_use(op, defs);
        }
        break;
      }
      if (!inst.result.empty()) {
        defs.insert(inst.result);
      }
    }
    const auto& t = b.terminator;
    if (t.k == ir_terminator::kind::cond_branch) {
      check_bit_use(t.cond, defs);
    } else if (t.k == ir_terminator::kind::ret) {
      for (const auto& v : t.ret_values) {
        check_bit_use(v, defs);
      }
      if (t.ret_values.size() != f.ret_arity) {
        throw malformed_function("function " + f.name + " returns " + std::to_string(t.ret_values.size()) +
                                 " values but declares " + std::to_string(f.ret_arity));
      }
    }
    defs_out[bi] = std::move(defs);
    processed[bi] = 1;
  }

  return cf;
}

} // namespace oraclec
