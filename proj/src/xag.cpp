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

#include "oraclec/xag.hpp"

#include <cassert>
#include <stdexcept>

namespace oraclec {

std::vector<bool> xag::simulate(const std::vector<bool>& assignment) const {
  if (assignment.size() != pis_.size()) {
    throw std::invalid_argument("simulate: assignment size does not match PI count");
  }
  std::vector<uint8_t> value(nodes_.size(), 0u);
  const auto eval = [&value](signal s) { return static_cast<bool>(value[s.node]) != s.complemented; };
  for (uint32_t i = 0; i < nodes_.size(); ++i) {
    const auto& n = nodes_[i];
    switch (n.kind) {
    case node_kind::constant0:
      value[i] = 0u;
      break;
    case node_kind::primary_input:
      value[i] = assignment[n.pi_ordinal] ? 1u : 0u;
      break;
    case node_kind::and2:
      value[i] = (eval(n.fanin[0]) && eval(n.fanin[1])) ? 1u : 0u;
      break;
    case node_kind::xor2:
      value[i] = (eval(n.fanin[0]) != eval(n.fanin[1])) ? 1u : 0u;
      break;
    }
  }
  std::vector<bool> result;
  result.reserve(outputs_.size());
  for (const auto s : outputs_) {
    result.push_back(eval(s));
  }
  return result;
}

std::vector<truth_table> xag::output_truth_tables() const {
  const auto k = num_pis();
  if (k > 16u) {
    throw too_many_inputs(k);
  }
  std::vector<truth_table> table(nodes_.size());
  const auto eval = [&table](signal s) { return s.complemented ? ~table[s.node] : table[s.node]; };
  for (uint32_t i = 0; i < nodes_.size(); ++i) {
    const auto& n = nodes_[i];
    switch (n.kind) {
    case node_kind::constant0:
      table[i] = truth_table::constant(false, k);
      break;
    case node_kind::primary_input:
      table[i] = truth_table::projection(n.pi_ordinal, k);
      break;
    case node_kind::and2:
      table[i] = eval(n.fanin[0]) & eval(n.fanin[1]);
      break;
    case node_kind::xor2:
      table[i] = eval(n.fanin[0]) ^ eval(n.fanin[1]);
      break;
    }
  }
  std::vector<truth_table> result;
  result.reserve(outputs_.size());
  for (const auto s : outputs_) {
    result.push_back(eval(s));
  }
  return result;
}

std::vector<char> xag::reachable() const {
  std::vector<char> mark(nodes_.size(), 0);
  std::vector<uint32_t> stack;
  for (const auto s : outputs_) {
    if (!mark[s.node]) {
      mark[s.node] = 1;
      stack.push_back(s.node);
    }
  }
  while (!stack.empty()) {
    const auto i = stack.back();
    stack.pop_back();
    const auto& n = nodes_[i];
    if (n.kind == node_kind::and2 || n.kind == node_kind::xor2) {
      for (const auto f : n.fanin) {
        if (!mark[f.node]) {
          mark[f.node] = 1;
          stack.push_back(f.node);
        }
      }
    }
  }
  return mark;
}

std::vector<uint32_t> xag::topo_order() const {
  const auto mark = reachable();
  std::vector<uint32_t> order;
  for (uint32_t i = 0; i < nodes_.size(); ++i) {
    if (mark[i]) {
      order.push_back(i);
    }
  }
  return order;
}

uint64_t xag::count_ands() const {
  const auto mark = reachable();
  uint64_t count = 0;
  for (uint32_t i = 0; i < nodes_.size(); ++i) {
    if (mark[i] && nodes_[i].kind == node_kind::and2) {
      ++count;
    }
  }
  return count;
}

uint64_t xag::count_xors() const {
  const auto mark = reachable();
  uint64_t count = 0;
  for (uint32_t i = 0; i < nodes_.size(); ++i) {
    if (mark[i] && nodes_[i].kind == node_kind::xor2) {
      ++count;
    }
  }
  return count;
}

xag xag::cleanup() const {
  xag result(num_pis());
  const auto mark = reachable();
  std::vector<signal> map(nodes_.size(), signal{0u, false});
  map[0] = result.constant(false);
  for (uint32_t i = 0; i < pis_.size(); ++i) {
    map[pis_[i]] = result.pi(i);
  }
  const auto resolve = [&map](signal s) { return map[s.node] ^ s.complemented; };
  for (uint32_t i = 0; i < nodes_.size(); ++i) {
    if (!mark[i]) {
      continue;
    }
    const auto& n = nodes_[i];
    if (n.kind == node_kind::and2) {
      map[i] = result.create_and(resolve(n.fanin[0]), resolve(n.fanin[1]));
    } else if (n.kind == node_kind::xor2) {
      map[i] = result.create_xor(resolve(n.fanin[0]), resolve(n.fanin[1]));
    }
  }
  for (const auto s : outputs_) {
    result.create_po(resolve(s));
  }
  return result;
}

void xag::truncate(size_t new_size) {
  assert(new_size >= 1u + pis_.size());
  while (nodes_.size() > new_size) {
    const auto& n = nodes_.back();
    assert(n.kind == node_kind::and2 || n.kind == node_kind::xor2);
    strash_.erase(strash_key{static_cast<uint8_t>(n.kind), pack(n.fanin[0]), pack(n.fanin[1])});
    const auto it = form_index_.find(forms_.back());
    if (it != form_index_.end() && it->second == nodes_.size() - 1u) {
      form_index_.erase(it);
    }
    forms_.pop_back();
    nodes_.pop_back();
  }
}

} // namespace oraclec
