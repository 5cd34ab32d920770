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
#include <stdexcept>

#include "oraclec/cuts.hpp"

namespace oraclec {

namespace cut_detail {

std::optional<std::vector<uint32_t>> merge_leaves(const std::vector<uint32_t>& a,
                                                  const std::vector<uint32_t>& b, uint32_t bound) {
  std::vector<uint32_t> merged;
  merged.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(merged));
  if (merged.size() > bound) {
    return std::nullopt;
  }
  return merged;
}

} // namespace cut_detail

namespace {

// Function of `root` over the leaves, computed by simulating the cone.
truth_table cone_table(const xag& g, uint32_t root, const std::vector<uint32_t>& leaves) {
  const auto k = static_cast<uint32_t>(leaves.size());
  std::map<uint32_t, truth_table> memo;
  for (uint32_t i = 0; i < k; ++i) {
    memo.emplace(leaves[i], truth_table::projection(i, k));
  }
  const auto eval = [&](auto&& self, signal s) -> truth_table {
    const auto it = memo.find(s.node);
    if (it != memo.end()) {
      return s.complemented ? ~it->second : it->second;
    }
    const auto& n = g.node(s.node);
    truth_table t;
    switch (n.kind) {
    case node_kind::constant0:
      t = truth_table::constant(false, k);
      break;
    case node_kind::primary_input:
      throw std::logic_error("cut leaves do not dominate the root");
    case node_kind::and2:
      t = self(self, n.fanin[0]) & self(self, n.fanin[1]);
      break;
    case node_kind::xor2:
      t = self(self, n.fanin[0]) ^ self(self, n.fanin[1]);
      break;
    }
    memo.emplace(s.node, t);
    return s.complemented ? ~t : t;
  };
  return eval(eval, signal{root, false});
}

cut trivial_cut(uint32_t node) {
  cut c;
  c.root = node;
  c.leaves = {node};
  c.table = truth_table::projection(0, 1);
  return c;
}

} // namespace

std::vector<std::vector<cut>> enumerate_cuts(const xag& g, uint32_t cut_size, uint32_t cuts_per_node) {
  if (cut_size < 2u || cut_size > 6u) {
    throw std::invalid_argument("enumerate_cuts: cut size must be in 2..6");
  }
  if (cuts_per_node < 1u) {
    throw std::invalid_argument("enumerate_cuts: at least one cut per node required");
  }
  std::vector<std::vector<cut>> cuts(g.num_nodes());
  for (uint32_t i = 0; i < g.num_nodes(); ++i) {
    const auto& n = g.node(i);
    if (n.kind == node_kind::constant0) {
      // a constant contributes no leaves when merged
      cut c;
      c.root = i;
      c.table = truth_table::constant(false, 0);
      cuts[i].push_back(std::move(c));
      continue;
    }
    cuts[i].push_back(trivial_cut(i));
    if (n.kind != node_kind::and2 && n.kind != node_kind::xor2) {
      continue;
    }
    std::vector<std::vector<uint32_t>> candidates;
    for (const auto& ca : cuts[n.fanin[0].node]) {
      for (const auto& cb : cuts[n.fanin[1].node]) {
        if (auto merged = cut_detail::merge_leaves(ca.leaves, cb.leaves, cut_size)) {
          candidates.push_back(std::move(*merged));
        }
      }
    }
    std::sort(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    if (candidates.size() > cuts_per_node) {
      candidates.resize(cuts_per_node);
    }
    for (auto& leaves : candidates) {
      cut c;
      c.root = i;
      c.table = cone_table(g, i, leaves);
      c.leaves = std::move(leaves);
      cuts[i].push_back(std::move(c));
    }
  }
  return cuts;
}

} // namespace oraclec
