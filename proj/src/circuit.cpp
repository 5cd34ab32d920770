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
#include <cassert>
#include <map>
#include <set>

#include "oraclec/circuit.hpp"

namespace oraclec {

linear_form linear_fanin(const xag& g, signal s) {
  linear_form form;
  form.constant = false;
  std::map<uint32_t, uint32_t> parity;
  const auto walk = [&](auto&& self, signal t) -> void {
    if (t.complemented) {
      form.constant = !form.constant;
    }
    const auto& n = g.node(t.node);
    switch (n.kind) {
    case node_kind::constant0:
      break;
    case node_kind::primary_input:
    case node_kind::and2:
      parity[t.node] ^= 1u;
      break;
    case node_kind::xor2:
      self(self, n.fanin[0]);
      self(self, n.fanin[1]);
      break;
    }
  };
  walk(walk, s);
  for (const auto& [node, odd] : parity) {
    if (odd) {
      form.terms.push_back(node);
    }
  }
  return form;
}

reversible_circuit compile(const xag& g) {
  const auto order = g.topo_order();
  std::vector<uint32_t> and_nodes;
  for (const auto n : order) {
    if (g.node(n).kind == node_kind::and2) {
      and_nodes.push_back(n);
    }
  }

  reversible_circuit c;
  c.num_inputs = g.num_pis();
  c.num_outputs = static_cast<uint32_t>(g.outputs().size());
  c.num_helpers = static_cast<uint32_t>(and_nodes.size());

  // dimension of each tracked value: PI ordinal, then one per AND node
  std::map<uint32_t, uint32_t> dim_of;
  std::map<uint32_t, uint32_t> helper_of;
  for (uint32_t i = 0; i < g.num_pis(); ++i) {
    dim_of[g.pi(i).node] = i;
  }
  for (uint32_t h = 0; h < and_nodes.size(); ++h) {
    dim_of[and_nodes[h]] = c.num_inputs + h;
    helper_of[and_nodes[h]] = h;
  }
  const auto num_dims = c.num_inputs + c.num_helpers;
  const auto home = [&](uint32_t node) {
    const auto& n = g.node(node);
    return n.kind == node_kind::primary_input ? c.input_qubit(n.pi_ordinal)
                                              : c.helper_qubit(helper_of.at(node));
  };

  // current value of input and helper qubits over the dims plus a constant
  const uint32_t const_dim = num_dims;
  std::vector<std::vector<uint8_t>> state(c.num_qubits(), std::vector<uint8_t>(num_dims + 1u, 0u));
  for (uint32_t i = 0; i < c.num_inputs; ++i) {
    state[c.input_qubit(i)][i] = 1u;
  }

  const auto emit = [&](rev_gate gate) {
    if (gate.kind == gate_kind::cnot) {
      for (uint32_t d = 0; d <= num_dims; ++d) {
        state[gate.target][d] ^= state[gate.control0][d];
      }
    } else if (gate.kind == gate_kind::x) {
      state[gate.target][const_dim] ^= 1u;
    }
    c.gates.push_back(gate);
  };

  for (const auto v : and_nodes) {
    const auto& n = g.node(v);
    const auto lf1 = linear_fanin(g, n.fanin[0]);
    const auto lf2 = linear_fanin(g, n.fanin[1]);
    if (lf1.terms.empty() || lf2.terms.empty()) {
      throw empty_term_set();
    }

    const auto min_home = [&](const std::vector<uint32_t>& terms) {
      uint32_t best = UINT32_MAX;
      for (const auto t : terms) {
        best = std::min(best, home(t));
      }
      return best;
    };

    // first parity chain: accumulate fanin 1 onto the lowest-id home qubit
    const uint32_t t1 = min_home(lf1.terms);
    std::vector<rev_gate> chain1;
    {
      std::vector<uint32_t> sources;
      for (const auto t : lf1.terms) {
        if (home(t) != t1) {
          sources.push_back(home(t));
        }
      }
      std::sort(sources.begin(), sources.end());
      for (const auto s : sources) {
        chain1.push_back(rev_gate::make_cnot(s, t1));
      }
      if (lf1.constant) {
        chain1.push_back(rev_gate::make_x(t1));
      }
      for (const auto& gate : chain1) {
        emit(gate);
      }
    }

    // second parity chain; the first chain's target may hold one of the
    // needed terms, which the GF(2) bookkeeping folds back in
    const std::set<uint32_t> set1(lf1.terms.begin(), lf1.terms.end());
    const std::set<uint32_t> set2(lf2.terms.begin(), lf2.terms.end());
    const bool use_t1 = [&] {
      for (const auto t : lf2.terms) {
        if (home(t) == t1) {
          return true;
        }
      }
      return false;
    }();
    uint32_t t2 = UINT32_MAX;
    if (use_t1) {
      std::vector<uint32_t> difference;
      std::set_symmetric_difference(set1.begin(), set1.end(), set2.begin(), set2.end(),
                                    std::back_inserter(difference));
      assert(!difference.empty());
      t2 = min_home(difference);
    } else {
      t2 = min_home(lf2.terms);
    }
    assert(t2 != t1 && t2 != UINT32_MAX);

    std::vector<rev_gate> chain2;
    {
      // delta = target vector + current(t2) (+ current(t1) when used)
      std::vector<uint8_t> delta(num_dims + 1u, 0u);
      for (const auto t : lf2.terms) {
        delta[dim_of.at(t)] ^= 1u;
      }
      if (lf2.constant) {
        delta[const_dim] ^= 1u;
      }
      for (uint32_t d = 0; d <= num_dims; ++d) {
        delta[d] ^= state[t2][d];
      }
      if (use_t1) {
        chain2.push_back(rev_gate::make_cnot(t1, t2));
        for (uint32_t d = 0; d <= num_dims; ++d) {
          delta[d] ^= state[t1][d];
        }
      }
      std::vector<uint32_t> sources;
      for (const auto& [node, dim] : dim_of) {
        if (delta[dim]) {
          const auto h = home(node);
          assert(h != t1 && h != t2);
          sources.push_back(h);
        }
      }
      std::sort(sources.begin(), sources.end());
      for (const auto s : sources) {
        chain2.push_back(rev_gate::make_cnot(s, t2));
      }
      if (delta[const_dim]) {
        chain2.push_back(rev_gate::make_x(t2));
      }
      for (const auto& gate : chain2) {
        emit(gate);
      }
    }

    // Toffoli into the fresh helper, then restore both chains
    const auto hq = c.helper_qubit(helper_of.at(v));
    assert(std::all_of(state[hq].begin(), state[hq].end(), [](uint8_t b) { return b == 0u; }));
    emit(rev_gate::make_ccnot(t1, t2, hq));
    state[hq][dim_of.at(v)] = 1u;

    for (auto it = chain2.rbegin(); it != chain2.rend(); ++it) {
      emit(*it);
    }
    for (auto it = chain1.rbegin(); it != chain1.rend(); ++it) {
      emit(*it);
    }
  }
  c.compute_size = c.gates.size();

  // copy-out
  for (uint32_t j = 0; j < c.num_outputs; ++j) {
    const auto lf = linear_fanin(g, g.outputs()[j]);
    std::vector<uint32_t> sources;
    for (const auto t : lf.terms) {
      sources.push_back(home(t));
    }
    std::sort(sources.begin(), sources.end());
    for (const auto s : sources) {
      emit(rev_gate::make_cnot(s, c.output_qubit(j)));
    }
    if (lf.constant) {
      emit(rev_gate::make_x(c.output_qubit(j)));
    }
  }
  c.copyout_size = c.gates.size() - c.compute_size;

  // uncompute: mirror of the compute segment
  c.gates.reserve(c.gates.size() + c.compute_size);
  for (size_t i = c.compute_size; i-- > 0;) {
    const auto gate = c.gates[i];
    c.gates.push_back(gate);
  }
  return c;
}

circuit_stats stats(const reversible_circuit& c) {
  circuit_stats s;
  s.qubit_count = c.num_qubits();
  for (const auto& gate : c.gates) {
    switch (gate.kind) {
    case gate_kind::x:
      ++s.x_count;
      break;
    case gate_kind::cnot:
      ++s.cnot_count;
      break;
    case gate_kind::ccnot:
      ++s.ccnot_count;
      break;
    }
  }
  return s;
}

} // namespace oraclec
