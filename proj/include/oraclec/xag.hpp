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

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

#include "oraclec/truth_table.hpp"

namespace oraclec {

/*! \brief An edge into a node, optionally complemented. */
struct signal {
  uint32_t node = 0;
  bool complemented = false;

  signal operator!() const { return {node, !complemented}; }
  signal operator^(bool flip) const { return {node, complemented != flip}; }
  bool operator==(const signal&) const = default;
  bool operator<(const signal& other) const {
    return node != other.node ? node < other.node : complemented < other.complemented;
  }
};

enum class node_kind : uint8_t { constant0, primary_input, and2, xor2 };

struct xag_node {
  node_kind kind = node_kind::constant0;
  uint32_t pi_ordinal = 0;
  std::array<signal, 2> fanin{};
};

/*! \brief XOR-AND-inverter graph.
 *
 * Node 0 is the constant-0 node, primary inputs precede all gates, and gate
 * fanins always point to lower node indices.  Gate construction applies
 * constant propagation and structural hashing, so no two live gates share the
 * same operator and canonical fanins.  XOR fanins are stored uncomplemented;
 * input complements fold into the result's complement flag.
 *
 * XOR nodes are additionally hashed by their flattened linear form (the
 * parity of PI and AND values they compute), so no two nodes ever compute the
 * same parity function.  An AND over two cones with equal term sets therefore
 * reduces at construction time like any other constant.
 */
class xag {
public:
  xag() {
    nodes_.push_back({});
    forms_.push_back({});
  }

  explicit xag(uint32_t num_inputs) : xag() {
    for (uint32_t i = 0; i < num_inputs; ++i) {
      create_pi();
    }
  }

  signal constant(bool value) const { return {0u, value}; }

  signal create_pi() {
    xag_node n;
    n.kind = node_kind::primary_input;
    n.pi_ordinal = static_cast<uint32_t>(pis_.size());
    const auto index = static_cast<uint32_t>(nodes_.size());
    nodes_.push_back(n);
    pis_.push_back(index);
    register_form(index);
    return {index, false};
  }

  uint32_t num_pis() const { return static_cast<uint32_t>(pis_.size()); }
  signal pi(uint32_t ordinal) const { return {pis_.at(ordinal), false}; }

  size_t num_nodes() const { return nodes_.size(); }
  const xag_node& node(uint32_t index) const { return nodes_.at(index); }

  signal create_and(signal a, signal b) {
    // and(0,x)=0, and(1,x)=x, and(x,x)=x, and(x,!x)=0
    if (a.node == 0u) {
      return a.complemented ? b : constant(false);
    }
    if (b.node == 0u) {
      return b.complemented ? a : constant(false);
    }
    if (a.node == b.node) {
      return a.complemented == b.complemented ? a : constant(false);
    }
    if (b < a) {
      std::swap(a, b);
    }
    const auto before = nodes_.size();
    const auto s = lookup(node_kind::and2, a, b);
    if (nodes_.size() != before) {
      register_form(s.node);
    }
    return s;
  }

  signal create_xor(signal a, signal b) {
    // xor(0,x)=x, xor(1,x)=!x, xor(x,x)=0, xor(x,!x)=1
    if (a.node == 0u) {
      return a.complemented ? !b : b;
    }
    if (b.node == 0u) {
      return b.complemented ? !a : a;
    }
    const bool out = a.complemented != b.complemented;
    a.complemented = b.complemented = false;
    if (a.node == b.node) {
      return constant(out);
    }
    if (b < a) {
      std::swap(a, b);
    }
    // hash by the flattened parity function: equal cones share one node
    const auto form = merged_form(a.node, b.node);
    if (form.empty()) {
      return constant(out);
    }
    if (const auto it = form_index_.find(form); it != form_index_.end()) {
      return signal{it->second, false} ^ out;
    }
    const auto s = lookup(node_kind::xor2, a, b);
    forms_.push_back(form);
    form_index_.emplace(form, s.node);
    return s ^ out;
  }

  signal create_not(signal a) const { return !a; }

  signal create_or(signal a, signal b) { return !create_and(!a, !b); }

  /*! \brief mux(s,t,e) = e xor (s and (t xor e)); costs at most one AND. */
  signal create_mux(signal s, signal t, signal e) {
    return create_xor(e, create_and(s, create_xor(t, e)));
  }

  void create_po(signal s) { outputs_.push_back(s); }
  const std::vector<signal>& outputs() const { return outputs_; }

  std::vector<bool> simulate(const std::vector<bool>& assignment) const;

  /*! \brief One table per output; requires at most 16 primary inputs. */
  std::vector<truth_table> output_truth_tables() const;

  /*! \brief Nodes reachable from the outputs, ascending (a topological order). */
  std::vector<uint32_t> topo_order() const;

  uint64_t count_ands() const;
  uint64_t count_xors() const;

  /*! \brief Copy without dangling nodes; preserves PI order, output order and
   * all output functions. */
  xag cleanup() const;

  /*! \brief Drops all nodes with index >= new_size together with their strash
   * entries.  Only valid if no remaining node or output refers to them. */
  void truncate(size_t new_size);

private:
  struct strash_key {
    uint8_t kind;
    uint64_t a;
    uint64_t b;
    bool operator==(const strash_key&) const = default;
  };
  struct strash_hash {
    size_t operator()(const strash_key& k) const {
      uint64_t h = k.a * 0x9e3779b97f4a7c15ull;
      h ^= k.b + 0x9e3779b97f4a7c15ull + (h << 6u) + (h >> 2u);
      h ^= static_cast<uint64_t>(k.kind) * 0xff51afd7ed558ccdull;
      return static_cast<size_t>(h);
    }
  };

  static uint64_t pack(signal s) { return (static_cast<uint64_t>(s.node) << 1u) | (s.complemented ? 1u : 0u); }

  // term set of the parity function a node computes over PI and AND values
  void register_form(uint32_t node) {
    forms_.push_back({node});
    form_index_.emplace(forms_.back(), node);
  }

  std::vector<uint32_t> merged_form(uint32_t a, uint32_t b) const {
    const auto& fa = forms_[a];
    const auto& fb = forms_[b];
    std::vector<uint32_t> merged;
    merged.reserve(fa.size() + fb.size());
    std::set_symmetric_difference(fa.begin(), fa.end(), fb.begin(), fb.end(),
                                  std::back_inserter(merged));
    return merged;
  }

  signal lookup(node_kind kind, signal a, signal b) {
    const strash_key key{static_cast<uint8_t>(kind), pack(a), pack(b)};
    if (const auto it = strash_.find(key); it != strash_.end()) {
      return {it->second, false};
    }
    xag_node n;
    n.kind = kind;
    n.fanin = {a, b};
    const auto index = static_cast<uint32_t>(nodes_.size());
    nodes_.push_back(n);
    strash_.emplace(key, index);
    return {index, false};
  }

  std::vector<char> reachable() const;

  std::vector<xag_node> nodes_;
  std::vector<uint32_t> pis_;
  std::vector<signal> outputs_;
  std::unordered_map<strash_key, uint32_t, strash_hash> strash_;
  std::vector<std::vector<uint32_t>> forms_;
  std::map<std::vector<uint32_t>, uint32_t> form_index_;
};

} // namespace oraclec
