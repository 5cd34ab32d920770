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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "oraclec/xag.hpp"

using namespace oraclec;

namespace {

// the optimized majority network ((a xor c) and (b xor c)) xor c
xag majority_optimized() {
  xag g(3);
  const auto a = g.pi(0);
  const auto b = g.pi(1);
  const auto c = g.pi(2);
  const auto n = g.create_and(g.create_xor(a, c), g.create_xor(b, c));
  g.create_po(g.create_xor(n, c));
  return g;
}

// a three-or / three-merge majority network with six AND gates
xag majority_initial_style() {
  xag g(3);
  const auto a = g.pi(0);
  const auto b = g.pi(1);
  const auto c = g.pi(2);
  const auto or_ab = g.create_or(a, b);
  const auto or_ac = g.create_or(a, c);
  const auto or_bc = g.create_or(b, c);
  const auto m1 = g.create_mux(or_ab, or_ac, or_ab);
  const auto m2 = g.create_mux(m1, or_bc, m1);
  g.create_po(g.create_and(m2, m1));
  return g;
}

bool majority3(uint64_t x) {
  const int count = ((x >> 0u) & 1u) + ((x >> 1u) & 1u) + ((x >> 2u) & 1u);
  return count >= 2;
}

} // namespace

TEST_CASE("constant propagation rules for AND") {
  xag g(2);
  const auto a = g.pi(0);
  CHECK(g.create_and(g.constant(true), a) == a);
  CHECK(g.create_and(g.constant(false), a) == g.constant(false));
  CHECK(g.create_and(a, !a) == g.constant(false));
  CHECK(g.create_and(a, a) == a);
  CHECK(g.num_nodes() == 3u);  // constant + two inputs, no gates
}

TEST_CASE("constant propagation rules for XOR") {
  xag g(2);
  const auto a = g.pi(0);
  const auto b = g.pi(1);
  CHECK(g.create_xor(a, a) == g.constant(false));
  CHECK(g.create_xor(a, !a) == g.constant(true));
  CHECK(g.create_xor(g.constant(false), a) == a);
  CHECK(g.create_xor(g.constant(true), a) == !a);

  // complements are normalized toward the output
  const auto plain = g.create_xor(a, b);
  const auto folded = g.create_xor(!a, b);
  CHECK(folded == !plain);
  CHECK(g.num_nodes() == 4u);  // one shared XOR node
}

TEST_CASE("structural hashing never duplicates a gate") {
  xag g(2);
  const auto a = g.pi(0);
  const auto b = g.pi(1);
  const auto first = g.create_and(a, b);
  const auto again = g.create_and(b, a);  // canonical fanin order
  CHECK(first == again);
  CHECK(g.count_ands() == 0u);  // not an output yet, nothing reachable
  g.create_po(first);
  CHECK(g.count_ands() == 1u);
  CHECK(g.num_nodes() == 4u);
}

TEST_CASE("not is free and involutive") {
  xag g(1);
  const auto a = g.pi(0);
  CHECK(g.create_not(g.create_not(a)) == a);
  CHECK(g.num_nodes() == 2u);
}

TEST_CASE("mux and or compositions") {
  xag g(3);
  const auto s = g.pi(0);
  const auto t = g.pi(1);
  CHECK(g.create_mux(s, t, t) == t);
  CHECK(g.create_or(t, g.constant(false)) == t);
  CHECK(g.create_or(t, !t) == g.constant(true));
}

TEST_CASE("simulate matches the majority network") {
  const auto g = majority_optimized();
  CHECK(g.count_ands() == 1u);
  CHECK(g.count_xors() == 3u);
  // two ones in the input: majority holds
  CHECK(g.simulate({true, true, false}) == std::vector<bool>{true});
  CHECK(g.simulate({false, false, false}) == std::vector<bool>{false});
  CHECK(g.simulate({true, false, true}) == std::vector<bool>{true});
  for (uint64_t x = 0; x < 8u; ++x) {
    const auto out = g.simulate({(x & 1u) != 0u, (x & 2u) != 0u, (x & 4u) != 0u});
    CHECK(out[0] == majority3(x));
  }
}

TEST_CASE("output truth tables agree with simulation") {
  const auto g = majority_initial_style();
  CHECK(g.count_ands() == 6u);
  const auto tables = g.output_truth_tables();
  REQUIRE(tables.size() == 1u);
  CHECK(tables[0].to_hex() == "e8");
  for (uint64_t x = 0; x < 8u; ++x) {
    const auto out = g.simulate({(x & 1u) != 0u, (x & 2u) != 0u, (x & 4u) != 0u});
    CHECK(out[0] == tables[0].bit(x));
  }
}

TEST_CASE("identity and constant networks") {
  xag g(1);
  g.create_po(g.pi(0));
  const auto tables = g.output_truth_tables();
  CHECK(tables[0].to_uint16() == 0x2u);

  xag h(2);
  h.create_po(h.constant(false));
  CHECK(h.output_truth_tables()[0].is_constant(false));
}

TEST_CASE("cleanup drops dangling cones and preserves functions") {
  xag g(3);
  const auto a = g.pi(0);
  const auto b = g.pi(1);
  const auto c = g.pi(2);
  const auto live = g.create_and(a, b);
  const auto dangling = g.create_and(g.create_xor(a, c), b);
  (void)dangling;
  g.create_po(!live);
  const auto before = g.output_truth_tables();
  const auto compact = g.cleanup();
  CHECK(compact.num_nodes() + 2u == g.num_nodes());  // the dangling xor and and are dropped
  CHECK(compact.num_pis() == 3u);
  CHECK(compact.output_truth_tables() == before);
}

TEST_CASE("truth tables refuse more than 16 inputs") {
  xag g(17);
  g.create_po(g.pi(0));
  CHECK_THROWS_AS(g.output_truth_tables(), too_many_inputs);
}

TEST_CASE("equal parity cones share one node") {
  xag g(3);
  const auto a = g.pi(0);
  const auto b = g.pi(1);
  const auto c = g.pi(2);
  const auto direct = g.create_xor(a, b);
  const auto indirect = g.create_xor(g.create_xor(a, c), g.create_xor(c, b));
  CHECK(direct == indirect);
  // an AND over two equal cones degenerates like any other constant rule
  CHECK(g.create_and(direct, indirect) == direct);
  CHECK(g.create_and(direct, !indirect) == g.constant(false));
  // a cone cancelling down to a single variable is that variable
  CHECK(g.create_xor(direct, b) == a);
}

TEST_CASE("randomized construction keeps the invariants") {
  std::mt19937_64 rng(42);
  for (int round = 0; round < 50; ++round) {
    const uint32_t num_pis = 2u + rng() % 5u;
    xag g(num_pis);
    std::vector<oraclec::signal> pool;
    for (uint32_t i = 0; i < num_pis; ++i) {
      pool.push_back(g.pi(i));
    }
    pool.push_back(g.constant(false));
    pool.push_back(g.constant(true));
    for (int step = 0; step < 30; ++step) {
      const auto a = pool[rng() % pool.size()] ^ ((rng() & 1u) != 0u);
      const auto b = pool[rng() % pool.size()] ^ ((rng() & 1u) != 0u);
      pool.push_back((rng() & 1u) ? g.create_and(a, b) : g.create_xor(a, b));
    }
    g.create_po(pool.back());

    std::set<std::tuple<int, uint32_t, bool, uint32_t, bool>> seen;
    for (uint32_t i = 0; i < g.num_nodes(); ++i) {
      const auto& n = g.node(i);
      if (n.kind != node_kind::and2 && n.kind != node_kind::xor2) {
        continue;
      }
      // gates never keep a constant fanin
      CHECK(n.fanin[0].node != 0u);
      CHECK(n.fanin[1].node != 0u);
      // fanins point strictly downward and are canonically sorted
      CHECK(n.fanin[0].node < i);
      CHECK(n.fanin[1].node < i);
      CHECK(n.fanin[0] < n.fanin[1]);
      if (n.kind == node_kind::xor2) {
        CHECK(!n.fanin[0].complemented);
        CHECK(!n.fanin[1].complemented);
      }
      // no two live gates share operator and fanins
      const auto key = std::make_tuple(n.kind == node_kind::and2 ? 0 : 1, n.fanin[0].node,
                                       n.fanin[0].complemented, n.fanin[1].node,
                                       n.fanin[1].complemented);
      CHECK(!seen.count(key));
      seen.insert(key);
    }

    // simulate agrees with the tables on every assignment
    const auto tables = g.output_truth_tables();
    for (uint64_t x = 0; x < (1ull << num_pis); ++x) {
      std::vector<bool> assignment(num_pis);
      for (uint32_t i = 0; i < num_pis; ++i) {
        assignment[i] = (x >> i) & 1u;
      }
      CHECK(g.simulate(assignment)[0] == tables[0].bit(x));
    }
  }
}
