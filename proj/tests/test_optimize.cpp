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

#include "oraclec/cuts.hpp"
#include "oraclec/optimize.hpp"

using namespace oraclec;

namespace {

const xag_database& shared_db() {
  static const xag_database db = build_database();
  return db;
}

xag majority_six_ands() {
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

xag random_network(uint64_t seed, uint32_t num_pis, uint32_t num_gates, uint32_t num_outputs) {
  std::mt19937_64 rng(seed);
  xag g(num_pis);
  std::vector<oraclec::signal> pool;
  for (uint32_t i = 0; i < num_pis; ++i) {
    pool.push_back(g.pi(i));
  }
  for (uint32_t i = 0; i < num_gates; ++i) {
    const auto a = pool[rng() % pool.size()] ^ ((rng() & 1u) != 0u);
    const auto b = pool[rng() % pool.size()] ^ ((rng() & 1u) != 0u);
    pool.push_back((rng() % 3u) ? g.create_and(a, b) : g.create_xor(a, b));
  }
  for (uint32_t j = 0; j < num_outputs; ++j) {
    g.create_po(pool[pool.size() - 1u - (j % pool.size())] ^ ((rng() & 1u) != 0u));
  }
  return g;
}

} // namespace

TEST_CASE("cut enumeration on a single AND") {
  xag g(2);
  const auto r = g.create_and(g.pi(0), g.pi(1));
  g.create_po(r);
  const auto cuts = enumerate_cuts(g, 4, 12);
  const auto& node_cuts = cuts[r.node];
  REQUIRE(node_cuts.size() == 2u);
  CHECK(node_cuts[0].leaves == std::vector<uint32_t>{r.node});
  CHECK(node_cuts[1].leaves == std::vector<uint32_t>{g.pi(0).node, g.pi(1).node});
  CHECK(node_cuts[1].table.to_uint16() == 0x8u);
}

TEST_CASE("primary inputs only get the trivial cut") {
  xag g(2);
  g.create_po(g.pi(0));
  const auto cuts = enumerate_cuts(g, 4, 12);
  CHECK(cuts[g.pi(0).node].size() == 1u);
  CHECK(cuts[g.pi(0).node][0].leaves == std::vector<uint32_t>{g.pi(0).node});
}

TEST_CASE("the optimized majority root has the {a,b,c} cut") {
  xag g(3);
  const auto a = g.pi(0);
  const auto b = g.pi(1);
  const auto c = g.pi(2);
  const auto root = g.create_xor(g.create_and(g.create_xor(a, c), g.create_xor(b, c)), c);
  g.create_po(root);
  const auto cuts = enumerate_cuts(g, 4, 12);
  bool found = false;
  for (const auto& cut : cuts[root.node]) {
    if (cut.leaves == std::vector<uint32_t>{a.node, b.node, c.node}) {
      found = true;
      CHECK(cut.table == truth_table::from_uint16(0x00e8, 3));
    }
  }
  CHECK(found);
}

TEST_CASE("cut rewriting reduces the majority network to one AND") {
  const auto g = majority_six_ands();
  REQUIRE(g.count_ands() == 6u);
  const auto before = g.output_truth_tables();
  const auto rewritten = cut_rewrite(g, shared_db());
  CHECK(rewritten.count_ands() == 1u);
  CHECK(rewritten.output_truth_tables() == before);
}

TEST_CASE("an already optimal network is left alone") {
  xag g(3);
  const auto a = g.pi(0);
  const auto b = g.pi(1);
  const auto c = g.pi(2);
  g.create_po(g.create_xor(g.create_and(g.create_xor(a, c), g.create_xor(b, c)), c));
  const auto rewritten = cut_rewrite(g, shared_db());
  CHECK(rewritten.count_ands() == 1u);
  CHECK(rewritten.count_xors() == 3u);
}

TEST_CASE("a pure parity network stays at zero ANDs") {
  xag g(6);
  auto acc = g.pi(0);
  for (uint32_t i = 1; i < 6u; ++i) {
    acc = g.create_xor(acc, g.pi(i));
  }
  g.create_po(acc);
  const auto rewritten = cut_rewrite(g, shared_db());
  CHECK(rewritten.count_ands() == 0u);
  CHECK(rewritten.output_truth_tables() == g.output_truth_tables());
}

TEST_CASE("collapse maps majority straight onto the database") {
  const auto g = majority_six_ands();
  const auto collapsed = collapse_resynthesize(g, shared_db());
  CHECK(collapsed.count_ands() == 1u);
  CHECK(collapsed.count_xors() == 3u);
  CHECK(collapsed.output_truth_tables() == g.output_truth_tables());
}

TEST_CASE("shannon split identity holds at the table level") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    truth_table t(6);
    for (uint64_t x = 0; x < t.num_bits(); ++x) {
      t.set_bit(x, (rng() & 1u) != 0u);
    }
    const uint32_t v = rng() % 6u;
    const auto f0 = t.cofactor(v, false);
    const auto f1 = t.cofactor(v, true);
    const auto rebuilt = f0 ^ (truth_table::projection(v, 6) & (f0 ^ f1));
    CHECK(rebuilt == t);
  }
}

TEST_CASE("collapse handles a five-input conjunction with one split") {
  xag g(5);
  auto acc = g.pi(0);
  for (uint32_t i = 1; i < 5u; ++i) {
    acc = g.create_and(acc, g.pi(i));
  }
  g.create_po(acc);
  REQUIRE(g.count_ands() == 4u);
  const auto collapsed = collapse_resynthesize(g, shared_db());
  CHECK(collapsed.count_ands() <= 4u);
  CHECK(collapsed.output_truth_tables() == g.output_truth_tables());
}

TEST_CASE("collapse flattens an eight-variable parity to zero ANDs") {
  xag g(8);
  // build parity wastefully: x xor y as (x or y) and not (x and y)
  auto acc = g.pi(0);
  for (uint32_t i = 1; i < 8u; ++i) {
    const auto x = g.pi(i);
    acc = g.create_and(g.create_or(acc, x), !g.create_and(acc, x));
  }
  g.create_po(acc);
  REQUIRE(g.count_ands() > 0u);
  const auto collapsed = collapse_resynthesize(g, shared_db());
  CHECK(collapsed.count_ands() == 0u);
  CHECK(collapsed.output_truth_tables() == g.output_truth_tables());
}

TEST_CASE("collapse rejects networks with too many inputs") {
  xag g(9);
  g.create_po(g.pi(0));
  CHECK_THROWS_AS(collapse_resynthesize(g, shared_db()), too_many_inputs);
}

TEST_CASE("optimize drives the majority network to one AND and three XORs") {
  const auto g = majority_six_ands();
  const auto optimized = optimize(g, shared_db());
  CHECK(optimized.count_ands() == 1u);
  CHECK(optimized.count_xors() == 3u);
}

TEST_CASE("optimize leaves passthrough networks untouched") {
  xag g(2);
  g.create_po(g.pi(1));
  g.create_po(g.constant(true));
  const auto optimized = optimize(g, shared_db());
  CHECK(optimized.count_ands() == 0u);
  CHECK(optimized.output_truth_tables() == g.output_truth_tables());
}

TEST_CASE("random networks: equivalence and monotone AND counts") {
  for (uint64_t seed = 0; seed < 40u; ++seed) {
    const auto g = random_network(1000 + seed, 2u + seed % 7u, 10u + seed % 25u, 1u + seed % 3u);
    const auto before_tables = g.output_truth_tables();
    const auto before_ands = g.count_ands();

    const auto optimized = optimize(g, shared_db());
    CHECK(optimized.count_ands() <= before_ands);
    CHECK(optimized.output_truth_tables() == before_tables);

    optimize_options rewrite_only;
    rewrite_only.run_collapse = false;
    const auto rewritten = optimize(g, shared_db(), rewrite_only);
    CHECK(rewritten.count_ands() <= before_ands);
    CHECK(rewritten.output_truth_tables() == before_tables);
  }
}
