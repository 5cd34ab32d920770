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

#include "oraclec/truth_table.hpp"

using namespace oraclec;

TEST_CASE("projections follow the LSB-first index convention") {
  const auto a = truth_table::projection(0, 3);
  const auto b = truth_table::projection(1, 3);
  const auto c = truth_table::projection(2, 3);
  for (uint64_t x = 0; x < 8u; ++x) {
    CHECK(a.bit(x) == (((x >> 0u) & 1u) != 0u));
    CHECK(b.bit(x) == (((x >> 1u) & 1u) != 0u));
    CHECK(c.bit(x) == (((x >> 2u) & 1u) != 0u));
  }
  CHECK(a.to_hex() == "aa");
  CHECK(truth_table::projection(0, 1).to_uint16() == 0x2u);
}

TEST_CASE("bit operations respect the variable count mask") {
  const auto a = truth_table::projection(0, 2);
  const auto na = ~a;
  CHECK(na.to_uint16() == 0x5u);
  CHECK((a ^ a).is_constant(false));
  CHECK((a | ~a).is_constant(true));
  CHECK((a & ~a).is_constant(false));
}

TEST_CASE("cofactors, support and shrink") {
  // f = (x0 and x1) xor x2
  const auto f = (truth_table::projection(0, 3) & truth_table::projection(1, 3)) ^
                 truth_table::projection(2, 3);
  CHECK(f.support() == std::vector<uint32_t>{0, 1, 2});
  const auto f2_0 = f.cofactor(2, false);
  CHECK(f2_0 == (truth_table::projection(0, 3) & truth_table::projection(1, 3)));

  // a function vacuous in x1
  const auto g = truth_table::projection(0, 3) ^ truth_table::projection(2, 3);
  CHECK(g.support() == std::vector<uint32_t>{0, 2});
  const auto shrunk = g.shrink_to({0, 2});
  CHECK(shrunk.num_vars() == 2u);
  CHECK(shrunk == (truth_table::projection(0, 2) ^ truth_table::projection(1, 2)));
}

TEST_CASE("extend replicates onto vacuous variables") {
  const auto a = truth_table::projection(0, 1);
  const auto wide = a.extend_to(4);
  CHECK(wide.to_uint16() == 0xaaaau);
  for (uint64_t x = 0; x < 16u; ++x) {
    CHECK(wide.bit(x) == ((x & 1u) != 0u));
  }
}

TEST_CASE("large tables operate word-wise") {
  std::mt19937_64 rng(7);
  truth_table t(10);
  for (int i = 0; i < 200; ++i) {
    t.set_bit(rng() % t.num_bits(), true);
  }
  const auto u = ~t;
  for (uint64_t x = 0; x < t.num_bits(); ++x) {
    CHECK(u.bit(x) == !t.bit(x));
  }
  CHECK((t ^ u).is_constant(true));
}

TEST_CASE("tables beyond 16 variables are rejected") {
  CHECK_THROWS_AS(truth_table(17), too_many_inputs);
}
