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

#include "oraclec/npn.hpp"

using namespace oraclec;

TEST_CASE("a table and its complement share a class") {
  const uint16_t t = 0x8888;  // x0 and x1
  CHECK(npn_canonicalize(t).first == npn_canonicalize(static_cast<uint16_t>(~t)).first);
}

TEST_CASE("input negations fold into the class") {
  // x0 and x1 versus (not x0) and (not x1)
  const uint16_t and_tt = 0x8888;
  const uint16_t nor_like = 0x1111;
  CHECK(npn_canonicalize(and_tt).first == npn_canonicalize(nor_like).first);
}

TEST_CASE("permutation does not change the class") {
  const uint16_t f = 0xcafe;
  npn_transform swap01;
  swap01.perm = {1, 0, 2, 3};
  CHECK(npn_canonicalize(f).first == npn_canonicalize(npn_apply(swap01, f)).first);
}

TEST_CASE("the canonical transform reproduces the original table") {
  std::mt19937_64 rng(123);
  for (int i = 0; i < 1000; ++i) {
    const auto t = static_cast<uint16_t>(rng());
    const auto [canon, transform] = npn_canonicalize(t);
    CHECK(npn_apply(transform, canon) == t);
  }
}

TEST_CASE("invert composes to the identity") {
  std::mt19937_64 rng(9);
  std::array<uint8_t, 4> perm{0, 1, 2, 3};
  for (int i = 0; i < 200; ++i) {
    npn_transform t;
    t.perm = perm;
    std::shuffle(t.perm.begin(), t.perm.end(), rng);
    t.input_negation = static_cast<uint8_t>(rng() & 0xfu);
    t.output_negation = (rng() & 1u) != 0u;
    const auto table = static_cast<uint16_t>(rng());
    CHECK(npn_apply(npn_invert(t), npn_apply(t, table)) == table);
  }
}

TEST_CASE("all 65536 tables fall into 222 classes") {
  std::set<uint16_t> classes;
  for (uint32_t t = 0; t < 65536u; ++t) {
    classes.insert(npn_canonicalize(static_cast<uint16_t>(t)).first);
  }
  CHECK(classes.size() == 222u);
}

TEST_CASE("small tables are padded before canonicalization") {
  const auto one_var = truth_table::projection(0, 1);
  const auto [canon, transform] = npn_canonicalize(one_var);
  CHECK(canon.num_vars() == 4u);
  CHECK(npn_apply(transform, canon.to_uint16()) == one_var.extend_to(4).to_uint16());
}
