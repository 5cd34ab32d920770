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

#include "oraclec/circuit.hpp"
#include "oraclec/qir.hpp"

using namespace oraclec;

namespace {

size_t count_occurrences(const std::string& text, const std::string& needle) {
  size_t count = 0;
  size_t pos = 0;
  while ((pos = text.find(needle, pos)) != std::string::npos) {
    ++count;
    pos += needle.size();
  }
  return count;
}

xag majority_optimized() {
  xag g(3);
  const auto a = g.pi(0);
  const auto b = g.pi(1);
  const auto c = g.pi(2);
  g.create_po(g.create_xor(g.create_and(g.create_xor(a, c), g.create_xor(b, c)), c));
  return g;
}

} // namespace

TEST_CASE("majority oracle emits two Toffoli calls and one helper pair") {
  const auto c = compile(majority_optimized());
  emit_config cfg;
  cfg.function_name = "Majority3";
  const auto text = emit_qir(c, cfg);
  CHECK(count_occurrences(text, "call void @__quantum__qis__ccnot__body") == 2u);
  CHECK(count_occurrences(text, "call %Qubit* @__quantum__rt__qubit_allocate()") == 1u);
  CHECK(count_occurrences(text, "call void @__quantum__rt__qubit_release(") == 1u);
  CHECK(text.find("define void @Majority3__body(%Qubit* %in0, %Qubit* %in1, %Qubit* %in2, "
                  "%Qubit* %out0)") != std::string::npos);
  CHECK(lint_qir(text).empty());
}

TEST_CASE("identity oracle emits a single cnot call line") {
  xag g(1);
  g.create_po(g.pi(0));
  const auto c = compile(g);
  emit_config cfg;
  cfg.function_name = "id";
  const auto text = emit_qir(c, cfg);
  CHECK(count_occurrences(text, "call void @__quantum__qis__cnot__body(%Qubit* %in0, %Qubit* %out0)") == 1u);
  CHECK(count_occurrences(text, "call void @__quantum__qis__x__body") == 0u);
  CHECK(lint_qir(text).empty());
}

TEST_CASE("an empty circuit emits define and ret only") {
  reversible_circuit c;
  c.num_inputs = 1;
  const auto text = emit_qir(c, emit_config{"empty", "  "});
  CHECK(count_occurrences(text, "call void @__quantum__qis__") == 0u);
  CHECK(text.find("define void @empty__body(%Qubit* %in0)") != std::string::npos);
  CHECK(text.find("ret void") != std::string::npos);
  CHECK(lint_qir(text).empty());
}

TEST_CASE("emission is deterministic") {
  const auto c = compile(majority_optimized());
  emit_config cfg;
  cfg.function_name = "Majority3";
  CHECK(emit_qir(c, cfg) == emit_qir(c, cfg));
}

TEST_CASE("call counts match the circuit stats") {
  const auto c = compile(majority_optimized());
  const auto s = stats(c);
  const auto text = emit_qir(c, emit_config{"Majority3", "  "});
  CHECK(count_occurrences(text, "call void @__quantum__qis__cnot__body") == s.cnot_count);
  CHECK(count_occurrences(text, "call void @__quantum__qis__ccnot__body") == s.ccnot_count);
  CHECK(count_occurrences(text, "call void @__quantum__qis__x__body") == s.x_count);
}

TEST_CASE("invalid function names are rejected") {
  reversible_circuit c;
  c.num_inputs = 1;
  CHECK_THROWS_AS(emit_qir(c, emit_config{"not valid", "  "}), invalid_name);
  CHECK_THROWS_AS(emit_qir(c, emit_config{"", "  "}), invalid_name);
  CHECK_THROWS_AS(emit_qir(c, emit_config{"1leading", "  "}), invalid_name);
}

TEST_CASE("lint flags malformed text") {
  CHECK(!lint_qir("call void @undeclared()\n").empty());
  CHECK(!lint_qir("declare void @f(\nret void\n").empty());
  const auto problems = lint_qir("%Qubit = type opaque\n");
  CHECK(!problems.empty());  // no ret void
}

TEST_CASE("dot export lists the expected node inventory") {
  const auto g = majority_optimized();
  const auto dot = emit_dot(g);
  CHECK(count_occurrences(dot, "label=\"x") == 3u);
  CHECK(count_occurrences(dot, "label=\"\xe2\x88\xa7\"") == 1u);
  CHECK(count_occurrences(dot, "label=\"+\"") == 3u);
  CHECK(count_occurrences(dot, "style=dashed") == 0u);
  CHECK(emit_dot(g) == dot);
}

TEST_CASE("dot export draws complemented signals dashed") {
  xag g(2);
  g.create_po(!g.create_and(g.pi(0), !g.pi(1)));
  const auto dot = emit_dot(g);
  CHECK(count_occurrences(dot, "style=dashed") == 2u);  // one fanin, one output

  xag h(1);
  h.create_po(h.pi(0));
  const auto simple = emit_dot(h);
  CHECK(count_occurrences(simple, "label=\"x0\"") == 1u);
  CHECK(count_occurrences(simple, "->") == 1u);
}
