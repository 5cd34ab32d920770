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

#include <filesystem>
#include <fstream>

#include "oraclec/pipeline.hpp"

using namespace oraclec;

namespace {

std::filesystem::path corpus_dir() { return ORACLEC_CORPUS_DIR; }

std::string db_path() {
  static const auto path = std::filesystem::temp_directory_path() / "oraclec_pipeline_db.txt";
  return path.string();
}

pipeline_options base_options(const std::string& file) {
  pipeline_options opts;
  opts.input_path = (corpus_dir() / file).string();
  opts.db_path = db_path();
  return opts;
}

} // namespace

TEST_CASE("stats mode reports the majority pipeline") {
  auto opts = base_options("maj3_reg2mem.ll");
  opts.function_name = "Classical_Majority3";
  opts.emit = emit_kind::stats;
  opts.verify = true;
  const auto result = run_pipeline(opts);
  CHECK(result.exit_code == 0);
  CHECK(result.artifact.find("ands before:  6") != std::string::npos);
  CHECK(result.artifact.find("ands after:   1") != std::string::npos);
  CHECK(result.artifact.find("xors after:   3") != std::string::npos);
  CHECK(result.artifact.find("ccnots:       2") != std::string::npos);
  CHECK(result.artifact.find("qubits:       5") != std::string::npos);
  CHECK(result.diagnostics.find("verification passed") != std::string::npos);
  CHECK(result.diagnostics.find("verify-report-json: {") != std::string::npos);
}

TEST_CASE("rewriting alone still shrinks the majority network") {
  auto opts = base_options("maj3_reg2mem.ll");
  opts.function_name = "Classical_Majority3";
  opts.emit = emit_kind::stats;
  opts.pass_collapse = false;
  opts.verify = true;
  const auto result = run_pipeline(opts);
  CHECK(result.exit_code == 0);
  // with collapse disabled the AND count may not reach 1, but never grows
  const auto pos = result.artifact.find("ands after:   ");
  REQUIRE(pos != std::string::npos);
  const auto ands_after = std::stoul(result.artifact.substr(pos + 14));
  CHECK(ands_after <= 6u);
  CHECK(result.diagnostics.find("verification passed") != std::string::npos);
}

TEST_CASE("the sole function is picked up without a name") {
  auto opts = base_options("full_adder.ll");
  opts.emit = emit_kind::qir;
  opts.verify = true;
  const auto result = run_pipeline(opts);
  CHECK(result.exit_code == 0);
  CHECK(result.artifact.find("define void @full_adder__body(") != std::string::npos);
}

TEST_CASE("a missing function lists the available names") {
  auto opts = base_options("maj3_reg2mem.ll");
  opts.function_name = "nope";
  const auto result = run_pipeline(opts);
  CHECK(result.exit_code == 1);
  CHECK(result.diagnostics.find("no function named nope") != std::string::npos);
  CHECK(result.diagnostics.find("Classical_Majority3") != std::string::npos);
}

TEST_CASE("module errors surface as diagnostics with exit 1") {
  auto opts = base_options("errors/uninit_load.ll");
  const auto result = run_pipeline(opts);
  CHECK(result.exit_code == 1);
  CHECK(result.diagnostics.find("error:") != std::string::npos);
  CHECK(result.artifact.empty());
}

TEST_CASE("dot emission runs through the pipeline") {
  auto opts = base_options("parity8.ll");
  opts.emit = emit_kind::dot;
  const auto result = run_pipeline(opts);
  CHECK(result.exit_code == 0);
  CHECK(result.artifact.find("digraph xag {") != std::string::npos);
  CHECK(result.artifact.find("\xe2\x88\xa7") == std::string::npos);  // parity has no AND nodes
}
