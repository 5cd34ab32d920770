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

#include <cstdint>
#include <string>

namespace oraclec {

enum class emit_kind : uint8_t { qir, dot, stats };

struct pipeline_options {
  std::string input_path;     // "-" reads standard input
  std::string function_name;  // empty selects the module's only function
  emit_kind emit = emit_kind::qir;
  std::string out_path;       // empty writes to standard output
  uint32_t cut_size = 4;
  uint32_t cuts_per_node = 12;
  uint32_t collapse_threshold = 8;
  bool pass_collapse = true;
  bool pass_rewrite = true;
  bool verify = false;
  uint64_t seed = 1;
  std::string db_path = "oraclec_db4.txt";
  bool rebuild_db = false;
};

struct pipeline_result {
  int exit_code = 0;        // 0 ok, 1 diagnostics, 2 verification failure
  std::string artifact;     // emitted text (QIR, DOT or stats)
  std::string diagnostics;  // text for standard error
};

/*! \brief Runs parse -> validate -> XAG -> optimize -> compile -> emit.
 *
 * With `verify` set, the compiled circuit is checked exhaustively against the
 * IR interpreter (or with seeded samples when beyond the exhaustive bounds);
 * failures set exit code 2 and the report is appended to the diagnostics,
 * both as text and as one JSON line.
 */
pipeline_result run_pipeline(const pipeline_options& opts);

} // namespace oraclec
