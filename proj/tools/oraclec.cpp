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

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "oraclec/pipeline.hpp"

int main(int argc, char** argv) {
  CLI::App app{"oraclec: compiles 1-bit classical functions into quantum oracle circuits"};

  oraclec::pipeline_options opts;
  std::string emit = "qir";
  std::string passes = "collapse,rewrite";

  app.add_option("input", opts.input_path, "input file (pass - for standard input)")->required();
  app.add_option("--function", opts.function_name, "function to compile");
  app.add_option("--emit", emit, "artifact to emit")
      ->check(CLI::IsMember({"qir", "dot", "stats"}))
      ->capture_default_str();
  app.add_option("--out", opts.out_path, "output file (default: standard output)");
  app.add_option("--cut-size", opts.cut_size, "cut size for rewriting")
      ->check(CLI::Range(2u, 4u))
      ->capture_default_str();
  app.add_option("--cuts-per-node", opts.cuts_per_node, "non-trivial cuts kept per node")
      ->check(CLI::Range(1u, 64u))
      ->capture_default_str();
  app.add_option("--collapse-threshold", opts.collapse_threshold,
                 "collapse outputs into truth tables up to this many inputs")
      ->check(CLI::Range(0u, 8u))
      ->capture_default_str();
  app.add_option("--passes", passes, "comma-separated subset of {collapse,rewrite}")
      ->capture_default_str();
  app.add_flag("--verify", opts.verify, "check the circuit against the IR semantics");
  app.add_option("--seed", opts.seed, "seed for sampled verification")->capture_default_str();
  app.add_option("--db-path", opts.db_path, "template database cache")->capture_default_str();
  app.add_flag("--rebuild-db", opts.rebuild_db, "rebuild the template database");

  CLI11_PARSE(app, argc, argv);

  if (emit == "qir") {
    opts.emit = oraclec::emit_kind::qir;
  } else if (emit == "dot") {
    opts.emit = oraclec::emit_kind::dot;
  } else {
    opts.emit = oraclec::emit_kind::stats;
  }

  opts.pass_collapse = false;
  opts.pass_rewrite = false;
  std::stringstream ss(passes);
  std::string pass;
  while (std::getline(ss, pass, ',')) {
    if (pass == "collapse") {
      opts.pass_collapse = true;
    } else if (pass == "rewrite") {
      opts.pass_rewrite = true;
    } else if (!pass.empty()) {
      std::cerr << "error: unknown pass '" << pass << "'\n";
      return 1;
    }
  }

  const auto result = oraclec::run_pipeline(opts);
  std::cerr << result.diagnostics;
  if (result.exit_code != 1) {
    if (opts.out_path.empty()) {
      std::cout << result.artifact;
    } else {
      std::ofstream out(opts.out_path, std::ios::binary);
      if (!out) {
        std::cerr << "error: cannot write " << opts.out_path << '\n';
        return 1;
      }
      out << result.artifact;
    }
  }
  return result.exit_code;
}
