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

#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>

#include "oraclec/database.hpp"
#include "oraclec/ir.hpp"
#include "oraclec/optimize.hpp"
#include "oraclec/pipeline.hpp"
#include "oraclec/qir.hpp"
#include "oraclec/simulate.hpp"

namespace oraclec {

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open input file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string sanitize_identifier(const std::string& name) {
  std::string out;
  for (const char c : name) {
    out.push_back(std::isalnum(static_cast<unsigned char>(c)) ? c : '_');
  }
  if (out.empty() || std::isdigit(static_cast<unsigned char>(out[0]))) {
    out.insert(out.begin(), '_');
  }
  return out;
}

} // namespace

pipeline_result run_pipeline(const pipeline_options& opts) {
  pipeline_result result;
  std::ostringstream diag;
  try {
    const auto text = read_input(opts.input_path);
    const auto module = parse_module(text, opts.input_path);

    const ir_function* fn = nullptr;
    if (opts.function_name.empty()) {
      if (module.functions.size() != 1u) {
        std::ostringstream os;
        os << "the module defines " << module.functions.size()
           << " functions; pick one with --function. Available:";
        for (const auto& f : module.functions) {
          os << ' ' << f.name;
        }
        throw std::runtime_error(os.str());
      }
      fn = &module.functions.front();
    } else {
      fn = module.find_function(opts.function_name);
      if (fn == nullptr) {
        std::ostringstream os;
        os << "no function named " << opts.function_name << ". Available:";
        for (const auto& f : module.functions) {
          os << ' ' << f.name;
        }
        throw std::runtime_error(os.str());
      }
    }

    const auto checked = validate(*fn);
    const auto initial = ir_to_xag(checked);
    const auto ands_before = initial.count_ands();
    const auto xors_before = initial.count_xors();

    const auto db = load_or_build_database(opts.db_path, opts.rebuild_db);
    optimize_options oopts;
    oopts.cut_size = opts.cut_size;
    oopts.cuts_per_node = opts.cuts_per_node;
    oopts.collapse_threshold = opts.collapse_threshold;
    oopts.run_collapse = opts.pass_collapse;
    oopts.run_rewrite = opts.pass_rewrite;
    const auto optimized = optimize(initial, db, oopts);

    const auto circuit = compile(optimized);
    const auto gate_stats = stats(circuit);

    switch (opts.emit) {
    case emit_kind::qir: {
      emit_config cfg;
      cfg.function_name = sanitize_identifier(fn->name);
      result.artifact = emit_qir(circuit, cfg);
      break;
    }
    case emit_kind::dot:
      result.artifact = emit_dot(optimized);
      break;
    case emit_kind::stats: {
      std::ostringstream os;
      os << "function:     " << fn->name << '\n'
         << "inputs:       " << optimized.num_pis() << '\n'
         << "outputs:      " << optimized.outputs().size() << '\n'
         << "ands before:  " << ands_before << '\n'
         << "xors before:  " << xors_before << '\n'
         << "ands after:   " << optimized.count_ands() << '\n'
         << "xors after:   " << optimized.count_xors() << '\n'
         << "cnots:        " << gate_stats.cnot_count << '\n'
         << "ccnots:       " << gate_stats.ccnot_count << '\n'
         << "x gates:      " << gate_stats.x_count << '\n'
         << "qubits:       " << gate_stats.qubit_count << '\n';
      result.artifact = os.str();
      break;
    }
    }

    if (opts.verify) {
      verification_report report;
      if (circuit.num_inputs <= 16u && circuit.num_qubits() <= 24u) {
        report = verify_oracle(circuit, checked);
      } else {
        diag << "circuit beyond exhaustive bounds; sampling 4096 assignments (seed " << opts.seed
             << ")\n";
        report = verify_oracle_sampled(
            circuit,
            [&checked, &circuit](uint64_t x) {
              std::vector<bool> inputs(circuit.num_inputs);
              for (uint32_t i = 0; i < circuit.num_inputs; ++i) {
                inputs[i] = (x >> i) & 1u;
              }
              return interpret_ir(checked, inputs);
            },
            4096u, opts.seed);
      }
      diag << report.to_text() << '\n';
      diag << "verify-report-json: " << report.to_json() << '\n';
      if (!report.pass()) {
        result.exit_code = 2;
      }
    }
  } catch (const std::exception& e) {
    diag << "error: " << e.what() << '\n';
    result.exit_code = 1;
  }
  result.diagnostics = diag.str();
  return result;
}

} // namespace oraclec
