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
#include <set>
#include <sstream>

#include "oraclec/qir.hpp"

namespace oraclec {

namespace {

bool valid_identifier(const std::string& s) {
  if (s.empty()) {
    return false;
  }
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') {
    return false;
  }
  for (const char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') {
      return false;
    }
  }
  return true;
}

} // namespace

std::string emit_qir(const reversible_circuit& c, const emit_config& cfg) {
  if (!valid_identifier(cfg.function_name)) {
    throw invalid_name(cfg.function_name);
  }
  const auto qubit_ref = [&c](uint32_t id) {
    std::ostringstream os;
    if (id < c.num_inputs) {
      os << "%in" << id;
    } else if (id < c.num_inputs + c.num_outputs) {
      os << "%out" << (id - c.num_inputs);
    } else {
      os << "%h" << (id - c.num_inputs - c.num_outputs);
    }
    return os.str();
  };

  std::ostringstream os;
  os << "%Qubit = type opaque\n"
     << "\n"
     << "declare %Qubit* @__quantum__rt__qubit_allocate()\n"
     << "declare void @__quantum__rt__qubit_release(%Qubit*)\n"
     << "declare void @__quantum__qis__x__body(%Qubit*)\n"
     << "declare void @__quantum__qis__cnot__body(%Qubit*, %Qubit*)\n"
     << "declare void @__quantum__qis__ccnot__body(%Qubit*, %Qubit*, %Qubit*)\n"
     << "\n";
  os << "define void @" << cfg.function_name << "__body(";
  for (uint32_t i = 0; i < c.num_inputs + c.num_outputs; ++i) {
    if (i) {
      os << ", ";
    }
    os << "%Qubit* " << qubit_ref(i);
  }
  os << ") {\n";
  os << "entry:\n";
  for (uint32_t h = 0; h < c.num_helpers; ++h) {
    os << cfg.indent << "%h" << h << " = call %Qubit* @__quantum__rt__qubit_allocate()\n";
  }
  for (const auto& gate : c.gates) {
    os << cfg.indent;
    switch (gate.kind) {
    case gate_kind::x:
      os << "call void @__quantum__qis__x__body(%Qubit* " << qubit_ref(gate.target) << ")";
      break;
    case gate_kind::cnot:
      os << "call void @__quantum__qis__cnot__body(%Qubit* " << qubit_ref(gate.control0)
         << ", %Qubit* " << qubit_ref(gate.target) << ")";
      break;
    case gate_kind::ccnot:
      os << "call void @__quantum__qis__ccnot__body(%Qubit* " << qubit_ref(gate.control0)
         << ", %Qubit* " << qubit_ref(gate.control1) << ", %Qubit* " << qubit_ref(gate.target)
         << ")";
      break;
    }
    os << "\n";
  }
  for (uint32_t h = c.num_helpers; h-- > 0;) {
    os << cfg.indent << "call void @__quantum__rt__qubit_release(%Qubit* %h" << h << ")\n";
  }
  os << cfg.indent << "ret void\n";
  os << "}\n";
  return os.str();
}

std::string emit_dot(const xag& g) {
  std::ostringstream os;
  os << "digraph xag {\n";
  os << "  rankdir=BT;\n";
  for (const auto i : g.topo_order()) {
    const auto& n = g.node(i);
    switch (n.kind) {
    case node_kind::constant0:
      os << "  n" << i << " [label=\"0\",shape=none];\n";
      break;
    case node_kind::primary_input:
      os << "  n" << i << " [label=\"x" << n.pi_ordinal << "\",shape=none];\n";
      break;
    case node_kind::and2:
      os << "  n" << i << " [label=\"\xe2\x88\xa7\",shape=circle];\n";
      break;
    case node_kind::xor2:
      os << "  n" << i << " [label=\"+\",shape=circle];\n";
      break;
    }
  }
  for (const auto i : g.topo_order()) {
    const auto& n = g.node(i);
    if (n.kind != node_kind::and2 && n.kind != node_kind::xor2) {
      continue;
    }
    for (const auto f : n.fanin) {
      os << "  n" << i << " -> n" << f.node;
      if (f.complemented) {
        os << " [style=dashed]";
      }
      os << ";\n";
    }
  }
  for (size_t j = 0; j < g.outputs().size(); ++j) {
    const auto s = g.outputs()[j];
    os << "  f" << j << " [label=\"f" << j << "\",shape=none];\n";
    os << "  f" << j << " -> n" << s.node;
    if (s.complemented) {
      os << " [style=dashed]";
    }
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::vector<std::string> lint_qir(const std::string& text) {
  std::vector<std::string> problems;
  std::set<std::string> declared;
  std::set<std::string> defined_locals;
  bool in_body = false;
  bool saw_ret = false;
  int line_number = 0;

  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    ++line_number;
    const auto where = [&line_number] { return " (line " + std::to_string(line_number) + ")"; };
    int depth = 0;
    for (const char ch : line) {
      if (ch == '(') {
        ++depth;
      } else if (ch == ')') {
        --depth;
      }
      if (depth < 0) {
        break;
      }
    }
    if (depth != 0) {
      problems.push_back("unbalanced parentheses" + where());
    }

    // collect and check symbols
    for (size_t i = 0; i < line.size(); ++i) {
      if (line[i] != '@' && line[i] != '%') {
        continue;
      }
      const char sigil = line[i];
      size_t j = i + 1;
      std::string name;
      while (j < line.size() &&
             (std::isalnum(static_cast<unsigned char>(line[j])) || line[j] == '_' || line[j] == '.')) {
        name.push_back(line[j]);
        ++j;
      }
      if (name.empty()) {
        problems.push_back("dangling sigil" + where());
        i = j;
        continue;
      }
      if (sigil == '@') {
        const bool declares = line.find("declare") != std::string::npos ||
                              line.find("define") != std::string::npos;
        if (declares) {
          declared.insert(name);
        } else if (!declared.count(name)) {
          problems.push_back("symbol @" + name + " used before declaration" + where());
        }
      } else if (in_body && name != "Qubit") {
        const bool defines = line.find('%' + name + " = ") != std::string::npos;
        if (defines) {
          defined_locals.insert(name);
        } else if (!defined_locals.count(name) && name.rfind("in", 0) != 0 && name.rfind("out", 0) != 0) {
          problems.push_back("local %" + name + " used before definition" + where());
        }
      }
      i = j - 1;
    }
    if (line.find("define") != std::string::npos) {
      in_body = true;
    }
    if (line.find("ret void") != std::string::npos) {
      saw_ret = true;
    }
  }
  if (!saw_ret) {
    problems.push_back("missing 'ret void'");
  }

  // allocate/release pairing
  const auto count_occurrences = [&text](const std::string& needle) {
    size_t count = 0;
    size_t pos = 0;
    while ((pos = text.find(needle, pos)) != std::string::npos) {
      ++count;
      pos += needle.size();
    }
    return count;
  };
  const auto allocated = count_occurrences("call %Qubit* @__quantum__rt__qubit_allocate()");
  const auto released = count_occurrences("call void @__quantum__rt__qubit_release(");
  if (allocated != released) {
    problems.push_back("allocate/release mismatch: " + std::to_string(allocated) + " vs " +
                       std::to_string(released));
  }
  return problems;
}

} // namespace oraclec
